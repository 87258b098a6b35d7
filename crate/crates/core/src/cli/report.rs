use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Map, Value};

/// Output format of a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Md,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Table { name: name.into(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn markdown(&self, out: &mut String) {
        let _ = writeln!(out, "### {}\n", self.name);
        let _ = writeln!(out, "| {} |", self.header.join(" | "));
        let _ = writeln!(out, "|{}", "---|".repeat(self.header.len()));
        for r in &self.rows {
            let _ = writeln!(out, "| {} |", r.join(" | "));
        }
        out.push('\n');
    }

    fn csv(&self) -> String {
        let field = |s: &String| {
            if s.contains([',', '"', '\n']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.clone()
            }
        };
        let mut out = String::new();
        for r in std::iter::once(&self.header).chain(&self.rows) {
            out.push_str(&r.iter().map(field).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

/// Tables, checks and raw data produced by one command.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub tables: Vec<Table>,
    pub checks: Vec<Check>,
    pub data: Map<String, Value>,
}

impl Report {
    pub fn check(&mut self, id: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { id: id.into(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn merge(&mut self, other: Report) {
        self.tables.extend(other.tables);
        self.checks.extend(other.checks);
        self.data.extend(other.data);
    }

    pub fn to_json(&self, command: &str) -> Value {
        let tables: Map<String, Value> =
            self.tables.iter().map(|t| (t.name.clone(), json!({ "header": t.header, "rows": t.rows }))).collect();
        json!({
            "command": command,
            "passed": self.passed(),
            "checks": self.checks,
            "tables": tables,
            "data": self.data,
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        for t in &self.tables {
            t.markdown(&mut out);
        }
        if !self.checks.is_empty() {
            out.push_str("### checks\n\n");
            for c in &self.checks {
                let _ = writeln!(out, "- {} `{}` {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.detail);
            }
        }
        out
    }

    fn checks_table(&self) -> Table {
        let mut t = Table::new("checks", &["id", "passed", "detail"]);
        for c in &self.checks {
            t.push(vec![c.id.clone(), c.passed.to_string(), c.detail.clone()]);
        }
        t
    }

    /// Writes the report; CSV with an output directory gives one file per table.
    pub fn emit(&self, command: &str, format: Format, out: Option<&Path>) -> io::Result<()> {
        if format == Format::Csv {
            let tables: Vec<Table> = self.tables.iter().cloned().chain([self.checks_table()]).collect();
            if let Some(dir) = out {
                fs::create_dir_all(dir)?;
                for t in &tables {
                    fs::write(dir.join(format!("{}.csv", t.name)), t.csv())?;
                }
                return Ok(());
            }
            let text: Vec<String> = tables.iter().map(|t| format!("# {}\n{}", t.name, t.csv())).collect();
            return write_text(&text.join("\n"), None);
        }
        let text = match format {
            Format::Json => serde_json::to_string_pretty(&self.to_json(command)).expect("serializable report") + "\n",
            _ => self.to_markdown(),
        };
        write_text(&text, out)
    }
}

fn write_text(text: &str, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            use io::Write;
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}
