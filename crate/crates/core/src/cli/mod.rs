//! The `mccool` command-line front end.

mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;
use serde_json::{json, Value};

pub use report::{Check, Format, Report, Table};

use crate::freelie::witt_dimension;
use crate::johnson::{
    bracket_map_rank, kernel_report, left_normed_sum, omega, omega_terms, tau_evaluate, KernelOptions, KernelReport,
    SymbolSet, TauEngine, DEFAULT_MAX_DEGREE,
};
use crate::properties::{run_suite, Suite};
use crate::psigma3::{self, sd_bracket, DEFAULT_INTERSECTION_CAP};
use crate::sample::Sampler;
use crate::stabilization::independence_certificate;
use crate::symmetry::{act, kernel_character, Character, S3Element};
use crate::Ring;

const GOLDEN: &str = include_str!("../../data/golden.json");

#[derive(Debug, Deserialize)]
pub struct Golden {
    pub lie_dims: Vec<u64>,
    pub kernel_dims: Vec<usize>,
    pub characters: BTreeMap<usize, [i64; 3]>,
    pub bracket_map: GoldenBrackets,
}

#[derive(Debug, Deserialize)]
pub struct GoldenBrackets {
    pub injective: Vec<usize>,
    pub not_surjective: Vec<usize>,
}

/// Reference values shipped with the crate.
pub fn golden() -> Golden {
    serde_json::from_str(GOLDEN).expect("embedded golden data")
}

#[derive(Debug, Parser)]
#[command(name = "mccool", version, about = "Johnson kernels of the McCool group PSigma_3, in exact arithmetic")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(Debug, Clone, clap::Args)]
pub struct RunConfig {
    /// Number of strands (stabilize); the other commands work with n = 3.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Largest degree (for `kernel`: the degree).
    #[arg(long, alias = "degree", global = true, default_value_t = DEFAULT_MAX_DEGREE)]
    pub max_degree: usize,
    /// Coefficient ring of reported kernel bases: z (integers) or q (rationals).
    #[arg(long, global = true, default_value = "z")]
    pub ring: Ring,
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    pub format: Format,
    /// Output file; a directory for `--format csv`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed of randomized samples.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cases per randomized suite.
    #[arg(long, global = true, default_value_t = crate::properties::DEFAULT_CASES)]
    pub cases: usize,
    /// Timings on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PsigmaCheck {
    Jacobi,
    TauKernel,
    Intersection,
    Ranks,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ranks of L_k[3] and of the kernel of tau.
    Dims,
    /// Kernel of tau in one degree, with basis.
    Kernel {
        /// Also compute the Smith form of the matrix of tau.
        #[arg(long)]
        divisors: bool,
    },
    /// Certificate for omega.
    VerifyOmega {
        /// Flip the sign of one term (negative control).
        #[arg(long)]
        corrupt: bool,
    },
    /// S3 characters of the kernels and the bracket maps between them.
    Characters,
    /// Independence of the stabilized copies of omega.
    Stabilize,
    /// Checks on L(PSigma_3) as a semidirect product.
    Psigma {
        #[arg(long, value_enum)]
        check: Vec<PsigmaCheck>,
        /// Highest degree of the intersection check.
        #[arg(long, default_value_t = DEFAULT_INTERSECTION_CAP)]
        intersection_cap: usize,
    },
    /// Randomized property suites.
    Properties {
        #[arg(long)]
        suite: Vec<Suite>,
    },
    /// Everything above.
    All,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dims => "dims",
            Command::Kernel { .. } => "kernel",
            Command::VerifyOmega { .. } => "verify-omega",
            Command::Characters => "characters",
            Command::Stabilize => "stabilize",
            Command::Psigma { .. } => "psigma",
            Command::Properties { .. } => "properties",
            Command::All => "all",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Johnson(#[from] crate::johnson::JohnsonError),
    #[error(transparent)]
    Symmetry(#[from] crate::symmetry::SymmetryError),
    #[error(transparent)]
    Psigma(#[from] crate::psigma3::PsigmaError),
    #[error(transparent)]
    Stabilization(#[from] crate::stabilization::StabilizationError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Shared state of one run: the tau engine and the kernels computed so far.
pub struct Session {
    pub config: RunConfig,
    engine: TauEngine,
    kernels: BTreeMap<usize, KernelReport>,
    golden: Golden,
}

impl Session {
    pub fn new(config: RunConfig) -> Self {
        Session { config, engine: TauEngine::new(SymbolSet::abc()), kernels: BTreeMap::new(), golden: golden() }
    }

    fn log(&self, what: &str, start: Instant) {
        if self.config.verbose > 0 {
            eprintln!("[{:>8.2}s] {what}", start.elapsed().as_secs_f64());
        }
    }

    fn kernel(&mut self, k: usize) -> Result<&KernelReport, CliError> {
        if !self.kernels.contains_key(&k) {
            let start = Instant::now();
            let opts = KernelOptions { ring: self.config.ring, ..Default::default() };
            let r = kernel_report(&self.engine, k, &opts)?;
            self.log(&format!("kernel in degree {k}"), start);
            self.kernels.insert(k, r);
        }
        Ok(&self.kernels[&k])
    }

    fn golden_kernel(&self, k: usize) -> Option<usize> {
        self.golden.kernel_dims.get(k - 1).copied()
    }

    fn max_degree(&self) -> Result<usize, CliError> {
        let k = self.config.max_degree;
        if k == 0 || k > DEFAULT_MAX_DEGREE {
            return Err(CliError::Usage(format!("--max-degree must be in 1..={DEFAULT_MAX_DEGREE}")));
        }
        Ok(k)
    }

    fn require_three(&self) -> Result<(), CliError> {
        match self.config.n {
            Some(n) if n != 3 => Err(CliError::Usage("this command works with n = 3".into())),
            _ => Ok(()),
        }
    }

    pub fn dims(&mut self) -> Result<Report, CliError> {
        self.require_three()?;
        let max = self.max_degree()?;
        let mut out = Report::default();
        let mut header = vec!["k".to_string()];
        let mut lie = vec!["dim L_k[3]".to_string()];
        let mut ker = vec!["dim kappa_k".to_string()];
        let mut rows = Vec::new();
        for k in 1..=max {
            let w = witt_dimension(3, k);
            let r = self.kernel(k)?;
            let (kd, rank) = (r.kernel_dim, r.image_rank);
            header.push(k.to_string());
            lie.push(w.to_string());
            ker.push(kd.to_string());
            rows.push(json!({ "k": k, "lie_dim": w, "kernel_dim": kd, "image_rank": rank }));
            if let Some(&g) = self.golden.lie_dims.get(k - 1) {
                out.check(format!("dims.k{k}.lie"), w == g, format!("{w} (expected {g})"));
            }
            if let Some(g) = self.golden_kernel(k) {
                out.check(format!("dims.k{k}.kernel"), kd == g, format!("{kd} (expected {g})"));
            }
        }
        let header: Vec<&str> = header.iter().map(String::as_str).collect();
        let mut t = Table::new("dimensions", &header);
        t.push(lie);
        t.push(ker);
        out.tables.push(t);
        out.data.insert("dimensions".into(), Value::Array(rows));
        Ok(out)
    }

    pub fn kernel_command(&mut self, divisors: bool) -> Result<Report, CliError> {
        self.require_three()?;
        let k = self.max_degree()?;
        let opts = KernelOptions { ring: self.config.ring, divisors, ..Default::default() };
        let start = Instant::now();
        let r = kernel_report(&self.engine, k, &opts)?;
        self.log(&format!("kernel in degree {k}"), start);
        let mut out = Report::default();
        let mut t = Table::new("kernel", &["k", "domain_dim", "image_rank", "kernel_dim", "divisors"]);
        let summary = r.divisors.as_ref().map_or("-".to_string(), |d| divisor_summary(d));
        t.push(vec![
            k.to_string(),
            r.domain_dim.to_string(),
            r.image_rank.to_string(),
            r.kernel_dim.to_string(),
            summary,
        ]);
        out.tables.push(t);
        let json = r.to_json();
        let mut b = Table::new("basis", &["index", "element"]);
        match &r.rational_basis {
            Some(q) => q.iter().enumerate().for_each(|(i, x)| b.push(vec![i.to_string(), x.to_string()])),
            None => r.basis.iter().enumerate().for_each(|(i, x)| b.push(vec![i.to_string(), x.to_string()])),
        }
        out.tables.push(b);
        out.check(format!("kernel.k{k}.certified"), true, "tau vanishes on every basis element");
        if let Some(g) = self.golden_kernel(k) {
            out.check(format!("kernel.k{k}.dim"), r.kernel_dim == g, format!("{} (expected {g})", r.kernel_dim));
        }
        out.data.insert("kernel".into(), serde_json::to_value(json).expect("serializable"));
        Ok(out)
    }

    pub fn verify_omega(&mut self, corrupt: bool) -> Result<Report, CliError> {
        let mut terms = omega_terms();
        if corrupt {
            terms[0].0 = -terms[0].0;
        }
        let w = if corrupt { left_normed_sum(&terms) } else { omega() };
        let mut out = Report::default();
        let alpha = w.alphabet().clone();
        let coefficient = w.to_tensor().coefficient(&alpha.parse_word("ccbbaa").expect("abc word"));
        out.check("omega.nonzero", !coefficient.is_zero(), format!("coefficient of ccbbaa is {coefficient}"));
        let tau = tau_evaluate(&SymbolSet::abc(), &w)?;
        out.check(
            "omega.tau_vanishes",
            tau.is_zero(),
            if tau.is_zero() { "tau(omega) = 0" } else { "tau(omega) != 0" },
        );
        let r = self.kernel(6)?;
        let generated = r.kernel_dim == 1 && (r.basis[0] == w || r.basis[0] == -w.clone());
        out.check(
            "omega.kernel_generator",
            generated,
            format!("kernel lattice in degree 6 has rank {} and is generated by +-omega: {generated}", r.kernel_dim),
        );
        let neg = -w.clone();
        let sign =
            [S3Element::T12, S3Element::T23, S3Element::T13].iter().all(|s| act(s, &w).ok() == Some(neg.clone()))
                && [S3Element::C123, S3Element::C132].iter().all(|s| act(s, &w).ok() == Some(w.clone()));
        out.check("omega.sign_character", sign, "transpositions negate omega, 3-cycles fix it");
        let mut t = Table::new("omega", &["sign", "left-normed word"]);
        for (s, word) in terms {
            t.push(vec![if s > 0 { "+" } else { "-" }.to_string(), word.to_string()]);
        }
        out.tables.push(t);
        out.data.insert(
            "omega".into(),
            json!({ "element": w.to_json(), "ccbbaa": coefficient.to_string(), "corrupted": corrupt }),
        );
        Ok(out)
    }

    pub fn characters(&mut self) -> Result<Report, CliError> {
        self.require_three()?;
        let max = self.max_degree()?;
        let mut out = Report::default();
        let mut shape_header = vec!["k".to_string()];
        let mut shape_row = vec!["character of kappa_k".to_string()];
        let mut detail = Table::new("decompositions", &["k", "dim", "character", "trivial", "sign", "standard"]);
        let mut data = Vec::new();
        for k in 1..=max {
            let start = Instant::now();
            let chi = kernel_character(self.kernel(k)?)?;
            self.log(&format!("character in degree {k}"), start);
            let dec = chi.decompose();
            if chi.identity > 0 {
                shape_header.push(k.to_string());
                shape_row.push(chi.to_string());
            }
            let cell =
                |f: fn(&crate::symmetry::Decomposition) -> i64| dec.as_ref().map_or("-".into(), |d| f(d).to_string());
            detail.push(vec![
                k.to_string(),
                chi.identity.to_string(),
                chi.to_string(),
                cell(|d| d.trivial),
                cell(|d| d.sign),
                cell(|d| d.standard),
            ]);
            let expected = self
                .golden
                .characters
                .get(&k)
                .copied()
                .map(Character::from)
                .or_else(|| (self.golden_kernel(k) == Some(0)).then_some(Character::from([0, 0, 0])));
            if let Some(e) = expected {
                out.check(format!("characters.k{k}"), chi == e, format!("{chi} (expected {e})"));
            }
            out.check(format!("characters.k{k}.decomposes"), dec.is_some(), format!("{dec:?}"));
            data.push(json!({ "k": k, "character": chi, "decomposition": dec }));
        }
        if max >= 6 {
            let chi = kernel_character(self.kernel(6)?)?;
            out.check("characters.k6.sign_representation", chi == Character::from([1, -1, 1]), chi.to_string());
        }
        let header: Vec<&str> = shape_header.iter().map(String::as_str).collect();
        let mut shape = Table::new("characters", &header);
        shape.push(shape_row);
        out.tables.push(shape);
        out.tables.push(detail);
        out.data.insert("characters".into(), Value::Array(data));
        out.merge(self.bracket_maps(max)?);
        Ok(out)
    }

    fn bracket_maps(&mut self, max: usize) -> Result<Report, CliError> {
        let mut out = Report::default();
        let mut t = Table::new("bracket_map", &["k", "source_dim", "target_dim", "rank", "injective", "surjective"]);
        let mut data = Vec::new();
        for k in 5..max {
            self.kernel(k)?;
            self.kernel(k + 1)?;
            let b = bracket_map_rank(&self.kernels[&k], &self.kernels[&(k + 1)])?;
            t.push(vec![
                k.to_string(),
                b.source_dim.to_string(),
                b.target_dim.to_string(),
                b.rank.to_string(),
                b.injective.to_string(),
                b.surjective.to_string(),
            ]);
            out.check(
                format!("brackets.k{k}.contained"),
                b.contained,
                "brackets of kernel elements stay in the kernel",
            );
            if self.golden.bracket_map.injective.contains(&k) {
                out.check(
                    format!("brackets.k{k}.injective"),
                    b.injective,
                    format!("rank {} of {}", b.rank, b.source_dim),
                );
            }
            if self.golden.bracket_map.not_surjective.contains(&k) {
                out.check(
                    format!("brackets.k{k}.not_surjective"),
                    !b.surjective,
                    format!("rank {} into {}", b.rank, b.target_dim),
                );
            }
            data.push(serde_json::to_value(&b).expect("serializable"));
        }
        if !t.rows.is_empty() {
            out.tables.push(t);
            out.data.insert("bracket_map".into(), Value::Array(data));
        }
        Ok(out)
    }

    pub fn stabilize(&mut self, sizes: &[usize]) -> Result<Report, CliError> {
        let mut out = Report::default();
        let mut certs = Vec::new();
        for &n in sizes {
            let start = Instant::now();
            let c = independence_certificate(n)?;
            self.log(&format!("stabilization certificate for n = {n}"), start);
            let labels: Vec<String> = c.triples.iter().map(ToString::to_string).collect();
            let mut header = vec!["I \\ J".to_string()];
            header.extend(labels.iter().cloned());
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let mut grid = Table::new(&format!("projection_grid_n{n}"), &header);
            for (a, label) in labels.iter().enumerate() {
                let mut row = vec![label.clone()];
                for cell in &c.grid[a * c.count..(a + 1) * c.count] {
                    row.push(cell.value.map_or("?".into(), |v| v.to_string()));
                }
                grid.push(row);
            }
            out.tables.push(grid);
            let mut tv = Table::new(&format!("tau_vanishing_n{n}"), &["I", "tau_n = 0"]);
            for (l, v) in labels.iter().zip(&c.tau_vanishes) {
                tv.push(vec![l.clone(), v.to_string()]);
            }
            out.tables.push(tv);
            let diagonal = c.grid.iter().all(|x| x.value == Some(u8::from(x.i == x.j)));
            out.check(format!("stabilize.n{n}.nonzero"), c.nonzero, format!("{} elements", c.count));
            out.check(
                format!("stabilize.n{n}.tau_vanishes"),
                c.tau_vanishes.iter().all(|&t| t),
                "tau_n kills every stabilized omega",
            );
            out.check(format!("stabilize.n{n}.delta_grid"), diagonal, "pi_J(iota_I(omega)) = delta_IJ omega");
            out.check(format!("stabilize.n{n}.verified"), c.verified, format!("{} independent elements", c.count));
            certs.push(serde_json::to_value(&c).expect("serializable"));
        }
        out.data.insert("stabilize".into(), Value::Array(certs));
        Ok(out)
    }

    pub fn psigma(&mut self, checks: &[PsigmaCheck], cap: usize) -> Result<Report, CliError> {
        let max = self.max_degree()?;
        let all = [PsigmaCheck::Ranks, PsigmaCheck::TauKernel, PsigmaCheck::Intersection, PsigmaCheck::Jacobi];
        let checks = if checks.is_empty() { &all[..] } else { checks };
        let mut out = Report::default();
        let mut t = Table::new(
            "psigma",
            &["k", "sd_rank", "h_rank", "sd_tau_kernel", "h_part_zero", "tau_h_cap_tau_g", "intersection"],
        );
        let mut rows = vec![vec!["-".to_string(); 7]; max];
        for (k, row) in rows.iter_mut().enumerate() {
            row[0] = (k + 1).to_string();
        }
        for check in checks {
            let start = Instant::now();
            match check {
                PsigmaCheck::Ranks => {
                    for k in 1..=max {
                        let (sd, h) = (psigma3::sd_rank(k), psigma3::h_injectivity_rank(k)? as u64);
                        let w = witt_dimension(3, k);
                        rows[k - 1][1] = sd.to_string();
                        rows[k - 1][2] = h.to_string();
                        out.check(format!("psigma.ranks.k{k}"), sd == 2 * w, format!("{sd} = 2 * {w}"));
                        out.check(format!("psigma.h_injective.k{k}"), h == w, format!("rank {h} of {w}"));
                    }
                }
                PsigmaCheck::TauKernel => {
                    for k in 1..=max {
                        let r = psigma3::sd_tau_kernel(k)?;
                        let cap_dim = psigma3::tau_h_cap_tau_g(k)?;
                        rows[k - 1][3] = r.kernel_dim.to_string();
                        rows[k - 1][4] = r.h_part_zero.to_string();
                        rows[k - 1][5] = cap_dim.to_string();
                        let g = self.golden_kernel(k);
                        out.check(
                            format!("psigma.tau_kernel.k{k}"),
                            g == Some(r.kernel_dim) && r.h_part_zero,
                            format!("dim {}, inner part zero: {}", r.kernel_dim, r.h_part_zero),
                        );
                        out.check(format!("psigma.tau_h_cap_tau_g.k{k}"), cap_dim == 0, format!("dim {cap_dim}"));
                    }
                }
                PsigmaCheck::Intersection => {
                    for k in 1..=max.min(cap) {
                        let d = psigma3::intersection_kappa(k, cap)?;
                        rows[k - 1][6] = d.to_string();
                        let g = self.golden_kernel(k);
                        out.check(format!("psigma.intersection.k{k}"), g == Some(d), format!("dim {d}"));
                    }
                }
                PsigmaCheck::Jacobi => {
                    let (cases, seed) = (self.config.cases, self.config.seed);
                    let mut failures = 0;
                    for i in 0..cases {
                        let mut s = Sampler::for_case(seed, 100, i as u64);
                        let (a, b) = (s.range(1, 3), s.range(1, 2));
                        let c = s.range(1, 7 - a - b);
                        let (u, v, w) = (s.sd_element(a, 3), s.sd_element(b, 3), s.sd_element(c, 3));
                        let uv = sd_bracket(&u, &v)?;
                        let total = sd_bracket(&uv, &w)?
                            + sd_bracket(&sd_bracket(&v, &w)?, &u)?
                            + sd_bracket(&sd_bracket(&w, &u)?, &v)?;
                        let morphism = psigma3::sd_tau(&uv)? == psigma3::sd_tau(&u)?.bracket(&psigma3::sd_tau(&v)?);
                        if !total.is_zero() || !morphism {
                            failures += 1;
                        }
                    }
                    out.check("psigma.jacobi", failures == 0, format!("{failures} failures in {cases} triples"));
                }
            }
            self.log(&format!("psigma {check:?}"), start);
        }
        for r in rows {
            t.push(r);
        }
        out.tables.push(t);
        Ok(out)
    }

    pub fn properties(&mut self, suites: &[Suite]) -> Result<Report, CliError> {
        let suites = if suites.is_empty() { &Suite::ALL[..] } else { suites };
        let mut out = Report::default();
        let mut t = Table::new("properties", &["suite", "cases", "failures"]);
        let mut data = Vec::new();
        for &s in suites {
            let start = Instant::now();
            let r = run_suite(s, self.config.cases, self.config.seed);
            self.log(&format!("suite {s}"), start);
            t.push(vec![s.to_string(), r.cases.to_string(), r.failures.to_string()]);
            let detail =
                r.first_failure.as_ref().map_or(format!("{} cases", r.cases), |(i, m)| format!("case {i}: {m}"));
            out.check(format!("properties.{s}"), r.passed(), detail);
            data.push(serde_json::to_value(&r).expect("serializable"));
        }
        out.tables.push(t);
        out.data.insert("properties".into(), Value::Array(data));
        Ok(out)
    }

    pub fn run(&mut self, command: &Command) -> Result<Report, CliError> {
        match command {
            Command::Dims => self.dims(),
            Command::Kernel { divisors } => self.kernel_command(*divisors),
            Command::VerifyOmega { corrupt } => self.verify_omega(*corrupt),
            Command::Characters => self.characters(),
            Command::Stabilize => self.stabilize(&[self.config.n.unwrap_or(4)]),
            Command::Psigma { check, intersection_cap } => self.psigma(check, *intersection_cap),
            Command::Properties { suite } => self.properties(suite),
            Command::All => {
                let sizes = self.config.n.map_or(vec![4, 5], |n| vec![n]);
                let n = self.config.n.take();
                let mut out = self.dims()?;
                out.merge(self.verify_omega(false)?);
                out.merge(self.characters()?);
                out.merge(self.stabilize(&sizes)?);
                out.merge(self.psigma(&[], DEFAULT_INTERSECTION_CAP)?);
                out.merge(self.properties(&[])?);
                self.config.n = n;
                Ok(out)
            }
        }
    }
}

fn divisor_summary(d: &[BigInt]) -> String {
    let mut groups: Vec<(String, usize)> = Vec::new();
    for x in d {
        let s = x.to_string();
        match groups.last_mut() {
            Some((v, c)) if *v == s => *c += 1,
            _ => groups.push((s, 1)),
        }
    }
    groups.iter().map(|(v, c)| if *c == 1 { v.clone() } else { format!("{v}^{c}") }).collect::<Vec<_>>().join(" ")
}

/// Parses arguments, runs the command and writes the report. Exit code 0 iff every
/// check passed, 1 if some check failed, 2 on errors.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.config.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("warning: {e}");
        }
    }
    let mut session = Session::new(cli.config.clone());
    let report = match session.run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = report.emit(cli.command.name(), cli.config.format, cli.config.out.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
