//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;

use mccool::cli::{Format, RunConfig, Session};
use mccool::freelie::witt_dimension;
use mccool::johnson::{
    bracket_map_rank, kernel_report, omega, tau_evaluate, KernelOptions, KernelReport, SymbolSet, TauEngine,
};
use mccool::properties::{run_suite, Suite, DEFAULT_CASES};
use mccool::psigma3::{intersection_kappa, sd_rank, sd_tau_kernel, DEFAULT_INTERSECTION_CAP};
use mccool::stabilization::independence_certificate;
use mccool::symmetry::{kernel_character, Character};
use mccool::Ring;

const LIE_DIMS: [u64; 9] = [3, 3, 8, 18, 48, 116, 312, 810, 2184];
const KERNEL_DIMS: [usize; 9] = [0, 0, 0, 0, 0, 1, 6, 24, 92];
const CHARACTERS: [(usize, [i64; 3]); 4] = [(6, [1, -1, 1]), (7, [6, 0, 0]), (8, [24, -2, 0]), (9, [92, 0, 2])];

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, notes: Vec::new() }
    }

    fn expect(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.ok = false;
            self.notes.push(note.into());
        }
    }
}

fn config(max_degree: usize) -> RunConfig {
    RunConfig {
        n: None,
        max_degree,
        ring: Ring::Integers,
        format: Format::Json,
        out: None,
        threads: None,
        seed: 0,
        cases: DEFAULT_CASES,
        verbose: 0,
    }
}

fn report(id: usize, title: &str, budget: Duration, start: Instant, mut o: Outcome) -> bool {
    let elapsed = start.elapsed();
    o.expect(elapsed <= budget, format!("took {elapsed:.1?}, budget {budget:?}"));
    let status = if o.ok { "PASS" } else { "FAIL" };
    let notes = if o.notes.is_empty() { String::new() } else { format!(" -- {}", o.notes.join("; ")) };
    println!("criterion {id} {status}: {title} ({:.2}s){notes}", elapsed.as_secs_f64());
    o.ok
}

fn main() -> ExitCode {
    let mut all = true;
    let engine = TauEngine::new(SymbolSet::abc());
    let mut kernels: BTreeMap<usize, KernelReport> = BTreeMap::new();

    // 1
    let start = Instant::now();
    let mut o = Outcome::new();
    let low = Session::new(config(7)).dims();
    o.expect(start.elapsed() <= Duration::from_secs(30), "k <= 7 over 30 s");
    let full = Session::new(config(9)).dims();
    match (low, full) {
        (Ok(low), Ok(full)) => {
            o.expect(low.passed() && full.passed(), "golden comparison failed");
            let rows = full.data["dimensions"].as_array().cloned().unwrap_or_default();
            let lie: Vec<u64> = rows.iter().map(|r| r["lie_dim"].as_u64().unwrap_or(0)).collect();
            let ker: Vec<usize> = rows.iter().map(|r| r["kernel_dim"].as_u64().unwrap_or(0) as usize).collect();
            o.expect(lie == LIE_DIMS, format!("Lie ranks {lie:?}"));
            o.expect(ker == KERNEL_DIMS, format!("kernel ranks {ker:?}"));
        }
        (a, b) => o.expect(false, format!("{:?} {:?}", a.err(), b.err())),
    }
    all &= report(1, "dimension table k = 1..9", Duration::from_secs(600), start, o);
    for k in 1..=9 {
        kernels.insert(k, kernel_report(&engine, k, &KernelOptions::default()).expect("kernel"));
    }

    // 2
    let start = Instant::now();
    let mut o = Outcome::new();
    let w = omega();
    o.expect(tau_evaluate(&SymbolSet::abc(), &w).expect("tau").is_zero(), "tau(omega) != 0");
    let ccbbaa = w.to_tensor().coefficient(&w.alphabet().parse_word("ccbbaa").expect("word"));
    o.expect(!ccbbaa.is_zero(), "ccbbaa coefficient vanishes");
    let k6 = kernel_report(&engine, 6, &KernelOptions::default()).expect("kernel");
    o.expect(k6.kernel_dim == 1, format!("rank {}", k6.kernel_dim));
    o.expect(k6.basis.first().is_some_and(|b| *b == w || *b == -w.clone()), "generator is not +-omega");
    all &= report(2, &format!("omega certificate (ccbbaa coefficient {ccbbaa})"), Duration::from_secs(5), start, o);

    // 3
    let start = Instant::now();
    let mut o = Outcome::new();
    for (k, chi) in CHARACTERS {
        match kernel_character(&kernels[&k]) {
            Ok(c) => o.expect(c == Character::from(chi), format!("k={k}: {c}")),
            Err(e) => o.expect(false, format!("k={k}: {e}")),
        }
    }
    let sign = kernel_character(&kernels[&6]).ok().and_then(|c| c.decompose());
    o.expect(
        sign.is_some_and(|d| d.sign == 1 && d.trivial == 0 && d.standard == 0),
        "k=6 is not the sign representation",
    );
    all &= report(3, "kernel characters k = 6..9", Duration::from_secs(600), start, o);

    // 4
    let start = Instant::now();
    let mut o = Outcome::new();
    for k in 5..=8 {
        match bracket_map_rank(&kernels[&k], &kernels[&(k + 1)]) {
            Ok(b) => {
                o.expect(b.contained, format!("k={k}: brackets leave the kernel"));
                o.expect(!b.surjective, format!("k={k}: surjective"));
                if k >= 6 {
                    o.expect(b.injective && b.rank == 3 * KERNEL_DIMS[k - 1], format!("k={k}: rank {}", b.rank));
                }
            }
            Err(e) => o.expect(false, format!("k={k}: {e}")),
        }
    }
    all &= report(4, "bracket maps injective k = 6,7,8, not surjective k = 5..8", Duration::from_secs(60), start, o);

    // 5
    let start = Instant::now();
    let mut o = Outcome::new();
    for (n, count) in [(4, 4), (5, 10)] {
        match independence_certificate(n) {
            Ok(c) => {
                o.expect(c.count == count, format!("n={n}: {} elements", c.count));
                o.expect(c.nonzero && c.tau_vanishes.iter().all(|&t| t), format!("n={n}: nonzero / tau checks"));
                o.expect(c.grid.iter().all(|x| x.value == Some(u8::from(x.i == x.j))), format!("n={n}: grid"));
                o.expect(c.verified, format!("n={n}: not verified"));
            }
            Err(e) => o.expect(false, format!("n={n}: {e}")),
        }
    }
    all &= report(5, "stabilized omegas independent for n = 4, 5", Duration::from_secs(120), start, o);

    // 6
    let start = Instant::now();
    let mut o = Outcome::new();
    for k in 1..=9 {
        o.expect(sd_rank(k) == 2 * witt_dimension(3, k), format!("sd_rank({k})"));
    }
    for k in 1..=7 {
        match sd_tau_kernel(k) {
            Ok(r) => o.expect(r.h_part_zero && r.kernel_dim == KERNEL_DIMS[k - 1], format!("k={k}: {r:?}")),
            Err(e) => o.expect(false, format!("k={k}: {e}")),
        }
        match intersection_kappa(k, DEFAULT_INTERSECTION_CAP) {
            Ok(d) => o.expect(d == KERNEL_DIMS[k - 1], format!("k={k}: intersection {d}")),
            Err(e) => o.expect(false, format!("k={k}: {e}")),
        }
    }
    all &= report(6, "semidirect product ranks, kernel in g, intersection formula", Duration::from_secs(300), start, o);

    // 7
    let start = Instant::now();
    let mut o = Outcome::new();
    for suite in Suite::ALL {
        let r = run_suite(suite, DEFAULT_CASES, 0);
        o.expect(r.cases >= 200, format!("{suite}: {} cases", r.cases));
        o.expect(r.passed(), format!("{suite}: {} failures, first {:?}", r.failures, r.first_failure));
    }
    all &= report(
        7,
        &format!("{} property suites x {DEFAULT_CASES} cases", Suite::ALL.len()),
        Duration::from_secs(600),
        start,
        o,
    );

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
