//! Prints the rank of the Johnson matrix and of its kernel in each degree, with timings.

use std::time::Instant;

use mccool::johnson::{kernel_report, KernelOptions, SymbolSet, TauEngine};

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let engine = TauEngine::new(SymbolSet::abc());
    println!("{:>2} {:>6} {:>6} {:>6} {:>9}", "k", "domain", "rank", "kernel", "seconds");
    for k in 1..=max {
        let start = Instant::now();
        let r = kernel_report(&engine, k, &KernelOptions::default()).expect("kernel");
        println!(
            "{k:>2} {:>6} {:>6} {:>6} {:>9.3}",
            r.domain_dim,
            r.image_rank,
            r.kernel_dim,
            start.elapsed().as_secs_f64()
        );
    }
}
