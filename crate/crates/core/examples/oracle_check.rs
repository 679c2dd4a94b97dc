//! Cross-check every enumerator against the exhaustive miner, for both
//! variants and every threshold.
//!
//!     cargo run --example oracle_check [-- <small dataset>]

use satmine::bench::{self, Algorithm};
use satmine::mining::TransactionDb;

fn main() -> satmine::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/table1.dat").to_string());
    let db = TransactionDb::from_file(&path)?;
    let lines = bench::cross_check(&db, true, &Algorithm::all(bench::DEFAULT_SEED))?;
    for l in &lines {
        println!(
            "{} {:<4} n={:<3} {:<10} expected {:>4} found {:>4}",
            if l.passed { "ok  " } else { "FAIL" },
            l.variant,
            l.threshold,
            l.algorithm.name(),
            l.expected,
            l.found
        );
    }
    let failed = lines.iter().filter(|l| !l.passed).count();
    println!("{} checks, {failed} failed", lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
    Ok(())
}
