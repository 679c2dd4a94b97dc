//! Compare the three DPLL branching heuristics and the CDCL enumerator on
//! one instance.
//!
//!     cargo run --release --example heuristics [-- <dataset> <min-support>]

use satmine::bench::{self, Algorithm, Threshold};
use satmine::encoder::Variant;
use satmine::mining::TransactionDb;
use satmine::Budget;

fn main() -> satmine::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/wine.dat").to_string());
    let threshold: Threshold = args.next().as_deref().unwrap_or("5%").parse()?;
    let db = TransactionDb::from_file(&path)?;
    let n = threshold.resolve(db.num_transactions());
    let budget = Budget::with_timeout(std::time::Duration::from_secs(120));

    println!("{:<11} {:>8} {:>9} {:>9} {:>12} {:>10}", "algorithm", "models", "conflicts", "decisions", "propagations", "ms");
    for algorithm in Algorithm::all(bench::DEFAULT_SEED) {
        let r = bench::run_on_db(&db, "", Variant::Cfim, n, algorithm, true, &budget, |_| {});
        println!(
            "{:<11} {:>8} {:>9} {:>9} {:>12} {:>10.1}  {}",
            algorithm.name(),
            r.stats.models_found,
            r.stats.conflicts,
            r.stats.decisions,
            r.stats.propagations,
            r.stats.elapsed.as_secs_f64() * 1e3,
            r.digest
        );
    }
    Ok(())
}
