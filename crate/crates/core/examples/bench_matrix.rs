//! Run an experiment matrix from TOML and print the CSV.
//!
//!     cargo run --release --example bench_matrix [-- <matrix.toml>]

use satmine::bench::{self, RunSpec};

fn main() -> satmine::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/bench.toml").to_string());
    let spec = RunSpec::from_file(path.as_ref())?;
    let records = bench::run_matrix(&spec)?;
    bench::write_csv(&records, std::io::stdout().lock())?;

    // completed rows of one (dataset, threshold) pair must agree
    for group in records.chunks(spec.algorithms.len()) {
        let done: Vec<_> = group.iter().filter(|r| r.stats.completed).collect();
        if done.windows(2).any(|w| w[0].digest != w[1].digest) {
            eprintln!("model sets differ for {} n={}", group[0].dataset, group[0].threshold);
        }
    }
    Ok(())
}
