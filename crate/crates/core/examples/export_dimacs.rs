//! Export an encoding for an external solver, then read it back and decode
//! models through the sidecar map.
//!
//!     cargo run --example export_dimacs [-- <dataset> <min-support> <out.cnf>]

use satmine::bench::{self, Threshold};
use satmine::encoder::Variant;
use satmine::mining::TransactionDb;
use satmine::{dpll, Budget, Heuristic};

fn main() -> satmine::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/table1.dat").to_string());
    let threshold: Threshold = args.next().as_deref().unwrap_or("2").parse()?;
    let out = args
        .next()
        .map(std::path::PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("satmine-export.cnf"));

    let db = TransactionDb::from_file(&path)?;
    let n = threshold.resolve(db.num_transactions());
    let files = bench::export_instance(&db, Variant::Cfim, n, true, &out)?;
    println!("wrote {} and {}", files.cnf.display(), files.var_map.display());

    let (formula, map) = bench::import_instance(&files.cnf)?;
    println!("{} variables, {} clauses", formula.num_vars(), formula.num_clauses());
    dpll::enumerate(&formula, &map.item_vars(), Heuristic::VsidsWeightsOnly, &Budget::unlimited(), |model| {
        println!("  {}", map.decode_labels(model).join(" "));
    });
    Ok(())
}
