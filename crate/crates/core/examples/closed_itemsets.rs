//! Frequent and closed itemsets of the seven-row toy database.
//!
//!     cargo run --example closed_itemsets [-- <dataset> <min-support>]

use satmine::bench::Threshold;
use satmine::encoder::{encode_cfim, encode_fim};
use satmine::mining::TransactionDb;
use satmine::{dpll, Budget, Heuristic};

fn main() -> satmine::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/table1.dat").to_string());
    let threshold: Threshold = args.next().as_deref().unwrap_or("2").parse()?;

    let db = TransactionDb::from_file(&path)?;
    let n = threshold.resolve(db.num_transactions());
    println!("{} transactions over {} items, n = {n}", db.num_transactions(), db.num_items());

    for (name, instance) in [("frequent", encode_fim(&db, n)), ("closed", encode_cfim(&db, n, true))] {
        let mut rows = Vec::new();
        dpll::enumerate(&instance.formula, &instance.projection(), Heuristic::JeroslowWang, &Budget::unlimited(), |model| {
            let solution = instance.decode_model(model).expect("every model decodes");
            rows.push((db.display(&solution.itemset), solution.support));
        });
        rows.sort();
        println!("\n{name} itemsets ({}):", rows.len());
        for (items, support) in rows {
            println!("  {items:<12} support {support}");
        }
    }
    Ok(())
}
