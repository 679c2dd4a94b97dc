//! Stored clauses during enumeration: blocking clauses accumulate, chronological
//! backtracking keeps only the input.
//!
//!     cargo run --release --example memory_growth [-- <items>]

use satmine::cdcl::{CdclEnumerator, SolveOutcome};
use satmine::encoder::encode_cfim;
use satmine::mining::TransactionDb;
use satmine::{dpll, Budget, Heuristic};

fn main() {
    let items: usize = std::env::args().nth(1).map(|a| a.parse().expect("integer")).unwrap_or(11);
    // every itemset but the full one is closed
    let rows: Vec<Vec<String>> = (0..items)
        .map(|i| (0..items).filter(|&j| j != i).map(|j| j.to_string()).collect())
        .collect();
    let db = TransactionDb::from_rows(&rows);
    let inst = encode_cfim(&db, 1, true);
    let projection = inst.projection();
    println!("input clauses: {}", inst.formula.num_clauses());

    let mut cdcl = CdclEnumerator::new(&inst.formula, &projection);
    let mut models = 0u64;
    let step = 1u64 << (items - 3);
    while let SolveOutcome::Model(m) = cdcl.next_model(&Budget::unlimited()) {
        cdcl.block(&m);
        models += 1;
        if models.is_multiple_of(step) {
            println!("cdcl  {models:>6} models  {:>6} stored clauses", cdcl.stored_clauses());
        }
    }
    println!("cdcl  {models:>6} models  {:>6} stored clauses (done)", cdcl.stored_clauses());

    let stats = dpll::enumerate(&inst.formula, &projection, Heuristic::JeroslowWang, &Budget::unlimited(), |_| {});
    println!("dpll  {:>6} models  {:>6} stored clauses at peak", stats.models_found, stats.peak_stored_clauses);
}
