//! Drive the CDCL enumerator one model at a time and inspect what it keeps.
//!
//!     cargo run --example cdcl_stepwise

use satmine::cdcl::{CdclEnumerator, SolveOutcome};
use satmine::encoder::encode_cfim;
use satmine::mining::TransactionDb;
use satmine::Budget;

fn main() -> satmine::Result<()> {
    let db = TransactionDb::from_file(concat!(env!("CARGO_MANIFEST_DIR"), "/data/table1.dat"))?;
    let inst = encode_cfim(&db, 2, true);
    let mut solver = CdclEnumerator::new(&inst.formula, &inst.projection());
    loop {
        match solver.next_model(&Budget::unlimited()) {
            SolveOutcome::Model(model) => {
                let solution = inst.decode_model(&model)?;
                solver.block(&model);
                println!(
                    "{:<8} cover {:?}  blocking clause {:?}",
                    db.display(&solution.itemset),
                    solution.cover,
                    solver.blocking_clauses().last().expect("just added").lits()
                );
            }
            SolveOutcome::Unsat => break,
            SolveOutcome::Interrupted => unreachable!("no budget set"),
        }
    }
    println!(
        "{} conflicts, {} restarts, {} learned clauses kept",
        solver.conflicts(),
        solver.restarts(),
        solver.learned_clauses().len()
    );
    Ok(())
}
