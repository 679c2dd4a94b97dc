//! Parse a DIMACS file, normalize it, enumerate its models and write it back.
//!
//!     cargo run --example dimacs_round_trip [-- <file.cnf>]

use satmine::cdcl;
use satmine::dpll::all_vars;
use satmine::{Budget, CnfFormula};

const DEMO: &str = "c three variables, x1 or x2, not both x2 and x3
p cnf 3 3
1 2 0
-2 -3 0
3 3 -1 0
";

fn main() -> satmine::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEMO.to_string(),
    };
    let formula = CnfFormula::parse_dimacs(&text)?;
    println!("{} variables, {} clauses after normalization", formula.num_vars(), formula.num_clauses());

    let written = formula.write_dimacs();
    assert_eq!(CnfFormula::parse_dimacs(&written)?, formula);
    print!("{written}");

    let stats = cdcl::enumerate_blocking(&formula, &all_vars(&formula), &Budget::unlimited(), |model| {
        let lits: Vec<String> = model.true_lits().map(|l| l.to_string()).collect();
        println!("model: {}", lits.join(" "));
    });
    println!("{} models", stats.models_found);
    Ok(())
}
