//! The sequential counter behind the support constraint.
//!
//!     cargo run --example cardinality_counter [-- <m> <k>]

use satmine::cardinality::{count_projected_models, encode_at_least_k};
use satmine::Var;

fn main() -> satmine::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let m = args.next().unwrap_or(5);
    let k = args.next().unwrap_or(3);

    let inputs: Vec<Var> = (1..=m).map(Var::new).collect();
    let enc = encode_at_least_k(&inputs, k, Var::new(m + 1));
    println!(
        "at least {k} of {m}: {} aux variables, {} clauses",
        enc.aux_vars().len(),
        enc.clauses().len()
    );
    for c in enc.clauses() {
        let lits: Vec<String> = c.iter().map(|l| l.to_string()).collect();
        println!("  {}", lits.join(" "));
    }
    if m <= satmine::cardinality::MAX_EXHAUSTIVE_INPUTS {
        let binomial = |j: usize| (0..j).fold(1u64, |acc, i| acc * (m - i) as u64 / (i + 1) as u64);
        let expected: u64 = (k..=m).map(binomial).sum();
        println!("satisfying inputs: {} (expected {expected})", count_projected_models(&enc)?);
    }
    Ok(())
}
