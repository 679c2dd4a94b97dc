mod common;

use proptest::prelude::*;
use satmine::{Assignment, Clause, CnfFormula, Evaluation, Lit, Var};

fn lits() -> impl Strategy<Value = Vec<Lit>> {
    proptest::collection::vec((1i64..=12, any::<bool>()), 0..40)
        .prop_map(|v| v.into_iter().map(|(x, neg)| Lit::from_dimacs(if neg { -x } else { x })).collect())
}

proptest! {
    #[test]
    fn dimacs_round_trip(f in common::random_cnf(10, 25, 5)) {
        let text = f.write_dimacs();
        let back = CnfFormula::parse_dimacs(&text).unwrap();
        prop_assert_eq!(back.num_vars(), f.num_vars());
        prop_assert_eq!(back.clauses(), f.clauses());
        prop_assert_eq!(back.write_dimacs(), text);
    }

    #[test]
    fn normalization_is_idempotent(ls in lits()) {
        if let Some(c) = Clause::normalize(ls.clone()) {
            let again = Clause::normalize(c.lits().to_vec()).unwrap();
            prop_assert_eq!(&again, &c);
            let vars: std::collections::HashSet<Var> = c.iter().map(Lit::var).collect();
            prop_assert_eq!(vars.len(), c.len());
        } else {
            prop_assert!(ls.iter().any(|&l| ls.contains(&!l)));
        }
    }

    #[test]
    fn total_assignments_are_decided(f in common::random_cnf(8, 20, 4), bits in 0u64..256) {
        let a = Assignment::from_lits(8, (1..=8).map(|i| Var::new(i).lit(bits >> (i - 1) & 1 == 1)));
        let e = f.evaluate(&a);
        prop_assert_ne!(e, Evaluation::Undetermined);
        prop_assert_eq!(e == Evaluation::Satisfied, common::satisfies(&f, bits));
    }
}

#[test]
fn parse_rejects_malformed_input() {
    for bad in [
        "1 2 0\n",
        "p cnf 2 1\n1 3 0\n",
        "p cnf 2 1\n1 2\n",
        "p cnf 2 2\n1 2 0\n",
        "p cnf 2 1\np cnf 2 1\n1 0\n",
        "p cnf 2 1\n1 x 0\n",
    ] {
        assert!(CnfFormula::parse_dimacs(bad).is_err(), "{bad:?} accepted");
    }
}

#[test]
fn parse_handles_comments_and_percent_trailer() {
    let f = CnfFormula::parse_dimacs("c hello\np cnf 3 2\n1 -2 0\n2 3 0\n%\n0\n").unwrap();
    assert_eq!(f.num_clauses(), 2);
}
