//! Reference implementations used only by tests. None of this goes through
//! the library's solvers or its bitmask miner.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use satmine::mining::TransactionDb;
use satmine::{Assignment, Clause, CnfFormula, Lit, Var};

pub const TABLE1: &str = "A B C D\nA B E F\nA B C\nA C D F\nG\nD\nD G\n";

/// Does the full assignment encoded in `bits` (bit i-1 is variable i)
/// satisfy every clause?
pub fn satisfies(formula: &CnfFormula, bits: u64) -> bool {
    formula.clauses().iter().all(|c| {
        c.lits()
            .iter()
            .any(|l| ((bits >> (l.var().index() - 1)) & 1 == 1) == l.is_positive())
    })
}

/// Every model as a bit vector, by trying all 2^n assignments.
pub fn truth_table(formula: &CnfFormula) -> Vec<u64> {
    let n = formula.num_vars();
    assert!(n <= 22, "truth table over {n} variables");
    (0..1u64 << n).filter(|&b| satisfies(formula, b)).collect()
}

/// Every model as a bit vector, by assigning variables in index order and
/// pruning as soon as a clause has all its literals false. Returned in
/// increasing numeric order, like [`truth_table`].
pub fn all_models(formula: &CnfFormula) -> Vec<u64> {
    let n = formula.num_vars();
    assert!(n <= 63);
    // clauses grouped by their highest variable
    let mut by_last: Vec<Vec<Vec<Lit>>> = vec![Vec::new(); n + 1];
    for c in formula.clauses() {
        let last = c.lits().iter().map(|l| l.var().index()).max().unwrap_or(0);
        by_last[last].push(c.lits().to_vec());
    }
    if !by_last[0].is_empty() {
        return Vec::new();
    }
    fn go(v: usize, n: usize, bits: u64, by_last: &[Vec<Vec<Lit>>], out: &mut Vec<u64>) {
        if v > n {
            out.push(bits);
            return;
        }
        for value in [false, true] {
            let bits = if value { bits | 1 << (v - 1) } else { bits };
            let ok = by_last[v]
                .iter()
                .all(|c| c.iter().any(|l| ((bits >> (l.var().index() - 1)) & 1 == 1) == l.is_positive()));
            if ok {
                go(v + 1, n, bits, by_last, out);
            }
        }
    }
    let mut out = Vec::new();
    go(1, n, 0, &by_last, &mut out);
    out.sort();
    out
}

/// Distinct projections of all models onto `vars`, each as the sorted list
/// of DIMACS literals.
pub fn projected_models(formula: &CnfFormula, vars: &[Var]) -> BTreeSet<Vec<i64>> {
    all_models(formula)
        .into_iter()
        .map(|b| project_bits(b, vars))
        .collect()
}

pub fn project_bits(bits: u64, vars: &[Var]) -> Vec<i64> {
    vars.iter()
        .map(|v| {
            let i = v.index() as i64;
            if (bits >> (i - 1)) & 1 == 1 {
                i
            } else {
                -i
            }
        })
        .collect()
}

pub fn project_assignment(model: &Assignment, vars: &[Var]) -> Vec<i64> {
    vars.iter()
        .map(|&v| {
            let i = v.index() as i64;
            match model.value(v) {
                Some(true) => i,
                Some(false) => -i,
                None => panic!("variable {i} unassigned in reported model"),
            }
        })
        .collect()
}

/// Is `clause` true under every model of `formula`?
pub fn entails(formula: &CnfFormula, clause: &[Lit]) -> bool {
    let mut extended = formula.clone();
    // the negated clause as units; unsatisfiable iff entailed
    for &l in clause {
        extended.add_clause([!l]);
    }
    truth_table(&extended).is_empty()
}

/// Naive miner over label sets. Returns (frequent, closed) itemsets, each
/// itemset as a sorted vector of labels.
pub struct NaiveMiner {
    rows: Vec<HashSet<String>>,
    items: Vec<String>,
}

impl NaiveMiner {
    pub fn new(rows: &[Vec<String>]) -> NaiveMiner {
        let rows: Vec<HashSet<String>> = rows.iter().map(|r| r.iter().cloned().collect()).collect();
        let mut items: Vec<String> = rows.iter().flatten().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        items.sort();
        NaiveMiner { rows, items }
    }

    pub fn support(&self, set: &[String]) -> usize {
        self.rows.iter().filter(|r| set.iter().all(|a| r.contains(a))).count()
    }

    fn subsets(&self) -> Vec<Vec<String>> {
        let mut out = vec![Vec::new()];
        for item in &self.items {
            let more: Vec<Vec<String>> = out
                .iter()
                .map(|s| {
                    let mut s = s.clone();
                    s.push(item.clone());
                    s
                })
                .collect();
            out.extend(more);
        }
        for s in &mut out {
            s.sort();
        }
        out
    }

    pub fn frequent(&self, n: usize) -> BTreeSet<Vec<String>> {
        self.subsets().into_iter().filter(|s| self.support(s) >= n).collect()
    }

    /// Closed per the literal definition: no single added item keeps the
    /// support. Checking single items suffices by anti-monotonicity.
    pub fn closed(&self, n: usize, exclude_empty: bool) -> BTreeSet<Vec<String>> {
        self.frequent(n)
            .into_iter()
            .filter(|s| !(exclude_empty && s.is_empty()))
            .filter(|s| {
                let sup = self.support(s);
                self.items.iter().filter(|a| !s.contains(a)).all(|a| {
                    let mut t = s.clone();
                    t.push(a.clone());
                    self.support(&t) < sup
                })
            })
            .collect()
    }
}

/// Labels of the itemsets in `db`'s terms.
pub fn labels(db: &TransactionDb, set: &satmine::mining::Itemset) -> Vec<String> {
    let mut v: Vec<String> = set.iter().map(|a| db.label(a).to_string()).collect();
    v.sort();
    v
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Random database: `m` rows over items "i0".."i{items-1}".
pub fn random_rows(max_items: usize, max_rows: usize) -> impl Strategy<Value = Vec<Vec<String>>> {
    (1..=max_items, 1..=max_rows).prop_flat_map(|(items, rows)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), items), rows).prop_map(|rows| {
            rows.into_iter()
                .map(|bits| {
                    bits.iter()
                        .enumerate()
                        .filter(|(_, &b)| b)
                        .map(|(i, _)| format!("i{i}"))
                        .collect()
                })
                .collect()
        })
    })
}

/// Random CNF over `1..=vars` with clauses of length 1..=max_len.
pub fn random_cnf(vars: usize, max_clauses: usize, max_len: usize) -> impl Strategy<Value = CnfFormula> {
    let lit = (1..=vars as i64, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v });
    proptest::collection::vec(proptest::collection::vec(lit, 1..=max_len), 0..=max_clauses).prop_map(move |clauses| {
        let mut f = CnfFormula::new(vars);
        for c in clauses {
            f.add_clause(c.into_iter().map(Lit::from_dimacs));
        }
        f
    })
}

/// The worked CFIM example for Table 1 at threshold 4, transcribed as
/// (q index, items absent from the transaction) and (item, q indices of
/// the transactions lacking it).
pub const WORKED_COVER: [(usize, &str); 7] = [
    (1, "EFG"),
    (2, "CDG"),
    (3, "DEFG"),
    (4, "BEG"),
    (5, "ABCDEF"),
    (6, "ABCEFG"),
    // printed with q_5 on the left; transaction 7 is {D, G}
    (7, "ABCEF"),
];

pub const WORKED_CLOSURE: [(char, &[usize]); 7] = [
    ('A', &[5, 6, 7]),
    ('B', &[4, 5, 6, 7]),
    ('C', &[2, 5, 6, 7]),
    ('D', &[2, 3, 5]),
    // printed as q_2 q_3 q_4 q_5 q_6 q_7; E occurs in transaction 2, not 1
    ('E', &[1, 3, 4, 5, 6, 7]),
    // printed with q_4; F occurs in transaction 4 (A C D F)
    ('F', &[1, 3, 5, 6, 7]),
    ('G', &[1, 2, 3, 4, 6]),
];

fn p(item: char) -> Var {
    Var::new((item as u8 - b'A') as usize + 1)
}

fn q(i: usize) -> Var {
    Var::new(7 + i)
}

pub fn worked_clauses() -> Vec<Clause> {
    let mut out = Vec::new();
    for (i, absent) in WORKED_COVER {
        for a in absent.chars() {
            out.push(Clause::normalize([p(a).negative(), q(i).negative()]).unwrap());
        }
        out.push(Clause::normalize(std::iter::once(q(i).positive()).chain(absent.chars().map(|a| p(a).positive()))).unwrap());
    }
    for (a, qs) in WORKED_CLOSURE {
        out.push(Clause::normalize(qs.iter().map(|&i| q(i).positive()).chain([p(a).positive()])).unwrap());
    }
    out
}
