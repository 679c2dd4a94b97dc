mod common;

use satmine::cardinality::{count_projected_models, encode_at_least_k};
use satmine::dpll::{DpllEnumerator, Propagation};
use satmine::{CnfFormula, Heuristic, Var};

fn inputs(m: usize) -> Vec<Var> {
    (1..=m).map(Var::new).collect()
}

fn formula(m: usize, k: usize) -> (CnfFormula, Vec<Var>) {
    let vars = inputs(m);
    let enc = encode_at_least_k(&vars, k, Var::new(m + 1));
    let mut f = CnfFormula::new(enc.max_var().max(m));
    f.extend(enc.clauses().iter().cloned());
    (f, vars)
}

#[test]
fn counts_match_binomial_sums() {
    for m in 0..=10u64 {
        for k in 0..=m + 1 {
            let enc = encode_at_least_k(&inputs(m as usize), k as usize, Var::new(m as usize + 1));
            let expected: u64 = (k..=m).map(|j| common::binomial(m, j)).sum();
            assert_eq!(count_projected_models(&enc).unwrap(), expected, "m={m} k={k}");
        }
    }
}

#[test]
fn truth_table_agrees_for_small_m() {
    for m in 0..=6usize {
        for k in 0..=m + 1 {
            let (f, vars) = formula(m, k);
            let models = common::truth_table(&f);
            let projections = common::projected_models(&f, &vars);
            // one model per input projection, and the projections are exactly
            // the inputs with at least k trues
            assert_eq!(models.len(), projections.len(), "m={m} k={k}");
            for p in &projections {
                assert!(p.iter().filter(|&&l| l > 0).count() >= k);
            }
            let expected: u64 = (k as u64..=m as u64).map(|j| common::binomial(m as u64, j)).sum();
            assert_eq!(projections.len() as u64, expected);
        }
    }
}

#[test]
fn extensions_are_unique_up_to_eight_inputs() {
    for m in 0..=8usize {
        for k in 0..=m + 1 {
            let enc = encode_at_least_k(&inputs(m), k, Var::new(m + 1));
            for (mask, &count) in enc.extension_counts().unwrap().iter().enumerate() {
                let want = u64::from(mask.count_ones() as usize >= k);
                assert_eq!(count, want, "m={m} k={k} mask={mask:b}");
            }
        }
    }
}

/// Every partial input assignment where the remaining free inputs are all
/// needed must have them forced; one short of reachable must conflict.
#[test]
fn propagation_spot_check() {
    for m in 1..=6usize {
        for k in 1..=m {
            let (f, vars) = formula(m, k);
            let mut states = vec![0u8; m];
            'outer: loop {
                let trues = states.iter().filter(|&&s| s == 1).count();
                let free = states.iter().filter(|&&s| s == 0).count();
                let mut e = DpllEnumerator::new(&f, &vars, Heuristic::JeroslowWang);
                let mut conflict = e.propagate() != Propagation::Fixpoint;
                for (i, &s) in states.iter().enumerate() {
                    if conflict || s == 0 {
                        continue;
                    }
                    let lit = vars[i].lit(s == 1);
                    match e.value(vars[i]) {
                        Some(v) if v == lit.is_positive() => continue,
                        Some(_) => {
                            conflict = true;
                            continue;
                        }
                        None => {}
                    }
                    e.decide(lit);
                    conflict = e.propagate() != Propagation::Fixpoint;
                }
                if trues + free < k {
                    assert!(conflict, "m={m} k={k} {states:?} not refuted");
                } else {
                    assert!(!conflict, "m={m} k={k} {states:?} wrongly refuted");
                    if trues + free == k {
                        for (i, &s) in states.iter().enumerate() {
                            if s == 0 {
                                assert_eq!(e.value(vars[i]), Some(true), "m={m} k={k} {states:?}");
                            }
                        }
                    }
                }
                // next state in base 3: 0 free, 1 true, 2 false
                for s in states.iter_mut() {
                    *s += 1;
                    if *s < 3 {
                        continue 'outer;
                    }
                    *s = 0;
                }
                break;
            }
        }
    }
}

#[test]
fn degenerate_bounds() {
    let (f, _) = formula(4, 0);
    assert_eq!(f.num_clauses(), 0);
    let (f, _) = formula(4, 5);
    assert!(f.is_trivially_unsat());
}
