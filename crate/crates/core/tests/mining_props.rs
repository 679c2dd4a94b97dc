mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use satmine::encoder::{encode_cfim, encode_fim, EncodedInstance};
use satmine::mining::{Itemset, TransactionDb};
use satmine::oracle;

fn db_of(rows: &[Vec<String>]) -> TransactionDb {
    TransactionDb::from_rows(rows)
}

fn all_itemsets(db: &TransactionDb) -> Vec<Itemset> {
    let n = db.num_items();
    (0u32..1 << n)
        .map(|mask| (0..n as u32).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

/// Item projections of every model of the encoding, by truth table.
fn encoded_patterns(instance: &EncodedInstance<'_>) -> BTreeSet<Vec<String>> {
    let models = common::truth_table(&instance.formula);
    let mut seen = BTreeSet::new();
    for bits in models {
        let itemset: Itemset = (0..instance.db.num_items() as u32)
            .filter(|&a| bits >> (instance.var_map.item_var(a).index() - 1) & 1 == 1)
            .collect();
        // q and aux must be functions of the items: no two models per itemset
        assert!(seen.insert(itemset.clone()), "itemset {itemset} has two models");
        let assignment = satmine::Assignment::from_lits(
            instance.formula.num_vars(),
            (1..=instance.formula.num_vars()).map(|i| satmine::Var::new(i).lit(bits >> (i - 1) & 1 == 1)),
        );
        let sol = instance.decode_model(&assignment).expect("decoded cover matches");
        assert_eq!(sol.support, sol.cover.len());
    }
    seen.iter().map(|s| common::labels(instance.db, s)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn support_is_anti_monotone(rows in common::random_rows(6, 8)) {
        let db = db_of(&rows);
        let sets = all_itemsets(&db);
        for i in &sets {
            for j in &sets {
                if i.is_subset(j) {
                    prop_assert!(db.support(j).unwrap() <= db.support(i).unwrap());
                }
            }
        }
    }

    #[test]
    fn pair_cover_is_intersection(rows in common::random_rows(6, 10)) {
        let db = db_of(&rows);
        let n = db.num_items() as u32;
        for a in 0..n {
            for b in 0..n {
                let ca = db.cover(&[a].into_iter().collect()).unwrap();
                let cb = db.cover(&[b].into_iter().collect()).unwrap();
                let both: Vec<u32> = ca.iter().copied().filter(|t| cb.contains(t)).collect();
                prop_assert_eq!(db.cover(&[a, b].into_iter().collect()).unwrap(), both);
            }
        }
    }

    #[test]
    fn closedness_tests_agree(rows in common::random_rows(6, 8)) {
        let db = db_of(&rows);
        let naive = common::NaiveMiner::new(&rows);
        for set in all_itemsets(&db) {
            if db.support(&set).unwrap() == 0 {
                continue;
            }
            let by_closure = oracle::is_closed(&db, &set).unwrap();
            prop_assert_eq!(by_closure, oracle::is_closed_by_supersets(&db, &set).unwrap());
            let sup = naive.support(&common::labels(&db, &set));
            let closed_naive = naive.closed(sup, false).contains(&common::labels(&db, &set));
            prop_assert_eq!(by_closure, closed_naive);
        }
    }

    #[test]
    fn oracle_matches_naive_miner(rows in common::random_rows(7, 10)) {
        let db = db_of(&rows);
        let naive = common::NaiveMiner::new(&rows);
        for n in 0..=db.num_transactions() + 1 {
            let frequent = oracle::mine_frequent(&db, n).unwrap();
            let got: BTreeSet<Vec<String>> = frequent.itemsets().iter().map(|s| common::labels(&db, s)).collect();
            prop_assert_eq!(&got, &naive.frequent(n));
            if n == 0 {
                continue;
            }
            for exclude in [false, true] {
                let closed = oracle::mine_closed(&db, n, exclude).unwrap();
                let got: BTreeSet<Vec<String>> = closed.itemsets().iter().map(|s| common::labels(&db, s)).collect();
                prop_assert_eq!(&got, &naive.closed(n, exclude));
                prop_assert!(closed.itemsets().is_subset(&frequent.itemsets()));
            }
            // every frequent itemset sits under a closed one of equal support
            let closed = oracle::mine_closed(&db, n, false).unwrap();
            for p in &frequent.patterns {
                prop_assert!(closed
                    .patterns
                    .iter()
                    .any(|c| p.itemset.is_subset(&c.itemset) && c.support == p.support));
            }
        }
    }

    #[test]
    fn encodings_are_bijective(rows in common::random_rows(4, 5)) {
        let db = db_of(&rows);
        let naive = common::NaiveMiner::new(&rows);
        for n in 0..=db.num_transactions() + 1 {
            prop_assert_eq!(encoded_patterns(&encode_fim(&db, n)), naive.frequent(n));
            if n == 0 {
                continue;
            }
            for exclude in [false, true] {
                prop_assert_eq!(encoded_patterns(&encode_cfim(&db, n, exclude)), naive.closed(n, exclude));
            }
        }
    }
}

#[test]
fn table1_supports() {
    let db = TransactionDb::parse_fimi(common::TABLE1);
    assert_eq!(db.support(&db.itemset(&["A"]).unwrap()).unwrap(), 4);
    assert_eq!(db.support(&Itemset::new()).unwrap(), 7);
    assert_eq!(db.support(&db.itemset(&["E"]).unwrap()).unwrap(), 1);
}

#[test]
fn clause_counts() {
    let db = TransactionDb::parse_fimi(common::TABLE1);
    let fim = encode_fim(&db, 0);
    let cover: usize = db.transactions().iter().map(|t| db.num_items() - t.items.len() + 1).sum();
    assert_eq!(fim.formula.num_clauses(), cover);
    let cfim = encode_cfim(&db, 0, false);
    assert_eq!(cfim.formula.num_clauses(), cover + db.num_items());
}
