//! Exhaustive reference miner.
//!
//! Enumerates every subset of Ω, so it only accepts small universes. Every
//! encoder and enumerator test measures itself against this module, which is
//! why closedness is implemented twice: once by intersecting the covering
//! transactions and once by scanning every strict superset.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::mining::{ItemId, Itemset, MiningSolution, TransactionDb};

/// Largest |Ω| accepted by the exhaustive miners.
pub const MAX_ITEMS: usize = 24;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PatternKind {
    Frequent,
    Closed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    /// Sorted by itemset.
    pub patterns: Vec<MiningSolution>,
    pub threshold: usize,
    pub kind: PatternKind,
}

impl PatternSet {
    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn itemsets(&self) -> BTreeSet<Itemset> {
        self.patterns.iter().map(|p| p.itemset.clone()).collect()
    }

    pub fn contains(&self, itemset: &Itemset) -> bool {
        self.patterns
            .binary_search_by(|p| p.itemset.cmp(itemset))
            .is_ok()
    }
}

/// Bitmask view of a database with at most `MAX_ITEMS` items.
struct Masks {
    items: usize,
    rows: Vec<u32>,
}

impl Masks {
    fn new(db: &TransactionDb) -> Result<Masks> {
        if db.num_items() > MAX_ITEMS {
            return Err(Error::TooLarge {
                what: "item universe",
                size: db.num_items(),
                limit: MAX_ITEMS,
            });
        }
        let rows = db
            .transactions()
            .iter()
            .map(|t| t.items.iter().fold(0u32, |m, a| m | 1 << a))
            .collect();
        Ok(Masks {
            items: db.num_items(),
            rows,
        })
    }

    fn support(&self, set: u32) -> usize {
        self.rows.iter().filter(|&&r| set & !r == 0).count()
    }

    /// Intersection of the transactions containing `set`, or `None` if no
    /// transaction does.
    fn closure(&self, set: u32) -> Option<u32> {
        self.rows
            .iter()
            .filter(|&&r| set & !r == 0)
            .fold(None, |acc, &r| Some(acc.unwrap_or(u32::MAX) & r))
    }

    fn itemset(set: u32) -> Itemset {
        (0..32).filter(|i| set >> i & 1 == 1).map(|i| i as ItemId).collect()
    }

    fn mask(itemset: &Itemset) -> u32 {
        itemset.iter().fold(0, |m, a| m | 1 << a)
    }

    fn all_sets(&self) -> impl Iterator<Item = u32> {
        0..(1u64 << self.items) as u32
    }
}

fn checked_mask(db: &TransactionDb, itemset: &Itemset) -> Result<(Masks, u32)> {
    let masks = Masks::new(db)?;
    if let Some(a) = itemset.iter().find(|&a| a as usize >= db.num_items()) {
        return Err(Error::UnknownItem(format!("#{a}")));
    }
    Ok((masks, Masks::mask(itemset)))
}

fn collect(db: &TransactionDb, sets: impl Iterator<Item = u32>, n: usize, kind: PatternKind) -> Result<PatternSet> {
    let mut patterns = sets
        .map(|s| db.solution(Masks::itemset(s)))
        .collect::<Result<Vec<_>>>()?;
    patterns.sort();
    Ok(PatternSet {
        patterns,
        threshold: n,
        kind,
    })
}

/// Every itemset whose support is at least `n`.
pub fn mine_frequent(db: &TransactionDb, n: usize) -> Result<PatternSet> {
    let masks = Masks::new(db)?;
    let sets = masks.all_sets().filter(|&s| masks.support(s) >= n);
    collect(db, sets, n, PatternKind::Frequent)
}

/// Frequent itemsets whose strict supersets all have smaller support.
/// `n` must be at least 1.
pub fn mine_closed(db: &TransactionDb, n: usize, exclude_empty: bool) -> Result<PatternSet> {
    if n == 0 {
        return Err(Error::ZeroSupport);
    }
    let masks = Masks::new(db)?;
    let sets = masks
        .all_sets()
        .filter(|&s| !(exclude_empty && s == 0))
        .filter(|&s| masks.support(s) >= n && masks.closure(s) == Some(s));
    collect(db, sets, n, PatternKind::Closed)
}

/// Closedness as a fixpoint of the closure operator: `itemset` equals the
/// intersection of the transactions that contain it.
pub fn is_closed(db: &TransactionDb, itemset: &Itemset) -> Result<bool> {
    let (masks, set) = checked_mask(db, itemset)?;
    match masks.closure(set) {
        None => Err(Error::UnsupportedItemset),
        Some(c) => Ok(c == set),
    }
}

/// Closedness checked literally: every strict superset has strictly smaller
/// support.
pub fn is_closed_by_supersets(db: &TransactionDb, itemset: &Itemset) -> Result<bool> {
    let (masks, set) = checked_mask(db, itemset)?;
    let support = masks.support(set);
    if support == 0 {
        return Err(Error::UnsupportedItemset);
    }
    let universe = ((1u64 << masks.items) - 1) as u32;
    let free = universe & !set;
    // walk the non-empty subsets of the free items
    let mut extra = free;
    while extra != 0 {
        if masks.support(set | extra) >= support {
            return Ok(false);
        }
        extra = (extra - 1) & free;
    }
    Ok(true)
}
