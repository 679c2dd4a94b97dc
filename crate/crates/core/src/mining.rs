//! Transaction databases, covers and supports.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Dense item identifier, `0..|Ω|` in first-appearance order.
pub type ItemId = u32;

/// Transaction identifier; the 1-based line number in the source file.
pub type Tid = u32;

/// A set of items, kept sorted and free of duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Itemset(Vec<ItemId>);

impl Itemset {
    pub fn new() -> Itemset {
        Itemset(Vec::new())
    }

    pub fn items(&self) -> &[ItemId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, item: ItemId) -> bool {
        self.0.binary_search(&item).is_ok()
    }

    pub fn insert(&mut self, item: ItemId) -> bool {
        match self.0.binary_search(&item) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, item);
                true
            }
        }
    }

    pub fn is_subset(&self, other: &Itemset) -> bool {
        let mut theirs = other.0.iter();
        'outer: for &a in &self.0 {
            for &b in theirs.by_ref() {
                if b == a {
                    continue 'outer;
                }
                if b > a {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = ItemId> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<ItemId> for Itemset {
    fn from_iter<I: IntoIterator<Item = ItemId>>(iter: I) -> Itemset {
        let mut v: Vec<ItemId> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Itemset(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transaction {
    pub tid: Tid,
    pub items: Itemset,
}

/// A transaction database over the item universe Ω.
#[derive(Clone, Debug, Default)]
pub struct TransactionDb {
    labels: Vec<String>,
    ids: HashMap<String, ItemId>,
    transactions: Vec<Transaction>,
}

impl TransactionDb {
    /// Reads the FIMI flat format: one transaction per line, items separated
    /// by whitespace. Line `k` becomes transaction `k`; empty lines are kept
    /// as empty transactions.
    pub fn parse_fimi(text: &str) -> TransactionDb {
        let mut db = TransactionDb::default();
        for line in text.lines() {
            let row: Vec<&str> = line.split_whitespace().collect();
            db.push_transaction(&row);
        }
        db
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<TransactionDb> {
        Ok(TransactionDb::parse_fimi(&fs::read_to_string(path)?))
    }

    /// Builds a database from rows of item labels.
    pub fn from_rows<S: AsRef<str>>(rows: &[Vec<S>]) -> TransactionDb {
        let mut db = TransactionDb::default();
        for row in rows {
            let row: Vec<&str> = row.iter().map(AsRef::as_ref).collect();
            db.push_transaction(&row);
        }
        db
    }

    /// Appends a transaction and returns its tid. Unseen labels extend Ω.
    pub fn push_transaction(&mut self, labels: &[&str]) -> Tid {
        let items: Itemset = labels.iter().map(|l| self.intern(l)).collect();
        let tid = self.transactions.len() as Tid + 1;
        self.transactions.push(Transaction { tid, items });
        tid
    }

    fn intern(&mut self, label: &str) -> ItemId {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.labels.len() as ItemId;
        self.labels.push(label.to_string());
        self.ids.insert(label.to_string(), id);
        id
    }

    pub fn num_items(&self) -> usize {
        self.labels.len()
    }

    pub fn num_transactions(&self) -> usize {
        self.transactions.len()
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    pub fn transaction(&self, tid: Tid) -> Option<&Transaction> {
        self.transactions.get((tid as usize).checked_sub(1)?)
    }

    pub fn label(&self, item: ItemId) -> &str {
        &self.labels[item as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn item_id(&self, label: &str) -> Option<ItemId> {
        self.ids.get(label).copied()
    }

    /// Looks up every label; fails on the first label outside Ω.
    pub fn itemset(&self, labels: &[&str]) -> Result<Itemset> {
        labels
            .iter()
            .map(|l| self.item_id(l).ok_or_else(|| Error::UnknownItem(l.to_string())))
            .collect()
    }

    fn check_items(&self, itemset: &Itemset) -> Result<()> {
        match itemset.iter().find(|&a| a as usize >= self.labels.len()) {
            Some(a) => Err(Error::UnknownItem(format!("#{a}"))),
            None => Ok(()),
        }
    }

    /// Tids of the transactions that contain `itemset`.
    pub fn cover(&self, itemset: &Itemset) -> Result<Vec<Tid>> {
        self.check_items(itemset)?;
        Ok(self
            .transactions
            .iter()
            .filter(|t| itemset.is_subset(&t.items))
            .map(|t| t.tid)
            .collect())
    }

    pub fn support(&self, itemset: &Itemset) -> Result<usize> {
        self.check_items(itemset)?;
        Ok(self
            .transactions
            .iter()
            .filter(|t| itemset.is_subset(&t.items))
            .count())
    }

    /// Builds the solution triple for `itemset`.
    pub fn solution(&self, itemset: Itemset) -> Result<MiningSolution> {
        let cover = self.cover(&itemset)?;
        Ok(MiningSolution {
            support: cover.len(),
            itemset,
            cover,
        })
    }

    /// Space-separated labels, or `{}` for the empty set.
    pub fn display(&self, itemset: &Itemset) -> String {
        if itemset.is_empty() {
            return "{}".to_string();
        }
        itemset.iter().map(|a| self.label(a)).collect::<Vec<_>>().join(" ")
    }
}

/// An itemset together with its cover and support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MiningSolution {
    pub itemset: Itemset,
    pub cover: Vec<Tid>,
    pub support: usize,
}

impl fmt::Display for Itemset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
