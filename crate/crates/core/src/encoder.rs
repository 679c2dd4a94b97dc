//! CNF encodings of frequent and closed frequent itemset mining.
//!
//! Variables are laid out as: one variable per item (`1..=|Ω|`, in Ω
//! order), one per transaction (`|Ω|+1..=|Ω|+m`, in tid order), then the
//! counter cells of the support constraint.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::cardinality::encode_at_least_k;
use crate::cnf::{Assignment, Clause, CnfFormula, Lit, Var};
use crate::error::{Error, Result};
use crate::mining::{ItemId, Itemset, MiningSolution, Tid, TransactionDb};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// All frequent itemsets.
    Fim,
    /// Closed frequent itemsets only.
    Cfim,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Fim => "fim",
            Variant::Cfim => "cfim",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s.to_ascii_lowercase().as_str() {
            "fim" => Ok(Variant::Fim),
            "cfim" => Ok(Variant::Cfim),
            _ => Err(Error::Config(format!("unknown variant {s:?}, expected fim or cfim"))),
        }
    }
}

/// Item, transaction and auxiliary variable ranges of an encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarMap {
    num_items: usize,
    num_transactions: usize,
    aux: Vec<Var>,
}

impl VarMap {
    pub fn new(db: &TransactionDb) -> VarMap {
        VarMap {
            num_items: db.num_items(),
            num_transactions: db.num_transactions(),
            aux: Vec::new(),
        }
    }

    /// The `p_a` variable of an item.
    pub fn item_var(&self, item: ItemId) -> Var {
        assert!((item as usize) < self.num_items);
        Var::new(item as usize + 1)
    }

    /// The `q_i` variable of a transaction.
    pub fn trans_var(&self, tid: Tid) -> Var {
        assert!(tid >= 1 && tid as usize <= self.num_transactions);
        Var::new(self.num_items + tid as usize)
    }

    pub fn item_vars(&self) -> Vec<Var> {
        (1..=self.num_items).map(Var::new).collect()
    }

    pub fn trans_vars(&self) -> Vec<Var> {
        (self.num_items + 1..=self.num_items + self.num_transactions)
            .map(Var::new)
            .collect()
    }

    pub fn aux_vars(&self) -> &[Var] {
        &self.aux
    }

    /// First index after items and transactions.
    pub fn first_aux_index(&self) -> usize {
        self.num_items + self.num_transactions + 1
    }

    pub fn num_vars(&self) -> usize {
        self.num_items + self.num_transactions + self.aux.len()
    }

    /// The item a variable stands for, if it is an item variable.
    pub fn item_of(&self, var: Var) -> Option<ItemId> {
        (var.index() <= self.num_items).then(|| var.index() as ItemId - 1)
    }
}

/// `¬q_i ↔ ⋁_{a ∉ I_i} p_a` for every transaction: the binary clauses
/// `(¬p_a ∨ ¬q_i)` followed by `(q_i ∨ ⋁ p_a)`.
pub fn encode_cover(db: &TransactionDb, var_map: &VarMap) -> Vec<Clause> {
    let mut clauses = Vec::new();
    for t in db.transactions() {
        let q = var_map.trans_var(t.tid);
        let missing: Vec<ItemId> = (0..db.num_items() as ItemId)
            .filter(|&a| !t.items.contains(a))
            .collect();
        for &a in &missing {
            clauses.push(clause([var_map.item_var(a).negative(), q.negative()]));
        }
        clauses.push(clause(
            std::iter::once(q.positive()).chain(missing.iter().map(|&a| var_map.item_var(a).positive())),
        ));
    }
    clauses
}

/// `(⋁_{a ∉ I_i} q_i) ∨ p_a` for every item: an item shared by the whole
/// cover must belong to the itemset.
pub fn encode_closure(db: &TransactionDb, var_map: &VarMap) -> Vec<Clause> {
    (0..db.num_items() as ItemId)
        .map(|a| {
            let qs = db
                .transactions()
                .iter()
                .filter(|t| !t.items.contains(a))
                .map(|t| var_map.trans_var(t.tid).positive());
            clause(qs.chain(std::iter::once(var_map.item_var(a).positive())))
        })
        .collect()
}

fn clause<I: IntoIterator<Item = Lit>>(lits: I) -> Clause {
    Clause::normalize(lits).expect("mining clauses never contain complementary literals")
}

/// A mining problem in CNF together with its variable layout.
#[derive(Clone, Debug)]
pub struct EncodedInstance<'db> {
    pub formula: CnfFormula,
    pub var_map: VarMap,
    pub db: &'db TransactionDb,
    pub threshold: usize,
    pub variant: Variant,
    pub exclude_empty: bool,
}

fn build<'db>(db: &'db TransactionDb, n: usize, variant: Variant, exclude_empty: bool) -> EncodedInstance<'db> {
    let mut var_map = VarMap::new(db);
    let mut formula = CnfFormula::new(var_map.first_aux_index() - 1);
    formula.extend(encode_cover(db, &var_map));
    if variant == Variant::Cfim {
        formula.extend(encode_closure(db, &var_map));
    }
    let card = encode_at_least_k(&var_map.trans_vars(), n, Var::new(var_map.first_aux_index()));
    var_map.aux = card.aux_vars().to_vec();
    formula.ensure_vars(var_map.num_vars());
    formula.extend(card.into_clauses());
    if exclude_empty {
        formula.push_clause(clause(var_map.item_vars().into_iter().map(Var::positive)));
    }
    EncodedInstance {
        formula,
        var_map,
        db,
        threshold: n,
        variant,
        exclude_empty,
    }
}

/// Frequent itemsets with support at least `n`.
pub fn encode_fim(db: &TransactionDb, n: usize) -> EncodedInstance<'_> {
    build(db, n, Variant::Fim, false)
}

/// Closed frequent itemsets with support at least `n`. With
/// `exclude_empty`, the clause `⋁ p_a` rules out the empty itemset.
pub fn encode_cfim(db: &TransactionDb, n: usize, exclude_empty: bool) -> EncodedInstance<'_> {
    build(db, n, Variant::Cfim, exclude_empty)
}

/// Dispatches on `variant`. `exclude_empty` only affects CFIM; frequent
/// itemsets always include the empty set.
pub fn encode(db: &TransactionDb, n: usize, variant: Variant, exclude_empty: bool) -> EncodedInstance<'_> {
    match variant {
        Variant::Fim => encode_fim(db, n),
        Variant::Cfim => encode_cfim(db, n, exclude_empty),
    }
}

impl EncodedInstance<'_> {
    /// The item variables; every other variable is fixed by them.
    pub fn projection(&self) -> Vec<Var> {
        self.var_map.item_vars()
    }

    /// Reads the itemset off the item variables without validation.
    pub fn decode_itemset(&self, model: &Assignment) -> Itemset {
        (0..self.db.num_items() as ItemId)
            .filter(|&a| model.value(self.var_map.item_var(a)) == Some(true))
            .collect()
    }

    /// Decodes a model into itemset, cover and support, checking that it
    /// satisfies the formula and that its transaction variables agree with
    /// the cover recomputed from the database.
    pub fn decode_model(&self, model: &Assignment) -> Result<MiningSolution> {
        if !model.is_total() || model.num_vars() < self.formula.num_vars() {
            return Err(Error::NotAModel("assignment is not total".into()));
        }
        if let Some(i) = self
            .formula
            .clauses()
            .iter()
            .position(|c| c.evaluate(model) != crate::cnf::Evaluation::Satisfied)
        {
            return Err(Error::NotAModel(format!("clause {} is falsified", i + 1)));
        }
        let itemset = self.decode_itemset(model);
        let cover: Vec<Tid> = self
            .db
            .transactions()
            .iter()
            .map(|t| t.tid)
            .filter(|&tid| model.value(self.var_map.trans_var(tid)) == Some(true))
            .collect();
        let expected = self.db.cover(&itemset)?;
        if cover != expected {
            return Err(Error::NotAModel(format!(
                "transaction variables {cover:?} disagree with the cover {expected:?}"
            )));
        }
        Ok(MiningSolution {
            support: cover.len(),
            itemset,
            cover,
        })
    }

    /// Sidecar text mapping item labels and tids to variables, one
    /// `p <label> <var>` or `q <tid> <var>` line each.
    pub fn write_var_map(&self) -> String {
        let mut out = String::new();
        for a in 0..self.db.num_items() as ItemId {
            let _ = writeln!(out, "p {} {}", self.db.label(a), self.var_map.item_var(a));
        }
        for t in self.db.transactions() {
            let _ = writeln!(out, "q {} {}", t.tid, self.var_map.trans_var(t.tid));
        }
        out
    }
}

/// Parsed variable-map sidecar.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SidecarMap {
    pub items: Vec<(String, Var)>,
    pub transactions: Vec<(Tid, Var)>,
}

impl SidecarMap {
    pub fn parse(text: &str) -> Result<SidecarMap> {
        let mut map = SidecarMap::default();
        for (idx, line) in text.lines().enumerate() {
            let err = |msg: &str| Error::VarMap {
                line: idx + 1,
                msg: msg.to_string(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            if fields.len() != 3 {
                return Err(err("expected three fields"));
            }
            let var: usize = fields[2].parse().map_err(|_| err("invalid variable"))?;
            if var == 0 {
                return Err(err("variables are 1-based"));
            }
            match fields[0] {
                "p" => map.items.push((fields[1].to_string(), Var::new(var))),
                "q" => {
                    let tid = fields[1].parse().map_err(|_| err("invalid tid"))?;
                    map.transactions.push((tid, Var::new(var)));
                }
                _ => return Err(err("line must start with p or q")),
            }
        }
        Ok(map)
    }

    pub fn item_vars(&self) -> Vec<Var> {
        self.items.iter().map(|&(_, v)| v).collect()
    }

    /// Labels of the items true in `model`, sorted.
    pub fn decode_labels(&self, model: &Assignment) -> Vec<String> {
        let mut labels: Vec<String> = self
            .items
            .iter()
            .filter(|(_, v)| model.value(*v) == Some(true))
            .map(|(l, _)| l.clone())
            .collect();
        labels.sort();
        labels
    }
}
