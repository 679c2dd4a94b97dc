//! SAT-based frequent and closed itemset mining.
//!
//! A transaction database is encoded into CNF so that the models of the
//! formula, projected onto the item variables, are exactly the frequent
//! (or closed frequent) itemsets. Those models are then enumerated either
//! by a DPLL-style backtracking enumerator, which never stores a clause
//! beyond the input, or by a CDCL enumerator that blocks every model it
//! finds and restarts.
//!
//! ```
//! use satmine::{dpll, encoder, mining::TransactionDb, Budget, Heuristic};
//!
//! let db = TransactionDb::parse_fimi("A B C D\nA B E F\nA B C\nA C D F\nG\nD\nD G\n");
//! let instance = encoder::encode_cfim(&db, 2, true);
//! let mut found = Vec::new();
//! let stats = dpll::enumerate(
//!     &instance.formula,
//!     &instance.projection(),
//!     Heuristic::JeroslowWang,
//!     &Budget::unlimited(),
//!     |model| found.push(instance.decode_itemset(model)),
//! );
//! assert!(stats.completed);
//! assert_eq!(found.len(), 8);
//! ```

pub mod bench;
pub mod cardinality;
pub mod cdcl;
pub mod cnf;
pub mod dpll;
pub mod encoder;
mod engine;
mod error;
mod heap;
pub mod mining;
pub mod oracle;
mod stats;

pub use cnf::{Assignment, Clause, CnfFormula, Evaluation, Lit, Var};
pub use error::{Error, Result};
pub use stats::{Budget, EnumerationStats, Heuristic, Polarity};
