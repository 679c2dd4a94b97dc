use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("DIMACS line {line}: {msg}")]
    Dimacs { line: usize, msg: String },

    #[error("variable map line {line}: {msg}")]
    VarMap { line: usize, msg: String },

    #[error("item {0} is not part of the database universe")]
    UnknownItem(String),

    #[error("{what} has {size} elements, exhaustive search is limited to {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("closed itemsets require a minimum support of at least 1")]
    ZeroSupport,

    #[error("itemset has zero support")]
    UnsupportedItemset,

    #[error("assignment is not a model: {0}")]
    NotAModel(String),

    #[error("invalid threshold {0:?}")]
    Threshold(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
