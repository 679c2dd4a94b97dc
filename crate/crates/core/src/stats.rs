use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::Error;

/// Branching heuristic of the DPLL enumerator.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Heuristic {
    /// VSIDS activities, bumped by conflict analysis whose learned clause is
    /// thrown away.
    VsidsWeightsOnly,
    /// Static two-sided Jeroslow-Wang occurrence score.
    JeroslowWang,
    /// Uniform choice among unassigned decision variables.
    Random { seed: u64 },
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Heuristic::VsidsWeightsOnly => f.write_str("vsids"),
            Heuristic::JeroslowWang => f.write_str("jw"),
            Heuristic::Random { seed } => write!(f, "rand({seed})"),
        }
    }
}

/// Value tried first when branching.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum Polarity {
    #[default]
    Negative,
    Positive,
}

impl Polarity {
    pub fn value(self) -> bool {
        self == Polarity::Positive
    }
}

impl FromStr for Polarity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "negative" | "neg" | "false" => Ok(Polarity::Negative),
            "positive" | "pos" | "true" => Ok(Polarity::Positive),
            _ => Err(Error::Config(format!("unknown polarity {s:?}"))),
        }
    }
}

/// Resource limits for one enumeration run. Every limit is optional.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub timeout: Option<Duration>,
    pub max_conflicts: Option<u64>,
    pub max_models: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn with_timeout(timeout: Duration) -> Budget {
        Budget {
            timeout: Some(timeout),
            ..Budget::default()
        }
    }
}

/// Counters collected during enumeration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub models_found: u64,
    pub conflicts: u64,
    pub decisions: u64,
    pub propagations: u64,
    /// Largest number of clauses held by the solver at any point, including
    /// the input clauses.
    pub peak_stored_clauses: u64,
    pub elapsed: Duration,
    /// False when a budget limit stopped the run; `models_found` is then a
    /// lower bound.
    pub completed: bool,
}

/// Steps between two clock reads.
pub(crate) const CLOCK_CHECK_INTERVAL: u64 = 1 << 12;

/// Tracks budget exhaustion; the clock is only read every
/// `CLOCK_CHECK_INTERVAL` steps.
pub(crate) struct Limiter {
    start: Instant,
    deadline: Option<Instant>,
    max_conflicts: Option<u64>,
    max_models: Option<u64>,
    steps: u64,
    expired: bool,
}

impl Limiter {
    pub(crate) fn new(budget: &Budget) -> Limiter {
        let start = Instant::now();
        Limiter {
            start,
            deadline: budget.timeout.map(|t| start + t),
            max_conflicts: budget.max_conflicts,
            max_models: budget.max_models,
            steps: 0,
            expired: false,
        }
    }

    /// Accounts for `n` propagation or decision steps.
    #[inline]
    pub(crate) fn tick(&mut self, n: u64) -> bool {
        let before = self.steps / CLOCK_CHECK_INTERVAL;
        self.steps += n;
        if self.steps / CLOCK_CHECK_INTERVAL != before {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.expired = true;
                }
            }
        }
        self.expired
    }

    pub(crate) fn out_of_conflicts(&mut self, conflicts: u64) -> bool {
        if self.max_conflicts.is_some_and(|m| conflicts >= m) {
            self.expired = true;
        }
        self.expired
    }

    pub(crate) fn out_of_models(&mut self, models: u64) -> bool {
        if self.max_models.is_some_and(|m| models >= m) {
            self.expired = true;
        }
        self.expired
    }

    pub(crate) fn expired(&self) -> bool {
        self.expired
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}
