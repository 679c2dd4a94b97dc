//! DPLL-style model enumeration.
//!
//! The search branches on a decision set (the item variables for mining
//! instances), propagates with two watched literals and backtracks
//! chronologically both on conflicts and after each model: the deepest
//! decision whose other value has not been tried yet is flipped. No clause
//! is ever added, neither learned nor blocking, and there are no restarts,
//! so the clause store never grows beyond the input formula.
//!
//! Each projection of a model onto the decision set is reported once. When
//! the decision set does not determine every variable through propagation,
//! the remaining variables are searched existentially until one completion
//! is found.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cnf::{Assignment, Clause, CnfFormula, Lit, Var};
use crate::engine::{ClauseKind, Engine};
use crate::heap::VarHeap;
use crate::stats::{Budget, EnumerationStats, Heuristic, Limiter, Polarity};

pub const VSIDS_DECAY: f64 = 0.95;
pub const VSIDS_BUMP: f64 = 1.0;
const RESCALE_LIMIT: f64 = 1e100;

/// Outcome of running unit propagation to fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Propagation {
    Fixpoint,
    /// A clause with every literal false.
    Conflict(Clause),
}

enum Branching {
    JeroslowWang { order: Vec<Var> },
    Vsids { heap: VarHeap, activity: Vec<f64>, inc: f64 },
    Random { rng: Box<ChaCha8Rng>, scratch: Vec<Var> },
}

/// Two-sided Jeroslow-Wang score of every variable: the sum of
/// `2^-|c|` over the clauses mentioning it in either polarity.
pub fn jeroslow_wang_scores(formula: &CnfFormula) -> Vec<f64> {
    let mut score = vec![0.0; formula.num_vars() + 1];
    for clause in formula.clauses() {
        let w = 0.5f64.powi(clause.len() as i32);
        for lit in clause {
            score[lit.var().index()] += w;
        }
    }
    score
}

/// Every variable of the formula, for enumerating raw DIMACS instances.
pub fn all_vars(formula: &CnfFormula) -> Vec<Var> {
    (1..=formula.num_vars()).map(Var::new).collect()
}

pub struct DpllEnumerator {
    engine: Engine,
    is_decision: Vec<bool>,
    decision_vars: Vec<Var>,
    branching: Branching,
    polarity: Polarity,
    /// Per decision level: whether its decision is already the second value.
    flipped: Vec<bool>,
    stored_clauses: u64,
}

impl DpllEnumerator {
    pub fn new(formula: &CnfFormula, decision_set: &[Var], heuristic: Heuristic) -> DpllEnumerator {
        let n = formula.num_vars();
        let mut engine = Engine::new(n);
        for clause in formula.clauses() {
            engine.add_root_clause(clause.lits(), ClauseKind::Original);
        }

        let mut is_decision = vec![false; n + 1];
        let mut decision_vars = Vec::new();
        for &v in decision_set {
            assert!(v.index() <= n, "decision variable {v} outside the formula");
            if !is_decision[v.index()] {
                is_decision[v.index()] = true;
                decision_vars.push(v);
            }
        }
        decision_vars.sort();

        let branching = match heuristic {
            Heuristic::JeroslowWang => {
                let score = jeroslow_wang_scores(formula);
                let mut order = decision_vars.clone();
                // stable sort keeps lower indices first among equal scores
                order.sort_by(|a, b| score[b.index()].total_cmp(&score[a.index()]));
                Branching::JeroslowWang { order }
            }
            Heuristic::VsidsWeightsOnly => {
                let activity = vec![0.0; n + 1];
                let mut heap = VarHeap::new(n);
                for &v in &decision_vars {
                    heap.insert(v, &activity);
                }
                Branching::Vsids {
                    heap,
                    activity,
                    inc: VSIDS_BUMP,
                }
            }
            Heuristic::Random { seed } => Branching::Random {
                rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
                scratch: Vec::new(),
            },
        };

        DpllEnumerator {
            stored_clauses: engine.live_clauses(),
            engine,
            is_decision,
            decision_vars,
            branching,
            polarity: Polarity::default(),
            flipped: Vec::new(),
        }
    }

    pub fn with_polarity(mut self, polarity: Polarity) -> DpllEnumerator {
        self.polarity = polarity;
        self
    }

    pub fn value(&self, var: Var) -> Option<bool> {
        self.engine.value(var.positive())
    }

    pub fn decision_level(&self) -> u32 {
        self.engine.decision_level()
    }

    pub fn assignment(&self) -> Assignment {
        self.engine.assignment()
    }

    /// Clauses held by the enumerator. Never changes.
    pub fn stored_clauses(&self) -> u64 {
        self.engine.live_clauses()
    }

    /// VSIDS activity of `var`; zero for the other heuristics.
    pub fn activity(&self, var: Var) -> f64 {
        match &self.branching {
            Branching::Vsids { activity, .. } => activity[var.index()],
            _ => 0.0,
        }
    }

    pub fn propagate(&mut self) -> Propagation {
        if self.engine.root_conflict && self.engine.decision_level() == 0 {
            if let Some(c) = self.engine.clauses.iter().find(|c| {
                c.lits.iter().all(|&l| self.engine.value(l) == Some(false))
            }) {
                return Propagation::Conflict(Clause::normalize(c.lits.clone()).expect("stored clauses are normalized"));
            }
        }
        match self.engine.propagate() {
            None => Propagation::Fixpoint,
            Some(cref) => Propagation::Conflict(
                Clause::normalize(self.engine.clauses[cref as usize].lits.clone())
                    .expect("stored clauses are normalized"),
            ),
        }
    }

    /// Opens a decision level assigning `lit`.
    pub fn decide(&mut self, lit: Lit) {
        assert!(!self.engine.is_assigned(lit.var()), "{lit} is already assigned");
        self.engine.decide(lit);
        self.flipped.push(false);
    }

    /// Next decision literal from the decision set, or `None` once every
    /// decision variable is assigned.
    pub fn pick_branch(&mut self) -> Option<Lit> {
        let engine = &self.engine;
        let var = match &mut self.branching {
            Branching::JeroslowWang { order } => order.iter().copied().find(|&v| !engine.is_assigned(v)),
            Branching::Vsids { heap, activity, .. } => loop {
                match heap.pop(activity) {
                    None => break None,
                    Some(v) if !engine.is_assigned(v) => break Some(v),
                    Some(_) => {}
                }
            },
            Branching::Random { rng, scratch } => {
                scratch.clear();
                scratch.extend(self.decision_vars.iter().copied().filter(|&v| !engine.is_assigned(v)));
                (!scratch.is_empty()).then(|| scratch[rng.gen_range(0..scratch.len())])
            }
        }?;
        if let Branching::Vsids { heap, activity, .. } = &mut self.branching {
            // keep it available until it is actually assigned
            heap.insert(var, activity);
        }
        Some(var.lit(self.polarity.value()))
    }

    /// Lowest unassigned variable outside the decision set.
    fn pick_existential(&self) -> Option<Lit> {
        (1..=self.engine.num_vars())
            .map(Var::new)
            .find(|&v| !self.is_decision[v.index()] && !self.engine.is_assigned(v))
            .map(|v| v.lit(self.polarity.value()))
    }

    fn cancel_until(&mut self, level: u32) {
        let DpllEnumerator { engine, branching, is_decision, .. } = self;
        engine.cancel_until(level, |lit| {
            if let Branching::Vsids { heap, activity, .. } = branching {
                if is_decision[lit.var().index()] {
                    heap.insert(lit.var(), activity);
                }
            }
        });
        self.flipped.truncate(level as usize);
    }

    /// Flips the deepest decision not yet flipped. Returns false when every
    /// decision has been tried both ways.
    fn backtrack_flip(&mut self) -> bool {
        let Some(level) = self.flipped.iter().rposition(|&f| !f) else {
            return false;
        };
        let level = level as u32 + 1;
        let lit = self.engine.level_decision(level).expect("level exists");
        self.cancel_until(level - 1);
        self.engine.decide(!lit);
        self.flipped.push(true);
        true
    }

    /// Drops the existential levels sitting on top of the decision-set levels.
    fn leave_existential_levels(&mut self) {
        let mut level = self.engine.decision_level();
        while level > 0 {
            let lit = self.engine.level_decision(level).expect("level exists");
            if self.is_decision[lit.var().index()] {
                break;
            }
            level -= 1;
        }
        self.cancel_until(level);
    }

    fn on_conflict(&mut self, conflict: crate::engine::ClauseRef) {
        let Branching::Vsids { heap, activity, inc } = &mut self.branching else {
            return;
        };
        let bump = *inc;
        let mut rescale = false;
        self.engine.analyze(
            conflict,
            |v| {
                let a = &mut activity[v.index()];
                *a += bump;
                if *a > RESCALE_LIMIT {
                    rescale = true;
                }
                heap.increased(v, activity);
            },
            |_| {},
        );
        *inc /= VSIDS_DECAY;
        if rescale || *inc > RESCALE_LIMIT {
            for a in activity.iter_mut() {
                *a /= RESCALE_LIMIT;
            }
            *inc /= RESCALE_LIMIT;
        }
    }

    /// Enumerates every model projection onto the decision set, calling
    /// `on_model` with a full satisfying assignment for each.
    pub fn run<F: FnMut(&Assignment)>(&mut self, budget: &Budget, mut on_model: F) -> EnumerationStats {
        let mut limiter = Limiter::new(budget);
        let mut stats = EnumerationStats {
            peak_stored_clauses: self.stored_clauses,
            ..EnumerationStats::default()
        };
        let start_props = self.engine.propagations;
        let mut seen_props = start_props;

        let completed = loop {
            if self.engine.root_conflict && self.engine.decision_level() == 0 {
                break true;
            }
            let conflict = self.engine.propagate();
            let props = self.engine.propagations;
            let timed_out = limiter.tick(props - seen_props);
            seen_props = props;

            if let Some(cref) = conflict {
                stats.conflicts += 1;
                if self.engine.decision_level() == 0 {
                    break true;
                }
                self.on_conflict(cref);
                if !self.backtrack_flip() {
                    break true;
                }
                if limiter.out_of_conflicts(stats.conflicts) {
                    break false;
                }
                continue;
            }
            if timed_out {
                break false;
            }

            match self.pick_branch().or_else(|| self.pick_existential()) {
                Some(lit) => {
                    stats.decisions += 1;
                    limiter.tick(1);
                    self.engine.decide(lit);
                    self.flipped.push(false);
                }
                None => {
                    let model = self.engine.assignment();
                    stats.models_found += 1;
                    on_model(&model);
                    self.leave_existential_levels();
                    if !self.backtrack_flip() {
                        break true;
                    }
                    if limiter.out_of_models(stats.models_found) {
                        break false;
                    }
                }
            }
        };

        debug_assert_eq!(self.engine.live_clauses(), self.stored_clauses);
        stats.propagations = self.engine.propagations - start_props;
        stats.elapsed = limiter.elapsed();
        stats.completed = completed && !limiter.expired();
        stats
    }
}

/// Runs a fresh [`DpllEnumerator`] over `formula`.
pub fn enumerate<F: FnMut(&Assignment)>(
    formula: &CnfFormula,
    decision_set: &[Var],
    heuristic: Heuristic,
    budget: &Budget,
    on_model: F,
) -> EnumerationStats {
    DpllEnumerator::new(formula, decision_set, heuristic).run(budget, on_model)
}
