//! Model enumeration with a CDCL solver and blocking clauses.
//!
//! Each model is found by a complete CDCL search (first-UIP learning,
//! VSIDS, phase saving, Luby restarts). Once reported, the model is ruled
//! out by a blocking clause over the projection and the solver restarts
//! from the root. Blocking clauses are kept for the whole run, so the
//! clause store grows at least linearly with the number of models.

use crate::cnf::{Assignment, Clause, CnfFormula, Lit, Var};
use crate::engine::{ClauseKind, ClauseRef, Engine};
use crate::heap::VarHeap;
use crate::stats::{Budget, EnumerationStats, Limiter};

/// Which variables a blocking clause ranges over.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum BlockingMode {
    /// The projection given to the enumerator.
    #[default]
    Projection,
    /// Every variable of the formula.
    FullModel,
}

#[derive(Clone, Debug)]
pub struct CdclConfig {
    pub var_decay: f64,
    pub clause_decay: f64,
    /// Conflicts per Luby unit.
    pub restart_unit: u64,
    /// Conflicts before the first learned-clause reduction; the gap doubles
    /// after every reduction.
    pub reduce_interval: u64,
    pub phase_saving: bool,
    pub blocking: BlockingMode,
}

impl Default for CdclConfig {
    fn default() -> CdclConfig {
        CdclConfig {
            var_decay: 0.95,
            clause_decay: 0.999,
            restart_unit: 100,
            reduce_interval: 4000,
            phase_saving: true,
            blocking: BlockingMode::Projection,
        }
    }
}

/// The `i`-th element (0-based) of the Luby sequence 1 1 2 1 1 2 4 ...
pub fn luby(mut i: u64) -> u64 {
    let mut size = 1u64;
    let mut seq = 0u32;
    while size < i + 1 {
        seq += 1;
        size = 2 * size + 1;
    }
    while size - 1 != i {
        size = (size - 1) >> 1;
        seq -= 1;
        i %= size;
    }
    1 << seq
}

/// Negation of `model` restricted to `projection`: satisfied by every
/// assignment except those agreeing with the model on the projection.
pub fn make_blocking_clause(model: &Assignment, projection: &[Var]) -> Clause {
    Clause::normalize(
        projection
            .iter()
            .map(|&v| !v.lit(model.value(v).expect("blocking a partial assignment"))),
    )
    .expect("a negated assignment is never a tautology")
}

/// Result of one call to [`CdclEnumerator::next_model`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Model(Assignment),
    Unsat,
    Interrupted,
}

pub struct CdclEnumerator {
    engine: Engine,
    config: CdclConfig,
    projection: Vec<Var>,
    activity: Vec<f64>,
    heap: VarHeap,
    var_inc: f64,
    cla_inc: f64,
    phase: Vec<bool>,
    learnts: Vec<ClauseRef>,
    blocking: Vec<Clause>,
    conflicts: u64,
    decisions: u64,
    restarts: u64,
    restart_index: u64,
    conflicts_since_restart: u64,
    next_reduce: u64,
    reduce_gap: u64,
    peak_clauses: u64,
    exhausted: bool,
}

impl CdclEnumerator {
    pub fn new(formula: &CnfFormula, projection: &[Var]) -> CdclEnumerator {
        CdclEnumerator::with_config(formula, projection, CdclConfig::default())
    }

    pub fn with_config(formula: &CnfFormula, projection: &[Var], config: CdclConfig) -> CdclEnumerator {
        let n = formula.num_vars();
        let mut engine = Engine::new(n);
        for clause in formula.clauses() {
            engine.add_root_clause(clause.lits(), ClauseKind::Original);
        }
        let activity = vec![0.0; n + 1];
        let mut heap = VarHeap::new(n);
        for v in 1..=n {
            heap.insert(Var::new(v), &activity);
        }
        let projection = match config.blocking {
            BlockingMode::Projection => projection.to_vec(),
            BlockingMode::FullModel => (1..=n).map(Var::new).collect(),
        };
        CdclEnumerator {
            peak_clauses: engine.live_clauses(),
            exhausted: engine.root_conflict,
            engine,
            projection,
            activity,
            heap,
            var_inc: 1.0,
            cla_inc: 1.0,
            phase: vec![false; n + 1],
            learnts: Vec::new(),
            blocking: Vec::new(),
            conflicts: 0,
            decisions: 0,
            restarts: 0,
            restart_index: 0,
            conflicts_since_restart: 0,
            next_reduce: config.reduce_interval,
            reduce_gap: config.reduce_interval,
            config,
        }
    }

    pub fn conflicts(&self) -> u64 {
        self.conflicts
    }

    pub fn restarts(&self) -> u64 {
        self.restarts
    }

    pub fn stored_clauses(&self) -> u64 {
        self.engine.live_clauses()
    }

    pub fn peak_stored_clauses(&self) -> u64 {
        self.peak_clauses
    }

    /// Blocking clauses added so far, one per reported model.
    pub fn blocking_clauses(&self) -> &[Clause] {
        &self.blocking
    }

    /// Conflict-learned clauses that are still stored.
    pub fn learned_clauses(&self) -> Vec<Clause> {
        self.learnts
            .iter()
            .map(|&c| &self.engine.clauses[c as usize])
            .filter(|c| !c.deleted)
            .filter_map(|c| Clause::normalize(c.lits.clone()))
            .collect()
    }

    fn note_clause_count(&mut self) {
        self.peak_clauses = self.peak_clauses.max(self.engine.live_clauses());
    }

    fn cancel_until(&mut self, level: u32) {
        let CdclEnumerator {
            engine,
            heap,
            activity,
            phase,
            config,
            ..
        } = self;
        engine.cancel_until(level, |lit| {
            if config.phase_saving {
                phase[lit.var().index()] = lit.is_positive();
            }
            heap.insert(lit.var(), activity);
        });
    }

    fn bump_var(activity: &mut [f64], heap: &mut VarHeap, inc: &mut f64, var: Var) {
        activity[var.index()] += *inc;
        if activity[var.index()] > 1e100 {
            for a in activity.iter_mut() {
                *a *= 1e-100;
            }
            *inc *= 1e-100;
        }
        heap.increased(var, activity);
    }

    /// First-UIP analysis of `conflict`: the asserting clause (asserting
    /// literal first) and the level to backjump to.
    fn analyze_conflict(&mut self, conflict: ClauseRef) -> (Vec<Lit>, u32) {
        let CdclEnumerator {
            engine,
            activity,
            heap,
            var_inc,
            cla_inc,
            ..
        } = self;
        let mut used: Vec<ClauseRef> = Vec::new();
        let result = engine.analyze(
            conflict,
            |v| Self::bump_var(activity, heap, var_inc, v),
            |c| used.push(c),
        );
        let mut rescale = false;
        for c in used {
            let clause = &mut engine.clauses[c as usize];
            if clause.kind == ClauseKind::Learned {
                clause.activity += *cla_inc;
                rescale |= clause.activity > 1e20;
            }
        }
        if rescale {
            for &c in &self.learnts {
                self.engine.clauses[c as usize].activity *= 1e-20;
            }
            self.cla_inc *= 1e-20;
        }
        result
    }

    fn decay(&mut self) {
        self.var_inc /= self.config.var_decay;
        self.cla_inc /= self.config.clause_decay;
    }

    /// Halves the conflict-learned clauses, dropping the least active ones
    /// that are not currently reasons. Blocking clauses are never touched.
    fn reduce_learned(&mut self) {
        self.learnts.retain(|&c| !self.engine.clauses[c as usize].deleted);
        let mut candidates: Vec<ClauseRef> = self
            .learnts
            .iter()
            .copied()
            .filter(|&c| !self.engine.is_locked(c) && self.engine.clauses[c as usize].lits.len() > 2)
            .collect();
        candidates.sort_by(|&a, &b| {
            let (x, y) = (&self.engine.clauses[a as usize], &self.engine.clauses[b as usize]);
            x.activity.total_cmp(&y.activity)
        });
        let remove = &candidates[..(self.learnts.len() / 2).min(candidates.len())];
        self.engine.delete_clauses(remove);
        self.learnts.retain(|&c| !self.engine.clauses[c as usize].deleted);
    }

    fn pick_branch(&mut self) -> Option<Lit> {
        loop {
            let v = self.heap.pop(&self.activity)?;
            if !self.engine.is_assigned(v) {
                return Some(v.lit(self.phase[v.index()]));
            }
        }
    }

    fn restart_limit(&self) -> u64 {
        luby(self.restart_index) * self.config.restart_unit
    }

    /// Searches for the next model. The caller blocks it (or not) before
    /// calling again.
    fn search(&mut self, limiter: &mut Limiter) -> SolveOutcome {
        if self.exhausted {
            return SolveOutcome::Unsat;
        }
        let mut seen_props = self.engine.propagations;
        loop {
            let conflict = self.engine.propagate();
            let props = self.engine.propagations;
            let timed_out = limiter.tick(props - seen_props);
            seen_props = props;

            if let Some(confl) = conflict {
                self.conflicts += 1;
                self.conflicts_since_restart += 1;
                if self.engine.decision_level() == 0 {
                    self.exhausted = true;
                    return SolveOutcome::Unsat;
                }
                let (learnt, level) = self.analyze_conflict(confl);
                self.cancel_until(level);
                if learnt.len() == 1 {
                    self.engine.enqueue(learnt[0], None);
                } else {
                    let cref = self.engine.add_asserting_clause(learnt, ClauseKind::Learned);
                    self.engine.clauses[cref as usize].activity = self.cla_inc;
                    self.learnts.push(cref);
                    self.note_clause_count();
                }
                self.decay();
                if limiter.out_of_conflicts(self.conflicts) {
                    return SolveOutcome::Interrupted;
                }
                continue;
            }
            if timed_out {
                return SolveOutcome::Interrupted;
            }

            if self.conflicts_since_restart >= self.restart_limit() {
                self.conflicts_since_restart = 0;
                self.restart_index += 1;
                self.restarts += 1;
                self.cancel_until(0);
                continue;
            }
            if self.conflicts >= self.next_reduce {
                self.reduce_gap *= 2;
                self.next_reduce = self.conflicts + self.reduce_gap;
                self.reduce_learned();
            }

            match self.pick_branch() {
                Some(lit) => {
                    self.decisions += 1;
                    limiter.tick(1);
                    self.engine.decide(lit);
                }
                None => return SolveOutcome::Model(self.engine.assignment()),
            }
        }
    }

    /// Adds the blocking clause of `model` and restarts from the root.
    pub fn block(&mut self, model: &Assignment) {
        let clause = make_blocking_clause(model, &self.projection);
        self.cancel_until(0);
        self.restarts += 1;
        if !self.engine.add_root_clause(clause.lits(), ClauseKind::Blocking) {
            self.exhausted = true;
        }
        self.blocking.push(clause);
        self.note_clause_count();
    }

    /// Finds one model without blocking it.
    pub fn next_model(&mut self, budget: &Budget) -> SolveOutcome {
        self.search(&mut Limiter::new(budget))
    }

    /// Enumerates all projections: solve, report, block, restart, until the
    /// formula becomes unsatisfiable or the budget runs out.
    pub fn run<F: FnMut(&Assignment)>(&mut self, budget: &Budget, mut on_model: F) -> EnumerationStats {
        let mut limiter = Limiter::new(budget);
        let start_props = self.engine.propagations;
        let (start_conflicts, start_decisions) = (self.conflicts, self.decisions);
        let mut models = 0u64;
        let completed = loop {
            match self.search(&mut limiter) {
                SolveOutcome::Model(model) => {
                    models += 1;
                    on_model(&model);
                    self.block(&model);
                    if limiter.out_of_models(models) {
                        break false;
                    }
                }
                SolveOutcome::Unsat => break true,
                SolveOutcome::Interrupted => break false,
            }
        };
        EnumerationStats {
            models_found: models,
            conflicts: self.conflicts - start_conflicts,
            decisions: self.decisions - start_decisions,
            propagations: self.engine.propagations - start_props,
            peak_stored_clauses: self.peak_clauses,
            elapsed: limiter.elapsed(),
            completed: completed && !limiter.expired(),
        }
    }
}

/// Runs a fresh [`CdclEnumerator`] with blocking over `projection`.
pub fn enumerate_blocking<F: FnMut(&Assignment)>(
    formula: &CnfFormula,
    projection: &[Var],
    budget: &Budget,
    on_model: F,
) -> EnumerationStats {
    CdclEnumerator::new(formula, projection).run(budget, on_model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoder::encode_cfim;
    use crate::mining::TransactionDb;

    const TABLE1: &str = "A B C D\nA B E F\nA B C\nA C D F\nG\nD\nD G\n";

    fn l(v: i64) -> Lit {
        Lit::from_dimacs(v)
    }

    fn formula(num_vars: usize, clauses: &[&[i64]]) -> CnfFormula {
        let mut f = CnfFormula::new(num_vars);
        for c in clauses {
            f.add_clause(c.iter().map(|&v| l(v)));
        }
        f
    }

    #[test]
    fn luby_prefix() {
        let seq: Vec<u64> = (0..15).map(luby).collect();
        assert_eq!(seq, vec![1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8]);
    }

    #[test]
    fn single_decision_is_its_own_uip() {
        // deciding ¬1 forces 2 and 3, which clash
        let f = formula(3, &[&[1, 2], &[1, 3], &[-2, -3]]);
        let mut s = CdclEnumerator::new(&f, &[]);
        assert!(s.engine.propagate().is_none());
        s.engine.decide(l(-1));
        let confl = s.engine.propagate().expect("conflict");
        let (learnt, level) = s.analyze_conflict(confl);
        assert_eq!(learnt, vec![l(1)]);
        assert_eq!(level, 0);
    }

    #[test]
    fn assertion_level_is_second_highest() {
        // level 1: ¬4; level 2: ¬1 -> 2, 3 (with 4 false) -> conflict on (¬2 ∨ ¬3 ∨ 4)
        let f = formula(4, &[&[1, 2], &[1, 3], &[-2, -3, 4]]);
        let mut s = CdclEnumerator::new(&f, &[]);
        s.engine.decide(l(-4));
        assert!(s.engine.propagate().is_none());
        s.engine.decide(l(-1));
        let confl = s.engine.propagate().expect("conflict");
        let (learnt, level) = s.analyze_conflict(confl);
        assert_eq!(learnt[0], l(1));
        assert_eq!(learnt.len(), 2);
        assert_eq!(learnt[1], l(4));
        assert_eq!(level, 1);
    }

    #[test]
    fn blocking_clause_shapes() {
        let db = TransactionDb::parse_fimi(TABLE1);
        let inst = encode_cfim(&db, 2, true);
        let proj = inst.projection();
        let mut model = Assignment::new(inst.formula.num_vars());
        for v in 1..=inst.formula.num_vars() {
            model.set(Var::new(v), Some(v <= 2));
        }
        let c = make_blocking_clause(&model, &proj);
        let expected: Vec<Lit> = (1..=7).map(|v| Var::new(v).lit(v > 2)).collect();
        assert_eq!(c.lits(), expected.as_slice());

        let full = make_blocking_clause(&model, &crate::dpll::all_vars(&inst.formula));
        assert_eq!(full.len(), inst.formula.num_vars());
    }

    #[test]
    fn table1_closed_then_unsat() {
        let db = TransactionDb::parse_fimi(TABLE1);
        let inst = encode_cfim(&db, 2, true);
        let mut s = CdclEnumerator::new(&inst.formula, &inst.projection());
        let mut found = Vec::new();
        let stats = s.run(&Budget::unlimited(), |m| found.push(inst.decode_model(m).unwrap().itemset));
        assert!(stats.completed);
        assert_eq!(stats.models_found, 8);
        assert_eq!(s.blocking_clauses().len(), 8);
        found.sort();
        found.dedup();
        assert_eq!(found.len(), 8);
        assert_eq!(s.next_model(&Budget::unlimited()), SolveOutcome::Unsat);
        assert!(stats.peak_stored_clauses >= inst.formula.num_clauses() as u64 + 8);
    }

    #[test]
    fn unsat_input() {
        for f in [formula(1, &[&[1], &[-1]]), formula(0, &[&[]]), formula(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]])] {
            let stats = enumerate_blocking(&f, &crate::dpll::all_vars(&f), &Budget::unlimited(), |_| {
                panic!("no model expected")
            });
            assert!(stats.completed);
            assert_eq!(stats.models_found, 0);
        }
    }

    #[test]
    fn empty_projection_reports_one_model() {
        let f = formula(3, &[&[1, 2, 3]]);
        let stats = enumerate_blocking(&f, &[], &Budget::unlimited(), |m| assert!(f.is_model(m)));
        assert_eq!(stats.models_found, 1);
        assert!(stats.completed);
    }

    #[test]
    fn full_model_blocking_counts_every_model() {
        let f = formula(3, &[&[1, 2, 3]]);
        let config = CdclConfig {
            blocking: BlockingMode::FullModel,
            ..CdclConfig::default()
        };
        let mut s = CdclEnumerator::with_config(&f, &[], config);
        assert_eq!(s.run(&Budget::unlimited(), |_| {}).models_found, 7);
    }

    #[test]
    fn model_budget() {
        let f = formula(8, &[]);
        let budget = Budget {
            max_models: Some(3),
            ..Budget::default()
        };
        let stats = enumerate_blocking(&f, &crate::dpll::all_vars(&f), &budget, |_| {});
        assert_eq!(stats.models_found, 3);
        assert!(!stats.completed);
    }
}
