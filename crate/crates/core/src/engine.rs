//! Assignment trail, clause arena and two-watched-literal propagation shared
//! by both enumerators.

use crate::cnf::{Assignment, Lit, Var};

pub(crate) type ClauseRef = u32;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub(crate) enum ClauseKind {
    Original,
    Learned,
    Blocking,
}

#[derive(Clone, Debug)]
pub(crate) struct StoredClause {
    /// For a reason clause, `lits[0]` is the literal it implied.
    pub(crate) lits: Vec<Lit>,
    pub(crate) kind: ClauseKind,
    pub(crate) activity: f64,
    pub(crate) deleted: bool,
}

#[derive(Copy, Clone, Debug)]
struct Watcher {
    cref: ClauseRef,
    blocker: Lit,
}

const UNDEF: i8 = 0;
const TRUE: i8 = 1;
const FALSE: i8 = -1;

pub(crate) struct Engine {
    num_vars: usize,
    pub(crate) clauses: Vec<StoredClause>,
    /// `watches[l]` lists the clauses in which `l` is one of the two watched literals.
    watches: Vec<Vec<Watcher>>,
    vals: Vec<i8>,
    level: Vec<u32>,
    reason: Vec<Option<ClauseRef>>,
    pub(crate) trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,
    seen: Vec<bool>,
    live_clauses: u64,
    pub(crate) propagations: u64,
    /// Set once a contradiction is derived at the root.
    pub(crate) root_conflict: bool,
}

impl Engine {
    pub(crate) fn new(num_vars: usize) -> Engine {
        Engine {
            num_vars,
            clauses: Vec::new(),
            watches: vec![Vec::new(); 2 * (num_vars + 1)],
            vals: vec![UNDEF; 2 * (num_vars + 1)],
            level: vec![0; num_vars + 1],
            reason: vec![None; num_vars + 1],
            trail: Vec::with_capacity(num_vars),
            trail_lim: Vec::new(),
            qhead: 0,
            seen: vec![false; num_vars + 1],
            live_clauses: 0,
            propagations: 0,
            root_conflict: false,
        }
    }

    pub(crate) fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Clauses currently held, deleted ones excluded.
    pub(crate) fn live_clauses(&self) -> u64 {
        self.live_clauses
    }

    #[inline]
    pub(crate) fn value(&self, lit: Lit) -> Option<bool> {
        match self.vals[lit.code()] {
            TRUE => Some(true),
            FALSE => Some(false),
            _ => None,
        }
    }

    #[inline]
    pub(crate) fn is_assigned(&self, var: Var) -> bool {
        self.vals[var.positive().code()] != UNDEF
    }

    #[inline]
    pub(crate) fn reason(&self, var: Var) -> Option<ClauseRef> {
        self.reason[var.index()]
    }

    #[inline]
    pub(crate) fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    /// First literal assigned at `level` (its decision), if the level exists.
    pub(crate) fn level_decision(&self, level: u32) -> Option<Lit> {
        if level == 0 {
            return None;
        }
        self.trail_lim.get(level as usize - 1).and_then(|&i| self.trail.get(i)).copied()
    }

    pub(crate) fn assignment(&self) -> Assignment {
        Assignment::from_lits(self.num_vars, self.trail.iter().copied())
    }

    #[inline]
    pub(crate) fn enqueue(&mut self, lit: Lit, reason: Option<ClauseRef>) {
        debug_assert_eq!(self.vals[lit.code()], UNDEF);
        self.vals[lit.code()] = TRUE;
        self.vals[(!lit).code()] = FALSE;
        let v = lit.var().index();
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(lit);
    }

    /// Opens a new decision level and assigns `lit` as its decision.
    pub(crate) fn decide(&mut self, lit: Lit) {
        self.trail_lim.push(self.trail.len());
        self.enqueue(lit, None);
    }

    /// Undoes every level above `level`. `on_unassign` sees each literal
    /// removed from the trail.
    pub(crate) fn cancel_until(&mut self, level: u32, mut on_unassign: impl FnMut(Lit)) {
        if self.decision_level() <= level {
            return;
        }
        let start = self.trail_lim[level as usize];
        for &lit in self.trail[start..].iter().rev() {
            self.vals[lit.code()] = UNDEF;
            self.vals[(!lit).code()] = UNDEF;
            self.reason[lit.var().index()] = None;
            on_unassign(lit);
        }
        self.trail.truncate(start);
        self.trail_lim.truncate(level as usize);
        self.qhead = self.qhead.min(start);
    }

    fn push_clause(&mut self, lits: Vec<Lit>, kind: ClauseKind) -> ClauseRef {
        let cref = self.clauses.len() as ClauseRef;
        self.clauses.push(StoredClause {
            lits,
            kind,
            activity: 0.0,
            deleted: false,
        });
        self.live_clauses += 1;
        cref
    }

    fn watch(&mut self, cref: ClauseRef) {
        let (a, b) = {
            let lits = &self.clauses[cref as usize].lits;
            (lits[0], lits[1])
        };
        self.watches[a.code()].push(Watcher { cref, blocker: b });
        self.watches[b.code()].push(Watcher { cref, blocker: a });
    }

    /// Adds a clause while at decision level 0. Literals already false at
    /// the root are dropped; a clause already true at the root is stored but
    /// not watched. Returns false if the clause is in conflict with the root
    /// assignment.
    pub(crate) fn add_root_clause(&mut self, lits: &[Lit], kind: ClauseKind) -> bool {
        debug_assert_eq!(self.decision_level(), 0);
        let satisfied = lits.iter().any(|&l| self.value(l) == Some(true));
        let kept: Vec<Lit> = lits
            .iter()
            .copied()
            .filter(|&l| self.value(l) != Some(false))
            .collect();
        let unit = (kept.len() == 1 && !satisfied).then(|| kept[0]);
        let empty = kept.is_empty();
        let watched = kept.len() >= 2 && !satisfied;
        let cref = self.push_clause(if empty { lits.to_vec() } else { kept }, kind);
        if empty {
            self.root_conflict = true;
            return false;
        }
        if let Some(lit) = unit {
            self.enqueue(lit, Some(cref));
        } else if watched {
            self.watch(cref);
        }
        true
    }

    /// Stores an asserting clause after backjumping: `lits[0]` must be
    /// unassigned and every other literal false. Assigns `lits[0]`.
    pub(crate) fn add_asserting_clause(&mut self, lits: Vec<Lit>, kind: ClauseKind) -> ClauseRef {
        debug_assert!(lits.len() >= 2);
        let first = lits[0];
        let cref = self.push_clause(lits, kind);
        self.watch(cref);
        self.enqueue(first, Some(cref));
        cref
    }

    /// Marks clauses as deleted and rebuilds the watch lists without them.
    pub(crate) fn delete_clauses(&mut self, crefs: &[ClauseRef]) {
        if crefs.is_empty() {
            return;
        }
        for &cref in crefs {
            let c = &mut self.clauses[cref as usize];
            if !c.deleted {
                c.deleted = true;
                c.lits = Vec::new();
                self.live_clauses -= 1;
            }
        }
        let clauses = &self.clauses;
        for list in &mut self.watches {
            list.retain(|w| !clauses[w.cref as usize].deleted);
        }
    }

    /// True if `cref` is the reason of a current assignment.
    pub(crate) fn is_locked(&self, cref: ClauseRef) -> bool {
        let c = &self.clauses[cref as usize];
        !c.deleted
            && c.lits.first().is_some_and(|&l| {
                self.value(l) == Some(true) && self.reason(l.var()) == Some(cref)
            })
    }

    /// Unit propagation to fixpoint. Returns the falsified clause on conflict.
    pub(crate) fn propagate(&mut self) -> Option<ClauseRef> {
        let mut conflict = None;
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            self.propagations += 1;
            let false_lit = !p;
            let mut watchers = std::mem::take(&mut self.watches[false_lit.code()]);
            let mut kept = 0;
            let mut i = 0;
            while i < watchers.len() {
                let w = watchers[i];
                i += 1;
                if self.vals[w.blocker.code()] == TRUE {
                    watchers[kept] = w;
                    kept += 1;
                    continue;
                }
                let clause = &mut self.clauses[w.cref as usize];
                if clause.deleted {
                    continue;
                }
                let lits = &mut clause.lits;
                if lits[0] == false_lit {
                    lits.swap(0, 1);
                }
                let first = lits[0];
                if first != w.blocker && self.vals[first.code()] == TRUE {
                    watchers[kept] = Watcher {
                        cref: w.cref,
                        blocker: first,
                    };
                    kept += 1;
                    continue;
                }
                let mut moved = false;
                for k in 2..lits.len() {
                    if self.vals[lits[k].code()] != FALSE {
                        lits.swap(1, k);
                        let new_watch = lits[1];
                        self.watches[new_watch.code()].push(Watcher {
                            cref: w.cref,
                            blocker: first,
                        });
                        moved = true;
                        break;
                    }
                }
                if moved {
                    continue;
                }
                watchers[kept] = Watcher {
                    cref: w.cref,
                    blocker: first,
                };
                kept += 1;
                if self.vals[first.code()] == FALSE {
                    conflict = Some(w.cref);
                    while i < watchers.len() {
                        watchers[kept] = watchers[i];
                        kept += 1;
                        i += 1;
                    }
                    self.qhead = self.trail.len();
                } else {
                    self.enqueue(first, Some(w.cref));
                }
            }
            watchers.truncate(kept);
            self.watches[false_lit.code()] = watchers;
            if conflict.is_some() {
                break;
            }
        }
        if conflict.is_some() && self.decision_level() == 0 {
            self.root_conflict = true;
        }
        conflict
    }

    /// First-UIP conflict analysis. Calls `bump_var` once for every variable
    /// met during resolution and `bump_clause` for every clause resolved on.
    /// Returns the asserting clause (asserting literal first, a literal of
    /// the backjump level second) and the backjump level.
    pub(crate) fn analyze(
        &mut self,
        conflict: ClauseRef,
        mut bump_var: impl FnMut(Var),
        mut bump_clause: impl FnMut(ClauseRef),
    ) -> (Vec<Lit>, u32) {
        let current = self.decision_level();
        debug_assert!(current > 0);
        let mut learnt: Vec<Lit> = vec![Lit::new(Var::new(1), true)];
        let mut path = 0usize;
        let mut index = self.trail.len();
        let mut pivot: Option<Lit> = None;
        let mut cref = conflict;

        loop {
            bump_clause(cref);
            let lits = &self.clauses[cref as usize].lits;
            let skip = usize::from(pivot.is_some());
            for &q in &lits[skip..] {
                let v = q.var();
                if self.seen[v.index()] || self.level[v.index()] == 0 {
                    continue;
                }
                self.seen[v.index()] = true;
                bump_var(v);
                if self.level[v.index()] >= current {
                    path += 1;
                } else {
                    learnt.push(q);
                }
            }
            loop {
                index -= 1;
                if self.seen[self.trail[index].var().index()] {
                    break;
                }
            }
            let p = self.trail[index];
            self.seen[p.var().index()] = false;
            path -= 1;
            pivot = Some(p);
            if path == 0 {
                break;
            }
            cref = self.reason[p.var().index()].expect("only the decision of a level lacks a reason");
        }
        learnt[0] = !pivot.expect("analysis visits at least one literal");

        let mut backjump = 0;
        if learnt.len() > 1 {
            let mut max_i = 1;
            for i in 2..learnt.len() {
                if self.level[learnt[i].var().index()] > self.level[learnt[max_i].var().index()] {
                    max_i = i;
                }
            }
            learnt.swap(1, max_i);
            backjump = self.level[learnt[1].var().index()];
        }
        for lit in &learnt[1..] {
            self.seen[lit.var().index()] = false;
        }
        (learnt, backjump)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(v: i64) -> Lit {
        Lit::from_dimacs(v)
    }

    #[test]
    fn root_unit_and_conflict() {
        let mut e = Engine::new(2);
        assert!(e.add_root_clause(&[l(1)], ClauseKind::Original));
        assert!(e.add_root_clause(&[l(-1), l(2)], ClauseKind::Original));
        assert_eq!(e.propagate(), None);
        assert_eq!(e.value(l(2)), Some(true));
        assert!(!e.add_root_clause(&[l(-2)], ClauseKind::Original));
        assert!(e.root_conflict);
    }

    #[test]
    fn propagation_chain_records_reasons() {
        let mut e = Engine::new(3);
        e.add_root_clause(&[l(-1), l(2)], ClauseKind::Original);
        e.add_root_clause(&[l(-2), l(3)], ClauseKind::Original);
        e.decide(l(1));
        assert_eq!(e.propagate(), None);
        assert_eq!(e.trail, vec![l(1), l(2), l(3)]);
        assert_eq!(e.reason(Var::new(3)), Some(1));
        assert_eq!(e.clauses[1].lits[0], l(3));
        e.cancel_until(0, |_| {});
        assert!(e.trail.is_empty());
        assert_eq!(e.value(l(2)), None);
    }

    #[test]
    fn analyze_single_decision_level() {
        // 1 -> 2, 1 -> 3, (¬2 ∨ ¬3) conflicts
        let mut e = Engine::new(3);
        e.add_root_clause(&[l(-1), l(2)], ClauseKind::Original);
        e.add_root_clause(&[l(-1), l(3)], ClauseKind::Original);
        e.add_root_clause(&[l(-2), l(-3)], ClauseKind::Original);
        e.decide(l(1));
        let c = e.propagate().expect("conflict");
        let (learnt, level) = e.analyze(c, |_| {}, |_| {});
        assert_eq!(learnt, vec![l(-1)]);
        assert_eq!(level, 0);
    }
}
