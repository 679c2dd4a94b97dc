//! At-least-k constraints as a sequential unary counter.
//!
//! Cell `s(i, j)` is defined to be true iff at least `j` of the first `i`
//! inputs are true. Every cell is tied to its predecessors in both
//! directions:
//!
//! ```text
//! s(i, j)  <->  s(i-1, j)  \/  (x_i /\ s(i-1, j-1))
//! ```
//!
//! with `s(i, 0)` true and `s(i, j)` false for `j > i`. The last cell
//! `s(m, k)` is asserted. Because every cell is defined and not merely
//! implied, the input values fix the counter completely, and unit
//! propagation alone derives it once all inputs are assigned.
//!
//! Only cells that can still influence `s(m, k)` are materialized:
//! row `i` holds `j` in `max(1, k - (m - i)) ..= min(i, k)`.

use crate::cnf::{Clause, Lit, Var};
use crate::error::{Error, Result};

/// Exhaustive counting is limited to this many inputs.
pub const MAX_EXHAUSTIVE_INPUTS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardinalityEncoding {
    inputs: Vec<Var>,
    bound: usize,
    aux: Vec<Var>,
    clauses: Vec<Clause>,
}

#[derive(Copy, Clone)]
enum Cell {
    True,
    False,
    Var(Var),
}

struct Grid {
    m: usize,
    k: usize,
    /// First variable of each row, rows 1..=m at positions 0..m.
    row_start: Vec<usize>,
}

impl Grid {
    fn lo(&self, i: usize) -> usize {
        (self.k + i).saturating_sub(self.m).max(1)
    }

    fn hi(&self, i: usize) -> usize {
        i.min(self.k)
    }

    fn cell(&self, i: usize, j: usize) -> Cell {
        if j == 0 {
            return Cell::True;
        }
        if j > i {
            return Cell::False;
        }
        debug_assert!(j >= self.lo(i) && j <= self.hi(i), "pruned cell s({i},{j}) referenced");
        Cell::Var(Var::new(self.row_start[i - 1] + j - self.lo(i)))
    }
}

/// Encodes "at least `k` of `vars` are true". Auxiliary variables are
/// numbered from `next_free_var` upward, which must exceed every input.
pub fn encode_at_least_k(vars: &[Var], k: usize, next_free_var: Var) -> CardinalityEncoding {
    assert!(
        vars.iter().all(|&v| v < next_free_var),
        "auxiliary variables must follow the inputs"
    );
    let m = vars.len();
    let mut enc = CardinalityEncoding {
        inputs: vars.to_vec(),
        bound: k,
        aux: Vec::new(),
        clauses: Vec::new(),
    };
    if k == 0 {
        return enc;
    }
    if k > m {
        enc.clauses.push(Clause::normalize([]).expect("empty clause"));
        return enc;
    }

    let mut grid = Grid {
        m,
        k,
        row_start: Vec::with_capacity(m),
    };
    let mut next = next_free_var.index();
    for i in 1..=m {
        grid.row_start.push(next);
        next += grid.hi(i) + 1 - grid.lo(i);
    }
    enc.aux = (next_free_var.index()..next).map(Var::new).collect();

    let mut push = |lits: Vec<Lit>| {
        enc.clauses.push(Clause::normalize(lits).expect("counter clauses are never tautologies"));
    };
    for i in 1..=m {
        let x = vars[i - 1];
        for j in grid.lo(i)..=grid.hi(i) {
            let Cell::Var(s) = grid.cell(i, j) else {
                unreachable!()
            };
            let prev_same = grid.cell(i - 1, j);
            let prev_less = grid.cell(i - 1, j - 1);

            // s(i-1, j) -> s(i, j)
            if let Cell::Var(a) = prev_same {
                push(vec![a.negative(), s.positive()]);
            }
            // x_i /\ s(i-1, j-1) -> s(i, j)
            match prev_less {
                Cell::True => push(vec![x.negative(), s.positive()]),
                Cell::Var(b) => push(vec![x.negative(), b.negative(), s.positive()]),
                Cell::False => {}
            }
            // s(i, j) -> s(i-1, j) \/ x_i
            match prev_same {
                Cell::Var(a) => push(vec![s.negative(), a.positive(), x.positive()]),
                Cell::False => push(vec![s.negative(), x.positive()]),
                Cell::True => unreachable!("s(i-1, j) with j >= 1 is never constant true"),
            }
            // s(i, j) -> s(i-1, j) \/ s(i-1, j-1)
            match (prev_same, prev_less) {
                (_, Cell::True) => {}
                (Cell::Var(a), Cell::Var(b)) => push(vec![s.negative(), a.positive(), b.positive()]),
                (Cell::False, Cell::Var(b)) => push(vec![s.negative(), b.positive()]),
                _ => unreachable!("materialized cells always have a defined predecessor"),
            }
        }
    }
    let Cell::Var(top) = grid.cell(m, k) else {
        unreachable!()
    };
    push(vec![top.positive()]);
    enc
}

impl CardinalityEncoding {
    pub fn inputs(&self) -> &[Var] {
        &self.inputs
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn aux_vars(&self) -> &[Var] {
        &self.aux
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn into_clauses(self) -> Vec<Clause> {
        self.clauses
    }

    /// Highest variable index used by the encoding, inputs included.
    pub fn max_var(&self) -> usize {
        self.aux
            .last()
            .or(self.inputs.iter().max())
            .map_or(0, |v| v.index())
    }

    /// For every assignment of the inputs (bit `i` of the mask is input
    /// `i`), the number of auxiliary completions that satisfy the clauses.
    /// Exhaustive backtracking; limited to `MAX_EXHAUSTIVE_INPUTS` inputs.
    pub fn extension_counts(&self) -> Result<Vec<u64>> {
        let m = self.inputs.len();
        if m > MAX_EXHAUSTIVE_INPUTS {
            return Err(Error::TooLarge {
                what: "cardinality input set",
                size: m,
                limit: MAX_EXHAUSTIVE_INPUTS,
            });
        }
        let num_vars = self.max_var();
        // Each clause is checked once its highest aux position is assigned;
        // input-only clauses are checked before the search.
        let aux_pos = |v: Var| self.aux.binary_search(&v).ok();
        let mut by_pos: Vec<Vec<usize>> = vec![Vec::new(); self.aux.len()];
        let mut input_only = Vec::new();
        for (ci, c) in self.clauses.iter().enumerate() {
            match c.iter().filter_map(|l| aux_pos(l.var())).max() {
                Some(p) => by_pos[p].push(ci),
                None => input_only.push(ci),
            }
        }

        let mut counts = Vec::with_capacity(1 << m);
        let mut values = vec![false; num_vars + 1];
        for mask in 0u64..(1u64 << m) {
            for (i, v) in self.inputs.iter().enumerate() {
                values[v.index()] = mask >> i & 1 == 1;
            }
            let sat = |ci: usize, values: &[bool]| {
                self.clauses[ci]
                    .iter()
                    .any(|l| values[l.var().index()] == l.is_positive())
            };
            if !input_only.iter().all(|&ci| sat(ci, &values)) {
                counts.push(0);
                continue;
            }
            let mut count = 0u64;
            self.extend(0, &mut values, &by_pos, &mut count, &sat);
            counts.push(count);
        }
        Ok(counts)
    }

    fn extend(
        &self,
        pos: usize,
        values: &mut Vec<bool>,
        by_pos: &[Vec<usize>],
        count: &mut u64,
        sat: &dyn Fn(usize, &[bool]) -> bool,
    ) {
        if pos == self.aux.len() {
            *count += 1;
            return;
        }
        let var = self.aux[pos].index();
        for value in [false, true] {
            values[var] = value;
            if by_pos[pos].iter().all(|&ci| sat(ci, values)) {
                self.extend(pos + 1, values, by_pos, count, sat);
            }
        }
    }
}

/// Number of input assignments that extend to a model of the encoding.
pub fn count_projected_models(encoding: &CardinalityEncoding) -> Result<u64> {
    Ok(encoding
        .extension_counts()?
        .into_iter()
        .filter(|&c| c > 0)
        .count() as u64)
}
