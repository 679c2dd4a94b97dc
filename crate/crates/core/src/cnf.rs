//! Propositional data model: variables, literals, clauses, CNF formulas and
//! assignments, plus DIMACS reading and writing.
//!
//! Variables are 1-based everywhere, including inside the solvers, so a
//! variable's index is its DIMACS number.

use std::collections::HashSet;
use std::fmt;
use std::ops::Not;

use crate::error::{Error, Result};

/// A propositional variable. The index is always at least 1.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

impl Var {
    pub fn new(index: usize) -> Var {
        assert!(index >= 1, "variable indices are 1-based");
        assert!(index < (u32::MAX >> 1) as usize, "variable index out of range");
        Var(index as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn positive(self) -> Lit {
        Lit::new(self, true)
    }

    #[inline]
    pub fn negative(self) -> Lit {
        Lit::new(self, false)
    }

    #[inline]
    pub fn lit(self, value: bool) -> Lit {
        Lit::new(self, value)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A literal, packed as `2 * var + negated`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(u32);

impl Lit {
    #[inline]
    pub fn new(var: Var, positive: bool) -> Lit {
        Lit((var.0 << 1) | (!positive) as u32)
    }

    /// Builds a literal from a non-zero DIMACS integer.
    pub fn from_dimacs(value: i64) -> Lit {
        assert!(value != 0, "0 is the DIMACS clause terminator, not a literal");
        Lit::new(Var::new(value.unsigned_abs() as usize), value > 0)
    }

    #[inline]
    pub fn var(self) -> Var {
        Var(self.0 >> 1)
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        self.0 & 1 == 1
    }

    /// Dense index usable for per-literal tables of size `2 * (num_vars + 1)`.
    #[inline]
    pub fn code(self) -> usize {
        self.0 as usize
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var().index() as i64;
        if self.is_positive() {
            v
        } else {
            -v
        }
    }
}

impl Not for Lit {
    type Output = Lit;

    #[inline]
    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

/// A disjunction of literals, normalized: no duplicate literal and never a
/// complementary pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Clause {
    lits: Vec<Lit>,
}

impl Clause {
    /// Normalizes `lits`, keeping the first occurrence of each literal.
    /// Returns `None` for a tautology.
    pub fn normalize<I: IntoIterator<Item = Lit>>(lits: I) -> Option<Clause> {
        let lits = lits.into_iter();
        let mut out: Vec<Lit> = Vec::with_capacity(lits.size_hint().0);
        let mut seen: HashSet<Lit> = HashSet::new();
        for lit in lits {
            if out.len() < 32 && seen.is_empty() {
                if out.contains(&!lit) {
                    return None;
                }
                if !out.contains(&lit) {
                    out.push(lit);
                }
                if out.len() == 32 {
                    seen.extend(out.iter().copied());
                }
            } else {
                if seen.contains(&!lit) {
                    return None;
                }
                if seen.insert(lit) {
                    out.push(lit);
                }
            }
        }
        Some(Clause { lits: out })
    }

    pub fn lits(&self) -> &[Lit] {
        &self.lits
    }

    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Lit> + '_ {
        self.lits.iter().copied()
    }

    pub fn evaluate(&self, assignment: &Assignment) -> Evaluation {
        let mut open = false;
        for &lit in &self.lits {
            match assignment.lit_value(lit) {
                Some(true) => return Evaluation::Satisfied,
                None => open = true,
                Some(false) => {}
            }
        }
        if open {
            Evaluation::Undetermined
        } else {
            Evaluation::Falsified
        }
    }
}

impl<'a> IntoIterator for &'a Clause {
    type Item = &'a Lit;
    type IntoIter = std::slice::Iter<'a, Lit>;

    fn into_iter(self) -> Self::IntoIter {
        self.lits.iter()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Satisfied,
    Falsified,
    Undetermined,
}

/// A conjunction of clauses over variables `1..=num_vars`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize) -> CnfFormula {
        CnfFormula {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Allocates a fresh variable.
    pub fn new_var(&mut self) -> Var {
        self.num_vars += 1;
        Var::new(self.num_vars)
    }

    /// Grows the variable count to at least `num_vars`.
    pub fn ensure_vars(&mut self, num_vars: usize) {
        self.num_vars = self.num_vars.max(num_vars);
    }

    /// Adds a clause, normalizing it first. Returns the clause's position,
    /// or `None` if it was a tautology and got dropped. Variables beyond the
    /// current count grow the formula.
    pub fn add_clause<I: IntoIterator<Item = Lit>>(&mut self, lits: I) -> Option<usize> {
        let clause = Clause::normalize(lits)?;
        self.push_clause(clause)
    }

    pub fn push_clause(&mut self, clause: Clause) -> Option<usize> {
        if let Some(max) = clause.iter().map(|l| l.var().index()).max() {
            self.ensure_vars(max);
        }
        self.clauses.push(clause);
        Some(self.clauses.len() - 1)
    }

    pub fn extend<I: IntoIterator<Item = Clause>>(&mut self, clauses: I) {
        for c in clauses {
            self.push_clause(c);
        }
    }

    /// True if the formula contains the empty clause.
    pub fn is_trivially_unsat(&self) -> bool {
        self.clauses.iter().any(Clause::is_empty)
    }

    pub fn evaluate(&self, assignment: &Assignment) -> Evaluation {
        let mut result = Evaluation::Satisfied;
        for clause in &self.clauses {
            match clause.evaluate(assignment) {
                Evaluation::Falsified => return Evaluation::Falsified,
                Evaluation::Undetermined => result = Evaluation::Undetermined,
                Evaluation::Satisfied => {}
            }
        }
        result
    }

    pub fn is_model(&self, assignment: &Assignment) -> bool {
        assignment.is_total() && self.evaluate(assignment) == Evaluation::Satisfied
    }

    /// Parses DIMACS CNF. Comment lines start with `c`; a line holding a
    /// single `%` ends the input (SATLIB convention).
    pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
        let err = |line: usize, msg: &str| Error::Dimacs {
            line,
            msg: msg.to_string(),
        };

        let mut header: Option<(usize, usize)> = None;
        let mut formula = CnfFormula::new(0);
        let mut current: Vec<Lit> = Vec::new();
        let mut clause_open = false;
        let mut raw_clauses = 0usize;
        let mut last_line = 0;

        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            last_line = lineno;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                continue;
            }
            if trimmed == "%" {
                break;
            }
            if trimmed.starts_with('p') {
                if header.is_some() {
                    return Err(err(lineno, "duplicate problem line"));
                }
                let fields: Vec<&str> = trimmed.split_whitespace().collect();
                if fields.len() != 4 || fields[0] != "p" || fields[1] != "cnf" {
                    return Err(err(lineno, "malformed header, expected \"p cnf <vars> <clauses>\""));
                }
                let vars = fields[2]
                    .parse::<usize>()
                    .map_err(|_| err(lineno, "malformed variable count in header"))?;
                let clauses = fields[3]
                    .parse::<usize>()
                    .map_err(|_| err(lineno, "malformed clause count in header"))?;
                formula.num_vars = vars;
                header = Some((vars, clauses));
                continue;
            }
            let (vars, _) = header.ok_or_else(|| err(lineno, "clause before problem line"))?;
            for token in trimmed.split_whitespace() {
                let value: i64 = token
                    .parse()
                    .map_err(|_| err(lineno, &format!("invalid literal {token:?}")))?;
                if value == 0 {
                    raw_clauses += 1;
                    if let Some(clause) = Clause::normalize(current.drain(..)) {
                        formula.clauses.push(clause);
                    }
                    clause_open = false;
                } else {
                    if value.unsigned_abs() as usize > vars {
                        return Err(err(lineno, "literal exceeds declared variable count"));
                    }
                    current.push(Lit::from_dimacs(value));
                    clause_open = true;
                }
            }
        }

        let (_, declared) = header.ok_or_else(|| err(last_line.max(1), "missing problem line"))?;
        if clause_open {
            return Err(err(last_line, "missing clause terminator 0"));
        }
        if raw_clauses != declared {
            return Err(err(
                last_line.max(1),
                &format!("header declares {declared} clauses, found {raw_clauses}"),
            ));
        }
        Ok(formula)
    }

    pub fn write_dimacs(&self) -> String {
        let mut out = String::new();
        self.write_dimacs_to(&mut out).expect("writing to a String");
        out
    }

    pub fn write_dimacs_to<W: fmt::Write>(&self, out: &mut W) -> fmt::Result {
        writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len())?;
        for clause in &self.clauses {
            for lit in clause {
                write!(out, "{lit} ")?;
            }
            out.write_str("0\n")?;
        }
        Ok(())
    }
}

/// A possibly partial Boolean interpretation over variables `1..=num_vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<Option<bool>>,
}

impl Assignment {
    pub fn new(num_vars: usize) -> Assignment {
        Assignment {
            values: vec![None; num_vars + 1],
        }
    }

    /// Total assignment making exactly the given literals true. Variables not
    /// mentioned stay unassigned.
    pub fn from_lits<I: IntoIterator<Item = Lit>>(num_vars: usize, lits: I) -> Assignment {
        let mut a = Assignment::new(num_vars);
        for lit in lits {
            a.assign(lit);
        }
        a
    }

    pub fn num_vars(&self) -> usize {
        self.values.len() - 1
    }

    #[inline]
    pub fn value(&self, var: Var) -> Option<bool> {
        self.values.get(var.index()).copied().flatten()
    }

    #[inline]
    pub fn lit_value(&self, lit: Lit) -> Option<bool> {
        self.value(lit.var()).map(|v| v == lit.is_positive())
    }

    pub fn set(&mut self, var: Var, value: Option<bool>) {
        if var.index() >= self.values.len() {
            self.values.resize(var.index() + 1, None);
        }
        self.values[var.index()] = value;
    }

    /// Makes `lit` true.
    pub fn assign(&mut self, lit: Lit) {
        self.set(lit.var(), Some(lit.is_positive()));
    }

    pub fn is_total(&self) -> bool {
        self.values[1..].iter().all(Option::is_some)
    }

    /// The literals that are currently true, in variable order.
    pub fn true_lits(&self) -> impl Iterator<Item = Lit> + '_ {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .filter_map(|(i, v)| v.map(|b| Var::new(i).lit(b)))
    }

    /// Restricts the assignment to `vars`, as literals.
    pub fn project(&self, vars: &[Var]) -> Vec<Lit> {
        vars.iter()
            .filter_map(|&v| self.value(v).map(|b| v.lit(b)))
            .collect()
    }
}
