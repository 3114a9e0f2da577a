//! CNF formulas with DIMACS-style signed literals.

use std::fmt;

use crate::error::{invalid, Result};

/// A nonzero signed variable index: `3` is `x3`, `-3` is `¬x3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal(i32);

impl Literal {
    /// Panics on 0; use [`Literal::try_new`] for untrusted input.
    pub fn new(signed: i32) -> Self {
        Self::try_new(signed).expect("literal must be nonzero")
    }

    pub fn try_new(signed: i32) -> Option<Self> {
        (signed != 0 && signed != i32::MIN).then_some(Self(signed))
    }

    /// 1-based variable index.
    pub fn var(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn signed(self) -> i32 {
        self.0
    }

    pub fn negated(self) -> Self {
        Self(-self.0)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Rejects out-of-range literals and clauses mentioning a variable twice.
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            for (a, lit) in clause.iter().enumerate() {
                if lit.var() > num_vars {
                    return invalid(format!(
                        "clause {}: variable {} exceeds n = {num_vars}",
                        j + 1,
                        lit.var()
                    ));
                }
                if clause[..a].iter().any(|l| l.var() == lit.var()) {
                    return invalid(format!(
                        "clause {}: variable {} occurs twice",
                        j + 1,
                        lit.var()
                    ));
                }
            }
        }
        Ok(Self { num_vars, clauses })
    }

    /// Convenience constructor from signed integers.
    pub fn from_signed(num_vars: usize, clauses: &[&[i32]]) -> Result<Self> {
        let mut cs = Vec::with_capacity(clauses.len());
        for c in clauses {
            let mut lits = Vec::with_capacity(c.len());
            for &l in *c {
                match Literal::try_new(l) {
                    Some(lit) => lits.push(lit),
                    None => return invalid("literal 0 is not allowed"),
                }
            }
            cs.push(lits);
        }
        Self::new(num_vars, cs)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// Largest clause length (0 for the empty formula).
    pub fn width(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Occurrence count `r(i)` of every variable, indexed from 0.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut r = vec![0; self.num_vars];
        for lit in self.clauses.iter().flatten() {
            r[lit.var() - 1] += 1;
        }
        r
    }

    /// Whether `assignment` (bit `i` = value of `x_{i+1}`) satisfies every clause.
    pub fn satisfied_by(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|l| ((assignment >> (l.var() - 1)) & 1 == 1) == l.is_positive())
        })
    }
}
