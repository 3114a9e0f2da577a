use num::Zero;

use super::{fractional_weight_removal, parity_separate, ScaledPair};
use crate::cnf::{CnfFormula, Literal};
use crate::error::{invalid, Result};
use crate::gadgets::lower_to_integral_matchgrid;
use crate::holant_ir::SignatureGraph;
use crate::rational::{int, Rational};
use crate::signature::{builtin_signature, clause_signature, Builtin, Signature};

/// Signature graph with `Holant = #SAT(φ)`: a variable vertex per variable
/// carrying EQ over its doubled occurrences, a clause vertex per clause
/// carrying the doubled clause function, and two parallel edges per
/// literal occurrence.
///
/// Requires a uniform clause width and every variable to occur.
pub fn cnf_to_holant(phi: &CnfFormula) -> Result<SignatureGraph> {
    let d = phi.width();
    if phi.clauses().iter().any(|c| c.len() != d) {
        return invalid("clause widths differ; cnf_to_holant needs a uniform width");
    }
    if let Some(i) = phi.occurrences().iter().position(|&r| r == 0) {
        return invalid(format!("variable {} does not occur in any clause", i + 1));
    }
    holant_for_formula(phi, None)
}

/// The same construction for any formula: clause widths may differ and each
/// unused variable becomes an arity-0 vertex of value 2.  With a selector
/// variable, that variable's vertex carries EQ_minus instead of EQ, so the
/// Holant value is `Σ_a (-1)^{a(selector)} [a satisfies φ]`.
pub fn holant_for_formula(phi: &CnfFormula, selector: Option<usize>) -> Result<SignatureGraph> {
    let n = phi.num_vars();
    if let Some(s) = selector {
        if s == 0 || s > n {
            return invalid(format!("selector variable {s} is out of range"));
        }
    }
    let mut omega = SignatureGraph::new();
    let placeholder = Signature::constant(int(1));
    for _ in 0..n + phi.num_clauses() {
        omega.add_vertex(placeholder.clone());
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        for lit in clause {
            for _ in 0..2 {
                omega.add_edge(lit.var() - 1, n + j, int(1))?;
            }
        }
    }
    for i in 0..n {
        let deg = omega.degree(i);
        let sig = match (deg, selector == Some(i + 1)) {
            (0, false) => Signature::constant(int(2)),
            (0, true) => Signature::constant(Rational::zero()),
            (_, false) => builtin_signature(Builtin::Eq, deg)?,
            (_, true) => builtin_signature(Builtin::EqMinus, deg)?,
        };
        omega.set_signature(i, sig);
    }
    for (j, clause) in phi.clauses().iter().enumerate() {
        omega.set_signature(n + j, clause_signature(clause, clause.len())?);
    }
    Ok(omega)
}

/// Plain graphs with `q^{-B}(PerfMatch(g1) - PerfMatch(g2)) = #SAT(φ)`.
///
/// Composition: Holant construction, lowering with the integer EQ gadgets
/// (contributing `2^t`), removal of the remaining non-sign weights
/// (contributing `q^B`, trivial here since all weights are integers), then
/// parity separation of the resulting ±1 graph.
pub fn sat_to_difference(phi: &CnfFormula) -> Result<ScaledPair> {
    compile(&holant_for_formula(phi, None)?)
}

fn compile(omega: &SignatureGraph) -> Result<ScaledPair> {
    let (g, t) = lower_to_integral_matchgrid(omega)?;
    let (h, q, b) = fractional_weight_removal(&g)?;
    Ok(parity_separate(&h)?.rescale(q, b).rescale(2u32.into(), t))
}

/// Plain graphs `(g1, g2)` with equal perfect-matching counts iff
/// `#SAT(φ) = #SAT(φ')`; precisely `q^{-B}(PM(g1) - PM(g2)) = #SAT(φ) - #SAT(φ')`.
///
/// Both formulas are first brought to the same variable and clause counts:
/// a formula without clauses gains a fresh variable forced true by a unit
/// clause, missing variables are added as dummies forced equal to `x1` (or
/// forced false when there is no `x1`), and the shorter clause list is
/// repeated cyclically.  None of this changes either model count.  Then a
/// selector `x*` is added positively to every clause of `φ` and negatively to
/// every clause of `φ'`, with EQ_minus at its vertex.
pub fn equipollence_reduce(phi: &CnfFormula, phi_prime: &CnfFormula) -> Result<ScaledPair> {
    let (a, b) = align(phi, phi_prime)?;
    let n = a.num_vars();
    let star = n + 1;
    let x = Literal::new(star as i32);
    let mut clauses = Vec::with_capacity(a.num_clauses() * 2);
    for c in a.clauses() {
        clauses.push(std::iter::once(x).chain(c.iter().copied()).collect());
    }
    for c in b.clauses() {
        clauses.push(
            std::iter::once(x.negated())
                .chain(c.iter().copied())
                .collect(),
        );
    }
    let psi = CnfFormula::new(star, clauses)?;
    compile(&holant_for_formula(&psi, Some(star))?)
}

fn align(phi: &CnfFormula, phi_prime: &CnfFormula) -> Result<(CnfFormula, CnfFormula)> {
    let mut a = with_clause(phi)?;
    let mut b = with_clause(phi_prime)?;
    let n = a.num_vars().max(b.num_vars());
    a = pad_vars(&a, n)?;
    b = pad_vars(&b, n)?;
    let m = a.num_clauses().max(b.num_clauses());
    Ok((repeat_clauses(&a, m)?, repeat_clauses(&b, m)?))
}

fn with_clause(f: &CnfFormula) -> Result<CnfFormula> {
    if f.num_clauses() > 0 {
        return Ok(f.clone());
    }
    let y = f.num_vars() + 1;
    CnfFormula::new(y, vec![vec![Literal::new(y as i32)]])
}

fn pad_vars(f: &CnfFormula, n: usize) -> Result<CnfFormula> {
    let mut clauses = f.clauses().to_vec();
    for y in f.num_vars() + 1..=n {
        let y = Literal::new(y as i32);
        if f.num_vars() == 0 {
            clauses.push(vec![y.negated()]);
        } else {
            let x1 = Literal::new(1);
            clauses.push(vec![y.negated(), x1]);
            clauses.push(vec![y, x1.negated()]);
        }
    }
    CnfFormula::new(n, clauses)
}

fn repeat_clauses(f: &CnfFormula, m: usize) -> Result<CnfFormula> {
    let clauses = f.clauses().iter().cycle().take(m).cloned().collect();
    CnfFormula::new(f.num_vars(), clauses)
}

/// Model count of the aligned formulas equals that of the originals.
#[cfg(test)]
pub(crate) fn aligned(phi: &CnfFormula, phi_prime: &CnfFormula) -> (CnfFormula, CnfFormula) {
    align(phi, phi_prime).unwrap()
}
