use num::BigUint;

use super::Limits;
use crate::cnf::CnfFormula;
use crate::error::{limit, Result};

/// Number of satisfying assignments, by exhaustive enumeration.
pub fn count_sat(phi: &CnfFormula, limits: &Limits) -> Result<BigUint> {
    let n = phi.num_vars();
    if n > limits.sat_vars.min(40) {
        return limit(format!(
            "{n} variables exceed the enumeration limit {}",
            limits.sat_vars
        ));
    }
    let clauses: Vec<(u64, u64)> = phi
        .clauses()
        .iter()
        .map(|c| {
            c.iter().fold((0, 0), |(pos, neg), l| {
                let bit = 1u64 << (l.var() - 1);
                if l.is_positive() {
                    (pos | bit, neg)
                } else {
                    (pos, neg | bit)
                }
            })
        })
        .collect();
    let mut count = 0u64;
    for a in 0..1u64 << n {
        if clauses
            .iter()
            .all(|&(pos, neg)| a & pos != 0 || !a & neg != 0)
        {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}
