//! The reduction pipeline.

mod baseline;
mod fractional;
mod parity;
mod sat;
mod simplify;

pub use baseline::{
    modular_baseline, validate_modular_baseline, ModularBaseline, ModularCheck,
    MAX_BASELINE_VERTICES,
};
pub use fractional::fractional_weight_removal;
pub use parity::{matchsum_to_parity_pair, parity_separate, perfmatch_to_matchsum};
pub use sat::{cnf_to_holant, equipollence_reduce, holant_for_formula, sat_to_difference};
pub use simplify::simplify_to_simple;

use num::{BigInt, BigUint, One, Zero};

use crate::graph::WeightedGraph;
use crate::oracle::{count_perfect_matchings_with, Limits, Method};
use crate::rational::{pow, Rational};
use crate::Result;

/// Two plain graphs and a scale `q^B` with
/// `value = q^{-B} · (PerfMatch(g1) - PerfMatch(g2))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledPair {
    pub g1: WeightedGraph,
    pub g2: WeightedGraph,
    pub scale_base: BigUint,
    pub scale_exponent: u64,
}

impl ScaledPair {
    /// Two copies of a single edge: difference 0, scale 1.
    pub fn canonical_zero() -> Self {
        let k2 = WeightedGraph::unweighted(2, &[(0, 1)]).expect("K2");
        Self {
            g1: k2.clone(),
            g2: k2,
            scale_base: BigUint::one(),
            scale_exponent: 0,
        }
    }

    /// `q^B` as an exact rational.
    pub fn scale(&self) -> Rational {
        pow(&self.scale_base, self.scale_exponent)
    }

    /// `q^{-B} · (pm1 - pm2)`.
    pub fn decode(&self, pm1: &Rational, pm2: &Rational) -> Rational {
        (pm1 - pm2) / self.scale()
    }

    /// Counts both graphs with the oracle and decodes the value.
    pub fn evaluate(&self, limits: &Limits) -> Result<PairValue> {
        self.evaluate_with(Method::Auto, limits)
    }

    /// [`ScaledPair::evaluate`] with an explicit oracle strategy.
    pub fn evaluate_with(&self, method: Method, limits: &Limits) -> Result<PairValue> {
        let pm1 = count_perfect_matchings_with(&self.g1, method, limits)?.to_integer();
        let pm2 = count_perfect_matchings_with(&self.g2, method, limits)?.to_integer();
        let value = self.decode(
            &Rational::from_integer(pm1.clone()),
            &Rational::from_integer(pm2.clone()),
        );
        Ok(PairValue { pm1, pm2, value })
    }

    /// Folds another scale factor `base^exponent` into this pair.
    pub(crate) fn rescale(mut self, base: BigUint, exponent: u64) -> Self {
        let (b, e) = combine_scale((self.scale_base, self.scale_exponent), (base, exponent));
        self.scale_base = b;
        self.scale_exponent = e;
        self
    }
}

/// Oracle counts of a [`ScaledPair`] and the value they encode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairValue {
    pub pm1: BigInt,
    pub pm2: BigInt,
    pub value: Rational,
}

/// `q1^e1 · q2^e2` as a single power, keeping the base when it agrees.
pub(crate) fn combine_scale(a: (BigUint, u64), b: (BigUint, u64)) -> (BigUint, u64) {
    let trivial = |(q, e): &(BigUint, u64)| q.is_one() || *e == 0;
    match (trivial(&a), trivial(&b)) {
        (true, true) => (BigUint::one(), 0),
        (true, false) => b,
        (false, true) => a,
        _ if a.0 == b.0 => (a.0, a.1 + b.1),
        _ => {
            let value = pow(&a.0, a.1) * pow(&b.0, b.1);
            debug_assert!(!value.numer().is_zero());
            (value.to_integer().magnitude().clone(), 1)
        }
    }
}

/// Canonical graph with no perfect matching: one isolated vertex.
pub(crate) fn zero_graph() -> WeightedGraph {
    WeightedGraph::new(1)
}
