use num::{BigInt, BigUint, Integer, One};

use super::simplify::SimpleBuilder;
use crate::error::{invalid, limit, Result};
use crate::graph::{VertexId, WeightedGraph};
use crate::oracle::{count_perfect_matchings, Limits};
use crate::rational::Rational;

/// The modular-arithmetic comparison: every `-1` edge of a ±1 graph with `m`
/// edges is replaced by an unweighted gadget of weight `M - 1 = 2^m`, so
/// `PerfMatch(G) ≡ PerfMatch(G') (mod M)` with `M = 2^m + 1`.  Recovering
/// `PerfMatch(G)` this way assumes `0 ≤ PerfMatch(G) < M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularBaseline {
    pub graph: WeightedGraph,
    pub modulus: BigUint,
}

impl ModularBaseline {
    /// `PerfMatch(G') mod M`.
    pub fn recover(&self, pm_prime: &BigInt) -> BigUint {
        pm_prime
            .mod_floor(&BigInt::from(self.modulus.clone()))
            .magnitude()
            .clone()
    }
}

/// Largest number of gadget vertices [`modular_baseline`] will create.
pub const MAX_BASELINE_VERTICES: usize = 1 << 25;

/// Builds the baseline graph.  The weight-`2^m` gadget is the path
/// `u = p0, p1, …, p_{2m-1} = v` whose odd-position edges have weight 2,
/// each realised as a unit edge plus a twice-subdivided parallel copy.
pub fn modular_baseline(g: &WeightedGraph) -> Result<ModularBaseline> {
    if g.vertex_weights().is_some() || !g.has_sign_weights() {
        return invalid("modular_baseline needs edge weights in {-1, 1}");
    }
    let m = g.num_edges();
    let negative = g.edges().filter(|e| !e.3.is_one()).count();
    if negative.saturating_mul(4 * m) > MAX_BASELINE_VERTICES {
        return limit(format!(
            "baseline would need about {} vertices",
            negative.saturating_mul(4 * m)
        ));
    }
    let modulus = (BigUint::one() << m) + BigUint::one();
    let mut out = SimpleBuilder::new(g.num_vertices());
    let one = Rational::one;
    for (_, u, v, w) in g.edges() {
        if w.is_one() {
            out.add(u, v, one());
            continue;
        }
        let mut path: Vec<VertexId> = vec![u];
        path.extend((0..2 * m - 2).map(|_| out.vertex()));
        path.push(v);
        for (t, pair) in path.windows(2).enumerate() {
            out.add(pair[0], pair[1], one());
            if t % 2 == 0 {
                out.add(pair[0], pair[1], one());
            }
        }
    }
    Ok(ModularBaseline {
        graph: out.finish(),
        modulus,
    })
}

/// Oracle comparison of the baseline at small scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularCheck {
    pub perfmatch: BigInt,
    pub perfmatch_prime: BigInt,
    pub modulus: BigUint,
    pub congruent: bool,
}

pub fn validate_modular_baseline(g: &WeightedGraph, limits: &Limits) -> Result<ModularCheck> {
    let base = modular_baseline(g)?;
    let pm = count_perfect_matchings(g, limits)?.to_integer();
    let pm_prime = count_perfect_matchings(&base.graph, limits)?.to_integer();
    let m = BigInt::from(base.modulus.clone());
    let congruent = (&pm - &pm_prime).mod_floor(&m) == BigInt::from(0);
    Ok(ModularCheck {
        perfmatch: pm,
        perfmatch_prime: pm_prime,
        modulus: base.modulus,
        congruent,
    })
}
