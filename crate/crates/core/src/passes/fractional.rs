use num::{BigInt, BigUint, One, Signed, ToPrimitive, Zero};

use super::simplify::SimpleBuilder;
use crate::error::{invalid, limit, Result};
use crate::graph::{VertexId, WeightedGraph};
use crate::rational::{lcd, Rational};

/// Largest integer weight expanded into parallel paths.
pub const MAX_EXPANDED_WEIGHT: u64 = 1 << 20;

/// Rewrites an edge-weighted graph as a simple graph with weights ±1 and
/// `PerfMatch(G) = q^{-B} · PerfMatch(G')`.
///
/// Zero-weight edges are dropped.  Weights are multiplied by their lcd `q`
/// (which multiplies every perfect matching by `q^{n/2}`, so `B = n/2`, or 0
/// when `q = 1`).  A negative integer `-c` becomes `u –(c)– s1 – s2 –(-1)– v`,
/// and a positive integer `c` becomes `c` parallel unit paths, every copy
/// after the first subdivided twice.  Odd vertex counts yield a single
/// isolated vertex with `q = 1`, `B = 0`.
pub fn fractional_weight_removal(g: &WeightedGraph) -> Result<(WeightedGraph, BigUint, u64)> {
    if g.vertex_weights().is_some() {
        return invalid("fractional_weight_removal needs a graph without vertex weights");
    }
    let n = g.num_vertices();
    if n % 2 == 1 {
        return Ok((WeightedGraph::new(1), BigUint::one(), 0));
    }
    let weights: Vec<&Rational> = g.edge_weights().iter().filter(|w| !w.is_zero()).collect();
    let q = lcd(weights.iter().copied());
    if q.is_one() && g.has_sign_weights() && g.is_simple() {
        return Ok((g.clone(), q, 0));
    }
    let qi = BigInt::from(q.clone());
    let mut out = SimpleBuilder::new(n);
    for (_, u, v, w) in g.edges() {
        if w.is_zero() {
            continue;
        }
        let scaled = (w * &qi).to_integer();
        if scaled.is_negative() {
            let c = scaled.abs();
            if c.is_one() {
                out.add(u, v, -Rational::one());
            } else {
                let s1 = out.vertex();
                let s2 = out.vertex();
                add_positive(&mut out, u, s1, &c)?;
                out.add(s1, s2, Rational::one());
                out.add(s2, v, -Rational::one());
            }
        } else {
            add_positive(&mut out, u, v, &scaled)?;
        }
    }
    let b = if q.is_one() { 0 } else { (n / 2) as u64 };
    Ok((out.finish(), q, b))
}

fn add_positive(out: &mut SimpleBuilder, u: VertexId, v: VertexId, c: &BigInt) -> Result<()> {
    let copies = match c.to_u64() {
        Some(c) if c <= MAX_EXPANDED_WEIGHT => c,
        _ => {
            return limit(format!(
                "integer weight {c} is too large to expand into parallel paths"
            ))
        }
    };
    for _ in 0..copies {
        out.add(u, v, Rational::one());
    }
    Ok(())
}
