//! Seeded random instance families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashSet;

use crate::cnf::{CnfFormula, Literal};
use crate::error::{invalid, Result};
use crate::graph::WeightedGraph;
use crate::rational::int;

/// Deterministic generator for a seed and a stream label.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Simple ±1-weighted graph on `n` vertices (`n` even) with about `2n`
/// edges: a planted perfect matching on a random pairing plus uniformly
/// random extra edges, each edge signed independently.
pub fn random_pm(n: usize, rng: &mut impl Rng) -> Result<WeightedGraph> {
    if n % 2 == 1 {
        return invalid(format!("random_pm needs an even vertex count, got {n}"));
    }
    let target = if n < 2 {
        0
    } else {
        (2 * n).min(n * (n - 1) / 2)
    };
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut seen: FxHashSet<(usize, usize)> = FxHashSet::default();
    let mut g = WeightedGraph::new(n);
    let mut push = |g: &mut WeightedGraph, u: usize, v: usize, rng: &mut dyn rand::RngCore| {
        let key = (u.min(v), u.max(v));
        if u != v && seen.insert(key) {
            let w = if rng.gen_bool(0.5) { 1 } else { -1 };
            g.add_edge(u, v, int(w))
                .expect("distinct endpoints in range");
        }
    };
    for pair in perm.chunks(2) {
        push(&mut g, pair[0], pair[1], rng);
    }
    while g.num_edges() < target {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        push(&mut g, u, v, rng);
    }
    Ok(g)
}

/// Random 3-CNF with `m` clauses over `n ≥ 3` variables; each clause has
/// three distinct variables with independent random signs.
pub fn random_3cnf(n: usize, m: usize, rng: &mut impl Rng) -> Result<CnfFormula> {
    if n < 3 {
        return invalid(format!("random_3cnf needs at least 3 variables, got {n}"));
    }
    let clauses = (0..m)
        .map(|_| {
            rand::seq::index::sample(rng, n, 3)
                .into_iter()
                .map(|v| {
                    let lit = Literal::new(v as i32 + 1);
                    if rng.gen_bool(0.5) {
                        lit.negated()
                    } else {
                        lit
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(n, clauses)
}
