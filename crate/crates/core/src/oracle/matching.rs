use num::{BigInt, One, Zero};
use rustc_hash::FxHashMap;

use super::contract::{contract_all, Tensor, Value};
use super::order::{elimination_order, FrontierKind};
use super::Limits;
use crate::error::{invalid, limit, Error, Result};
use crate::graph::WeightedGraph;
use crate::rational::{lcd, Rational};

/// Evaluation strategy for matching sums.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Sweep, falling back to contraction when the sweep hits a limit.
    #[default]
    Auto,
    /// Vertex sweep in a greedy low-width order.
    Sweep,
    /// Greedy sparse tensor contraction with one tensor per vertex.
    Contraction,
}

/// Σ over perfect matchings of the product of edge weights (0 for odd |V|).
pub fn count_perfect_matchings(g: &WeightedGraph, limits: &Limits) -> Result<Rational> {
    count_perfect_matchings_with(g, Method::Auto, limits)
}

/// [`count_perfect_matchings`] with an explicit strategy.
pub fn count_perfect_matchings_with(
    g: &WeightedGraph,
    method: Method,
    limits: &Limits,
) -> Result<Rational> {
    if g.vertex_weights().is_some() {
        return invalid("count_perfect_matchings needs a graph without vertex weights");
    }
    let n = g.num_vertices();
    if n % 2 == 1 {
        return Ok(Rational::zero());
    }
    let q = BigInt::from(lcd(g.edge_weights()));
    let weights: Vec<BigInt> = g
        .edge_weights()
        .iter()
        .map(|w| (w * &q).to_integer())
        .collect();
    let total = evaluate(g, &weights, None, method, limits)?;
    Ok(Rational::new(total, num::pow(q, n / 2)))
}

/// Σ over all matchings of the product of the weights of unmatched vertices.
pub fn matchsum(g: &WeightedGraph, limits: &Limits) -> Result<Rational> {
    matchsum_with(g, Method::Auto, limits)
}

/// [`matchsum`] with an explicit strategy.
pub fn matchsum_with(g: &WeightedGraph, method: Method, limits: &Limits) -> Result<Rational> {
    let Some(vw) = g.vertex_weights() else {
        return invalid("matchsum needs vertex weights");
    };
    if !g.has_unit_edge_weights() {
        return invalid("matchsum needs unit edge weights");
    }
    let ones = vec![Rational::one(); g.num_edges()];
    evaluate(g, &ones, Some(vw), method, limits)
}

fn evaluate<V: Value>(
    g: &WeightedGraph,
    weights: &[V],
    unmatched: Option<&[V]>,
    method: Method,
    limits: &Limits,
) -> Result<V> {
    match method {
        Method::Sweep => sweep(g, weights, unmatched, limits),
        Method::Contraction => contract(g, weights, unmatched, limits),
        Method::Auto => match sweep(g, weights, unmatched, limits) {
            Err(Error::ResourceLimit(_)) => contract(g, weights, unmatched, limits),
            other => other,
        },
    }
}

fn adjacency(g: &WeightedGraph) -> Vec<Vec<usize>> {
    (0..g.num_vertices())
        .map(|v| g.incidence(v).iter().map(|&e| g.other(e, v)).collect())
        .collect()
}

/// One tensor per vertex over its nonzero edges: a single matched edge, or
/// none at the unmatched weight.  Each edge weight sits at its first end.
fn contract<V: Value>(
    g: &WeightedGraph,
    weights: &[V],
    unmatched: Option<&[V]>,
    limits: &Limits,
) -> Result<V> {
    let mut tensors = Vec::with_capacity(g.num_vertices());
    for v in 0..g.num_vertices() {
        let edges: Vec<usize> = g
            .incidence(v)
            .iter()
            .copied()
            .filter(|&e| !weights[e].is_zero())
            .collect();
        if edges.len() > 63 {
            return limit(format!("vertex {v} has more than 63 incident edges"));
        }
        let mut entries = FxHashMap::default();
        for (i, &e) in edges.iter().enumerate() {
            let w = if g.endpoints(e).0 == v {
                weights[e].clone()
            } else {
                V::one()
            };
            entries.insert(1u64 << i, w);
        }
        if let Some(w) = unmatched.map(|u| &u[v]).filter(|w| !w.is_zero()) {
            entries.insert(0, w.clone());
        }
        tensors.push(Tensor { edges, entries });
    }
    contract_all(tensors, limits)
}

struct Step {
    own: Option<u32>,
    forward: Vec<(u32, usize)>,
}

/// Vertex sweep over matchings.  A state is the set of boundary vertices
/// already matched to a processed vertex.  With `unmatched` weights, a
/// vertex may also stay unmatched at that weight.
fn sweep<V: Value>(
    g: &WeightedGraph,
    weights: &[V],
    unmatched: Option<&[V]>,
    limits: &Limits,
) -> Result<V> {
    let n = g.num_vertices();
    let adj = adjacency(g);
    let order = elimination_order(&adj, FrontierKind::Vertices);
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }

    let cap = limits.frontier.min(63);
    let mut slot: Vec<Option<u32>> = vec![None; n];
    let mut free: Vec<u32> = (0..64).rev().collect();
    let mut steps = Vec::with_capacity(n);
    for (i, &v) in order.iter().enumerate() {
        let own = slot[v];
        if let Some(s) = own {
            free.push(s);
        }
        let mut forward = Vec::new();
        for &e in g.incidence(v) {
            if weights[e].is_zero() {
                continue;
            }
            let u = g.other(e, v);
            if pos[u] > i {
                let s = match slot[u] {
                    Some(s) => s,
                    None => {
                        let s = free.pop().expect("slot pool exhausted");
                        if s as usize >= cap {
                            return limit(format!(
                                "matching sweep boundary exceeds {cap} vertices"
                            ));
                        }
                        slot[u] = Some(s);
                        s
                    }
                };
                forward.push((s, e));
            }
        }
        free.sort_unstable_by(|a, b| b.cmp(a));
        steps.push(Step { own, forward });
    }

    let mut cur: FxHashMap<u64, V> = FxHashMap::default();
    cur.insert(0, V::one());
    for (step, &v) in steps.iter().zip(&order) {
        let mut next: FxHashMap<u64, V> = FxHashMap::default();
        next.reserve(cur.len());
        let stay = unmatched.map(|w| &w[v]).filter(|w| !w.is_zero());
        for (mask, val) in cur {
            if let Some(s) = step.own {
                if mask >> s & 1 == 1 {
                    add(&mut next, mask & !(1 << s), val);
                    continue;
                }
            }
            for &(s, e) in &step.forward {
                if mask >> s & 1 == 0 {
                    add(&mut next, mask | 1 << s, val.clone() * &weights[e]);
                }
            }
            if let Some(w) = stay {
                add(&mut next, mask, val * w);
            }
        }
        next.retain(|_, v| !v.is_zero());
        if next.len() > limits.states {
            return limit(format!("matching sweep exceeds {} states", limits.states));
        }
        cur = next;
    }
    Ok(cur.remove(&0).unwrap_or_else(V::zero))
}

fn add<V: Value>(map: &mut FxHashMap<u64, V>, key: u64, val: V) {
    match map.get_mut(&key) {
        Some(slot) => *slot += &val,
        None => {
            map.insert(key, val);
        }
    }
}
