//! Greedy contraction of sparse tensor networks.
//!
//! Every tensor is a sparse map from assignments of its open edges (bit `i`
//! for `edges[i]`) to values; every edge joins exactly two tensors.  The
//! pair whose merged tensor has the fewest open edges is contracted first.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{AddAssign, Mul};

use num::{One, Zero};
use rustc_hash::FxHashMap;

use super::Limits;
use crate::error::{limit, Result};

pub(crate) struct Tensor<V> {
    pub edges: Vec<usize>,
    pub entries: FxHashMap<u64, V>,
}

pub(crate) trait Value:
    Clone + Zero + One + for<'a> AddAssign<&'a Self> + for<'a> Mul<&'a Self, Output = Self>
{
}
impl<V> Value for V where
    V: Clone + Zero + One + for<'a> AddAssign<&'a V> + for<'a> Mul<&'a V, Output = V>
{
}

struct Candidate {
    score: f64,
    a: usize,
    b: usize,
    stamp: (u64, u64),
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Candidate {}
impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Candidate {
    // Reversed so the max-heap pops the smallest score; ties by index.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .score
            .total_cmp(&self.score)
            .then_with(|| (other.a, other.b).cmp(&(self.a, self.b)))
    }
}

/// Sums the product of all tensors over every assignment of the edges.
pub(crate) fn contract_all<V: Value>(tensors: Vec<Tensor<V>>, limits: &Limits) -> Result<V> {
    if tensors.iter().any(|t| t.entries.is_empty()) {
        return Ok(V::zero());
    }
    let mut owners: FxHashMap<usize, [usize; 2]> = FxHashMap::default();
    for (i, t) in tensors.iter().enumerate() {
        for &e in &t.edges {
            owners
                .entry(e)
                .and_modify(|o| o[1] = i)
                .or_insert([i, usize::MAX]);
        }
    }
    debug_assert!(owners.values().all(|o| o[1] != usize::MAX && o[0] != o[1]));
    let mut slots: Vec<Option<Tensor<V>>> = tensors.into_iter().map(Some).collect();
    let mut stamps = vec![0u64; slots.len()];
    let mut heap = BinaryHeap::new();
    for a in 0..slots.len() {
        for b in neighbours(&slots, &owners, a) {
            if a < b {
                heap.push(candidate(&slots, &stamps, a, b));
            }
        }
    }
    while let Some(c) = heap.pop() {
        if slots[c.a].is_none() || slots[c.b].is_none() || c.stamp != (stamps[c.a], stamps[c.b]) {
            continue;
        }
        let ta = slots[c.a].take().unwrap();
        let tb = slots[c.b].take().unwrap();
        let merged = merge(&ta, &tb, limits)?;
        if merged.entries.is_empty() {
            return Ok(V::zero());
        }
        for &e in &tb.edges {
            if let Some(o) = owners.get_mut(&e) {
                for x in o.iter_mut() {
                    if *x == c.b {
                        *x = c.a;
                    }
                }
            }
        }
        for &e in ta.edges.iter().chain(&tb.edges) {
            if owners.get(&e).is_some_and(|o| o[0] == o[1]) {
                owners.remove(&e);
            }
        }
        slots[c.a] = Some(merged);
        stamps[c.a] += 1;
        stamps[c.b] += 1;
        for n in neighbours(&slots, &owners, c.a) {
            let (x, y) = if c.a < n { (c.a, n) } else { (n, c.a) };
            heap.push(candidate(&slots, &stamps, x, y));
        }
    }
    let mut total = V::one();
    for t in slots.into_iter().flatten() {
        debug_assert!(t.edges.is_empty());
        match t.entries.get(&0) {
            Some(v) => total = total * v,
            None => return Ok(V::zero()),
        }
    }
    Ok(total)
}

fn neighbours<V>(
    slots: &[Option<Tensor<V>>],
    owners: &FxHashMap<usize, [usize; 2]>,
    a: usize,
) -> Vec<usize> {
    let mut out: Vec<usize> = slots[a]
        .as_ref()
        .map(|t| {
            t.edges
                .iter()
                .filter_map(|e| owners.get(e))
                .map(|o| if o[0] == a { o[1] } else { o[0] })
                .collect()
        })
        .unwrap_or_default();
    out.sort_unstable();
    out.dedup();
    out
}

fn candidate<V>(slots: &[Option<Tensor<V>>], stamps: &[u64], a: usize, b: usize) -> Candidate {
    let (ta, tb) = (slots[a].as_ref().unwrap(), slots[b].as_ref().unwrap());
    let shared = ta.edges.iter().filter(|e| tb.edges.contains(e)).count();
    let open = ta.edges.len() + tb.edges.len() - 2 * shared;
    let (na, nb) = (ta.entries.len() as f64, tb.entries.len() as f64);
    // Fewest open edges first; the estimated entry count breaks ties.
    let estimate = (na.log2() + nb.log2() - shared as f64)
        .min(open as f64)
        .max(0.0);
    Candidate {
        score: open as f64 + estimate * 1e-3,
        a,
        b,
        stamp: (stamps[a], stamps[b]),
    }
}

/// Contracts two tensors over their shared edges.
fn merge<V: Value>(a: &Tensor<V>, b: &Tensor<V>, limits: &Limits) -> Result<Tensor<V>> {
    let shared: Vec<usize> = a
        .edges
        .iter()
        .copied()
        .filter(|e| b.edges.contains(e))
        .collect();
    let mut edges: Vec<usize> = a
        .edges
        .iter()
        .copied()
        .filter(|e| !shared.contains(e))
        .collect();
    let a_kept = edges.len();
    edges.extend(b.edges.iter().copied().filter(|e| !shared.contains(e)));
    if edges.len() > 63 {
        return limit(format!(
            "contraction produces a tensor with {} open edges",
            edges.len()
        ));
    }
    // Destination of each source bit: shared index or result bit.
    let route = |t: &Tensor<V>, offset: usize| -> Vec<(bool, u32)> {
        let mut kept = offset as u32;
        t.edges
            .iter()
            .map(|e| match shared.iter().position(|s| s == e) {
                Some(j) => (true, j as u32),
                None => {
                    kept += 1;
                    (false, kept - 1)
                }
            })
            .collect()
    };
    let (ra, rb) = (route(a, 0), route(b, a_kept));
    let split = |mask: u64, r: &[(bool, u32)]| -> (u64, u64) {
        let (mut key, mut out, mut m) = (0u64, 0u64, mask);
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let (is_shared, j) = r[i];
            if is_shared {
                key |= 1 << j;
            } else {
                out |= 1 << j;
            }
        }
        (key, out)
    };
    let mut groups: FxHashMap<u64, Vec<(u64, &V)>> = FxHashMap::default();
    for (&m, v) in &b.entries {
        let (key, out) = split(m, &rb);
        groups.entry(key).or_default().push((out, v));
    }
    let mut entries: FxHashMap<u64, V> = FxHashMap::default();
    for (&m, va) in &a.entries {
        let (key, out) = split(m, &ra);
        if let Some(list) = groups.get(&key) {
            for &(ob, vb) in list {
                let val = va.clone() * vb;
                match entries.get_mut(&(out | ob)) {
                    Some(slot) => *slot += &val,
                    None => {
                        entries.insert(out | ob, val);
                    }
                }
            }
        }
        if entries.len() > limits.states {
            return limit(format!("contraction exceeds {} entries", limits.states));
        }
    }
    entries.retain(|_, v| !v.is_zero());
    Ok(Tensor { edges, entries })
}
