use num::{One, Zero};
use rustc_hash::FxHashMap;

use super::order::{elimination_order, FrontierKind};
use super::{count_perfect_matchings, Limits};
use crate::error::{limit, Result};
use crate::graph::WeightedGraph;
use crate::holant_ir::{Gate, SignatureGraph};
use crate::rational::Rational;
use crate::signature::{subsets_of_size, Signature};

/// Σ over all edge assignments of edge-weight products times vertex values.
/// Dangling edges, if any, are summed over like every other edge.
pub fn holant(omega: &SignatureGraph, limits: &Limits) -> Result<Rational> {
    omega.validate()?;
    let plan = Plan::new(omega, limits)?;
    plan.run(omega, &[], limits)
}

/// The signature realised by a gate: for each boundary assignment, the sum
/// over all internal extensions.
pub fn gate_signature(gate: &Gate, limits: &Limits) -> Result<Signature> {
    let k = gate.arity();
    if k > limits.arity {
        return limit(format!("gate arity {k} exceeds limit {}", limits.arity));
    }
    if gate.is_matchgate() {
        return matchgate_signature(gate, limits);
    }
    let omega = gate.graph();
    let plan = Plan::new(omega, limits)?;
    let mut pinned = vec![None; omega.num_edges()];
    let mut table = Vec::with_capacity(1 << k);
    for x in 0..1u64 << k {
        for (i, &d) in gate.dangling().iter().enumerate() {
            pinned[d] = Some(x >> i & 1 == 1);
        }
        table.push(plan.run(omega, &pinned, limits)?);
    }
    Signature::from_table(table)
}

/// All vertices are HW_{=1}: an input pins its ports' dangling edges, so
/// each entry is the perfect-matching sum of the gate minus the ports
/// matched outside.
fn matchgate_signature(gate: &Gate, limits: &Limits) -> Result<Signature> {
    let omega = gate.graph();
    let n = omega.num_vertices();
    let mut table = Vec::with_capacity(1 << gate.arity());
    for x in 0..1u64 << gate.arity() {
        let mut used = vec![false; n];
        let mut clash = false;
        for (i, &d) in gate.dangling().iter().enumerate() {
            if x >> i & 1 == 1 {
                clash |= std::mem::replace(&mut used[omega.endpoints(d).0], true);
            }
        }
        if clash {
            table.push(Rational::zero());
            continue;
        }
        let mut index = vec![usize::MAX; n];
        let mut kept = 0;
        for v in (0..n).filter(|&v| !used[v]) {
            index[v] = kept;
            kept += 1;
        }
        let mut g = WeightedGraph::new(kept);
        for e in 0..omega.num_edges() {
            if let (a, Some(b)) = omega.endpoints(e) {
                if !used[a] && !used[b] {
                    g.add_edge(index[a], index[b], omega.weight(e).clone())?;
                }
            }
        }
        table.push(count_perfect_matchings(&g, limits)?);
    }
    Signature::from_table(table)
}

#[derive(Clone, Copy)]
enum Role {
    /// Edge to an earlier vertex; value read from (and then clears) a slot.
    Known(u32),
    /// Edge to a later vertex; value chosen here and stored in a slot.
    Open(u32),
    /// Dangling edge.
    Loose,
}

struct Plan {
    order: Vec<usize>,
    roles: Vec<Vec<Role>>,
}

impl Plan {
    fn new(omega: &SignatureGraph, limits: &Limits) -> Result<Self> {
        let n = omega.num_vertices();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                omega
                    .incidence(v)
                    .iter()
                    .filter_map(|&e| omega.other(e, v))
                    .collect()
            })
            .collect();
        let order = elimination_order(&adj, FrontierKind::Edges);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let cap = limits.frontier.min(63);
        let mut slot_of_edge: FxHashMap<usize, u32> = FxHashMap::default();
        let mut free: Vec<u32> = (0..64).rev().collect();
        let mut roles = vec![Vec::new(); n];
        for (i, &v) in order.iter().enumerate() {
            let mut r = Vec::with_capacity(omega.degree(v));
            for &e in omega.incidence(v) {
                r.push(match omega.other(e, v) {
                    None => Role::Loose,
                    Some(u) if pos[u] < i => {
                        let s = slot_of_edge.remove(&e).expect("edge slot missing");
                        free.push(s);
                        Role::Known(s)
                    }
                    Some(_) => Role::Open(u32::MAX),
                });
            }
            free.sort_unstable_by(|a, b| b.cmp(a));
            for (idx, &e) in omega.incidence(v).iter().enumerate() {
                if let Role::Open(_) = r[idx] {
                    let s = free.pop().expect("slot pool exhausted");
                    if s as usize >= cap {
                        return limit(format!("Holant sweep boundary exceeds {cap} edges"));
                    }
                    slot_of_edge.insert(e, s);
                    r[idx] = Role::Open(s);
                }
            }
            roles[v] = r;
        }
        Ok(Self { order, roles })
    }

    fn run(
        &self,
        omega: &SignatureGraph,
        pinned: &[Option<bool>],
        limits: &Limits,
    ) -> Result<Rational> {
        let mut cur: FxHashMap<u64, Rational> = FxHashMap::default();
        cur.insert(0, Rational::one());
        for &v in &self.order {
            let sig = omega.signature(v);
            let roles = &self.roles[v];
            let inc = omega.incidence(v);
            // Positions whose value is chosen at this vertex.
            let mut choose: Vec<usize> = Vec::new();
            let mut fixed_index = 0u64;
            let mut clear = 0u64;
            for (i, role) in roles.iter().enumerate() {
                match *role {
                    Role::Known(s) => clear |= 1 << s,
                    Role::Open(_) => choose.push(i),
                    Role::Loose => match pinned.get(inc[i]).copied().flatten() {
                        Some(b) => fixed_index |= (b as u64) << i,
                        None => choose.push(i),
                    },
                }
            }
            let mut next: FxHashMap<u64, Rational> = FxHashMap::default();
            for (mask, val) in cur {
                let mut index = fixed_index;
                for (i, role) in roles.iter().enumerate() {
                    if let Role::Known(s) = *role {
                        index |= (mask >> s & 1) << i;
                    }
                }
                let base = mask & !clear;
                for_each_completion(sig, index, &choose, |full| {
                    let f = sig.value_ref(full);
                    if f.is_zero() {
                        return;
                    }
                    let mut term = val.clone() * f;
                    let mut key = base;
                    for &i in &choose {
                        if full >> i & 1 == 1 {
                            term *= omega.weight(inc[i]);
                            if let Role::Open(s) = roles[i] {
                                key |= 1 << s;
                            }
                        }
                    }
                    if term.is_zero() {
                        return;
                    }
                    match next.get_mut(&key) {
                        Some(acc) => *acc += term,
                        None => {
                            next.insert(key, term);
                        }
                    }
                });
            }
            next.retain(|_, v| !v.is_zero());
            if next.len() > limits.states {
                return limit(format!("Holant sweep exceeds {} states", limits.states));
            }
            cur = next;
        }
        Ok(cur.remove(&0).unwrap_or_else(Rational::zero))
    }
}

/// Calls `f` on every index extending `index` on the positions `choose`,
/// skipping Hamming weights where a symmetric signature vanishes.
fn for_each_completion(sig: &Signature, index: u64, choose: &[usize], mut f: impl FnMut(u64)) {
    let spread = |sub: u64| {
        choose
            .iter()
            .enumerate()
            .fold(index, |acc, (j, &i)| acc | ((sub >> j & 1) << i))
    };
    let c = choose.len();
    match sig.symmetric_values() {
        Some(values) => {
            let known = index.count_ones() as usize;
            for (h, val) in values.iter().enumerate() {
                if val.is_zero() || h < known || h - known > c {
                    continue;
                }
                for sub in subsets_of_size(c, h - known) {
                    f(spread(sub));
                }
            }
        }
        None => {
            for sub in 0..1u64 << c {
                f(spread(sub));
            }
        }
    }
}
