//! Greedy vertex orders that keep the sweep boundary small.

use std::collections::BTreeSet;

/// What the sweep keeps open between processed and unprocessed vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrontierKind {
    /// Unprocessed vertices with a processed neighbour (matching sweeps).
    Vertices,
    /// Edges with exactly one processed endpoint (Holant sweeps).
    Edges,
}

/// How many of the oldest boundary vertices are scored at each step.  Large
/// graphs, which no exact sweep will ever visit, get a near-BFS order.
const CANDIDATES: usize = 96;
const LARGE_GRAPH: usize = 1 << 16;
/// Boundary growth at which vertices just off the boundary are also tried
/// (not on large graphs).
const EXPENSIVE: i64 = 8;

/// Orders the vertices of the multigraph `adj` (neighbour lists with
/// multiplicity) so that the boundary stays small.
///
/// The next vertex is always taken from the current boundary when one
/// exists: among the oldest few boundary vertices, the one whose processing
/// grows the boundary least, ties going to the oldest.  A new component
/// starts at an unprocessed vertex of least degree.
pub fn elimination_order(adj: &[Vec<usize>], kind: FrontierKind) -> Vec<usize> {
    let n = adj.len();
    let mut done = vec![false; n];
    let mut joined: Vec<Option<usize>> = vec![None; n];
    let mut front: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut order = Vec::with_capacity(n);
    let mut stamp = vec![0usize; n];
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (adj[v].len(), v));
    let mut seed_ptr = 0;
    let mut clock = 0;
    let mut tag = 0;
    let candidates = if n > LARGE_GRAPH { 2 } else { CANDIDATES };

    while order.len() < n {
        let v = match front.is_empty() {
            true => {
                while done[by_degree[seed_ptr]] {
                    seed_ptr += 1;
                }
                by_degree[seed_ptr]
            }
            false => {
                let mut best: Option<(i64, (usize, usize))> = None;
                for &(t, c) in front.iter().take(candidates) {
                    tag += 1;
                    let cost = growth(adj, c, kind, &done, &joined, &mut stamp, tag);
                    if best.map_or(true, |(b, _)| cost < b) {
                        best = Some((cost, (t, c)));
                    }
                }
                let (cost, key) = best.expect("front is not empty");
                match (cost >= EXPENSIVE && n <= LARGE_GRAPH)
                    .then(|| {
                        outside_step(
                            adj, &front, candidates, kind, &done, &joined, &mut stamp, &mut tag,
                        )
                    })
                    .flatten()
                {
                    Some((c, u)) if c < cost => u,
                    _ => {
                        front.remove(&key);
                        key.1
                    }
                }
            }
        };
        if let Some(t) = joined[v] {
            front.remove(&(t, v));
        }
        done[v] = true;
        order.push(v);
        for &u in &adj[v] {
            if !done[u] && joined[u].is_none() {
                joined[u] = Some(clock);
                front.insert((clock, u));
                clock += 1;
            }
        }
    }
    order
}

/// Unprocessed neighbours of the oldest boundary vertices that are not on
/// the boundary themselves, with the growth of taking one next.  Lets a
/// bundle of paths at a hub be swept one path at a time.
#[allow(clippy::too_many_arguments)]
fn outside_step(
    adj: &[Vec<usize>],
    front: &BTreeSet<(usize, usize)>,
    candidates: usize,
    kind: FrontierKind,
    done: &[bool],
    joined: &[Option<usize>],
    stamp: &mut [usize],
    tag: &mut usize,
) -> Option<(i64, usize)> {
    let mut best: Option<(i64, usize)> = None;
    for &(_, c) in front.iter().take(candidates) {
        for &x in &adj[c] {
            if done[x] || joined[x].is_some() {
                continue;
            }
            *tag += 1;
            // `x` itself is not on the boundary yet, so nothing leaves it.
            let cost = growth(adj, x, kind, done, joined, stamp, *tag)
                + i64::from(kind == FrontierKind::Vertices);
            if best.map_or(true, |(b, _)| cost < b) {
                best = Some((cost, x));
            }
        }
    }
    best
}

fn growth(
    adj: &[Vec<usize>],
    v: usize,
    kind: FrontierKind,
    done: &[bool],
    joined: &[Option<usize>],
    stamp: &mut [usize],
    tag: usize,
) -> i64 {
    match kind {
        FrontierKind::Vertices => {
            let mut fresh = 0i64;
            for &u in &adj[v] {
                if !done[u] && joined[u].is_none() && stamp[u] != tag {
                    stamp[u] = tag;
                    fresh += 1;
                }
            }
            fresh - 1
        }
        FrontierKind::Edges => {
            let opened = adj[v].iter().filter(|&&u| !done[u]).count() as i64;
            opened - (adj[v].len() as i64 - opened)
        }
    }
}

/// Largest boundary size reached when sweeping `adj` in `order`.
pub fn max_frontier(adj: &[Vec<usize>], order: &[usize], kind: FrontierKind) -> usize {
    let n = adj.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut width = 0i64;
    let mut best = 0i64;
    let mut touched = vec![false; n];
    for (i, &v) in order.iter().enumerate() {
        match kind {
            FrontierKind::Vertices => {
                if touched[v] {
                    width -= 1;
                }
                for &u in &adj[v] {
                    if pos[u] > i && !touched[u] {
                        touched[u] = true;
                        width += 1;
                    }
                }
            }
            FrontierKind::Edges => {
                for &u in &adj[v] {
                    width += if pos[u] > i { 1 } else { -1 };
                }
            }
        }
        best = best.max(width);
    }
    best as usize
}
