use rustc_hash::FxHashSet;

use num::One;

use crate::error::{invalid, Result};
use crate::graph::{VertexId, WeightedGraph};
use crate::rational::Rational;

/// Keeps the first edge between each vertex pair and subdivides every later
/// parallel copy twice.  A weighted copy keeps its weight on the edge at its
/// first endpoint; the perfect-matching sum is unchanged.
pub fn simplify_to_simple(g: &WeightedGraph) -> Result<WeightedGraph> {
    if g.vertex_weights().is_some() {
        return invalid("simplify_to_simple needs a graph without vertex weights");
    }
    let mut out = SimpleBuilder::new(g.num_vertices());
    for (_, u, v, w) in g.edges() {
        out.add(u, v, w.clone());
    }
    Ok(out.finish())
}

/// Accumulates a simple graph, routing repeated pairs through two fresh
/// vertices.
pub(crate) struct SimpleBuilder {
    g: WeightedGraph,
    seen: FxHashSet<(VertexId, VertexId)>,
}

impl SimpleBuilder {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            g: WeightedGraph::new(n),
            seen: FxHashSet::default(),
        }
    }

    pub(crate) fn vertex(&mut self) -> VertexId {
        self.g.add_vertex()
    }

    /// Adds an edge `u–v` of weight `w`, or the path `u–a–b–v` with weights
    /// `(w, 1, 1)` when the pair is already joined.
    pub(crate) fn add(&mut self, u: VertexId, v: VertexId, w: Rational) {
        if self.seen.insert((u.min(v), u.max(v))) {
            self.g.add_edge(u, v, w).expect("valid endpoints");
        } else {
            let a = self.g.add_vertex();
            let b = self.g.add_vertex();
            self.g.add_edge(u, a, w).expect("fresh vertex");
            self.g
                .add_edge(a, b, Rational::one())
                .expect("fresh vertex");
            self.g
                .add_edge(b, v, Rational::one())
                .expect("fresh vertex");
        }
    }

    pub(crate) fn finish(self) -> WeightedGraph {
        self.g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{count_perfect_matchings, Limits};

    #[test]
    fn doubled_and_tripled_edges() {
        let l = Limits::default();
        for copies in 1..=3 {
            let edges = vec![(0, 1); copies];
            let g = WeightedGraph::unweighted(2, &edges).unwrap();
            let s = simplify_to_simple(&g).unwrap();
            assert!(s.is_simple());
            assert_eq!(s.num_vertices(), 2 + 2 * (copies - 1));
            assert_eq!(
                count_perfect_matchings(&s, &l).unwrap(),
                count_perfect_matchings(&g, &l).unwrap()
            );
        }
    }

    #[test]
    fn simple_graph_unchanged() {
        let g = WeightedGraph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(simplify_to_simple(&g).unwrap(), g);
    }
}
