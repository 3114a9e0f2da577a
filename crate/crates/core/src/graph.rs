//! Weighted multigraphs with ordered incidence lists.

use rustc_hash::FxHashSet;

use num::{One, Signed};

use crate::error::{invalid, Result};
use crate::rational::Rational;

pub type VertexId = usize;
pub type EdgeId = usize;

/// A loop-free multigraph with rational edge weights and optional vertex weights.
///
/// Edge `e` appears in the incidence lists of both endpoints, in the order in
/// which edges were added.  Graphs used for perfect matchings carry edge
/// weights only; graphs used for matching sums carry vertex weights and unit
/// edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedGraph {
    incidence: Vec<Vec<EdgeId>>,
    ends: Vec<[VertexId; 2]>,
    edge_weights: Vec<Rational>,
    vertex_weights: Option<Vec<Rational>>,
}

impl WeightedGraph {
    /// `n` vertices, no edges, no vertex weights.
    pub fn new(n: usize) -> Self {
        Self {
            incidence: vec![Vec::new(); n],
            ..Self::default()
        }
    }

    /// Vertex-weighted graph with one vertex per weight.
    pub fn with_vertex_weights(weights: Vec<Rational>) -> Self {
        Self {
            incidence: vec![Vec::new(); weights.len()],
            vertex_weights: Some(weights),
            ..Self::default()
        }
    }

    /// Builds an edge-weighted graph from `(u, v, w)` triples.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId, Rational)>,
    ) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    /// Unit-weight graph from endpoint pairs.
    pub fn unweighted(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        Self::from_edges(n, edges.iter().map(|&(u, v)| (u, v, Rational::one())))
    }

    pub fn num_vertices(&self) -> usize {
        self.incidence.len()
    }

    pub fn num_edges(&self) -> usize {
        self.ends.len()
    }

    /// Appends a vertex; its weight is 0 in vertex-weighted graphs.
    pub fn add_vertex(&mut self) -> VertexId {
        self.incidence.push(Vec::new());
        if let Some(w) = &mut self.vertex_weights {
            w.push(Rational::default());
        }
        self.incidence.len() - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, weight: Rational) -> Result<EdgeId> {
        let n = self.num_vertices();
        if u >= n || v >= n {
            return invalid(format!(
                "edge ({u}, {v}) references a vertex outside 0..{n}"
            ));
        }
        if u == v {
            return invalid(format!("self-loop at vertex {u}"));
        }
        let e = self.ends.len();
        self.ends.push([u, v]);
        self.edge_weights.push(weight);
        self.incidence[u].push(e);
        self.incidence[v].push(e);
        Ok(e)
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [u, v] = self.ends[e];
        (u, v)
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn weight(&self, e: EdgeId) -> &Rational {
        &self.edge_weights[e]
    }

    pub fn edge_weights(&self) -> &[Rational] {
        &self.edge_weights
    }

    pub fn set_edge_weight(&mut self, e: EdgeId, w: Rational) {
        self.edge_weights[e] = w;
    }

    pub fn vertex_weights(&self) -> Option<&[Rational]> {
        self.vertex_weights.as_deref()
    }

    pub fn set_vertex_weights(&mut self, weights: Option<Vec<Rational>>) -> Result<()> {
        if let Some(w) = &weights {
            if w.len() != self.num_vertices() {
                return invalid("vertex weight count differs from vertex count");
            }
        }
        self.vertex_weights = weights;
        Ok(())
    }

    pub fn incidence(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    /// `(edge, u, v, weight)` in edge order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId, &Rational)> + '_ {
        self.ends
            .iter()
            .zip(&self.edge_weights)
            .enumerate()
            .map(|(e, (&[u, v], w))| (e, u, v, w))
    }

    /// No two edges share both endpoints.
    pub fn is_simple(&self) -> bool {
        let mut seen = FxHashSet::default();
        self.ends
            .iter()
            .all(|&[u, v]| seen.insert((u.min(v), u.max(v))))
    }

    pub fn has_unit_edge_weights(&self) -> bool {
        self.edge_weights.iter().all(One::is_one)
    }

    /// Every edge weight is 1 or -1.
    pub fn has_sign_weights(&self) -> bool {
        self.edge_weights.iter().all(|w| w.abs().is_one())
    }

    /// Simple, unit-weighted and without vertex weights.
    pub fn is_plain(&self) -> bool {
        self.vertex_weights.is_none() && self.has_unit_edge_weights() && self.is_simple()
    }
}
