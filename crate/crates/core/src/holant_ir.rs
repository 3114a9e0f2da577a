//! Signature graphs (the Holant IR) and gates.

use num::One;

use crate::error::{invalid, Result};
use crate::graph::{EdgeId, VertexId, WeightedGraph};
use crate::rational::Rational;
use crate::signature::{builtin_signature, Builtin, Signature};

/// A multigraph whose vertices carry signatures and whose edges carry weights.
///
/// An edge may be dangling (one endpoint); those only occur inside gates.
/// The arity of each vertex signature must equal the vertex degree; builders
/// may break this temporarily and [`SignatureGraph::validate`] checks it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignatureGraph {
    incidence: Vec<Vec<EdgeId>>,
    ends: Vec<(VertexId, Option<VertexId>)>,
    weights: Vec<Rational>,
    signatures: Vec<Signature>,
}

impl SignatureGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn num_vertices(&self) -> usize {
        self.incidence.len()
    }

    pub fn num_edges(&self) -> usize {
        self.ends.len()
    }

    pub fn add_vertex(&mut self, signature: Signature) -> VertexId {
        self.incidence.push(Vec::new());
        self.signatures.push(signature);
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
        Ok(self.push_edge(u, Some(v), weight))
    }

    /// Adds a weight-1 edge with the single endpoint `u`.
    pub fn add_dangling(&mut self, u: VertexId) -> Result<EdgeId> {
        if u >= self.num_vertices() {
            return invalid(format!("dangling edge at missing vertex {u}"));
        }
        Ok(self.push_edge(u, None, Rational::one()))
    }

    fn push_edge(&mut self, u: VertexId, v: Option<VertexId>, weight: Rational) -> EdgeId {
        let e = self.ends.len();
        self.ends.push((u, v));
        self.weights.push(weight);
        self.incidence[u].push(e);
        if let Some(v) = v {
            self.incidence[v].push(e);
        }
        e
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, Option<VertexId>) {
        self.ends[e]
    }

    /// The endpoint of `e` other than `v`, or `None` for a dangling edge.
    pub fn other(&self, e: EdgeId, v: VertexId) -> Option<VertexId> {
        match self.ends[e] {
            (a, Some(b)) => Some(if a == v { b } else { a }),
            (_, None) => None,
        }
    }

    pub fn is_dangling(&self, e: EdgeId) -> bool {
        self.ends[e].1.is_none()
    }

    pub fn weight(&self, e: EdgeId) -> &Rational {
        &self.weights[e]
    }

    pub fn set_weight(&mut self, e: EdgeId, w: Rational) {
        self.weights[e] = w;
    }

    pub fn signature(&self, v: VertexId) -> &Signature {
        &self.signatures[v]
    }

    pub fn set_signature(&mut self, v: VertexId, signature: Signature) {
        self.signatures[v] = signature;
    }

    pub fn incidence(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn dangling_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.ends.len()).filter(|&e| self.ends[e].1.is_none())
    }

    /// Checks that every signature arity equals the vertex degree.
    pub fn validate(&self) -> Result<()> {
        for (v, (inc, sig)) in self.incidence.iter().zip(&self.signatures).enumerate() {
            if inc.len() != sig.arity() {
                return invalid(format!(
                    "vertex {v} has degree {} but signature arity {}",
                    inc.len(),
                    sig.arity()
                ));
            }
        }
        Ok(())
    }

    /// Every vertex carries HW_{=1}.
    pub fn is_matchgrid(&self) -> bool {
        self.signatures.iter().all(Signature::is_hw_eq1)
    }

    /// Splits `e = (a, b)` by a new vertex `s` carrying `signature`.
    ///
    /// Edge `e` becomes `a–s` (keeping its slot at `a`) and a new edge `s–b`
    /// takes its slot at `b`; both get weight 1 and `s` sees them in that
    /// order.  Returns `s`.
    pub fn subdivide(&mut self, e: EdgeId, signature: Signature) -> Result<VertexId> {
        let (a, b) = match self.ends[e] {
            (a, Some(b)) => (a, b),
            _ => return invalid("cannot subdivide a dangling edge"),
        };
        let s = self.add_vertex(signature);
        let f = self.ends.len();
        self.ends.push((s, Some(b)));
        self.weights.push(Rational::one());
        self.weights[e] = Rational::one();
        self.ends[e] = (a, Some(s));
        let slot = self.incidence[b]
            .iter()
            .position(|&x| x == e)
            .expect("incidence lists out of sync");
        self.incidence[b][slot] = f;
        self.incidence[s] = vec![e, f];
        Ok(s)
    }

    /// Replaces vertex `v` by a copy of `gate`, identifying the gate's
    /// `i`-th dangling edge with the `i`-th edge of `v`'s incidence list.
    ///
    /// The gate's vertex 0 reuses the id `v`; its other vertices are
    /// appended.  An empty gate (no vertices, arity 0) deletes `v`, which
    /// moves the last vertex into slot `v`.
    pub fn insert_gate(&mut self, v: VertexId, gate: &Gate) -> Result<()> {
        if v >= self.num_vertices() {
            return invalid(format!("vertex {v} does not exist"));
        }
        if gate.arity() != self.degree(v) {
            return invalid(format!(
                "gate arity {} differs from degree {} of vertex {v}",
                gate.arity(),
                self.degree(v)
            ));
        }
        let inner = &gate.graph;
        if inner.num_vertices() == 0 {
            self.remove_isolated(v);
            return Ok(());
        }
        let outer_edges = std::mem::take(&mut self.incidence[v]);
        let vmap: Vec<VertexId> = std::iter::once(v)
            .chain((1..inner.num_vertices()).map(|gv| {
                self.incidence.push(Vec::new());
                self.signatures.push(inner.signatures[gv].clone());
                self.incidence.len() - 1
            }))
            .collect();
        let mut port_of = vec![usize::MAX; inner.num_edges()];
        for (i, &d) in gate.dangling.iter().enumerate() {
            port_of[d] = i;
        }
        let mut emap = vec![0; inner.num_edges()];
        for (ge, &(a, b)) in inner.ends.iter().enumerate() {
            emap[ge] = match b {
                Some(b) => self.push_edge_raw(vmap[a], Some(vmap[b]), inner.weights[ge].clone()),
                None => {
                    let oe = outer_edges[port_of[ge]];
                    let (x, y) = self.ends[oe];
                    self.ends[oe] = if x == v {
                        (vmap[a], y)
                    } else {
                        (x, Some(vmap[a]))
                    };
                    oe
                }
            };
        }
        for (gv, &ov) in vmap.iter().enumerate() {
            self.incidence[ov] = inner.incidence[gv].iter().map(|&ge| emap[ge]).collect();
        }
        self.signatures[v] = inner.signatures[0].clone();
        Ok(())
    }

    fn push_edge_raw(&mut self, u: VertexId, v: Option<VertexId>, weight: Rational) -> EdgeId {
        let e = self.ends.len();
        self.ends.push((u, v));
        self.weights.push(weight);
        e
    }

    fn remove_isolated(&mut self, v: VertexId) {
        let last = self.num_vertices() - 1;
        self.incidence.swap_remove(v);
        self.signatures.swap_remove(v);
        if v != last {
            for &e in &self.incidence[v] {
                let (a, b) = self.ends[e];
                self.ends[e] = if a == last { (v, b) } else { (a, Some(v)) };
            }
        }
    }

    /// Drops every signature, keeping edges and weights.  All edges must
    /// have two endpoints.
    pub fn to_weighted_graph(&self) -> Result<WeightedGraph> {
        let mut g = WeightedGraph::new(self.num_vertices());
        for (e, &(a, b)) in self.ends.iter().enumerate() {
            match b {
                Some(b) => g.add_edge(a, b, self.weights[e].clone())?,
                None => return invalid(format!("edge {e} is dangling")),
            };
        }
        Ok(g)
    }
}

/// A signature graph with an ordered list of weight-1 dangling edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gate {
    graph: SignatureGraph,
    dangling: Vec<EdgeId>,
}

impl Gate {
    /// `dangling` must list every dangling edge of `graph` exactly once.
    pub fn new(graph: SignatureGraph, dangling: Vec<EdgeId>) -> Result<Self> {
        graph.validate()?;
        let mut seen = vec![false; graph.num_edges()];
        for &d in &dangling {
            if d >= graph.num_edges()
                || !graph.is_dangling(d)
                || std::mem::replace(&mut seen[d], true)
            {
                return invalid(format!("edge {d} is not a fresh dangling edge"));
            }
            if !graph.weight(d).is_one() {
                return invalid(format!("dangling edge {d} has weight other than 1"));
            }
        }
        if graph.dangling_edges().any(|e| !seen[e]) {
            return invalid("gate has an unlisted dangling edge");
        }
        Ok(Self { graph, dangling })
    }

    /// A gate whose dangling edges are taken in edge-id order.
    pub fn from_graph(graph: SignatureGraph) -> Result<Self> {
        let dangling = graph.dangling_edges().collect();
        Self::new(graph, dangling)
    }

    pub fn arity(&self) -> usize {
        self.dangling.len()
    }

    pub fn graph(&self) -> &SignatureGraph {
        &self.graph
    }

    pub fn dangling(&self) -> &[EdgeId] {
        &self.dangling
    }

    /// Every vertex carries HW_{=1}.
    pub fn is_matchgate(&self) -> bool {
        self.graph.is_matchgrid()
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn num_edges(&self) -> usize {
        self.graph.num_edges()
    }
}

/// Places HW_{=1} at every vertex of an edge-weighted graph.
pub fn graph_to_signature_graph(g: &WeightedGraph) -> Result<SignatureGraph> {
    if g.vertex_weights().is_some() {
        return invalid("graph_to_signature_graph needs a graph without vertex weights");
    }
    let mut omega = SignatureGraph::new();
    for v in 0..g.num_vertices() {
        omega.add_vertex(builtin_signature(Builtin::HwEq1, g.degree(v))?);
    }
    for (_, u, v, w) in g.edges() {
        omega.add_edge(u, v, w.clone())?;
    }
    Ok(omega)
}

/// Places VTX_{w(v)} at every vertex of a vertex-weighted graph; edges keep
/// weight 1.
pub fn matchsum_signature_graph(g: &WeightedGraph) -> Result<SignatureGraph> {
    let Some(weights) = g.vertex_weights() else {
        return invalid("matchsum_signature_graph needs vertex weights");
    };
    if !g.has_unit_edge_weights() {
        return invalid("vertex-weighted graphs must have unit edge weights");
    }
    let mut omega = SignatureGraph::new();
    for (v, w) in weights.iter().enumerate() {
        omega.add_vertex(builtin_signature(Builtin::Vtx(w.clone()), g.degree(v))?);
    }
    for (_, u, v, _) in g.edges() {
        omega.add_edge(u, v, Rational::one())?;
    }
    Ok(omega)
}
