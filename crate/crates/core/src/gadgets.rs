//! Gate library: the signed edge gate, EVEN/ODD and EQ matchgates, generic
//! realisation of even signatures, and lowering of whole signature graphs to
//! edge-weighted graphs.
//!
//! Every gate here is accepted because its realised signature, computed by
//! the oracle, equals the target; see the tests and the catalog export.

use num::{One, Zero};
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{invalid, limit, Result};
use crate::graph::{EdgeId, VertexId, WeightedGraph};
use crate::holant_ir::{Gate, SignatureGraph};
use crate::oracle::{gate_signature, Limits};
use crate::rational::{int, ratio, Rational};
use crate::signature::{builtin_signature, Builtin, Signature};

/// Largest support `realize_even_signature` will expand.
pub const MAX_REALIZED_SUPPORT: usize = 1 << 16;

/// Replaces vertex `v` of `omega` by `gate`; see [`SignatureGraph::insert_gate`].
pub fn insert_gate(omega: &SignatureGraph, v: VertexId, gate: &Gate) -> Result<SignatureGraph> {
    let mut out = omega.clone();
    out.insert_gate(v, gate)?;
    Ok(out)
}

/// Incremental gate construction; vertices receive HW_{=1} (or another
/// symmetric signature) of their final degree in [`Builder::finish`].
struct Builder {
    g: SignatureGraph,
    ports: Vec<EdgeId>,
    vertex_weights: Vec<Rational>,
}

impl Builder {
    fn new() -> Self {
        Self {
            g: SignatureGraph::new(),
            ports: Vec::new(),
            vertex_weights: Vec::new(),
        }
    }

    fn vertex(&mut self) -> VertexId {
        self.vertex_weights.push(Rational::zero());
        self.g.add_vertex(Signature::constant(Rational::zero()))
    }

    fn edge(&mut self, a: VertexId, b: VertexId, w: Rational) {
        self.g
            .add_edge(a, b, w)
            .expect("builder edges join existing distinct vertices");
    }

    fn port(&mut self, a: VertexId) {
        let d = self
            .g
            .add_dangling(a)
            .expect("builder ports attach to existing vertices");
        self.ports.push(d);
    }

    /// Each vertex gets VTX of its recorded weight, which is HW_{=1} for 0.
    fn finish(mut self) -> Gate {
        for v in 0..self.g.num_vertices() {
            let sig = builtin_signature(
                Builtin::Vtx(self.vertex_weights[v].clone()),
                self.g.degree(v),
            )
            .expect("VTX exists at every arity");
            self.g.set_signature(v, sig);
        }
        Gate::new(self.g, self.ports).expect("builder produces consistent gates")
    }
}

/// Three VTX vertices `u (1) – c (-1) – v (1)` with dangling edges at `u`
/// and `v`; realises EDGE_{-1}.
pub fn edge_minus_one_gate() -> Gate {
    let mut b = Builder::new();
    let u = b.vertex();
    let c = b.vertex();
    let v = b.vertex();
    b.vertex_weights[u] = int(1);
    b.vertex_weights[c] = int(-1);
    b.vertex_weights[v] = int(1);
    b.port(u);
    b.port(v);
    b.edge(u, c, int(1));
    b.edge(v, c, int(1));
    b.finish()
}

/// Path `a – m1 – m2 – b` with the middle edge weighted `w`; realises EDGE_w.
pub fn edge_weight_gate(w: Rational) -> Gate {
    let mut b = Builder::new();
    let a = b.vertex();
    let m1 = b.vertex();
    let m2 = b.vertex();
    let z = b.vertex();
    b.port(a);
    b.edge(a, m1, int(1));
    b.edge(m1, m2, w);
    b.edge(m2, z, int(1));
    b.port(z);
    b.finish()
}

fn even3() -> Gate {
    // Ports a, b, c and a hub z: a and b may pair up or one of the three
    // ports takes z.
    let mut g = Builder::new();
    let a = g.vertex();
    let b = g.vertex();
    let c = g.vertex();
    let z = g.vertex();
    for p in [a, b, c] {
        g.port(p);
    }
    g.edge(a, b, int(1));
    for p in [a, b, c] {
        g.edge(p, z, int(1));
    }
    g.finish()
}

fn odd3() -> Gate {
    let mut g = Builder::new();
    let vs = [g.vertex(), g.vertex(), g.vertex()];
    for &p in &vs {
        g.port(p);
    }
    g.edge(vs[0], vs[1], int(1));
    g.edge(vs[1], vs[2], int(1));
    g.edge(vs[2], vs[0], int(1));
    g.finish()
}

/// Chain of `len` vertices of arity `a` carrying `sig(j)`: the first has a
/// leading port, the last a trailing port, neighbours share one edge and
/// every vertex has `a - 2` ports in between.
fn chain(len: usize, a: usize, sig: impl Fn(usize) -> Signature) -> (SignatureGraph, Vec<EdgeId>) {
    let mut g = SignatureGraph::new();
    let mut ports = Vec::new();
    let vs: Vec<VertexId> = (0..len).map(|j| g.add_vertex(sig(j))).collect();
    for j in 0..len {
        if j == 0 {
            ports.push(g.add_dangling(vs[j]).unwrap());
        }
        for _ in 0..a - 2 {
            ports.push(g.add_dangling(vs[j]).unwrap());
        }
        if j + 1 < len {
            g.add_edge(vs[j], vs[j + 1], int(1)).unwrap();
        } else {
            ports.push(g.add_dangling(vs[j]).unwrap());
        }
    }
    (g, ports)
}

fn expand_chain(
    mut g: SignatureGraph,
    ports: Vec<EdgeId>,
    gate_for: impl Fn(&Signature) -> Gate,
) -> Gate {
    for v in 0..g.num_vertices() {
        let gate = gate_for(g.signature(v));
        g.insert_gate(v, &gate)
            .expect("chain vertices match their gadgets");
    }
    Gate::new(g, ports).expect("chain expansion keeps ports")
}

fn parity_gate(k: usize, odd: bool) -> Gate {
    let mut b = Builder::new();
    match (k, odd) {
        (0, false) => return Gate::new(SignatureGraph::new(), Vec::new()).unwrap(),
        (0, true) => {
            b.vertex();
        }
        (1, false) => {
            let p = b.vertex();
            let q = b.vertex();
            b.port(p);
            b.edge(p, q, int(1));
        }
        (1, true) => {
            let p = b.vertex();
            b.port(p);
        }
        (2, false) => {
            let p = b.vertex();
            let q = b.vertex();
            b.port(p);
            b.port(q);
            b.edge(p, q, int(1));
        }
        (2, true) => {
            let p = b.vertex();
            let m = b.vertex();
            let q = b.vertex();
            b.port(p);
            b.port(q);
            b.edge(p, m, int(1));
            b.edge(m, q, int(1));
        }
        (3, false) => return even3(),
        (3, true) => return odd3(),
        _ => {
            let len = k - 2;
            let (g, ports) = chain(len, 3, |j| {
                let kind = if odd && j + 1 == len {
                    Builtin::Odd
                } else {
                    Builtin::Even
                };
                builtin_signature(kind, 3).unwrap()
            });
            return expand_chain(
                g,
                ports,
                |s| if s.is_odd_parity() { odd3() } else { even3() },
            );
        }
    }
    b.finish()
}

/// Unweighted matchgate realising EVEN_k.
pub fn even_gate(k: usize) -> Gate {
    parity_gate(k, false)
}

/// Unweighted matchgate realising ODD_k.
pub fn odd_gate(k: usize) -> Gate {
    parity_gate(k, true)
}

/// Ports `c1..c4`, each hanging off its own `d_i`, over a core in which the
/// weight-two patterns cancel in pairs.  Every half-weight meets `d_4`, so
/// doubling the edges at `d_4` gives an integer gadget for `2 EQ_4`.
fn eq4(integral: bool) -> Gate {
    let (h, c4) = if integral {
        (int(1), int(2))
    } else {
        (ratio(1, 2), int(1))
    };
    let mut b = Builder::new();
    let c: Vec<VertexId> = (0..4).map(|_| b.vertex()).collect();
    let d: Vec<VertexId> = (0..4).map(|_| b.vertex()).collect();
    let e1 = b.vertex();
    let e2 = b.vertex();
    for i in 0..4 {
        b.port(c[i]);
        b.edge(c[i], d[i], if i == 3 { c4.clone() } else { int(1) });
    }
    b.edge(e1, e2, int(1));
    b.edge(d[0], e1, int(1));
    b.edge(d[1], e1, int(1));
    b.edge(d[2], e2, int(1));
    b.edge(d[3], e2, -h.clone());
    b.edge(d[0], d[2], int(-1));
    b.edge(d[0], d[3], h.clone());
    b.edge(d[1], d[2], int(-1));
    b.edge(d[1], d[3], h);
    b.finish()
}

fn eq_gate_mode(k: usize, integral: bool) -> Result<(Gate, u64)> {
    if k % 2 == 1 {
        return invalid(format!("EQ_{k} is not even"));
    }
    let doubled = |t: usize| if integral { t as u64 } else { 0 };
    Ok(match k {
        0 => (even_gate(0), 0),
        2 => (even_gate(2), 0),
        4 => (eq4(integral), doubled(1)),
        _ => {
            let len = k / 2 - 1;
            let (g, ports) = chain(len, 4, |_| builtin_signature(Builtin::Eq, 4).unwrap());
            (expand_chain(g, ports, |_| eq4(integral)), doubled(len))
        }
    })
}

/// Matchgate realising EQ_k for even `k`; weights lie in {1, -1, 1/2, -1/2}.
pub fn eq_gate(k: usize) -> Result<Gate> {
    Ok(eq_gate_mode(k, false)?.0)
}

/// Integer-weighted matchgate realising `2^t EQ_k`, returned with `t`.
///
/// No integer-weighted matchgate realises EQ_4 itself: over the integers the
/// perfect-matching count and the Pfaffian agree mod 2, and the matchgate
/// identities fail for EQ_4 mod 2.
pub fn integral_eq_gate(k: usize) -> Result<(Gate, u64)> {
    eq_gate_mode(k, true)
}

/// A matchgate realising the even signature `f` by branch selection.
///
/// Ports `b_1..b_k` each carry their dangling edge; for even `k` a phantom
/// vertex is added so every support string has an odd number of zero slots.
/// A selector vertex is joined with weight `f(s)` to one port of an EQ
/// matchgate per support string `s`, whose other ports are joined to the
/// phantom and to the `b_i` with `s_i = 0`.  Choosing branch `s` forces those
/// `b_i` to be matched internally and every other `b_i` to use its dangling
/// edge, so the boundary must equal `s`.
pub fn realize_even_signature(f: &Signature) -> Result<Gate> {
    Ok(realize_mode(f, false)?.0)
}

/// Like [`realize_even_signature`] with integer EQ gadgets; the gate
/// realises `2^t f` and is returned with `t`.  An unselected branch still
/// sees EQ on all-zero inputs, so every branch contributes its factor
/// whichever one is chosen and `t` is their sum.
pub fn integral_realize_even_signature(f: &Signature) -> Result<(Gate, u64)> {
    realize_mode(f, true)
}

fn realize_mode(f: &Signature, integral: bool) -> Result<(Gate, u64)> {
    if !f.is_even() {
        return invalid("realize_even_signature needs an even signature");
    }
    let k = f.arity();
    if k >= 64 {
        return limit(format!("arity {k} is too large to enumerate"));
    }
    let support = f.support(MAX_REALIZED_SUPPORT)?;
    let mut branches = Vec::with_capacity(support.len());
    let phantom_slot = usize::from(k % 2 == 0);
    for (s, value) in support {
        let zeros = (0..k).filter(|&i| s >> i & 1 == 0).count();
        let (eq, t) = eq_gate_mode(zeros + phantom_slot + 1, integral)?;
        branches.push((s, value, eq, t));
    }
    let total = branches.iter().map(|b| b.3).sum();
    let mut b = Builder::new();
    let ports: Vec<VertexId> = (0..k).map(|_| b.vertex()).collect();
    for &p in &ports {
        b.port(p);
    }
    let phantom = (k % 2 == 0).then(|| b.vertex());
    let selector = b.vertex();
    for (s, value, eq, _) in branches {
        let mut targets: Vec<VertexId> = phantom.into_iter().collect();
        targets.extend((0..k).filter(|&i| s >> i & 1 == 0).map(|i| ports[i]));
        let mut attach = vec![(selector, value)];
        attach.extend(targets.into_iter().map(|t| (t, Rational::one())));
        embed(&mut b, &eq, &attach);
    }
    Ok((b.finish(), total))
}

/// Matchgate for the doubled clause signature with the given literal signs
/// (`true` for a positive literal), built as "pairs agree" minus the one
/// falsifying pattern.
///
/// Each positive pair of ports is joined by an edge, each negative pair by
/// a path through two middle vertices.  With the EQ branch idle these
/// realise `[a = a']` per pair.  With it active (one port edge weighted -1)
/// the branch consumes the ports of positive pairs and the middle vertices
/// of negative ones, which forces the falsifying pattern.
fn clause_gate_mode(positive: &[bool], integral: bool) -> Result<(Gate, u64)> {
    let mut b = Builder::new();
    let ports: Vec<VertexId> = (0..2 * positive.len()).map(|_| b.vertex()).collect();
    for &p in &ports {
        b.port(p);
    }
    let mut targets = Vec::with_capacity(ports.len());
    for (i, &pos) in positive.iter().enumerate() {
        let (x, y) = (ports[2 * i], ports[2 * i + 1]);
        if pos {
            b.edge(x, y, int(1));
            targets.extend([x, y]);
        } else {
            let (m1, m2) = (b.vertex(), b.vertex());
            b.edge(x, m1, int(1));
            b.edge(m1, m2, int(1));
            b.edge(m2, y, int(1));
            targets.extend([m1, m2]);
        }
    }
    let (eq, t) = eq_gate_mode(targets.len(), integral)?;
    let attach: Vec<(VertexId, Rational)> = targets
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, if i == 0 { int(-1) } else { int(1) }))
        .collect();
    embed(&mut b, &eq, &attach);
    Ok((b.finish(), t))
}

/// Matchgate realising the doubled clause signature of `clause`.
pub fn clause_gate(clause: &[crate::cnf::Literal]) -> Result<Gate> {
    if clause.is_empty() {
        return invalid("an empty clause has no clause gate");
    }
    let signs: Vec<bool> = clause.iter().map(|l| l.is_positive()).collect();
    Ok(clause_gate_mode(&signs, false)?.0)
}

/// Literal signs when `f` is a doubled clause signature.
fn clause_signs(f: &Signature) -> Option<Vec<bool>> {
    let k = f.arity();
    if k == 0 || k % 2 == 1 || k > 16 {
        return None;
    }
    let d = k / 2;
    let doubled = |m: u64| (0..d).fold(0u64, |x, i| x | ((m >> i & 1) * 3) << (2 * i));
    let mut falsifying = None;
    for m in 0..1u64 << d {
        if f.value(doubled(m)).is_zero() {
            if falsifying.is_some() {
                return None;
            }
            falsifying = Some(m);
        }
    }
    let m = falsifying?;
    let clause: Vec<crate::cnf::Literal> = (0..d)
        .map(|i| {
            crate::cnf::Literal::new(if m >> i & 1 == 0 {
                i as i32 + 1
            } else {
                -(i as i32 + 1)
            })
        })
        .collect();
    let target = crate::signature::clause_signature(&clause, d).ok()?;
    (&target == f).then(|| (0..d).map(|i| m >> i & 1 == 0).collect())
}

/// Copies a matchgate into the builder, turning its `i`-th dangling edge
/// into an edge to `attach[i].0` of weight `attach[i].1`.
fn embed(b: &mut Builder, gate: &Gate, attach: &[(VertexId, Rational)]) {
    let inner = gate.graph();
    let base: Vec<VertexId> = (0..inner.num_vertices()).map(|_| b.vertex()).collect();
    let mut port_of = vec![None; inner.num_edges()];
    for (i, &d) in gate.dangling().iter().enumerate() {
        port_of[d] = Some(i);
    }
    for e in 0..inner.num_edges() {
        match (inner.endpoints(e), port_of[e]) {
            ((x, Some(y)), _) => b.edge(base[x], base[y], inner.weight(e).clone()),
            ((x, None), Some(i)) => b.edge(base[x], attach[i].0, attach[i].1.clone()),
            ((_, None), None) => unreachable!("gates list all dangling edges"),
        }
    }
}

/// The gate used to lower a vertex with signature `f`, with the power of
/// two it scales `f` by.
fn lowering_gate(f: &Signature, integral: bool) -> Result<(Gate, u64)> {
    if let Some(w) = f.edge_weight() {
        return Ok((edge_weight_gate(w.clone()), 0));
    }
    if f.is_even_parity() {
        return Ok((even_gate(f.arity()), 0));
    }
    if f.is_equality() && f.arity() % 2 == 0 {
        return eq_gate_mode(f.arity(), integral);
    }
    if let Some(signs) = clause_signs(f) {
        return clause_gate_mode(&signs, integral);
    }
    realize_mode(f, integral)
}

fn lower(omega: &SignatureGraph, integral: bool) -> Result<(WeightedGraph, u64)> {
    omega.validate()?;
    if omega.dangling_edges().next().is_some() {
        return invalid("cannot lower a signature graph with dangling edges");
    }
    for v in 0..omega.num_vertices() {
        if !omega.signature(v).is_even() {
            return invalid(format!("vertex {v} carries a signature that is not even"));
        }
    }
    let mut g = omega.clone();
    for e in 0..omega.num_edges() {
        if !g.weight(e).is_one() {
            let w = g.weight(e).clone();
            g.subdivide(e, builtin_signature(Builtin::Edge(w), 2)?)?;
        }
    }
    let mut exponent = 0;
    // Vertices are visited from the top so that deletions by empty gates
    // (which move the last vertex down) never skip an unvisited vertex.
    let mut v = g.num_vertices();
    while v > 0 {
        v -= 1;
        if g.signature(v).is_hw_eq1() {
            continue;
        }
        let (gate, t) = lowering_gate(g.signature(v), integral)?;
        exponent += t;
        g.insert_gate(v, &gate)?;
    }
    Ok((g.to_weighted_graph()?, exponent))
}

/// Edge-weighted graph whose weighted perfect-matching sum equals the Holant
/// value of `omega`, whose signatures must all be even.
///
/// Edge weights other than 1 are first moved onto EDGE_w vertices; EVEN and
/// EQ vertices use the dedicated matchgates above, EDGE_w the weighted path,
/// doubled clause signatures the clause gate, everything else the branch-selector realisation.
pub fn lower_to_matchgrid(omega: &SignatureGraph) -> Result<WeightedGraph> {
    Ok(lower(omega, false)?.0)
}

/// Like [`lower_to_matchgrid`] but with the integer EQ gadgets: returns
/// `(G, t)` with `PerfMatch(G) = 2^t Holant(omega)`.  The gadgets add no
/// fractional weights, so `G` has integer weights whenever `omega` does.
pub fn lower_to_integral_matchgrid(omega: &SignatureGraph) -> Result<(WeightedGraph, u64)> {
    lower(omega, true)
}

/// Replaces EVEN/ODD vertices by their unweighted matchgates and returns
/// the plain graph.  Every other vertex must already carry HW_{=1}.
pub(crate) fn expand_parity_vertices(omega: &SignatureGraph) -> Result<WeightedGraph> {
    let mut g = omega.clone();
    let mut gates: FxHashMap<(bool, usize), Gate> = FxHashMap::default();
    let mut v = g.num_vertices();
    while v > 0 {
        v -= 1;
        let sig = g.signature(v);
        let key = if sig.is_hw_eq1() {
            continue;
        } else if sig.is_even_parity() {
            (true, sig.arity())
        } else if sig.is_odd_parity() {
            (false, sig.arity())
        } else {
            return invalid(format!("vertex {v} is neither HW_=1, EVEN nor ODD"));
        };
        let gate = gates.entry(key).or_insert_with(|| {
            if key.0 {
                even_gate(key.1)
            } else {
                odd_gate(key.1)
            }
        });
        g.insert_gate(v, gate)?;
    }
    g.to_weighted_graph()
}

/// One entry of the gadget catalog.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub arity: usize,
    pub vertices: usize,
    pub edges: usize,
    /// `(u, v, weight)` for internal edges, `(u, null, 1)` for dangling ones.
    pub topology: Vec<(usize, Option<usize>, String)>,
    pub vertex_signatures: Vec<String>,
    /// Realised signature, as computed by the oracle, in index order.
    pub signature: Vec<String>,
    /// Whether the realised signature equals the target.
    pub verified: bool,
}

/// Every built-in gate up to the given arity with its oracle-computed
/// signature.
pub fn gadget_catalog(max_arity: usize, limits: &Limits) -> Result<Vec<CatalogEntry>> {
    let mut items: Vec<(String, Gate, Signature)> = vec![(
        "edge_minus_one".into(),
        edge_minus_one_gate(),
        builtin_signature(Builtin::Edge(int(-1)), 2)?,
    )];
    items.push((
        "edge_weight(3)".into(),
        edge_weight_gate(int(3)),
        builtin_signature(Builtin::Edge(int(3)), 2)?,
    ));
    for k in 0..=max_arity {
        items.push((
            format!("even({k})"),
            even_gate(k),
            builtin_signature(Builtin::Even, k)?,
        ));
        items.push((
            format!("odd({k})"),
            odd_gate(k),
            builtin_signature(Builtin::Odd, k)?,
        ));
    }
    for k in (0..=max_arity).step_by(2) {
        items.push((
            format!("eq({k})"),
            eq_gate(k)?,
            builtin_signature(Builtin::Eq, k)?,
        ));
    }
    items
        .into_iter()
        .map(|(name, gate, target)| {
            let realised = gate_signature(&gate, limits)?;
            let g = gate.graph();
            let topology = (0..g.num_edges())
                .map(|e| {
                    let (a, b) = g.endpoints(e);
                    (a, b, crate::rational::format(g.weight(e)))
                })
                .collect();
            let vertex_signatures = (0..g.num_vertices())
                .map(|v| describe(g.signature(v)))
                .collect();
            Ok(CatalogEntry {
                name,
                arity: gate.arity(),
                vertices: gate.num_vertices(),
                edges: g.num_edges() - gate.arity(),
                topology,
                vertex_signatures,
                signature: realised
                    .table()?
                    .iter()
                    .map(crate::rational::format)
                    .collect(),
                verified: realised == target,
            })
        })
        .collect()
}

fn describe(s: &Signature) -> String {
    if s.is_hw_eq1() {
        format!("HW=1/{}", s.arity())
    } else if let Some(w) = s.vertex_weight() {
        format!("VTX({})/{}", crate::rational::format(w), s.arity())
    } else {
        format!("table/{}", s.arity())
    }
}

/// Human-readable rendering of the catalog.
pub fn render_catalog(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!(
            "{} arity={} vertices={} internal_edges={} verified={}\n  signature: [{}]\n",
            e.name,
            e.arity,
            e.vertices,
            e.edges,
            e.verified,
            e.signature.join(", ")
        ));
        for (a, b, w) in &e.topology {
            match b {
                Some(b) => out.push_str(&format!("  edge {a} - {b} weight {w}\n")),
                None => out.push_str(&format!("  port at {a}\n")),
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{count_perfect_matchings, holant};

    fn sig_of(g: &Gate) -> Signature {
        gate_signature(g, &Limits::default()).unwrap()
    }

    #[test]
    fn edge_minus_one_values() {
        let s = sig_of(&edge_minus_one_gate());
        assert_eq!(s.table().unwrap(), vec![int(1), int(0), int(0), int(-1)]);
    }

    #[test]
    fn parity_gates_small() {
        for k in 0..=8 {
            assert_eq!(
                sig_of(&even_gate(k)),
                builtin_signature(Builtin::Even, k).unwrap(),
                "even {k}"
            );
            assert_eq!(
                sig_of(&odd_gate(k)),
                builtin_signature(Builtin::Odd, k).unwrap(),
                "odd {k}"
            );
            assert!(even_gate(k).is_matchgate() && odd_gate(k).is_matchgate());
        }
    }

    #[test]
    fn eq_gates_small() {
        for k in (0..=10).step_by(2) {
            assert_eq!(
                sig_of(&eq_gate(k).unwrap()),
                builtin_signature(Builtin::Eq, k).unwrap(),
                "eq {k}"
            );
        }
        assert!(eq_gate(3).is_err());
    }

    #[test]
    fn clause_gates() {
        use crate::cnf::Literal;
        for signs in 0..8 {
            for d in 1..=3usize {
                let c: Vec<Literal> = (0..d)
                    .map(|i| {
                        Literal::new(if signs >> i & 1 == 1 {
                            -(i as i32 + 1)
                        } else {
                            i as i32 + 1
                        })
                    })
                    .collect();
                let f = crate::signature::clause_signature(&c, d).unwrap();
                assert_eq!(sig_of(&clause_gate(&c).unwrap()), f, "{c:?}");
                let want = (0..d).map(|i| c[i].is_positive()).collect::<Vec<_>>();
                assert_eq!(clause_signs(&f), Some(want));
                let (g, t) = clause_gate_mode(
                    &(0..d).map(|i| c[i].is_positive()).collect::<Vec<_>>(),
                    true,
                )
                .unwrap();
                let scale = crate::rational::pow(&2u32.into(), t);
                let want: Vec<Rational> =
                    f.table().unwrap().into_iter().map(|x| x * &scale).collect();
                assert_eq!(sig_of(&g).table().unwrap(), want);
            }
        }
        assert_eq!(
            clause_signs(&builtin_signature(Builtin::Eq, 4).unwrap()),
            None
        );
    }

    #[test]
    fn integral_eq_gates() {
        for k in (0..=10).step_by(2) {
            let (g, t) = integral_eq_gate(k).unwrap();
            assert!((0..g.graph().num_edges()).all(|e| g.graph().weight(e).is_integer()));
            let target = builtin_signature(Builtin::Eq, k).unwrap();
            let scaled: Vec<Rational> = target
                .table()
                .unwrap()
                .into_iter()
                .map(|x| x * crate::rational::pow(&2u32.into(), t))
                .collect();
            assert_eq!(sig_of(&g).table().unwrap(), scaled, "eq {k}");
        }
    }

    #[test]
    fn integral_clause_realization() {
        use crate::cnf::Literal;
        let c = [Literal::new(1), Literal::new(-2), Literal::new(3)];
        let f = crate::signature::clause_signature(&c, 3).unwrap();
        let (g, t) = integral_realize_even_signature(&f).unwrap();
        assert_eq!(t, 10);
        let want: Vec<Rational> = f
            .table()
            .unwrap()
            .into_iter()
            .map(|x| x * int(1024))
            .collect();
        assert_eq!(sig_of(&g).table().unwrap(), want);
    }

    #[test]
    fn weighted_path_gate() {
        let s = sig_of(&edge_weight_gate(ratio(-2, 3)));
        assert_eq!(
            s,
            builtin_signature(Builtin::Edge(ratio(-2, 3)), 2).unwrap()
        );
    }

    #[test]
    fn realizes_clause() {
        use crate::cnf::Literal;
        let c = [Literal::new(1), Literal::new(2), Literal::new(3)];
        let f = crate::signature::clause_signature(&c, 3).unwrap();
        let g = realize_even_signature(&f).unwrap();
        assert!(g.is_matchgate());
        assert_eq!(sig_of(&g), f);
        let hw = builtin_signature(Builtin::HwEq1, 3).unwrap();
        assert!(realize_even_signature(&hw).is_err());
    }

    #[test]
    fn constant_vertex_lowering() {
        let mut omega = SignatureGraph::new();
        omega.add_vertex(Signature::constant(ratio(5, 3)));
        let g = lower_to_matchgrid(&omega).unwrap();
        assert_eq!(
            count_perfect_matchings(&g, &Limits::default()).unwrap(),
            ratio(5, 3)
        );
    }

    #[test]
    fn lowering_rejects_odd() {
        let g = WeightedGraph::unweighted(2, &[(0, 1)]).unwrap();
        let omega = crate::holant_ir::graph_to_signature_graph(&g).unwrap();
        assert!(lower_to_matchgrid(&omega).is_err());
    }

    #[test]
    fn lowering_preserves_small_holant() {
        // Two EQ_4 vertices joined by four parallel edges, one weighted.
        let mut omega = SignatureGraph::new();
        let a = omega.add_vertex(builtin_signature(Builtin::Eq, 4).unwrap());
        let b = omega.add_vertex(builtin_signature(Builtin::Even, 4).unwrap());
        for i in 0..4 {
            omega
                .add_edge(a, b, if i == 0 { int(3) } else { int(1) })
                .unwrap();
        }
        let l = Limits::default();
        let h = holant(&omega, &l).unwrap();
        assert_eq!(h, int(4));
        let g = lower_to_matchgrid(&omega).unwrap();
        assert_eq!(count_perfect_matchings(&g, &l).unwrap(), h);
    }
}
