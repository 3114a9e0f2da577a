use num::{One, Signed, Zero};

use super::{fractional_weight_removal, simplify_to_simple, zero_graph, ScaledPair};
use crate::error::{invalid, Result};
use crate::gadgets::{edge_minus_one_gate, expand_parity_vertices};
use crate::graph::WeightedGraph;
use crate::holant_ir::{graph_to_signature_graph, SignatureGraph};
use crate::oracle::{elimination_order, FrontierKind};
use crate::rational::{int, Rational};
use crate::signature::{builtin_signature, Builtin};

/// Vertex-weighted graph whose matching sum equals the perfect-matching sum
/// of the ±1-weighted `g`.
///
/// Every vertex carries HW_{=1} = VTX_0; each `-1` edge is subdivided by an
/// EDGE_{-1} vertex which is then replaced by the three-vertex signed edge
/// gate.  Original vertices get weight 0, gate vertices 1, -1, 1.
pub fn perfmatch_to_matchsum(g: &WeightedGraph) -> Result<WeightedGraph> {
    if !g.has_sign_weights() {
        return invalid("perfmatch_to_matchsum needs edge weights in {-1, 1}");
    }
    let mut omega = graph_to_signature_graph(g)?;
    let gate = edge_minus_one_gate();
    let edge_minus_one = builtin_signature(Builtin::Edge(int(-1)), 2)?;
    for e in 0..g.num_edges() {
        if g.weight(e).is_negative() {
            let s = omega.subdivide(e, edge_minus_one.clone())?;
            omega.insert_gate(s, &gate)?;
        }
    }
    let mut out = omega.to_weighted_graph()?;
    let weights = (0..omega.num_vertices())
        .map(|v| {
            omega
                .signature(v)
                .vertex_weight()
                .cloned()
                .expect("only VTX signatures remain")
        })
        .collect();
    out.set_vertex_weights(Some(weights))?;
    Ok(out)
}

/// `(Φ_plus, Φ_minus)` with `MatchSum(G') = Holant(Φ_plus) - Holant(Φ_minus)`.
///
/// Every vertex of `G'` carries HW_{=1}; the vertices of weight -1 and 1 are
/// joined to new vertices `u_{-1}` and `u_1` whose EVEN/ODD signatures fix
/// the parity of unmatched vertices in each class.  For even `|V(G')|` the
/// pair is `(Φ00, Φ11)`, for odd `|V(G')|` it is `(Φ01, Φ10)`.  A class with
/// no vertices gets no `u` vertex under EVEN and an arity-0 ODD vertex
/// (constant 0) under ODD.  Class members are attached in the order of a
/// low-width sweep of `G'`.
pub fn matchsum_to_parity_pair(gp: &WeightedGraph) -> Result<(SignatureGraph, SignatureGraph)> {
    let Some(weights) = gp.vertex_weights() else {
        return invalid("matchsum_to_parity_pair needs vertex weights");
    };
    if !gp.has_unit_edge_weights() {
        return invalid("matchsum_to_parity_pair needs unit edge weights");
    }
    let (mut minus_class, mut plus_class) = (Vec::new(), Vec::new());
    for (v, w) in weights.iter().enumerate() {
        if w.is_zero() {
        } else if *w == -Rational::one() {
            minus_class.push(v);
        } else if w.is_one() {
            plus_class.push(v);
        } else {
            return invalid(format!("vertex {v} has weight outside {{-1, 0, 1}}"));
        }
    }
    // Chains follow a low-width sweep of G' rather than vertex ids, so that
    // they do not tie distant parts of the graph together.
    let adj: Vec<Vec<usize>> = (0..gp.num_vertices())
        .map(|v| gp.incidence(v).iter().map(|&e| gp.other(e, v)).collect())
        .collect();
    let mut pos = vec![0; gp.num_vertices()];
    for (i, v) in elimination_order(&adj, FrontierKind::Vertices)
        .into_iter()
        .enumerate()
    {
        pos[v] = i;
    }
    minus_class.sort_by_key(|&v| pos[v]);
    plus_class.sort_by_key(|&v| pos[v]);
    let even = gp.num_vertices() % 2 == 0;
    let (a_plus, b_plus) = if even { (false, false) } else { (false, true) };
    let build = |a: bool, b: bool| -> Result<SignatureGraph> {
        let mut omega = SignatureGraph::new();
        for _ in 0..gp.num_vertices() {
            omega.add_vertex(builtin_signature(Builtin::HwEq1, 0)?);
        }
        for (_, u, v, _) in gp.edges() {
            omega.add_edge(u, v, Rational::one())?;
        }
        for (class, odd) in [(&minus_class, a), (&plus_class, b)] {
            if class.is_empty() && !odd {
                continue;
            }
            let kind = if odd { Builtin::Odd } else { Builtin::Even };
            let u = omega.add_vertex(builtin_signature(kind, class.len())?);
            for &v in class.iter() {
                omega.add_edge(v, u, Rational::one())?;
            }
        }
        for v in 0..gp.num_vertices() {
            omega.set_signature(v, builtin_signature(Builtin::HwEq1, omega.degree(v))?);
        }
        Ok(omega)
    };
    Ok((build(a_plus, b_plus)?, build(!a_plus, !b_plus)?))
}

/// Two plain simple graphs whose perfect-matching difference, divided by
/// `q^B`, is the perfect-matching sum of `g`.
///
/// Weights outside {-1, 1} are first removed by
/// [`fractional_weight_removal`], which sets `q` and `B`.
pub fn parity_separate(g: &WeightedGraph) -> Result<ScaledPair> {
    if g.vertex_weights().is_some() {
        return invalid("parity_separate needs a graph without vertex weights");
    }
    let (h, q, b) = if g.has_sign_weights() {
        (g.clone(), num::BigUint::one(), 0)
    } else {
        fractional_weight_removal(g)?
    };
    if h.num_vertices() % 2 == 1 {
        return Ok(ScaledPair::canonical_zero());
    }
    let gp = perfmatch_to_matchsum(&h)?;
    let (plus, minus) = matchsum_to_parity_pair(&gp)?;
    let (g1, g2) = rayon::join(|| branch(&plus), || branch(&minus));
    Ok(ScaledPair {
        g1: g1?,
        g2: g2?,
        scale_base: q,
        scale_exponent: b,
    })
}

fn branch(omega: &SignatureGraph) -> Result<WeightedGraph> {
    let vanishes = (0..omega.num_vertices())
        .any(|v| omega.signature(v).arity() == 0 && omega.signature(v).value(0).is_zero());
    if vanishes {
        return Ok(zero_graph());
    }
    simplify_to_simple(&expand_parity_vertices(omega)?)
}
