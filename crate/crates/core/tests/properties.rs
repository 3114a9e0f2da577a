//! Property tests against brute-force oracles written here from the
//! definitions, independent of the library's sweep and contraction code.

use num::{BigInt, One, Zero};
use proptest::prelude::*;

use paritysep::cnf::CnfFormula;
use paritysep::gadgets::{even_gate, insert_gate, odd_gate, realize_even_signature};
use paritysep::graph::WeightedGraph;
use paritysep::holant_ir::{graph_to_signature_graph, SignatureGraph};
use paritysep::io::{parse_dimacs, parse_graph, write_dimacs, write_graph};
use paritysep::oracle::{
    count_perfect_matchings_with, count_sat, gate_signature, holant, matchsum_with, Limits, Method,
};
use paritysep::passes::{
    cnf_to_holant, fractional_weight_removal, holant_for_formula, matchsum_to_parity_pair,
    parity_separate, perfmatch_to_matchsum, sat_to_difference, simplify_to_simple,
};
use paritysep::rational::{int, ratio, Rational};
use paritysep::signature::{builtin_signature, Builtin, Signature};

// ---------- brute force ----------

/// Sum over edge subsets that cover every vertex exactly once.
fn brute_perfmatch(g: &WeightedGraph) -> Rational {
    brute_matchings(g, true)
}

/// Sum over all matchings of the product of unmatched vertex weights (or of
/// edge weights for perfect matchings).
fn brute_matchings(g: &WeightedGraph, perfect: bool) -> Rational {
    let m = g.num_edges();
    assert!(m <= 20);
    let mut total = Rational::zero();
    'subsets: for s in 0u32..1 << m {
        let mut covered = vec![false; g.num_vertices()];
        let mut w = Rational::one();
        for (e, u, v, x) in g.edges() {
            if s >> e & 1 == 1 {
                if covered[u] || covered[v] {
                    continue 'subsets;
                }
                covered[u] = true;
                covered[v] = true;
                w *= x;
            }
        }
        if perfect {
            if covered.iter().all(|&c| c) {
                total += w;
            }
        } else {
            let vw = g.vertex_weights().expect("vertex weights");
            for (v, c) in covered.iter().enumerate() {
                if !c {
                    w *= &vw[v];
                }
            }
            total += w;
        }
    }
    total
}

/// Sum over all 0/1 edge assignments of weights times vertex values.
fn brute_holant(omega: &SignatureGraph) -> Rational {
    let m = omega.num_edges();
    assert!(m <= 22);
    let mut total = Rational::zero();
    for s in 0u64..1 << m {
        let mut w = Rational::one();
        for e in 0..m {
            if s >> e & 1 == 1 {
                w *= omega.weight(e);
            }
        }
        for v in 0..omega.num_vertices() {
            if w.is_zero() {
                break;
            }
            let x = omega
                .incidence(v)
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &e)| acc | (s >> e & 1) << i);
            w *= omega.signature(v).value(x);
        }
        total += w;
    }
    total
}

fn brute_sat(phi: &CnfFormula) -> u64 {
    (0u64..1 << phi.num_vars())
        .filter(|a| {
            phi.clauses().iter().all(|c| {
                c.iter()
                    .any(|l| (a >> (l.var() - 1) & 1 == 1) == l.is_positive())
            })
        })
        .count() as u64
}

// ---------- strategies ----------

fn weight() -> impl Strategy<Value = Rational> + Clone {
    prop_oneof![
        3 => Just(int(1)),
        3 => Just(int(-1)),
        1 => (-3i64..=3).prop_map(int),
        1 => ((-4i64..=4), (1i64..=3)).prop_map(|(p, q)| ratio(p, q)),
    ]
}

fn graph_with(
    max_n: usize,
    max_m: usize,
    w: impl Strategy<Value = Rational> + Clone,
) -> impl Strategy<Value = WeightedGraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(((0..n), (0..n), w.clone()), 0..=max_m).prop_map(move |es| {
            let es: Vec<_> = es.into_iter().filter(|(u, v, _)| u != v).collect();
            WeightedGraph::from_edges(n, es).unwrap()
        })
    })
}

fn sign_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = WeightedGraph> {
    graph_with(max_n, max_m, prop_oneof![Just(int(1)), Just(int(-1))])
}

fn cnf(max_vars: usize, max_clauses: usize) -> impl Strategy<Value = CnfFormula> {
    (1..=max_vars).prop_flat_map(move |n| {
        let clause = (
            prop::sample::subsequence((1..=n as i32).collect::<Vec<_>>(), 1..=n.min(3)),
            any::<[bool; 3]>(),
        )
            .prop_map(|(vars, neg)| {
                vars.iter()
                    .zip(neg)
                    .map(|(&v, s)| if s { -v } else { v })
                    .collect::<Vec<_>>()
            });
        prop::collection::vec(clause, 0..=max_clauses).prop_map(move |cs| {
            let refs: Vec<&[i32]> = cs.iter().map(|c| c.as_slice()).collect();
            CnfFormula::from_signed(n, &refs).unwrap()
        })
    })
}

fn limits() -> Limits {
    Limits::generous()
}

// ---------- properties ----------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn perfmatch_oracles_agree(g in graph_with(8, 14, weight())) {
        let want = brute_perfmatch(&g);
        for method in [Method::Sweep, Method::Contraction, Method::Auto] {
            prop_assert_eq!(count_perfect_matchings_with(&g, method, &limits()).unwrap(), want.clone());
        }
    }

    #[test]
    fn matchsum_oracles_agree(
        g in graph_with(7, 10, Just(int(1))),
        ws in prop::collection::vec(weight(), 7),
    ) {
        let mut g = g;
        g.set_vertex_weights(Some(ws[..g.num_vertices()].to_vec())).unwrap();
        let want = brute_matchings(&g, false);
        for method in [Method::Sweep, Method::Contraction] {
            prop_assert_eq!(matchsum_with(&g, method, &limits()).unwrap(), want.clone());
        }
    }

    #[test]
    fn model_counts_agree(phi in cnf(8, 10)) {
        prop_assert_eq!(count_sat(&phi, &limits()).unwrap(), brute_sat(&phi).into());
    }

    #[test]
    fn cnf_holant_counts_models(phi in cnf(4, 4)) {
        let uniform = phi.clauses().iter().all(|c| c.len() == phi.width());
        let covered = phi.occurrences().iter().all(|&k| k > 0);
        prop_assert_eq!(cnf_to_holant(&phi).is_ok(), uniform && covered);
        let omega = holant_for_formula(&phi, None).unwrap();
        let want = Rational::from_integer(BigInt::from(brute_sat(&phi)));
        prop_assert_eq!(holant(&omega, &limits()).unwrap(), want.clone());
        if omega.num_edges() <= 16 {
            prop_assert_eq!(brute_holant(&omega), want);
        }
    }

    #[test]
    fn signature_graph_of_a_graph_is_perfmatch(g in graph_with(7, 11, weight())) {
        let omega = graph_to_signature_graph(&g).unwrap();
        prop_assert_eq!(brute_holant(&omega), brute_perfmatch(&g));
        prop_assert_eq!(holant(&omega, &limits()).unwrap(), brute_perfmatch(&g));
    }

    #[test]
    fn permuted_incidence_keeps_values(
        table in prop::collection::vec(-3i64..=3, 16),
        perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let f = Signature::from_table(table.into_iter().map(int).collect()).unwrap();
        let p = f.permute(&perm).unwrap();
        for y in 0u64..16 {
            let x = perm.iter().enumerate().fold(0u64, |acc, (i, &q)| acc | (y >> i & 1) << q);
            prop_assert_eq!(p.value(y), f.value(x));
        }
        let mut inverse = vec![0; 4];
        for (i, &q) in perm.iter().enumerate() {
            inverse[q] = i;
        }
        prop_assert_eq!(p.permute(&inverse).unwrap(), f);
    }

    #[test]
    fn inserting_parity_gates_keeps_holant(
        k in 1usize..=5,
        odd in any::<bool>(),
        neighbours in prop::collection::vec(prop_oneof![Just(int(1)), Just(int(2)), Just(int(-1))], 5),
    ) {
        // A parity vertex of arity k joined to k pendant VTX vertices.
        let mut omega = SignatureGraph::new();
        let kind = if odd { Builtin::Odd } else { Builtin::Even };
        let hub = omega.add_vertex(builtin_signature(kind, k).unwrap());
        for w in &neighbours[..k] {
            let leaf = omega.add_vertex(builtin_signature(Builtin::Vtx(w.clone()), 1).unwrap());
            omega.add_edge(hub, leaf, int(1)).unwrap();
        }
        let gate = if odd { odd_gate(k) } else { even_gate(k) };
        let expanded = insert_gate(&omega, hub, &gate).unwrap();
        prop_assert!(expanded.validate().is_ok());
        prop_assert_eq!(holant(&expanded, &limits()).unwrap(), brute_holant(&omega));
    }

    #[test]
    fn realized_signatures_match(arity in 0usize..=4, raw in prop::collection::vec(-3i64..=3, 16)) {
        let table: Vec<Rational> = (0..1usize << arity)
            .map(|x| if x.count_ones() % 2 == 0 { int(raw[x]) } else { int(0) })
            .collect();
        let f = Signature::from_table(table).unwrap();
        let gate = realize_even_signature(&f).unwrap();
        prop_assert!(gate.is_matchgate());
        prop_assert_eq!(gate_signature(&gate, &limits()).unwrap(), f);
    }

    #[test]
    fn matchsum_and_parity_pair_identities(g in sign_graph(6, 8)) {
        let gp = perfmatch_to_matchsum(&g).unwrap();
        let pm = brute_perfmatch(&g);
        prop_assert_eq!(matchsum_with(&gp, Method::Auto, &limits()).unwrap(), pm.clone());
        let (plus, minus) = matchsum_to_parity_pair(&gp).unwrap();
        prop_assert_eq!(holant(&plus, &limits()).unwrap() - holant(&minus, &limits()).unwrap(), pm);
    }

    #[test]
    fn parity_separation_identity(g in sign_graph(8, 12)) {
        let pair = parity_separate(&g).unwrap();
        prop_assert!(pair.g1.is_plain() && pair.g1.is_simple());
        prop_assert!(pair.g2.is_plain() && pair.g2.is_simple());
        prop_assert_eq!(pair.evaluate(&limits()).unwrap().value, brute_perfmatch(&g));
    }

    #[test]
    fn weighted_separation_identity(g in graph_with(6, 7, weight())) {
        let (h, q, b) = fractional_weight_removal(&g).unwrap();
        prop_assert!(h.has_sign_weights() && h.is_simple());
        let scale = paritysep::rational::pow(&q, b);
        prop_assert_eq!(count_perfect_matchings_with(&h, Method::Auto, &limits()).unwrap() / scale, brute_perfmatch(&g));
        let pair = parity_separate(&g).unwrap();
        prop_assert_eq!(pair.evaluate(&limits()).unwrap().value, brute_perfmatch(&g));
    }

    #[test]
    fn simplification_keeps_perfmatch(g in graph_with(6, 10, weight())) {
        let s = simplify_to_simple(&g).unwrap();
        prop_assert!(s.is_simple());
        prop_assert_eq!(count_perfect_matchings_with(&s, Method::Auto, &limits()).unwrap(), brute_perfmatch(&g));
    }

    #[test]
    fn graph_files_round_trip(g in graph_with(9, 15, weight())) {
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn dimacs_round_trips(phi in cnf(10, 12)) {
        let text = write_dimacs(&phi);
        let back = parse_dimacs(&text).unwrap();
        prop_assert_eq!(&back, &phi);
        prop_assert_eq!(write_dimacs(&back), text);
    }

    #[test]
    fn relabelling_vertices_keeps_the_decoded_value(
        g in sign_graph(8, 12),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..g.num_vertices()).collect();
        perm.shuffle(&mut paritysep::generators::rng_for(seed, 0));
        let h = WeightedGraph::from_edges(g.num_vertices(), g.edges().map(|(_, u, v, w)| (perm[u], perm[v], w.clone()))).unwrap();
        let a = parity_separate(&g).unwrap().evaluate(&limits()).unwrap().value;
        let b = parity_separate(&h).unwrap().evaluate(&limits()).unwrap().value;
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pipelines_are_deterministic(g in sign_graph(10, 16), phi in cnf(4, 4)) {
        prop_assert_eq!(parity_separate(&g).unwrap(), parity_separate(&g).unwrap());
        let a = sat_to_difference(&phi).unwrap();
        let b = sat_to_difference(&phi).unwrap();
        prop_assert_eq!(write_graph(&a.g1), write_graph(&b.g1));
        prop_assert_eq!(a, b);
    }
}

#[test]
fn odd_vertex_count_gives_zero() {
    let g = WeightedGraph::unweighted(3, &[(0, 1), (1, 2)]).unwrap();
    let pair = parity_separate(&g).unwrap();
    assert_eq!(pair.evaluate(&limits()).unwrap().value, int(0));
}
