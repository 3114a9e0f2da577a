//! Acceptance checks, one PASS/FAIL line per criterion.  Exits non-zero if
//! any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num::{BigInt, BigUint, One, Zero};
use rand::Rng;
use rayon::prelude::*;

use paritysep::bench::{run_bench, Family};
use paritysep::cnf::CnfFormula;
use paritysep::gadgets::{edge_minus_one_gate, even_gate, odd_gate, realize_even_signature};
use paritysep::generators::{random_3cnf, random_pm, rng_for};
use paritysep::graph::WeightedGraph;
use paritysep::io::write_graph;
use paritysep::oracle::{
    count_perfect_matchings, count_sat, gate_signature, holant, matchsum, Limits, Method,
};
use paritysep::passes::{
    cnf_to_holant, equipollence_reduce, fractional_weight_removal, matchsum_to_parity_pair,
    parity_separate, perfmatch_to_matchsum, sat_to_difference,
};
use paritysep::rational::{int, pow, ratio, Rational};
use paritysep::signature::{builtin_signature, Builtin, Signature};

const SEED: u64 = 20_240_601;

/// Pinned output-size constants of the SAT pipeline: each output graph of a
/// formula with `n` variables and `m` clauses has at most
/// `A·(n+m) + B` vertices and `A_E·(n+m) + B_E` edges.
const SIZE_A: usize = 240;
const SIZE_B: usize = 240;
const SIZE_A_E: usize = 340;
const SIZE_B_E: usize = 340;

/// Per-instance budget for exact verification of SAT pipeline outputs: a
/// sweep of width at most 20, hence at most 2^20 states.
const SAT_VERIFY_WIDTH: usize = 20;
const SAT_VERIFY_STATES: usize = 1 << SAT_VERIFY_WIDTH;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("parity separation identity", parity_identity),
        ("gate correctness", gate_correctness),
        ("even-signature realization", even_realization),
        ("stage identities", stage_identities),
        ("SAT pipeline", sat_pipeline),
        ("equipollence reduction", equipollence),
        ("baseline contrast", baseline_contrast),
        ("throughput", throughput),
    ];
    // Optional criterion numbers on the command line select a subset.
    let only: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        if !only.is_empty() && !only.contains(&(i + 1)) {
            continue;
        }
        let start = Instant::now();
        let o = std::panic::catch_unwind(check).unwrap_or_else(|_| outcome(false, "panicked"));
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "{tag} [{}] {name} ({:.1}s): {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}

fn limits() -> Limits {
    Limits::generous()
}

fn pm(g: &WeightedGraph) -> Rational {
    count_perfect_matchings(g, &limits()).expect("oracle within limits")
}

/// Edge sets (as pair lists) of all connected graphs on `n` vertices with at
/// most `max_m` edges, one per isomorphism class.
fn connected_graphs(n: usize, max_m: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index = |u: usize, v: usize| {
        pairs
            .iter()
            .position(|&p| p == (u.min(v), u.max(v)))
            .unwrap()
    };
    let perms = permutations(n);
    let maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        if mask.count_ones() as usize > max_m || !connected(n, &pairs, mask) {
            continue;
        }
        let canonical = maps.iter().all(|map| {
            let image = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0u32, |acc, i| acc | 1 << map[i]);
            image >= mask
        });
        if canonical {
            out.push(
                (0..pairs.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| pairs[i])
                    .collect(),
            );
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn connected(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 && (a == u || b == u) {
                let w = if a == u { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn signed(n: usize, edges: &[(usize, usize)], signs: u32) -> WeightedGraph {
    WeightedGraph::from_edges(
        n,
        edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, int(if signs >> i & 1 == 1 { -1 } else { 1 }))),
    )
    .unwrap()
}

fn random_signed_graph(rng: &mut impl Rng, max_n: usize, max_m: usize) -> WeightedGraph {
    let n = rng.gen_range(1..=max_n);
    let m = if n < 2 { 0 } else { rng.gen_range(0..=max_m) };
    let mut g = WeightedGraph::new(n);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            g.add_edge(u, v, int(if rng.gen_bool(0.5) { -1 } else { 1 }))
                .unwrap();
        }
    }
    g
}

fn separation_holds(g: &WeightedGraph) -> bool {
    let pair = parity_separate(g).unwrap();
    pair.g1.is_plain()
        && pair.g2.is_plain()
        && pair.g1.is_simple()
        && pair.g2.is_simple()
        && pair.evaluate(&limits()).unwrap().value == pm(g)
}

fn parity_identity() -> Outcome {
    let start = Instant::now();
    let mut instances: Vec<WeightedGraph> = Vec::new();
    for n in 1..=6 {
        for edges in connected_graphs(n, 10) {
            for signs in 0u32..1 << edges.len() {
                instances.push(signed(n, &edges, signs));
            }
        }
    }
    let exhaustive = instances.len();
    let bad_exhaustive = instances
        .par_iter()
        .filter(|g| !separation_holds(g))
        .count();
    let random: Vec<WeightedGraph> = (0..500)
        .map(|i| random_signed_graph(&mut rng_for(SEED, 1_000 + i), 10, 16))
        .collect();
    let bad_random = random.par_iter().filter(|g| !separation_holds(g)).count();
    let secs = start.elapsed().as_secs_f64();
    outcome(
        bad_exhaustive == 0 && bad_random == 0 && secs < 300.0,
        format!(
            "{exhaustive} exhaustive instances ({bad_exhaustive} wrong), 500 random ({bad_random} wrong), {secs:.1}s"
        ),
    )
}

fn gate_correctness() -> Outcome {
    let l = Limits::default();
    let edge = gate_signature(&edge_minus_one_gate(), &l)
        .unwrap()
        .table()
        .unwrap();
    let mut wrong = Vec::new();
    if edge != vec![int(1), int(0), int(0), int(-1)] {
        wrong.push("EDGE_-1".to_string());
    }
    for k in 0..=8 {
        if gate_signature(&even_gate(k), &l).unwrap()
            != builtin_signature(Builtin::Even, k).unwrap()
        {
            wrong.push(format!("EVEN_{k}"));
        }
        if gate_signature(&odd_gate(k), &l).unwrap() != builtin_signature(Builtin::Odd, k).unwrap()
        {
            wrong.push(format!("ODD_{k}"));
        }
    }
    let detail = if wrong.is_empty() {
        "EDGE_-1 = (1, 0, 0, -1); EVEN_k, ODD_k exact for k <= 8".into()
    } else {
        format!("wrong: {wrong:?}")
    };
    outcome(wrong.is_empty(), detail)
}

fn even_realization() -> Outcome {
    let bad: Vec<usize> = (0..100u64)
        .into_par_iter()
        .filter(|&i| {
            let mut rng = rng_for(SEED, 2_000 + i);
            let arity = rng.gen_range(0..=6);
            let table: Vec<Rational> = (0..1usize << arity)
                .map(|x| {
                    if x.count_ones() % 2 == 1 || rng.gen_bool(0.3) {
                        Rational::zero()
                    } else {
                        ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
                    }
                })
                .collect();
            let f = Signature::from_table(table).unwrap();
            let gate = realize_even_signature(&f).unwrap();
            !gate.is_matchgate() || gate_signature(&gate, &limits()).unwrap() != f
        })
        .map(|i| i as usize)
        .collect();
    outcome(
        bad.is_empty(),
        format!(
            "100 random even signatures of arity <= 6, {} mismatches",
            bad.len()
        ),
    )
}

/// All ±1-weighted graphs (labelled) on at most `max_n` vertices.
fn tiny_signed_graphs(max_n: usize) -> Vec<WeightedGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            for signs in 0u32..1 << edges.len() {
                out.push(signed(n, &edges, signs));
            }
        }
    }
    out
}

/// Uniform-width formulas in which every variable occurs.
fn tiny_uniform_formulas() -> Vec<CnfFormula> {
    let mut out = Vec::new();
    let clauses2: Vec<Vec<i32>> = [1, -1]
        .iter()
        .flat_map(|&a| [2, -2].iter().map(move |&b| vec![a, b]))
        .collect();
    for k in 1..=3usize {
        for pick in 0..clauses2.len().pow(k as u32) {
            let mut cs = Vec::new();
            let mut p = pick;
            for _ in 0..k {
                cs.push(clauses2[p % clauses2.len()].clone());
                p /= clauses2.len();
            }
            let refs: Vec<&[i32]> = cs.iter().map(|c| c.as_slice()).collect();
            out.push(CnfFormula::from_signed(2, &refs).unwrap());
        }
    }
    for signs in 0..2 {
        let lit = if signs == 0 { 1 } else { -1 };
        out.push(CnfFormula::from_signed(1, &[&[lit]]).unwrap());
        out.push(CnfFormula::from_signed(1, &[&[lit], &[-lit]]).unwrap());
    }
    out
}

fn random_uniform_formula(i: u64) -> CnfFormula {
    let mut rng = rng_for(SEED, 4_000 + i);
    loop {
        let n = rng.gen_range(3..=5);
        let m = rng.gen_range(n / 3 + 1..=5);
        let phi = random_3cnf(n, m, &mut rng).unwrap();
        if phi.occurrences().iter().all(|&k| k > 0) {
            return phi;
        }
    }
}

fn random_weighted_graph(i: u64) -> WeightedGraph {
    let mut rng = rng_for(SEED, 5_000 + i);
    let n = 2 * rng.gen_range(1..=4);
    let m = rng.gen_range(0..=10);
    let mut g = WeightedGraph::new(n);
    for _ in 0..m {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            g.add_edge(u, v, ratio(rng.gen_range(-6..=6), rng.gen_range(1..=5)))
                .unwrap();
        }
    }
    g
}

fn stage_identities() -> Outcome {
    let l = limits();
    let signed_graphs: Vec<WeightedGraph> = tiny_signed_graphs(4)
        .into_iter()
        .chain((0..200).map(|i| random_signed_graph(&mut rng_for(SEED, 3_000 + i), 8, 12)))
        .collect();
    let matchsum_bad = signed_graphs
        .par_iter()
        .filter(|g| matchsum(&perfmatch_to_matchsum(g).unwrap(), &l).unwrap() != pm(g))
        .count();
    let parity_bad = signed_graphs
        .par_iter()
        .filter(|g| {
            let gp = perfmatch_to_matchsum(g).unwrap();
            let (plus, minus) = matchsum_to_parity_pair(&gp).unwrap();
            holant(&plus, &l).unwrap() - holant(&minus, &l).unwrap() != matchsum(&gp, &l).unwrap()
        })
        .count();

    let formulas: Vec<CnfFormula> = tiny_uniform_formulas()
        .into_iter()
        .chain((0..200).map(random_uniform_formula))
        .collect();
    let cnf_bad = formulas
        .par_iter()
        .filter(|phi| {
            let count = Rational::from_integer(BigInt::from(count_sat(phi, &l).unwrap()));
            holant(&cnf_to_holant(phi).unwrap(), &l).unwrap() != count
        })
        .count();

    let mut weighted: Vec<WeightedGraph> = Vec::new();
    let values = [ratio(1, 2), int(-1), int(2), ratio(-2, 3)];
    for n in [2usize, 4] {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len().min(4) {
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            for pick in 0..values.len().pow(edges.len() as u32) {
                let mut p = pick;
                let es = edges.iter().map(|&(u, v)| {
                    let w = values[p % values.len()].clone();
                    p /= values.len();
                    (u, v, w)
                });
                weighted.push(WeightedGraph::from_edges(n, es.collect::<Vec<_>>()).unwrap());
            }
        }
    }
    weighted.extend((0..200).map(random_weighted_graph));
    let fractional_bad = weighted
        .par_iter()
        .filter(|g| {
            let (h, q, b) = fractional_weight_removal(g).unwrap();
            let exponent_ok = q.is_one() || b as usize == g.num_vertices() / 2;
            !(exponent_ok && h.has_sign_weights() && h.is_simple() && pm(&h) == pm(g) * pow(&q, b))
        })
        .count();

    let detail = format!(
        "matchsum {}/{} ok, parity pair {}/{} ok, cnf holant {}/{} ok, fractional {}/{} ok",
        signed_graphs.len() - matchsum_bad,
        signed_graphs.len(),
        signed_graphs.len() - parity_bad,
        signed_graphs.len(),
        formulas.len() - cnf_bad,
        formulas.len(),
        weighted.len() - fractional_bad,
        weighted.len()
    );
    outcome(
        matchsum_bad + parity_bad + cnf_bad + fractional_bad == 0,
        detail,
    )
}

enum Check {
    Verified,
    Wrong,
    Skipped,
}

fn sat_pipeline() -> Outcome {
    let budget = Limits {
        frontier: SAT_VERIFY_WIDTH,
        states: SAT_VERIFY_STATES,
        ..Limits::generous()
    };
    let formulas: Vec<CnfFormula> = (0..200u64)
        .map(|i| {
            let mut rng = rng_for(SEED, 6_000 + i);
            let n = rng.gen_range(3..=12);
            let m = rng.gen_range(1..=16);
            random_3cnf(n, m, &mut rng).unwrap()
        })
        .collect();
    let results: Vec<(Check, bool, usize)> = formulas
        .par_iter()
        .map(|phi| {
            let pair = sat_to_difference(phi).unwrap();
            let k = phi.num_vars() + phi.num_clauses();
            let size_ok = [&pair.g1, &pair.g2].iter().all(|g| {
                g.num_vertices() <= SIZE_A * k + SIZE_B && g.num_edges() <= SIZE_A_E * k + SIZE_B_E
            });
            let check = match pair.evaluate_with(Method::Sweep, &budget) {
                Ok(v) => {
                    let want =
                        Rational::from_integer(BigInt::from(count_sat(phi, &budget).unwrap()));
                    if v.value == want {
                        Check::Verified
                    } else {
                        Check::Wrong
                    }
                }
                Err(paritysep::Error::ResourceLimit(_)) => Check::Skipped,
                Err(e) => panic!("{e}"),
            };
            (check, size_ok, phi.num_clauses())
        })
        .collect();
    let verified = results
        .iter()
        .filter(|r| matches!(r.0, Check::Verified))
        .count();
    let wrong = results
        .iter()
        .filter(|r| matches!(r.0, Check::Wrong))
        .count();
    let skipped: Vec<usize> = results
        .iter()
        .filter(|r| matches!(r.0, Check::Skipped))
        .map(|r| r.2)
        .collect();
    let oversized = results.iter().filter(|r| !r.1).count();
    let largest_verified = results
        .iter()
        .filter(|r| matches!(r.0, Check::Verified))
        .map(|r| r.2)
        .max()
        .unwrap_or(0);

    let ratios: Vec<f64> = [50usize, 100, 200, 500, 1000, 2000, 5000]
        .par_iter()
        .map(|&m| {
            let n = m / 4;
            let pair = sat_to_difference(
                &random_3cnf(n, m, &mut rng_for(SEED, 7_000 + m as u64)).unwrap(),
            )
            .unwrap();
            pair.g1.num_vertices().max(pair.g2.num_vertices()) as f64 / (n + m) as f64
        })
        .collect();
    let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().cloned().fold(0.0, f64::max);
    let flat = hi <= lo * 1.10;

    let detail = format!(
        "exact difference = #SAT for {verified}/200 ({wrong} wrong, {} over the width-{SAT_VERIFY_WIDTH} budget, \
         clause counts {}..={}, largest verified m = {largest_verified}); sizes within {SIZE_A}(n+m)+{SIZE_B} \
         vertices and {SIZE_A_E}(n+m)+{SIZE_B_E} edges: {} oversized; vertices/(n+m) over m = 50..5000 in \
         [{lo:.1}, {hi:.1}]",
        skipped.len(),
        skipped.iter().min().unwrap_or(&0),
        skipped.iter().max().unwrap_or(&0),
        200 - oversized,
    );
    outcome(
        verified == 200 && wrong == 0 && oversized == 0 && flat,
        detail.replace(": 200 oversized", ": none oversized"),
    )
}

fn small_formula(rng: &mut impl Rng) -> CnfFormula {
    let n = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=2);
    let clauses: Vec<Vec<i32>> = (0..m)
        .map(|_| {
            let width = rng.gen_range(1..=n.min(2));
            let vars = rand::seq::index::sample(rng, n, width);
            vars.into_iter()
                .map(|v| {
                    if rng.gen_bool(0.5) {
                        -(v as i32 + 1)
                    } else {
                        v as i32 + 1
                    }
                })
                .collect()
        })
        .collect();
    let refs: Vec<&[i32]> = clauses.iter().map(|c| c.as_slice()).collect();
    CnfFormula::from_signed(n, &refs).unwrap()
}

/// 50 pairs: 10 identical, 12 distinct with equal counts, 8 both
/// unsatisfiable, 12 off by one, 8 differing by more.
fn equipollence_corpus() -> Vec<(CnfFormula, CnfFormula)> {
    let l = Limits::default();
    let mut rng = rng_for(SEED, 8_000);
    let pool: Vec<(CnfFormula, BigUint)> = (0..400)
        .map(|_| {
            let phi = small_formula(&mut rng);
            let c = count_sat(&phi, &l).unwrap();
            (phi, c)
        })
        .collect();
    let unsat: Vec<CnfFormula> = (1..=3)
        .flat_map(|n| {
            (1..=n as i32).map(move |v| CnfFormula::from_signed(n, &[&[v], &[-v]]).unwrap())
        })
        .collect();
    let mut identical = Vec::new();
    let mut equal = Vec::new();
    let mut off_by_one = Vec::new();
    let mut other = Vec::new();
    for (i, (a, ca)) in pool.iter().enumerate() {
        if identical.len() < 10 && i % 7 == 0 {
            identical.push((a.clone(), a.clone()));
        }
        for (b, cb) in &pool[i + 1..] {
            if a == b {
                continue;
            }
            let d = if ca > cb { ca - cb } else { cb - ca };
            let bucket = if d.is_zero() {
                (&mut equal, 12)
            } else if d.is_one() {
                (&mut off_by_one, 12)
            } else {
                (&mut other, 8)
            };
            if bucket.0.len() < bucket.1 && rng.gen_bool(0.05) {
                bucket.0.push((a.clone(), b.clone()));
            }
        }
    }
    let both_unsat: Vec<(CnfFormula, CnfFormula)> = (0..8)
        .map(|i| {
            (
                unsat[i % unsat.len()].clone(),
                unsat[(i * 5 + 1) % unsat.len()].clone(),
            )
        })
        .collect();
    identical
        .into_iter()
        .chain(equal)
        .chain(both_unsat)
        .chain(off_by_one)
        .chain(other)
        .collect()
}

fn equipollence() -> Outcome {
    let corpus = equipollence_corpus();
    let l = limits();
    let results: Vec<(bool, bool, bool)> = corpus
        .par_iter()
        .map(|(a, b)| {
            let same = count_sat(a, &l).unwrap() == count_sat(b, &l).unwrap();
            let pair = equipollence_reduce(a, b).unwrap();
            let v = pair.evaluate(&l).unwrap();
            let diff = Rational::from_integer(
                BigInt::from(count_sat(a, &l).unwrap()) - BigInt::from(count_sat(b, &l).unwrap()),
            );
            (same, v.pm1 == v.pm2, v.value == diff)
        })
        .collect();
    let false_pos = results.iter().filter(|r| !r.0 && r.1).count();
    let false_neg = results.iter().filter(|r| r.0 && !r.1).count();
    let bad_value = results.iter().filter(|r| !r.2).count();
    let equal_pairs = results.iter().filter(|r| r.0).count();
    outcome(
        corpus.len() == 50 && false_pos == 0 && false_neg == 0 && bad_value == 0,
        format!(
            "{} pairs ({equal_pairs} equipollent): {false_pos} false positives, {false_neg} false negatives, {bad_value} wrong differences",
            corpus.len()
        ),
    )
}

fn baseline_contrast() -> Outcome {
    let sizes: Vec<usize> = (10..=200).step_by(10).collect();
    let report = run_bench(Family::RandomPm, &sizes, SEED).unwrap();
    let (Some(p), Some(b)) = (report.parity_exponent, report.baseline_exponent) else {
        return outcome(false, "exponent fit unavailable");
    };
    outcome(
        b >= 1.5 && p <= 1.1,
        format!("fitted exponents on sizes 10..200: baseline {b:.3}, parity separation {p:.3}"),
    )
}

fn throughput() -> Outcome {
    let g = random_pm(50_000, &mut rng_for(SEED, 9_000)).unwrap();
    let dir = tempfile::TempDir::new().unwrap();
    let input = dir.path().join("big.graph");
    std::fs::write(&input, write_graph(&g)).unwrap();
    let start = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_paritysep"))
        .args([
            "separate",
            input.to_str().unwrap(),
            "--limit",
            "0",
            "--out-prefix",
        ])
        .arg(dir.path().join("big"))
        .status()
        .unwrap();
    let took = start.elapsed();
    outcome(
        status.success() && took < Duration::from_secs(10),
        format!(
            "`separate` on {} edges: exit {:?} in {:.2}s",
            g.num_edges(),
            status.code(),
            took.as_secs_f64()
        ),
    )
}
