//! Rational edge weights are cleared to ±1 with an exact scale `q^B`.

use paritysep::graph::WeightedGraph;
use paritysep::oracle::{count_perfect_matchings, Limits};
use paritysep::passes::{fractional_weight_removal, parity_separate};
use paritysep::rational::{int, ratio};

fn main() -> paritysep::Result<()> {
    // A 4-cycle with a chord and mixed weights.
    let g = WeightedGraph::from_edges(
        4,
        [
            (0, 1, ratio(1, 2)),
            (1, 2, int(3)),
            (2, 3, ratio(-2, 3)),
            (3, 0, int(1)),
            (0, 2, int(-1)),
        ],
    )?;
    let limits = Limits::default();
    let pm = count_perfect_matchings(&g, &limits)?;

    let (h, q, b) = fractional_weight_removal(&g)?;
    let pm_h = count_perfect_matchings(&h, &limits)?;
    println!("PerfMatch(G) = {pm}");
    println!(
        "G': {} vertices, {} edges, weights in ±1, PerfMatch = {pm_h}",
        h.num_vertices(),
        h.num_edges()
    );
    println!("q = {q}, B = {b}");

    let pair = parity_separate(&g)?;
    let v = pair.evaluate(&limits)?;
    println!(
        "parity separation: ({} - {}) / {}^{} = {}",
        v.pm1, v.pm2, pair.scale_base, pair.scale_exponent, v.value
    );
    Ok(())
}
