//! Splits K4 with one `-1` edge into two plain graphs and decodes the count.

use paritysep::graph::WeightedGraph;
use paritysep::oracle::{count_perfect_matchings, Limits};
use paritysep::passes::parity_separate;
use paritysep::rational::int;

fn main() -> paritysep::Result<()> {
    let mut g = WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    g.set_edge_weight(0, int(-1));
    let limits = Limits::default();

    let pair = parity_separate(&g)?;
    let v = pair.evaluate(&limits)?;
    println!(
        "input: {} vertices, {} edges, PerfMatch = {}",
        g.num_vertices(),
        g.num_edges(),
        count_perfect_matchings(&g, &limits)?
    );
    println!(
        "g1: {} vertices, {} edges, PM = {}",
        pair.g1.num_vertices(),
        pair.g1.num_edges(),
        v.pm1
    );
    println!(
        "g2: {} vertices, {} edges, PM = {}",
        pair.g2.num_vertices(),
        pair.g2.num_edges(),
        v.pm2
    );
    println!(
        "(PM(g1) - PM(g2)) / {}^{} = {}",
        pair.scale_base, pair.scale_exponent, v.value
    );
    Ok(())
}
