//! The modular-arithmetic baseline next to parity separation on the same
//! inputs: the baseline grows quadratically, parity separation linearly.

use paritysep::generators::{random_pm, rng_for};
use paritysep::graph::WeightedGraph;
use paritysep::oracle::Limits;
use paritysep::passes::{modular_baseline, parity_separate, validate_modular_baseline};
use paritysep::rational::int;

fn main() -> paritysep::Result<()> {
    let mut k4 = WeightedGraph::unweighted(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    k4.set_edge_weight(0, int(-1));
    let check = validate_modular_baseline(&k4, &Limits::generous())?;
    println!(
        "K4: PM = {}, PM' = {}, modulus {}, congruent {}",
        check.perfmatch, check.perfmatch_prime, check.modulus, check.congruent
    );

    println!("{:>6} {:>12} {:>12}", "n", "baseline |V|", "parity |V|");
    for n in [10, 20, 40, 80, 160] {
        let g = random_pm(n, &mut rng_for(1, n as u64))?;
        let base = modular_baseline(&g)?;
        let pair = parity_separate(&g)?;
        println!(
            "{n:>6} {:>12} {:>12}",
            base.graph.num_vertices(),
            pair.g1.num_vertices().max(pair.g2.num_vertices())
        );
    }
    Ok(())
}
