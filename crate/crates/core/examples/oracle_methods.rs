//! The two exact perfect-matching oracles agree; the sweep suits long thin
//! graphs, contraction handles some wider ones.

use paritysep::generators::{random_pm, rng_for};
use paritysep::oracle::{count_perfect_matchings_with, Limits, Method};
use std::time::Instant;

fn main() -> paritysep::Result<()> {
    let limits = Limits::generous();
    for n in [8, 16, 24, 32] {
        let g = random_pm(n, &mut rng_for(3, n as u64))?;
        for method in [Method::Sweep, Method::Contraction] {
            let t = Instant::now();
            let pm = count_perfect_matchings_with(&g, method, &limits)?;
            println!(
                "n = {n:>2} {method:?}: PerfMatch = {pm} in {:?}",
                t.elapsed()
            );
        }
    }
    Ok(())
}
