//! Reduces a small 3-CNF to a difference of perfect-matching counts.

use paritysep::cnf::CnfFormula;
use paritysep::oracle::{count_sat, Limits, Method};
use paritysep::passes::sat_to_difference;

fn main() -> paritysep::Result<()> {
    let phi = CnfFormula::from_signed(4, &[&[1, -2, 3], &[-1, 4], &[2, 3, -4]])?;
    let limits = Limits::generous();
    let models = count_sat(&phi, &limits)?;

    let pair = sat_to_difference(&phi)?;
    println!(
        "formula: {} variables, {} clauses, {} models",
        phi.num_vars(),
        phi.num_clauses(),
        models
    );
    println!(
        "g1: {} vertices, {} edges",
        pair.g1.num_vertices(),
        pair.g1.num_edges()
    );
    println!(
        "g2: {} vertices, {} edges",
        pair.g2.num_vertices(),
        pair.g2.num_edges()
    );
    println!("scale: {}^{}", pair.scale_base, pair.scale_exponent);

    let v = pair.evaluate_with(Method::Sweep, &limits)?;
    println!("PM(g1) = {}\nPM(g2) = {}", v.pm1, v.pm2);
    println!("decoded: {} (expected {})", v.value, models);
    Ok(())
}
