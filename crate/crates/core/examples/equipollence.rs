//! Two formulas become two plain graphs with equal perfect-matching counts
//! exactly when the formulas have equal model counts.

use paritysep::cnf::CnfFormula;
use paritysep::oracle::{count_sat, Limits};
use paritysep::passes::equipollence_reduce;

fn main() -> paritysep::Result<()> {
    let limits = Limits::generous();
    let cases = [
        (
            "x1 or x2  vs  x1 or not x2",
            CnfFormula::from_signed(2, &[&[1, 2]])?,
            CnfFormula::from_signed(2, &[&[1, -2]])?,
        ),
        (
            "x1 or x2  vs  x1 and x2",
            CnfFormula::from_signed(2, &[&[1, 2]])?,
            CnfFormula::from_signed(2, &[&[1], &[2]])?,
        ),
        (
            "unsat  vs  unsat",
            CnfFormula::from_signed(1, &[&[1], &[-1]])?,
            CnfFormula::from_signed(2, &[&[2], &[-2]])?,
        ),
    ];
    for (name, phi, psi) in cases {
        let pair = equipollence_reduce(&phi, &psi)?;
        let v = pair.evaluate(&limits)?;
        println!(
            "{name}: #SAT {} vs {}; |V(G)| = {}, |V(G')| = {}; PM(G) {} PM(G')",
            count_sat(&phi, &limits)?,
            count_sat(&psi, &limits)?,
            pair.g1.num_vertices(),
            pair.g2.num_vertices(),
            if v.pm1 == v.pm2 { "=" } else { "!=" }
        );
    }
    Ok(())
}
