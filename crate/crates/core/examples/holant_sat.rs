//! A CNF as a signature graph: variables carry EQ, clauses carry OR-type
//! signatures, and the Holant value is the model count.

use paritysep::cnf::CnfFormula;
use paritysep::oracle::{count_sat, holant, Limits};
use paritysep::passes::cnf_to_holant;

fn main() -> paritysep::Result<()> {
    let phi = CnfFormula::from_signed(3, &[&[1, 2], &[-1, 3], &[-2, -3]])?;
    let omega = cnf_to_holant(&phi)?;
    let limits = Limits::default();
    println!(
        "signature graph: {} vertices, {} edges",
        omega.num_vertices(),
        omega.num_edges()
    );
    for v in 0..omega.num_vertices() {
        let s = omega.signature(v);
        println!(
            "  vertex {v}: arity {}, symmetric {:?}",
            s.arity(),
            s.symmetric_values().is_some()
        );
    }
    println!(
        "Holant = {}, #SAT = {}",
        holant(&omega, &limits)?,
        count_sat(&phi, &limits)?
    );
    Ok(())
}
