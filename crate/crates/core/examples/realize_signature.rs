//! Realizes an arbitrary even signature as a gate and checks it with the oracle.

use paritysep::gadgets::{integral_realize_even_signature, realize_even_signature};
use paritysep::oracle::{gate_signature, Limits};
use paritysep::rational::{format, int, ratio, Rational};
use paritysep::signature::Signature;

fn main() -> paritysep::Result<()> {
    // Arity 4, supported on even Hamming weights only.
    let mut table = vec![Rational::from_integer(0.into()); 16];
    for (x, v) in [
        (0b0000, int(2)),
        (0b0011, int(-1)),
        (0b0101, ratio(1, 3)),
        (0b1111, int(5)),
        (0b1010, int(7)),
    ] {
        table[x] = v;
    }
    let f = Signature::from_table(table)?;
    let limits = Limits::default();

    let gate = realize_even_signature(&f)?;
    let realized = gate_signature(&gate, &limits)?;
    println!(
        "gate: {} vertices, {} edges, matchgate {}",
        gate.num_vertices(),
        gate.num_edges(),
        gate.is_matchgate()
    );
    println!("realized = target: {}", realized == f);

    let (gate, t) = integral_realize_even_signature(&f)?;
    let realized = gate_signature(&gate, &limits)?;
    let shown: Vec<String> = realized.table()?.iter().map(format).collect();
    println!(
        "integral-EQ variant: {} vertices, realizes 2^{t} * f = [{}]",
        gate.num_vertices(),
        shown.join(", ")
    );
    Ok(())
}
