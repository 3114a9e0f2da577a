//! Prints every built-in gate up to arity 4 with its oracle-checked signature.

use paritysep::gadgets::{gadget_catalog, render_catalog};
use paritysep::oracle::Limits;

fn main() -> paritysep::Result<()> {
    let entries = gadget_catalog(4, &Limits::default())?;
    print!("{}", render_catalog(&entries));
    let bad = entries.iter().filter(|e| !e.verified).count();
    println!("{} gates, {} mismatches", entries.len(), bad);
    Ok(())
}
