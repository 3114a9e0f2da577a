//! Parity separation of signed perfect-matching counts.
//!
//! A ±1-weighted perfect-matching sum is rewritten as the difference of two
//! unweighted perfect-matching counts, and #SAT is reduced to such a
//! difference through a Holant formulation and matchgate gadgets.  Exact
//! oracles check every stage on small instances.

pub mod bench;
pub mod cnf;
pub mod error;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod holant_ir;
pub mod io;
pub mod oracle;
pub mod passes;
pub mod rational;
pub mod signature;

pub use error::{Error, Result};
