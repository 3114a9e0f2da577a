//! File formats and run reports.

mod dimacs;
mod graph_file;
mod report;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use graph_file::{parse_graph, write_graph, WeightMode};
pub use report::{
    sha256_hex, OutputSize, RunReport, ScaleReport, Timing, Verdict, Verification,
    RUN_REPORT_SCHEMA,
};

use crate::error::Error;

pub(crate) fn parse_error<T>(line: usize, message: impl Into<String>) -> Result<T, Error> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}
