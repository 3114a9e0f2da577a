//! Size-blowup measurements on the random families.

use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::generators::{random_3cnf, random_pm, rng_for};
use crate::passes::{modular_baseline, parity_separate, sat_to_difference};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    #[serde(rename = "random-pm")]
    RandomPm,
    #[serde(rename = "random-3cnf")]
    Random3Cnf,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random-pm" => Ok(Family::RandomPm),
            "random-3cnf" => Ok(Family::Random3Cnf),
            _ => invalid(format!("unknown family {s:?} (random-pm, random-3cnf)")),
        }
    }
}

/// Clause-to-variable ratio of the random 3-CNF family.
pub const CNF_CLAUSE_RATIO: usize = 4;

/// One instance.  For random-pm `size` is the vertex count; for random-3cnf
/// it is the clause count, with `size / CNF_CLAUSE_RATIO` variables (at
/// least 3).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub size: usize,
    pub input_vertices: usize,
    pub input_edges: usize,
    /// Larger of the two output graphs.
    pub parity_vertices: usize,
    pub parity_edges: usize,
    /// Absent for random-3cnf and when the baseline exceeds its size cap.
    pub baseline_vertices: Option<usize>,
    pub baseline_edges: Option<usize>,
    /// Output vertices per unit of input (`|V|` or `n + m`).
    pub parity_ratio: f64,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchReport {
    pub family: Family,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
    /// Least-squares slope of log(output vertices) against log(size).
    pub parity_exponent: Option<f64>,
    pub baseline_exponent: Option<f64>,
}

/// Runs one instance per size, in parallel; rows keep the order of `sizes`.
/// The instance of size `s` is drawn from stream `s` of `seed`.
pub fn run_bench(family: Family, sizes: &[usize], seed: u64) -> Result<BenchReport> {
    let rows = sizes
        .par_iter()
        .map(|&s| bench_one(family, s, seed))
        .collect::<Result<Vec<_>>>()?;
    let fit = |pick: &dyn Fn(&BenchRow) -> Option<usize>| {
        let pts: Vec<(f64, f64)> = rows
            .iter()
            .filter_map(|r| pick(r).map(|y| (r.size as f64, y as f64)))
            .collect();
        fit_exponent(&pts)
    };
    Ok(BenchReport {
        family,
        seed,
        parity_exponent: fit(&|r| Some(r.parity_vertices)),
        baseline_exponent: fit(&|r| r.baseline_vertices),
        rows,
    })
}

fn bench_one(family: Family, size: usize, seed: u64) -> Result<BenchRow> {
    let mut rng = rng_for(seed, size as u64);
    let start = Instant::now();
    match family {
        Family::RandomPm => {
            let g = random_pm(size, &mut rng)?;
            let pair = parity_separate(&g)?;
            let base = match modular_baseline(&g) {
                Ok(b) => Some(b.graph),
                Err(Error::ResourceLimit(_)) => None,
                Err(e) => return Err(e),
            };
            let pv = pair.g1.num_vertices().max(pair.g2.num_vertices());
            Ok(BenchRow {
                size,
                input_vertices: g.num_vertices(),
                input_edges: g.num_edges(),
                parity_vertices: pv,
                parity_edges: pair.g1.num_edges().max(pair.g2.num_edges()),
                baseline_vertices: base.as_ref().map(|b| b.num_vertices()),
                baseline_edges: base.as_ref().map(|b| b.num_edges()),
                parity_ratio: pv as f64 / size.max(1) as f64,
                millis: start.elapsed().as_secs_f64() * 1e3,
            })
        }
        Family::Random3Cnf => {
            let n = (size / CNF_CLAUSE_RATIO).max(3);
            let phi = random_3cnf(n, size, &mut rng)?;
            let pair = sat_to_difference(&phi)?;
            let pv = pair.g1.num_vertices().max(pair.g2.num_vertices());
            Ok(BenchRow {
                size,
                input_vertices: n,
                input_edges: size,
                parity_vertices: pv,
                parity_edges: pair.g1.num_edges().max(pair.g2.num_edges()),
                baseline_vertices: None,
                baseline_edges: None,
                parity_ratio: pv as f64 / (n + size) as f64,
                millis: start.elapsed().as_secs_f64() * 1e3,
            })
        }
    }
}

/// Slope of the least-squares line through `(ln x, ln y)`; `None` with
/// fewer than two distinct `x`.
pub fn fit_exponent(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| p.0 > 0.0 && p.1 > 0.0)
        .map(|p| (p.0.ln(), p.1.ln()))
        .collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (pts.len() >= 2 && sxx > 0.0).then(|| sxy / sxx)
}

/// Parses `a..b` (inclusive, step 10 or `a..b:step`) or a comma list.
pub fn parse_sizes(spec: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidArgument(format!("malformed size list {spec:?}"));
    if let Some((a, rest)) = spec.split_once("..") {
        let (b, step) = rest.split_once(':').unwrap_or((rest, "10"));
        let (a, b, step): (usize, usize, usize) = (
            a.parse().map_err(|_| bad())?,
            b.parse().map_err(|_| bad())?,
            step.parse().map_err(|_| bad())?,
        );
        if step == 0 || a > b {
            return Err(bad());
        }
        return Ok((a..=b).step_by(step).collect());
    }
    spec.split(',')
        .map(|s| s.trim().parse().map_err(|_| bad()))
        .collect()
}
