//! Command-line front end.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num::{BigInt, Zero};

use paritysep::bench::{parse_sizes, run_bench, Family};
use paritysep::cnf::CnfFormula;
use paritysep::graph::WeightedGraph;
use paritysep::io::{
    parse_dimacs, parse_graph, write_graph, OutputSize, RunReport, ScaleReport, Timing, Verdict,
};
use paritysep::oracle::{count_perfect_matchings, count_sat, matchsum, Limits};
use paritysep::passes::{equipollence_reduce, parity_separate, sat_to_difference, ScaledPair};
use paritysep::rational::{self, Rational};
use paritysep::Error;

#[derive(Parser)]
#[command(
    name = "paritysep",
    version,
    about = "Parity separation of perfect-matching counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Prefix for output graph files (`<prefix>.g1.graph`, `<prefix>.g2.graph`).
    #[arg(long, global = true, default_value = "out")]
    out_prefix: String,
    /// Make oracle verification mandatory: exit 3 if it exceeds the limits.
    #[arg(long, global = true)]
    verify: bool,
    /// Largest edge count of any graph handed to the oracle.
    #[arg(long, global = true, default_value_t = 4000)]
    limit: usize,
    /// Seed for the random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print a JSON report on standard output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Split a ±1-weighted graph into two plain graphs.
    Separate { input: PathBuf },
    /// Reduce a DIMACS CNF to a difference of two perfect-matching counts.
    Sat2pm { input: PathBuf },
    /// Build two plain graphs with equal counts iff two CNFs have equal model counts.
    Ceq { first: PathBuf, second: PathBuf },
    /// Count perfect matchings (edge or none mode), matching sums (vertex
    /// mode) or models (DIMACS) exactly.
    Count { input: PathBuf },
    /// Check that `(PM(g1) - PM(g2)) / base^exponent` equals the count of
    /// `source` (minus the count of `--minus`, if given).
    Verify {
        source: PathBuf,
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long, default_value = "1")]
        base: String,
        #[arg(long, default_value_t = 0)]
        exponent: u64,
        #[arg(long)]
        minus: Option<PathBuf>,
    },
    /// Measure output sizes on a random family.
    Bench {
        #[arg(long, default_value = "random-pm")]
        family: String,
        #[arg(long, default_value = "10..200")]
        sizes: String,
    },
}

/// Why a command stopped; each maps to one exit code.
#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Input(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("resource limit: {0}")]
    Limit(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Limit(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(m) => Failure::Limit(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("paritysep: {f}");
            ExitCode::from(f.code())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

enum Input {
    Cnf(CnfFormula),
    Graph(WeightedGraph),
}

/// DIMACS if the first non-comment line is a `p cnf` header, else a graph file.
fn parse_input(text: &str) -> Result<Input, Failure> {
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('c'));
    if header.is_some_and(|h| h.split_whitespace().nth(1) == Some("cnf")) {
        Ok(Input::Cnf(parse_dimacs(text)?))
    } else {
        Ok(Input::Graph(parse_graph(text)?))
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    report: RunReport,
    limits: Limits,
    /// A skipped verification is an error (exit 3).
    mandatory: bool,
}

impl<'a> Ctx<'a> {
    fn new(cli: &'a Cli, command: &str, input: &[u8]) -> Self {
        let limits = Limits {
            states: 1 << 22,
            ..Limits::generous()
        };
        Ctx {
            cli,
            report: RunReport::new(command, input),
            limits,
            mandatory: cli.verify,
        }
    }

    fn timed<T>(&mut self, pass: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.report.timings.push(Timing {
            pass: pass.into(),
            millis: start.elapsed().as_secs_f64() * 1e3,
        });
        out
    }

    fn fits(&self, graphs: &[&WeightedGraph]) -> bool {
        graphs.iter().all(|g| g.num_edges() <= self.cli.limit)
    }

    fn skip(&mut self, why: String) -> Result<(), Failure> {
        self.report.verification.verdict = Verdict::SkippedLimit;
        self.report.verification.detail = why.clone();
        if self.mandatory {
            return Err(Failure::Limit(why));
        }
        Ok(())
    }

    fn settle(&mut self, ok: bool, detail: String) -> Result<(), Failure> {
        self.report.verification.verdict = if ok {
            Verdict::Verified
        } else {
            Verdict::Failed
        };
        self.report.verification.detail = detail.clone();
        if ok {
            Ok(())
        } else {
            Err(Failure::Verification(detail))
        }
    }

    fn write_pair(&mut self, pair: &ScaledPair) -> Result<(), Failure> {
        let prefix = &self.cli.out_prefix;
        for (name, g) in [("g1", &pair.g1), ("g2", &pair.g2)] {
            let path = format!("{prefix}.{name}.graph");
            fs::write(&path, write_graph(g)).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
            self.report.outputs.push(OutputSize {
                name: path,
                vertices: g.num_vertices(),
                edges: g.num_edges(),
            });
        }
        self.report.scale = Some(ScaleReport {
            base: pair.scale_base.to_string(),
            exponent: pair.scale_exponent,
        });
        Ok(())
    }

    /// `(PM(g1), PM(g2))` or `None` when over the limits.
    fn pair_counts(&mut self, pair: &ScaledPair) -> Result<Option<(Rational, Rational)>, Failure> {
        if !self.fits(&[&pair.g1, &pair.g2]) {
            self.skip(format!("outputs exceed --limit {} edges", self.cli.limit))?;
            return Ok(None);
        }
        let limits = self.limits;
        let counted = self.timed("verify", || {
            Ok::<_, Error>((
                count_perfect_matchings(&pair.g1, &limits)?,
                count_perfect_matchings(&pair.g2, &limits)?,
            ))
        });
        match counted {
            Ok(c) => Ok(Some(c)),
            Err(Error::ResourceLimit(m)) => {
                self.skip(m)?;
                Ok(None)
            }
            Err(e) => Err(e.into()),
        }
    }

    /// Exact count of a source file, or `None` when over the limits.
    fn source_count(&mut self, input: &Input) -> Result<Option<Rational>, Failure> {
        let limits = self.limits;
        let counted = match input {
            Input::Cnf(phi) => {
                count_sat(phi, &limits).map(|c| Rational::from_integer(BigInt::from(c)))
            }
            Input::Graph(g) if !self.fits(&[g]) => Err(Error::ResourceLimit(format!(
                "input exceeds --limit {} edges",
                self.cli.limit
            ))),
            Input::Graph(g) if g.vertex_weights().is_some() => matchsum(g, &limits),
            Input::Graph(g) => count_perfect_matchings(g, &limits),
        };
        match counted {
            Ok(c) => Ok(Some(c)),
            Err(Error::ResourceLimit(m)) => {
                self.skip(m)?;
                Ok(None)
            }
            Err(e) => Err(e.into()),
        }
    }

    fn finish(&self, lines: &[String]) {
        if self.cli.json {
            println!("{}", self.report.to_json());
        } else {
            for l in lines {
                println!("{l}");
            }
            println!(
                "verification: {} ({})",
                self.report.verification.verdict.as_str(),
                self.report.verification.detail
            );
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Bench { family, sizes } => bench(cli, family, sizes),
        Command::Separate { input } => {
            let text = read(input)?;
            let mut cx = Ctx::new(cli, "separate", text.as_bytes());
            let g = cx.timed("parse", || parse_graph(&text))?;
            let pair = cx.timed("parity_separate", || parity_separate(&g))?;
            cx.write_pair(&pair)?;
            let lines = vec![format!(
                "scale q={} B={}",
                pair.scale_base, pair.scale_exponent
            )];
            let result = verify_pair(&mut cx, &pair, &Input::Graph(g), None, "difference");
            cx.finish(&lines);
            result
        }
        Command::Sat2pm { input } => {
            let text = read(input)?;
            let mut cx = Ctx::new(cli, "sat2pm", text.as_bytes());
            let phi = cx.timed("parse", || parse_dimacs(&text))?;
            let pair = cx.timed("sat_to_difference", || sat_to_difference(&phi))?;
            cx.write_pair(&pair)?;
            let lines = vec![format!(
                "scale q={} B={}",
                pair.scale_base, pair.scale_exponent
            )];
            let result = verify_pair(&mut cx, &pair, &Input::Cnf(phi), None, "#SAT");
            cx.finish(&lines);
            result
        }
        Command::Ceq { first, second } => {
            let (t1, t2) = (read(first)?, read(second)?);
            let mut cx = Ctx::new(cli, "ceq", format!("{t1}{t2}").as_bytes());
            let phi = cx.timed("parse", || parse_dimacs(&t1))?;
            let psi = cx.timed("parse", || parse_dimacs(&t2))?;
            let pair = cx.timed("equipollence_reduce", || equipollence_reduce(&phi, &psi))?;
            cx.write_pair(&pair)?;
            let lines = vec![format!(
                "scale q={} B={}",
                pair.scale_base, pair.scale_exponent
            )];
            let result = verify_pair(
                &mut cx,
                &pair,
                &Input::Cnf(phi),
                Some(&Input::Cnf(psi)),
                "#SAT difference",
            );
            cx.finish(&lines);
            result
        }
        Command::Count { input } => {
            let text = read(input)?;
            let mut cx = Ctx::new(cli, "count", text.as_bytes());
            let parsed = cx.timed("parse", || parse_input(&text))?;
            let limits = cx.limits;
            let count = cx.timed("count", || match &parsed {
                Input::Cnf(phi) => {
                    count_sat(phi, &limits).map(|c| Rational::from_integer(BigInt::from(c)))
                }
                Input::Graph(g) if g.num_edges() > cli.limit => Err(Error::ResourceLimit(format!(
                    "input exceeds --limit {} edges",
                    cli.limit
                ))),
                Input::Graph(g) if g.vertex_weights().is_some() => matchsum(g, &limits),
                Input::Graph(g) => count_perfect_matchings(g, &limits),
            })?;
            cx.report.value = Some(rational::format(&count));
            cx.report.verification.verdict = Verdict::Verified;
            cx.report.verification.detail = "exact oracle count".into();
            cx.finish(&[format!("count = {}", rational::format(&count))]);
            Ok(())
        }
        Command::Verify {
            source,
            g1,
            g2,
            base,
            exponent,
            minus,
        } => {
            let texts = [read(source)?, read(g1)?, read(g2)?];
            let minus_text = minus.as_deref().map(read).transpose()?;
            let digest_input = texts.concat() + minus_text.as_deref().unwrap_or("");
            let mut cx = Ctx::new(cli, "verify", digest_input.as_bytes());
            cx.mandatory = true;
            let src = parse_input(&texts[0])?;
            let sub = minus_text.as_deref().map(parse_input).transpose()?;
            let base: num::BigUint = base
                .parse()
                .map_err(|_| Failure::Input(format!("malformed base {base:?}")))?;
            if base.is_zero() {
                return Err(Failure::Input("base must be positive".into()));
            }
            let pair = ScaledPair {
                g1: parse_graph(&texts[1])?,
                g2: parse_graph(&texts[2])?,
                scale_base: base,
                scale_exponent: *exponent,
            };
            for (name, g) in [(g1, &pair.g1), (g2, &pair.g2)] {
                cx.report.outputs.push(OutputSize {
                    name: name.display().to_string(),
                    vertices: g.num_vertices(),
                    edges: g.num_edges(),
                });
            }
            cx.report.scale = Some(ScaleReport {
                base: pair.scale_base.to_string(),
                exponent: pair.scale_exponent,
            });
            let result = verify_pair(&mut cx, &pair, &src, sub.as_ref(), "value");
            cx.finish(&[]);
            result
        }
    }
}

/// Compares the decoded pair with the exact count of `source` (minus that of
/// `minus`), recording the verdict.
fn verify_pair(
    cx: &mut Ctx<'_>,
    pair: &ScaledPair,
    source: &Input,
    minus: Option<&Input>,
    what: &str,
) -> Result<(), Failure> {
    let Some((pm1, pm2)) = cx.pair_counts(pair)? else {
        return Ok(());
    };
    let value = pair.decode(&pm1, &pm2);
    cx.report.value = Some(rational::format(&value));
    let Some(mut expected) = cx.source_count(source)? else {
        return Ok(());
    };
    if let Some(m) = minus {
        let Some(c) = cx.source_count(m)? else {
            return Ok(());
        };
        expected -= c;
    }
    let ok = value == expected;
    let mut detail = format!("{what} = {}", rational::format(&value));
    if minus.is_some() {
        detail += if pm1 == pm2 {
            ", PM(g1) = PM(g2)"
        } else {
            ", PM(g1) != PM(g2)"
        };
    } else if pm1 == pm2 {
        detail += ", PM(g1) = PM(g2)";
    }
    if !ok {
        detail += &format!(", expected {}", rational::format(&expected));
    }
    cx.settle(ok, detail)
}

fn bench(cli: &Cli, family: &str, sizes: &str) -> Result<(), Failure> {
    let family: Family = family.parse()?;
    let sizes = parse_sizes(sizes)?;
    if family == Family::RandomPm && sizes.iter().any(|s| s % 2 == 1) {
        return Err(Failure::Input("random-pm sizes must be even".into()));
    }
    let report = run_bench(family, &sizes, cli.seed)?;
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("bench reports serialise")
        );
        return Ok(());
    }
    println!(
        "{:>8} {:>10} {:>10} {:>12} {:>12} {:>10}",
        "size", "in_v", "in_e", "parity_v", "baseline_v", "ratio"
    );
    for r in &report.rows {
        let base = r
            .baseline_vertices
            .map_or("-".to_string(), |b| b.to_string());
        println!(
            "{:>8} {:>10} {:>10} {:>12} {:>12} {:>10.3}",
            r.size, r.input_vertices, r.input_edges, r.parity_vertices, base, r.parity_ratio
        );
    }
    let show = |x: Option<f64>| x.map_or("-".to_string(), |v| format!("{v:.3}"));
    println!(
        "fitted exponent: parity {} baseline {}",
        show(report.parity_exponent),
        show(report.baseline_exponent)
    );
    Ok(())
}
