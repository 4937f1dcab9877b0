//! `specrep`: command-line front end for the representation engine.
//!
//! Exit codes: 0 success, 1 malformed input, 2 validation failure (the
//! report names the counterexample or the failed check), 3 cap exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use specrep::dot::hasse_dot;
use specrep::instance::{parse_instance, parse_ring_flag, IdealJson, Instance};
use specrep::report;
use specrep::rings::{build_irr_space, FiniteRing, RingIdeal};
use specrep::theorems::{check_family, check_ring, check_zr};
use specrep::zr::{corollary54_check, PrimePool};
use specrep::{Caps, Error, PointFamily, PointSet, RepresentationEngine};

#[derive(Parser, Debug)]
#[command(
    name = "specrep",
    version,
    about = "Irredundant representations on finite spectral spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Point cap for exponential searches.
    #[arg(long, global = true, env = "SPECREP_CAP_POINTS", value_parser = clap::value_parser!(u64).range(1..=64))]
    cap_points: Option<u64>,

    /// Element cap for table-presented rings.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=4096))]
    cap_ring: Option<u64>,

    /// Also run the brute-force oracles and fail on any disagreement.
    #[arg(long, global = true)]
    oracle: bool,

    /// Also write a DOT diagram of the family to this path.
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify every member of the chosen subfamily and list minimal representations.
    Analyze { input: PathBuf },
    /// Irreducible decomposition of ring ideals.
    Decompose {
        input: Option<PathBuf>,
        /// Ring instead of an input file, e.g. `zmod:12`.
        #[arg(long)]
        ring: Option<String>,
        /// Ideal generator for `--ring`.
        #[arg(long, requires = "ring")]
        ideal: Option<u64>,
    },
    /// Critical points and the minimal critical set.
    Critical { input: PathBuf },
    /// Minimal closed and minimal representations.
    Minimal { input: PathBuf },
    /// Uniqueness sweep over every target and C of a prime pool.
    ZrCheck {
        input: Option<PathBuf>,
        /// Comma-separated primes, instead of an input file.
        #[arg(long, value_delimiter = ',')]
        pool: Option<Vec<u64>>,
    },
    /// Run every cross-check on the instance.
    CheckTheorems { input: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
    Dot,
}

struct Failure {
    code: u8,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        let code = match &error {
            Error::Invalid(_) | Error::NotInSubfamily(_) | Error::NotAntichain { .. } => 1,
            Error::CapExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, error }
    }
}

/// Errors while reading and parsing input are malformed-input errors unless a cap tripped.
fn parse_failure(error: Error) -> Failure {
    let code = match &error {
        Error::CapExceeded { .. } => 3,
        _ => 1,
    };
    Failure { code, error }
}

struct Output {
    report: Value,
    /// Family and chosen subfamily for DOT output.
    diagram: Option<String>,
    /// Preformatted text, when the generic rendering is not wanted.
    text: Option<String>,
    /// Nonzero exit after printing (failed checks).
    failed: Option<String>,
}

impl Output {
    fn new(report: Value) -> Self {
        Output {
            report,
            diagram: None,
            text: None,
            failed: None,
        }
    }
}

fn caps(cli: &Cli) -> Caps {
    let mut caps = Caps::default();
    if let Some(p) = cli.cap_points {
        caps = caps.with_points(p as usize);
    }
    if let Some(r) = cli.cap_ring {
        caps.ring = r as usize;
    }
    caps
}

fn load(path: &PathBuf, caps: Caps) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        error: Error::Invalid(format!("{}: {e}", path.display())),
    })?;
    parse_instance(&text, caps).map_err(|e| {
        let e = match e {
            Error::Invalid(msg) => Error::Invalid(format!("{}: {msg}", path.display())),
            other => other,
        };
        parse_failure(e)
    })
}

/// The family an instance denotes, with its chosen subfamily.
fn family_of(instance: &Instance, caps: Caps) -> Result<(PointFamily, Option<PointSet>), Failure> {
    match instance {
        Instance::SetSystem { family, subfamily } => Ok((family.clone(), *subfamily)),
        Instance::Zr(z) => Ok((z.encode()?, None)),
        Instance::Ring { ring, ideal } => {
            let a = ideal.clone().unwrap_or_else(|| ring.zero_ideal());
            Ok((build_irr_space(ring, &a, caps)?.family, None))
        }
    }
}

fn diagram(family: &PointFamily, chosen: Option<PointSet>, caps: Caps) -> Result<String, Failure> {
    let engine = RepresentationEngine::new(family, caps)?;
    Ok(hasse_dot(&engine, chosen.unwrap_or(family.all())))
}

fn ring_of(instance: Instance) -> Result<(FiniteRing, Option<RingIdeal>), Failure> {
    match instance {
        Instance::Ring { ring, ideal } => Ok((ring, ideal)),
        _ => Err(Failure {
            code: 1,
            error: Error::invalid("expected a ring instance"),
        }),
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let caps = caps(cli);
    match &cli.command {
        Command::Analyze { input } => {
            let instance = load(input, caps)?;
            let (family, chosen) = family_of(&instance, caps)?;
            let report = match &instance {
                Instance::Ring { ring, ideal } => report::ring_report(ring, ideal.as_ref(), caps)?,
                _ => report::analyze_family(&family, chosen, caps, cli.oracle)?,
            };
            let mut out = Output::new(report);
            out.diagram = Some(diagram(&family, chosen, caps)?);
            Ok(out)
        }
        Command::Critical { input } | Command::Minimal { input } => {
            let instance = load(input, caps)?;
            let (family, chosen) = family_of(&instance, caps)?;
            let report = match cli.command {
                Command::Critical { .. } => report::critical_report(&family, caps, cli.oracle)?,
                _ => report::minimal_report(&family, caps)?,
            };
            let mut out = Output::new(report);
            out.diagram = Some(diagram(&family, chosen, caps)?);
            Ok(out)
        }
        Command::Decompose { input, ring, ideal } => {
            let (ring, ideal) = match (input, ring) {
                (Some(path), None) => ring_of(load(path, caps)?)?,
                (None, Some(spec)) => {
                    let ring = parse_ring_flag(spec).map_err(parse_failure)?;
                    let ideal = ideal
                        .map(|g| IdealJson::Generator(g).resolve(&ring))
                        .transpose()
                        .map_err(parse_failure)?;
                    (ring, ideal)
                }
                _ => {
                    return Err(Failure {
                        code: 1,
                        error: Error::invalid("give either an input file or --ring"),
                    })
                }
            };
            let report = report::decompose_report(&ring, ideal.as_ref(), caps)?;
            let lines: Vec<String> = report["decompositions"]
                .as_array()
                .unwrap()
                .iter()
                .map(|d| d["summary"].as_str().unwrap().to_string())
                .collect();
            let mut out = Output::new(report);
            out.text = Some(lines.join("\n") + "\n");
            let a = ideal.unwrap_or_else(|| ring.zero_ideal());
            let space = build_irr_space(&ring, &a, caps)?;
            out.diagram = Some(diagram(&space.family, None, caps)?);
            Ok(out)
        }
        Command::ZrCheck { input, pool } => {
            let (pool, family) = match (input, pool) {
                (Some(path), None) => match load(path, caps)? {
                    Instance::Zr(z) => {
                        let family = z.encode()?;
                        (z.pool, Some(family))
                    }
                    _ => {
                        return Err(Failure {
                            code: 1,
                            error: Error::invalid("expected a zr instance"),
                        })
                    }
                },
                (None, Some(primes)) => {
                    (PrimePool::new(primes.clone()).map_err(parse_failure)?, None)
                }
                _ => {
                    return Err(Failure {
                        code: 1,
                        error: Error::invalid("give either an input file or --pool"),
                    })
                }
            };
            let r = corollary54_check(&pool, caps)?;
            let mut report = report::uniqueness_report(&r);
            let mut out_diagram = None;
            if let Some(family) = &family {
                report.as_object_mut().unwrap().insert(
                    "instance".into(),
                    report::analyze_family(family, None, caps, cli.oracle)?,
                );
                out_diagram = Some(diagram(family, None, caps)?);
            }
            let mut out = Output::new(report);
            out.diagram = out_diagram;
            Ok(out)
        }
        Command::CheckTheorems { input } => {
            let instance = load(input, caps)?;
            let (suite, diagram_src) = match &instance {
                Instance::SetSystem { family, subfamily } => (
                    check_family(family, caps)?,
                    Some((family.clone(), *subfamily)),
                ),
                Instance::Zr(z) => {
                    let family = z.encode()?;
                    (check_zr(&z.pool, &family, caps)?, Some((family, None)))
                }
                Instance::Ring { ring, ideal } => (check_ring(ring, ideal.as_ref(), caps)?, None),
            };
            let mut out = Output::new(report::checks_report(&suite));
            out.text = Some(
                suite
                    .checks
                    .iter()
                    .map(|c| {
                        format!(
                            "{} {}: {}\n",
                            if c.passed { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        )
                    })
                    .collect(),
            );
            out.failed = suite.failures().next().map(|c| c.detail.clone());
            if let Some((family, chosen)) = diagram_src {
                out.diagram = Some(diagram(&family, chosen, caps)?);
            }
            Ok(out)
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn emit(cli: &Cli, out: &Output) -> Result<(), Failure> {
    if let Some(path) = &cli.dot {
        let dot = out.diagram.as_ref().ok_or_else(|| Failure {
            code: 1,
            error: Error::invalid("no diagram for this command"),
        })?;
        fs::write(path, dot).map_err(|e| Failure {
            code: 1,
            error: Error::Invalid(format!("{}: {e}", path.display())),
        })?;
    }
    let text = match cli.format {
        Format::Json => pretty(&out.report),
        Format::Text => out
            .text
            .clone()
            .unwrap_or_else(|| report::to_text(&out.report)),
        Format::Dot => out.diagram.clone().ok_or_else(|| Failure {
            code: 1,
            error: Error::invalid("no diagram for this command"),
        })?,
    };
    print!("{text}");
    Ok(())
}

fn failure_report(error: &Error) -> Value {
    match error {
        Error::NotRepresentation { witness } => {
            json!({"kind": "error", "error": "not-representation", "counterexample": witness, "message": error.to_string()})
        }
        Error::MemberMissesTarget { member } => {
            json!({"kind": "error", "error": "member-misses-target", "counterexample": member, "message": error.to_string()})
        }
        Error::TheoremViolation { theorem, detail } => {
            json!({"kind": "error", "error": "check-failed", "check": theorem, "detail": detail, "message": error.to_string()})
        }
        other => json!({"kind": "error", "message": other.to_string()}),
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
    match run(&cli).and_then(|out| emit(&cli, &out).map(|_| out)) {
        Ok(out) => match out.failed {
            Some(detail) => {
                eprintln!("error: {detail}");
                ExitCode::from(2)
            }
            None => ExitCode::SUCCESS,
        },
        Err(Failure { code, error }) => {
            if code == 2 {
                let r = failure_report(&error);
                let text = match cli.format {
                    Format::Json => pretty(&r),
                    _ => report::to_text(&r),
                };
                print!("{text}");
            }
            eprintln!("error: {error}");
            ExitCode::from(code)
        }
    }
}
