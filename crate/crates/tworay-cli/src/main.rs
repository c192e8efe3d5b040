//! `tworay`: analyze hypersurfaces in rank-two toric fourfolds from scenario
//! files — chamber data, monomial tables, base loci, local charts, 2-ray
//! games, section rings and fibrewise transforms.

mod reports;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use tworay::cones2d::Ray;
use tworay::graded_toric::Bidegree;
use tworay::scenario::{builtin, builtin_names, Scenario, ScenarioError};

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "tworay",
    version,
    about = "2-ray games on hypersurfaces in rank-two toric fourfolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Path to a scenario file.
    file: Option<PathBuf>,
    /// Use a bundled scenario instead of a file (paper-X, paper-Xprime).
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Grading, chamber fan, cones, anticanonical classes and verdicts.
    Describe {
        #[command(flatten)]
        source: Source,
        /// Emit a single JSON document instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Monomial basis tables, with hypersurface constraints when present.
    Monomials {
        #[command(flatten)]
        source: Source,
        /// Bidegree "(d1,d2)"; defaults to the hypersurface degree.
        #[arg(long, value_name = "BIDEGREE")]
        degree: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Base locus strata with smoothness certificates.
    Baselocus {
        #[command(flatten)]
        source: Source,
        /// Seed for the derivative spot check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Local chart at a coordinate point, with localized support.
    Localchart {
        #[command(flatten)]
        source: Source,
        /// The two variables set nonzero, "v,z".
        #[arg(long, value_name = "VAR,VAR")]
        nonzero: String,
        /// Report localized support up to this total degree.
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Run the 2-ray game restricted to the hypersurface.
    Game {
        #[command(flatten)]
        source: Source,
        /// Keep going past the first Mori failure.
        #[arg(long)]
        full_trace: bool,
        /// Exit with status 4 if any restriction was inconclusive.
        #[arg(long)]
        strict: bool,
        /// Weight bound for the end section ring.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        bound: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Generators of the section ring of a ray.
    Sections {
        #[command(flatten)]
        source: Source,
        /// The ray, "(a,b)".
        #[arg(long, value_name = "RAY")]
        ray: String,
        /// Weight bound for the generator search.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        bound: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Apply the fibrewise transform and write the resulting scenario.
    Transform {
        #[command(flatten)]
        source: Source,
        /// Write the new scenario here instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

fn load(source: &Source) -> Result<Scenario, (u8, String)> {
    let text = match (&source.file, &source.builtin) {
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| (EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?,
        (None, Some(name)) => builtin(name)
            .ok_or_else(|| {
                (
                    EXIT_PARSE,
                    format!(
                        "unknown builtin `{name}`; available: {}",
                        builtin_names().join(", ")
                    ),
                )
            })?
            .to_string(),
        _ => {
            return Err((
                EXIT_PARSE,
                "pass exactly one of a scenario file or --builtin NAME".to_string(),
            ))
        }
    };
    Scenario::parse(&text).map_err(|e: ScenarioError| (EXIT_PARSE, e.to_string()))
}

fn parse_pair(token: &str) -> Result<(i64, i64), String> {
    let inner = token
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| format!("expected `(a,b)`, got `{token}`"))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| format!("expected `(a,b)`, got `{token}`"))?;
    Ok((
        a.trim().parse().map_err(|_| format!("bad integer `{a}`"))?,
        b.trim().parse().map_err(|_| format!("bad integer `{b}`"))?,
    ))
}

fn emit<T: serde::Serialize>(report: &T, json: bool, render: impl Fn(&T) -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("reports serialize")
        );
    } else {
        print!("{}", render(report));
    }
}

fn run() -> Result<u8, (u8, String)> {
    let cli = Cli::parse();
    let precondition = |e: reports::ReportError| (EXIT_PRECONDITION, e.to_string());
    match cli.command {
        Command::Describe { source, json } => {
            let scenario = load(&source)?;
            let report = reports::describe(&scenario).map_err(precondition)?;
            emit(&report, json, reports::render_describe);
        }
        Command::Monomials {
            source,
            degree,
            json,
        } => {
            let scenario = load(&source)?;
            let degree = degree
                .map(|d| parse_pair(&d))
                .transpose()
                .map_err(|m| (EXIT_PARSE, m))?
                .map(|(d1, d2)| Bidegree::new(d1, d2));
            let report = reports::monomials(&scenario, degree).map_err(precondition)?;
            emit(&report, json, reports::render_monomials);
        }
        Command::Baselocus { source, seed, json } => {
            let scenario = load(&source)?;
            let report = reports::baselocus(&scenario, seed).map_err(precondition)?;
            emit(&report, json, reports::render_baselocus);
        }
        Command::Localchart {
            source,
            nonzero,
            bound,
            json,
        } => {
            let scenario = load(&source)?;
            let (a, b) = nonzero
                .split_once(',')
                .ok_or_else(|| (EXIT_PARSE, "expected --nonzero VAR,VAR".to_string()))?;
            let report = reports::localchart(&scenario, (a.trim(), b.trim()), bound)
                .map_err(precondition)?;
            emit(&report, json, reports::render_localchart);
        }
        Command::Game {
            source,
            full_trace,
            strict,
            bound,
            json,
        } => {
            let scenario = load(&source)?;
            let report = reports::game(&scenario, full_trace, bound).map_err(precondition)?;
            let inconclusive = !report.inconclusive_steps.is_empty();
            emit(&report, json, reports::render_game);
            if strict && inconclusive {
                return Ok(EXIT_INCONCLUSIVE);
            }
        }
        Command::Sections {
            source,
            ray,
            bound,
            json,
        } => {
            let scenario = load(&source)?;
            let (x, y) = parse_pair(&ray).map_err(|m| (EXIT_PARSE, m))?;
            let ray = Ray::new(x, y).map_err(|e| (EXIT_PARSE, e.to_string()))?;
            let report = reports::sections(&scenario, ray, bound).map_err(precondition)?;
            emit(&report, json, reports::render_sections);
        }
        Command::Transform { source, out, json } => {
            let scenario = load(&source)?;
            let report = reports::transform(&scenario).map_err(precondition)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("reports serialize")
                );
            } else {
                match &out {
                    Some(path) => {
                        std::fs::write(path, &report.scenario_text).map_err(|e| {
                            (
                                EXIT_PRECONDITION,
                                format!("cannot write {}: {e}", path.display()),
                            )
                        })?;
                        eprintln!(
                            "wrote {} (cancelled u^{}, new degree {})",
                            path.display(),
                            report.cancelled_content,
                            report.target_degree
                        );
                    }
                    None => print!("{}", report.scenario_text),
                }
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run() {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
