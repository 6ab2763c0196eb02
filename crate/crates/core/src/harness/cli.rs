//! `ect-lab` command line.
//!
//! Exit codes: 0 when everything checked out, 1 when a verification report
//! contains a violation, 2 for usage, input or argument errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use super::report::{ExperimentReport, GraphSource};
use super::suites::{
    demo_proof_gap, verify_fct_sample, verify_theorem1_search, verify_theorem1_suite,
    verify_theorem2_catalog, verify_theorem2_suite, PlanarFamily, SuiteConfig,
    THEOREM1_DEFAULT_CAP, THEOREM2_DEFAULT_CAP,
};
use crate::coloring::{chromatic_number_exact, Coloring};
use crate::ect::{apply_ect, color_classes};
use crate::error::{Error, Result};
use crate::graph::{generate_planar, named_graph, parse_graph, write_dimacs, GeneratorMode, Graph};
use crate::planarity::{has_k5_or_k33_minor, is_planar};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_MINOR_BUDGET: u64 = 50_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "ect-lab",
    version,
    about = "Color-class contraction and planarity experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Catalog graph, e.g. K5, C6, K3,3, petersen, split-K5
    #[arg(long)]
    named: Option<String>,
    /// DIMACS .col file, or graph JSON when the file starts with `{`
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct OptionalGraphInput {
    #[arg(long)]
    named: Option<String>,
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenMode {
    Maximal,
    Subsample,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Maximal,
    Subsample,
    Mixed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Experiment {
    Theorem2,
    Fct,
    Theorem1,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a seeded random planar graph as DIMACS
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "maximal")]
        mode: GenMode,
        /// Edge deletion probability for `--mode subsample`
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Exact chromatic number with a witness coloring
    Chromatic {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Quotient graph of a coloring (a minimum one when none is given)
    Ect {
        #[command(flatten)]
        graph: GraphInput,
        /// Coloring JSON: {"k": int, "colors": [...]}
        #[arg(long, value_name = "FILE")]
        coloring: Option<PathBuf>,
    },
    /// Planarity verdict with embedding or K5/K3,3 witness
    Planar {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Exhaustive K5/K3,3 minor search
    Minor {
        #[command(flatten)]
        graph: GraphInput,
        /// Search node budget
        #[arg(long, value_name = "NODES", default_value_t = DEFAULT_MINOR_BUDGET)]
        budget: u64,
    },
    /// Run a verification experiment and emit its report
    Verify {
        #[arg(value_enum)]
        experiment: Experiment,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cap on enumerated minimum colorings per instance
        #[arg(long)]
        cap: Option<usize>,
        /// Planar instance family [default: maximal for fct, mixed for theorem1]
        #[arg(long, value_enum)]
        family: Option<Family>,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// theorem2 only: run over the named catalog instead of random graphs
        #[arg(long)]
        catalog: bool,
        /// theorem1 only: search a single graph instead of a seeded sample
        #[command(flatten)]
        graph: OptionalGraphInput,
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },
    /// Planar graph whose single identification yields K5
    DemoGap {
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },
}

fn load_graph(named: Option<&str>, input: Option<&Path>) -> Result<(GraphSource, Graph)> {
    if let Some(name) = named {
        return Ok((GraphSource::Named { name: name.into() }, named_graph(name)?));
    }
    let path = input.expect("clap enforces one input");
    let text = std::fs::read_to_string(path)?;
    Ok((
        GraphSource::File {
            path: path.display().to_string(),
        },
        parse_graph(&text)?,
    ))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn emit(out: &mut dyn Write, file: Option<&Path>, text: &str) -> Result<()> {
    match file {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// 1 if any instance failed, else 0.
pub fn report_exit_code(r: &ExperimentReport) -> i32 {
    if r.violations() > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}

fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Gen {
            n,
            seed,
            mode,
            p,
            out: file,
        } => {
            let mode = match mode {
                GenMode::Maximal => GeneratorMode::Maximal,
                GenMode::Subsample => GeneratorMode::Subsample { p },
            };
            let g = generate_planar(n, seed, mode)?;
            emit(out, file.as_deref(), &write_dimacs(&g))?;
        }
        Command::Chromatic { graph } => {
            let (_, g) = load_graph(graph.named.as_deref(), graph.input.as_deref())?;
            let (_, witness) = chromatic_number_exact(&g);
            emit(out, None, &to_json(&witness)?)?;
        }
        Command::Ect { graph, coloring } => {
            let (_, g) = load_graph(graph.named.as_deref(), graph.input.as_deref())?;
            let c: Coloring = match coloring {
                Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
                None => chromatic_number_exact(&g).1,
            };
            let q = apply_ect(&g, &color_classes(&g, &c)?)?;
            emit(out, None, &to_json(&q)?)?;
        }
        Command::Planar { graph } => {
            let (_, g) = load_graph(graph.named.as_deref(), graph.input.as_deref())?;
            emit(out, None, &to_json(&is_planar(&g))?)?;
        }
        Command::Minor { graph, budget } => {
            let (_, g) = load_graph(graph.named.as_deref(), graph.input.as_deref())?;
            emit(out, None, &to_json(&has_k5_or_k33_minor(&g, Some(budget)))?)?;
        }
        Command::Verify {
            experiment,
            count,
            n_max,
            seed,
            cap,
            family,
            p,
            catalog,
            graph,
            report,
        } => {
            let family = family.unwrap_or(match experiment {
                Experiment::Theorem1 => Family::Mixed,
                _ => Family::Maximal,
            });
            let family = match family {
                Family::Maximal => PlanarFamily::Maximal,
                Family::Subsample => PlanarFamily::Subsample { p },
                Family::Mixed => PlanarFamily::Mixed,
            };
            let single = graph.named.is_some() || graph.input.is_some();
            if catalog && !matches!(experiment, Experiment::Theorem2) {
                return Err(Error::Argument("--catalog applies to theorem2 only".into()));
            }
            if single && !matches!(experiment, Experiment::Theorem1) {
                return Err(Error::Argument(
                    "--named/--in apply to theorem1 only".into(),
                ));
            }
            let cfg = SuiteConfig::new(count, n_max, seed).with_family(family);
            let r = match experiment {
                Experiment::Theorem2 => {
                    let cap = cap.unwrap_or(THEOREM2_DEFAULT_CAP);
                    if catalog {
                        verify_theorem2_catalog(cap)?
                    } else {
                        verify_theorem2_suite(&cfg.with_cap(cap))?
                    }
                }
                Experiment::Fct => verify_fct_sample(&cfg)?,
                Experiment::Theorem1 => {
                    let cap = cap.unwrap_or(THEOREM1_DEFAULT_CAP);
                    if single {
                        let (source, g) =
                            load_graph(graph.named.as_deref(), graph.input.as_deref())?;
                        verify_theorem1_search(&g, source, cap)?
                    } else {
                        verify_theorem1_suite(&cfg.with_cap(cap))?
                    }
                }
            };
            emit(out, report.as_deref(), &to_json(&r)?)?;
            writeln!(err, "{}", r.summary_line())?;
            return Ok(report_exit_code(&r));
        }
        Command::DemoGap { report } => {
            let r = demo_proof_gap();
            emit(out, report.as_deref(), &to_json(&r)?)?;
            writeln!(
                err,
                "demo-gap: base planar = {}, identified planar = {}, identified complete = {}",
                r.base_planar.planar, r.identified_planar.planar, r.identified_complete
            )?;
            if !r.demonstrated {
                return Ok(EXIT_VIOLATION);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match run(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
