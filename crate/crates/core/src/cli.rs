//! The `reedx` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 oracle budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::expansion::ExpansionSpec;
use crate::generator::{self, CatalogEntry, ComponentSource, GenParams, HostSelector};
use crate::io::{emit_coloring, parse_coloring_unchecked, parse_spec};
use crate::oracle::{self, OracleBudget};
use crate::reed::{check_reed_with, ReedReport};
use crate::solve::{chi_formula, color_expansion};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Components per random survey instance have at most this many vertices.
const SURVEY_MAX_VERTICES: usize = 4;
const SURVEY_EDGE_P: f64 = 0.5;

#[derive(Debug, Parser)]
#[command(
    name = "reedx",
    version,
    about = "Chromatic numbers and Reed-bound checks for graph expansions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Exact,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the chromatic number of an expansion.
    Chi {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
    },
    /// Write a proper coloring built from the host's palette construction.
    Color {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check that a coloring is proper and uses the formula's color count.
    Verify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Compare χ against the Reed bound and list the conditions that hold.
    Reed {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate instances and write one Reed report per row as CSV.
    Survey {
        /// `cycle:<L>` or `bipartite:<max order>:<edge probability>`.
        #[arg(long)]
        host: String,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated catalog names, e.g. `K1,K2,K3`.
        #[arg(long, value_delimiter = ',')]
        catalog: Option<Vec<String>>,
        /// Every catalog assignment on the cycle instead of random trials.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        exact_crosscheck: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

enum Failure {
    Verify(String),
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_) => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CliResult = std::result::Result<(), Failure>;

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            EXIT_VERIFY
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("oracle budget exceeded: {msg}");
            EXIT_BUDGET
        }
    }
}

fn dispatch(command: Command) -> CliResult {
    match command {
        Command::Chi { spec, method } => chi(&load_spec(&spec)?, method),
        Command::Color { spec, out } => color(&load_spec(&spec)?, &out),
        Command::Verify { spec, coloring } => verify(&load_spec(&spec)?, &coloring),
        Command::Reed { spec, json } => reed(&load_spec(&spec)?, json),
        Command::Survey {
            host,
            trials,
            seed,
            catalog,
            exhaustive,
            exact_crosscheck,
            out,
        } => survey(
            &host,
            trials,
            seed,
            catalog,
            exhaustive,
            exact_crosscheck,
            &out,
        ),
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CliResult {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_spec(path: &Path) -> std::result::Result<ExpansionSpec, Failure> {
    parse_spec(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn exact_chi(spec: &ExpansionSpec) -> std::result::Result<usize, Failure> {
    Ok(oracle::chromatic_number_exact(&spec.materialize().0, &OracleBudget::default())?.chi)
}

fn chi(spec: &ExpansionSpec, method: Method) -> CliResult {
    match method {
        Method::Formula => println!("formula={}", chi_formula(spec)?),
        Method::Exact => println!("exact={}", exact_chi(spec)?),
        Method::Both => {
            let (f, e) = (chi_formula(spec)?, exact_chi(spec)?);
            println!("formula={f} exact={e}");
            if f != e {
                return Err(Failure::Verify(format!(
                    "formula {f} and exact {e} disagree"
                )));
            }
        }
    }
    Ok(())
}

fn color(spec: &ExpansionSpec, out: &Path) -> CliResult {
    let coloring = color_expansion(spec)?;
    let expected = chi_formula(spec)?;
    if !coloring.is_proper_for(spec) {
        return Err(Failure::Verify("constructed coloring is not proper".into()));
    }
    if coloring.distinct_colors() != expected {
        return Err(Failure::Verify(format!(
            "constructed coloring uses {} colors, formula gives {expected}",
            coloring.distinct_colors()
        )));
    }
    write(out, &emit_coloring(&coloring))
}

fn verify(spec: &ExpansionSpec, path: &Path) -> CliResult {
    let (coloring, declared) = parse_coloring_unchecked(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if declared != coloring.distinct_colors() {
        return Err(Failure::Verify(format!(
            "header declares {declared} colors, file uses {}",
            coloring.distinct_colors()
        )));
    }
    if !coloring.is_proper_for(spec) {
        return Err(Failure::Verify(
            "coloring is not proper for this spec".into(),
        ));
    }
    let expected = chi_formula(spec)?;
    if coloring.distinct_colors() != expected {
        return Err(Failure::Verify(format!(
            "coloring uses {} colors, formula gives {expected}",
            coloring.distinct_colors()
        )));
    }
    println!("ok: proper with {expected} colors");
    Ok(())
}

fn conditions_field(report: &ReedReport) -> String {
    report
        .conditions
        .iter()
        .map(|t| t.name())
        .collect::<Vec<_>>()
        .join(";")
}

fn reed(spec: &ExpansionSpec, json: bool) -> CliResult {
    let report = check_reed_with(spec, false, &OracleBudget::default())?;
    if json {
        let record = serde_json::json!({
            "omega": report.omega,
            "delta": report.delta,
            "chi": report.chi,
            "chi_method": report.chi_method.name(),
            "bound": report.reed_bound,
            "holds": report.holds,
            "within_one": report.within_one,
            "conditions": report.conditions.iter().map(|t| t.name()).collect::<Vec<_>>(),
        });
        println!("{record}");
    } else {
        let rows = [
            ("omega", report.omega.to_string()),
            ("delta", report.delta.to_string()),
            (
                "chi",
                format!("{} ({})", report.chi, report.chi_method.name()),
            ),
            ("bound", report.reed_bound.to_string()),
            ("holds", report.holds.to_string()),
            ("within_one", report.within_one.to_string()),
            ("conditions", conditions_field(&report)),
        ];
        for (key, value) in rows {
            println!("{key:<12}{value}");
        }
        for note in &report.notes {
            println!("{:<12}{note}", "note");
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct SurveyRow {
    id: usize,
    host: String,
    chis: String,
    chi_formula: usize,
    chi_exact: Option<usize>,
    omega: usize,
    delta: usize,
    reed_bound: usize,
    holds: bool,
    within_one: bool,
    conditions: String,
}

fn parse_host(text: &str) -> std::result::Result<HostSelector, Failure> {
    let bad = || {
        Failure::Input(format!(
            "bad --host {text:?}; expected cycle:<L> or bipartite:<n>:<p>"
        ))
    };
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        ["cycle", l] => Ok(HostSelector::Cycle(l.parse().map_err(|_| bad())?)),
        ["bipartite", n, p] => {
            let edge_p: f64 = p.parse().map_err(|_| bad())?;
            if !(0.0..=1.0).contains(&edge_p) {
                return Err(bad());
            }
            Ok(HostSelector::Bipartite {
                max_order: n.parse().map_err(|_| bad())?,
                edge_p,
            })
        }
        _ => Err(bad()),
    }
}

fn survey(
    host: &str,
    trials: usize,
    seed: u64,
    catalog: Option<Vec<String>>,
    exhaustive: bool,
    crosscheck: bool,
    out: &Path,
) -> CliResult {
    let selector = parse_host(host)?;
    let catalog: Option<Vec<CatalogEntry>> = match &catalog {
        Some(names) => {
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            Some(generator::catalog_subset(&names)?)
        }
        None => None,
    };
    let specs: Vec<ExpansionSpec> = if exhaustive {
        let HostSelector::Cycle(length) = selector else {
            return Err(Failure::Input("--exhaustive needs a cycle host".into()));
        };
        let catalog = catalog.unwrap_or_else(generator::catalog_components);
        let specs = generator::exhaustive_specs(length, &catalog, false)?.collect();
        specs
    } else {
        let components = match catalog {
            Some(c) => ComponentSource::Catalog(c),
            None => ComponentSource::Random {
                max_vertices: SURVEY_MAX_VERTICES,
                edge_p: SURVEY_EDGE_P,
                target_chi: None,
            },
        };
        GenParams {
            seed,
            host: selector,
            components,
            trials,
        }
        .instances()?
    };

    let budget = OracleBudget::default();
    let rows = specs
        .par_iter()
        .enumerate()
        .map(|(id, spec)| {
            let report = check_reed_with(spec, crosscheck, &budget)?;
            Ok(SurveyRow {
                id,
                host: host.to_string(),
                chis: spec
                    .chis()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(";"),
                chi_formula: chi_formula(spec)?,
                chi_exact: report.chi_exact.filter(|_| crosscheck),
                omega: report.omega,
                delta: report.delta,
                reed_bound: report.reed_bound,
                holds: report.holds,
                within_one: report.within_one,
                conditions: conditions_field(&report),
            })
        })
        .collect::<std::result::Result<Vec<_>, Error>>()?;

    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        writer
            .serialize(row)
            .map_err(|e| Failure::Input(format!("csv: {e}")))?;
    }
    let mut bytes = writer
        .into_inner()
        .map_err(|e| Failure::Input(format!("csv: {e}")))?;
    if rows.is_empty() {
        bytes = b"id,host,chis,chi_formula,chi_exact,omega,delta,reed_bound,holds,within_one,conditions\n".to_vec();
    }
    let mut file =
        fs::File::create(out).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    file.write_all(&bytes)
        .map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    println!("{} instances written to {}", rows.len(), out.display());
    Ok(())
}
