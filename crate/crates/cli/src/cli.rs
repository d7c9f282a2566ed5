use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use corkcalc_core::handlebody::{homology, HandlePresentation};
use corkcalc_core::swalgebra::{beta_elliptic, ParityConvention};

use crate::knot_input::parse_knots;
use crate::report::ScenarioReport;
use crate::scenario::{self, PieceFlavor, ScenarioOptions};

#[derive(Parser)]
#[command(
    name = "cork-calculus",
    version,
    about = "Exact handle calculus and Seiberg-Witten bookkeeping for 4-manifold surgery"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Paper,
    Standard,
}

impl From<ParityArg> for ParityConvention {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Paper => ParityConvention::Paper,
            ParityArg::Standard => ParityConvention::Standard,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario; exit code 0 exactly when all of its clauses pass
    Scenario {
        /// knotting-corks | disjoint-corks | involutions | knotting-plugs |
        /// disjoint-plugs | involutions-plugs | two-path
        id: String,
        /// Fiber sum parameter for the knotting scenarios
        #[arg(long)]
        n: Option<i64>,
        /// Blowdown orders, comma separated (disjoint/involutions/two-path)
        #[arg(long = "p-list", value_delimiter = ',')]
        p_list: Option<Vec<i64>>,
        /// Knot family: torus:k1,k2,… | twist:k1,k2,… | seifert:FILE
        #[arg(long)]
        knots: Option<String>,
        #[arg(long, value_enum, default_value_t = ParityArg::Paper)]
        parity: ParityArg,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Homology of a handle presentation file (JSON)
    Homology {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Formal Seiberg-Witten helpers
    Sw {
        #[command(subcommand)]
        command: SwCommand,
    },
}

#[derive(Subcommand)]
enum SwCommand {
    /// Basic classes of the blown-up elliptic family
    Beta {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, value_enum, default_value_t = ParityArg::Paper)]
        parity: ParityArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

/// Parse arguments and run; the return value is the process exit code.
pub fn run<I, T>(args: I) -> Result<i32>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    match cli.command {
        Command::Scenario { id, n, p_list, knots, parity, out, format } => {
            let opts = ScenarioOptions { convention: parity.into() };
            let report = run_scenario(&id, n, p_list.as_deref(), knots.as_deref(), opts)?;
            let rendered = match format {
                OutputFormat::Text => report.render_text(),
                OutputFormat::Json => report.to_json(),
            };
            match out {
                Some(path) => std::fs::write(&path, rendered)
                    .with_context(|| format!("writing report to {}", path.display()))?,
                None => print!("{rendered}"),
            }
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Homology { file, format } => {
            let raw = std::fs::read_to_string(&file)
                .with_context(|| format!("reading {}", file.display()))?;
            let pres: HandlePresentation = serde_json::from_str(&raw)
                .with_context(|| format!("parsing {}", file.display()))?;
            pres.validate().map_err(|e| anyhow!("{}: {e}", file.display()))?;
            let report = homology(&pres);
            match format {
                OutputFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&report)?);
                }
                OutputFormat::Text => {
                    println!("presentation: {}", pres.name);
                    println!(
                        "handles: {} dotted circle(s), {} two-handle(s), {} three-handle(s)",
                        pres.one_handles,
                        pres.two_handles.len() + pres.opaque_two_handles,
                        pres.three_handles
                    );
                    println!("H_1 = {}", report.h1);
                    println!("H_2 = {}", report.h2);
                    println!("H_1(boundary) = {}", report.boundary_h1);
                    println!("euler = {}", report.euler);
                    let f = &report.intersection_form;
                    println!(
                        "intersection form: rank {} signature {} parity {} ({:?})",
                        f.rank, f.signature, f.parity, f.definiteness
                    );
                }
            }
            Ok(0)
        }
        Command::Sw { command: SwCommand::Beta { n, m, parity, format } } => {
            let convention: ParityConvention = parity.into();
            let beta = beta_elliptic(n, m, convention)?;
            let note = (n % 2 != 0).then(|| {
                format!(
                    "odd fiber sum n = {n}: conventions disagree (paper: {} fiber values, \
                     standard: {}); convention '{convention}' in effect",
                    n - 2,
                    n - 1
                )
            });
            match format {
                OutputFormat::Json => {
                    let value = serde_json::json!({
                        "n": n,
                        "m": m,
                        "convention": convention.to_string(),
                        "count": beta.count(),
                        "convention_note": note,
                        "beta": beta,
                    });
                    println!("{}", serde_json::to_string_pretty(&value)?);
                }
                OutputFormat::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "beta(E({n}) # {m} CP2bar), convention: {convention}");
                    let _ = writeln!(
                        out,
                        "ambient: e = {}, sigma = {}",
                        beta.ambient.e, beta.ambient.sigma
                    );
                    let _ = writeln!(out, "classes ({}):", beta.count());
                    for c in beta.classes() {
                        let _ = writeln!(out, "  {}   value {}", c.vector, c.value);
                    }
                    if let Some(note) = note {
                        let _ = writeln!(out, "note: {note}");
                    }
                    print!("{out}");
                }
            }
            Ok(0)
        }
    }
}

fn run_scenario(
    id: &str,
    n: Option<i64>,
    p_list: Option<&[i64]>,
    knots: Option<&str>,
    opts: ScenarioOptions,
) -> Result<ScenarioReport> {
    let knot_list = |spec: Option<&str>| -> Result<Vec<crate::knot_input::NamedKnot>> {
        Ok(parse_knots(spec.unwrap_or("torus:1,2,3"))?)
    };
    let orders = |fallback: &[i64]| -> Vec<i64> {
        p_list.map_or_else(|| fallback.to_vec(), <[i64]>::to_vec)
    };
    let report = match id {
        "knotting-corks" => {
            scenario::knotting(PieceFlavor::Cork, n.unwrap_or(2), &knot_list(knots)?, opts)?
        }
        "knotting-plugs" => {
            scenario::knotting(PieceFlavor::Plug, n.unwrap_or(2), &knot_list(knots)?, opts)?
        }
        "disjoint-corks" => scenario::disjoint(PieceFlavor::Cork, &orders(&[2, 4]), opts)?,
        "disjoint-plugs" => scenario::disjoint(PieceFlavor::Plug, &orders(&[2, 4]), opts)?,
        "involutions" => scenario::involutions(PieceFlavor::Cork, &orders(&[2, 4]), opts)?,
        "involutions-plugs" => scenario::involutions(PieceFlavor::Plug, &orders(&[2, 4]), opts)?,
        "two-path" => scenario::two_path(&orders(&[2, 3, 4]), opts)?,
        other => bail!(
            "unknown scenario {other:?}; available: knotting-corks, knotting-plugs, \
             disjoint-corks, disjoint-plugs, involutions, involutions-plugs, two-path"
        ),
    };
    Ok(report)
}
