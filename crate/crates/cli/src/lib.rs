//! Command line front end: reads `vanhom-complex/1` documents, runs the
//! vanishing homology engine and prints JSON (or TSV) to standard output.
//!
//! Exit codes: 0 success, 1 input or validation error, 2 a series leading
//! term is undetermined at the available precision, 3 a precondition on a
//! subcomplex or excision set is violated.

pub mod document;
pub mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;
use vanhom_core::complex::{
    build_circle, build_pinched_spheres, build_torus, geometric_torus, CellId, CellSet,
};
use vanhom_core::puiseux::{parse_rational, ExtRational, Rational, Velocity};
use vanhom_core::vanishing::{
    excision_check, les_check, relative_vanishing, sweep, vanishing_betti, vanishing_betti_oracle,
    vanishing_euler,
};

use document::{ComplexDocument, LoadedComplex};

/// Environment variable holding a rational precision applied to coordinates.
pub const PRECISION_VAR: &str = "VANHOM_PRECISION";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Engine(#[from] vanhom_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use vanhom_core::Error as E;
        match self {
            CliError::Input(_) => 1,
            CliError::Engine(E::IndeterminateAtPrecision { .. }) => 2,
            CliError::Engine(E::NotFaceClosed { .. } | E::InvalidExcision(_) | E::NotNested(_)) => {
                3
            }
            CliError::Engine(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "vanhom",
    version,
    about = "Vanishing homology of annotated cell complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a document and its complex.
    Validate { file: PathBuf },
    /// Print the rate of every cell.
    Rates { file: PathBuf },
    /// Vanishing Betti numbers for one velocity.
    Compute {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        velocity: String,
        /// Inclusive degree range `a..b`, or a single degree.
        #[arg(long)]
        degrees: Option<String>,
        /// Use the chain-level computation instead of image ranks.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Vanishing Betti numbers as functions of the threshold.
    Sweep {
        file: PathBuf,
        #[arg(long)]
        degrees: Option<String>,
    },
    /// Vanishing Euler characteristic.
    Euler {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        velocity: String,
    },
    /// Absolute, relative and boundary groups of a pair.
    Relative(PairArgs),
    /// Compare relative groups before and after excising a set.
    Excise {
        #[command(flatten)]
        pair: PairArgs,
        /// Name of the excised set.
        #[arg(long)]
        excise: String,
    },
    /// Check the long exact sequence of a pair.
    Les(PairArgs),
    /// Write a built-in example document.
    Example {
        #[command(subcommand)]
        kind: Example,
        #[arg(short = 'o', long = "output", global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct PairArgs {
    file: PathBuf,
    /// Name of a subcomplex declared in the document.
    #[arg(long)]
    subcomplex: String,
    #[arg(long, allow_hyphen_values = true)]
    velocity: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
enum Example {
    /// Product of circles of radii T^p and T^q.
    Torus {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Store vertex coordinates instead of rates.
        #[arg(long)]
        geometry: bool,
    },
    /// Two spheres pinched along an equator of size T^r; declares subcomplex `A`.
    Pinched {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// An n-gon whose edges have one rate; declares `A` and `W` when n >= 5.
    Circle {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        rate: String,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut warnings = Vec::new();
    let result = execute(cli.command, &mut warnings);
    for w in &warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    match result {
        Ok(out) => {
            if stdout.write_all(out.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn precision_from_env() -> Result<Option<ExtRational>, CliError> {
    match std::env::var(PRECISION_VAR) {
        Ok(s) => s
            .trim()
            .parse::<ExtRational>()
            .map(Some)
            .map_err(|e| CliError::Input(format!("{PRECISION_VAR}={s:?}: {e}"))),
        Err(_) => Ok(None),
    }
}

fn load(path: &Path, warnings: &mut Vec<String>) -> Result<LoadedComplex, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let doc = ComplexDocument::from_json(&text)?;
    let loaded = doc.load(precision_from_env()?.as_ref())?;
    warnings.extend(loaded.warnings.iter().cloned());
    Ok(loaded)
}

fn velocity(text: &str) -> Result<Velocity, CliError> {
    text.parse()
        .map_err(|e| CliError::Input(format!("bad velocity {text:?}: {e}")))
}

fn rational(name: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| CliError::Input(format!("--{name} {text:?}: {e}")))
}

/// `a..b` (inclusive) or a single degree.
fn degree_range(text: Option<&str>, top: usize) -> Result<Vec<usize>, CliError> {
    let Some(text) = text else {
        return Ok((0..=top).collect());
    };
    let bad = || CliError::Input(format!("bad degree range {text:?}, expected a..b"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let j = text.trim().parse().map_err(|_| bad())?;
            (j, j)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn execute(command: Command, warnings: &mut Vec<String>) -> Result<String, CliError> {
    match command {
        Command::Validate { file } => {
            let x = load(&file, warnings)?;
            for (name, set) in &x.subcomplexes {
                if !x.complex.is_face_closed(set) {
                    warnings.push(format!("subcomplex {name:?} is not face-closed"));
                }
            }
            #[derive(serde::Serialize)]
            struct Out<'a> {
                name: &'a str,
                valid: bool,
                dim: usize,
                f_vector: Vec<usize>,
                euler_characteristic: i64,
            }
            Ok(report::to_json(&Out {
                name: &x.name,
                valid: true,
                dim: x.complex.dim(),
                f_vector: x.complex.f_vector(),
                euler_characteristic: x.complex.euler_characteristic(),
            }))
        }
        Command::Rates { file } => {
            let x = load(&file, warnings)?;
            Ok(report::rates_json(
                &x.name,
                &x.rates,
                x.from_geometry.iter().map(|id| id.0),
            ))
        }
        Command::Compute {
            file,
            velocity: v,
            degrees,
            oracle,
            format,
        } => {
            let x = load(&file, warnings)?;
            let v = velocity(&v)?;
            let table = if oracle {
                vanishing_betti_oracle(&x.complex, &x.rates, &v)?
            } else {
                vanishing_betti(&x.complex, &x.rates, &v)?
            };
            let dims: BTreeMap<usize, usize> = degree_range(degrees.as_deref(), x.complex.dim())?
                .into_iter()
                .map(|j| (j, table.dim(j)))
                .collect();
            Ok(match format {
                Format::Json => report::betti_json(&table, &dims),
                Format::Tsv => report::betti_tsv(&dims),
            })
        }
        Command::Sweep { file, degrees } => {
            let x = load(&file, warnings)?;
            let degrees = degree_range(degrees.as_deref(), x.complex.dim())?;
            Ok(report::sweep_json(&sweep(&x.complex, &x.rates, degrees)?))
        }
        Command::Euler { file, velocity: v } => {
            let x = load(&file, warnings)?;
            let v = velocity(&v)?;
            let table = vanishing_betti(&x.complex, &x.rates, &v)?;
            #[derive(serde::Serialize)]
            struct Out {
                velocity: String,
                euler: i64,
            }
            Ok(report::to_json(&Out {
                velocity: v.to_string(),
                euler: vanishing_euler(&table),
            }))
        }
        Command::Relative(p) => {
            let x = load(&p.file, warnings)?;
            let v = velocity(&p.velocity)?;
            let r = relative_vanishing(&x.complex, &x.rates, x.subcomplex(&p.subcomplex)?, &v)?;
            Ok(report::pair_json(&r))
        }
        Command::Excise { pair: p, excise } => {
            let x = load(&p.file, warnings)?;
            let v = velocity(&p.velocity)?;
            let r = excision_check(
                &x.complex,
                &x.rates,
                x.subcomplex(&p.subcomplex)?,
                x.subcomplex(&excise)?,
                &v,
            )?;
            Ok(report::excision_json(v.to_string(), &r))
        }
        Command::Les(p) => {
            let x = load(&p.file, warnings)?;
            let v = velocity(&p.velocity)?;
            let r = les_check(&x.complex, &x.rates, x.subcomplex(&p.subcomplex)?, &v)?;
            Ok(report::les_json(v.to_string(), &r))
        }
        Command::Example { kind, output } => {
            let doc = example_document(kind)?;
            let text = doc.to_json();
            match output {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
    }
}

fn example_document(kind: Example) -> Result<ComplexDocument, CliError> {
    Ok(match kind {
        Example::Torus { p, q, n, geometry } => {
            let (p, q) = (rational("p", &p)?, rational("q", &q)?);
            let (c, rates) = build_torus(p.clone(), q.clone(), n)?;
            let name = format!("torus p={} q={} n={n}", fmt_q(&p), fmt_q(&q));
            let doc = ComplexDocument::from_complex(&name, &c, &rates);
            if geometry {
                doc.with_geometry(&geometric_torus(p, q, n)?)
            } else {
                doc
            }
        }
        Example::Pinched { r, n } => {
            let r = rational("r", &r)?;
            let ps = build_pinched_spheres(r.clone(), n)?;
            let name = format!("pinched spheres r={} n={n}", fmt_q(&r));
            ComplexDocument::from_complex(&name, &ps.complex, &ps.rates)
                .with_subcomplex("A", &ps.equator)
        }
        Example::Circle { n, rate } => {
            let rate: ExtRational = rate
                .parse()
                .map_err(|e| CliError::Input(format!("--rate {rate:?}: {e}")))?;
            let (c, rates) = build_circle(n, rate.clone())?;
            let doc =
                ComplexDocument::from_complex(&format!("circle n={n} rate={rate}"), &c, &rates);
            if n >= 5 {
                // an arc of three edges, and the open star of its second vertex
                let arc: CellSet = (0..4)
                    .map(CellId)
                    .chain((0..3).map(|i| CellId(n + i)))
                    .collect();
                let star: CellSet = [CellId(1), CellId(n), CellId(n + 1)].into_iter().collect();
                doc.with_subcomplex("A", &arc).with_subcomplex("W", &star)
            } else {
                doc
            }
        }
    })
}

fn fmt_q(r: &Rational) -> String {
    vanhom_core::puiseux::format_rational(r)
}
