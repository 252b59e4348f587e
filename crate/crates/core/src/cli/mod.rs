//! Command-line front end.
//!
//! Exit codes: `0` success, `2` parse or usage error, `3` precondition
//! violation (unsupported graph class, invalid torus parameters, …). The
//! verdict itself never affects the exit code.

pub mod graph_file;

use crate::atlas::atlas;
use crate::calculus::normalize;
use crate::classify::{classify_torus, cross_validate, oracle_report};
use crate::rationality::{is_rational, valency_bounds};
use crate::surgery::{surgery_graph, torus_resolution, ResolutionData, SurgerySpec};
use clap::{Parser, Subcommand, ValueEnum};
use graph_file::{parse_graph, render_decorated, render_graph};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "lspace", version, about = "L-space recognition for plumbed 3-manifolds and torus-link surgeries")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify integral surgery on the (pr, qr) torus link, r = number of coefficients
    ClassifyTorus {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        /// Comma-separated surgery coefficients d1,...,dr
        #[arg(short, required = true, value_delimiter = ',', allow_hyphen_values = true)]
        d: Vec<i64>,
    },
    /// Decide the L-space property of the manifold plumbed from FILE (arrowheads are ignored)
    Oracle { file: PathBuf },
    /// Report rationality and the valency bounds of a negative definite graph
    Rational { file: PathBuf },
    /// Print the normalized graph in graph-file format
    Reduce { file: PathBuf },
    /// Print the resolution graph of the (pr, qr) torus link with multiplicities
    Resolve {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(short)]
        r: usize,
    },
    /// Print the surgery plumbing graph, for a torus link (-p, -q) or a decorated graph (--graph).
    /// Coefficients are matched to arrowheads by vertex id, then declaration order.
    Surgery {
        #[arg(short, requires = "q", conflicts_with = "graph")]
        p: Option<i64>,
        #[arg(short, requires = "p")]
        q: Option<i64>,
        #[arg(long, required_unless_present = "p")]
        graph: Option<PathBuf>,
        #[arg(short, required = true, value_delimiter = ',', allow_hyphen_values = true)]
        d: Vec<i64>,
    },
    /// Verdict grid for the (2p, 2q) torus link over d1, d2 in LO..HI
    Atlas {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        /// Inclusive range LO..HI
        #[arg(long, allow_hyphen_values = true)]
        range: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output path (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Decide pq±1 cells with the graph oracle
        #[arg(long)]
        resolve_boundary: bool,
    },
    /// Compare the torus classifier with the graph oracle
    CrossValidate {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        #[arg(short, required = true, value_delimiter = ',', allow_hyphen_values = true)]
        d: Vec<i64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Pgm,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: graph_file::ParseError,
    },
    #[error(transparent)]
    Precondition(#[from] crate::error::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Io(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

fn read_graph(path: &Path) -> Result<crate::decorated::DecoratedGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("invalid range {s:?}, expected LO..HI"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn render_resolution(res: &ResolutionData) -> String {
    let mut s = render_decorated(&res.decorated);
    for (site, m) in &res.multiplicities {
        let entries: Vec<String> = m.iter().map(|(v, x)| format!("{v}:{x}")).collect();
        s.push_str(&format!("# multiplicities of a branch on vertex {site}: {}\n", entries.join(" ")));
    }
    s
}

/// Execute a parsed command, writing its report to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::ClassifyTorus { p, q, d } => {
            let spec = SurgerySpec::new(p, q, d)?;
            writeln!(out, "{}", classify_torus(&spec))?;
        }
        Command::Oracle { file } => {
            let dg = read_graph(&file)?;
            let report = oracle_report(dg.graph())?;
            writeln!(out, "{}", report.verdict)?;
            writeln!(out, "h1={}", report.h1)?;
        }
        Command::Rational { file } => {
            let dg = read_graph(&file)?;
            let rational = is_rational(dg.graph())?;
            writeln!(out, "rational={rational}")?;
            writeln!(out, "bounds={:?}", valency_bounds(dg.graph()))?;
        }
        Command::Reduce { file } => {
            let dg = read_graph(&file)?;
            out.write_all(render_graph(&normalize(dg.graph())?).as_bytes())?;
        }
        Command::Resolve { p, q, r } => {
            let res = torus_resolution(p, q, r)?;
            out.write_all(render_resolution(&res).as_bytes())?;
        }
        Command::Surgery { p, q, graph, d } => {
            let res = match (p, q, graph) {
                (Some(p), Some(q), None) => torus_resolution(p, q, d.len())?,
                (None, None, Some(path)) => ResolutionData::from_decorated(read_graph(&path)?)?,
                _ => return Err(CliError::Usage("give either -p/-q or --graph".into())),
            };
            out.write_all(render_graph(&surgery_graph(&res, &d)?).as_bytes())?;
        }
        Command::Atlas {
            p,
            q,
            range,
            format,
            out: path,
            resolve_boundary,
        } => {
            let (lo, hi) = parse_range(&range)?;
            let grid = atlas(p, q, lo, hi, resolve_boundary)?;
            let text = match format {
                Format::Csv => grid.to_csv(),
                Format::Pgm => grid.to_pgm(),
            };
            match path {
                Some(path) => std::fs::write(&path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::CrossValidate { p, q, d } => {
            let spec = SurgerySpec::new(p, q, d)?;
            out.write_all(cross_validate(&spec)?.render().as_bytes())?;
        }
    }
    Ok(())
}

/// Parse `args` and run, returning the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match run(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
