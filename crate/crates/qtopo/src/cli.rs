//! Command-line surface.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but fails a
//! domain check (not a topology, unknown point, size limit), 2 for unreadable
//! or malformed input and usage errors.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use qtopo_core::{
    check_topology, elimination_efficiency, find_definite_questions, is_sigma_field,
    parent_questions, EnumerationReport, GroundSet, SubsetFamily, Topology,
};
use serde::Serialize;
use thiserror::Error;

use crate::document::{parse_question, DocumentError, QuestionDocument};
use crate::output::{
    kind_name, serialize_result, AgreementView, CountView, EfficiencyView, ReportView,
    ResolutionView, SequenceView, SigmaView, ValidationView,
};
use crate::parallel::{count_parallel, enumerate_parallel};

#[derive(Debug, Parser)]
#[command(
    name = "qtopo",
    version,
    about = "Questions as topologies on finite sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the topology axioms and report the first violation.
    Validate { file: PathBuf },
    /// Classify the question with respect to one point.
    Classify {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Print T - N(x).
    Resolve {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Resolve several points in turn.
    Sequence {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        points: Vec<String>,
    },
    /// Print the negation question.
    Negate { file: PathBuf },
    /// Print the clopen sets.
    Clopen { file: PathBuf },
    /// Do the question and its negation coincide?
    Agree { file: PathBuf },
    /// σ-field test on the raw family (topology axioms not required).
    Sigma { file: PathBuf },
    /// List every topology on n points, one document per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print only the number of topologies.
        #[arg(long)]
        count_only: bool,
        /// Print the per-point question-type census.
        #[arg(long)]
        census: bool,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// List the topologies in which a point has a definite answer.
    Definite {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        point: String,
        #[command(flatten)]
        space: SpaceArgs,
    },
    /// List the topologies on a larger ground set that contain the question.
    Parents {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        superset: Vec<String>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Number of assertions one resolution eliminates.
    Efficiency {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
}

#[derive(Debug, clap::Args)]
pub struct SpaceArgs {
    /// Element labels (default x0,x1,...).
    #[arg(long, value_delimiter = ',')]
    labels: Option<Vec<String>>,
    /// Worker threads for the search (default: available parallelism).
    #[arg(long)]
    workers: Option<usize>,
}

impl SpaceArgs {
    fn ground(&self, n: usize) -> Result<GroundSet, CliError> {
        let labels = match &self.labels {
            Some(labels) if labels.len() != n => {
                return Err(CliError::Usage(format!(
                    "--labels lists {} labels but --n is {n}",
                    labels.len()
                )))
            }
            Some(labels) => labels.clone(),
            None => (0..n).map(|i| format!("x{i}")).collect(),
        };
        GroundSet::new(labels).map_err(|e| CliError::Usage(e.to_string()))
    }

    fn workers(&self) -> usize {
        self.workers.unwrap_or_else(|| {
            std::thread::available_parallelism().map_or(1, std::num::NonZeroUsize::get)
        })
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Document {
        path: String,
        #[source]
        source: DocumentError,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: not a topology: {report}")]
    NotTopology { path: String, report: String },
    #[error(transparent)]
    Domain(#[from] qtopo_core::Error),
    #[error("output: {0}")]
    Output(#[source] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) | CliError::NotTopology { .. } => 1,
            _ => 2,
        }
    }
}

fn read_family(path: &Path) -> Result<(GroundSet, SubsetFamily), CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_question(&text).map_err(|source| CliError::Document {
        path: path.display().to_string(),
        source,
    })
}

fn read_topology(path: &Path) -> Result<Topology, CliError> {
    let (ground, family) = read_family(path)?;
    check_topology(&family, &ground).map_err(|v| CliError::NotTopology {
        path: path.display().to_string(),
        report: serialize_result(&ValidationView::new(&ground, Err(v))),
    })?;
    Ok(Topology::new(family, ground)?)
}

fn emit<W: Write, T: Serialize + ?Sized>(out: &mut W, value: &T) -> Result<(), CliError> {
    writeln!(out, "{}", serialize_result(value)).map_err(CliError::Output)
}

fn emit_family<W: Write>(
    out: &mut W,
    ground: &GroundSet,
    family: &SubsetFamily,
) -> Result<(), CliError> {
    emit(out, &QuestionDocument::from_family(ground, family))
}

/// Runs one command, writing results to `out`. Returns the exit code the
/// command itself decided on; errors carry their own.
pub fn execute<W: Write>(cli: &Cli, out: &mut W) -> Result<i32, CliError> {
    match &cli.command {
        Command::Validate { file } => {
            let (ground, family) = read_family(file)?;
            let check = check_topology(&family, &ground);
            let code = i32::from(check.is_err());
            emit(out, &ValidationView::new(&ground, check))?;
            return Ok(code);
        }
        Command::Classify { file, point } => {
            let t = read_topology(file)?;
            emit(
                out,
                &ResolutionView::new(t.ground(), &t.classify_question(point)),
            )?;
        }
        Command::Resolve { file, point } => {
            let t = read_topology(file)?;
            emit_family(out, t.ground(), &t.resolve_issue(point))?;
        }
        Command::Sequence { file, points } => {
            let t = read_topology(file)?;
            emit(out, &SequenceView::new(&t.resolve_sequence(points)))?;
        }
        Command::Negate { file } => {
            let t = read_topology(file)?;
            emit_family(out, t.ground(), t.negation_question().family())?;
        }
        Command::Clopen { file } => {
            let t = read_topology(file)?;
            emit_family(out, t.ground(), &t.clopen_sets())?;
        }
        Command::Agree { file } => {
            let t = read_topology(file)?;
            emit(
                out,
                &AgreementView {
                    agree: t.machines_agree(),
                    sigma_field: is_sigma_field(t.family(), t.ground()),
                },
            )?;
        }
        Command::Sigma { file } => {
            let (ground, family) = read_family(file)?;
            emit(
                out,
                &SigmaView {
                    sigma_field: is_sigma_field(&family, &ground),
                },
            )?;
        }
        Command::Enumerate {
            n,
            count_only,
            census,
            space,
        } => {
            let ground = space.ground(*n)?;
            if *census {
                let all = enumerate_parallel(&ground, space.workers())?;
                let report = EnumerationReport::from_topologies(&ground, &all);
                emit(out, &ReportView::from(&report))?;
            } else if *count_only {
                let count = count_parallel(*n, space.workers())?;
                emit(out, &CountView { n: *n, count })?;
            } else {
                for t in enumerate_parallel(&ground, space.workers())? {
                    emit_family(out, &ground, t.family())?;
                }
            }
        }
        Command::Definite { n, point, space } => {
            let ground = space.ground(*n)?;
            for t in find_definite_questions(&ground, point)? {
                emit_family(out, &ground, t.family())?;
            }
        }
        Command::Parents {
            file,
            superset,
            limit,
        } => {
            let t = read_topology(file)?;
            let big = GroundSet::new(superset.iter().cloned())
                .map_err(|e| CliError::Usage(format!("--superset: {e}")))?;
            for p in parent_questions(&t, &big, *limit)? {
                emit_family(out, &big, p.family())?;
            }
        }
        Command::Efficiency { file, point } => {
            let t = read_topology(file)?;
            emit(
                out,
                &EfficiencyView {
                    point: point.clone(),
                    kind: kind_name(t.classify_question(point).kind()),
                    eliminated: elimination_efficiency(&t, point),
                },
            )?;
        }
    }
    Ok(0)
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
