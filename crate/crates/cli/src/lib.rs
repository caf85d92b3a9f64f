//! The `recur` command line: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 when every verdict passes, 1 when some verdict fails, 2 on
//! unusable input (unknown verb, unreadable or malformed file).

mod cmd_artin;
mod cmd_complex;
mod cmd_engine;
mod cmd_words;
pub mod fixtures;
pub mod input;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use report::{RunReport, Verdict};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{line}:{column}: {msg}")]
    Malformed { path: String, line: usize, column: usize, msg: String },
    #[error("{path}: {violations}")]
    Invalid { path: String, violations: String },
    #[error("{path}: {msg}")]
    At { path: String, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Complex(#[from] recur_complex::ComplexError),
    #[error(transparent)]
    Engine(#[from] recur_engine::EngineError),
    #[error(transparent)]
    Diagram(#[from] recur_diagrams::DiagramError),
    #[error(transparent)]
    Artin(#[from] recur_artin::ArtinError),
}

#[derive(Debug, Parser)]
#[command(name = "recur", version, about = "Recurrence, small cancellation and Artin-group workbench")]
pub struct Cli {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Out {
    /// Write the resulting object here.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a complex file and report its classification.
    Validate { file: PathBuf },
    /// Degrees, essential/thick, gallery components and spheres.
    Analyze { file: PathBuf },
    /// Remove faces with free edges until none remain.
    Collapse {
        file: PathBuf,
        /// Afterwards replace sphere components by cones.
        #[arg(long)]
        cone_spheres: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Barycentric or altitude subdivision.
    Subdivide {
        file: PathBuf,
        #[arg(long, default_value = "barycentric")]
        mode: String,
        #[command(flatten)]
        out: Out,
    },
    /// Nerve of the closed 2-cell cover.
    Wise {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Conditions (i) to (v) of a direction set.
    Recurrence {
        file: PathBuf,
        /// Assert the complex is simply connected so that (v) is decided.
        #[arg(long)]
        assert_simply_connected: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Transition digraph and stationarity of the uniform measure.
    Markov {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Plain-text dump of tokens and arcs.
        #[arg(long)]
        text: Option<PathBuf>,
    },
    /// Build a dumbbell certificate on a thick complex.
    CertifyFree {
        file: PathBuf,
        /// Re-check this stored certificate instead of building one.
        #[arg(long)]
        verify: Option<PathBuf>,
        #[command(flatten)]
        out: Out,
    },
    /// Re-check a stored certificate against a complex.
    VerifyCert { file: PathBuf, cert: PathBuf },
    /// Piece table of a presentation.
    Pieces {
        presentation: String,
        /// Pieces may not run past a syllable end.
        #[arg(long)]
        syllable: bool,
    },
    /// C(n), T(n) or B(6) on a presentation.
    ScCheck {
        presentation: String,
        /// One of C4, C6, T4, B6 (any C<n> or T<n>).
        #[arg(long, default_value = "C6")]
        condition: String,
        #[arg(long)]
        syllable: bool,
    },
    /// Van Kampen diagrams.
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Two dihedral half-relator subwords on the boundary of a least-area diagram.
    CornerSubwords {
        word: String,
        #[arg(short, long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value_t = 4)]
        max_area: usize,
    },
    /// Artin and Coxeter groups of a labelled graph.
    #[command(subcommand)]
    Artin(ArtinCmd),
}

#[derive(Debug, Subcommand)]
pub enum DiagramCmd {
    /// Planarity, labels and reducedness.
    Validate {
        file: PathBuf,
        #[arg(long)]
        presentation: String,
    },
    /// Strip structure and the singleton/compound trichotomy.
    Strips {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Least-area disc diagram for a word.
    Search {
        word: String,
        #[arg(long)]
        presentation: String,
        #[arg(long, default_value_t = 4)]
        max_area: usize,
        #[command(flatten)]
        out: Out,
    },
}

/// A graph file, or inline `edge:M`, `path:M` (two edges) or `triangle:A,B,C`.
#[derive(Debug, Args)]
pub struct GraphArg {
    pub graph: String,
}

#[derive(Debug, Subcommand)]
pub enum ArtinCmd {
    /// Standard presentation.
    Present {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        coxeter: bool,
    },
    /// Extra-large, 2-dimensional and related flags.
    Classify {
        #[command(flatten)]
        g: GraphArg,
    },
    /// Word problem in a dihedral Artin or Coxeter group, or a Coxeter group by Tits reduction.
    Word {
        #[command(flatten)]
        g: GraphArg,
        word: String,
        #[arg(long)]
        coxeter: bool,
    },
    /// Cayley ball exported as a complex file.
    Ball {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, default_value_t = recur_artin::DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        coxeter: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Hypergraphs of a Cayley ball or of a complex file.
    Hypergraph {
        /// Graph spec; omit when --complex is given.
        graph: Option<String>,
        #[arg(long, conflicts_with = "graph")]
        complex: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, default_value_t = recur_artin::DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        coxeter: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// The 12-region diagram with a hypergraph cycle.
    ExampleA2 {
        #[arg(short, long, default_value_t = 3)]
        m: u32,
        /// Trace hypergraphs; the cycle is reported as a failed tree verdict.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        out: Out,
    },
    /// Greedy two-generator block runs of a word.
    Blocks {
        #[command(flatten)]
        g: GraphArg,
        word: String,
    },
    /// Disjoint-or-equal wall probe over every adjacent face pair of a Coxeter ball.
    WallProbe {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, default_value_t = recur_artin::DEFAULT_CAP)]
        cap: usize,
        /// Print at most this many failure reports.
        #[arg(long, default_value_t = 3)]
        show: usize,
    },
}

/// Result of one invocation: exit code and the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn execute(cli: &Cli) -> Result<RunReport, CliError> {
    match &cli.command {
        Command::Validate { file } => cmd_complex::validate(file),
        Command::Analyze { file } => cmd_complex::analyze(file),
        Command::Collapse { file, cone_spheres, out } => cmd_complex::collapse(file, *cone_spheres, out),
        Command::Subdivide { file, mode, out } => cmd_complex::subdivide(file, mode, out),
        Command::Wise { file, dot } => cmd_complex::wise(file, dot.as_deref()),
        Command::Recurrence { file, assert_simply_connected, dot } => {
            cmd_engine::recurrence(file, *assert_simply_connected, dot.as_deref())
        }
        Command::Markov { file, dot, text } => cmd_engine::markov(file, dot.as_deref(), text.as_deref()),
        Command::CertifyFree { file, verify: Some(cert), .. } => cmd_engine::verify_cert(file, cert),
        Command::CertifyFree { file, verify: None, out } => cmd_engine::certify_free(file, out),
        Command::VerifyCert { file, cert } => cmd_engine::verify_cert(file, cert),
        Command::Pieces { presentation, syllable } => cmd_words::pieces(presentation, *syllable),
        Command::ScCheck { presentation, condition, syllable } => cmd_words::sc_check(presentation, condition, *syllable),
        Command::Diagram(d) => cmd_words::diagram(d),
        Command::CornerSubwords { word, m, max_area } => cmd_words::corner(word, *m, *max_area),
        Command::Artin(a) => cmd_artin::run(a),
    }
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("recur")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let stdout = if cli.json { report.render_json() } else { report.render_text() };
            Outcome { code: report.exit_code(), stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
