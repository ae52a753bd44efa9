mod commands;
mod error;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::error::{CliError, EXIT_USAGE};
use crate::report::{RunReport, Session};

/// Tree decompositions measured by the independence number of their bags.
///
/// Files are PACE-style and 1-indexed: `.gr` graphs, `.td` decompositions
/// (with optional `r <bag> <vertices…>` lines for refined sets), `<v> <weight>`
/// weight files, `s fam` family files. Every command except `gen` without
/// `-o` prints one JSON report on standard output.
///
/// Exit codes: 0 success, 1 usage or input error, 2 invalid decomposition or
/// violated bound, 3 size cap exceeded.
#[derive(Debug, Parser)]
#[command(name = "treealpha", version)]
struct Cli {
    /// Worker threads for the dynamic program (results do not depend on it).
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Graph in `.gr` format; standard input when absent or `-`.
    #[arg(long, short = 'g')]
    graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphTd {
    #[command(flatten)]
    graph: GraphArg,

    /// Tree decomposition in `.td` format.
    #[arg(long, short = 't')]
    td: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the tree decomposition axioms and `U_t ⊆ X_t` (exit 2 on violation).
    Validate(GraphTd),

    /// Width, independence number `α(T) = max α(G[X_t])` and residual
    /// independence number `max α(G[X_t \ U_t])` of a decomposition.
    Measure(GraphTd),

    /// Convert to a nice refined decomposition (empty root and leaves; introduce,
    /// forget and join nodes) whose bags and refined sets shrink from the input's,
    /// so the residual independence number never grows.
    Nice {
        #[command(flatten)]
        input: GraphTd,
        /// Output `.td`; embedded in the report when absent.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },

    /// Maximum weight independent set by dynamic programming over a refined
    /// decomposition of residual independence number at most K, in time
    /// O(2^ℓ · n^(K+1) · |V(T)|) where ℓ bounds the refined set sizes.
    Mwis {
        #[command(flatten)]
        input: GraphTd,
        /// Vertex weights (`<v> <weight>` lines, rational or decimal); unlisted vertices weigh 1.
        #[arg(long, short = 'w')]
        weights: Option<PathBuf>,
        /// Residual independence bound; defaults to the measured residual independence number.
        #[arg(short = 'k')]
        k: Option<usize>,
    },

    /// Maximum weight independent packing of connected subgraphs, solved as an
    /// independent set problem on the derived conflict graph over the derived
    /// decomposition, whose independence number is at most the input's.
    Pack(PackArgs),

    /// Exact tree-independence number with a witness decomposition, by dynamic
    /// programming over elimination sets. Refuses graphs above 20 vertices
    /// unless forced.
    Tin {
        #[command(flatten)]
        graph: GraphArg,
        /// Exact computation (the only mode; accepted for explicitness).
        #[arg(long)]
        exact: bool,
        /// Raise the size cap to 30 vertices.
        #[arg(long)]
        force: bool,
        /// Write the witness `.td`; embedded in the report when absent.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },

    /// Exact treewidth by dynamic programming over elimination sets.
    Tw {
        #[command(flatten)]
        graph: GraphArg,
        /// Raise the size cap to 30 vertices.
        #[arg(long)]
        force: bool,
    },

    /// Generate a graph: `complete n`, `path n`, `cycle n`, `edgeless n`,
    /// `knn n`, `complete-bipartite m n`, `double-join <kind> <params>`
    /// (two copies of a graph joined completely), `sharpness k` (tree-independence
    /// number k, treewidth k - 1).
    Gen {
        /// Generator name and parameters.
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        /// Output `.gr`; the graph goes to standard output when absent.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },

    /// Glue decompositions of G[A ∪ C] and G[B ∪ C] along a clique cutset C;
    /// the result's independence number is the larger of the two.
    Compose {
        #[command(flatten)]
        graph: GraphArg,
        /// Vertex set files for A, B and the clique C.
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"])]
        cut: Vec<PathBuf>,
        #[arg(long)]
        td_a: PathBuf,
        #[arg(long)]
        td_b: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true)))]
pub struct PackArgs {
    #[command(flatten)]
    input: GraphTd,

    /// Family file (`s fam <count>`, then `f <id> <weight> <size> <vertices…>`).
    #[arg(long, group = "source")]
    family: Option<PathBuf>,

    /// Every vertex set spanned by one of these patterns: comma separated
    /// `k1`..`k5`, `p1`..`p5`, `c3`..`c5`, `s1`..`s4`, or paths to `.gr` files.
    #[arg(long, group = "source")]
    patterns: Option<String>,

    /// Every connected vertex set of at most S vertices weighted by its vertex
    /// weight; the uncovered vertices form a minimum weight separator leaving
    /// components of order at most S.
    #[arg(long, group = "source", value_name = "S")]
    separator: Option<usize>,

    /// Every connected vertex set (at most 12 vertices in the graph).
    #[arg(long, group = "source")]
    blob: bool,

    /// Vertex weights; pattern and blob members then weigh their total vertex weight.
    #[arg(long, short = 'w')]
    weights: Option<PathBuf>,

    /// Weigh pattern and blob members by their order (unit vertex weights).
    #[arg(long)]
    cover: bool,

    /// Independence bound for the derived decomposition; defaults to α(T).
    #[arg(short = 'k')]
    k: Option<usize>,

    /// Write the derived graph `.gr`.
    #[arg(long)]
    emit_derived: Option<PathBuf>,

    /// Write the derived decomposition `.td`.
    #[arg(long)]
    emit_derived_td: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let mut session = Session::default();
    match run(&cli, &mut session) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some((name, results, code))) => {
            let report = RunReport {
                command: name,
                inputs: session.inputs,
                results,
                artifacts: session.artifacts,
                wall_time_ms: start.elapsed().as_millis() as u64,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Command name, results and exit code; `None` when nothing is reported.
type Outcome = Option<(&'static str, serde_json::Value, u8)>;

fn run(cli: &Cli, session: &mut Session) -> Result<Outcome, CliError> {
    let threads = cli.threads as usize;
    let reported = |name, value| Ok(Some((name, value, 0)));
    match &cli.command {
        Command::Validate(input) => {
            let (valid, results) = commands::validate(session, input)?;
            Ok(Some((
                "validate",
                results,
                if valid { 0 } else { error::EXIT_VIOLATION },
            )))
        }
        Command::Measure(input) => reported("measure", commands::measure(session, input)?),
        Command::Nice { input, output } => {
            reported("nice", commands::nice(session, input, output.as_ref())?)
        }
        Command::Mwis { input, weights, k } => reported(
            "mwis",
            commands::mwis(session, input, weights.as_ref(), *k, threads)?,
        ),
        Command::Pack(args) => reported("pack", commands::pack(session, args, threads)?),
        Command::Tin {
            graph,
            exact: _,
            force,
            output,
        } => reported(
            "tin",
            commands::tin(session, graph, *force, output.as_ref())?,
        ),
        Command::Tw { graph, force } => reported("tw", commands::tw(session, graph, *force)?),
        Command::Gen { spec, output } => {
            match commands::generate(session, spec, output.as_ref())? {
                Some(results) => reported("gen", results),
                None => Ok(None),
            }
        }
        Command::Compose {
            graph,
            cut,
            td_a,
            td_b,
            output,
        } => reported(
            "compose",
            commands::compose(session, graph, cut, td_a, td_b, output.as_ref())?,
        ),
    }
}
