//! Command-line front end: coloring, verification, exact solving, batch
//! runs and timing. [`run`] takes explicit streams so it can be driven from
//! tests as well as from `main`.

mod batch;
mod bench;
mod color;
mod exact;
mod input;
mod verify;

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};

pub use batch::{batch_report, BatchRecord, RunReport, Status, Summary};
pub use bench::{bench_rows, family_graph, BenchRow, Family};
pub use exact::{survey_rows, SurveyRow, SURVEY_MAX_EDGES, SURVEY_TIME_LIMIT};
pub use verify::parse_coloring;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// Unreadable or malformed input, or a failed batch.
    pub const INPUT: i32 = 1;
    /// The graph is not claw-free or not subcubic.
    pub const REJECTED: i32 = 2;
    /// Colored, but some component is the triangular prism (9 colors).
    pub const EXCEPTIONAL: i32 = 3;
    pub const INTERNAL: i32 = 4;
    /// `verify` found violations.
    pub const VIOLATIONS: i32 = 5;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Edgelist,
    Graph6,
}

#[derive(Debug, Parser)]
#[command(name = "clawcolor", version, about = "Strong edge colorings of claw-free subcubic graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Strong edge coloring with at most 7 colors (9 for the triangular prism).
    Color {
        /// Graph file, or `-` for standard input.
        input: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Print a JSON document instead of `u v color` lines.
        #[arg(long)]
        json: bool,
        /// Include the case trace.
        #[arg(long)]
        trace: bool,
    },
    /// Check a coloring given as `edge color` or `u v color` lines.
    Verify {
        graph: String,
        coloring: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exact strong chromatic index of a small graph.
    Exact {
        /// Graph file or `-`; omit with --survey-expanded-prisms.
        input: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Give up once every k up to this value is refuted.
        #[arg(long)]
        kmax: Option<usize>,
        /// Search node budget per decision.
        #[arg(long)]
        budget: Option<u64>,
        /// Wall-clock limit in seconds per graph.
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long)]
        max_edges: Option<usize>,
        /// Solve the triangle expansions of these k-prisms instead of an input.
        #[arg(long, value_delimiter = ',')]
        survey_expanded_prisms: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Color and verify every graph6 line of the input.
    Batch {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        json: bool,
    },
    /// Time the coloring on a graph family.
    Bench {
        #[arg(long, value_enum)]
        family: Family,
        /// Edge counts (expanded-prism) or vertex counts (random).
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print all connected subcubic graphs on N vertices as graph6.
    Enumerate {
        n: usize,
        /// Keep only claw-free graphs.
        #[arg(long)]
        claw_free: bool,
    },
}

pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit code.
pub fn run<I, T>(args: I, io: &mut Io) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let _ = write!(io.err, "{e}");
            return code;
        }
    };
    match execute(cli.command, io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            exit::INPUT
        }
    }
}

fn execute(cmd: Command, io: &mut Io) -> Result<i32, String> {
    match cmd {
        Command::Color {
            input,
            format,
            json,
            trace,
        } => color::run(&input, format, json, trace, io),
        Command::Verify {
            graph,
            coloring,
            format,
        } => verify::run(&graph, &coloring, format, io),
        Command::Exact {
            input,
            format,
            kmax,
            budget,
            time_limit,
            max_edges,
            survey_expanded_prisms,
            json,
        } => {
            let opts = exact::Options {
                kmax,
                budget,
                time_limit,
                max_edges,
                json,
            };
            if !survey_expanded_prisms.is_empty() {
                exact::survey(&survey_expanded_prisms, &opts, io)
            } else {
                let input = input.ok_or("exact needs an input or --survey-expanded-prisms")?;
                exact::run(&input, format, &opts, io)
            }
        }
        Command::Batch {
            input,
            parallel,
            json,
        } => batch::run(&input, parallel, json, io),
        Command::Bench {
            family,
            sizes,
            repeats,
            seed,
            json,
        } => bench::run(family, &sizes, repeats, seed, json, io),
        Command::Enumerate { n, claw_free } => {
            let graphs = clawcolor::corpus::enumerate_connected_subcubic(n).map_err(|e| e.to_string())?;
            for g in graphs {
                if !claw_free || clawcolor::recognition::is_claw_free(&g) {
                    writeln!(io.out, "{}", clawcolor::corpus::write_graph6(&g)).map_err(|e| e.to_string())?;
                }
            }
            Ok(exit::OK)
        }
    }
}
