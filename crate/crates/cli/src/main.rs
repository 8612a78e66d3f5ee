use clap::{Parser, Subcommand, ValueEnum};

use hamcycle::formats::Format;
use hamcycle_cli::commands::{
    cmd_generate, cmd_oracle, cmd_solve, cmd_verify, FamilyArg, GenerateArgs, Input,
};
use hamcycle_cli::{bench, check, EXIT_NONE, EXIT_OK, EXIT_USAGE};

/// Hamiltonian cycles for dense graphs: construct a cycle or certify
/// why none exists, with generators, a brute-force oracle, and an
/// exhaustive verification harness.
#[derive(Parser)]
#[command(name = "hamcycle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatFlag {
    G6,
    Dimacs,
    El,
}

impl From<FormatFlag> for Format {
    fn from(f: FormatFlag) -> Format {
        match f {
            FormatFlag::G6 => Format::Graph6,
            FormatFlag::Dimacs => Format::Dimacs,
            FormatFlag::El => Format::EdgeList,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyFlag {
    A,
    B,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Solve each input graph: print HAMILTONIAN with the cycle, or NONE
    /// with the certificate.
    Solve {
        /// Input file, or `-` for stdin (default).
        input: Option<String>,
        /// Input format; inferred from the extension when omitted.
        #[arg(long, value_enum)]
        format: Option<FormatFlag>,
    },
    /// Check a candidate cycle (whitespace-separated vertices on stdin)
    /// against a graph file.
    Verify {
        graph: String,
        #[arg(long, value_enum)]
        format: Option<FormatFlag>,
    },
    /// Emit one test instance: family a (two cliques sharing a vertex),
    /// family b (independent set joined to a random graph), or a random
    /// graph meeting the degree bound.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyFlag,
        /// Clique parameter of families a and b (n = 2r + 1).
        #[arg(long)]
        r: Option<usize>,
        /// Vertex count of random instances.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Edge probability inside family b's non-independent side.
        #[arg(long = "inner-p")]
        inner_p: Option<f64>,
        #[arg(long, value_enum, default_value = "g6")]
        format: FormatFlag,
    },
    /// Brute-force ground truth for graphs up to 14 vertices.
    Oracle {
        input: Option<String>,
        #[arg(long, value_enum)]
        format: Option<FormatFlag>,
    },
    /// Exhaustively compare the solver against the oracle on every
    /// labeled graph with 3 <= n <= n-max meeting the degree bound.
    Check {
        #[arg(long = "n-max")]
        n_max: usize,
    },
    /// Time the solver on random instances of the given sizes and print
    /// a CSV.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long = "seeds-per-size", default_value_t = 5)]
        seeds_per_size: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Solve { input, format } => {
            cmd_solve(Input::from_arg(input), format.map(Format::from))
        }
        Command::Verify { graph, format } => cmd_verify(graph, format.map(Format::from)),
        Command::Generate {
            family,
            r,
            n,
            seed,
            inner_p,
            format,
        } => cmd_generate(GenerateArgs {
            family: match family {
                FamilyFlag::A => FamilyArg::A,
                FamilyFlag::B => FamilyArg::B,
                FamilyFlag::Random => FamilyArg::Random,
            },
            r,
            n,
            seed,
            inner_p,
            format: format.into(),
        }),
        Command::Oracle { input, format } => {
            cmd_oracle(Input::from_arg(input), format.map(Format::from))
        }
        Command::Check { n_max } => match check::run_check(n_max) {
            Ok(report) => {
                print!("{}", report.render());
                if report.passed() {
                    EXIT_OK
                } else {
                    EXIT_NONE
                }
            }
            Err(msg) => {
                eprintln!("error: {msg}");
                EXIT_USAGE
            }
        },
        Command::Bench {
            sizes,
            seeds_per_size,
        } => match bench::run_bench(&sizes, seeds_per_size) {
            Ok(rows) => {
                print!("{}", bench::render_csv(&rows));
                if rows
                    .iter()
                    .all(|r| r.outcome == "HAMILTONIAN" && r.verified)
                {
                    EXIT_OK
                } else {
                    eprintln!("error: not every instance produced a verified Hamiltonian cycle");
                    EXIT_NONE
                }
            }
            Err(msg) => {
                eprintln!("error: {msg}");
                EXIT_USAGE
            }
        },
    };
    std::process::exit(code);
}
