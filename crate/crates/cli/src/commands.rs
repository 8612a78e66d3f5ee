//! The solve, verify, generate, and oracle verbs.
//!
//! Stdout carries exactly one machine-parseable result line per input
//! graph; warnings, statistics, and error detail go to stderr.

use std::io::Read;
use std::time::Instant;

use hamcycle::formats::{
    decode_dimacs, decode_edgelist, decode_graph6_batch, encode_dimacs, encode_edgelist,
    encode_graph6, Format,
};
use hamcycle::generators::{gen_exceptional_a, gen_exceptional_b, gen_random_min_degree, GenSpec};
use hamcycle::graph::Graph;
use hamcycle::hamiltonian::{check_cycle, find_hamiltonian, NoneCertificate, SolveOutcome};
use hamcycle::oracle::oracle_hamiltonian;

use crate::{EXIT_NONE, EXIT_OK, EXIT_USAGE};

/// A file path or `-` for stdin.
pub enum Input {
    Path(String),
    Stdin,
}

impl Input {
    pub fn from_arg(arg: Option<String>) -> Input {
        match arg.as_deref() {
            None | Some("-") => Input::Stdin,
            Some(path) => Input::Path(path.to_string()),
        }
    }

    fn read(&self) -> std::io::Result<Vec<u8>> {
        match self {
            Input::Path(path) => std::fs::read(path),
            Input::Stdin => {
                let mut buf = Vec::new();
                std::io::stdin().read_to_end(&mut buf)?;
                Ok(buf)
            }
        }
    }

    /// Flag wins; otherwise the file extension decides.
    fn resolve_format(&self, flag: Option<Format>) -> Option<Format> {
        flag.or(match self {
            Input::Path(path) => Format::from_extension(path),
            Input::Stdin => None,
        })
    }
}

/// Reads the input and decodes it into graphs. graph6 inputs are
/// line-per-graph batches where a bad line yields an error entry instead
/// of aborting; the text formats hold a single graph.
fn load_graphs(input: &Input, flag: Option<Format>) -> Result<Vec<Result<Graph, String>>, i32> {
    let Some(format) = input.resolve_format(flag) else {
        eprintln!("error: cannot infer input format; pass --format");
        return Err(EXIT_USAGE);
    };
    let payload = match input.read() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot read input: {e}");
            return Err(EXIT_USAGE);
        }
    };
    let graphs: Vec<Result<Graph, String>> = match format {
        Format::Graph6 => decode_graph6_batch(&payload)
            .into_iter()
            .map(|(line, res)| res.map_err(|e| format!("line {line}: {e}")))
            .collect(),
        Format::Dimacs => match decode_dimacs(&payload) {
            Ok(decoded) => {
                for w in &decoded.warnings {
                    eprintln!("warning: {w}");
                }
                vec![Ok(decoded.graph)]
            }
            Err(e) => vec![Err(e.to_string())],
        },
        Format::EdgeList => match decode_edgelist(&payload) {
            Ok(g) => vec![Ok(g)],
            Err(e) => vec![Err(e.to_string())],
        },
    };
    if graphs.is_empty() {
        eprintln!("error: no graphs in input");
        return Err(EXIT_USAGE);
    }
    Ok(graphs)
}

fn join_ids(ids: &[usize]) -> String {
    ids.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Result line for one solve, plus its exit code.
pub fn solve_result_line(g: &Graph) -> (String, i32) {
    let started = Instant::now();
    let outcome = find_hamiltonian(g);
    let wall = started.elapsed().as_secs_f64() * 1e3;
    eprintln!(
        "solve: n={} m={} wall_ms={wall:.3}",
        g.vertex_count(),
        g.edge_count()
    );
    match outcome {
        Ok(SolveOutcome::Hamiltonian(c)) => {
            if check_cycle(g, c.vertices()).is_err() {
                eprintln!("error: internal: solver produced an invalid cycle");
                return ("ERROR".into(), EXIT_USAGE);
            }
            (format!("HAMILTONIAN {}", join_ids(c.vertices())), EXIT_OK)
        }
        Ok(SolveOutcome::None(cert)) => {
            let line = match cert {
                NoneCertificate::CutVertex(v) => format!("NONE CUT_VERTEX {v}"),
                NoneCertificate::BigIndependentComponent(s) => {
                    format!("NONE INDEPENDENT_SET {}", join_ids(&s))
                }
                NoneCertificate::RotationExhausted(_) => "NONE ROTATION_EXHAUSTED".into(),
            };
            (line, EXIT_NONE)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ("ERROR".into(), EXIT_USAGE)
        }
    }
}

/// `solve`: one result line per input graph; the exit code is the worst
/// per-graph code, so one bad graph in a batch does not hide the rest.
pub fn cmd_solve(input: Input, flag: Option<Format>) -> i32 {
    let graphs = match load_graphs(&input, flag) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let mut worst = EXIT_OK;
    for entry in graphs {
        let (line, code) = match entry {
            Ok(g) => solve_result_line(&g),
            Err(msg) => {
                eprintln!("error: {msg}");
                ("ERROR".into(), EXIT_USAGE)
            }
        };
        println!("{line}");
        worst = worst.max(code);
    }
    worst
}

/// `oracle`: brute-force ground truth with the same input conventions as
/// solve. Prints `HAMILTONIAN <cycle>` or a bare `NONE`.
pub fn cmd_oracle(input: Input, flag: Option<Format>) -> i32 {
    let graphs = match load_graphs(&input, flag) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let mut worst = EXIT_OK;
    for entry in graphs {
        let (line, code) = match entry {
            Ok(g) => match oracle_hamiltonian(&g) {
                Ok(Some(cycle)) => (format!("HAMILTONIAN {}", join_ids(&cycle)), EXIT_OK),
                Ok(None) => ("NONE".into(), EXIT_NONE),
                Err(e) => {
                    eprintln!("error: {e}");
                    ("ERROR".into(), EXIT_USAGE)
                }
            },
            Err(msg) => {
                eprintln!("error: {msg}");
                ("ERROR".into(), EXIT_USAGE)
            }
        };
        println!("{line}");
        worst = worst.max(code);
    }
    worst
}

/// `verify`: reads the graph from a file and a whitespace-separated
/// vertex list from stdin; reports the first violated cycle condition.
pub fn cmd_verify(graph_path: String, flag: Option<Format>) -> i32 {
    let input = Input::Path(graph_path);
    let graphs = match load_graphs(&input, flag) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let g = match graphs.into_iter().next() {
        Some(Ok(g)) => g,
        Some(Err(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
        None => unreachable!("load_graphs rejects empty input"),
    };
    let mut text = String::new();
    if let Err(e) = std::io::stdin().read_to_string(&mut text) {
        eprintln!("error: cannot read cycle from stdin: {e}");
        return EXIT_USAGE;
    }
    let mut cycle = Vec::new();
    for token in text.split_whitespace() {
        match token.parse::<usize>() {
            Ok(v) => cycle.push(v),
            Err(_) => {
                eprintln!("error: bad vertex {token:?} in cycle");
                return EXIT_USAGE;
            }
        }
    }
    match check_cycle(&g, &cycle) {
        Ok(()) => {
            println!("OK");
            EXIT_OK
        }
        Err(violation) => {
            println!("{violation}");
            EXIT_NONE
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyArg {
    A,
    B,
    Random,
}

pub struct GenerateArgs {
    pub family: FamilyArg,
    pub r: Option<usize>,
    pub n: Option<usize>,
    pub seed: Option<u64>,
    pub inner_p: Option<f64>,
    pub format: Format,
}

/// `generate`: emits one instance of the requested family. Flags not
/// belonging to the family are rejected rather than ignored. The
/// instance's full parameter string goes to stderr so corpus files can
/// record their provenance.
pub fn cmd_generate(args: GenerateArgs) -> i32 {
    let reject = |name: &str| {
        eprintln!("error: --{name} does not apply to this family");
        EXIT_USAGE
    };
    let spec = match args.family {
        FamilyArg::A => {
            if args.n.is_some() {
                return reject("n");
            }
            if args.seed.is_some() {
                return reject("seed");
            }
            if args.inner_p.is_some() {
                return reject("inner-p");
            }
            let Some(r) = args.r else {
                eprintln!("error: --family a requires --r");
                return EXIT_USAGE;
            };
            GenSpec::ExceptionalA { r }
        }
        FamilyArg::B => {
            if args.n.is_some() {
                return reject("n");
            }
            let Some(r) = args.r else {
                eprintln!("error: --family b requires --r");
                return EXIT_USAGE;
            };
            let p = args.inner_p.unwrap_or(0.5);
            if !(0.0..=1.0).contains(&p) {
                eprintln!("error: --inner-p must lie in [0, 1]");
                return EXIT_USAGE;
            }
            GenSpec::ExceptionalB {
                r,
                inner_edge_prob: p,
                seed: args.seed.unwrap_or(0),
            }
        }
        FamilyArg::Random => {
            if args.r.is_some() {
                return reject("r");
            }
            if args.inner_p.is_some() {
                return reject("inner-p");
            }
            let Some(n) = args.n else {
                eprintln!("error: --family random requires --n");
                return EXIT_USAGE;
            };
            GenSpec::RandomMinDeg {
                n,
                seed: args.seed.unwrap_or(0),
            }
        }
    };
    let built = match &spec {
        GenSpec::ExceptionalA { r } => gen_exceptional_a(*r),
        GenSpec::ExceptionalB {
            r,
            inner_edge_prob,
            seed,
        } => gen_exceptional_b(*r, *inner_edge_prob, *seed),
        GenSpec::RandomMinDeg { n, seed } => gen_random_min_degree(*n, *seed),
        GenSpec::Enumerate { .. } => unreachable!("generate has no enumerate family"),
    };
    let graph = match built {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    eprintln!("generated: {spec}");
    match emit_graph(&graph, args.format) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit_graph(g: &Graph, format: Format) -> Result<(), String> {
    match format {
        Format::Graph6 => {
            let mut line = encode_graph6(g).map_err(|e| e.to_string())?;
            line.push(b'\n');
            print_bytes(&line);
        }
        Format::Dimacs => print_bytes(&encode_dimacs(g)),
        Format::EdgeList => print_bytes(&encode_edgelist(g)),
    }
    Ok(())
}

fn print_bytes(bytes: &[u8]) {
    use std::io::Write;
    std::io::stdout()
        .write_all(bytes)
        .expect("stdout is writable");
}
