use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use kempe_reconfig::graph::{encode_graph6, Graph};
use kempe_reconfig::harness::{
    search_conjecture, verify_theorem1_boundary, verify_theorem2, AssignmentGenerator, Checker, SweepOptions,
    VerificationReport,
};
use kempe_reconfig::io::{parse_coloring, parse_graph, parse_graph_corpus, parse_lists};
use kempe_reconfig::oracle::{build_reconfig_graph_capped, classify, find_path, DEFAULT_NODE_CAP};
use kempe_reconfig::{Color, Coloring, Error, ListAssignment, Result, Vertex};

#[derive(Parser)]
#[command(name = "kempe", version, about = "Kempe-chain reconfiguration of list colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Partition all L-colorings into Kempe classes.
    Classes {
        #[command(flatten)]
        input: Instance,
        /// Also write the reconfiguration graph in DOT format.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Include the smallest coloring of each class.
        #[arg(long)]
        witnesses: bool,
    },
    /// Shortest sequence of L-valid Kempe changes between two colorings.
    Path {
        #[command(flatten)]
        input: Instance,
        #[arg(long, value_name = "FILE")]
        from: PathBuf,
        #[arg(long, value_name = "FILE")]
        to: PathBuf,
    },
    /// Run one lemma or claim checker.
    Check(CheckArgs),
    /// Sweep assignments for theorem 1 (identical lists) or theorem 2.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Search a 3-connected graph for a multi-class tight assignment.
    Conjecture {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Print connected graphs up to isomorphism as graph6 lines.
    Corpus {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        min_connectivity: usize,
    },
}

#[derive(Args)]
struct Instance {
    /// graph6 string, or a file holding graph6 or `{"n", "edges"}` JSON.
    #[arg(short, long)]
    graph: String,
    /// JSON file `{"lists": {"0": [...], ...}}`.
    #[arg(short, long, value_name = "FILE")]
    lists: PathBuf,
    #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
    node_cap: usize,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(3..=6), conflicts_with = "claim", required_unless_present = "claim")]
    lemma: Option<u8>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    claim: Option<u8>,
    #[command(flatten)]
    input: Instance,
    #[arg(long)]
    x: Option<Vertex>,
    #[arg(long)]
    y: Option<Vertex>,
    #[arg(long)]
    a: Option<Color>,
    #[arg(long)]
    b: Option<Color>,
    #[arg(long)]
    c: Option<Color>,
    /// JSON file `{"colors": {"0": c, ...}}`.
    #[arg(long, value_name = "FILE")]
    coloring: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// graph6 string, or a file of graph6 lines or one JSON graph.
    #[arg(short, long)]
    graph: String,
    /// Distinct colors allowed (exhaustive) or palette size (sampled);
    /// defaults to one more than the maximum degree.
    #[arg(long)]
    palette_cap: Option<usize>,
    /// Sample this many random assignments instead of enumerating.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
    node_cap: usize,
    /// Leave out the elapsed time so reports are byte-reproducible.
    #[arg(long)]
    omit_timing: bool,
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn graph_text(arg: &str) -> Result<String> {
    let p = Path::new(arg);
    if p.is_file() {
        read(p)
    } else {
        Ok(arg.to_string())
    }
}

fn load_instance(input: &Instance) -> Result<(Graph, ListAssignment)> {
    let g = parse_graph(&graph_text(&input.graph)?)?;
    let lists = parse_lists(&read(&input.lists)?)?;
    lists.check_covers(&g)?;
    Ok((g, lists))
}

fn need<T>(v: Option<T>, flag: &str, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::Precondition(format!("{what} requires --{flag}")))
}

fn load_coloring(path: Option<&PathBuf>, what: &str) -> Result<Coloring> {
    parse_coloring(&read(need(path, "coloring", what)?)?)
}

fn run_check(args: &CheckArgs) -> Result<Value> {
    let (g, lists) = load_instance(&args.input)?;
    let checker = Checker::new(&g, &lists)?.with_node_cap(args.input.node_cap);
    let verdict = match (args.lemma, args.claim) {
        (Some(3), _) => checker.lemma3()?,
        (Some(4), _) => checker.lemma4()?,
        (Some(5), _) => checker.lemma5(need(args.x, "x", "lemma 5")?, need(args.a, "a", "lemma 5")?)?,
        (Some(6), _) => checker.lemma6(
            need(args.x, "x", "lemma 6")?,
            need(args.y, "y", "lemma 6")?,
            need(args.a, "a", "lemma 6")?,
            need(args.b, "b", "lemma 6")?,
        )?,
        (_, Some(1)) => {
            let psi = load_coloring(args.coloring.as_ref(), "claim 1")?;
            checker.claim1(&psi, need(args.x, "x", "claim 1")?, need(args.c, "c", "claim 1")?)?
        }
        (_, Some(2)) => {
            let phi = load_coloring(args.coloring.as_ref(), "claim 2")?;
            checker.claim2(&phi, need(args.x, "x", "claim 2")?, need(args.a, "a", "claim 2")?)?
        }
        (_, Some(3)) => checker.claim3(
            need(args.x, "x", "claim 3")?,
            need(args.y, "y", "claim 3")?,
            need(args.c, "c", "claim 3")?,
        )?,
        _ => unreachable!("clap restricts the check number"),
    };
    Ok(serde_json::to_value(verdict)?)
}

fn run_sweep(
    args: &SweepArgs,
    sweep: impl Fn(&Graph, SweepOptions, &SweepArgs) -> Result<VerificationReport>,
) -> Result<Value> {
    let graphs = parse_graph_corpus(&graph_text(&args.graph)?)?;
    let opts = SweepOptions {
        node_cap: args.node_cap,
        include_timing: !args.omit_timing,
    };
    if let [g] = graphs.as_slice() {
        return Ok(serde_json::to_value(sweep(g, opts, args)?)?);
    }
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for g in &graphs {
        match sweep(g, opts, args) {
            Ok(r) => reports.push(serde_json::to_value(r)?),
            Err(e @ (Error::Precondition(_) | Error::PaletteCap { .. } | Error::Disconnected)) => {
                skipped.push(json!({ "graph6": encode_graph6(g), "reason": e.to_string() }))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(json!({ "reports": reports, "skipped": skipped }))
}

fn generator(g: &Graph, args: &SweepArgs) -> AssignmentGenerator {
    let cap = args.palette_cap.unwrap_or(g.max_degree() + 1);
    match args.samples {
        Some(samples) => AssignmentGenerator::random(g.clone(), cap, samples, args.seed),
        None => AssignmentGenerator::exhaustive(g.clone(), cap),
    }
}

fn run(cli: Cli) -> Result<()> {
    let out: Value = match cli.command {
        Command::Classes { input, dot, witnesses } => {
            let (g, lists) = load_instance(&input)?;
            if let Some(path) = dot {
                let rg = build_reconfig_graph_capped(&g, &lists, input.node_cap)?;
                fs::write(path, rg.to_dot())?;
            }
            serde_json::to_value(classify(&g, &lists, input.node_cap)?.report(witnesses))?
        }
        Command::Path { input, from, to } => {
            let (g, lists) = load_instance(&input)?;
            let from = parse_coloring(&read(&from)?)?;
            let to = parse_coloring(&read(&to)?)?;
            let rg = build_reconfig_graph_capped(&g, &lists, input.node_cap)?;
            match find_path(&rg, &from, &to)? {
                Some(moves) => json!({ "status": "reachable", "length": moves.len(), "moves": moves }),
                None => json!({ "status": "unreachable" }),
            }
        }
        Command::Check(args) => run_check(&args)?,
        Command::Verify { theorem, sweep } => run_sweep(&sweep, |g, opts, args| {
            if theorem == 1 {
                verify_theorem1_boundary(g, opts)
            } else {
                verify_theorem2(g, &generator(g, args), opts)
            }
        })?,
        Command::Conjecture { sweep } => {
            run_sweep(&sweep, |g, opts, args| search_conjecture(g, &generator(g, args), opts))?
        }
        Command::Corpus {
            max_n,
            min_connectivity,
        } => {
            let lines: String = kempe_reconfig::harness::connected_graphs(max_n, min_connectivity)?
                .iter()
                .map(|g| encode_graph6(g) + "\n")
                .collect();
            return emit(&lines);
        }
    };
    emit(&(serde_json::to_string_pretty(&out)? + "\n"))
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource_limit() { 2 } else { 1 })
        }
    }
}
