//! `pebblework`: batch front end for generation, game solving, formula
//! evaluation, pattern statistics and scenario verification.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use log::{info, warn};
use serde_json::{json, Value};

use pebblework::game::{self, GameQuery, Rounds, SolveOptions};
use pebblework::graph::{self, FamilyKind, Graph, SOLVER_VERTEX_CAP};
use pebblework::harness::{self, Manifest, Scenario, ScenarioKind, Verdict, DEFAULT_SEED};
use pebblework::logic;
use pebblework::pattern;
use pebblework::Rational;

#[derive(Parser)]
#[command(name = "pebblework", version, about = "Pebble games, subgraph patterns and first-order sentences on small graphs")]
struct Cli {
    /// More progress on stderr (-v: solver progress, -vv: debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member as an edge list or graph6.
    Gen(GenArgs),
    /// Compute distinguishing depth/width, or solve one pebble game.
    Solve(SolveArgs),
    /// Evaluate a sentence on a graph.
    Eval(EvalArgs),
    /// Pendant statistics, twin classes and the combined lower bound of a graph.
    Stats(StatsArgs),
    /// Run verification scenarios and print a report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    G,
    H,
}

#[derive(Args)]
struct GenArgs {
    /// Family name (see the list below).
    #[arg(long)]
    family: String,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// For pair families: which graph of the pair to write.
    #[arg(long, value_enum, default_value = "g")]
    which: Which,
    #[arg(long, value_enum, default_value = "edge-list")]
    format: GraphFormat,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
#[command(group(ArgGroup::new("game").args(["pebbles"]).conflicts_with_all(["depth", "width"])))]
struct SolveArgs {
    /// Graph file (edge list or graph6).
    g: PathBuf,
    h: PathBuf,
    /// Report the distinguishing depth D.
    #[arg(long)]
    depth: bool,
    /// Report the distinguishing width W.
    #[arg(long)]
    width: bool,
    /// Solve the game with this many pebbles instead.
    #[arg(long)]
    pebbles: Option<usize>,
    /// Round limit for --pebbles; unbounded when absent.
    #[arg(long, requires = "pebbles")]
    rounds: Option<usize>,
    /// Include a Spoiler strategy tree (with --pebbles).
    #[arg(long, requires = "pebbles")]
    strategy: bool,
    /// Solver vertex cap; values above the default print a warning.
    #[arg(long, default_value_t = SOLVER_VERTEX_CAP)]
    cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct EvalArgs {
    /// File holding one sentence in ASCII syntax.
    formula: PathBuf,
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct StatsArgs {
    graph: PathBuf,
}

#[derive(Args)]
#[command(group(ArgGroup::new("selector").args(["scenario", "all", "manifest"]).required(true)))]
struct VerifyArgs {
    /// Run one scenario with its defaults, overridden by the parameter flags.
    #[arg(long)]
    scenario: Option<String>,
    /// Run the built-in grid.
    #[arg(long, conflicts_with = "scenario")]
    all: bool,
    /// Run the grid in this TOML manifest.
    #[arg(long, conflicts_with = "scenario")]
    manifest: Option<PathBuf>,
    /// Seed for every sampled scenario (default: the manifest seed, or 1).
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
    /// Include per-scenario runtimes (reports are then no longer reproducible).
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    params: ScenarioParams,
}

#[derive(Args)]
#[command(next_help_heading = "Scenario parameters")]
struct ScenarioParams {
    #[arg(long)]
    max_l: Option<i64>,
    #[arg(long)]
    max_vertices: Option<i64>,
    #[arg(long)]
    min_vertices: Option<i64>,
    #[arg(long)]
    q: Option<i64>,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    l: Option<i64>,
    #[arg(long)]
    s: Option<i64>,
    #[arg(long)]
    t: Option<i64>,
    #[arg(long)]
    width: Option<i64>,
    #[arg(long)]
    samples: Option<i64>,
    #[arg(long)]
    pairs: Option<i64>,
    #[arg(long)]
    pattern_max: Option<i64>,
    #[arg(long)]
    host_max: Option<i64>,
}

impl ScenarioParams {
    fn overrides(&self) -> BTreeMap<String, i64> {
        let all = [
            ("max_l", self.max_l),
            ("max_vertices", self.max_vertices),
            ("min_vertices", self.min_vertices),
            ("q", self.q),
            ("p", self.p),
            ("n", self.n),
            ("l", self.l),
            ("s", self.s),
            ("t", self.t),
            ("width", self.width),
            ("samples", self.samples),
            ("pairs", self.pairs),
            ("pattern_max", self.pattern_max),
            ("host_max", self.host_max),
        ];
        all.into_iter()
            .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
            .collect()
    }

    fn is_empty(&self) -> bool {
        self.overrides().is_empty()
    }
}

/// Failure that maps to exit status 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn catalog() -> String {
    let mut out = String::from("Families (gen --family NAME, parameters as --flags):\n");
    for kind in FamilyKind::ALL {
        let params: Vec<String> = kind.parameters().iter().map(|p| format!("--{p}")).collect();
        out.push_str(&format!("  {:<24}{}\n", kind.name(), params.join(" ")));
    }
    out.push_str("\nScenarios (verify --scenario ID, parameters with defaults):\n");
    for kind in ScenarioKind::ALL {
        let params: Vec<String> = kind
            .defaults()
            .iter()
            .map(|(k, v)| format!("--{}={v}", k.replace('_', "-")))
            .collect();
        out.push_str(&format!("  {:<26}{}\n", kind.id(), params.join(" ")));
    }
    out.push_str("\nExit status: 0 success or all verdicts pass, 1 some verdict fails, 2 usage or input error.");
    out
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}

/// Edge list, or graph6 when the file is a single token.
fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_text(path)?;
    let trimmed = text.trim();
    let single_token = !trimmed.is_empty() && !trimmed.contains(char::is_whitespace);
    let parsed = if single_token || trimmed.starts_with(">>graph6<<") {
        graph::from_graph6(trimmed)
    } else {
        graph::parse_edge_list(&text)
    };
    parsed.map_err(|e| Failure(format!("malformed graph file {}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(args: &GenArgs) -> Outcome {
    let kind = FamilyKind::from_name(&args.family).ok_or_else(|| {
        let names: Vec<&str> = FamilyKind::ALL.iter().map(|k| k.name()).collect();
        Failure(format!("unknown family {:?}; expected one of {}", args.family, names.join(", ")))
    })?;
    let given = [
        ("l", args.l),
        ("n", args.n),
        ("k", args.k),
        ("q", args.q),
        ("p", args.p),
        ("s", args.s),
        ("t", args.t),
    ];
    for (name, value) in given {
        if value.is_some() && !kind.parameters().contains(&name) {
            return Err(Failure(format!("family {} takes no parameter --{name}", kind.name())));
        }
    }
    let spec = kind.with_params(|name| given.iter().find(|(k, _)| *k == name).and_then(|(_, v)| *v))?;
    let family = graph::generate_uncapped(&spec)?;
    let g = match (family, args.which) {
        (graph::Family::Single(g), _) => g,
        (graph::Family::Pair(g, _), Which::G) => g,
        (graph::Family::Pair(_, h), Which::H) => h,
    };
    let text = match args.format {
        GraphFormat::EdgeList => graph::to_edge_list(&g),
        GraphFormat::Graph6 => format!("{}\n", graph::to_graph6(&g)),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn solve(args: &SolveArgs) -> Outcome {
    if args.format == OutputFormat::Csv {
        return Err(Failure("solve supports --format json or text".into()));
    }
    if args.cap > SOLVER_VERTEX_CAP {
        warn!("solver vertex cap raised from {SOLVER_VERTEX_CAP} to {}; solves may be slow", args.cap);
    }
    let g = read_graph(&args.g)?;
    let h = read_graph(&args.h)?;

    if let Some(pebbles) = args.pebbles {
        let rounds = match args.rounds {
            Some(r) => Rounds::Bounded(r),
            None => Rounds::Unbounded,
        };
        info!("solving the {pebbles}-pebble game");
        let query = GameQuery {
            g: &g,
            h: &h,
            pebbles,
            rounds,
        };
        let options = SolveOptions {
            cap: args.cap,
            strategy: args.strategy,
        };
        let outcome = game::solve(&query, &options)?;
        match args.format {
            OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&outcome)?),
            _ => {
                let winner = if outcome.spoiler_wins { "spoiler" } else { "duplicator" };
                match outcome.rounds_needed {
                    Some(r) => println!("winner={winner} rounds={r}"),
                    None => println!("winner={winner}"),
                }
                if let Some(tree) = &outcome.strategy {
                    println!("{}", serde_json::to_string_pretty(tree)?);
                }
            }
        }
        return Ok(ExitCode::SUCCESS);
    }

    let (want_depth, want_width) = match (args.depth, args.width) {
        (false, false) => (true, true),
        other => other,
    };
    let mut results: Vec<(&str, usize)> = Vec::new();
    if want_depth {
        info!("computing distinguishing depth");
        results.push(("D", game::distinguishing_depth_with(&g, &h, args.cap)?));
    }
    if want_width {
        info!("computing distinguishing width");
        results.push(("W", game::distinguishing_width_with(&g, &h, args.cap)?));
    }
    match args.format {
        OutputFormat::Json => {
            let map: BTreeMap<&str, usize> = results
                .iter()
                .map(|&(k, v)| (if k == "D" { "depth" } else { "width" }, v))
                .collect();
            println!("{}", serde_json::to_string(&map)?);
        }
        _ => {
            for (k, v) in results {
                println!("{k}={v}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn eval(args: &EvalArgs) -> Outcome {
    if args.format == OutputFormat::Csv {
        return Err(Failure("eval supports --format json or text".into()));
    }
    let formula = logic::parse_formula(read_text(&args.formula)?.trim())
        .map_err(|e| Failure(format!("malformed formula file {}: {e}", args.formula.display())))?;
    let g = read_graph(&args.graph)?;
    let value = logic::evaluate(&formula, &g)?;
    match args.format {
        OutputFormat::Json => println!(
            "{}",
            json!({
                "value": value,
                "quantifier_depth": formula.quantifier_depth(),
                "variable_width": formula.variable_width(),
            })
        ),
        _ => println!("{value}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn stats(args: &StatsArgs) -> Outcome {
    let g = read_graph(&args.graph)?;
    let twins = pattern::twin_decomposition(&g);
    let mut out = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "twins": twins,
    });
    if g.is_connected() {
        out["pattern"] = serde_json::to_value(pattern::pattern_stats(&g)?)?;
        let bound = pattern::combined_lower_bound::<Rational>(&g)?;
        out["combined_lower_bound"] = Value::String(bound.to_string());
    }
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(ExitCode::SUCCESS)
}

fn verify(args: &VerifyArgs) -> Outcome {
    let scenarios: Vec<Scenario> = match &args.scenario {
        Some(id) => vec![Scenario::new(id, &args.params.overrides(), args.seed.unwrap_or(DEFAULT_SEED))?],
        None => {
            if !args.params.is_empty() {
                return Err(Failure("scenario parameter flags require --scenario".into()));
            }
            let manifest = match &args.manifest {
                Some(path) => Manifest::parse(&read_text(path)?)?,
                None => Manifest::default_grid(),
            };
            manifest.scenarios(args.seed)?
        }
    };
    let mut verdicts: Vec<Verdict> = Vec::with_capacity(scenarios.len());
    for (scenario, result) in scenarios.iter().zip(harness::run_all(&scenarios, args.jobs)) {
        let verdict = result?;
        info!(
            "{}: {} in {:.0} ms",
            scenario.id,
            if verdict.pass { "pass" } else { "FAIL" },
            verdict.runtime_ms.unwrap_or(0.0)
        );
        verdicts.push(verdict);
    }
    let text = match args.format {
        OutputFormat::Json => harness::to_json(&verdicts, args.timings),
        OutputFormat::Csv => harness::to_csv(&verdicts, args.timings),
        OutputFormat::Text => harness::to_text(&verdicts, args.timings),
    };
    print!("{text}");
    Ok(if verdicts.iter().all(|v| v.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let matches = Cli::command().after_help(catalog()).get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let level = match cli.verbose {
        0 => "pebblework_cli=info,pebblework=warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();

    let result = match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Eval(a) => eval(a),
        Command::Stats(a) => stats(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
