use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sumchoice_cli::report::exit;
use sumchoice_cli::{run_suite, GraphSource, HarnessError, RunConfig, Suite, DEFAULT_SEED};
use sumchoice_core::choosability::{is_choosable_with, Budget, SearchOptions, SizeFunction, Verdict};
use sumchoice_core::graph::{canonical_form, encode_graph6, FamilySpec};
use sumchoice_core::sumchoice::{greedy_bound, Engine, EngineOptions, MemoStore, SumChoiceError};

#[derive(Parser)]
#[command(name = "sumchoice", version, about = "Sum list coloring: choosability, sum choice numbers and verification suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the sum choice number of a graph.
    ChiSc {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Decide whether a graph is f-choosable.
    Choosable {
        #[command(flatten)]
        graph: GraphArgs,
        /// Comma-separated list sizes, one per vertex.
        #[arg(long)]
        sizes: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print a family member as graph6 with a one-line summary.
    Family {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite.
    Verify {
        /// One of: four-vertex, five-vertex, table1-small, edges-and-subdivisions,
        /// cycle-structures, lemma-properties, min-nscg-scan.
        suite: String,
        #[command(flatten)]
        run: RunArgs,
        /// Seed for the randomized cases.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphArgs {
    #[arg(long)]
    graph6: Option<String>,
    /// Family spec such as `wheel:4` or `pathcycles:4,5`.
    #[arg(long)]
    family: Option<String>,
}

impl GraphArgs {
    fn source(&self) -> GraphSource {
        match (&self.graph6, &self.family) {
            (Some(g6), _) => GraphSource::Graph6(g6.clone()),
            (None, Some(spec)) => GraphSource::Family(spec.clone()),
            (None, None) => unreachable!("clap requires one graph source"),
        }
    }
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Persistent memo file; defaults to $SUMCHOICE_CACHE.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Time budget in seconds.
    #[arg(long)]
    budget: Option<f64>,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

impl RunArgs {
    fn memo(&self) -> Result<MemoStore, HarnessError> {
        Ok(match &self.cache {
            Some(p) => MemoStore::open(p)?,
            None => MemoStore::from_env()?,
        })
    }

    fn duration(&self) -> Result<Option<Duration>, HarnessError> {
        match self.budget {
            None => Ok(None),
            Some(s) if s.is_finite() && s > 0.0 => Ok(Some(Duration::from_secs_f64(s))),
            Some(s) => Err(HarnessError::Input(format!("budget must be a positive number of seconds, got {s}"))),
        }
    }

    fn budget(&self) -> Result<Budget, HarnessError> {
        Ok(self.duration()?.map_or_else(Budget::unlimited, Budget::timeout))
    }
}

fn print(value: &Value, json: bool) {
    if json {
        println!("{value}");
        return;
    }
    if let Value::Object(m) = value {
        for (k, v) in m {
            println!("{k:<16} {v}");
        }
    }
}

fn chi_sc(graph: &GraphArgs, run: &RunArgs) -> Result<i32, HarnessError> {
    let source = graph.source();
    let g = source.graph()?;
    let memo = run.memo()?;
    let engine = Engine::with_options(&memo, EngineOptions { budget: run.budget()?, jobs: run.jobs.max(1), ..Default::default() });
    let start = Instant::now();
    match engine.chi_sc(&g) {
        Ok(r) => {
            let mut out = json!({
                "graph": source.to_string(),
                "canonical_graph6": canonical_form(&g)?.0,
                "n": g.order(),
                "m": g.edge_count(),
            });
            if let (Value::Object(m), Value::Object(rec)) = (&mut out, serde_json::to_value(&r).unwrap_or(Value::Null)) {
                m.extend(rec);
                m.insert("elapsed_ms".into(), json!(start.elapsed().as_secs_f64() * 1e3));
            }
            print(&out, run.json);
            Ok(exit::OK)
        }
        Err(SumChoiceError::Unknown { lower, upper }) => {
            let out = json!({ "graph": source.to_string(), "status": "unknown", "lower": lower, "upper": upper });
            print(&out, run.json);
            Ok(exit::UNKNOWN)
        }
        Err(e) => Err(e.into()),
    }
}

fn choosable(graph: &GraphArgs, sizes: &str, run: &RunArgs) -> Result<i32, HarnessError> {
    let source = graph.source();
    let g = source.graph()?;
    let f: SizeFunction = sizes.parse()?;
    let opts = SearchOptions { budget: run.budget()?, jobs: run.jobs.max(1), ..Default::default() };
    let verdict = is_choosable_with(&g, &f, &opts)?;
    let mut out = json!({ "graph": source.to_string(), "sizes": f.as_slice() });
    if let (Value::Object(m), Value::Object(v)) = (&mut out, serde_json::to_value(&verdict).unwrap_or(Value::Null)) {
        m.extend(v);
    }
    print(&out, run.json);
    Ok(match verdict {
        Verdict::Unknown { .. } => exit::UNKNOWN,
        _ => exit::OK,
    })
}

fn family(spec: &str, json: bool) -> Result<i32, HarnessError> {
    let g = spec.parse::<FamilySpec>()?.generate()?;
    let g6 = encode_graph6(&g);
    let key = canonical_form(&g)?.0;
    if json {
        println!("{}", json!({ "spec": spec, "graph6": g6, "n": g.order(), "m": g.edge_count(), "greedy_bound": greedy_bound(&g), "canonical_graph6": key }));
    } else {
        println!("{g6}");
        println!("n {} m {} gb {} canonical {key}", g.order(), g.edge_count(), greedy_bound(&g));
    }
    Ok(exit::OK)
}

fn verify(suite: &str, run: &RunArgs, seed: u64) -> Result<i32, HarnessError> {
    let suite: Suite = suite.parse()?;
    let memo = run.memo()?;
    let cfg = RunConfig { budget: run.duration()?, jobs: run.jobs.max(1), seed };
    let report = run_suite(suite, &memo, &cfg);
    if run.json {
        print!("{}", report.to_json_lines());
    } else {
        print!("{}", report.to_text());
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::ChiSc { graph, run } => chi_sc(graph, run),
        Command::Choosable { graph, sizes, run } => choosable(graph, sizes, run),
        Command::Family { spec, json } => family(spec, *json),
        Command::Verify { suite, run, seed } => verify(suite, run, *seed),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
