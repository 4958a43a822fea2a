//! Command-line front end: graph ingestion, detection and oracle commands,
//! instance generation, cross-validation, and timing.
//!
//! Exit codes: 0 success, 2 usage error, 3 input/parse error, 4 oracle size
//! refusal, 5 cross-check disagreement.

mod formats;
mod report;

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use formats::{parse_graph, render_graph, Format};
use report::{
    print_json, BenchReport, BenchRun, Counterexample, DetectReport, MethodAnswers, MethodCounts,
    OracleReport, StageMs, XcheckReport,
};
use truemper::broken_wheel::detect_broken_wheel;
use truemper::long_prism::detect_long_prism;
use truemper::oracle::{
    find_config_exhaustive, find_k23_model, k23_free_by_separators, violating_separator,
    ConfigKind,
};
use truemper::patterns::{
    cycle, make_gk, make_named, path_graph, plant, random_chordal, random_graph, ConfigSpec,
};
use truemper::pipeline::{
    detect_k23_induced_minor, detect_k23_induced_minor_timed, detect_pyramid, detect_theta,
    witness_to_model,
};
use truemper::{ExecMode, Graph, Witness};

#[derive(Parser)]
#[command(
    name = "truemper",
    version,
    about = "Decides whether a graph contains K2,3 as an induced minor, with certifying witnesses"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the staged detection pipeline (or one stage) on a graph file
    Detect(DetectArgs),
    /// Run one brute-force oracle on a graph file
    Oracle(OracleArgs),
    /// Generate a named graph, configuration, or random instance
    Gen(GenArgs),
    /// Cross-validate the pipeline against every oracle on many graphs
    Xcheck(XcheckArgs),
    /// Time the pipeline on random graphs
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Edgelist,
    Graph6,
}

impl FormatArg {
    fn resolve(self) -> Option<Format> {
        match self {
            FormatArg::Auto => None,
            FormatArg::Edgelist => Some(Format::Edgelist),
            FormatArg::Graph6 => Some(Format::Graph6),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Parallel,
    Sequential,
}

impl ModeArg {
    fn resolve(self) -> ExecMode {
        match self {
            ModeArg::Parallel => ExecMode::Parallel,
            ModeArg::Sequential => ExecMode::Sequential,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    Pyramid,
    Theta,
    LongPrism,
    BrokenWheel,
}

#[derive(Args)]
struct DetectArgs {
    /// Input graph file ("-" reads standard input)
    file: String,
    /// Run a single detector instead of the full pipeline; long-prism and
    /// broken-wheel verify their preconditions first
    #[arg(long, value_enum)]
    stage: Option<Stage>,
    /// Include the witness in the report
    #[arg(long, num_args(0..=1), default_value_t = true, default_missing_value = "true")]
    witness: bool,
    /// Include the induced-minor model in the report
    #[arg(long, num_args(0..=1), default_value_t = true, default_missing_value = "true")]
    model: bool,
    /// Shard detector scans across worker threads or run them inline
    #[arg(long, value_enum, default_value_t = ModeArg::Parallel)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Backtracking search for an explicit K2,3 model (n <= 14)
    Model,
    /// Minimal-separator independence criterion (n <= 20)
    Separators,
    /// Exhaustive search for any Truemper configuration (n <= 14)
    Exhaustive,
}

#[derive(Args)]
struct OracleArgs {
    /// Input graph file ("-" reads standard input)
    file: String,
    #[arg(long, value_enum)]
    method: Method,
    /// Run even above the documented size limit
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormatArg {
    Edgelist,
    Graph6,
}

#[derive(Args)]
struct GenArgs {
    /// k23 | k4 | cube | net | co-domino | gk K | cycle N | complete N |
    /// path N | chordal N | random N | theta L1 L2 L3 | pyramid L1 L2 L3 |
    /// prism L1 L2 L3 | broken-wheel S1 S2 S3...
    pattern: String,
    /// Integer parameters of the pattern
    params: Vec<String>,
    /// Background vertices to embed a configuration into
    #[arg(long, default_value_t = 0)]
    background: usize,
    /// Edge probability for random/background edges
    #[arg(long, default_value_t = 0.25)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write here instead of standard output
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = OutFormatArg::Edgelist)]
    format: OutFormatArg,
}

#[derive(Args)]
struct XcheckArgs {
    /// Vertex count
    #[arg(long)]
    n: usize,
    /// Number of random graphs, or "exhaustive" for every labeled graph
    #[arg(long)]
    count: String,
    /// Edge probability for random graphs
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run even above the documented size limit
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum BenchModeArg {
    Parallel,
    Sequential,
    Both,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, default_value_t = 0.15)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Graphs to run per mode (seeds seed, seed+1, ...)
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[arg(long, value_enum, default_value_t = BenchModeArg::Both)]
    mode: BenchModeArg,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Err(f) = configure_threads() {
        eprintln!("truemper: {}", f.message);
        return ExitCode::from(f.code);
    }
    let result = match cli.cmd {
        Cmd::Detect(args) => run_detect(args),
        Cmd::Oracle(args) => run_oracle(args),
        Cmd::Gen(args) => run_gen(args),
        Cmd::Xcheck(args) => run_xcheck(args),
        Cmd::Bench(args) => run_bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("truemper: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("TRUEMPER_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .parse()
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| fail(2, format!("TRUEMPER_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| fail(2, format!("cannot configure {threads} worker threads: {e}")))
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| fail(3, format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| fail(3, format!("cannot read {path}: {e}")))
    }
}

fn load_graph(path: &str, format: FormatArg) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    parse_graph(&text, format.resolve()).map_err(|m| fail(3, format!("{path}: {m}")))
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1_000.0
}

fn timed<T>(
    name: &'static str,
    timings: &mut Vec<StageMs>,
    f: impl FnOnce() -> T,
) -> T {
    let start = Instant::now();
    let out = f();
    timings.push(StageMs {
        stage: name,
        ms: ms(start.elapsed()),
    });
    out
}

/// Outcome of one detection run: the certifying witness if any, and which
/// precondition of a single-stage run failed.
struct Detection {
    witness: Option<Witness>,
    violation: Option<String>,
}

fn run_stage(
    g: &Graph,
    stage: Stage,
    mode: ExecMode,
    timings: &mut Vec<StageMs>,
) -> Detection {
    let found = |witness| Detection {
        witness,
        violation: None,
    };
    let violated = |witness: Witness, what: &str| Detection {
        witness: Some(witness),
        violation: Some(format!("{what} present")),
    };
    match stage {
        Stage::Pyramid => found(timed("pyramid", timings, || detect_pyramid(g))),
        Stage::Theta => found(timed("theta", timings, || detect_theta(g))),
        Stage::LongPrism => {
            if let Some(w) = timed("pyramid", timings, || detect_pyramid(g)) {
                return violated(w, "pyramid");
            }
            match timed("long-prism", timings, || detect_long_prism(g, mode)) {
                Ok(w) => found(w),
                Err(e) => violated(e.0, "pyramid"),
            }
        }
        Stage::BrokenWheel => {
            if let Some(w) = timed("pyramid", timings, || detect_pyramid(g)) {
                return violated(w, "pyramid");
            }
            if let Some(w) = timed("theta", timings, || detect_theta(g)) {
                return violated(w, "theta");
            }
            match timed("long-prism", timings, || detect_long_prism(g, mode)) {
                Ok(Some(w)) => violated(w, "long prism"),
                Ok(None) => found(timed("broken-wheel", timings, || {
                    detect_broken_wheel(g, mode)
                })),
                Err(e) => violated(e.0, "pyramid"),
            }
        }
    }
}

fn run_detect(args: DetectArgs) -> Result<(), Failure> {
    let g = load_graph(&args.file, args.format)?;
    let mode = args.mode.resolve();
    let mut timings = Vec::new();
    let detection = match args.stage {
        None => {
            let (found, stage_times) = detect_k23_induced_minor_timed(&g, mode);
            timings.extend(stage_times.into_iter().map(|(stage, d)| StageMs {
                stage,
                ms: ms(d),
            }));
            Detection {
                witness: found.map(|(w, _)| w),
                violation: None,
            }
        }
        Some(stage) => run_stage(&g, stage, mode, &mut timings),
    };
    let stage = detection
        .witness
        .as_ref()
        .map_or("none", |w| w.kind_name());
    let model = detection
        .witness
        .as_ref()
        .filter(|_| args.model)
        .map(|w| witness_to_model(&g, w).report());
    let report = DetectReport {
        schema: "truemper/detect/1",
        input: args.file,
        n: g.n(),
        m: g.edge_count(),
        contains_k23: detection.witness.is_some(),
        stage,
        precondition_violation: detection.violation,
        witness: detection.witness.filter(|_| args.witness),
        model,
        timings_ms: timings,
    };
    print_json(&report);
    Ok(())
}

fn run_oracle(args: OracleArgs) -> Result<(), Failure> {
    let g = load_graph(&args.file, args.format)?;
    let (name, limit): (&'static str, usize) = match args.method {
        Method::Model => ("model", 14),
        Method::Separators => ("separators", 20),
        Method::Exhaustive => ("exhaustive", 14),
    };
    if g.n() > limit && !args.force {
        return Err(fail(
            4,
            format!(
                "refusing oracle --method {name} on {} vertices (limit {limit}); \
                 pass --force to run anyway",
                g.n()
            ),
        ));
    }
    let start = Instant::now();
    let (contains, model, separator, witness) = match args.method {
        Method::Model => {
            let m = find_k23_model(&g);
            (m.is_some(), m.map(|m| m.report()), None, None)
        }
        Method::Separators => {
            let s = violating_separator(&g);
            (s.is_some(), None, s.map(|s| s.to_vec()), None)
        }
        Method::Exhaustive => {
            let w = find_config_exhaustive(&g, ConfigKind::Any);
            (w.is_some(), None, None, w)
        }
    };
    let report = OracleReport {
        schema: "truemper/oracle/1",
        input: args.file,
        n: g.n(),
        m: g.edge_count(),
        method: name,
        contains,
        model,
        separator,
        witness,
        elapsed_ms: ms(start.elapsed()),
    };
    print_json(&report);
    Ok(())
}

fn int_params(args: &GenArgs, want: usize) -> Result<Vec<usize>, Failure> {
    if args.params.len() != want {
        return Err(fail(
            2,
            format!(
                "pattern {:?} takes {want} integer parameter(s), got {}",
                args.pattern,
                args.params.len()
            ),
        ));
    }
    args.params
        .iter()
        .map(|p| {
            p.parse()
                .map_err(|_| fail(2, format!("parameter {p:?} is not a non-negative integer")))
        })
        .collect()
}

fn gen_graph(args: &GenArgs) -> Result<Graph, Failure> {
    let config = |spec: ConfigSpec| -> Result<Graph, Failure> {
        spec.validate().map_err(|e| fail(2, e.to_string()))?;
        let (g, _) = plant(&spec, args.background, args.p, args.seed)
            .map_err(|e| fail(2, e.to_string()))?;
        Ok(g)
    };
    match args.pattern.as_str() {
        name if make_named(name).is_some() => {
            int_params(args, 0)?;
            Ok(make_named(name).expect("name checked above"))
        }
        "gk" => {
            let p = int_params(args, 1)?;
            if p[0] < 1 {
                return Err(fail(2, "gk needs k >= 1"));
            }
            Ok(make_gk(p[0]))
        }
        "cycle" => {
            let p = int_params(args, 1)?;
            if p[0] < 3 {
                return Err(fail(2, "cycle needs n >= 3"));
            }
            Ok(cycle(p[0]))
        }
        "complete" => Ok(truemper::patterns::complete(int_params(args, 1)?[0])),
        "path" => Ok(path_graph(int_params(args, 1)?[0])),
        "chordal" => Ok(random_chordal(int_params(args, 1)?[0], args.seed)),
        "random" => {
            let p = int_params(args, 1)?;
            if !(0.0..=1.0).contains(&args.p) {
                return Err(fail(2, "--p must lie in [0, 1]"));
            }
            Ok(random_graph(p[0], args.p, args.seed))
        }
        "theta" => {
            let p = int_params(args, 3)?;
            config(ConfigSpec::Theta {
                lengths: [p[0], p[1], p[2]],
            })
        }
        "pyramid" => {
            let p = int_params(args, 3)?;
            config(ConfigSpec::Pyramid {
                lengths: [p[0], p[1], p[2]],
            })
        }
        "prism" => {
            let p = int_params(args, 3)?;
            config(ConfigSpec::Prism {
                lengths: [p[0], p[1], p[2]],
            })
        }
        "broken-wheel" => {
            if args.params.len() < 3 {
                return Err(fail(2, "broken-wheel takes at least 3 sector lengths"));
            }
            let sectors = args
                .params
                .iter()
                .map(|p| {
                    p.parse().map_err(|_| {
                        fail(2, format!("parameter {p:?} is not a non-negative integer"))
                    })
                })
                .collect::<Result<Vec<usize>, Failure>>()?;
            config(ConfigSpec::BrokenWheel { sectors })
        }
        other => Err(fail(2, format!("unknown pattern {other:?}"))),
    }
}

fn run_gen(args: GenArgs) -> Result<(), Failure> {
    let g = gen_graph(&args)?;
    let text = match args.format {
        OutFormatArg::Edgelist => render_graph(&g, Format::Edgelist),
        OutFormatArg::Graph6 => render_graph(&g, Format::Graph6),
    };
    match &args.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| fail(3, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn answers_for(g: &Graph) -> MethodAnswers {
    MethodAnswers {
        pipeline: detect_k23_induced_minor(g, ExecMode::Parallel).is_some(),
        model_search: find_k23_model(g).is_some(),
        separator_criterion: !k23_free_by_separators(g),
        exhaustive_config: find_config_exhaustive(g, ConfigKind::Any).is_some(),
    }
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask & (1 << bit) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

fn run_xcheck(args: XcheckArgs) -> Result<(), Failure> {
    let exhaustive = args.count == "exhaustive";
    let count: usize = if exhaustive {
        let pairs = args.n * args.n.saturating_sub(1) / 2;
        if pairs >= 40 {
            return Err(fail(
                4,
                format!("exhaustive sweep over n = {} means 2^{pairs} graphs", args.n),
            ));
        }
        if args.n > 7 && !args.force {
            return Err(fail(
                4,
                format!(
                    "exhaustive sweep over n = {} means 2^{pairs} graphs; \
                     pass --force to run anyway",
                    args.n
                ),
            ));
        }
        1usize << pairs
    } else {
        let c = args
            .count
            .parse()
            .map_err(|_| fail(2, format!("--count takes a number or \"exhaustive\", got {:?}", args.count)))?;
        if args.n > 14 && !args.force {
            return Err(fail(
                4,
                format!(
                    "oracles are limited to 14 vertices, got n = {}; \
                     pass --force to run anyway",
                    args.n
                ),
            ));
        }
        c
    };
    if !(0.0..=1.0).contains(&args.p) {
        return Err(fail(2, "--p must lie in [0, 1]"));
    }

    let start = Instant::now();
    let mut checked = 0usize;
    let mut agreements = 0usize;
    let mut counts = MethodCounts {
        pipeline: 0,
        model_search: 0,
        separator_criterion: 0,
        exhaustive_config: 0,
    };
    let mut counterexample = None;
    for i in 0..count {
        let g = if exhaustive {
            graph_from_mask(args.n, i as u64)
        } else {
            random_graph(args.n, args.p, args.seed.wrapping_add(i as u64))
        };
        let a = answers_for(&g);
        counts.pipeline += a.pipeline as usize;
        counts.model_search += a.model_search as usize;
        counts.separator_criterion += a.separator_criterion as usize;
        counts.exhaustive_config += a.exhaustive_config as usize;
        if a.unanimous() {
            agreements += 1;
        } else if counterexample.is_none() {
            counterexample = Some(Counterexample {
                edgelist: formats::render_edgelist(&g),
                answers: a,
            });
        }
        checked += 1;
    }
    let disagreements = checked - agreements;
    let report = XcheckReport {
        schema: "truemper/xcheck/1",
        n: args.n,
        count: args.count.clone(),
        p: (!exhaustive).then_some(args.p),
        seed: (!exhaustive).then_some(args.seed),
        checked,
        agreements,
        disagreements,
        positives_by_method: counts,
        counterexample,
        elapsed_ms: ms(start.elapsed()),
    };
    print_json(&report);
    if disagreements > 0 {
        return Err(fail(
            5,
            format!("{disagreements} of {checked} graphs drew disagreeing answers"),
        ));
    }
    Ok(())
}

fn run_bench(args: BenchArgs) -> Result<(), Failure> {
    if !(0.0..=1.0).contains(&args.p) {
        return Err(fail(2, "--p must lie in [0, 1]"));
    }
    let modes: &[(&'static str, ExecMode)] = match args.mode {
        BenchModeArg::Parallel => &[("parallel", ExecMode::Parallel)],
        BenchModeArg::Sequential => &[("sequential", ExecMode::Sequential)],
        BenchModeArg::Both => &[
            ("parallel", ExecMode::Parallel),
            ("sequential", ExecMode::Sequential),
        ],
    };
    let mut results = Vec::new();
    for &(name, mode) in modes {
        let mut runs_ms = Vec::with_capacity(args.reps);
        let mut positives = 0usize;
        for i in 0..args.reps {
            let g = random_graph(args.n, args.p, args.seed.wrapping_add(i as u64));
            let start = Instant::now();
            let found = detect_k23_induced_minor(&g, mode);
            runs_ms.push(ms(start.elapsed()));
            positives += found.is_some() as usize;
        }
        let mean_ms = if runs_ms.is_empty() {
            0.0
        } else {
            runs_ms.iter().sum::<f64>() / runs_ms.len() as f64
        };
        results.push(BenchRun {
            mode: name,
            runs_ms,
            mean_ms,
            positives,
        });
    }
    let report = BenchReport {
        schema: "truemper/bench/1",
        n: args.n,
        p: args.p,
        seed: args.seed,
        reps: args.reps,
        results,
    };
    print_json(&report);
    Ok(())
}
