//! Command-line front end: analyze groups, decide edge-list graphs, emit
//! certificates, and run the theorem verification sweeps.
//!
//! Exit codes: 0 for "divisor graph" / "all sweeps agree", 1 for a negative
//! verdict or a sweep disagreement, 2 for usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};

use coprime_divisor::analysis::{analyze_with_cap, AnalysisReport};
use coprime_divisor::classify::{verify_families, TheoremReport, VerifyOptions};
use coprime_divisor::graph::Graph;
use coprime_divisor::group::{GroupSpec, DEFAULT_ELEMENT_CAP};
use coprime_divisor::recognize::{
    brute_force_is_divisor, divisor_labeling_from_orientation, is_divisor_graph, Verdict,
};

/// Threads used by the verification sweeps (defaults to all cores).
const THREADS_ENV: &str = "COPRIME_DIVISOR_THREADS";

#[derive(Parser)]
#[command(
    name = "coprime-divisor",
    version,
    about = "Order-derived graphs of finite groups and divisor-graph recognition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a group: spectrum, radical graph, certified verdict
    Analyze(AnalyzeArgs),
    /// Decide or label an edge-list graph
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Sweep the classification theorems against the recognizer
    VerifyTheorems(VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Group spec, e.g. "S 7", "D 12", "DP (Z 4) (S 3)", "SPEC M23 : 2,3,..."
    spec: String,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
    /// Write the radical graph as DOT (oriented when certified)
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Enumeration ceiling for generated permutation groups
    #[arg(long, value_name = "K", default_value_t = DEFAULT_ELEMENT_CAP)]
    element_cap: usize,
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Decide whether the graph admits a divisor labeling
    IsDivisor(GraphArgs),
    /// Print a divisor labeling as JSON (fails on non-divisor graphs)
    Label(GraphArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Edge-list file: `u v` per edge, lone token per isolated vertex, `#` comments
    path: PathBuf,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
    /// Use the brute-force ordering search instead of the forcing recognizer
    #[arg(long)]
    oracle: bool,
    /// Write the graph as DOT (oriented when certified)
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run a single family (dihedral, dicyclic, symmetric, alternating,
    /// sporadic, three-prime, four-prime, nilpotent, direct-product,
    /// structure, order-derived, oracle)
    #[arg(long)]
    family: Option<String>,
    /// Override the swept parameter range upper bound
    #[arg(long, value_name = "K")]
    max_n: Option<u64>,
    /// Number of random graphs for the oracle sweep
    #[arg(long, value_name = "K")]
    cases: Option<usize>,
    /// Seed for the oracle sweep
    #[arg(long, value_name = "K")]
    seed: Option<u64>,
    /// Directory for the per-family JSON reports
    #[arg(long, value_name = "DIR", default_value = "reports")]
    out: PathBuf,
    /// Also print the reports as JSON on stdout
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Graph(GraphCommand::IsDivisor(args)) => cmd_graph_is_divisor(args),
        Command::Graph(GraphCommand::Label(args)) => cmd_graph_label(args),
        Command::VerifyTheorems(args) => cmd_verify_theorems(args),
    }
}

/// Writes to stdout, treating a closed pipe as silent success so piping
/// into `head` exits cleanly.
fn emit(text: &str) -> Result<()> {
    use std::io::{ErrorKind, Write};
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.into()),
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode> {
    let spec: GroupSpec = args.spec.parse().map_err(|e| anyhow!("{e}"))?;
    let started = Instant::now();
    let report = analyze_with_cap(&spec, args.element_cap).map_err(|e| anyhow!("{e}"))?;
    let elapsed = started.elapsed();
    revalidate(&report)?;
    if let Some(path) = &args.dot {
        fs::write(path, report.to_dot())
            .with_context(|| format!("writing DOT to {}", path.display()))?;
    }
    if args.json {
        emit(&format!("{}\n", serde_json::to_string_pretty(&report.to_json())?))?;
    } else {
        emit(&report.to_text())?;
        emit(&format!("elapsed:      {:.3} ms\n", elapsed.as_secs_f64() * 1e3))?;
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}

/// Certificates are re-checked before anything is printed; the tool never
/// emits an unverified claim.
fn revalidate(report: &AnalysisReport) -> Result<()> {
    use coprime_divisor::recognize::{validate_labeling, validate_orientation};
    if let Some(cert) = &report.verdict.certificate {
        let g = report.radical_graph.graph();
        if validate_orientation(g, &cert.orientation) != Ok(true)
            || validate_labeling(g, &cert.labeling) != Ok(true)
        {
            return Err(anyhow!("internal error: certificate failed re-validation"));
        }
    }
    Ok(())
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse_edge_list(&text).map_err(|e| anyhow!("{e}"))
}

fn graph_verdict(g: &Graph, oracle: bool) -> Result<Verdict> {
    if oracle {
        use coprime_divisor::recognize::{Method, Obstruction};
        let is_divisor = brute_force_is_divisor(g).map_err(|e| anyhow!("{e}"))?;
        if is_divisor {
            // the oracle only answers yes/no; certify through the forcing path
            let verdict = is_divisor_graph(g);
            if !verdict.is_divisor {
                return Err(anyhow!("internal error: oracle and recognizer disagree"));
            }
            Ok(Verdict { method: Method::BruteForce, ..verdict })
        } else {
            Ok(Verdict::negative(
                Method::BruteForce,
                Obstruction::ExhaustiveSearch { vertices: g.vertex_count() },
            ))
        }
    } else {
        Ok(is_divisor_graph(g))
    }
}

fn verdict_json(g: &Graph, verdict: &Verdict) -> serde_json::Value {
    serde_json::json!({
        "graph": { "vertices": g.vertex_count(), "edges": g.edge_count() },
        "verdict": {
            "is_divisor": verdict.is_divisor,
            "method": verdict.method.to_string(),
            "certificate": verdict.certificate.as_ref().map(|cert| serde_json::json!({
                "orientation": cert.orientation.to_json(),
                "labels": cert.labeling.to_json()["labels"].clone(),
            })),
            "obstruction": verdict.obstruction.as_ref().map(|o| {
                serde_json::to_value(o).expect("obstruction serializes")
            }),
        },
    })
}

fn revalidate_graph_certificate(g: &Graph, verdict: &Verdict) -> Result<()> {
    use coprime_divisor::recognize::{validate_labeling, validate_orientation};
    if let Some(cert) = &verdict.certificate {
        if validate_orientation(g, &cert.orientation) != Ok(true)
            || validate_labeling(g, &cert.labeling) != Ok(true)
        {
            return Err(anyhow!("internal error: certificate failed re-validation"));
        }
    }
    Ok(())
}

fn cmd_graph_is_divisor(args: GraphArgs) -> Result<ExitCode> {
    let g = load_graph(&args.path)?;
    let verdict = graph_verdict(&g, args.oracle)?;
    revalidate_graph_certificate(&g, &verdict)?;
    if let Some(path) = &args.dot {
        let dot = match &verdict.certificate {
            Some(cert) => g.to_dot_oriented("g", &cert.orientation, |_| None),
            None => g.to_dot("g", |_| None),
        };
        fs::write(path, dot).with_context(|| format!("writing DOT to {}", path.display()))?;
    }
    if args.json {
        emit(&format!("{}\n", serde_json::to_string_pretty(&verdict_json(&g, &verdict))?))?;
    } else {
        let mut text = format!(
            "{} ({} vertices, {} edges; method {})\n",
            if verdict.is_divisor { "divisor graph" } else { "NOT a divisor graph" },
            g.vertex_count(),
            g.edge_count(),
            verdict.method
        );
        if let Some(cert) = &verdict.certificate {
            let arrows: Vec<String> =
                cert.orientation.directed_edges().map(|(u, v)| format!("{u}->{v}")).collect();
            text.push_str(&format!("orientation: {}\n", arrows.join(" ")));
            let labels: Vec<String> =
                cert.labeling.labels().iter().map(|(v, n)| format!("{v}={n}")).collect();
            text.push_str(&format!("labels: {}\n", labels.join(" ")));
        }
        if let Some(obstruction) = &verdict.obstruction {
            text.push_str(&format!("witness: {obstruction}\n"));
        }
        emit(&text)?;
    }
    Ok(ExitCode::from(if verdict.is_divisor { 0 } else { 1 }))
}

fn cmd_graph_label(args: GraphArgs) -> Result<ExitCode> {
    let g = load_graph(&args.path)?;
    if args.oracle && !brute_force_is_divisor(&g).map_err(|e| anyhow!("{e}"))? {
        eprintln!("not a divisor graph: no ordering admits a transitive orientation");
        return Ok(ExitCode::from(1));
    }
    match coprime_divisor::recognize::find_transitive_orientation(&g) {
        Ok(orientation) => {
            let labeling =
                divisor_labeling_from_orientation(&g, &orientation).map_err(|e| anyhow!("{e}"))?;
            if coprime_divisor::recognize::validate_labeling(&g, &labeling) != Ok(true) {
                return Err(anyhow!("internal error: labeling failed re-validation"));
            }
            emit(&format!("{}\n", serde_json::to_string_pretty(&labeling.to_json())?))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(obstruction) => {
            eprintln!("not a divisor graph: {obstruction}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_verify_theorems(args: VerifyArgs) -> Result<ExitCode> {
    let mut options = VerifyOptions { family: args.family.clone(), ..VerifyOptions::default() };
    if let Some(max_n) = args.max_n {
        options.max_dihedral_n = max_n;
        options.max_dicyclic_t = max_n;
        options.max_degree = u32::try_from(max_n.min(64)).expect("bounded");
    }
    if let Some(cases) = args.cases {
        options.oracle_cases = cases;
    }
    if let Some(seed) = args.seed {
        options.seed = seed;
    }
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let threads: usize =
            raw.parse().with_context(|| format!("{THREADS_ENV} must be a number, got `{raw}`"))?;
        options.threads = Some(threads);
    }

    let reports = verify_families(&options).map_err(|e| anyhow!("{e}"))?;

    fs::create_dir_all(&args.out)
        .with_context(|| format!("creating report directory {}", args.out.display()))?;
    for report in &reports {
        let path = args.out.join(format!("{}.json", report.family));
        fs::write(&path, serde_json::to_string_pretty(&report.to_json())?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let summary_path = args.out.join("summary.json");
    let summary: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            serde_json::json!({
                "family": r.family,
                "cases": r.summary.cases,
                "agreements": r.summary.agreements,
                "all_agree": r.all_agree,
            })
        })
        .collect();
    fs::write(&summary_path, serde_json::to_string_pretty(&serde_json::Value::Array(summary))?)?;

    if args.json {
        let all: Vec<serde_json::Value> = reports.iter().map(TheoremReport::to_json).collect();
        emit(&format!("{}\n", serde_json::to_string_pretty(&serde_json::Value::Array(all))?))?;
    } else {
        emit(&summary_table(&reports))?;
        emit(&format!("reports written to {}\n", args.out.display()))?;
    }

    let all_agree = reports.iter().all(|r| r.all_agree);
    Ok(ExitCode::from(if all_agree { 0 } else { 1 }))
}

fn summary_table(reports: &[TheoremReport]) -> String {
    let mut out = format!("{:<16} {:>6} {:>6}  status\n", "family", "cases", "agree");
    for report in reports {
        out.push_str(&format!(
            "{:<16} {:>6} {:>6}  {}\n",
            report.family,
            report.summary.cases,
            report.summary.agreements,
            if report.all_agree { "OK" } else { "DISAGREE" }
        ));
        if !report.all_agree {
            for case in report.cases.iter().filter(|c| !c.agree) {
                out.push_str(&format!(
                    "    {}: predicate {} vs recognizer {}\n",
                    case.param, case.predicate, case.recognizer
                ));
            }
        }
    }
    out
}
