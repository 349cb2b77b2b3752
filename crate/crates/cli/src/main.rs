use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use matchcut::graph::{contains_induced, distance_profile, find_dominating_set, girth};
use matchcut::oracle::{has_matching_cut_bruteforce, DEFAULT_BOUND};
use matchcut::redblue::{
    colouring_from_cut, cut_from_colouring, is_matching_cut, is_valid_colouring,
};
use matchcut::strategies::{
    find_dominating_structure_p6free, solve_with, sp3_p6, Answer, DominatingStructure,
    SolverConfig, StrategyChoice,
};
use matchcut::transforms::{generate, girth_blowup, k22_replace, Family, Transformed};
use matchcut::{
    Edge, Error, Graph, LabelledGraph, MatchingCut, PatternGraph, RedBlueColouring, Vertex,
};
use serde_json::{json, Map, Value};

/// Decide and certify matching cuts in connected graphs.
///
/// Every command prints a JSON report on standard output and a short summary
/// on standard error. Exit status: 0 when decided, 2 when no exact strategy
/// applies, 1 on errors and rejected certificates.
#[derive(Debug, Parser)]
#[command(name = "matchcut", version)]
struct Cli {
    /// Suppress the summary on standard error.
    #[arg(long, global = true)]
    quiet: bool,

    /// Add wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the graph has a matching cut.
    Solve {
        /// Edge-list file, or `-` for standard input.
        file: PathBuf,
        /// auto, degree-one, small-cut, radius-2, p6-free, sp3-p6:<s>,
        /// domination or oracle.
        #[arg(long, default_value = "auto", value_parser = parse_strategy)]
        strategy: StrategyChoice,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Decide by exhaustive enumeration.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        oracle_bound: usize,
    },
    /// Report distances, girth, hereditary classes and dominating structures.
    Analyze {
        file: PathBuf,
        /// Largest dominating set searched for.
        #[arg(long, default_value_t = 4)]
        domination_bound: usize,
    },
    /// Apply a matching-cut-preserving transformation.
    #[command(subcommand)]
    Transform(Transform),
    /// Build a graph from a named family, e.g. `cycle:6` or `hfree:P6,9`.
    Generate {
        family: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the graph as an edge list.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that the given edges form a matching cut.
    Verify {
        file: PathBuf,
        /// Comma-separated `u-v` pairs of vertex labels.
        #[arg(long)]
        cut: String,
    },
}

#[derive(Debug, Subcommand)]
enum Transform {
    /// Replace one edge by a K2,2 gadget.
    K22 {
        file: PathBuf,
        /// The edge, as `u-v` labels.
        #[arg(long)]
        edge: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Raise the girth until the graph has no induced copy of the pattern.
    Blowup {
        file: PathBuf,
        /// Pattern name such as `C5` or `C6`.
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Bounds {
    /// Largest graph handed to the brute-force oracle.
    #[arg(long)]
    oracle_bound: Option<usize>,
    /// Largest dominating set tried by the bounded-domination strategy.
    #[arg(long)]
    domination_bound: Option<usize>,
    /// Maximum number of branches one strategy may explore.
    #[arg(long)]
    branch_budget: Option<u64>,
}

impl Bounds {
    fn config(&self) -> SolverConfig {
        let d = SolverConfig::default();
        SolverConfig {
            oracle_bound: self.oracle_bound.unwrap_or(d.oracle_bound),
            domination_bound: self.domination_bound.unwrap_or(d.domination_bound),
            branch_budget: self.branch_budget.unwrap_or(d.branch_budget),
        }
    }
}

fn parse_strategy(s: &str) -> Result<StrategyChoice, String> {
    Ok(match s {
        "auto" => StrategyChoice::Auto,
        "degree-one" => StrategyChoice::DegreeOne,
        "small-cut" => StrategyChoice::SmallCut,
        "radius-2" => StrategyChoice::RadiusTwo,
        "p6-free" => StrategyChoice::P6Free,
        "domination" => StrategyChoice::Domination,
        "oracle" => StrategyChoice::Oracle,
        _ => match s.strip_prefix("sp3-p6:").map(str::parse) {
            Some(Ok(k)) => StrategyChoice::Sp3P6(k),
            _ => return Err(format!("unknown strategy `{s}`")),
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Decided = 0,
    Rejected = 1,
    Inapplicable = 2,
}

struct Outcome {
    status: Status,
    summary: String,
    report: Map<String, Value>,
}

impl Cli {
    fn name(&self) -> &'static str {
        match self.command {
            Command::Solve { .. } => "solve",
            Command::Oracle { .. } => "oracle",
            Command::Analyze { .. } => "analyze",
            Command::Transform(Transform::K22 { .. }) => "transform k22",
            Command::Transform(Transform::Blowup { .. }) => "transform blowup",
            Command::Generate { .. } => "generate",
            Command::Verify { .. } => "verify",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let start = Instant::now();
    let result = run(&cli);
    let mut report = Map::new();
    report.insert("schema".into(), json!(1));
    report.insert("command".into(), json!(cli.name()));
    let status = match result {
        Ok(out) => {
            report.extend(out.report);
            if !cli.quiet {
                eprintln!("{}", out.summary);
            }
            out.status
        }
        Err(e) => {
            report.insert("outcome".into(), json!("error"));
            report.insert("error".into(), json!(format!("{e:#}")));
            eprintln!("error: {e:#}");
            Status::Rejected
        }
    };
    if cli.timing {
        report.insert(
            "timing_ms".into(),
            json!(start.elapsed().as_secs_f64() * 1e3),
        );
    }
    let text = serde_json::to_string_pretty(&Value::Object(report)).unwrap();
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(status as u8)
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Solve {
            file,
            strategy,
            bounds,
        } => solve(file, *strategy, bounds.config()),
        Command::Oracle { file, oracle_bound } => oracle(file, *oracle_bound),
        Command::Analyze {
            file,
            domination_bound,
        } => analyze(file, *domination_bound),
        Command::Transform(Transform::K22 { file, edge, output }) => {
            k22(file, edge, output.as_deref())
        }
        Command::Transform(Transform::Blowup {
            file,
            pattern,
            output,
        }) => blowup(file, pattern, output.as_deref()),
        Command::Generate {
            family,
            seed,
            output,
        } => generate_family(family, *seed, output.as_deref()),
        Command::Verify { file, cut } => verify(file, cut),
    }
}

fn read_graph(path: &Path) -> Result<LabelledGraph> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    LabelledGraph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn labels(lg: &LabelledGraph, vs: &[Vertex]) -> Vec<u64> {
    vs.iter().map(|&v| lg.label(v)).collect()
}

fn edge_labels(lg: &LabelledGraph, e: Edge) -> [u64; 2] {
    [lg.label(e.u()), lg.label(e.v())]
}

fn parse_edge(lg: &LabelledGraph, text: &str) -> Result<Edge> {
    let (a, b) = text
        .trim()
        .split_once('-')
        .ok_or_else(|| anyhow!("`{text}` is not of the form u-v"))?;
    let label = |s: &str| -> Result<u64> {
        s.trim()
            .parse()
            .with_context(|| format!("`{s}` is not a vertex label"))
    };
    let (a, b) = (label(a)?, label(b)?);
    lg.edge_by_labels(a, b)
        .ok_or_else(|| anyhow!("{a}-{b} is not an edge of the graph"))
}

fn input_summary(lg: &LabelledGraph) -> Result<Value> {
    let g = &lg.graph;
    let profile = distance_profile(g)?;
    Ok(json!({
        "n": g.n(),
        "m": g.m(),
        "radius": profile.radius,
        "diameter": profile.diameter,
        "classes": {
            "has_degree_one": g.min_degree() == Some(1),
            "radius_at_most_2": profile.radius <= 2,
            "p6_free": contains_induced(g, &PatternGraph::path(6)).is_none(),
            "claw_free": contains_induced(g, &PatternGraph::claw()).is_none(),
        },
    }))
}

/// Re-verifies a colouring and renders it with its cut.
fn certificate(lg: &LabelledGraph, c: &RedBlueColouring) -> Result<(Value, MatchingCut)> {
    let g = &lg.graph;
    let cut = cut_from_colouring(g, c)?;
    if !is_valid_colouring(g, c) || !is_matching_cut(g, cut.edges()) {
        bail!("certificate failed re-verification");
    }
    let value = json!({
        "red": labels(lg, &c.red()),
        "blue": labels(lg, &c.blue()),
        "cut": cut.edges().iter().map(|&e| edge_labels(lg, e)).collect::<Vec<_>>(),
    });
    Ok((value, cut))
}

fn edges_text(cut: &MatchingCut, lg: &LabelledGraph) -> String {
    cut.edges()
        .iter()
        .map(|&e| {
            let [a, b] = edge_labels(lg, e);
            format!("{a}-{b}")
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn solve(file: &Path, strategy: StrategyChoice, config: SolverConfig) -> Result<Outcome> {
    let lg = read_graph(file)?;
    let input = input_summary(&lg)?;
    let out = solve_with(&lg.graph, strategy, &config)?;
    let mut report = Map::new();
    report.insert("input".into(), input);
    report.insert("config".into(), serde_json::to_value(config)?);
    report.insert("strategy".into(), json!(out.strategy));
    report.insert("trace".into(), serde_json::to_value(out.trace)?);
    let (status, summary) = match &out.answer {
        Answer::Yes { colouring, .. } => {
            let (cert, cut) = certificate(&lg, colouring)?;
            report.insert("outcome".into(), json!("yes"));
            report.insert("certificate".into(), cert);
            let summary = format!(
                "yes: matching cut of size {} found by {}: {}",
                cut.len(),
                out.strategy,
                edges_text(&cut, &lg)
            );
            (Status::Decided, summary)
        }
        Answer::No => {
            report.insert("outcome".into(), json!("no"));
            (
                Status::Decided,
                format!("no matching cut ({})", out.strategy),
            )
        }
        Answer::Inapplicable(reason) => {
            report.insert("outcome".into(), json!("inapplicable"));
            report.insert("reason".into(), json!(reason));
            (Status::Inapplicable, format!("undecided: {reason}"))
        }
    };
    Ok(Outcome {
        status,
        summary,
        report,
    })
}

fn oracle(file: &Path, bound: usize) -> Result<Outcome> {
    let lg = read_graph(file)?;
    let g = &lg.graph;
    let mut report = Map::new();
    report.insert("input".into(), input_summary(&lg)?);
    report.insert("strategy".into(), json!("oracle"));
    match has_matching_cut_bruteforce(g, bound) {
        Ok(Some(cut)) => {
            let colouring = colouring_from_cut(g, &cut)?;
            let (cert, cut) = certificate(&lg, &colouring)?;
            report.insert("outcome".into(), json!("yes"));
            report.insert("certificate".into(), cert);
            let summary = format!(
                "yes: matching cut of size {}: {}",
                cut.len(),
                edges_text(&cut, &lg)
            );
            Ok(Outcome {
                status: Status::Decided,
                summary,
                report,
            })
        }
        Ok(None) => {
            report.insert("outcome".into(), json!("no"));
            Ok(Outcome {
                status: Status::Decided,
                summary: "no matching cut".into(),
                report,
            })
        }
        Err(e @ Error::OracleBound { .. }) => {
            report.insert("outcome".into(), json!("inapplicable"));
            report.insert("reason".into(), json!(e.to_string()));
            Ok(Outcome {
                status: Status::Inapplicable,
                summary: format!("undecided: {e}"),
                report,
            })
        }
        Err(e) => Err(e.into()),
    }
}

fn structure_json(lg: &LabelledGraph, s: &DominatingStructure) -> Value {
    match s {
        DominatingStructure::InducedC6 { cycle } => {
            json!({ "kind": "induced_c6", "cycle": labels(lg, cycle) })
        }
        DominatingStructure::Biclique { a, b } => {
            json!({ "kind": "biclique", "a": labels(lg, a), "b": labels(lg, b) })
        }
    }
}

fn analyze(file: &Path, domination_bound: usize) -> Result<Outcome> {
    let lg = read_graph(file)?;
    let g = &lg.graph;
    let mut input = input_summary(&lg)?;
    input["classes"]["p3_p6_free"] = json!(contains_induced(g, &sp3_p6(1)).is_none());
    let profile = distance_profile(g)?;
    let dominating = find_dominating_set(g, domination_bound);
    let structure = if input["classes"]["p6_free"] == json!(true) {
        let config = SolverConfig {
            domination_bound,
            ..SolverConfig::default()
        };
        Some(structure_json(
            &lg,
            &find_dominating_structure_p6free(g, &config)?,
        ))
    } else {
        None
    };
    let summary = format!(
        "n={} m={} radius={} diameter={} girth={}",
        g.n(),
        g.m(),
        profile.radius,
        profile.diameter,
        girth(g).map_or("none".into(), |k| k.to_string())
    );
    let mut report = Map::new();
    report.insert("input".into(), input);
    report.insert("girth".into(), json!(girth(g)));
    report.insert("center".into(), json!(labels(&lg, &profile.center)));
    report.insert(
        "dominating_set".into(),
        json!(dominating.map(|d| labels(&lg, &d))),
    );
    report.insert("dominating_structure".into(), json!(structure));
    Ok(Outcome {
        status: Status::Decided,
        summary,
        report,
    })
}

/// Labels for a transformed graph: old vertices keep theirs, new vertex
/// `n + i` gets `max + 1 + i`.
fn extend_labels(lg: &LabelledGraph, graph: Graph) -> LabelledGraph {
    let next = lg.labels.iter().max().map_or(0, |&l| l + 1);
    let mut labels = lg.labels.clone();
    labels.extend((0..(graph.n() - lg.graph.n()) as u64).map(|i| next + i));
    LabelledGraph { graph, labels }
}

fn graph_report(
    out: &LabelledGraph,
    output: Option<&Path>,
    header: &str,
) -> Result<Map<String, Value>> {
    if let Some(path) = output {
        std::fs::write(path, out.to_edge_list_text(header))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let mut report = Map::new();
    report.insert("n".into(), json!(out.graph.n()));
    report.insert("m".into(), json!(out.graph.m()));
    report.insert(
        "edges".into(),
        json!(out
            .graph
            .edges()
            .map(|e| edge_labels(out, e))
            .collect::<Vec<_>>()),
    );
    Ok(report)
}

fn provenance_json(old: &LabelledGraph, new: &LabelledGraph, t: &Transformed) -> Value {
    json!(t
        .provenance
        .iter()
        .map(
            |&(e, origin)| json!({ "edge": edge_labels(new, e), "from": edge_labels(old, origin) })
        )
        .collect::<Vec<_>>())
}

fn k22(file: &Path, edge: &str, output: Option<&Path>) -> Result<Outcome> {
    let lg = read_graph(file)?;
    let e = parse_edge(&lg, edge)?;
    let t = k22_replace(&lg.graph, e)?;
    let out = extend_labels(&lg, t.graph.clone());
    let [a, b] = edge_labels(&lg, e);
    let [w1, w2] = [out.label(lg.graph.n()), out.label(lg.graph.n() + 1)];
    let mut report = graph_report(&out, output, &format!("K2,2-replacement of edge {a}-{b}"))?;
    report.insert("replaced".into(), json!([a, b]));
    report.insert("new_vertices".into(), json!([w1, w2]));
    report.insert("provenance".into(), provenance_json(&lg, &out, &t));
    let summary = format!("replaced {a}-{b}: n={} m={}", out.graph.n(), out.graph.m());
    Ok(Outcome {
        status: Status::Decided,
        summary,
        report,
    })
}

fn blowup(file: &Path, pattern: &str, output: Option<&Path>) -> Result<Outcome> {
    let lg = read_graph(file)?;
    let h = PatternGraph::parse(pattern)?;
    let b = girth_blowup(&lg.graph, &h)?;
    let out = extend_labels(&lg, b.transformed.graph.clone());
    let mut report = graph_report(
        &out,
        output,
        &format!("{}-free girth blow-up, {} rounds", h.name, b.rounds),
    )?;
    report.insert("pattern".into(), json!(h.name));
    report.insert("rounds".into(), json!(b.rounds));
    report.insert("girth".into(), json!(girth(&out.graph)));
    report.insert(
        "provenance".into(),
        provenance_json(&lg, &out, &b.transformed),
    );
    let summary = format!(
        "{} rounds: n={} m={}, no induced {}",
        b.rounds,
        out.graph.n(),
        out.graph.m(),
        h.name
    );
    Ok(Outcome {
        status: Status::Decided,
        summary,
        report,
    })
}

fn generate_family(family: &str, seed: u64, output: Option<&Path>) -> Result<Outcome> {
    let f: Family = family.parse()?;
    let out = LabelledGraph::unlabelled(generate(&f, seed)?);
    let mut report = graph_report(&out, output, &format!("{family}, seed {seed}"))?;
    report.insert("family".into(), json!(family));
    report.insert("seed".into(), json!(seed));
    let summary = format!(
        "{family} (seed {seed}): n={} m={}",
        out.graph.n(),
        out.graph.m()
    );
    Ok(Outcome {
        status: Status::Decided,
        summary,
        report,
    })
}

fn verify(file: &Path, cut: &str) -> Result<Outcome> {
    let lg = read_graph(file)?;
    let g = &lg.graph;
    let edges = cut
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_edge(&lg, s))
        .collect::<Result<Vec<_>>>()?;
    let claimed = json!(edges
        .iter()
        .map(|&e| edge_labels(&lg, e))
        .collect::<Vec<_>>());
    let mut report = Map::new();
    report.insert("cut".into(), claimed);
    if is_matching_cut(g, &edges) {
        let colouring = colouring_from_cut(g, &MatchingCut::new(edges))?;
        let (cert, _) = certificate(&lg, &colouring)?;
        report.insert("outcome".into(), json!("valid"));
        report.insert("certificate".into(), cert);
        Ok(Outcome {
            status: Status::Decided,
            summary: "valid matching cut".into(),
            report,
        })
    } else {
        report.insert("outcome".into(), json!("invalid"));
        Ok(Outcome {
            status: Status::Rejected,
            summary: "not a matching cut".into(),
            report,
        })
    }
}
