// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Subcommand implementations. Each returns the text for standard output
//! or a [`Failure`] carrying the exit code.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, ValueEnum};
use serde::Serialize;
use strongedge_core::generators::random_edge_order;
use strongedge_core::greedy::GreedyError;
use strongedge_core::reduce::PALETTE;
use strongedge_core::structure::girth;
use strongedge_core::{
    exact_strong_index, find_coloring, greedy_color, solve21_with, verify_complete, Graph, KColoring,
    PartialColoring, SolveError, SolveOptions, Violation,
};

use crate::formats::{parse_coloring, parse_graph, write_coloring, write_edge_list, write_graph_json};
use crate::generate::GenSpec;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Ok = 0,
    /// The requested coloring does not exist or was not found.
    ColoringFailed = 1,
    /// Bad arguments, unreadable or malformed input.
    Usage = 2,
    /// A produced coloring failed verification.
    Internal = 3,
    /// The exact solver ran out of budget.
    Budget = 4,
}

#[derive(Debug)]
pub struct Failure {
    pub code: Exit,
    pub message: String,
    /// Partial report printed before the message, if any.
    pub stdout: String,
}

impl Failure {
    pub fn new(code: Exit, message: impl Into<String>) -> Self {
        Failure { code, message: message.into(), stdout: String::new() }
    }
}

type Outcome = Result<String, Failure>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(Exit::Usage, format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(Exit::Usage, format!("cannot write {}: {e}", path.display())))
}

pub fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::new(Exit::Usage, format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data");
    s.push('\n');
    s
}

fn check(g: &Graph, c: &PartialColoring) -> Result<(), Failure> {
    verify_complete(g, c).map_err(|v| Failure::new(Exit::Internal, format!("produced coloring is invalid: {v}")))
}

/// Writes the coloring to `output`, or returns it for standard output.
fn emit_coloring(c: &PartialColoring, output: Option<&Path>) -> Outcome {
    let mut text = write_coloring(c);
    text.push('\n');
    match output {
        Some(path) => write(path, &text).map(|()| String::new()),
        None => Ok(text),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// The recursive 21-coloring (maximum degree at most four).
    Reduce21,
    /// First-fit in edge-id order, or a seeded random order.
    Greedy,
    /// Exact search for a coloring with `k` colors.
    Exact,
}

#[derive(Debug, Clone, Args)]
pub struct ColorArgs {
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Algorithm::Reduce21)]
    pub alg: Algorithm,
    /// Palette size. Defaults to 21 (25 for greedy).
    #[arg(long)]
    pub k: Option<u8>,
    /// Shuffles the greedy edge order.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Node budget for exact search.
    #[arg(long, default_value_t = 20_000_000)]
    pub budget: u64,
    /// Coloring JSON destination (standard output if omitted).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Writes the step trace of `reduce21` here.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

pub fn color(args: &ColorArgs) -> Outcome {
    let g = load_graph(&args.graph)?;
    let coloring = match args.alg {
        Algorithm::Reduce21 => {
            let k = args.k.unwrap_or(PALETTE);
            if k < PALETTE {
                return Err(Failure::new(Exit::Usage, format!("reduce21 needs k >= {PALETTE}")));
            }
            let sol = solve21_with(&g, SolveOptions { exact_budget: args.budget }).map_err(|e| match e {
                SolveError::DegreeTooLarge(_) => Failure::new(Exit::Usage, e.to_string()),
                SolveError::ExactBudget { .. } => Failure::new(Exit::Budget, e.to_string()),
                _ => Failure::new(Exit::Internal, e.to_string()),
            })?;
            if let Some(path) = &args.trace {
                write(path, &sol.trace.to_string())?;
            }
            let fallbacks = sol.trace.fallback_count();
            if fallbacks > 0 {
                eprintln!("note: {fallbacks} fallback step(s) in the trace");
            }
            sol.coloring.with_palette(k)
        }
        Algorithm::Greedy => {
            let k = args.k.unwrap_or(25);
            let order = match args.seed {
                Some(seed) => random_edge_order(&g, seed),
                None => g.edge_ids().collect(),
            };
            match greedy_color(&g, k, &order) {
                Ok(c) => c,
                Err(GreedyError::Stuck { edge, .. }) => {
                    let [u, v] = g.endpoints(edge).expect("live edge");
                    return Err(Failure::new(
                        Exit::ColoringFailed,
                        format!("greedy failed: no color in 1..={k} left for edge {edge} ({u}-{v})"),
                    ));
                }
                Err(e) => return Err(Failure::new(Exit::Internal, e.to_string())),
            }
        }
        Algorithm::Exact => {
            let k = args.k.unwrap_or(PALETTE);
            match find_coloring(&g, k, args.budget) {
                KColoring::Found(c) => c,
                KColoring::Impossible => {
                    return Err(Failure::new(Exit::ColoringFailed, format!("no strong coloring with {k} colors")))
                }
                KColoring::BudgetExhausted => {
                    return Err(Failure::new(Exit::Budget, format!("budget of {} nodes exhausted", args.budget)))
                }
            }
        }
    };
    check(&g, &coloring)?;
    eprintln!("colors used: {} of {}", coloring.color_count(), coloring.palette_size());
    emit_coloring(&coloring, args.output.as_deref())
}

#[derive(Debug, Clone, Args)]
pub struct ExactArgs {
    pub graph: PathBuf,
    #[arg(long, default_value_t = 20_000_000)]
    pub budget: u64,
    /// Witness coloring destination.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Serialize)]
struct ExactReport {
    value: Option<usize>,
    lower: usize,
    upper: usize,
    exact: bool,
    nodes: u64,
}

pub fn exact(args: &ExactArgs, format: OutputFormat) -> Outcome {
    let g = load_graph(&args.graph)?;
    let out = exact_strong_index(&g, args.budget).map_err(|e| Failure::new(Exit::Usage, e.to_string()))?;
    check(&g, &out.witness)?;
    if let Some(path) = &args.output {
        let mut text = write_coloring(&out.witness);
        text.push('\n');
        write(path, &text)?;
    }
    let report = ExactReport { value: out.value(), lower: out.lower, upper: out.upper, exact: out.exact, nodes: out.nodes };
    let text = match format {
        OutputFormat::Json => json(&report),
        OutputFormat::Text if out.exact => format!("{}\n", out.upper),
        OutputFormat::Text => format!("bounds {} {}\n", out.lower, out.upper),
    };
    if out.exact {
        Ok(text)
    } else {
        Err(Failure {
            code: Exit::Budget,
            message: format!("budget exhausted after {} nodes; {} <= index <= {}", out.nodes, out.lower, out.upper),
            stdout: text,
        })
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub coloring: PathBuf,
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    let g = load_graph(&args.graph)?;
    let c = parse_coloring(&read(&args.coloring)?, &g)
        .map_err(|e| Failure::new(Exit::Usage, format!("{}: {e}", args.coloring.display())))?;
    match verify_complete(&g, &c) {
        Ok(()) => Ok(format!("valid: {} edges, {} colors\n", g.edge_count(), c.color_count())),
        Err(v @ Violation::Conflict { first, second, .. }) => {
            let [a, b] = g.endpoints(first).expect("live edge");
            let [x, y] = g.endpoints(second).expect("live edge");
            Err(Failure::new(Exit::ColoringFailed, format!("invalid: {v} ({a}-{b} and {x}-{y})")))
        }
        Err(v) => Err(Failure::new(Exit::ColoringFailed, format!("invalid: {v}"))),
    }
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub spec: GenSpec,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Writes graph JSON instead of an edge list.
    #[arg(long)]
    pub json: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn summary(g: &Graph) -> String {
    let regular = if g.min_degree() == g.max_degree() { format!("{}", g.max_degree()) } else { "no".into() };
    let girth = girth(g).map_or("none".to_string(), |x| x.to_string());
    format!("n={} m={} max_degree={} regular={regular} girth={girth}", g.vertex_count(), g.edge_count(), g.max_degree())
}

pub fn gen(args: &GenArgs) -> Outcome {
    let g = args.spec.build(args.seed).map_err(|e| Failure::new(Exit::Usage, e.to_string()))?;
    eprintln!("{}", summary(&g));
    let text = if args.json { write_graph_json(&g) + "\n" } else { write_edge_list(&g) };
    match &args.output {
        Some(path) => write(path, &text).map(|()| String::new()),
        None => Ok(text),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HuntSolver {
    Reduce21,
    Exact,
    Both,
}

#[derive(Debug, Clone, Args)]
pub struct HuntArgs {
    #[command(flatten)]
    pub spec: GenSpec,
    /// Half-open seed range `a..b`.
    #[arg(long, default_value = "0..10", value_parser = parse_range)]
    pub seeds: (u64, u64),
    #[arg(long, value_enum, default_value_t = HuntSolver::Reduce21)]
    pub solver: HuntSolver,
    #[arg(long, default_value_t = 5_000_000)]
    pub budget: u64,
    /// Writes each instance's coloring as `seed-<s>.json` here.
    #[arg(long)]
    pub artifacts: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a: u64 = a.parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b: u64 = b.parse().map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err("range start exceeds end".into());
    }
    Ok((a, b))
}

#[derive(Debug, Clone, Serialize)]
pub struct Instance {
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub colors: Option<usize>,
    pub fallbacks: Option<usize>,
    pub findings: Option<usize>,
    pub exact: Option<usize>,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    #[serde(skip)]
    coloring: Option<PartialColoring>,
    #[serde(skip)]
    error: Option<(Exit, String)>,
}

#[derive(Debug, Serialize)]
struct HuntSummary {
    instances: usize,
    max_colors: Option<usize>,
    fallbacks: usize,
    findings: usize,
    exact_solved: usize,
    exact_unsolved: usize,
    max_exact: Option<usize>,
    histogram: BTreeMap<usize, usize>,
}

#[derive(Serialize)]
struct HuntReport<'a> {
    instances: &'a [Instance],
    summary: HuntSummary,
}

fn run_instance(args: &HuntArgs, seed: u64) -> Instance {
    let mut out = Instance {
        seed,
        n: 0,
        m: 0,
        max_degree: 0,
        colors: None,
        fallbacks: None,
        findings: None,
        exact: None,
        lower: None,
        upper: None,
        coloring: None,
        error: None,
    };
    let g = match args.spec.build(seed) {
        Ok(g) => g,
        Err(e) => {
            out.error = Some((Exit::Usage, e.to_string()));
            return out;
        }
    };
    out.n = g.vertex_count();
    out.m = g.edge_count();
    out.max_degree = g.max_degree();
    if matches!(args.solver, HuntSolver::Reduce21 | HuntSolver::Both) {
        match solve21_with(&g, SolveOptions { exact_budget: args.budget }) {
            Ok(sol) => {
                if let Err(v) = verify_complete(&g, &sol.coloring) {
                    out.error = Some((Exit::Internal, format!("verification failed: {v}")));
                    return out;
                }
                out.colors = Some(sol.coloring.color_count());
                out.fallbacks = Some(sol.trace.fallback_count());
                out.findings = Some(sol.trace.findings().count());
                out.coloring = Some(sol.coloring);
            }
            Err(e @ SolveError::DegreeTooLarge(_)) => {
                out.error = Some((Exit::Usage, e.to_string()));
                return out;
            }
            Err(e) => {
                out.error = Some((Exit::Internal, e.to_string()));
                return out;
            }
        }
    }
    if matches!(args.solver, HuntSolver::Exact | HuntSolver::Both) {
        match exact_strong_index(&g, args.budget) {
            Ok(res) => {
                if let Err(v) = verify_complete(&g, &res.witness) {
                    out.error = Some((Exit::Internal, format!("exact witness failed verification: {v}")));
                    return out;
                }
                out.exact = res.value();
                out.lower = Some(res.lower);
                out.upper = Some(res.upper);
                if out.coloring.is_none() {
                    out.coloring = Some(res.witness);
                }
            }
            Err(e) => out.error = Some((Exit::Usage, e.to_string())),
        }
    }
    out
}

/// Worker count from `STRONGEDGE_THREADS`, else the available parallelism.
pub fn thread_count() -> usize {
    std::env::var("STRONGEDGE_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn hunt(args: &HuntArgs, format: OutputFormat) -> Outcome {
    let seeds: Vec<u64> = (args.seeds.0..args.seeds.1).collect();
    let slots: Vec<Mutex<Option<Instance>>> = seeds.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = thread_count().min(seeds.len()).max(1);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&seed) = seeds.get(i) else { break };
                let inst = run_instance(args, seed);
                *slots[i].lock().expect("no poisoning") = Some(inst);
            });
        }
    });
    let instances: Vec<Instance> =
        slots.into_iter().map(|s| s.into_inner().expect("no poisoning").expect("every seed ran")).collect();

    let mut report = String::new();
    if let Some(bad) = instances.iter().find(|i| i.error.is_some()) {
        let (code, msg) = bad.error.clone().expect("checked");
        return Err(Failure::new(code, format!("seed {}: {msg}", bad.seed)));
    }
    if let Some(dir) = &args.artifacts {
        fs::create_dir_all(dir)
            .map_err(|e| Failure::new(Exit::Usage, format!("cannot create {}: {e}", dir.display())))?;
        for inst in &instances {
            if let Some(c) = &inst.coloring {
                write(&dir.join(format!("seed-{}.json", inst.seed)), &(write_coloring(c) + "\n"))?;
            }
        }
    }
    let mut histogram = BTreeMap::new();
    for c in instances.iter().filter_map(|i| i.colors) {
        *histogram.entry(c).or_insert(0) += 1;
    }
    let summary = HuntSummary {
        instances: instances.len(),
        max_colors: instances.iter().filter_map(|i| i.colors).max(),
        fallbacks: instances.iter().filter_map(|i| i.fallbacks).sum(),
        findings: instances.iter().filter_map(|i| i.findings).sum(),
        exact_solved: instances.iter().filter(|i| i.exact.is_some()).count(),
        exact_unsolved: instances.iter().filter(|i| i.lower.is_some() && i.exact.is_none()).count(),
        max_exact: instances.iter().filter_map(|i| i.exact).max(),
        histogram,
    };
    match format {
        OutputFormat::Json => report = json(&HuntReport { instances: &instances, summary }),
        OutputFormat::Text => {
            let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
            let _ = writeln!(report, "seed n m maxdeg colors fallbacks findings exact bounds");
            for i in &instances {
                let bounds = match (i.lower, i.upper) {
                    (Some(l), Some(u)) => format!("{l}..{u}"),
                    _ => "-".into(),
                };
                let _ = writeln!(
                    report,
                    "{} {} {} {} {} {} {} {} {bounds}",
                    i.seed,
                    i.n,
                    i.m,
                    i.max_degree,
                    opt(i.colors),
                    opt(i.fallbacks),
                    opt(i.findings),
                    opt(i.exact)
                );
            }
            let s = &summary;
            let _ = writeln!(
                report,
                "instances={} max_colors={} fallbacks={} findings={} exact_solved={} exact_unsolved={} max_exact={}",
                s.instances,
                opt(s.max_colors),
                s.fallbacks,
                s.findings,
                s.exact_solved,
                s.exact_unsolved,
                opt(s.max_exact)
            );
            for (colors, count) in &s.histogram {
                let _ = writeln!(report, "{colors:>3} colors | {} {count}", "#".repeat(*count));
            }
        }
    }
    Ok(report)
}
