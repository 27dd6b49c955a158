//! The `sparselab` command line: sparsify, reduce, solve, analyze and
//! verify. [`run`] does the work and returns the process exit code so tests
//! can drive it without spawning a process.

pub mod campaign;
pub mod input;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use sparselab_core::analysis::{
    branching_root, comparison_tables, g_of_lambda, leaf_edge_bound, mu_lower_bound,
};
use sparselab_core::io::{format_instance, write_instance, Format};
use sparselab_core::oracles::solve_by_enumeration;
use sparselab_core::reductions::GadgetMap;
use sparselab_core::sparsify::{
    approx_is_kstep, approx_lcol_kstep, approx_planar_kstep, check_leaf, param_is_excavation,
    ExactSubsolver,
};
use sparselab_core::{
    solve_exact, superlinear_sparsify, validate, Error, Instance, Mode, OracleBudget, Problem,
    Reduction, ThresholdPolicy,
};

use crate::campaign::CampaignConfig;
use crate::input::{load_graph, load_instance};

/// Exit code when a checked invariant fails.
pub const EXIT_VIOLATION: u8 = 1;
/// Exit code for input, parse and usage errors.
pub const EXIT_ERROR: u8 = 2;
/// Exit code when an oracle runs out of nodes or time.
pub const EXIT_BUDGET: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sparselab",
    version,
    about = "Sparsifiers, reductions and exact oracles for small graph instances"
)]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Overrides the campaign seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Node cap for each oracle call.
    #[arg(long, global = true)]
    pub budget_nodes: Option<u64>,
    /// Time cap in seconds for each oracle call.
    #[arg(long, global = true)]
    pub timeout_sec: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Branch on high-degree vertices and list the bounded-degree leaves.
    Sparsify(SparsifyArgs),
    /// Map an instance through a reduction or a chain of reductions.
    Reduce(ReduceArgs),
    /// Solve an instance exactly (or with one of the structured algorithms).
    Solve(SolveArgs),
    /// Branching roots, g(lambda), mu bounds and the comparison tables.
    Analyze {
        #[command(subcommand)]
        what: Analyze,
    },
    /// Run a seeded verification campaign.
    Verify(VerifyArgs),
}

#[derive(Debug, clap::Args)]
pub struct SparsifyArgs {
    /// Graph file, or a named graph such as `star5` or `petersen`.
    #[arg(long = "in")]
    pub input: String,
    #[arg(long)]
    pub format: Option<Format>,
    #[arg(long, default_value = "is")]
    pub mode: Mode,
    /// `power:ETA`, `const:B` or `lambda:LAMBDA`.
    #[arg(long, default_value = "power:0.5")]
    pub policy: ThresholdPolicy,
    /// Write every leaf as one JSON line to this file.
    #[arg(long)]
    pub transcript: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct ReduceArgs {
    #[arg(long = "in")]
    pub input: String,
    #[arg(long)]
    pub format: Option<Format>,
    #[arg(long, requires = "to", conflicts_with = "chain")]
    pub from: Option<Problem>,
    #[arg(long, requires = "from")]
    pub to: Option<Problem>,
    /// Comma-separated `FROM:TO` links, e.g. `vc:ds,ds:setcover`.
    #[arg(long)]
    pub chain: Option<String>,
    /// Pendants per vertex for the MMVC gadget (default n + 1).
    #[arg(long)]
    pub t: Option<usize>,
    /// Where to write the target instance.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub out_format: Option<Format>,
    /// Where to write the gadget maps as JSON.
    #[arg(long)]
    pub map: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    /// The exact oracle.
    Exact,
    /// Plain subset enumeration (small universes only).
    Enumerate,
    /// Exact independent set by excavation; IS only.
    ParamExcavation,
    /// Two-excavation approximation; IS, lcol and planar.
    Kstep,
}

#[derive(Debug, clap::Args)]
pub struct SolveArgs {
    pub problem: Problem,
    pub input: String,
    #[arg(long)]
    pub format: Option<Format>,
    #[arg(long, value_enum, default_value = "exact")]
    pub algo: Algo,
}

#[derive(Debug, Subcommand)]
pub enum Analyze {
    /// Root of X^b - X^(b-1) - 1 above 1.
    Root {
        #[arg(long)]
        b: usize,
    },
    /// Smallest p whose branching root (1, p + 1) is below lambda.
    G {
        #[arg(long)]
        lambda: f64,
    },
    /// Infeasible ratio bound.
    Mu {
        #[arg(long)]
        lambda: f64,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
    },
    /// Both comparison tables.
    Tables,
    /// Leaf degree threshold and leaf-count bound of a policy.
    Bound {
        #[arg(long)]
        policy: ThresholdPolicy,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Campaign TOML; the default campaign when absent.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Print the default configuration and exit.
    #[arg(long)]
    pub print_default: bool,
}

impl Cli {
    fn budget(&self) -> OracleBudget {
        let mut b = OracleBudget::default();
        if let Some(n) = self.budget_nodes {
            b.max_nodes = n;
        }
        if let Some(t) = self.timeout_sec {
            b.timeout = Some(Duration::from_secs_f64(t));
        }
        b
    }
}

/// Worker count from `SPARSELAB_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("SPARSELAB_THREADS")
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    match &cli.command {
        Command::Sparsify(a) => sparsify(cli, a, out),
        Command::Reduce(a) => reduce(cli, a, out),
        Command::Solve(a) => solve(cli, a, out),
        Command::Analyze { what } => analyze(cli, what, out),
        Command::Verify(a) => verify(cli, a, out),
    }
}

#[derive(Debug, Serialize)]
struct SparsifySummary {
    mode: Mode,
    policy: String,
    n: usize,
    threshold: usize,
    leaves: usize,
    max_leaf_degree: usize,
    max_depth: usize,
    leaf_count_bound: f64,
    /// `floor(g / 2)` under the lambda policy.
    edges_per_vertex: Option<usize>,
    violations: Vec<String>,
    passed: bool,
}

fn sparsify(cli: &Cli, a: &SparsifyArgs, out: &mut dyn Write) -> Result<u8> {
    let g = load_graph(&a.input, a.format)?;
    let leaves = superlinear_sparsify(&g, a.mode, a.policy)?;
    let threshold = leaves.threshold();
    let bound = a.policy.leaf_count_bound(g.n())?;
    let lambda = match a.policy {
        ThresholdPolicy::OfLambda(l) => Some(l),
        _ => None,
    };
    let mut transcript = match &a.transcript {
        Some(p) => Some(std::io::BufWriter::new(
            fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => None,
    };
    let mut s = SparsifySummary {
        mode: a.mode,
        policy: a.policy.to_string(),
        n: g.n(),
        threshold,
        leaves: 0,
        max_leaf_degree: 0,
        max_depth: 0,
        leaf_count_bound: bound,
        edges_per_vertex: lambda.map(|l| g_of_lambda(l).map(|p| p / 2)).transpose()?,
        violations: Vec::new(),
        passed: true,
    };
    for leaf in leaves {
        s.leaves += 1;
        s.max_leaf_degree = s.max_leaf_degree.max(leaf.leaf.max_degree());
        s.max_depth = s.max_depth.max(leaf.depth);
        if let Some(v) = check_leaf(&g, &leaf, a.mode, threshold) {
            s.violations.push(format!("leaf {:?}: {v}", leaf.path));
        }
        if let Some(l) = lambda {
            let cap = leaf_edge_bound(leaf.leaf.n(), l)?;
            if leaf.leaf.m() > cap {
                s.violations.push(format!(
                    "leaf {:?}: {} edges > {cap}",
                    leaf.path,
                    leaf.leaf.m()
                ));
            }
        }
        if let Some(t) = transcript.as_mut() {
            serde_json::to_writer(&mut *t, &leaf)?;
            writeln!(t)?;
        }
    }
    if let Some(mut t) = transcript {
        t.flush()?;
    }
    if s.leaves as f64 > bound {
        s.violations
            .push(format!("{} leaves exceed the bound {bound}", s.leaves));
    }
    s.passed = s.violations.is_empty();
    if cli.json {
        writeln!(out, "{}", serde_json::to_string(&s)?)?;
    } else {
        writeln!(
            out,
            "mode {} policy {} n {} threshold {}",
            s.mode, s.policy, s.n, s.threshold
        )?;
        writeln!(out, "leaves {} (bound {})", s.leaves, s.leaf_count_bound)?;
        writeln!(out, "max leaf degree {}", s.max_leaf_degree)?;
        writeln!(out, "max depth {}", s.max_depth)?;
        if let Some(k) = s.edges_per_vertex {
            writeln!(out, "leaf edges at most {k} per vertex")?;
        }
        for v in &s.violations {
            writeln!(out, "violation: {v}")?;
        }
        writeln!(out, "{}", if s.passed { "PASS" } else { "FAIL" })?;
    }
    Ok(if s.passed { 0 } else { EXIT_VIOLATION })
}

/// One line describing an instance's size.
pub fn describe(instance: &Instance) -> String {
    match instance {
        Instance::Graph(g) if g.is_directed() => {
            format!("digraph with {} vertices and {} arcs", g.n(), g.m())
        }
        Instance::Graph(g) => format!("graph with {} vertices and {} edges", g.n(), g.m()),
        Instance::SetSystem(s) => format!("{} sets over {} elements", s.len(), s.ground()),
        Instance::Cnf(c) => format!(
            "{} variables and {} clauses",
            c.num_vars(),
            c.clauses().len()
        ),
    }
}

#[derive(Serialize)]
struct GadgetRecord<'a> {
    step: String,
    gadget: &'a GadgetMap,
}

fn reduce(cli: &Cli, a: &ReduceArgs, out: &mut dyn Write) -> Result<u8> {
    let reduction = match (&a.chain, a.from, a.to) {
        (Some(chain), None, None) => Reduction::parse_chain(chain, a.t)?,
        (None, Some(from), Some(to)) => Reduction::between(from, to, a.t)?,
        _ => bail!("give either --from and --to, or --chain"),
    };
    let instance = load_instance(&a.input, a.format)?;
    let reduced = reduction.forward(&instance)?;
    let gadgets: Vec<GadgetRecord> = reduced
        .stages
        .iter()
        .filter_map(|s| {
            s.gadget.as_ref().map(|gadget| GadgetRecord {
                step: s.step.name(),
                gadget,
            })
        })
        .collect();
    if let Some(p) = &a.out {
        let format = a
            .out_format
            .unwrap_or_else(|| Format::native(&reduced.instance));
        write_instance(&reduced.instance, p, format)?;
    }
    if let Some(p) = &a.map {
        fs::write(p, serde_json::to_string_pretty(&gadgets)? + "\n")
            .with_context(|| format!("writing {}", p.display()))?;
    }
    if cli.json {
        let report = json!({
            "reduction": reduction.name(),
            "source": reduction.source,
            "target": reduction.target,
            "transfer": reduction.transfer(),
            "size_bound": reduction.size_bound(),
            "summary": describe(&reduced.instance),
            "instance": reduced.instance,
            "gadgets": gadgets,
        });
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(out, "{reduction}")?;
        writeln!(out, "target: {}", describe(&reduced.instance))?;
        writeln!(out, "size bound: {}", reduction.size_bound())?;
        writeln!(
            out,
            "transfer: {}",
            serde_json::to_string(&reduction.transfer())?
        )?;
        if a.out.is_none() {
            write!(
                out,
                "{}",
                format_instance(&reduced.instance, Format::native(&reduced.instance))?
            )?;
        }
    }
    Ok(0)
}

fn solve(cli: &Cli, a: &SolveArgs, out: &mut dyn Write) -> Result<u8> {
    let instance = load_instance(&a.input, a.format)?;
    let budget = cli.budget();
    let problem = a.problem;
    let mut enumerated = None;
    let result = match a.algo {
        Algo::Exact => solve_exact(problem, &instance, &budget),
        Algo::Enumerate => solve_by_enumeration(problem, &instance),
        Algo::ParamExcavation | Algo::Kstep => {
            let g = instance
                .as_graph()
                .ok_or_else(|| anyhow!("{:?} needs a graph", a.algo))?;
            let sub = ExactSubsolver {
                budget: budget.clone(),
            };
            match (a.algo, problem) {
                (Algo::ParamExcavation, Problem::Is) => param_is_excavation(g).map(|o| {
                    enumerated = Some(o.enumerated);
                    o.candidate
                }),
                (Algo::Kstep, Problem::Is) => approx_is_kstep(g, &sub),
                (Algo::Kstep, Problem::Lcol(colors)) => approx_lcol_kstep(g, colors, &sub),
                (Algo::Kstep, Problem::Planar) => approx_planar_kstep(g, &sub),
                _ => bail!("--algo {:?} does not handle {problem}", a.algo),
            }
        }
    };
    let candidate = match result {
        Ok(c) => c,
        Err(Error::BudgetExceeded { nodes } | Error::Timeout { nodes }) => {
            let report = json!({
                "status": "budget_exceeded",
                "problem": problem,
                "nodes": nodes,
                "budget": budget,
            });
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
            return Ok(EXIT_BUDGET);
        }
        Err(e) => return Err(e.into()),
    };
    let verdict = validate(problem, &instance, &candidate)?;
    if cli.json {
        let mut v = serde_json::to_value(&candidate)?;
        v["feasible"] = json!(verdict.feasible);
        if let Some(k) = enumerated {
            v["enumerated"] = json!(k);
        }
        writeln!(out, "{}", serde_json::to_string(&v)?)?;
    } else {
        writeln!(out, "{}", serde_json::to_string(&candidate)?)?;
        writeln!(out, "value {}", candidate.value)?;
        if let Some(k) = enumerated {
            writeln!(out, "enumerated {k}")?;
        }
    }
    if !verdict.feasible {
        writeln!(out, "infeasible: {}", verdict.reason.unwrap_or_default())?;
        return Ok(EXIT_VIOLATION);
    }
    Ok(0)
}

fn analyze(cli: &Cli, what: &Analyze, out: &mut dyn Write) -> Result<u8> {
    match *what {
        Analyze::Root { b } => {
            let r = branching_root(b)?;
            if cli.json {
                let v = json!({ "b": b, "root": r.value(), "excess": r.excess(), "residual": r.residual() });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "root({b}) = {:.15}", r.value())?;
                writeln!(out, "residual {:e}", r.residual())?;
            }
        }
        Analyze::G { lambda } => {
            let p = g_of_lambda(lambda)?;
            if cli.json {
                writeln!(out, "{}", json!({ "lambda": lambda, "g": p }))?;
            } else {
                writeln!(out, "g({lambda}) = {p}")?;
            }
        }
        Analyze::Mu {
            lambda,
            alpha,
            beta,
        } => {
            let mu = mu_lower_bound(lambda, alpha, beta)?;
            if cli.json {
                writeln!(
                    out,
                    "{}",
                    json!({ "lambda": lambda, "alpha": alpha, "beta": beta, "mu": mu })
                )?;
            } else {
                writeln!(out, "mu = {mu:.6}")?;
            }
        }
        Analyze::Tables => {
            let t = comparison_tables();
            if cli.json {
                writeln!(out, "{}", serde_json::to_string(&t)?)?;
            } else {
                write!(out, "{t}")?;
            }
        }
        Analyze::Bound { policy, n } => {
            let threshold = policy.max_leaf_degree(n)?;
            let bound = policy.leaf_count_bound(n)?;
            if cli.json {
                let v = json!({ "policy": policy.to_string(), "n": n, "threshold": threshold, "leaf_count_bound": bound });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "threshold {threshold}")?;
                writeln!(out, "leaf count bound {bound}")?;
            }
        }
    }
    Ok(0)
}

fn verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> Result<u8> {
    if a.print_default {
        write!(out, "{}", CampaignConfig::default().to_toml())?;
        return Ok(0);
    }
    let mut config = match &a.config {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            CampaignConfig::from_toml(&text).with_context(|| format!("parsing {}", p.display()))?
        }
        None => CampaignConfig::default(),
    };
    if let Some(s) = cli.seed {
        config.seed = s;
    }
    if let Some(n) = cli.budget_nodes {
        config.budget.max_nodes = Some(n);
    }
    if let Some(t) = cli.timeout_sec {
        config.budget.timeout = Some(t);
    }
    let report = campaign::run(&config, threads_from_env())?;
    if cli.json {
        writeln!(out, "{}", serde_json::to_string(&report)?)?;
    } else {
        write!(out, "{report}")?;
    }
    Ok(if report.passed() { 0 } else { EXIT_VIOLATION })
}
