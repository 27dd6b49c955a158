use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Candidate, Problem};
use crate::oracles::{max_is_bipartite, maximal_is_greedy, solve_exact, OracleBudget, TieRule};
use crate::validate::validate;

/// Maximal independent sets peeled off one after another, and what is left.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Excavation {
    /// `sets[i]` is maximal independent in the graph left after removing
    /// `sets[..i]`; root vertex ids, sorted.
    pub sets: Vec<Vec<usize>>,
    /// Root ids of the residual vertices, sorted.
    pub remaining: Vec<usize>,
    pub residual: Graph,
}

impl Excavation {
    pub fn union(&self) -> Vec<usize> {
        let mut u: Vec<usize> = self.sets.iter().flatten().copied().collect();
        u.sort_unstable();
        u
    }
}

/// Removes `k` lowest-id greedy maximal independent sets. Once the graph is
/// exhausted the remaining sets are empty.
pub fn excavate(g: &Graph, k: usize) -> Excavation {
    let mut remaining: Vec<usize> = (0..g.n()).collect();
    let mut sets = Vec::with_capacity(k);
    for _ in 0..k {
        let h = g
            .induced_subgraph(&remaining)
            .expect("subset of the vertex set");
        let set: Vec<usize> = maximal_is_greedy(&h, TieRule::LowestId)
            .into_iter()
            .map(|i| remaining[i])
            .collect();
        remaining.retain(|v| set.binary_search(v).is_err());
        sets.push(set);
    }
    let residual = g
        .induced_subgraph(&remaining)
        .expect("subset of the vertex set");
    Excavation {
        sets,
        remaining,
        residual,
    }
}

/// [`excavate`] with `1 <= k < max_degree`; the residual then has maximum
/// degree at most `max_degree - k`, since every surviving vertex loses a
/// neighbor to each excavated set.
pub fn kstep_sparsify(g: &Graph, k: usize) -> Result<Excavation> {
    let d = g.max_degree();
    if k == 0 || k >= d {
        return Err(Error::OutOfRange(format!(
            "k = {k} must satisfy 1 <= k < {d}"
        )));
    }
    Ok(excavate(g, k))
}

/// A solver for the residual instances of the excavation algorithms.
///
/// Closures `Fn(Problem, &Graph) -> Result<Candidate>` qualify.
pub trait Subsolver {
    fn solve(&self, problem: Problem, g: &Graph) -> Result<Candidate>;
}

impl<F> Subsolver for F
where
    F: Fn(Problem, &Graph) -> Result<Candidate>,
{
    fn solve(&self, problem: Problem, g: &Graph) -> Result<Candidate> {
        self(problem, g)
    }
}

/// The exact oracle.
#[derive(Clone, Debug, Default)]
pub struct ExactSubsolver {
    pub budget: OracleBudget,
}

impl Subsolver for ExactSubsolver {
    fn solve(&self, problem: Problem, g: &Graph) -> Result<Candidate> {
        solve_exact(problem, &g.clone().into(), &self.budget)
    }
}

/// An exact optimum cut down to its `ceil(opt / ratio)` lowest vertices:
/// still feasible for the hereditary problems used here, and exactly a
/// `ratio`-approximation.
#[derive(Clone, Debug)]
pub struct DegradedSubsolver {
    pub ratio: f64,
    pub budget: OracleBudget,
}

impl Subsolver for DegradedSubsolver {
    fn solve(&self, problem: Problem, g: &Graph) -> Result<Candidate> {
        if !(self.ratio >= 1.0) {
            return Err(Error::OutOfRange(format!(
                "ratio {} must be at least 1",
                self.ratio
            )));
        }
        let best = solve_exact(problem, &g.clone().into(), &self.budget)?;
        let set = best.vertex_set().ok_or(Error::PayloadMismatch {
            problem,
            expected: "vertices",
        })?;
        let keep = (set.len() as f64 / self.ratio).ceil() as usize;
        Ok(Candidate::vertices(
            problem,
            set[..keep.min(set.len())].to_vec(),
        ))
    }
}

fn residual_solution(
    problem: Problem,
    excavation: &Excavation,
    subsolver: &dyn Subsolver,
) -> Result<Vec<usize>> {
    let c = subsolver.solve(problem, &excavation.residual)?;
    let verdict = validate(problem, &excavation.residual.clone().into(), &c)?;
    if !verdict.feasible {
        return Err(Error::InfeasibleCandidate(format!(
            "subsolver returned an infeasible {problem} solution: {}",
            verdict.reason.unwrap_or_default()
        )));
    }
    Ok(c.vertex_set()
        .expect("checked by validate")
        .iter()
        .map(|&i| excavation.remaining[i])
        .collect())
}

fn larger(problem: Problem, a: Vec<usize>, b: Vec<usize>) -> Candidate {
    Candidate::vertices(problem, if b.len() > a.len() { b } else { a })
}

/// Independent set from two excavations: the better of a maximum
/// independent set of the bipartite graph induced by `S1 + S2` and the
/// subsolver's answer on the rest.
pub fn approx_is_kstep(g: &Graph, subsolver: &dyn Subsolver) -> Result<Candidate> {
    let ex = excavate(g, 2);
    let union = ex.union();
    let bipartite = g.induced_subgraph(&union)?;
    let sb: Vec<usize> = max_is_bipartite(&bipartite)?
        .vertex_set()
        .expect("vertex payload")
        .iter()
        .map(|&i| union[i])
        .collect();
    let rest = residual_solution(Problem::Is, &ex, subsolver)?;
    Ok(larger(Problem::Is, sb, rest))
}

/// `colors`-colorable induced subgraph: the union of `colors` excavated sets
/// (colored by excavation round) against the subsolver on the rest.
pub fn approx_lcol_kstep(g: &Graph, colors: usize, subsolver: &dyn Subsolver) -> Result<Candidate> {
    if colors < 2 {
        return Err(Error::OutOfRange(format!(
            "need at least 2 colors, got {colors}"
        )));
    }
    let problem = Problem::Lcol(colors);
    let ex = excavate(g, colors);
    let rest = residual_solution(problem, &ex, subsolver)?;
    Ok(larger(problem, ex.union(), rest))
}

/// Planar induced subgraph: one excavated set (edgeless, hence planar)
/// against the subsolver on the rest.
pub fn approx_planar_kstep(g: &Graph, subsolver: &dyn Subsolver) -> Result<Candidate> {
    let ex = excavate(g, 1);
    let rest = residual_solution(Problem::Planar, &ex, subsolver)?;
    Ok(larger(Problem::Planar, ex.union(), rest))
}
