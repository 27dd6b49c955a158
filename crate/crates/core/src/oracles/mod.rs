//! Exact desk-scale solvers.
//!
//! [`solve_exact`] is the primary route (branch-and-bound or dynamic
//! programming per problem); [`solve_by_enumeration`] is an independent
//! brute-force route over all payloads, used to cross-check the first on
//! small instances. Neither returns anything but a true optimum: when a
//! budget runs out the call fails.

mod bipartite;
mod cover;
pub(crate) mod degree2;
mod enumerate;
mod fas;
mod fvs;
mod greedy;
mod ids;
mod independent_set;
mod lcol;
mod planar;
mod sat;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use bipartite::{max_is_bipartite, maximum_bipartite_matching};
pub use degree2::max_is_degree2;
pub use enumerate::{solve_by_enumeration, ENUMERATION_LIMIT};
pub use greedy::{maximal_is_greedy, TieRule};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Candidate, Instance, Problem};

/// Resource caps for one oracle call.
///
/// `max_vertices` bounds the solvers whose work grows as `2^n` regardless of
/// the answer (the feedback-arc-set DP, max-sat enumeration, the colorable
/// and planar subgraph searches). The branch-and-bound solvers are bounded by
/// `max_nodes` and `timeout` only, since gadget instances are large but have
/// small optima.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_nodes: u64,
    #[serde(default, with = "opt_secs")]
    pub timeout: Option<Duration>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 22,
            max_nodes: 200_000_000,
            timeout: None,
        }
    }
}

mod opt_secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
        match d {
            Some(d) => s.serialize_some(&d.as_secs_f64()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Duration>, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.map(Duration::from_secs_f64))
    }
}

/// Node counter shared by the searches of one call.
pub(crate) struct Search {
    max_nodes: u64,
    deadline: Option<Instant>,
    pub(crate) nodes: u64,
}

impl Search {
    pub(crate) fn new(budget: &OracleBudget) -> Self {
        Search {
            max_nodes: budget.max_nodes,
            deadline: budget.timeout.map(|t| Instant::now() + t),
            nodes: 0,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        if self.nodes % 1024 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::Timeout { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn check_vertices(what: &'static str, n: usize, budget: &OracleBudget) -> Result<()> {
    if n > budget.max_vertices {
        return Err(Error::TooLarge {
            what,
            size: n,
            limit: budget.max_vertices,
        });
    }
    Ok(())
}

fn undirected<'a>(problem: Problem, instance: &'a Instance) -> Result<&'a Graph> {
    match instance {
        Instance::Graph(g) if !g.is_directed() => Ok(g),
        other => Err(Error::InstanceMismatch {
            problem,
            reason: format!("expects an undirected graph, got a {}", other.kind_name()),
        }),
    }
}

fn complement(n: usize, set: &[usize]) -> Vec<usize> {
    let member = crate::validate::membership(n, set);
    (0..n).filter(|&v| !member[v]).collect()
}

/// An optimal solution of `problem` on `instance`.
pub fn solve_exact(
    problem: Problem,
    instance: &Instance,
    budget: &OracleBudget,
) -> Result<Candidate> {
    let mut search = Search::new(budget);
    let search = &mut search;
    match problem {
        Problem::Is => {
            let g = undirected(problem, instance)?;
            Ok(Candidate::vertices(
                problem,
                independent_set::max_independent_set(g, search)?,
            ))
        }
        Problem::Vc => {
            let g = undirected(problem, instance)?;
            let is = independent_set::max_independent_set(g, search)?;
            Ok(Candidate::vertices(problem, complement(g.n(), &is)))
        }
        Problem::Ds => {
            let g = undirected(problem, instance)?;
            let closed: Vec<Vec<usize>> = (0..g.n())
                .map(|v| {
                    let mut s = g.neighbors(v).to_vec();
                    s.push(v);
                    s.sort_unstable();
                    s
                })
                .collect();
            Ok(Candidate::vertices(
                problem,
                cover::min_set_cover(g.n(), &closed, search)?,
            ))
        }
        Problem::Ids => {
            let g = undirected(problem, instance)?;
            Ok(Candidate::vertices(
                problem,
                ids::min_independent_dominating_set(g, search)?,
            ))
        }
        Problem::Mmvc => {
            let g = undirected(problem, instance)?;
            let ids = ids::min_independent_dominating_set(g, search)?;
            Ok(Candidate::vertices(problem, complement(g.n(), &ids)))
        }
        Problem::Fvs => {
            let g = undirected(problem, instance)?;
            Ok(Candidate::vertices(
                problem,
                fvs::min_feedback_vertex_set(g, search)?,
            ))
        }
        Problem::Fas => match instance {
            Instance::Graph(g) if g.is_directed() => Ok(Candidate::arcs(
                problem,
                fas::min_feedback_arc_set(g, budget, search)?,
            )),
            other => Err(Error::InstanceMismatch {
                problem,
                reason: format!("expects a directed graph, got a {}", other.kind_name()),
            }),
        },
        Problem::SetCover => {
            let s = set_system(problem, instance)?;
            Ok(Candidate::sets(
                problem,
                cover::min_set_cover(s.ground(), s.sets(), search)?,
            ))
        }
        Problem::HittingSet => {
            let s = set_system(problem, instance)?;
            let dual = s.dual();
            Ok(Candidate::elements(
                problem,
                cover::min_set_cover(dual.ground(), dual.sets(), search)?,
            ))
        }
        Problem::SetPacking => {
            let s = set_system(problem, instance)?;
            let conflicts = packing_conflict_graph(s);
            Ok(Candidate::sets(
                problem,
                independent_set::max_independent_set(&conflicts, search)?,
            ))
        }
        Problem::Max2Sat | Problem::Max3Sat => {
            let cnf = instance.as_cnf().ok_or_else(|| Error::InstanceMismatch {
                problem,
                reason: format!("expects a CNF formula, got a {}", instance.kind_name()),
            })?;
            let width = if problem == Problem::Max2Sat { 2 } else { 3 };
            if cnf.max_width() > width {
                return Err(Error::InstanceMismatch {
                    problem,
                    reason: format!("clause of width {} exceeds {width}", cnf.max_width()),
                });
            }
            let assignment = sat::max_sat(cnf, budget, search)?;
            Ok(Candidate::assignment(problem, cnf, assignment))
        }
        Problem::Lcol(l) => {
            let g = undirected(problem, instance)?;
            Ok(Candidate::vertices(
                problem,
                lcol::max_colorable_subgraph(g, l, budget, search)?,
            ))
        }
        Problem::Planar => {
            let g = undirected(problem, instance)?;
            Ok(Candidate::vertices(
                problem,
                planar::max_planar_subgraph(g, budget, search)?,
            ))
        }
    }
}

fn set_system(problem: Problem, instance: &Instance) -> Result<&crate::instance::SetSystem> {
    instance
        .as_set_system()
        .ok_or_else(|| Error::InstanceMismatch {
            problem,
            reason: format!("expects a set system, got a {}", instance.kind_name()),
        })
}

/// Sets are adjacent when they share an element; empty sets conflict with
/// nothing.
pub(crate) fn packing_conflict_graph(s: &crate::instance::SetSystem) -> Graph {
    let mut edges = Vec::new();
    for members in s.memberships() {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(s.len(), edges).expect("set indices are in range")
}
