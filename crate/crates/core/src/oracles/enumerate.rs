use crate::error::{Error, Result};
use crate::instance::{Candidate, Instance, Problem};
use crate::validate::validate;

/// Largest payload universe (vertices, sets, elements, arcs or variables)
/// [`solve_by_enumeration`] accepts.
pub const ENUMERATION_LIMIT: usize = 20;

/// An optimum found by validating every payload over the instance's universe.
///
/// Shares nothing with [`super::solve_exact`] beyond the validator, which is
/// the point: it is the reference the search-based solvers are tested
/// against. Among optimal payloads the one with the smallest bit mask wins.
pub fn solve_by_enumeration(problem: Problem, instance: &Instance) -> Result<Candidate> {
    let universe = match (problem, instance) {
        (Problem::Fas, Instance::Graph(g)) => {
            let arcs: Vec<(usize, usize)> = g.edges().collect();
            return best_over(problem, instance, arcs.len(), |mask| {
                Candidate::arcs(problem, pick(&arcs, mask))
            });
        }
        (Problem::Max2Sat | Problem::Max3Sat, Instance::Cnf(cnf)) => {
            let nv = cnf.num_vars();
            return best_over(problem, instance, nv, |mask| {
                Candidate::assignment(problem, cnf, (0..nv).map(|v| mask >> v & 1 == 1).collect())
            });
        }
        (Problem::SetCover | Problem::SetPacking, Instance::SetSystem(s)) => s.len(),
        (Problem::HittingSet, Instance::SetSystem(s)) => s.ground(),
        (_, Instance::Graph(g)) => g.n(),
        (_, other) => {
            return Err(Error::InstanceMismatch {
                problem,
                reason: format!("not posed on a {}", other.kind_name()),
            })
        }
    };
    let all: Vec<usize> = (0..universe).collect();
    best_over(problem, instance, universe, |mask| {
        let chosen = pick(&all, mask);
        match problem {
            Problem::SetCover | Problem::SetPacking => Candidate::sets(problem, chosen),
            Problem::HittingSet => Candidate::elements(problem, chosen),
            _ => Candidate::vertices(problem, chosen),
        }
    })
}

fn pick<T: Copy>(items: &[T], mask: u64) -> Vec<T> {
    items
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &x)| x)
        .collect()
}

fn best_over(
    problem: Problem,
    instance: &Instance,
    universe: usize,
    make: impl Fn(u64) -> Candidate,
) -> Result<Candidate> {
    if universe > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "enumeration universe",
            size: universe,
            limit: ENUMERATION_LIMIT,
        });
    }
    let maximize = problem.is_maximization();
    let mut best: Option<Candidate> = None;
    for mask in 0..1u64 << universe {
        let c = make(mask);
        if let Some(b) = &best {
            let improves = if maximize {
                c.value > b.value
            } else {
                c.value < b.value
            };
            if !improves {
                continue;
            }
        }
        if validate(problem, instance, &c)?.feasible {
            best = Some(c);
        }
    }
    best.ok_or_else(|| Error::Infeasible(format!("no feasible {problem} payload")))
}
