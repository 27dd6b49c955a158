//! Feasibility checks for every problem, and the exact colorability search
//! the `lcol` check relies on.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Candidate, Instance, Payload, Problem};
use crate::planarity::is_planar;

/// Colors accepted by the exact colorability check inside [`validate`].
pub const MAX_CHECK_COLORS: usize = 4;
/// Vertices accepted by the exact colorability check inside [`validate`].
pub const MAX_CHECK_VERTICES: usize = 20;

/// Outcome of [`validate`]: feasibility plus the recomputed objective value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub feasible: bool,
    pub value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Verdict {
    fn ok(value: usize) -> Self {
        Verdict {
            feasible: true,
            value,
            reason: None,
        }
    }

    fn fail(value: usize, reason: impl Into<String>) -> Self {
        Verdict {
            feasible: false,
            value,
            reason: Some(reason.into()),
        }
    }
}

/// Checks `candidate` against the definition of `problem` on `instance`.
///
/// The verdict's value is recomputed from the payload; a candidate whose
/// declared value disagrees is reported infeasible.
pub fn validate(problem: Problem, instance: &Instance, candidate: &Candidate) -> Result<Verdict> {
    let kind = problem.payload_kind();
    if candidate.payload.kind() != kind {
        return Err(Error::PayloadMismatch {
            problem,
            expected: kind.name(),
        });
    }
    if candidate.problem != problem {
        return Err(Error::InstanceMismatch {
            problem,
            reason: format!("candidate is tagged {}", candidate.problem),
        });
    }
    let verdict = match (&candidate.payload, instance) {
        (Payload::Vertices(vs), Instance::Graph(g)) => check_vertices(problem, g, vs)?,
        (Payload::Arcs(arcs), Instance::Graph(g)) => check_arcs(g, arcs),
        (Payload::Sets(idx), Instance::SetSystem(s)) => {
            let n = s.len();
            match index_set_error(idx, n) {
                Some(r) => Verdict::fail(idx.len(), r),
                None => match problem {
                    Problem::SetCover => {
                        let mut covered = vec![false; s.ground()];
                        for &i in idx {
                            for &e in &s.sets()[i] {
                                covered[e] = true;
                            }
                        }
                        match covered.iter().position(|c| !c) {
                            Some(e) => Verdict::fail(idx.len(), format!("element {e} uncovered")),
                            None => Verdict::ok(idx.len()),
                        }
                    }
                    _ => {
                        let mut used = vec![false; s.ground()];
                        let mut clash = None;
                        'outer: for &i in idx {
                            for &e in &s.sets()[i] {
                                if used[e] {
                                    clash = Some(e);
                                    break 'outer;
                                }
                                used[e] = true;
                            }
                        }
                        match clash {
                            Some(e) => {
                                Verdict::fail(idx.len(), format!("element {e} packed twice"))
                            }
                            None => Verdict::ok(idx.len()),
                        }
                    }
                },
            }
        }
        (Payload::Elements(elems), Instance::SetSystem(s)) => {
            match index_set_error(elems, s.ground()) {
                Some(r) => Verdict::fail(elems.len(), r),
                None => {
                    let mut chosen = vec![false; s.ground()];
                    for &e in elems {
                        chosen[e] = true;
                    }
                    match s
                        .sets()
                        .iter()
                        .position(|set| !set.iter().any(|&e| chosen[e]))
                    {
                        Some(i) => Verdict::fail(elems.len(), format!("set {i} not hit")),
                        None => Verdict::ok(elems.len()),
                    }
                }
            }
        }
        (Payload::Assignment(a), Instance::Cnf(cnf)) => {
            let width = if problem == Problem::Max2Sat { 2 } else { 3 };
            if cnf.max_width() > width {
                return Err(Error::InstanceMismatch {
                    problem,
                    reason: format!("clause of width {} exceeds {width}", cnf.max_width()),
                });
            }
            if a.len() != cnf.num_vars() {
                Verdict::fail(
                    0,
                    format!(
                        "assignment has {} values for {} variables",
                        a.len(),
                        cnf.num_vars()
                    ),
                )
            } else {
                Verdict::ok(cnf.satisfied(a))
            }
        }
        (_, other) => {
            return Err(Error::InstanceMismatch {
                problem,
                reason: format!("not posed on a {}", other.kind_name()),
            })
        }
    };
    if verdict.feasible && verdict.value != candidate.value {
        return Ok(Verdict::fail(
            verdict.value,
            format!(
                "declared value {} but payload has value {}",
                candidate.value, verdict.value
            ),
        ));
    }
    Ok(verdict)
}

fn index_set_error(idx: &[usize], bound: usize) -> Option<String> {
    if let Some(&bad) = idx.iter().find(|&&i| i >= bound) {
        return Some(format!("index {bad} out of range"));
    }
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Some("payload must be strictly increasing".into());
    }
    None
}

fn check_vertices(problem: Problem, g: &Graph, vs: &[usize]) -> Result<Verdict> {
    if g.is_directed() {
        return Err(Error::InstanceMismatch {
            problem,
            reason: "graph is directed".into(),
        });
    }
    if let Some(r) = index_set_error(vs, g.n()) {
        return Ok(Verdict::fail(vs.len(), r));
    }
    let value = vs.len();
    let member = membership(g.n(), vs);
    let verdict = match problem {
        Problem::Is => match first_inner_edge(g, &member) {
            Some((u, v)) => Verdict::fail(value, format!("edge ({u},{v}) inside the set")),
            None => Verdict::ok(value),
        },
        Problem::Vc => match first_uncovered_edge(g, &member) {
            Some((u, v)) => Verdict::fail(value, format!("edge ({u},{v}) uncovered")),
            None => Verdict::ok(value),
        },
        Problem::Ds => match first_undominated(g, &member) {
            Some(v) => Verdict::fail(value, format!("vertex {v} undominated")),
            None => Verdict::ok(value),
        },
        Problem::Ids => {
            if let Some((u, v)) = first_inner_edge(g, &member) {
                Verdict::fail(value, format!("edge ({u},{v}) inside the set"))
            } else if let Some(v) = first_undominated(g, &member) {
                Verdict::fail(value, format!("vertex {v} undominated"))
            } else {
                Verdict::ok(value)
            }
        }
        Problem::Fvs => {
            let rest: Vec<usize> = (0..g.n()).filter(|&v| !member[v]).collect();
            if g.induced_subgraph(&rest)?.is_acyclic() {
                Verdict::ok(value)
            } else {
                Verdict::fail(value, "remaining graph has a cycle")
            }
        }
        Problem::Mmvc => {
            if let Some((u, v)) = first_uncovered_edge(g, &member) {
                Verdict::fail(value, format!("edge ({u},{v}) uncovered"))
            } else if let Some(&v) = vs
                .iter()
                .find(|&&v| g.neighbors(v).iter().all(|&w| member[w]))
            {
                Verdict::fail(value, format!("vertex {v} is redundant"))
            } else {
                Verdict::ok(value)
            }
        }
        Problem::Lcol(l) => {
            if l > MAX_CHECK_COLORS {
                return Err(Error::TooLarge {
                    what: "colorability check (colors)",
                    size: l,
                    limit: MAX_CHECK_COLORS,
                });
            }
            if vs.len() > MAX_CHECK_VERTICES {
                return Err(Error::TooLarge {
                    what: "colorability check (vertices)",
                    size: vs.len(),
                    limit: MAX_CHECK_VERTICES,
                });
            }
            if exact_coloring(&g.induced_subgraph(vs)?, l).is_some() {
                Verdict::ok(value)
            } else {
                Verdict::fail(value, format!("induced subgraph is not {l}-colorable"))
            }
        }
        Problem::Planar => {
            if is_planar(&g.induced_subgraph(vs)?) {
                Verdict::ok(value)
            } else {
                Verdict::fail(value, "induced subgraph is not planar")
            }
        }
        _ => {
            return Err(Error::PayloadMismatch {
                problem,
                expected: problem.payload_kind().name(),
            })
        }
    };
    Ok(verdict)
}

fn check_arcs(g: &Graph, arcs: &[(usize, usize)]) -> Verdict {
    if !g.is_directed() {
        return Verdict::fail(arcs.len(), "feedback arc sets live on directed graphs");
    }
    if arcs.windows(2).any(|w| w[0] >= w[1]) {
        return Verdict::fail(arcs.len(), "payload must be strictly increasing");
    }
    if let Some(&(u, v)) = arcs.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Verdict::fail(arcs.len(), format!("arc ({u},{v}) not in graph"));
    }
    let rest = g.edges().filter(|a| arcs.binary_search(a).is_err());
    let h = Graph::from_arcs(g.n(), rest).expect("subgraph of a valid graph");
    if h.is_acyclic() {
        Verdict::ok(arcs.len())
    } else {
        Verdict::fail(arcs.len(), "remaining digraph has a cycle")
    }
}

pub(crate) fn membership(n: usize, vs: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vs {
        m[v] = true;
    }
    m
}

fn first_inner_edge(g: &Graph, member: &[bool]) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| member[u] && member[v])
}

fn first_uncovered_edge(g: &Graph, member: &[bool]) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| !member[u] && !member[v])
}

fn first_undominated(g: &Graph, member: &[bool]) -> Option<usize> {
    (0..g.n()).find(|&v| !member[v] && !g.neighbors(v).iter().any(|&w| member[w]))
}

pub fn is_independent(g: &Graph, vs: &[usize]) -> bool {
    first_inner_edge(g, &membership(g.n(), vs)).is_none()
}

pub fn is_vertex_cover(g: &Graph, vs: &[usize]) -> bool {
    first_uncovered_edge(g, &membership(g.n(), vs)).is_none()
}

pub fn is_dominating(g: &Graph, vs: &[usize]) -> bool {
    first_undominated(g, &membership(g.n(), vs)).is_none()
}

/// A vertex cover from which no single vertex can be dropped.
pub fn is_minimal_vertex_cover(g: &Graph, vs: &[usize]) -> bool {
    let member = membership(g.n(), vs);
    first_uncovered_edge(g, &member).is_none()
        && vs
            .iter()
            .all(|&v| g.neighbors(v).iter().any(|&w| !member[w]))
}

/// An exact proper coloring with at most `colors` colors, found by
/// backtracking; `None` when none exists. Colors are `0..colors`; each new
/// color is introduced in order, so the first vertex always gets color 0.
pub fn exact_coloring(g: &Graph, colors: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if colors == 0 {
        return None;
    }
    // highest degree first; ties by id
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut color = vec![usize::MAX; n];

    fn go(
        g: &Graph,
        order: &[usize],
        pos: usize,
        used: usize,
        colors: usize,
        color: &mut [usize],
    ) -> bool {
        let Some(&v) = order.get(pos) else {
            return true;
        };
        let limit = (used + 1).min(colors);
        for c in 0..limit {
            if g.neighbors(v).iter().all(|&w| color[w] != c) {
                color[v] = c;
                if go(g, order, pos + 1, used.max(c + 1), colors, color) {
                    return true;
                }
            }
        }
        color[v] = usize::MAX;
        false
    }

    go(g, &order, 0, 0, colors, &mut color).then_some(color)
}
