use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Candidate, CnfInstance, Literal, Problem, SetSystem};
use crate::oracles::{solve_exact, OracleBudget};
use crate::validate::exact_coloring;

/// One variable per vertex: the unit clause `x_v` for every vertex, then
/// `not x_u or not x_v` for every edge, `n + m` clauses in all.
pub fn is_to_max2sat(g: &Graph) -> Result<CnfInstance> {
    if g.is_directed() {
        return Err(Error::InvalidGraph("expected an undirected graph".into()));
    }
    let mut clauses: Vec<Vec<Literal>> = (0..g.n()).map(|v| vec![Literal::pos(v)]).collect();
    clauses.extend(
        g.edges()
            .map(|(u, v)| vec![Literal::neg(u), Literal::neg(v)]),
    );
    CnfInstance::new(g.n(), clauses)
}

/// Sets every violated edge clause right by making its lower endpoint false,
/// in edge order, then reads the true variables as an independent set. Each
/// repair loses at most one unit clause and gains the edge clause.
pub fn max2sat_backward(g: &Graph, assignment: &[bool]) -> Result<Candidate> {
    if assignment.len() != g.n() {
        return Err(Error::InfeasibleCandidate(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            g.n()
        )));
    }
    let mut a = assignment.to_vec();
    for (u, v) in g.edges() {
        if a[u] && a[v] {
            a[u] = false;
        }
    }
    Ok(Candidate::vertices(
        Problem::Is,
        (0..g.n()).filter(|&v| a[v]).collect(),
    ))
}

/// Set `v` lists the edges at `v`; elements are edge indices in
/// [`Graph::edges`] order. Isolated vertices get empty sets.
pub fn is_to_setpacking(g: &Graph) -> Result<SetSystem> {
    if g.is_directed() {
        return Err(Error::InvalidGraph("expected an undirected graph".into()));
    }
    let mut sets = vec![Vec::new(); g.n()];
    for (i, (u, v)) in g.edges().enumerate() {
        sets[u].push(i);
        sets[v].push(i);
    }
    SetSystem::new(g.m(), sets)
}

/// `alpha + (n - alpha)(r + 1)`: the minimum independent dominating set of
/// the gadget with `r + 1` pendants per vertex.
pub fn ids_pendant_value(g: &Graph, r: usize) -> Result<usize> {
    ids_pendant_value_with(g, r, &OracleBudget::default())
}

pub fn ids_pendant_value_with(g: &Graph, r: usize, budget: &OracleBudget) -> Result<usize> {
    if r == 0 {
        return Err(Error::OutOfRange("r must be at least 1".into()));
    }
    let alpha = solve_exact(Problem::Is, &g.clone().into(), budget)?.value;
    Ok(alpha + (g.n() - alpha) * (r + 1))
}

/// The graph itself: an independent set is a 1-colorable, hence
/// `colors`-colorable, induced subgraph.
pub fn is_to_lcol(g: &Graph, colors: usize) -> Result<Graph> {
    if colors == 0 {
        return Err(Error::MissingColors);
    }
    Ok(g.clone())
}

/// The graph itself.
pub fn is_to_planar(g: &Graph) -> Graph {
    g.clone()
}

fn largest_class(vertices: &[usize], color: &[usize]) -> Vec<usize> {
    let k = color.iter().max().map_or(0, |&c| c + 1);
    let mut classes = vec![Vec::new(); k];
    for (i, &c) in color.iter().enumerate() {
        classes[c].push(vertices[i]);
    }
    // max_by_key keeps the last maximum; scan in reverse so the lowest color wins
    classes
        .into_iter()
        .rev()
        .max_by_key(Vec::len)
        .unwrap_or_default()
}

fn sorted_set(g: &Graph, set: &[usize]) -> Result<Vec<usize>> {
    let mut vs = set.to_vec();
    vs.sort_unstable();
    vs.dedup();
    if let Some(&bad) = vs.iter().find(|&&v| v >= g.n()) {
        return Err(Error::UnknownVertex(bad));
    }
    Ok(vs)
}

/// Colors `G[set]` exactly with `colors` colors and returns the largest
/// class, which holds at least `|set| / colors` vertices.
pub fn lcol_backward(g: &Graph, set: &[usize], colors: usize) -> Result<Candidate> {
    let vs = sorted_set(g, set)?;
    let h = g.induced_subgraph(&vs)?;
    let color = exact_coloring(&h, colors).ok_or_else(|| {
        Error::InfeasibleCandidate(format!("induced subgraph is not {colors}-colorable"))
    })?;
    Ok(Candidate::vertices(Problem::Is, largest_class(&vs, &color)))
}

/// Colors used by [`planar_backward`] at most: planar graphs are
/// 5-degenerate.
pub const PLANAR_COLORS: usize = 6;

/// Greedy coloring along a smallest-last order (lowest id among ties).
/// Returns `None` if some vertex has more than `max_back` neighbors removed
/// after it, i.e. the graph is not `max_back`-degenerate.
pub fn degeneracy_coloring(g: &Graph, max_back: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v))?;
        if deg[v] > max_back {
            return None;
        }
        alive[v] = false;
        order.push(v);
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    let mut color = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let used: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| color[w])
            .filter(|&c| c != usize::MAX)
            .collect();
        color[v] = (0..)
            .find(|c| !used.contains(c))
            .expect("some color is free");
    }
    Some(color)
}

/// Colors `G[set]` greedily in degeneracy order with at most six colors and
/// returns the largest class, which holds at least `|set| / 6` vertices.
pub fn planar_backward(g: &Graph, set: &[usize]) -> Result<Candidate> {
    let vs = sorted_set(g, set)?;
    let h = g.induced_subgraph(&vs)?;
    let color = degeneracy_coloring(&h, PLANAR_COLORS - 1)
        .ok_or_else(|| Error::InfeasibleCandidate("induced subgraph is not 5-degenerate".into()))?;
    Ok(Candidate::vertices(Problem::Is, largest_class(&vs, &color)))
}
