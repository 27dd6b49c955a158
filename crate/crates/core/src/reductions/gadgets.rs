use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Candidate, Problem, SetSystem};

/// What generated a gadget vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// One of the dummies of source edge `(u, v)`, `u < v`.
    Edge(usize, usize),
    /// A pendant or copy attached to source vertex `v`.
    Vertex(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dummy {
    pub id: usize,
    pub origin: Origin,
}

/// Correspondence between a source graph and a gadget built from it.
///
/// Source vertex `v` is gadget vertex `v` for `v < originals`; every gadget
/// vertex from `originals` on is a dummy, listed in id order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetMap {
    pub originals: usize,
    pub dummies: Vec<Dummy>,
}

impl GadgetMap {
    fn new(originals: usize) -> Self {
        GadgetMap {
            originals,
            dummies: Vec::new(),
        }
    }

    fn add(&mut self, origin: Origin) -> usize {
        let id = self.originals + self.dummies.len();
        self.dummies.push(Dummy { id, origin });
        id
    }

    pub fn vertex_count(&self) -> usize {
        self.originals + self.dummies.len()
    }

    pub fn is_dummy(&self, v: usize) -> bool {
        v >= self.originals
    }

    pub fn origin(&self, v: usize) -> Option<Origin> {
        v.checked_sub(self.originals)
            .and_then(|i| self.dummies.get(i))
            .map(|d| d.origin)
    }

    /// Dummies generated by source vertex `v`, in id order.
    pub fn attached(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.dummies
            .iter()
            .filter(move |d| d.origin == Origin::Vertex(v))
            .map(|d| d.id)
    }
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    if g.is_directed() {
        return Err(Error::InvalidGraph("expected an undirected graph".into()));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::InvalidGraph(format!("vertex {v} is isolated")));
    }
    Ok(())
}

fn require_undirected(g: &Graph) -> Result<()> {
    if g.is_directed() {
        return Err(Error::InvalidGraph("expected an undirected graph".into()));
    }
    Ok(())
}

/// Two dummies `y_e`, `z_e` per edge `e = (u, v)`, each joined to `u` and `v`,
/// in edge order; `keep_edges` decides whether the source edges survive.
fn edge_dummies(g: &Graph, keep_edges: bool) -> Result<(Graph, GadgetMap)> {
    require_no_isolated(g)?;
    let mut map = GadgetMap::new(g.n());
    let mut edges = Vec::with_capacity(5 * g.m());
    for (u, v) in g.edges() {
        if keep_edges {
            edges.push((u, v));
        }
        for _ in 0..2 {
            let d = map.add(Origin::Edge(u, v));
            edges.push((u, d));
            edges.push((v, d));
        }
    }
    Ok((Graph::from_edges(map.vertex_count(), edges)?, map))
}

/// Vertex cover to dominating set: `n + 2m` vertices.
pub fn vc_to_ds(g: &Graph) -> Result<(Graph, GadgetMap)> {
    edge_dummies(g, true)
}

/// Vertex cover to feedback vertex set: the same gadget as [`vc_to_ds`];
/// each source edge closes triangles with both of its dummies.
pub fn vc_to_fvs(g: &Graph) -> Result<(Graph, GadgetMap)> {
    edge_dummies(g, true)
}

/// Vertex cover to independent dominating set: the [`vc_to_ds`] gadget with
/// the source edges removed, so the original vertices form an independent
/// copy.
pub fn vc_to_ids(g: &Graph) -> Result<(Graph, GadgetMap)> {
    edge_dummies(g, false)
}

/// Replaces every dummy of edge `(u, v)` by `u` and keeps original vertices:
/// the backward map shared by the three edge-dummy gadgets.
pub fn dummy_swap_backward(map: &GadgetMap, gadget_set: &[usize]) -> Result<Candidate> {
    let mut out = Vec::with_capacity(gadget_set.len());
    for &v in gadget_set {
        match map.origin(v) {
            None if v < map.originals => out.push(v),
            Some(Origin::Edge(u, _)) => out.push(u),
            _ => return Err(Error::UnknownVertex(v)),
        }
    }
    Ok(Candidate::vertices(Problem::Vc, out))
}

/// Closed neighborhoods as sets over the vertices.
pub fn ds_to_setcover(g: &Graph) -> Result<SetSystem> {
    require_undirected(g)?;
    let sets = (0..g.n())
        .map(|v| {
            let mut s = g.neighbors(v).to_vec();
            s.push(v);
            s
        })
        .collect();
    SetSystem::new(g.n(), sets)
}

/// Sets and elements trade places; the map is its own inverse.
pub fn setcover_to_hittingset(s: &SetSystem) -> SetSystem {
    s.dual()
}

/// Vertex cover to feedback arc set on `V x {0, 1}`: vertex `(v, 0)` is `v`,
/// `(v, 1)` is `n + v`. Arcs `(v,0) -> (v,1)` for every vertex, and
/// `(u,1) -> (v,0)` for both orientations of every edge.
pub fn vc_to_fas(g: &Graph) -> Result<(Graph, GadgetMap)> {
    require_undirected(g)?;
    let n = g.n();
    let mut map = GadgetMap::new(n);
    let mut arcs = Vec::with_capacity(n + 2 * g.m());
    for v in 0..n {
        let top = map.add(Origin::Vertex(v));
        arcs.push((v, top));
    }
    for (u, v) in g.edges() {
        arcs.push((n + u, v));
        arcs.push((n + v, u));
    }
    Ok((Graph::from_arcs(2 * n, arcs)?, map))
}

/// Normalizes a feedback arc set of the [`vc_to_fas`] digraph: an arc
/// `(u,1) -> (v,0)` is traded for `(v,0) -> (v,1)`, the only arc leaving
/// `(v,0)`. The vertices whose own arc is cut form a vertex cover.
pub fn fas_backward(map: &GadgetMap, arcs: &[(usize, usize)]) -> Result<Candidate> {
    let n = map.originals;
    let mut out = Vec::with_capacity(arcs.len());
    for &(a, b) in arcs {
        if a < n && b == n + a {
            out.push(a);
        } else if a >= n && a < 2 * n && b < n {
            out.push(b);
        } else {
            return Err(Error::InfeasibleCandidate(format!(
                "arc ({a},{b}) is not in the gadget"
            )));
        }
    }
    Ok(Candidate::vertices(Problem::Vc, out))
}

/// `t` pendants on every vertex; pendant `j` of `v` is `n + v t + j`.
pub fn is_to_mmvc(g: &Graph, t: usize) -> Result<(Graph, GadgetMap)> {
    require_undirected(g)?;
    if t < 2 {
        return Err(Error::OutOfRange(format!(
            "pendant count t = {t} must be at least 2"
        )));
    }
    let mut map = GadgetMap::new(g.n());
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for v in 0..g.n() {
        for _ in 0..t {
            let p = map.add(Origin::Vertex(v));
            edges.push((v, p));
        }
    }
    Ok((Graph::from_edges(map.vertex_count(), edges)?, map))
}

/// The minimal vertex cover `(V - S) + pendants(S)` of the pendant gadget
/// for an independent set `S` of the source.
pub fn mmvc_from_is(map: &GadgetMap, independent: &[usize]) -> Candidate {
    let member = crate::validate::membership(map.originals, independent);
    let mut out: Vec<usize> = (0..map.originals).filter(|&v| !member[v]).collect();
    for &v in independent {
        out.extend(map.attached(v));
    }
    Candidate::vertices(Problem::Mmvc, out)
}

/// Source vertices outside a vertex cover of the pendant gadget.
pub fn mmvc_backward(map: &GadgetMap, cover: &[usize]) -> Candidate {
    let member = crate::validate::membership(map.vertex_count(), cover);
    Candidate::vertices(
        Problem::Is,
        (0..map.originals).filter(|&v| !member[v]).collect(),
    )
}
