//! Simple graphs with dense vertex ids and a side table of original labels.

use std::collections::VecDeque;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A simple graph (no loops, no parallel edges), directed or undirected.
///
/// Vertices are `0..n`. Each vertex carries an opaque label; labels start out
/// as the vertex ids and survive [`Graph::induced_subgraph`], so a vertex of a
/// subgraph can always be traced back to the graph it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    adj: Vec<Vec<usize>>,
    labels: Vec<usize>,
    edges: usize,
}

impl Graph {
    /// Graph on `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            directed: false,
            adj: vec![Vec::new(); n],
            labels: (0..n).collect(),
            edges: 0,
        }
    }

    /// Undirected graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(n, false, edges)
    }

    /// Directed graph from an arc list.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(n, true, arcs)
    }

    fn build<I>(n: usize, directed: bool, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(u.max(v)));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on vertex {u}")));
            }
            adj[u].push(v);
            if !directed {
                adj[v].push(u);
            }
        }
        let mut total = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            total += list.len();
        }
        let edges = if directed { total } else { total / 2 };
        Ok(Graph {
            directed,
            adj,
            labels: (0..n).collect(),
            edges,
        })
    }

    /// Replaces the label table. `labels.len()` must equal `n`.
    pub fn with_labels(mut self, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("valid edges")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid edges")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid edges")
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid edges")
    }

    /// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::from_edges(a + b, edges).expect("valid edges")
    }

    /// The Petersen graph: outer 5-cycle on `0..5`, inner pentagram on `5..10`,
    /// spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Self::from_edges(10, edges).expect("valid edges")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        assert_eq!(
            self.directed, other.directed,
            "cannot mix directed and undirected graphs"
        );
        let shift = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Self::build(self.n() + other.n(), self.directed, edges).expect("valid edges")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges (arcs, when directed).
    #[inline]
    pub fn m(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Sorted neighbors of `v` (out-neighbors when directed).
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    #[inline]
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Edges as `(u, v)` with `u < v`, or every arc when directed.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let directed = self.directed;
        self.adj.iter().enumerate().flat_map(move |(u, list)| {
            list.iter()
                .filter(move |&&v| directed || u < v)
                .map(move |&v| (u, v))
        })
    }

    /// `G[V']`. Vertex `i` of the result is the `i`-th smallest element of
    /// `vertices`; labels are carried over.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n()) {
            return Err(Error::UnknownVertex(bad));
        }
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = Vec::with_capacity(keep.len());
        let mut total = 0;
        for &v in &keep {
            let list: Vec<usize> = self.adj[v]
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect();
            total += list.len();
            adj.push(list);
        }
        Ok(Graph {
            directed: self.directed,
            adj,
            labels: keep.iter().map(|&v| self.labels[v]).collect(),
            edges: if self.directed { total } else { total / 2 },
        })
    }

    /// Subgraph induced by the complement of `removed`.
    pub fn without(&self, removed: &[usize]) -> Result<Graph> {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            if v >= self.n() {
                return Err(Error::UnknownVertex(v));
            }
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// A proper 2-coloring (`false`/`true` sides) if the graph is bipartite.
    /// Each component's lowest vertex gets side `false`.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n()];
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("visited");
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.expect("all visited")).collect())
    }

    /// Connected components (weak components when directed), each sorted,
    /// ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let undirected_adj;
        let adj = if self.directed {
            let mut a = vec![Vec::new(); self.n()];
            for (u, v) in self.edges() {
                a[u].push(v);
                a[v].push(u);
            }
            undirected_adj = a;
            &undirected_adj
        } else {
            &self.adj
        };
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether the graph has no cycle (a forest when undirected, a DAG when
    /// directed).
    pub fn is_acyclic(&self) -> bool {
        if self.directed {
            topological_order(self).is_some()
        } else {
            self.m() + self.components().len() == self.n()
        }
    }
}

/// Kahn's algorithm; `None` when the digraph has a cycle.
pub(crate) fn topological_order(g: &Graph) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; g.n()];
    for (_, v) in g.edges() {
        indeg[v] += 1;
    }
    let mut stack: Vec<usize> = (0..g.n()).rev().filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(g.n());
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in g.neighbors(u) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    (order.len() == g.n()).then_some(order)
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    #[serde(default)]
    directed: bool,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<usize>>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let identity = self.labels.iter().enumerate().all(|(i, &l)| i == l);
        GraphRepr {
            n: self.n(),
            directed: self.directed,
            edges: self.edges().collect(),
            labels: (!identity).then(|| self.labels.clone()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = GraphRepr::deserialize(deserializer)?;
        let g = Graph::build(repr.n, repr.directed, repr.edges).map_err(D::Error::custom)?;
        match repr.labels {
            Some(labels) => g.with_labels(labels).map_err(D::Error::custom),
            None => Ok(g),
        }
    }
}
