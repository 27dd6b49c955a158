//! Degree-reducing branching, maximal-independent-set excavation and the
//! excavation-based exact algorithm.

mod kstep;
mod param;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use kstep::{
    approx_is_kstep, approx_lcol_kstep, approx_planar_kstep, excavate, kstep_sparsify,
    DegradedSubsolver, ExactSubsolver, Excavation, Subsolver,
};
pub use param::{param_is_excavation, ParamOutcome};

use crate::analysis::{branching_root, g_of_lambda};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Candidate, Problem};
use crate::validate::{membership, validate};

/// Which problem a sparsification tree serves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Is,
    Vc,
}

impl Mode {
    pub fn problem(self) -> Problem {
        match self {
            Mode::Is => Problem::Is,
            Mode::Vc => Problem::Vc,
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "is" => Ok(Mode::Is),
            "vc" => Ok(Mode::Vc),
            _ => Err(Error::InvalidPolicy(format!(
                "mode must be is or vc, got {s:?}"
            ))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Is => "is",
            Mode::Vc => "vc",
        })
    }
}

/// When the branching stops.
///
/// Written `power:ETA`, `const:B` or `lambda:LAMBDA`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum ThresholdPolicy {
    /// Leaves have degree at most `floor(n^eta)` with `n` the root order.
    Power(f64),
    /// Leaves have degree at most `B`.
    Constant(usize),
    /// Leaves have degree strictly below `g(lambda)`.
    OfLambda(f64),
}

impl ThresholdPolicy {
    pub fn check(&self) -> Result<()> {
        match *self {
            ThresholdPolicy::Power(eta) if !(eta > 0.0 && eta < 1.0) => Err(Error::InvalidPolicy(
                format!("power needs 0 < eta < 1, got {eta}"),
            )),
            ThresholdPolicy::Constant(0) => Err(Error::InvalidPolicy(
                "constant threshold must be at least 1".into(),
            )),
            ThresholdPolicy::OfLambda(l) => g_of_lambda(l)
                .map(|_| ())
                .map_err(|e| Error::InvalidPolicy(e.to_string())),
            _ => Ok(()),
        }
    }

    /// Largest maximum degree a leaf of an `n`-vertex root may keep.
    pub fn max_leaf_degree(&self, n: usize) -> Result<usize> {
        self.check()?;
        Ok(match *self {
            ThresholdPolicy::Power(eta) => {
                let x = (n as f64).powf(eta);
                // powf can land just below an exact integer power
                if (x - x.round()).abs() < 1e-9 {
                    x.round() as usize
                } else {
                    x.floor() as usize
                }
            }
            ThresholdPolicy::Constant(b) => b,
            ThresholdPolicy::OfLambda(l) => g_of_lambda(l)? - 1,
        })
    }

    /// `ceil(rho^n)` with `rho` the growth base of branching on a vertex of
    /// degree above the threshold: `branching_root(t + 1)` for integer
    /// threshold `t`, `branching_root(g + 1)` under `lambda`.
    pub fn leaf_count_bound(&self, n: usize) -> Result<f64> {
        let b = match *self {
            ThresholdPolicy::OfLambda(l) => g_of_lambda(l)? + 1,
            _ => self.max_leaf_degree(n)? + 1,
        };
        let pow = if b < 2 {
            2f64.powi(n as i32)
        } else {
            branching_root(b)?.pow(n)
        };
        // absorb rounding in the power before taking the ceiling
        Ok((pow * (1.0 - 1e-12)).ceil().max(1.0))
    }
}

impl FromStr for ThresholdPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, value) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidPolicy(format!("expected KIND:VALUE, got {s:?}")))?;
        let bad = |_| Error::InvalidPolicy(format!("bad value in {s:?}"));
        let policy = match kind {
            "power" => ThresholdPolicy::Power(
                value
                    .parse()
                    .map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?,
            ),
            "const" | "constant" => ThresholdPolicy::Constant(
                value
                    .parse()
                    .map_err(|e: std::num::ParseIntError| bad(e.to_string()))?,
            ),
            "lambda" | "of-lambda" => ThresholdPolicy::OfLambda(
                value
                    .parse()
                    .map_err(|e: std::num::ParseFloatError| bad(e.to_string()))?,
            ),
            _ => {
                return Err(Error::InvalidPolicy(format!(
                    "unknown policy kind {kind:?}"
                )))
            }
        };
        policy.check()?;
        Ok(policy)
    }
}

impl fmt::Display for ThresholdPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThresholdPolicy::Power(eta) => write!(f, "power:{eta}"),
            ThresholdPolicy::Constant(b) => write!(f, "const:{b}"),
            ThresholdPolicy::OfLambda(l) => write!(f, "lambda:{l}"),
        }
    }
}

/// One leaf of the branching tree.
///
/// `vertices` lists the root vertices of the residual graph in increasing
/// order; residual vertex `i` is root vertex `vertices[i]`. `path` spells the
/// branch taken at each level, `A` for the commit child and `B` for the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsificationLeaf {
    pub committed: Vec<usize>,
    pub deleted: Vec<usize>,
    pub vertices: Vec<usize>,
    pub leaf: Graph,
    pub depth: usize,
    pub path: String,
}

impl SparsificationLeaf {
    pub fn residual(&self) -> &Graph {
        &self.leaf
    }
}

struct Node {
    alive: Vec<bool>,
    committed: Vec<usize>,
    deleted: Vec<usize>,
    path: String,
}

/// Depth-first stream of the leaves of the branching tree, commit child
/// first.
pub struct Leaves<'a> {
    g: &'a Graph,
    mode: Mode,
    threshold: usize,
    stack: Vec<Node>,
}

/// Branches on a maximum-degree vertex (lowest id among ties) until the
/// surviving graph has maximum degree at most the policy threshold.
///
/// In IS mode the commit child takes `v` and deletes its neighbors, the other
/// child deletes `v`. In VC mode the commit child takes `v`, the other child
/// takes every neighbor of `v` and deletes `v`; vertices left without
/// surviving neighbors in a VC child are deleted on the spot.
pub fn superlinear_sparsify(g: &Graph, mode: Mode, policy: ThresholdPolicy) -> Result<Leaves<'_>> {
    if g.is_directed() {
        return Err(Error::InvalidGraph(
            "sparsification needs an undirected graph".into(),
        ));
    }
    let threshold = policy.max_leaf_degree(g.n())?;
    let root = Node {
        alive: vec![true; g.n()],
        committed: Vec::new(),
        deleted: Vec::new(),
        path: String::new(),
    };
    Ok(Leaves {
        g,
        mode,
        threshold,
        stack: vec![root],
    })
}

impl Leaves<'_> {
    /// The maximum degree leaves are guaranteed not to exceed.
    pub fn threshold(&self) -> usize {
        self.threshold
    }

    fn degree(&self, alive: &[bool], v: usize) -> usize {
        self.g.neighbors(v).iter().filter(|&&w| alive[w]).count()
    }

    fn child(&self, node: &Node, commit: &[usize], delete: &[usize], step: char) -> Node {
        let mut alive = node.alive.clone();
        let mut committed = node.committed.clone();
        let mut deleted = node.deleted.clone();
        for &v in commit {
            alive[v] = false;
            committed.push(v);
        }
        for &v in delete {
            alive[v] = false;
            deleted.push(v);
        }
        if self.mode == Mode::Vc {
            for v in 0..alive.len() {
                if alive[v] && self.degree(&alive, v) == 0 {
                    alive[v] = false;
                    deleted.push(v);
                }
            }
        }
        let mut path = node.path.clone();
        path.push(step);
        Node {
            alive,
            committed,
            deleted,
            path,
        }
    }
}

impl Iterator for Leaves<'_> {
    type Item = SparsificationLeaf;

    fn next(&mut self) -> Option<SparsificationLeaf> {
        let node = self.stack.pop()?;
        let mut pick = None;
        let mut best = self.threshold;
        for v in (0..self.g.n()).filter(|&v| node.alive[v]) {
            let d = self.degree(&node.alive, v);
            if d > best {
                best = d;
                pick = Some(v);
            }
        }
        match pick {
            None => {
                let vertices: Vec<usize> = (0..self.g.n()).filter(|&v| node.alive[v]).collect();
                let leaf = self
                    .g
                    .induced_subgraph(&vertices)
                    .expect("alive vertices exist");
                let mut committed = node.committed;
                let mut deleted = node.deleted;
                committed.sort_unstable();
                deleted.sort_unstable();
                Some(SparsificationLeaf {
                    committed,
                    deleted,
                    vertices,
                    leaf,
                    depth: node.path.len(),
                    path: node.path,
                })
            }
            Some(v) => {
                let nbrs: Vec<usize> = self
                    .g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| node.alive[w])
                    .collect();
                let (a, b) = match self.mode {
                    Mode::Is => (
                        self.child(&node, &[v], &nbrs, 'A'),
                        self.child(&node, &[], &[v], 'B'),
                    ),
                    Mode::Vc => (
                        self.child(&node, &[v], &[], 'A'),
                        self.child(&node, &nbrs, &[v], 'B'),
                    ),
                };
                self.stack.push(b);
                self.stack.push(a);
                self.next()
            }
        }
    }
}

/// Lifts a solution of `leaf`'s residual graph to one of the root graph by
/// adding the committed vertices.
pub fn lift_solution(
    root: &Graph,
    leaf: &SparsificationLeaf,
    candidate: &Candidate,
    mode: Mode,
) -> Result<Candidate> {
    let problem = mode.problem();
    let verdict = validate(problem, &leaf.leaf.clone().into(), candidate)?;
    if !verdict.feasible {
        return Err(Error::InfeasibleCandidate(
            verdict.reason.unwrap_or_default(),
        ));
    }
    let local = candidate
        .vertex_set()
        .expect("vertex payload checked by validate");
    let mut out = leaf.committed.clone();
    out.extend(local.iter().map(|&i| leaf.vertices[i]));
    if let Some(&bad) = out.iter().find(|&&v| v >= root.n()) {
        return Err(Error::UnknownVertex(bad));
    }
    Ok(Candidate::vertices(problem, out))
}

/// Checks that a leaf partitions the root vertices, that its residual is the
/// induced subgraph on `vertices`, that its degree respects `threshold`, and
/// the mode-specific commitment property. Returns the first violation.
pub fn check_leaf(
    root: &Graph,
    leaf: &SparsificationLeaf,
    mode: Mode,
    threshold: usize,
) -> Option<String> {
    let n = root.n();
    let mut seen = vec![0u8; n];
    for &v in leaf
        .committed
        .iter()
        .chain(&leaf.deleted)
        .chain(&leaf.vertices)
    {
        if v >= n {
            return Some(format!("vertex {v} out of range"));
        }
        seen[v] += 1;
    }
    if let Some(v) = seen.iter().position(|&c| c != 1) {
        return Some(format!(
            "vertex {v} appears {} times across the partition",
            seen[v]
        ));
    }
    match root.induced_subgraph(&leaf.vertices) {
        Ok(h) if h == leaf.leaf => {}
        _ => return Some("residual is not the induced subgraph on its vertices".into()),
    }
    if leaf.leaf.max_degree() > threshold {
        return Some(format!(
            "residual degree {} exceeds {threshold}",
            leaf.leaf.max_degree()
        ));
    }
    let committed = membership(n, &leaf.committed);
    let inside = membership(n, &leaf.vertices);
    match mode {
        Mode::Is => {
            if let Some((u, v)) = root.edges().find(|&(u, v)| committed[u] && committed[v]) {
                return Some(format!("committed vertices {u} and {v} are adjacent"));
            }
            if let Some((u, v)) = root
                .edges()
                .find(|&(u, v)| (committed[u] && inside[v]) || (committed[v] && inside[u]))
            {
                return Some(format!(
                    "edge ({u},{v}) joins the commitment to the residual"
                ));
            }
        }
        Mode::Vc => {
            if let Some((u, v)) = root
                .edges()
                .find(|&(u, v)| !(inside[u] && inside[v]) && !committed[u] && !committed[v])
            {
                return Some(format!(
                    "edge ({u},{v}) is neither covered nor inside the residual"
                ));
            }
        }
    }
    if leaf.depth != leaf.path.len() {
        return Some("depth disagrees with path".into());
    }
    None
}
