use serde::Serialize;

use super::kstep::excavate;
use crate::error::Result;
use crate::graph::Graph;
use crate::instance::{Candidate, Problem};
use crate::oracles::degree2;

/// Result of [`param_is_excavation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamOutcome {
    pub candidate: Candidate,
    /// Independent subsets `T` of the excavated union that were tried.
    pub enumerated: u64,
    /// Size of the excavated union.
    pub excavated: usize,
}

/// Exact maximum independent set by excavating `max_degree - 2` maximal
/// independent sets and trying every independent subset `T` of their union
/// `U`; the rest, `G[V - U - N(T)]`, has degree at most 2 and is solved
/// directly. Graphs of maximum degree below 3 go straight to the degree-2
/// solver.
pub fn param_is_excavation(g: &Graph) -> Result<ParamOutcome> {
    let d = g.max_degree();
    if d < 3 {
        let candidate = crate::oracles::max_is_degree2(g)?;
        return Ok(ParamOutcome {
            candidate,
            enumerated: 0,
            excavated: 0,
        });
    }
    let union = excavate(g, d - 2).union();
    let n = g.n();
    let mut state = State {
        g,
        union: &union,
        blocked: vec![0u32; n],
        in_union: crate::validate::membership(n, &union),
        chosen: Vec::new(),
        best: Vec::new(),
        enumerated: 0,
    };
    state.walk(0);
    Ok(ParamOutcome {
        candidate: Candidate::vertices(Problem::Is, state.best),
        enumerated: state.enumerated,
        excavated: union.len(),
    })
}

struct State<'a> {
    g: &'a Graph,
    union: &'a [usize],
    /// Chosen vertices in or next to each vertex.
    blocked: Vec<u32>,
    in_union: Vec<bool>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    enumerated: u64,
}

impl State<'_> {
    fn walk(&mut self, pos: usize) {
        let Some(&u) = self.union.get(pos) else {
            self.finish();
            return;
        };
        if self.blocked[u] == 0 {
            self.toggle(u, true);
            self.walk(pos + 1);
            self.toggle(u, false);
        }
        self.walk(pos + 1);
    }

    fn toggle(&mut self, u: usize, on: bool) {
        let step = |b: &mut u32| if on { *b += 1 } else { *b -= 1 };
        step(&mut self.blocked[u]);
        for &w in self.g.neighbors(u) {
            step(&mut self.blocked[w]);
        }
        if on {
            self.chosen.push(u);
        } else {
            self.chosen.pop();
        }
    }

    fn finish(&mut self) {
        self.enumerated += 1;
        let rest: Vec<usize> = (0..self.g.n())
            .filter(|&v| !self.in_union[v] && self.blocked[v] == 0)
            .collect();
        let h = self
            .g
            .induced_subgraph(&rest)
            .expect("subset of the vertex set");
        let total = self.chosen.len() + degree2::solve(&h).len();
        if total > self.best.len() || self.enumerated == 1 {
            let mut best = self.chosen.clone();
            best.extend(degree2::solve(&h).into_iter().map(|i| rest[i]));
            self.best = best;
        }
    }
}
