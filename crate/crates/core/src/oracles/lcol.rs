use super::{check_vertices, OracleBudget, Search};
use crate::error::Result;
use crate::graph::Graph;

/// Largest vertex set inducing an `colors`-colorable subgraph.
///
/// Vertices are visited by decreasing degree; each is either given one of the
/// colors in use (or the next fresh one) or left out. Pruned when even keeping
/// every remaining vertex cannot beat the incumbent.
pub(crate) fn max_colorable_subgraph(
    g: &Graph,
    colors: usize,
    budget: &OracleBudget,
    search: &mut Search,
) -> Result<Vec<usize>> {
    check_vertices("colorable subgraph search", g.n(), budget)?;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut s = State {
        g,
        order: &order,
        colors,
        color: vec![usize::MAX; g.n()],
        kept: Vec::new(),
        best: Vec::new(),
    };
    s.branch(0, 0, search)?;
    let mut best = s.best;
    best.sort_unstable();
    Ok(best)
}

struct State<'a> {
    g: &'a Graph,
    order: &'a [usize],
    colors: usize,
    color: Vec<usize>,
    kept: Vec<usize>,
    best: Vec<usize>,
}

impl State<'_> {
    fn branch(&mut self, pos: usize, used: usize, search: &mut Search) -> Result<()> {
        search.tick()?;
        if self.kept.len() + (self.order.len() - pos) <= self.best.len() {
            return Ok(());
        }
        let Some(&v) = self.order.get(pos) else {
            self.best = self.kept.clone();
            return Ok(());
        };
        let limit = (used + 1).min(self.colors);
        for c in 0..limit {
            if self.g.neighbors(v).iter().all(|&w| self.color[w] != c) {
                self.color[v] = c;
                self.kept.push(v);
                let r = self.branch(pos + 1, used.max(c + 1), search);
                self.kept.pop();
                self.color[v] = usize::MAX;
                r?;
            }
        }
        self.branch(pos + 1, used, search)
    }
}
