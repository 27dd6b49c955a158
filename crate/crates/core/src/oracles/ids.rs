use fixedbitset::FixedBitSet;

use super::greedy::{maximal_is_greedy, TieRule};
use super::Search;
use crate::error::Result;
use crate::graph::Graph;

/// Minimum independent dominating set. Every such set contains a vertex of
/// `N[v]` for each undominated `v`; the search branches over those choices
/// for the undominated vertex with the fewest selectable options.
pub(crate) fn min_independent_dominating_set(g: &Graph, search: &mut Search) -> Result<Vec<usize>> {
    let n = g.n();
    let closed: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut b = FixedBitSet::with_capacity(n);
            b.insert(v);
            for &w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect();
    let mut state = State {
        g,
        closed: &closed,
        max_closed: g.max_degree() + 1,
        best: maximal_is_greedy(g, TieRule::LowestId),
        chosen: Vec::new(),
    };
    let dominated = FixedBitSet::with_capacity(n);
    let blocked = FixedBitSet::with_capacity(n);
    state.branch(dominated, blocked, search)?;
    let mut best = state.best;
    best.sort_unstable();
    Ok(best)
}

struct State<'a> {
    g: &'a Graph,
    closed: &'a [FixedBitSet],
    max_closed: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl State<'_> {
    fn branch(
        &mut self,
        dominated: FixedBitSet,
        mut blocked: FixedBitSet,
        search: &mut Search,
    ) -> Result<()> {
        search.tick()?;
        let n = self.g.n();
        let undominated = n - dominated.count_ones(..);
        if undominated == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        if self.chosen.len() + undominated.div_ceil(self.max_closed) >= self.best.len() {
            return Ok(());
        }

        let mut target = None;
        let mut fewest = usize::MAX;
        for v in dominated.zeroes() {
            let k = self.closed[v].difference(&blocked).count();
            if k < fewest {
                fewest = k;
                target = Some(v);
                if k <= 1 {
                    break;
                }
            }
        }
        if fewest == 0 {
            return Ok(());
        }
        let v = target.expect("some vertex is undominated");
        let mut options: Vec<(usize, usize)> = self.closed[v]
            .difference(&blocked)
            .map(|w| (w, self.closed[w].difference(&dominated).count()))
            .collect();
        options.sort_by_key(|&(w, gain)| (std::cmp::Reverse(gain), w));

        for (w, _) in options {
            let mut d = dominated.clone();
            d.union_with(&self.closed[w]);
            let mut b = blocked.clone();
            b.union_with(&self.closed[w]);
            self.chosen.push(w);
            let r = self.branch(d, b, search);
            self.chosen.pop();
            r?;
            blocked.insert(w);
        }
        Ok(())
    }
}
