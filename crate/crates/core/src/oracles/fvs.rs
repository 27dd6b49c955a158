use std::collections::VecDeque;

use super::Search;
use crate::error::Result;
use crate::graph::Graph;

/// Minimum feedback vertex set of an undirected graph.
///
/// Vertices of degree at most 1 are peeled off first (they lie on no cycle).
/// The search then finds a shortest cycle in what is left and branches on
/// which of its vertices to delete; vertices passed over in earlier sibling
/// branches become undeletable.
pub(crate) fn min_feedback_vertex_set(g: &Graph, search: &mut Search) -> Result<Vec<usize>> {
    let n = g.n();
    let mut state = State {
        g,
        best: greedy(g),
        chosen: Vec::new(),
    };
    let mut removed = vec![false; n];
    let mut keep = vec![false; n];
    state.branch(&mut removed, &mut keep, search)?;
    let mut best = state.best;
    best.sort_unstable();
    Ok(best)
}

/// The 2-core of the graph left after deleting `removed`.
fn core(g: &Graph, removed: &[bool]) -> Vec<bool> {
    let n = g.n();
    let mut alive: Vec<bool> = removed.iter().map(|r| !r).collect();
    let mut deg: Vec<usize> = (0..n)
        .map(|v| {
            if alive[v] {
                g.neighbors(v).iter().filter(|&&w| alive[w]).count()
            } else {
                0
            }
        })
        .collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] <= 1).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push(w);
                }
            }
        }
    }
    alive
}

fn greedy(g: &Graph) -> Vec<usize> {
    let mut removed = vec![false; g.n()];
    let mut out = Vec::new();
    loop {
        let alive = core(g, &removed);
        let pick = (0..g.n()).filter(|&v| alive[v]).max_by_key(|&v| {
            (
                g.neighbors(v).iter().filter(|&&w| alive[w]).count(),
                std::cmp::Reverse(v),
            )
        });
        match pick {
            Some(v) => {
                removed[v] = true;
                out.push(v);
            }
            None => return out,
        }
    }
}

/// Shortest cycle inside `alive`, preferring fewer deletable vertices among
/// cycles of equal length.
fn shortest_cycle(g: &Graph, alive: &[bool], keep: &[bool]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let score = |c: &Vec<usize>| (c.len(), c.iter().filter(|&&v| !keep[v]).count());
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in (0..n).filter(|&v| alive[v]) {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = &best {
                if 2 * dist[u] + 1 > b.len() {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if !alive[w] || w == parent[u] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else {
                    // non-tree edge closes a closed walk through s; it is a
                    // simple cycle when the two tree paths only meet at s
                    let mut a = vec![u];
                    let mut x = u;
                    while x != s {
                        x = parent[x];
                        a.push(x);
                    }
                    let mut b = vec![w];
                    let mut y = w;
                    while y != s {
                        y = parent[y];
                        b.push(y);
                    }
                    let shared = a.iter().filter(|v| b.contains(v)).count();
                    if shared != 1 {
                        continue;
                    }
                    b.pop();
                    a.extend(b.into_iter().rev());
                    if best.as_ref().map_or(true, |cur| score(&a) < score(cur)) {
                        best = Some(a);
                    }
                }
            }
        }
    }
    best
}

struct State<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl State<'_> {
    fn branch(
        &mut self,
        removed: &mut [bool],
        keep: &mut [bool],
        search: &mut Search,
    ) -> Result<()> {
        search.tick()?;
        let alive = core(self.g, removed);
        if !alive.iter().any(|&a| a) {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        if self.chosen.len() + 1 >= self.best.len() {
            return Ok(());
        }
        let cycle = shortest_cycle(self.g, &alive, keep).expect("a non-empty 2-core has a cycle");
        let options: Vec<usize> = cycle.into_iter().filter(|&v| !keep[v]).collect();
        let mut kept = Vec::new();
        let mut result = Ok(());
        for v in options {
            removed[v] = true;
            self.chosen.push(v);
            result = self.branch(removed, keep, search);
            self.chosen.pop();
            removed[v] = false;
            if result.is_err() {
                break;
            }
            keep[v] = true;
            kept.push(v);
        }
        for v in kept {
            keep[v] = false;
        }
        result
    }
}
