use super::{check_vertices, OracleBudget, Search};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Subset masks are `u32`; 2^28 table entries is already past desk scale.
const HARD_LIMIT: usize = 28;

/// Minimum feedback arc set: the arcs pointing backwards in a best linear
/// order. Strongly connected components are ordered independently by a DP
/// over vertex subsets, `best[S + v] = best[S] + |arcs from v into S|`.
pub(crate) fn min_feedback_arc_set(
    g: &Graph,
    budget: &OracleBudget,
    search: &mut Search,
) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for comp in strongly_connected_components(g) {
        if comp.len() < 2 {
            continue;
        }
        check_vertices("feedback arc set DP (component size)", comp.len(), budget)?;
        if comp.len() > HARD_LIMIT {
            return Err(Error::TooLarge {
                what: "feedback arc set DP",
                size: comp.len(),
                limit: HARD_LIMIT,
            });
        }
        let k = comp.len();
        let local = |v: usize| comp.binary_search(&v).ok();
        let out_mask: Vec<u32> = comp
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter_map(|&w| local(w))
                    .fold(0u32, |m, i| m | 1 << i)
            })
            .collect();

        let full = 1usize << k;
        let mut best = vec![u32::MAX; full];
        let mut last = vec![u8::MAX; full];
        best[0] = 0;
        for set in 0..full {
            let base = best[set];
            if base == u32::MAX {
                continue;
            }
            if set & 1023 == 0 {
                search.tick()?;
            }
            for v in 0..k {
                if set >> v & 1 == 1 {
                    continue;
                }
                let next = set | 1 << v;
                let cost = base + (out_mask[v] & set as u32).count_ones();
                if cost < best[next] {
                    best[next] = cost;
                    last[next] = v as u8;
                }
            }
        }
        let mut position = vec![0usize; k];
        let mut set = full - 1;
        for pos in (0..k).rev() {
            let v = last[set] as usize;
            position[v] = pos;
            set &= !(1 << v);
        }
        for (i, &v) in comp.iter().enumerate() {
            for &w in g.neighbors(v) {
                if let Some(j) = local(w) {
                    if position[j] < position[i] {
                        out.push((v, w));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Tarjan's algorithm, iterative; each component sorted.
pub(crate) fn strongly_connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*next) {
                *next += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("component on stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}
