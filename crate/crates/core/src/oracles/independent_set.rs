use fixedbitset::FixedBitSet;

use super::{degree2, Search};
use crate::error::Result;
use crate::graph::Graph;

/// Maximum independent set by branching on a maximum-degree vertex (take it
/// and drop its neighborhood, or drop it), finishing polynomially once the
/// surviving graph has maximum degree 2.
pub(crate) fn max_independent_set(g: &Graph, search: &mut Search) -> Result<Vec<usize>> {
    let mut alive = FixedBitSet::with_capacity(g.n());
    alive.insert_range(..);
    let mut best = Vec::new();
    let mut current = Vec::new();
    branch(g, &mut alive, &mut current, &mut best, search)?;
    best.sort_unstable();
    Ok(best)
}

fn branch(
    g: &Graph,
    alive: &mut FixedBitSet,
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
    search: &mut Search,
) -> Result<()> {
    search.tick()?;
    let remaining = alive.count_ones(..);
    if current.len() + remaining <= best.len() {
        return Ok(());
    }

    let mut pick = None;
    let mut pick_deg = 0;
    for v in alive.ones() {
        let d = g
            .neighbors(v)
            .iter()
            .filter(|&&w| alive.contains(w))
            .count();
        if d > pick_deg {
            pick = Some(v);
            pick_deg = d;
        }
    }

    if pick_deg <= 2 {
        let verts: Vec<usize> = alive.ones().collect();
        let sub = g.induced_subgraph(&verts)?;
        let part = degree2::solve(&sub);
        if current.len() + part.len() > best.len() {
            *best = current
                .iter()
                .copied()
                .chain(part.iter().map(|&i| verts[i]))
                .collect();
        }
        return Ok(());
    }
    let v = pick.expect("degree > 2 means a vertex was picked");

    // take v
    let removed: Vec<usize> = std::iter::once(v)
        .chain(
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&w| alive.contains(w)),
        )
        .collect();
    for &w in &removed {
        alive.set(w, false);
    }
    current.push(v);
    branch(g, alive, current, best, search)?;
    current.pop();
    for &w in &removed {
        alive.insert(w);
    }

    // drop v
    alive.set(v, false);
    let r = branch(g, alive, current, best, search);
    alive.insert(v);
    r
}
