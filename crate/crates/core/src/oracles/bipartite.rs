use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Candidate, Problem};

/// A maximum matching of a bipartite graph, by augmenting paths from the
/// `false` side of `sides`. Returned as `(left, right)` pairs.
pub fn maximum_bipartite_matching(g: &Graph, sides: &[bool]) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut mate = vec![usize::MAX; n];

    fn augment(g: &Graph, u: usize, seen: &mut [bool], mate: &mut [usize]) -> bool {
        for &w in g.neighbors(u) {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if mate[w] == usize::MAX || augment(g, mate[w], seen, mate) {
                mate[w] = u;
                mate[u] = w;
                return true;
            }
        }
        false
    }

    for u in (0..n).filter(|&u| !sides[u]) {
        let mut seen = vec![false; n];
        augment(g, u, &mut seen, &mut mate);
    }
    (0..n)
        .filter(|&u| !sides[u] && mate[u] != usize::MAX)
        .map(|u| (u, mate[u]))
        .collect()
}

/// Maximum independent set of a bipartite graph: the complement of a minimum
/// vertex cover rebuilt from a maximum matching (Konig). With `Z` the
/// vertices reachable from unmatched left vertices by alternating paths, the
/// set is `(L and Z) or (R minus Z)`.
pub fn max_is_bipartite(g: &Graph) -> Result<Candidate> {
    let sides = g.two_coloring().ok_or(Error::NotBipartite)?;
    let matching = maximum_bipartite_matching(g, &sides);
    let n = g.n();
    let mut mate = vec![usize::MAX; n];
    for &(u, w) in &matching {
        mate[u] = w;
        mate[w] = u;
    }
    let mut reach = vec![false; n];
    let mut stack: Vec<usize> = (0..n)
        .filter(|&u| !sides[u] && mate[u] == usize::MAX)
        .collect();
    for &u in &stack {
        reach[u] = true;
    }
    while let Some(u) = stack.pop() {
        // left to right along non-matching edges, right to left along the matching
        for &w in g.neighbors(u) {
            if !reach[w] && mate[u] != w {
                reach[w] = true;
                let back = mate[w];
                if back != usize::MAX && !reach[back] {
                    reach[back] = true;
                    stack.push(back);
                }
            }
        }
    }
    let set: Vec<usize> = (0..n)
        .filter(|&v| if sides[v] { !reach[v] } else { reach[v] })
        .collect();
    debug_assert_eq!(set.len(), n - matching.len());
    Ok(Candidate::vertices(Problem::Is, set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::is_independent;

    #[test]
    fn complete_bipartite_takes_larger_side() {
        let c = max_is_bipartite(&Graph::complete_bipartite(2, 3)).unwrap();
        assert_eq!(c.value, 3);
        assert_eq!(c.vertex_set().unwrap(), &[2, 3, 4]);
    }

    #[test]
    fn path_of_four() {
        let g = Graph::path(4);
        let c = max_is_bipartite(&g).unwrap();
        assert_eq!(c.value, 2);
        assert!(is_independent(&g, c.vertex_set().unwrap()));
    }

    #[test]
    fn odd_cycle_rejected() {
        assert!(matches!(
            max_is_bipartite(&Graph::cycle(5)),
            Err(Error::NotBipartite)
        ));
    }
}
