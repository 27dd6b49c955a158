use crate::graph::Graph;

/// Order in which [`maximal_is_greedy`] considers vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieRule {
    /// Scan `0..n` and keep every vertex with no kept neighbor.
    #[default]
    LowestId,
    /// Repeatedly keep a vertex of minimum degree in the surviving graph
    /// (lowest id among ties) and delete its closed neighborhood.
    MinDegree,
}

/// An independent set that is maximal for inclusion, sorted.
pub fn maximal_is_greedy(g: &Graph, rule: TieRule) -> Vec<usize> {
    let n = g.n();
    let mut out = Vec::new();
    match rule {
        TieRule::LowestId => {
            let mut blocked = vec![false; n];
            for v in 0..n {
                if !blocked[v] {
                    out.push(v);
                    blocked[v] = true;
                    for &w in g.neighbors(v) {
                        blocked[w] = true;
                    }
                }
            }
        }
        TieRule::MinDegree => {
            let mut alive = vec![true; n];
            let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
            while let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)) {
                out.push(v);
                let mut gone = vec![v];
                gone.extend(g.neighbors(v).iter().copied().filter(|&w| alive[w]));
                for &x in &gone {
                    alive[x] = false;
                }
                for &x in &gone {
                    for &y in g.neighbors(x) {
                        if alive[y] {
                            deg[y] -= 1;
                        }
                    }
                }
            }
            out.sort_unstable();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_gives_lowest_vertex() {
        assert_eq!(
            maximal_is_greedy(&Graph::complete(3), TieRule::LowestId),
            vec![0]
        );
    }

    #[test]
    fn edgeless_gives_everything() {
        assert_eq!(
            maximal_is_greedy(&Graph::empty(5), TieRule::LowestId),
            vec![0, 1, 2, 3, 4]
        );
    }

    #[test]
    fn five_cycle_scan() {
        // 0 kept; 1 blocked; 2 kept; 3 and 4 blocked
        assert_eq!(
            maximal_is_greedy(&Graph::cycle(5), TieRule::LowestId),
            vec![0, 2]
        );
    }

    #[test]
    fn min_degree_prefers_leaves() {
        assert_eq!(
            maximal_is_greedy(&Graph::star(4), TieRule::MinDegree),
            vec![1, 2, 3, 4]
        );
        assert_eq!(
            maximal_is_greedy(&Graph::star(4), TieRule::LowestId),
            vec![0]
        );
    }
}
