use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{Candidate, Problem};

/// Maximum independent set of a graph with maximum degree at most 2: every
/// path on `p` vertices contributes `ceil(p/2)`, every cycle `floor(p/2)`.
pub fn max_is_degree2(g: &Graph) -> Result<Candidate> {
    let d = g.max_degree();
    if d > 2 {
        return Err(Error::DegreeTooLarge(d));
    }
    Ok(Candidate::vertices(Problem::Is, solve(g)))
}

/// Caller guarantees `max_degree <= 2`.
pub(crate) fn solve(g: &Graph) -> Vec<usize> {
    let mut out = Vec::new();
    for comp in g.components() {
        let edges: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        let is_cycle = comp.len() >= 3 && edges == comp.len();
        // walk from an endpoint for paths, from the lowest vertex for cycles
        let start = if is_cycle {
            comp[0]
        } else {
            *comp
                .iter()
                .find(|&&v| g.degree(v) <= 1)
                .expect("a path has an endpoint")
        };
        let mut prev = usize::MAX;
        let mut cur = start;
        let mut walk = Vec::with_capacity(comp.len());
        loop {
            walk.push(cur);
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| w != prev && w != start);
            match next {
                Some(w) if walk.len() < comp.len() => {
                    prev = cur;
                    cur = w;
                }
                _ => break,
            }
        }
        let take = if is_cycle {
            walk.len() / 2
        } else {
            walk.len().div_ceil(2)
        };
        out.extend(walk.iter().step_by(2).take(take));
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::is_independent;

    #[test]
    fn cycles_and_paths() {
        assert_eq!(max_is_degree2(&Graph::cycle(5)).unwrap().value, 2);
        assert_eq!(max_is_degree2(&Graph::path(5)).unwrap().value, 3);
        assert_eq!(max_is_degree2(&Graph::cycle(6)).unwrap().value, 3);
        assert_eq!(max_is_degree2(&Graph::path(1)).unwrap().value, 1);
        assert_eq!(max_is_degree2(&Graph::empty(0)).unwrap().value, 0);
    }

    #[test]
    fn components_add_up() {
        let g = Graph::cycle(4)
            .disjoint_union(&Graph::path(3))
            .disjoint_union(&Graph::empty(1));
        let c = max_is_degree2(&g).unwrap();
        assert_eq!(c.value, 5);
        assert!(is_independent(&g, c.vertex_set().unwrap()));
    }

    #[test]
    fn rejects_degree_three() {
        assert!(matches!(
            max_is_degree2(&Graph::star(3)),
            Err(Error::DegreeTooLarge(3))
        ));
    }
}
