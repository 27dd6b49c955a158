use super::{check_vertices, OracleBudget, Search};
use crate::error::Result;
use crate::graph::Graph;
use crate::planarity::is_planar;

/// Largest vertex set inducing a planar subgraph: sizes are tried from `n`
/// down, subsets of one size in lexicographic order, so the first planar hit
/// is optimal. Induced edge counts above `3k - 6` are skipped without a test.
pub(crate) fn max_planar_subgraph(
    g: &Graph,
    budget: &OracleBudget,
    search: &mut Search,
) -> Result<Vec<usize>> {
    let n = g.n();
    check_vertices("planar subgraph search", n, budget)?;
    for k in (0..=n).rev() {
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            search.tick()?;
            let edges = comb
                .iter()
                .map(|&v| {
                    g.neighbors(v)
                        .iter()
                        .filter(|w| comb.binary_search(w).is_ok())
                        .count()
                })
                .sum::<usize>()
                / 2;
            if (k < 3 || edges <= 3 * k - 6) && is_planar(&g.induced_subgraph(&comb)?) {
                return Ok(comb);
            }
            if !next_combination(&mut comb, n) {
                break;
            }
        }
    }
    Ok(Vec::new())
}

pub(crate) fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
