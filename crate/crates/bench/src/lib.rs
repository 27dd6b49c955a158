//! Fixed-seed inputs shared by the benchmarks.

use sparselab_core::generate::{gnp, gnp_bounded, rng};
use sparselab_core::reductions::vc_to_fas;
use sparselab_core::Graph;

/// `G(n, p)` from a fixed seed, so every run measures the same instance.
pub fn random_graph(n: usize, p: f64) -> Graph {
    gnp(n, p, &mut rng(0xbe4c_0000 + n as u64))
}

/// Maximum degree at most `d`.
pub fn bounded_graph(n: usize, d: usize) -> Graph {
    gnp_bounded(n, 0.5, d, &mut rng(0xbe4c_1000 + n as u64))
}

/// The feedback-arc-set gadget of a random graph on `n` vertices.
pub fn fas_gadget(n: usize) -> Graph {
    vc_to_fas(&random_graph(n, 0.3))
        .expect("undirected input")
        .0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_stable() {
        assert_eq!(random_graph(20, 0.2), random_graph(20, 0.2));
        assert!(bounded_graph(30, 4).max_degree() <= 4);
        assert_eq!(fas_gadget(6).n(), 12);
    }
}
