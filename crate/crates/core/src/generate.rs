//! Seeded random instance families.
//!
//! Every generator draws from [`Rng`], Marsaglia's xorshift128 (shifts 11, 8,
//! 19) seeded by expanding the `u64` seed with PCG32, so a seed fixes the
//! instance on every platform.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng as _, SeedableRng};
use rand_xorshift::XorShiftRng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{CnfInstance, Literal, SetSystem};

pub type Rng = XorShiftRng;

pub fn rng(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}

/// Erdos-Renyi `G(n, p)`; pairs are visited in lexicographic order.
pub fn gnp(n: usize, p: f64, rng: &mut Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid pairs")
}

/// `G(n, p)` with edges dropped, in draw order, when they would push an
/// endpoint past `max_degree`.
pub fn gnp_bounded(n: usize, p: f64, max_degree: usize, rng: &mut Rng) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let mut deg = vec![0; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if rng.random_bool(p) && deg[u] < max_degree && deg[v] < max_degree {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).expect("valid pairs")
}

/// `G(n, p)` on ordered pairs, no loops.
pub fn random_digraph(n: usize, p: f64, rng: &mut Rng) -> Graph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.random_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Graph::from_arcs(n, arcs).expect("valid pairs")
}

/// A uniformly drawn `d`-regular simple graph by the pairing model,
/// restarting on loops or repeated pairs.
pub fn random_regular(n: usize, d: usize, rng: &mut Rng) -> Result<Graph> {
    if d >= n.max(1) || n * d % 2 == 1 {
        return Err(Error::InvalidGraph(format!(
            "no {d}-regular graph on {n} vertices"
        )));
    }
    'attempt: for _ in 0..10_000 {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        points.shuffle(rng);
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        return Graph::from_edges(n, edges);
    }
    Err(Error::InvalidGraph(format!(
        "pairing model kept failing for {d}-regular on {n}"
    )))
}

/// Random bipartite graph with sides `0..a` and `a..a+b`.
pub fn random_bipartite(a: usize, b: usize, p: f64, rng: &mut Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(a + b, edges).expect("valid pairs")
}

/// Each element joins each set with probability `p`; an element left in no
/// set is then added to one set chosen uniformly, and an empty set receives
/// one uniform element, so covers and hitting sets always exist.
pub fn random_set_system(ground: usize, count: usize, p: f64, rng: &mut Rng) -> SetSystem {
    let mut sets = vec![Vec::new(); count];
    for e in 0..ground {
        let mut placed = false;
        for s in sets.iter_mut() {
            if rng.random_bool(p) {
                s.push(e);
                placed = true;
            }
        }
        if !placed && count > 0 {
            sets[rng.random_range(0..count)].push(e);
        }
    }
    if ground > 0 {
        for s in sets.iter_mut().filter(|s| s.is_empty()) {
            s.push(rng.random_range(0..ground));
        }
    }
    SetSystem::new(ground, sets).expect("valid elements")
}

/// `clauses` clauses over distinct variables, each of width `1..=width`.
pub fn random_cnf(num_vars: usize, clauses: usize, width: usize, rng: &mut Rng) -> CnfInstance {
    let vars: Vec<usize> = (0..num_vars).collect();
    let out = (0..clauses)
        .map(|_| {
            let w = rng.random_range(1..=width.min(num_vars));
            let picked: Vec<usize> = vars.choose_multiple(rng, w).copied().collect();
            picked
                .into_iter()
                .map(|v| Literal {
                    var: v,
                    positive: rng.random_bool(0.5),
                })
                .collect()
        })
        .collect();
    CnfInstance::new(num_vars, out).expect("distinct variables")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_reproduce() {
        let a = gnp(12, 0.4, &mut rng(7));
        let b = gnp(12, 0.4, &mut rng(7));
        assert_eq!(a, b);
    }

    #[test]
    fn regular_is_regular() {
        let g = random_regular(14, 3, &mut rng(1)).unwrap();
        assert!((0..14).all(|v| g.degree(v) == 3));
        assert!(random_regular(5, 3, &mut rng(1)).is_err());
    }

    #[test]
    fn bounded_degree() {
        let g = gnp_bounded(18, 0.5, 4, &mut rng(3));
        assert!(g.max_degree() <= 4);
    }

    #[test]
    fn set_systems_coverable() {
        let s = random_set_system(10, 4, 0.1, &mut rng(2));
        assert!(s.memberships().iter().all(|m| !m.is_empty()));
        assert!(s.sets().iter().all(|set| !set.is_empty()));
    }
}
