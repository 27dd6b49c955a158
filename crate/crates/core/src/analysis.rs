//! Branching-vector calculus for vectors of the form `(1, b)`.
//!
//! A branching rule that removes either 1 or `b` vertices gives the
//! recurrence `T(n) = T(n-1) + T(n-b)`, whose growth base is the unique root
//! in `(1, 2)` of `X^b - X^(b-1) - 1`. Everything here is stated in terms of
//! that degree `b`; callers that think in the `X^(p+1) - X^p - 1` indexing
//! pass `b = p + 1`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Bisection steps before giving up on further refinement.
const MAX_BISECTION_STEPS: usize = 200;

/// Slack used when comparing a root against a threshold with strict `<`.
pub const ROOT_COMPARISON_GUARD: f64 = 1e-12;

/// The branching vector `(1, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BranchingVector {
    b: usize,
}

impl BranchingVector {
    pub fn new(b: usize) -> Result<Self> {
        if b < 2 {
            return Err(Error::OutOfRange(format!(
                "branching vector (1, {b}) needs b >= 2"
            )));
        }
        Ok(BranchingVector { b })
    }

    pub fn long_branch(&self) -> usize {
        self.b
    }

    pub fn root(&self) -> BranchingRoot {
        let b = self.b;
        let log_residual = |e: f64| (b - 1) as f64 * e.ln_1p() + e.ln();
        // log_residual is strictly increasing on (0, 1), -inf at 0+ and
        // (b-1) ln 2 > 0 at 1
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..MAX_BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if log_residual(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let excess = if lo > 0.0 && log_residual(lo).abs() < log_residual(hi).abs() {
            lo
        } else {
            hi
        };
        BranchingRoot { b, excess }
    }
}

/// Root of `X^b - X^(b-1) - 1` in `(1, 2)`, stored as `1 + excess` so that
/// the excess keeps full relative precision when the root is close to 1.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BranchingRoot {
    b: usize,
    excess: f64,
}

impl BranchingRoot {
    pub fn degree(&self) -> usize {
        self.b
    }

    /// The root as a plain float.
    pub fn value(&self) -> f64 {
        1.0 + self.excess
    }

    /// `root - 1`.
    pub fn excess(&self) -> f64 {
        self.excess
    }

    /// `r^b - r^(b-1) - 1`, evaluated as `r^(b-1) (r - 1) - 1` in the excess
    /// representation.
    pub fn residual(&self) -> f64 {
        ((self.b - 1) as f64 * self.excess.ln_1p() + self.excess.ln()).exp_m1()
    }

    /// `r^n` for a leaf-count bound; may be `inf` for large `n`.
    pub fn pow(&self, n: usize) -> f64 {
        (n as f64 * self.excess.ln_1p()).exp()
    }
}

/// Root of `X^b - X^(b-1) - 1` in `(1, 2)` by bisection.
pub fn branching_root(b: usize) -> Result<BranchingRoot> {
    Ok(BranchingVector::new(b)?.root())
}

fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda > 1.0 && lambda < 2.0) {
        return Err(Error::OutOfRange(format!(
            "lambda = {lambda} must lie in (1, 2)"
        )));
    }
    Ok(())
}

/// Smallest `p >= 1` such that the root of `X^(p+1) - X^p - 1` is strictly
/// below `lambda` (with a [`ROOT_COMPARISON_GUARD`] margin, so a `lambda`
/// equal to a root in floating point does not count as above it).
pub fn g_of_lambda(lambda: f64) -> Result<usize> {
    check_lambda(lambda)?;
    let target = lambda - 1.0 - ROOT_COMPARISON_GUARD;
    let below = |p: usize| branching_root(p + 1).map(|r| r.excess() < target);
    let mut hi = 1usize;
    while !below(hi)? {
        if hi >= 1 << 52 {
            return Err(Error::OutOfRange(format!(
                "lambda = {lambda} is too close to 1"
            )));
        }
        hi *= 2;
    }
    // below(lo) is false (or lo == 0); below(hi) is true
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if below(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Base of a running time ruled out for a problem reachable from independent
/// set by a reduction of size `alpha * n + beta * m`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LowerBoundInput {
    pub lambda: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl LowerBoundInput {
    pub fn new(lambda: f64, alpha: f64, beta: f64) -> Result<Self> {
        check_lambda(lambda)?;
        for (name, x) in [("alpha", alpha), ("beta", beta)] {
            if !(x.is_finite() && x > 0.0) {
                return Err(Error::OutOfRange(format!("{name} = {x} must be positive")));
            }
        }
        Ok(LowerBoundInput {
            lambda,
            alpha,
            beta,
        })
    }

    /// `lambda^(1 / (alpha + floor(g(lambda)/2) * beta))`.
    pub fn mu(&self) -> Result<f64> {
        let half = (g_of_lambda(self.lambda)? / 2) as f64;
        Ok(self.lambda.powf(1.0 / (self.alpha + half * self.beta)))
    }
}

pub fn mu_lower_bound(lambda: f64, alpha: f64, beta: f64) -> Result<f64> {
    LowerBoundInput::new(lambda, alpha, beta)?.mu()
}

/// `floor(g(lambda)/2) * n_leaf`: the edge budget of a leaf whose maximum
/// degree is below `g(lambda)`.
pub fn leaf_edge_bound(n_leaf: usize, lambda: f64) -> Result<usize> {
    Ok(g_of_lambda(lambda)? / 2 * n_leaf)
}

/// The lambda values of the infeasible-mu table.
pub const TABLE_LAMBDAS: [f64; 3] = [1.1, 1.18, 1.21];
/// The degrees of the parameterized comparison table.
pub const TABLE_DEGREES: [usize; 2] = [3, 4];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MuRow {
    pub lambda: f64,
    pub g: usize,
    pub mu: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamRow {
    pub max_degree: usize,
    /// Base of `(Delta + 1)^alpha` for plain branching.
    pub exhaustive_base: u64,
    /// Base of `2^((Delta - 2) alpha)` after excavating `Delta - 2` sets.
    pub excavation_base: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tables {
    pub mu: Vec<MuRow>,
    pub parameterized: Vec<ParamRow>,
}

/// Both tables: infeasible `mu` for `alpha = beta = 1`, and the
/// parameterized independent-set bases.
pub fn comparison_tables() -> Tables {
    let mu = TABLE_LAMBDAS
        .iter()
        .map(|&lambda| MuRow {
            lambda,
            g: g_of_lambda(lambda).expect("table lambdas are in range"),
            mu: mu_lower_bound(lambda, 1.0, 1.0).expect("table lambdas are in range"),
        })
        .collect();
    let parameterized = TABLE_DEGREES
        .iter()
        .map(|&d| ParamRow {
            max_degree: d,
            exhaustive_base: d as u64 + 1,
            excavation_base: 1u64 << (d - 2),
        })
        .collect();
    Tables { mu, parameterized }
}

impl fmt::Display for Tables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<8} {:>9}  {}", "lambda", "g(lambda)", "infeasible mu")?;
        for row in &self.mu {
            writeln!(
                f,
                "{:<8} {:>9}  {:.4}",
                format!("{:.2}", row.lambda),
                row.g,
                row.mu
            )?;
        }
        writeln!(f)?;
        writeln!(
            f,
            "{:<6} {:<21} {}",
            "Delta", "exhaustive branching", "sparsification"
        )?;
        for row in &self.parameterized {
            writeln!(
                f,
                "{:<6} {:<21} {}",
                row.max_degree,
                format!("{}^alpha", row.exhaustive_base),
                format!("{}^alpha", row.excavation_base)
            )?;
        }
        Ok(())
    }
}
