//! Sparsifiers, approximation-preserving reductions and exact oracles for
//! independent set, vertex cover and their relatives, plus the branching
//! root calculus behind the lower bounds.

pub mod analysis;
pub mod error;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod io;
pub mod oracles;
pub mod planarity;
pub mod reductions;
pub mod sparsify;
pub mod validate;

pub use error::{Error, Result};
pub use graph::Graph;
pub use instance::{
    Candidate, CnfInstance, Instance, Literal, Payload, PayloadKind, Problem, SetSystem,
};
pub use oracles::{solve_exact, OracleBudget};
pub use reductions::{compose, GadgetMap, Reduced, Reduction, Step, Transfer};
pub use sparsify::{
    lift_solution, superlinear_sparsify, Mode, SparsificationLeaf, ThresholdPolicy,
};
pub use validate::{validate, Verdict};
