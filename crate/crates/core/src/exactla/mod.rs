//! Exact rational linear algebra: scalars, vectors, matrices, linear solving
//! and strict-inequality feasibility. No floating point is used anywhere.

mod fm;
mod matrix;
mod rational;
mod solve;
mod vector;

use thiserror::Error;

pub use fm::{
    feasible, implies, ConeSystem, Feasibility, FourierMotzkin, LinearConstraint, Relation, DEFAULT_CONSTRAINT_CAP,
};
pub use matrix::RationalMatrix;
pub use rational::{
    common_denominator, gcd_all, int, is_integer, parse_rational, primitive_integers, rat, sign, Rational,
};
pub use solve::{kernel, rank, solve_linear, LinearSolution};
pub use vector::RationalVector;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("constraint count {reached} exceeds cap {cap}")]
    ResourceCap { cap: usize, reached: usize },
    #[error("{0}")]
    Parse(String),
}
