//! Exact computation of the cone of semisimple monoids sharing the canonical
//! hyperplane arrangement of a simple root system, together with its face
//! lattice, extremal rays and the supporting arrangement and cross-section
//! machinery.

pub mod arrangement;
pub mod coterie;
pub mod exactla;
pub mod faces;
pub mod rootsys;

pub use exactla::{ConeSystem, LinearConstraint, Rational, RationalMatrix, RationalVector, Relation};
pub use rootsys::{Family, RootSystem, SimpleType};
