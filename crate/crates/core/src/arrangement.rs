//! Weyl-stable arrangements of oriented hyperplanes, the canonical
//! arrangement of a root system, the classifying-map lattice data, and the
//! lattice-level membership test for the enveloping monoid.
//!
//! A hyperplane `(H, l)` is stored through its integral functional `l`,
//! written in the basis dual to the simple roots, so `l(x) = l . a` for
//! `x = sum a_b b`. The kernel `H` is implicit.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactla::{gcd_all, is_integer, parse_rational, Rational, RationalMatrix, RationalVector};
use crate::rootsys::{RootSystem, RootSystemError, SimpleType};

pub const DEFAULT_ORBIT_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("functional {index} has length {found}, expected {expected}")]
    Dimension {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("functional {0} is zero")]
    ZeroFunctional(usize),
    #[error("functional {0} is not integral")]
    NotIntegral(usize),
    #[error("functional {0} violates l(-alpha) >= 0 for some simple root")]
    Orientation(usize),
    #[error("functionals {0} and {1} share a kernel and orientation (nondegeneracy)")]
    Nondegeneracy(usize, usize),
    #[error("arrangement has no fundamental functionals")]
    Empty,
    #[error("classifying map row {0} is zero")]
    DegenerateRow(usize),
    #[error("weight is not dominant")]
    NotDominant,
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// Oriented hyperplane `(ker l, l)` with an integral functional `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedHyperplane {
    functional: RationalVector,
}

impl OrientedHyperplane {
    pub fn new(functional: RationalVector) -> Option<Self> {
        if functional.is_zero() || !functional.iter().all(is_integer) {
            return None;
        }
        Some(Self { functional })
    }

    pub fn from_i64s(values: &[i64]) -> Option<Self> {
        Self::new(RationalVector::from_i64s(values))
    }

    pub fn functional(&self) -> &RationalVector {
        &self.functional
    }

    pub fn eval(&self, x: &RationalVector) -> Rational {
        self.functional.dot(x)
    }

    /// The primitive functional on the same ray; equal for two hyperplanes
    /// exactly when they share a kernel and orientation.
    pub fn primitive(&self) -> Self {
        Self {
            functional: RationalVector::from_integers(&self.functional.primitive()),
        }
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive() == *self
    }

    /// `l o w^{-1}` for a matrix `w` on root coordinates.
    pub fn transform_by_inverse(&self, w_inverse: &RationalMatrix) -> Self {
        Self {
            functional: w_inverse.vec_mul(&self.functional).expect("rank mismatch"),
        }
    }
}

impl fmt::Display for OrientedHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.functional.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orbit {
    NotComputed,
    Explicit(Vec<OrientedHyperplane>),
    /// Generation stopped at the cap; `partial` members were found.
    Implicit {
        partial: usize,
    },
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    rs: Arc<RootSystem>,
    fundamental: Vec<OrientedHyperplane>,
    orbit: Orbit,
}

impl Arrangement {
    /// Validates integrality, the orientation condition `l(-alpha) >= 0` and
    /// nondegeneracy (no two members on the same oriented ray).
    pub fn new(rs: Arc<RootSystem>, functionals: Vec<RationalVector>) -> Result<Self, ArrangementError> {
        if functionals.is_empty() {
            return Err(ArrangementError::Empty);
        }
        let n = rs.rank();
        let mut fundamental = Vec::with_capacity(functionals.len());
        let mut rays: HashMap<OrientedHyperplane, usize> = HashMap::new();
        for (index, l) in functionals.into_iter().enumerate() {
            if l.len() != n {
                return Err(ArrangementError::Dimension {
                    index,
                    expected: n,
                    found: l.len(),
                });
            }
            if l.is_zero() {
                return Err(ArrangementError::ZeroFunctional(index));
            }
            let h = OrientedHyperplane::new(l).ok_or(ArrangementError::NotIntegral(index))?;
            // l(-alpha) = -l_alpha
            if h.functional.iter().any(Signed::is_positive) {
                return Err(ArrangementError::Orientation(index));
            }
            if let Some(&first) = rays.get(&h.primitive()) {
                return Err(ArrangementError::Nondegeneracy(first, index));
            }
            rays.insert(h.primitive(), index);
            fundamental.push(h);
        }
        Ok(Self {
            rs,
            fundamental,
            orbit: Orbit::NotComputed,
        })
    }

    /// One hyperplane `Span(Delta \ alpha)` per simple root, with functional
    /// `nu_alpha(beta) = -delta_{alpha beta}`.
    pub fn canonical(rs: Arc<RootSystem>) -> Self {
        let n = rs.rank();
        let functionals = (0..n).map(|a| -&RationalVector::unit(n, a)).collect();
        Self::new(rs, functionals).expect("canonical arrangement is valid")
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.rs)
    }

    pub fn fundamental(&self) -> &[OrientedHyperplane] {
        &self.fundamental
    }

    pub fn orbit(&self) -> &Orbit {
        &self.orbit
    }

    /// Closes the fundamental hyperplanes under `w(H, l) = (w(H), l o w^{-1})`,
    /// one primitive functional per oriented hyperplane.
    pub fn weyl_orbit(&self, cap: usize) -> Arrangement {
        let gens = self.rs.simple_reflections();
        let mut seen: HashSet<OrientedHyperplane> = HashSet::new();
        let mut members = Vec::new();
        let mut queue = VecDeque::new();
        for h in &self.fundamental {
            let p = h.primitive();
            if seen.insert(p.clone()) {
                members.push(p.clone());
                queue.push_back(p);
            }
        }
        let mut orbit = None;
        'outer: while let Some(h) = queue.pop_front() {
            for s in &gens {
                // simple reflections are involutions
                let image = h.transform_by_inverse(&s.matrix);
                if seen.insert(image.clone()) {
                    if members.len() >= cap {
                        orbit = Some(Orbit::Implicit { partial: members.len() });
                        break 'outer;
                    }
                    members.push(image.clone());
                    queue.push_back(image);
                }
            }
        }
        let orbit = orbit.unwrap_or_else(|| {
            members.sort();
            Orbit::Explicit(members)
        });
        Arrangement {
            rs: Arc::clone(&self.rs),
            fundamental: self.fundamental.clone(),
            orbit,
        }
    }

    /// Rows `a*_i = (-l_i(alpha))_alpha` and saturation constants
    /// `k_i = gcd` of row `i`.
    pub fn classifying_map(&self) -> Result<ClassifyingMap, ArrangementError> {
        if self.fundamental.is_empty() {
            return Err(ArrangementError::Empty);
        }
        let rows: Vec<RationalVector> = self.fundamental.iter().map(|h| -&h.functional).collect();
        let mut saturation = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let ints: Vec<BigInt> = row.iter().map(|q| q.numer().clone()).collect();
            let g = gcd_all(&ints);
            if g.is_zero() {
                return Err(ArrangementError::DegenerateRow(i));
            }
            saturation.push(g);
        }
        Ok(ClassifyingMap {
            matrix: RationalMatrix::from_rows(rows).expect("rows share the rank"),
            saturation,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyingMap {
    pub matrix: RationalMatrix,
    pub saturation: Vec<BigInt>,
}

/// Lattice-level test `chi lambda^{-1} in P`: `chi - lambda` must have
/// nonnegative integral root coordinates.
pub fn env_augmented_cone_member(
    rs: &RootSystem,
    chi: &RationalVector,
    lam: &RationalVector,
) -> Result<bool, ArrangementError> {
    if chi.len() != rs.rank() {
        return Err(RootSystemError::DimensionMismatch {
            expected: rs.rank(),
            found: chi.len(),
        }
        .into());
    }
    if !rs.dominant_in_root_coords(lam, false)? {
        return Err(ArrangementError::NotDominant);
    }
    let diff = chi - lam;
    Ok(diff.iter().all(|q| is_integer(q) && !q.is_negative()))
}

/// Non-empty, comment-stripped lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub(crate) fn parse_row(line: usize, text: &str) -> Result<RationalVector, ArrangementError> {
    text.split_whitespace()
        .map(|tok| {
            parse_rational(tok).map_err(|e| ArrangementError::Parse {
                line,
                message: e.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(RationalVector::new)
}

pub(crate) fn parse_header(line: usize, text: &str) -> Result<SimpleType, ArrangementError> {
    let mut parts = text.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some("type"), Some(t), None) => t.parse().map_err(|e: RootSystemError| ArrangementError::Parse {
            line,
            message: e.to_string(),
        }),
        _ => Err(ArrangementError::Parse {
            line,
            message: "expected header `type <family><rank>`".into(),
        }),
    }
}

/// Parses the line-oriented arrangement format:
///
/// ```text
/// # comment
/// type A2
/// -1 0
/// 0 -1
/// ```
pub fn parse_arrangement(text: &str) -> Result<Arrangement, ArrangementError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(ArrangementError::Parse {
        line: 0,
        message: "empty arrangement file".into(),
    })?;
    let stype = parse_header(hl, header)?;
    let rows = lines
        .map(|(line, text)| {
            let row = parse_row(line, text)?;
            if !row.iter().all(is_integer) {
                return Err(ArrangementError::Parse {
                    line,
                    message: "functional entries must be integers".into(),
                });
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Arrangement::new(Arc::new(RootSystem::build(stype)), rows)
}
