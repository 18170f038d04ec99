//! Faces of the closed cone indexed by orientations of the Dynkin diagram.
//!
//! Each edge `i - j` (`i < j`) carries the closed condition
//! `lower a_i <= a_j <= upper a_i`. Orienting the edge `i -> j` makes the
//! upper bound tight, `i <- j` the lower one, and a neutral edge leaves both
//! weak. Orientations are serialized as strings over `>`, `<`, `-` in the
//! sorted edge order.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::coterie::{constraint_functional, inequalities, member, ConstraintKind, Method, Mode};
use crate::exactla::{
    feasible, implies, rank, solve_linear, ConeSystem, ExactError, LinearConstraint, Rational, RationalMatrix,
    RationalVector, Relation,
};
use crate::rootsys::RootSystem;

pub const DEFAULT_CUBE_RANK_BOUND: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FaceError {
    #[error("orientation has {found} edges, diagram has {expected}")]
    EdgeMismatch { expected: usize, found: usize },
    #[error("invalid orientation character {0:?}")]
    Parse(char),
    #[error("rank {rank} exceeds the bound {bound}")]
    RankBound { rank: usize, bound: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeOrientation {
    /// `i -> j`
    Right,
    /// `i -- j`
    Neutral,
    /// `i <- j`
    Left,
}

impl EdgeOrientation {
    pub const ALL: [EdgeOrientation; 3] = [EdgeOrientation::Right, EdgeOrientation::Neutral, EdgeOrientation::Left];

    pub fn symbol(self) -> char {
        match self {
            EdgeOrientation::Right => '>',
            EdgeOrientation::Neutral => '-',
            EdgeOrientation::Left => '<',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation(Vec<EdgeOrientation>);

impl Orientation {
    pub fn new(edges: Vec<EdgeOrientation>) -> Self {
        Self(edges)
    }

    pub fn neutral(edges: usize) -> Self {
        Self(vec![EdgeOrientation::Neutral; edges])
    }

    pub fn edges(&self) -> &[EdgeOrientation] {
        &self.0
    }

    pub fn oriented_count(&self) -> usize {
        self.0.iter().filter(|&&e| e != EdgeOrientation::Neutral).count()
    }

    pub fn is_vertex(&self) -> bool {
        self.oriented_count() == self.0.len()
    }

    fn check(&self, rs: &RootSystem) -> Result<(), FaceError> {
        if self.0.len() != rs.edges().len() {
            return Err(FaceError::EdgeMismatch {
                expected: rs.edges().len(),
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

impl FromStr for Orientation {
    type Err = FaceError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '>' => Ok(EdgeOrientation::Right),
                '-' => Ok(EdgeOrientation::Neutral),
                '<' => Ok(EdgeOrientation::Left),
                other => Err(FaceError::Parse(other)),
            })
            .collect::<Result<_, _>>()
            .map(Self)
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|e| write!(f, "{}", e.symbol()))
    }
}

/// All `3^(rank-1)` orientations in lexicographic order (`> < - < <`).
pub fn all_orientations(rs: &RootSystem) -> Vec<Orientation> {
    product(rs.edges().len(), &EdgeOrientation::ALL)
}

/// The `2^(rank-1)` fully oriented diagrams, `>` before `<`.
pub fn vertex_orientations(rs: &RootSystem) -> Vec<Orientation> {
    product(rs.edges().len(), &[EdgeOrientation::Right, EdgeOrientation::Left])
}

fn product(len: usize, alphabet: &[EdgeOrientation]) -> Vec<Orientation> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |&e| {
                    let mut p = prefix.clone();
                    p.push(e);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Orientation).collect()
}

/// The closed edge condition made tight by orienting edge `(i, j)`.
fn tight_kind(i: usize, j: usize, e: EdgeOrientation) -> Option<ConstraintKind> {
    match e {
        // a_i = (c_{i,j} / c_{j,j}) a_j
        EdgeOrientation::Right => Some(ConstraintKind::Pair { beta: i, alpha: j }),
        // a_j = (c_{j,i} / c_{i,i}) a_i
        EdgeOrientation::Left => Some(ConstraintKind::Pair { beta: j, alpha: i }),
        EdgeOrientation::Neutral => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub orientation: Orientation,
    pub system: ConeSystem,
    pub dim: usize,
}

impl Face {
    pub fn equalities(&self) -> Vec<&LinearConstraint> {
        self.system
            .constraints()
            .iter()
            .filter(|c| c.relation == Relation::Equal)
            .collect()
    }

    /// The system with every non-equality made strict; feasible iff the face
    /// has a relative interior of the expected shape.
    pub fn relative_interior(&self) -> ConeSystem {
        let cs = self
            .system
            .constraints()
            .iter()
            .map(|c| match c.relation {
                Relation::Equal => c.clone(),
                _ => c.with_relation(Relation::Greater),
            })
            .collect();
        ConeSystem::new(self.system.dim(), cs).expect("same dimension")
    }
}

pub fn face_of(rs: &RootSystem, f: &Orientation) -> Result<Face, FaceError> {
    f.check(rs)?;
    let desc = inequalities(rs, true);
    let tight: Vec<ConstraintKind> = rs
        .edges()
        .iter()
        .zip(f.edges())
        .filter_map(|(&(i, j), &e)| tight_kind(i, j, e))
        .collect();
    let cs: Vec<LinearConstraint> = desc
        .kinds
        .iter()
        .zip(desc.closed_system.constraints())
        .map(|(k, c)| {
            if tight.contains(k) {
                c.with_relation(Relation::Equal)
            } else {
                c.clone()
            }
        })
        .collect();
    let eq_rows: Vec<RationalVector> = tight.iter().map(|&k| constraint_functional(rs, k)).collect();
    let eq_rank = if eq_rows.is_empty() {
        0
    } else {
        rank(&RationalMatrix::from_rows(eq_rows)?)
    };
    Ok(Face {
        orientation: f.clone(),
        system: ConeSystem::new(rs.rank(), cs)?,
        dim: rs.rank() - eq_rank,
    })
}

/// `f >= g`: `f` arises from `g` by replacing some arrows with broken lines.
pub fn poset_order(f: &Orientation, g: &Orientation) -> Result<bool, FaceError> {
    if f.0.len() != g.0.len() {
        return Err(FaceError::EdgeMismatch {
            expected: f.0.len(),
            found: g.0.len(),
        });
    }
    Ok(f.0.iter().zip(&g.0).all(|(&fe, &ge)| {
        use EdgeOrientation::*;
        (ge != Neutral || fe == Neutral) && (fe != Right || ge == Right) && (fe != Left || ge == Left)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayAnomaly {
    pub orientation: Orientation,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalRays {
    pub rays: Vec<(Orientation, RationalVector)>,
    pub anomalies: Vec<RayAnomaly>,
}

/// Last coordinate 1 when it is nonzero, otherwise the primitive integer
/// vector with positive first nonzero entry.
fn normalize_ray(v: &RationalVector) -> RationalVector {
    let last = &v[v.len() - 1];
    if last.is_zero() {
        v.canonical_direction()
    } else {
        v.scale(&(Rational::one() / last))
    }
}

fn ray_for(rs: &RootSystem, f: &Orientation) -> Result<RationalVector, String> {
    let face = face_of(rs, f).map_err(|e| e.to_string())?;
    let eqs: Vec<RationalVector> = face.equalities().iter().map(|c| c.functional.clone()).collect();
    let ray = if eqs.is_empty() {
        // rank one: the cone is the half-line a_1 >= 0
        RationalVector::unit(rs.rank(), 0)
    } else {
        let sol = solve_linear(
            &RationalMatrix::from_rows(eqs).map_err(|e| e.to_string())?,
            &RationalVector::zeros(face.equalities().len()),
        )
        .map_err(|e| e.to_string())?;
        match sol.kernel.as_slice() {
            [k] => k.clone(),
            ks => return Err(format!("equality system has a {}-dimensional kernel", ks.len())),
        }
    };
    let ray = if ray.iter().any(Signed::is_negative) {
        -&ray
    } else {
        ray
    };
    let ray = normalize_ray(&ray);
    if !ray.all_positive() {
        return Err(format!("ray {ray} leaves the open positive orthant"));
    }
    if !face.system.is_satisfied_by(&ray) {
        return Err(format!("ray {ray} violates a closed inequality"));
    }
    // in rank one the ray is the whole cone
    if rs.rank() > 1 && member(rs, &ray, Mode::Open, Method::Edges).unwrap_or(true) {
        return Err(format!("ray {ray} lies in the open cone"));
    }
    Ok(ray)
}

/// One ray per fully oriented diagram; any failure is reported as an anomaly
/// instead of being dropped.
pub fn extremal_rays(rs: &RootSystem) -> ExtremalRays {
    let results: Vec<(Orientation, Result<RationalVector, String>)> = vertex_orientations(rs)
        .into_par_iter()
        .map(|f| {
            let r = ray_for(rs, &f);
            (f, r)
        })
        .collect();
    let mut rays = Vec::new();
    let mut anomalies = Vec::new();
    for (f, r) in results {
        match r {
            Ok(v) => rays.push((f, v)),
            Err(reason) => anomalies.push(RayAnomaly { orientation: f, reason }),
        }
    }
    ExtremalRays { rays, anomalies }
}

/// Element of the face lattice of a cube: per coordinate `0`, `1` or `*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CubeCoord {
    Zero,
    One,
    Star,
}

/// `x <= y` in the face lattice of the cube.
pub fn cube_le(x: &[CubeCoord], y: &[CubeCoord]) -> bool {
    x.iter().zip(y).all(|(a, b)| *b == CubeCoord::Star || a == b)
}

pub fn cube_image(f: &Orientation) -> Vec<CubeCoord> {
    f.0.iter()
        .map(|e| match e {
            EdgeOrientation::Left => CubeCoord::Zero,
            EdgeOrientation::Right => CubeCoord::One,
            EdgeOrientation::Neutral => CubeCoord::Star,
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeReport {
    pub faces: usize,
    /// `histogram[d]` counts faces of dimension `d`.
    pub dim_histogram: Vec<usize>,
    pub order_isomorphic: bool,
    pub dimensions_consistent: bool,
    pub relative_interiors_nonempty: bool,
    pub covers_consistent: bool,
    pub failures: Vec<String>,
}

impl CubeReport {
    pub fn is_isomorphic(&self) -> bool {
        self.order_isomorphic
            && self.dimensions_consistent
            && self.relative_interiors_nonempty
            && self.covers_consistent
    }
}

/// Bit-per-edge form of an orientation for the all-pairs order check.
#[derive(Clone, Copy, Debug)]
struct OrientationMasks {
    neutral: u64,
    right: u64,
    left: u64,
}

impl OrientationMasks {
    fn new(f: &Orientation) -> Self {
        let mut m = Self {
            neutral: 0,
            right: 0,
            left: 0,
        };
        for (k, e) in f.edges().iter().enumerate() {
            let bit = 1u64 << k;
            match e {
                EdgeOrientation::Neutral => m.neutral |= bit,
                EdgeOrientation::Right => m.right |= bit,
                EdgeOrientation::Left => m.left |= bit,
            }
        }
        m
    }

    /// Same rules as [`poset_order`].
    fn ge(&self, g: &Self) -> bool {
        g.neutral & !self.neutral == 0 && self.right & !g.right == 0 && self.left & !g.left == 0
    }
}

/// Bit-per-coordinate form of a cube face.
#[derive(Clone, Copy, Debug)]
struct CubeMasks {
    zero: u64,
    one: u64,
    star: u64,
}

impl CubeMasks {
    fn new(x: &[CubeCoord]) -> Self {
        let mut m = Self {
            zero: 0,
            one: 0,
            star: 0,
        };
        for (k, c) in x.iter().enumerate() {
            let bit = 1u64 << k;
            match c {
                CubeCoord::Zero => m.zero |= bit,
                CubeCoord::One => m.one |= bit,
                CubeCoord::Star => m.star |= bit,
            }
        }
        m
    }

    /// Same rule as [`cube_le`].
    fn le(&self, y: &Self) -> bool {
        ((self.zero ^ y.zero) | (self.one ^ y.one) | (self.star ^ y.star)) & !y.star == 0
    }
}

/// `a` implies `c` syntactically: same functional and bound, relation at
/// least as strong.
fn subsumes(a: &LinearConstraint, c: &LinearConstraint) -> bool {
    a.functional == c.functional
        && a.bound == c.bound
        && (a.relation == c.relation || c.relation == Relation::GreaterEq)
}

/// `face(g)` is contained in `face(f)`: every constraint of `f`'s system is
/// implied by `g`'s. Syntactically subsumed constraints need no feasibility
/// run.
pub fn face_contains(outer: &Face, inner: &Face) -> Result<bool, FaceError> {
    let inner_cs = inner.system.constraints();
    for (k, c) in outer.system.constraints().iter().enumerate() {
        if inner_cs.get(k).is_some_and(|a| subsumes(a, c)) || inner_cs.iter().any(|a| subsumes(a, c)) {
            continue;
        }
        if !implies(&inner.system, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn cube_isomorphism_check(rs: &RootSystem) -> Result<bool, FaceError> {
    Ok(cube_report(rs, DEFAULT_CUBE_RANK_BOUND)?.is_isomorphic())
}

/// Compares `(F, >=)` with the face lattice of the `(rank-1)`-cube and
/// checks the geometry of every face and every cover relation.
pub fn cube_report(rs: &RootSystem, rank_bound: usize) -> Result<CubeReport, FaceError> {
    let n = rs.rank();
    if n > rank_bound {
        return Err(FaceError::RankBound {
            rank: n,
            bound: rank_bound,
        });
    }
    let orientations = all_orientations(rs);
    let images: Vec<Vec<CubeCoord>> = orientations.iter().map(cube_image).collect();
    let mut failures = Vec::new();

    let distinct: std::collections::HashSet<&Vec<CubeCoord>> = images.iter().collect();
    let expected = 3usize.pow(rs.edges().len() as u32);
    let mut order_isomorphic = distinct.len() == orientations.len() && orientations.len() == expected;
    if !order_isomorphic {
        failures.push(format!(
            "{} orientations, {} distinct images, expected {expected}",
            orientations.len(),
            distinct.len()
        ));
    }
    let masks: Vec<OrientationMasks> = orientations.iter().map(OrientationMasks::new).collect();
    let cube_masks: Vec<CubeMasks> = images.iter().map(|x| CubeMasks::new(x)).collect();
    let order_failures: Vec<String> = (0..orientations.len())
        .into_par_iter()
        .flat_map_iter(|a| {
            let (orientations, masks, cube_masks) = (&orientations, &masks, &cube_masks);
            (0..orientations.len()).filter_map(move |b| {
                let poset = masks[a].ge(&masks[b]);
                let cube = cube_masks[b].le(&cube_masks[a]);
                (poset != cube).then(|| format!("order mismatch {} vs {}", orientations[a], orientations[b]))
            })
        })
        .collect();
    if !order_failures.is_empty() {
        order_isomorphic = false;
        failures.extend(order_failures.into_iter().take(10));
    }

    let faces: Vec<Face> = orientations
        .par_iter()
        .map(|f| face_of(rs, f))
        .collect::<Result<_, _>>()?;
    let mut dim_histogram = vec![0; n + 1];
    let mut dimensions_consistent = true;
    for face in &faces {
        dim_histogram[face.dim] += 1;
        if face.dim != n - face.orientation.oriented_count() {
            dimensions_consistent = false;
            failures.push(format!("face {} has dimension {}", face.orientation, face.dim));
        }
    }

    // The sum of the rays below a face certifies its relative interior; FM
    // decides when the certificate fails.
    let rays = extremal_rays(rs);
    let ray_masks: Vec<OrientationMasks> = rays.rays.iter().map(|(g, _)| OrientationMasks::new(g)).collect();
    let interior: Vec<Result<bool, ExactError>> = faces
        .par_iter()
        .zip(&masks)
        .map(|(face, mask)| {
            let system = face.relative_interior();
            let below = rays.rays.iter().zip(&ray_masks).filter(|(_, m)| mask.ge(m));
            let sum = below.fold(RationalVector::zeros(n), |acc, ((_, r), _)| &acc + r);
            if system.is_satisfied_by(&sum) {
                return Ok(true);
            }
            Ok(feasible(&system)?.is_feasible())
        })
        .collect();
    let mut relative_interiors_nonempty = true;
    for (face, ok) in faces.iter().zip(interior) {
        if !ok? {
            relative_interiors_nonempty = false;
            failures.push(format!("face {} has empty relative interior", face.orientation));
        }
    }

    // Covers: g is f with one neutral edge oriented.
    let index: std::collections::HashMap<&Orientation, usize> =
        orientations.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let cover_failures: Vec<Result<Option<String>, FaceError>> = faces
        .par_iter()
        .flat_map_iter(|outer| {
            let (faces, index) = (&faces, &index);
            outer
                .orientation
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e == EdgeOrientation::Neutral)
                .flat_map(move |(pos, _)| {
                    [EdgeOrientation::Right, EdgeOrientation::Left]
                        .into_iter()
                        .map(move |e| {
                            let mut g = outer.orientation.clone();
                            g.0[pos] = e;
                            let inner = &faces[index[&g]];
                            if inner.dim + 1 != outer.dim {
                                return Ok(Some(format!(
                                    "cover {} > {} does not drop dimension by one",
                                    outer.orientation, g
                                )));
                            }
                            if !face_contains(outer, inner)? {
                                return Ok(Some(format!("face {g} not contained in face {}", outer.orientation)));
                            }
                            Ok(None)
                        })
                })
        })
        .collect();
    let mut covers_consistent = true;
    for r in cover_failures {
        if let Some(msg) = r? {
            covers_consistent = false;
            failures.push(msg);
        }
    }

    Ok(CubeReport {
        faces: faces.len(),
        dim_histogram,
        order_isomorphic,
        dimensions_consistent,
        relative_interiors_nonempty,
        covers_consistent,
        failures,
    })
}
