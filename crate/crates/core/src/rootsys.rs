//! Root-system data for the simple types.
//!
//! Conventions: a vector `x = sum a_b b` is stored by its simple-root
//! coordinates `a_b`; nodes are 0-based internally and printed 1-based. The
//! Cartan matrix satisfies `cartan[i][j] = <alpha_i, alpha_j^vee>`, so the
//! columns of `inverse(cartan^T)` are the fundamental weights in root
//! coordinates and `x` is dominant iff `cartan^T x >= 0`.
//!
//! Node numbering follows the usual pictures: chains `1 - 2 - ... - n`, with
//! the D branch at `n-2`, and the extra E node `n` attached to node 3 (E6),
//! node 4 (E7) or node 5 (E8). Long roots are `alpha_1..alpha_{n-1}` in B,
//! `alpha_n` in C, `alpha_3, alpha_4` in F4 and `alpha_2` in G2.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactla::{int, Rational, RationalMatrix, RationalVector};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("unsupported rank {rank} for type {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("cannot parse root system type {0:?}")]
    Parse(String),
    #[error("node {node} out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Weyl group exceeds cap {0}")]
    GroupTooLarge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn supported_ranks(self) -> std::ops::RangeInclusive<usize> {
        match self {
            Family::A => 1..=12,
            Family::B | Family::C => 2..=12,
            Family::D => 3..=12,
            Family::E => 6..=8,
            Family::F => 4..=4,
            Family::G => 2..=2,
        }
    }

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        if !family.supported_ranks().contains(&rank) {
            return Err(RootSystemError::InvalidRank { family, rank });
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every supported type with rank at most `max_rank`.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        Family::ALL
            .iter()
            .flat_map(|&f| {
                f.supported_ranks()
                    .filter(move |&r| r <= max_rank)
                    .map(move |r| SimpleType { family: f, rank: r })
            })
            .collect()
    }
}

impl FromStr for SimpleType {
    type Err = RootSystemError;

    /// Case-insensitive, e.g. `A4`, `e8`, `G2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(RootSystemError::Parse(s.to_string())),
        };
        let digits = chars.as_str();
        if digits.is_empty() || digits.len() > 3 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(RootSystemError::Parse(s.to_string()));
        }
        let rank: usize = digits.parse().map_err(|_| RootSystemError::Parse(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Diagram edges (0-based, `i < j`) and half squared root lengths.
fn diagram(t: SimpleType) -> (Vec<(usize, usize)>, Vec<i64>) {
    let n = t.rank;
    let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.family {
        Family::A => (chain(n), vec![1; n]),
        Family::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            (chain(n), d)
        }
        Family::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            (chain(n), d)
        }
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (e, vec![1; n])
        }
        Family::E => {
            // chain of n-1 nodes; branch node n attached to node 3 (E6),
            // node 4 (E7) or node 5 (E8), 1-based.
            let mut e = chain(n - 1);
            let attach = n - 4;
            e.push((attach, n - 1));
            (e, vec![1; n])
        }
        Family::F => (chain(4), vec![1, 1, 2, 2]),
        Family::G => (chain(2), vec![1, 3]),
    }
}

/// A simple reflection word with its matrix on root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: RationalMatrix,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            word: Vec::new(),
            matrix: RationalMatrix::identity(rank),
        }
    }

    pub fn apply(&self, v: &RationalVector) -> RationalVector {
        self.matrix.mul_vec(v).expect("weyl element applied to wrong dimension")
    }

    /// `self` followed by `other`, i.e. the map `v -> other(self(v))`.
    pub fn then(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend(&other.word);
        WeylElement {
            word,
            matrix: other.matrix.mul(&self.matrix).expect("rank mismatch"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    stype: SimpleType,
    cartan: RationalMatrix,
    inv_coeffs: RationalMatrix,
    form: RationalMatrix,
    edges: Vec<(usize, usize)>,
}

impl RootSystem {
    pub fn build(stype: SimpleType) -> Self {
        let n = stype.rank;
        let (edges, half_lengths) = diagram(stype);
        let mut form = RationalMatrix::zeros(n, n);
        for i in 0..n {
            form[(i, i)] = int(2 * half_lengths[i]);
        }
        for &(i, j) in &edges {
            let v = int(-half_lengths[i].max(half_lengths[j]));
            form[(i, j)] = v.clone();
            form[(j, i)] = v;
        }
        let cartan = RationalMatrix::from_fn(n, n, |i, j| int(2) * &form[(i, j)] / &form[(j, j)]);
        let inv_coeffs = cartan
            .transpose()
            .inverse()
            .expect("Cartan matrix of a simple type is invertible");
        let mut edges = edges;
        edges.sort();
        Self {
            stype,
            cartan,
            inv_coeffs,
            form,
            edges,
        }
    }

    pub fn from_type_str(s: &str) -> Result<Self, RootSystemError> {
        Ok(Self::build(s.parse()?))
    }

    pub fn simple_type(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> usize {
        self.stype.rank
    }

    pub fn cartan(&self) -> &RationalMatrix {
        &self.cartan
    }

    /// Entry `(b, a)` is `c_{b,a}`, the `b`-coordinate of the fundamental
    /// weight `lambda_a`.
    pub fn inv_coeffs(&self) -> &RationalMatrix {
        &self.inv_coeffs
    }

    pub fn coeff(&self, beta: usize, alpha: usize) -> &Rational {
        &self.inv_coeffs[(beta, alpha)]
    }

    /// Symmetrized bilinear form on simple roots; short roots have norm 2.
    pub fn form(&self) -> &RationalMatrix {
        &self.form
    }

    /// Dynkin edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(i, j)| {
            if i == node {
                Some(j)
            } else if j == node {
                Some(i)
            } else {
                None
            }
        })
    }

    fn check_node(&self, node: usize) -> Result<(), RootSystemError> {
        if node >= self.rank() {
            return Err(RootSystemError::NodeOutOfRange {
                node,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    fn check_len(&self, v: &RationalVector) -> Result<(), RootSystemError> {
        if v.len() != self.rank() {
            return Err(RootSystemError::DimensionMismatch {
                expected: self.rank(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn fundamental_weight(&self, alpha: usize) -> Result<RationalVector, RootSystemError> {
        self.check_node(alpha)?;
        Ok(self.inv_coeffs.col(alpha))
    }

    pub fn simple_root(&self, alpha: usize) -> Result<RationalVector, RootSystemError> {
        self.check_node(alpha)?;
        Ok(RationalVector::unit(self.rank(), alpha))
    }

    /// `(v, w)` under the symmetrized form.
    pub fn inner(&self, v: &RationalVector, w: &RationalVector) -> Result<Rational, RootSystemError> {
        self.check_len(v)?;
        self.check_len(w)?;
        Ok(v.dot(&self.form.mul_vec(w).expect("checked length")))
    }

    /// Coroot pairings `<x, alpha^vee>` for every simple `alpha`.
    pub fn coroot_pairings(&self, x: &RationalVector) -> Result<RationalVector, RootSystemError> {
        self.check_len(x)?;
        Ok(self.cartan.transpose().mul_vec(x).expect("checked length"))
    }

    /// Row `a` is the functional `x -> <x, alpha_a^vee>`.
    pub fn dominance_rows(&self) -> Vec<RationalVector> {
        let ct = self.cartan.transpose();
        (0..self.rank()).map(|i| ct.row(i)).collect()
    }

    /// `s_alpha(x) = x - <x, alpha^vee> alpha` on root coordinates.
    pub fn simple_reflection(&self, alpha: usize) -> Result<WeylElement, RootSystemError> {
        self.check_node(alpha)?;
        let mut m = RationalMatrix::identity(self.rank());
        for beta in 0..self.rank() {
            m[(alpha, beta)] -= &self.cartan[(beta, alpha)];
        }
        Ok(WeylElement {
            word: vec![alpha],
            matrix: m,
        })
    }

    pub fn simple_reflections(&self) -> Vec<WeylElement> {
        (0..self.rank())
            .map(|a| self.simple_reflection(a).expect("valid node"))
            .collect()
    }

    /// All of W by breadth-first closure, failing once more than `cap`
    /// elements have been found.
    pub fn weyl_group(&self, cap: usize) -> Result<Vec<WeylElement>, RootSystemError> {
        let gens = self.simple_reflections();
        let id = WeylElement::identity(self.rank());
        let mut seen: HashSet<RationalMatrix> = HashSet::from([id.matrix.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for s in &gens {
                let next = w.then(s);
                if seen.insert(next.matrix.clone()) {
                    if out.len() >= cap {
                        return Err(RootSystemError::GroupTooLarge(cap));
                    }
                    out.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(out)
    }

    /// Path between two nodes of the (tree) diagram, endpoints included.
    pub fn tree_path(&self, from: usize, to: usize) -> Vec<usize> {
        let n = self.rank();
        let mut parent = vec![usize::MAX; n];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbours(u) {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// `c_{a,g} = (c_{a,b} / c_{b,b}) c_{b,g}` for every `b` strictly inside
    /// the diagram path from `a` to `g`.
    pub fn chain_identity_check(&self) -> bool {
        self.chain_identity_violations().is_empty()
    }

    pub fn chain_identity_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.rank();
        let mut bad = Vec::new();
        for a in 0..n {
            for g in 0..n {
                if a == g {
                    continue;
                }
                let path = self.tree_path(a, g);
                for &b in &path[1..path.len() - 1] {
                    let rhs = self.coeff(a, b) / self.coeff(b, b) * self.coeff(b, g);
                    if *self.coeff(a, g) != rhs {
                        bad.push((a, b, g));
                    }
                }
            }
        }
        bad
    }

    /// `x` in the closed Weyl chamber (`strict`: in its interior).
    pub fn dominant_in_root_coords(&self, x: &RationalVector, strict: bool) -> Result<bool, RootSystemError> {
        let p = self.coroot_pairings(x)?;
        Ok(if strict { p.all_positive() } else { p.all_nonnegative() })
    }

    /// Checks the structural invariants; returns a description of the first
    /// failure.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.rank();
        for i in 0..n {
            if self.cartan[(i, i)] != int(2) {
                return Err(format!("cartan[{i}][{i}] != 2"));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let c = &self.cartan[(i, j)];
                if !(c.is_zero() || *c == int(-1) || *c == int(-2) || *c == int(-3)) {
                    return Err(format!("cartan[{i}][{j}] = {c}"));
                }
                if c.is_zero() != self.cartan[(j, i)].is_zero() {
                    return Err(format!("cartan zero pattern not symmetric at ({i},{j})"));
                }
            }
        }
        let ct = self.cartan.transpose();
        if ct.mul(&self.inv_coeffs).ok() != Some(RationalMatrix::identity(n)) {
            return Err("inv_coeffs is not the inverse of cartan^T".into());
        }
        if !self.inv_coeffs.entries().all(Signed::is_positive) {
            return Err("inv_coeffs has a non-positive entry".into());
        }
        if !self.form.is_symmetric() {
            return Err("form is not symmetric".into());
        }
        let min_norm = (0..n).map(|i| self.form[(i, i)].clone()).min().expect("rank >= 1");
        if min_norm != int(2) {
            return Err(format!("short roots have norm {min_norm}"));
        }
        let from_pairs: BTreeSet<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.cartan[(i, j)].is_zero())
            .collect();
        if from_pairs != self.edges.iter().copied().collect() {
            return Err("edge list disagrees with the Cartan matrix".into());
        }
        if self.edges.len() + 1 != n || self.tree_path(0, n - 1).is_empty() {
            return Err("diagram is not a tree".into());
        }
        Ok(())
    }
}

/// Convenience for tests and examples; panics on bad input.
pub fn root_system(s: &str) -> RootSystem {
    RootSystem::from_type_str(s).expect("valid root system type")
}
