//! The cone of characters whose semisimple monoids share the canonical
//! arrangement: its closed-form inequality description, membership tests,
//! the general per-hyperplane criterion and cross-section polytopes.
//!
//! For `x = sum a_b b` the open cone is cut out by `a_a > 0` and
//! `a_b > (c_{b,a} / c_{a,a}) a_a` for `b != a`, where `c` is the table of
//! fundamental-weight coefficients. It suffices to impose the second family
//! on Dynkin edges only.

mod cross_section;
mod general;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arrangement::ArrangementError;
use crate::exactla::{ConeSystem, ExactError, LinearConstraint, Rational, RationalVector, Relation};
use crate::rootsys::{RootSystem, RootSystemError, SimpleType};

pub use cross_section::{
    cross_section, orbit_polytope_vertices, wall_meets_open_chamber, CrossSection, VERTEX_RANK_BOUND,
};
pub use general::{
    general_member, general_member_report, parse_instance, r_i_general, u_identity_check, GeneralCoterieInstance,
    GeneralMembership, IndexCheck,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CoterieError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degenerate instance: {0}")]
    Degenerate(String),
    #[error("rank {rank} exceeds the bound {bound}")]
    RankBound { rank: usize, bound: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Open,
    Closed,
}

impl Mode {
    fn relation(self) -> Relation {
        match self {
            Mode::Open => Relation::Greater,
            Mode::Closed => Relation::GreaterEq,
        }
    }

    fn accepts_int(self, value: &BigInt) -> bool {
        match self {
            Mode::Open => value.is_positive(),
            Mode::Closed => !value.is_negative(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Geometric,
    Full,
    Edges,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Geometric, Method::Full, Method::Edges];
}

/// Which closed-form condition a constraint encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstraintKind {
    /// `a_alpha > 0`
    Positive(usize),
    /// `a_beta - (c_{beta,alpha} / c_{alpha,alpha}) a_alpha > 0`
    Pair { beta: usize, alpha: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoterieDescription {
    pub stype: SimpleType,
    pub reduced: bool,
    pub kinds: Vec<ConstraintKind>,
    pub open_system: ConeSystem,
    pub closed_system: ConeSystem,
}

fn pair_functional(rs: &RootSystem, beta: usize, alpha: usize) -> RationalVector {
    let mut f = RationalVector::zeros(rs.rank());
    f[beta] = Rational::from_integer(1.into());
    f[alpha] = -(rs.coeff(beta, alpha) / rs.coeff(alpha, alpha));
    f
}

pub fn constraint_functional(rs: &RootSystem, kind: ConstraintKind) -> RationalVector {
    match kind {
        ConstraintKind::Positive(a) => RationalVector::unit(rs.rank(), a),
        ConstraintKind::Pair { beta, alpha } => pair_functional(rs, beta, alpha),
    }
}

/// Generates the open and closed H-representations. `reduced` restricts the
/// pair conditions to Dynkin edges.
pub fn inequalities(rs: &RootSystem, reduced: bool) -> CoterieDescription {
    let n = rs.rank();
    let mut kinds: Vec<ConstraintKind> = (0..n).map(ConstraintKind::Positive).collect();
    if reduced {
        for &(i, j) in rs.edges() {
            kinds.push(ConstraintKind::Pair { beta: j, alpha: i });
            kinds.push(ConstraintKind::Pair { beta: i, alpha: j });
        }
    } else {
        for beta in 0..n {
            for alpha in (0..n).filter(|&a| a != beta) {
                kinds.push(ConstraintKind::Pair { beta, alpha });
            }
        }
    }
    let build = |mode: Mode| {
        let cs = kinds
            .iter()
            .map(|&k| LinearConstraint::new(constraint_functional(rs, k), mode.relation(), Rational::zero()))
            .collect();
        ConeSystem::new(n, cs).expect("functionals have length rank")
    };
    CoterieDescription {
        stype: rs.simple_type(),
        reduced,
        open_system: build(Mode::Open),
        closed_system: build(Mode::Closed),
        kinds,
    }
}

/// Both bounds of an edge condition `lower a_i < a_j < upper a_i`; built with
/// `i < j`, see [`EdgeCondition::swapped`] for the other reading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCondition {
    pub i: usize,
    pub j: usize,
    pub lower: Rational,
    pub upper: Rational,
}

impl EdgeCondition {
    pub fn new(rs: &RootSystem, i: usize, j: usize) -> Self {
        Self {
            i,
            j,
            lower: rs.coeff(j, i) / rs.coeff(i, i),
            upper: rs.coeff(j, j) / rs.coeff(i, j),
        }
    }

    /// The same condition solved for `a_i` in terms of `a_j`.
    pub fn swapped(&self) -> Self {
        Self {
            i: self.j,
            j: self.i,
            lower: self.upper.recip(),
            upper: self.lower.recip(),
        }
    }

    /// Smallest positive integers with `r a_i > s a_j > t a_i`.
    pub fn cleared(&self) -> (BigInt, BigInt, BigInt) {
        let s = self.upper.denom().lcm(self.lower.denom());
        let r = (&self.upper * Rational::from_integer(s.clone())).to_integer();
        let t = (&self.lower * Rational::from_integer(s.clone())).to_integer();
        let g = r.gcd(&s).gcd(&t);
        (r / &g, s / &g, t / &g)
    }
}

impl fmt::Display for EdgeCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r, s, t) = self.cleared();
        let term = |c: &BigInt, node: usize| {
            if c == &BigInt::from(1) {
                format!("a{}", node + 1)
            } else {
                format!("{c}a{}", node + 1)
            }
        };
        write!(f, "{} > {} > {}", term(&r, self.i), term(&s, self.j), term(&t, self.i))
    }
}

pub fn edge_conditions(rs: &RootSystem) -> Vec<EdgeCondition> {
    rs.edges().iter().map(|&(i, j)| EdgeCondition::new(rs, i, j)).collect()
}

/// `r_alpha(x) = a_alpha / c_{alpha,alpha}`, the multiple of `lambda_alpha`
/// that clears the `alpha` coordinate of `x`.
pub fn r_alpha(rs: &RootSystem, x: &RationalVector, alpha: usize) -> Result<Rational, CoterieError> {
    check_len(rs, x)?;
    if alpha >= rs.rank() {
        return Err(RootSystemError::NodeOutOfRange {
            node: alpha,
            rank: rs.rank(),
        }
        .into());
    }
    Ok(&x[alpha] / rs.coeff(alpha, alpha))
}

fn check_len(rs: &RootSystem, x: &RationalVector) -> Result<(), CoterieError> {
    if x.len() != rs.rank() {
        return Err(RootSystemError::DimensionMismatch {
            expected: rs.rank(),
            found: x.len(),
        }
        .into());
    }
    Ok(())
}

/// Membership tester with the inequality systems and fundamental weights
/// prepared once, for batches of points. Every system involved is
/// homogeneous, so points and functionals are rescaled to primitive integer
/// vectors and compared in integer arithmetic.
#[derive(Clone, Debug)]
pub struct MembershipTester<'a> {
    rs: &'a RootSystem,
    reduced: Vec<Vec<BigInt>>,
    full: OnceLock<Vec<Vec<BigInt>>>,
    /// Positive integer multiples of the fundamental weights.
    weights: Vec<Vec<BigInt>>,
}

fn integer_rows(desc: &CoterieDescription) -> Vec<Vec<BigInt>> {
    desc.open_system
        .constraints()
        .iter()
        .map(|c| c.functional.primitive())
        .collect()
}

fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl<'a> MembershipTester<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Self {
            rs,
            reduced: integer_rows(&inequalities(rs, true)),
            full: OnceLock::new(),
            weights: (0..rs.rank())
                .map(|a| rs.fundamental_weight(a).expect("valid node").primitive())
                .collect(),
        }
    }

    pub fn member(&self, x: &RationalVector, mode: Mode, method: Method) -> Result<bool, CoterieError> {
        check_len(self.rs, x)?;
        let x = x.primitive();
        Ok(match method {
            Method::Geometric => self.geometric(&x, mode),
            Method::Full => self
                .full
                .get_or_init(|| integer_rows(&inequalities(self.rs, false)))
                .iter()
                .all(|f| mode.accepts_int(&int_dot(f, &x))),
            Method::Edges => self.reduced.iter().all(|f| mode.accepts_int(&int_dot(f, &x))),
        })
    }

    /// `r_alpha(x) lambda_alpha` clears coordinate `alpha`; `r_alpha(x)` and
    /// the rest of `x` must be positive (nonnegative when closed). With
    /// `w = k lambda_alpha` the rest is `(w_alpha x - x_alpha w) / w_alpha`.
    fn geometric(&self, x: &[BigInt], mode: Mode) -> bool {
        let n = self.rs.rank();
        (0..n).all(|alpha| {
            let w = &self.weights[alpha];
            if !mode.accepts_int(&x[alpha]) {
                return false;
            }
            (0..n)
                .filter(|&b| b != alpha)
                .all(|b| mode.accepts_int(&(&w[alpha] * &x[b] - &x[alpha] * &w[b])))
        })
    }
}

pub fn member(rs: &RootSystem, x: &RationalVector, mode: Mode, method: Method) -> Result<bool, CoterieError> {
    MembershipTester::new(rs).member(x, mode, method)
}

/// Checks `x + y` stays in the open cone and `r_alpha` is additive.
pub fn additivity_check(rs: &RootSystem, x: &RationalVector, y: &RationalVector) -> Result<bool, CoterieError> {
    let tester = MembershipTester::new(rs);
    for (name, v) in [("x", x), ("y", y)] {
        if !tester.member(v, Mode::Open, Method::Edges)? {
            return Err(CoterieError::Precondition(format!(
                "{name} = {v} is not in the open cone"
            )));
        }
    }
    let sum = x + y;
    let closed = tester.member(&sum, Mode::Open, Method::Edges)?;
    let linear = (0..rs.rank()).all(|a| {
        r_alpha(rs, &sum, a).expect("checked")
            == r_alpha(rs, x, a).expect("checked") + r_alpha(rs, y, a).expect("checked")
    });
    Ok(closed && linear)
}
