//! Exact feasibility of mixed strict / weak / equality systems.
//!
//! Equalities are removed first by substitution, then the remaining
//! inequalities are projected away one variable at a time (Fourier-Motzkin).
//! A combined constraint is strict iff at least one parent is strict, which
//! keeps open and closed feasibility apart. A witness is rebuilt by walking
//! the elimination back and picking the midpoint of each admissible interval.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, gcd_all, int, Rational};
use super::vector::RationalVector;
use super::ExactError;

pub const DEFAULT_CONSTRAINT_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Greater,
    GreaterEq,
    Equal,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Greater => lhs > rhs,
            Relation::GreaterEq => lhs >= rhs,
            Relation::Equal => lhs == rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Greater => ">",
            Relation::GreaterEq => ">=",
            Relation::Equal => "=",
        }
    }
}

/// `functional . x  REL  bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearConstraint {
    pub functional: RationalVector,
    pub relation: Relation,
    pub bound: Rational,
}

impl LinearConstraint {
    pub fn new(functional: RationalVector, relation: Relation, bound: Rational) -> Self {
        Self {
            functional,
            relation,
            bound,
        }
    }

    /// `functional . x > 0`.
    pub fn strict(functional: RationalVector) -> Self {
        Self::new(functional, Relation::Greater, Rational::zero())
    }

    pub fn weak(functional: RationalVector) -> Self {
        Self::new(functional, Relation::GreaterEq, Rational::zero())
    }

    pub fn equality(functional: RationalVector, bound: Rational) -> Self {
        Self::new(functional, Relation::Equal, bound)
    }

    pub fn with_relation(&self, relation: Relation) -> Self {
        Self::new(self.functional.clone(), relation, self.bound.clone())
    }

    pub fn is_satisfied_by(&self, x: &RationalVector) -> bool {
        self.relation.holds(&self.functional.dot(x), &self.bound)
    }

    /// The complement as a list of alternatives (one for inequalities, two
    /// for an equality).
    pub fn negations(&self) -> Vec<LinearConstraint> {
        let neg = -&self.functional;
        let nb = -&self.bound;
        match self.relation {
            Relation::Greater => vec![Self::new(neg, Relation::GreaterEq, nb)],
            Relation::GreaterEq => vec![Self::new(neg, Relation::Greater, nb)],
            Relation::Equal => vec![
                Self::new(self.functional.clone(), Relation::Greater, self.bound.clone()),
                Self::new(neg, Relation::Greater, nb),
            ],
        }
    }
}

impl fmt::Display for LinearConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.functional.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let coef = if mag.is_one() { String::new() } else { format!("{mag}") };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{coef}x{}", i + 1)?,
                (true, false) => write!(f, "{coef}x{}", i + 1)?,
                (false, true) => write!(f, " - {coef}x{}", i + 1)?,
                (false, false) => write!(f, " + {coef}x{}", i + 1)?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " {} {}", self.relation.symbol(), self.bound)
    }
}

/// An H-representation: a conjunction of linear constraints in `dim`
/// variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSystem {
    dim: usize,
    constraints: Vec<LinearConstraint>,
}

impl ConeSystem {
    pub fn new(dim: usize, constraints: Vec<LinearConstraint>) -> Result<Self, ExactError> {
        if let Some(bad) = constraints.iter().find(|c| c.functional.len() != dim) {
            return Err(ExactError::DimensionMismatch {
                expected: dim,
                found: bad.functional.len(),
            });
        }
        Ok(Self { dim, constraints })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn push(&mut self, c: LinearConstraint) -> Result<(), ExactError> {
        if c.functional.len() != self.dim {
            return Err(ExactError::DimensionMismatch {
                expected: self.dim,
                found: c.functional.len(),
            });
        }
        self.constraints.push(c);
        Ok(())
    }

    pub fn with(&self, extra: impl IntoIterator<Item = LinearConstraint>) -> Result<Self, ExactError> {
        let mut s = self.clone();
        for c in extra {
            s.push(c)?;
        }
        Ok(s)
    }

    pub fn is_satisfied_by(&self, x: &RationalVector) -> bool {
        x.len() == self.dim && self.constraints.iter().all(|c| c.is_satisfied_by(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(RationalVector),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(&self) -> Option<&RationalVector> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible => None,
        }
    }
}

/// Decides feasibility with the default constraint cap.
pub fn feasible(system: &ConeSystem) -> Result<Feasibility, ExactError> {
    FourierMotzkin::default().run(system)
}

/// True iff every point of `system` satisfies `c`.
pub fn implies(system: &ConeSystem, c: &LinearConstraint) -> Result<bool, ExactError> {
    for neg in c.negations() {
        if feasible(&system.with([neg])?)?.is_feasible() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct FourierMotzkin {
    pub max_constraints: usize,
    /// Elimination order for the inequality phase; defaults to `0..dim`.
    pub order: Option<Vec<usize>>,
}

impl Default for FourierMotzkin {
    fn default() -> Self {
        Self {
            max_constraints: DEFAULT_CONSTRAINT_CAP,
            order: None,
        }
    }
}

/// Inequality `coeffs . x  (> or >=)  bound`, scaled to primitive integers.
#[derive(Clone, Debug)]
struct Ineq {
    coeffs: Vec<Rational>,
    bound: Rational,
    strict: bool,
}

impl Ineq {
    fn normalized(mut self) -> Self {
        let den = common_denominator(self.coeffs.iter().chain(std::iter::once(&self.bound)));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|q| q.numer() * (&den / q.denom())).collect();
        let g = gcd_all(&ints);
        if g.is_zero() {
            return self;
        }
        let factor = Rational::new(den, g);
        for c in &mut self.coeffs {
            *c *= &factor;
        }
        self.bound *= &factor;
        self
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn constant_holds(&self) -> bool {
        if self.strict {
            self.bound.is_negative()
        } else {
            !self.bound.is_positive()
        }
    }
}

/// Keeps the tightest inequality per direction and drops satisfied constants.
/// Returns `None` when a constant inequality is violated.
fn tighten(ineqs: Vec<Ineq>) -> Option<Vec<Ineq>> {
    let mut best: HashMap<Vec<Rational>, usize> = HashMap::new();
    let mut out: Vec<Ineq> = Vec::new();
    for q in ineqs {
        let q = q.normalized();
        if q.is_constant() {
            if !q.constant_holds() {
                return None;
            }
            continue;
        }
        match best.get(&q.coeffs) {
            Some(&i) => {
                let cur = &mut out[i];
                if q.bound > cur.bound || (q.bound == cur.bound && q.strict && !cur.strict) {
                    *cur = q;
                }
            }
            None => {
                best.insert(q.coeffs.clone(), out.len());
                out.push(q);
            }
        }
    }
    Some(out)
}

/// `x_var = (bound - sum_{j != var} coeffs_j x_j) / coeffs_var`.
struct Substitution {
    var: usize,
    coeffs: Vec<Rational>,
    bound: Rational,
}

impl FourierMotzkin {
    pub fn with_cap(max_constraints: usize) -> Self {
        Self {
            max_constraints,
            ..Self::default()
        }
    }

    pub fn with_order(order: Vec<usize>) -> Self {
        Self {
            order: Some(order),
            ..Self::default()
        }
    }

    pub fn run(&self, system: &ConeSystem) -> Result<Feasibility, ExactError> {
        let dim = system.dim();
        let mut eqs: Vec<(Vec<Rational>, Rational)> = Vec::new();
        let mut ineqs: Vec<Ineq> = Vec::new();
        for c in system.constraints() {
            let coeffs = c.functional.as_slice().to_vec();
            match c.relation {
                Relation::Equal => eqs.push((coeffs, c.bound.clone())),
                Relation::Greater | Relation::GreaterEq => ineqs.push(Ineq {
                    coeffs,
                    bound: c.bound.clone(),
                    strict: c.relation == Relation::Greater,
                }),
            }
        }

        // Equality phase.
        let mut subs: Vec<Substitution> = Vec::new();
        while let Some((coeffs, bound)) = eqs.pop() {
            let Some(var) = coeffs.iter().position(|c| !c.is_zero()) else {
                if bound.is_zero() {
                    continue;
                }
                return Ok(Feasibility::Infeasible);
            };
            let pivot = coeffs[var].clone();
            let substitute = |target: &mut Vec<Rational>, target_bound: &mut Rational| {
                let t = target[var].clone();
                if t.is_zero() {
                    return;
                }
                let factor = &t / &pivot;
                for (x, y) in target.iter_mut().zip(&coeffs) {
                    *x -= &factor * y;
                }
                *target_bound -= &factor * &bound;
            };
            for (c, b) in eqs.iter_mut() {
                substitute(c, b);
            }
            for q in ineqs.iter_mut() {
                substitute(&mut q.coeffs, &mut q.bound);
            }
            subs.push(Substitution { var, coeffs, bound });
        }

        let eliminated: Vec<usize> = subs.iter().map(|s| s.var).collect();
        let order: Vec<usize> = match &self.order {
            Some(o) => {
                let mut seen = vec![false; dim];
                for &v in o {
                    if v >= dim || seen[v] {
                        return Err(ExactError::Parse(format!("invalid elimination order {o:?}")));
                    }
                    seen[v] = true;
                }
                o.iter().copied().filter(|v| !eliminated.contains(v)).collect()
            }
            None => (0..dim).filter(|v| !eliminated.contains(v)).collect(),
        };

        // Inequality phase: stages[k] holds the system before eliminating order[k].
        let Some(mut current) = tighten(ineqs) else {
            return Ok(Feasibility::Infeasible);
        };
        let mut stages: Vec<Vec<Ineq>> = Vec::with_capacity(order.len());
        for &var in &order {
            let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
            for q in &current {
                if q.coeffs[var].is_positive() {
                    lower.push(q);
                } else if q.coeffs[var].is_negative() {
                    upper.push(q);
                } else {
                    rest.push(q.clone());
                }
            }
            let projected = rest.len() + lower.len() * upper.len();
            if projected > self.max_constraints {
                return Err(ExactError::ResourceCap {
                    cap: self.max_constraints,
                    reached: projected,
                });
            }
            for lo in &lower {
                for up in &upper {
                    // lo: a x_v + ... (>) b with a > 0; up: -c x_v + ... (>) d with c > 0.
                    let a = lo.coeffs[var].clone();
                    let c = -up.coeffs[var].clone();
                    let coeffs = lo.coeffs.iter().zip(&up.coeffs).map(|(x, y)| &c * x + &a * y).collect();
                    rest.push(Ineq {
                        coeffs,
                        bound: &c * &lo.bound + &a * &up.bound,
                        strict: lo.strict || up.strict,
                    });
                }
            }
            let Some(next) = tighten(rest) else {
                return Ok(Feasibility::Infeasible);
            };
            stages.push(std::mem::replace(&mut current, next));
        }
        // Every variable is gone; `tighten` already checked the constants.
        debug_assert!(current.is_empty());

        let mut x = vec![Rational::zero(); dim];
        for (stage, &var) in stages.iter().zip(&order).rev() {
            x[var] = choose_value(stage, var, &x);
        }
        for s in subs.iter().rev() {
            let rest = s
                .coeffs
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != s.var)
                .fold(Rational::zero(), |acc, (j, c)| acc + c * &x[j]);
            x[s.var] = (&s.bound - rest) / &s.coeffs[s.var];
        }
        let witness = RationalVector::new(x);
        debug_assert!(system.is_satisfied_by(&witness), "witness fails its system");
        Ok(Feasibility::Feasible(witness))
    }
}

/// Picks a value of `x_var` satisfying every constraint of `stage`, given the
/// already-fixed later variables (the rest of `x` is ignored for `var`).
fn choose_value(stage: &[Ineq], var: usize, x: &[Rational]) -> Rational {
    let mut lower: Option<(Rational, bool)> = None;
    let mut upper: Option<(Rational, bool)> = None;
    for q in stage {
        let a = &q.coeffs[var];
        if a.is_zero() {
            continue;
        }
        let others = q
            .coeffs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != var)
            .fold(Rational::zero(), |acc, (j, c)| acc + c * &x[j]);
        let limit = (&q.bound - others) / a;
        if a.is_positive() {
            let replace = match &lower {
                None => true,
                Some((v, s)) => limit > *v || (limit == *v && q.strict && !s),
            };
            if replace {
                lower = Some((limit, q.strict));
            }
        } else {
            let replace = match &upper {
                None => true,
                Some((v, s)) => limit < *v || (limit == *v && q.strict && !s),
            };
            if replace {
                upper = Some((limit, q.strict));
            }
        }
    }
    match (lower, upper) {
        (Some((lo, _)), Some((hi, _))) => {
            if lo == hi {
                lo
            } else {
                (lo + hi) / int(2)
            }
        }
        (Some((lo, _)), None) => lo + Rational::one(),
        (None, Some((hi, _))) => hi - Rational::one(),
        (None, None) => Rational::zero(),
    }
}
