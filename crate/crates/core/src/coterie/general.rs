//! The per-hyperplane membership criterion for an arbitrary arrangement.
//!
//! An instance carries the structure map `theta*` (a matrix from root
//! coordinates to the character space of the centre) and the valuations
//! `nu_i`, one per fundamental hyperplane, with `nu_i o theta* = -l_i`.
//! `r_i(delta)` is the point on the `lambda`-side normal line of `H_i` with
//! `nu_i(theta*(r_i)) = nu_i(delta)`; `delta` is a member iff for every `i`
//! some strictly dominant `x_i` lies on `r_i + H_i` and strictly below every
//! other `r_j + H_j`.

use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::arrangement::{content_lines, parse_header, parse_row, Arrangement, ArrangementError};
use crate::exactla::{
    feasible, kernel, solve_linear, ConeSystem, ExactError, Feasibility, LinearConstraint, Rational, RationalMatrix,
    RationalVector, Relation,
};
use crate::rootsys::RootSystem;

use super::CoterieError;

#[derive(Clone, Debug)]
pub struct GeneralCoterieInstance {
    arr: Arrangement,
    theta_star: RationalMatrix,
    nu: Vec<RationalVector>,
}

impl GeneralCoterieInstance {
    pub fn new(arr: Arrangement, theta_star: RationalMatrix, nu: Vec<RationalVector>) -> Result<Self, CoterieError> {
        let n = arr.root_system().rank();
        if theta_star.cols() != n {
            return Err(ExactError::DimensionMismatch {
                expected: n,
                found: theta_star.cols(),
            }
            .into());
        }
        if nu.len() != arr.fundamental().len() {
            return Err(CoterieError::Precondition(format!(
                "{} valuations for {} hyperplanes",
                nu.len(),
                arr.fundamental().len()
            )));
        }
        let inst = Self { arr, theta_star, nu };
        for (i, v) in inst.nu.iter().enumerate() {
            if v.len() != inst.theta_star.rows() {
                return Err(ExactError::DimensionMismatch {
                    expected: inst.theta_star.rows(),
                    found: v.len(),
                }
                .into());
            }
            let l = inst.arr.fundamental()[i].functional();
            if inst.composite(i) != -l {
                return Err(CoterieError::Precondition(format!(
                    "nu_{} o theta* is not -l_{}",
                    i + 1,
                    i + 1
                )));
            }
        }
        Ok(inst)
    }

    /// The canonical arrangement with `theta*` the identity and `nu_i` the
    /// `i`-th coordinate.
    pub fn canonical(rs: Arc<RootSystem>) -> Self {
        let n = rs.rank();
        let nu = (0..n).map(|i| RationalVector::unit(n, i)).collect();
        Self::new(Arrangement::canonical(rs), RationalMatrix::identity(n), nu)
            .expect("canonical instance is consistent")
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arr
    }

    pub fn root_system(&self) -> &RootSystem {
        self.arr.root_system()
    }

    pub fn theta_star(&self) -> &RationalMatrix {
        &self.theta_star
    }

    pub fn nu(&self) -> &[RationalVector] {
        &self.nu
    }

    pub fn len(&self) -> usize {
        self.nu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nu.is_empty()
    }

    /// `nu_i o theta*` as a functional on root coordinates.
    pub fn composite(&self, i: usize) -> RationalVector {
        self.theta_star.vec_mul(&self.nu[i]).expect("validated dimensions")
    }

    pub fn valuation(&self, i: usize, delta: &RationalVector) -> Rational {
        self.nu[i].dot(delta)
    }

    fn check_delta(&self, delta: &RationalVector) -> Result<(), CoterieError> {
        if delta.len() != self.theta_star.rows() {
            return Err(ExactError::DimensionMismatch {
                expected: self.theta_star.rows(),
                found: delta.len(),
            }
            .into());
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<(), CoterieError> {
        if i >= self.len() {
            return Err(CoterieError::Precondition(format!("no hyperplane with index {i}")));
        }
        Ok(())
    }
}

/// Solves `(r, mu) = 0` for `mu` in `H_i` together with
/// `nu_i(theta*(r)) = nu_i(delta)`.
pub fn r_i_general(
    inst: &GeneralCoterieInstance,
    i: usize,
    delta: &RationalVector,
) -> Result<RationalVector, CoterieError> {
    inst.check_index(i)?;
    inst.check_delta(delta)?;
    let rs = inst.root_system();
    let g = inst.composite(i);
    if g.is_zero() {
        return Err(CoterieError::Degenerate(format!("nu_{} o theta* vanishes", i + 1)));
    }
    let hyperplane = kernel(&RationalMatrix::from_rows(vec![g.clone()])?);
    let mut rows: Vec<RationalVector> = hyperplane
        .iter()
        .map(|mu| rs.form().mul_vec(mu).expect("rank-length kernel vector"))
        .collect();
    rows.push(g);
    let mut rhs = RationalVector::zeros(rows.len());
    rhs[rows.len() - 1] = inst.valuation(i, delta);
    let sol = match solve_linear(&RationalMatrix::from_rows(rows)?, &rhs) {
        Ok(s) => s,
        Err(ExactError::Inconsistent) => {
            return Err(CoterieError::Degenerate(format!("no r_{} exists", i + 1)));
        }
        Err(e) => return Err(e.into()),
    };
    if !sol.is_unique() {
        return Err(CoterieError::Degenerate(format!("r_{} is not unique", i + 1)));
    }
    Ok(sol.particular)
}

/// `u_i(lambda) = nu_i(delta - theta*(lambda))` compared with
/// `eps_i (r_i - lambda, r_i)`, `eps_i = nu_i(delta) / (r_i, r_i)`.
pub fn u_identity_check(
    inst: &GeneralCoterieInstance,
    i: usize,
    delta: &RationalVector,
    lam: &RationalVector,
) -> Result<bool, CoterieError> {
    let rs = inst.root_system();
    let r = r_i_general(inst, i, delta)?;
    let norm = rs.inner(&r, &r)?;
    if norm.is_zero() {
        return Err(CoterieError::Degenerate(format!("(r_{0}, r_{0}) = 0", i + 1)));
    }
    let image = inst.theta_star.mul_vec(lam)?;
    let lhs = inst.valuation(i, &(delta - &image));
    let eps = inst.valuation(i, delta) / norm;
    let rhs = eps * rs.inner(&(&r - lam), &r)?;
    Ok(lhs == rhs)
}

/// Feasibility data for one hyperplane index.
#[derive(Clone, Debug)]
pub struct IndexCheck {
    pub r: RationalVector,
    pub system: ConeSystem,
    pub verdict: Feasibility,
}

#[derive(Clone, Debug)]
pub struct GeneralMembership {
    pub checks: Vec<IndexCheck>,
}

impl GeneralMembership {
    pub fn is_member(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.is_feasible())
    }
}

pub fn general_member_report(
    inst: &GeneralCoterieInstance,
    delta: &RationalVector,
) -> Result<GeneralMembership, CoterieError> {
    inst.check_delta(delta)?;
    for i in 0..inst.len() {
        if inst.valuation(i, delta).is_negative() {
            return Err(CoterieError::Precondition(format!("nu_{}(delta) < 0", i + 1)));
        }
    }
    let rs = inst.root_system();
    let n = rs.rank();
    let rs_list = (0..inst.len())
        .map(|i| r_i_general(inst, i, delta))
        .collect::<Result<Vec<_>, _>>()?;
    let dominance: Vec<LinearConstraint> = rs.dominance_rows().into_iter().map(LinearConstraint::strict).collect();
    let mut checks = Vec::with_capacity(inst.len());
    for i in 0..inst.len() {
        let mut cs = dominance.clone();
        for (j, r) in rs_list.iter().enumerate() {
            // (r - x, r) = (r, r) - (F r) . x
            let fr = rs.form().mul_vec(r)?;
            let rr = fr.dot(r);
            if j == i {
                cs.push(LinearConstraint::equality(fr, rr));
            } else {
                cs.push(LinearConstraint::new(-&fr, Relation::Greater, -rr));
            }
        }
        let system = ConeSystem::new(n, cs)?;
        let verdict = feasible(&system)?;
        checks.push(IndexCheck {
            r: rs_list[i].clone(),
            system,
            verdict,
        });
    }
    Ok(GeneralMembership { checks })
}

pub fn general_member(inst: &GeneralCoterieInstance, delta: &RationalVector) -> Result<bool, CoterieError> {
    Ok(general_member_report(inst, delta)?.is_member())
}

/// Arrangement file followed by a `theta` block (one row per character
/// coordinate, `rank` entries each) and a `nu` block (one valuation per
/// fundamental hyperplane). Entries may be rationals `p/q`.
///
/// ```text
/// type A2
/// -1 0
/// 0 -1
/// theta
/// 1 0
/// 0 1
/// nu
/// 1 0
/// 0 1
/// ```
pub fn parse_instance(text: &str) -> Result<GeneralCoterieInstance, CoterieError> {
    #[derive(PartialEq)]
    enum Section {
        Functionals,
        Theta,
        Nu,
    }
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(ArrangementError::Parse {
        line: 0,
        message: "empty instance file".into(),
    })?;
    let stype = parse_header(hl, header)?;
    let mut section = Section::Functionals;
    let (mut functionals, mut theta, mut nu) = (Vec::new(), Vec::new(), Vec::new());
    for (line, body) in lines {
        match body {
            "theta" if section == Section::Functionals => section = Section::Theta,
            "nu" if section == Section::Theta => section = Section::Nu,
            _ => {
                let row = parse_row(line, body)?;
                match section {
                    Section::Functionals => {
                        if !row.iter().all(crate::exactla::is_integer) {
                            return Err(ArrangementError::Parse {
                                line,
                                message: "functional entries must be integers".into(),
                            }
                            .into());
                        }
                        functionals.push(row)
                    }
                    Section::Theta => theta.push(row),
                    Section::Nu => nu.push(row),
                }
            }
        }
    }
    if section != Section::Nu {
        return Err(ArrangementError::Parse {
            line: 0,
            message: "missing `theta` or `nu` block".into(),
        }
        .into());
    }
    if theta.is_empty() {
        return Err(ArrangementError::Parse {
            line: 0,
            message: "empty `theta` block".into(),
        }
        .into());
    }
    let arr = Arrangement::new(Arc::new(RootSystem::build(stype)), functionals)?;
    GeneralCoterieInstance::new(arr, RationalMatrix::from_rows(theta)?, nu)
}
