//! Cross-section polytopes `C(delta) = C ∩ (y - P0)` and their Weyl orbits.

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::exactla::{feasible, solve_linear, ConeSystem, LinearConstraint, RationalMatrix, RationalVector, Relation};
use crate::rootsys::RootSystem;

use super::CoterieError;

/// Largest rank for which vertices are enumerated.
pub const VERTEX_RANK_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossSection {
    pub y: RationalVector,
    /// Dominance rows first, then `y_b - lambda_b >= 0` per root coordinate.
    pub system: ConeSystem,
}

impl CrossSection {
    pub fn is_empty(&self) -> Result<bool, CoterieError> {
        Ok(!feasible(&self.system)?.is_feasible())
    }

    /// Vertices by exact enumeration of `rank`-subsets of active constraints.
    pub fn vertices(&self) -> Result<Vec<RationalVector>, CoterieError> {
        let n = self.system.dim();
        if n > VERTEX_RANK_BOUND {
            return Err(CoterieError::RankBound {
                rank: n,
                bound: VERTEX_RANK_BOUND,
            });
        }
        let cs = self.system.constraints();
        let mut found = BTreeSet::new();
        let mut subset: Vec<usize> = (0..n).collect();
        loop {
            let rows = subset.iter().map(|&k| cs[k].functional.clone()).collect();
            let rhs: RationalVector = subset.iter().map(|&k| cs[k].bound.clone()).collect();
            if let Ok(sol) = solve_linear(&RationalMatrix::from_rows(rows)?, &rhs) {
                if sol.is_unique() && self.system.is_satisfied_by(&sol.particular) {
                    found.insert(sol.particular);
                }
            }
            if !next_subset(&mut subset, cs.len()) {
                break;
            }
        }
        Ok(found.into_iter().collect())
    }
}

/// Advances to the next `k`-subset of `0..m` in lexicographic order.
fn next_subset(subset: &mut [usize], m: usize) -> bool {
    let k = subset.len();
    let Some(pos) = (0..k).rev().find(|&i| subset[i] < m - k + i) else {
        return false;
    };
    subset[pos] += 1;
    for i in pos + 1..k {
        subset[i] = subset[i - 1] + 1;
    }
    true
}

pub fn cross_section(rs: &RootSystem, y: &RationalVector) -> Result<CrossSection, CoterieError> {
    let n = rs.rank();
    if y.len() != n {
        return Err(crate::rootsys::RootSystemError::DimensionMismatch {
            expected: n,
            found: y.len(),
        }
        .into());
    }
    if y.iter().any(Signed::is_negative) {
        return Err(CoterieError::Precondition(format!("y = {y} is not in P0")));
    }
    let mut cs: Vec<LinearConstraint> = rs.dominance_rows().into_iter().map(LinearConstraint::weak).collect();
    for b in 0..n {
        cs.push(LinearConstraint::new(
            -&RationalVector::unit(n, b),
            Relation::GreaterEq,
            -y[b].clone(),
        ));
    }
    Ok(CrossSection {
        y: y.clone(),
        system: ConeSystem::new(n, cs)?,
    })
}

/// Whether the face `lambda_alpha = y_alpha` of the cross section meets the
/// open Weyl chamber.
pub fn wall_meets_open_chamber(rs: &RootSystem, cs: &CrossSection, alpha: usize) -> Result<bool, CoterieError> {
    let n = rs.rank();
    let extra = rs
        .dominance_rows()
        .into_iter()
        .map(LinearConstraint::strict)
        .chain([LinearConstraint::equality(
            RationalVector::unit(n, alpha),
            cs.y[alpha].clone(),
        )]);
    Ok(feasible(&cs.system.with(extra)?)?.is_feasible())
}

/// Weyl orbit of the vertex set of `cs`, sorted and deduplicated. Fails when
/// the Weyl group has more than `cap` elements.
pub fn orbit_polytope_vertices(
    rs: &RootSystem,
    cs: &CrossSection,
    cap: usize,
) -> Result<Vec<RationalVector>, CoterieError> {
    let group = rs.weyl_group(cap)?;
    let vertices = cs.vertices()?;
    let mut out = BTreeSet::new();
    for w in &group {
        for v in &vertices {
            out.insert(w.apply(v));
        }
    }
    Ok(out.into_iter().collect())
}
