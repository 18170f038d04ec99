//! Exact solution sets of linear systems by fraction-free row reduction.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use super::rational::{common_denominator, gcd_all, Rational};
use super::vector::RationalVector;
use super::ExactError;

/// The full rational solution set `particular + span(kernel)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: RationalVector,
    /// Primitive integer vectors, first nonzero entry positive.
    pub kernel: Vec<RationalVector>,
}

impl LinearSolution {
    pub fn is_unique(&self) -> bool {
        self.kernel.is_empty()
    }
}

/// Integer echelon form of an augmented system `[A | b]`.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    cols: usize,
}

fn integer_row(values: impl Iterator<Item = Rational> + Clone) -> Vec<BigInt> {
    let owned: Vec<Rational> = values.collect();
    let den = common_denominator(&owned);
    owned.iter().map(|q| q.numer() * (&den / q.denom())).collect()
}

fn reduce_content(row: &mut [BigInt]) {
    let g = gcd_all(row.iter());
    if !g.is_zero() && !g.is_one() {
        row.iter_mut().for_each(|x| *x = &*x / &g);
    }
}

/// Forward elimination on integer rows; each update row is divided by its
/// content so entries stay small.
fn echelon(a: &RationalMatrix, b: Option<&RationalVector>) -> Echelon {
    let cols = a.cols();
    let mut rows: Vec<Vec<BigInt>> = (0..a.rows())
        .map(|i| {
            let rhs = b.map(|b| b[i].clone());
            integer_row(a.row(i).into_inner().into_iter().chain(rhs))
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let lead = row[c].clone();
            let piv = &pivot_row[c];
            for (x, y) in row.iter_mut().zip(pivot_row) {
                *x = &*x * piv - &lead * y;
            }
            reduce_content(row);
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rows, pivots, cols }
}

pub fn rank(a: &RationalMatrix) -> usize {
    echelon(a, None).pivots.len()
}

/// Solves `A x = b` exactly.
pub fn solve_linear(a: &RationalMatrix, b: &RationalVector) -> Result<LinearSolution, ExactError> {
    if a.rows() != b.len() {
        return Err(ExactError::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let ech = echelon(a, Some(b));
    let n = ech.cols;
    for row in ech.rows.iter().skip(ech.pivots.len()) {
        if !row[n].is_zero() {
            return Err(ExactError::Inconsistent);
        }
    }
    let back_substitute = |rhs_free: &dyn Fn(usize) -> Rational, with_rhs: bool| {
        let mut x = vec![Rational::zero(); n];
        for (j, xj) in x.iter_mut().enumerate() {
            if !ech.pivots.contains(&j) {
                *xj = rhs_free(j);
            }
        }
        for (r, &c) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[r];
            let mut acc = if with_rhs {
                Rational::from_integer(row[n].clone())
            } else {
                Rational::zero()
            };
            for j in c + 1..n {
                if !row[j].is_zero() {
                    acc -= Rational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[c] = acc / Rational::from_integer(row[c].clone());
        }
        RationalVector::new(x)
    };
    let particular = back_substitute(&|_| Rational::zero(), true);
    let kernel = (0..n)
        .filter(|j| !ech.pivots.contains(j))
        .map(|free| {
            back_substitute(&|j| if j == free { Rational::one() } else { Rational::zero() }, false)
                .canonical_direction()
        })
        .collect();
    Ok(LinearSolution { particular, kernel })
}

/// Kernel basis of `A`, in the same normal form as [`solve_linear`].
pub fn kernel(a: &RationalMatrix) -> Vec<RationalVector> {
    let zero = RationalVector::zeros(a.rows());
    solve_linear(a, &zero).map(|s| s.kernel).unwrap_or_default()
}
