//! Seeded sampling shared by the integration tests.
#![allow(dead_code)]

use coterie::exactla::{int, rat, Rational, RationalVector};
use coterie::faces::extremal_rays;
use coterie::RootSystem;
use num_traits::Signed;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub const MAX_DENOM: i64 = 60;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational in `[lo, hi]` with denominator at most 60.
pub fn rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    let d = rng.gen_range(1..=MAX_DENOM);
    rat(rng.gen_range(lo * d..=hi * d), d)
}

/// Rational in `(0, hi]` with denominator at most 60.
pub fn positive(rng: &mut ChaCha8Rng, hi: i64) -> Rational {
    let d = rng.gen_range(1..=MAX_DENOM);
    rat(rng.gen_range(1..=hi * d), d)
}

pub fn box_point(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> RationalVector {
    (0..n).map(|_| rational(rng, lo, hi)).collect()
}

/// Rescales into `[-2, 4]^n` and rounds every coordinate down to a random
/// denominator at most 60.
pub fn snap(rng: &mut ChaCha8Rng, x: &RationalVector) -> RationalVector {
    let max = x.iter().map(|q| q.abs()).max().unwrap_or_else(|| int(0));
    let x = if max > int(4) {
        x.scale(&(int(4) / max))
    } else {
        x.clone()
    };
    x.iter()
        .map(|q| {
            let d = rng.gen_range(1..=MAX_DENOM);
            rat((q * int(d)).floor().to_integer().try_into().unwrap(), d)
        })
        .collect()
}

/// Strictly dominant: positive combination of every fundamental weight.
pub fn strictly_dominant(rng: &mut ChaCha8Rng, rs: &RootSystem) -> RationalVector {
    (0..rs.rank()).fold(RationalVector::zeros(rs.rank()), |acc, a| {
        &acc + &rs.fundamental_weight(a).unwrap().scale(&positive(rng, 3))
    })
}

pub struct RaySampler {
    rays: Vec<RationalVector>,
    total: RationalVector,
    weights: Vec<RationalVector>,
    n: usize,
}

impl RaySampler {
    pub fn new(rs: &RootSystem) -> Self {
        let rays: Vec<RationalVector> = extremal_rays(rs).rays.into_iter().map(|(_, r)| r).collect();
        let total = rays.iter().fold(RationalVector::zeros(rs.rank()), |acc, r| &acc + r);
        let weights = (0..rs.rank()).map(|a| rs.fundamental_weight(a).unwrap()).collect();
        Self {
            rays,
            total,
            weights,
            n: rs.rank(),
        }
    }

    /// The sum of all rays plus a few random rays: an interior point.
    pub fn interior(&self, rng: &mut ChaCha8Rng) -> RationalVector {
        let p = (0..3).fold(self.total.scale(&positive(rng, 2)), |acc, _| &acc + &self.ray(rng));
        p.scale(&positive(rng, 2))
    }

    /// A sum of at most three rays: often on the boundary.
    pub fn closed(&self, rng: &mut ChaCha8Rng) -> RationalVector {
        let k = rng.gen_range(1..=self.rays.len().min(3));
        (0..k).fold(RationalVector::zeros(self.n), |acc, _| &acc + &self.ray(rng))
    }

    /// A random ray scaled by a positive rational.
    pub fn ray(&self, rng: &mut ChaCha8Rng) -> RationalVector {
        self.rays[rng.gen_range(0..self.rays.len())].scale(&positive(rng, 3))
    }

    /// Positive combination of every fundamental weight.
    pub fn dominant(&self, rng: &mut ChaCha8Rng) -> RationalVector {
        self.weights.iter().fold(RationalVector::zeros(self.n), |acc, w| {
            &acc + &w.scale(&positive(rng, 3))
        })
    }
}

/// A point of `[-2, 4]^n` with denominators at most 60: uniform, or an
/// interior or boundary point of the cone snapped onto that grid.
pub fn box_mixed(rng: &mut ChaCha8Rng, rs: &RootSystem, sampler: &RaySampler) -> RationalVector {
    match rng.gen_range(0..4) {
        0 => box_point(rng, rs.rank(), -2, 4),
        1 => {
            let p = sampler.interior(rng);
            snap(rng, &p)
        }
        2 => {
            let p = sampler.closed(rng);
            snap(rng, &p)
        }
        _ => {
            let p = sampler.dominant(rng);
            snap(rng, &p)
        }
    }
}
