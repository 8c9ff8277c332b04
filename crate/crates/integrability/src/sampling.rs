//! Sampling regions, seeded generators, and low-discrepancy point sets.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Axis-aligned box, used both for price-income regions (dimension `n + 1`,
/// income last) and for bundle domains (dimension `n`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl Region {
    /// A box with strictly positive corners and nonempty interior.
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch {
                expected: lo.len(),
                got: hi.len(),
            });
        }
        if lo.iter().any(|&v| !(v > 0.0) || !v.is_finite()) {
            return Err(Error::InvalidInput(
                "region must lie strictly inside the positive orthant".into(),
            ));
        }
        if lo.iter().zip(&hi).any(|(&l, &h)| !(h > l) || !h.is_finite()) {
            return Err(Error::EmptyRegion);
        }
        Ok(Self { lo, hi })
    }

    /// The box `[1/nu, nu]^dim`.
    pub fn delta(nu: u32, dim: usize) -> Result<Self> {
        if nu < 2 {
            return Err(Error::EmptyRegion);
        }
        let nu = nu as f64;
        Self::new(vec![1.0 / nu; dim], vec![nu; dim])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn sample(&self, rng: &mut impl Rng) -> Vec<f64> {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(&l, &h)| rng.gen_range(l..h))
            .collect()
    }

    /// Tensor grid with `points` values per axis (endpoints included).
    pub fn grid(&self, points: usize) -> Vec<Vec<f64>> {
        assert!(points >= 2, "grid needs at least two points per axis");
        let dim = self.dim();
        let mut out = Vec::with_capacity(points.pow(dim as u32));
        let mut idx = vec![0usize; dim];
        loop {
            let point: Vec<f64> = (0..dim)
                .map(|d| {
                    let t = idx[d] as f64 / (points - 1) as f64;
                    self.lo[d] + t * (self.hi[d] - self.lo[d])
                })
                .collect();
            out.push(point);
            let mut d = 0;
            loop {
                idx[d] += 1;
                if idx[d] < points {
                    break;
                }
                idx[d] = 0;
                d += 1;
                if d == dim {
                    return out;
                }
            }
        }
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    assert!(points >= 2);
    (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect()
}

const PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

/// `count` Halton points in `[0,1]^dim`, skipping the origin.
pub fn halton(count: usize, dim: usize) -> Vec<Vec<f64>> {
    assert!(dim <= PRIMES.len(), "halton supports up to 10 dimensions");
    (1..=count as u64)
        .map(|i| (0..dim).map(|d| radical_inverse(i, PRIMES[d])).collect())
        .collect()
}

/// Deterministic low-discrepancy points on the open unit simplex
/// `{p >> 0, sum p_i = 1}` via the sorted-spacings construction.
pub fn simplex_points(count: usize, n: usize) -> Vec<Vec<f64>> {
    assert!(n >= 2);
    halton(count, n - 1)
        .into_iter()
        .map(|mut u| {
            u.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut p = Vec::with_capacity(n);
            let mut prev = 0.0;
            for &v in &u {
                p.push((v - prev).max(1e-12));
                prev = v;
            }
            p.push((1.0 - prev).max(1e-12));
            let s: f64 = p.iter().sum();
            p.iter_mut().for_each(|v| *v /= s);
            p
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn region_rejects_empty_and_nonpositive() {
        assert!(matches!(
            Region::new(vec![1.0, 1.0], vec![1.0, 2.0]),
            Err(Error::EmptyRegion)
        ));
        assert!(Region::new(vec![0.0, 1.0], vec![2.0, 2.0]).is_err());
        assert!(matches!(Region::delta(1, 3), Err(Error::EmptyRegion)));
    }

    #[test]
    fn grid_covers_corners() {
        let r = Region::new(vec![1.0, 2.0], vec![3.0, 4.0]).unwrap();
        let g = r.grid(3);
        assert_eq!(g.len(), 9);
        assert!(g.contains(&vec![1.0, 2.0]));
        assert!(g.contains(&vec![3.0, 4.0]));
    }

    #[test]
    fn simplex_points_sum_to_one() {
        for p in simplex_points(32, 3) {
            let s: f64 = p.iter().sum();
            assert!((s - 1.0).abs() < 1e-12);
            assert!(p.iter().all(|&v| v > 0.0));
        }
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let r = Region::delta(2, 3).unwrap();
        let a: Vec<_> = {
            let mut rng = seeded_rng(7);
            (0..5).map(|_| r.sample(&mut rng)).collect()
        };
        let b: Vec<_> = {
            let mut rng = seeded_rng(7);
            (0..5).map(|_| r.sample(&mut rng)).collect()
        };
        assert_eq!(a, b);
    }
}
