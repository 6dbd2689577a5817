//! Seeded sampling of generic linear data.
//!
//! Coefficients are integers in `[-bound, bound]` in characteristic zero and
//! uniform residues in characteristic `p`. The generator is always created
//! from an explicit seed, so every draw is reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::linalg::Matrix;
use crate::poly::{Polynomial, Ring};
use crate::scalar::Scalar;

pub const DEFAULT_BOUND: i64 = 101;
const RETRY_BUDGET: usize = 64;

#[derive(Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    characteristic: u64,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64, characteristic: u64) -> Self {
        Self::with_bound(seed, characteristic, DEFAULT_BOUND)
    }

    pub fn with_bound(seed: u64, characteristic: u64, bound: i64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), characteristic, bound: bound.max(1) }
    }

    pub fn scalar(&mut self) -> Scalar {
        if self.characteristic == 0 {
            Scalar::from_i64(self.rng.gen_range(-self.bound..=self.bound), 0)
        } else {
            Scalar::from_i64(self.rng.gen_range(0..self.characteristic) as i64, self.characteristic)
        }
    }

    pub fn vector(&mut self, len: usize) -> Vec<Scalar> {
        (0..len).map(|_| self.scalar()).collect()
    }

    /// `rows` linearly independent coefficient rows of length `cols`.
    pub fn independent_rows(&mut self, rows: usize, cols: usize) -> Result<Matrix> {
        if rows > cols {
            return Err(AlgebraError::Precondition(format!("{rows} independent vectors in dimension {cols}")));
        }
        for _ in 0..RETRY_BUDGET {
            let m = Matrix::from_rows((0..rows).map(|_| self.vector(cols)).collect(), self.characteristic);
            if m.rank() == rows {
                return Ok(m);
            }
        }
        Err(AlgebraError::IndependenceFailure)
    }

    pub fn invertible_matrix(&mut self, size: usize) -> Result<Matrix> {
        self.independent_rows(size, size)
    }

    pub fn linear_forms(&mut self, ring: &Ring, count: usize) -> Result<Vec<Polynomial>> {
        let m = self.independent_rows(count, ring.nvars())?;
        Ok((0..count).map(|i| ring.linear_form(m.row(i))).collect())
    }
}

/// `count` independent linear forms, deterministic in `seed`.
pub fn random_linear_forms(ring: &Ring, seed: u64, count: usize) -> Result<Vec<Polynomial>> {
    Sampler::new(seed, ring.characteristic()).linear_forms(ring, count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let r = Ring::projective(3, 0).unwrap();
        let a = random_linear_forms(&r, 0, 2).unwrap();
        let b = random_linear_forms(&r, 0, 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
        assert_ne!(a, random_linear_forms(&r, 1, 2).unwrap());
    }

    #[test]
    fn full_frame_is_invertible() {
        let r = Ring::projective(3, 0).unwrap();
        let forms = random_linear_forms(&r, 7, 4).unwrap();
        let rows = forms
            .iter()
            .map(|f| (0..4).map(|i| f.coefficient(&crate::monomial::Monomial::variable(4, i))).collect())
            .collect();
        assert!(Matrix::from_rows(rows, 0).is_invertible());
    }

    #[test]
    fn tiny_field_independence() {
        let r = Ring::projective(2, 2).unwrap();
        match random_linear_forms(&r, 3, 3) {
            Ok(forms) => assert_eq!(forms.len(), 3),
            Err(e) => assert_eq!(e, AlgebraError::IndependenceFailure),
        }
        assert!(random_linear_forms(&r, 0, 4).is_err());
    }
}
