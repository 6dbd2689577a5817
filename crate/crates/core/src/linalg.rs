//! Dense exact linear algebra over [`Scalar`].

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    characteristic: u64,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, characteristic: u64) -> Self {
        Matrix { rows, cols, characteristic, data: vec![Scalar::zero(characteristic); rows * cols] }
    }

    pub fn identity(size: usize, characteristic: u64) -> Self {
        let mut m = Self::zeros(size, size, characteristic);
        for i in 0..size {
            m.set(i, i, Scalar::one(characteristic));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, characteristic: u64) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, characteristic, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[Vec<i64>], characteristic: u64) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| Scalar::from_i64(v, characteristic)).collect()).collect(),
            characteristic,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols, self.characteristic);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = &out.data[i * other.cols + j] + &(a * other.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.characteristic);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = self.get(i, j) - &(&factor * self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(self.characteristic); self.cols];
                v[f] = Scalar::one(self.characteristic);
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self * x = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1, self.characteristic);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let pivots = aug.row_reduce();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(self.characteristic); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n, self.characteristic);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Scalar::one(self.characteristic));
        }
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(AlgebraError::SingularMatrix);
        }
        let mut inv = Matrix::zeros(n, n, self.characteristic);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]], 0);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3, 0));
        let p = Matrix::from_i64(&[vec![1, 1], vec![1, 1]], 0);
        assert_eq!(p.inverse(), Err(AlgebraError::SingularMatrix));
    }

    #[test]
    fn nullspace_dimension() {
        let m = Matrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6]], 0);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            for i in 0..2 {
                let s = (0..3).fold(Scalar::zero(0), |acc, j| &acc + &(m.get(i, j) * &v[j]));
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::from_i64(&[vec![1, 1], vec![1, -1]], 5);
        let x = m.solve(&[Scalar::from_i64(2, 5), Scalar::from_i64(0, 5)]).unwrap();
        assert_eq!(x, vec![Scalar::one(5), Scalar::one(5)]);
        let s = Matrix::from_i64(&[vec![1, 1], vec![2, 2]], 0);
        assert!(s.solve(&[Scalar::one(0), Scalar::one(0)]).is_none());
    }
}
