//! Square and rectangular matrices with polynomial entries.

use std::fmt;

use crate::poly::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring, rows, cols, entries: vec![ring.zero(); rows * cols] }
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Polynomial>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        PolyMatrix { ring, rows: nrows, cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// `x·Id - self`.
    pub fn characteristic_matrix(&self, x: &Polynomial) -> PolyMatrix {
        assert_eq!(self.rows, self.cols, "square matrix expected");
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                out.set(i, j, if i == j { x - a } else { -a });
            }
        }
        out
    }

    /// The matrix with row `r` and column `c` deleted.
    pub fn without(&self, r: usize, c: usize) -> PolyMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { ring: self.ring, rows: self.rows - 1, cols: self.cols - 1, entries }
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "square matrix expected");
        let n = self.rows;
        if n == 0 {
            return self.ring.one();
        }
        let mut m: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = self.ring.one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return self.ring.zero();
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev).expect("Bareiss step is exact");
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate { -det } else { det }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, p) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
