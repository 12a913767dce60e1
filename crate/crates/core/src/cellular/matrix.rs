use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::QPoly;

/// A dense matrix of Laurent polynomials over `Q(φ)`.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    data: Vec<QPoly>,
}

impl RingMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix { rows, cols, data: vec![QPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, QPoly::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> QPoly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &QPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: QPoly) {
        self.data[i * self.cols + j] = x;
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &QPoly) {
        self.data[i * self.cols + j].add_assign_ref(x);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// The submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<QPoly> {
        if self.rows != self.cols {
            return Err(Error::Domain("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(QPoly::one());
        }
        let mut a: Vec<Vec<QPoly>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut negate = false;
        let mut prev = QPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(QPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .exact_div(&prev)
                        .ok_or_else(|| Error::Domain("inexact division in elimination".into()))?;
                }
                a[i][k] = QPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as a list of rows of Laurent polynomials.
impl Serialize for RingMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<&[QPoly]> = self.data.chunks(self.cols.max(1)).take(self.rows).collect();
        rows.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::QPhi;

    fn c(i: i64) -> QPoly {
        QPoly::from_int(i)
    }

    #[test]
    fn integer_det() {
        let m = RingMatrix::from_fn(3, 3, |i, j| c([[2, 0, 1], [1, 3, 2], [1, 1, 2]][i][j]));
        assert_eq!(m.det().unwrap(), c(6));
    }

    #[test]
    fn needs_pivot() {
        let m = RingMatrix::from_fn(2, 2, |i, j| c([[0, 1], [1, 0]][i][j]));
        assert_eq!(m.det().unwrap(), c(-1));
    }

    #[test]
    fn singular() {
        let d = QPoly::delta();
        let m = RingMatrix::from_fn(2, 2, |i, _| if i == 0 { d.clone() } else { &d * &d });
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn polynomial_det() {
        let d = QPoly::delta();
        let g = QPoly::constant(QPhi::gamma1());
        let m = RingMatrix::from_fn(2, 2, |i, j| if i == j { d.clone() } else { g.clone() });
        assert_eq!(m.det().unwrap(), &(&d * &d) - &(&g * &g));
    }

    #[test]
    fn product_and_symmetry() {
        let a = RingMatrix::from_fn(2, 3, |i, j| c((i + 2 * j) as i64));
        let p = a.mul(&a.transpose()).unwrap();
        assert!(p.is_symmetric());
        assert_eq!(p.get(0, 0), &c(20));
    }
}
