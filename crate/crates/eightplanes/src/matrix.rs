//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use crate::rational::{format_rational, rat_int, Rational};
use crate::Error;

/// Row-major dense matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Structural("ragged matrix rows".into()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, Error> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::Structural(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<RationalMatrix, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Structural("shape mismatch in subtraction".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &(m.get(r, j) * &f);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by fraction-free elimination on a rational working copy.
    pub fn det(&self) -> Result<Rational, Error> {
        if self.rows != self.cols {
            return Err(Error::Structural("determinant of non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det *= &piv;
            let inv = piv.recip();
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(m.get(c, j) * &f);
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Solve `self * x = b` for a single right-hand side; `None` when
    /// inconsistent or underdetermined to a non-unique solution is fine for
    /// callers that only need one witness.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        if b.len() != self.rows {
            return None;
        }
        let mut aug = RationalMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// SHA-256 of the canonical text serialization (entries in row-major
    /// order as `p/q` strings joined by `,` within rows and `;` between).
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("{}x{}:", self.rows, self.cols));
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_rational).collect();
            h.update(row.join(","));
            h.update(";");
        }
        format!("{:x}", h.finalize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn rank_and_rref() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let (r, piv) = a.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r.get(0, 0), &rat_int(1));
        assert_eq!(r.get(1, 0), &rat_int(0));
    }

    #[test]
    fn vandermonde_det() {
        // 4x4 Vandermonde on 1,2,3,4: det = prod_{i<j}(x_j - x_i) = 12
        let a = m(&[
            vec![1, 1, 1, 1],
            vec![1, 2, 4, 8],
            vec![1, 3, 9, 27],
            vec![1, 4, 16, 64],
        ]);
        assert_eq!(a.det().unwrap(), rat_int(12));
        assert_eq!(a.rank(), 4);
    }

    #[test]
    fn singular_det_and_solve() {
        let a = m(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(a.det().unwrap(), rat_int(0));
        let b = m(&[vec![2, 1], vec![1, 1]]);
        let x = b.solve(&[rat_int(3), rat_int(2)]).unwrap();
        assert_eq!(x, vec![rat_int(1), rat_int(1)]);
        // inconsistent system
        assert!(a.solve(&[rat_int(1), rat_int(0)]).is_none());
    }

    #[test]
    fn matmul_identity() {
        let a = m(&[vec![1, 2], vec![3, 4]]);
        let i = RationalMatrix::identity(2);
        assert_eq!(a.mul(&i).unwrap(), a);
        assert!(a.mul(&m(&[vec![1, 2, 3]])).is_err());
    }

    #[test]
    fn fingerprint_is_stable_and_shape_sensitive() {
        let a = m(&[vec![1, 2], vec![3, 4]]);
        let b = m(&[vec![1, 2, 3, 4]]);
        assert_eq!(a.fingerprint(), a.clone().fingerprint());
        assert_ne!(a.fingerprint(), b.fingerprint());
    }
}
