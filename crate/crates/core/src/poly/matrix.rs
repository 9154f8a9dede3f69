use std::fmt;
use std::ops::Mul;

use super::bivariate::LaurentST;
use crate::error::Result;

/// Dense matrix over [`LaurentST`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct STMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentST>,
}

impl STMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        STMatrix { rows, cols, data: vec![LaurentST::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentST::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentST>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        STMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[LaurentST] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map(&self, f: impl Fn(&LaurentST) -> LaurentST) -> Self {
        STMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        (0..n).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    /// Determinant by fraction-free (Bareiss) elimination with exact division.
    pub fn det(&self) -> Result<LaurentST> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentST::one());
        }
        let mut a: Vec<Vec<LaurentST>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = LaurentST::one();
        let mut negate = false;
        for k in 0..n - 1 {
            // sparsest nonzero pivot keeps intermediate entries small
            let Some(p) = (k..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].len()) else {
                return Ok(LaurentST::zero());
            };
            if p != k {
                a.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev)?;
                }
                a[i][k] = LaurentST::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }
}

impl std::ops::Index<(usize, usize)> for STMatrix {
    type Output = LaurentST;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentST {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for STMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentST {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &STMatrix {
    type Output = STMatrix;
    fn mul(self, rhs: &STMatrix) -> STMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = STMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] += &prod;
                }
            }
        }
        out
    }
}

impl Mul<&STMatrix> for &LaurentST {
    type Output = STMatrix;
    fn mul(self, rhs: &STMatrix) -> STMatrix {
        rhs.map(|e| self * e)
    }
}

impl fmt::Display for STMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[((i64, i64), i64)]) -> LaurentST {
        LaurentST::from_terms(terms.iter().copied())
    }

    #[test]
    fn det_small() {
        let s = LaurentST::s();
        let t = LaurentST::t();
        let m = STMatrix::from_rows(vec![vec![s.clone(), t.clone()], vec![t.clone(), s.clone()]]);
        assert_eq!(m.det().unwrap(), &(&s * &s) - &(&t * &t));
        assert_eq!(STMatrix::identity(4).det().unwrap(), LaurentST::one());
    }

    #[test]
    fn det_needs_pivoting() {
        let one = LaurentST::one();
        let z = LaurentST::zero();
        let m = STMatrix::from_rows(vec![
            vec![z.clone(), one.clone(), z.clone()],
            vec![one.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), p(&[((1, 0), 1), ((0, 0), -1)])],
        ]);
        assert_eq!(m.det().unwrap(), p(&[((1, 0), -1), ((0, 0), 1)]));
    }

    #[test]
    fn singular() {
        let s = LaurentST::s();
        let m = STMatrix::from_rows(vec![vec![s.clone(), s.clone()], vec![s.clone(), s.clone()]]);
        assert!(m.det().unwrap().is_zero());
    }
}
