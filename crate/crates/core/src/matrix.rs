//! Dense exact linear algebra over rationals: solve, rank, nullspace.
//!
//! Plain Gaussian elimination with first-nonzero pivoting. Exactness makes
//! numerical pivoting strategies irrelevant; canonical reduced fractions
//! keep entry growth bounded at the sizes this crate works with.

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Outcome of an exact linear solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    Inconsistent,
    Underdetermined {
        particular: Vec<Rational>,
        nullspace: Vec<Vec<Rational>>,
    },
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "matrix has {} columns, vector has {} entries",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.at(r, c) * &v[c])
                    .sum::<Rational>()
            })
            .collect())
    }

    /// Appends the rows of `other` below `self`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols && self.rows != 0 && other.rows != 0 {
            return Err(Error::ShapeMismatch("stack: column counts differ".into()));
        }
        let cols = if self.rows == 0 {
            other.cols
        } else {
            self.cols
        };
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let src = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(src) = src else { continue };
            if src != pivot_row {
                for c in 0..m.cols {
                    m.data.swap(src * m.cols + c, pivot_row * m.cols + c);
                }
            }
            let inv = m.at(pivot_row, col).recip();
            for c in col..m.cols {
                let v = m.at(pivot_row, c) * &inv;
                *m.at_mut(pivot_row, c) = v;
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let v = m.at(r, c) - &(&factor * m.at(pivot_row, c));
                        *m.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    /// Exact row rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : Ax = 0}`; empty when the kernel is trivial.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        for &fc in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[fc] = Rational::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -r.at(prow, fc);
            }
            basis.push(v);
        }
        basis
    }

    /// Exact solve of `Ax = rhs`.
    pub fn solve(&self, rhs: &[Rational]) -> Result<LinearSolution> {
        if rhs.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "matrix has {} rows, rhs has {} entries",
                self.rows,
                rhs.len()
            )));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (r, value) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, self.cols) = value.clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(LinearSolution::Inconsistent);
        }
        let mut particular = vec![Rational::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            particular[pcol] = red.at(prow, self.cols).clone();
        }
        if pivots.len() == self.cols {
            return Ok(LinearSolution::Unique(particular));
        }
        Ok(LinearSolution::Underdetermined {
            particular,
            nullspace: self.nullspace(),
        })
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
