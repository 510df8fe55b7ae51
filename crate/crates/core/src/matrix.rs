//! Dense exact matrices over a coefficient ring.

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::Coefficient;
use crate::error::{domain, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<C> {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl<C: Coefficient> Matrix<C> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(domain(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(domain("ragged matrix rows"));
        }
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> C + Sync) -> Self {
        let data = (0..rows * cols)
            .into_par_iter()
            .map(|k| f(k / cols, k % cols))
            .collect();
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { C::one() } else { C::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<C>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Exact product; rows are computed in parallel, each entry sequentially.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let t = other.transpose();
        let data = (0..self.rows * other.cols)
            .into_par_iter()
            .map(|k| {
                let (i, j) = (k / other.cols, k % other.cols);
                let mut acc = C::zero();
                for (a, b) in self.row(i).iter().zip(t.row(j)) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_product(a, b);
                    }
                }
                acc
            })
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(domain("matrix shape mismatch"));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect(),
        })
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D + Sync + Send) -> Matrix<D> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.par_iter().map(f).collect(),
        }
    }

    pub fn try_map<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D> + Sync + Send) -> Result<Matrix<D>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.par_iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Entries rendered with `Display`, row by row.
    pub fn render(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect()
    }

    pub fn parse(rows: &[Vec<String>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| C::parse_coeff(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }
}

impl<C: Coefficient> Serialize for Matrix<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.render().serialize(s)
    }
}
