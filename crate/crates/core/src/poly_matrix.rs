//! Matrices over `C[t, t^-1]` and their determinants.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::laurent::{ComplexScalar, LaurentPoly};
use crate::{Error, Result};

/// A dense row-major matrix of Laurent polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    /// `t^k * A` for a constant complex matrix `A` given row-major.
    pub fn from_constant(rows: usize, cols: usize, values: &[ComplexScalar], k: i64) -> Result<Self> {
        let entries = values.iter().map(|&c| LaurentPoly::monomial(c, k)).collect();
        Self::new(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Self::new(self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.map(LaurentPoly::neg))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("matrix product".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentPoly::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        PolyMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Largest relative coefficient deviation between corresponding entries.
    pub fn max_entry_distance(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.relative_distance(b))
            .fold(0.0, f64::max)
    }

    /// Largest coefficient magnitude over all entries.
    pub fn norm_inf(&self) -> f64 {
        self.entries.iter().map(LaurentPoly::norm_inf).fold(0.0, f64::max)
    }

    /// Evaluates every entry at `z` (`z` must be nonzero if negative degrees occur).
    pub fn eval(&self, z: ComplexScalar) -> Result<Vec<ComplexScalar>> {
        self.entries.iter().map(|p| p.eval(z)).collect()
    }

    /// Determinant by evaluation at roots of unity and inverse-DFT
    /// interpolation.
    ///
    /// Each row is first multiplied by `t^{s_i}` so all exponents are
    /// nonnegative; the result degree is bounded by the sum of the row
    /// degrees, and the shift is undone at the end.
    pub fn det(&self) -> Result<LaurentPoly> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut shifted = Vec::with_capacity(n * n);
        let mut total_shift = 0;
        let mut degree_bound = 0usize;
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let Some(lo) = row.iter().filter(|p| !p.is_zero()).map(LaurentPoly::min_degree).min() else {
                return Ok(LaurentPoly::zero());
            };
            let hi = row.iter().filter(|p| !p.is_zero()).map(LaurentPoly::max_degree).max().unwrap_or(lo);
            total_shift += lo;
            degree_bound += (hi - lo) as usize;
            shifted.extend(row.iter().map(|p| p.shift(-lo)));
        }

        let points = degree_bound + 1;
        let omega = |k: usize| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / points as f64);
        let mut scratch = vec![Complex64::zero(); n * n];
        let mut values = Vec::with_capacity(points);
        for k in 0..points {
            let z = omega(k);
            for (dst, p) in scratch.iter_mut().zip(&shifted) {
                *dst = p.eval(z)?;
            }
            values.push(lu_det(&mut scratch, n));
        }

        let coeffs = (0..points)
            .map(|m| {
                let sum: Complex64 = values
                    .iter()
                    .enumerate()
                    .map(|(k, v)| v * omega((k * m) % points).conj())
                    .sum();
                sum / points as f64
            })
            .collect();
        Ok(LaurentPoly::new(total_shift, coeffs))
    }

    /// Flattens a grid of equally sized blocks into one matrix.
    pub fn block_assemble(grid: &[Vec<PolyMatrix>]) -> Result<PolyMatrix> {
        let first = grid
            .first()
            .and_then(|row| row.first())
            .ok_or_else(|| Error::DimensionMismatch("empty block grid".into()))?;
        let (br, bc) = (first.rows, first.cols);
        let width = grid[0].len();
        if grid.iter().any(|row| row.len() != width)
            || grid.iter().flatten().any(|b| (b.rows, b.cols) != (br, bc))
        {
            return Err(Error::DimensionMismatch("inconsistent block grid".into()));
        }
        let mut out = Self::zeros(grid.len() * br, width * bc);
        for (bi, row) in grid.iter().enumerate() {
            for (bj, block) in row.iter().enumerate() {
                for i in 0..br {
                    for j in 0..bc {
                        out.set(bi * br + i, bj * bc + j, block.get(i, j).clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Drops block column `j` (0-based) of width `block`.
    pub fn remove_block_column(&self, block: usize, j: usize) -> Result<PolyMatrix> {
        if block == 0 || self.cols % block != 0 || j >= self.cols / block || self.cols == block {
            return Err(Error::DimensionMismatch(format!(
                "cannot remove block column {j} of width {block} from {} columns",
                self.cols
            )));
        }
        let keep: Vec<usize> = (0..self.cols).filter(|c| c / block != j).collect();
        let mut entries = Vec::with_capacity(self.rows * keep.len());
        for i in 0..self.rows {
            entries.extend(keep.iter().map(|&c| self.get(i, c).clone()));
        }
        Self::new(self.rows, keep.len(), entries)
    }
}

/// Determinant of a dense complex matrix by partial-pivoted elimination.
/// Overwrites `a`.
pub fn lu_det(a: &mut [Complex64], n: usize) -> Complex64 {
    let mut det = Complex64::one();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x * n + col].norm().total_cmp(&a[y * n + col].norm()))
            .unwrap_or(col);
        if a[pivot * n + col].is_zero() {
            return Complex64::zero();
        }
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
            }
            det = -det;
        }
        let p = a[col * n + col];
        det *= p;
        for i in col + 1..n {
            let f = a[i * n + col] / p;
            if f.is_zero() {
                continue;
            }
            for j in col..n {
                let v = a[col * n + j];
                a[i * n + j] -= f * v;
            }
        }
    }
    det
}
