use std::ops::Mul;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::laurent::ComplexScalar;
use crate::{Error, Result};

const SL2_DET_TOL: f64 = 1e-9;
const ADJOINT_DET_TOL: f64 = 1e-8;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// A complex `2x2` matrix of determinant one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SL2Matrix(pub [[ComplexScalar; 2]; 2]);

impl SL2Matrix {
    /// Checks `|det - 1| <= 1e-9`.
    pub fn new(m: [[ComplexScalar; 2]; 2]) -> Result<Self> {
        let g = SL2Matrix(m);
        let err = (g.det() - Complex64::one()).norm();
        if err > SL2_DET_TOL {
            return Err(Error::NotUnimodular(err));
        }
        Ok(g)
    }

    pub fn identity() -> Self {
        SL2Matrix([[c(1.0), c(0.0)], [c(0.0), c(1.0)]])
    }

    pub fn diag(a: ComplexScalar) -> Self {
        SL2Matrix([[a, c(0.0)], [c(0.0), a.inv()]])
    }

    pub fn det(&self) -> ComplexScalar {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> ComplexScalar {
        self.0[0][0] + self.0[1][1]
    }

    /// Inverse assuming unit determinant.
    pub fn inverse(&self) -> Self {
        let m = &self.0;
        SL2Matrix([[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]])
    }

    pub fn neg(&self) -> Self {
        SL2Matrix(self.0.map(|row| row.map(|x| -x)))
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { *self };
        (0..n.unsigned_abs()).fold(Self::identity(), |acc, _| acc * base)
    }

    /// Max-entry distance to another matrix.
    pub fn distance(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        d
    }
}

impl Mul for SL2Matrix {
    type Output = SL2Matrix;

    fn mul(self, rhs: SL2Matrix) -> SL2Matrix {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = [[Complex64::zero(); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        SL2Matrix(out)
    }
}

/// A complex `3x3` matrix; the adjoint image of an [`SL2Matrix`] in the
/// basis `(E, H, F)` of `sl(2, C)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdjointMatrix(pub [[ComplexScalar; 3]; 3]);

impl AdjointMatrix {
    pub fn zero() -> Self {
        AdjointMatrix([[Complex64::zero(); 3]; 3])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.0[i][i] = c(1.0);
        }
        m
    }

    /// Wraps a `3x3` matrix, checking `|det - 1| <= 1e-8`.
    pub fn new(m: [[ComplexScalar; 3]; 3]) -> Result<Self> {
        let a = AdjointMatrix(m);
        let err = (a.det() - Complex64::one()).norm();
        if err > ADJOINT_DET_TOL {
            return Err(Error::NotUnimodular(err));
        }
        Ok(a)
    }

    pub fn det(&self) -> ComplexScalar {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn trace(&self) -> ComplexScalar {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    /// Inverse by the adjugate.
    pub fn inverse(&self) -> Self {
        let m = &self.0;
        let d = self.det();
        let mut out = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                let (i1, i2) = ((j + 1) % 3, (j + 2) % 3);
                let (j1, j2) = ((i + 1) % 3, (i + 2) % 3);
                out.0[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / d;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = *self;
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] += other.0[i][j];
            }
        }
        out
    }

    pub fn scale(&self, k: ComplexScalar) -> Self {
        AdjointMatrix(self.0.map(|row| row.map(|x| x * k)))
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { *self };
        (0..n.unsigned_abs()).fold(Self::identity(), |acc, _| acc * base)
    }

    pub fn row_major(&self) -> [ComplexScalar; 9] {
        let m = &self.0;
        [m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2]]
    }

    pub fn max_abs(&self) -> f64 {
        self.row_major().iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    /// Max-entry distance to another matrix.
    pub fn distance(&self, other: &Self) -> f64 {
        let (a, b) = (self.row_major(), other.row_major());
        a.iter().zip(&b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }
}

impl Mul for AdjointMatrix {
    type Output = AdjointMatrix;

    fn mul(self, rhs: AdjointMatrix) -> AdjointMatrix {
        let mut out = AdjointMatrix::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = (0..3).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        out
    }
}

/// Matrix of `X -> g X g^-1` on `sl(2, C)` in the ordered basis
/// `E = [[0,1],[0,0]]`, `H = [[1,0],[0,-1]]`, `F = [[0,0],[1,0]]`.
pub fn adjoint(g: &SL2Matrix) -> Result<AdjointMatrix> {
    let err = (g.det() - Complex64::one()).norm();
    if err > SL2_DET_TOL {
        return Err(Error::NotUnimodular(err));
    }
    let (o, z) = (c(1.0), c(0.0));
    let basis = [
        SL2Matrix([[z, o], [z, z]]),
        SL2Matrix([[o, z], [z, -o]]),
        SL2Matrix([[z, z], [o, z]]),
    ];
    let ginv = g.inverse();
    let mut out = AdjointMatrix::zero();
    for (col, x) in basis.iter().enumerate() {
        let y = (*g * *x * ginv).0;
        // y = e*E + h*H + f*F
        out.0[0][col] = y[0][1];
        out.0[1][col] = y[0][0];
        out.0[2][col] = y[1][0];
    }
    Ok(out)
}
