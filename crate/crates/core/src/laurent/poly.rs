use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{format_complex, ComplexScalar};
use crate::{Error, Result};

/// Relative threshold below which leading and trailing coefficients are dropped.
pub const EPS_TRIM: f64 = 1e-11;
/// Relative threshold for "vanishes at `t = 1`".
pub const EPS_ROOT: f64 = 1e-8;

/// A Laurent polynomial `sum_k coeffs[k] t^{min_degree + k}` over `C`.
///
/// Leading and trailing coefficients are nonzero (relative to [`EPS_TRIM`]);
/// the zero polynomial has no coefficients and `min_degree == 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct LaurentPoly {
    min_degree: i64,
    coeffs: Vec<ComplexScalar>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    #[serde(rename = "minDegree")]
    min_degree: i64,
    coeffs: Vec<[f64; 2]>,
}

impl From<LaurentPoly> for PolyRepr {
    fn from(p: LaurentPoly) -> Self {
        PolyRepr {
            min_degree: p.min_degree,
            coeffs: p.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

impl TryFrom<PolyRepr> for LaurentPoly {
    type Error = String;

    fn try_from(r: PolyRepr) -> std::result::Result<Self, String> {
        if r.coeffs.iter().flatten().any(|x| !x.is_finite()) {
            return Err("non-finite coefficient".into());
        }
        let coeffs = r.coeffs.into_iter().map(|[re, im]| Complex64::new(re, im));
        Ok(LaurentPoly::new(r.min_degree, coeffs.collect()))
    }
}

impl LaurentPoly {
    /// Builds and trims `sum_k coeffs[k] t^{min_degree + k}`.
    pub fn new(min_degree: i64, coeffs: Vec<ComplexScalar>) -> Self {
        let mut p = LaurentPoly { min_degree, coeffs };
        p.trim(EPS_TRIM);
        p
    }

    pub fn from_real(min_degree: i64, coeffs: &[f64]) -> Self {
        Self::new(min_degree, coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly { min_degree: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: ComplexScalar) -> Self {
        Self::monomial(c, 0)
    }

    /// `c t^k`.
    pub fn monomial(c: ComplexScalar, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Complex64::new(1.0, 0.0), 1)
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Highest exponent present; equals `min_degree` for the zero polynomial.
    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.coeffs.len().saturating_sub(1) as i64
    }

    /// Width of the exponent range, `max_degree - min_degree`.
    pub fn span(&self) -> i64 {
        self.coeffs.len().saturating_sub(1) as i64
    }

    pub fn coeffs(&self) -> &[ComplexScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^k` (zero outside the stored range).
    pub fn coeff(&self, k: i64) -> ComplexScalar {
        let i = k - self.min_degree;
        if i < 0 {
            return Complex64::zero();
        }
        self.coeffs.get(i as usize).copied().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> ComplexScalar {
        self.coeffs.last().copied().unwrap_or_default()
    }

    pub fn trailing_coeff(&self) -> ComplexScalar {
        self.coeffs.first().copied().unwrap_or_default()
    }

    pub fn norm_inf(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn norm1(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    /// Drops leading/trailing coefficients with magnitude `<= eps * max|c|`.
    pub fn trim(&mut self, eps: f64) {
        let cut = eps * self.norm_inf();
        let keep = |c: &Complex64| c.norm() > cut;
        match self.coeffs.iter().position(keep) {
            None => *self = LaurentPoly::zero(),
            Some(lo) => {
                let hi = self.coeffs.iter().rposition(keep).unwrap_or(lo);
                self.coeffs.truncate(hi + 1);
                self.coeffs.drain(..lo);
                self.min_degree += lo as i64;
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().max(other.max_degree());
        let coeffs = (lo..=hi).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::new(lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        self.scale(Complex64::new(-1.0, 0.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Complex64::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(self.min_degree + other.min_degree, out)
    }

    pub fn scale(&self, c: ComplexScalar) -> Self {
        Self::new(self.min_degree, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { min_degree: self.min_degree + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Horner evaluation.
    pub fn eval(&self, z: ComplexScalar) -> Result<ComplexScalar> {
        if self.is_zero() {
            return Ok(Complex64::zero());
        }
        if z.is_zero() && self.min_degree < 0 {
            return Err(Error::ZeroWithNegativeDegree);
        }
        let body = self.coeffs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c);
        Ok(body * z.powi(self.min_degree as i32))
    }

    /// Value at `t = 1` (the coefficient sum).
    pub fn eval_one(&self) -> ComplexScalar {
        self.coeffs.iter().sum()
    }

    /// True if `|p(1)| <= EPS_ROOT * ||p||_1`.
    pub fn vanishes_at_one(&self) -> bool {
        self.eval_one().norm() <= EPS_ROOT * self.norm1()
    }

    /// Returns `q` with `p = (t - 1) q` by synthetic division, together with
    /// the magnitude of the discarded remainder.
    pub fn divide_out_t_minus_1(&self) -> Result<(LaurentPoly, f64)> {
        if self.is_zero() {
            return Ok((Self::zero(), 0.0));
        }
        if !self.vanishes_at_one() {
            return Err(Error::NotVanishingAtOne {
                value: self.eval_one().norm(),
                scale: self.norm1(),
            });
        }
        let n = self.coeffs.len();
        let mut q = vec![Complex64::zero(); n - 1];
        let mut carry = Complex64::zero();
        for k in (1..n).rev() {
            carry += self.coeffs[k];
            q[k - 1] = carry;
        }
        let remainder = (carry + self.coeffs[0]).norm();
        Ok((Self::new(self.min_degree, q), remainder))
    }

    /// Coefficientwise comparison relative to the larger sup-norm.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.relative_distance(other) <= tol
    }

    pub fn relative_distance(&self, other: &Self) -> f64 {
        let scale = self.norm_inf().max(other.norm_inf());
        if scale == 0.0 {
            return 0.0;
        }
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().max(other.max_degree());
        (lo..=hi)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
            / scale
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.min_degree + i as i64;
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coef = if c.im == 0.0 { c.re.to_string() } else { format!("({})", format_complex(*c)) };
            match k {
                0 => f.write_str(&coef)?,
                1 => write!(f, "{coef}t")?,
                _ => write!(f, "{coef}t^{k}")?,
            }
        }
        Ok(())
    }
}
