use num_complex::Complex64;
use serde::Serialize;

use super::SINGULAR_TOL;
use crate::laurent::{ComplexScalar, LaurentPoly, RationalFunction};
use crate::{Error, Result};

/// The three denominators appearing in the twist-knot formulas:
/// `y + 2 - x^2`, `y^2 - y x^2 + x^2` and `y^2 - y x^2 + 2 x^2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TwistDenominators {
    pub first: ComplexScalar,
    pub second: ComplexScalar,
    pub middle: ComplexScalar,
}

impl TwistDenominators {
    pub fn new(x2: ComplexScalar, y: ComplexScalar) -> Self {
        TwistDenominators {
            first: y + 2.0 - x2,
            second: y * y - y * x2 + x2,
            middle: y * y - y * x2 + x2 * 2.0,
        }
    }

    pub fn is_singular(&self) -> bool {
        [self.first, self.second, self.middle].iter().any(|d| d.norm() < SINGULAR_TOL)
    }

    fn check(&self) -> Result<()> {
        if self.is_singular() {
            return Err(Error::Singular(format!(
                "denominators y+2-x^2 = {}, y^2-yx^2+x^2 = {}, y^2-yx^2+2x^2 = {}",
                self.first, self.second, self.middle
            )));
        }
        Ok(())
    }
}

/// Middle coefficient `((2n-1) y^2 + y x^2 - 2n x^2 (x^2 - 2)) / (y^2 - y x^2 + 2 x^2)`.
fn middle_coefficient(n: i64, x2: ComplexScalar, y: ComplexScalar, den: &TwistDenominators) -> ComplexScalar {
    let n = n as f64;
    ((2.0 * n - 1.0) * y * y + y * x2 - 2.0 * n * x2 * (x2 - 2.0)) / den.middle
}

/// `(t - 1)(n t^2 + m t + n) / ((y + 2 - x^2)(y^2 - y x^2 + x^2))` with the
/// scalar denominator folded into the numerator.
pub fn twist_delta_closed(n: i64, x2: ComplexScalar, y: ComplexScalar) -> Result<RationalFunction> {
    let den = TwistDenominators::new(x2, y);
    den.check()?;
    let m = middle_coefficient(n, x2, y, &den);
    let nc = Complex64::new(n as f64, 0.0);
    let quadratic = LaurentPoly::new(0, vec![nc, m, nc]);
    let num = LaurentPoly::from_real(0, &[-1.0, 1.0])
        .mul(&quadratic)
        .scale((den.first * den.second).inv());
    RationalFunction::new(num, LaurentPoly::one())
}

/// `-(m + 2n) / ((y + 2 - x^2)(y^2 - y x^2 + x^2))`.
pub fn twist_torsion_closed(n: i64, x2: ComplexScalar, y: ComplexScalar) -> Result<ComplexScalar> {
    let den = TwistDenominators::new(x2, y);
    den.check()?;
    let m = middle_coefficient(n, x2, y, &den);
    Ok(-(m + 2.0 * n as f64) / (den.first * den.second))
}
