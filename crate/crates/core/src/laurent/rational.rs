use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{ComplexScalar, LaurentPoly};
use crate::{Error, Result};

/// A rational function `t^shift * num(t) / den(t)` in canonical form:
/// `num` and `den` are ordinary polynomials with nonzero constant term,
/// and the power of `t` split off from them is kept in `shift`.
///
/// Serialized as `{"num": poly, "den": poly}` with the shift carried by
/// the numerator's `minDegree`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RationalRepr", into = "RationalRepr")]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
    shift: i64,
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl From<RationalFunction> for RationalRepr {
    fn from(f: RationalFunction) -> Self {
        RationalRepr { num: f.num.shift(f.shift), den: f.den }
    }
}

impl TryFrom<RationalRepr> for RationalFunction {
    type Error = String;

    fn try_from(r: RationalRepr) -> std::result::Result<Self, String> {
        RationalFunction::new(r.num, r.den).map_err(|e| e.to_string())
    }
}

/// Outcome of comparing two rational functions modulo units.
///
/// When `found`, `g = sign * t^power * f` holds coefficientwise with
/// relative error `error`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct UnitReport {
    pub found: bool,
    pub sign: i32,
    pub power: i64,
    pub error: f64,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidParameters("zero denominator".into()));
        }
        let shift = if num.is_zero() { 0 } else { num.min_degree() - den.min_degree() };
        Ok(RationalFunction {
            shift,
            num: num.shift(-num.min_degree()),
            den: den.shift(-den.min_degree()),
        })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::new(p, LaurentPoly::one()).expect("nonzero denominator")
    }

    /// Canonical numerator (constant term nonzero).
    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    /// Canonical denominator (constant term nonzero).
    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Numerator carrying the unit power, `t^shift * num`.
    pub fn shifted_num(&self) -> LaurentPoly {
        self.num.shift(self.shift)
    }

    pub fn eval(&self, z: ComplexScalar) -> Result<ComplexScalar> {
        let n = self.shifted_num().eval(z)?;
        Ok(n / self.den.eval(z)?)
    }

    pub fn scale(&self, c: ComplexScalar) -> Self {
        RationalFunction { num: self.num.scale(c), ..self.clone() }
    }

    pub fn negate(&self) -> Self {
        self.scale(Complex64::new(-1.0, 0.0))
    }

    /// Looks for `sign in {+1, -1}` and `power` with `other = sign t^power self`.
    ///
    /// Cross-multiplies numerators and denominators; `power` follows from the
    /// degree bookkeeping and only the sign is chosen by comparison.
    pub fn equal_up_to_unit(&self, other: &Self, tol: f64) -> UnitReport {
        let lhs = self.num.mul(&other.den);
        let rhs = other.num.mul(&self.den);
        if lhs.is_zero() || rhs.is_zero() {
            let found = lhs.is_zero() && rhs.is_zero();
            return UnitReport { found, sign: 1, power: 0, error: if found { 0.0 } else { 1.0 } };
        }
        let power = other.shift - self.shift + rhs.min_degree() - lhs.min_degree();
        let lhs = lhs.shift(-lhs.min_degree());
        let rhs = rhs.shift(-rhs.min_degree());
        let plus = rhs.relative_distance(&lhs);
        let minus = rhs.relative_distance(&lhs.neg());
        let (sign, error) = if plus <= minus { (1, plus) } else { (-1, minus) };
        UnitReport { found: error <= tol, sign, power, error }
    }
}

pub fn equal_up_to_unit(f: &RationalFunction, g: &RationalFunction, tol: f64) -> UnitReport {
    f.equal_up_to_unit(g, tol)
}
