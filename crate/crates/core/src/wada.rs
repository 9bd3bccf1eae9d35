//! The generic twisted Alexander computation: the ring homomorphism `Phi`,
//! the Alexander matrix of Fox derivatives, `det M_j / det Phi(1 - a_j)`,
//! and the torsion limit at `t = 1`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::laurent::{ComplexScalar, LaurentPoly, RationalFunction};
use crate::poly_matrix::PolyMatrix;
use crate::representations::Representation;
use crate::word_calculus::{fox_derivative, GroupRingElement, Word};
use crate::{Error, Result};

/// Dimension of the adjoint representation.
const ADJOINT_DIM: usize = 3;

/// `Phi(e) = sum_u c_u t^{f(u)} (Ad o rho)(u)` as a `3x3` polynomial matrix.
pub fn phi(e: &GroupRingElement, rep: &Representation) -> PolyMatrix {
    let mut by_degree: BTreeMap<i64, [Complex64; 9]> = BTreeMap::new();
    for (w, coeff) in e.terms() {
        let c = coeff.to_f64().unwrap_or(f64::NAN);
        let deg = rep.presentation().exponent_of(w);
        let m = rep.adjoint_holonomy(w).row_major();
        let slot = by_degree.entry(deg).or_insert([Complex64::zero(); 9]);
        for (acc, x) in slot.iter_mut().zip(m) {
            *acc += x * c;
        }
    }
    let entries = (0..9)
        .map(|idx| {
            let mut p = LaurentPoly::zero();
            for (&deg, m) in &by_degree {
                p = p.add(&LaurentPoly::monomial(m[idx], deg));
            }
            p
        })
        .collect();
    PolyMatrix::new(ADJOINT_DIM, ADJOINT_DIM, entries).expect("3x3")
}

/// The `(l-1) x l` grid with blocks `Phi(d r_i / d a_j)`.
pub fn alexander_matrix(rep: &Representation) -> Vec<Vec<PolyMatrix>> {
    let l = rep.presentation().num_generators();
    rep.presentation()
        .relators()
        .iter()
        .map(|r| (0..l).map(|j| phi(&fox_derivative(r, j), rep)).collect())
        .collect()
}

/// `Phi(1 - a_j)`.
fn one_minus_generator(rep: &Representation, j: usize) -> PolyMatrix {
    let e = GroupRingElement::one().sub(&Word::generator(j).into());
    phi(&e, rep)
}

/// Result of the twisted Alexander computation for one removed column.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwistedAlexander {
    /// Sign-normalized representative, see [`twisted_alexander`].
    pub delta: RationalFunction,
    /// Removed column (0-based).
    pub column: usize,
    /// Sign with `det M_j / det Phi(1 - a_j) = wada_sign * delta`.
    pub wada_sign: i32,
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
}

impl TwistedAlexander {
    /// The literal quotient `det M_j / det Phi(1 - a_j)`.
    pub fn wada_quotient(&self) -> RationalFunction {
        if self.wada_sign < 0 {
            self.delta.negate()
        } else {
            self.delta.clone()
        }
    }

    pub fn numerator_degrees(&self) -> (i64, i64) {
        (self.numerator.min_degree(), self.numerator.max_degree())
    }

    pub fn denominator_degrees(&self) -> (i64, i64) {
        (self.denominator.min_degree(), self.denominator.max_degree())
    }
}

/// The column whose `det Phi(1 - a_j)` has the largest leading coefficient;
/// ties go to the highest index.
pub fn default_column(rep: &Representation) -> Result<usize> {
    let mut best: Option<(usize, f64)> = None;
    for j in 0..rep.presentation().num_generators() {
        let lead = one_minus_generator(rep, j).det()?.leading_coeff().norm();
        if best.is_none_or(|(_, b)| lead >= b * (1.0 - 1e-9)) {
            best = Some((j, lead));
        }
    }
    best.map(|(j, _)| j).ok_or_else(|| Error::InvalidParameters("no generators".into()))
}

/// `Delta_{K, Ad o rho}(t)` from the Alexander matrix with block column `j`
/// removed (`None` picks [`default_column`]).
///
/// For odd-dimensional representations the Wada quotient changes sign with
/// the removed column: `det M_j / det Phi(a_j - 1)` carries `(-1)^{3|i-j|}`
/// relative to column `i`. The returned `delta` is multiplied by
/// `(-1)^{3(l - j)}` (0-based `j`), which makes it independent of the column
/// and equal to `det M_l / det Phi(a_l - 1)` for the last generator.
pub fn twisted_alexander(rep: &Representation, column: Option<usize>) -> Result<TwistedAlexander> {
    let l = rep.presentation().num_generators();
    if l < 2 {
        return Err(Error::InvalidParameters("need at least two generators".into()));
    }
    let column = match column {
        Some(j) if j < l => j,
        Some(j) => {
            return Err(Error::InvalidParameters(format!(
                "column {j} out of range for {l} generators"
            )))
        }
        None => default_column(rep)?,
    };
    let grid = alexander_matrix(rep);
    let m = PolyMatrix::block_assemble(&grid)?;
    let numerator = m.remove_block_column(ADJOINT_DIM, column)?.det()?;
    let denominator = one_minus_generator(rep, column).det()?;
    if denominator.is_zero() {
        return Err(Error::VanishingDenominator { column });
    }
    let wada_sign = if (ADJOINT_DIM * (l - column)) % 2 == 0 { 1 } else { -1 };
    let delta = RationalFunction::new(
        numerator.scale(Complex64::new(wada_sign as f64, 0.0)),
        denominator.clone(),
    )?;
    Ok(TwistedAlexander { delta, column, wada_sign, numerator, denominator })
}

/// `-lim_{t -> 1} Delta(t) / (t - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TorsionValue {
    pub value: ComplexScalar,
    /// True when `Delta` has a simple zero at `t = 1`.
    pub regular: bool,
    /// Common `(t - 1)` factors cancelled from numerator and denominator.
    pub cancelled_factors: u32,
    /// Largest synthetic-division remainder encountered.
    pub remainder: f64,
    /// The value is only fixed up to the sign of the unit of `Delta`.
    pub sign_ambiguous: bool,
}

/// Torsion from a twisted Alexander polynomial.
///
/// `det Phi(1 - a_j)` always vanishes at `t = 1` (adjoint matrices fix a
/// vector), so common `(t - 1)` factors are divided out of numerator and
/// denominator first. The limit is defined when the reduced numerator still
/// vanishes at `t = 1` and the reduced denominator does not.
pub fn torsion_limit(delta: &RationalFunction) -> Result<TorsionValue> {
    let mut num = delta.num().clone();
    let mut den = delta.den().clone();
    let mut cancelled = 0;
    let mut remainder: f64 = 0.0;
    while !num.is_zero() && num.vanishes_at_one() && den.vanishes_at_one() {
        let (n, rn) = num.divide_out_t_minus_1()?;
        let (d, rd) = den.divide_out_t_minus_1()?;
        remainder = remainder.max(rn / num.norm1()).max(rd / den.norm1());
        num = n;
        den = d;
        cancelled += 1;
    }
    if num.is_zero() {
        return Err(Error::TorsionUndefined("Delta vanishes identically".into()));
    }
    if den.vanishes_at_one() {
        return Err(Error::TorsionUndefined("Delta has a pole at t = 1".into()));
    }
    if !num.vanishes_at_one() {
        return Err(Error::TorsionUndefined(format!(
            "Delta(1) = {} is nonzero",
            num.eval_one() / den.eval_one()
        )));
    }
    let (reduced, rn) = num.divide_out_t_minus_1()?;
    remainder = remainder.max(rn / num.norm1());
    let regular = !reduced.vanishes_at_one();
    let value = -reduced.eval_one() / den.eval_one();
    Ok(TorsionValue { value, regular, cancelled_factors: cancelled, remainder, sign_ambiguous: true })
}

/// Max coefficient of `sum_j Phi(dr/da_j) Phi(a_j - 1)` over all relators,
/// relative to the largest summand. Vanishes for a genuine representation.
pub fn fox_identity_residual(rep: &Representation) -> Result<f64> {
    let l = rep.presentation().num_generators();
    let mut worst: f64 = 0.0;
    for r in rep.presentation().relators() {
        let mut total = PolyMatrix::zeros(ADJOINT_DIM, ADJOINT_DIM);
        let mut scale: f64 = 0.0;
        for j in 0..l {
            let gen_minus_one = Word::generator(j).into();
            let term = phi(&fox_derivative(r, j), rep)
                .mul(&phi(&GroupRingElement::sub(&gen_minus_one, &GroupRingElement::one()), rep))?;
            scale = scale.max(term.norm_inf());
            total = total.add(&term)?;
        }
        worst = worst.max(total.norm_inf() / scale.max(f64::MIN_POSITIVE));
    }
    Ok(worst)
}
