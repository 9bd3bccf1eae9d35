use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::rep::{RepKind, Representation};
use super::SL2Matrix;
use crate::laurent::ComplexScalar;
use crate::word_calculus::{KnotPresentation, Word};
use crate::{Error, Result};

/// Default conjugation parameter `v` for torus representations.
pub const DEFAULT_CONJ_PARAM: Complex64 = Complex64::new(0.5, 1.0 / 3.0);

const IRREDUCIBLE_TOL: f64 = 1e-8;

/// Data selecting an irreducible representation of the `(p, q)` torus knot
/// group: the component `(k, l)` and a point `v` inside it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorusRepParams {
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub l: i64,
    pub conj_param: ComplexScalar,
    /// `r` and `s` with `p s - q r = 1`; the meridian is `c^-r d^s`.
    pub bezout_r: i64,
    pub bezout_s: i64,
}

impl TorusRepParams {
    pub fn new(p: i64, q: i64, k: i64, l: i64, conj_param: ComplexScalar) -> Result<Self> {
        // validates p, q
        KnotPresentation::torus(p, q)?;
        if !(0 < k && k < p && 0 < l && l < q) || (k - l) % 2 != 0 {
            return Err(Error::InvalidParameters(format!(
                "(k, l) = ({k}, {l}) is not a component of the ({p}, {q}) torus knot"
            )));
        }
        if !conj_param.is_finite() {
            return Err(Error::InvalidParameters("non-finite conjugation parameter".into()));
        }
        let (bezout_r, bezout_s) = bezout_pair(p, q);
        Ok(TorusRepParams { p, q, k, l, conj_param, bezout_r, bezout_s })
    }

    /// `e^{i pi k / p}`.
    pub fn alpha(&self) -> ComplexScalar {
        Complex64::from_polar(1.0, PI * self.k as f64 / self.p as f64)
    }

    /// `e^{i pi l / q}`.
    pub fn beta(&self) -> ComplexScalar {
        Complex64::from_polar(1.0, PI * self.l as f64 / self.q as f64)
    }

    /// The meridian word `c^-r d^s`.
    pub fn meridian(&self) -> Word {
        Word::from_letters([(0, -self.bezout_r), (1, self.bezout_s)])
    }

    /// The two traces `2 cos pi (r k / p +- s l / q)` excluded on the component.
    pub fn reducible_meridian_traces(&self) -> [f64; 2] {
        let a = self.bezout_r as f64 * self.k as f64 / self.p as f64;
        let b = self.bezout_s as f64 * self.l as f64 / self.q as f64;
        [2.0 * (PI * (a + b)).cos(), 2.0 * (PI * (a - b)).cos()]
    }
}

/// `(r, s)` with `p s - q r = 1` and `s` the least nonnegative solution.
pub fn bezout_pair(p: i64, q: i64) -> (i64, i64) {
    // extended Euclid for p x + q y = 1
    let (mut old_r, mut r) = (p, q);
    let (mut old_x, mut x) = (1i64, 0i64);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_x, x) = (x, old_x - quot * x);
    }
    let s = old_x.rem_euclid(q);
    ((p * s - 1) / q, s)
}

/// All components `(k, l)`: `0 < k < p`, `0 < l < q`, `k = l (mod 2)`.
pub fn torus_components(p: i64, q: i64) -> Vec<(i64, i64)> {
    (1..p)
        .flat_map(|k| (1..q).filter(move |l| (k - l) % 2 == 0).map(move |l| (k, l)))
        .collect()
}

/// `rho(c) = diag(alpha, 1/alpha)` and `rho(d) = V diag(beta, 1/beta) V^-1`
/// with `V = [[1, 1], [v, 1]]`.
pub fn build_torus_rep(params: &TorusRepParams) -> Result<Representation> {
    let v = params.conj_param;
    let one = Complex64::new(1.0, 0.0);
    if v.norm() < IRREDUCIBLE_TOL || (v - one).norm() < IRREDUCIBLE_TOL {
        return Err(Error::Reducible(format!("conjugation parameter v = {v} is degenerate")));
    }
    let b = params.beta();
    let conj = SL2Matrix([[one, one], [v, one]]);
    let det = one - v;
    let conj_inv = SL2Matrix([[one / det, -one / det], [-v / det, one / det]]);
    let rho_d = conj * SL2Matrix::diag(b) * conj_inv;
    let rho_c = SL2Matrix::diag(params.alpha());
    let presentation = KnotPresentation::torus(params.p, params.q)?;
    let rep = Representation::with_kind(
        presentation,
        vec![rho_c, SL2Matrix::new(rho_d.0)?],
        RepKind::Torus(params.clone()),
    )?;

    let tr_mu = rep.holonomy(&params.meridian()).trace();
    for bad in params.reducible_meridian_traces() {
        if (tr_mu - Complex64::new(bad, 0.0)).norm() < IRREDUCIBLE_TOL {
            return Err(Error::Reducible(format!(
                "tr rho(mu) = {tr_mu} equals the excluded value {bad}"
            )));
        }
    }
    Ok(rep)
}
