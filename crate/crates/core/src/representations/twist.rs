use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use super::rep::{RepKind, Representation};
use super::roots::{polynomial_roots, relative_residual, PolyRoots};
use super::SL2Matrix;
use crate::laurent::{ComplexScalar, LaurentPoly};
use crate::word_calculus::KnotPresentation;
use crate::{Error, Result};

const RILEY_TOL: f64 = 1e-8;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `S_k(gamma)` with `S_0 = 1`, `S_1 = gamma`, `S_{k+1} = gamma S_k - S_{k-1}`,
/// extended by `S_{-1} = 0`, `S_{-k} = -S_{k-2}`.
pub fn chebyshev_s(k: i64, gamma: ComplexScalar) -> ComplexScalar {
    if k < 0 {
        return if k == -1 { Complex64::zero() } else { -chebyshev_s(-k - 2, gamma) };
    }
    let (mut prev, mut cur) = (Complex64::zero(), c(1.0));
    for _ in 0..k {
        (prev, cur) = (cur, gamma * cur - prev);
    }
    cur
}

/// `(X, Y) = (S_{n-1}(gamma), S_{n-2}(gamma))`, i.e.
/// `X = (xi+^n - xi-^n)/(xi+ - xi-)` and `Y` the same with `n - 1`.
pub fn chebyshev_pair(n: i64, gamma: ComplexScalar) -> (ComplexScalar, ComplexScalar) {
    (chebyshev_s(n - 1, gamma), chebyshev_s(n - 2, gamma))
}

fn chebyshev_s_poly(k: i64, gamma: &LaurentPoly) -> LaurentPoly {
    if k < 0 {
        return if k == -1 { LaurentPoly::zero() } else { chebyshev_s_poly(-k - 2, gamma).neg() };
    }
    let (mut prev, mut cur) = (LaurentPoly::zero(), LaurentPoly::one());
    for _ in 0..k {
        let next = gamma.mul(&cur).sub(&prev);
        (prev, cur) = (cur, next);
    }
    cur
}

/// `gamma = tr rho(w) = 2 + 2u - u/s - s u + u^2`.
pub fn gamma_of(s: ComplexScalar, u: ComplexScalar) -> ComplexScalar {
    c(2.0) + c(2.0) * u - u / s - s * u + u * u
}

/// The Riley polynomial `(s + 1/s - 1 - u) X - Y` as a polynomial in `u`.
pub fn riley_polynomial(n: i64, s: ComplexScalar) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::InvalidParameters("n = 0".into()));
    }
    if s.is_zero() || !s.is_finite() {
        return Err(Error::InvalidParameters(format!("s = {s} must be a nonzero finite number")));
    }
    let gamma = LaurentPoly::new(0, vec![c(2.0), c(2.0) - s.inv() - s, c(1.0)]);
    let kappa = LaurentPoly::new(0, vec![s + s.inv() - c(1.0), c(-1.0)]);
    let x = chebyshev_s_poly(n - 1, &gamma);
    let y = chebyshev_s_poly(n - 2, &gamma);
    Ok(kappa.mul(&x).sub(&y))
}

fn dense(p: &LaurentPoly) -> Vec<ComplexScalar> {
    (0..=p.max_degree().max(0)).map(|k| p.coeff(k)).collect()
}

/// `|phi(s, u)|` relative to `max(1, sum_k |c_k| |u|^k)`.
pub fn riley_residual(n: i64, s: ComplexScalar, u: ComplexScalar) -> Result<f64> {
    let coeffs = dense(&riley_polynomial(n, s)?);
    let r = u.norm();
    let scale = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm());
    Ok(relative_residual(&coeffs, u) * scale / scale.max(1.0))
}

/// All roots `u` of the Riley polynomial at fixed `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct RileyRoots {
    pub n: i64,
    pub s: ComplexScalar,
    pub polynomial: LaurentPoly,
    pub roots: PolyRoots,
}

pub fn riley_roots(n: i64, s: ComplexScalar) -> Result<RileyRoots> {
    let polynomial = riley_polynomial(n, s)?;
    let roots = polynomial_roots(&dense(&polynomial))?;
    Ok(RileyRoots { n, s, polynomial, roots })
}

/// A point `(s, u)` on the Riley curve of the twist knot `J(2, 2n)`, with
/// the traces derived from it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwistRepParams {
    pub n: i64,
    /// The Riley variable `s` (eigenvalue squared of the meridian image).
    pub riley_s: ComplexScalar,
    pub u: ComplexScalar,
    /// `tr rho(w)`.
    pub gamma: ComplexScalar,
    /// `tr rho(a) = sqrt(s) + 1/sqrt(s)` (principal branch).
    pub x: ComplexScalar,
    pub x_squared: ComplexScalar,
    /// `tr rho(a b^-1) = u + 2`.
    pub y: ComplexScalar,
    pub cheb_x: ComplexScalar,
    pub cheb_y: ComplexScalar,
    pub riley_residual: f64,
}

impl TwistRepParams {
    /// Fails unless `(s, u)` satisfies the Riley equation to `1e-8`.
    pub fn new(n: i64, s: ComplexScalar, u: ComplexScalar) -> Result<Self> {
        let params = Self::unchecked(n, s, u)?;
        if !(params.riley_residual <= RILEY_TOL) {
            return Err(Error::RileyResidual(params.riley_residual));
        }
        Ok(params)
    }

    /// Same derived quantities without the Riley check.
    pub fn unchecked(n: i64, s: ComplexScalar, u: ComplexScalar) -> Result<Self> {
        let riley_residual = riley_residual(n, s, u)?;
        if !u.is_finite() {
            return Err(Error::InvalidParameters("non-finite u".into()));
        }
        let gamma = gamma_of(s, u);
        let root = s.sqrt();
        let x = root + root.inv();
        let (cheb_x, cheb_y) = chebyshev_pair(n, gamma);
        Ok(TwistRepParams {
            n,
            riley_s: s,
            u,
            gamma,
            x,
            x_squared: s + s.inv() + c(2.0),
            y: u + c(2.0),
            cheb_x,
            cheb_y,
            riley_residual,
        })
    }

    /// `rho(a) = [[sqrt s, 1/sqrt s], [0, 1/sqrt s]]`.
    pub fn rho_a(&self) -> SL2Matrix {
        let r = self.riley_s.sqrt();
        SL2Matrix([[r, r.inv()], [Complex64::zero(), r.inv()]])
    }

    /// `rho(b) = [[sqrt s, 0], [-sqrt(s) u, 1/sqrt s]]`.
    pub fn rho_b(&self) -> SL2Matrix {
        let r = self.riley_s.sqrt();
        SL2Matrix([[r, Complex64::zero()], [-r * self.u, r.inv()]])
    }
}

/// The non-abelian representation of `J(2, 2n)` at a Riley root.
pub fn build_twist_rep(params: &TwistRepParams) -> Result<Representation> {
    if !(params.riley_residual <= RILEY_TOL) {
        return Err(Error::RileyResidual(params.riley_residual));
    }
    let presentation = KnotPresentation::twist(params.n)?;
    Representation::with_kind(
        presentation,
        vec![SL2Matrix::new(params.rho_a().0)?, SL2Matrix::new(params.rho_b().0)?],
        RepKind::Twist(params.clone()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_calculus::{twist_word, Word};

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Eigenvalue form `(xi+^n - xi-^n) / (xi+ - xi-)`.
    fn eigen_x(n: i64, gamma: Complex64) -> Complex64 {
        let disc = (gamma * gamma - c(4.0)).sqrt();
        let (p, m) = ((gamma + disc) / 2.0, (gamma - disc) / 2.0);
        (p.powi(n as i32) - m.powi(n as i32)) / (p - m)
    }

    #[test]
    fn chebyshev_small_cases() {
        let g = cx(0.3, 1.1);
        assert_eq!(chebyshev_pair(1, g), (c(1.0), c(0.0)));
        assert_eq!(chebyshev_pair(2, g), (g, c(1.0)));
        assert_eq!(chebyshev_pair(-1, g), (c(-1.0), -g));
        let g3 = c(3.0);
        assert!((chebyshev_pair(-1, g3).0 - eigen_x(-1, g3)).norm() < 1e-14);
        assert!((chebyshev_pair(-1, g3).1 - eigen_x(-2, g3)).norm() < 1e-13);
    }

    #[test]
    fn chebyshev_matches_eigenvalue_form() {
        let g = cx(0.7, -0.4);
        for n in -8..=8 {
            let (x, y) = chebyshev_pair(n, g);
            assert!((x - eigen_x(n, g)).norm() < 1e-10, "n = {n}");
            assert!((y - eigen_x(n - 1, g)).norm() < 1e-10, "n = {n}");
        }
    }

    #[test]
    fn riley_polynomial_examples() {
        let s = c(2.0);
        let p = riley_polynomial(1, s).unwrap();
        assert!(p.approx_eq(&LaurentPoly::new(0, vec![s + s.inv() - c(1.0), c(-1.0)]), 1e-15));
        let p = riley_polynomial(-1, c(1.0)).unwrap();
        assert!(p.approx_eq(&LaurentPoly::from_real(0, &[1.0, 1.0, 1.0]), 1e-15));
        let p = riley_polynomial(2, c(1.0)).unwrap();
        assert!(p.approx_eq(&LaurentPoly::from_real(0, &[1.0, -2.0, 1.0, -1.0]), 1e-15));
    }

    #[test]
    fn riley_polynomial_degrees() {
        let s = cx(0.8, 0.6);
        for n in 1..=5 {
            assert_eq!(riley_polynomial(n, s).unwrap().max_degree(), 2 * n - 1);
            assert_eq!(riley_polynomial(-n, s).unwrap().max_degree(), 2 * n);
        }
    }

    #[test]
    fn riley_root_examples() {
        let r = riley_roots(1, c(2.0)).unwrap();
        assert_eq!(r.roots.roots.len(), 1);
        assert!((r.roots.roots[0] - c(1.5)).norm() < 1e-14);

        let r = riley_roots(-1, c(1.0)).unwrap();
        let h = 3f64.sqrt() / 2.0;
        assert!((r.roots.roots[0] - cx(-0.5, -h)).norm() < 1e-13);
        assert!((r.roots.roots[1] - cx(-0.5, h)).norm() < 1e-13);

        let r = riley_roots(2, c(1.0)).unwrap();
        assert_eq!(r.roots.roots.len(), 3);
        assert!(r.roots.residuals.iter().all(|&x| x < 1e-10));
    }

    #[test]
    fn trefoil_point() {
        let params = TwistRepParams::new(1, c(2.0), c(1.5)).unwrap();
        let rep = build_twist_rep(&params).unwrap();
        assert!(rep.relation_residual() < 1e-10);
        assert!((rep.images()[0].trace() - params.x).norm() < 1e-14);
        assert!((rep.images()[1].trace() - params.x).norm() < 1e-14);
        let ab_inv = Word::from_letters([(0, 1), (1, -1)]);
        assert!((rep.holonomy(&ab_inv).trace() - params.y).norm() < 1e-14);
        assert!((rep.holonomy(&twist_word()).trace() - params.gamma).norm() < 1e-13);
        assert!((params.x * params.x - params.x_squared).norm() < 1e-14);
    }

    #[test]
    fn every_root_gives_a_representation() {
        for n in [-3, -2, -1, 1, 2, 3, 4] {
            for s in [c(2.0), c(1.0), Complex64::from_polar(1.0, std::f64::consts::PI / 5.0), cx(-0.4, 1.3)] {
                for u in riley_roots(n, s).unwrap().roots.roots {
                    let params = TwistRepParams::new(n, s, u).unwrap();
                    let rep = build_twist_rep(&params).unwrap();
                    assert!(rep.relation_residual() < 1e-8, "n={n} s={s} u={u}");
                }
            }
        }
    }

    #[test]
    fn off_locus_point_rejected() {
        assert!(matches!(TwistRepParams::new(1, c(2.0), c(1.51)), Err(Error::RileyResidual(_))));
        let params = TwistRepParams::unchecked(1, c(2.0), c(1.51)).unwrap();
        assert!(build_twist_rep(&params).is_err());
        assert!(riley_polynomial(1, c(0.0)).is_err());
        assert!(riley_polynomial(0, c(1.0)).is_err());
    }
}
