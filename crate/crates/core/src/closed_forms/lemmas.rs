use num_complex::Complex64;
use serde::Serialize;

use super::SINGULAR_TOL;
use crate::laurent::ComplexScalar;
use crate::representations::{chebyshev_pair, TwistRepParams};
use crate::{Error, Result};

/// Per-identity residuals of the `d_1, ..., d_5` identities.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LemmaDReport {
    pub residuals: [f64; 5],
}

impl LemmaDReport {
    pub fn max(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Compares the eigenvalue definitions of `d_1..d_5` (eigenvalues `xi+-` of
/// `rho(w)`) with their expressions in `X`, `Y`, `gamma` and `1 - s u`.
/// Residuals are relative to `max(1, |d_i|)`. Holds for any `(s, u)`.
pub fn lemma_d_residual(n: i64, s: ComplexScalar, u: ComplexScalar) -> Result<LemmaDReport> {
    let p = TwistRepParams::unchecked(n, s, u)?;
    let gamma = p.gamma;
    let disc = (gamma * gamma - 4.0).sqrt();
    let (xp, xm) = ((gamma + disc) / 2.0, (gamma - disc) / 2.0);
    if (xp - xm).norm() < 1e-6 {
        return Err(Error::RepeatedEigenvalue(gamma.to_string()));
    }
    let sigma = 1.0 - s * u;
    let (alpha, beta) = (sigma - xp, sigma - xm);
    let (ep, em) = (xp.powi((n - 1) as i32), xm.powi((n - 1) as i32));
    let eigen = [
        em + ep,
        alpha * em + beta * ep,
        alpha * ep + beta * em,
        alpha * alpha * em + beta * beta * ep,
        alpha * alpha * ep + beta * beta * em,
    ];

    let (x, y) = chebyshev_pair(n, gamma);
    let g2 = gamma * gamma;
    let base = 2.0 * x - gamma * y;
    let closed = [
        base,
        sigma * base - gamma * x + (g2 - 2.0) * y,
        sigma * base - gamma * x + 2.0 * y,
        sigma * sigma * base - 2.0 * sigma * (gamma * x - (g2 - 2.0) * y) + (g2 - 2.0) * x
            - gamma * (g2 - 3.0) * y,
        sigma * sigma * base - 2.0 * sigma * (gamma * x - 2.0 * y) + (g2 - 2.0) * x - gamma * y,
    ];
    let mut residuals = [0.0; 5];
    for i in 0..5 {
        residuals[i] = (eigen[i] - closed[i]).norm() / eigen[i].norm().max(1.0);
    }
    Ok(LemmaDReport { residuals })
}

/// `|X^2 - 1 / (1 - kappa gamma + kappa^2)|` relative to `max(1, |X^2|)`,
/// `kappa = s + 1/s - 1 - u`. Only expected to vanish on the Riley curve.
pub fn lemma_x_residual(n: i64, s: ComplexScalar, u: ComplexScalar) -> Result<f64> {
    let p = TwistRepParams::unchecked(n, s, u)?;
    let kappa = s + s.inv() - 1.0 - u;
    let den = Complex64::new(1.0, 0.0) - kappa * p.gamma + kappa * kappa;
    if den.norm() < SINGULAR_TOL {
        return Err(Error::Singular("1 - kappa gamma + kappa^2 vanishes".into()));
    }
    let x2 = p.cheb_x * p.cheb_x;
    Ok((x2 - den.inv()).norm() / x2.norm().max(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::riley_roots;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn small_n() {
        for n in [1, 2] {
            assert!(lemma_d_residual(n, c(1.3, 0.2), c(-0.4, 0.7)).unwrap().max() < 1e-14);
        }
    }

    #[test]
    fn n5_random_point() {
        assert!(lemma_d_residual(5, c(0.9, -1.1), c(0.35, 0.6)).unwrap().max() < 1e-9);
    }

    #[test]
    fn repeated_eigenvalue_reported() {
        // u = 0 gives gamma = 2
        assert!(matches!(
            lemma_d_residual(3, c(2.0, 0.0), c(0.0, 0.0)),
            Err(Error::RepeatedEigenvalue(_))
        ));
    }

    #[test]
    fn x_identity_on_roots() {
        assert!(lemma_x_residual(1, c(2.0, 0.0), c(1.5, 0.0)).unwrap() < 1e-15);
        for u in riley_roots(2, c(1.0, 0.0)).unwrap().roots.roots {
            assert!(lemma_x_residual(2, c(1.0, 0.0), u).unwrap() < 1e-9);
        }
    }

    #[test]
    fn x_identity_fails_off_locus() {
        assert!(lemma_x_residual(3, c(2.0, 0.0), c(0.3, 0.1)).unwrap() > 1e-3);
    }
}
