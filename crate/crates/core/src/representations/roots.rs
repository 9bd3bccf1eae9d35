use std::f64::consts::PI;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use num_traits::Zero;

use crate::laurent::ComplexScalar;
use crate::{Error, Result};

const MAX_ITERATIONS: usize = 200;
const ROOT_RESIDUAL_TOL: f64 = 1e-10;
const MULTIPLE_ROOT_TOL: f64 = 1e-6;

/// Roots of a univariate polynomial with their diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRoots {
    /// Sorted by real part, then imaginary part.
    pub roots: Vec<ComplexScalar>,
    /// `|p(z)| / sum_k |c_k| |z|^k` per root.
    pub residuals: Vec<f64>,
    /// Index pairs of roots closer than `1e-6`.
    pub near_multiple: Vec<(usize, usize)>,
    /// Whether the companion-matrix fallback was needed.
    pub used_fallback: bool,
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Backward-error scale `|p(z)| / sum |c_k| |z|^k`.
pub(crate) fn relative_residual(coeffs: &[Complex64], z: Complex64) -> f64 {
    let (p, _) = horner(coeffs, z);
    let r = z.norm();
    let scale = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm());
    if scale == 0.0 {
        p.norm()
    } else {
        p.norm() / scale
    }
}

/// All complex roots of `sum_k coeffs[k] z^k`, counted with multiplicity.
///
/// Aberth-Ehrlich simultaneous iteration; if it fails to converge within 200
/// sweeps, falls back to eigenvalues of the companion matrix followed by a
/// few Newton steps.
pub fn polynomial_roots(coeffs: &[ComplexScalar]) -> Result<PolyRoots> {
    let end = coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1);
    let coeffs = &coeffs[..end];
    let degree = coeffs.len().saturating_sub(1);
    let mut roots = match degree {
        0 => Vec::new(),
        1 => vec![-coeffs[0] / coeffs[1]],
        _ => Vec::new(),
    };
    let mut used_fallback = false;
    if degree >= 2 {
        roots = match aberth(coeffs) {
            Some(r) => r,
            None => {
                used_fallback = true;
                companion_roots(coeffs).ok_or(Error::RootFinding { degree })?
            }
        };
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let residuals: Vec<f64> = roots.iter().map(|&z| relative_residual(coeffs, z)).collect();
    if residuals.iter().any(|r| !(r <= &ROOT_RESIDUAL_TOL)) {
        return Err(Error::RootFinding { degree });
    }
    let mut near_multiple = Vec::new();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if (roots[i] - roots[j]).norm() < MULTIPLE_ROOT_TOL {
                near_multiple.push((i, j));
            }
        }
    }
    Ok(PolyRoots { roots, residuals, near_multiple, used_fallback })
}

fn aberth(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    // radius from the geometric mean of |roots|, clamped by the Cauchy bound
    let cauchy = 1.0 + coeffs[..n].iter().map(|c| (c / lead).norm()).fold(0.0, f64::max);
    let mean = (coeffs[0] / lead).norm().powf(1.0 / n as f64);
    let radius = if mean > 0.0 { mean.min(cauchy) } else { 1.0 };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();

    for _ in 0..MAX_ITERATIONS {
        let mut converged = true;
        for i in 0..n {
            let (p, dp) = horner(coeffs, z[i]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                return None;
            }
            z[i] -= step;
            if step.norm() > 1e-14 * z[i].norm().max(1.0) {
                converged = false;
            }
        }
        if converged {
            return Some(z);
        }
    }
    None
}

fn companion_roots(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        m[(i, n - 1)] = -coeffs[i] / lead;
    }
    let schur = Schur::try_new(m, 1e-15, 10_000)?;
    let mut roots: Vec<Complex64> = schur.eigenvalues()?.iter().copied().collect();
    for z in roots.iter_mut() {
        for _ in 0..5 {
            let (p, dp) = horner(coeffs, *z);
            if dp.is_zero() {
                break;
            }
            let next = *z - p / dp;
            if next.is_finite() && relative_residual(coeffs, next) < relative_residual(coeffs, *z) {
                *z = next;
            } else {
                break;
            }
        }
    }
    Some(roots)
}
