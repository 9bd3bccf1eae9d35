use num_complex::Complex64;

use super::SINGULAR_TOL;
use crate::laurent::ComplexScalar;
use crate::representations::{AdjointMatrix, Representation, TwistRepParams};
use crate::word_calculus::twist_word;
use crate::{Error, Result};

/// `Omega = I + W^-1 + ... + W^-(n-1)` with `W = Ad rho(w)`, summed directly.
///
/// For `n < 0` the geometric sum is continued so that
/// `(W^-1 - I) Omega = W^-n - I` still holds, i.e.
/// `Omega = -(W + W^2 + ... + W^{-n})`.
pub fn omega_direct(n: i64, rep: &Representation) -> Result<AdjointMatrix> {
    if n == 0 {
        return Err(Error::InvalidParameters("n = 0".into()));
    }
    let w = rep.adjoint_holonomy(&twist_word());
    let w_inv = w.inverse();
    let mut total = AdjointMatrix::zero();
    if n > 0 {
        let mut power = AdjointMatrix::identity();
        for _ in 0..n {
            total = total.add(&power);
            power = power * w_inv;
        }
    } else {
        let mut power = w;
        for _ in 0..-n {
            total = total.add(&power);
            power = power * w;
        }
        total = total.scale(Complex64::new(-1.0, 0.0));
    }
    Ok(total)
}

/// `Omega` from the closed form in `(s, u)`, valid on the Riley curve,
/// with `X^2` taken from `1 / (1 - kappa gamma + kappa^2)`,
/// `kappa = s + 1/s - 1 - u`.
pub fn omega_closed(n: i64, s: ComplexScalar, u: ComplexScalar) -> Result<AdjointMatrix> {
    let params = TwistRepParams::new(n, s, u)?;
    let kappa = s + s.inv() - 1.0 - u;
    let x2_den = 1.0 - kappa * params.gamma + kappa * kappa;
    if x2_den.norm() < SINGULAR_TOL {
        return Err(Error::Singular("1 - kappa gamma + kappa^2 vanishes".into()));
    }
    let x2 = x2_den.inv();

    let a1 = 1.0 - 2.0 * s + s * s - s * u;
    let b = -1.0 + s + s * u;
    let c = -1.0 + 2.0 * s + s * s + s * u;
    let prefactor = s * s * u * a1 * (-4.0 * s + u - 2.0 * s * u + s * s * u - s * u * u);
    if prefactor.norm() < SINGULAR_TOL {
        return Err(Error::Singular("Omega prefactor vanishes".into()));
    }
    let nf = n as f64;
    let (s2, s3, s4) = (s * s, s * s * s, s * s * s * s);
    let (u2, u3, u4) = (u * u, u * u * u, u * u * u * u);

    let p11 = 2.0 - 4.0 * s + 2.0 * s2 + u - 6.0 * s * u + s2 * u - 4.0 * s3 * u - s * u2
        + 3.0 * s2 * u2
        - s3 * u2
        + s4 * u2
        - s3 * u3;
    let p12 = -1.0 - 3.0 * s2 + 2.0 * s * u - s2 * u + s3 * u - s2 * u2;
    let p13 = -2.0 * s + u - s * u + s2 * u - s * u2;
    let p23 = -3.0 * s + s2 + u - 2.0 * s * u + s2 * u - s * u2;
    let p33 = -2.0 * s2 + 2.0 * s3 + 4.0 * s * u - 9.0 * s2 * u + 3.0 * s3 * u - u2
        + 4.0 * s * u2
        - 9.0 * s2 * u2
        + 3.0 * s3 * u2
        + 2.0 * s * u3
        - 4.0 * s2 * u3
        + s3 * u3
        - s2 * u4;

    let w11 = s2 * u * (a1 * p11 * x2 - 2.0 * nf * s * b * b);
    let w12 = -2.0 * s * u * b * (a1 * p12 * x2 - nf * s * c);
    let w13 = -(b * b) * (a1 * p13 * x2 - 2.0 * nf * s2);
    let w21 = s2 * u2 * b * (a1 * p12 * x2 - nf * s * c);
    let w22 = -s * u * (2.0 * a1 * b * b * p13 * x2 - nf * s * u * c * c);
    let w23 = -u * b * (a1 * b * p23 * x2 - nf * s2 * c);
    let w31 = -s2 * u2 * b * b * (a1 * p13 * x2 - 2.0 * nf * s2);
    let w32 = 2.0 * s * u2 * b * (a1 * b * p23 * x2 - nf * s2 * c);
    let w33 = u * b * (a1 * p33 * x2 - 2.0 * nf * s3 * b);

    let m: [[Complex64; 3]; 3] = [[w11, w12, w13], [w21, w22, w23], [w31, w32, w33]];
    Ok(AdjointMatrix(m).scale(prefactor.inv()))
}
