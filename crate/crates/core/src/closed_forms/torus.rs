use std::f64::consts::PI;

use num_complex::Complex64;

use crate::laurent::{LaurentPoly, RationalFunction};
use crate::representations::TorusRepParams;
use crate::Result;

fn t_pow_minus_one(a: i64) -> LaurentPoly {
    LaurentPoly::monomial(Complex64::new(1.0, 0.0), a).sub(&LaurentPoly::one())
}

/// `t^{2m} - two_cos t^m + 1`.
fn palindromic(m: i64, two_cos: f64) -> LaurentPoly {
    let mut coeffs = vec![0.0; 2 * m as usize + 1];
    coeffs[0] = 1.0;
    coeffs[m as usize] = -two_cos;
    coeffs[2 * m as usize] = 1.0;
    LaurentPoly::from_real(0, &coeffs)
}

/// `(t^{pq} - 1)^3 / ((t^p - 1)(t^q - 1)(t^{2q} - 2cos(2 pi k/p) t^q + 1)(t^{2p} - 2cos(2 pi l/q) t^p + 1))`.
pub fn torus_delta_closed(p: i64, q: i64, k: i64, l: i64) -> Result<RationalFunction> {
    TorusRepParams::new(p, q, k, l, Complex64::new(0.5, 0.5))?;
    let num = t_pow_minus_one(p * q).pow(3);
    let ck = 2.0 * (2.0 * PI * k as f64 / p as f64).cos();
    let cl = 2.0 * (2.0 * PI * l as f64 / q as f64).cos();
    let den = t_pow_minus_one(p)
        .mul(&t_pow_minus_one(q))
        .mul(&palindromic(q, ck))
        .mul(&palindromic(p, cl));
    RationalFunction::new(num, den)
}

/// `-p^2 q^2 / (16 sin^2(pi k/p) sin^2(pi l/q))`.
pub fn torus_torsion_closed(p: i64, q: i64, k: i64, l: i64) -> Result<f64> {
    TorusRepParams::new(p, q, k, l, Complex64::new(0.5, 0.5))?;
    let sk = (PI * k as f64 / p as f64).sin();
    let sl = (PI * l as f64 / q as f64).sin();
    let pq = (p * q) as f64;
    Ok(-pq * pq / (16.0 * sk * sk * sl * sl))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_formula() {
        let f = torus_delta_closed(2, 3, 1, 1).unwrap();
        let num = LaurentPoly::from_real(0, &[-1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]).pow(3);
        let den = LaurentPoly::from_real(0, &[-1.0, 0.0, 1.0])
            .mul(&LaurentPoly::from_real(0, &[-1.0, 0.0, 0.0, 1.0]))
            .mul(&LaurentPoly::from_real(0, &[1.0, 0.0, 0.0, 1.0]).pow(2))
            .mul(&LaurentPoly::from_real(0, &[1.0, 0.0, 1.0, 0.0, 1.0]));
        let expect = RationalFunction::new(num, den).unwrap();
        let u = f.equal_up_to_unit(&expect, 1e-14);
        assert!(u.found && u.sign == 1 && u.power == 0, "{u:?}");
    }

    #[test]
    fn torus_2_5_denominator_factor() {
        let f = torus_delta_closed(2, 5, 1, 1).unwrap();
        let factor = palindromic(2, 2.0 * (2.0 * PI / 5.0).cos());
        assert!(factor.approx_eq(
            &LaurentPoly::from_real(0, &[1.0, 0.0, -2.0 * (2.0 * PI / 5.0).cos(), 0.0, 1.0]),
            1e-15
        ));
        // the factor divides the denominator: its roots are roots of den
        let root = Complex64::from_polar(1.0, PI / 5.0);
        assert!(factor.eval(root).unwrap().norm() < 1e-12);
        assert!(f.den().eval(root).unwrap().norm() < 1e-10);
    }

    #[test]
    fn numerator_has_triple_zero_at_one() {
        let f = torus_delta_closed(3, 5, 2, 2).unwrap();
        let mut p = f.num().clone();
        for _ in 0..3 {
            assert!(p.vanishes_at_one());
            p = p.divide_out_t_minus_1().unwrap().0;
        }
        assert!(!p.vanishes_at_one());
    }

    #[test]
    fn torsion_values() {
        assert!((torus_torsion_closed(2, 3, 1, 1).unwrap() + 3.0).abs() < 1e-14);
        let expect = -225.0 / (16.0 * (2.0 * PI / 3.0).sin().powi(2) * (2.0 * PI / 5.0).sin().powi(2));
        assert!((torus_torsion_closed(3, 5, 2, 2).unwrap() - expect).abs() < 1e-12);
        for (k, l) in crate::representations::torus_components(5, 7) {
            assert!(torus_torsion_closed(5, 7, k, l).unwrap() < 0.0);
        }
        assert!(torus_torsion_closed(2, 3, 1, 2).is_err());
    }
}
