//! Generators and property checks shared by the property and acceptance
//! test targets.
#![allow(dead_code)]

use std::f64::consts::PI;

use adtwist_core::representations::{
    adjoint, build_torus_rep, build_twist_rep, riley_roots, torus_components, AdjointMatrix,
};
use adtwist_core::wada::twisted_alexander;
use adtwist_core::word_calculus::fox_derivative;
use adtwist_core::{
    ComplexScalar, GroupRingElement, LaurentPoly, PolyMatrix, Representation, SL2Matrix,
    TorusRepParams, TwistRepParams, Word,
};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::Rng;

pub fn c(re: f64, im: f64) -> ComplexScalar {
    Complex64::new(re, im)
}

pub fn random_complex(rng: &mut StdRng) -> ComplexScalar {
    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_word(rng: &mut StdRng, gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<(usize, i64)> = (0..len)
        .map(|_| (rng.gen_range(0..gens), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    Word::from_letters(letters)
}

pub fn random_poly(rng: &mut StdRng, max_span: usize) -> LaurentPoly {
    let len = rng.gen_range(1..=max_span + 1);
    LaurentPoly::new(rng.gen_range(-2..=2), (0..len).map(|_| random_complex(rng)).collect())
}

pub fn random_poly_matrix(rng: &mut StdRng, n: usize, max_span: usize) -> PolyMatrix {
    let entries = (0..n * n).map(|_| random_poly(rng, max_span)).collect();
    PolyMatrix::new(n, n, entries).unwrap()
}

pub fn random_sl2(rng: &mut StdRng) -> SL2Matrix {
    loop {
        let (a, b, cc) = (random_complex(rng), random_complex(rng), random_complex(rng));
        if a.norm() < 0.2 {
            continue;
        }
        let d = (1.0 + b * cc) / a;
        if let Ok(g) = SL2Matrix::new([[a, b], [cc, d]]) {
            return g;
        }
    }
}

/// Largest singular value of an `SL(2)` matrix.
pub fn max_singular_value(g: &SL2Matrix) -> f64 {
    let f = g.0.iter().flatten().map(|x| x.norm_sqr()).sum::<f64>();
    ((f + (f * f - 4.0).max(0.0).sqrt()) / 2.0).sqrt()
}

/// Bound on the largest singular value of sampled conjugators.
pub const MAX_CONJUGATOR_SV: f64 = 2.0;

pub fn random_conjugator(rng: &mut StdRng) -> SL2Matrix {
    loop {
        let g = random_sl2(rng);
        if max_singular_value(&g) <= MAX_CONJUGATOR_SV {
            return g;
        }
    }
}

/// `sum_j (d u / d x_j)(x_j - 1) = u - 1`, exactly in the group ring.
pub fn fox_fundamental_identity_holds(u: &Word, gens: usize) -> bool {
    let mut total = GroupRingElement::zero();
    for j in 0..gens {
        let xj_minus_1 = GroupRingElement::from(Word::generator(j)).sub(&GroupRingElement::one());
        total = total.add(&fox_derivative(u, j).mul(&xj_minus_1));
    }
    total == GroupRingElement::from(u.clone()).sub(&GroupRingElement::one())
}

/// `d(uv)/dx = du/dx + u dv/dx`, exactly.
pub fn fox_product_rule_holds(u: &Word, v: &Word, gen: usize) -> bool {
    let lhs = fox_derivative(&u.multiply(v), gen);
    let rhs = fox_derivative(u, gen).add(&fox_derivative(v, gen).left_mul_word(u));
    lhs == rhs
}

/// Relative error of `det(AB)` against `det(A) det(B)`.
pub fn det_product_error(a: &PolyMatrix, b: &PolyMatrix) -> f64 {
    let lhs = a.mul(b).unwrap().det().unwrap();
    let rhs = a.det().unwrap().mul(&b.det().unwrap());
    lhs.relative_distance(&rhs)
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &PolyMatrix) -> LaurentPoly {
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut total = LaurentPoly::zero();
    for j in 0..n {
        let minor_entries = (1..n)
            .flat_map(|r| (0..n).filter(move |&cc| cc != j).map(move |cc| (r, cc)))
            .map(|(r, cc)| m.get(r, cc).clone())
            .collect();
        let minor = PolyMatrix::new(n - 1, n - 1, minor_entries).unwrap();
        let term = m.get(0, j).mul(&cofactor_det(&minor));
        total = if j % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

/// Gram matrix of the trace form on `sl(2)` in the basis `(E, H, F)`.
fn killing_gram() -> AdjointMatrix {
    let (z, one) = (c(0.0, 0.0), c(1.0, 0.0));
    AdjointMatrix([[z, z, one], [z, c(2.0, 0.0), z], [one, z, z]])
}

fn transpose(m: &AdjointMatrix) -> AdjointMatrix {
    let mut t = m.0;
    for (i, row) in m.0.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            t[j][i] = *x;
        }
    }
    AdjointMatrix(t)
}

/// `|Ad(g)^T K Ad(g) - K|` for the trace form `K`.
pub fn killing_form_error(g: &SL2Matrix) -> f64 {
    let a = adjoint(g).unwrap();
    let k = killing_gram();
    (transpose(&a) * k * a).distance(&k)
}

/// `|Ad(gh) - Ad(g) Ad(h)|` relative to the size of the product.
pub fn adjoint_homomorphism_error(g: &SL2Matrix, h: &SL2Matrix) -> f64 {
    let lhs = adjoint(&(*g * *h)).unwrap();
    let rhs = adjoint(g).unwrap() * adjoint(h).unwrap();
    lhs.distance(&rhs) / rhs.max_abs().max(1.0)
}

/// Bound on the largest singular value of sampled generator images; rounding
/// error in `Delta` grows quickly with it.
pub const MAX_IMAGE_SV: f64 = 3.0;

fn well_conditioned(rep: &Representation) -> bool {
    rep.images().iter().all(|g| max_singular_value(g) <= MAX_IMAGE_SV)
}

pub const TORUS_PAIRS: [(i64, i64); 9] =
    [(2, 3), (2, 5), (3, 2), (3, 4), (3, 5), (4, 3), (4, 5), (5, 2), (5, 4)];

pub fn random_torus_rep(rng: &mut StdRng) -> (TorusRepParams, Representation) {
    loop {
        let (p, q) = TORUS_PAIRS[rng.gen_range(0..TORUS_PAIRS.len())];
        let comps = torus_components(p, q);
        let (k, l) = comps[rng.gen_range(0..comps.len())];
        let v = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        if v.norm() < 0.1 || (v - 1.0).norm() < 0.1 {
            continue;
        }
        let params = TorusRepParams::new(p, q, k, l, v).unwrap();
        if let Ok(rep) = build_torus_rep(&params) {
            if well_conditioned(&rep) {
                return (params, rep);
            }
        }
    }
}

pub fn random_twist_rep(rng: &mut StdRng) -> (TwistRepParams, Representation) {
    loop {
        let n = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
        let s = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..2.0 * PI));
        let roots = riley_roots(n, s).unwrap().roots.roots;
        let u = roots[rng.gen_range(0..roots.len())];
        if let Ok(params) = TwistRepParams::new(n, s, u) {
            if let Ok(rep) = build_twist_rep(&params) {
                if well_conditioned(&rep) {
                    return (params, rep);
                }
            }
        }
    }
}

/// Unit-comparison error between `Delta` of `rep` and of `g rep g^-1`;
/// infinite unless the unit is exactly `+1`.
pub fn conjugation_error(rep: &Representation, g: &SL2Matrix) -> f64 {
    let conj = rep.conjugate(g).unwrap();
    let a = twisted_alexander(rep, None).unwrap().delta;
    let b = twisted_alexander(&conj, None).unwrap().delta;
    let r = a.equal_up_to_unit(&b, f64::INFINITY);
    if (r.sign, r.power) == (1, 0) {
        r.error
    } else {
        f64::INFINITY
    }
}

/// Unit-comparison error between the two column choices; the normalized
/// `Delta` must agree up to `t^m` with sign `+1`.
pub fn column_error(rep: &Representation) -> f64 {
    let a = twisted_alexander(rep, Some(0)).unwrap().delta;
    let b = twisted_alexander(rep, Some(1)).unwrap().delta;
    let r = a.equal_up_to_unit(&b, f64::INFINITY);
    if r.sign == 1 {
        r.error
    } else {
        f64::INFINITY
    }
}
