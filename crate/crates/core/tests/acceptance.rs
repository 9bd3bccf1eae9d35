//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if
//! any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use adtwist_core::checks::{lemma_suites, twist_s_values, CheckOptions, TORUS_GRID, TWIST_NS};
use adtwist_core::closed_forms::{
    omega_closed, omega_direct, torus_delta_closed, torus_torsion_closed, twist_delta_closed,
    twist_torsion_closed, TwistDenominators,
};
use adtwist_core::report::relative_error;
use adtwist_core::representations::{
    build_torus_rep, build_twist_rep, riley_roots, torus_components, AdjointMatrix,
};
use adtwist_core::wada::{fox_identity_residual, torsion_limit, twisted_alexander};
use adtwist_core::{
    ComplexScalar, Error, KnotPresentation, Representation, SL2Matrix, TorusRepParams,
    TwistRepParams,
};
use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const DELTA_TOL: f64 = 1e-8;
const TORSION_TOL: f64 = 1e-6;

fn conj_params() -> [ComplexScalar; 3] {
    adtwist_core::checks::torus_conj_params()
}

/// Running maximum plus a failure count.
#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    max: f64,
    first_failure: Option<String>,
}

impl Tally {
    fn check(&mut self, label: impl FnOnce() -> String, value: f64, tol: f64) {
        self.cases += 1;
        if value.is_finite() {
            self.max = self.max.max(value);
        }
        if !(value <= tol) {
            self.failures += 1;
            self.first_failure.get_or_insert_with(|| format!("{} ({value:.3e})", label()));
        }
    }

    fn fail(&mut self, label: String) {
        self.cases += 1;
        self.failures += 1;
        self.first_failure.get_or_insert(label);
    }

    fn ok(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }

    fn detail(&self) -> String {
        let mut s = format!("{} cases, max error {:.2e}", self.cases, self.max);
        if let Some(f) = &self.first_failure {
            s.push_str(&format!(", {} failed, first: {f}", self.failures));
        }
        s
    }
}

fn torus_grid() -> Vec<(TorusRepParams, Representation)> {
    let mut out = Vec::new();
    for (p, q) in TORUS_GRID {
        for (k, l) in torus_components(p, q) {
            for v in conj_params() {
                let params = TorusRepParams::new(p, q, k, l, v).unwrap();
                let rep = build_torus_rep(&params).unwrap();
                out.push((params, rep));
            }
        }
    }
    out
}

fn criterion_1() -> (bool, String) {
    let start = Instant::now();
    let mut tally = Tally::default();
    for (params, rep) in torus_grid() {
        let label = || format!("({},{},{},{})", params.p, params.q, params.k, params.l);
        let pipeline = twisted_alexander(&rep, None).unwrap().delta;
        let closed = torus_delta_closed(params.p, params.q, params.k, params.l).unwrap();
        let unit = pipeline.equal_up_to_unit(&closed, DELTA_TOL);
        tally.check(label, if unit.found { unit.error } else { f64::INFINITY }, DELTA_TOL);
    }
    let secs = start.elapsed().as_secs_f64();
    (tally.ok() && secs < 5.0, format!("{}, {secs:.2} s", tally.detail()))
}

fn criterion_2() -> (bool, String) {
    let mut tally = Tally::default();
    for (params, rep) in torus_grid() {
        let label = || format!("({},{},{},{})", params.p, params.q, params.k, params.l);
        let delta = twisted_alexander(&rep, None).unwrap().delta;
        let closed = torus_torsion_closed(params.p, params.q, params.k, params.l).unwrap();
        match torsion_limit(&delta) {
            Ok(t) => tally.check(label, relative_error(t.value, c(closed, 0.0)), TORSION_TOL),
            Err(e) => tally.fail(format!("{}: {e}", label())),
        }
    }
    let trefoil = TorusRepParams::new(2, 3, 1, 1, conj_params()[0]).unwrap();
    let delta = twisted_alexander(&build_torus_rep(&trefoil).unwrap(), None).unwrap().delta;
    let value = torsion_limit(&delta).unwrap().value;
    tally.check(|| "trefoil -3".into(), relative_error(value, c(-3.0, 0.0)), TORSION_TOL);
    (tally.ok(), format!("{}, T(2,3) torsion {:.12}", tally.detail(), value.re))
}

fn criterion_3() -> (bool, String) {
    let start = Instant::now();
    let mut delta_tally = Tally::default();
    let mut torsion_tally = Tally::default();
    let mut skipped = 0;
    for n in TWIST_NS {
        for s in twist_s_values() {
            for (i, u) in riley_roots(n, s).unwrap().roots.roots.into_iter().enumerate() {
                let label = || format!("n={n} s={s} root {}", i + 1);
                let params = TwistRepParams::new(n, s, u).unwrap();
                if TwistDenominators::new(params.x_squared, params.y).is_singular() {
                    skipped += 1;
                    continue;
                }
                let rep = build_twist_rep(&params).unwrap();
                let delta = twisted_alexander(&rep, None).unwrap().delta;
                let closed = twist_delta_closed(n, params.x_squared, params.y).unwrap();
                let unit = delta.equal_up_to_unit(&closed, DELTA_TOL);
                delta_tally.check(label, if unit.found { unit.error } else { f64::INFINITY }, DELTA_TOL);
                let expected = twist_torsion_closed(n, params.x_squared, params.y).unwrap();
                match torsion_limit(&delta) {
                    Ok(t) => torsion_tally.check(label, relative_error(t.value, expected), TORSION_TOL),
                    Err(e) => torsion_tally.fail(format!("{}: {e}", label())),
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    (
        delta_tally.ok() && torsion_tally.ok() && secs < 10.0,
        format!(
            "Delta: {}; torsion: {}; {skipped} singular skipped; {secs:.2} s",
            delta_tally.detail(),
            torsion_tally.detail()
        ),
    )
}

fn criterion_4() -> (bool, String) {
    let mut tally = Tally::default();
    let mut samples: Vec<ComplexScalar> = twist_s_values().to_vec();
    samples.extend([c(0.5, 0.0), c(3.0, 1.0), c(-2.0, 0.0), c(0.3, -0.8)]);
    for s in samples {
        for u in riley_roots(1, s).unwrap().roots.roots {
            let rep = build_twist_rep(&TwistRepParams::new(1, s, u).unwrap()).unwrap();
            let delta = twisted_alexander(&rep, None).unwrap().delta;
            match torsion_limit(&delta) {
                Ok(t) => tally.check(|| format!("s={s}"), relative_error(t.value, c(-3.0, 0.0)), 1e-9),
                Err(e) => tally.fail(format!("s={s}: {e}")),
            }
        }
    }
    (tally.ok(), tally.detail())
}

fn criterion_5() -> (bool, String) {
    let mut tally = Tally::default();
    let mut identity = Tally::default();
    let mut skipped = 0;
    for n in 1..=5 {
        for s in twist_s_values() {
            for u in riley_roots(n, s).unwrap().roots.roots {
                let label = || format!("n={n} s={s} u={u}");
                let closed = match omega_closed(n, s, u) {
                    Ok(m) => m,
                    Err(Error::Singular(_)) => {
                        skipped += 1;
                        continue;
                    }
                    Err(e) => {
                        tally.fail(format!("{}: {e}", label()));
                        continue;
                    }
                };
                let rep = build_twist_rep(&TwistRepParams::new(n, s, u).unwrap()).unwrap();
                let direct = omega_direct(n, &rep).unwrap();
                tally.check(label, closed.distance(&direct) / direct.max_abs().max(1.0), 1e-8);
                if n == 1 {
                    identity.check(label, closed.distance(&AdjointMatrix::identity()), 1e-8);
                }
            }
        }
    }
    (
        tally.ok() && identity.ok(),
        format!("{}; n=1 identity {}; {skipped} singular skipped", tally.detail(), identity.detail()),
    )
}

fn criterion_6() -> (bool, String) {
    let summaries = lemma_suites(&CheckOptions { tol: 1e-9, perturb: None });
    let ok = summaries.iter().all(|s| s.passed());
    let detail = summaries
        .iter()
        .map(|s| format!("{} max {:.2e} (<= {:.0e}, {} cases)", s.name, s.max_residual, s.threshold, s.cases))
        .collect::<Vec<_>>()
        .join("; ");
    (ok, detail)
}

fn criterion_7() -> (bool, String) {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut fox = Tally::default();
    for _ in 0..300 {
        let u = random_word(&mut rng, 3, 8);
        fox.check(|| format!("{u}"), if fox_fundamental_identity_holds(&u, 3) { 0.0 } else { 1.0 }, 0.0);
        let (v, w) = (random_word(&mut rng, 3, 6), random_word(&mut rng, 3, 6));
        let g = rng.gen_range(0..3);
        fox.check(|| format!("{v} * {w}"), if fox_product_rule_holds(&v, &w, g) { 0.0 } else { 1.0 }, 0.0);
    }
    let mut adjoint = Tally::default();
    for _ in 0..100 {
        let (g, h) = (random_sl2(&mut rng), random_sl2(&mut rng));
        adjoint.check(|| "homomorphism".into(), adjoint_homomorphism_error(&g, &h), 1e-10);
        let scale = max_singular_value(&g).powi(4);
        adjoint.check(|| "trace form".into(), killing_form_error(&g) / scale, 1e-9);
    }
    let mut det = Tally::default();
    for n in 1..=4 {
        for _ in 0..15 {
            let a = random_poly_matrix(&mut rng, n, 2);
            let b = random_poly_matrix(&mut rng, n, 2);
            det.check(|| format!("{n}x{n}"), det_product_error(&a, &b), 1e-9);
        }
    }
    let mut conj = Tally::default();
    let mut column = Tally::default();
    let mut fox_rep = Tally::default();
    for i in 0..20 {
        let g = random_conjugator(&mut rng);
        let (_, torus) = random_torus_rep(&mut rng);
        let (_, twist) = random_twist_rep(&mut rng);
        for rep in [&torus, &twist] {
            conj.check(|| format!("sample {i}"), conjugation_error(rep, &g), 1e-8);
            column.check(|| format!("sample {i}"), column_error(rep), 1e-8);
            fox_rep.check(|| format!("sample {i}"), fox_identity_residual(rep).unwrap(), 1e-8);
        }
    }
    let all = [&fox, &adjoint, &det, &conj, &column, &fox_rep];
    (
        all.iter().all(|t| t.ok()),
        format!(
            "Fox identity and product rule {} cases; adjoint max {:.2e}; det product max {:.2e}; conjugation max {:.2e}; column max {:.2e}; Fox on reps max {:.2e}",
            fox.cases, adjoint.max, det.max, conj.max, column.max, fox_rep.max
        ),
    )
}

fn criterion_8() -> (bool, String) {
    let mut rejected = 0;
    let mut total = 0;
    let mut min_residual = f64::INFINITY;
    for n in TWIST_NS {
        for s in twist_s_values() {
            for u in riley_roots(n, s).unwrap().roots.roots {
                total += 1;
                let params = TwistRepParams::unchecked(n, s, u + 1e-2).unwrap();
                min_residual = min_residual.min(params.riley_residual);
                let relation_check = Representation::new(
                    KnotPresentation::twist(n).unwrap(),
                    vec![params.rho_a(), params.rho_b()],
                );
                let via_builder = build_twist_rep(&params);
                if matches!(relation_check, Err(Error::RelationViolated { .. })) && via_builder.is_err() {
                    rejected += 1;
                }
            }
        }
    }
    let params = TorusRepParams::new(2, 3, 1, 1, conj_params()[0]).unwrap();
    let rep = build_torus_rep(&params).unwrap();
    let mut images = rep.images().to_vec();
    images[0] = images[0] * SL2Matrix::diag(c(1e-2f64.exp(), 0.0));
    total += 1;
    if matches!(
        Representation::new(rep.presentation().clone(), images),
        Err(Error::RelationViolated { .. })
    ) {
        rejected += 1;
    }
    (
        rejected == total,
        format!("{rejected}/{total} perturbed representations rejected; smallest Riley residual {min_residual:.2e}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> (bool, String)); 8] = [
        ("torus closed-form agreement", criterion_1),
        ("torus torsion", criterion_2),
        ("twist closed-form agreement", criterion_3),
        ("trefoil as J(2,2): torsion -3", criterion_4),
        ("Omega closed form vs direct sum", criterion_5),
        ("identity suites", criterion_6),
        ("structural properties", criterion_7),
        ("negative control", criterion_8),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = run();
        all &= ok;
        println!("criterion {}: {} - {name}: {detail}", i + 1, if ok { "PASS" } else { "FAIL" });
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
