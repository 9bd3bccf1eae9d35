//! Grid checks comparing the pipeline with the closed forms, plus the
//! identity suites. Cases run in a fixed order, so summaries are
//! reproducible.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::closed_forms::{lemma_d_residual, lemma_x_residual, omega_closed, omega_direct};
use crate::laurent::{format_complex, ComplexScalar};
use crate::report::{relative_error, torus_report_for, twist_report, Report, Status};
use crate::representations::{
    build_torus_rep, build_twist_rep, riley_roots, torus_components, Representation, SL2Matrix,
    TorusRepParams, TwistRepParams, DEFAULT_CONJ_PARAM,
};
use crate::{Error, Result};

pub const TORUS_GRID: [(i64, i64); 5] = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)];
pub const TWIST_NS: [i64; 5] = [1, 2, 3, -1, -2];
pub const LEMMA_TOL: f64 = 1e-9;
pub const CHEBYSHEV_TOL: f64 = 1e-10;
pub const TREFOIL_TORSION_TOL: f64 = 1e-9;

/// Three generic conjugation parameters for the torus grid.
pub fn torus_conj_params() -> [ComplexScalar; 3] {
    [DEFAULT_CONJ_PARAM, Complex64::new(1.7, -0.4), Complex64::new(-0.6, 1.3)]
}

/// The sampled Riley variables `2`, `1` and `e^{i pi/5}`.
pub fn twist_s_values() -> [ComplexScalar; 3] {
    [Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0), Complex64::from_polar(1.0, PI / 5.0)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Torus,
    Twist,
    Lemmas,
    Omega,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "torus" => Ok(Suite::Torus),
            "twist" => Ok(Suite::Twist),
            "lemmas" => Ok(Suite::Lemmas),
            "omega" => Ok(Suite::Omega),
            "all" => Ok(Suite::All),
            _ => Err(Error::InvalidParameters(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckOptions {
    pub tol: f64,
    /// Shifts each representation off the relation variety by this amount;
    /// every affected case is then expected to fail.
    pub perturb: Option<f64>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { tol: crate::DEFAULT_TOL, perturb: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseResult {
    pub label: String,
    pub residual: f64,
    pub passed: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub name: String,
    pub threshold: f64,
    pub cases: usize,
    pub failed: usize,
    pub skipped: usize,
    pub max_residual: f64,
    pub failures: Vec<CaseResult>,
}

impl SuiteSummary {
    fn new(name: &str, threshold: f64) -> Self {
        SuiteSummary {
            name: name.to_string(),
            threshold,
            cases: 0,
            failed: 0,
            skipped: 0,
            max_residual: 0.0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.cases > self.skipped
    }

    fn record(&mut self, label: String, residual: f64, passed: bool, note: Option<String>) {
        self.cases += 1;
        if residual.is_finite() {
            self.max_residual = self.max_residual.max(residual);
        }
        if !passed {
            self.failed += 1;
            self.failures.push(CaseResult { label, residual, passed, note });
        }
    }

    fn check(&mut self, label: String, residual: f64) {
        let ok = residual <= self.threshold;
        self.record(label, residual, ok, None);
    }

    fn error(&mut self, label: String, err: &Error) {
        self.record(label, f64::INFINITY, false, Some(err.to_string()));
    }

    fn skip(&mut self) {
        self.cases += 1;
        self.skipped += 1;
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<10} {} cases={} failed={} skipped={} max_residual={:.3e} threshold={:.0e}",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases,
            self.failed,
            self.skipped,
            self.max_residual,
            self.threshold
        )?;
        for c in &self.failures {
            write!(f, "\n    {}: residual {:.3e}", c.label, c.residual)?;
            if let Some(note) = &c.note {
                write!(f, " ({note})")?;
            }
        }
        Ok(())
    }
}

pub fn run(suite: Suite, opts: &CheckOptions) -> Vec<SuiteSummary> {
    match suite {
        Suite::Torus => vec![torus_suite(opts)],
        Suite::Twist => vec![twist_suite(opts)],
        Suite::Lemmas => lemma_suites(opts),
        Suite::Omega => vec![omega_suite(opts)],
        Suite::All => {
            let mut all = vec![torus_suite(opts), twist_suite(opts)];
            all.extend(lemma_suites(opts));
            all.push(omega_suite(opts));
            all
        }
    }
}

fn report_residual(r: &Report) -> f64 {
    let res = &r.residuals;
    [res.delta, res.torsion_relative, Some(res.fox_identity)]
        .into_iter()
        .flatten()
        .fold(0.0, f64::max)
}

fn perturbed_torus_rep(params: &TorusRepParams, eps: f64) -> Result<Representation> {
    let rep = build_torus_rep(params)?;
    let mut images = rep.images().to_vec();
    // rho(c) is diagonal, so this moves its eigenvalues off the p-th roots of -1 or 1
    images[0] = images[0] * SL2Matrix::diag(Complex64::new(eps.exp(), 0.0));
    Representation::new(rep.presentation().clone(), images)
}

pub fn torus_suite(opts: &CheckOptions) -> SuiteSummary {
    let mut summary = SuiteSummary::new("torus", opts.tol);
    for (p, q) in TORUS_GRID {
        for (k, l) in torus_components(p, q) {
            for v in torus_conj_params() {
                let label = format!("p={p} q={q} k={k} l={l} v={}", format_complex(v));
                let outcome = TorusRepParams::new(p, q, k, l, v).and_then(|params| {
                    let rep = match opts.perturb {
                        Some(eps) => perturbed_torus_rep(&params, eps)?,
                        None => build_torus_rep(&params)?,
                    };
                    torus_report_for(&params, &rep, None, opts.tol)
                });
                match outcome {
                    Ok(r) => {
                        let ok = r.status == Status::Pass;
                        summary.record(label, report_residual(&r), ok, None);
                    }
                    Err(e) => summary.error(label, &e),
                }
            }
        }
    }
    summary
}

pub fn twist_suite(opts: &CheckOptions) -> SuiteSummary {
    let mut summary = SuiteSummary::new("twist", opts.tol);
    for n in TWIST_NS {
        for s in twist_s_values() {
            let roots = match riley_roots(n, s) {
                Ok(r) => r.roots.roots,
                Err(e) => {
                    summary.error(format!("n={n} s={}", format_complex(s)), &e);
                    continue;
                }
            };
            for (i, u) in roots.into_iter().enumerate() {
                let label = format!("n={n} s={} root={}", format_complex(s), i + 1);
                let params = match opts.perturb {
                    Some(eps) => TwistRepParams::unchecked(n, s, u + eps),
                    None => TwistRepParams::new(n, s, u),
                };
                match params.and_then(|p| twist_report(&p, i + 1, None, opts.tol)) {
                    Ok(r) if r.status == Status::Singular => summary.skip(),
                    Ok(r) => {
                        let mut residual = report_residual(&r);
                        let mut ok = r.status == Status::Pass;
                        if n == 1 {
                            let trefoil = r
                                .torsion
                                .map_or(f64::INFINITY, |t| relative_error(t, Complex64::new(-3.0, 0.0)));
                            residual = residual.max(trefoil);
                            ok &= trefoil <= TREFOIL_TORSION_TOL.max(opts.tol);
                        }
                        summary.record(label, residual, ok, None);
                    }
                    Err(e) => summary.error(label, &e),
                }
            }
        }
    }
    summary
}

/// Sample points `(s, u)` for the identity suites.
fn random_points(count: usize, seed: u64) -> Vec<(ComplexScalar, ComplexScalar)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut z = move || Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
    (0..count)
        .map(|_| {
            let s = z();
            (s, z())
        })
        .filter(|(s, _)| s.norm() > 0.1)
        .collect()
}

pub fn lemma_suites(opts: &CheckOptions) -> Vec<SuiteSummary> {
    let mut lemma_d = SuiteSummary::new("lemma_d", opts.tol.min(LEMMA_TOL));
    let mut cheb = SuiteSummary::new("chebyshev", opts.tol.min(CHEBYSHEV_TOL));
    for n in (-8..=8).filter(|&n| n != 0) {
        for (i, (s, u)) in random_points(12, (100 + n) as u64).into_iter().enumerate() {
            let label = format!("n={n} sample={i}");
            match lemma_d_residual(n, s, u) {
                Ok(r) => lemma_d.check(label.clone(), r.max()),
                Err(Error::RepeatedEigenvalue(_)) => lemma_d.skip(),
                Err(e) => lemma_d.error(label.clone(), &e),
            }
            match TwistRepParams::unchecked(n, s, u) {
                Ok(p) => cheb.check(label, chebyshev_invariant_residual(&p)),
                Err(e) => cheb.error(label, &e),
            }
        }
    }

    let mut lemma_x = SuiteSummary::new("lemma_x", opts.tol.min(LEMMA_TOL));
    for n in (-5..=5).filter(|&n| n != 0) {
        for s in twist_s_values() {
            let roots = match riley_roots(n, s) {
                Ok(r) => r.roots.roots,
                Err(e) => {
                    lemma_x.error(format!("n={n} s={}", format_complex(s)), &e);
                    continue;
                }
            };
            for (i, u) in roots.into_iter().enumerate() {
                let label = format!("n={n} s={} root={}", format_complex(s), i + 1);
                match lemma_x_residual(n, s, u) {
                    Ok(r) => lemma_x.check(label, r),
                    Err(Error::Singular(_)) => lemma_x.skip(),
                    Err(e) => lemma_x.error(label, &e),
                }
            }
        }
    }
    vec![lemma_d, lemma_x, cheb]
}

/// `|X^2 - gamma X Y + Y^2 - 1|` relative to the largest of the three terms.
pub fn chebyshev_invariant_residual(p: &TwistRepParams) -> f64 {
    let (x, y, g) = (p.cheb_x, p.cheb_y, p.gamma);
    let terms = [x * x, g * x * y, y * y];
    let scale = terms.iter().map(|t| t.norm()).fold(1.0, f64::max);
    (terms[0] - terms[1] + terms[2] - 1.0).norm() / scale
}

pub fn omega_suite(opts: &CheckOptions) -> SuiteSummary {
    let mut summary = SuiteSummary::new("omega", opts.tol);
    for n in 1..=5 {
        for s in twist_s_values() {
            let roots = match riley_roots(n, s) {
                Ok(r) => r.roots.roots,
                Err(e) => {
                    summary.error(format!("n={n} s={}", format_complex(s)), &e);
                    continue;
                }
            };
            for (i, u) in roots.into_iter().enumerate() {
                let label = format!("n={n} s={} root={}", format_complex(s), i + 1);
                let closed = match omega_closed(n, s, u) {
                    Ok(m) => m,
                    Err(Error::Singular(_)) => {
                        summary.skip();
                        continue;
                    }
                    Err(e) => {
                        summary.error(label, &e);
                        continue;
                    }
                };
                let direct = TwistRepParams::new(n, s, u)
                    .and_then(|p| build_twist_rep(&p))
                    .and_then(|rep| omega_direct(n, &rep));
                match direct {
                    Ok(d) => summary.check(label, closed.distance(&d) / d.max_abs().max(1.0)),
                    Err(e) => summary.error(label, &e),
                }
            }
        }
    }
    summary
}
