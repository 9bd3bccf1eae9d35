//! Python bindings: `import adtwist`.

use adtwist_core::checks::{self, CheckOptions, Suite};
use adtwist_core::closed_forms;
use adtwist_core::report::{self, RootSelector};
use adtwist_core::representations::{self as reps, DEFAULT_CONJ_PARAM};
use adtwist_core::wada;
use adtwist_core::word_calculus::fox_derivative as core_fox_derivative;
use adtwist_core::{Error, LaurentPoly, Word};
use num_bigint::BigInt;
use num_complex::Complex64;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::InvalidParameters(_)
        | Error::ComplexLiteral(_)
        | Error::Reducible(_)
        | Error::DimensionMismatch(_)
        | Error::RileyResidual(_)
        | Error::RelationViolated { .. }
        | Error::NotUnimodular(_) => PyValueError::new_err(e.to_string()),
        _ => PyArithmeticError::new_err(e.to_string()),
    }
}

type Poly = (i64, Vec<Complex64>);

fn poly_out(p: &LaurentPoly) -> Poly {
    (p.min_degree(), p.coeffs().to_vec())
}

/// `t^shift num(t) / den(t)`, kept in canonical form.
#[pyclass(name = "RationalFunction", frozen)]
struct PyRationalFunction(adtwist_core::RationalFunction);

#[pymethods]
impl PyRationalFunction {
    #[new]
    fn new(num: Poly, den: Poly) -> PyResult<Self> {
        let f = adtwist_core::RationalFunction::new(
            LaurentPoly::new(num.0, num.1),
            LaurentPoly::new(den.0, den.1),
        )
        .map_err(to_py)?;
        Ok(PyRationalFunction(f))
    }

    /// `(min_degree, coefficients)` of the numerator, shift included.
    #[getter]
    fn num(&self) -> Poly {
        poly_out(&self.0.shifted_num())
    }

    #[getter]
    fn den(&self) -> Poly {
        poly_out(self.0.den())
    }

    fn __call__(&self, t: Complex64) -> PyResult<Complex64> {
        self.0.eval(t).map_err(to_py)
    }

    /// `(found, sign, power, error)` with `other = sign t^power self`.
    #[pyo3(signature = (other, tol = adtwist_core::DEFAULT_TOL))]
    fn equal_up_to_unit(&self, other: &PyRationalFunction, tol: f64) -> (bool, i32, i64, f64) {
        let r = self.0.equal_up_to_unit(&other.0, tol);
        (r.found, r.sign, r.power, r.error)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("RationalFunction(({}) / ({}))", self.0.shifted_num(), self.0.den())
    }
}

/// An `SL(2, C)` representation of a torus- or twist-knot group.
#[pyclass(name = "Representation", frozen)]
struct PyRepresentation(adtwist_core::Representation);

#[pymethods]
impl PyRepresentation {
    /// The representation of `T(p, q)` on component `(k, l)` at parameter `conj`.
    #[staticmethod]
    #[pyo3(signature = (p, q, k, l, conj = None))]
    fn torus(p: i64, q: i64, k: i64, l: i64, conj: Option<Complex64>) -> PyResult<Self> {
        let params = adtwist_core::TorusRepParams::new(p, q, k, l, conj.unwrap_or(DEFAULT_CONJ_PARAM))
            .map_err(to_py)?;
        Ok(PyRepresentation(reps::build_torus_rep(&params).map_err(to_py)?))
    }

    /// The representation of `J(2, 2n)` at a Riley root `(s, u)`.
    #[staticmethod]
    fn twist(n: i64, s: Complex64, u: Complex64) -> PyResult<Self> {
        let params = adtwist_core::TwistRepParams::new(n, s, u).map_err(to_py)?;
        Ok(PyRepresentation(reps::build_twist_rep(&params).map_err(to_py)?))
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.0.presentation().names().to_vec()
    }

    #[getter]
    fn relators(&self) -> Vec<String> {
        let p = self.0.presentation();
        p.relators().iter().map(|r| p.format_word(r)).collect()
    }

    #[getter]
    fn images(&self) -> Vec<[[Complex64; 2]; 2]> {
        self.0.images().iter().map(|g| g.0).collect()
    }

    fn relation_residual(&self) -> f64 {
        self.0.relation_residual()
    }

    fn conjugate(&self, g: [[Complex64; 2]; 2]) -> PyResult<Self> {
        let g = adtwist_core::SL2Matrix::new(g).map_err(to_py)?;
        Ok(PyRepresentation(self.0.conjugate(&g).map_err(to_py)?))
    }

    /// `Delta(t)` with generator `column` (0-based) removed.
    #[pyo3(signature = (column = None))]
    fn twisted_alexander(&self, column: Option<usize>) -> PyResult<PyRationalFunction> {
        let ta = wada::twisted_alexander(&self.0, column).map_err(to_py)?;
        Ok(PyRationalFunction(ta.delta))
    }

    /// `-lim_{t->1} Delta(t) / (t - 1)`.
    #[pyo3(signature = (column = None))]
    fn torsion(&self, column: Option<usize>) -> PyResult<Complex64> {
        let ta = wada::twisted_alexander(&self.0, column).map_err(to_py)?;
        Ok(wada::torsion_limit(&ta.delta).map_err(to_py)?.value)
    }

    fn fox_identity_residual(&self) -> PyResult<f64> {
        wada::fox_identity_residual(&self.0).map_err(to_py)
    }
}

/// Roots `u` of the Riley polynomial of `J(2, 2n)` at `s`, sorted by `(re, im)`.
#[pyfunction]
fn riley_roots(n: i64, s: Complex64) -> PyResult<Vec<Complex64>> {
    Ok(reps::riley_roots(n, s).map_err(to_py)?.roots.roots)
}

#[pyfunction]
fn torus_delta_closed(p: i64, q: i64, k: i64, l: i64) -> PyResult<PyRationalFunction> {
    Ok(PyRationalFunction(closed_forms::torus_delta_closed(p, q, k, l).map_err(to_py)?))
}

#[pyfunction]
fn torus_torsion_closed(p: i64, q: i64, k: i64, l: i64) -> PyResult<f64> {
    closed_forms::torus_torsion_closed(p, q, k, l).map_err(to_py)
}

/// Closed-form `Delta` for `J(2, 2n)` in terms of `x^2 = (tr a)^2` and `y = tr ab^-1`.
#[pyfunction]
fn twist_delta_closed(n: i64, x2: Complex64, y: Complex64) -> PyResult<PyRationalFunction> {
    Ok(PyRationalFunction(closed_forms::twist_delta_closed(n, x2, y).map_err(to_py)?))
}

#[pyfunction]
fn twist_torsion_closed(n: i64, x2: Complex64, y: Complex64) -> PyResult<Complex64> {
    closed_forms::twist_torsion_closed(n, x2, y).map_err(to_py)
}

/// Fox derivative of a word given as `[(generator, exponent), ...]`;
/// returns `[(word, coefficient), ...]` in word order.
#[pyfunction]
fn fox_derivative(word: Vec<(usize, i64)>, generator: usize) -> Vec<(Vec<(usize, i64)>, BigInt)> {
    core_fox_derivative(&Word::from_letters(word), generator)
        .terms()
        .map(|(w, c)| (w.letters().to_vec(), c.clone()))
        .collect()
}

/// JSON comparison report for a torus-knot representation.
#[pyfunction]
#[pyo3(signature = (p, q, k, l, conj = None, column = None, tol = adtwist_core::DEFAULT_TOL))]
fn torus_report(
    p: i64,
    q: i64,
    k: i64,
    l: i64,
    conj: Option<Complex64>,
    column: Option<usize>,
    tol: f64,
) -> PyResult<String> {
    let params = adtwist_core::TorusRepParams::new(p, q, k, l, conj.unwrap_or(DEFAULT_CONJ_PARAM))
        .map_err(to_py)?;
    report::torus_report(&params, column, tol).and_then(|r| r.to_json()).map_err(to_py)
}

/// JSON array of comparison reports, one per Riley root.
#[pyfunction]
#[pyo3(signature = (n, s, tol = adtwist_core::DEFAULT_TOL))]
fn twist_reports(n: i64, s: Complex64, tol: f64) -> PyResult<String> {
    let rows = report::twist_reports(n, s, RootSelector::All, None, tol).map_err(to_py)?;
    serde_json::to_string_pretty(&rows).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Runs a check suite; returns `[(name, passed, max_residual), ...]`.
#[pyfunction]
#[pyo3(signature = (suite = "all", tol = adtwist_core::DEFAULT_TOL))]
fn check(suite: &str, tol: f64) -> PyResult<Vec<(String, bool, f64)>> {
    let suite: Suite = suite.parse().map_err(to_py)?;
    Ok(checks::run(suite, &CheckOptions { tol, perturb: None })
        .into_iter()
        .map(|s| (s.name.clone(), s.passed(), s.max_residual))
        .collect())
}

#[pymodule]
fn adtwist(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRationalFunction>()?;
    m.add_class::<PyRepresentation>()?;
    m.add_function(wrap_pyfunction!(riley_roots, m)?)?;
    m.add_function(wrap_pyfunction!(torus_delta_closed, m)?)?;
    m.add_function(wrap_pyfunction!(torus_torsion_closed, m)?)?;
    m.add_function(wrap_pyfunction!(twist_delta_closed, m)?)?;
    m.add_function(wrap_pyfunction!(twist_torsion_closed, m)?)?;
    m.add_function(wrap_pyfunction!(fox_derivative, m)?)?;
    m.add_function(wrap_pyfunction!(torus_report, m)?)?;
    m.add_function(wrap_pyfunction!(twist_reports, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    Ok(())
}
