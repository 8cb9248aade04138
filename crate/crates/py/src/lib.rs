//! Python bindings. Polynomials, curves and family specs travel as strings in
//! the same syntax the command line accepts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use toric_cremona::birational::{is_birational, RationalPlaneMap};
use toric_cremona::curves::{implicitize_curve, reduce_to_type_i, ParamCurve};
use toric_cremona::families::{build_family, verify_classification, Classification, FamilySpec};
use toric_cremona::germs::{delta_closed, enumerate_genus_solutions};
use toric_cremona::patches::{numeric_reparameterization, LatticePatch};
use toric_cremona::toric::toric_polar_system;
use toric_cremona::{Error, Poly};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Reduced toric polar system and birationality verdict of a form.
/// Returns `(verdict, reduced_components, fiber_counts)`.
#[pyfunction]
#[pyo3(signature = (form, trials = 5, seed = 0))]
fn check(form: &str, trials: usize, seed: u64) -> PyResult<(String, Vec<String>, Vec<usize>)> {
    let f: Poly = form.parse().map_err(|e| err(Error::from(e)))?;
    let sys = toric_polar_system(&f).map_err(err)?;
    let report = is_birational(&RationalPlaneMap::from_system(&sys), trials.max(1), seed).map_err(err)?;
    Ok((
        report.verdict.to_string(),
        sys.reduced.iter().map(|p| p.to_string()).collect(),
        report.trials.iter().map(|t| t.count).collect(),
    ))
}

/// The form of a family spec such as `trapezoid:1,2,3`.
#[pyfunction]
fn family(spec: &str) -> PyResult<String> {
    let spec: FamilySpec = spec.parse().map_err(err)?;
    Ok(build_family(&spec).map_err(err)?.to_string())
}

/// Matches a factored form against the families; `None` when unmatched.
#[pyfunction]
fn classify(factors: Vec<(String, u32)>) -> PyResult<Option<String>> {
    let parsed = factors
        .iter()
        .map(|(p, m)| p.parse::<Poly>().map(|p| (p, *m)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| err(Error::from(e)))?;
    Ok(match verify_classification(&parsed).map_err(err)? {
        Classification::MatchedFamily { spec, .. } => Some(spec.to_string()),
        Classification::Unmatched(_) => None,
    })
}

/// Cremona steps down to type I; returns the step descriptions and the result.
#[pyfunction]
#[pyo3(signature = (curve, max_steps = 20))]
fn reduce(curve: &str, max_steps: usize) -> PyResult<(Vec<String>, String)> {
    let c: ParamCurve = curve.parse().map_err(err)?;
    let r = reduce_to_type_i(&c, max_steps).map_err(err)?;
    Ok((r.steps.iter().map(|s| s.to_string()).collect(), r.result.to_string()))
}

#[pyfunction]
fn implicitize(curve: &str) -> PyResult<String> {
    let c: ParamCurve = curve.parse().map_err(err)?;
    Ok(implicitize_curve(&c).map_err(err)?.to_string())
}

#[pyfunction]
fn delta(a: u64, b: u64) -> PyResult<u64> {
    if a == 0 || b == 0 {
        return Err(PyValueError::new_err("germ exponents must be positive"));
    }
    Ok(delta_closed(a, b))
}

/// `(a, b, c, region)` for each solution in degree `d`.
#[pyfunction]
fn enumerate(d: i64) -> PyResult<Vec<(i64, i64, i64, String)>> {
    if d < 2 {
        return Err(PyValueError::new_err("degree must be at least 2"));
    }
    Ok(enumerate_genus_solutions(d)
        .into_iter()
        .map(|s| (s.abc.0, s.abc.1, s.abc.2, s.region.to_string()))
        .collect())
}

/// Parameter mapped by the tautological map onto `(s, t)`.
#[pyfunction]
#[pyo3(signature = (patch, s, t, tol = 1e-10))]
fn reparameterize(patch: &str, s: f64, t: f64, tol: f64) -> PyResult<(f64, f64)> {
    let p: LatticePatch = patch.parse().map_err(err)?;
    numeric_reparameterization(&p, (s, t), tol).map_err(err)
}

#[pymodule]
fn toric_cremona_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(implicitize, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(reparameterize, m)?)?;
    Ok(())
}
