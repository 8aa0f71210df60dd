//! Python bindings. Reports cross the boundary as plain dicts and lists with
//! the same field names as the JSON emitted by the CLI.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use sylowpi::composition::{self, CompositionSpec, HallSplit, SplitHypothesis};
use sylowpi::crosscheck as sweep;
use sylowpi::permbrute::{self, Lattice, RealizationSpec, LATTICE_BOUND};
use sylowpi::{criterion, tables, PrimeSet, SimpleGroupId};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(err)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn primes(list: Vec<u64>) -> PyResult<PrimeSet> {
    PrimeSet::from_list(&list).map_err(err)
}

/// Primes of a comma-separated list such as `"2,3,7"`, sorted.
#[pyfunction]
fn parse_primes(text: &str) -> PyResult<Vec<u64>> {
    let set: PrimeSet = text.parse().map_err(err)?;
    Ok(set.iter().collect())
}

/// Canonical form of a simple group spec such as `"Lie:2A:4:3"`.
#[pyfunction]
fn parse_group(spec: &str) -> PyResult<String> {
    spec.parse::<SimpleGroupId>().map(|g| g.to_string()).map_err(err)
}

/// Arithmetic `D_π` verdict for a simple group, with per-condition reports.
#[pyfunction]
fn decide_dpi_simple<'py>(py: Python<'py>, group: &str, pi: Vec<u64>) -> PyResult<Bound<'py, PyAny>> {
    let id: SimpleGroupId = group.parse().map_err(err)?;
    to_py(py, &criterion::decide_dpi_simple(&id, &primes(pi)?).map_err(err)?)
}

/// `D_π` verdict from composition factors such as `"Alt:5,Cyclic:7"`.
#[pyfunction]
fn decide_dpi_composite<'py>(py: Python<'py>, factors: &str, pi: Vec<u64>) -> PyResult<Bound<'py, PyAny>> {
    let spec: CompositionSpec = factors.parse().map_err(err)?;
    to_py(py, &composition::decide_dpi_composite(&spec, &primes(pi)?).map_err(err)?)
}

/// `D_σ ∧ D_τ` with the Hall split status given as `"assumed"`,
/// `"brute_verified"` or `"refuted"`.
#[pyfunction]
#[pyo3(signature = (factors, sigma, tau, status = "assumed"))]
fn wielandt_split<'py>(
    py: Python<'py>,
    factors: &str,
    sigma: Vec<u64>,
    tau: Vec<u64>,
    status: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let spec: CompositionSpec = factors.parse().map_err(err)?;
    let status: HallSplit = serde_json::from_value(serde_json::Value::String(status.to_string())).map_err(err)?;
    let hyp = SplitHypothesis { sigma: primes(sigma)?, tau: primes(tau)?, status };
    to_py(py, &composition::wielandt_split(&spec, &hyp).map_err(err)?)
}

/// Maximal `π`-subgroup classes of a realized group such as `"Alt:5"` or
/// `"Alt:5*Cyclic:7"`.
#[pyfunction]
#[pyo3(signature = (group, pi, max_order = LATTICE_BOUND))]
fn brute<'py>(py: Python<'py>, group: &str, pi: Vec<u64>, max_order: usize) -> PyResult<Bound<'py, PyAny>> {
    let spec: RealizationSpec = group.parse().map_err(err)?;
    let pi = primes(pi)?;
    let g = permbrute::realize_with_table(&spec, max_order).map_err(err)?;
    let lattice = Lattice::build_with_bound(&g, max_order).map_err(err)?;
    to_py(py, &permbrute::maximal_pi_subgroups(&lattice, &pi))
}

/// Brute force against the arithmetic verdict for every `π ⊆ π(G)`.
#[pyfunction]
#[pyo3(signature = (group, max_order = LATTICE_BOUND))]
fn crosscheck<'py>(py: Python<'py>, group: &str, max_order: usize) -> PyResult<Bound<'py, PyAny>> {
    let spec: RealizationSpec = group.parse().map_err(err)?;
    to_py(py, &sweep::crosscheck(&spec, max_order).map_err(err)?)
}

/// All built-in tables.
#[pyfunction]
fn tables_dump(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    to_py(py, &tables::dump())
}

#[pymodule]
#[pyo3(name = "sylowpi")]
pub fn sylowpi_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(parse_primes, m)?)?;
    m.add_function(wrap_pyfunction!(parse_group, m)?)?;
    m.add_function(wrap_pyfunction!(decide_dpi_simple, m)?)?;
    m.add_function(wrap_pyfunction!(decide_dpi_composite, m)?)?;
    m.add_function(wrap_pyfunction!(wielandt_split, m)?)?;
    m.add_function(wrap_pyfunction!(brute, m)?)?;
    m.add_function(wrap_pyfunction!(crosscheck, m)?)?;
    m.add_function(wrap_pyfunction!(tables_dump, m)?)?;
    m.add("LATTICE_BOUND", LATTICE_BOUND)?;
    Ok(())
}
