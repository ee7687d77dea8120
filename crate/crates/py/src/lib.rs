//! Python bindings: counting, enumeration, path bijections and count sequences.
//!
//! Elements cross the boundary as tuples of 1-based coordinates and big
//! counts as Python integers.

use ics_core::bijections::{ics_to_motzkin, ics_to_walk, motzkin_to_ics_in, walk_to_ics_in};
use ics_core::paths::{motzkin_stats, walk_stats, MotzkinWord, QuarterWalk};
use ics_core::poset::{
    build_poset, count_ics, enumerate_ics, find_violation, subset_stats, ElementSubset, EnumerationConfig,
    FinitePoset, PosetSpec,
};
use ics_core::series::{b_minuscule_counts, b_root_counts, rectangle_counts, truncated_count, type_a_counts, SeriesConfig};
use num_bigint::BigUint;
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

type Label = Vec<usize>;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn poset(spec: &str) -> PyResult<FinitePoset> {
    let spec: PosetSpec = spec.parse().map_err(value_error)?;
    build_poset(&spec).map_err(value_error)
}

fn oracle_config(max_elements: usize) -> EnumerationConfig {
    EnumerationConfig::with_max_elements(max_elements)
}

fn ics(p: &FinitePoset, labels: &[Label]) -> PyResult<ElementSubset> {
    let s = p.subset_from_labels(labels.iter().map(Vec::as_slice)).map_err(value_error)?;
    if let Some((x, z, y)) = find_violation(p, &s) {
        return Err(PyValueError::new_err(format!(
            "not interval-closed: {:?} < {:?} < {:?} with the middle element missing",
            p.label(x),
            p.label(z),
            p.label(y)
        )));
    }
    Ok(s)
}

fn series_error(e: ics_core::series::SeriesError) -> PyErr {
    PyOverflowError::new_err(e.to_string())
}

/// Number of interval-closed sets, by brute-force enumeration.
#[pyfunction]
#[pyo3(signature = (spec, max_elements = 30))]
fn count(spec: &str, max_elements: usize) -> PyResult<BigUint> {
    count_ics(&poset(spec)?, &oracle_config(max_elements)).map_err(|e| PyOverflowError::new_err(e.to_string()))
}

/// Interval-closed sets in ascending encoding order, each a sorted list of element tuples.
#[pyfunction]
#[pyo3(signature = (spec, limit = None, max_elements = 30))]
fn enumerate(spec: &str, limit: Option<usize>, max_elements: usize) -> PyResult<Vec<Vec<Label>>> {
    let p = poset(spec)?;
    let sets = enumerate_ics(&p, &oracle_config(max_elements), limit)
        .map_err(|e| PyOverflowError::new_err(e.to_string()))?;
    Ok(sets.map(|s| p.subset_labels(&s)).collect())
}

#[pyfunction]
fn is_interval_closed(spec: &str, elements: Vec<Label>) -> PyResult<bool> {
    let p = poset(spec)?;
    let s = p.subset_from_labels(elements.iter().map(Vec::as_slice)).map_err(value_error)?;
    Ok(find_violation(&p, &s).is_none())
}

/// Bicolored Motzkin word of a set in a chain product, as `U D 1 2` tokens.
#[pyfunction]
fn to_motzkin(spec: &str, elements: Vec<Label>) -> PyResult<String> {
    let p = poset(spec)?;
    let s = ics(&p, &elements)?;
    Ok(ics_to_motzkin(&p, &s).map_err(value_error)?.to_string())
}

#[pyfunction]
fn from_motzkin(spec: &str, word: &str) -> PyResult<Vec<Label>> {
    let p = poset(spec)?;
    let word: MotzkinWord = word.parse().map_err(value_error)?;
    let s = motzkin_to_ics_in(&p, &word).map_err(value_error)?;
    Ok(p.subset_labels(&s))
}

/// Quarter-plane walk of a set in a rectangle-framed poset, as `e w se nw` tokens.
#[pyfunction]
fn to_walk(spec: &str, elements: Vec<Label>) -> PyResult<String> {
    let p = poset(spec)?;
    let s = ics(&p, &elements)?;
    Ok(ics_to_walk(&p, &s).map_err(value_error)?.to_string())
}

#[pyfunction]
fn from_walk(spec: &str, walk: &str) -> PyResult<Vec<Label>> {
    let p = poset(spec)?;
    let frame = p.frame().ok_or_else(|| value_error(format!("{spec} has no walk encoding")))?;
    let walk = QuarterWalk::parse(frame.n - frame.r, walk).map_err(value_error)?;
    let s = walk_to_ics_in(&p, &walk).map_err(value_error)?;
    Ok(p.subset_labels(&s))
}

/// Set statistics, plus the matching path statistics where the poset has an encoding.
#[pyfunction]
fn stats<'py>(py: Python<'py>, spec: &str, elements: Vec<Label>) -> PyResult<Bound<'py, PyDict>> {
    let p = poset(spec)?;
    let s = ics(&p, &elements)?;
    let st = subset_stats(&p, &s);
    let d = PyDict::new(py);
    d.set_item("cardinality", st.cardinality)?;
    d.set_item("components", st.component_count)?;
    d.set_item("incomparable", st.incomparable_count)?;
    d.set_item("minimal", st.minimal_in_subset)?;
    d.set_item("hits_all_files", st.hits_all_files)?;
    if let Ok(word) = ics_to_motzkin(&p, &s) {
        let ms = motzkin_stats(&word).map_err(value_error)?;
        d.set_item("area", ms.area)?;
        d.set_item("returns", ms.returns)?;
        d.set_item("axis_run_product_sum", ms.axis_run_product_sum)?;
    }
    if let Ok(walk) = ics_to_walk(&p, &s) {
        let ws = walk_stats(&walk).map_err(value_error)?;
        d.set_item("height_sum", ws.height_sum)?;
        d.set_item("x_axis_returns", ws.x_axis_returns)?;
        d.set_item("y_axis_returns_excl_last", ws.y_axis_returns_excl_last)?;
    }
    Ok(d)
}

/// `|IC([m] x [n])|` for `m, n <= max` as a nested list.
#[pyfunction]
#[pyo3(signature = (max, order = 40))]
fn rectangle_table(max: usize, order: usize) -> PyResult<Vec<Vec<BigUint>>> {
    rectangle_counts(max, max, &SeriesConfig::with_order(order)).map_err(series_error)
}

/// Type-A root poset counts for `n = 1..=n_max`.
#[pyfunction]
#[pyo3(signature = (n_max, order = 40))]
fn type_a_sequence(n_max: usize, order: usize) -> PyResult<Vec<BigUint>> {
    type_a_counts(n_max, &SeriesConfig::with_order(order)).map_err(series_error)
}

/// Type-B minuscule counts for `n = 0..=n_max`.
#[pyfunction]
#[pyo3(signature = (n_max, order = 40))]
fn b_minuscule_sequence(n_max: usize, order: usize) -> PyResult<Vec<BigUint>> {
    b_minuscule_counts(n_max, &SeriesConfig::with_order(order)).map_err(series_error)
}

/// Type-B root poset counts for `n = 1..=n_max`.
#[pyfunction]
#[pyo3(signature = (n_max, order = 40))]
fn b_root_sequence(n_max: usize, order: usize) -> PyResult<Vec<BigUint>> {
    b_root_counts(n_max, &SeriesConfig::with_order(order)).map_err(series_error)
}

#[pyfunction]
#[pyo3(signature = (m, n, r, order = 40))]
fn truncated(m: usize, n: usize, r: usize, order: usize) -> PyResult<BigUint> {
    truncated_count(m, n, r, &SeriesConfig::with_order(order)).map_err(series_error)
}

#[pymodule]
fn ics_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(is_interval_closed, m)?)?;
    m.add_function(wrap_pyfunction!(to_motzkin, m)?)?;
    m.add_function(wrap_pyfunction!(from_motzkin, m)?)?;
    m.add_function(wrap_pyfunction!(to_walk, m)?)?;
    m.add_function(wrap_pyfunction!(from_walk, m)?)?;
    m.add_function(wrap_pyfunction!(stats, m)?)?;
    m.add_function(wrap_pyfunction!(rectangle_table, m)?)?;
    m.add_function(wrap_pyfunction!(type_a_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(b_minuscule_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(b_root_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(truncated, m)?)?;
    Ok(())
}
