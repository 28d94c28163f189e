//! Python bindings. Results cross the boundary in their text forms.

use dbflab::checks::{run_check, Check, CheckArgs, Context};
use dbflab::conjecture::{
    closed_form, dimension_polynomial, eval_main_conjecture, expected_count, generic_e, CountTable,
    FormulaId, FormulaParams, Mode,
};
use dbflab::macdonald::{modified_macdonald, nabla};
use dbflab::oracle::coinvariant_frobenius;
use dbflab::{Partition, SymFunc};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: dbflab::Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.code()))
}

/// `E_n` as `lambda mu coeff` lines, and where it came from.
#[pyfunction]
fn generic_bosonic(n: usize) -> PyResult<(String, String)> {
    let (e, p) = generic_e(n).map_err(py_err)?;
    Ok((dbflab::cache::render_en(&e), p.to_string()))
}

/// The universal formula with `k` bosonic and `j` fermionic letters.
#[pyfunction]
#[pyo3(signature = (n, k, j, ones=false))]
fn eval_main(n: usize, k: usize, j: usize, ones: bool) -> PyResult<String> {
    let (e, _) = generic_e(n).map_err(py_err)?;
    Ok(eval_main_conjecture(&e, k, j, if ones { Mode::Ones } else { Mode::Symbolic }).to_string())
}

#[pyfunction]
fn oracle(k: usize, j: usize, n: usize) -> PyResult<String> {
    Ok(coinvariant_frobenius(k, j, n).map_err(py_err)?.to_string())
}

#[pyfunction]
#[pyo3(signature = (name, n, cap=None))]
fn formula(name: &str, n: usize, cap: Option<u32>) -> PyResult<String> {
    let id: FormulaId = name.parse().map_err(py_err)?;
    Ok(closed_form(
        id,
        n,
        &FormulaParams {
            cap,
            ..Default::default()
        },
    )
    .map_err(py_err)?
    .to_string())
}

/// Machine-readable report lines of a named check.
#[pyfunction]
fn verify(check: &str, n: usize) -> PyResult<Vec<String>> {
    let check: Check = check.parse().map_err(py_err)?;
    let reports = run_check(
        check,
        &CheckArgs {
            n,
            ..Default::default()
        },
        &Context::default(),
    )
    .map_err(py_err)?;
    Ok(reports.iter().map(|r| r.machine_line()).collect())
}

/// A closed-form count as `(numerator, denominator)`.
#[pyfunction]
fn count(table: &str, n: usize, k: usize, j: usize) -> PyResult<(String, String)> {
    let table: CountTable = table.parse().map_err(py_err)?;
    let v = expected_count(table, n, k, j).map_err(py_err)?;
    Ok((v.numer().to_string(), v.denom().to_string()))
}

#[pyfunction]
fn dimension_poly(n: usize) -> PyResult<String> {
    let (e, _) = generic_e(n).map_err(py_err)?;
    Ok(dimension_polynomial(&e, n).map_err(py_err)?.to_string())
}

#[pyfunction]
fn htilde(partition: &str) -> PyResult<String> {
    let mu: Partition = partition.parse().map_err(py_err)?;
    Ok(modified_macdonald(&mu).to_string())
}

#[pyfunction]
fn nabla_e(n: usize) -> PyResult<String> {
    Ok(nabla(&SymFunc::e_n(n)).map_err(py_err)?.to_string())
}

#[pymodule]
fn dbflab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(generic_bosonic, m)?)?;
    m.add_function(wrap_pyfunction!(eval_main, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(formula, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(dimension_poly, m)?)?;
    m.add_function(wrap_pyfunction!(htilde, m)?)?;
    m.add_function(wrap_pyfunction!(nabla_e, m)?)?;
    Ok(())
}
