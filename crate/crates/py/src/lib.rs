//! Python bindings: the partition types plus thin list-based wrappers around
//! the operator actions, the Littlewood-Richardson walks, and the
//! verification sweeps.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use schur_codes::bernstein;
use schur_codes::json::walk_to_codes;
use schur_codes::lr_pieri;
use schur_codes::partition;
use schur_codes::qvertex;
use schur_codes::verify;

fn value_error(err: schur_codes::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn to_partition(parts: Vec<u32>) -> PyResult<schur_codes::Partition> {
    schur_codes::Partition::new(parts).map_err(value_error)
}

fn to_strict(parts: Vec<u32>) -> PyResult<schur_codes::StrictPartition> {
    schur_codes::StrictPartition::new(parts).map_err(value_error)
}

/// A partition with weakly decreasing positive parts.
#[pyclass(frozen)]
struct Partition {
    inner: schur_codes::Partition,
}

#[pymethods]
impl Partition {
    #[new]
    fn new(parts: Vec<u32>) -> PyResult<Self> {
        Ok(Partition {
            inner: to_partition(parts)?,
        })
    }

    /// Parse the text form, e.g. "4,2,1"; "-" is the empty partition.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Partition {
            inner: text.parse().map_err(value_error)?,
        })
    }

    fn parts(&self) -> Vec<u32> {
        self.inner.parts().to_vec()
    }

    fn weight(&self) -> u32 {
        self.inner.weight()
    }

    fn length(&self) -> usize {
        self.inner.len()
    }

    /// The canonical code window of the boundary path.
    fn code(&self) -> String {
        self.inner.code().to_string()
    }

    fn conjugate(&self) -> Partition {
        Partition {
            inner: self.inner.conjugate(),
        }
    }

    /// The partition with the i-th right step of the boundary turned up.
    fn turn_nth_r(&self, i: usize) -> PyResult<Partition> {
        if i == 0 {
            return Err(PyValueError::new_err("the step index is 1-based"));
        }
        Ok(Partition {
            inner: self.inner.turn_nth_r(i),
        })
    }

    /// The i-th part, zero beyond the last part.
    fn part(&self, i: usize) -> PyResult<u32> {
        if i == 0 {
            return Err(PyValueError::new_err("part indices are 1-based"));
        }
        Ok(self.inner.part(i))
    }

    /// The number of parts of size at least i.
    fn parts_ge(&self, i: u32) -> PyResult<usize> {
        if i == 0 {
            return Err(PyValueError::new_err("the bound is 1-based"));
        }
        Ok(self.inner.parts_ge(i))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.inner.parts())
    }

    fn __eq__(&self, other: &Partition) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut hasher = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut hasher);
        hasher.finish()
    }
}

/// A strict partition with strictly decreasing positive parts.
#[pyclass(frozen)]
struct StrictPartition {
    inner: schur_codes::StrictPartition,
}

#[pymethods]
impl StrictPartition {
    #[new]
    fn new(parts: Vec<u32>) -> PyResult<Self> {
        Ok(StrictPartition {
            inner: to_strict(parts)?,
        })
    }

    fn parts(&self) -> Vec<u32> {
        self.inner.parts().to_vec()
    }

    fn weight(&self) -> u32 {
        self.inner.weight()
    }

    fn length(&self) -> usize {
        self.inner.len()
    }

    /// The shifted code of the shifted diagram's boundary path.
    fn shifted_code(&self) -> String {
        self.inner.shifted_code().to_string()
    }

    /// The i-th smallest positive integer that is not already a part.
    fn nth_insertable(&self, i: usize) -> PyResult<u32> {
        if i == 0 {
            return Err(PyValueError::new_err("the insertion index is 1-based"));
        }
        Ok(self.inner.nth_insertable(i))
    }

    /// The strict partition with the i-th smallest insertable part added.
    fn insert_nth(&self, i: usize) -> PyResult<StrictPartition> {
        if i == 0 {
            return Err(PyValueError::new_err("the insertion index is 1-based"));
        }
        Ok(StrictPartition {
            inner: self.inner.insert_nth(i),
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("StrictPartition({:?})", self.inner.parts())
    }

    fn __eq__(&self, other: &StrictPartition) -> bool {
        self.inner == other.inner
    }
}

/// The canonical code window of a partition.
#[pyfunction]
fn code_of(parts: Vec<u32>) -> PyResult<String> {
    Ok(to_partition(parts)?.code().to_string())
}

/// The partition traced by a canonical code window.
#[pyfunction]
fn partition_of(code: &str) -> PyResult<Vec<u32>> {
    let code: schur_codes::Code = code.parse().map_err(value_error)?;
    Ok(code.to_partition().parts().to_vec())
}

/// The shifted code of a strict partition.
#[pyfunction]
fn shifted_code_of(parts: Vec<u32>) -> PyResult<String> {
    Ok(to_strict(parts)?.shifted_code().to_string())
}

/// The strict partition traced by a shifted code word.
#[pyfunction]
fn strict_partition_of(word: &str) -> PyResult<Vec<u32>> {
    let word: schur_codes::ShiftedCode = word.parse().map_err(value_error)?;
    Ok(word.to_strict().parts().to_vec())
}

/// Reduce a composition of untwisted operator components applied to 1:
/// None when it vanishes, otherwise (sign, partition).
#[pyfunction]
fn straighten_b(indices: Vec<i64>) -> Option<(i64, Vec<u32>)> {
    bernstein::straighten_b(&indices)
        .map(|term| (term.sign.to_i64(), term.partition.parts().to_vec()))
}

/// Reduce a composition of twisted raising components applied to 1.
#[pyfunction]
fn straighten_y(parts: Vec<u32>) -> PyResult<Option<(i64, Vec<u32>)>> {
    let reduced = qvertex::straighten_y(&parts).map_err(value_error)?;
    Ok(reduced.map(|term| (term.sign.to_i64(), term.partition.parts().to_vec())))
}

const WINDOW_CAP: i64 = 100_000;

fn check_window_top(hi: i64) -> PyResult<()> {
    if hi > WINDOW_CAP {
        return Err(PyValueError::new_err(format!(
            "window top {hi} exceeds the supported cap {WINDOW_CAP}"
        )));
    }
    Ok(())
}

/// The graded action of the untwisted series on a Schur function over
/// [lo, hi]: a list of (degree, sign, partition) rows.
#[pyfunction]
fn b_series(parts: Vec<u32>, lo: i64, hi: i64) -> PyResult<Vec<(i64, i64, Vec<u32>)>> {
    check_window_top(hi)?;
    let lambda = to_partition(parts)?;
    let action = bernstein::b_series_on_schur(&lambda, lo, hi).map_err(value_error)?;
    Ok(action
        .iter()
        .map(|(degree, term)| (degree, term.sign.to_i64(), term.partition.parts().to_vec()))
        .collect())
}

/// The graded action of the twisted series on a Q-function at degrees
/// 1..=n_max: a list of (degree, sign, partition) rows.
#[pyfunction]
fn y_series(parts: Vec<u32>, n_max: u32) -> PyResult<Vec<(u32, i64, Vec<u32>)>> {
    check_window_top(n_max as i64)?;
    let lambda = to_strict(parts)?;
    Ok(qvertex::y_series_on_q(&lambda, n_max)
        .iter()
        .map(|(degree, term)| (degree, term.sign.to_i64(), term.partition.parts().to_vec()))
        .collect())
}

/// The Littlewood-Richardson coefficient of lambda in s_mu * s_nu.
#[pyfunction]
fn lr_coefficient(mu: Vec<u32>, nu: Vec<u32>, lam: Vec<u32>) -> PyResult<u64> {
    Ok(lr_pieri::lr_coefficient(
        &to_partition(mu)?,
        &to_partition(nu)?,
        &to_partition(lam)?,
    ))
}

/// The full product s_mu * s_nu as a list of (coefficient, partition) terms
/// in lexicographically decreasing order.
#[pyfunction]
fn schur_product(mu: Vec<u32>, nu: Vec<u32>) -> PyResult<Vec<(i64, Vec<u32>)>> {
    let expansion = lr_pieri::schur_product(&to_partition(mu)?, &to_partition(nu)?);
    Ok(expansion
        .terms_desc()
        .map(|(lam, coeff)| (coeff, lam.parts().to_vec()))
        .collect())
}

/// All walks of the code-walk rule, each as its list of code windows.
#[pyfunction]
fn lr_walks(mu: Vec<u32>, nu: Vec<u32>) -> PyResult<Vec<Vec<String>>> {
    let walks = lr_pieri::lr_walks(&to_partition(mu)?, &to_partition(nu)?);
    Ok(walks.iter().map(walk_to_codes).collect())
}

/// The partitions obtained by adding a horizontal n-strip.
#[pyfunction]
fn pieri_row(mu: Vec<u32>, n: u32) -> PyResult<Vec<Vec<u32>>> {
    if n == 0 {
        return Err(PyValueError::new_err("the strip size must be positive"));
    }
    Ok(lr_pieri::pieri_row(&to_partition(mu)?, n)
        .iter()
        .map(|p| p.parts().to_vec())
        .collect())
}

/// The partitions obtained by adding a vertical n-strip.
#[pyfunction]
fn pieri_col(mu: Vec<u32>, n: u32) -> PyResult<Vec<Vec<u32>>> {
    if n == 0 {
        return Err(PyValueError::new_err("the strip size must be positive"));
    }
    Ok(lr_pieri::pieri_col(&to_partition(mu)?, n)
        .iter()
        .map(|p| p.parts().to_vec())
        .collect())
}

#[pyfunction]
fn is_horizontal_strip(outer: Vec<u32>, inner: Vec<u32>, n: u32) -> PyResult<bool> {
    Ok(partition::is_horizontal_strip(
        &to_partition(outer)?,
        &to_partition(inner)?,
        n,
    ))
}

#[pyfunction]
fn is_vertical_strip(outer: Vec<u32>, inner: Vec<u32>, n: u32) -> PyResult<bool> {
    Ok(partition::is_vertical_strip(
        &to_partition(outer)?,
        &to_partition(inner)?,
        n,
    ))
}

/// Run one verification sweep ("codes", "bernstein", "qvertex", "lr", or
/// "all") and return (passed, failure messages).
#[pyfunction]
fn run_verify(suite: &str, max_weight: u32) -> PyResult<(bool, Vec<String>)> {
    let reports = match suite {
        "codes" => vec![verify::verify_codes(max_weight)],
        "bernstein" => vec![verify::verify_bernstein(max_weight.min(7))],
        "qvertex" => vec![verify::verify_qvertex(max_weight.min(8))],
        "lr" => vec![verify::verify_lr(max_weight)],
        "all" => verify::verify_all(max_weight),
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown suite {other:?}; expected codes, bernstein, qvertex, lr, or all"
            )))
        }
    };
    let passed = reports.iter().all(|r| r.passed());
    let failures = reports.into_iter().flat_map(|r| r.failures).collect();
    Ok((passed, failures))
}

#[pymodule]
fn schur_codes_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Partition>()?;
    m.add_class::<StrictPartition>()?;
    m.add_function(wrap_pyfunction!(code_of, m)?)?;
    m.add_function(wrap_pyfunction!(partition_of, m)?)?;
    m.add_function(wrap_pyfunction!(shifted_code_of, m)?)?;
    m.add_function(wrap_pyfunction!(strict_partition_of, m)?)?;
    m.add_function(wrap_pyfunction!(straighten_b, m)?)?;
    m.add_function(wrap_pyfunction!(straighten_y, m)?)?;
    m.add_function(wrap_pyfunction!(b_series, m)?)?;
    m.add_function(wrap_pyfunction!(y_series, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(schur_product, m)?)?;
    m.add_function(wrap_pyfunction!(lr_walks, m)?)?;
    m.add_function(wrap_pyfunction!(pieri_row, m)?)?;
    m.add_function(wrap_pyfunction!(pieri_col, m)?)?;
    m.add_function(wrap_pyfunction!(is_horizontal_strip, m)?)?;
    m.add_function(wrap_pyfunction!(is_vertical_strip, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
