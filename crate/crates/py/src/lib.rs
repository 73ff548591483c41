//! Python bindings for `synchro`.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use synchro::{algebra, catalog, growth, sync, verify, Error, Word};

fn err(e: Error) -> PyErr {
    match e {
        Error::UnknownName(_) | Error::UnknownState(_) => PyKeyError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Round-trips a serializable value through JSON into Python objects.
fn to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn parse_word(text: &str) -> PyResult<Word> {
    text.parse::<Word>().map_err(err)
}

/// A synchronous transducer over `{0, …, n-1}`.
#[pyclass(name = "Transducer", module = "synchro_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyTransducer {
    inner: synchro::Transducer,
}

impl From<synchro::Transducer> for PyTransducer {
    fn from(inner: synchro::Transducer) -> Self {
        PyTransducer { inner }
    }
}

#[pymethods]
impl PyTransducer {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Self::parse(text)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        synchro::Transducer::parse(text).map(Into::into).map_err(err)
    }

    fn to_tdx(&self) -> String {
        self.inner.to_tdx()
    }

    #[getter]
    fn num_states(&self) -> usize {
        self.inner.num_states()
    }

    #[getter]
    fn alphabet_size(&self) -> usize {
        self.inner.alphabet_size()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    /// Reads `word` from the state labelled `state`; returns the final
    /// state label and the output word.
    fn read_word(&self, state: &str, word: &str) -> PyResult<(String, String)> {
        let w = parse_word(word)?;
        let (q, out) = self.inner.read_word_from(state, w.letters()).map_err(err)?;
        Ok((self.inner.label(q).to_string(), out.to_string()))
    }

    fn is_invertible(&self) -> bool {
        self.inner.is_invertible()
    }

    fn invert(&self) -> PyResult<Self> {
        self.inner.invert().map(Into::into).map_err(err)
    }

    fn dual(&self) -> Self {
        self.inner.dual().into()
    }

    /// Equal transition and output tables, ignoring state labels.
    fn same_tables(&self, other: &Self) -> bool {
        self.inner.same_tables(&other.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_tdx()
    }

    fn __repr__(&self) -> String {
        format!(
            "Transducer(states={}, alphabet={})",
            self.inner.num_states(),
            self.inner.alphabet_size()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
fn sync_level(t: &PyTransducer) -> Option<usize> {
    sync::sync_level(&t.inner)
}

#[pyfunction]
fn bisync_level(t: &PyTransducer) -> Option<usize> {
    sync::bisync_level(&t.inner)
}

#[pyfunction]
fn core_dist(t: &PyTransducer) -> PyResult<usize> {
    sync::core_dist(&t.inner).map_err(err)
}

#[pyfunction]
#[pyo3(name = "core")]
fn core_machine(t: &PyTransducer) -> PyResult<PyTransducer> {
    sync::core(&t.inner).map(Into::into).map_err(err)
}

/// The synchronization profile as a dict, same shape as `synchro sync`.
#[pyfunction]
fn sync_profile<'py>(py: Python<'py>, t: &PyTransducer) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &sync::SyncProfile::of(&t.inner).to_json(&t.inner))
}

#[pyfunction]
fn product(a: &PyTransducer, b: &PyTransducer) -> PyResult<PyTransducer> {
    algebra::product(&a.inner, &b.inner).map(Into::into).map_err(err)
}

#[pyfunction]
fn power(a: &PyTransducer, m: usize) -> PyResult<PyTransducer> {
    algebra::power(&a.inner, m).map(Into::into).map_err(err)
}

#[pyfunction]
fn minimize(t: &PyTransducer) -> PyTransducer {
    algebra::minimize(&t.inner).into()
}

#[pyfunction]
fn min_core(t: &PyTransducer) -> PyResult<PyTransducer> {
    algebra::min_core(&t.inner).map(|nf| nf.into_machine().into()).map_err(err)
}

/// Growth records for `m = 1..=max_power`, as a dict.
#[pyfunction]
fn growth_series<'py>(py: Python<'py>, t: &PyTransducer, max_power: usize) -> PyResult<Bound<'py, PyAny>> {
    let series = growth::growth_series(&t.inner, max_power).map_err(err)?;
    to_py(py, &series)
}

#[pyfunction]
fn growth_csv(t: &PyTransducer, max_power: usize) -> PyResult<String> {
    growth::growth_series(&t.inner, max_power).map(|s| s.to_csv()).map_err(err)
}

/// Σ(i, j) as a Python int.
#[pyfunction]
fn sigma<'py>(py: Python<'py>, i: u32, j: i64) -> PyResult<Bound<'py, PyAny>> {
    let text = growth::sigma(i, j).to_string();
    py.get_type::<pyo3::types::PyInt>().call1((text,))
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    catalog::names().to_vec()
}

#[pyfunction]
fn catalog_get(name: &str) -> PyResult<PyTransducer> {
    catalog::builtin(name).map(|e| e.machine.into()).map_err(err)
}

#[pyfunction]
fn bisync_family(i: usize) -> PyResult<PyTransducer> {
    catalog::bisync_family(i).map(|e| e.machine.into()).map_err(err)
}

/// Runs the verification suite; returns a list of report dicts.
#[pyfunction]
#[pyo3(signature = (suite = "all", seed = 0))]
fn run_verify<'py>(py: Python<'py>, suite: &str, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let reports = py.detach(|| verify::run_suite(suite, seed)).map_err(err)?;
    to_py(py, &reports)
}

#[pymodule]
fn synchro_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTransducer>()?;
    m.add_function(wrap_pyfunction!(sync_level, m)?)?;
    m.add_function(wrap_pyfunction!(bisync_level, m)?)?;
    m.add_function(wrap_pyfunction!(core_dist, m)?)?;
    m.add_function(wrap_pyfunction!(core_machine, m)?)?;
    m.add_function(wrap_pyfunction!(sync_profile, m)?)?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(power, m)?)?;
    m.add_function(wrap_pyfunction!(minimize, m)?)?;
    m.add_function(wrap_pyfunction!(min_core, m)?)?;
    m.add_function(wrap_pyfunction!(growth_series, m)?)?;
    m.add_function(wrap_pyfunction!(growth_csv, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_get, m)?)?;
    m.add_function(wrap_pyfunction!(bisync_family, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    let dict = PyDict::new(m.py());
    for name in catalog::names() {
        dict.set_item(*name, catalog_get(name)?)?;
    }
    m.add("CATALOG", dict)?;
    Ok(())
}
