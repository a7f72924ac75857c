//! Python bindings: rings with their transform matrices, codes with their
//! enumerators, and identity verification.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use frobring::code::{self, DEFAULT_CAP};
use frobring::enumerator::{sse, swe, tuple_sse, tuple_swe};
use frobring::matrix::IntMatrix;
use frobring::poset::hasse_covers;
use frobring::ring::{build_ring, RingSpec};
use frobring::transform::chain_ring_closed_form;
use frobring::verify::{verify_identity, Kind};
use frobring::RingData;

fn err(e: frobring::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn matrix_rows(m: &IntMatrix) -> PyResult<Vec<Vec<i64>>> {
    m.to_i64_rows().map_err(err)
}

fn label_of(any: &Bound<'_, PyAny>) -> PyResult<String> {
    if let Ok(s) = any.extract::<String>() {
        return Ok(s);
    }
    if let Ok(v) = any.extract::<i64>() {
        return Ok(v.to_string());
    }
    Err(PyValueError::new_err(
        "matrix entries must be element labels (str) or integers",
    ))
}

/// A finite commutative ring analyzed under a fixed class order.
#[pyclass]
struct Ring {
    data: Arc<RingData>,
}

#[pymethods]
impl Ring {
    /// Build a ring from a JSON specification, optionally pinning the class
    /// order by element labels.
    #[new]
    #[pyo3(signature = (spec_json, order = None))]
    fn new(spec_json: &str, order: Option<Vec<String>>) -> PyResult<Self> {
        let spec: RingSpec = serde_json::from_str(spec_json)
            .map_err(|e| PyValueError::new_err(format!("ring spec: {e}")))?;
        let ring = build_ring(&spec).map_err(err)?;
        let elems = match &order {
            Some(labels) => Some(
                labels
                    .iter()
                    .map(|l| ring.parse_element(l))
                    .collect::<frobring::Result<Vec<_>>>()
                    .map_err(err)?,
            ),
            None => None,
        };
        let data = RingData::with_order(ring, elems.as_deref()).map_err(err)?;
        Ok(Ring {
            data: Arc::new(data),
        })
    }

    /// The ring of integers modulo m.
    #[staticmethod]
    #[pyo3(signature = (m, order = None))]
    fn modular(m: u64, order: Option<Vec<String>>) -> PyResult<Self> {
        Ring::new(&format!(r#"{{"kind":"modular","modulus":{m}}}"#), order)
    }

    #[getter]
    fn size(&self) -> usize {
        self.data.ring.size()
    }

    #[getter]
    fn digest(&self) -> String {
        self.data.ring.digest().to_string()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.data.ring.labels().to_vec()
    }

    #[getter]
    fn units(&self) -> Vec<String> {
        let r = &self.data.ring;
        r.units().iter().map(|e| r.label(e).to_string()).collect()
    }

    /// Class representatives in the analyzed order.
    #[getter]
    fn class_reps(&self) -> Vec<String> {
        let r = &self.data.ring;
        self.data
            .classes
            .reps
            .iter()
            .map(|&e| r.label(e).to_string())
            .collect()
    }

    #[getter]
    fn ideal_sizes(&self) -> Vec<usize> {
        self.data.classes.ideal_size.clone()
    }

    #[getter]
    fn is_frobenius(&self) -> bool {
        self.data.frobenius.is_frobenius
    }

    #[getter]
    fn is_pir(&self) -> bool {
        self.data.poset.is_pir
    }

    fn hasse_covers(&self) -> Vec<(usize, usize)> {
        hasse_covers(&self.data.poset)
    }

    /// One of the transform matrices: "a", "a_inv", "d", "q" or "s".
    fn matrix(&self, name: &str) -> PyResult<Vec<Vec<i64>>> {
        let m = &self.data.matrices;
        let picked = match name {
            "a" => &m.a,
            "a_inv" => &m.a_inv,
            "d" => &m.d,
            "q" => &m.q,
            "s" => &m.s,
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown matrix '{other}'; expected a, a_inv, d, q or s"
                )))
            }
        };
        matrix_rows(picked)
    }

    /// The tuple transform S^[lambda] = Q D^lambda A^-1.
    fn s_lambda(&self, lam: u32) -> PyResult<Vec<Vec<i64>>> {
        matrix_rows(&self.data.matrices.s_lambda(lam))
    }

    fn __repr__(&self) -> String {
        format!(
            "Ring(size={}, classes={}, frobenius={}, pir={})",
            self.data.ring.size(),
            self.data.classes.count(),
            self.data.frobenius.is_frobenius,
            self.data.poset.is_pir
        )
    }
}

/// A linear code with its codewords fully enumerated.
#[pyclass]
struct Code {
    data: Arc<RingData>,
    code: code::LinearCode,
}

#[pymethods]
impl Code {
    /// Span of a generator matrix given as rows of element labels (strings or
    /// integers for modular rings).
    #[new]
    #[pyo3(signature = (ring, generators, cap = DEFAULT_CAP))]
    fn new(ring: &Ring, generators: Vec<Vec<Bound<'_, PyAny>>>, cap: u64) -> PyResult<Self> {
        let data = Arc::clone(&ring.data);
        let gens: Vec<Vec<usize>> = generators
            .iter()
            .map(|row| {
                row.iter()
                    .map(|item| {
                        let label = label_of(item)?;
                        data.ring.parse_element(&label).map_err(err)
                    })
                    .collect::<PyResult<Vec<_>>>()
            })
            .collect::<PyResult<_>>()?;
        let code = code::span(Arc::clone(&data.ring), gens, cap).map_err(err)?;
        Ok(Code { data, code })
    }

    #[getter]
    fn size(&self) -> usize {
        self.code.size()
    }

    #[getter]
    fn length(&self) -> usize {
        self.code.length()
    }

    /// Codewords as rows of element labels.
    fn words(&self) -> Vec<Vec<String>> {
        let r = &self.data.ring;
        self.code
            .words()
            .iter()
            .map(|w| w.iter().map(|&e| r.label(e).to_string()).collect())
            .collect()
    }

    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn dual(&self, cap: u64) -> PyResult<Code> {
        let dual = code::dual(&self.code, cap).map_err(err)?;
        Ok(Code {
            data: Arc::clone(&self.data),
            code: dual,
        })
    }

    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn column_span_size(&self, cap: u64) -> PyResult<u64> {
        code::column_span_size(&self.code, cap).map_err(err)
    }

    /// Symmetrized weight enumerator in canonical text form.
    fn swe(&self) -> String {
        swe(&self.code, &self.data.classes).to_text()
    }

    /// Symmetrized support enumerator in canonical text form.
    fn sse(&self) -> String {
        sse(&self.code, &self.data.classes).to_text()
    }

    /// Hamming weight enumerator in x and y.
    fn hamming(&self) -> String {
        swe(&self.code, &self.data.classes)
            .hamming()
            .to_text(&|v| ["x", "y"][v].to_string())
    }

    #[pyo3(signature = (lam, cap = DEFAULT_CAP))]
    fn tuple_swe(&self, lam: u32, cap: u64) -> PyResult<String> {
        Ok(
            tuple_swe(&self.code, &self.data.classes, &self.data.poset, lam, cap)
                .map_err(err)?
                .to_text(),
        )
    }

    #[pyo3(signature = (lam, cap = DEFAULT_CAP))]
    fn tuple_sse(&self, lam: u32, cap: u64) -> PyResult<String> {
        Ok(
            tuple_sse(&self.code, &self.data.classes, &self.data.poset, lam, cap)
                .map_err(err)?
                .to_text(),
        )
    }

    /// Verify a duality identity; kind is one of swe, sse, hamming,
    /// tuple-swe, tuple-sse. Returns a dict with the verdict and both sides.
    #[pyo3(signature = (kind, lam = 1, cap = DEFAULT_CAP))]
    fn verify<'py>(
        &self,
        py: Python<'py>,
        kind: &str,
        lam: u32,
        cap: u64,
    ) -> PyResult<Bound<'py, PyDict>> {
        let kind: Kind = kind.parse().map_err(err)?;
        let report = verify_identity(&self.data, &self.code, kind, lam, cap).map_err(err)?;
        let out = PyDict::new(py);
        out.set_item("identity", report.identity)?;
        out.set_item("equal", report.equal)?;
        out.set_item("frobenius", report.frobenius)?;
        out.set_item("left", report.left)?;
        out.set_item("right", report.right)?;
        out.set_item("lambda", report.context.lambda)?;
        out.set_item("order", report.context.order)?;
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!(
            "Code(length={}, size={})",
            self.code.length(),
            self.code.size()
        )
    }
}

/// The closed-form chain-ring transform matrix for residue field size q,
/// nilpotency index nu and tuple level lam.
#[pyfunction]
#[pyo3(signature = (q, nu, lam = 1))]
fn chain_transform(q: u64, nu: u32, lam: u32) -> PyResult<Vec<Vec<i64>>> {
    matrix_rows(&chain_ring_closed_form(q, nu, lam))
}

/// Named built-in ring specifications as JSON strings.
#[pyfunction]
fn preset_specs() -> Vec<(String, String)> {
    frobring::presets::builtin_frobenius()
        .into_iter()
        .map(|(name, spec)| (name.to_string(), serde_json::to_string(&spec).unwrap()))
        .collect()
}

#[pymodule]
fn frobring_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_class::<Code>()?;
    m.add_function(wrap_pyfunction!(chain_transform, m)?)?;
    m.add_function(wrap_pyfunction!(preset_specs, m)?)?;
    Ok(())
}
