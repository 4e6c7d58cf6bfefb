//! Python module `planar_turan`. Structured results come back as plain
//! dicts and lists.

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use planar_turan::blocks::{self, Decomposition};
use planar_turan::lemma_lab::Lemma;
use planar_turan::oracle::{self, CorpusOptions};
use planar_turan::plane_graph::{parse_rot_single, to_rot};
use planar_turan::{catalog, constructor, cycle_search, Rational};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(err)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// A plane graph given by its rotation system.
#[pyclass(name = "PlaneGraph", module = "planar_turan", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPlaneGraph {
    inner: planar_turan::PlaneGraph,
}

#[pymethods]
impl PyPlaneGraph {
    /// Parses one graph in `.rot` format.
    #[staticmethod]
    fn from_rot(text: &str) -> PyResult<Self> {
        Ok(PyPlaneGraph {
            inner: parse_rot_single(text).map_err(err)?,
        })
    }

    /// A built-in graph such as `c8`, `k4`, `octahedron` or `b6a`.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        catalog::named(name)
            .map(|inner| PyPlaneGraph { inner })
            .ok_or_else(|| PyKeyError::new_err(name.to_string()))
    }

    fn to_rot(&self) -> String {
        to_rot(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    /// Facial walks as vertex lists.
    fn faces(&self) -> Vec<Vec<usize>> {
        self.inner.faces().map(|f| self.inner.face_vertices(f)).collect()
    }

    fn neighbors_cw(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(err(format!("no vertex {v}")));
        }
        Ok(self.inner.neighbors_cw(v))
    }

    fn is_two_connected(&self) -> bool {
        self.inner.is_two_connected()
    }

    /// Hex string invariant under relabeling and reflection.
    fn canonical_code(&self) -> String {
        self.inner.canonical_code().to_hex()
    }

    fn __repr__(&self) -> String {
        format!(
            "PlaneGraph(n={}, e={}, f={})",
            self.inner.vertex_count(),
            self.inner.edge_count(),
            self.inner.face_count()
        )
    }
}

/// Triangular-blocks with their catalog class.
#[pyfunction]
fn decompose(py: Python<'_>, g: &PyPlaneGraph) -> PyResult<Py<PyAny>> {
    #[derive(Serialize)]
    struct Entry {
        class: String,
        vertices: Vec<usize>,
        edges: Vec<(usize, usize)>,
        trivial: bool,
        holes: usize,
    }
    let d = Decomposition::new(&g.inner).map_err(err)?;
    let entries: Vec<Entry> = (0..d.blocks().len())
        .map(|b| Entry {
            class: d.classify(b).label.to_string(),
            vertices: d.block(b).vertices.clone(),
            edges: d.block(b).edges.iter().map(|&e| g.inner.edge_endpoints(e)).collect(),
            trivial: d.block(b).trivial,
            holes: d.holes(b).len(),
        })
        .collect();
    to_py(py, &entries)
}

/// Per-block charges, partition groups and verdict; rationals are strings.
#[pyfunction]
fn charge_report(py: Python<'_>, g: &PyPlaneGraph) -> PyResult<Py<PyAny>> {
    to_py(py, &blocks::charge_report(&g.inner).map_err(err)?)
}

#[pyfunction]
fn find_cycle_of_length(g: &PyPlaneGraph, length: usize) -> Option<Vec<usize>> {
    cycle_search::find_cycle_of_length(&g.inner, length)
}

/// Sorted lengths of all simple `x`-`y` paths.
#[pyfunction]
fn path_spectrum(g: &PyPlaneGraph, x: usize, y: usize) -> PyResult<Vec<usize>> {
    let s = cycle_search::path_spectrum(&g.inner, x, y).map_err(err)?;
    Ok(s.lengths.into_iter().collect())
}

#[pyfunction]
#[pyo3(signature = (g, alpha = "18/7", max_order = 4))]
fn find_sparse_set(g: &PyPlaneGraph, alpha: &str, max_order: usize) -> PyResult<Option<Vec<usize>>> {
    let alpha: Rational = alpha.parse().map_err(err)?;
    blocks::find_sparse_set(&g.inner, &alpha, max_order).map_err(err)
}

#[pyfunction]
fn membership(py: Python<'_>, g: &PyPlaneGraph) -> PyResult<Py<PyAny>> {
    to_py(py, &blocks::membership(&g.inner))
}

/// `k` copies of K4 on one edge, with its certificate.
#[pyfunction]
fn glued_k4_chain(py: Python<'_>, k: usize) -> PyResult<(PyPlaneGraph, Py<PyAny>)> {
    let r = constructor::glued_k4_chain(k).map_err(err)?;
    Ok((PyPlaneGraph { inner: r.graph.clone() }, to_py(py, &r.certified)?))
}

/// Substitutes `block` for every vertex of a validated `host`.
#[pyfunction]
fn substitute(py: Python<'_>, host: &PyPlaneGraph, block: &PyPlaneGraph) -> PyResult<(PyPlaneGraph, Py<PyAny>)> {
    let spec = constructor::validate_host(&host.inner).map_err(err)?;
    let r = constructor::substitute(&spec, &block.inner).map_err(err)?;
    Ok((PyPlaneGraph { inner: r.graph.clone() }, to_py(py, &r.certified)?))
}

/// Maximum edges of an `n`-vertex planar graph with no `ell`-cycle.
#[pyfunction]
fn ex_planar(py: Python<'_>, n: usize, ell: usize) -> PyResult<Py<PyAny>> {
    let r = py.detach(|| oracle::ex_planar(n, ell)).map_err(err)?;
    to_py(py, &r)
}

#[pyfunction]
fn graph_count(n: usize) -> PyResult<usize> {
    Ok(oracle::enumerate_abstract_graphs(n).map_err(err)?.len())
}

/// Runs one exhaustive check: `paths`, `hpath`, `catalog`, `charges` or `bound`.
#[pyfunction]
#[pyo3(signature = (lemma, max_n, all_embeddings = true))]
fn verify(py: Python<'_>, lemma: &str, max_n: usize, all_embeddings: bool) -> PyResult<Py<PyAny>> {
    let lemma: Lemma = lemma.parse().map_err(err)?;
    let r = py
        .detach(|| lemma.run(max_n, CorpusOptions { all_embeddings }))
        .map_err(err)?;
    to_py(py, &r)
}

#[pymodule(name = "planar_turan")]
fn planar_turan_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPlaneGraph>()?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(charge_report, m)?)?;
    m.add_function(wrap_pyfunction!(find_cycle_of_length, m)?)?;
    m.add_function(wrap_pyfunction!(path_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(find_sparse_set, m)?)?;
    m.add_function(wrap_pyfunction!(membership, m)?)?;
    m.add_function(wrap_pyfunction!(glued_k4_chain, m)?)?;
    m.add_function(wrap_pyfunction!(substitute, m)?)?;
    m.add_function(wrap_pyfunction!(ex_planar, m)?)?;
    m.add_function(wrap_pyfunction!(graph_count, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
