use std::sync::Arc;

use gainspec_core as core;
use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(gainspec, GainspecError, PyException);

fn err(e: core::Error) -> PyErr {
    GainspecError::new_err(e.to_string())
}

#[pyclass(name = "Group", frozen)]
struct PyGroup(Arc<core::FiniteGroup>);

#[pymethods]
impl PyGroup {
    #[staticmethod]
    fn cyclic(m: usize) -> PyResult<Self> {
        core::FiniteGroup::cyclic(m)
            .map(|g| PyGroup(Arc::new(g)))
            .map_err(err)
    }

    #[staticmethod]
    fn symmetric(n: usize) -> PyResult<Self> {
        core::FiniteGroup::symmetric(n)
            .map(|g| PyGroup(Arc::new(g)))
            .map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (table, names=None))]
    fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> PyResult<Self> {
        core::FiniteGroup::from_table(&table, names)
            .map(|g| PyGroup(Arc::new(g)))
            .map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn names(&self) -> Vec<String> {
        self.0.names().to_vec()
    }

    fn element(&self, literal: &str) -> PyResult<usize> {
        self.0.parse_element(literal).map_err(err)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul(a, b)
    }

    fn inv(&self, a: usize) -> usize {
        self.0.inv(a)
    }

    /// Conjugacy classes as lists of element indices, identity class first.
    fn classes(&self) -> Vec<Vec<usize>> {
        self.0.classes().to_vec()
    }

    fn class_of(&self, g: usize) -> usize {
        self.0.class_of(g)
    }

    fn is_abelian(&self) -> bool {
        self.0.is_abelian()
    }

    fn is_ambivalent(&self) -> bool {
        self.0.is_ambivalent()
    }

    fn simultaneously_conjugate(&self, a: Vec<usize>, b: Vec<usize>) -> PyResult<Option<usize>> {
        if a.len() != b.len() {
            return Err(GainspecError::new_err("tuples must have equal length"));
        }
        Ok(self.0.simultaneously_conjugate(&a, &b))
    }

    fn count_simultaneous_conjugacy_classes(&self, k: u32) -> BigUint {
        self.0.count_simultaneous_conjugacy_classes(k)
    }

    fn __repr__(&self) -> String {
        format!("Group({})", self.0)
    }
}

#[pyclass(name = "GainGraph", frozen)]
struct PyGainGraph(core::GainGraph);

#[pymethods]
impl PyGainGraph {
    /// Edges are `(u, v, gain)` with 0-based vertices and `gain = ψ(u, v)`.
    #[new]
    fn new(group: &PyGroup, n: usize, edges: Vec<(usize, usize, usize)>) -> PyResult<Self> {
        core::GainGraph::new(group.0.clone(), n, &edges)
            .map(PyGainGraph)
            .map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::parse_gain_graph(text).map(PyGainGraph).map_err(err)
    }

    #[staticmethod]
    fn read(path: std::path::PathBuf) -> PyResult<Self> {
        core::read_gain_graph(&path).map(PyGainGraph).map_err(err)
    }

    #[getter]
    fn group(&self) -> PyGroup {
        PyGroup(self.0.group().clone())
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.vertex_count()
    }

    fn edges(&self) -> Vec<(usize, usize, usize)> {
        self.0.oriented_edges().collect()
    }

    fn gain(&self, u: usize, v: usize) -> Option<usize> {
        self.0.gain(u, v)
    }

    fn gain_of_walk(&self, walk: Vec<usize>) -> PyResult<usize> {
        self.0.gain_of_walk(&core::Walk(walk)).map_err(err)
    }

    fn switch(&self, f: Vec<usize>) -> PyResult<Self> {
        if f.len() != self.0.vertex_count() {
            return Err(GainspecError::new_err(
                "switching function needs one element per vertex",
            ));
        }
        Ok(PyGainGraph(
            self.0.apply_switching(&core::SwitchingFunction(f)),
        ))
    }

    fn is_balanced(&self) -> bool {
        core::is_balanced(&self.0)
    }

    /// `counts[h][c]` for `h = 0..=hmax`.
    fn profile(&self, hmax: usize) -> Vec<Vec<BigUint>> {
        core::walk_class_profile(&self.0, hmax).counts().to_vec()
    }

    fn spectrum(&self, rep: &PyRepresentation) -> PyResult<Vec<f64>> {
        core::pi_spectrum(&self.0, &rep.0)
            .map(|s| s.eigenvalues().to_vec())
            .map_err(err)
    }

    fn char_poly(&self, rep: &PyRepresentation) -> PyResult<Vec<f64>> {
        core::pi_char_poly(&self.0, &rep.0)
            .map(|p| p.coefficients().to_vec())
            .map_err(err)
    }

    fn switching_classes(&self) -> PyResult<BigUint> {
        core::count_switching_classes(self.0.underlying(), self.0.group()).map_err(err)
    }

    /// `{n, walk, gain, class, inverse_class, order}` for a cycle, with gain
    /// and classes given by name.
    fn cycle_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = core::cycle_classify(&self.0).map_err(err)?;
        let group = self.0.group();
        let d = PyDict::new(py);
        d.set_item("n", r.n)?;
        d.set_item("walk", r.walk)?;
        d.set_item("gain", group.name(r.gain))?;
        d.set_item("class", group.class_name(r.class))?;
        d.set_item("inverse_class", group.class_name(r.inverse_class))?;
        d.set_item("order", r.order)?;
        Ok(d)
    }

    /// The cover graph in gain-graph file format.
    fn cover(&self) -> PyResult<String> {
        core::cover_graph(&self.0)
            .map(|c| c.to_text(&self.0))
            .map_err(err)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    fn __repr__(&self) -> String {
        format!(
            "GainGraph({} vertices, {} edges over {})",
            self.0.vertex_count(),
            self.0.edge_count(),
            self.0.group()
        )
    }
}

#[pyclass(name = "Representation", frozen)]
struct PyRepresentation(core::Representation);

#[pymethods]
impl PyRepresentation {
    /// `trivial`, `regular`, `sign`, `cyclic:j`, `s4-standard`,
    /// `s4-standard-alt`, or a `+`-separated direct sum of those.
    #[staticmethod]
    fn named(name: &str, group: &PyGroup) -> PyResult<Self> {
        core::Representation::from_name(name, &group.0)
            .map(PyRepresentation)
            .map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn name(&self) -> String {
        self.0.name().to_string()
    }

    /// Character values per conjugacy class as complex numbers.
    fn character(&self) -> PyResult<Vec<(f64, f64)>> {
        self.0
            .character()
            .map(|chi| chi.values().iter().map(|z| (z.re, z.im)).collect())
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Representation({}, degree {})",
            self.0.name(),
            self.0.degree()
        )
    }
}

#[pyfunction]
fn switching_equivalent(a: &PyGainGraph, b: &PyGainGraph) -> PyResult<Option<Vec<usize>>> {
    core::switching_equivalent(&a.0, &b.0)
        .map(|w| w.map(|f| f.values().to_vec()))
        .map_err(err)
}

/// `(phi, f)` with `ψ_b(φ(u), φ(v)) = f(u)⁻¹ ψ_a(u, v) f(v)`, or `None`.
#[pyfunction]
#[pyo3(signature = (a, b, max_vertices=core::switching::ISOMORPHISM_VERTEX_LIMIT))]
fn switching_isomorphic(
    a: &PyGainGraph,
    b: &PyGainGraph,
    max_vertices: usize,
) -> PyResult<Option<(Vec<usize>, Vec<usize>)>> {
    core::switching::switching_isomorphic_with_limit(&a.0, &b.0, max_vertices)
        .map(|w| w.map(|w| (w.phi, w.switching.values().to_vec())))
        .map_err(err)
}

#[pyfunction]
fn g_cospectral(a: &PyGainGraph, b: &PyGainGraph) -> PyResult<bool> {
    core::g_cospectral(&a.0, &b.0).map_err(err)
}

#[pyfunction]
fn lambda_cospectral(a: &PyGainGraph, b: &PyGainGraph) -> PyResult<bool> {
    core::lambda_cospectral(&a.0, &b.0).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (a, b, rep, tol=1e-8))]
fn pi_cospectral(
    a: &PyGainGraph,
    b: &PyGainGraph,
    rep: &PyRepresentation,
    tol: f64,
) -> PyResult<bool> {
    core::pi_cospectral(&a.0, &b.0, &rep.0, tol).map_err(err)
}

#[pymodule]
fn gainspec(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyGainGraph>()?;
    m.add_class::<PyRepresentation>()?;
    m.add("GainspecError", m.py().get_type::<GainspecError>())?;
    m.add_function(wrap_pyfunction!(switching_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(switching_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(g_cospectral, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_cospectral, m)?)?;
    m.add_function(wrap_pyfunction!(pi_cospectral, m)?)?;
    Ok(())
}
