//! Python bindings for the exact-arithmetic kernel: rings, polynomials,
//! ideals, resolutions, Rees-algebra queries and the plane-points lab.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use hbforge::groebner::Budget;
use hbforge::points::{position_report, PointSet};
use hbforge::rees::{bigraded_min_gens, cm_via_pd, rees_presentation};
use hbforge::resolution::resolve_quotient;
use hbforge::ring::{MonomialOrder, PolyRing};
use hbforge::verify::{run_example, REGISTRY};
use hbforge::{parse, CoeffField, Polynomial};

fn err(e: hbforge::AlgebraError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_field(spec: &str) -> PyResult<CoeffField> {
    if spec.eq_ignore_ascii_case("q") {
        return Ok(CoeffField::Rationals);
    }
    let p = spec
        .parse::<u64>()
        .map_err(|_| PyValueError::new_err(format!("bad field spec {spec}")))?;
    CoeffField::prime(p).map_err(err)
}

#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Ring {
    inner: Arc<PolyRing>,
}

#[pymethods]
impl Ring {
    #[new]
    #[pyo3(signature = (vars, field = "32003", order = "grevlex"))]
    fn new(vars: Vec<String>, field: &str, order: &str) -> PyResult<Self> {
        let ord = match order {
            "grevlex" => MonomialOrder::Grevlex,
            "lex" => MonomialOrder::Lex,
            _ => return Err(PyValueError::new_err(format!("bad order spec {order}"))),
        };
        let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
        let inner = PolyRing::standard(&names, parse_field(field)?, ord).map_err(err)?;
        Ok(Ring { inner })
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.inner.vars.clone()
    }

    fn poly(&self, text: &str) -> PyResult<Poly> {
        Ok(Poly {
            inner: parse(text, &self.inner).map_err(err)?,
        })
    }

    fn ideal(&self, gens: Vec<String>) -> PyResult<PyIdeal> {
        let ps = gens
            .iter()
            .map(|s| parse(s, &self.inner))
            .collect::<hbforge::Result<Vec<_>>>()
            .map_err(err)?;
        Ok(PyIdeal {
            inner: hbforge::Ideal::new(ps, Budget::default()).map_err(err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("Ring(vars={:?})", self.inner.vars)
    }
}

#[pyclass(name = "Poly", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Poly {
    inner: Polynomial,
}

#[pymethods]
impl Poly {
    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }

    fn __add__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly {
            inner: self.inner.add(&other.inner).map_err(err)?,
        })
    }

    fn __sub__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly {
            inner: self.inner.sub(&other.inner).map_err(err)?,
        })
    }

    fn __mul__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly {
            inner: self.inner.mul(&other.inner).map_err(err)?,
        })
    }

    fn __pow__(&self, e: i64, _mod: Option<i64>) -> PyResult<Poly> {
        Ok(Poly {
            inner: self.inner.pow(e).map_err(err)?,
        })
    }

    fn __neg__(&self) -> Poly {
        Poly {
            inner: self.inner.neg(),
        }
    }

    fn __eq__(&self, other: &Poly) -> bool {
        self.inner == other.inner
    }

    fn total_degree(&self) -> Option<i64> {
        self.inner.total_degree()
    }

    fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }
}

#[pyclass(name = "Ideal", frozen)]
struct PyIdeal {
    inner: hbforge::Ideal,
}

#[pymethods]
impl PyIdeal {
    #[getter]
    fn gens(&self) -> Vec<String> {
        self.inner.gens.iter().map(|p| p.to_string()).collect()
    }

    fn groebner_basis(&self) -> PyResult<Vec<String>> {
        let gb = self.inner.gb().map_err(err)?;
        Ok(gb.basis.iter().map(|p| p.to_string()).collect())
    }

    fn contains(&self, p: &Poly) -> PyResult<bool> {
        self.inner.contains(&p.inner).map_err(err)
    }

    fn dimension(&self) -> PyResult<i64> {
        Ok(self.inner.dimension_height().map_err(err)?.0)
    }

    fn height(&self) -> PyResult<i64> {
        Ok(self.inner.dimension_height().map_err(err)?.1)
    }

    fn hilbert_numerator(&self) -> PyResult<Vec<i64>> {
        Ok(self.inner.hilbert().map_err(err)?.numerator)
    }

    fn multiplicity(&self) -> PyResult<i64> {
        Ok(self.inner.hilbert().map_err(err)?.multiplicity)
    }

    fn intersect(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal {
            inner: self.inner.intersect(&other.inner).map_err(err)?,
        })
    }

    fn quotient(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal {
            inner: self.inner.quotient(&other.inner).map_err(err)?,
        })
    }

    fn saturate(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal {
            inner: self.inner.saturate(&other.inner).map_err(err)?.0,
        })
    }

    fn equals(&self, other: &PyIdeal) -> PyResult<bool> {
        self.inner.eq_ideal(&other.inner).map_err(err)
    }

    /// Graded Betti numbers of R/I as {(i, j): count}, plus regularity.
    fn betti<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let (_, table) = resolve_quotient(&self.inner).map_err(err)?;
        let entries = PyDict::new(py);
        for ((i, j), b) in &table.entries {
            entries.set_item((i, j), b)?;
        }
        let out = PyDict::new(py);
        out.set_item("entries", entries)?;
        out.set_item("regularity", table.regularity)?;
        Ok(out)
    }

    /// Bigraded minimal generators of the Rees presentation ideal, whether
    /// the ideal is of linear type, and whether the Rees algebra is CM.
    fn rees<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let rp = rees_presentation(&self.inner.gens, &Budget::default()).map_err(err)?;
        let out = PyDict::new(py);
        out.set_item(
            "generators",
            rp.rees.gens.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        )?;
        out.set_item("bidegrees", bigraded_min_gens(&rp.rees).map_err(err)?)?;
        out.set_item("linear_type", rp.is_linear_type().map_err(err)?)?;
        out.set_item("cohen_macaulay", cm_via_pd(&rp.rees).map_err(err)?.cm)?;
        Ok(out)
    }

    fn __repr__(&self) -> String {
        format!("Ideal({} generators)", self.inner.gens.len())
    }
}

/// Random plane points in the chart z = 1 together with the position
/// classification of their vanishing ideal.
#[pyfunction]
#[pyo3(signature = (n, seed, field = "32003"))]
fn point_report(py: Python<'_>, n: usize, seed: u64, field: &str) -> PyResult<Py<PyDict>> {
    let pts = PointSet::random(parse_field(field)?, n, seed).map_err(err)?;
    let ideal = pts.ideal_of_points().map_err(err)?;
    let rep = position_report(&ideal, n as i64).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("n", rep.n)?;
    out.set_item("s", rep.s)?;
    out.set_item("h", rep.h)?;
    out.set_item("dim_is", rep.dim_is)?;
    out.set_item("dim_is1", rep.dim_is1)?;
    out.set_item("dim_r1is", rep.dim_r1is)?;
    out.set_item("generic", rep.generic)?;
    out.set_item("tight", rep.tight)?;
    out.set_item("regularity", rep.reg)?;
    out.set_item(
        "ideal",
        ideal.gens.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    )?;
    Ok(out.into())
}

/// Ids of the golden-example registry.
#[pyfunction]
fn registry() -> Vec<String> {
    REGISTRY.iter().map(|s| s.to_string()).collect()
}

/// Replay one registry entry; returns {"id", "pass", "facts": [...]}.
#[pyfunction]
fn verify(py: Python<'_>, id: &str) -> PyResult<Py<PyDict>> {
    let report = run_example(id).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("id", &report.id)?;
    out.set_item("pass", report.all_pass())?;
    let facts: Vec<Py<PyDict>> = report
        .facts
        .iter()
        .map(|f| {
            let d = PyDict::new(py);
            d.set_item("name", &f.name)?;
            d.set_item("expected", &f.expected)?;
            d.set_item("computed", &f.computed)?;
            d.set_item("pass", f.pass)?;
            Ok(d.into())
        })
        .collect::<PyResult<_>>()?;
    out.set_item("facts", facts)?;
    Ok(out.into())
}

#[pymodule]
fn hbforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_class::<Poly>()?;
    m.add_class::<PyIdeal>()?;
    m.add_function(wrap_pyfunction!(point_report, m)?)?;
    m.add_function(wrap_pyfunction!(registry, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
