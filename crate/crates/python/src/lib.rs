use std::cmp::Ordering;
use std::hash::{DefaultHasher, Hash, Hasher};

use inhomo::approx::{self, MResult};
use inhomo::bounds::{self, FamilyKind, FamilyMember};
use inhomo::digits::{alpha_expand, gamma_star};
use num_bigint::BigInt;
use pyo3::basic::CompareOp;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(pyinhomo, InhomoError, PyValueError);

fn err(e: inhomo::Error) -> PyErr {
    InhomoError::new_err(e.to_string())
}

/// Exact element `(a + b*sqrt(D)) / c` of a real quadratic field.
#[pyclass(name = "QuadNum", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyQuadNum(inhomo::QuadNum);

#[pymethods]
impl PyQuadNum {
    #[new]
    #[pyo3(signature = (a, b=BigInt::ZERO, c=BigInt::from(1), d=BigInt::from(1)))]
    fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> PyResult<Self> {
        inhomo::QuadNum::new(a, b, c, d).map(Self).map_err(err)
    }

    /// Parse `(a+b*sqrt(D))/c`, `p/q`, an integer or a decimal.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        inhomo::parse_value(text).map(Self).map_err(err)
    }

    #[getter]
    fn a(&self) -> BigInt {
        self.0.a().clone()
    }

    #[getter]
    fn b(&self) -> BigInt {
        self.0.b().clone()
    }

    #[getter]
    fn c(&self) -> BigInt {
        self.0.c().clone()
    }

    #[getter]
    fn radicand(&self) -> BigInt {
        self.0.radicand().clone()
    }

    fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    #[pyo3(signature = (digits=12))]
    fn decimal(&self, digits: usize) -> String {
        self.0.to_decimal(digits)
    }

    fn __float__(&self) -> f64 {
        self.0.to_f64()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QuadNum('{}')", self.0)
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.to_string().hash(&mut h);
        h.finish()
    }

    fn __richcmp__(&self, other: &Self, op: CompareOp) -> bool {
        op.matches(self.0.compare(&other.0))
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_add(&other.0).map(Self).map_err(err)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_sub(&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_mul(&other.0).map(Self).map_err(err)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_div(&other.0).map(Self).map_err(err)
    }
}

/// Negative continued fraction `[0; a_1, a_2, ...]-`.
#[pyclass(name = "NcfExpansion", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyNcf(inhomo::NcfExpansion);

#[pymethods]
impl PyNcf {
    #[new]
    #[pyo3(signature = (pre, period=Vec::new()))]
    fn new(pre: Vec<u64>, period: Vec<u64>) -> PyResult<Self> {
        let e = if period.is_empty() {
            inhomo::NcfExpansion::finite(pre)
        } else {
            inhomo::NcfExpansion::new(pre, period)
        };
        e.map(Self).map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        inhomo::parse_ncf(text).map(Self).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (x, max_terms=10_000))]
    fn expand(x: &PyQuadNum, max_terms: usize) -> PyResult<Self> {
        inhomo::NcfExpansion::expand(&x.0, max_terms)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn preperiod(&self) -> Vec<u64> {
        self.0.preperiod().to_vec()
    }

    #[getter]
    fn period(&self) -> Vec<u64> {
        self.0.period().to_vec()
    }

    fn term(&self, i: usize) -> Option<u64> {
        self.0.term(i)
    }

    fn value(&self) -> PyResult<PyQuadNum> {
        self.0.value().map(PyQuadNum).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("NcfExpansion('{}')", self.0)
    }
}

/// Alpha-expansion digits `b_i` of a target over a base expansion.
#[pyclass(name = "DigitSeq", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyDigitSeq(inhomo::DigitSeq);

#[pymethods]
impl PyDigitSeq {
    /// Digit sequence of `gamma` over `alpha`.
    #[staticmethod]
    #[pyo3(signature = (gamma, alpha, max_terms=2_000))]
    fn expand(gamma: &PyQuadNum, alpha: &PyNcf, max_terms: usize) -> PyResult<Self> {
        alpha_expand(&gamma.0, &alpha.0, max_terms)
            .map(Self)
            .map_err(err)
    }

    #[staticmethod]
    fn gamma_star(alpha: &PyNcf) -> PyResult<Self> {
        gamma_star(&alpha.0).map(Self).map_err(err)
    }

    #[staticmethod]
    #[pyo3(signature = (alpha, pre_t, period_t))]
    fn from_t(alpha: &PyNcf, pre_t: Vec<i64>, period_t: Vec<i64>) -> PyResult<Self> {
        inhomo::DigitSeq::from_t(alpha.0.clone(), &pre_t, &period_t)
            .map(Self)
            .map_err(err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        inhomo::parse_digit_seq(text).map(Self).map_err(err)
    }

    #[getter]
    fn base(&self) -> PyNcf {
        PyNcf(self.0.base().clone())
    }

    #[getter]
    fn pre_digits(&self) -> Vec<u64> {
        self.0.pre_digits().to_vec()
    }

    #[getter]
    fn period_digits(&self) -> Vec<u64> {
        self.0.period_digits().to_vec()
    }

    #[getter]
    fn t_pre(&self) -> Vec<i64> {
        self.0.t_pre()
    }

    #[getter]
    fn t_period(&self) -> Vec<i64> {
        self.0.t_period()
    }

    #[getter]
    fn truncated(&self) -> bool {
        self.0.is_truncated()
    }

    fn gamma(&self) -> PyResult<PyQuadNum> {
        self.0.gamma().map(PyQuadNum).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("DigitSeq('{}')", self.0)
    }
}

fn m_dict<'py>(py: Python<'py>, res: &MResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("kind", res.kind())?;
    match res {
        MResult::Exact { value, witness } => {
            d.set_item("value", PyQuadNum(value.clone()))?;
            let w = PyDict::new(py);
            w.set_item("residue", witness.residue)?;
            w.set_item("k", witness.k)?;
            w.set_item("u", witness.u)?;
            w.set_item("v", witness.v)?;
            w.set_item("j", witness.j())?;
            d.set_item("witness", w)?;
        }
        MResult::UpperBoundOnly { value, residues } => {
            d.set_item("value", PyQuadNum(value.clone()))?;
            d.set_item("residues", residues.clone())?;
        }
        MResult::Estimate { value, window, .. } => {
            d.set_item("value", *value)?;
            d.set_item("window", *window)?;
        }
    }
    Ok(d)
}

/// `M(alpha, gamma)` for an eventually periodic digit sequence. With
/// `full=True` every nearby approximation is examined, which stays exact when
/// `t_k = a_k` recurs.
#[pyfunction]
#[pyo3(signature = (alpha, digits, full=false))]
fn m_exact<'py>(
    py: Python<'py>,
    alpha: &PyNcf,
    digits: &PyDigitSeq,
    full: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let res = if full {
        approx::m_exact_full(&alpha.0, &digits.0)
    } else {
        approx::m_exact(&alpha.0, &digits.0)
    }
    .map_err(err)?;
    m_dict(py, &res)
}

/// Largest `M(alpha, gamma)` over periodic targets whose digit period divides
/// a multiple of the base period up to `period_mult`.
#[pyfunction]
#[pyo3(signature = (alpha, period_mult=1, t_cap=None))]
fn rho_search<'py>(
    py: Python<'py>,
    alpha: &PyNcf,
    period_mult: usize,
    t_cap: Option<u64>,
) -> PyResult<(PyDigitSeq, Bound<'py, PyDict>)> {
    let (d, res) = py
        .detach(|| approx::rho_search(&alpha.0, period_mult, t_cap.unwrap_or(u64::MAX)))
        .map_err(err)?;
    Ok((PyDigitSeq(d), m_dict(py, &res)?))
}

#[pyfunction]
fn bound_report<'py>(py: Python<'py>, r: u64) -> PyResult<Bound<'py, PyDict>> {
    let rep = bounds::bound_report(r).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("R", rep.r)?;
    d.set_item("R_star", rep.r_star)?;
    d.set_item("R_star_star", rep.r_star_star)?;
    d.set_item("beta", PyQuadNum(rep.beta.clone()))?;
    d.set_item("delta", PyQuadNum(rep.delta.clone()))?;
    d.set_item("C", PyQuadNum(rep.c.clone()))?;
    d.set_item("C1", rep.c1.clone().map(PyQuadNum))?;
    d.set_item("upper", PyQuadNum(rep.upper.clone()))?;
    d.set_item(rep.e_term.name(), PyQuadNum(rep.e_term.value().clone()))?;
    d.set_item("cstar_inverse", rep.cstar_inverse)?;
    Ok(d)
}

/// A member of a named family: an `NcfExpansion`, or a `QuadNum` for
/// families defined by their value.
#[pyfunction]
#[pyo3(signature = (kind, r, l=1))]
fn family(py: Python<'_>, kind: &str, r: u64, l: usize) -> PyResult<Py<PyAny>> {
    let kind: FamilyKind = kind.parse().map_err(err)?;
    Ok(match bounds::family(kind, r, l).map_err(err)? {
        FamilyMember::Expansion(e) => Py::new(py, PyNcf(e))?.into_any(),
        FamilyMember::Value(v) => Py::new(py, PyQuadNum(v))?.into_any(),
    })
}

/// Sign of `x - y` for values in possibly different fields.
#[pyfunction]
fn compare(x: &PyQuadNum, y: &PyQuadNum) -> i8 {
    match x.0.compare(&y.0) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

#[pymodule]
fn pyinhomo(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("InhomoError", m.py().get_type::<InhomoError>())?;
    m.add_class::<PyQuadNum>()?;
    m.add_class::<PyNcf>()?;
    m.add_class::<PyDigitSeq>()?;
    m.add_function(wrap_pyfunction!(m_exact, m)?)?;
    m.add_function(wrap_pyfunction!(rho_search, m)?)?;
    m.add_function(wrap_pyfunction!(bound_report, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    Ok(())
}
