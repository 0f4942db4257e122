//! Python bindings: words, modules over `k[[x,y]]/(xy)` and the DVR catalog.

use matlis::field::parse_rational;
use matlis::modrep::socle_series;
use matlis::poly::PolyField;
use matlis::{
    arno_split, classify_word, decompose_with, dual, dvr_add, dvr_classify, dvr_dual, hom_dim, is_isomorphic,
    materialize_band, materialize_string, parse_band, parse_word, AnyModule, BandParam, DvrCatalogObject,
    FieldSpec, Fp, ModuleRep, Rationals, DEFAULT_MC_BUDGET,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite or stabilising string such as `"x^inf Y^inf"`.
#[pyclass(name = "StringWord", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyWord(matlis::StringWord);

#[pymethods]
impl PyWord {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_word(text).map(PyWord).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("StringWord({:?})", self.0.to_string())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    #[getter]
    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    fn classify(&self) -> String {
        classify_word(&self.0).to_string()
    }

    /// The inverse word, whose module is the Matlis dual.
    fn dual(&self) -> Self {
        PyWord(self.0.inverse())
    }

    fn canonical(&self) -> Self {
        PyWord(self.0.canonical())
    }

    fn truncate(&self, depth: usize) -> Self {
        PyWord(self.0.truncate(depth))
    }

    /// `(sub, quot, index)` with `sub` noetherian and `quot` artinian.
    fn split(&self) -> (Self, Self, Option<i64>) {
        let s = arno_split(&self.0);
        (PyWord(s.sub), PyWord(s.quot), s.split_index)
    }
}

/// A finite-dimensional module given by the matrices of `x` and `y`.
#[pyclass(name = "Module", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyModuleRep(AnyModule);

fn field_of(field: &str) -> PyResult<FieldSpec> {
    field.parse().map_err(err)
}

fn decompose_parts<K: PolyField>(
    m: &ModuleRep<K>,
    seed: u64,
    budget: usize,
) -> PyResult<Vec<(PyModuleRep, usize, bool)>>
where
    AnyModule: From<ModuleRep<K>>,
{
    let r = decompose_with(m, seed, budget).map_err(err)?;
    Ok(r.parts
        .into_iter()
        .map(|p| (PyModuleRep(p.module.into()), p.multiplicity, p.certificate.is_exact()))
        .collect())
}

#[pymethods]
impl PyModuleRep {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        AnyModule::from_json(text).map(PyModuleRep).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    /// Module of a finite string.
    #[staticmethod]
    #[pyo3(signature = (word, field = "32003"))]
    fn materialize(word: &PyWord, field: &str) -> PyResult<Self> {
        let m = match field_of(field)? {
            FieldSpec::Fp(p) => AnyModule::Fp(materialize_string(&word.0, &Fp::new(p).map_err(err)?).map_err(err)?),
            FieldSpec::Q => AnyModule::Q(materialize_string(&word.0, &Rationals).map_err(err)?),
        };
        Ok(PyModuleRep(m))
    }

    /// Band module `band(...)` with a Jordan block parameter.
    #[staticmethod]
    #[pyo3(signature = (word, eigenvalue = "1", size = 1, field = "32003"))]
    fn band(word: &str, eigenvalue: &str, size: usize, field: &str) -> PyResult<Self> {
        let pw = parse_band(word).map_err(err)?;
        let bad = || err(format!("bad eigenvalue {eigenvalue:?}"));
        let m = match field_of(field)? {
            FieldSpec::Fp(p) => {
                let f = Fp::new(p).map_err(err)?;
                let n: i64 = eigenvalue.trim().parse().map_err(|_| bad())?;
                let v = BandParam::Jordan { eigenvalue: f.elem(n), size };
                AnyModule::Fp(materialize_band(&pw, &v, &f).map_err(err)?)
            }
            FieldSpec::Q => {
                let v = BandParam::Jordan { eigenvalue: parse_rational(eigenvalue).ok_or_else(bad)?, size };
                AnyModule::Q(materialize_band(&pw, &v, &Rationals).map_err(err)?)
            }
        };
        Ok(PyModuleRep(m))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn field(&self) -> String {
        self.0.field_spec().to_string()
    }

    fn __repr__(&self) -> String {
        format!("Module(dim={}, field={})", self.0.dim(), self.0.field_spec())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn dual(&self) -> Self {
        PyModuleRep(match &self.0 {
            AnyModule::Fp(m) => AnyModule::Fp(dual(m)),
            AnyModule::Q(m) => AnyModule::Q(dual(m)),
        })
    }

    fn socle_series(&self) -> Vec<usize> {
        match &self.0 {
            AnyModule::Fp(m) => socle_series(m),
            AnyModule::Q(m) => socle_series(m),
        }
    }

    /// `dim Hom(self, other)`.
    fn hom_dim(&self, other: &Self) -> PyResult<usize> {
        match (&self.0, &other.0) {
            (AnyModule::Fp(a), AnyModule::Fp(b)) => hom_dim(a, b).map_err(err),
            (AnyModule::Q(a), AnyModule::Q(b)) => hom_dim(a, b).map_err(err),
            _ => Err(err("modules live over different fields")),
        }
    }

    #[pyo3(signature = (other, seed = 0, budget = DEFAULT_MC_BUDGET))]
    fn is_isomorphic(&self, other: &Self, seed: u64, budget: usize) -> PyResult<bool> {
        match (&self.0, &other.0) {
            (AnyModule::Fp(a), AnyModule::Fp(b)) => is_isomorphic(a, b, seed, budget).map(|r| r.is_iso()).map_err(err),
            (AnyModule::Q(a), AnyModule::Q(b)) => is_isomorphic(a, b, seed, budget).map(|r| r.is_iso()).map_err(err),
            _ => Err(err("modules live over different fields")),
        }
    }

    /// Indecomposable summands as `(module, multiplicity, exact_certificate)`.
    #[pyo3(signature = (seed = 0, budget = DEFAULT_MC_BUDGET))]
    fn decompose(&self, seed: u64, budget: usize) -> PyResult<Vec<(PyModuleRep, usize, bool)>> {
        match &self.0 {
            AnyModule::Fp(m) => decompose_parts(m, seed, budget),
            AnyModule::Q(m) => decompose_parts(m, seed, budget),
        }
    }
}

fn catalog(text: &str) -> PyResult<DvrCatalogObject> {
    text.parse().map_err(err)
}

#[pyfunction(name = "dvr_dual")]
fn py_dvr_dual(object: &str) -> PyResult<String> {
    Ok(dvr_dual(&catalog(object)?).to_string())
}

#[pyfunction(name = "dvr_classify")]
fn py_dvr_classify(object: &str) -> PyResult<String> {
    Ok(dvr_classify(&catalog(object)?).to_string())
}

#[pyfunction(name = "dvr_add")]
fn py_dvr_add(a: &str, b: &str) -> PyResult<String> {
    Ok(dvr_add(&catalog(a)?, &catalog(b)?).to_string())
}

#[pyfunction]
fn classify(word: &str) -> PyResult<String> {
    Ok(classify_word(&parse_word(word).map_err(err)?).to_string())
}

#[pymodule]
fn matlis_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyModuleRep>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(py_dvr_dual, m)?)?;
    m.add_function(wrap_pyfunction!(py_dvr_classify, m)?)?;
    m.add_function(wrap_pyfunction!(py_dvr_add, m)?)?;
    Ok(())
}
