//! Python bindings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use unsharp_core::deduction::{
    induced_relation, relevant_universe, search_deductive_systems, verify_deductive_system,
    SetFamily, DEFAULT_UNIVERSE_CAP,
};
use unsharp_core::enumeration::{self, GeneratorSpec};
use unsharp_core::laws::{run_law_suite, LawId, SuiteConfig};
use unsharp_core::{io, Algebra, ElementSet, Error, Operator};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite bounded poset with its negation, implication and conjunction.
#[pyclass(name = "Poset", module = "unsharp", frozen)]
struct PyPoset {
    alg: Algebra,
}

impl PyPoset {
    fn wrap(p: unsharp_core::Poset) -> Self {
        PyPoset {
            alg: Algebra::new(p),
        }
    }

    fn parse(&self, text: &str) -> PyResult<ElementSet> {
        self.alg.poset().parse_set(text).map_err(err)
    }

    fn labels(&self, set: ElementSet) -> Vec<String> {
        set.iter()
            .map(|x| self.alg.poset().name(x).to_owned())
            .collect()
    }

    fn family(&self, system: &str) -> PyResult<SetFamily> {
        SetFamily::parse(self.alg.poset(), system).map_err(err)
    }
}

#[pymethods]
impl PyPoset {
    /// Builds a poset from labels and `(lower, upper)` cover pairs.
    #[new]
    fn new(elements: Vec<String>, covers: Vec<(String, String)>) -> PyResult<Self> {
        let p = unsharp_core::Poset::from_labeled_covers(&elements, &covers).map_err(err)?;
        Ok(PyPoset::wrap(p))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::parse(text).map(PyPoset::wrap).map_err(err)
    }

    fn to_json(&self) -> String {
        io::serialize(self.alg.poset())
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.alg.poset().names().to_vec()
    }

    fn covers(&self) -> Vec<(String, String)> {
        let p = self.alg.poset();
        p.covers()
            .into_iter()
            .map(|(a, b)| (p.name(a).to_owned(), p.name(b).to_owned()))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.alg.len()
    }

    fn __repr__(&self) -> String {
        format!("Poset({})", self.to_json())
    }

    fn leq(&self, a: &str, b: &str) -> PyResult<bool> {
        let p = self.alg.poset();
        Ok(p.leq(p.element(a).map_err(err)?, p.element(b).map_err(err)?))
    }

    /// `A⁰` for a set written as labels, e.g. `"a"` or `"ac"`.
    fn neg(&self, a: &str) -> PyResult<Vec<String>> {
        Ok(self.labels(self.alg.neg_set(self.parse(a)?)))
    }

    /// `A→B`.
    fn imp(&self, a: &str, b: &str) -> PyResult<Vec<String>> {
        Ok(self.labels(self.alg.imp_set(self.parse(a)?, self.parse(b)?)))
    }

    /// `A⊙B`.
    fn conj(&self, a: &str, b: &str) -> PyResult<Vec<String>> {
        Ok(self.labels(self.alg.conj_set(self.parse(a)?, self.parse(b)?)))
    }

    /// The table of `op` (`neg`, `imp` or `conj`) as text.
    fn table(&self, op: &str) -> PyResult<String> {
        let op: Operator = op.parse().map_err(err)?;
        Ok(io::render_table(self.alg.poset(), &self.alg.table(op)))
    }

    /// `(law, passed, first witness)` for each selected law.
    #[pyo3(signature = (suite = "theorems", seed = 0))]
    fn check_laws(&self, suite: &str, seed: u64) -> PyResult<Vec<(String, bool, Option<String>)>> {
        let ids = LawId::parse_selection(suite).map_err(err)?;
        let config = SuiteConfig {
            seed,
            ..SuiteConfig::default()
        };
        let p = self.alg.poset();
        Ok(run_law_suite(&self.alg, &ids, &config)
            .into_iter()
            .map(|r| {
                let witness = r.counterexample().map(|cx| cx.render_witness(p));
                (r.law.to_owned(), r.pass, witness)
            })
            .collect())
    }

    /// `(holds, violations)` for a system such as `"d,e,1"`.
    fn verify_deductive_system(&self, system: &str) -> PyResult<(bool, Vec<String>)> {
        let v = verify_deductive_system(&self.alg, &self.family(system)?);
        let p = self.alg.poset();
        Ok((v.holds, v.violations.iter().map(|x| x.render(p)).collect()))
    }

    #[pyo3(signature = (depth = 2, limit = 100))]
    fn deductive_systems(&self, depth: usize, limit: usize) -> PyResult<Vec<Vec<Vec<String>>>> {
        let universe = relevant_universe(&self.alg, depth).map_err(err)?;
        let found = search_deductive_systems(&self.alg, &universe, limit, DEFAULT_UNIVERSE_CAP)
            .map_err(err)?;
        Ok(found
            .iter()
            .map(|d| d.members().sets().iter().map(|&s| self.labels(s)).collect())
            .collect())
    }

    /// Pairs `(x, y)` of elements with `x→y` and `y→x` in the system.
    fn theta(&self, system: &str) -> PyResult<Vec<(String, String)>> {
        let family = self.family(system)?;
        let universe = relevant_universe(&self.alg, 1).map_err(err)?;
        let relation = induced_relation(&self.alg, &family, &universe);
        let p = self.alg.poset();
        Ok(relation
            .restriction_pairs()
            .into_iter()
            .map(|(x, y)| (p.name(x).to_owned(), p.name(y).to_owned()))
            .collect())
    }

    fn canonical_form(&self) -> PyResult<String> {
        enumeration::canonical_form(self.alg.poset()).map_err(err)
    }

    fn to_dot(&self) -> String {
        io::export_dot(self.alg.poset())
    }
}

#[pyfunction]
fn all_bounded_posets(n: usize) -> PyResult<Vec<PyPoset>> {
    Ok(enumeration::all_bounded_posets(n)
        .map_err(err)?
        .into_iter()
        .map(PyPoset::wrap)
        .collect())
}

#[pyfunction]
fn random_bounded_poset(n: usize, edge_prob: f64, seed: u64) -> PyResult<PyPoset> {
    enumeration::random_bounded_poset(n, edge_prob, seed)
        .map(PyPoset::wrap)
        .map_err(err)
}

/// Runs `laws` on every bounded poset with `n` elements; returns
/// `(posets checked, failures)`.
#[pyfunction]
#[pyo3(signature = (n, laws = "theorems"))]
fn sweep_all(py: Python<'_>, n: usize, laws: &str) -> PyResult<(usize, usize)> {
    let ids = LawId::parse_selection(laws).map_err(err)?;
    let report = py
        .detach(|| enumeration::sweep(&GeneratorSpec::All { n }, &ids, &SuiteConfig::default()))
        .map_err(err)?;
    Ok((report.posets_checked, report.failures.len()))
}

#[pymodule]
fn unsharp(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoset>()?;
    m.add_function(wrap_pyfunction!(all_bounded_posets, m)?)?;
    m.add_function(wrap_pyfunction!(random_bounded_poset, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_all, m)?)?;
    Ok(())
}
