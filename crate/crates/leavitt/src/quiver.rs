//! The quiver algebra KE: finite scalar combinations of paths, with
//! concatenation as multiplication.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Path, Vertex};
use crate::scalar::{FieldSpec, Scalar};

/// An element of KE over the given field: a finitely supported map from
/// paths to nonzero scalars. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverElement {
    graph: Arc<Digraph>,
    field: FieldSpec,
    terms: BTreeMap<Path, Scalar>,
}

impl QuiverElement {
    pub fn zero(graph: &Arc<Digraph>, field: FieldSpec) -> QuiverElement {
        QuiverElement {
            graph: Arc::clone(graph),
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path(graph: &Arc<Digraph>, field: FieldSpec, path: Path) -> QuiverElement {
        let mut el = QuiverElement::zero(graph, field);
        el.add_term(path, field.one());
        el
    }

    pub fn vertex(graph: &Arc<Digraph>, field: FieldSpec, v: Vertex) -> QuiverElement {
        QuiverElement::from_path(graph, field, Path::vertex(graph, v))
    }

    /// The identity: the sum of all vertices (finite graphs are unital).
    pub fn one(graph: &Arc<Digraph>, field: FieldSpec) -> QuiverElement {
        let mut el = QuiverElement::zero(graph, field);
        for v in graph.vertices() {
            el.add_term(Path::vertex(graph, v), field.one());
        }
        el
    }

    pub fn from_terms(
        graph: &Arc<Digraph>,
        field: FieldSpec,
        terms: impl IntoIterator<Item = (Path, Scalar)>,
    ) -> Result<QuiverElement> {
        let mut el = QuiverElement::zero(graph, field);
        for (p, k) in terms {
            if p.graph() != graph {
                return Err(Error::input("path belongs to a different graph"));
            }
            if k.field() != field {
                return Err(Error::input("coefficient from a different field"));
            }
            el.add_term(p, k);
        }
        Ok(el)
    }

    pub fn graph(&self) -> &Arc<Digraph> {
        &self.graph
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Path) -> Scalar {
        self.terms
            .get(p)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// Largest path in the support under the graded order, if any.
    pub fn leading_path(&self) -> Option<&Path> {
        self.terms.keys().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.values().next_back()
    }

    fn add_term(&mut self, p: Path, k: Scalar) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&k);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    fn check_context(&self, other: &QuiverElement) -> Result<()> {
        if self.graph != other.graph {
            return Err(Error::input("elements over different graphs"));
        }
        if self.field != other.field {
            return Err(Error::input("elements over different fields"));
        }
        Ok(())
    }

    pub fn add(&self, other: &QuiverElement) -> Result<QuiverElement> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (p, k) in &other.terms {
            out.add_term(p.clone(), k.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &QuiverElement) -> Result<QuiverElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QuiverElement {
        let terms = self
            .terms
            .iter()
            .map(|(p, k)| (p.clone(), k.neg()))
            .collect();
        QuiverElement {
            graph: Arc::clone(&self.graph),
            field: self.field,
            terms,
        }
    }

    pub fn scale(&self, k: &Scalar) -> Result<QuiverElement> {
        if k.field() != self.field {
            return Err(Error::input("scalar from a different field"));
        }
        if k.is_zero() {
            return Ok(QuiverElement::zero(&self.graph, self.field));
        }
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| (p.clone(), c.mul(k)))
            .collect();
        Ok(QuiverElement {
            graph: Arc::clone(&self.graph),
            field: self.field,
            terms,
        })
    }

    /// Bilinear extension of path composition; non-composable products are 0.
    pub fn mul(&self, other: &QuiverElement) -> Result<QuiverElement> {
        self.check_context(other)?;
        let mut out = QuiverElement::zero(&self.graph, self.field);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                if let Some(pq) = p.compose(q) {
                    out.add_term(pq, a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// Right multiplication by a single path.
    pub fn mul_path(&self, q: &Path) -> QuiverElement {
        let mut out = QuiverElement::zero(&self.graph, self.field);
        for (p, a) in &self.terms {
            if let Some(pq) = p.compose(q) {
                out.add_term(pq, a.clone());
            }
        }
        out
    }

    /// Left multiplication by a single path.
    pub fn path_mul(&self, p: &Path) -> QuiverElement {
        let mut out = QuiverElement::zero(&self.graph, self.field);
        for (q, a) in &self.terms {
            if let Some(pq) = p.compose(q) {
                out.add_term(pq, a.clone());
            }
        }
        out
    }

    /// Keeps terms of length at most `d`.
    pub fn truncate(&self, d: usize) -> QuiverElement {
        let terms = self
            .terms
            .iter()
            .filter(|(p, _)| p.len() <= d)
            .map(|(p, k)| (p.clone(), k.clone()));
        QuiverElement {
            graph: Arc::clone(&self.graph),
            field: self.field,
            terms: terms.collect(),
        }
    }

    /// Maximum path length in the support; `None` for the zero element.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|p| p.len()).max()
    }
}

impl fmt::Display for QuiverElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::quiver_to_text(self))
    }
}
