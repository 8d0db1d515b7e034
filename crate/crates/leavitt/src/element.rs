//! Elements of the Cohn and Leavitt path algebras of a finite digraph.
//!
//! Elements are scalar combinations of monomials α·β* (a real path and a
//! ghost path with common range). The first Cuntz-Krieger relation is built
//! into multiplication; the second is applied by `normal_form`, which
//! rewrites e·e* -> v - Σ_{f≠e} f·f* at the junction of any monomial whose
//! real and ghost paths both end in the designated edge `e` of a regular
//! vertex `v`. The designated edge is the lexicographically greatest edge
//! emitted by the vertex; a monomial is in normal form when no such junction
//! remains, and these monomials form a K-basis.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge, Path, Vertex};
use crate::quiver::QuiverElement;
use crate::scalar::{FieldSpec, Scalar};

/// Which Cuntz-Krieger relations the algebra imposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// CK1 and CK2: the Leavitt path algebra L_K(E).
    Leavitt,
    /// CK1 only: the Cohn path algebra C_K(E); α·β* monomials are a basis.
    Cohn,
}

/// Algebra descriptor: graph, field, mode, and the designated edge chosen
/// at every regular vertex (unused in Cohn mode).
#[derive(Debug, PartialEq, Eq)]
pub struct ReductionConfig {
    graph: Arc<Digraph>,
    field: FieldSpec,
    mode: Mode,
    designated: Vec<Option<Edge>>,
}

impl ReductionConfig {
    pub fn new(graph: &Arc<Digraph>, field: FieldSpec, mode: Mode) -> Arc<ReductionConfig> {
        let designated = graph
            .vertices()
            .map(|v| graph.out_edges(v).iter().max().copied())
            .collect();
        Arc::new(ReductionConfig {
            graph: Arc::clone(graph),
            field,
            mode,
            designated,
        })
    }

    pub fn leavitt(graph: &Arc<Digraph>, field: FieldSpec) -> Arc<ReductionConfig> {
        ReductionConfig::new(graph, field, Mode::Leavitt)
    }

    pub fn cohn(graph: &Arc<Digraph>, field: FieldSpec) -> Arc<ReductionConfig> {
        ReductionConfig::new(graph, field, Mode::Cohn)
    }

    pub fn graph(&self) -> &Arc<Digraph> {
        &self.graph
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn designated_edge(&self, v: Vertex) -> Option<Edge> {
        self.designated[v.0 as usize]
    }

    /// A junction e·e* with e designated is the one rewritable pattern.
    fn reducible(&self, m: &LeavittMonomial) -> bool {
        if self.mode == Mode::Cohn {
            return false;
        }
        match (m.real.last_edge(), m.ghost.last_edge()) {
            (Some(e1), Some(e2)) if e1 == e2 => {
                self.designated[self.graph.source(e1).0 as usize] == Some(e1)
            }
            _ => false,
        }
    }
}

/// A basis monomial α·β* of the extended-graph algebra, with r(α) = r(β).
/// Monomials violating the range condition are zero and never constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeavittMonomial {
    real: Path,
    ghost: Path,
}

impl LeavittMonomial {
    pub fn new(real: Path, ghost: Path) -> Result<LeavittMonomial> {
        if real.graph() != ghost.graph() {
            return Err(Error::input("monomial paths from different graphs"));
        }
        if real.range() != ghost.range() {
            return Err(Error::input(format!(
                "monomial ranges differ: r({}) != r({})",
                real, ghost
            )));
        }
        Ok(LeavittMonomial { real, ghost })
    }

    pub fn vertex(graph: &Arc<Digraph>, v: Vertex) -> LeavittMonomial {
        let p = Path::vertex(graph, v);
        LeavittMonomial {
            real: p.clone(),
            ghost: p,
        }
    }

    pub fn from_real(path: Path) -> LeavittMonomial {
        let ghost = Path::vertex(path.graph(), path.range());
        LeavittMonomial { real: path, ghost }
    }

    pub fn from_ghost(path: Path) -> LeavittMonomial {
        let real = Path::vertex(path.graph(), path.range());
        LeavittMonomial { real, ghost: path }
    }

    pub fn real(&self) -> &Path {
        &self.real
    }

    pub fn ghost(&self) -> &Path {
        &self.ghost
    }

    /// Total degree |α| + |β|.
    pub fn degree(&self) -> usize {
        self.real.len() + self.ghost.len()
    }

    /// Graded degree |α| - |β|.
    pub fn graded_degree(&self) -> i64 {
        self.real.len() as i64 - self.ghost.len() as i64
    }

    pub fn star(&self) -> LeavittMonomial {
        LeavittMonomial {
            real: self.ghost.clone(),
            ghost: self.real.clone(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.ghost.is_vertex()
    }

    /// Monomial product under CK1: (αβ*)(γδ*) is (αγ')δ* if γ = βγ',
    /// α(δβ')* if β = γβ', and zero otherwise.
    pub fn mul(&self, other: &LeavittMonomial) -> Option<LeavittMonomial> {
        let beta = &self.ghost;
        let gamma = &other.real;
        if beta.is_head_of(gamma) {
            let rest = gamma.tail(beta.len()).expect("head length in range");
            let real = self.real.compose(&rest).expect("ranges agree");
            Some(LeavittMonomial {
                real,
                ghost: other.ghost.clone(),
            })
        } else if gamma.is_head_of(beta) {
            let rest = beta.tail(gamma.len()).expect("head length in range");
            let ghost = other.ghost.compose(&rest).expect("ranges agree");
            Some(LeavittMonomial {
                real: self.real.clone(),
                ghost,
            })
        } else {
            None
        }
    }
}

impl PartialOrd for LeavittMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LeavittMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Graded, with real monomials before ghostly ones of the same
        // total degree.
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.ghost.len().cmp(&other.ghost.len()))
            .then_with(|| self.real.cmp(&other.real))
            .then_with(|| self.ghost.cmp(&other.ghost))
    }
}

impl fmt::Display for LeavittMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::monomial_to_text(self))
    }
}

/// An element of L_K(E) or C_K(E): finitely supported map from monomials to
/// nonzero scalars, plus a flag recording whether it is known normal-form.
#[derive(Debug, Clone)]
pub struct LeavittElement {
    cfg: Arc<ReductionConfig>,
    terms: BTreeMap<LeavittMonomial, Scalar>,
    normal: bool,
}

impl PartialEq for LeavittElement {
    fn eq(&self, other: &Self) -> bool {
        self.cfg == other.cfg && self.terms == other.terms
    }
}

impl Eq for LeavittElement {}

impl LeavittElement {
    pub fn zero(cfg: &Arc<ReductionConfig>) -> LeavittElement {
        LeavittElement {
            cfg: Arc::clone(cfg),
            terms: BTreeMap::new(),
            normal: true,
        }
    }

    /// The identity Σ_v v.
    pub fn one(cfg: &Arc<ReductionConfig>) -> LeavittElement {
        let mut el = LeavittElement::zero(cfg);
        for v in cfg.graph.vertices() {
            el.add_term(LeavittMonomial::vertex(&cfg.graph, v), cfg.field.one());
        }
        el
    }

    pub fn monomial(cfg: &Arc<ReductionConfig>, m: LeavittMonomial) -> Result<LeavittElement> {
        if m.real.graph() != &cfg.graph {
            return Err(Error::input("monomial belongs to a different graph"));
        }
        let mut el = LeavittElement::zero(cfg);
        let normal = !cfg.reducible(&m);
        el.add_term(m, cfg.field.one());
        el.normal = normal;
        Ok(el)
    }

    pub fn from_terms(
        cfg: &Arc<ReductionConfig>,
        terms: impl IntoIterator<Item = (LeavittMonomial, Scalar)>,
    ) -> Result<LeavittElement> {
        let mut el = LeavittElement::zero(cfg);
        for (m, k) in terms {
            if m.real.graph() != &cfg.graph {
                return Err(Error::input("monomial belongs to a different graph"));
            }
            if k.field() != cfg.field {
                return Err(Error::input("coefficient from a different field"));
            }
            el.add_term(m, k);
        }
        el.normal = el.terms.keys().all(|m| !cfg.reducible(m));
        Ok(el)
    }

    /// Embeds a quiver element: each path α becomes α·r(α)*.
    pub fn embed(cfg: &Arc<ReductionConfig>, x: &QuiverElement) -> Result<LeavittElement> {
        if x.graph() != &cfg.graph {
            return Err(Error::input("element over a different graph"));
        }
        if x.field() != cfg.field {
            return Err(Error::input("element over a different field"));
        }
        let mut el = LeavittElement::zero(cfg);
        for (p, k) in x.terms() {
            el.add_term(LeavittMonomial::from_real(p.clone()), k.clone());
        }
        Ok(el)
    }

    /// The reverse of `embed` when every monomial is real; errors otherwise.
    pub fn to_quiver(&self) -> Result<QuiverElement> {
        let mut terms = Vec::new();
        for (m, k) in &self.terms {
            if !m.is_real() {
                return Err(Error::input(format!("ghost monomial {m} is not in KE")));
            }
            terms.push((m.real.clone(), k.clone()));
        }
        QuiverElement::from_terms(&self.cfg.graph, self.cfg.field, terms)
    }

    pub fn config(&self) -> &Arc<ReductionConfig> {
        &self.cfg
    }

    pub fn graph(&self) -> &Arc<Digraph> {
        &self.cfg.graph
    }

    pub fn field(&self) -> FieldSpec {
        self.cfg.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LeavittMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn coefficient(&self, m: &LeavittMonomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.cfg.field.zero())
    }

    fn add_term(&mut self, m: LeavittMonomial, k: Scalar) {
        if k.is_zero() {
            return;
        }
        self.normal = false;
        match self.terms.entry(m) {
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

    fn check_context(&self, other: &LeavittElement) -> Result<()> {
        if self.cfg != other.cfg {
            return Err(Error::input(
                "elements over different algebra configurations",
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &LeavittElement) -> Result<LeavittElement> {
        self.check_context(other)?;
        let was_normal = self.normal && other.normal;
        let mut out = self.clone();
        for (m, k) in &other.terms {
            out.add_term(m.clone(), k.clone());
        }
        // A sum of normal-form monomials is normal-form.
        out.normal = was_normal;
        Ok(out)
    }

    pub fn sub(&self, other: &LeavittElement) -> Result<LeavittElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LeavittElement {
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), k.neg()))
            .collect();
        LeavittElement {
            cfg: Arc::clone(&self.cfg),
            terms,
            normal: self.normal,
        }
    }

    pub fn scale(&self, k: &Scalar) -> Result<LeavittElement> {
        if k.field() != self.cfg.field {
            return Err(Error::input("scalar from a different field"));
        }
        if k.is_zero() {
            return Ok(LeavittElement::zero(&self.cfg));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.mul(k)))
            .collect();
        Ok(LeavittElement {
            cfg: Arc::clone(&self.cfg),
            terms,
            normal: self.normal,
        })
    }

    /// Bilinear CK1 product. The result is not necessarily normal-form.
    pub fn mul(&self, other: &LeavittElement) -> Result<LeavittElement> {
        self.check_context(other)?;
        let mut out = LeavittElement::zero(&self.cfg);
        for (m1, k1) in &self.terms {
            for (m2, k2) in &other.terms {
                if let Some(m) = m1.mul(m2) {
                    out.add_term(m, k1.mul(k2));
                }
            }
        }
        if self.cfg.mode == Mode::Cohn {
            out.normal = true;
        }
        Ok(out)
    }

    /// Swaps real and ghost paths in every monomial; an anti-automorphism.
    pub fn involution(&self) -> LeavittElement {
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.star(), k.clone()))
            .collect();
        // The junction condition is symmetric, so normality is preserved.
        LeavittElement {
            cfg: Arc::clone(&self.cfg),
            terms,
            normal: self.normal,
        }
    }

    /// Exhaustively rewrites designated junctions; idempotent. Identity in
    /// Cohn mode.
    pub fn normal_form(&self) -> LeavittElement {
        if self.normal || self.cfg.mode == Mode::Cohn {
            let mut out = self.clone();
            out.normal = true;
            return out;
        }
        self.normal_form_inner(None)
    }

    /// Normal form with rewrite sites visited in a seed-dependent random
    /// order. Confluence check hook: the result must not depend on the seed.
    pub fn normal_form_shuffled(&self, seed: u64) -> LeavittElement {
        if self.cfg.mode == Mode::Cohn {
            return self.normal_form();
        }
        self.normal_form_inner(Some(seed | 1))
    }

    fn normal_form_inner(&self, mut shuffle_state: Option<u64>) -> LeavittElement {
        let cfg = &self.cfg;
        let mut out = LeavittElement::zero(cfg);
        out.terms = self.terms.clone();
        loop {
            let reducible: Vec<LeavittMonomial> = out
                .terms
                .keys()
                .filter(|m| cfg.reducible(m))
                .cloned()
                .collect();
            if reducible.is_empty() {
                break;
            }
            let pick = match shuffle_state.as_mut() {
                None => reducible.len() - 1,
                Some(state) => {
                    // xorshift64*: deterministic per seed, independent of map order.
                    *state ^= *state << 13;
                    *state ^= *state >> 7;
                    *state ^= *state << 17;
                    (*state % reducible.len() as u64) as usize
                }
            };
            let m = reducible[pick].clone();
            let k = out.terms.remove(&m).expect("reducible monomial present");
            let e = m.real.last_edge().expect("junction edge");
            let v = cfg.graph.source(e);
            let alpha = m.real.head(m.real.len() - 1).expect("head");
            let beta = m.ghost.head(m.ghost.len() - 1).expect("head");
            out.add_term(
                LeavittMonomial::new(alpha.clone(), beta.clone()).expect("ranges agree"),
                k.clone(),
            );
            for &f in cfg.graph.out_edges(v) {
                if f == e {
                    continue;
                }
                let m2 =
                    LeavittMonomial::new(alpha.extend(f), beta.extend(f)).expect("ranges agree");
                out.add_term(m2, k.neg());
            }
        }
        out.normal = true;
        out
    }

    /// True iff every monomial is a real path (after normalization).
    pub fn is_ghost_free(&self) -> bool {
        if self.normal {
            return self.terms.keys().all(|m| m.is_real());
        }
        self.normal_form().is_ghost_free()
    }

    /// Maximum ghost-path length over the normal-form support; 0 for
    /// (embedded) quiver elements and for zero.
    pub fn ghost_degree(&self) -> usize {
        let nf = self.normal_form();
        nf.terms.keys().map(|m| m.ghost.len()).max().unwrap_or(0)
    }

    /// Maximum total degree |α|+|β| over the support; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Component of graded degree `d` under the Z-grading |α| - |β|.
    pub fn graded_component(&self, d: i64) -> LeavittElement {
        let nf = self.normal_form();
        let terms = nf
            .terms
            .iter()
            .filter(|(m, _)| m.graded_degree() == d)
            .map(|(m, k)| (m.clone(), k.clone()))
            .collect();
        LeavittElement {
            cfg: Arc::clone(&self.cfg),
            terms,
            normal: true,
        }
    }

    /// Graded degrees present in the normal form, ascending.
    pub fn graded_support(&self) -> Vec<i64> {
        let nf = self.normal_form();
        let mut degs: Vec<i64> = nf.terms.keys().map(|m| m.graded_degree()).collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }
}

impl fmt::Display for LeavittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::element_to_text(self))
    }
}

/// Outcome of `basis_enumerate`: the normal-form monomials up to the degree
/// bound, plus the total dimension when the graph is acyclic (where the
/// enumeration saturates).
#[derive(Debug, Clone)]
pub struct BasisReport {
    pub monomials: Vec<LeavittMonomial>,
    pub bound: usize,
    pub acyclic: bool,
    /// Total K-dimension of the algebra; `Some` iff the graph is acyclic.
    pub dimension: Option<usize>,
}

/// Enumerates normal-form basis monomials with |α|+|β| ≤ bound in the
/// graded monomial order. In Cohn mode every α·β* with r(α)=r(β) counts.
pub fn basis_enumerate(cfg: &Arc<ReductionConfig>, bound: usize) -> BasisReport {
    let monomials = enumerate_up_to(cfg, bound);
    let acyclic = cfg.graph.is_acyclic();
    let dimension = acyclic.then(|| {
        // Path lengths are bounded by the vertex count, so this saturates.
        let cap = 2 * cfg.graph.vertex_count();
        enumerate_up_to(cfg, cap).len()
    });
    BasisReport {
        monomials,
        bound,
        acyclic,
        dimension,
    }
}

fn enumerate_up_to(cfg: &Arc<ReductionConfig>, bound: usize) -> Vec<LeavittMonomial> {
    let graph = &cfg.graph;
    // Paths grouped by range vertex, per length.
    let mut by_range: Vec<Vec<Vec<Path>>> = Vec::new();
    for d in 0..=bound {
        let mut level = vec![Vec::new(); graph.vertex_count()];
        for p in graph.paths_of_length(d) {
            level[p.range().0 as usize].push(p);
        }
        by_range.push(level);
    }
    let mut out = Vec::new();
    for la in 0..=bound {
        for lb in 0..=bound.saturating_sub(la) {
            for v in graph.vertices() {
                for alpha in &by_range[la][v.0 as usize] {
                    for beta in &by_range[lb][v.0 as usize] {
                        let m = LeavittMonomial::new(alpha.clone(), beta.clone())
                            .expect("common range");
                        if !cfg.reducible(&m) {
                            out.push(m);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::VertexKind;

    fn l12() -> Arc<ReductionConfig> {
        ReductionConfig::leavitt(&fixtures::loop_graph(2), FieldSpec::Rationals)
    }

    fn path(cfg: &Arc<ReductionConfig>, ids: &[&str]) -> Path {
        let g = cfg.graph();
        if ids.len() == 1 {
            if let Ok(v) = g.vertex(ids[0]) {
                return Path::vertex(g, v);
            }
        }
        let edges = ids.iter().map(|id| g.edge(id).unwrap()).collect();
        Path::from_edges(g, edges).unwrap()
    }

    fn real(cfg: &Arc<ReductionConfig>, ids: &[&str]) -> LeavittElement {
        LeavittElement::monomial(cfg, LeavittMonomial::from_real(path(cfg, ids))).unwrap()
    }

    fn ghost(cfg: &Arc<ReductionConfig>, ids: &[&str]) -> LeavittElement {
        LeavittElement::monomial(cfg, LeavittMonomial::from_ghost(path(cfg, ids))).unwrap()
    }

    #[test]
    fn embed_is_injective_on_examples() {
        let cfg = l12();
        let g = cfg.graph();
        let f = cfg.field();
        let v = QuiverElement::vertex(g, f, g.vertex("v").unwrap());
        let ev = LeavittElement::embed(&cfg, &v).unwrap();
        assert_eq!(ev, LeavittElement::one(&cfg));
        assert!(ev.is_ghost_free());

        let a1 = QuiverElement::from_path(g, f, path(&cfg, &["a1"]));
        let a2 = QuiverElement::from_path(g, f, path(&cfg, &["a2"]));
        let x = a1.scale(&f.from_integer(2)).unwrap().sub(&a2).unwrap();
        let ex = LeavittElement::embed(&cfg, &x).unwrap();
        assert_eq!(ex.term_count(), 2);
        assert_eq!(ex.to_quiver().unwrap(), x);

        let zero = QuiverElement::zero(g, f);
        assert!(LeavittElement::embed(&cfg, &zero).unwrap().is_zero());
    }

    #[test]
    fn ck1_multiplication() {
        let cfg = l12();
        // a1* . a2 = 0
        let p = ghost(&cfg, &["a1"]).mul(&real(&cfg, &["a2"])).unwrap();
        assert!(p.is_zero());
        // a1* . a1 = v
        let q = ghost(&cfg, &["a1"]).mul(&real(&cfg, &["a1"])).unwrap();
        assert_eq!(q, LeavittElement::one(&cfg));
        // (a1 a2*)(a2 a1*) = a1 a1*
        let m1 = LeavittElement::monomial(
            &cfg,
            LeavittMonomial::new(path(&cfg, &["a1"]), path(&cfg, &["a2"])).unwrap(),
        )
        .unwrap();
        let m2 = LeavittElement::monomial(
            &cfg,
            LeavittMonomial::new(path(&cfg, &["a2"]), path(&cfg, &["a1"])).unwrap(),
        )
        .unwrap();
        let prod = m1.mul(&m2).unwrap();
        let expect = LeavittElement::monomial(
            &cfg,
            LeavittMonomial::new(path(&cfg, &["a1"]), path(&cfg, &["a1"])).unwrap(),
        )
        .unwrap();
        assert_eq!(prod, expect);
        // a1* . (a1 a2) = a2
        let r = ghost(&cfg, &["a1"])
            .mul(&real(&cfg, &["a1", "a2"]))
            .unwrap();
        assert_eq!(r, real(&cfg, &["a2"]));
    }

    #[test]
    fn normal_form_examples() {
        let cfg = l12();
        // a1 a1* + a2 a2* = 1
        let sum = real(&cfg, &["a1"])
            .mul(&ghost(&cfg, &["a1"]))
            .unwrap()
            .add(&real(&cfg, &["a2"]).mul(&ghost(&cfg, &["a2"])).unwrap())
            .unwrap();
        assert_eq!(sum.normal_form(), LeavittElement::one(&cfg));

        // a2 a2* -> v - a1 a1* (a2 is the designated edge).
        let g = cfg.graph();
        assert_eq!(
            cfg.designated_edge(g.vertex("v").unwrap()),
            Some(g.edge("a2").unwrap())
        );
        let m = real(&cfg, &["a2"]).mul(&ghost(&cfg, &["a2"])).unwrap();
        let nf = m.normal_form();
        let expect = LeavittElement::one(&cfg)
            .sub(&real(&cfg, &["a1"]).mul(&ghost(&cfg, &["a1"])).unwrap())
            .unwrap();
        assert_eq!(nf, expect);

        // In the A2 graph, a a* = v1.
        let a2cfg = ReductionConfig::leavitt(&fixtures::dynkin(2), FieldSpec::Rationals);
        let a = real(&a2cfg, &["a1"]);
        let astar = ghost(&a2cfg, &["a1"]);
        let aa = a.mul(&astar).unwrap().normal_form();
        let v1 = LeavittElement::monomial(
            &a2cfg,
            LeavittMonomial::vertex(a2cfg.graph(), a2cfg.graph().vertex("v1").unwrap()),
        )
        .unwrap();
        assert_eq!(aa, v1);
    }

    #[test]
    fn normal_form_idempotent_and_congruence() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let cfg = l12();
        let basis = basis_enumerate(&cfg, 3).monomials;
        let mut sample = || {
            let mut el = LeavittElement::zero(&cfg);
            for _ in 0..rng.gen_range(1..=4) {
                let m = basis[rng.gen_range(0..basis.len())].clone();
                let k = cfg.field().from_integer(rng.gen_range(-2..=2));
                el = el
                    .add(&LeavittElement::from_terms(&cfg, [(m, k)]).unwrap())
                    .unwrap();
            }
            el
        };
        for _ in 0..50 {
            let x = sample();
            let y = sample();
            let nx = x.normal_form();
            assert_eq!(nx.normal_form(), nx);
            let xy = x.mul(&y).unwrap().normal_form();
            let nxny = nx.mul(&y.normal_form()).unwrap().normal_form();
            assert_eq!(xy, nxny);
            let xpy = x.add(&y).unwrap().normal_form();
            assert_eq!(xpy, nx.add(&y.normal_form()).unwrap().normal_form());
        }
    }

    #[test]
    fn ck_identities_vanish() {
        for g in [
            fixtures::loop_graph(3),
            fixtures::toeplitz(),
            fixtures::branch_loops(),
        ] {
            let cfg = ReductionConfig::leavitt(&g, FieldSpec::Rationals);
            for v in g.vertices() {
                if g.classify(v) != VertexKind::Regular {
                    continue;
                }
                let mut acc = LeavittElement::monomial(&cfg, LeavittMonomial::vertex(&g, v))
                    .unwrap()
                    .neg();
                for &e in g.out_edges(v) {
                    let p = Path::edge(&g, e);
                    let m = LeavittMonomial::new(p.clone(), p).unwrap();
                    acc = acc
                        .add(&LeavittElement::monomial(&cfg, m).unwrap())
                        .unwrap();
                }
                assert!(acc.normal_form().is_zero());
            }
            for e1 in g.edges() {
                for e2 in g.edges() {
                    let x = LeavittElement::monomial(
                        &cfg,
                        LeavittMonomial::from_ghost(Path::edge(&g, e1)),
                    )
                    .unwrap()
                    .mul(
                        &LeavittElement::monomial(
                            &cfg,
                            LeavittMonomial::from_real(Path::edge(&g, e2)),
                        )
                        .unwrap(),
                    )
                    .unwrap()
                    .normal_form();
                    if e1 == e2 {
                        let r = LeavittElement::monomial(
                            &cfg,
                            LeavittMonomial::vertex(&g, g.range(e1)),
                        )
                        .unwrap();
                        assert_eq!(x, r);
                    } else {
                        assert!(x.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn involution_examples() {
        let cfg = l12();
        let m = LeavittElement::monomial(
            &cfg,
            LeavittMonomial::new(path(&cfg, &["a1", "a2"]), path(&cfg, &["a1"])).unwrap(),
        )
        .unwrap();
        let star = m.involution();
        let expect = LeavittElement::monomial(
            &cfg,
            LeavittMonomial::new(path(&cfg, &["a1"]), path(&cfg, &["a1", "a2"])).unwrap(),
        )
        .unwrap();
        assert_eq!(star, expect);
        assert_eq!(star.involution(), m);
        let one = LeavittElement::one(&cfg);
        assert_eq!(one.involution(), one);
    }

    #[test]
    fn grading_examples() {
        let cfg = l12();
        let one = LeavittElement::one(&cfg);
        assert_eq!(one.graded_component(0), one);

        // a1 has degree 1, a1 a2* degree 0.
        let x = real(&cfg, &["a1"])
            .add(&real(&cfg, &["a1"]).mul(&ghost(&cfg, &["a2"])).unwrap())
            .unwrap();
        assert_eq!(x.graded_component(1), real(&cfg, &["a1"]));

        // Ghost degree of a ghost word of length 2 through a real prefix.
        let bl = ReductionConfig::leavitt(&fixtures::branch_loops(), FieldSpec::Rationals);
        let r = real(&bl, &["a2"])
            .mul(&ghost(&bl, &["a3"]))
            .unwrap()
            .mul(&ghost(&bl, &["a4"]))
            .unwrap()
            .add(&ghost(&bl, &["a2", "a3"]))
            .unwrap();
        assert_eq!(r.ghost_degree(), 2);
    }

    #[test]
    fn basis_enumeration_and_dimensions() {
        let a2 = ReductionConfig::leavitt(&fixtures::dynkin(2), FieldSpec::Rationals);
        let report = basis_enumerate(&a2, 2);
        assert_eq!(report.dimension, Some(4));
        let names: Vec<String> = report.monomials.iter().map(|m| m.to_string()).collect();
        assert_eq!(names, vec!["v1", "v2", "a1", "a1^*"]);

        let fork = ReductionConfig::leavitt(&fixtures::fork(), FieldSpec::Rationals);
        assert_eq!(basis_enumerate(&fork, 4).dimension, Some(8));

        // L(1,2), bound 2: a2 a2* is excluded; a1 a1*, a1 a2*, a2 a1* are kept.
        let cfg = l12();
        let report = basis_enumerate(&cfg, 2);
        assert!(report.dimension.is_none());
        let names: Vec<String> = report.monomials.iter().map(|m| m.to_string()).collect();
        for kept in [
            "v",
            "a1",
            "a2",
            "a1^*",
            "a2^*",
            "a1 . a1^*",
            "a1 . a2^*",
            "a2 . a1^*",
        ] {
            assert!(names.contains(&kept.to_string()), "missing {kept}");
        }
        assert!(!names.contains(&"a2 . a2^*".to_string()));
        // 1 vertex + 2·(arrows + ghosts) + 4 real words + 3 mixed + 4 ghost words.
        assert_eq!(names.len(), 16);
    }

    #[test]
    fn ghost_free_predicate() {
        let cfg = l12();
        assert!(real(&cfg, &["a1", "a2"]).is_ghost_free());
        assert!(!ghost(&cfg, &["a1"]).is_ghost_free());
        let x = ghost(&cfg, &["a1"]).mul(&real(&cfg, &["a1"])).unwrap();
        assert!(x.is_ghost_free());
    }

    #[test]
    fn cohn_mode_skips_ck2() {
        let cfg = ReductionConfig::cohn(&fixtures::loop_graph(2), FieldSpec::Rationals);
        let a2 = Path::from_edges(cfg.graph(), vec![cfg.graph().edge("a2").unwrap()]).unwrap();
        let m = LeavittMonomial::new(a2.clone(), a2).unwrap();
        let el = LeavittElement::monomial(&cfg, m).unwrap();
        assert_eq!(el.normal_form(), el);
        // CK1 still applies.
        let q = ghost(&cfg, &["a1"]).mul(&real(&cfg, &["a2"])).unwrap();
        assert!(q.is_zero());
        // The CK2 witness is nonzero in Cohn mode.
        let sum = real(&cfg, &["a1"])
            .mul(&ghost(&cfg, &["a1"]))
            .unwrap()
            .add(&real(&cfg, &["a2"]).mul(&ghost(&cfg, &["a2"])).unwrap())
            .unwrap()
            .sub(&LeavittElement::one(&cfg))
            .unwrap();
        assert!(!sum.normal_form().is_zero());
    }
}
