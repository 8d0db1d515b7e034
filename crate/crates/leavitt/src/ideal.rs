//! Right ideals of the quiver algebra: quotient tables, Schreier bases,
//! free generating sets, openness and two-sidedness.
//!
//! The engine behind everything here is Schreier-style interreduction of the
//! generators. Each generator is split by terminal vertex (so every row is
//! range-homogeneous), then leading paths are made pairwise head-free by
//! eliminating head-extensions, and finally tails are fully reduced. For a
//! right ideal this suffices: with head-free range-homogeneous rows, the
//! formal top of any combination Σ rowᵢ·xᵢ survives, so an element belongs
//! to the ideal exactly when it reduces to zero. Membership is therefore
//! exact; the degree bound only caps the coset-basis enumeration.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge, Path, Vertex};
use crate::linalg::SparseVec;
use crate::quiver::QuiverElement;
use crate::scalar::{FieldSpec, Scalar};

/// Default degree bound for coset-basis enumeration.
pub const DEFAULT_BOUND: usize = 32;

/// Size cap on the coset basis. Complements of infinite-codimension ideals
/// grow exponentially with the degree, so enumeration also stops (with
/// `ExceededBound`) once this many cosets exist. Membership is exact either
/// way.
pub const MAX_COSETS: usize = 4096;

/// A right ideal given by a finite list of nonzero generators.
#[derive(Debug, Clone)]
pub struct RightIdealPresentation {
    graph: Arc<Digraph>,
    field: FieldSpec,
    generators: Vec<QuiverElement>,
}

impl RightIdealPresentation {
    pub fn new(
        graph: &Arc<Digraph>,
        field: FieldSpec,
        generators: Vec<QuiverElement>,
    ) -> Result<RightIdealPresentation> {
        for g in &generators {
            if g.is_zero() {
                return Err(Error::input("ideal generators must be nonzero"));
            }
            if g.graph() != graph {
                return Err(Error::input("generator over a different graph"));
            }
            if g.field() != field {
                return Err(Error::input("generator over a different field"));
            }
        }
        Ok(RightIdealPresentation {
            graph: Arc::clone(graph),
            field,
            generators,
        })
    }

    pub fn graph(&self) -> &Arc<Digraph> {
        &self.graph
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn generators(&self) -> &[QuiverElement] {
        &self.generators
    }
}

/// One interreduced row: a monic, range-homogeneous element of the ideal
/// with head-free leading path, together with its expression over the
/// presentation's generators (row = Σ generatorⱼ · expr[j]).
#[derive(Debug, Clone)]
struct Row {
    element: QuiverElement,
    expr: Vec<QuiverElement>,
}

impl Row {
    fn leading(&self) -> &Path {
        self.element.leading_path().expect("rows are nonzero")
    }

    fn sub_scaled(&mut self, other: &Row, w: &Path, k: &Scalar) {
        let delta = other.element.mul_path(w).scale(k).expect("same field");
        self.element = self.element.sub(&delta).expect("same context");
        for (mine, theirs) in self.expr.iter_mut().zip(&other.expr) {
            let d = theirs.mul_path(w).scale(k).expect("same field");
            *mine = mine.sub(&d).expect("same context");
        }
    }

    fn make_monic(&mut self) {
        let lead = self.element.leading_coefficient().expect("nonzero").clone();
        if lead.is_one() {
            return;
        }
        let inv = lead.inv();
        self.element = self.element.scale(&inv).expect("same field");
        for e in &mut self.expr {
            *e = e.scale(&inv).expect("same field");
        }
    }
}

#[derive(Debug, Clone)]
struct Interreduced {
    rows: Vec<Row>,
    /// Generator pieces that reduced to zero (dependencies).
    dropped: usize,
}

fn interreduce(presentation: &RightIdealPresentation) -> Interreduced {
    let graph = &presentation.graph;
    let field = presentation.field;
    let n = presentation.generators.len();
    let mut queue: VecDeque<Row> = VecDeque::new();
    for (j, g) in presentation.generators.iter().enumerate() {
        // Range-split: g·v is range-homogeneous and the pieces together
        // generate the same right ideal.
        for v in graph.vertices() {
            let vertex_path = Path::vertex(graph, v);
            let piece = g.mul_path(&vertex_path);
            if piece.is_zero() {
                continue;
            }
            let mut expr = vec![QuiverElement::zero(graph, field); n];
            expr[j] = QuiverElement::from_path(graph, field, vertex_path.clone());
            queue.push_back(Row {
                element: piece,
                expr,
            });
        }
    }

    let mut rows: Vec<Row> = Vec::new();
    let mut dropped = 0usize;
    while let Some(mut row) = queue.pop_front() {
        // Reduce the leading path until it is head-free against the rows.
        loop {
            if row.element.is_zero() {
                break;
            }
            let lt = row.leading().clone();
            let hit = rows.iter().position(|r| r.leading().is_head_of(&lt));
            let Some(i) = hit else { break };
            let w = lt.tail(rows[i].leading().len()).expect("head length");
            let k = row.element.leading_coefficient().expect("nonzero").clone();
            let other = rows[i].clone();
            row.sub_scaled(&other, &w, &k);
        }
        if row.element.is_zero() {
            dropped += 1;
            continue;
        }
        row.make_monic();
        // Rows whose leading path extends the new one go back to the queue.
        let lt = row.leading().clone();
        let mut keep = Vec::with_capacity(rows.len());
        for r in rows.drain(..) {
            if lt.is_head_of(r.leading()) {
                queue.push_back(r);
            } else {
                keep.push(r);
            }
        }
        rows = keep;
        rows.push(row);
    }

    // Tail reduction to a fixpoint; leading paths never change here.
    loop {
        let mut changed = false;
        for i in 0..rows.len() {
            loop {
                let target = rows[i].element.terms().rev_find_reducible(&rows, i);
                let Some((p, k, j)) = target else { break };
                let w = p.tail(rows[j].leading().len()).expect("head length");
                let other = rows[j].clone();
                rows[i].sub_scaled(&other, &w, &k);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    rows.sort_by(|a, b| a.leading().cmp(b.leading()));
    Interreduced { rows, dropped }
}

/// Helper trait so tail reduction can scan a term iterator from the top.
trait RevFindReducible {
    fn rev_find_reducible(self, rows: &[Row], skip: usize) -> Option<(Path, Scalar, usize)>;
}

impl<'a, I> RevFindReducible for I
where
    I: DoubleEndedIterator<Item = (&'a Path, &'a Scalar)>,
{
    fn rev_find_reducible(self, rows: &[Row], skip: usize) -> Option<(Path, Scalar, usize)> {
        for (p, k) in self.rev() {
            for (j, r) in rows.iter().enumerate() {
                if j == skip {
                    continue;
                }
                if r.leading().is_head_of(p) {
                    return Some((p.clone(), k.clone(), j));
                }
            }
        }
        None
    }
}

/// Closure status of a quotient table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableStatus {
    /// The coset basis saturated below the bound: KE/R is finite dimensional.
    FiniteCodim,
    /// Representatives were still appearing at the degree bound.
    ExceededBound,
}

/// Codimension report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Codimension {
    Finite(usize),
    AtLeast(usize),
}

impl fmt::Display for Codimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Codimension::Finite(n) => write!(f, "{n}"),
            Codimension::AtLeast(n) => write!(f, ">= {n}"),
        }
    }
}

/// The quotient KE/R: an ordered coset basis of irreducible path
/// representatives, per-edge right-action matrices, and an exact membership
/// oracle backed by the interreduced generators.
#[derive(Debug)]
pub struct QuotientTable {
    presentation: RightIdealPresentation,
    rows: Vec<Row>,
    dropped: usize,
    coset_basis: Vec<Path>,
    coset_index: BTreeMap<Path, usize>,
    /// edge_actions[e][i]: coordinates of [basis_i · e], `None` when the
    /// image leaves the enumerated basis (possible only past the bound).
    edge_actions: Vec<Vec<Option<SparseVec>>>,
    status: TableStatus,
    bound: usize,
}

impl QuotientTable {
    /// Builds KE/R: interreduces the generators (imposing the relations by
    /// exact elimination), seeds with the vertex cosets and closes under
    /// edge actions, level by level, up to the degree bound.
    pub fn build(presentation: RightIdealPresentation, bound: usize) -> QuotientTable {
        let Interreduced { rows, dropped } = interreduce(&presentation);
        let graph = Arc::clone(&presentation.graph);

        let reducible = |p: &Path| rows.iter().any(|r| r.leading() == p);
        let mut coset_basis: Vec<Path> = Vec::new();
        let mut level: Vec<Path> = graph
            .vertices()
            .map(|v| Path::vertex(&graph, v))
            .filter(|p| !reducible(p))
            .collect();
        let mut status = TableStatus::FiniteCodim;
        let mut depth = 0usize;
        while !level.is_empty() {
            coset_basis.extend(level.iter().cloned());
            if depth == bound || coset_basis.len() > MAX_COSETS {
                status = TableStatus::ExceededBound;
                break;
            }
            let mut next: Vec<Path> = Vec::new();
            for p in &level {
                for &e in graph.out_edges(p.range()) {
                    let q = p.extend(e);
                    // p is irreducible, so only the full path can match a
                    // leading term.
                    if !reducible(&q) {
                        next.push(q);
                    }
                }
            }
            next.sort();
            level = next;
            depth += 1;
        }

        let coset_index: BTreeMap<Path, usize> = coset_basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();

        let mut table = QuotientTable {
            presentation,
            rows,
            dropped,
            coset_basis,
            coset_index,
            edge_actions: Vec::new(),
            status,
            bound,
        };
        let actions: Vec<Vec<Option<SparseVec>>> = graph
            .edges()
            .map(|e| {
                table
                    .coset_basis
                    .iter()
                    .map(|p| {
                        if p.range() != graph.source(e) {
                            return Some(SparseVec::new());
                        }
                        table.coordinates(&QuiverElement::from_path(
                            &graph,
                            table.presentation.field,
                            p.extend(e),
                        ))
                    })
                    .collect()
            })
            .collect();
        table.edge_actions = actions;
        table
    }

    pub fn presentation(&self) -> &RightIdealPresentation {
        &self.presentation
    }

    pub fn graph(&self) -> &Arc<Digraph> {
        &self.presentation.graph
    }

    pub fn field(&self) -> FieldSpec {
        self.presentation.field
    }

    pub fn status(&self) -> TableStatus {
        self.status
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn coset_basis(&self) -> &[Path] {
        &self.coset_basis
    }

    pub fn edge_action(&self, e: Edge, basis_index: usize) -> Option<&SparseVec> {
        self.edge_actions[e.0 as usize][basis_index].as_ref()
    }

    pub fn codimension(&self) -> Codimension {
        match self.status {
            TableStatus::FiniteCodim => Codimension::Finite(self.coset_basis.len()),
            TableStatus::ExceededBound => Codimension::AtLeast(self.coset_basis.len()),
        }
    }

    /// The canonical projection π onto the complement spanned by the coset
    /// basis: π(x) is irreducible and x − π(x) ∈ R. Exact regardless of the
    /// table status.
    pub fn project(&self, x: &QuiverElement) -> QuiverElement {
        let mut rem = x.clone();
        loop {
            let hit = rem.terms().rev_find_reducible(&self.rows, usize::MAX);
            let Some((p, k, j)) = hit else { break };
            let w = p.tail(self.rows[j].leading().len()).expect("head length");
            let delta = self.rows[j]
                .element
                .mul_path(&w)
                .scale(&k)
                .expect("same field");
            rem = rem.sub(&delta).expect("same context");
        }
        rem
    }

    /// Exact membership: x ∈ R iff it reduces to zero.
    pub fn contains(&self, x: &QuiverElement) -> bool {
        self.project(x).is_zero()
    }

    /// π(x) in coset-basis coordinates; `None` if some representative falls
    /// outside the enumerated basis (possible only when the bound was hit).
    pub fn coordinates(&self, x: &QuiverElement) -> Option<SparseVec> {
        let nf = self.project(x);
        let mut v = SparseVec::new();
        for (p, k) in nf.terms() {
            let idx = self.coset_index.get(p)?;
            v.insert(*idx, k.clone());
        }
        Some(v)
    }

    /// The leveled strong Schreier basis; refuses non-closed tables.
    pub fn schreier_basis(&self) -> Result<SchreierBasis> {
        if self.status == TableStatus::ExceededBound {
            return Err(Error::undecided(format!(
                "coset enumeration still open at degree bound {}; \
                 use the capped basis to proceed with a partial prefix",
                self.bound
            )));
        }
        Ok(self.schreier_basis_capped())
    }

    /// The Schreier basis prefix enumerated so far; `complete` records
    /// whether the construction terminated.
    pub fn schreier_basis_capped(&self) -> SchreierBasis {
        let mut levels: Vec<Vec<Path>> = Vec::new();
        for p in &self.coset_basis {
            while levels.len() <= p.len() {
                levels.push(Vec::new());
            }
            levels[p.len()].push(p.clone());
        }
        SchreierBasis {
            levels,
            complete: self.status == TableStatus::FiniteCodim,
        }
    }

    /// The canonical free generating set: u_{μ,a} = μa − π(μa) for μ in the
    /// Schreier basis, plus every vertex lying in R.
    pub fn free_generators(&self) -> FreeGeneratorSet {
        let mut gens = Vec::new();
        for (idx, row) in self.rows.iter().enumerate() {
            let lt = row.leading();
            let label = if lt.is_vertex() {
                GeneratorLabel::Vertex(lt.source())
            } else {
                let stem = lt.head(lt.len() - 1).expect("head");
                let edge = lt.last_edge().expect("edge");
                GeneratorLabel::Extension { stem, edge }
            };
            gens.push(FreeGenerator {
                element: row.element.clone(),
                expr: row.expr.clone(),
                range: lt.range(),
                label,
                index: idx,
            });
        }
        FreeGeneratorSet { gens }
    }

    /// Free rank of R as a right module.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of generator pieces that reduced to zero during
    /// interreduction (dependencies among the given generators).
    pub fn dependencies(&self) -> usize {
        self.dropped
    }

    /// rank = codim·(n−1) + 1 on the one-vertex n-loop graph.
    pub fn schreier_lewin_check(&self) -> Result<bool> {
        if self.graph().vertex_count() != 1 {
            return Err(Error::input(
                "the Schreier-Lewin rank formula applies to one-vertex graphs",
            ));
        }
        let Codimension::Finite(codim) = self.codimension() else {
            return Err(Error::undecided("codimension not decided within the bound"));
        };
        let n = self.graph().edge_count();
        Ok(self.rank() == codim * (n.saturating_sub(1)) + 1)
    }

    /// Expresses a member of R over the free generators by the telescoping
    /// expansion of each path, regrouped through π.
    pub fn express_in_free_basis(
        &self,
        x: &QuiverElement,
        gens: &FreeGeneratorSet,
    ) -> Result<BTreeMap<usize, QuiverElement>> {
        if !self.contains(x) {
            return Err(Error::input("element does not belong to the ideal"));
        }
        let graph = self.graph();
        let field = self.field();
        // Look up u_{μ,a} by (μ, a); vertex generators by vertex.
        let mut by_extension: BTreeMap<(Path, Edge), usize> = BTreeMap::new();
        let mut by_vertex: BTreeMap<Vertex, usize> = BTreeMap::new();
        for (i, g) in gens.gens.iter().enumerate() {
            match &g.label {
                GeneratorLabel::Extension { stem, edge } => {
                    by_extension.insert((stem.clone(), *edge), i);
                }
                GeneratorLabel::Vertex(v) => {
                    by_vertex.insert(*v, i);
                }
            }
        }
        let mut coeffs: BTreeMap<usize, QuiverElement> = BTreeMap::new();
        let mut add_coeff = |i: usize, delta: &QuiverElement| {
            let entry = coeffs
                .entry(i)
                .or_insert_with(|| QuiverElement::zero(graph, field));
            *entry = entry.add(delta).expect("same context");
        };
        for (beta, k) in x.terms() {
            // β − π(β) telescopes along the edges of β; a vertex in R
            // contributes its whole component directly.
            let source = beta.source();
            if let Some(&i) = by_vertex.get(&source) {
                // π(v) = 0 for a vertex in R: the whole component passes
                // through the vertex generator.
                let delta = QuiverElement::from_path(graph, field, beta.clone())
                    .scale(k)
                    .expect("same field");
                add_coeff(i, &delta);
            }
            for j in 0..beta.len() {
                let head_j = beta.head(j).expect("head");
                let edge = beta.edges()[j];
                let tail = beta.tail(j + 1).expect("tail");
                // π(h_j)·c − π(h_j·c) = Σ_m k_m·u_{γ_m, c} over γ_m in the
                // expansion of π(h_j); terms with γ_m·c irreducible or
                // non-composable vanish.
                let pi_head = self.project(&QuiverElement::from_path(graph, field, head_j));
                for (gamma, km) in pi_head.terms() {
                    if gamma.range() != graph.source(edge) {
                        continue;
                    }
                    if let Some(&i) = by_extension.get(&(gamma.clone(), edge)) {
                        let delta = QuiverElement::from_path(graph, field, tail.clone())
                            .scale(&k.mul(km))
                            .expect("same field");
                        add_coeff(i, &delta);
                    }
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(coeffs)
    }

    /// Recomposes Σ u_i · c_i; inverse of `express_in_free_basis`.
    pub fn recompose(
        &self,
        gens: &FreeGeneratorSet,
        coeffs: &BTreeMap<usize, QuiverElement>,
    ) -> QuiverElement {
        let mut acc = QuiverElement::zero(self.graph(), self.field());
        for (i, c) in coeffs {
            let term = gens.gens[*i].element.mul(c).expect("same context");
            acc = acc.add(&term).expect("same context");
        }
        acc
    }

    /// Least l ≤ l_max with I^l ⊆ R, where I is the two-sided ideal
    /// generated by all arrows and sinks: the generators of I^l are the
    /// paths of length l together with the shorter paths ending in a sink.
    pub fn open_adic(&self, l_max: usize) -> OpenAdicReport {
        let graph = self.graph();
        for l in 0..=l_max {
            let mut all_in = true;
            'gens: for d in 0..=l {
                for p in graph.paths_of_length(d) {
                    let relevant = d == l || graph.is_sink(p.range());
                    if !relevant {
                        continue;
                    }
                    let el = QuiverElement::from_path(graph, self.field(), p);
                    if !self.contains(&el) {
                        all_in = false;
                        break 'gens;
                    }
                }
            }
            if all_in {
                return OpenAdicReport::OpenAt(l);
            }
        }
        OpenAdicReport::NotWithin(l_max)
    }

    /// Left closure of the free generators under vertices and edges; since
    /// R = Σ u·KE this decides two-sidedness.
    pub fn is_two_sided(&self) -> bool {
        let graph = self.graph();
        for row in &self.rows {
            for v in graph.vertices() {
                let left = row.element.path_mul(&Path::vertex(graph, v));
                if !self.contains(&left) {
                    return false;
                }
            }
            for e in graph.edges() {
                let left = row.element.path_mul(&Path::edge(graph, e));
                if !self.contains(&left) {
                    return false;
                }
            }
        }
        true
    }
}

/// Result of the I-adic openness scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpenAdicReport {
    OpenAt(usize),
    NotWithin(usize),
}

impl fmt::Display for OpenAdicReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpenAdicReport::OpenAt(l) => write!(f, "open at l = {l}"),
            OpenAdicReport::NotWithin(l) => write!(f, "not open within l_max = {l}"),
        }
    }
}

/// Leveled head-closed basis of a complement of R.
#[derive(Debug, Clone)]
pub struct SchreierBasis {
    levels: Vec<Vec<Path>>,
    complete: bool,
}

impl SchreierBasis {
    pub fn levels(&self) -> &[Vec<Path>] {
        &self.levels
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.levels.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.iter().all(|l| l.is_empty())
    }

    /// False when the enumeration was capped by the degree bound.
    pub fn is_complete(&self) -> bool {
        self.complete
    }
}

/// Label of a free generator: μa − π(μa), or a vertex lying in R.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorLabel {
    Extension { stem: Path, edge: Edge },
    Vertex(Vertex),
}

#[derive(Debug, Clone)]
pub struct FreeGenerator {
    /// The generator u itself (monic, tails fully reduced).
    pub element: QuiverElement,
    /// u = Σ presentation_generatorⱼ · expr[j]: a generation witness.
    pub expr: Vec<QuiverElement>,
    /// u·w = 0 for every vertex w other than this one, so u·KE ≅ range·KE.
    pub range: Vertex,
    pub label: GeneratorLabel,
    pub index: usize,
}

#[derive(Debug, Clone)]
pub struct FreeGeneratorSet {
    gens: Vec<FreeGenerator>,
}

impl FreeGeneratorSet {
    pub fn iter(&self) -> impl Iterator<Item = &FreeGenerator> {
        self.gens.iter()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, i: usize) -> &FreeGenerator {
        &self.gens[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::parse::parse_quiver;

    fn free2() -> (Arc<Digraph>, FieldSpec) {
        (fixtures::loop_graph(2), FieldSpec::Rationals)
    }

    fn ideal(graph: &Arc<Digraph>, field: FieldSpec, gens: &[&str]) -> QuotientTable {
        let generators = gens
            .iter()
            .map(|s| parse_quiver(s, graph, field).unwrap())
            .collect();
        let pres = RightIdealPresentation::new(graph, field, generators).unwrap();
        QuotientTable::build(pres, DEFAULT_BOUND)
    }

    #[test]
    fn quotient_tables_match_hand_reductions() {
        let (g, f) = free2();

        let arrows = ideal(&g, f, &["a1", "a2"]);
        assert_eq!(arrows.codimension(), Codimension::Finite(1));
        assert_eq!(arrows.coset_basis().len(), 1);
        assert!(arrows.coset_basis()[0].is_vertex());

        let shifted = ideal(&g, f, &["a1 - 1", "a2"]);
        assert_eq!(shifted.codimension(), Codimension::Finite(1));

        let two = ideal(&g, f, &["a1 . a1", "a1 . a2", "a2"]);
        assert_eq!(two.codimension(), Codimension::Finite(2));
        let names: Vec<String> = two.coset_basis().iter().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["v", "a1"]);
    }

    #[test]
    fn membership_is_exact_past_the_bound() {
        let (g, f) = free2();
        let t = ideal(&g, f, &["a1"]);
        assert_eq!(t.status(), TableStatus::ExceededBound);
        assert!(t.contains(&parse_quiver("a1 . a2 - 2 · a1 . a1", &g, f).unwrap()));
        assert!(!t.contains(&parse_quiver("a2 . a1", &g, f).unwrap()));
    }

    #[test]
    fn schreier_basis_levels() {
        let (g, f) = free2();

        let arrows = ideal(&g, f, &["a1", "a2"]);
        let b = arrows.schreier_basis().unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.levels()[0][0].to_string(), "v");

        let two = ideal(&g, f, &["a1 . a1", "a1 . a2", "a2"]);
        let b = two.schreier_basis().unwrap();
        let names: Vec<String> = b.paths().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["v", "a1"]);

        // The improper ideal has the empty basis.
        let improper = ideal(&g, f, &["1"]);
        assert_eq!(improper.codimension(), Codimension::Finite(0));
        assert!(improper.schreier_basis().unwrap().is_empty());

        // Infinite codimension is refused without the cap.
        let capped = ideal(&g, f, &["a1"]);
        assert!(capped.schreier_basis().is_err());
        assert!(!capped.schreier_basis_capped().is_complete());
    }

    #[test]
    fn projection_laws() {
        let (g, f) = free2();
        let t = ideal(&g, f, &["a1 - 1", "a2"]);
        let one = parse_quiver("1", &g, f).unwrap();
        assert_eq!(t.project(&parse_quiver("a1", &g, f).unwrap()), one);
        for b in t.coset_basis() {
            let el = QuiverElement::from_path(&g, f, b.clone());
            assert_eq!(t.project(&el), el);
        }
        for gen in t.presentation().generators() {
            assert!(t.project(gen).is_zero());
        }
        // π(xy) = π(π(x)·y) on a sample.
        let x = parse_quiver("a1 . a2 + 3 · a2", &g, f).unwrap();
        let y = parse_quiver("a2 . a1 - a1", &g, f).unwrap();
        let lhs = t.project(&x.mul(&y).unwrap());
        let rhs = t.project(&t.project(&x).mul(&y).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn free_generators_match_examples() {
        let (g, f) = free2();

        let arrows = ideal(&g, f, &["a1", "a2"]);
        let fg = arrows.free_generators();
        let names: Vec<String> = fg.iter().map(|u| u.element.to_string()).collect();
        assert_eq!(names, vec!["a1", "a2"]);
        assert_eq!(arrows.rank(), 2);

        let shifted = ideal(&g, f, &["a1 - 1", "a2"]);
        let fg = shifted.free_generators();
        let names: Vec<String> = fg.iter().map(|u| u.element.to_string()).collect();
        assert_eq!(names, vec!["a1 - v", "a2"]);
        assert_eq!(shifted.rank(), 2);

        let two = ideal(&g, f, &["a1 . a1", "a1 . a2", "a2"]);
        let fg = two.free_generators();
        let names: Vec<String> = fg.iter().map(|u| u.element.to_string()).collect();
        assert_eq!(names, vec!["a2", "a1 . a1", "a1 . a2"]);
        assert_eq!(two.rank(), 3);
        assert!(two.schreier_lewin_check().unwrap());
    }

    #[test]
    fn express_in_free_basis_examples() {
        let (g, f) = free2();

        let arrows = ideal(&g, f, &["a1", "a2"]);
        let fg = arrows.free_generators();
        let x = parse_quiver("a1", &g, f).unwrap();
        let coeffs = arrows.express_in_free_basis(&x, &fg).unwrap();
        assert_eq!(coeffs.len(), 1);
        assert_eq!(arrows.recompose(&fg, &coeffs), x);

        let y = parse_quiver("a1 . a2 + a2", &g, f).unwrap();
        let coeffs = arrows.express_in_free_basis(&y, &fg).unwrap();
        // u_{v,a1} -> a2, u_{v,a2} -> 1.
        assert_eq!(coeffs[&0], parse_quiver("a2", &g, f).unwrap());
        assert_eq!(coeffs[&1], parse_quiver("1", &g, f).unwrap());
        assert_eq!(arrows.recompose(&fg, &coeffs), y);

        let shifted = ideal(&g, f, &["a1 - 1", "a2"]);
        let fg = shifted.free_generators();
        let z = parse_quiver("(a1 - 1) . a1 + a2", &g, f).unwrap();
        let coeffs = shifted.express_in_free_basis(&z, &fg).unwrap();
        assert_eq!(coeffs[&0], parse_quiver("a1", &g, f).unwrap());
        assert_eq!(coeffs[&1], parse_quiver("1", &g, f).unwrap());
        assert_eq!(shifted.recompose(&fg, &coeffs), z);

        // Non-members are rejected.
        assert!(arrows
            .express_in_free_basis(&parse_quiver("1", &g, f).unwrap(), &fg)
            .is_err());
    }

    #[test]
    fn rank_law_examples() {
        let (g, f) = free2();
        let c1 = ideal(&g, f, &["a1", "a2"]);
        assert_eq!(c1.rank(), 2);
        assert!(c1.schreier_lewin_check().unwrap());

        let g3 = fixtures::loop_graph(3);
        let c13 = ideal(&g3, f, &["a1", "a2", "a3"]);
        assert_eq!(c13.rank(), 3);
        assert!(c13.schreier_lewin_check().unwrap());
    }

    #[test]
    fn open_adic_examples() {
        let (g, f) = free2();

        let arrows = ideal(&g, f, &["a1", "a2"]);
        assert_eq!(arrows.open_adic(8), OpenAdicReport::OpenAt(1));

        let two = ideal(&g, f, &["a1 . a1", "a1 . a2", "a2"]);
        assert_eq!(two.open_adic(8), OpenAdicReport::OpenAt(2));

        let shifted = ideal(&g, f, &["a1 - 1", "a2"]);
        assert_eq!(shifted.open_adic(8), OpenAdicReport::NotWithin(8));
    }

    #[test]
    fn two_sidedness_examples() {
        let (g, f) = free2();
        assert!(ideal(&g, f, &["a1 - 1", "a2"]).is_two_sided());
        assert!(ideal(&g, f, &["a1", "a2"]).is_two_sided());
        assert!(!ideal(&g, f, &["a1"]).is_two_sided());
    }

    #[test]
    fn table_invariants() {
        let (g, f) = free2();
        let t = ideal(&g, f, &["a1 . a1", "a1 . a2", "a2"]);
        assert_eq!(t.status(), TableStatus::FiniteCodim);
        // Action consistency: acting by e on basis vector i gives the
        // stored image.
        for e in g.edges() {
            for (i, p) in t.coset_basis().iter().enumerate() {
                let stored = t.edge_action(e, i).unwrap().clone();
                let actual = if p.range() == g.source(e) {
                    t.coordinates(&QuiverElement::from_path(&g, f, p.extend(e)))
                        .unwrap()
                } else {
                    SparseVec::new()
                };
                assert_eq!(stored, actual);
            }
        }
    }

    #[test]
    fn vertex_in_ideal_becomes_generator() {
        // On the fork graph, R = w1·KE contains a vertex; the free
        // generating set must include it.
        let g = fixtures::fork();
        let f = FieldSpec::Rationals;
        let w1 = QuiverElement::vertex(&g, f, g.vertex("w1").unwrap());
        let pres = RightIdealPresentation::new(&g, f, vec![w1.clone()]).unwrap();
        let t = QuotientTable::build(pres, DEFAULT_BOUND);
        let fg = t.free_generators();
        assert!(fg
            .iter()
            .any(|u| matches!(u.label, GeneratorLabel::Vertex(_))));
        let x = w1;
        let coeffs = t.express_in_free_basis(&x, &fg).unwrap();
        assert_eq!(t.recompose(&fg, &coeffs), x);
        // KE has basis {v, w1, w2, a, b}; R = K·w1.
        assert_eq!(t.codimension(), Codimension::Finite(4));
    }
}
