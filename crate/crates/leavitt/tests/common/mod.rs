//! Shared fixtures, random samplers and independent oracles for the
//! integration suites. The oracles here deliberately avoid the library's
//! rewrite and interreduction engines: they work by plain path bookkeeping
//! and exact row reduction.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use leavitt::element::{LeavittElement, LeavittMonomial, Mode, ReductionConfig};
use leavitt::graph::{Digraph, Path, VertexKind};
use leavitt::ideal::{QuotientTable, RightIdealPresentation, TableStatus};
use leavitt::linalg::{RowSpace, SparseVec};
use leavitt::quiver::QuiverElement;
use leavitt::scalar::{FieldSpec, Scalar};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_scalar(rng: &mut StdRng, field: FieldSpec) -> Scalar {
    field.from_integer(rng.gen_range(-4..=4))
}

pub fn random_nonzero_scalar(rng: &mut StdRng, field: FieldSpec) -> Scalar {
    loop {
        let k = random_scalar(rng, field);
        if !k.is_zero() {
            return k;
        }
    }
}

/// Random quiver element with up to `terms` terms of length at most `len`.
pub fn random_quiver(
    rng: &mut StdRng,
    graph: &Arc<Digraph>,
    field: FieldSpec,
    terms: usize,
    len: usize,
) -> QuiverElement {
    let pool = graph.paths_up_to(len);
    let mut el = QuiverElement::zero(graph, field);
    for _ in 0..rng.gen_range(1..=terms) {
        let p = pool[rng.gen_range(0..pool.len())].clone();
        let k = random_scalar(rng, field);
        let term = QuiverElement::from_terms(graph, field, [(p, k)]).unwrap();
        el = el.add(&term).unwrap();
    }
    el
}

pub fn random_nonzero_quiver(
    rng: &mut StdRng,
    graph: &Arc<Digraph>,
    field: FieldSpec,
    terms: usize,
    len: usize,
) -> QuiverElement {
    loop {
        let el = random_quiver(rng, graph, field, terms, len);
        if !el.is_zero() {
            return el;
        }
    }
}

/// Random element of L_K(E) with up to `terms` monomials, each path at most
/// `len` long.
pub fn random_leavitt(
    rng: &mut StdRng,
    cfg: &Arc<ReductionConfig>,
    terms: usize,
    len: usize,
) -> LeavittElement {
    let graph = cfg.graph();
    // Paths grouped by range for junction-compatible sampling.
    let mut by_range: Vec<Vec<Path>> = vec![Vec::new(); graph.vertex_count()];
    for p in graph.paths_up_to(len) {
        by_range[p.range().0 as usize].push(p);
    }
    let nonempty: Vec<usize> = (0..by_range.len())
        .filter(|&i| !by_range[i].is_empty())
        .collect();
    let mut el = LeavittElement::zero(cfg);
    for _ in 0..rng.gen_range(1..=terms) {
        let v = nonempty[rng.gen_range(0..nonempty.len())];
        let pool = &by_range[v];
        let real = pool[rng.gen_range(0..pool.len())].clone();
        let ghost = pool[rng.gen_range(0..pool.len())].clone();
        let m = LeavittMonomial::new(real, ghost).unwrap();
        let k = random_scalar(rng, cfg.field());
        let term = LeavittElement::from_terms(cfg, [(m, k)]).unwrap();
        el = el.add(&term).unwrap();
    }
    el
}

pub fn random_nonzero_leavitt(
    rng: &mut StdRng,
    cfg: &Arc<ReductionConfig>,
    terms: usize,
    len: usize,
) -> LeavittElement {
    loop {
        let el = random_leavitt(rng, cfg, terms, len);
        if !el.normal_form().is_zero() {
            return el;
        }
    }
}

/// Random finite-codimension right ideal of the free algebra on `graph`
/// (one vertex, n loops): sampled, then verified to close; non-closing
/// samples are topped up with all words of length 3.
pub fn random_finite_codim_ideal(
    rng: &mut StdRng,
    graph: &Arc<Digraph>,
    field: FieldSpec,
    bound: usize,
) -> QuotientTable {
    loop {
        let style = rng.gen_range(0..3u8);
        let mut gens: Vec<QuiverElement> = Vec::new();
        match style {
            0 => {
                // All words of a fixed length, plus noise.
                let k = rng.gen_range(1..=2usize);
                for p in graph.paths_of_length(k) {
                    gens.push(QuiverElement::from_path(graph, field, p));
                }
                for _ in 0..rng.gen_range(0..=2) {
                    gens.push(random_nonzero_quiver(rng, graph, field, 3, 2));
                }
            }
            1 => {
                // Codimension 1: a_i − k_i.
                for e in graph.edges() {
                    let a = QuiverElement::from_path(graph, field, Path::edge(graph, e));
                    let k = QuiverElement::one(graph, field)
                        .scale(&random_scalar(rng, field))
                        .unwrap();
                    gens.push(a.sub(&k).unwrap());
                }
            }
            _ => {
                for _ in 0..rng.gen_range(3..=6) {
                    gens.push(random_nonzero_quiver(rng, graph, field, 3, 2));
                }
            }
        }
        let pres = RightIdealPresentation::new(graph, field, gens.clone()).unwrap();
        let table = QuotientTable::build(pres, bound);
        if table.status() == TableStatus::FiniteCodim {
            return table;
        }
        // Force closure and keep the randomness in the lower-degree part.
        for p in graph.paths_of_length(3) {
            gens.push(QuiverElement::from_path(graph, field, p));
        }
        let pres = RightIdealPresentation::new(graph, field, gens).unwrap();
        let table = QuotientTable::build(pres, bound);
        if table.status() == TableStatus::FiniteCodim {
            return table;
        }
    }
}

/// Random codimension-1 two-sided ideal of the free algebra: ⟨a_i − k_i⟩.
pub fn random_codim1_ideal(
    rng: &mut StdRng,
    graph: &Arc<Digraph>,
    field: FieldSpec,
) -> QuotientTable {
    let gens: Vec<QuiverElement> = graph
        .edges()
        .map(|e| {
            let a = QuiverElement::from_path(graph, field, Path::edge(graph, e));
            let k = QuiverElement::one(graph, field)
                .scale(&random_scalar(rng, field))
                .unwrap();
            a.sub(&k).unwrap()
        })
        .collect();
    let pres = RightIdealPresentation::new(graph, field, gens).unwrap();
    QuotientTable::build(pres, 8)
}

/// Independent truncated-dimension oracle: the span of Cohn basis
/// monomials of total degree ≤ bound, modulo every CK2 multiple
/// α·(v − Σ_f f f*)·β* that fits entirely under the bound. Pure index
/// bookkeeping plus exact row reduction; no rewriting involved.
pub fn truncated_dimension_oracle(graph: &Arc<Digraph>, field: FieldSpec, bound: usize) -> usize {
    // Cohn monomials (α, β) with r(α) = r(β), |α|+|β| ≤ bound.
    let mut by_range: Vec<Vec<Path>> = vec![Vec::new(); graph.vertex_count()];
    for p in graph.paths_up_to(bound) {
        by_range[p.range().0 as usize].push(p);
    }
    let mut index: BTreeMap<(Path, Path), usize> = BTreeMap::new();
    for v in graph.vertices() {
        for alpha in &by_range[v.0 as usize] {
            for beta in &by_range[v.0 as usize] {
                if alpha.len() + beta.len() <= bound {
                    let next = index.len();
                    index.entry((alpha.clone(), beta.clone())).or_insert(next);
                }
            }
        }
    }
    let mut space = RowSpace::new(field);
    let one = field.one();
    for v in graph.vertices() {
        if graph.classify(v) != VertexKind::Regular || bound < 2 {
            continue;
        }
        for alpha in graph.paths_up_to(bound - 2) {
            if alpha.range() != v {
                continue;
            }
            for beta in graph.paths_up_to(bound - 2 - alpha.len()) {
                if beta.range() != v {
                    continue;
                }
                // α·v·β* − Σ_f (αf)(βf)*.
                let mut row = SparseVec::new();
                row.insert(index[&(alpha.clone(), beta.clone())], one.clone());
                for &f in graph.out_edges(v) {
                    let af = alpha.extend(f);
                    let bf = beta.extend(f);
                    let idx = index[&(af, bf)];
                    let entry = row.entry(idx).or_insert_with(|| field.zero());
                    *entry = entry.sub(&one);
                    if entry.is_zero() {
                        row.remove(&idx);
                    }
                }
                space.insert(row);
            }
        }
    }
    index.len() - space.rank()
}

/// Brute-force membership oracle: solvability of x = Σ g_i·p_i with each
/// p_i supported on paths of length ≤ slack. `Some(combination)` is a
/// conclusive yes; `None` is inconclusive.
pub fn membership_oracle(
    graph: &Arc<Digraph>,
    field: FieldSpec,
    gens: &[QuiverElement],
    x: &QuiverElement,
    slack: usize,
) -> Option<Vec<QuiverElement>> {
    let pool = graph.paths_up_to(slack);
    let mut path_index: BTreeMap<Path, usize> = BTreeMap::new();
    let vectorize = |el: &QuiverElement, path_index: &mut BTreeMap<Path, usize>| {
        let mut v = SparseVec::new();
        for (p, k) in el.terms() {
            let next = path_index.len();
            let idx = *path_index.entry(p.clone()).or_insert(next);
            v.insert(idx, k.clone());
        }
        v
    };
    let mut space = RowSpace::new(field);
    let mut columns: Vec<(usize, Path)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        for p in &pool {
            let prod = g.mul_path(p);
            if prod.is_zero() {
                continue;
            }
            space.insert(vectorize(&prod, &mut path_index));
            columns.push((i, p.clone()));
        }
    }
    let target = vectorize(x, &mut path_index);
    let combo = space.express(&target)?;
    let mut coeffs = vec![QuiverElement::zero(graph, field); gens.len()];
    for (col, k) in combo {
        let (i, p) = &columns[col];
        let term = QuiverElement::from_terms(graph, field, [(p.clone(), k)]).unwrap();
        coeffs[*i] = coeffs[*i].add(&term).unwrap();
    }
    Some(coeffs)
}

/// Builds a quotient table from expression strings.
pub fn table_from(
    graph: &Arc<Digraph>,
    field: FieldSpec,
    gens: &[&str],
    bound: usize,
) -> QuotientTable {
    let generators = gens
        .iter()
        .map(|s| leavitt::parse::parse_quiver(s, graph, field).unwrap())
        .collect();
    let pres = RightIdealPresentation::new(graph, field, generators).unwrap();
    QuotientTable::build(pres, bound)
}

pub fn leavitt_cfg(graph: &Arc<Digraph>, field: FieldSpec) -> Arc<ReductionConfig> {
    ReductionConfig::new(graph, field, Mode::Leavitt)
}
