//! Exact sparse Gaussian elimination over the ground field.
//!
//! Vectors are sparse maps column -> nonzero scalar. The solver keeps an
//! echelon basis whose pivot is the smallest column of each row (ties in
//! elimination therefore resolve toward the earliest index), and tracks how
//! every stored row decomposes over the inserted originals so membership
//! queries return explicit combinations.

use std::collections::BTreeMap;

use crate::scalar::{FieldSpec, Scalar};

pub type SparseVec = BTreeMap<usize, Scalar>;

pub fn add_scaled(dst: &mut SparseVec, src: &SparseVec, k: &Scalar) {
    if k.is_zero() {
        return;
    }
    for (col, val) in src {
        let delta = val.mul(k);
        match dst.entry(*col) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(delta);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&delta);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }
}

pub fn scale(v: &mut SparseVec, k: &Scalar) {
    for val in v.values_mut() {
        *val = val.mul(k);
    }
}

/// Incremental echelon row space with expression tracking.
#[derive(Debug, Clone)]
pub struct RowSpace {
    field: FieldSpec,
    /// Echelon rows, each with its expression over inserted originals.
    rows: Vec<(SparseVec, SparseVec)>,
    /// Pivot column -> row index.
    pivots: BTreeMap<usize, usize>,
    inserted: usize,
}

impl RowSpace {
    pub fn new(field: FieldSpec) -> RowSpace {
        RowSpace {
            field,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Reduces `v` against the space; returns the remainder together with
    /// the combination of inserted originals that was subtracted.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut rem = v.clone();
        let mut combo: SparseVec = BTreeMap::new();
        loop {
            // Smallest pivot column still present; eliminating it can only
            // introduce larger columns, so this terminates.
            let hit = rem
                .iter()
                .find_map(|(col, coeff)| self.pivots.get(col).map(|&row| (coeff.clone(), row)));
            let Some((coeff, row_idx)) = hit else { break };
            let (row, expr) = &self.rows[row_idx];
            add_scaled(&mut rem, row, &coeff.neg());
            add_scaled(&mut combo, expr, &coeff);
        }
        (rem, combo)
    }

    /// Inserts a vector labelled with the next original index. Returns
    /// `true` when it enlarged the space.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let index = self.inserted;
        self.inserted += 1;
        let (mut rem, combo) = self.reduce(&v);
        if rem.is_empty() {
            return false;
        }
        let (&pivot, lead) = rem.iter().next().expect("nonzero remainder");
        let inv = lead.inv();
        scale(&mut rem, &inv);
        let mut expr: SparseVec = BTreeMap::new();
        expr.insert(index, self.field.one());
        add_scaled(&mut expr, &combo, &self.field.one().neg());
        scale(&mut expr, &inv);
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push((rem, expr));
        true
    }

    /// Expresses `target` over the inserted originals, if it lies in the
    /// span: returns coefficients c with target = Σ c_i · original_i.
    pub fn express(&self, target: &SparseVec) -> Option<SparseVec> {
        let (rem, combo) = self.reduce(target);
        rem.is_empty().then_some(combo)
    }

    pub fn contains(&self, target: &SparseVec) -> bool {
        self.reduce(target).0.is_empty()
    }
}
