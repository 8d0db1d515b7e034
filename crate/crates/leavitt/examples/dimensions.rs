//! Basis enumeration and dimension reports: acyclic graphs give matrix
//! rings of known finite dimension.
//!
//! Run with: cargo run --example dimensions

use leavitt::element::{basis_enumerate, ReductionConfig};
use leavitt::fixtures;
use leavitt::render;
use leavitt::scalar::FieldSpec;

fn main() {
    // The linear A_n graph: dim = n².
    for n in [2usize, 3, 4] {
        let cfg = ReductionConfig::leavitt(&fixtures::dynkin(n), FieldSpec::Rationals);
        let report = basis_enumerate(&cfg, 2 * n);
        println!(
            "A_{n}: dimension {:?} (n² = {})",
            report.dimension.unwrap(),
            n * n
        );
    }

    // Two sinks fed by one source: K_2 ⊕ K_2, dimension 8.
    let fork = ReductionConfig::leavitt(&fixtures::fork(), FieldSpec::Rationals);
    let report = basis_enumerate(&fork, 4);
    println!("fork: dimension {:?}, basis:", report.dimension.unwrap());
    for m in &report.monomials {
        println!("  {}", render::monomial_to_text(m));
    }

    // The Toeplitz graph has a loop, so the algebra is infinite
    // dimensional; enumeration is still exact per degree.
    let toeplitz = ReductionConfig::leavitt(&fixtures::toeplitz(), FieldSpec::Rationals);
    for bound in 0..=4 {
        let report = basis_enumerate(&toeplitz, bound);
        println!(
            "toeplitz, degree ≤ {bound}: {} basis monomials (acyclic: {})",
            report.monomials.len(),
            report.acyclic
        );
    }
}
