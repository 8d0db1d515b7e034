//! Module-type arithmetic: (1, n) for a codimension-1 localization,
//! (1, lm(n−1)+1) at a matrix point, and the gcd rule for families.
//!
//! Run with: cargo run --example module_types

use leavitt::localize::{module_type, K0Report, ModuleTypeInput};

fn show(input: ModuleTypeInput) {
    let report = module_type(input.clone()).unwrap();
    let type_text = match report.module_type {
        Some((m, n)) => format!("({m}, {n})"),
        None => "IBN".to_string(),
    };
    let k0 = match report.k0 {
        K0Report::InfiniteCyclic => "Z".to_string(),
        K0Report::CyclicOfOrder(d) => format!("Z/{d}"),
    };
    println!("{input:?}\n  module type {type_text}, K0 ≅ {k0}");
}

fn main() {
    // The classical Leavitt algebras L(1, n).
    for n in [2u64, 3, 5] {
        show(ModuleTypeInput::Codim1 { n });
    }
    // Rank 1 is the Laurent algebra: IBN.
    show(ModuleTypeInput::Codim1 { n: 1 });
    // A maximal ideal with a 2×2 matrix quotient over K itself.
    show(ModuleTypeInput::MatrixPoint { n: 2, l: 1, m: 2 });
    // A field point of dimension 3 at rank 4.
    show(ModuleTypeInput::MatrixPoint { n: 4, l: 3, m: 1 });
    // Families combine through the gcd of the l·m values.
    show(ModuleTypeInput::Family {
        n: 2,
        pairs: vec![(2, 1), (3, 1)],
    });
    show(ModuleTypeInput::Family {
        n: 3,
        pairs: vec![(2, 2), (6, 1)],
    });
}
