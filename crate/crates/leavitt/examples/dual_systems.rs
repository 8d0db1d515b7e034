//! Dual projections for a basis of the arrow ideal of K⟨a1,..,an⟩, and the
//! codimension-1 re-presentation r_i = a_i − k_i.
//!
//! Run with: cargo run --example dual_systems

use leavitt::element::ReductionConfig;
use leavitt::fixtures;
use leavitt::ideal::{QuotientTable, RightIdealPresentation};
use leavitt::localize::{codim1_presentation, dual_system};
use leavitt::parse::parse_quiver;
use leavitt::render;
use leavitt::scalar::FieldSpec;

fn main() {
    let graph = fixtures::loop_graph(2);
    let field = FieldSpec::Rationals;
    let cfg = ReductionConfig::leavitt(&graph, field);

    for basis in [
        vec!["a1", "a2"],
        vec!["a1 + a2", "a2"],
        vec!["2 · a1", "a1 + a2"],
    ] {
        println!("basis {{{}}} of the arrow ideal:", basis.join(", "));
        let elements: Vec<_> = basis
            .iter()
            .map(|s| parse_quiver(s, &graph, field).unwrap())
            .collect();
        let sys = dual_system(&cfg, elements).unwrap();
        for (s, d) in sys.basis.iter().zip(&sys.duals) {
            println!(
                "  s = {:10} s* = {}",
                render::quiver_to_text(s),
                render::element_to_text(d)
            );
        }
        println!(
            "  s*_j·s_i = δ_ji: {},  Σ s·s* = 1: {}",
            sys.delta_identities, sys.completeness_identity
        );
        println!();
    }

    // A codimension-1 ideal re-presented by constants.
    for gens in [vec!["a1 - 1", "a2"], vec!["a1 - 1", "a2 - 1"]] {
        let generators: Vec<_> = gens
            .iter()
            .map(|s| parse_quiver(s, &graph, field).unwrap())
            .collect();
        let pres = RightIdealPresentation::new(&graph, field, generators).unwrap();
        let table = QuotientTable::build(pres, 16);
        let rep = codim1_presentation(&table).unwrap();
        println!("R = ⟨{}⟩:", gens.join(", "));
        for (k, r) in rep.constants.iter().zip(&rep.generators) {
            println!("  k = {k}, r = {}", render::quiver_to_text(r));
        }
    }
}
