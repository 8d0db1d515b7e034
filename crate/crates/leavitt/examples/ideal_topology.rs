//! The two openness tests and their agreement: containment of a power of
//! the arrows-and-sinks ideal I, and a Gabriel-membership witness
//! Σ g·b = 1 in the Leavitt localization.
//!
//! Run with: cargo run --example ideal_topology

use leavitt::element::ReductionConfig;
use leavitt::fixtures;
use leavitt::ideal::{QuotientTable, RightIdealPresentation};
use leavitt::localize::gabriel_membership;
use leavitt::parse::parse_quiver;
use leavitt::render;
use leavitt::scalar::FieldSpec;

fn main() {
    let graph = fixtures::loop_graph(2);
    let field = FieldSpec::Rationals;
    let cfg = ReductionConfig::leavitt(&graph, field);

    for gens in [
        vec!["a1", "a2"],
        vec!["a1 . a1", "a1 . a2", "a2"],
        vec!["a1 - 1", "a2"],
    ] {
        println!("R = ⟨{}⟩", gens.join(", "));
        let generators: Vec<_> = gens
            .iter()
            .map(|s| parse_quiver(s, &graph, field).unwrap())
            .collect();
        let pres = RightIdealPresentation::new(&graph, field, generators.clone()).unwrap();
        let table = QuotientTable::build(pres.clone(), 16);

        println!("  I-adic: {}", table.open_adic(6));
        match gabriel_membership(&cfg, &pres, 6).unwrap() {
            Some(cert) => {
                println!("  Gabriel witness Σ g·b = 1 with:");
                for (g, b) in &cert.pairs {
                    println!(
                        "    g = {:18} b = {}",
                        render::quiver_to_text(g),
                        render::element_to_text(b)
                    );
                }
            }
            None => println!("  Gabriel witness: unknown within bound 6"),
        }
        println!();
    }
}
