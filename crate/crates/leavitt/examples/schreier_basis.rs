//! Right ideals of the free algebra K⟨a1,a2⟩: quotient tables, strong
//! Schreier bases, free generators u = μa − π(μa), and the Schreier-Lewin
//! rank law rank = codim·(n−1)+1.
//!
//! Run with: cargo run --example schreier_basis

use leavitt::fixtures;
use leavitt::ideal::{QuotientTable, RightIdealPresentation};
use leavitt::parse::parse_quiver;
use leavitt::render;
use leavitt::scalar::FieldSpec;

fn main() {
    let graph = fixtures::loop_graph(2);
    let field = FieldSpec::Rationals;

    for gens in [
        vec!["a1", "a2"],
        vec!["a1 - 1", "a2"],
        vec!["a1 . a1", "a1 . a2", "a2"],
    ] {
        println!("R = ⟨{}⟩", gens.join(", "));
        let generators = gens
            .iter()
            .map(|s| parse_quiver(s, &graph, field).unwrap())
            .collect();
        let pres = RightIdealPresentation::new(&graph, field, generators).unwrap();
        let table = QuotientTable::build(pres, 16);

        println!("  codimension: {}", table.codimension());
        let basis = table.schreier_basis().unwrap();
        for (n, level) in basis.levels().iter().enumerate() {
            if !level.is_empty() {
                let paths: Vec<String> = level.iter().map(|p| p.to_string()).collect();
                println!("  Schreier level {n}: {}", paths.join(", "));
            }
        }

        let free = table.free_generators();
        println!("  free generators (rank {}):", free.len());
        for u in free.iter() {
            println!("    {}", render::quiver_to_text(&u.element));
        }
        println!(
            "  Schreier-Lewin rank = codim·(n−1)+1: {}",
            table.schreier_lewin_check().unwrap()
        );

        // Express a member over the free generators and recompose.
        let member = parse_quiver("a1 . a2 + a2", &graph, field).unwrap();
        if table.contains(&member) {
            let coeffs = table.express_in_free_basis(&member, &free).unwrap();
            println!("  a1.a2 + a2 expressed over the u's:");
            for (i, c) in &coeffs {
                println!(
                    "    ({}) · ({})",
                    render::quiver_to_text(&free.get(*i).element),
                    render::quiver_to_text(c)
                );
            }
            assert_eq!(table.recompose(&free, &coeffs), member);
        }
        println!("  two-sided: {}", table.is_two_sided());
        println!();
    }
}
