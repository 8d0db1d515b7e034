//! Cuntz-Krieger rewriting in L(1,2): products, normal forms, grading.
//!
//! Run with: cargo run --example normal_forms

use leavitt::element::{LeavittElement, ReductionConfig};
use leavitt::fixtures;
use leavitt::parse::parse_element;
use leavitt::render;
use leavitt::scalar::FieldSpec;

fn main() {
    let graph = fixtures::loop_graph(2);
    let cfg = ReductionConfig::leavitt(&graph, FieldSpec::Rationals);

    let show = |label: &str, text: &str| {
        let x = parse_element(text, &cfg).unwrap();
        println!(
            "{label}: {text}  ->  {}",
            render::element_to_text(&x.normal_form())
        );
    };

    // CK1: ghost arrows cancel matching real arrows.
    show("CK1", "a1^* . a1");
    show("CK1", "a1^* . a2");
    show("CK1", "a1^* . (a1 . a2)");

    // CK2 makes the arrow projections a partition of unity.
    show("CK2", "a1 . a1^* + a2 . a2^*");
    // A single projection rewrites against the designated edge a2.
    show("CK2", "a2 . a2^*");

    // The identity 1 = Σ αα* over all words of a fixed length.
    let mut sum = LeavittElement::zero(&cfg);
    for alpha in graph.paths_of_length(3) {
        let term = format!("({p}) . ({p})^*", p = alpha);
        sum = sum.add(&parse_element(&term, &cfg).unwrap()).unwrap();
    }
    println!(
        "Σ over all 8 words of length 3: {}",
        render::element_to_text(&sum.normal_form())
    );

    // The Z-grading by |real| − |ghost|.
    let x = parse_element("a1 + a2 . a1^* + 3 · a1 . a2 + v", &cfg).unwrap();
    println!("graded supports of {}:", render::element_to_text(&x));
    for d in x.graded_support() {
        println!(
            "  degree {d}: {}",
            render::element_to_text(&x.graded_component(d))
        );
    }
}
