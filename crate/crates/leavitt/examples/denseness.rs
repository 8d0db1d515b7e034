//! Denseness witnesses on the Toeplitz graph: for any nonzero r, a path a
//! with 0 ≠ r·a real; for a pair (q1, q2), one path serving both.
//!
//! Run with: cargo run --example denseness

use leavitt::element::ReductionConfig;
use leavitt::fixtures;
use leavitt::localize::{common_shrink, dom_degree, shrink_to_quiver};
use leavitt::parse::parse_element;
use leavitt::render;
use leavitt::scalar::FieldSpec;

fn main() {
    let graph = fixtures::toeplitz();
    let cfg = ReductionConfig::leavitt(&graph, FieldSpec::Rationals);

    for text in ["a^*", "(a . a)^* + b^*", "a^* - 2 · (a . b)^*", "u + a"] {
        let r = parse_element(text, &cfg).unwrap();
        let w = shrink_to_quiver(&cfg, &r).unwrap();
        println!(
            "r = {:22} a = {:8} r·a = {}",
            text,
            w.path.to_string(),
            render::quiver_to_text(&w.image)
        );
        println!("  dom degree of r: {}", dom_degree(&cfg, &r).unwrap());
    }

    println!();
    let q1 = parse_element("a^*", &cfg).unwrap();
    let q2 = parse_element("(a . a . b)^*", &cfg).unwrap();
    let w = common_shrink(&cfg, &q1, &q2).unwrap();
    println!(
        "q1 = a^*, q2 = (a.a.b)^*:  β = {},  q1·β = {},  q2·β = {}",
        w.path,
        render::quiver_to_text(&w.first_image),
        render::element_to_text(&w.second_image)
    );
}
