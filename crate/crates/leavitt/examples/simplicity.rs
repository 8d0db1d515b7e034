//! Scalar extraction in L(1,2): every nonzero real element can be squeezed
//! to a nonzero scalar between a ghost word and a real word, the engine
//! behind simplicity.
//!
//! Run with: cargo run --example simplicity

use leavitt::element::ReductionConfig;
use leavitt::fixtures;
use leavitt::localize::scalar_extraction;
use leavitt::parse::parse_quiver;
use leavitt::scalar::FieldSpec;

fn main() {
    let graph = fixtures::loop_graph(2);
    let field = FieldSpec::Rationals;
    let cfg = ReductionConfig::leavitt(&graph, field);

    for text in [
        "7",
        "a1",
        "1 + a1 . a2",
        "a1 . a1 - a2",
        "a1 + a2 + a1 . a1 . a1",
        "1/2 · a2 . a1 - 3 · a1",
    ] {
        let a = parse_quiver(text, &graph, field).unwrap();
        let w = scalar_extraction(&cfg, &a, 3).unwrap();
        println!(
            "a = {:24} ({:10})^* · a · ({:8}) = {}",
            text,
            w.left.to_string(),
            w.right.to_string(),
            w.scalar
        );
    }
}
