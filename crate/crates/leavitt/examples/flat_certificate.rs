//! A flat-epimorphism certificate, worked on a graph with two sinks and a
//! pair of loops: for a subject r, paths s_i and elements b_i with every
//! r·s_i real and Σ s_i·b_i = 1.
//!
//! Run with: cargo run --example flat_certificate

use leavitt::element::ReductionConfig;
use leavitt::fixtures;
use leavitt::localize::{flat_certificate, vertex_expansion};
use leavitt::parse::parse_element;
use leavitt::render;
use leavitt::scalar::FieldSpec;

fn main() {
    // v2 <-a1- v1 -a2-> v3 (loops a3, a4) -a5-> v4
    let graph = fixtures::branch_loops();
    let cfg = ReductionConfig::leavitt(&graph, FieldSpec::Rationals);
    let subject = parse_element("a2 . a3^* . a4^* + (a2 . a3)^*", &cfg).unwrap();
    println!("subject r = {}", render::element_to_text(&subject));

    // Expand each vertex through CK2 until all images are real.
    for id in ["v1", "v2", "v3", "v4"] {
        let v = graph.vertex(id).unwrap();
        let report = vertex_expansion(&cfg, &subject, v).unwrap();
        let mus: Vec<String> = report.pairs.iter().map(|(m, _)| m.to_string()).collect();
        println!("{id} = Σ μμ* over μ ∈ {{{}}}", mus.join(", "));
        let sinks: Vec<&str> = report
            .exceptional_sinks
            .iter()
            .map(|&u| graph.vertex_id(u))
            .collect();
        println!(
            "  cycle-free sinks: {{{}}}, reach bound N({id}) = {}",
            sinks.join(", "),
            report.reach_bound
        );
    }

    // The full certificate collects every vertex expansion.
    let cert = flat_certificate(&cfg, &subject).unwrap();
    println!("certificate pairs:");
    for (s, b) in &cert.pairs {
        let image = subject
            .mul(&leavitt::element::LeavittElement::embed(&cfg, s).unwrap())
            .unwrap()
            .normal_form();
        println!(
            "  s = {:10}  b = {:14}  r·s = {}",
            render::quiver_to_text(s),
            render::element_to_text(b),
            render::element_to_text(&image)
        );
    }
    println!("all images real: {}", cert.images_real);
    println!("Σ s·b = 1: {}", cert.partition_of_unity);
}
