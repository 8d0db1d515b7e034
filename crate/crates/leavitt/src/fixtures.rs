//! Stock graphs used throughout the documentation, examples and tests.

use std::sync::Arc;

use crate::graph::Digraph;

/// One vertex `v` with `n` loops `a1..an`: the base graph of the free
/// associative algebra of rank `n` and of the Leavitt algebra L(1,n).
pub fn loop_graph(n: usize) -> Arc<Digraph> {
    let edges = (1..=n)
        .map(|i| (format!("a{i}"), "v".to_string(), "v".to_string()))
        .collect();
    Digraph::new(format!("loops-{n}"), vec!["v".to_string()], edges).unwrap()
}

/// The linear A_n graph `v1 -> v2 -> ... -> vn` (n vertices, n-1 edges).
pub fn dynkin(n: usize) -> Arc<Digraph> {
    let vertices = (1..=n).map(|i| format!("v{i}")).collect();
    let edges = (1..n)
        .map(|i| (format!("a{i}"), format!("v{i}"), format!("v{}", i + 1)))
        .collect();
    Digraph::new(format!("dynkin-a{n}"), vertices, edges).unwrap()
}

/// `u` with a loop `a` and an edge `b` to the sink `v`.
pub fn toeplitz() -> Arc<Digraph> {
    Digraph::new(
        "toeplitz",
        vec!["u".to_string(), "v".to_string()],
        vec![
            ("a".to_string(), "u".to_string(), "u".to_string()),
            ("b".to_string(), "u".to_string(), "v".to_string()),
        ],
    )
    .unwrap()
}

/// Two sinks fed by one source: `w1 <-a- v -b-> w2`.
pub fn fork() -> Arc<Digraph> {
    Digraph::new(
        "fork",
        vec!["v".to_string(), "w1".to_string(), "w2".to_string()],
        vec![
            ("a".to_string(), "v".to_string(), "w1".to_string()),
            ("b".to_string(), "v".to_string(), "w2".to_string()),
        ],
    )
    .unwrap()
}

/// `v2 <-a1- v1 -a2-> v3 -a5-> v4`, with two loops `a3`, `a4` at `v3`.
/// `v2` and `v4` are sinks; paths from `v1` to `v4` can be arbitrarily long.
pub fn branch_loops() -> Arc<Digraph> {
    Digraph::new(
        "branch-loops",
        vec![
            "v1".to_string(),
            "v2".to_string(),
            "v3".to_string(),
            "v4".to_string(),
        ],
        vec![
            ("a1".to_string(), "v1".to_string(), "v2".to_string()),
            ("a2".to_string(), "v1".to_string(), "v3".to_string()),
            ("a3".to_string(), "v3".to_string(), "v3".to_string()),
            ("a4".to_string(), "v3".to_string(), "v3".to_string()),
            ("a5".to_string(), "v3".to_string(), "v4".to_string()),
        ],
    )
    .unwrap()
}
