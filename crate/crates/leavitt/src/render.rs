//! Canonical printers and JSON codecs.
//!
//! The text form round-trips through the expression parser: terms appear in
//! the monomial order, ghost edges carry `^*`, coefficients use `·`.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::element::{LeavittElement, LeavittMonomial, ReductionConfig};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Path};
use crate::quiver::QuiverElement;
use crate::scalar::Scalar;

fn monomial_factors(m: &LeavittMonomial) -> Vec<String> {
    let graph = m.real().graph();
    let mut parts: Vec<String> = m
        .real()
        .edges()
        .iter()
        .map(|&e| graph.edge_id(e).to_string())
        .collect();
    for &e in m.ghost().edges().iter().rev() {
        parts.push(format!("{}^*", graph.edge_id(e)));
    }
    if parts.is_empty() {
        parts.push(graph.vertex_id(m.real().range()).to_string());
    }
    parts
}

pub fn monomial_to_text(m: &LeavittMonomial) -> String {
    monomial_factors(m).join(" . ")
}

fn path_factors(p: &Path) -> Vec<String> {
    let graph = p.graph();
    if p.is_vertex() {
        vec![graph.vertex_id(p.source()).to_string()]
    } else {
        p.edges()
            .iter()
            .map(|&e| graph.edge_id(e).to_string())
            .collect()
    }
}

fn render_terms(terms: Vec<(Scalar, Vec<String>)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (coeff, factors)) in terms.into_iter().enumerate() {
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        if i == 0 {
            if negative {
                out.push_str("- ");
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !magnitude.is_one() {
            out.push_str(&format!("{magnitude} · "));
        }
        out.push_str(&factors.join(" . "));
    }
    out
}

pub fn element_to_text(el: &LeavittElement) -> String {
    // Leading monomial first.
    let mut terms: Vec<_> = el
        .terms()
        .map(|(m, k)| (k.clone(), monomial_factors(m)))
        .collect();
    terms.reverse();
    render_terms(terms)
}

pub fn quiver_to_text(el: &QuiverElement) -> String {
    let mut terms: Vec<_> = el
        .terms()
        .map(|(p, k)| (k.clone(), path_factors(p)))
        .collect();
    terms.reverse();
    render_terms(terms)
}

pub fn element_to_json(el: &LeavittElement) -> Value {
    let graph = el.graph();
    let terms: Vec<Value> = el
        .terms()
        .map(|(m, k)| {
            json!({
                "coeff": k.to_string(),
                "real": m.real().edges().iter().map(|&e| graph.edge_id(e)).collect::<Vec<_>>(),
                "ghost": m.ghost().edges().iter().map(|&e| graph.edge_id(e)).collect::<Vec<_>>(),
                "vertex": graph.vertex_id(m.real().range()),
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn quiver_to_json(el: &QuiverElement) -> Value {
    let graph = el.graph();
    let terms: Vec<Value> = el
        .terms()
        .map(|(p, k)| {
            json!({
                "coeff": k.to_string(),
                "real": p.edges().iter().map(|&e| graph.edge_id(e)).collect::<Vec<_>>(),
                "ghost": Vec::<String>::new(),
                "vertex": graph.vertex_id(p.range()),
            })
        })
        .collect();
    json!({ "terms": terms })
}

fn path_from_ids(graph: &Arc<Digraph>, ids: &[&str], vertex: &str) -> Result<Path> {
    if ids.is_empty() {
        return Ok(Path::vertex(graph, graph.vertex(vertex)?));
    }
    let edges = ids
        .iter()
        .map(|id| graph.edge(id))
        .collect::<Result<Vec<_>>>()?;
    Path::from_edges(graph, edges)
}

/// Decodes the `{"terms":[{"coeff","real","ghost","vertex"}]}` schema.
pub fn element_from_json(value: &Value, cfg: &Arc<ReductionConfig>) -> Result<LeavittElement> {
    let graph = cfg.graph();
    let terms = value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::input("expected a `terms` array"))?;
    let mut out = Vec::new();
    for t in terms {
        let coeff = t
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::input("term without `coeff`"))?;
        let coeff = Scalar::parse(coeff, cfg.field())?;
        let str_list = |key: &str| -> Result<Vec<&str>> {
            match t.get(key) {
                None => Ok(Vec::new()),
                Some(v) => v
                    .as_array()
                    .ok_or_else(|| Error::input(format!("`{key}` must be an array")))?
                    .iter()
                    .map(|s| {
                        s.as_str()
                            .ok_or_else(|| Error::input(format!("`{key}` entries must be strings")))
                    })
                    .collect(),
            }
        };
        let real_ids = str_list("real")?;
        let ghost_ids = str_list("ghost")?;
        let vertex = t.get("vertex").and_then(Value::as_str).unwrap_or_default();
        let infer_vertex = |ids: &[&str]| -> Result<String> {
            if !vertex.is_empty() {
                return Ok(vertex.to_string());
            }
            if let Some(last) = ids.last() {
                let e = graph.edge(last)?;
                return Ok(graph.vertex_id(graph.range(e)).to_string());
            }
            Err(Error::input("vertex monomial requires a `vertex` field"))
        };
        let real = path_from_ids(graph, &real_ids, &infer_vertex(&real_ids)?)?;
        let ghost = path_from_ids(graph, &ghost_ids, &infer_vertex(&ghost_ids)?)?;
        out.push((LeavittMonomial::new(real, ghost)?, coeff));
    }
    LeavittElement::from_terms(cfg, out)
}

pub fn graph_to_text(graph: &Digraph) -> String {
    let mut out = String::new();
    if !graph.name().is_empty() {
        out.push_str(&format!("graph {}\n", graph.name()));
    }
    for v in graph.vertices() {
        out.push_str(&format!("vertex {}\n", graph.vertex_id(v)));
    }
    for e in graph.edges() {
        out.push_str(&format!(
            "edge {} {} {}\n",
            graph.edge_id(e),
            graph.vertex_id(graph.source(e)),
            graph.vertex_id(graph.range(e))
        ));
    }
    out
}

pub fn graph_to_json(graph: &Digraph) -> Value {
    json!({
        "name": graph.name(),
        "vertices": graph.vertices().map(|v| graph.vertex_id(v)).collect::<Vec<_>>(),
        "edges": graph
            .edges()
            .map(|e| {
                json!({
                    "id": graph.edge_id(e),
                    "source": graph.vertex_id(graph.source(e)),
                    "range": graph.vertex_id(graph.range(e)),
                })
            })
            .collect::<Vec<_>>(),
    })
}
