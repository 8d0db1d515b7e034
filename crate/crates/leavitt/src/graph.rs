//! Finite directed graphs and their paths.
//!
//! Vertices and edges are interned: the tables are sorted by identifier at
//! construction, so comparing indices is comparing identifiers. Graphs are
//! immutable after validation; elements hold an `Arc` to their graph.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a vertex in its graph's ordered vertex table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

/// Index of an edge in its graph's ordered edge table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub u32);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeRecord {
    pub id: String,
    pub source: Vertex,
    pub range: Vertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Regular,
    Sink,
}

/// A finite digraph with named vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    name: String,
    vertices: Vec<String>,
    edges: Vec<EdgeRecord>,
    /// Outgoing edges per vertex, ascending by edge index.
    out_edges: Vec<Vec<Edge>>,
}

impl Digraph {
    /// Validates and builds a graph. Vertex and edge identifiers must be
    /// unique and disjoint as name sets; every endpoint must be declared;
    /// the vertex set must be nonempty.
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
    ) -> Result<Arc<Digraph>> {
        let name = name.into();
        let mut vertices = vertices;
        vertices.sort();
        for pair in vertices.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::input(format!("duplicate vertex id `{}`", pair[0])));
            }
        }
        let vertex_index = |id: &str| -> Result<Vertex> {
            vertices
                .binary_search_by(|v| v.as_str().cmp(id))
                .map(|i| Vertex(i as u32))
                .map_err(|_| Error::input(format!("unknown vertex `{id}`")))
        };
        let mut edges: Vec<EdgeRecord> = edges
            .into_iter()
            .map(|(id, src, dst)| {
                if vertices.binary_search(&id).is_ok() {
                    return Err(Error::input(format!(
                        "edge id `{id}` collides with a vertex id"
                    )));
                }
                Ok(EdgeRecord {
                    id,
                    source: vertex_index(&src)?,
                    range: vertex_index(&dst)?,
                })
            })
            .collect::<Result<_>>()?;
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        for pair in edges.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(Error::input(format!("duplicate edge id `{}`", pair[0].id)));
            }
        }
        if vertices.is_empty() {
            return Err(Error::input("graph must have at least one vertex"));
        }
        let mut out_edges = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.source.0 as usize].push(Edge(i as u32));
        }
        Ok(Arc::new(Digraph {
            name,
            vertices,
            edges,
            out_edges,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertices.len()).map(|i| Vertex(i as u32))
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.edges.len()).map(|i| Edge(i as u32))
    }

    pub fn vertex_id(&self, v: Vertex) -> &str {
        &self.vertices[v.0 as usize]
    }

    pub fn edge_id(&self, e: Edge) -> &str {
        &self.edges[e.0 as usize].id
    }

    pub fn source(&self, e: Edge) -> Vertex {
        self.edges[e.0 as usize].source
    }

    pub fn range(&self, e: Edge) -> Vertex {
        self.edges[e.0 as usize].range
    }

    pub fn vertex(&self, id: &str) -> Result<Vertex> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(id))
            .map(|i| Vertex(i as u32))
            .map_err(|_| Error::input(format!("unknown vertex `{id}`")))
    }

    pub fn edge(&self, id: &str) -> Result<Edge> {
        self.edges
            .binary_search_by(|e| e.id.as_str().cmp(id))
            .map(|i| Edge(i as u32))
            .map_err(|_| Error::input(format!("unknown edge `{id}`")))
    }

    /// Edges emitted by `v`, ascending by identifier.
    pub fn out_edges(&self, v: Vertex) -> &[Edge] {
        &self.out_edges[v.0 as usize]
    }

    /// Sink iff the vertex emits no edge; finite graphs have no infinite
    /// emitters, so every other vertex is regular.
    pub fn classify(&self, v: Vertex) -> VertexKind {
        if self.out_edges(v).is_empty() {
            VertexKind::Sink
        } else {
            VertexKind::Regular
        }
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.classify(v) == VertexKind::Sink
    }

    pub fn sinks(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(|v| self.is_sink(*v))
    }

    /// True iff the graph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        // Kahn peeling on out-degree.
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for e in &self.edges {
            indeg[e.range.0 as usize] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &e in self.out_edges(Vertex(v as u32)) {
                let w = self.range(e).0 as usize;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        seen == n
    }

    /// Vertices lying on some directed cycle.
    pub fn cycle_vertices(&self) -> Vec<Vertex> {
        self.vertices()
            .filter(|&v| {
                // v is on a cycle iff v is reachable from one of its successors.
                self.out_edges(v)
                    .iter()
                    .any(|&e| self.reachable(self.range(e)).contains(&v))
            })
            .collect()
    }

    /// Set of vertices reachable from `v` (including `v`).
    pub fn reachable(&self, v: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![v];
        seen[v.0 as usize] = true;
        while let Some(w) = stack.pop() {
            for &e in self.out_edges(w) {
                let u = self.range(e);
                if !seen[u.0 as usize] {
                    seen[u.0 as usize] = true;
                    stack.push(u);
                }
            }
        }
        (0..self.vertices.len() as u32)
            .map(Vertex)
            .filter(|u| seen[u.0 as usize])
            .collect()
    }

    /// All paths of length exactly `len`, ordered by (source id, edge sequence).
    pub fn paths_of_length(self: &Arc<Digraph>, len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = Vec::new();
        if len == 0 {
            for v in self.vertices() {
                out.push(Path::vertex(self, v));
            }
            return out;
        }
        let mut frontier: Vec<Path> = self.paths_of_length(len - 1);
        let mut next = Vec::new();
        for p in frontier.drain(..) {
            for &e in self.out_edges(p.range()) {
                next.push(p.extend(e));
            }
        }
        next.sort();
        next
    }

    /// All paths of length at most `len`, in graded order.
    pub fn paths_up_to(self: &Arc<Digraph>, len: usize) -> Vec<Path> {
        (0..=len).flat_map(|d| self.paths_of_length(d)).collect()
    }
}

/// A finite path: a base vertex (length 0) or a composable edge sequence.
///
/// Ordering is graded: by length, then (source, edge sequence)
/// lexicographically, which is lexicographic on identifiers because the
/// graph tables are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    graph: Arc<Digraph>,
    source: Vertex,
    edges: Vec<Edge>,
}

impl Path {
    pub fn vertex(graph: &Arc<Digraph>, v: Vertex) -> Path {
        Path {
            graph: Arc::clone(graph),
            source: v,
            edges: Vec::new(),
        }
    }

    pub fn edge(graph: &Arc<Digraph>, e: Edge) -> Path {
        Path {
            graph: Arc::clone(graph),
            source: graph.source(e),
            edges: vec![e],
        }
    }

    /// Builds a path from an edge sequence, validating composability.
    pub fn from_edges(graph: &Arc<Digraph>, edges: Vec<Edge>) -> Result<Path> {
        if edges.is_empty() {
            return Err(Error::input("empty edge sequence; use Path::vertex"));
        }
        for pair in edges.windows(2) {
            if graph.range(pair[0]) != graph.source(pair[1]) {
                return Err(Error::input(format!(
                    "edges `{}` and `{}` do not compose",
                    graph.edge_id(pair[0]),
                    graph.edge_id(pair[1])
                )));
            }
        }
        let source = graph.source(edges[0]);
        Ok(Path {
            graph: Arc::clone(graph),
            source,
            edges,
        })
    }

    pub fn graph(&self) -> &Arc<Digraph> {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn range(&self) -> Vertex {
        match self.edges.last() {
            Some(&e) => self.graph.range(e),
            None => self.source,
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn first_edge(&self) -> Option<Edge> {
        self.edges.first().copied()
    }

    pub fn last_edge(&self) -> Option<Edge> {
        self.edges.last().copied()
    }

    /// Concatenation when `range(self) = source(other)`, else `None`.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.range() != other.source() {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Some(Path {
            graph: Arc::clone(&self.graph),
            source: self.source,
            edges,
        })
    }

    pub fn extend(&self, e: Edge) -> Path {
        debug_assert_eq!(self.range(), self.graph.source(e));
        let mut edges = self.edges.clone();
        edges.push(e);
        Path {
            graph: Arc::clone(&self.graph),
            source: self.source,
            edges,
        }
    }

    /// The first `i` edges; `head(0)` is the source vertex.
    pub fn head(&self, i: usize) -> Result<Path> {
        if i > self.len() {
            return Err(Error::input(format!(
                "head index {i} out of range 0..={}",
                self.len()
            )));
        }
        Ok(Path {
            graph: Arc::clone(&self.graph),
            source: self.source,
            edges: self.edges[..i].to_vec(),
        })
    }

    /// The remaining edges after the first `i`; `tail(len)` is the range vertex.
    pub fn tail(&self, i: usize) -> Result<Path> {
        if i > self.len() {
            return Err(Error::input(format!(
                "tail index {i} out of range 0..={}",
                self.len()
            )));
        }
        let source = if i == 0 {
            self.source
        } else {
            self.graph.range(self.edges[i - 1])
        };
        Ok(Path {
            graph: Arc::clone(&self.graph),
            source,
            edges: self.edges[i..].to_vec(),
        })
    }

    /// True iff `self` is a head of `other`.
    pub fn is_head_of(&self, other: &Path) -> bool {
        self.source == other.source
            && self.len() <= other.len()
            && self.edges[..] == other.edges[..self.len()]
    }

    /// True iff the path visits no vertex twice.
    pub fn is_vertex_simple(&self) -> bool {
        let mut seen = vec![self.source];
        for &e in &self.edges {
            let v = self.graph.range(e);
            if seen.contains(&v) {
                return false;
            }
            seen.push(v);
        }
        true
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.edges.cmp(&other.edges))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            write!(f, "{}", self.graph.vertex_id(self.source))
        } else {
            let ids: Vec<&str> = self.edges.iter().map(|&e| self.graph.edge_id(e)).collect();
            write!(f, "{}", ids.join(" . "))
        }
    }
}
