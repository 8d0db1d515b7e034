//! Parsers for the line-based graph format and the element expression
//! grammar.
//!
//! Expressions:
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor (('.'|'·') factor)*
//! factor := base ['^*']
//! base   := number | identifier | '(' expr ')'
//! number := integer ['/' integer]
//! ```
//! A bare number denotes that multiple of the identity Σv, so `a1 - 1` and
//! `1/2 · v` both parse; `^*` applies the involution to its factor. Real
//! (quiver) contexts reject `^*`.

use std::sync::Arc;

use crate::element::{LeavittElement, LeavittMonomial, ReductionConfig};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Path};
use crate::quiver::QuiverElement;
use crate::scalar::{FieldSpec, Scalar};

/// The parsed form of a graph file: `graph NAME` (optional), `vertex ID`
/// and `edge ID SRC DST` lines, `#` comments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String, String)>,
    pub comments: Vec<String>,
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<GraphDocument> {
        let mut doc = GraphDocument {
            name: String::new(),
            vertices: Vec::new(),
            edges: Vec::new(),
            comments: Vec::new(),
        };
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = match raw.split_once('#') {
                Some((before, comment)) => {
                    doc.comments.push(comment.trim().to_string());
                    before
                }
                None => raw,
            };
            let mut words = content.split_whitespace();
            let Some(keyword) = words.next() else {
                continue;
            };
            let rest: Vec<&str> = words.collect();
            match (keyword, rest.as_slice()) {
                ("graph", [name]) => doc.name = name.to_string(),
                ("vertex", [id]) => doc.vertices.push(id.to_string()),
                ("edge", [id, src, dst]) => {
                    doc.edges
                        .push((id.to_string(), src.to_string(), dst.to_string()))
                }
                ("graph", _) | ("vertex", _) | ("edge", _) => {
                    return Err(Error::Parse {
                        line,
                        column: 1,
                        message: format!("malformed `{keyword}` declaration"),
                    })
                }
                _ => {
                    return Err(Error::Parse {
                        line,
                        column: 1,
                        message: format!(
                            "unknown keyword `{keyword}` (expected graph/vertex/edge)"
                        ),
                    })
                }
            }
        }
        Ok(doc)
    }

    pub fn to_digraph(&self) -> Result<Arc<Digraph>> {
        Digraph::new(self.name.clone(), self.vertices.clone(), self.edges.clone())
    }

    pub fn from_digraph(graph: &Digraph) -> GraphDocument {
        GraphDocument {
            name: graph.name().to_string(),
            vertices: graph
                .vertices()
                .map(|v| graph.vertex_id(v).to_string())
                .collect(),
            edges: graph
                .edges()
                .map(|e| {
                    (
                        graph.edge_id(e).to_string(),
                        graph.vertex_id(graph.source(e)).to_string(),
                        graph.vertex_id(graph.range(e)).to_string(),
                    )
                })
                .collect(),
            comments: Vec::new(),
        }
    }
}

/// Parses and validates a graph file.
pub fn parse_graph(text: &str) -> Result<Arc<Digraph>> {
    GraphDocument::parse(text)?.to_digraph()
}

// ---------------------------------------------------------------------------
// Expression parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Number(String),
    Plus,
    Minus,
    Dot,
    Star,
    Open,
    Close,
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    line: usize,
    column: usize,
}

struct Cursor {
    chars: Vec<char>,
    i: usize,
    line: usize,
    column: usize,
}

impl Cursor {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars[self.i];
        self.i += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        c
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut cur = Cursor {
        chars: text.chars().collect(),
        i: 0,
        line: 1,
        column: 1,
    };
    while let Some(c) = cur.peek() {
        let (l, col) = (cur.line, cur.column);
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        let token = match c {
            '+' => {
                cur.bump();
                Token::Plus
            }
            '-' | '−' => {
                cur.bump();
                Token::Minus
            }
            '.' | '·' => {
                cur.bump();
                Token::Dot
            }
            '(' => {
                cur.bump();
                Token::Open
            }
            ')' => {
                cur.bump();
                Token::Close
            }
            '^' => {
                cur.bump();
                match cur.peek() {
                    Some('*') => {
                        cur.bump();
                        Token::Star
                    }
                    _ => {
                        return Err(Error::Parse {
                            line: l,
                            column: col,
                            message: "expected `*` after `^`".into(),
                        })
                    }
                }
            }
            c if c.is_ascii_digit() => {
                let mut num = String::new();
                while matches!(cur.peek(), Some(d) if d.is_ascii_digit()) {
                    num.push(cur.bump());
                }
                if cur.peek() == Some('/') {
                    num.push(cur.bump());
                    let mut any = false;
                    while matches!(cur.peek(), Some(d) if d.is_ascii_digit()) {
                        num.push(cur.bump());
                        any = true;
                    }
                    if !any {
                        return Err(Error::Parse {
                            line: l,
                            column: col,
                            message: format!("malformed scalar `{num}`"),
                        });
                    }
                }
                Token::Number(num)
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut id = String::new();
                while matches!(cur.peek(), Some(d) if d.is_alphanumeric() || d == '_') {
                    id.push(cur.bump());
                }
                Token::Ident(id)
            }
            other => {
                return Err(Error::Parse {
                    line: l,
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push(Spanned {
            token,
            line: l,
            column: col,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Node {
    Number(String, usize, usize),
    Ident(String, usize, usize),
    Star(Box<Node>),
    Product(Vec<Node>),
    Sum(Vec<(bool, Node)>),
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.token)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos.min(self.tokens.len().saturating_sub(1)))
            .map(|s| (s.line, s.column))
            .unwrap_or((1, 1))
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.here();
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut parts = Vec::new();
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            negate = true;
        }
        parts.push((negate, self.term()?));
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    parts.push((false, self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    parts.push((true, self.term()?));
                }
                _ => break,
            }
        }
        Ok(Node::Sum(parts))
    }

    fn term(&mut self) -> Result<Node> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Token::Dot) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(Node::Product(factors))
    }

    fn factor(&mut self) -> Result<Node> {
        let (line, column) = self.here();
        let base = match self.peek().cloned() {
            Some(Token::Number(n)) => {
                self.pos += 1;
                Node::Number(n, line, column)
            }
            Some(Token::Ident(id)) => {
                self.pos += 1;
                Node::Ident(id, line, column)
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                inner
            }
            _ => return Err(self.error("expected an identifier, number or `(`")),
        };
        if self.peek() == Some(&Token::Star) {
            self.pos += 1;
            Ok(Node::Star(Box::new(base)))
        } else {
            Ok(base)
        }
    }
}

fn parse_ast(text: &str) -> Result<Node> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "empty expression".into(),
        });
    }
    let mut parser = Parser { tokens, pos: 0 };
    let node = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("trailing input after expression"));
    }
    Ok(node)
}

fn eval_leavitt(node: &Node, cfg: &Arc<ReductionConfig>) -> Result<LeavittElement> {
    let graph = cfg.graph();
    match node {
        Node::Number(text, line, column) => {
            let k = Scalar::parse(text, cfg.field()).map_err(|e| Error::Parse {
                line: *line,
                column: *column,
                message: e.to_string(),
            })?;
            LeavittElement::one(cfg).scale(&k)
        }
        Node::Ident(id, line, column) => {
            if let Ok(e) = graph.edge(id) {
                return LeavittElement::monomial(
                    cfg,
                    LeavittMonomial::from_real(Path::edge(graph, e)),
                );
            }
            if let Ok(v) = graph.vertex(id) {
                return LeavittElement::monomial(cfg, LeavittMonomial::vertex(graph, v));
            }
            Err(Error::Parse {
                line: *line,
                column: *column,
                message: format!("unknown identifier `{id}`"),
            })
        }
        Node::Star(inner) => Ok(eval_leavitt(inner, cfg)?.involution()),
        Node::Product(factors) => {
            let mut acc: Option<LeavittElement> = None;
            for f in factors {
                let val = eval_leavitt(f, cfg)?;
                acc = Some(match acc {
                    None => val,
                    Some(prev) => prev.mul(&val)?,
                });
            }
            Ok(acc.expect("products are nonempty"))
        }
        Node::Sum(parts) => {
            let mut acc = LeavittElement::zero(cfg);
            for (neg, part) in parts {
                let val = eval_leavitt(part, cfg)?;
                acc = if *neg { acc.sub(&val)? } else { acc.add(&val)? };
            }
            Ok(acc)
        }
    }
}

fn eval_quiver(node: &Node, graph: &Arc<Digraph>, field: FieldSpec) -> Result<QuiverElement> {
    match node {
        Node::Number(text, line, column) => {
            let k = Scalar::parse(text, field).map_err(|e| Error::Parse {
                line: *line,
                column: *column,
                message: e.to_string(),
            })?;
            QuiverElement::one(graph, field).scale(&k)
        }
        Node::Ident(id, line, column) => {
            if let Ok(e) = graph.edge(id) {
                return Ok(QuiverElement::from_path(graph, field, Path::edge(graph, e)));
            }
            if let Ok(v) = graph.vertex(id) {
                return Ok(QuiverElement::vertex(graph, field, v));
            }
            Err(Error::Parse {
                line: *line,
                column: *column,
                message: format!("unknown identifier `{id}`"),
            })
        }
        Node::Star(_) => Err(Error::input(
            "`^*` is not allowed here: a real (quiver) element is required",
        )),
        Node::Product(factors) => {
            let mut acc: Option<QuiverElement> = None;
            for f in factors {
                let val = eval_quiver(f, graph, field)?;
                acc = Some(match acc {
                    None => val,
                    Some(prev) => prev.mul(&val)?,
                });
            }
            Ok(acc.expect("products are nonempty"))
        }
        Node::Sum(parts) => {
            let mut acc = QuiverElement::zero(graph, field);
            for (neg, part) in parts {
                let val = eval_quiver(part, graph, field)?;
                acc = if *neg { acc.sub(&val)? } else { acc.add(&val)? };
            }
            Ok(acc)
        }
    }
}

/// Parses an expression into an element of L_K(E) (or C_K(E), per config).
pub fn parse_element(text: &str, cfg: &Arc<ReductionConfig>) -> Result<LeavittElement> {
    eval_leavitt(&parse_ast(text)?, cfg)
}

/// Parses an expression into a quiver element; `^*` is rejected.
pub fn parse_quiver(text: &str, graph: &Arc<Digraph>, field: FieldSpec) -> Result<QuiverElement> {
    eval_quiver(&parse_ast(text)?, graph, field)
}
