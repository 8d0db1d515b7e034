//! Exact symbolic computation in quiver algebras and Leavitt path algebras
//! of finite directed graphs.
//!
//! The crate works entirely over exact fields (arbitrary-precision rationals
//! or prime fields) and is organized in layers:
//!
//! * [`graph`] — finite digraphs, vertex classification, paths with
//!   head/tail calculus and graded enumeration;
//! * [`quiver`] — the path algebra KE;
//! * [`element`] — the Cohn and Leavitt path algebras: CK1 products, the
//!   CK2 designated-edge normal form, the involution, the Z-grading and
//!   normal-form basis enumeration;
//! * [`ideal`] — right ideals of KE: exact membership through Schreier
//!   interreduction, quotient tables, strong Schreier bases, free
//!   generating sets u = μa − π(μa), the Schreier-Lewin rank law, I-adic
//!   openness and two-sidedness;
//! * [`localize`] — flat-epimorphism certificates via CK2 vertex
//!   expansions, domain degrees, shrink/denseness witnesses, dual systems
//!   over the arrow ideal, codimension-1 re-presentations, module-type
//!   arithmetic, scalar extraction and Gabriel-membership witnesses;
//! * [`parse`] / [`render`] — the expression grammar, the line-based graph
//!   format, canonical printers and JSON codecs;
//! * [`cli`] — a thin subcommand binary over all of the above.
//!
//! # Example
//!
//! ```
//! use leavitt::element::{LeavittElement, ReductionConfig};
//! use leavitt::fixtures;
//! use leavitt::parse::parse_element;
//! use leavitt::scalar::FieldSpec;
//!
//! // In L(1,2), the two loops satisfy a1·a1* + a2·a2* = 1.
//! let cfg = ReductionConfig::leavitt(&fixtures::loop_graph(2), FieldSpec::Rationals);
//! let x = parse_element("a1 . a1^* + a2 . a2^*", &cfg).unwrap();
//! assert_eq!(x.normal_form(), LeavittElement::one(&cfg));
//! ```

pub mod cli;
pub mod element;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod ideal;
pub mod linalg;
pub mod localize;
pub mod parse;
pub mod quiver;
pub mod render;
pub mod scalar;

pub use element::{basis_enumerate, LeavittElement, LeavittMonomial, Mode, ReductionConfig};
pub use error::{Error, Result};
pub use graph::{Digraph, Edge, Path, Vertex, VertexKind};
pub use ideal::{
    Codimension, FreeGeneratorSet, OpenAdicReport, QuotientTable, RightIdealPresentation,
    SchreierBasis, TableStatus,
};
pub use localize::{
    common_shrink, dom_contains, dom_degree, dual_system, flat_certificate, gabriel_membership,
    module_type, scalar_extraction, shrink_to_quiver, vertex_expansion, Certificate,
    ExpansionReport, ModuleTypeInput, ModuleTypeReport,
};
pub use quiver::QuiverElement;
pub use scalar::{FieldSpec, Scalar};
