//! Command-line surface: one subcommand per library capability.
//!
//! Exit codes: 0 success, 1 input or parse error, 2 bound-exhausted or
//! undecided, 3 internal invariant violation.

use std::io::Read;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::element::{basis_enumerate, LeavittElement, ReductionConfig};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::ideal::{OpenAdicReport, QuotientTable, RightIdealPresentation, DEFAULT_BOUND};
use crate::localize::{
    codim1_presentation, common_shrink, dom_degree, dual_system, flat_certificate,
    gabriel_membership, module_type, scalar_extraction, shrink_to_quiver, vertex_expansion,
    Certificate, K0Report, ModuleTypeInput,
};
use crate::parse::{parse_element, parse_graph, parse_quiver};
use crate::quiver::QuiverElement;
use crate::render;
use crate::scalar::FieldSpec;

#[derive(Parser)]
#[command(
    name = "leavitt",
    version,
    about = "Exact computation in quiver algebras and Leavitt path algebras of finite digraphs"
)]
struct Cli {
    /// Graph file (line format: `vertex ID`, `edge ID SRC DST`).
    #[arg(long, global = true)]
    graph: Option<PathBuf>,

    /// Coefficient field: `rat` or `fp:P` with P prime.
    #[arg(long, global = true, default_value = "rat")]
    field: String,

    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BoundArg {
    /// Degree bound for the coset-basis enumeration.
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the graph file and print a summary.
    Check,
    /// Normal form of an expression under the Cuntz-Krieger relations.
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// Product of two expressions, in normal form.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: Option<String>,
        #[arg(allow_hyphen_values = true)]
        right: Option<String>,
    },
    /// Normal-form basis monomials up to a total degree.
    Basis {
        #[arg(long)]
        max_degree: usize,
    },
    /// Total dimension of the Leavitt path algebra (finite iff acyclic).
    Dim,
    /// Flat-epimorphism certificate for an element.
    Cert {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// CK2 vertex expansion of a vertex against an element.
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long)]
        vertex: String,
    },
    /// Least l with q·I^l inside KE.
    Dom {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// A path a with 0 ≠ nf(r·a) in KE.
    Shrink {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
    },
    /// A path β with 0 ≠ nf(q1·β) in KE and nf(q2·β) in KE.
    Dense {
        #[arg(allow_hyphen_values = true)]
        first: Option<String>,
        #[arg(allow_hyphen_values = true)]
        second: Option<String>,
    },
    /// Strong Schreier basis of the right ideal generated by the arguments.
    Schreier {
        generators: Vec<String>,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Free rank, codimension and the Schreier-Lewin check.
    Rank {
        generators: Vec<String>,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Least l with I^l inside the ideal.
    Open {
        generators: Vec<String>,
        #[arg(long, default_value_t = 8)]
        l_max: usize,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Whether the right ideal is two-sided.
    TwoSided {
        generators: Vec<String>,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Coordinates of a member over the free generators of the ideal.
    Express {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        generators: Vec<String>,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Dual projections of a basis of the arrow ideal.
    Dual { basis: Vec<String> },
    /// Constants k_i and generators r_i = a_i − k_i of a codim-1 ideal.
    Codim1 {
        generators: Vec<String>,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Module type and Grothendieck group from the localization data.
    ModuleType {
        /// Localization at a codimension-1 ideal.
        #[arg(long, conflicts_with_all = ["lm", "family"])]
        codim1: bool,
        /// Matrix point: l = dim_K D, m = matrix size.
        #[arg(long, num_args = 2, value_names = ["L", "M"])]
        lm: Option<Vec<u64>>,
        /// Family of matrix points: `l,m;l,m;...`.
        #[arg(long)]
        family: Option<String>,
        /// Rank of the free algebra.
        #[arg(long)]
        n: u64,
    },
    /// Simplicity witness: μ, ν with nf(μ*·a·ν) a nonzero scalar.
    Extract {
        #[arg(allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long, default_value_t = 3)]
        slack: usize,
    },
    /// Gabriel-topology membership witness Σ g_i·b_i = 1.
    Gabriel {
        generators: Vec<String>,
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    1
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

struct Context {
    graph: Arc<Digraph>,
    field: FieldSpec,
    cfg: Arc<ReductionConfig>,
    json: bool,
}

impl Context {
    fn new(cli: &Cli) -> Result<Context> {
        let field = FieldSpec::parse(&cli.field)?;
        let path = cli
            .graph
            .as_ref()
            .ok_or_else(|| Error::input("this command requires --graph FILE"))?;
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
        let graph = parse_graph(&text)?;
        let cfg = ReductionConfig::leavitt(&graph, field);
        Ok(Context {
            graph,
            field,
            cfg,
            json: cli.json,
        })
    }

    fn element(&self, text: &str) -> Result<LeavittElement> {
        parse_element(text, &self.cfg)
    }

    fn quiver(&self, text: &str) -> Result<QuiverElement> {
        parse_quiver(text, &self.graph, self.field)
    }

    fn table(&self, generators: &[String], bound: usize) -> Result<QuotientTable> {
        let gens = read_list(generators)?
            .iter()
            .map(|s| self.quiver(s))
            .collect::<Result<Vec<_>>>()?;
        let pres = RightIdealPresentation::new(&self.graph, self.field, gens)?;
        Ok(QuotientTable::build(pres, bound))
    }
}

fn read_stdin() -> Result<String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Error::input(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

fn read_expr(arg: &Option<String>) -> Result<String> {
    match arg {
        Some(s) if s != "-" => Ok(s.clone()),
        _ => {
            let text = read_stdin()?;
            let trimmed = text.trim();
            if trimmed.is_empty() {
                return Err(Error::input("expected an expression on stdin"));
            }
            Ok(trimmed.to_string())
        }
    }
}

/// Generator lists come from the arguments, or one per stdin line.
fn read_list(args: &[String]) -> Result<Vec<String>> {
    if !args.is_empty() {
        return Ok(args.to_vec());
    }
    let text = read_stdin()?;
    let lines: Vec<String> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect();
    if lines.is_empty() {
        return Err(Error::input(
            "expected generators as arguments or stdin lines",
        ));
    }
    Ok(lines)
}

fn certificate_json(cert: &Certificate) -> serde_json::Value {
    json!({
        "subject": render::element_to_json(&cert.subject),
        "pairs": cert
            .pairs
            .iter()
            .map(|(s, b)| json!({
                "s": render::quiver_to_json(s),
                "s_text": render::quiver_to_text(s),
                "b": render::element_to_json(b),
                "b_text": render::element_to_text(b),
            }))
            .collect::<Vec<_>>(),
        "images_real": cert.images_real,
        "partition_of_unity": cert.partition_of_unity,
    })
}

fn print_certificate(cert: &Certificate, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&certificate_json(cert)).unwrap()
        );
        return;
    }
    println!("subject: {}", render::element_to_text(&cert.subject));
    for (s, b) in &cert.pairs {
        println!(
            "  s = {}  b = {}",
            render::quiver_to_text(s),
            render::element_to_text(b)
        );
    }
    println!("images real: {}", cert.images_real);
    println!("partition of unity: {}", cert.partition_of_unity);
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Check => {
            let ctx = Context::new(cli)?;
            let g = &ctx.graph;
            if ctx.json {
                let mut value = render::graph_to_json(g);
                value["acyclic"] = json!(g.is_acyclic());
                value["sinks"] = json!(g.sinks().map(|v| g.vertex_id(v)).collect::<Vec<_>>());
                value["field"] = json!(ctx.field.to_string());
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                println!(
                    "graph `{}`: {} vertices, {} edges, sinks [{}], acyclic: {}, field {}",
                    g.name(),
                    g.vertex_count(),
                    g.edge_count(),
                    g.sinks()
                        .map(|v| g.vertex_id(v))
                        .collect::<Vec<_>>()
                        .join(", "),
                    g.is_acyclic(),
                    ctx.field
                );
            }
            Ok(0)
        }
        Command::Nf { expr } => {
            let ctx = Context::new(cli)?;
            let x = ctx.element(&read_expr(expr)?)?.normal_form();
            if ctx.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&render::element_to_json(&x)).unwrap()
                );
            } else {
                println!("{}", render::element_to_text(&x));
            }
            Ok(0)
        }
        Command::Mul { left, right } => {
            let ctx = Context::new(cli)?;
            let (l, r) = match (left, right) {
                (Some(l), Some(r)) => (l.clone(), r.clone()),
                _ => {
                    let text = read_stdin()?;
                    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
                    let l = lines
                        .next()
                        .ok_or_else(|| Error::input("expected two expressions"))?;
                    let r = lines
                        .next()
                        .ok_or_else(|| Error::input("expected two expressions"))?;
                    (l.to_string(), r.to_string())
                }
            };
            let x = ctx.element(&l)?.mul(&ctx.element(&r)?)?.normal_form();
            if ctx.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&render::element_to_json(&x)).unwrap()
                );
            } else {
                println!("{}", render::element_to_text(&x));
            }
            Ok(0)
        }
        Command::Basis { max_degree } => {
            let ctx = Context::new(cli)?;
            let report = basis_enumerate(&ctx.cfg, *max_degree);
            if ctx.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "monomials": report
                            .monomials
                            .iter()
                            .map(render::monomial_to_text)
                            .collect::<Vec<_>>(),
                        "bound": report.bound,
                        "acyclic": report.acyclic,
                        "dimension": report.dimension,
                    }))
                    .unwrap()
                );
            } else {
                for m in &report.monomials {
                    println!("{}", render::monomial_to_text(m));
                }
                match report.dimension {
                    Some(d) => println!("# dimension {d}"),
                    None => println!("# graph has cycles; dimension infinite"),
                }
            }
            Ok(0)
        }
        Command::Dim => {
            let ctx = Context::new(cli)?;
            let report = basis_enumerate(&ctx.cfg, 0);
            match (ctx.json, report.dimension) {
                (true, d) => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "dimension": d })).unwrap()
                ),
                (false, Some(d)) => println!("{d}"),
                (false, None) => println!("infinite"),
            }
            Ok(0)
        }
        Command::Cert { expr } => {
            let ctx = Context::new(cli)?;
            let r = ctx.element(&read_expr(expr)?)?;
            let cert = flat_certificate(&ctx.cfg, &r)?;
            print_certificate(&cert, ctx.json);
            if cert.is_valid() {
                Ok(0)
            } else {
                Err(Error::internal("emitted certificate failed verification"))
            }
        }
        Command::Expand { expr, vertex } => {
            let ctx = Context::new(cli)?;
            let r = ctx.element(&read_expr(expr)?)?;
            let v = ctx.graph.vertex(vertex)?;
            let rep = vertex_expansion(&ctx.cfg, &r, v)?;
            let g = &ctx.graph;
            if ctx.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "vertex": g.vertex_id(v),
                        "pairs": rep
                            .pairs
                            .iter()
                            .map(|(m, n)| json!([m.to_string(), n.to_string()]))
                            .collect::<Vec<_>>(),
                        "exceptional_sinks": rep
                            .exceptional_sinks
                            .iter()
                            .map(|&u| g.vertex_id(u))
                            .collect::<Vec<_>>(),
                        "reach_bound": rep.reach_bound,
                        "identity_holds": rep.identity_holds,
                        "images_real": rep.images_real,
                        "sink_reading": "every path from the vertex to the sink is cycle-free",
                    }))
                    .unwrap()
                );
            } else {
                println!("vertex {} = Σ μ·μ* over:", g.vertex_id(v));
                for (m, _) in &rep.pairs {
                    println!("  {m}");
                }
                println!(
                    "exceptional sinks (every path cycle-free): [{}], reach bound {}",
                    rep.exceptional_sinks
                        .iter()
                        .map(|&u| g.vertex_id(u))
                        .collect::<Vec<_>>()
                        .join(", "),
                    rep.reach_bound
                );
                println!("identity holds: {}", rep.identity_holds);
                println!("images real: {}", rep.images_real);
            }
            Ok(0)
        }
        Command::Dom { expr } => {
            let ctx = Context::new(cli)?;
            let q = ctx.element(&read_expr(expr)?)?;
            let l = dom_degree(&ctx.cfg, &q)?;
            if ctx.json {
                println!("{}", json!({ "dom_degree": l }));
            } else {
                println!("{l}");
            }
            Ok(0)
        }
        Command::Shrink { expr } => {
            let ctx = Context::new(cli)?;
            let r = ctx.element(&read_expr(expr)?)?;
            let w = shrink_to_quiver(&ctx.cfg, &r)?;
            if ctx.json {
                println!(
                    "{}",
                    json!({
                        "path": w.path.to_string(),
                        "image": render::quiver_to_text(&w.image),
                    })
                );
            } else {
                println!("path: {}", w.path);
                println!("image: {}", render::quiver_to_text(&w.image));
            }
            Ok(0)
        }
        Command::Dense { first, second } => {
            let ctx = Context::new(cli)?;
            let q1 = ctx.element(&read_expr(first)?)?;
            let q2 = ctx.element(&read_expr(second)?)?;
            let w = common_shrink(&ctx.cfg, &q1, &q2)?;
            if ctx.json {
                println!(
                    "{}",
                    json!({
                        "path": w.path.to_string(),
                        "first_image": render::quiver_to_text(&w.first_image),
                        "second_image": render::element_to_text(&w.second_image),
                    })
                );
            } else {
                println!("path: {}", w.path);
                println!("first image: {}", render::quiver_to_text(&w.first_image));
                println!("second image: {}", render::element_to_text(&w.second_image));
            }
            Ok(0)
        }
        Command::Schreier { generators, bound } => {
            let ctx = Context::new(cli)?;
            let table = ctx.table(generators, bound.bound)?;
            let basis = table.schreier_basis_capped();
            if ctx.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "levels": basis
                            .levels()
                            .iter()
                            .map(|l| l.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                        "complete": basis.is_complete(),
                        "codimension": table.codimension().to_string(),
                    }))
                    .unwrap()
                );
            } else {
                for (n, level) in basis.levels().iter().enumerate() {
                    if !level.is_empty() {
                        println!(
                            "level {n}: {}",
                            level
                                .iter()
                                .map(|p| p.to_string())
                                .collect::<Vec<_>>()
                                .join(", ")
                        );
                    }
                }
                println!("complete: {}", basis.is_complete());
                println!("codimension: {}", table.codimension());
            }
            if basis.is_complete() {
                Ok(0)
            } else {
                eprintln!("warning: enumeration capped at degree {}", table.bound());
                Ok(2)
            }
        }
        Command::Rank { generators, bound } => {
            let ctx = Context::new(cli)?;
            let table = ctx.table(generators, bound.bound)?;
            let sl = if ctx.graph.vertex_count() == 1 {
                table.schreier_lewin_check().ok()
            } else {
                None
            };
            if ctx.json {
                println!(
                    "{}",
                    json!({
                        "rank": table.rank(),
                        "codimension": table.codimension().to_string(),
                        "schreier_lewin": sl,
                    })
                );
            } else {
                println!("rank: {}", table.rank());
                println!("codimension: {}", table.codimension());
                if let Some(ok) = sl {
                    println!("schreier-lewin (rank = codim·(n−1)+1): {ok}");
                }
            }
            Ok(0)
        }
        Command::Open {
            generators,
            l_max,
            bound,
        } => {
            let ctx = Context::new(cli)?;
            let table = ctx.table(generators, bound.bound)?;
            let report = table.open_adic(*l_max);
            if ctx.json {
                let value = match report {
                    OpenAdicReport::OpenAt(l) => json!({ "open_at": l }),
                    OpenAdicReport::NotWithin(l) => json!({ "not_within": l }),
                };
                println!("{value}");
            } else {
                println!("{report}");
            }
            match report {
                OpenAdicReport::OpenAt(_) => Ok(0),
                OpenAdicReport::NotWithin(_) => Ok(2),
            }
        }
        Command::TwoSided { generators, bound } => {
            let ctx = Context::new(cli)?;
            let table = ctx.table(generators, bound.bound)?;
            let result = table.is_two_sided();
            if ctx.json {
                println!("{}", json!({ "two_sided": result }));
            } else {
                println!("{result}");
            }
            Ok(0)
        }
        Command::Express {
            expr,
            generators,
            bound,
        } => {
            let ctx = Context::new(cli)?;
            let x = ctx.quiver(expr)?;
            let table = ctx.table(generators, bound.bound)?;
            let gens = table.free_generators();
            let coeffs = table.express_in_free_basis(&x, &gens)?;
            if ctx.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!(coeffs
                        .iter()
                        .map(|(i, c)| json!({
                            "generator": render::quiver_to_text(&gens.get(*i).element),
                            "coefficient": render::quiver_to_text(c),
                        }))
                        .collect::<Vec<_>>()))
                    .unwrap()
                );
            } else {
                for (i, c) in &coeffs {
                    println!(
                        "u = {}  ·  ({})",
                        render::quiver_to_text(&gens.get(*i).element),
                        render::quiver_to_text(c)
                    );
                }
            }
            Ok(0)
        }
        Command::Dual { basis } => {
            let ctx = Context::new(cli)?;
            let elements = read_list(basis)?
                .iter()
                .map(|s| ctx.quiver(s))
                .collect::<Result<Vec<_>>>()?;
            let sys = dual_system(&ctx.cfg, elements)?;
            if ctx.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "basis": sys.basis.iter().map(render::quiver_to_text).collect::<Vec<_>>(),
                        "duals": sys.duals.iter().map(render::element_to_text).collect::<Vec<_>>(),
                        "delta_identities": sys.delta_identities,
                        "completeness_identity": sys.completeness_identity,
                    }))
                    .unwrap()
                );
            } else {
                for (s, d) in sys.basis.iter().zip(&sys.duals) {
                    println!(
                        "s = {}  s* = {}",
                        render::quiver_to_text(s),
                        render::element_to_text(d)
                    );
                }
                println!("delta identities: {}", sys.delta_identities);
                println!("completeness: {}", sys.completeness_identity);
            }
            Ok(0)
        }
        Command::Codim1 { generators, bound } => {
            let ctx = Context::new(cli)?;
            let table = ctx.table(generators, bound.bound)?;
            let rep = codim1_presentation(&table)?;
            if ctx.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "constants": rep.constants.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
                        "generators": rep
                            .generators
                            .iter()
                            .map(render::quiver_to_text)
                            .collect::<Vec<_>>(),
                    }))
                    .unwrap()
                );
            } else {
                for (k, r) in rep.constants.iter().zip(&rep.generators) {
                    println!("k = {k}  r = {}", render::quiver_to_text(r));
                }
            }
            Ok(0)
        }
        Command::ModuleType {
            codim1,
            lm,
            family,
            n,
        } => {
            let input = if *codim1 {
                ModuleTypeInput::Codim1 { n: *n }
            } else if let Some(lm) = lm {
                ModuleTypeInput::MatrixPoint {
                    n: *n,
                    l: lm[0],
                    m: lm[1],
                }
            } else if let Some(family) = family {
                let pairs = family
                    .split([';', ' '])
                    .filter(|s| !s.is_empty())
                    .map(|pair| {
                        let (l, m) = pair
                            .split_once(',')
                            .ok_or_else(|| Error::input(format!("malformed pair `{pair}`")))?;
                        Ok((
                            l.trim()
                                .parse()
                                .map_err(|_| Error::input(format!("malformed pair `{pair}`")))?,
                            m.trim()
                                .parse()
                                .map_err(|_| Error::input(format!("malformed pair `{pair}`")))?,
                        ))
                    })
                    .collect::<Result<Vec<(u64, u64)>>>()?;
                ModuleTypeInput::Family { n: *n, pairs }
            } else {
                return Err(Error::input(
                    "choose one of --codim1, --lm L M, or --family PAIRS",
                ));
            };
            let report = module_type(input)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "module_type": report.module_type,
                        "ibn": report.ibn,
                        "k0": match report.k0 {
                            K0Report::InfiniteCyclic => json!("infinite cyclic"),
                            K0Report::CyclicOfOrder(d) => json!({ "cyclic_of_order": d }),
                        },
                    })
                );
            } else {
                match report.module_type {
                    Some((m, n)) => println!("({m}, {n})"),
                    None => println!("IBN"),
                }
                match report.k0 {
                    K0Report::InfiniteCyclic => println!("K0: infinite cyclic"),
                    K0Report::CyclicOfOrder(d) => println!("K0: cyclic of order {d}"),
                }
            }
            Ok(0)
        }
        Command::Extract { expr, slack } => {
            let ctx = Context::new(cli)?;
            let a = ctx.quiver(&read_expr(expr)?)?;
            let w = scalar_extraction(&ctx.cfg, &a, *slack)?;
            if ctx.json {
                println!(
                    "{}",
                    json!({
                        "left": w.left.to_string(),
                        "right": w.right.to_string(),
                        "scalar": w.scalar.to_string(),
                    })
                );
            } else {
                println!("left: {}", w.left);
                println!("right: {}", w.right);
                println!("scalar: {}", w.scalar);
            }
            Ok(0)
        }
        Command::Gabriel { generators, bound } => {
            let ctx = Context::new(cli)?;
            let gens = read_list(generators)?
                .iter()
                .map(|s| ctx.quiver(s))
                .collect::<Result<Vec<_>>>()?;
            let pres = RightIdealPresentation::new(&ctx.graph, ctx.field, gens)?;
            match gabriel_membership(&ctx.cfg, &pres, *bound)? {
                Some(cert) => {
                    print_certificate(&cert, ctx.json);
                    Ok(0)
                }
                None => {
                    if ctx.json {
                        println!("{}", json!({ "unknown_within_bound": bound }));
                    } else {
                        println!("unknown within bound {bound}");
                    }
                    Ok(2)
                }
            }
        }
    }
}
