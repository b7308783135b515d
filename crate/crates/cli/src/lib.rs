//! Command-line front end for `cutlab`.

pub mod expr;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use cutlab::geometry::{facet_system, in_cone, in_group, LatticePoint};
use cutlab::monoid::{
    canonical_generators, decompose, is_gorenstein_normal, normality_probe, SeminormalityWitness,
};
use cutlab::regularity::{
    bounds_check, classify_small, default_probe_bound, regularity_with, ClassifyOptions,
};
use cutlab::Graph;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

pub use expr::{evaluate, parse_graph_expression, ExprError};

#[derive(Debug, Parser)]
#[command(
    name = "cutlab",
    version,
    about = "Exact computations with cut polytopes of graphs"
)]
pub struct Cli {
    /// Pretty-print JSON and append human-readable tables.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Print the labeling of every operand of the graph expression to stderr.
    #[arg(long, global = true)]
    pub show_labels: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Regularity, predicates, Gorenstein status and canonical generators.
    Analyze {
        graph: String,
        /// Degree bound for canonical generators.
        #[arg(long, env = "CUTLAB_DEG_BOUND", default_value_t = 4)]
        deg_bound: i64,
    },
    /// Facet system of the cut cone.
    Facets { graph: String },
    /// Group, cone and monoid membership of a point.
    Member {
        graph: String,
        /// Comma-separated `x1,...,xm,alpha`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Test the interior of the cone.
        #[arg(long)]
        strict: bool,
        /// Also search for a decomposition into cut vectors.
        #[arg(long)]
        decompose: bool,
    },
    /// Emit a non-seminormality certificate.
    Witness {
        #[arg(value_parser = ["k5"])]
        which: String,
    },
    /// Check a certificate produced by `witness`.
    VerifyWitness { file: PathBuf },
    /// Regularity of every connected graph up to a number of edges.
    Classify {
        #[arg(long, default_value_t = 7)]
        max_edges: usize,
        /// One graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Worker threads (0: all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Bounded normality probe.
    Normality {
        graph: String,
        #[arg(long)]
        bound: Option<i64>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Expr(#[from] ExprError),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Math(#[from] cutlab::Error),
    #[error("{0}")]
    Rejected(String),
}

impl CliError {
    /// 1 for mathematical rejections, 2 for parse and I/O errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Expr(_) | CliError::Io(_) => 2,
            CliError::Math(cutlab::Error::Parse { .. }) => 2,
            CliError::Math(_) | CliError::Rejected(_) => 1,
        }
    }
}

/// Everything a command writes, with its exit code.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Ctx {
    pretty: bool,
    show_labels: bool,
    out: Outcome,
}

impl Ctx {
    fn emit(&mut self, value: &impl Serialize) {
        let text = if self.pretty {
            serde_json::to_string_pretty(value)
        } else {
            serde_json::to_string(value)
        }
        .expect("serializable output");
        self.out.stdout.push_str(&text);
        self.out.stdout.push('\n');
    }

    fn table(&mut self, text: &str) {
        if self.pretty {
            self.out.stdout.push_str(text);
        }
    }

    /// A graph argument: an expression, or the path of an edge-list file.
    fn graph(&mut self, arg: &str) -> Result<Graph, CliError> {
        let path = Path::new(arg);
        let evaluated = if !arg.starts_with("file:") && path.is_file() {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let graph = Graph::parse_edge_list(&text)?;
            expr::Evaluated {
                operands: vec![expr::Operand {
                    text: arg.to_string(),
                    n_vertices: graph.n_vertices(),
                    edges: graph.edges().to_vec(),
                }],
                graph,
            }
        } else {
            evaluate(arg, Path::new("."))?
        };
        if self.show_labels {
            let labels = json!({
                "operands": evaluated.operands,
                "result": {
                    "n_vertices": evaluated.graph.n_vertices(),
                    "edges": evaluated.graph.edges().iter().enumerate()
                        .map(|(i, e)| json!({"index": i, "edge": e})).collect::<Vec<_>>(),
                },
            });
            let _ = writeln!(self.out.stderr, "{labels}");
        }
        Ok(evaluated.graph)
    }
}

/// Runs a parsed command line.
pub fn run(cli: Cli) -> Outcome {
    let mut ctx = Ctx {
        pretty: cli.pretty,
        show_labels: cli.show_labels,
        out: Outcome::default(),
    };
    if let Err(e) = dispatch(&mut ctx, cli.command) {
        ctx.out.code = e.exit_code();
        let _ = writeln!(ctx.out.stderr, "error: {e}");
        if let CliError::Math(cutlab::Error::K5Minor { branch_sets }) = &e {
            ctx.emit(&json!({"error": "k5_minor", "branch_sets": branch_sets}));
        }
    }
    ctx.out
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            }
        }
    }
}

fn dispatch(ctx: &mut Ctx, command: Command) -> Result<(), CliError> {
    match command {
        Command::Analyze { graph, deg_bound } => analyze(ctx, &graph, deg_bound),
        Command::Facets { graph } => {
            let g = ctx.graph(&graph)?;
            let fs = facet_system(&g)?;
            ctx.emit(&*fs);
            Ok(())
        }
        Command::Member {
            graph,
            point,
            strict,
            decompose: want_decomposition,
        } => {
            let g = ctx.graph(&graph)?;
            let p: LatticePoint = point.parse().map_err(|e| {
                CliError::Expr(ExprError {
                    pos: 0,
                    reason: format!("point: {e}"),
                })
            })?;
            let mut report = json!({
                "point": p.to_string(),
                "in_group": in_group(&g, &p)?,
                "strict": strict,
                "in_cone": in_cone(&g, &p, strict)?,
            });
            if want_decomposition {
                report["decomposition"] = match decompose(&g, &p)? {
                    Some(d) => json!({"size": d.parts.len(), "parts": d.parts}),
                    None => Value::Null,
                };
            }
            ctx.emit(&report);
            Ok(())
        }
        Command::Witness { .. } => {
            ctx.emit(&SeminormalityWitness::k5());
            Ok(())
        }
        Command::VerifyWitness { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
            let w: SeminormalityWitness = serde_json::from_str(&text)
                .map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
            match w.verify() {
                Ok(()) => {
                    ctx.emit(&json!({"valid": true}));
                    Ok(())
                }
                Err(cutlab::Error::MalformedCertificate { leg, reason }) => {
                    ctx.emit(&json!({"valid": false, "leg": leg.to_string(), "reason": reason}));
                    Err(CliError::Rejected(format!("leg ({leg}) failed: {reason}")))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Classify {
            max_edges,
            dedup,
            jobs,
        } => {
            let c = classify_small(ClassifyOptions {
                max_edges,
                dedup,
                jobs,
            })?;
            for r in &c.records {
                let line = serde_json::to_string(r).expect("serializable record");
                ctx.out.stdout.push_str(&line);
                ctx.out.stdout.push('\n');
            }
            let summary: Vec<Value> = c
                .summary()
                .into_iter()
                .map(|(r, n)| json!({"regularity": r, "graphs": n}))
                .collect();
            let line = json!({
                "summary": summary,
                "graphs": c.records.len(),
                "mismatches": c.mismatches().len(),
                "bound_violations": c.bound_violations().len(),
                "normality_violations": c.normality_violations().len(),
                "excluded": c.excluded.len(),
            });
            ctx.out.stdout.push_str(&line.to_string());
            ctx.out.stdout.push('\n');
            let mut table = String::from("regularity  graphs\n");
            for (r, n) in c.summary() {
                let label = r.map_or("not normal".to_string(), |r| r.to_string());
                let _ = writeln!(table, "{label:>10}  {n:>6}");
            }
            ctx.table(&table);
            if c.mismatches().is_empty() {
                Ok(())
            } else {
                Err(CliError::Rejected(format!(
                    "{} graphs contradict the classification",
                    c.mismatches().len()
                )))
            }
        }
        Command::Normality { graph, bound } => {
            let g = ctx.graph(&graph)?;
            let bound = bound.unwrap_or(g.n_edges() as i64);
            let v = normality_probe(&g, bound)?;
            ctx.emit(&v);
            Ok(())
        }
    }
}

fn analyze(ctx: &mut Ctx, arg: &str, deg_bound: i64) -> Result<(), CliError> {
    let g = ctx.graph(arg)?;
    let predicates = g.structural_predicates();
    let gorenstein = is_gorenstein_normal(&g);
    let verdict = normality_probe(&g, default_probe_bound(&g).max(deg_bound))?;
    let report = regularity_with(&g, verdict.clone())?;
    let generators = canonical_generators(&g, deg_bound, &verdict)?;
    let value = json!({
        "graph": g,
        "predicates": predicates,
        "has_triangle": g.has_triangle(),
        "regularity": report,
        "bounds": bounds_check(&g, report.regularity),
        "gorenstein": gorenstein,
        "canonical_generators": {
            "degree_bound": generators.degree_bound,
            "complete": generators.complete,
            "generators": generators.generators.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        },
    });
    ctx.emit(&value);
    let mut table = String::new();
    let _ = writeln!(table, "edges                {}", g.n_edges());
    let _ = writeln!(table, "min interior degree  {}", report.min_interior_degree);
    let _ = writeln!(table, "regularity           {}", report.regularity);
    let _ = writeln!(table, "gorenstein           {}", gorenstein.gorenstein);
    let _ = writeln!(
        table,
        "generators ({})      {}",
        generators.generators.len(),
        generators
            .generators
            .iter()
            .map(|p| format!("({p})"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    ctx.table(&table);
    Ok(())
}
