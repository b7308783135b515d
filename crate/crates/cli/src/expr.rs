//! Graph expressions: atoms `K<n>`, `C<n>`, `P<n>`, `K<m>x<n>` and
//! `file:<path>`, combined left to right with clique-sum operators.
//!
//! ```text
//! expr := atom (op atom)*
//! op   := '#' ('0' | '1' | '2' | '3' | 'h') glue?
//! glue := '[' INT '=' INT (',' INT '=' INT)* ']'
//! ```
//!
//! `#k` glues a `(k+1)`-clique; the pairs name a vertex of the left operand
//! (in the labeling of everything to its left) and a vertex of the right
//! atom. `#0` without a glue map identifies the highest left vertex with
//! vertex 0 on the right; `#1`..`#3` require a map. `#h` glues along any
//! set of vertices inducing the same subgraph on both sides.

use std::path::Path;

use cutlab::graph::CliqueSumSpec;
use cutlab::Graph;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at position {pos}: {reason}")]
pub struct ExprError {
    pub pos: usize,
    pub reason: String,
}

/// One operand as it was built, before gluing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Operand {
    pub text: String,
    pub n_vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluated {
    pub graph: Graph,
    pub operands: Vec<Operand>,
}

type Glue = Vec<(usize, usize)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Clique(usize),
    Subgraph,
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, reason: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError {
            pos,
            reason: reason.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<usize, ExprError> {
        self.skip_ws();
        let digits = self.rest().len()
            - self
                .rest()
                .trim_start_matches(|c: char| c.is_ascii_digit())
                .len();
        if digits == 0 {
            return self.err(self.pos, "expected an integer");
        }
        let start = self.pos;
        self.pos += digits;
        self.text[start..self.pos]
            .parse()
            .or_else(|_| self.err(start, "integer too large"))
    }

    fn atom(&mut self, base: &Path) -> Result<(Graph, String), ExprError> {
        self.skip_ws();
        let start = self.pos;
        if let Some(path) = self.rest().strip_prefix("file:") {
            let len = path.find(char::is_whitespace).unwrap_or(path.len());
            let name = &path[..len];
            self.pos += 5 + len;
            if name.is_empty() {
                return self.err(start, "file: needs a path");
            }
            let full = base.join(name);
            let text = std::fs::read_to_string(&full)
                .or_else(|e| self.err(start, format!("cannot read {}: {e}", full.display())))?;
            let g = Graph::parse_edge_list(&text).or_else(|e| self.err(start, e.to_string()))?;
            return Ok((g, format!("file:{name}")));
        }
        let Some(family) = self.rest().chars().next() else {
            return self.err(start, "expected a graph atom");
        };
        self.pos += 1;
        let graph = match family {
            'K' => {
                let m = self.int()?;
                if self.rest().starts_with('x') {
                    self.pos += 1;
                    let n = self.int()?;
                    Graph::complete_bipartite(m, n)
                } else {
                    Graph::complete(m)
                }
            }
            'C' => Graph::cycle(self.int()?),
            'P' => Graph::path(self.int()?),
            other => return self.err(start, format!("unknown graph family {other:?}")),
        };
        let g = graph.or_else(|e| self.err(start, e.to_string()))?;
        Ok((g, self.text[start..self.pos].to_string()))
    }

    fn op(&mut self) -> Result<Option<(Op, Option<Glue>, usize)>, ExprError> {
        self.skip_ws();
        let start = self.pos;
        if !self.eat('#') {
            return Ok(None);
        }
        let op = match self.rest().chars().next() {
            Some(c @ '0'..='3') => Op::Clique(c as usize - '0' as usize),
            Some('h') => Op::Subgraph,
            _ => return self.err(self.pos, "expected 0, 1, 2, 3 or h after '#'"),
        };
        self.pos += 1;
        let glue = if self.eat('[') {
            let mut pairs = Vec::new();
            loop {
                let u = self.int()?;
                if !self.eat('=') {
                    return self.err(self.pos, "expected '=' in glue pair");
                }
                let v = self.int()?;
                pairs.push((u, v));
                if self.eat(']') {
                    break;
                }
                if !self.eat(',') {
                    return self.err(self.pos, "expected ',' or ']' in glue map");
                }
            }
            Some(pairs)
        } else {
            None
        };
        Ok(Some((op, glue, start)))
    }
}

/// Parses and evaluates an expression; `file:` paths are relative to `base`.
pub fn evaluate(text: &str, base: &Path) -> Result<Evaluated, ExprError> {
    let mut p = Parser { text, pos: 0 };
    let (mut graph, name) = p.atom(base)?;
    let mut operands = vec![operand(&graph, name)];
    while let Some((op, glue, at)) = p.op()? {
        let (right, name) = p.atom(base)?;
        operands.push(operand(&right, name));
        let sum = match (op, glue) {
            (Op::Clique(0), None) => Graph::zero_sum(&graph, &right),
            (Op::Clique(k), Some(glue)) => CliqueSumSpec::new(k, glue)
                .and_then(|spec| Graph::clique_sum(&graph, &right, &spec))
                .map(|s| s.graph),
            (Op::Clique(k), None) => {
                return p.err(at, format!("#{k} needs a glue map of {} pairs", k + 1))
            }
            (Op::Subgraph, Some(glue)) => Graph::h_sum(&graph, &right, &glue).map(|s| s.graph),
            (Op::Subgraph, None) => return p.err(at, "#h needs a glue map"),
        };
        graph = sum.or_else(|e| p.err(at, e.to_string()))?;
    }
    p.skip_ws();
    if !p.rest().is_empty() {
        return p.err(p.pos, "unexpected trailing input");
    }
    Ok(Evaluated { graph, operands })
}

pub fn parse_graph_expression(text: &str) -> Result<Graph, ExprError> {
    evaluate(text, Path::new(".")).map(|e| e.graph)
}

fn operand(g: &Graph, text: String) -> Operand {
    Operand {
        text,
        n_vertices: g.n_vertices(),
        edges: g.edges().to_vec(),
    }
}
