//! Simple undirected graphs with a fixed edge coordinate order.
//!
//! Edges are stored as pairs `(u, v)` with `u < v`, sorted lexicographically.
//! The position of an edge in that list is its coordinate in every vector
//! over `E` used elsewhere in the crate (cut vectors, lattice points, facet
//! rows). For `K_n` this reproduces the usual `01, 02, ..., (n-2)(n-1)` order.

mod cycles;
mod enumerate;
mod minor;
mod predicates;
mod sum;

pub use cycles::Cycle;
pub use enumerate::{canonical_form, enumerate_connected_graphs, is_isomorphic};
pub use minor::MinorPattern;
pub use predicates::StructuralPredicates;
pub use sum::{CliqueSumSpec, GraphSum};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n_vertices, raw.edges)
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph {
            n_vertices: g.n_vertices,
            edges: g.edges,
        }
    }
}

/// Named graph families with a deterministic labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `K_n`.
    Complete(usize),
    /// `C_n` with edges `v_i v_{i+1}` and `v_{n-1} v_0`.
    Cycle(usize),
    /// `P_n`: a path with `n` edges.
    Path(usize),
    /// `K_{m,n}`: parts `0..m` and `m..m+n`.
    CompleteBipartite(usize, usize),
}

/// Vertex sets are kept in `u64` masks throughout.
pub const MAX_VERTICES: usize = 64;

impl Graph {
    /// Builds a graph, normalizing each pair to `u < v`, dropping duplicates and
    /// sorting the edge list.
    pub fn new<I>(n_vertices: usize, edge_pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n_vertices == 0 {
            return Err(Error::InvalidFamily(
                "a graph needs at least one vertex".into(),
            ));
        }
        if n_vertices > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "{n_vertices} vertices (at most {MAX_VERTICES} supported)"
            )));
        }
        let mut edges = Vec::new();
        for (a, b) in edge_pairs {
            for v in [a, b] {
                if v >= n_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n_vertices,
                    });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![0u64; n_vertices];
        for &(u, v) in &edges {
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
        }
        Ok(Graph {
            n_vertices,
            edges,
            adjacency,
        })
    }

    pub fn family(family: Family) -> Result<Self> {
        match family {
            Family::Complete(n) => {
                if n == 0 {
                    return Err(Error::InvalidFamily("K_0 has no vertices".into()));
                }
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::new(n, pairs)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidFamily(format!(
                        "cycle length {n} (must be at least 3)"
                    )));
                }
                Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Family::Path(n) => Graph::new(n + 1, (0..n).map(|i| (i, i + 1))),
            Family::CompleteBipartite(m, n) => {
                if m == 0 || n == 0 {
                    return Err(Error::InvalidFamily(format!(
                        "K_{{{m},{n}}} needs two nonempty parts"
                    )));
                }
                let pairs = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
                Graph::new(m + n, pairs)
            }
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::family(Family::Complete(n))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::family(Family::Cycle(n))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::family(Family::Path(n))
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Result<Self> {
        Self::family(Family::CompleteBipartite(m, n))
    }

    /// Parses the edge-list text format: one `u v` pair per line, `#` comments
    /// and blank lines ignored, vertex count = max label + 1.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut max_label = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let mut next = || -> Result<usize> {
                let tok = fields.next().ok_or_else(|| Error::Parse {
                    line: lineno + 1,
                    reason: "expected two vertex labels".into(),
                })?;
                tok.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    reason: format!("invalid vertex label {tok:?}"),
                })
            };
            let (u, v) = (next()?, next()?);
            if fields.next().is_some() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    reason: "trailing tokens after edge".into(),
                });
            }
            max_label = Some(max_label.unwrap_or(0).max(u).max(v));
            pairs.push((u, v));
        }
        let n = max_label.map_or(0, |m| m + 1);
        if n == 0 {
            return Err(Error::Parse {
                line: 0,
                reason: "edge list is empty".into(),
            });
        }
        Graph::new(n, pairs)
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<(usize, usize)> {
        self.edges.get(index).copied().ok_or(Error::EdgeOutOfRange {
            index,
            n_edges: self.edges.len(),
        })
    }

    /// Coordinate of the edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n_vertices && v < self.n_vertices && self.adjacency[u] >> v & 1 == 1
    }

    /// Neighbors of `v` as a bit mask.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adjacency[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    /// Vertices incident to at least one edge.
    pub fn non_isolated_mask(&self) -> u64 {
        self.adjacency
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .fold(0, |acc, (v, _)| acc | 1 << v)
    }

    /// True iff some vertex is adjacent to both endpoints of edge `e`.
    pub fn edge_in_triangle(&self, e: usize) -> Result<bool> {
        let (u, v) = self.edge(e)?;
        Ok(self.adjacency[u] & self.adjacency[v] != 0)
    }

    pub fn has_triangle(&self) -> bool {
        (0..self.n_edges()).any(|e| self.edge_in_triangle(e).unwrap_or(false))
    }

    /// Connected components as vertex masks (isolated vertices included).
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n_vertices {
            if seen >> start & 1 == 1 {
                continue;
            }
            let comp = self.reach(1 << start, full_mask(self.n_vertices));
            seen |= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `from` inside the vertex set `within`.
    pub fn reach(&self, from: u64, within: u64) -> u64 {
        let mut seen = from & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adjacency[v] & within;
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True iff the vertex set `mask` induces a complete subgraph.
    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| v < self.n_vertices && self.adjacency[v] & mask == mask & !(1 << v))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n_vertices {
            return Err(Error::DimensionMismatch {
                expected: self.n_vertices,
                found: perm.len(),
            });
        }
        Graph::new(
            self.n_vertices,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bits of a mask, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
