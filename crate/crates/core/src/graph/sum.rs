use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Gluing data for a `k`-clique-sum: `glue` pairs a vertex of the left graph
/// with a vertex of the right graph, `k + 1` pairs in total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSumSpec {
    k: usize,
    glue: Vec<(usize, usize)>,
}

impl CliqueSumSpec {
    pub fn new(k: usize, glue: Vec<(usize, usize)>) -> Result<Self> {
        if k > 3 {
            return Err(Error::InvalidGlue(format!(
                "clique-sum order {k} (must be 0..=3)"
            )));
        }
        if glue.len() != k + 1 {
            return Err(Error::InvalidGlue(format!(
                "a {k}-sum identifies {} vertex pairs, got {}",
                k + 1,
                glue.len()
            )));
        }
        Ok(CliqueSumSpec { k, glue })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn glue(&self) -> &[(usize, usize)] {
        &self.glue
    }
}

/// Result of gluing two graphs. Left vertices keep their labels; `right_map[v]`
/// is the label of right vertex `v` in the sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSum {
    pub graph: Graph,
    pub right_map: Vec<usize>,
}

impl GraphSum {
    /// Coordinate in the sum of each left edge.
    pub fn left_edge_map(&self, left: &Graph) -> Vec<usize> {
        left.edges()
            .iter()
            .map(|&(u, v)| self.graph.edge_index(u, v).expect("left edge survives"))
            .collect()
    }

    /// Coordinate in the sum of each right edge.
    pub fn right_edge_map(&self, right: &Graph) -> Vec<usize> {
        right
            .edges()
            .iter()
            .map(|&(u, v)| {
                self.graph
                    .edge_index(self.right_map[u], self.right_map[v])
                    .expect("right edge survives")
            })
            .collect()
    }
}

impl Graph {
    /// `k`-clique-sum along the cliques named by `spec`.
    pub fn clique_sum(left: &Graph, right: &Graph, spec: &CliqueSumSpec) -> Result<GraphSum> {
        let left_side: Vec<usize> = spec.glue.iter().map(|p| p.0).collect();
        let right_side: Vec<usize> = spec.glue.iter().map(|p| p.1).collect();
        for (g, verts) in [(left, left_side), (right, right_side)] {
            let in_range = verts.iter().all(|&v| v < g.n_vertices());
            let mask = verts
                .iter()
                .filter(|&&v| v < 64)
                .fold(0u64, |m, &v| m | 1 << v);
            if !in_range || mask.count_ones() as usize != spec.k + 1 || !g.is_clique(mask) {
                return Err(Error::NotAClique(verts));
            }
        }
        Graph::h_sum(left, right, &spec.glue)
    }

    /// General `H`-sum: the glued vertex sets must induce the same subgraph on
    /// both sides under the glue map.
    pub fn h_sum(left: &Graph, right: &Graph, glue: &[(usize, usize)]) -> Result<GraphSum> {
        let mut right_map = vec![usize::MAX; right.n_vertices()];
        let mut left_used = vec![false; left.n_vertices()];
        for &(a, b) in glue {
            if a >= left.n_vertices() || b >= right.n_vertices() {
                return Err(Error::InvalidGlue(format!(
                    "pair {a}={b} names a missing vertex"
                )));
            }
            if left_used[a] || right_map[b] != usize::MAX {
                return Err(Error::InvalidGlue(format!("pair {a}={b} reuses a vertex")));
            }
            left_used[a] = true;
            right_map[b] = a;
        }
        for &(a1, b1) in glue {
            for &(a2, b2) in glue {
                if a1 < a2 && left.has_edge(a1, a2) != right.has_edge(b1, b2) {
                    return Err(Error::InvalidGlue(format!(
                        "glued sets induce different subgraphs ({a1},{a2} vs {b1},{b2})"
                    )));
                }
            }
        }
        let mut next = left.n_vertices();
        for slot in right_map.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = next;
            next += 1;
        }
        let edges = left.edges().iter().copied().chain(
            right
                .edges()
                .iter()
                .map(|&(u, v)| (right_map[u], right_map[v])),
        );
        let graph = Graph::new(next, edges)?;
        Ok(GraphSum { graph, right_map })
    }

    /// 0-sum identifying the highest vertex of `left` with vertex 0 of `right`.
    pub fn zero_sum(left: &Graph, right: &Graph) -> Result<Graph> {
        let spec = CliqueSumSpec::new(0, vec![(left.n_vertices() - 1, 0)])?;
        Ok(Graph::clique_sum(left, right, &spec)?.graph)
    }
}
