use serde::{Deserialize, Serialize};

use super::{bits, Graph};

/// A cycle of a graph, stored with its vertices in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    /// Edge coordinates of the cycle, sorted.
    pub edge_indices: Vec<usize>,
    /// No chord in the host graph.
    pub induced: bool,
}

impl Cycle {
    fn from_vertices(g: &Graph, vertices: Vec<usize>) -> Self {
        let n = vertices.len();
        let mut edge_indices: Vec<usize> = (0..n)
            .map(|i| {
                g.edge_index(vertices[i], vertices[(i + 1) % n])
                    .expect("consecutive cycle vertices are adjacent")
            })
            .collect();
        edge_indices.sort_unstable();
        let mask = vertices.iter().fold(0u64, |m, &v| m | 1 << v);
        let induced_edges: usize = vertices
            .iter()
            .map(|&v| (g.neighbor_mask(v) & mask).count_ones() as usize)
            .sum::<usize>()
            / 2;
        Cycle {
            vertices,
            edge_indices,
            induced: induced_edges == n,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Rotates/reflects to start at the smallest vertex with the smaller
    /// neighbor second.
    fn canonicalize(mut vertices: Vec<usize>) -> Vec<usize> {
        let n = vertices.len();
        let pos = (0..n).min_by_key(|&i| vertices[i]).unwrap_or(0);
        vertices.rotate_left(pos);
        if n > 2 && vertices[n - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        vertices
    }
}

impl Graph {
    /// All chordless cycles, each once, in canonical orientation.
    pub fn induced_cycles(&self) -> Vec<Cycle> {
        let mut out = Vec::new();
        for s in 0..self.n_vertices() {
            let allowed = !((1u64 << s) | ((1u64 << s) - 1));
            for v1 in bits(self.neighbor_mask(s) & allowed) {
                let mut path = vec![s, v1];
                self.extend_chordless(s, allowed, &mut path, &mut out);
            }
        }
        out
    }

    fn extend_chordless(
        &self,
        s: usize,
        allowed: u64,
        path: &mut Vec<usize>,
        out: &mut Vec<Cycle>,
    ) {
        let last = *path.last().unwrap();
        let on_path = path.iter().fold(0u64, |m, &v| m | 1 << v);
        // vertices adjacent to interior path vertices would create chords
        let interior = path[1..path.len() - 1]
            .iter()
            .fold(0u64, |m, &v| m | self.neighbor_mask(v));
        let candidates = self.neighbor_mask(last) & allowed & !on_path & !interior;
        for w in bits(candidates) {
            if self.has_edge(w, s) {
                if path.len() >= 2 && path[1] < w {
                    let mut vertices = path.clone();
                    vertices.push(w);
                    out.push(Cycle::from_vertices(self, vertices));
                }
            } else {
                path.push(w);
                self.extend_chordless(s, allowed, path, out);
                path.pop();
            }
        }
    }

    /// Fundamental cycles of a BFS spanning forest rooted in increasing vertex
    /// order.
    pub fn cycle_space_basis(&self) -> Vec<Cycle> {
        let order: Vec<usize> = (0..self.n_vertices()).collect();
        self.cycle_space_basis_from(&order)
    }

    /// Fundamental cycles of the BFS spanning forest that visits roots and
    /// neighbors in the priority given by `order` (a permutation of the
    /// vertices). Different orders give different bases of the same space.
    pub fn cycle_space_basis_from(&self, order: &[usize]) -> Vec<Cycle> {
        let n = self.n_vertices();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v < n {
                rank[v] = i;
            }
        }
        let by_rank = |mask: u64| {
            let mut vs: Vec<usize> = bits(mask).collect();
            vs.sort_by_key(|&v| (rank[v], v));
            vs
        };
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut visited = 0u64;
        let mut tree_edges = vec![false; self.n_edges()];
        for &root in order.iter().filter(|&&v| v < n) {
            if visited >> root & 1 == 1 {
                continue;
            }
            visited |= 1 << root;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in by_rank(self.neighbor_mask(u) & !visited) {
                    visited |= 1 << w;
                    parent[w] = Some(u);
                    depth[w] = depth[u] + 1;
                    tree_edges[self.edge_index(u, w).unwrap()] = true;
                    queue.push_back(w);
                }
            }
        }
        let mut out = Vec::new();
        for (e, &(u, v)) in self.edges().iter().enumerate() {
            if tree_edges[e] {
                continue;
            }
            let (mut a, mut b) = (u, v);
            let (mut left, mut right) = (vec![a], vec![b]);
            while a != b {
                if depth[a] >= depth[b] {
                    a = parent[a].unwrap();
                    left.push(a);
                } else {
                    b = parent[b].unwrap();
                    right.push(b);
                }
            }
            right.pop();
            right.reverse();
            left.extend(right);
            out.push(Cycle::from_vertices(self, Cycle::canonicalize(left)));
        }
        out
    }
}
