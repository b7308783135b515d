//! Structural predicates: bipartiteness, chordality, bridges, blocks and
//! ring-graph recognition.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralPredicates {
    pub bipartite: bool,
    pub chordal: bool,
    pub bridgeless: bool,
    pub ring_graph: bool,
    pub connected: bool,
    /// `None` for forests.
    pub max_induced_cycle_length: Option<usize>,
}

impl Graph {
    pub fn structural_predicates(&self) -> StructuralPredicates {
        let cycles = self.induced_cycles();
        let max_len = cycles.iter().map(|c| c.len()).max();
        StructuralPredicates {
            bipartite: self.is_bipartite(),
            chordal: max_len.is_none_or(|m| m == 3),
            bridgeless: self.bridges().is_empty(),
            ring_graph: self.is_ring_graph(),
            connected: self.is_connected(),
            max_induced_cycle_length: max_len,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n_vertices();
        let mut color = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_chordal(&self) -> bool {
        self.induced_cycles().iter().all(|c| c.len() == 3)
    }

    /// Edge coordinates lying on no cycle.
    pub fn bridges(&self) -> Vec<usize> {
        self.blocks()
            .into_iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .collect()
    }

    /// Biconnected components as sorted lists of edge coordinates.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.n_vertices();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut edge_stack = Vec::new();
        let mut blocks = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, parent edge, remaining neighbors)
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut stack: Vec<(usize, Option<usize>, Vec<usize>)> =
                vec![(root, None, self.neighbors(root).collect())];
            while let Some((u, parent_edge, pending)) = stack.last_mut() {
                let u = *u;
                let parent_edge = *parent_edge;
                if let Some(w) = pending.pop() {
                    let e = self.edge_index(u, w).unwrap();
                    if Some(e) == parent_edge {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push(e);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, Some(e), self.neighbors(w).collect()));
                    } else if disc[w] < disc[u] {
                        edge_stack.push(e);
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            let e = parent_edge.unwrap();
                            let mut block = Vec::new();
                            while let Some(f) = edge_stack.pop() {
                                block.push(f);
                                if f == e {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks.sort();
        blocks
    }

    /// Every block is a bridge, or splits recursively into cycles glued along
    /// single shared edges.
    pub fn is_ring_graph(&self) -> bool {
        if self.n_edges() > 64 {
            // edge sets are u64 masks; only plain cycles are recognized beyond that
            return self
                .blocks()
                .iter()
                .all(|b| b.len() == 1 || self.block_is_cycle(b));
        }
        let mut memo = HashMap::new();
        self.blocks().iter().all(|b| {
            b.len() == 1 || self.ring_block(b.iter().fold(0u64, |m, &e| m | 1 << e), &mut memo)
        })
    }

    fn block_is_cycle(&self, block: &[usize]) -> bool {
        let mut deg = vec![0usize; self.n_vertices()];
        for &e in block {
            let (a, b) = self.edges()[e];
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.iter().all(|&d| d == 0 || d == 2)
    }

    fn edge_set_vertices(&self, edges: u64) -> u64 {
        bits(edges).fold(0u64, |m, e| {
            let (u, v) = self.edges()[e];
            m | 1 << u | 1 << v
        })
    }

    /// `edges` is a 2-connected edge set (as a mask over edge coordinates).
    fn ring_block(&self, edges: u64, memo: &mut HashMap<u64, bool>) -> bool {
        if let Some(&r) = memo.get(&edges) {
            return r;
        }
        let verts = self.edge_set_vertices(edges);
        let is_cycle = bits(verts).all(|v| {
            bits(edges)
                .filter(|&e| {
                    let (a, b) = self.edges()[e];
                    a == v || b == v
                })
                .count()
                == 2
        });
        let result = is_cycle || self.split_at_some_edge(edges, verts, memo);
        memo.insert(edges, result);
        result
    }

    fn split_at_some_edge(&self, edges: u64, verts: u64, memo: &mut HashMap<u64, bool>) -> bool {
        for e in bits(edges) {
            let (u, v) = self.edges()[e];
            let rest_verts = verts & !(1 << u) & !(1 << v);
            // components of the block after deleting u and v
            let mut comps: Vec<u64> = Vec::new();
            let mut seen = 0u64;
            for s in bits(rest_verts) {
                if seen >> s & 1 == 1 {
                    continue;
                }
                let comp = self.reach_within_edges(1 << s, rest_verts, edges);
                seen |= comp;
                comps.push(comp);
            }
            if comps.len() < 2 || comps.len() > 16 {
                continue;
            }
            // one side always holds component 0
            let k = comps.len();
            for pick in 1u32..(1 << (k - 1)) {
                let side: u64 = (0..k)
                    .filter(|&i| i == 0 || pick >> (i - 1) & 1 == 0)
                    .fold(0, |m, i| m | comps[i]);
                let left = self.edges_touching(edges, side) | 1 << e;
                let right = (edges & !left) | 1 << e;
                if self.ring_block(left, memo) && self.ring_block(right, memo) {
                    return true;
                }
            }
        }
        false
    }

    fn reach_within_edges(&self, from: u64, within: u64, edges: u64) -> u64 {
        let mut seen = from;
        loop {
            let mut grown = seen;
            for e in bits(edges) {
                let (a, b) = self.edges()[e];
                if seen >> a & 1 == 1 && within >> b & 1 == 1 {
                    grown |= 1 << b;
                }
                if seen >> b & 1 == 1 && within >> a & 1 == 1 {
                    grown |= 1 << a;
                }
            }
            if grown == seen {
                return seen;
            }
            seen = grown;
        }
    }

    fn edges_touching(&self, edges: u64, verts: u64) -> u64 {
        bits(edges)
            .filter(|&e| {
                let (a, b) = self.edges()[e];
                verts >> a & 1 == 1 || verts >> b & 1 == 1
            })
            .fold(0, |m, e| m | 1 << e)
    }
}
