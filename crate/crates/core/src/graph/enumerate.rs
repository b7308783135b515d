//! Exhaustive generation of small connected graphs.

use std::collections::BTreeSet;

use super::Graph;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_MAX_VERTICES: usize = 10;

/// Canonical relabeling: the lexicographically smallest sorted edge list over
/// all relabelings that list vertices by non-increasing degree. The degree
/// ordering is isomorphism-invariant, so two graphs are isomorphic iff their
/// canonical forms are equal.
///
/// # Panics
///
/// If the graph has more than [`CANONICAL_MAX_VERTICES`] vertices.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n_vertices();
    assert!(
        n <= CANONICAL_MAX_VERTICES,
        "canonical form is brute force; {n} vertices is too many"
    );
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // runs of equal degree may be permuted freely
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &by_degree {
        match classes.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut label = vec![0usize; n];
    permute_classes(g, &classes, 0, 0, &mut label, &mut best);
    Graph::new(n, best.unwrap_or_default()).expect("relabeling preserves validity")
}

fn permute_classes(
    g: &Graph,
    classes: &[Vec<usize>],
    idx: usize,
    offset: usize,
    label: &mut [usize],
    best: &mut Option<Vec<(usize, usize)>>,
) {
    if idx == classes.len() {
        let mut edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (label[u], label[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|b| edges < *b) {
            *best = Some(edges);
        }
        return;
    }
    let mut class = classes[idx].clone();
    heap_permutations(&mut class, &mut |perm| {
        for (i, &v) in perm.iter().enumerate() {
            label[v] = offset + i;
        }
        permute_classes(g, classes, idx + 1, offset + perm.len(), label, best);
    });
}

fn heap_permutations(items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    fn go(k: usize, items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            visit(items);
            return;
        }
        go(k - 1, items, visit);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
            go(k - 1, items, visit);
        }
    }
    let k = items.len();
    go(k, items, visit);
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n_vertices() == b.n_vertices()
        && a.n_edges() == b.n_edges()
        && canonical_form(a) == canonical_form(b)
}

/// Every connected graph with `1..=max_edges` edges and no isolated vertices.
///
/// Graphs with `m` edges are grown from the canonical representatives with
/// `m - 1` edges by adding one edge (possibly to a new vertex); every connected
/// graph arises this way. With `dedup` each isomorphism class is emitted once,
/// in canonical labeling. Without it, all distinct labeled extensions are
/// emitted, so a class may appear several times.
pub fn enumerate_connected_graphs(max_edges: usize, dedup: bool) -> Vec<Graph> {
    let mut out = Vec::new();
    if max_edges == 0 {
        return out;
    }
    let mut level: Vec<Graph> = vec![Graph::path(1).expect("P1")];
    out.extend(level.iter().cloned());
    for _ in 2..=max_edges {
        let mut canon = BTreeSet::new();
        let mut labeled = BTreeSet::new();
        for g in &level {
            for ext in extensions(g) {
                if ext.n_vertices() > CANONICAL_MAX_VERTICES {
                    continue;
                }
                if !dedup {
                    labeled.insert(graph_key(&ext));
                }
                canon.insert(graph_key(&canonical_form(&ext)));
            }
        }
        level = canon.iter().map(key_graph).collect();
        if dedup {
            out.extend(level.iter().cloned());
        } else {
            out.extend(labeled.iter().map(key_graph));
        }
    }
    out
}

fn extensions(g: &Graph) -> Vec<Graph> {
    let n = g.n_vertices();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let edges = g.edges().iter().copied().chain([(u, v)]);
                out.push(Graph::new(n, edges).expect("valid extension"));
            }
        }
        let edges = g.edges().iter().copied().chain([(u, n)]);
        out.push(Graph::new(n + 1, edges).expect("valid extension"));
    }
    out
}

type GraphKey = (usize, usize, Vec<(usize, usize)>);

// edge count first so the output is grouped by size
fn graph_key(g: &Graph) -> GraphKey {
    (g.n_edges(), g.n_vertices(), g.edges().to_vec())
}

fn key_graph(key: &GraphKey) -> Graph {
    Graph::new(key.1, key.2.iter().copied()).expect("stored graphs are valid")
}
