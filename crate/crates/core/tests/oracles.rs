mod common;

use cutlab::geometry::{enumerate_cut_vectors, facet_system, in_cone, in_group, LatticePoint};
use cutlab::graph::enumerate_connected_graphs;
use cutlab::monoid::CutMonoid;
use cutlab::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[test]
fn decompose_matches_multiset_enumeration() {
    for g in enumerate_connected_graphs(4, true) {
        let monoid = CutMonoid::new(&g).unwrap();
        for alpha in 0..=3i64 {
            let sums = common::multiset_sums(&g, alpha as usize);
            for x in common::box_points(g.n_edges(), alpha) {
                let p = LatticePoint::new(x.clone(), alpha);
                let d = monoid.decompose(&p).unwrap();
                assert_eq!(d.is_some(), sums.contains(&x), "{g:?} {p}");
                if let Some(d) = d {
                    assert!(d.certifies(monoid.cuts(), &p));
                }
            }
        }
    }
}

#[test]
fn facet_rows_match_rational_cone() {
    for g in enumerate_connected_graphs(4, true) {
        for alpha in 0..=2i64 {
            for x in common::box_points(g.n_edges(), alpha) {
                let p = LatticePoint::new(x.clone(), alpha);
                assert_eq!(
                    in_cone(&g, &p, false).unwrap(),
                    common::in_rational_cone(&g, &x, alpha),
                    "{g:?} {p}"
                );
            }
        }
    }
}

#[test]
fn rational_oracle_sanity() {
    let c3 = Graph::cycle(3).unwrap();
    assert!(common::in_rational_cone(&c3, &[1, 1, 0], 1));
    assert!(!common::in_rational_cone(&c3, &[1, 0, 0], 1));
    assert!(common::in_rational_cone(&c3, &[1, 1, 1], 2));
    assert!(!common::in_rational_cone(&c3, &[1, 1, 1], 1));
}

fn chordless_cycles_brute_force(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n_vertices();
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        if mask.count_ones() < 3 {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let all_degree_two = verts
            .iter()
            .all(|&v| verts.iter().filter(|&&w| g.has_edge(v, w)).count() == 2);
        let start = verts[0];
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &verts {
                if g.has_edge(u, w) && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        if all_degree_two && seen == mask {
            out.push(verts);
        }
    }
    out.sort();
    out
}

#[test]
fn induced_cycles_match_subset_search() {
    let mut graphs = enumerate_connected_graphs(7, true);
    graphs.retain(|g| g.n_vertices() <= 7);
    graphs.push(Graph::complete(5).unwrap());
    graphs.push(Graph::complete_bipartite(3, 3).unwrap());
    for g in graphs {
        let mut found: Vec<Vec<usize>> = g
            .induced_cycles()
            .into_iter()
            .map(|c| {
                assert!(c.induced);
                let mut v = c.vertices;
                v.sort();
                v
            })
            .collect();
        found.sort();
        assert_eq!(found, chordless_cycles_brute_force(&g), "{g:?}");
    }
}

fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (v, pv) in row.iter_mut().zip(&pivot) {
                    *v -= &f * pv;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn cut_vectors_are_vertices_of_the_row_system() {
    let graphs: Vec<Graph> = enumerate_connected_graphs(7, true)
        .into_iter()
        .filter(|g| g.n_vertices() <= 6)
        .collect();
    for g in graphs {
        let rows = facet_system(&g).unwrap().rows();
        for cut in enumerate_cut_vectors(&g).unwrap() {
            let x: Vec<i64> = cut.coords.iter().map(|&c| i64::from(c)).collect();
            let p = LatticePoint::new(x.clone(), 1);
            assert!(in_group(&g, &p).unwrap() && in_cone(&g, &p, false).unwrap());
            let tight: Vec<Vec<i64>> = rows
                .iter()
                .filter(|r| r.slack(&x, 1) == 0)
                .map(|r| {
                    let mut v = vec![0i64; g.n_edges()];
                    for &(e, c) in &r.terms {
                        v[e] = c;
                    }
                    v
                })
                .collect();
            assert_eq!(rank(&tight), g.n_edges(), "{g:?} {:?}", cut.subset);
        }
        // no other 0/1 point satisfies every row
        for x in common::box_points(g.n_edges(), 1) {
            let p = LatticePoint::new(x.clone(), 1);
            let is_cut = enumerate_cut_vectors(&g)
                .unwrap()
                .iter()
                .any(|c| c.coords.iter().map(|&v| i64::from(v)).eq(x.iter().copied()));
            assert_eq!(in_cone(&g, &p, false).unwrap(), is_cut, "{g:?} {p}");
        }
    }
}
