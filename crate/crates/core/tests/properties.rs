use cutlab::geometry::{
    enumerate_cut_vectors, in_cone, in_group, lattice_points_at_degree,
    verify_positive_combination, LatticePoint,
};
use cutlab::graph::CliqueSumSpec;
use cutlab::monoid::{
    canonical_generators, decompose, is_gorenstein_normal, min_interior_degree, normality_probe,
};
use cutlab::regularity::regularity;
use cutlab::{Graph, MinorPattern};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Connected graphs on 2..=max_n vertices: a random spanning tree plus extra
/// random edges.
fn connected_graph(max_n: usize, max_extra: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
        let extra = proptest::collection::vec((0..n, 0..n), 0..=max_extra);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let tree = parents.into_iter().enumerate().map(|(i, p)| (i + 1, p));
            let extra = extra.into_iter().filter(|(u, v)| u != v);
            Graph::new(n, tree.chain(extra)).unwrap()
        })
    })
}

fn point_in(g: &Graph, alpha: i64) -> impl Strategy<Value = LatticePoint> {
    proptest::collection::vec(0..=alpha, g.n_edges()).prop_map(move |x| LatticePoint::new(x, alpha))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cycle_basis_dimension(g in connected_graph(8, 8)) {
        let comps = g.components().len();
        prop_assert_eq!(g.cycle_space_basis().len(), g.n_edges() + comps - g.n_vertices());
    }

    #[test]
    fn bipartite_iff_even_basis(g in connected_graph(8, 8)) {
        let even = g.cycle_space_basis().iter().all(|c| c.len() % 2 == 0);
        prop_assert_eq!(g.is_bipartite(), even);
    }

    #[test]
    fn ring_graphs_have_no_k4_minor(g in connected_graph(7, 4)) {
        if g.structural_predicates().ring_graph {
            prop_assert!(!g.has_minor(MinorPattern::K4));
            prop_assert!(!g.has_minor(MinorPattern::K5));
        }
    }

    #[test]
    fn parity_is_basis_independent(
        g in connected_graph(7, 6),
        seed in any::<u64>(),
        coords in proptest::collection::vec(0i64..4, 20),
    ) {
        let mut order: Vec<usize> = (0..g.n_vertices()).collect();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let x = &coords[..g.n_edges().min(20)];
        prop_assume!(x.len() == g.n_edges());
        let parity = |basis: Vec<cutlab::Cycle>| {
            basis.iter().all(|c| c.edge_indices.iter().map(|&e| x[e]).sum::<i64>() % 2 == 0)
        };
        prop_assert_eq!(parity(g.cycle_space_basis()), parity(g.cycle_space_basis_from(&order)));
        prop_assert_eq!(
            parity(g.cycle_space_basis()),
            in_group(&g, &LatticePoint::new(x.to_vec(), 0)).unwrap()
        );
    }

    #[test]
    fn clique_sum_edge_count(a in 0usize..4, b in 0usize..4, k in 0usize..3) {
        let pieces = [
            Graph::complete(4).unwrap(),
            Graph::cycle(3).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::new(4, [(0, 1), (1, 2), (2, 0), (2, 3), (0, 3)]).unwrap(),
        ];
        let glue = (0..=k).map(|i| (i, i)).collect();
        let spec = CliqueSumSpec::new(k, glue).unwrap();
        let (l, r) = (&pieces[a], &pieces[b]);
        let s = Graph::clique_sum(l, r, &spec).unwrap().graph;
        prop_assert_eq!(s.n_edges(), l.n_edges() + r.n_edges() - k * (k + 1) / 2);
        prop_assert_eq!(s.n_vertices(), l.n_vertices() + r.n_vertices() - k - 1);
    }

    #[test]
    fn cuts_lie_in_their_cone(g in connected_graph(6, 5)) {
        for c in enumerate_cut_vectors(&g).unwrap() {
            let p = LatticePoint::lift(&c.coords);
            prop_assert!(in_group(&g, &p).unwrap());
            prop_assert!(in_cone(&g, &p, false).unwrap());
            let separates = c.coords.iter().zip(g.edges()).all(|(&v, &(a, b))| {
                (v == 1) == (c.subset.contains(&a) != c.subset.contains(&b))
            });
            prop_assert!(separates);
            prop_assert!(!c.subset.contains(&0));
        }
    }

    #[test]
    fn strict_implies_nonstrict(
        (g, p) in connected_graph(6, 4).prop_flat_map(|g| {
            let pts = point_in(&g, 4);
            (Just(g), pts)
        })
    ) {
        if in_cone(&g, &p, true).unwrap() {
            prop_assert!(in_cone(&g, &p, false).unwrap());
        }
    }

    #[test]
    fn positive_combination_is_interior(
        (g, coeffs) in connected_graph(5, 4).prop_flat_map(|g| {
            let n = 1usize << (g.n_vertices() - 1);
            (Just(g), proptest::collection::vec(1i64..4, n))
        })
    ) {
        let cuts = enumerate_cut_vectors(&g).unwrap();
        let mut x = vec![0i64; g.n_edges()];
        for (c, cut) in coeffs.iter().zip(&cuts) {
            for (a, &v) in x.iter_mut().zip(&cut.coords) {
                *a += c * i64::from(v);
            }
        }
        let p = LatticePoint::new(x, coeffs.iter().sum());
        let q: Vec<BigRational> = coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        prop_assert!(verify_positive_combination(&g, &p, &q).unwrap());
        prop_assert!(in_cone(&g, &p, true).unwrap());
    }

    #[test]
    fn decomposition_resums(
        (g, p) in connected_graph(5, 3).prop_flat_map(|g| {
            let pts = (0i64..=4).prop_flat_map({
                let g = g.clone();
                move |a| point_in(&g, a)
            });
            (Just(g), pts)
        })
    ) {
        let cuts = enumerate_cut_vectors(&g).unwrap();
        if let Some(d) = decompose(&g, &p).unwrap() {
            prop_assert!(d.certifies(&cuts, &p));
            prop_assert_eq!(d.parts.len() as i64, p.alpha);
        }
    }

    #[test]
    fn verified_probe_means_decomposable(
        (g, p) in connected_graph(5, 3).prop_flat_map(|g| {
            let pts = (2i64..=4).prop_flat_map({
                let g = g.clone();
                move |a| point_in(&g, a)
            });
            (Just(g), pts)
        })
    ) {
        let verdict = normality_probe(&g, 4).unwrap();
        prop_assert!(verdict.is_verified());
        if in_group(&g, &p).unwrap() && in_cone(&g, &p, false).unwrap() {
            prop_assert!(decompose(&g, &p).unwrap().is_some());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn interior_degree_by_triangles(g in connected_graph(6, 3)) {
        let verdict = normality_probe(&g, 4).unwrap();
        prop_assume!(verdict.is_verified());
        let d = min_interior_degree(&g, 4, &verdict).unwrap().unwrap();
        if g.has_triangle() {
            prop_assert_eq!(d, 4);
        } else {
            prop_assert!(d >= 2);
        }
    }

    #[test]
    fn generators_are_interior_and_irreducible(g in connected_graph(5, 2)) {
        let verdict = normality_probe(&g, 4).unwrap();
        let gens = canonical_generators(&g, 4, &verdict).unwrap();
        let cuts = enumerate_cut_vectors(&g).unwrap();
        for p in &gens.generators {
            prop_assert!(in_cone(&g, p, true).unwrap() && in_group(&g, p).unwrap());
            for c in &cuts {
                let q = LatticePoint::new(
                    p.x.iter().zip(&c.coords).map(|(&a, &b)| a - i64::from(b)).collect(),
                    p.alpha - 1,
                );
                prop_assert!(!in_cone(&g, &q, true).unwrap());
            }
        }
        let status = is_gorenstein_normal(&g);
        if status.gorenstein {
            prop_assert_eq!(gens.generators, vec![status.generator(g.n_edges()).unwrap()]);
        }
    }

    #[test]
    fn regularity_identity(g in connected_graph(5, 2)) {
        let r = regularity(&g).unwrap();
        prop_assert_eq!(r.regularity + r.min_interior_degree, g.n_edges() as i64 + 1);
        prop_assert!(r.agreement);
    }

    #[test]
    fn tree_generators_are_in_the_open_box(g in connected_graph(6, 0)) {
        let verdict = normality_probe(&g, 4).unwrap();
        let gens = canonical_generators(&g, 4, &verdict).unwrap();
        for p in gens.generators {
            prop_assert!(p.alpha <= 4);
            prop_assert!(p.x.iter().all(|&v| 1 <= v && v < p.alpha));
        }
        prop_assert!(lattice_points_at_degree(&g, 4, true).unwrap().iter().all(|p| p.x.iter().all(|&v| (1..=3).contains(&v))));
    }

    #[test]
    fn text_round_trips(g in connected_graph(8, 8), x in proptest::collection::vec(-5i64..50, 0..8), a in 0i64..20) {
        let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
        let p = LatticePoint::new(x, a);
        prop_assert_eq!(p.to_string().parse::<LatticePoint>().unwrap(), p);
    }
}
