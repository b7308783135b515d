use std::ops::ControlFlow;

use super::facets::{facet_system, FacetSystem, Row};
use super::point::LatticePoint;
use crate::error::Result;
use crate::graph::Graph;

/// Depth-first enumeration of the lattice points `(x, α)` of `gp(M_G)` lying
/// in `cone(M_G)` (or its interior) at a fixed degree.
///
/// Coordinates are assigned in edge order. A row is pruned as soon as its
/// best completion over the unassigned coordinates violates it; a parity
/// constraint is checked once its largest edge is assigned.
#[derive(Debug, Clone)]
pub struct LatticeEnumerator {
    alpha: i64,
    strict: bool,
    lo: i64,
    hi: i64,
    n_edges: usize,
    rows: Vec<Row>,
    /// `rows_at[i]`: rows mentioning edge `i`.
    rows_at: Vec<Vec<usize>>,
    /// `best_rest[r][i]`: least possible contribution of the terms of row `r`
    /// on edges after `i`.
    best_rest: Vec<Vec<i128>>,
    /// `parity_at[i]`: basis cycles whose largest edge is `i`.
    parity_at: Vec<Vec<Vec<usize>>>,
}

impl LatticeEnumerator {
    pub fn new(g: &Graph, alpha: i64, interior_only: bool) -> Result<Self> {
        let fs = facet_system(g)?;
        Ok(Self::with_system(g, &fs, alpha, interior_only))
    }

    /// Uses the given rows instead of the cached facet system.
    pub fn with_system(g: &Graph, fs: &FacetSystem, alpha: i64, interior_only: bool) -> Self {
        let m = g.n_edges();
        let strict = interior_only;
        let (lo, hi) = if strict { (1, alpha - 1) } else { (0, alpha) };
        let rows = fs.rows();
        let mut rows_at = vec![Vec::new(); m];
        let mut best_rest = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            let mut rest = vec![0i128; m];
            for &(e, _) in &row.terms {
                rows_at[e].push(r);
            }
            for (i, slot) in rest.iter_mut().enumerate() {
                *slot = row
                    .terms
                    .iter()
                    .filter(|&&(e, _)| e > i)
                    .map(|&(_, c)| i128::from((c * lo).min(c * hi)))
                    .sum();
            }
            best_rest.push(rest);
        }
        let mut parity_at = vec![Vec::new(); m];
        for c in g.cycle_space_basis() {
            if let Some(&last) = c.edge_indices.iter().max() {
                parity_at[last].push(c.edge_indices.clone());
            }
        }
        LatticeEnumerator {
            alpha,
            strict,
            lo,
            hi,
            n_edges: m,
            rows,
            rows_at,
            best_rest,
            parity_at,
        }
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    /// Candidate values of the first coordinate, for splitting the search.
    pub fn first_coordinate_values(&self) -> std::ops::RangeInclusive<i64> {
        #[allow(clippy::reversed_empty_ranges)]
        if self.n_edges == 0 {
            return 1..=0;
        }
        self.lo..=self.hi
    }

    /// Visits every point in lexicographic order until `visit` breaks.
    pub fn visit<B>(&self, mut visit: impl FnMut(&[i64]) -> ControlFlow<B>) -> Option<B> {
        if self.n_edges == 0 {
            let ok = if self.strict {
                self.alpha > 0
            } else {
                self.alpha >= 0
            };
            return if ok { visit(&[]).break_value() } else { None };
        }
        let mut x = vec![0i64; self.n_edges];
        match self.descend(0, &mut x, &mut visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    /// Visits the points whose first coordinate equals `first`.
    pub fn visit_with_first<B>(
        &self,
        first: i64,
        mut visit: impl FnMut(&[i64]) -> ControlFlow<B>,
    ) -> Option<B> {
        if self.n_edges == 0 || first < self.lo || first > self.hi {
            return None;
        }
        let mut x = vec![0i64; self.n_edges];
        x[0] = first;
        if !self.feasible(0, &x) {
            return None;
        }
        match self.descend(1, &mut x, &mut visit) {
            ControlFlow::Break(b) => Some(b),
            ControlFlow::Continue(()) => None,
        }
    }

    pub fn points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        self.visit::<()>(|x| {
            out.push(LatticePoint::new(x.to_vec(), self.alpha));
            ControlFlow::Continue(())
        });
        out
    }

    pub fn count(&self) -> usize {
        let mut n = 0;
        self.visit::<()>(|_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    fn feasible(&self, i: usize, x: &[i64]) -> bool {
        for cycle in &self.parity_at[i] {
            if cycle.iter().map(|&e| x[e]).sum::<i64>().rem_euclid(2) != 0 {
                return false;
            }
        }
        for &r in &self.rows_at[i] {
            let row = &self.rows[r];
            let assigned: i128 = row
                .terms
                .iter()
                .filter(|&&(e, _)| e <= i)
                .map(|&(e, c)| i128::from(c) * i128::from(x[e]))
                .sum();
            let slack = i128::from(row.alpha_coef) * i128::from(self.alpha)
                - assigned
                - self.best_rest[r][i];
            if slack < 0 || (self.strict && slack == 0) {
                return false;
            }
        }
        true
    }

    fn descend<B>(
        &self,
        i: usize,
        x: &mut Vec<i64>,
        visit: &mut impl FnMut(&[i64]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if i == self.n_edges {
            return visit(x);
        }
        for v in self.lo..=self.hi {
            x[i] = v;
            if self.feasible(i, x) {
                self.descend(i + 1, x, visit)?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// All lattice points of `gp(M_G) ∩ cone(M_G)` (interior only if asked) with
/// degree `alpha`, in lexicographic order.
pub fn lattice_points_at_degree(
    g: &Graph,
    alpha: i64,
    interior_only: bool,
) -> Result<Vec<LatticePoint>> {
    Ok(LatticeEnumerator::new(g, alpha, interior_only)?.points())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{enumerate_cut_vectors, in_cone, in_group};

    #[test]
    fn triangle_degree_one_is_cut_vectors() {
        let c3 = Graph::cycle(3).unwrap();
        let mut pts: Vec<Vec<i64>> = lattice_points_at_degree(&c3, 1, false)
            .unwrap()
            .into_iter()
            .map(|p| p.x)
            .collect();
        let mut cuts: Vec<Vec<i64>> = enumerate_cut_vectors(&c3)
            .unwrap()
            .into_iter()
            .map(|c| c.coords.iter().map(|&v| i64::from(v)).collect())
            .collect();
        pts.sort();
        cuts.sort();
        assert_eq!(pts, cuts);
    }

    #[test]
    fn triangle_interior() {
        let c3 = Graph::cycle(3).unwrap();
        for alpha in 1..=3 {
            assert!(lattice_points_at_degree(&c3, alpha, true)
                .unwrap()
                .is_empty());
        }
        assert_eq!(
            lattice_points_at_degree(&c3, 4, true).unwrap(),
            vec![LatticePoint::constant(3, 2, 4)]
        );
    }

    #[test]
    fn square_interior_at_two() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            lattice_points_at_degree(&c4, 2, true).unwrap(),
            vec![LatticePoint::constant(4, 1, 2)]
        );
    }

    #[test]
    fn matches_filtered_box_scan() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 1)]).unwrap();
        for alpha in 0..=3 {
            for strict in [false, true] {
                let got = lattice_points_at_degree(&g, alpha, strict).unwrap();
                let mut want = Vec::new();
                let m = g.n_edges() as u32;
                let base = (alpha + 1) as usize;
                for code in 0..base.pow(m) {
                    let mut c = code;
                    let x: Vec<i64> = (0..m)
                        .map(|_| {
                            let d = (c % base) as i64;
                            c /= base;
                            d
                        })
                        .collect();
                    let p = LatticePoint::new(x, alpha);
                    if in_group(&g, &p).unwrap() && in_cone(&g, &p, strict).unwrap() {
                        want.push(p);
                    }
                }
                want.sort();
                assert_eq!(got, want, "alpha {alpha} strict {strict}");
            }
        }
    }

    #[test]
    fn split_on_first_coordinate_covers_everything() {
        let g = Graph::cycle(5).unwrap();
        let en = LatticeEnumerator::new(&g, 4, false).unwrap();
        let mut split = 0;
        for v in en.first_coordinate_values() {
            en.visit_with_first::<()>(v, |_| {
                split += 1;
                ControlFlow::Continue(())
            });
        }
        assert_eq!(split, en.count());
    }

    #[test]
    fn edgeless() {
        let g = Graph::new(1, []).unwrap();
        assert!(lattice_points_at_degree(&g, 0, true).unwrap().is_empty());
        assert_eq!(lattice_points_at_degree(&g, 0, false).unwrap().len(), 1);
        assert_eq!(lattice_points_at_degree(&g, 1, true).unwrap().len(), 1);
    }
}
