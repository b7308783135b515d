use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{enumerate_cut_vectors, CutVector, FacetSystem, LatticePoint, Row};
use crate::graph::Graph;

/// A multiset of canonical cut-vector indices, sorted, whose lifted sum is a
/// monoid element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decomposition {
    pub parts: Vec<usize>,
}

impl Decomposition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable();
        Decomposition { parts }
    }

    /// `Σ (δ_i, 1)` over the parts; `None` if an index is out of range.
    pub fn sum(&self, cuts: &[CutVector]) -> Option<LatticePoint> {
        let m = cuts.first().map_or(0, |c| c.coords.len());
        let mut x = vec![0i64; m];
        for &i in &self.parts {
            for (acc, &c) in x.iter_mut().zip(&cuts.get(i)?.coords) {
                *acc += i64::from(c);
            }
        }
        Some(LatticePoint::new(x, self.parts.len() as i64))
    }

    /// The parts re-sum exactly to `p`.
    pub fn certifies(&self, cuts: &[CutVector], p: &LatticePoint) -> bool {
        self.sum(cuts).is_some_and(|s| s == *p)
    }
}

/// The cut vectors of a graph prepared for membership searches.
#[derive(Debug, Clone)]
pub struct CutMonoid {
    graph: Graph,
    cuts: Vec<CutVector>,
    coords: Vec<Vec<i64>>,
    /// First index of each distinct coordinate vector.
    distinct: Vec<usize>,
    /// Rows valid for every graph: box rows on triangle-free edges and the
    /// cycle rows of its induced cycles.
    rows: Vec<Row>,
    basis: Vec<Vec<usize>>,
}

impl CutMonoid {
    pub fn new(g: &Graph) -> Result<Self> {
        let cuts = enumerate_cut_vectors(g)?;
        let coords: Vec<Vec<i64>> = cuts
            .iter()
            .map(|c| c.coords.iter().map(|&v| i64::from(v)).collect())
            .collect();
        let mut seen = HashSet::new();
        let distinct = (0..cuts.len())
            .filter(|&i| seen.insert(&coords[i]))
            .collect();
        Ok(CutMonoid {
            graph: g.clone(),
            rows: FacetSystem::valid_rows(g).rows(),
            basis: g
                .cycle_space_basis()
                .into_iter()
                .map(|c| c.edge_indices)
                .collect(),
            cuts,
            coords,
            distinct,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cuts(&self) -> &[CutVector] {
        &self.cuts
    }

    pub fn coords(&self, i: usize) -> &[i64] {
        &self.coords[i]
    }

    /// Indices of pairwise distinct cut vectors.
    pub fn distinct(&self) -> &[usize] {
        &self.distinct
    }

    fn admissible(&self, x: &[i64], alpha: i64) -> bool {
        alpha >= 0
            && x.iter().all(|&v| (0..=alpha).contains(&v))
            && self
                .basis
                .iter()
                .all(|c| c.iter().map(|&e| x[e]).sum::<i64>() % 2 == 0)
            && self.rows.iter().all(|r| r.holds(x, alpha, false))
    }

    /// The lexicographically first decomposition of `p` into `α` cut vectors,
    /// or `None` when `p ∉ M_G`. The search is exhaustive.
    pub fn decompose(&self, p: &LatticePoint) -> Result<Option<Decomposition>> {
        if p.dim() != self.graph.n_edges() {
            return Err(Error::DimensionMismatch {
                expected: self.graph.n_edges(),
                found: p.dim(),
            });
        }
        if !self.admissible(&p.x, p.alpha) {
            return Ok(None);
        }
        let mut residual = p.x.clone();
        let mut parts = Vec::with_capacity(p.alpha as usize);
        let mut failed = HashSet::new();
        if self.search(&mut residual, p.alpha, 0, &mut parts, &mut failed) {
            Ok(Some(Decomposition { parts }))
        } else {
            Ok(None)
        }
    }

    fn search(
        &self,
        residual: &mut Vec<i64>,
        remaining: i64,
        start: usize,
        parts: &mut Vec<usize>,
        failed: &mut HashSet<(Vec<i64>, i64, usize)>,
    ) -> bool {
        if remaining == 0 {
            return residual.iter().all(|&v| v == 0);
        }
        let key = (residual.clone(), remaining, start);
        if failed.contains(&key) {
            return false;
        }
        let pos = self.distinct.partition_point(|&i| i < start);
        for &j in &self.distinct[pos..] {
            let cut = &self.coords[j];
            let fits = residual
                .iter()
                .zip(cut)
                .all(|(&r, &c)| r >= c && r - c < remaining);
            if !fits {
                continue;
            }
            for (r, &c) in residual.iter_mut().zip(cut) {
                *r -= c;
            }
            if self
                .rows
                .iter()
                .all(|row| row.holds(residual, remaining - 1, false))
            {
                parts.push(j);
                if self.search(residual, remaining - 1, j, parts, failed) {
                    return true;
                }
                parts.pop();
            }
            for (r, &c) in residual.iter_mut().zip(cut) {
                *r += c;
            }
        }
        failed.insert(key);
        false
    }
}

/// Exhaustive monoid membership: the lexicographically first multiset of `α`
/// cut vectors summing to `p`, or `None`.
pub fn decompose(g: &Graph, p: &LatticePoint) -> Result<Option<Decomposition>> {
    CutMonoid::new(g)?.decompose(p)
}
