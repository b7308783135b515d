use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::normality::NormalityVerdict;
use crate::error::Result;
use crate::geometry::{
    enumerate_cut_vectors, facet_system, FacetSystem, LatticeEnumerator, LatticePoint,
};
use crate::graph::{Graph, MinorPattern};

/// Smallest degree `α ≤ search_bound` carrying an interior lattice point, or
/// `None`. Interior lattice points are interior monoid elements only for a
/// normal monoid, so the verdict must cover the degree found.
pub fn min_interior_degree(
    g: &Graph,
    search_bound: i64,
    verdict: &NormalityVerdict,
) -> Result<Option<i64>> {
    verdict.require(0)?;
    let fs = facet_system(g)?;
    for alpha in 1..=search_bound {
        let en = LatticeEnumerator::with_system(g, &fs, alpha, true);
        if en.visit(|_| ControlFlow::Break(())).is_some() {
            verdict.require(alpha)?;
            return Ok(Some(alpha));
        }
    }
    Ok(None)
}

/// Minimal generators of the canonical module `int(M_G)` up to a degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalGeneratorSet {
    pub degree_bound: i64,
    pub generators: Vec<LatticePoint>,
    /// Every interior point at `degree_bound` is reducible and the bound is at
    /// least 4.
    pub complete: bool,
}

/// Interior points `p` with `α ≤ degree_bound` such that `p − (δ, 1)` is
/// interior for no cut vector `δ`.
pub fn canonical_generators(
    g: &Graph,
    degree_bound: i64,
    verdict: &NormalityVerdict,
) -> Result<CanonicalGeneratorSet> {
    verdict.require(degree_bound)?;
    let fs = facet_system(g)?;
    let cuts: Vec<Vec<i64>> = enumerate_cut_vectors(g)?
        .into_iter()
        .map(|c| c.coords.into_iter().map(i64::from).collect())
        .collect();
    let mut generators = Vec::new();
    let mut top_all_reducible = true;
    for alpha in 1..=degree_bound {
        let en = LatticeEnumerator::with_system(g, &fs, alpha, true);
        en.visit::<()>(|x| {
            if !reducible(&fs, &cuts, x, alpha) {
                generators.push(LatticePoint::new(x.to_vec(), alpha));
                if alpha == degree_bound {
                    top_all_reducible = false;
                }
            }
            ControlFlow::Continue(())
        });
    }
    Ok(CanonicalGeneratorSet {
        degree_bound,
        generators,
        complete: top_all_reducible && degree_bound >= 4,
    })
}

fn reducible(fs: &FacetSystem, cuts: &[Vec<i64>], x: &[i64], alpha: i64) -> bool {
    let mut y = vec![0i64; x.len()];
    cuts.iter().any(|cut| {
        for ((yi, &xi), &ci) in y.iter_mut().zip(x).zip(cut) {
            *yi = xi - ci;
        }
        fs.contains(&y, alpha - 1, true)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GorensteinCriterion {
    BipartiteNoLongCycle,
    BridgelessChordal,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinStatus {
    pub gorenstein: bool,
    pub criterion: GorensteinCriterion,
}

impl GorensteinStatus {
    /// The single canonical generator when Gorenstein: `(1,…,1,2)` or
    /// `(2,…,2,4)`.
    pub fn generator(&self, n_edges: usize) -> Option<LatticePoint> {
        match self.criterion {
            GorensteinCriterion::BipartiteNoLongCycle => {
                Some(LatticePoint::constant(n_edges, 1, 2))
            }
            GorensteinCriterion::BridgelessChordal => Some(LatticePoint::constant(n_edges, 2, 4)),
            GorensteinCriterion::None => None,
        }
    }
}

/// Purely graph-theoretic Gorenstein test for normal cut algebras: a
/// `K5`-minor-free graph that is either bipartite without induced cycles of
/// length at least 6, or bridgeless and chordal.
pub fn is_gorenstein_normal(g: &Graph) -> GorensteinStatus {
    let none = GorensteinStatus {
        gorenstein: false,
        criterion: GorensteinCriterion::None,
    };
    if g.has_minor(MinorPattern::K5) {
        return none;
    }
    let p = g.structural_predicates();
    let criterion = if p.bipartite && p.max_induced_cycle_length.is_none_or(|l| l < 6) {
        GorensteinCriterion::BipartiteNoLongCycle
    } else if p.bridgeless && p.chordal {
        GorensteinCriterion::BridgelessChordal
    } else {
        return none;
    };
    GorensteinStatus {
        gorenstein: true,
        criterion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::normality_probe;

    fn generators(g: &Graph, bound: i64) -> CanonicalGeneratorSet {
        let verdict = normality_probe(g, bound).unwrap();
        canonical_generators(g, bound, &verdict).unwrap()
    }

    #[test]
    fn square_and_triangle() {
        let c4 = generators(&Graph::cycle(4).unwrap(), 4);
        assert_eq!(c4.generators, vec![LatticePoint::constant(4, 1, 2)]);
        assert!(c4.complete);
        let c3 = generators(&Graph::cycle(3).unwrap(), 4);
        assert_eq!(c3.generators, vec![LatticePoint::constant(3, 2, 4)]);
        // the generator itself sits at the bound
        assert!(!c3.complete);
        let c3 = generators(&Graph::cycle(3).unwrap(), 5);
        assert_eq!(c3.generators, vec![LatticePoint::constant(3, 2, 4)]);
        assert!(c3.complete);
    }

    #[test]
    fn incomplete_below_four() {
        let c4 = generators(&Graph::cycle(4).unwrap(), 3);
        assert!(!c4.complete);
    }

    #[test]
    fn interior_degrees() {
        let cases = [
            (Graph::cycle(4).unwrap(), 2),
            (Graph::cycle(5).unwrap(), 3),
            (Graph::complete(4).unwrap(), 4),
            (Graph::new(1, []).unwrap(), 1),
        ];
        for (g, want) in cases {
            let v = normality_probe(&g, 5).unwrap();
            assert_eq!(min_interior_degree(&g, 5, &v).unwrap(), Some(want), "{g:?}");
        }
    }

    #[test]
    fn refuses_without_certificate() {
        let g = Graph::cycle(4).unwrap();
        let v = normality_probe(&g, 1).unwrap();
        assert!(min_interior_degree(&g, 4, &v).is_err());
        assert!(canonical_generators(&g, 4, &v).is_err());
    }

    #[test]
    fn gorenstein_classification() {
        let k23 = is_gorenstein_normal(&Graph::complete_bipartite(2, 3).unwrap());
        assert_eq!(k23.criterion, GorensteinCriterion::BipartiteNoLongCycle);
        let k4 = is_gorenstein_normal(&Graph::complete(4).unwrap());
        assert_eq!(k4.criterion, GorensteinCriterion::BridgelessChordal);
        assert!(!is_gorenstein_normal(&Graph::cycle(5).unwrap()).gorenstein);
        assert!(!is_gorenstein_normal(&Graph::cycle(6).unwrap()).gorenstein);
        assert!(!is_gorenstein_normal(&Graph::complete(5).unwrap()).gorenstein);
        assert!(is_gorenstein_normal(&Graph::path(3).unwrap()).gorenstein);
    }
}
