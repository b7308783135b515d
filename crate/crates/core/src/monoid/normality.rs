use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    enumerate_cut_vectors, facet_system, in_cone, in_group, LatticeEnumerator, LatticePoint,
};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalityStatus {
    VerifiedUpToBound,
    GapFound,
}

/// A lattice point of the cone that is not a monoid element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapWitness {
    pub point: LatticePoint,
    pub in_group: bool,
    pub in_cone: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityVerdict {
    pub status: NormalityStatus,
    pub bound: i64,
    pub gap_witness: Option<GapWitness>,
    /// Lattice points examined across all degrees.
    pub points_checked: u64,
}

impl NormalityVerdict {
    pub fn is_verified(&self) -> bool {
        self.status == NormalityStatus::VerifiedUpToBound
    }

    /// Errors unless the probe passed and reached `degree`.
    pub fn require(&self, degree: i64) -> Result<()> {
        if let Some(gap) = &self.gap_witness {
            return Err(Error::NormalityNotCertified(format!(
                "gap at {} (degree {})",
                gap.point, gap.point.alpha
            )));
        }
        if self.bound < degree {
            return Err(Error::NormalityNotCertified(format!(
                "probe reached degree {} but degree {degree} is needed",
                self.bound
            )));
        }
        Ok(())
    }
}

/// Checks that every lattice point of `gp(M_G) ∩ cone(M_G)` with degree
/// `2..=degree_bound` lies in `M_G`.
///
/// Degrees are processed in increasing order. Once every point at degree
/// `α − 1` is known to be a monoid element, a point `p` at degree `α` is one
/// iff `p − (δ, 1)` lies in the cone for some cut vector `δ`; that test only
/// needs the facet rows. Degree 1 holds for free: the lattice points of a 0/1
/// polytope are its vertices.
pub fn normality_probe(g: &Graph, degree_bound: i64) -> Result<NormalityVerdict> {
    let fs = facet_system(g)?;
    let rows = fs.rows();
    let cuts = enumerate_cut_vectors(g)?;
    let mut cut_slack: Vec<Vec<i128>> = Vec::new();
    for cut in &cuts {
        let x: Vec<i64> = cut.coords.iter().map(|&c| i64::from(c)).collect();
        let slack: Vec<i128> = rows.iter().map(|r| r.slack(&x, 1)).collect();
        if !cut_slack.contains(&slack) {
            cut_slack.push(slack);
        }
    }
    let reducible = |x: &[i64], alpha: i64| {
        let slack: Vec<i128> = rows.iter().map(|r| r.slack(x, alpha)).collect();
        cut_slack
            .iter()
            .any(|s| s.iter().zip(&slack).all(|(need, have)| have >= need))
    };
    let mut points_checked = 0u64;
    for alpha in 2..=degree_bound {
        let en = LatticeEnumerator::with_system(g, &fs, alpha, false);
        let values: Vec<i64> = en.first_coordinate_values().collect();
        let chunks: Vec<(u64, Option<Vec<i64>>)> = values
            .par_iter()
            .map(|&first| {
                let mut n = 0u64;
                let gap = en.visit_with_first(first, |x| {
                    n += 1;
                    if reducible(x, alpha) {
                        ControlFlow::Continue(())
                    } else {
                        ControlFlow::Break(x.to_vec())
                    }
                });
                (n, gap)
            })
            .collect();
        points_checked += chunks.iter().map(|c| c.0).sum::<u64>();
        if g.n_edges() == 0 {
            points_checked += 1;
        }
        if let Some(x) = chunks.into_iter().find_map(|c| c.1) {
            let point = LatticePoint::new(x, alpha);
            return Ok(NormalityVerdict {
                status: NormalityStatus::GapFound,
                bound: degree_bound,
                gap_witness: Some(GapWitness {
                    in_group: in_group(g, &point)?,
                    in_cone: in_cone(g, &point, false)?,
                    point,
                }),
                points_checked,
            });
        }
    }
    Ok(NormalityVerdict {
        status: NormalityStatus::VerifiedUpToBound,
        bound: degree_bound,
        gap_witness: None,
        points_checked,
    })
}
