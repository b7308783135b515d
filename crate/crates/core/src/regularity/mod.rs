//! Castelnuovo–Mumford regularity of normal cut algebras, read off from the
//! smallest degree of an interior monoid element:
//! `reg K[G] = |E| + 1 − min{α : int(M_G)_α ≠ ∅}`.

mod classify;

pub use classify::{
    classify_small, predicted_regularity_class, ClassRecord, Classification, ClassifyOptions,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monoid::{min_interior_degree, normality_probe, NormalityVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectationCase {
    /// Contains a triangle: `|E| − 3`.
    Triangle,
    /// Bipartite: `|E| − 1`.
    Bipartite,
    /// Triangle-free ring graph with an odd induced cycle: `|E| − 2`.
    RingOddCycle,
    /// Triangle-free with an odd induced cycle, not a ring graph: at most
    /// `|E| − 2`.
    OddCycleUpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub case: ExpectationCase,
    pub value: i64,
    /// `false` when `value` is only an upper bound.
    pub exact: bool,
}

impl Expectation {
    pub fn agrees(&self, computed: i64) -> bool {
        if self.exact {
            computed == self.value
        } else {
            computed <= self.value
        }
    }
}

/// Closed-form prediction for the regularity of a graph with at least one
/// edge.
pub fn expected_regularity(g: &Graph) -> Option<Expectation> {
    let m = g.n_edges() as i64;
    if m == 0 {
        return None;
    }
    let p = g.structural_predicates();
    let (case, value, exact) = if g.has_triangle() {
        (ExpectationCase::Triangle, m - 3, true)
    } else if p.bipartite {
        (ExpectationCase::Bipartite, m - 1, true)
    } else if p.ring_graph {
        (ExpectationCase::RingOddCycle, m - 2, true)
    } else {
        (ExpectationCase::OddCycleUpperBound, m - 2, false)
    };
    Some(Expectation { case, value, exact })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub graph: Graph,
    pub normality: NormalityVerdict,
    pub min_interior_degree: i64,
    pub regularity: i64,
    pub theorem_expectation: Option<Expectation>,
    pub agreement: bool,
}

/// Degree up to which [`regularity`] probes normality: `|E|`, and at least
/// 4 because `(2,…,2,4)` is always interior.
pub fn default_probe_bound(g: &Graph) -> i64 {
    (g.n_edges() as i64).max(4)
}

/// Regularity through the smallest interior degree, after a normality probe
/// up to [`default_probe_bound`].
pub fn regularity(g: &Graph) -> Result<RegularityReport> {
    let verdict = normality_probe(g, default_probe_bound(g))?;
    regularity_with(g, verdict)
}

/// Same as [`regularity`] with a verdict computed by the caller.
pub fn regularity_with(g: &Graph, verdict: NormalityVerdict) -> Result<RegularityReport> {
    let dim = g.n_edges() as i64 + 1;
    let alpha = min_interior_degree(g, dim, &verdict)?.ok_or_else(|| {
        Error::NormalityNotCertified(format!("no interior point up to degree {dim}"))
    })?;
    let regularity = dim - alpha;
    let theorem_expectation = expected_regularity(g);
    Ok(RegularityReport {
        graph: g.clone(),
        normality: verdict,
        min_interior_degree: alpha,
        regularity,
        agreement: theorem_expectation.is_none_or(|e| e.agrees(regularity)),
        theorem_expectation,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `r ≥ |E| − 3`, always.
    LowerEMinus3,
    /// `r = |E| − 1` for bipartite graphs.
    BipartiteEquality,
    /// `r ≤ |E| − 2` for triangle-free graphs with an odd induced cycle.
    OddCycleUpper,
    /// `r = |E| − 3` when a triangle exists.
    TriangleEquality,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound: BoundKind,
    pub value: i64,
    pub satisfied: bool,
}

/// The general regularity bounds that apply to `g`, evaluated at `r`.
pub fn bounds_check(g: &Graph, r: i64) -> Vec<BoundCheck> {
    let m = g.n_edges() as i64;
    let mut out = vec![BoundCheck {
        bound: BoundKind::LowerEMinus3,
        value: m - 3,
        satisfied: r >= m - 3,
    }];
    if g.has_triangle() {
        out.push(BoundCheck {
            bound: BoundKind::TriangleEquality,
            value: m - 3,
            satisfied: r == m - 3,
        });
    } else if g.is_bipartite() {
        out.push(BoundCheck {
            bound: BoundKind::BipartiteEquality,
            value: m - 1,
            satisfied: r == m - 1,
        });
    } else {
        out.push(BoundCheck {
            bound: BoundKind::OddCycleUpper,
            value: m - 2,
            satisfied: r <= m - 2,
        });
    }
    out
}
