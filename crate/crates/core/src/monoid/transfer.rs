use serde::{Deserialize, Serialize};

use super::canonical::{is_gorenstein_normal, GorensteinCriterion};
use crate::error::{Error, Result};
use crate::geometry::{lattice_points_at_degree, LatticePoint};
use crate::graph::{CliqueSumSpec, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransferRule {
    /// Both pieces of the same Gorenstein type: the sum keeps that type.
    SameType,
    /// 0-sum: `(x, y, β)` with `β = max(β1, β2)` and both halves interior at `β`.
    ZeroSum,
    /// 1-sum of a bridgeless chordal and a bipartite piece: `(2, 2̄, y, 4)`.
    OneSumChordalBipartite,
}

/// Generating system of `int(M_G)` for `G = G1 # G2` predicted from the
/// generators of the pieces. Every minimal generator of the sum belongs to
/// it, and all its elements are interior.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferPrediction {
    pub graph: Graph,
    pub rule: TransferRule,
    pub degree: i64,
    pub generators: Vec<LatticePoint>,
}

fn degree_of(c: GorensteinCriterion) -> i64 {
    match c {
        GorensteinCriterion::BipartiteNoLongCycle => 2,
        _ => 4,
    }
}

/// Predicts the canonical generators of `left #k right` from pieces whose
/// canonical modules are known (Gorenstein pieces), for `k ∈ {0, 1}` and
/// sums of two pieces of the same type.
pub fn cliquesum_generator_transfer(
    left: &Graph,
    right: &Graph,
    spec: &CliqueSumSpec,
) -> Result<TransferPrediction> {
    let sum = Graph::clique_sum(left, right, spec)?;
    let (sl, sr) = (is_gorenstein_normal(left), is_gorenstein_normal(right));
    if !sl.gorenstein || !sr.gorenstein {
        return Err(Error::UnsupportedTransfer(
            "both pieces need a single known canonical generator".into(),
        ));
    }
    let m = sum.graph.n_edges();
    if sl.criterion == sr.criterion {
        let generator = sl.generator(m).expect("Gorenstein piece");
        return Ok(TransferPrediction {
            degree: generator.alpha,
            generators: vec![generator],
            graph: sum.graph,
            rule: TransferRule::SameType,
        });
    }
    let (lmap, rmap) = (sum.left_edge_map(left), sum.right_edge_map(right));
    let (rule, beta) = match spec.k() {
        0 => (
            TransferRule::ZeroSum,
            degree_of(sl.criterion).max(degree_of(sr.criterion)),
        ),
        1 => (TransferRule::OneSumChordalBipartite, 4),
        k => {
            return Err(Error::UnsupportedTransfer(format!(
                "{k}-sum of a bridgeless chordal and a bipartite piece"
            )))
        }
    };
    let halves = |g: &Graph, criterion| -> Result<Vec<LatticePoint>> {
        if rule == TransferRule::OneSumChordalBipartite
            && criterion == GorensteinCriterion::BridgelessChordal
        {
            Ok(vec![LatticePoint::constant(g.n_edges(), 2, 4)])
        } else {
            lattice_points_at_degree(g, beta, true)
        }
    };
    let (xs, ys) = (halves(left, sl.criterion)?, halves(right, sr.criterion)?);
    let mut generators = Vec::new();
    for x in &xs {
        'pair: for y in &ys {
            let mut z = vec![None; m];
            for (e, &v) in lmap.iter().zip(&x.x) {
                z[*e] = Some(v);
            }
            for (e, &v) in rmap.iter().zip(&y.x) {
                match z[*e] {
                    Some(w) if w != v => continue 'pair,
                    _ => z[*e] = Some(v),
                }
            }
            let z = z
                .into_iter()
                .map(|v| v.expect("every edge comes from a piece"))
                .collect();
            generators.push(LatticePoint::new(z, beta));
        }
    }
    generators.sort();
    Ok(TransferPrediction {
        graph: sum.graph,
        rule,
        degree: beta,
        generators,
    })
}
