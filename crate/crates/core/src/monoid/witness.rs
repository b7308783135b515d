use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::decompose::{CutMonoid, Decomposition};
use crate::error::{Error, Result};
use crate::geometry::{verify_positive_combination, LatticePoint};
use crate::graph::Graph;

/// One term `coeff · (δ_cut, 1)` of an integer combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTerm {
    pub cut: usize,
    pub coeff: i64,
}

/// Certificate that `point ∈ int(cone) ∩ gp(M_G)` is a non-element of `M_G`
/// whose multiple `k · point` is one. Then `M_* = int(M) ∪ {0}` is not normal,
/// so `M_G` is neither seminormal nor normal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeminormalityWitness {
    pub graph: Graph,
    pub point: LatticePoint,
    pub multiple_k: i64,
    /// Leg (a): integer combination of generators equal to `point`.
    pub group_evidence: Vec<GroupTerm>,
    /// Leg (b): strictly positive coefficients, one per canonical cut vector,
    /// combining to `k · point`.
    #[serde(with = "rational_strings")]
    pub interior_certificate: Vec<BigRational>,
    /// Leg (c): a decomposition of `k · point`.
    pub multiple_decomposition: Decomposition,
}

mod rational_strings {
    use num_rational::BigRational;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| {
                s.parse::<BigRational>()
                    .map_err(|e| D::Error::custom(format!("{s:?}: {e}")))
            })
            .collect()
    }
}

impl SeminormalityWitness {
    /// The certificate for `x = (2,…,2,4)` on `K5`: `x = Σ_{i=1..5} (a_i, 1) − (a_0, 1)`
    /// and `4x = Σ_{i=0..15} (a_i, 1)`.
    pub fn k5() -> Self {
        let graph = Graph::complete(5).expect("K5");
        let mut group_evidence = vec![GroupTerm { cut: 0, coeff: -1 }];
        group_evidence.extend((1..=5).map(|cut| GroupTerm { cut, coeff: 1 }));
        SeminormalityWitness {
            point: LatticePoint::constant(graph.n_edges(), 2, 4),
            graph,
            multiple_k: 4,
            group_evidence,
            interior_certificate: vec![BigRational::from_integer(BigInt::from(1)); 16],
            multiple_decomposition: Decomposition::new((0..16).collect()),
        }
    }

    /// Checks legs (a)–(d) in order; the first failure is reported as
    /// [`Error::MalformedCertificate`] naming the leg.
    pub fn verify(&self) -> Result<()> {
        let fail = |leg, reason: String| Err(Error::MalformedCertificate { leg, reason });
        let g = &self.graph;
        if self.point.dim() != g.n_edges() {
            return fail(
                'a',
                format!(
                    "point has {} coordinates for {} edges",
                    self.point.dim(),
                    g.n_edges()
                ),
            );
        }
        let monoid = CutMonoid::new(g)?;
        let cuts = monoid.cuts();

        let mut x = vec![0i64; g.n_edges()];
        let mut alpha = 0i64;
        for term in &self.group_evidence {
            let Some(cut) = cuts.get(term.cut) else {
                return fail('a', format!("cut index {} out of range", term.cut));
            };
            for (acc, &c) in x.iter_mut().zip(&cut.coords) {
                *acc += term.coeff * i64::from(c);
            }
            alpha += term.coeff;
        }
        if LatticePoint::new(x, alpha) != self.point {
            return fail(
                'a',
                "integer combination does not reproduce the point".into(),
            );
        }

        if self.multiple_k < 2 {
            return fail(
                'b',
                format!("multiple k = {} must be at least 2", self.multiple_k),
            );
        }
        let multiple = self.point.scaled(self.multiple_k);
        match verify_positive_combination(g, &multiple, &self.interior_certificate) {
            Ok(true) => {}
            Ok(false) => {
                return fail(
                    'b',
                    "coefficients are not all strictly positive or do not sum to k·point".into(),
                )
            }
            Err(e) => return fail('b', e.to_string()),
        }

        if !self.multiple_decomposition.certifies(cuts, &multiple) {
            return fail('c', "parts do not sum to k·point".into());
        }

        if let Some(d) = monoid.decompose(&self.point)? {
            return fail('d', format!("the point decomposes as {:?}", d.parts));
        }
        Ok(())
    }
}

/// `true` iff all four legs verify; see [`SeminormalityWitness::verify`].
pub fn verify_seminormality_witness(w: &SeminormalityWitness) -> bool {
    w.verify().is_ok()
}
