//! The facet system of the cut cone of a `K5`-minor-free graph.
//!
//! For such graphs `cone(M_G)` is cut out by
//!
//! * `0 ≤ x_e ≤ α` for every edge `e` lying in no triangle, and
//! * `Σ_{f∈F} x_f − Σ_{e∈C∖F} x_e ≤ (|F| − 1)·α` for every induced cycle `C`
//!   and every odd-sized `F ⊆ E(C)`.
//!
//! A point is in the interior iff every row holds strictly.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, MinorPattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoxSense {
    /// `x_e ≥ 0`
    NonNegative,
    /// `x_e ≤ α`
    AtMostAlpha,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxRow {
    pub edge: usize,
    pub sense: BoxSense,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleRow {
    /// Edge coordinates of the induced cycle.
    pub cycle: Vec<usize>,
    /// The odd subset carrying coefficient +1.
    pub odd: Vec<usize>,
}

/// A homogeneous row `Σ coef·x_e ≤ alpha_coef·α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub terms: Vec<(usize, i64)>,
    pub alpha_coef: i64,
}

impl Row {
    /// `alpha_coef·α − Σ coef·x_e`; nonnegative iff the row holds.
    pub fn slack(&self, x: &[i64], alpha: i64) -> i128 {
        let lhs: i128 = self
            .terms
            .iter()
            .map(|&(e, c)| i128::from(c) * i128::from(x[e]))
            .sum();
        i128::from(self.alpha_coef) * i128::from(alpha) - lhs
    }

    pub fn holds(&self, x: &[i64], alpha: i64, strict: bool) -> bool {
        let s = self.slack(x, alpha);
        if strict {
            s > 0
        } else {
            s >= 0
        }
    }

    /// Largest edge coordinate the row mentions.
    pub fn last_edge(&self) -> Option<usize> {
        self.terms.iter().map(|&(e, _)| e).max()
    }
}

impl From<&BoxRow> for Row {
    fn from(b: &BoxRow) -> Self {
        match b.sense {
            BoxSense::NonNegative => Row {
                terms: vec![(b.edge, -1)],
                alpha_coef: 0,
            },
            BoxSense::AtMostAlpha => Row {
                terms: vec![(b.edge, 1)],
                alpha_coef: 1,
            },
        }
    }
}

impl From<&CycleRow> for Row {
    fn from(c: &CycleRow) -> Self {
        let terms = c
            .cycle
            .iter()
            .map(|&e| (e, if c.odd.contains(&e) { 1 } else { -1 }))
            .collect();
        Row {
            terms,
            alpha_coef: c.odd.len() as i64 - 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetSystem {
    pub n_edges: usize,
    pub box_rows: Vec<BoxRow>,
    pub cycle_rows: Vec<CycleRow>,
    pub graph_fingerprint: u64,
}

impl FacetSystem {
    /// Builds the rows without checking for a `K5` minor. The rows are valid
    /// inequalities for every graph; they describe the cone only when the
    /// graph is `K5`-minor-free.
    pub fn valid_rows(g: &Graph) -> Self {
        let mut box_rows = Vec::new();
        for e in 0..g.n_edges() {
            if !g.edge_in_triangle(e).expect("edge index in range") {
                box_rows.push(BoxRow {
                    edge: e,
                    sense: BoxSense::NonNegative,
                });
                box_rows.push(BoxRow {
                    edge: e,
                    sense: BoxSense::AtMostAlpha,
                });
            }
        }
        let mut cycle_rows = Vec::new();
        for c in g.induced_cycles() {
            let k = c.edge_indices.len();
            for mask in 0u64..1 << k {
                if mask.count_ones() % 2 == 1 {
                    let odd = (0..k)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| c.edge_indices[i])
                        .collect();
                    cycle_rows.push(CycleRow {
                        cycle: c.edge_indices.clone(),
                        odd,
                    });
                }
            }
        }
        let mut hasher = std::collections::hash_map::DefaultHasher::new();
        g.hash(&mut hasher);
        FacetSystem {
            n_edges: g.n_edges(),
            box_rows,
            cycle_rows,
            graph_fingerprint: hasher.finish(),
        }
    }

    pub fn row_count(&self) -> usize {
        self.box_rows.len() + self.cycle_rows.len()
    }

    pub fn rows(&self) -> Vec<Row> {
        self.box_rows
            .iter()
            .map(Row::from)
            .chain(self.cycle_rows.iter().map(Row::from))
            .collect()
    }

    /// `(x, α)` satisfies every row (strictly if `strict`).
    pub fn contains(&self, x: &[i64], alpha: i64, strict: bool) -> bool {
        if self.n_edges == 0 {
            return if strict { alpha > 0 } else { alpha >= 0 };
        }
        self.box_rows
            .iter()
            .map(Row::from)
            .chain(self.cycle_rows.iter().map(Row::from))
            .all(|r| r.holds(x, alpha, strict))
    }
}

/// `{"box": [{"edge": i}], "cycles": [{"cycle": [...], "F": [...]}]}`; one box
/// entry per triangle-free edge stands for both `0 ≤ x_e` and `x_e ≤ α`.
impl Serialize for FacetSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct BoxJson {
            edge: usize,
        }
        #[derive(Serialize)]
        struct CycleJson<'a> {
            cycle: &'a [usize],
            #[serde(rename = "F")]
            odd: &'a [usize],
        }
        let boxes: Vec<BoxJson> = self
            .box_rows
            .iter()
            .filter(|b| b.sense == BoxSense::NonNegative)
            .map(|b| BoxJson { edge: b.edge })
            .collect();
        let cycles: Vec<CycleJson> = self
            .cycle_rows
            .iter()
            .map(|c| CycleJson {
                cycle: &c.cycle,
                odd: &c.odd,
            })
            .collect();
        let mut s = serializer.serialize_struct("FacetSystem", 2)?;
        s.serialize_field("box", &boxes)?;
        s.serialize_field("cycles", &cycles)?;
        s.end()
    }
}

fn cache() -> &'static Mutex<HashMap<Graph, Arc<FacetSystem>>> {
    static CACHE: OnceLock<Mutex<HashMap<Graph, Arc<FacetSystem>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The facet system of `cone(M_G)`, cached per graph. Fails with the branch
/// sets of a `K5` minor when the description does not apply.
pub fn facet_system(g: &Graph) -> Result<Arc<FacetSystem>> {
    if let Some(fs) = cache().lock().expect("facet cache poisoned").get(g) {
        return Ok(Arc::clone(fs));
    }
    if let Some(branch_sets) = g.find_minor(MinorPattern::K5) {
        return Err(Error::K5Minor { branch_sets });
    }
    let fs = Arc::new(FacetSystem::valid_rows(g));
    cache()
        .lock()
        .expect("facet cache poisoned")
        .insert(g.clone(), Arc::clone(&fs));
    Ok(fs)
}
