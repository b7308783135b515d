use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{bounds_check, default_probe_bound, regularity_with, BoundCheck, Expectation};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, enumerate_connected_graphs, is_isomorphic, Graph, MinorPattern,
    StructuralPredicates,
};
use crate::monoid::{normality_probe, NormalityStatus};

/// Regularity in `0..=4` that the small-regularity classification assigns
/// to a connected graph, or `None` when it predicts `r ≥ 5`.
///
/// * 0: `C3` or `P1`
/// * 1: `C3 #0 P1` or `P2`
/// * 2: a tree with 3 edges, or a graph containing a triangle with 5 edges
/// * 3: a tree with 4 edges, `C4`, `C5`, or a triangle with 6 edges
/// * 4: bipartite with 5 edges, `C5 #0 P1`, or a triangle with 7 edges
pub fn predicted_regularity_class(g: &Graph) -> Option<i64> {
    let m = g.n_edges();
    let iso = |h: Graph| is_isomorphic(g, &h);
    let tree = g.is_connected() && m + 1 == g.n_vertices();
    let triangle = g.has_triangle();
    let pendant = |cycle| {
        Graph::zero_sum(
            &Graph::cycle(cycle).expect("cycle"),
            &Graph::path(1).expect("P1"),
        )
        .expect("0-sum")
    };
    if iso(Graph::cycle(3).expect("C3")) || iso(Graph::path(1).expect("P1")) {
        Some(0)
    } else if iso(pendant(3)) || iso(Graph::path(2).expect("P2")) {
        Some(1)
    } else if (tree && m == 3) || (triangle && m == 5) {
        Some(2)
    } else if (tree && m == 4)
        || iso(Graph::cycle(4).expect("C4"))
        || iso(Graph::cycle(5).expect("C5"))
        || (triangle && m == 6)
    {
        Some(3)
    } else if (g.is_bipartite() && m == 5) || iso(pendant(5)) || (triangle && m == 7) {
        Some(4)
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOptions {
    pub max_edges: usize,
    /// One graph per isomorphism class instead of the labeled stream.
    pub dedup: bool,
    /// Worker threads; `0` uses the rayon default.
    pub jobs: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            max_edges: 7,
            dedup: true,
            jobs: 0,
        }
    }
}

/// One line of the classification table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub edges: Vec<(usize, usize)>,
    pub canonical_edges: Vec<(usize, usize)>,
    pub n_edges: usize,
    pub predicates: StructuralPredicates,
    pub has_triangle: bool,
    pub normality: NormalityStatus,
    pub probe_bound: i64,
    pub min_interior_degree: Option<i64>,
    pub regularity: Option<i64>,
    pub expected: Option<Expectation>,
    pub agreement: bool,
    pub predicted_class: Option<i64>,
    /// Computed and predicted small-regularity classes coincide.
    pub class_match: bool,
    pub bounds: Vec<BoundCheck>,
}

impl ClassRecord {
    fn new(g: &Graph) -> Result<Self> {
        let verdict = normality_probe(g, default_probe_bound(g))?;
        let status = verdict.status;
        let probe_bound = verdict.bound;
        let report = match status {
            NormalityStatus::VerifiedUpToBound => Some(regularity_with(g, verdict)?),
            NormalityStatus::GapFound => None,
        };
        let regularity = report.as_ref().map(|r| r.regularity);
        let predicted_class = predicted_regularity_class(g);
        let small = regularity.filter(|&r| r <= 4);
        Ok(ClassRecord {
            edges: g.edges().to_vec(),
            canonical_edges: canonical_form(g).edges().to_vec(),
            n_edges: g.n_edges(),
            predicates: g.structural_predicates(),
            has_triangle: g.has_triangle(),
            normality: status,
            probe_bound,
            min_interior_degree: report.as_ref().map(|r| r.min_interior_degree),
            regularity,
            expected: report.as_ref().and_then(|r| r.theorem_expectation),
            agreement: report.as_ref().is_some_and(|r| r.agreement),
            class_match: regularity.is_some() && small == predicted_class,
            bounds: regularity.map(|r| bounds_check(g, r)).unwrap_or_default(),
            predicted_class,
        })
    }

    /// Computed `r ≤ 4` without a passing normality probe.
    pub fn violates_normality_consistency(&self) -> bool {
        self.regularity.is_some_and(|r| r <= 4)
            && self.normality != NormalityStatus::VerifiedUpToBound
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub options: ClassifyOptions,
    pub records: Vec<ClassRecord>,
    /// Graphs skipped because they contain a `K5∖e` minor.
    pub excluded: Vec<Vec<(usize, usize)>>,
}

impl Classification {
    pub fn mismatches(&self) -> Vec<&ClassRecord> {
        self.records.iter().filter(|r| !r.class_match).collect()
    }

    pub fn normality_violations(&self) -> Vec<&ClassRecord> {
        self.records
            .iter()
            .filter(|r| r.violates_normality_consistency())
            .collect()
    }

    pub fn bound_violations(&self) -> Vec<(&ClassRecord, BoundCheck)> {
        self.records
            .iter()
            .flat_map(|r| {
                r.bounds
                    .iter()
                    .filter(|b| !b.satisfied)
                    .map(move |b| (r, *b))
            })
            .collect()
    }

    /// Number of scanned graphs per computed regularity (`None`: not normal).
    pub fn summary(&self) -> BTreeMap<Option<i64>, usize> {
        let mut out = BTreeMap::new();
        for r in &self.records {
            *out.entry(r.regularity).or_insert(0) += 1;
        }
        out
    }
}

/// Computes the regularity of every connected graph with at most
/// `max_edges` edges and compares it with the small-regularity
/// classification. Records are sorted by edge count, then canonical and
/// labeled edge lists.
pub fn classify_small(options: ClassifyOptions) -> Result<Classification> {
    let graphs = enumerate_connected_graphs(options.max_edges, options.dedup);
    let (graphs, excluded): (Vec<Graph>, Vec<Graph>) = graphs
        .into_iter()
        .partition(|g| g.n_edges() < 8 || !g.has_minor(MinorPattern::K5MinusEdge));
    let cache: Mutex<HashMap<Graph, ClassRecord>> = Mutex::new(HashMap::new());
    let run = || -> Result<Vec<ClassRecord>> {
        graphs
            .par_iter()
            .map(|g| {
                let canon = canonical_form(g);
                let known = cache.lock().expect("cache poisoned").get(&canon).cloned();
                let mut record = match known {
                    Some(r) => r,
                    None => {
                        let r = ClassRecord::new(&canon)?;
                        cache
                            .lock()
                            .expect("cache poisoned")
                            .insert(canon, r.clone());
                        r
                    }
                };
                record.edges = g.edges().to_vec();
                Ok(record)
            })
            .collect()
    };
    let mut records = if options.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .map_err(|e| Error::TooLarge(format!("thread pool: {e}")))?
            .install(run)?
    } else {
        run()?
    };
    records.sort_by(|a, b| {
        (a.n_edges, &a.canonical_edges, &a.edges).cmp(&(b.n_edges, &b.canonical_edges, &b.edges))
    });
    Ok(Classification {
        options,
        records,
        excluded: excluded.iter().map(|g| g.edges().to_vec()).collect(),
    })
}
