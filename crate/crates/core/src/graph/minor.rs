//! Minor testing for a handful of fixed patterns by branch-set enumeration.
//!
//! A graph has `H` as a minor iff its vertices contain `|V(H)|` disjoint
//! connected branch sets such that the quotient graph on the branch sets
//! contains `H` as a subgraph.

use serde::{Deserialize, Serialize};

use super::{bits, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MinorPattern {
    K4,
    K5,
    K5MinusEdge,
    K33,
}

impl MinorPattern {
    fn branch_count(self) -> usize {
        match self {
            MinorPattern::K4 => 4,
            MinorPattern::K5 | MinorPattern::K5MinusEdge => 5,
            MinorPattern::K33 => 6,
        }
    }

    fn edge_count(self) -> usize {
        match self {
            MinorPattern::K4 => 6,
            MinorPattern::K5 => 10,
            MinorPattern::K5MinusEdge | MinorPattern::K33 => 9,
        }
    }

    /// `quotient[i]` is the adjacency mask of branch set `i`.
    fn realized_by(self, quotient: &[u64]) -> bool {
        let h = quotient.len();
        let pairs: usize = quotient
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2;
        match self {
            MinorPattern::K4 | MinorPattern::K5 => pairs == h * (h - 1) / 2,
            MinorPattern::K5MinusEdge => pairs + 1 >= h * (h - 1) / 2,
            MinorPattern::K33 => {
                // some 3-subset containing branch set 0 is fully joined to its complement
                (0u64..1 << 6)
                    .filter(|s| s & 1 == 1 && s.count_ones() == 3)
                    .any(|side| {
                        let other = 0b111111 & !side;
                        bits(side).all(|i| quotient[i] & other == other)
                    })
            }
        }
    }
}

impl std::fmt::Display for MinorPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MinorPattern::K4 => "K4",
            MinorPattern::K5 => "K5",
            MinorPattern::K5MinusEdge => "K5-e",
            MinorPattern::K33 => "K33",
        })
    }
}

impl std::str::FromStr for MinorPattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "K4" => Ok(MinorPattern::K4),
            "K5" => Ok(MinorPattern::K5),
            "K5-e" | "K5_minus_e" => Ok(MinorPattern::K5MinusEdge),
            "K33" | "K3,3" => Ok(MinorPattern::K33),
            other => Err(format!("unknown minor pattern {other:?}")),
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    pattern: MinorPattern,
    h: usize,
    order: Vec<usize>,
    labels: Vec<usize>,
}

impl Search<'_> {
    /// Assigns vertex `order[pos]` to "unused" (0) or a branch set `1..=h`.
    /// Branch sets are opened in order, so each partition is visited once.
    fn run(&mut self, pos: usize, opened: usize) -> Option<Vec<Vec<usize>>> {
        let remaining = self.order.len() - pos;
        if opened + remaining < self.h {
            return None;
        }
        if pos == self.order.len() {
            return self.check();
        }
        let v = self.order[pos];
        for label in 0..=(opened + 1).min(self.h) {
            self.labels[v] = label;
            let next_opened = opened.max(label);
            if let Some(found) = self.run(pos + 1, next_opened) {
                return Some(found);
            }
        }
        self.labels[v] = 0;
        None
    }

    fn check(&self) -> Option<Vec<Vec<usize>>> {
        let mut sets = vec![0u64; self.h];
        for &v in &self.order {
            let l = self.labels[v];
            if l > 0 {
                sets[l - 1] |= 1 << v;
            }
        }
        if sets
            .iter()
            .any(|&s| s == 0 || self.g.reach(s & s.wrapping_neg(), s) != s)
        {
            return None;
        }
        let mut quotient = vec![0u64; self.h];
        for (i, &si) in sets.iter().enumerate() {
            let nb = bits(si).fold(0u64, |m, v| m | self.g.neighbor_mask(v));
            for (j, &sj) in sets.iter().enumerate() {
                if i != j && nb & sj != 0 {
                    quotient[i] |= 1 << j;
                }
            }
        }
        self.pattern
            .realized_by(&quotient)
            .then(|| sets.iter().map(|&s| bits(s).collect()).collect())
    }
}

impl Graph {
    /// Branch sets realizing `pattern` as a minor, if any exist.
    pub fn find_minor(&self, pattern: MinorPattern) -> Option<Vec<Vec<usize>>> {
        let h = pattern.branch_count();
        let active = self.non_isolated_mask();
        if (active.count_ones() as usize) < h || self.n_edges() < pattern.edge_count() {
            return None;
        }
        let mut order: Vec<usize> = bits(active).collect();
        // high-degree vertices first tends to open useful branch sets early
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let mut search = Search {
            g: self,
            pattern,
            h,
            order,
            labels: vec![0; self.n_vertices()],
        };
        search.run(0, 0)
    }

    pub fn has_minor(&self, pattern: MinorPattern) -> bool {
        self.find_minor(pattern).is_some()
    }
}
