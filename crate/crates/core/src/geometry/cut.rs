use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, Graph};

/// Cut vectors are enumerated exhaustively; beyond this many vertices the
/// `2^(n-1)` classes are not worth listing.
pub const MAX_CUT_VERTICES: usize = 24;

/// Cut vector `δ_A` together with the representative of `{A, A^c}` that
/// avoids vertex 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CutVector {
    pub subset: Vec<usize>,
    pub coords: Vec<u8>,
}

impl CutVector {
    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|&&c| c == 1).count()
    }
}

fn canonical_mask(g: &Graph, mask: u64) -> u64 {
    if mask & 1 == 1 {
        full_mask(g.n_vertices()) & !mask
    } else {
        mask
    }
}

fn cut_from_mask(g: &Graph, mask: u64) -> CutVector {
    let mask = canonical_mask(g, mask);
    let coords = g
        .edges()
        .iter()
        .map(|&(u, v)| ((mask >> u & 1) ^ (mask >> v & 1)) as u8)
        .collect();
    CutVector {
        subset: bits(mask).collect(),
        coords,
    }
}

/// `δ_A` for a vertex subset `A`.
pub fn cut_vector(g: &Graph, subset: &[usize]) -> Result<CutVector> {
    let mut mask = 0u64;
    for &v in subset {
        if v >= g.n_vertices() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n_vertices: g.n_vertices(),
            });
        }
        mask |= 1 << v;
    }
    Ok(cut_from_mask(g, mask))
}

/// Ordering key of a class `{A, A^c}`: the smaller side first, ties broken by
/// the lexicographically smaller vertex list. For `K5` this lists the empty
/// cut, then the five single-vertex cuts, then the ten two-vertex cuts.
fn class_key(g: &Graph, canonical: u64) -> (u32, Vec<usize>) {
    let other = full_mask(g.n_vertices()) & !canonical;
    let a = (canonical.count_ones(), bits(canonical).collect::<Vec<_>>());
    let b = (other.count_ones(), bits(other).collect::<Vec<_>>());
    a.min(b)
}

/// One cut vector per class `{A, A^c}`, `2^(n-1)` in total, in the fixed
/// index order used by decompositions and certificates.
pub fn enumerate_cut_vectors(g: &Graph) -> Result<Vec<CutVector>> {
    let n = g.n_vertices();
    if n > MAX_CUT_VERTICES {
        return Err(Error::TooLarge(format!(
            "{n} vertices: 2^{} cut classes",
            n - 1
        )));
    }
    let mut masks: Vec<u64> = (0u64..1 << (n - 1)).map(|m| m << 1).collect();
    masks.sort_by_cached_key(|&m| class_key(g, m));
    Ok(masks.into_iter().map(|m| cut_from_mask(g, m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_single_vertex_cut() {
        let k5 = Graph::complete(5).unwrap();
        let a1 = cut_vector(&k5, &[0]).unwrap();
        assert_eq!(a1.coords, vec![1, 1, 1, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(a1.subset, vec![1, 2, 3, 4]);
    }

    #[test]
    fn empty_cut_is_zero() {
        let g = Graph::cycle(5).unwrap();
        assert!(cut_vector(&g, &[]).unwrap().coords.iter().all(|&c| c == 0));
        assert!(cut_vector(&g, &[7]).is_err());
    }

    #[test]
    fn bipartition_of_c4_cuts_everything() {
        let g = Graph::cycle(4).unwrap();
        assert_eq!(cut_vector(&g, &[0, 2]).unwrap().coords, vec![1, 1, 1, 1]);
    }

    #[test]
    fn counts_and_parity() {
        let p1 = enumerate_cut_vectors(&Graph::path(1).unwrap()).unwrap();
        assert_eq!(
            p1.iter().map(|c| c.coords.clone()).collect::<Vec<_>>(),
            vec![vec![0], vec![1]]
        );
        let c4 = enumerate_cut_vectors(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(c4.len(), 8);
        assert!(c4.iter().all(|c| c.weight() % 2 == 0));
        let distinct: std::collections::HashSet<_> = c4.iter().map(|c| &c.coords).collect();
        assert_eq!(distinct.len(), 8);
    }
}
