use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::cut::enumerate_cut_vectors;
use super::facets::facet_system;
use super::point::LatticePoint;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_dim(g: &Graph, p: &LatticePoint) -> Result<()> {
    if p.dim() != g.n_edges() {
        return Err(Error::DimensionMismatch {
            expected: g.n_edges(),
            found: p.dim(),
        });
    }
    Ok(())
}

/// Lattice membership in `gp(M_G)`: every cycle has even coordinate sum.
/// Checking a cycle-space basis suffices; `α` is unconstrained.
pub fn in_group(g: &Graph, p: &LatticePoint) -> Result<bool> {
    check_dim(g, p)?;
    Ok(g.cycle_space_basis().iter().all(|c| {
        c.edge_indices
            .iter()
            .map(|&e| p.x[e])
            .sum::<i64>()
            .rem_euclid(2)
            == 0
    }))
}

/// Membership in `cone(M_G)` (or its interior when `strict`) through the
/// facet rows. Requires a `K5`-minor-free graph.
pub fn in_cone(g: &Graph, p: &LatticePoint, strict: bool) -> Result<bool> {
    check_dim(g, p)?;
    let fs = facet_system(g)?;
    Ok(fs.contains(&p.x, p.alpha, strict))
}

/// Checks `Σ c_i (δ_i, 1) = p` with every `c_i > 0`, the coefficients indexed
/// like [`enumerate_cut_vectors`]. Such a combination places `p` in the
/// interior of the cone for every graph, `K5` minors included.
pub fn verify_positive_combination(
    g: &Graph,
    p: &LatticePoint,
    coeffs: &[BigRational],
) -> Result<bool> {
    check_dim(g, p)?;
    let cuts = enumerate_cut_vectors(g)?;
    if coeffs.len() != cuts.len() {
        return Err(Error::DimensionMismatch {
            expected: cuts.len(),
            found: coeffs.len(),
        });
    }
    if coeffs.iter().any(|c| !c.is_positive()) {
        return Ok(false);
    }
    let total: BigRational = coeffs.iter().sum();
    if total != BigRational::from_integer(BigInt::from(p.alpha)) {
        return Ok(false);
    }
    for (e, &target) in p.x.iter().enumerate() {
        let mut sum = BigRational::zero();
        for (c, cut) in coeffs.iter().zip(&cuts) {
            if cut.coords[e] == 1 {
                sum += c;
            }
        }
        if sum != BigRational::from_integer(BigInt::from(target)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratios(values: &[i64]) -> Vec<BigRational> {
        values
            .iter()
            .map(|&v| BigRational::from_integer(BigInt::from(v)))
            .collect()
    }

    #[test]
    fn group_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert!(in_group(&k5, &LatticePoint::constant(10, 2, 4)).unwrap());
        let c3 = Graph::cycle(3).unwrap();
        assert!(!in_group(&c3, &LatticePoint::new(vec![1, 0, 0], 5)).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert!(in_group(&c5, &"2,1,1,1,1,3".parse().unwrap()).unwrap());
        assert!(in_group(&c5, &LatticePoint::new(vec![1], 1)).is_err());
    }

    #[test]
    fn cone_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(in_cone(&c4, &LatticePoint::constant(4, 1, 2), true).unwrap());
        let k4 = Graph::complete(4).unwrap();
        assert!(in_cone(&k4, &LatticePoint::constant(6, 2, 4), true).unwrap());
        // interior of the cone but off the lattice
        assert!(in_cone(&k4, &LatticePoint::constant(6, 1, 2), true).unwrap());
        assert!(!in_group(&k4, &LatticePoint::constant(6, 1, 2)).unwrap());
        let c3 = Graph::cycle(3).unwrap();
        assert!(!in_cone(&c3, &"1,1,2,2".parse().unwrap(), true).unwrap());
        assert!(in_cone(&c3, &"1,1,2,2".parse().unwrap(), false).unwrap());
        assert!(in_cone(
            &Graph::complete(5).unwrap(),
            &LatticePoint::constant(10, 2, 4),
            true
        )
        .is_err());
    }

    #[test]
    fn edgeless_graph() {
        let g = Graph::new(1, []).unwrap();
        let p = LatticePoint::new(vec![], 0);
        assert!(in_cone(&g, &p, false).unwrap());
        assert!(!in_cone(&g, &p, true).unwrap());
        assert!(in_cone(&g, &LatticePoint::new(vec![], 1), true).unwrap());
    }

    #[test]
    fn positive_combinations() {
        let k5 = Graph::complete(5).unwrap();
        assert!(verify_positive_combination(
            &k5,
            &LatticePoint::constant(10, 8, 16),
            &ratios(&[1; 16])
        )
        .unwrap());
        let mut zeroed = ratios(&[1; 16]);
        zeroed[3] = BigRational::zero();
        assert!(
            !verify_positive_combination(&k5, &LatticePoint::constant(10, 8, 16), &zeroed).unwrap()
        );
        let c3 = Graph::cycle(3).unwrap();
        assert!(verify_positive_combination(
            &c3,
            &LatticePoint::constant(3, 2, 4),
            &ratios(&[1; 4])
        )
        .unwrap());
        assert!(!verify_positive_combination(
            &c3,
            &LatticePoint::constant(3, 0, 0),
            &ratios(&[0; 4])
        )
        .unwrap());
        assert!(verify_positive_combination(
            &c3,
            &LatticePoint::constant(3, 2, 4),
            &ratios(&[1; 3])
        )
        .is_err());
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert!(
            verify_positive_combination(&c3, &LatticePoint::constant(3, 1, 2), &vec![half; 4])
                .unwrap()
        );
    }
}
