//! Independent brute-force oracles.

#![allow(dead_code)]

use std::collections::HashSet;

use cutlab::geometry::enumerate_cut_vectors;
use cutlab::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Every sum of a multiset of `alpha` cut vectors of `g`.
pub fn multiset_sums(g: &Graph, alpha: usize) -> HashSet<Vec<i64>> {
    let cuts: Vec<Vec<i64>> = enumerate_cut_vectors(g)
        .unwrap()
        .into_iter()
        .map(|c| c.coords.into_iter().map(i64::from).collect())
        .collect();
    let mut out = HashSet::new();
    let mut acc = vec![0i64; g.n_edges()];
    fn go(
        cuts: &[Vec<i64>],
        start: usize,
        left: usize,
        acc: &mut Vec<i64>,
        out: &mut HashSet<Vec<i64>>,
    ) {
        if left == 0 {
            out.insert(acc.clone());
            return;
        }
        for i in start..cuts.len() {
            for (a, c) in acc.iter_mut().zip(&cuts[i]) {
                *a += c;
            }
            go(cuts, i, left - 1, acc, out);
            for (a, c) in acc.iter_mut().zip(&cuts[i]) {
                *a -= c;
            }
        }
    }
    go(&cuts, 0, alpha, &mut acc, &mut out);
    out
}

/// Every point of `{0..=alpha}^m`.
pub fn box_points(m: usize, alpha: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=alpha).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// Decides whether `(x, alpha)` is a nonnegative rational combination of the
/// lifted cut vectors by an exact phase-one simplex (Bland's rule) on
/// `A λ = b, λ ≥ 0`.
pub fn in_rational_cone(g: &Graph, x: &[i64], alpha: i64) -> bool {
    let cuts = enumerate_cut_vectors(g).unwrap();
    let m = x.len() + 1;
    let n = cuts.len();
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    // tableau rows: [A | I | b], with b made nonnegative
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for r in 0..m {
        let mut row: Vec<BigRational> = (0..n)
            .map(|j| {
                if r < x.len() {
                    q(i64::from(cuts[j].coords[r]))
                } else {
                    q(1)
                }
            })
            .collect();
        let mut rhs = if r < x.len() { q(x[r]) } else { q(alpha) };
        if rhs.is_negative() {
            row.iter_mut().for_each(|v| *v = -v.clone());
            rhs = -rhs;
        }
        row.extend((0..m).map(|i| if i == r { q(1) } else { q(0) }));
        row.push(rhs);
        t.push(row);
    }
    let width = n + m;
    let mut basis: Vec<usize> = (n..n + m).collect();
    // objective: minimize the sum of artificials; reduced costs
    let reduced = |t: &Vec<Vec<BigRational>>, basis: &Vec<usize>, j: usize| -> BigRational {
        let cost = |k: usize| {
            if k >= n {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        };
        let mut z = BigRational::zero();
        for (r, &b) in basis.iter().enumerate() {
            z += cost(b) * &t[r][j];
        }
        cost(j) - z
    };
    while let Some(enter) = (0..width).find(|&j| reduced(&t, &basis, j).is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..m {
            if t[r][enter].is_positive() {
                let ratio = &t[r][width] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            break;
        };
        let pivot = t[pr][enter].clone();
        for v in t[pr].iter_mut() {
            *v = &*v / &pivot;
        }
        let prow = t[pr].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&prow) {
                    *v -= &f * p;
                }
            }
        }
        basis[pr] = enter;
    }
    basis
        .iter()
        .enumerate()
        .all(|(r, &b)| b < n || t[r][width].is_zero())
}
