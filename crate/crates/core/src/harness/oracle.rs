//! Slow, independent reference computations.

use std::collections::BTreeSet;

use crate::canonical::{class_of, GraphClass};
use crate::error::{Error, Result};
use crate::matrix::AdjMatrix;

pub const BRUTE_BASIS_CAP: usize = 4;

/// Every class of degree `n`, found by building all multisets of `n` edges
/// on the labels `1..=2n` and deduplicating.
pub fn brute_basis(n: usize) -> Result<Vec<GraphClass>> {
    if n > BRUTE_BASIS_CAP {
        return Err(Error::Capacity {
            what: "brute-force basis degree",
            cap: BRUTE_BASIS_CAP,
            requested: n,
        });
    }
    let order = 2 * n;
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|a| (a + 1..order).map(move |b| (a, b)))
        .collect();
    let mut out = BTreeSet::new();
    let mut chosen = Vec::with_capacity(n);
    fn rec(
        pairs: &[(usize, usize)],
        from: usize,
        left: usize,
        order: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut BTreeSet<GraphClass>,
    ) -> Result<()> {
        if left == 0 {
            let mut m = AdjMatrix::zero(order);
            for &(a, b) in chosen.iter() {
                m.add_edges(a, b, 1);
            }
            out.insert(class_of(&m)?);
            return Ok(());
        }
        for i in from..pairs.len() {
            chosen.push(pairs[i]);
            rec(pairs, i, left - 1, order, chosen, out)?;
            chosen.pop();
        }
        Ok(())
    }
    rec(&pairs, 0, n, order, &mut chosen, &mut out)?;
    Ok(out.into_iter().collect())
}

/// Whether some relabeling carries `a` onto `b`, by trying all of them.
pub fn brute_isomorphic(a: &AdjMatrix, b: &AdjMatrix) -> bool {
    if a.order() != b.order() || a.degree() != b.degree() {
        return false;
    }
    let n = a.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn rec(a: &AdjMatrix, b: &AdjMatrix, k: usize, perm: &mut [usize], used: &mut [bool]) -> bool {
        let n = a.order();
        if k == n {
            return true;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            // vertex k of a goes to v of b; check against earlier choices
            if (0..k).all(|j| a.entry(k, j) == b.entry(v, perm[j])) {
                used[v] = true;
                perm[k] = v;
                if rec(a, b, k + 1, perm, used) {
                    return true;
                }
                used[v] = false;
            }
        }
        false
    }
    rec(a, b, 0, &mut perm, &mut used)
}

/// Number of relabelings fixing `m`, by trying all of them.
pub fn brute_aut_order(m: &AdjMatrix) -> u64 {
    let n = m.order();
    let mut count = 0;
    let mut perm: Vec<usize> = vec![0; n];
    let mut used = vec![false; n];
    fn rec(m: &AdjMatrix, k: usize, perm: &mut [usize], used: &mut [bool], count: &mut u64) {
        let n = m.order();
        if k == n {
            *count += 1;
            return;
        }
        for v in 0..n {
            if !used[v] && (0..k).all(|j| m.entry(k, j) == m.entry(v, perm[j])) {
                used[v] = true;
                perm[k] = v;
                rec(m, k + 1, perm, used, count);
                used[v] = false;
            }
        }
    }
    rec(m, 0, &mut perm, &mut used, &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::graded_basis;

    #[test]
    fn brute_basis_matches_small_counts() {
        let dims: Vec<usize> = (0..=3).map(|n| brute_basis(n).unwrap().len()).collect();
        assert_eq!(dims, vec![1, 1, 3, 8]);
        assert!(brute_basis(5).is_err());
        for n in 0..=3 {
            assert_eq!(brute_basis(n).unwrap(), graded_basis(n).unwrap());
        }
    }

    #[test]
    fn brute_isomorphism() {
        let p3 = AdjMatrix::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        let q = AdjMatrix::from_edges(3, &[(1, 3), (2, 3)]).unwrap();
        let t = AdjMatrix::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(brute_isomorphic(&p3, &q));
        assert!(!brute_isomorphic(&p3, &t));
        assert_eq!(brute_aut_order(&t), 6);
        assert_eq!(brute_aut_order(&p3), 2);
    }
}
