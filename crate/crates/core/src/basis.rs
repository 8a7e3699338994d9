//! Graded bases: every class of a given degree.

use std::collections::BTreeSet;

use crate::canonical::{class_of, class_of_ext, ClassKind, GraphClass};
use crate::error::{Error, Result};
use crate::matrix::{AdjMatrix, ExtAdjMatrix};
use crate::memo::Memo;

pub const DEFAULT_DEGREE_CAP: usize = 5;

static BASIS: Memo<usize, Vec<GraphClass>> = Memo::new();

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Capacity {
            what: "degree",
            cap,
            requested: n,
        });
    }
    Ok(())
}

/// All plain classes of degree `n`, in class order.
pub fn graded_basis(n: usize) -> Result<Vec<GraphClass>> {
    graded_basis_with_cap(n, DEFAULT_DEGREE_CAP)
}

pub fn graded_basis_with_cap(n: usize, cap: usize) -> Result<Vec<GraphClass>> {
    check_cap(n, cap)?;
    BASIS.get_or_try(&n, || {
        if n == 0 {
            return Ok(vec![GraphClass::zero(ClassKind::Plain)]);
        }
        // every graph of degree n is a graph of degree n - 1 plus one edge,
        // with zero, one or two fresh endpoints
        let mut out = BTreeSet::new();
        for g in graded_basis_with_cap(n - 1, cap)? {
            let k = g.order();
            let base = g.rep().direct_sum(&AdjMatrix::zero(2));
            for a in 0..k + 1 {
                for b in a + 1..k + 2 {
                    if b == k + 1 && a < k {
                        continue;
                    }
                    let mut m = base.clone();
                    m.add_edges(a, b, 1);
                    out.insert(class_of(&m)?);
                }
            }
        }
        Ok(out.into_iter().collect())
    })
}

pub fn graded_dim(n: usize) -> Result<usize> {
    Ok(graded_basis(n)?.len())
}

/// All extended classes of internal degree `n` carrying at most `max_legs`
/// external legs in total, in class order. As in the plain basis the
/// internal part has no isolated vertex, so every leg sits on a vertex that
/// meets an edge.
pub fn graded_basis_ext(n: usize, max_legs: u32) -> Result<Vec<GraphClass>> {
    let mut out = BTreeSet::new();
    for g in graded_basis(n)? {
        let mut legs = vec![0u32; g.order()];
        leg_vectors(&mut legs, 0, max_legs, &mut |legs| {
            let d = ExtAdjMatrix::new(g.rep().clone(), legs.to_vec())?;
            out.insert(class_of_ext(&d)?);
            Ok(())
        })?;
    }
    Ok(out.into_iter().collect())
}

fn leg_vectors(
    legs: &mut [u32],
    i: usize,
    budget: u32,
    f: &mut dyn FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    if i == legs.len() {
        return f(legs);
    }
    for v in 0..=budget {
        legs[i] = v;
        leg_vectors(legs, i + 1, budget - v, f)?;
    }
    legs[i] = 0;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        let dims: Vec<usize> = (0..=4).map(|n| graded_dim(n).unwrap()).collect();
        assert_eq!(dims, vec![1, 1, 3, 8, 23]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(graded_basis(6), Err(Error::Capacity { .. })));
        assert!(graded_basis_with_cap(3, 2).is_err());
    }

    #[test]
    fn basis_is_sorted_and_homogeneous() {
        let b = graded_basis(3).unwrap();
        assert!(b.windows(2).all(|w| w[0] < w[1]));
        assert!(b.iter().all(|c| c.degree() == 3));
    }

    #[test]
    fn extended_basis_small() {
        assert_eq!(graded_basis_ext(0, 2).unwrap().len(), 1);
        // legs (0,0), (1,0), (2,0), (1,1)
        let b = graded_basis_ext(1, 2).unwrap();
        assert_eq!(b.len(), 4);
        assert!(b.iter().all(|c| c.total_legs() <= 2));
        assert!(b.iter().all(|c| c.kind() == ClassKind::Extended));
    }
}
