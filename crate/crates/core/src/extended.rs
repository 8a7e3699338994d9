//! The Hopf algebras on extended matrices.
//!
//! The operations of [`crate::hopf`] already act on extended classes; the
//! functions here lift plain operands to extended classes first, so the
//! result always lives in the extended span.

use crate::basis;
use crate::canonical::{class_of, ClassKind, GraphClass};
use crate::error::Result;
use crate::hopf;
use crate::linear::{rational, LinComb, TensorComb};

/// Reads every class of `x` as an extended class.
pub fn lift(x: &LinComb) -> LinComb {
    x.iter()
        .map(|(c, v)| (c.with_kind(ClassKind::Extended), v.clone()))
        .collect()
}

/// Drops the external legs, keeping the internal matrix.
pub fn forget_legs(x: &LinComb) -> Result<LinComb> {
    x.try_map(|c| Ok(LinComb::from_class(forget_class(c)?)))
}

pub fn forget_class(c: &GraphClass) -> Result<GraphClass> {
    class_of(c.rep())
}

/// `forget ⊗ … ⊗ forget`.
pub fn forget_legs_tensor(t: &TensorComb) -> Result<TensorComb> {
    let mut out = t.clone();
    for slot in 0..t.arity() {
        out = out.try_map_slot(slot, 1, |c| {
            Ok(TensorComb::pure(vec![forget_class(c)?], rational(1)))
        })?;
    }
    Ok(out)
}

pub fn coproduct_ext(x: &LinComb) -> Result<TensorComb> {
    hopf::coproduct(&lift(x))
}

pub fn reduced_coproduct_ext(x: &LinComb) -> Result<TensorComb> {
    hopf::reduced_coproduct(&lift(x))
}

pub fn coproduct1_ext(x: &LinComb) -> Result<TensorComb> {
    hopf::coproduct1(&lift(x))
}

pub fn mult_oplus_ext(x: &LinComb, y: &LinComb) -> Result<LinComb> {
    hopf::mult_oplus(&lift(x), &lift(y))
}

pub fn product_bullet_ext(x: &LinComb, y: &LinComb) -> Result<LinComb> {
    hopf::product_bullet(&lift(x), &lift(y))
}

pub fn antipode_ext(x: &LinComb) -> Result<LinComb> {
    hopf::antipode(&lift(x))
}

pub fn antipode1_ext(x: &LinComb) -> Result<LinComb> {
    hopf::antipode1(&lift(x))
}

pub fn lie_bracket_ext(x: &LinComb, y: &LinComb) -> Result<LinComb> {
    hopf::lie_bracket(&lift(x), &lift(y))
}

pub fn graded_basis_ext(n: usize, max_legs: u32) -> Result<Vec<GraphClass>> {
    basis::graded_basis_ext(n, max_legs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::class_of_ext;
    use crate::matrix::{AdjMatrix, ExtAdjMatrix};

    fn ext(order: usize, edges: &[(usize, usize)], legs: &[u32]) -> GraphClass {
        let m = AdjMatrix::from_edges(order, edges).unwrap();
        class_of_ext(&ExtAdjMatrix::new(m, legs.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn k2_with_legs_is_primitive() {
        let k = LinComb::from_class(ext(2, &[(1, 2)], &[1, 1]));
        assert_eq!(coproduct_ext(&k).unwrap().len(), 2);
        assert!(reduced_coproduct_ext(&k).unwrap().is_zero());
    }

    #[test]
    fn triangle_with_one_leg() {
        let t = LinComb::from_class(ext(3, &[(1, 2), (2, 3), (1, 3)], &[1, 0, 0]));
        let reduced = reduced_coproduct_ext(&t).unwrap();
        let total: i64 = reduced
            .iter()
            .map(|(k, v)| {
                assert_eq!(k[0].total_legs(), 0);
                assert_eq!(k[1].total_legs(), 1);
                assert_eq!(k[1].degree(), 2);
                i64::try_from(v.to_integer()).unwrap()
            })
            .sum();
        assert_eq!(total, 3);
    }

    #[test]
    fn zero_coproduct() {
        let z = GraphClass::zero(ClassKind::Extended);
        assert_eq!(
            coproduct_ext(&LinComb::from_class(z.clone())).unwrap(),
            TensorComb::pure(vec![z.clone(), z], rational(1))
        );
    }

    #[test]
    fn forgetting_legs() {
        let k = ext(2, &[(1, 2)], &[1, 1]);
        let plain = class_of(&AdjMatrix::from_edges(2, &[(1, 2)]).unwrap()).unwrap();
        assert_eq!(
            forget_legs(&LinComb::from_class(k.clone())).unwrap(),
            LinComb::from_class(plain.clone())
        );
        assert_eq!(forget_class(&k).unwrap().degree(), k.degree());
        let z = GraphClass::zero(ClassKind::Extended);
        assert!(forget_class(&z).unwrap().is_zero());
    }

    #[test]
    fn forget_intertwines_coproduct() {
        for c in graded_basis_ext(3, 2).unwrap() {
            let x = LinComb::from_class(c);
            let lhs = forget_legs_tensor(&coproduct_ext(&x).unwrap()).unwrap();
            let rhs = hopf::coproduct(&forget_legs(&x).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn leg_splits_are_not_associative() {
        let x = LinComb::from_class(ext(2, &[(1, 2)], &[0, 0]));
        let y = LinComb::from_class(ext(2, &[(1, 2)], &[0, 1]));
        let left = product_bullet_ext(&product_bullet_ext(&x, &y).unwrap(), &y).unwrap();
        let right = product_bullet_ext(&x, &product_bullet_ext(&y, &y).unwrap()).unwrap();
        assert_ne!(left, right);
    }
}
