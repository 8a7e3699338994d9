//! Finite linear combinations of classes and of tensors of classes, with exact
//! rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::canonical::GraphClass;
use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Element of the span of classes. Zero coefficients are never stored and
/// terms iterate in class order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LinComb {
    terms: BTreeMap<GraphClass, Rational>,
}

impl LinComb {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn from_class(c: GraphClass) -> Self {
        LinComb::term(c, Rational::one())
    }

    pub fn term(c: GraphClass, coeff: Rational) -> Self {
        let mut out = LinComb::zero();
        out.add_term(c, coeff);
        out
    }

    pub fn add_term(&mut self, c: GraphClass, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(c) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, factor: &Rational) {
        for (c, v) in &other.terms {
            self.add_term(c.clone(), v * factor);
        }
    }

    pub fn scale(&self, factor: &Rational) -> LinComb {
        let mut out = LinComb::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn coeff(&self, c: &GraphClass) -> Rational {
        self.terms.get(c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GraphClass, &Rational)> {
        self.terms.iter()
    }

    pub fn classes(&self) -> impl Iterator<Item = &GraphClass> {
        self.terms.keys()
    }

    /// Extends a map defined on classes linearly.
    pub fn try_map<F>(&self, mut f: F) -> Result<LinComb>
    where
        F: FnMut(&GraphClass) -> Result<LinComb>,
    {
        let mut out = LinComb::zero();
        for (c, v) in &self.terms {
            out.add_scaled(&f(c)?, v);
        }
        Ok(out)
    }
}

impl FromIterator<(GraphClass, Rational)> for LinComb {
    fn from_iter<I: IntoIterator<Item = (GraphClass, Rational)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (c, v) in iter {
            out.add_term(c, v);
        }
        out
    }
}

impl Add for &LinComb {
    type Output = LinComb;
    fn add(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &LinComb {
    type Output = LinComb;
    fn sub(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &LinComb {
    type Output = LinComb;
    fn neg(self) -> LinComb {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({v})·{c}")?;
        }
        Ok(())
    }
}

/// Element of a tensor power of the class span.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorComb {
    arity: usize,
    terms: BTreeMap<Vec<GraphClass>, Rational>,
}

impl TensorComb {
    pub fn zero(arity: usize) -> Self {
        TensorComb {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Single pure tensor.
    pub fn pure(factors: Vec<GraphClass>, coeff: Rational) -> Self {
        let mut out = TensorComb::zero(factors.len());
        out.add_term(factors, coeff);
        out
    }

    /// `x` viewed as a one-factor tensor.
    pub fn from_lincomb(x: &LinComb) -> Self {
        let mut out = TensorComb::zero(1);
        for (c, v) in x.iter() {
            out.add_term(vec![c.clone()], v.clone());
        }
        out
    }

    pub fn add_term(&mut self, factors: Vec<GraphClass>, coeff: Rational) {
        assert_eq!(factors.len(), self.arity, "tensor arity mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(factors) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorComb, factor: &Rational) {
        assert_eq!(self.arity, other.arity, "tensor arity mismatch");
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * factor);
        }
    }

    pub fn scale(&self, factor: &Rational) -> TensorComb {
        let mut out = TensorComb::zero(self.arity);
        out.add_scaled(self, factor);
        out
    }

    pub fn coeff(&self, factors: &[GraphClass]) -> Rational {
        self.terms.get(factors).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<GraphClass>, &Rational)> {
        self.terms.iter()
    }

    /// Replaces the factor in `slot` by the tensor `f(factor)`, spliced in
    /// place.
    pub fn try_map_slot<F>(&self, slot: usize, out_arity: usize, mut f: F) -> Result<TensorComb>
    where
        F: FnMut(&GraphClass) -> Result<TensorComb>,
    {
        if slot >= self.arity {
            return Err(Error::invalid(format!("slot {slot} outside arity {}", self.arity)));
        }
        let mut out = TensorComb::zero(self.arity - 1 + out_arity);
        for (k, v) in &self.terms {
            let image = f(&k[slot])?;
            debug_assert_eq!(image.arity, out_arity);
            for (ik, iv) in &image.terms {
                let mut factors = Vec::with_capacity(out.arity);
                factors.extend_from_slice(&k[..slot]);
                factors.extend(ik.iter().cloned());
                factors.extend_from_slice(&k[slot + 1..]);
                out.add_term(factors, v * iv);
            }
        }
        Ok(out)
    }

    /// Exchanges the two factors of an arity-2 tensor.
    pub fn swap(&self) -> TensorComb {
        assert_eq!(self.arity, 2);
        let mut out = TensorComb::zero(2);
        for (k, v) in &self.terms {
            out.add_term(vec![k[1].clone(), k[0].clone()], v.clone());
        }
        out
    }

    /// Tensor product of two tensors.
    pub fn outer(&self, other: &TensorComb) -> TensorComb {
        let mut out = TensorComb::zero(self.arity + other.arity);
        for (a, va) in &self.terms {
            for (b, vb) in &other.terms {
                let mut k = a.clone();
                k.extend(b.iter().cloned());
                out.add_term(k, va * vb);
            }
        }
        out
    }
}

impl Add for &TensorComb {
    type Output = TensorComb;
    fn add(self, rhs: &TensorComb) -> TensorComb {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Sub for &TensorComb {
    type Output = TensorComb;
    fn sub(self, rhs: &TensorComb) -> TensorComb {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl fmt::Debug for TensorComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (arity {})", self.arity);
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({v})·")?;
            for (j, c) in k.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ⊗ ")?;
                }
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::class_of;
    use crate::matrix::AdjMatrix;

    fn k2() -> GraphClass {
        class_of(&AdjMatrix::from_edges(2, &[(1, 2)]).unwrap()).unwrap()
    }

    #[test]
    fn add_scale_and_cancel() {
        let x = LinComb::from_class(k2());
        assert_eq!(&x + &LinComb::zero(), x);
        assert_eq!(x.scale(&rational(1)), x);
        assert!((&x + &x.scale(&rational(-1))).is_zero());
        assert!((&x - &x).is_zero());
        assert_eq!((&x + &x).coeff(&k2()), rational(2));
        assert_eq!((-&x).coeff(&k2()), rational(-1));
    }

    #[test]
    fn tensor_terms_cancel() {
        let mut t = TensorComb::pure(vec![k2(), k2()], ratio(1, 2));
        t.add_term(vec![k2(), k2()], ratio(-1, 2));
        assert!(t.is_zero());
        assert_eq!(t.arity(), 2);
    }
}
