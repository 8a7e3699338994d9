//! The two Hopf structures on the span of classes.
//!
//! * `(⊕, Δ)`: block sum with the contraction coproduct. For a connected
//!   class `M`, `Δ M = M ⊗ 0 + 0 ⊗ M + Σ (⊕ M_B) ⊗ (M ⧸ {B})`, the sum running
//!   over every nonempty family of disjoint vertex blocks, each inducing a
//!   connected submatrix on at least two vertices, other than the single
//!   block holding all vertices. Disconnected classes take the product of
//!   the coproducts of their components.
//! * `(•, Δ₁)`: insertion product with the component unshuffle.
//!
//! Both antipodes are computed by the convolution-inverse recursion over the
//! reduced coproduct. Extended classes go through the same code; subgraph
//! factors of `Δ` carry no legs, quotient factors carry all of them.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::basis::graded_basis;
use crate::canonical::{ClassKind, GraphClass};
use crate::contraction::{connected_block_families, contract};
use crate::error::{Error, Result};
use crate::insertion::for_each_multi_insertion;
use crate::linear::{rational, LinComb, Rational, TensorComb};
use crate::matrix::ExtAdjMatrix;
use crate::memo::Memo;

static COPRODUCT: Memo<GraphClass, TensorComb> = Memo::new();
static COPRODUCT_INDUCED: Memo<GraphClass, TensorComb> = Memo::new();
static ANTIPODE: Memo<GraphClass, LinComb> = Memo::new();
static ANTIPODE1: Memo<GraphClass, LinComb> = Memo::new();
static BULLET: Memo<(GraphClass, GraphClass), LinComb> = Memo::new();

fn zero_of(c: &GraphClass) -> GraphClass {
    GraphClass::zero(c.kind())
}

/// `u(c) = c·{0}`.
pub fn unit(c: Rational) -> LinComb {
    unit_of(ClassKind::Plain, c)
}

pub fn unit_of(kind: ClassKind, c: Rational) -> LinComb {
    LinComb::term(GraphClass::zero(kind), c)
}

/// Coefficient of the zero class (of either kind).
pub fn counit(x: &LinComb) -> Rational {
    x.iter()
        .filter(|(c, _)| c.is_zero())
        .fold(Rational::zero(), |acc, (_, v)| acc + v)
}

/// Bilinear extension of the block sum.
pub fn mult_oplus(x: &LinComb, y: &LinComb) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for (a, va) in x.iter() {
        for (b, vb) in y.iter() {
            out.add_term(a.direct_sum(b)?, va * vb);
        }
    }
    Ok(out)
}

/// Factorwise block sum of two tensors of equal arity.
pub fn tensor_oplus(s: &TensorComb, t: &TensorComb) -> Result<TensorComb> {
    combine_tensors(s, t, |a, b| Ok(LinComb::from_class(a.direct_sum(b)?)))
}

/// Factorwise `•` of two tensors of equal arity.
pub fn tensor_bullet(s: &TensorComb, t: &TensorComb) -> Result<TensorComb> {
    combine_tensors(s, t, bullet_classes)
}

fn combine_tensors<F>(s: &TensorComb, t: &TensorComb, mut op: F) -> Result<TensorComb>
where
    F: FnMut(&GraphClass, &GraphClass) -> Result<LinComb>,
{
    if s.arity() != t.arity() {
        return Err(Error::invalid(format!(
            "tensor arities differ: {} and {}",
            s.arity(),
            t.arity()
        )));
    }
    let mut out = TensorComb::zero(s.arity());
    for (a, va) in s.iter() {
        for (b, vb) in t.iter() {
            // expand the product factor by factor
            let mut partial = TensorComb::pure(Vec::new(), va * vb);
            for (fa, fb) in a.iter().zip(b) {
                let image = TensorComb::from_lincomb(&op(fa, fb)?);
                partial = partial.outer(&image);
            }
            out.add_scaled(&partial, &Rational::one());
        }
    }
    Ok(out)
}

/// `μ ∘ (x ⊗ y)` for an arity-2 tensor and a bilinear class product.
fn multiply_tensor<F>(t: &TensorComb, mut op: F) -> Result<LinComb>
where
    F: FnMut(&GraphClass, &GraphClass) -> Result<LinComb>,
{
    if t.arity() != 2 {
        return Err(Error::invalid("multiplication needs an arity-2 tensor"));
    }
    let mut out = LinComb::zero();
    for (k, v) in t.iter() {
        out.add_scaled(&op(&k[0], &k[1])?, v);
    }
    Ok(out)
}

/// `⊕ : H ⊗ H → H`.
pub fn oplus_tensor(t: &TensorComb) -> Result<LinComb> {
    multiply_tensor(t, |a, b| Ok(LinComb::from_class(a.direct_sum(b)?)))
}

/// `• : H ⊗ H → H`.
pub fn bullet_tensor(t: &TensorComb) -> Result<LinComb> {
    multiply_tensor(t, bullet_classes)
}

fn tensor_linear<F>(x: &LinComb, arity: usize, mut f: F) -> Result<TensorComb>
where
    F: FnMut(&GraphClass) -> Result<TensorComb>,
{
    let mut out = TensorComb::zero(arity);
    for (c, v) in x.iter() {
        out.add_scaled(&f(c)?, v);
    }
    Ok(out)
}

fn multiplicative<F>(c: &GraphClass, connected: F) -> Result<TensorComb>
where
    F: Fn(&GraphClass) -> Result<TensorComb>,
{
    let z = zero_of(c);
    let mut acc = TensorComb::pure(vec![z.clone(), z], Rational::one());
    for comp in c.components() {
        acc = tensor_oplus(&acc, &connected(&comp)?)?;
    }
    Ok(acc)
}

fn coproduct_connected(kind: ClassKind, d: &ExtAdjMatrix) -> Result<TensorComb> {
    let z = GraphClass::zero(kind);
    let whole = GraphClass::from_diagram(kind, d)?;
    let mut out = TensorComb::zero(2);
    out.add_term(vec![whole.clone(), z.clone()], Rational::one());
    out.add_term(vec![z, whole], Rational::one());
    let m = d.internal();
    let n = m.order();
    for family in connected_block_families(m) {
        if family.is_empty() || (family.len() == 1 && family[0].len() == n) {
            continue;
        }
        let left = family.iter().fold(ExtAdjMatrix::empty(), |acc, block| {
            acc.direct_sum(&ExtAdjMatrix::without_legs(m.induced(block)))
        });
        let (right, _) = contract(d, &family);
        out.add_term(
            vec![
                GraphClass::from_diagram(kind, &left)?,
                GraphClass::from_diagram(kind, &right)?,
            ],
            Rational::one(),
        );
    }
    Ok(out)
}

/// Nonunit components of a diagram: isolated vertices without legs dropped.
fn diagram_components(d: &ExtAdjMatrix) -> Vec<ExtAdjMatrix> {
    d.components()
        .into_iter()
        .map(|(_, c)| c)
        .filter(|c| c.degree() > 0 || c.total_legs() > 0)
        .collect()
}

/// `Δ` computed directly on a representative, without canonicalizing it
/// first. Agrees with [`coproduct_class`] on its class.
pub fn coproduct_diagram(kind: ClassKind, d: &ExtAdjMatrix) -> Result<TensorComb> {
    let z = GraphClass::zero(kind);
    let mut acc = TensorComb::pure(vec![z.clone(), z], Rational::one());
    for comp in diagram_components(d) {
        acc = tensor_oplus(&acc, &coproduct_connected(kind, &comp)?)?;
    }
    Ok(acc)
}

/// `Δ` of a single class.
pub fn coproduct_class(c: &GraphClass) -> Result<TensorComb> {
    COPRODUCT.get_or_try(c, || {
        if c.is_connected() && !c.is_zero() {
            coproduct_connected(c.kind(), &c.diagram())
        } else {
            let z = zero_of(c);
            let mut acc = TensorComb::pure(vec![z.clone(), z], Rational::one());
            for comp in c.components() {
                acc = tensor_oplus(&acc, &coproduct_class(&comp)?)?;
            }
            Ok(acc)
        }
    })
}

pub fn coproduct(x: &LinComb) -> Result<TensorComb> {
    tensor_linear(x, 2, coproduct_class)
}

fn coproduct_induced_connected(c: &GraphClass) -> Result<TensorComb> {
    let kind = c.kind();
    let z = zero_of(c);
    let mut out = TensorComb::zero(2);
    out.add_term(vec![c.clone(), z.clone()], Rational::one());
    out.add_term(vec![z, c.clone()], Rational::one());
    let d = c.diagram();
    let m = d.internal();
    let n = m.order();
    for mask in 1u64..(1u64 << n) - 1 {
        if mask.count_ones() < 2 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub = m.induced(&set);
        let comps = sub.component_indices();
        if comps.iter().any(|c| c.len() < 2) {
            continue;
        }
        let blocks: Vec<Vec<usize>> = comps
            .iter()
            .map(|comp| comp.iter().map(|&i| set[i]).collect())
            .collect();
        let (right, _) = contract(&d, &blocks);
        out.add_term(
            vec![
                GraphClass::from_diagram(kind, &ExtAdjMatrix::without_legs(sub))?,
                GraphClass::from_diagram(kind, &right)?,
            ],
            Rational::one(),
        );
    }
    Ok(out)
}

/// Coproduct summing `M_I ⊗ M ⧸ M_I` over vertex subsets `I` whose induced
/// submatrix has no isolated vertex, with `M_I` the full induced submatrix.
/// It differs from [`coproduct`] once two blocks can be adjacent (first at
/// the path on four vertices) and is not coassociative there; it is kept
/// for comparison.
pub fn coproduct_induced(x: &LinComb) -> Result<TensorComb> {
    fn class(c: &GraphClass) -> Result<TensorComb> {
        COPRODUCT_INDUCED.get_or_try(c, || {
            if c.is_zero() {
                let z = zero_of(c);
                return Ok(TensorComb::pure(vec![z.clone(), z], Rational::one()));
            }
            if c.is_connected() {
                coproduct_induced_connected(c)
            } else {
                multiplicative(c, class)
            }
        })
    }
    tensor_linear(x, 2, class)
}

fn reduced_class(c: &GraphClass) -> Result<TensorComb> {
    if c.is_zero() {
        return Ok(TensorComb::zero(2));
    }
    let z = zero_of(c);
    let mut t = coproduct_class(c)?;
    t.add_term(vec![c.clone(), z.clone()], -Rational::one());
    t.add_term(vec![z, c.clone()], -Rational::one());
    Ok(t)
}

/// `Δ̄ = Δ − x ⊗ 1 − 1 ⊗ x`, zero on the zero class.
pub fn reduced_coproduct(x: &LinComb) -> Result<TensorComb> {
    tensor_linear(x, 2, reduced_class)
}

fn check_augmentation(x: &LinComb) -> Result<()> {
    if x.classes().any(GraphClass::is_zero) {
        return Err(Error::invalid(
            "iterated reduced coproducts need an element without a {0} term",
        ));
    }
    Ok(())
}

/// `Δ̄ⁿ`, iterated on the leftmost factor; arity `n + 1`.
pub fn reduced_power(x: &LinComb, n: usize) -> Result<TensorComb> {
    check_augmentation(x)?;
    let mut t = TensorComb::from_lincomb(x);
    for _ in 0..n {
        t = t.try_map_slot(0, 2, reduced_class)?;
    }
    Ok(t)
}

fn antipode_class(c: &GraphClass) -> Result<LinComb> {
    ANTIPODE.get_or_try(c, || {
        if c.is_zero() {
            return Ok(LinComb::from_class(c.clone()));
        }
        let mut out = LinComb::term(c.clone(), -Rational::one());
        for (k, v) in reduced_class(c)?.iter() {
            let s = antipode_class(&k[0])?;
            let prod = mult_oplus(&s, &LinComb::from_class(k[1].clone()))?;
            out.add_scaled(&prod, &-v);
        }
        Ok(out)
    })
}

/// Antipode of `(⊕, Δ)`.
pub fn antipode(x: &LinComb) -> Result<LinComb> {
    x.try_map(antipode_class)
}

/// `{N} • {M}`, summed over every way of inserting a nonempty set of
/// components of `N` into distinct vertices of `M`, plus `N ⊕ M`.
pub fn bullet_classes(n: &GraphClass, m: &GraphClass) -> Result<LinComb> {
    let kind = n.kind().max(m.kind());
    let (n, m) = (n.with_kind(kind), m.with_kind(kind));
    BULLET.get_or_try(&(n.clone(), m.clone()), || {
        if n.is_zero() {
            return Ok(LinComb::from_class(m.clone()));
        }
        if m.is_zero() {
            return Ok(LinComb::from_class(n.clone()));
        }
        bullet_diagrams(kind, &n.diagram(), &m.diagram())
    })
}

struct Walk<'a> {
    comps: &'a [ExtAdjMatrix],
    host: &'a ExtAdjMatrix,
    kind: ClassKind,
    with_legs: bool,
    assignment: Vec<Option<usize>>,
    used: Vec<bool>,
    counts: HashMap<GraphClass, u64>,
    failure: Option<Error>,
}

impl Walk<'_> {
    fn run(&mut self, j: usize) {
        if j == self.comps.len() {
            let mut guests = Vec::new();
            let mut positions = Vec::new();
            let mut rest = ExtAdjMatrix::empty();
            for (comp, slot) in self.comps.iter().zip(&self.assignment) {
                match slot {
                    Some(p) => {
                        guests.push(comp.clone());
                        positions.push(*p);
                    }
                    None => rest = rest.direct_sum(comp),
                }
            }
            let (kind, counts, failure) = (self.kind, &mut self.counts, &mut self.failure);
            for_each_multi_insertion(&guests, self.host, &positions, self.with_legs, &mut |d| {
                match GraphClass::from_diagram(kind, &rest.direct_sum(d)) {
                    Ok(c) => *counts.entry(c).or_insert(0) += 1,
                    Err(e) => *failure = Some(e),
                }
            });
            return;
        }
        self.run(j + 1);
        for p in 0..self.host.order() {
            if self.used[p] {
                continue;
            }
            self.used[p] = true;
            self.assignment[j] = Some(p);
            self.run(j + 1);
            self.assignment[j] = None;
            self.used[p] = false;
        }
    }
}

/// `•` computed directly on representatives. Isolated host vertices without
/// legs are not insertion positions.
pub fn bullet_diagrams(kind: ClassKind, n: &ExtAdjMatrix, m: &ExtAdjMatrix) -> Result<LinComb> {
    let comps = diagram_components(n);
    let keep: Vec<usize> = (0..m.order())
        .filter(|&v| m.internal().vertex_degree(v) > 0 || m.external()[v] > 0)
        .collect();
    let host = m.induced(&keep);
    let mut walk = Walk {
        comps: &comps,
        host: &host,
        kind,
        with_legs: kind == ClassKind::Extended,
        assignment: vec![None; comps.len()],
        used: vec![false; host.order()],
        counts: HashMap::new(),
        failure: None,
    };
    walk.run(0);
    if let Some(e) = walk.failure {
        return Err(e);
    }
    Ok(walk
        .counts
        .into_iter()
        .map(|(c, k)| (c, Rational::from_integer(k.into())))
        .collect())
}

/// Bilinear insertion product `x • y`.
pub fn product_bullet(x: &LinComb, y: &LinComb) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for (a, va) in x.iter() {
        for (b, vb) in y.iter() {
            out.add_scaled(&bullet_classes(a, b)?, &(va * vb));
        }
    }
    Ok(out)
}

fn coproduct1_class(c: &GraphClass, reduced: bool) -> Result<TensorComb> {
    let comps = c.components();
    let k = comps.len();
    let z = zero_of(c);
    let mut out = TensorComb::zero(2);
    for mask in 0u64..(1u64 << k) {
        if reduced && (mask == 0 || mask == (1u64 << k) - 1) {
            continue;
        }
        let mut left = z.clone();
        let mut right = z.clone();
        for (i, comp) in comps.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left = left.direct_sum(comp)?;
            } else {
                right = right.direct_sum(comp)?;
            }
        }
        out.add_term(vec![left, right], Rational::one());
    }
    Ok(out)
}

/// Unshuffle coproduct `Δ₁` over subsets of components.
pub fn coproduct1(x: &LinComb) -> Result<TensorComb> {
    tensor_linear(x, 2, |c| coproduct1_class(c, false))
}

/// `Δ̄₁`: `Δ₁` without the two terms involving the empty or full subset.
pub fn reduced_coproduct1(x: &LinComb) -> Result<TensorComb> {
    tensor_linear(x, 2, |c| coproduct1_class(c, true))
}

/// `Δ̄₁ⁿ`, iterated on the leftmost factor.
pub fn reduced_power1(x: &LinComb, n: usize) -> Result<TensorComb> {
    check_augmentation(x)?;
    let mut t = TensorComb::from_lincomb(x);
    for _ in 0..n {
        t = t.try_map_slot(0, 2, |c| coproduct1_class(c, true))?;
    }
    Ok(t)
}

fn antipode1_class(c: &GraphClass) -> Result<LinComb> {
    ANTIPODE1.get_or_try(c, || {
        if c.is_zero() {
            return Ok(LinComb::from_class(c.clone()));
        }
        let mut out = LinComb::term(c.clone(), -Rational::one());
        for (k, v) in coproduct1_class(c, true)?.iter() {
            let s = antipode1_class(&k[0])?;
            let prod = product_bullet(&s, &LinComb::from_class(k[1].clone()))?;
            out.add_scaled(&prod, &-v);
        }
        Ok(out)
    })
}

/// Antipode of `(•, Δ₁)`.
pub fn antipode1(x: &LinComb) -> Result<LinComb> {
    x.try_map(antipode1_class)
}

/// Product of the graded dual in the dual basis `f_Q`: the coefficient of
/// `f_Q` in `f_A ⋆ f_B` is the coefficient of `A ⊗ B` in `Δ Q`. Operands are
/// read as coefficient vectors over the dual basis.
pub fn product_dual(x: &LinComb, y: &LinComb) -> Result<LinComb> {
    let mut out = LinComb::zero();
    for (a, va) in x.iter() {
        for (b, vb) in y.iter() {
            out.add_scaled(&dual_classes(a, b)?, &(va * vb));
        }
    }
    Ok(out)
}

fn dual_classes(a: &GraphClass, b: &GraphClass) -> Result<LinComb> {
    if a.kind() != ClassKind::Plain || b.kind() != ClassKind::Plain {
        return Err(Error::invalid("the dual product is defined on plain classes only"));
    }
    let degree = a.degree() + b.degree();
    let key = [a.clone(), b.clone()];
    let mut out = LinComb::zero();
    for q in graded_basis(degree as usize)? {
        out.add_term(q.clone(), coproduct_class(&q)?.coeff(&key));
    }
    Ok(out)
}

/// Kronecker pairing `⟨f, x⟩ = Σ f_c x_c`.
pub fn pairing(f: &LinComb, x: &LinComb) -> Rational {
    f.iter()
        .fold(Rational::zero(), |acc, (c, v)| acc + v * x.coeff(c))
}

/// Pairing of tensors of the same arity, factor by factor.
pub fn pairing_tensor(f: &TensorComb, t: &TensorComb) -> Result<Rational> {
    if f.arity() != t.arity() {
        return Err(Error::invalid("pairing needs tensors of equal arity"));
    }
    Ok(f.iter()
        .fold(Rational::zero(), |acc, (k, v)| acc + v * t.coeff(k)))
}

/// `[x, y] = x • y − y • x`.
pub fn lie_bracket(x: &LinComb, y: &LinComb) -> Result<LinComb> {
    Ok(&product_bullet(x, y)? - &product_bullet(y, x)?)
}

/// Whether `Δ₁ x = x ⊗ 1 + 1 ⊗ x`.
pub fn is_primitive(x: &LinComb) -> Result<bool> {
    let mut expected = TensorComb::zero(2);
    for (c, v) in x.iter() {
        let z = zero_of(c);
        expected.add_term(vec![c.clone(), z.clone()], v.clone());
        expected.add_term(vec![z, c.clone()], v.clone());
    }
    Ok(coproduct1(x)? == expected)
}

/// Degree of a homogeneous element, `None` for zero or mixed degrees.
pub fn homogeneous_degree(x: &LinComb) -> Option<u64> {
    let mut degrees = x.classes().map(GraphClass::degree);
    let first = degrees.next()?;
    degrees.all(|d| d == first).then_some(first)
}

/// Integer helper for building coefficients.
pub fn int(n: i64) -> Rational {
    rational(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::class_of;
    use crate::matrix::AdjMatrix;

    fn class(order: usize, edges: &[(usize, usize)]) -> GraphClass {
        class_of(&AdjMatrix::from_edges(order, edges).unwrap()).unwrap()
    }

    fn k2() -> GraphClass {
        class(2, &[(1, 2)])
    }
    fn d2() -> GraphClass {
        class(2, &[(1, 2), (1, 2)])
    }
    fn p3() -> GraphClass {
        class(3, &[(1, 2), (2, 3)])
    }
    fn t() -> GraphClass {
        class(3, &[(1, 2), (2, 3), (1, 3)])
    }
    fn a() -> GraphClass {
        class(3, &[(1, 3), (2, 3), (2, 3)])
    }
    fn z() -> GraphClass {
        GraphClass::zero(ClassKind::Plain)
    }
    fn lc(c: GraphClass) -> LinComb {
        LinComb::from_class(c)
    }
    fn oplus(a: &GraphClass, b: &GraphClass) -> GraphClass {
        a.direct_sum(b).unwrap()
    }

    #[test]
    fn oplus_unit_and_bilinearity() {
        assert_eq!(mult_oplus(&lc(k2()), &lc(z())).unwrap(), lc(k2()));
        assert_eq!(mult_oplus(&lc(k2()), &lc(k2())).unwrap(), lc(oplus(&k2(), &k2())));
        let sum = &lc(k2()) + &lc(d2());
        let expected = &lc(oplus(&k2(), &k2())) + &lc(oplus(&d2(), &k2()));
        assert_eq!(mult_oplus(&sum, &lc(k2())).unwrap(), expected);
    }

    #[test]
    fn coproduct_examples() {
        let dk = coproduct(&lc(k2())).unwrap();
        let mut expected = TensorComb::zero(2);
        expected.add_term(vec![k2(), z()], int(1));
        expected.add_term(vec![z(), k2()], int(1));
        assert_eq!(dk, expected);

        let mut expected = TensorComb::zero(2);
        expected.add_term(vec![t(), z()], int(1));
        expected.add_term(vec![z(), t()], int(1));
        expected.add_term(vec![k2(), d2()], int(3));
        assert_eq!(coproduct(&lc(t())).unwrap(), expected);

        let kk = oplus(&k2(), &k2());
        assert_eq!(coproduct(&lc(kk)).unwrap().coeff(&[k2(), k2()]), int(2));
        assert_eq!(coproduct(&lc(z())).unwrap(), TensorComb::pure(vec![z(), z()], int(1)));
    }

    #[test]
    fn reduced_examples() {
        assert!(reduced_coproduct(&lc(k2())).unwrap().is_zero());
        assert_eq!(
            reduced_coproduct(&lc(t())).unwrap(),
            TensorComb::pure(vec![k2(), d2()], int(3))
        );
        assert!(reduced_power(&lc(t()), 2).unwrap().is_zero());
        assert!(reduced_power(&lc(z()), 1).is_err());
    }

    #[test]
    fn unit_counit() {
        assert_eq!(counit(&lc(z())), int(1));
        assert_eq!(counit(&lc(k2())), int(0));
        assert_eq!(counit(&unit(int(7))), int(7));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&lc(z())).unwrap(), lc(z()));
        assert_eq!(antipode(&lc(k2())).unwrap(), -&lc(k2()));
        let expected = &(-&lc(t())) + &LinComb::term(oplus(&k2(), &d2()), int(3));
        assert_eq!(antipode(&lc(t())).unwrap(), expected);
    }

    #[test]
    fn bullet_examples() {
        assert_eq!(product_bullet(&lc(z()), &lc(t())).unwrap(), lc(t()));
        assert_eq!(product_bullet(&lc(t()), &lc(z())).unwrap(), lc(t()));
        let expected = &LinComb::term(p3(), int(4)) + &lc(oplus(&k2(), &k2()));
        assert_eq!(product_bullet(&lc(k2()), &lc(k2())).unwrap(), expected);
        let mut expected = LinComb::term(a(), int(4));
        expected.add_term(t(), int(2));
        expected.add_term(oplus(&k2(), &d2()), int(1));
        assert_eq!(product_bullet(&lc(k2()), &lc(d2())).unwrap(), expected);
    }

    #[test]
    fn coproduct1_examples() {
        let mut expected = TensorComb::zero(2);
        expected.add_term(vec![k2(), z()], int(1));
        expected.add_term(vec![z(), k2()], int(1));
        assert_eq!(coproduct1(&lc(k2())).unwrap(), expected);
        assert_eq!(coproduct1(&lc(z())).unwrap(), TensorComb::pure(vec![z(), z()], int(1)));
        let kk = oplus(&k2(), &k2());
        let mut expected = TensorComb::zero(2);
        expected.add_term(vec![kk.clone(), z()], int(1));
        expected.add_term(vec![k2(), k2()], int(2));
        expected.add_term(vec![z(), kk.clone()], int(1));
        assert_eq!(coproduct1(&lc(kk)).unwrap(), expected);
    }

    #[test]
    fn antipode1_examples() {
        assert_eq!(antipode1(&lc(z())).unwrap(), lc(z()));
        assert_eq!(antipode1(&lc(k2())).unwrap(), -&lc(k2()));
        let kk = lc(oplus(&k2(), &k2()));
        let s = antipode1(&kk).unwrap();
        let axiom = bullet_tensor(&coproduct1(&kk).unwrap().try_map_slot(0, 1, |c| {
            Ok(TensorComb::from_lincomb(&antipode1(&lc(c.clone()))?))
        }).unwrap())
        .unwrap();
        assert!(axiom.is_zero(), "{axiom:?}");
        let expected = &LinComb::term(p3(), int(8)) + &kk;
        assert_eq!(s, expected);
    }

    #[test]
    fn dual_product_examples() {
        let kk = oplus(&k2(), &k2());
        let mut expected = LinComb::term(p3(), int(2));
        expected.add_term(kk, int(2));
        assert_eq!(product_dual(&lc(k2()), &lc(k2())).unwrap(), expected);
        assert_eq!(product_dual(&lc(z()), &lc(t())).unwrap(), lc(t()));
        assert!(product_dual(&lc(k2()), &lc(d2()))
            .unwrap()
            .classes()
            .all(|c| c.degree() == 3));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&lc(t()), &lc(t())), int(1));
        assert_eq!(pairing(&lc(k2()), &lc(t())), int(0));
        let f = TensorComb::pure(vec![k2(), k2()], int(1));
        assert_eq!(pairing_tensor(&f, &coproduct(&lc(p3())).unwrap()).unwrap(), int(2));
    }

    #[test]
    fn bracket_examples() {
        assert!(lie_bracket(&lc(k2()), &lc(k2())).unwrap().is_zero());
        assert_eq!(lie_bracket(&lc(k2()), &lc(d2())).unwrap(), LinComb::term(t(), int(2)));
        assert_eq!(lie_bracket(&lc(d2()), &lc(k2())).unwrap(), LinComb::term(t(), int(-2)));
    }

    #[test]
    fn primitive_examples() {
        assert!(is_primitive(&lc(k2())).unwrap());
        assert!(!is_primitive(&lc(oplus(&k2(), &k2()))).unwrap());
        assert!(is_primitive(&(&lc(k2()) + &lc(t()))).unwrap());
    }

    #[test]
    fn induced_reading_breaks_coassociativity_on_p4() {
        let p4 = lc(class(4, &[(1, 2), (2, 3), (3, 4)]));
        let key = [k2(), k2(), k2()];
        let d = coproduct_induced(&p4).unwrap();
        let left = d.try_map_slot(0, 2, |c| coproduct_induced(&lc(c.clone()))).unwrap();
        let right = d.try_map_slot(1, 2, |c| coproduct_induced(&lc(c.clone()))).unwrap();
        assert_eq!(left.coeff(&key), int(4));
        assert_eq!(right.coeff(&key), int(6));

        let d = coproduct(&p4).unwrap();
        let left = d.try_map_slot(0, 2, |c| coproduct(&lc(c.clone()))).unwrap();
        let right = d.try_map_slot(1, 2, |c| coproduct(&lc(c.clone()))).unwrap();
        assert_eq!(left, right);
        assert_eq!(left.coeff(&key), int(6));
    }
}
