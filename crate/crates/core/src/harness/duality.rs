use num_traits::Zero;

use crate::basis::graded_basis;
use crate::canonical::GraphClass;
use crate::error::Result;
use crate::hopf::{bullet_classes, coproduct_class, product_bullet};
use crate::linear::{LinComb, Rational};

/// One comparison between the insertion product and the coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityRow {
    pub n: GraphClass,
    pub m: GraphClass,
    pub q: GraphClass,
    /// Coefficient of `{Q}` in `{N} • {M}`.
    pub bullet: Rational,
    /// Coefficient of `{N} ⊗ {M}` in `Δ{Q}`.
    pub delta: Rational,
}

impl DualityRow {
    /// `bullet / delta`, when the coproduct coefficient is nonzero.
    pub fn ratio(&self) -> Option<Rational> {
        (!self.delta.is_zero()).then(|| &self.bullet / &self.delta)
    }

    pub fn supports_agree(&self) -> bool {
        self.bullet.is_zero() == self.delta.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct DualityTable {
    pub rows: Vec<DualityRow>,
}

impl DualityTable {
    pub fn supports_agree(&self) -> bool {
        self.rows.iter().all(DualityRow::supports_agree)
    }

    /// Whether every row has ratio one.
    pub fn coefficients_agree(&self) -> bool {
        self.rows.iter().all(|r| r.bullet == r.delta)
    }

    pub fn find(&self, n: &GraphClass, m: &GraphClass, q: &GraphClass) -> Option<&DualityRow> {
        self.rows.iter().find(|r| &r.n == n && &r.m == m && &r.q == q)
    }
}

/// Nonzero connected classes of degree `1..=max_degree`.
pub fn connected_classes(max_degree: usize) -> Result<Vec<GraphClass>> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        out.extend(graded_basis(d)?.into_iter().filter(GraphClass::is_connected));
    }
    Ok(out)
}

/// For connected `N`, `M` and every `Q` of degree `deg N + deg M` up to
/// `max_degree`, the coefficient of `{Q}` in `{N} • {M}` against that of
/// `{N} ⊗ {M}` in `Δ{Q}`. Rows where both vanish are left out.
pub fn duality_diagnostic(max_degree: usize) -> Result<DualityTable> {
    let conn = connected_classes(max_degree)?;
    let mut rows = Vec::new();
    for n in &conn {
        for m in &conn {
            let total = (n.degree() + m.degree()) as usize;
            if total > max_degree {
                continue;
            }
            let prod = bullet_classes(n, m)?;
            for q in graded_basis(total)? {
                let bullet = prod.coeff(&q);
                let delta = coproduct_class(&q)?.coeff(&[n.clone(), m.clone()]);
                if bullet.is_zero() && delta.is_zero() {
                    continue;
                }
                rows.push(DualityRow {
                    n: n.clone(),
                    m: m.clone(),
                    q,
                    bullet,
                    delta,
                });
            }
        }
    }
    Ok(DualityTable { rows })
}

/// Rank over the rationals of a family of vectors.
pub fn rank(vectors: &[LinComb]) -> usize {
    let mut pivots: Vec<(GraphClass, LinComb)> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (p, row) in &pivots {
            let c = v.coeff(p);
            if !c.is_zero() {
                v = &v - &row.scale(&c);
            }
        }
        let first = v.iter().next().map(|(k, c)| (k.clone(), c.clone()));
        if let Some((lead, c)) = first {
            let row = v.scale(&c.recip());
            // keep earlier pivots reduced against the new one
            for (_, r) in pivots.iter_mut() {
                let k = r.coeff(&lead);
                if !k.is_zero() {
                    *r = &*r - &row.scale(&k);
                }
            }
            pivots.push((lead, row));
        }
    }
    pivots.len()
}

/// Products `C₁ • C₂ • … • C_k` (left to right) of connected classes with
/// `C₁ ≤ C₂ ≤ …` in class order and total degree `n`.
pub fn ordered_products(n: usize) -> Result<Vec<LinComb>> {
    let conn = connected_classes(n)?;
    let mut out = Vec::new();
    fn rec(
        conn: &[GraphClass],
        from: usize,
        left: u64,
        acc: LinComb,
        out: &mut Vec<LinComb>,
    ) -> Result<()> {
        if left == 0 {
            out.push(acc);
            return Ok(());
        }
        for (i, c) in conn.iter().enumerate().skip(from) {
            if c.degree() <= left {
                let next = product_bullet(&acc, &LinComb::from_class(c.clone()))?;
                rec(conn, i, left - c.degree(), next, out)?;
            }
        }
        Ok(())
    }
    let unit = LinComb::from_class(GraphClass::zero(crate::canonical::ClassKind::Plain));
    rec(&conn, 0, n as u64, unit, &mut out)?;
    Ok(out)
}

/// Rank of [`ordered_products`] in degree `n`, to compare with the graded
/// dimension.
pub fn product_span_rank(n: usize) -> Result<usize> {
    Ok(rank(&ordered_products(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::graded_dim;
    use crate::canonical::class_of;
    use crate::linear::rational;
    use crate::matrix::AdjMatrix;

    fn class(order: usize, edges: &[(usize, usize)]) -> GraphClass {
        class_of(&AdjMatrix::from_edges(order, edges).unwrap()).unwrap()
    }

    #[test]
    fn known_rows() {
        let k2 = class(2, &[(1, 2)]);
        let d2 = class(2, &[(1, 2), (1, 2)]);
        let p3 = class(3, &[(1, 2), (2, 3)]);
        let t = class(3, &[(1, 2), (2, 3), (1, 3)]);
        let kk = k2.direct_sum(&k2).unwrap();
        let table = duality_diagnostic(3).unwrap();
        let r = table.find(&k2, &k2, &p3).unwrap();
        assert_eq!((r.bullet.clone(), r.delta.clone()), (rational(4), rational(2)));
        assert_eq!(r.ratio(), Some(rational(2)));
        let r = table.find(&k2, &k2, &kk).unwrap();
        assert_eq!((r.bullet.clone(), r.delta.clone()), (rational(1), rational(2)));
        let r = table.find(&k2, &d2, &t).unwrap();
        assert_eq!((r.bullet.clone(), r.delta.clone()), (rational(2), rational(3)));
        assert!(table.supports_agree());
        assert!(!table.coefficients_agree());
    }

    #[test]
    fn rank_of_small_families() {
        let k2 = LinComb::from_class(class(2, &[(1, 2)]));
        let d2 = LinComb::from_class(class(2, &[(1, 2), (1, 2)]));
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[k2.clone(), k2.scale(&rational(3))]), 1);
        assert_eq!(rank(&[&k2 + &d2, &k2 - &d2, k2.clone()]), 2);
    }

    #[test]
    fn products_span_low_degrees() {
        for n in 0..=3 {
            assert_eq!(product_span_rank(n).unwrap(), graded_dim(n).unwrap());
        }
    }
}
