//! The law suites. Each function returns one report per law.

use std::collections::BTreeMap;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::duality::{connected_classes, duality_diagnostic, product_span_rank};
use super::oracle::{brute_aut_order, brute_basis, brute_isomorphic, BRUTE_BASIS_CAP};
use super::report::{LawReport, Law, Wire};
use crate::basis::{graded_basis, graded_basis_ext, graded_dim};
use crate::canonical::{canonical_form, class_of, class_of_ext, ClassKind, GraphClass};
use crate::contraction::{quotient, quotient_ext, Origin};
use crate::error::Result;
use crate::extended::{forget_legs, forget_legs_tensor};
use crate::hopf::{
    antipode, antipode1, bullet_classes, bullet_diagrams, bullet_tensor, coproduct, coproduct1,
    coproduct_class, coproduct_diagram, counit, is_primitive, lie_bracket, mult_oplus,
    oplus_tensor, product_bullet, product_dual, reduced_power, reduced_power1, tensor_bullet,
    tensor_oplus, unit_of,
};
use crate::insertion::{binomial, decomposing_maps, enumerate_insertions, insert_at, InsertionSpec};
use crate::linear::{LinComb, Rational, TensorComb};
use crate::matrix::{AdjMatrix, ExtAdjMatrix, Permutation, VertexSet};

const PROBES: usize = 3;
const EXT_LEGS: u32 = 2;

fn lc(c: &GraphClass) -> LinComb {
    LinComb::from_class(c.clone())
}

pub(crate) fn basis_upto(d: usize) -> Result<Vec<GraphClass>> {
    let mut out = Vec::new();
    for n in 0..=d {
        out.extend(graded_basis(n)?);
    }
    Ok(out)
}

fn ext_basis_upto(d: usize, legs: u32) -> Result<Vec<GraphClass>> {
    let mut out = Vec::new();
    for n in 0..=d {
        out.extend(graded_basis_ext(n, legs)?);
    }
    Ok(out)
}

pub(crate) fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_zero_based(v)
}

/// Class of `d` random edges on `2d` labels.
pub(crate) fn random_class(rng: &mut ChaCha8Rng, d: usize) -> Result<GraphClass> {
    let order = (2 * d).max(2);
    let mut m = AdjMatrix::zero(order);
    for _ in 0..d {
        let a = rng.random_range(0..order);
        let mut b = rng.random_range(0..order - 1);
        if b >= a {
            b += 1;
        }
        m.add_edges(a, b, 1);
    }
    class_of(&m)
}

/// `I` seen after relabeling by `π`: `permute(M, π)` has vertex `v` of `M`
/// at position `π⁻¹(v)`.
fn relabel_set(set: &VertexSet, pi: &Permutation) -> VertexSet {
    let inv = pi.inverse();
    VertexSet::new(set.labels().iter().map(|&v| inv.apply(v))).expect("relabeling is injective")
}

/// Vertex sets `I`, `|I| ≥ 2`, whose induced submatrix has no isolated
/// vertex.
pub fn admissible_sets(m: &AdjMatrix) -> Vec<VertexSet> {
    let n = m.order();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub = m.induced(&idx);
        if (0..idx.len()).all(|v| sub.vertex_degree(v) > 0) {
            out.push(VertexSet::from_zero_based(idx));
        }
    }
    out
}

fn counts_to_lincomb(map: &BTreeMap<GraphClass, u64>) -> LinComb {
    map.iter()
        .map(|(c, &k)| (c.clone(), Rational::from_integer(k.into())))
        .collect()
}

type Delta<'a> = &'a dyn Fn(&GraphClass) -> Result<TensorComb>;
type Mult<'a> = &'a dyn Fn(&TensorComb) -> Result<LinComb>;
type Anti<'a> = &'a dyn Fn(&GraphClass) -> Result<LinComb>;

fn coassoc_sides(delta: Delta<'_>, c: &GraphClass) -> (Result<TensorComb>, Result<TensorComb>) {
    match delta(c) {
        Ok(t) => (t.try_map_slot(0, 2, delta), t.try_map_slot(1, 2, delta)),
        Err(e) => (Err(e.clone()), Err(e)),
    }
}

fn counit_slot(t: &TensorComb, slot: usize) -> Result<TensorComb> {
    t.try_map_slot(slot, 0, |c| {
        Ok(if c.is_zero() {
            TensorComb::pure(Vec::new(), Rational::one())
        } else {
            TensorComb::zero(0)
        })
    })
}

fn antipode_side(delta: Delta<'_>, s: Anti<'_>, mult: Mult<'_>, c: &GraphClass, slot: usize) -> Result<LinComb> {
    let t = delta(c)?;
    let mapped = t.try_map_slot(slot, 1, |f| Ok(TensorComb::from_lincomb(&s(f)?)))?;
    mult(&mapped)
}

fn law_coassociative(id: &str, seed: u64, classes: &[GraphClass], delta: Delta<'_>) -> LawReport {
    let mut law = Law::new(id, seed);
    for c in classes {
        let (l, r) = coassoc_sides(delta, c);
        law.eq(&[c], l, r);
    }
    law.finish()
}

fn law_counit(id: &str, seed: u64, classes: &[GraphClass], delta: Delta<'_>) -> LawReport {
    let mut law = Law::new(id, seed);
    for c in classes {
        let x = TensorComb::from_lincomb(&lc(c));
        for slot in 0..2 {
            let side = delta(c).and_then(|t| counit_slot(&t, slot));
            law.eq(&[c], Ok(x.clone()), side);
        }
    }
    law.finish()
}

fn law_antipode(id: &str, seed: u64, classes: &[GraphClass], delta: Delta<'_>, s: Anti<'_>, mult: Mult<'_>) -> LawReport {
    let mut law = Law::new(id, seed);
    for c in classes {
        let expected = unit_of(c.kind(), counit(&lc(c)));
        for slot in 0..2 {
            law.eq(&[c], Ok(expected.clone()), antipode_side(delta, s, mult, c, slot));
        }
    }
    law.finish()
}

fn law_grading(id: &str, seed: u64, classes: &[GraphClass], delta: Delta<'_>) -> LawReport {
    let mut law = Law::new(id, seed);
    for c in classes {
        let ok = delta(c).map(|t| t.iter().all(|(k, _)| k[0].degree() + k[1].degree() == c.degree()));
        law.holds(&[c], ok, || "a term has the wrong total degree".into());
    }
    law.finish()
}

fn law_conilpotent(id: &str, seed: u64, classes: &[GraphClass], power: &dyn Fn(&GraphClass) -> Result<TensorComb>) -> LawReport {
    let mut law = Law::new(id, seed);
    for c in classes.iter().filter(|c| !c.is_zero()) {
        law.eq(&[c], Ok(true), power(c).map(|t| t.is_zero()));
    }
    law.finish()
}

fn law_cocommutative(id: &str, seed: u64, classes: &[GraphClass], delta: Delta<'_>) -> LawReport {
    let mut law = Law::new(id, seed);
    for c in classes {
        law.eq(&[c], delta(c), delta(c).map(|t| t.swap()));
    }
    law.finish()
}

fn law_compatibility(id: &str, seed: u64, classes: &[GraphClass]) -> LawReport {
    let mut law = Law::new(id, seed);
    for x in classes {
        for y in classes {
            let lhs = product_bullet(&lc(x), &lc(y)).and_then(|p| coproduct1(&p));
            let rhs = coproduct1(&lc(x)).and_then(|a| tensor_bullet(&a, &coproduct1(&lc(y))?));
            law.eq(&[x, y], lhs, rhs);
        }
    }
    law.finish()
}

fn law_bullet_associative(id: &str, seed: u64, triples: &[(GraphClass, GraphClass, GraphClass)]) -> LawReport {
    let mut law = Law::new(id, seed);
    for (x, y, z) in triples {
        let lhs = product_bullet(&lc(x), &lc(y)).and_then(|p| product_bullet(&p, &lc(z)));
        let rhs = product_bullet(&lc(y), &lc(z)).and_then(|p| product_bullet(&lc(x), &p));
        law.eq(&[x, y, z], lhs, rhs);
    }
    law.finish()
}

fn law_bracket(seed: u64, prefix: &str, pairs: &[(GraphClass, GraphClass)], triples: &[(GraphClass, GraphClass, GraphClass)]) -> Vec<LawReport> {
    let mut anti = Law::new(&format!("{prefix}.antisymmetry"), seed);
    let mut prim = Law::new(&format!("{prefix}.primitive_closure"), seed);
    for (x, y) in pairs {
        let xy = lie_bracket(&lc(x), &lc(y));
        let yx = lie_bracket(&lc(y), &lc(x)).map(|b| -&b);
        anti.eq(&[x, y], xy.clone(), yx);
        prim.holds(&[x, y], xy.and_then(|b| is_primitive(&b)), || "bracket is not primitive".into());
    }
    let mut jacobi = Law::new(&format!("{prefix}.jacobi"), seed);
    for (x, y, z) in triples {
        let cyc = |a: &GraphClass, b: &GraphClass, c: &GraphClass| -> Result<LinComb> {
            lie_bracket(&lc(a), &lie_bracket(&lc(b), &lc(c))?)
        };
        let total = cyc(x, y, z).and_then(|a| Ok(&(&a + &cyc(y, z, x)?) + &cyc(z, x, y)?));
        jacobi.eq(&[x, y, z], Ok(LinComb::zero()), total);
    }
    vec![anti.finish(), jacobi.finish(), prim.finish()]
}

fn pairs_of(cs: &[GraphClass]) -> Vec<(GraphClass, GraphClass)> {
    cs.iter()
        .flat_map(|x| cs.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

fn triples_of(cs: &[GraphClass]) -> Vec<(GraphClass, GraphClass, GraphClass)> {
    let mut out = Vec::new();
    for x in cs {
        for y in cs {
            for z in cs {
                out.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    out
}

fn delta_of(c: &GraphClass) -> Result<TensorComb> {
    coproduct_class(c)
}

fn delta1_of(c: &GraphClass) -> Result<TensorComb> {
    coproduct1(&lc(c))
}

fn antipode_of(c: &GraphClass) -> Result<LinComb> {
    antipode(&lc(c))
}

fn antipode1_of(c: &GraphClass) -> Result<LinComb> {
    antipode1(&lc(c))
}

fn components_count(c: &GraphClass) -> usize {
    c.components().len()
}

pub(crate) fn core(d: usize, seed: u64, rng: &mut ChaCha8Rng) -> Result<Vec<LawReport>> {
    let classes = basis_upto(d)?;
    let mut out = Vec::new();

    let mut perm = Law::new("core.permute_invariants", seed);
    let mut idem = Law::new("canonical.idempotent", seed);
    let mut orbit = Law::new("canonical.orbit_soundness", seed);
    let mut parts = Law::new("core.components_partition", seed);
    for c in &classes {
        let m = c.rep();
        for _ in 0..PROBES {
            let pi = random_permutation(rng, m.order());
            let pm = m.permute(&pi)?;
            perm.holds(&[c, &pm], Ok(pm.degree() == m.degree() && pm.is_connected() == m.is_connected()), || {
                "degree or connectivity changed".into()
            });
            let cf = canonical_form(&pm);
            idem.eq(&[&pm], cf.clone(), cf.and_then(|f| canonical_form(&f)));
            orbit.holds(&[c, &pm], Ok(brute_isomorphic(&pm, m) && class_of(&pm)? == *c), || {
                "relabeled matrix left its orbit".into()
            });
            let comps = pm.components();
            let mut seen: Vec<usize> = comps.iter().flat_map(|(s, _)| s.labels().to_vec()).collect();
            seen.sort_unstable();
            let reassembled = comps.iter().try_fold(GraphClass::zero(ClassKind::Plain), |acc, (_, cm)| {
                acc.direct_sum(&class_of(cm)?)
            });
            parts.holds(
                &[&pm],
                reassembled.map(|r| seen == (1..=pm.order()).collect::<Vec<_>>() && r == *c),
                || "components do not partition the vertices".into(),
            );
        }
    }
    for a in &classes {
        for b in &classes {
            if a >= b || a.degree() != b.degree() || a.order() != b.order() {
                continue;
            }
            orbit.holds(&[a, b], Ok(!brute_isomorphic(a.rep(), b.rep())), || {
                "distinct classes are isomorphic".into()
            });
        }
    }
    out.extend([perm.finish(), idem.finish(), orbit.finish(), parts.finish()]);

    let mut aut = Law::new("canonical.aut_order", seed);
    let mut prune = Law::new("canonical.prune_isolated", seed);
    for c in &classes {
        aut.eq(&[c], Ok(brute_aut_order(c.rep())), Ok(c.aut_order()));
        prune.eq(&[c], Ok(c.clone()), class_of(&c.rep().direct_sum(&AdjMatrix::zero(2))));
    }
    out.extend([aut.finish(), prune.finish()]);

    let mut sum = Law::new("core.direct_sum_degree", seed);
    for a in &classes {
        for b in &classes {
            if a.degree() + b.degree() <= d as u64 {
                let s = a.rep().direct_sum(b.rep());
                sum.eq(&[a, b], Ok(a.degree() + b.degree()), Ok(s.degree()));
            }
        }
    }
    out.push(sum.finish());

    let mut small = Law::new("core.small_order_connectivity", seed);
    for order in 2..=3usize {
        let pairs: Vec<(usize, usize)> = (0..order).flat_map(|a| (a + 1..order).map(move |b| (a, b))).collect();
        for code in 0..3usize.pow(pairs.len() as u32) {
            let mut m = AdjMatrix::zero(order);
            let mut k = code;
            for &(a, b) in &pairs {
                m.add_edges(a, b, (k % 3) as u32);
                k /= 3;
            }
            let rows_nonzero = (0..order).all(|v| m.vertex_degree(v) > 0);
            small.eq(&[&m], Ok(rows_nonzero), Ok(m.is_connected()));
        }
    }
    out.push(small.finish());

    let mut oracle = Law::new("basis.brute_force_oracle", seed);
    for n in 0..=d.min(BRUTE_BASIS_CAP) {
        oracle.eq(&[&n], brute_basis(n), graded_basis(n));
    }
    out.push(oracle.finish());
    Ok(out)
}

pub(crate) fn contraction(d: usize, seed: u64, rng: &mut ChaCha8Rng) -> Result<Vec<LawReport>> {
    let classes = basis_upto(d)?;
    let connected: Vec<GraphClass> = classes.iter().filter(|c| c.is_connected() && !c.is_zero()).cloned().collect();
    let mut split = Law::new("contraction.degree_split", seed);
    let mut conn = Law::new("contraction.connectivity", seed);
    let mut equi = Law::new("contraction.equivariance", seed);
    for c in &classes {
        let m = c.rep();
        for set in admissible_sets(m) {
            let sub = m.submatrix(&set)?;
            let q = quotient(m, &set)?;
            split.eq(&[m, &set.labels().to_vec()], Ok(m.degree()), Ok(sub.degree() + q.matrix.degree()));
            if sub.is_connected() {
                conn.eq(&[m, &set.labels().to_vec()], Ok(m.is_connected()), Ok(q.matrix.is_connected()));
            }
            let qc = class_of(&q.matrix)?;
            for _ in 0..PROBES {
                let pi = random_permutation(rng, m.order());
                let pm = m.permute(&pi)?;
                let pset = relabel_set(&set, &pi);
                equi.eq(&[&pm, &pset.labels().to_vec()], Ok(qc.clone()), quotient(&pm, &pset).and_then(|r| class_of(&r.matrix)));
            }
        }
    }

    let mut nested = Law::new("contraction.nested", seed);
    let mut two_step = Law::new("contraction.two_step", seed);
    for c in &connected {
        let m = c.rep();
        let sets = admissible_sets(m);
        for k in &sets {
            for i in &sets {
                if !i.labels().iter().all(|v| k.contains(*v)) {
                    continue;
                }
                let q = quotient(m, i)?;
                // the image of K in M ⧸ M_I, in quotient order
                let j: Vec<usize> = q
                    .origin
                    .iter()
                    .enumerate()
                    .filter(|(_, o)| match o {
                        Origin::Block(_) => true,
                        Origin::Vertex(v) => k.contains(*v),
                    })
                    .map(|(p, _)| p + 1)
                    .collect();
                let jset = VertexSet::new(j)?;
                let lhs = q.matrix.submatrix(&jset).and_then(|s| class_of(&s));
                let k_idx = k.labels();
                let i_in_k = VertexSet::new(i.labels().iter().map(|v| k_idx.iter().position(|x| x == v).unwrap() + 1))?;
                let rhs = m
                    .submatrix(k)
                    .and_then(|mk| quotient(&mk, &i_in_k))
                    .and_then(|r| class_of(&r.matrix));
                let inputs: [&dyn Wire; 3] = [m, &i.labels().to_vec(), &k.labels().to_vec()];
                nested.eq(&inputs, rhs, lhs);
                // contract what is left of K
                let img = q.matrix.submatrix(&jset)?;
                let keep: Vec<usize> = (0..img.order())
                    .filter(|&v| img.vertex_degree(v) > 0)
                    .map(|v| jset.labels()[v])
                    .collect();
                let second = if keep.is_empty() {
                    Ok(q.matrix.clone())
                } else {
                    quotient(&q.matrix, &VertexSet::new(keep)?).map(|r| r.matrix)
                };
                two_step.eq(&inputs, class_of(&quotient(m, k)?.matrix), second.and_then(|s| class_of(&s)));
            }
        }
    }

    let mut dsum = Law::new("contraction.direct_sum", seed);
    for a in &connected {
        for b in &connected {
            if a.degree() + b.degree() > d as u64 {
                continue;
            }
            let (ma, mb) = (a.rep(), b.rep());
            let sum = ma.direct_sum(mb);
            let mut sa = admissible_sets(ma);
            sa.push(VertexSet::empty());
            let mut sb = admissible_sets(mb);
            sb.push(VertexSet::empty());
            for k1 in &sa {
                for k2 in &sb {
                    let joint = VertexSet::new(k1.labels().iter().copied().chain(k2.labels().iter().map(|v| v + ma.order())))?;
                    let lhs = quotient(&sum, &joint).and_then(|r| class_of(&r.matrix));
                    let rhs = class_of(&quotient(ma, k1)?.matrix)?.direct_sum(&class_of(&quotient(mb, k2)?.matrix)?);
                    dsum.eq(&[&sum, &joint.labels().to_vec()], rhs, lhs);
                }
            }
        }
    }
    Ok(vec![
        split.finish(),
        conn.finish(),
        nested.finish(),
        two_step.finish(),
        dsum.finish(),
        equi.finish(),
    ])
}

/// Rebuilds `Q` from `Q_I` and `Q ⧸ Q_I` using the cross block of `Q` as the
/// decomposing map.
pub fn reinsert(q: &AdjMatrix, set: &VertexSet) -> Result<AdjMatrix> {
    let n_mat = q.submatrix(set)?;
    let quo = quotient(q, set)?;
    let inside = set.zero_based();
    let rows: Vec<Vec<u32>> = quo.origin[1..]
        .iter()
        .map(|o| match o {
            Origin::Vertex(v) => inside.iter().map(|&a| q.entry(a, v - 1)).collect(),
            Origin::Block(_) => unreachable!("a connected block yields one star"),
        })
        .collect();
    insert_at(&n_mat, &quo.matrix, &InsertionSpec::new(1, rows)?)
}

fn insertion_count(n: &AdjMatrix, m: &AdjMatrix) -> u128 {
    let k = n.order() as u64;
    (0..m.order())
        .map(|i| {
            (0..m.order())
                .filter(|&j| j != i)
                .map(|j| binomial(u64::from(m.entry(j, i)) + k - 1, k - 1))
                .product::<u128>()
        })
        .sum()
}

pub(crate) fn insertion(d: usize, seed: u64, rng: &mut ChaCha8Rng) -> Result<Vec<LawReport>> {
    let small = connected_classes(d.min(2))?;
    let mut well = Law::new("insertion.class_well_defined", seed);
    let mut conn = Law::new("insertion.connected", seed);
    let mut degree = Law::new("insertion.degree_additive", seed);
    let mut count = Law::new("insertion.count", seed);
    let mut forward = Law::new("insertion.quotient_inverse_forward", seed);
    for n in &small {
        for m in &small {
            let (nm, mm) = (n.rep(), m.rep());
            let base = enumerate_insertions(nm, mm)?;
            for _ in 0..PROBES {
                let pn = nm.permute(&random_permutation(rng, nm.order()))?;
                let pm = mm.permute(&random_permutation(rng, mm.order()))?;
                well.eq(&[&pn, &pm], Ok(counts_to_lincomb(&base)), enumerate_insertions(&pn, &pm).map(|b| counts_to_lincomb(&b)));
            }
            conn.holds(&[n, m], Ok(base.keys().all(GraphClass::is_connected)), || "a result is disconnected".into());
            degree.holds(&[n, m], Ok(base.keys().all(|q| q.degree() == n.degree() + m.degree())), || {
                "a result has the wrong degree".into()
            });
            let total: u64 = base.values().sum();
            count.eq(&[n, m], Ok(insertion_count(nm, mm) as u64), Ok(total));
            for pos in 0..mm.order() {
                let column: Vec<u32> = (0..mm.order()).filter(|&j| j != pos).map(|j| mm.entry(j, pos)).collect();
                for map in decomposing_maps(&column, nm.order())? {
                    let spec = InsertionSpec::new(pos + 1, map.rows().to_vec())?;
                    let q = insert_at(nm, mm, &spec)?;
                    let block = VertexSet::new(pos + 1..pos + 1 + nm.order())?;
                    forward.eq(&[nm, mm, &q], Ok(m.clone()), quotient(&q, &block).and_then(|r| class_of(&r.matrix)));
                }
            }
        }
    }

    let mut backward = Law::new("insertion.quotient_inverse_backward", seed);
    for q in connected_classes(d.min(3))? {
        let m = q.rep();
        for set in admissible_sets(m) {
            if !m.submatrix(&set)?.is_connected() {
                continue;
            }
            backward.eq(&[m, &set.labels().to_vec()], Ok(q.clone()), reinsert(m, &set).and_then(|r| class_of(&r)));
        }
    }

    let mut split = Law::new("insertion.disconnected_host", seed);
    for host in basis_upto(d.min(3))? {
        let comps = host.components();
        if comps.len() < 2 {
            continue;
        }
        for n in &small {
            let mut expected = LinComb::zero();
            for (j, comp) in comps.iter().enumerate() {
                let rest = comps
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .try_fold(GraphClass::zero(ClassKind::Plain), |acc, (_, c)| acc.direct_sum(c))?;
                for (x, k) in enumerate_insertions(n.rep(), comp.rep())? {
                    expected.add_term(x.direct_sum(&rest)?, Rational::from_integer(k.into()));
                }
            }
            split.eq(&[n, &host], Ok(expected), enumerate_insertions(n.rep(), host.rep()).map(|b| counts_to_lincomb(&b)));
        }
    }

    let mut reshuffle = Law::new("insertion.nested_regrouping", seed);
    let guests: Vec<GraphClass> = small.iter().filter(|c| c.degree() == 1).cloned().collect();
    for n in &guests {
        for mid in &small {
            for host in &small {
                let mut lhs = LinComb::zero();
                for (x, k) in enumerate_insertions(mid.rep(), host.rep())? {
                    lhs.add_scaled(&counts_to_lincomb(&enumerate_insertions(n.rep(), x.rep())?), &Rational::from_integer(k.into()));
                }
                let mut rhs = LinComb::zero();
                for (z, k) in enumerate_insertions(n.rep(), mid.rep())? {
                    rhs.add_scaled(&counts_to_lincomb(&enumerate_insertions(z.rep(), host.rep())?), &Rational::from_integer(k.into()));
                }
                // both guests placed directly into the host
                let both = bullet_classes(&n.direct_sum(mid)?, host)?;
                let single = &(&LinComb::from_class(n.direct_sum(mid)?.direct_sum(host)?)
                    + &mult_oplus(&lc(n), &counts_to_lincomb(&enumerate_insertions(mid.rep(), host.rep())?))?)
                    + &mult_oplus(&lc(mid), &counts_to_lincomb(&enumerate_insertions(n.rep(), host.rep())?))?;
                rhs = &rhs + &(&both - &single);
                reshuffle.eq(&[n, mid, host], Ok(lhs), Ok(rhs));
            }
        }
    }

    Ok(vec![
        well.finish(),
        conn.finish(),
        degree.finish(),
        count.finish(),
        forward.finish(),
        backward.finish(),
        split.finish(),
        reshuffle.finish(),
    ])
}

pub(crate) fn hopf_delta(d: usize, seed: u64, rng: &mut ChaCha8Rng) -> Result<Vec<LawReport>> {
    let classes = basis_upto(d)?;
    let mut out = vec![
        law_coassociative("delta.coassociative", seed, &classes, &delta_of),
        law_counit("delta.counit", seed, &classes, &delta_of),
        law_grading("delta.grading", seed, &classes, &delta_of),
        law_conilpotent("delta.conilpotent", seed, &classes, &|c| reduced_power(&lc(c), c.degree() as usize)),
        law_antipode("delta.antipode", seed, &classes, &delta_of, &antipode_of, &oplus_tensor),
    ];

    let mut bialg = Law::new("delta.bialgebra", seed);
    for a in &classes {
        for b in &classes {
            if a.degree() + b.degree() > d as u64 {
                continue;
            }
            let lhs = mult_oplus(&lc(a), &lc(b)).and_then(|p| coproduct(&p));
            let rhs = coproduct(&lc(a)).and_then(|x| tensor_oplus(&x, &coproduct(&lc(b))?));
            bialg.eq(&[a, b], lhs, rhs);
        }
    }
    out.push(bialg.finish());

    let mut equi = Law::new("delta.equivariance", seed);
    for c in &classes {
        for _ in 0..PROBES {
            let pm = c.rep().permute(&random_permutation(rng, c.order()))?;
            equi.eq(&[&pm], coproduct_class(c), coproduct_diagram(ClassKind::Plain, &ExtAdjMatrix::without_legs(pm.clone())));
        }
    }
    out.push(equi.finish());

    let small = basis_upto(d.min(3))?;
    let mut dual = Law::new("dual.associative", seed);
    let mut dual_unit = Law::new("dual.unit", seed);
    for a in &small {
        dual_unit.eq(&[a], Ok(lc(a)), product_dual(&lc(&GraphClass::zero(ClassKind::Plain)), &lc(a)));
        for b in &small {
            for c in &small {
                if a.degree() + b.degree() + c.degree() > d.min(3) as u64 {
                    continue;
                }
                let lhs = product_dual(&lc(a), &lc(b)).and_then(|p| product_dual(&p, &lc(c)));
                let rhs = product_dual(&lc(b), &lc(c)).and_then(|p| product_dual(&lc(a), &p));
                dual.eq(&[a, b, c], lhs, rhs);
            }
        }
    }
    out.extend([dual.finish(), dual_unit.finish()]);
    Ok(out)
}

pub(crate) fn hopf_bullet(d: usize, seed: u64, rng: &mut ChaCha8Rng) -> Result<Vec<LawReport>> {
    let classes = basis_upto(d)?;
    let connected = connected_classes(d.min(2))?;
    let mut out = Vec::new();

    let mut unit = Law::new("bullet.unit", seed);
    let mut grading = Law::new("bullet.grading", seed);
    let z = GraphClass::zero(ClassKind::Plain);
    for a in &classes {
        unit.eq(&[a], Ok(lc(a)), product_bullet(&lc(&z), &lc(a)));
        unit.eq(&[a], Ok(lc(a)), product_bullet(&lc(a), &lc(&z)));
        for b in &classes {
            if a.degree() + b.degree() <= d as u64 {
                let ok = product_bullet(&lc(a), &lc(b)).map(|p| p.classes().all(|q| q.degree() == a.degree() + b.degree()));
                grading.holds(&[a, b], ok, || "a term has the wrong degree".into());
            }
        }
    }
    out.extend([unit.finish(), grading.finish()]);
    out.push(law_bullet_associative("bullet.associative", seed, &triples_of(&connected)));

    let mut equi = Law::new("bullet.equivariance", seed);
    for (a, b) in pairs_of(&connected) {
        for _ in 0..PROBES {
            let pa = a.rep().permute(&random_permutation(rng, a.order()))?;
            let pb = b.rep().permute(&random_permutation(rng, b.order()))?;
            let raw = bullet_diagrams(
                ClassKind::Plain,
                &ExtAdjMatrix::without_legs(pa.clone()),
                &ExtAdjMatrix::without_legs(pb.clone()),
            );
            equi.eq(&[&pa, &pb], bullet_classes(&a, &b), raw);
        }
    }
    out.push(equi.finish());

    out.push(law_coassociative("delta1.coassociative", seed, &classes, &delta1_of));
    out.push(law_cocommutative("delta1.cocommutative", seed, &classes, &delta1_of));
    out.push(law_counit("delta1.counit", seed, &classes, &delta1_of));
    out.push(law_conilpotent("delta1.conilpotent", seed, &classes, &|c| reduced_power1(&lc(c), components_count(c))));
    out.push(law_compatibility("delta1.compatibility", seed, &basis_upto(d.min(2))?));
    out.push(law_antipode("delta1.antipode", seed, &classes, &delta1_of, &antipode1_of, &bullet_tensor));

    out.extend(law_bracket(seed, "bracket", &pairs_of(&connected), &triples_of(&connected)));

    let mut prim = Law::new("primitive.connected", seed);
    for c in &classes {
        prim.eq(&[c], Ok(c.is_connected() && !c.is_zero()), is_primitive(&lc(c)));
    }
    out.push(prim.finish());

    let mut support = Law::new("duality.support", seed);
    for row in duality_diagnostic(d.min(3))?.rows {
        support.holds(&[&row.n, &row.m, &row.q], Ok(row.supports_agree()), || {
            format!("bullet {} against delta {}", row.bullet, row.delta)
        });
    }
    out.push(support.finish());

    let mut span = Law::new("milnor_moore.span", seed);
    for n in 0..=d.min(3) {
        span.eq(&[&n], graded_dim(n), product_span_rank(n));
    }
    out.push(span.finish());
    Ok(out)
}

pub(crate) fn extended(d: usize, seed: u64, rng: &mut ChaCha8Rng) -> Result<Vec<LawReport>> {
    let e = d.min(2);
    let classes = ext_basis_upto(e, EXT_LEGS)?;
    let mut out = vec![
        law_coassociative("ext.delta.coassociative", seed, &classes, &delta_of),
        law_counit("ext.delta.counit", seed, &classes, &delta_of),
        law_conilpotent("ext.delta.conilpotent", seed, &classes, &|c| reduced_power(&lc(c), c.degree() as usize)),
        law_antipode("ext.delta.antipode", seed, &classes, &delta_of, &antipode_of, &oplus_tensor),
        law_coassociative("ext.delta1.coassociative", seed, &classes, &delta1_of),
        law_cocommutative("ext.delta1.cocommutative", seed, &classes, &delta1_of),
        law_conilpotent("ext.delta1.conilpotent", seed, &classes, &|c| reduced_power1(&lc(c), components_count(c))),
        law_compatibility("ext.delta1.compatibility", seed, &classes),
        law_antipode("ext.delta1.antipode", seed, &classes, &delta1_of, &antipode1_of, &bullet_tensor),
    ];

    let connected: Vec<GraphClass> = classes.iter().filter(|c| c.is_connected() && !c.is_zero()).cloned().collect();
    let legs = |cs: &[&GraphClass]| cs.iter().map(|c| c.total_legs()).sum::<u64>() <= u64::from(EXT_LEGS);
    let pairs: Vec<_> = pairs_of(&connected).into_iter().filter(|(a, b)| legs(&[a, b])).collect();
    let triples: Vec<_> = triples_of(&connected).into_iter().filter(|(a, b, c)| legs(&[a, b, c])).collect();
    out.push(law_bullet_associative("ext.bullet.associative", seed, &triples).observed());
    for r in law_bracket(seed, "ext.bracket", &pairs, &triples) {
        out.push(if r.law_id.ends_with("jacobi") { r.observed() } else { r });
    }

    let mut conserve = Law::new("ext.quotient_leg_conservation", seed);
    let mut forget = Law::new("ext.forget_intertwines_delta", seed);
    for c in &classes {
        let dgm = c.diagram();
        for set in admissible_sets(dgm.internal()) {
            conserve.eq(&[&dgm, &set.labels().to_vec()], Ok(dgm.total_legs()), quotient_ext(&dgm, &set).map(|q| q.total_legs()));
        }
        let lhs = coproduct(&lc(c)).and_then(|t| forget_legs_tensor(&t));
        let rhs = forget_legs(&lc(c)).and_then(|x| coproduct(&x));
        forget.eq(&[c], rhs, lhs);
    }
    out.extend([conserve.finish(), forget.finish()]);

    let mut equi = Law::new("ext.class_equivariance", seed);
    for c in &classes {
        let dgm = c.diagram();
        for _ in 0..PROBES {
            let pd = dgm.permute(&random_permutation(rng, dgm.order()))?;
            equi.eq(&[&pd], Ok(c.clone()), class_of_ext(&pd));
        }
    }
    out.push(equi.finish());
    Ok(out)
}
