//! Contraction of diagonal submatrices to single vertices.
//!
//! Contracted vertices `1*, …, k*` always come first in the result, in block
//! order, followed by the untouched vertices in their original order.

use crate::error::{Error, Result};
use crate::matrix::{AdjMatrix, ExtAdjMatrix, VertexSet};

/// Where a vertex of a quotient came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    /// The `k`-th contracted block (one-based), i.e. vertex `k*`.
    Block(usize),
    /// An original vertex label that was not contracted.
    Vertex(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientResult {
    pub matrix: AdjMatrix,
    pub star_count: usize,
    pub origin: Vec<Origin>,
}

/// Contracts zero-based `blocks` of `d`. No validation.
pub(crate) fn contract(d: &ExtAdjMatrix, blocks: &[Vec<usize>]) -> (ExtAdjMatrix, Vec<Origin>) {
    let n = d.order();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            owner[v] = Some(b);
        }
    }
    let k = blocks.len();
    let rest: Vec<usize> = (0..n).filter(|&v| owner[v].is_none()).collect();
    let order = k + rest.len();
    // new position of every old vertex
    let mut position = vec![0usize; n];
    for v in 0..n {
        position[v] = match owner[v] {
            Some(b) => b,
            None => k + rest.binary_search(&v).expect("rest is sorted"),
        };
    }
    let m = d.internal();
    let mut out = AdjMatrix::zero(order);
    for a in 0..n {
        for b in (a + 1)..n {
            let e = m.entry(a, b);
            if e > 0 && position[a] != position[b] {
                out.add_edges(position[a], position[b], e);
            }
        }
    }
    let mut legs = vec![0u32; order];
    for (v, &l) in d.external().iter().enumerate() {
        legs[position[v]] += l;
    }
    let mut origin: Vec<Origin> = (1..=k).map(Origin::Block).collect();
    origin.extend(rest.iter().map(|&v| Origin::Vertex(v + 1)));
    (ExtAdjMatrix::new(out, legs).expect("legs sized to order"), origin)
}

fn validate_blocks(m: &AdjMatrix, blocks: &[VertexSet]) -> Result<Vec<Vec<usize>>> {
    let mut used = vec![false; m.order()];
    let mut out = Vec::with_capacity(blocks.len());
    for block in blocks {
        block.check_within(m.order())?;
        if block.len() < 2 {
            return Err(Error::invalid(format!(
                "block {:?} has fewer than two vertices",
                block.labels()
            )));
        }
        let idx = block.zero_based();
        for &v in &idx {
            if used[v] {
                return Err(Error::invalid(format!("vertex {} appears in two blocks", v + 1)));
            }
            used[v] = true;
        }
        if m.induced(&idx).component_indices().len() != 1 {
            return Err(Error::invalid(format!(
                "block {:?} does not induce a connected submatrix",
                block.labels()
            )));
        }
        out.push(idx);
    }
    Ok(out)
}

/// Splits `I` into the vertex sets of the components of `M_I`, rejecting
/// singleton components.
fn split_into_components(m: &AdjMatrix, set: &VertexSet) -> Result<Vec<VertexSet>> {
    let idx = set.zero_based();
    let sub = m.induced(&idx);
    let mut blocks = Vec::new();
    for comp in sub.component_indices() {
        if comp.len() < 2 {
            return Err(Error::invalid(format!(
                "vertex {} is isolated inside the contracted set",
                idx[comp[0]] + 1
            )));
        }
        blocks.push(VertexSet::from_zero_based(comp.iter().map(|&c| idx[c]).collect()));
    }
    Ok(blocks)
}

enum Plan {
    Unchanged,
    Whole,
    Blocks(Vec<Vec<usize>>),
}

fn plan(m: &AdjMatrix, set: &VertexSet) -> Result<Plan> {
    set.check_within(m.order())?;
    if set.is_empty() {
        return Ok(Plan::Unchanged);
    }
    if set.len() == 1 {
        return Err(Error::invalid("a quotient needs at least two vertices"));
    }
    if set.len() == m.order() {
        return Ok(Plan::Whole);
    }
    let blocks = split_into_components(m, set)?;
    Ok(Plan::Blocks(validate_blocks(m, &blocks)?))
}

/// `M ⧸ M_I`. A disconnected `M_I` is contracted component by component;
/// contracting everything gives the zero class, contracting nothing gives `M`.
pub fn quotient(m: &AdjMatrix, set: &VertexSet) -> Result<QuotientResult> {
    match plan(m, set)? {
        Plan::Unchanged => Ok(QuotientResult {
            matrix: m.clone(),
            star_count: 0,
            origin: (1..=m.order()).map(Origin::Vertex).collect(),
        }),
        Plan::Whole => Ok(QuotientResult {
            matrix: AdjMatrix::zero(1),
            star_count: 1,
            origin: vec![Origin::Block(1)],
        }),
        Plan::Blocks(blocks) => {
            let (d, origin) = contract(&ExtAdjMatrix::without_legs(m.clone()), &blocks);
            Ok(QuotientResult {
                matrix: d.into_parts().0,
                star_count: blocks.len(),
                origin,
            })
        }
    }
}

/// Contracts each block in turn; every block must induce a connected
/// submatrix on at least two vertices and blocks must be disjoint.
pub fn quotient_iterated(m: &AdjMatrix, blocks: &[VertexSet]) -> Result<QuotientResult> {
    let idx = validate_blocks(m, blocks)?;
    let (d, origin) = contract(&ExtAdjMatrix::without_legs(m.clone()), &idx);
    Ok(QuotientResult {
        matrix: d.into_parts().0,
        star_count: idx.len(),
        origin,
    })
}

/// `(M, b) ⧸ M_I`: the internal part is contracted and the legs of each
/// contracted block are summed onto its star vertex.
pub fn quotient_ext(a: &ExtAdjMatrix, set: &VertexSet) -> Result<ExtAdjMatrix> {
    match plan(a.internal(), set)? {
        Plan::Unchanged => Ok(a.clone()),
        Plan::Whole => Ok(contract(a, &[(0..a.order()).collect()]).0),
        Plan::Blocks(blocks) => Ok(contract(a, &blocks).0),
    }
}

/// Iterated extended quotient.
pub fn quotient_iterated_ext(a: &ExtAdjMatrix, blocks: &[VertexSet]) -> Result<ExtAdjMatrix> {
    let idx = validate_blocks(a.internal(), blocks)?;
    Ok(contract(a, &idx).0)
}

/// All families of pairwise disjoint vertex blocks (zero-based) in which
/// every block has at least two vertices and induces a connected submatrix.
/// Includes the empty family. Blocks are listed by smallest member.
pub(crate) fn connected_block_families(m: &AdjMatrix) -> Vec<Vec<Vec<usize>>> {
    let n = m.order();
    assert!(n <= 63, "block families need order below 64");
    let connected = |mask: u64| -> bool {
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if mask & (1 << w) != 0 && seen & (1 << w) == 0 && m.entry(v, w) > 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen == mask
    };
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    fn rec(
        n: usize,
        free: u64,
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
        connected: &dyn Fn(u64) -> bool,
    ) {
        if free == 0 {
            out.push(current.clone());
            return;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        // v stays a single vertex
        rec(n, rest, current, out, connected);
        // v is the smallest member of a block
        let mut sub = rest;
        while sub != 0 {
            let block = sub | (1 << v);
            if connected(block) {
                current.push((0..n).filter(|&i| block & (1 << i) != 0).collect());
                rec(n, rest & !sub, current, out, connected);
                current.pop();
            }
            sub = (sub - 1) & rest;
        }
    }
    let all = if n == 0 { 0 } else { (1u64 << n) - 1 };
    rec(n, all, &mut current, &mut out, &connected);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::class_of;

    fn mat(rows: &[&[u32]]) -> AdjMatrix {
        AdjMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn set(labels: &[usize]) -> VertexSet {
        VertexSet::new(labels.iter().copied()).unwrap()
    }

    fn triangle() -> AdjMatrix {
        mat(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])
    }

    #[test]
    fn triangle_by_edge_gives_double_edge() {
        let q = quotient(&triangle(), &set(&[1, 2])).unwrap();
        assert_eq!(q.matrix, mat(&[&[0, 2], &[2, 0]]));
        assert_eq!(q.star_count, 1);
        assert_eq!(q.origin, vec![Origin::Block(1), Origin::Vertex(3)]);
    }

    #[test]
    fn whole_and_empty_sets() {
        let t = triangle();
        let whole = quotient(&t, &VertexSet::full(3)).unwrap();
        assert!(class_of(&whole.matrix).unwrap().is_zero());
        assert_eq!(quotient(&t, &VertexSet::empty()).unwrap().matrix, t);
    }

    #[test]
    fn rejects_bad_sets() {
        let t = triangle();
        assert!(quotient(&t, &set(&[2])).is_err());
        assert!(quotient(&t, &set(&[1, 4])).is_err());
        // 1 and 3 are not adjacent in the path 1-2-3-4
        let p4 = AdjMatrix::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(quotient(&p4, &set(&[1, 3])).is_err());
        assert!(quotient_iterated(&p4, &[set(&[1, 2]), set(&[2, 3])]).is_err());
        assert!(quotient_iterated(&p4, &[set(&[1, 3])]).is_err());
    }

    #[test]
    fn disconnected_set_contracts_componentwise() {
        let p4 = AdjMatrix::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let q = quotient(&p4, &set(&[1, 2, 4, 5])).unwrap();
        assert_eq!(q.star_count, 2);
        assert_eq!(q.matrix.order(), 3);
        assert_eq!(class_of(&q.matrix).unwrap(), class_of(&AdjMatrix::from_edges(3, &[(1, 3), (2, 3)]).unwrap()).unwrap());
    }

    #[test]
    fn iterated_path_contraction() {
        let p4 = AdjMatrix::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let q = quotient_iterated(&p4, &[set(&[1, 2]), set(&[3, 4])]).unwrap();
        let k2 = class_of(&mat(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(class_of(&q.matrix).unwrap(), k2);
        let r = quotient_iterated(&p4, &[set(&[3, 4]), set(&[1, 2])]).unwrap();
        assert_eq!(class_of(&r.matrix).unwrap(), k2);
        assert_eq!(quotient_iterated(&p4, &[]).unwrap().matrix, p4);
    }

    #[test]
    fn extended_quotient_sums_legs() {
        let a = ExtAdjMatrix::new(triangle(), vec![1, 0, 0]).unwrap();
        let q = quotient_ext(&a, &set(&[1, 2])).unwrap();
        assert_eq!(q.internal(), &mat(&[&[0, 2], &[2, 0]]));
        assert_eq!(q.external(), &[1, 0]);
        assert_eq!(quotient_ext(&a, &VertexSet::empty()).unwrap(), a);

        let k2 = ExtAdjMatrix::new(mat(&[&[0, 1], &[1, 0]]), vec![2, 3]).unwrap();
        let q = quotient_ext(&k2, &VertexSet::full(2)).unwrap();
        assert_eq!(q.internal(), &AdjMatrix::zero(1));
        assert_eq!(q.external(), &[5]);
    }

    #[test]
    fn block_families_of_small_graphs() {
        // triangle: empty family, three edges, the whole vertex set
        assert_eq!(connected_block_families(&triangle()).len(), 5);
        // path on four vertices: {}, 3 edges, 2 triples, whole, {12|34}
        let p4 = AdjMatrix::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(connected_block_families(&p4).len(), 8);
        assert_eq!(connected_block_families(&AdjMatrix::empty()), vec![Vec::<Vec<usize>>::new()]);
    }
}
