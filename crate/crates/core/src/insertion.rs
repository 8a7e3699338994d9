//! Insertion of one adjacency matrix into a vertex of another.
//!
//! Inserting `N` (order `n`) at vertex `i` of `M` replaces `i` by the vertices
//! of `N`; every edge that ended at `i` is redirected to one of them according
//! to a decomposing map, one weak composition per host vertex. The result
//! lists the host vertices before `i`, then the vertices of `N`, then the
//! host vertices after `i`.

use std::collections::BTreeMap;

use crate::canonical::{ClassKind, GraphClass};
use crate::error::{Error, Result};
use crate::matrix::{AdjMatrix, ExtAdjMatrix};

/// All weak compositions of `total` into `parts` parts, largest first part
/// first: `(2, 0), (1, 1), (0, 2)`.
pub fn weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = Vec::with_capacity(parts);
    fn rec(remaining: u32, parts_left: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts_left == 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for first in (0..=remaining).rev() {
            current.push(first);
            rec(remaining - first, parts_left - 1, current, out);
            current.pop();
        }
    }
    rec(total, parts, &mut current, &mut out);
    out
}

/// Binomial coefficient `C(n, k)` in `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// One weak composition per host vertex other than the insertion position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecomposingMap {
    rows: Vec<Vec<u32>>,
    row_sums: Vec<u32>,
}

impl DecomposingMap {
    /// All rows must have the same length.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(first) = rows.first() {
            if rows.iter().any(|r| r.len() != first.len()) {
                return Err(Error::invalid("decomposing map rows differ in length"));
            }
        }
        let row_sums = rows.iter().map(|r| r.iter().sum()).collect();
        Ok(DecomposingMap { rows, row_sums })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row_sums(&self) -> &[u32] {
        &self.row_sums
    }
}

/// Every decomposing map splitting `column[r]` into `n` parts for each `r`,
/// in lexicographic order with the first row most significant.
pub fn decomposing_maps(column: &[u32], n: usize) -> Result<Vec<DecomposingMap>> {
    if n == 0 {
        if column.iter().any(|&c| c > 0) {
            return Err(Error::invalid("cannot split a nonzero column into zero parts"));
        }
        return Ok(vec![DecomposingMap::new(vec![Vec::new(); column.len()])?]);
    }
    let per_row: Vec<Vec<Vec<u32>>> = column.iter().map(|&c| weak_compositions(c, n)).collect();
    let mut out = Vec::new();
    let mut current: Vec<Vec<u32>> = Vec::with_capacity(column.len());
    fn rec(
        per_row: &[Vec<Vec<u32>>],
        current: &mut Vec<Vec<u32>>,
        out: &mut Vec<DecomposingMap>,
    ) {
        let r = current.len();
        if r == per_row.len() {
            out.push(DecomposingMap::new(current.clone()).expect("uniform rows"));
            return;
        }
        for comp in &per_row[r] {
            current.push(comp.clone());
            rec(per_row, current, out);
            current.pop();
        }
    }
    rec(&per_row, &mut current, &mut out);
    Ok(out)
}

/// Where and how to insert.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionSpec {
    /// One-based host vertex.
    pub position: usize,
    pub map: DecomposingMap,
}

impl InsertionSpec {
    pub fn new(position: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        if position == 0 {
            return Err(Error::invalid("insertion positions start at 1"));
        }
        Ok(InsertionSpec {
            position,
            map: DecomposingMap::new(rows)?,
        })
    }
}

/// Column of `host` at zero-based `pos` with the diagonal entry removed.
pub(crate) fn position_column(host: &AdjMatrix, pos: usize) -> Vec<u32> {
    (0..host.order())
        .filter(|&j| j != pos)
        .map(|j| host.entry(j, pos))
        .collect()
}

/// Raw insertion, no validation. `rows[r]` splits the edges between `pos`
/// and the `r`-th other host vertex; `leg_split` splits the legs at `pos`.
pub(crate) fn splice(
    guest: &ExtAdjMatrix,
    host: &ExtAdjMatrix,
    pos: usize,
    rows: &[Vec<u32>],
    leg_split: &[u32],
) -> ExtAdjMatrix {
    let m = host.order();
    let n = guest.order();
    let order = m + n - 1;
    // new index of each host vertex other than pos
    let shifted = |j: usize| if j < pos { j } else { j + n - 1 };
    let mut out = AdjMatrix::zero(order);
    let hm = host.internal();
    for a in 0..m {
        if a == pos {
            continue;
        }
        for b in (a + 1)..m {
            if b == pos {
                continue;
            }
            let e = hm.entry(a, b);
            if e > 0 {
                out.add_edges(shifted(a), shifted(b), e);
            }
        }
    }
    let gm = guest.internal();
    for a in 0..n {
        for b in (a + 1)..n {
            let e = gm.entry(a, b);
            if e > 0 {
                out.add_edges(pos + a, pos + b, e);
            }
        }
    }
    let others = (0..m).filter(|&j| j != pos);
    for (row, j) in rows.iter().zip(others) {
        for (a, &e) in row.iter().enumerate() {
            if e > 0 {
                out.add_edges(shifted(j), pos + a, e);
            }
        }
    }
    let mut legs = Vec::with_capacity(order);
    legs.extend_from_slice(&host.external()[..pos]);
    for a in 0..n {
        legs.push(guest.external()[a] + leg_split.get(a).copied().unwrap_or(0));
    }
    legs.extend_from_slice(&host.external()[pos + 1..]);
    ExtAdjMatrix::new(out, legs).expect("legs sized to order")
}

fn check_map(host: &AdjMatrix, pos: usize, n: usize, map: &DecomposingMap) -> Result<()> {
    let column = position_column(host, pos);
    if map.rows().len() != column.len() {
        return Err(Error::invalid(format!(
            "decomposing map has {} rows, host vertex {} has {} neighbours slots",
            map.rows().len(),
            pos + 1,
            column.len()
        )));
    }
    for (r, (row, &c)) in map.rows().iter().zip(&column).enumerate() {
        if row.len() != n {
            return Err(Error::invalid(format!(
                "decomposing map row {} has {} parts, inserted matrix has order {}",
                r + 1,
                row.len(),
                n
            )));
        }
        if map.row_sums()[r] != c {
            return Err(Error::invalid(format!(
                "decomposing map row {} sums to {}, host column entry is {}",
                r + 1,
                map.row_sums()[r],
                c
            )));
        }
    }
    Ok(())
}

fn check_guest(guest: &AdjMatrix) -> Result<()> {
    if guest.component_indices().len() != 1 {
        return Err(Error::invalid(
            "inserted matrix must be connected; insert components with insert_multi",
        ));
    }
    Ok(())
}

/// `N ↪ M` at `spec.position` using `spec.map`. Inserting the zero matrix
/// returns `M` unchanged.
pub fn insert_at(n: &AdjMatrix, m: &AdjMatrix, spec: &InsertionSpec) -> Result<AdjMatrix> {
    if n.is_zero() {
        return Ok(m.clone());
    }
    check_guest(n)?;
    if spec.position == 0 || spec.position > m.order() {
        return Err(Error::invalid(format!(
            "position {} outside 1..={}",
            spec.position,
            m.order()
        )));
    }
    let pos = spec.position - 1;
    check_map(m, pos, n.order(), &spec.map)?;
    let out = splice(
        &ExtAdjMatrix::without_legs(n.clone()),
        &ExtAdjMatrix::without_legs(m.clone()),
        pos,
        spec.map.rows(),
        &[],
    );
    Ok(out.into_parts().0)
}

/// Extended insertion. `leg_split` distributes the legs of the host vertex
/// over the inserted vertices, on top of the guest's own legs.
pub fn insert_ext(
    nb: &ExtAdjMatrix,
    ma: &ExtAdjMatrix,
    spec: &InsertionSpec,
    leg_split: &[u32],
) -> Result<ExtAdjMatrix> {
    if nb.order() == 0 || (nb.internal().is_zero() && nb.total_legs() == 0) {
        return Ok(ma.clone());
    }
    check_guest(nb.internal())?;
    if spec.position == 0 || spec.position > ma.order() {
        return Err(Error::invalid(format!(
            "position {} outside 1..={}",
            spec.position,
            ma.order()
        )));
    }
    let pos = spec.position - 1;
    check_map(ma.internal(), pos, nb.order(), &spec.map)?;
    if leg_split.len() != nb.order() {
        return Err(Error::invalid(format!(
            "leg split has {} parts, inserted matrix has order {}",
            leg_split.len(),
            nb.order()
        )));
    }
    let total: u64 = leg_split.iter().map(|&l| u64::from(l)).sum();
    if total != u64::from(ma.external()[pos]) {
        return Err(Error::invalid(format!(
            "leg split sums to {}, host vertex {} has {} legs",
            total,
            spec.position,
            ma.external()[pos]
        )));
    }
    Ok(splice(nb, ma, pos, spec.map.rows(), leg_split))
}

/// Inserts `guests[k]` at original host vertex `specs[k].position`, one after
/// the other. Each map addresses the vertices of the matrix as it stands
/// before that insertion (previously inserted vertices included), minus the
/// position itself.
pub fn insert_multi(guests: &[AdjMatrix], m: &AdjMatrix, specs: &[InsertionSpec]) -> Result<AdjMatrix> {
    if guests.len() != specs.len() {
        return Err(Error::invalid(format!(
            "{} guests but {} insertion specs",
            guests.len(),
            specs.len()
        )));
    }
    let mut positions: Vec<usize> = specs.iter().map(|s| s.position).collect();
    positions.sort_unstable();
    if positions.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("insertion positions must be distinct"));
    }
    let mut current = m.clone();
    // current index of each original host vertex
    let mut index: Vec<usize> = (0..m.order()).collect();
    for (guest, spec) in guests.iter().zip(specs) {
        if spec.position == 0 || spec.position > m.order() {
            return Err(Error::invalid(format!(
                "position {} outside 1..={}",
                spec.position,
                m.order()
            )));
        }
        if guest.is_zero() {
            continue;
        }
        let pos = index[spec.position - 1];
        let shifted = InsertionSpec {
            position: pos + 1,
            map: spec.map.clone(),
        };
        current = insert_at(guest, &current, &shifted)?;
        for i in index.iter_mut() {
            if *i > pos {
                *i += guest.order() - 1;
            }
        }
    }
    Ok(current)
}

/// Calls `f` on every result of inserting `guests[k]` at zero-based original
/// host vertex `positions[k]`, over all decomposing maps (and all leg splits
/// when `with_legs`). Guests must be connected and nonzero.
pub(crate) fn for_each_multi_insertion(
    guests: &[ExtAdjMatrix],
    host: &ExtAdjMatrix,
    positions: &[usize],
    with_legs: bool,
    f: &mut dyn FnMut(&ExtAdjMatrix),
) {
    let index: Vec<usize> = (0..host.order()).collect();
    multi_rec(guests, host.clone(), positions, index, with_legs, f);
}

fn multi_rec(
    guests: &[ExtAdjMatrix],
    current: ExtAdjMatrix,
    positions: &[usize],
    index: Vec<usize>,
    with_legs: bool,
    f: &mut dyn FnMut(&ExtAdjMatrix),
) {
    let Some((guest, rest)) = guests.split_first() else {
        f(&current);
        return;
    };
    let pos = index[positions[0]];
    let n = guest.order();
    let column = position_column(current.internal(), pos);
    let maps = decomposing_maps(&column, n).expect("n >= 1");
    let splits = if with_legs {
        weak_compositions(current.external()[pos], n)
    } else {
        vec![vec![0; n]]
    };
    let next_index: Vec<usize> = index
        .iter()
        .map(|&i| if i > pos { i + n - 1 } else { i })
        .collect();
    for map in &maps {
        for split in &splits {
            let next = splice(guest, &current, pos, map.rows(), split);
            multi_rec(rest, next, &positions[1..], next_index.clone(), with_legs, f);
        }
    }
}

/// Classes of all single insertions of `n` into `m`, with multiplicities
/// counted over distinct `(position, map)` pairs.
pub fn enumerate_insertions(n: &AdjMatrix, m: &AdjMatrix) -> Result<BTreeMap<GraphClass, u64>> {
    enumerate_diagram_insertions(
        ClassKind::Plain,
        &ExtAdjMatrix::without_legs(n.clone()),
        &ExtAdjMatrix::without_legs(m.clone()),
    )
}

/// Extended analogue of [`enumerate_insertions`], also summing over leg
/// splits at the position.
pub fn enumerate_insertions_ext(nb: &ExtAdjMatrix, ma: &ExtAdjMatrix) -> Result<BTreeMap<GraphClass, u64>> {
    enumerate_diagram_insertions(ClassKind::Extended, nb, ma)
}

fn enumerate_diagram_insertions(
    kind: ClassKind,
    guest: &ExtAdjMatrix,
    host: &ExtAdjMatrix,
) -> Result<BTreeMap<GraphClass, u64>> {
    if guest.order() == 0 || guest.internal().component_indices().len() != 1 {
        return Err(Error::invalid("guest must be connected and nonzero"));
    }
    let mut out = BTreeMap::new();
    let mut failure = None;
    for pos in 0..host.order() {
        for_each_multi_insertion(
            std::slice::from_ref(guest),
            host,
            &[pos],
            kind == ClassKind::Extended,
            &mut |d| match GraphClass::from_diagram(kind, d) {
                Ok(c) => *out.entry(c).or_insert(0) += 1,
                Err(e) => failure = Some(e),
            },
        );
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}
