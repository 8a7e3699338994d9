//! Canonical representatives of permutation orbits and the [`GraphClass`]
//! basis element built on them.
//!
//! The canonical form of a matrix is the permuted copy whose row-major
//! flattening is lexicographically smallest. It is found by individualizing
//! one vertex per position: the vertex placed at position `k` fixes row `k`,
//! and the remaining cells are split by their multiplicity towards it, which
//! is the only arrangement that can keep row `k` minimal. Candidates whose
//! row is not minimal are discarded, as are candidates that are twins of an
//! already explored vertex.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::matrix::{AdjMatrix, ExtAdjMatrix};

/// Largest order accepted by canonicalization unless a caller asks otherwise.
pub const DEFAULT_ORDER_CAP: usize = 12;

struct Search<'a> {
    m: &'a AdjMatrix,
    legs: Option<&'a [u32]>,
    twin_class: Vec<usize>,
    best_rows: Vec<Vec<u32>>,
    best_legs: Vec<u32>,
    best_labeling: Vec<usize>,
    count: u64,
    found: bool,
}

impl<'a> Search<'a> {
    fn new(m: &'a AdjMatrix, legs: Option<&'a [u32]>) -> Self {
        let n = m.order();
        // twins: swapping them is an automorphism of the (matrix, legs) pair
        let mut twin_class: Vec<usize> = (0..n).collect();
        for v in 0..n {
            if twin_class[v] != v {
                continue;
            }
            for w in (v + 1)..n {
                if twin_class[w] != w {
                    continue;
                }
                let legs_match = legs.is_none_or(|l| l[v] == l[w]);
                if legs_match
                    && (0..n).all(|x| x == v || x == w || m.entry(v, x) == m.entry(w, x))
                {
                    twin_class[w] = v;
                }
            }
        }
        Search {
            m,
            legs,
            twin_class,
            best_rows: Vec::new(),
            best_legs: Vec::new(),
            best_labeling: Vec::new(),
            count: 0,
            found: false,
        }
    }

    fn row_for(&self, v: usize, assigned: &[usize], cells: &[Vec<usize>]) -> (Vec<u32>, Vec<Vec<usize>>) {
        let m = self.m;
        let mut row: Vec<u32> = assigned.iter().map(|&a| m.entry(v, a)).collect();
        row.push(0);
        let mut new_cells = Vec::with_capacity(cells.len() + 2);
        for (ci, cell) in cells.iter().enumerate() {
            let mut members: Vec<usize> = if ci == 0 {
                cell.iter().copied().filter(|&x| x != v).collect()
            } else {
                cell.clone()
            };
            if members.is_empty() {
                continue;
            }
            members.sort_by_key(|&x| m.entry(v, x));
            let mut start = 0;
            while start < members.len() {
                let val = m.entry(v, members[start]);
                let mut end = start + 1;
                while end < members.len() && m.entry(v, members[end]) == val {
                    end += 1;
                }
                row.extend(std::iter::repeat_n(val, end - start));
                new_cells.push(members[start..end].to_vec());
                start = end;
            }
        }
        (row, new_cells)
    }

    /// Ordering of the rows fixed so far against the same rows of the best
    /// leaf.
    fn against_best(&self, rows: &[Vec<u32>]) -> Ordering {
        if !self.found {
            return Ordering::Less;
        }
        rows.iter().zip(&self.best_rows).map(|(a, b)| a.cmp(b)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    }

    fn descend(&mut self, assigned: &mut Vec<usize>, rows: &mut Vec<Vec<u32>>, cells: Vec<Vec<usize>>, multiplier: u64) {
        let n = self.m.order();
        if assigned.len() == n {
            self.leaf(assigned, rows, multiplier);
            return;
        }
        let cell0 = &cells[0];
        // one representative per twin class, weighted by class size
        let mut reps: Vec<(usize, u64)> = Vec::new();
        for &v in cell0 {
            let tc = self.twin_class[v];
            match reps.iter_mut().find(|(r, _)| self.twin_class[*r] == tc) {
                Some((_, c)) => *c += 1,
                None => reps.push((v, 1)),
            }
        }
        let mut candidates: Vec<(usize, u64, Vec<u32>, Vec<Vec<usize>>)> = Vec::new();
        let mut min_row: Option<Vec<u32>> = None;
        for (v, weight) in reps {
            let (row, new_cells) = self.row_for(v, assigned, &cells);
            match min_row.as_ref().map(|r| row.cmp(r)) {
                Some(Ordering::Greater) => continue,
                Some(Ordering::Less) => {
                    candidates.clear();
                    min_row = Some(row.clone());
                }
                Some(Ordering::Equal) => {}
                None => min_row = Some(row.clone()),
            }
            candidates.push((v, weight, row, new_cells));
        }
        for (v, weight, row, new_cells) in candidates {
            assigned.push(v);
            rows.push(row);
            if self.against_best(rows) != Ordering::Greater {
                self.descend(assigned, rows, new_cells, multiplier * weight);
            }
            rows.pop();
            assigned.pop();
        }
    }

    fn leaf(&mut self, labeling: &[usize], rows: &[Vec<u32>], multiplier: u64) {
        let legs: Vec<u32> = match self.legs {
            Some(l) => labeling.iter().map(|&v| l[v]).collect(),
            None => Vec::new(),
        };
        let ord = match self.against_best(rows) {
            Ordering::Equal => legs.cmp(&self.best_legs),
            other => other,
        };
        match ord {
            Ordering::Less => {
                self.found = true;
                self.best_rows = rows.to_vec();
                self.best_legs = legs;
                self.best_labeling = labeling.to_vec();
                self.count = multiplier;
            }
            Ordering::Equal => self.count += multiplier,
            Ordering::Greater => {}
        }
    }

    fn run(mut self) -> (Vec<usize>, u64) {
        let n = self.m.order();
        if n == 0 {
            return (Vec::new(), 1);
        }
        let mut assigned = Vec::with_capacity(n);
        let mut rows = Vec::with_capacity(n);
        self.descend(&mut assigned, &mut rows, vec![(0..n).collect()], 1);
        (self.best_labeling, self.count)
    }
}

fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        return Err(Error::Capacity {
            what: "matrix order for canonicalization",
            cap,
            requested: order,
        });
    }
    Ok(())
}

/// Canonical labeling of a matrix (and optional legs) together with the size
/// of its automorphism group. `labeling[i]` is the old vertex at position `i`.
pub(crate) fn canonical_labeling(m: &AdjMatrix, legs: Option<&[u32]>) -> (Vec<usize>, u64) {
    Search::new(m, legs).run()
}

/// Lexicographically minimal row-major relabeling of `m`.
pub fn canonical_form(m: &AdjMatrix) -> Result<AdjMatrix> {
    canonical_form_with_cap(m, DEFAULT_ORDER_CAP)
}

pub fn canonical_form_with_cap(m: &AdjMatrix, cap: usize) -> Result<AdjMatrix> {
    check_cap(m.order(), cap)?;
    let (labeling, _) = canonical_labeling(m, None);
    Ok(m.permute_by_index(&labeling))
}

/// Canonical form of an extended matrix: internal matrix minimized first,
/// then the external vector among the minimizing labelings.
pub fn canonical_form_ext(a: &ExtAdjMatrix) -> Result<ExtAdjMatrix> {
    check_cap(a.order(), DEFAULT_ORDER_CAP)?;
    let (labeling, _) = canonical_labeling(a.internal(), Some(a.external()));
    Ok(a.permute_by_index(&labeling))
}

/// Number of vertex permutations fixing `m`.
pub fn aut_order(m: &AdjMatrix) -> Result<u64> {
    check_cap(m.order(), DEFAULT_ORDER_CAP)?;
    Ok(canonical_labeling(m, None).1)
}

pub fn aut_order_ext(a: &ExtAdjMatrix) -> Result<u64> {
    check_cap(a.order(), DEFAULT_ORDER_CAP)?;
    Ok(canonical_labeling(a.internal(), Some(a.external())).1)
}

/// Whether a class carries external legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    Plain,
    Extended,
}

struct ClassData {
    kind: ClassKind,
    rep: AdjMatrix,
    legs: Vec<u32>,
    degree: u64,
    aut_order: u64,
    key: String,
}

/// Isomorphism class of a multigraph (or of a multigraph with external legs),
/// held through its canonical representative with no isolated vertices.
///
/// Classes order by `(degree, key)`, where the key is the canonical
/// representative in the JSON wire format.
#[derive(Clone)]
pub struct GraphClass(Arc<ClassData>);

impl PartialEq for GraphClass {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.kind == other.0.kind && self.0.rep == other.0.rep && self.0.legs == other.0.legs)
    }
}

impl Eq for GraphClass {}

impl Hash for GraphClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.kind.hash(state);
        self.0.rep.hash(state);
        self.0.legs.hash(state);
    }
}

impl Ord for GraphClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .degree
            .cmp(&other.0.degree)
            .then_with(|| self.0.key.cmp(&other.0.key))
    }
}

impl PartialOrd for GraphClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.key)
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.key)
    }
}

type CacheKey = (ClassKind, AdjMatrix, Vec<u32>);

fn cache() -> &'static Mutex<HashMap<CacheKey, GraphClass>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, GraphClass>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn graph_key(kind: ClassKind, rep: &AdjMatrix, legs: &[u32]) -> String {
    let mut s = String::from("{\"type\":\"");
    s.push_str(match kind {
        ClassKind::Plain => "adj",
        ClassKind::Extended => "ext",
    });
    s.push_str("\",\"rows\":[");
    for i in 0..rep.order() {
        if i > 0 {
            s.push(',');
        }
        push_list(&mut s, rep.row(i));
    }
    s.push(']');
    if kind == ClassKind::Extended {
        s.push_str(",\"ext\":");
        push_list(&mut s, legs);
    }
    s.push('}');
    s
}

fn push_list(s: &mut String, values: &[u32]) {
    s.push('[');
    for (j, v) in values.iter().enumerate() {
        if j > 0 {
            s.push(',');
        }
        s.push_str(&v.to_string());
    }
    s.push(']');
}

fn make_class(kind: ClassKind, m: &AdjMatrix, legs: &[u32]) -> Result<GraphClass> {
    let (internal, legs) = match kind {
        ClassKind::Plain => {
            let keep = m.non_isolated();
            (m.induced(&keep), vec![0; keep.len()])
        }
        ClassKind::Extended => {
            let full = ExtAdjMatrix::new(m.clone(), legs.to_vec())?;
            let keep = full.non_isolated();
            full.induced(&keep).into_parts()
        }
    };
    let key = (kind, internal, legs);
    if let Some(c) = cache().lock().expect("class cache poisoned").get(&key) {
        return Ok(c.clone());
    }
    let (kind, internal, legs) = key;
    check_cap(internal.order(), DEFAULT_ORDER_CAP)?;
    let leg_view = (kind == ClassKind::Extended).then_some(legs.as_slice());
    let (labeling, aut) = canonical_labeling(&internal, leg_view);
    let rep = internal.permute_by_index(&labeling);
    let rep_legs: Vec<u32> = labeling.iter().map(|&v| legs[v]).collect();
    let class = GraphClass(Arc::new(ClassData {
        kind,
        degree: rep.degree(),
        aut_order: aut,
        key: graph_key(kind, &rep, &rep_legs),
        rep,
        legs: rep_legs,
    }));
    let mut guard = cache().lock().expect("class cache poisoned");
    let class = guard.entry((kind, internal, legs)).or_insert(class).clone();
    Ok(class)
}

/// Class of a plain matrix: isolated vertices are removed, then the rest is
/// canonicalized. Every all-zero matrix lands in the zero class.
pub fn class_of(m: &AdjMatrix) -> Result<GraphClass> {
    make_class(ClassKind::Plain, m, &[])
}

/// Class of an extended matrix; a vertex is dropped only when it has neither
/// edges nor legs.
pub fn class_of_ext(a: &ExtAdjMatrix) -> Result<GraphClass> {
    make_class(ClassKind::Extended, a.internal(), a.external())
}

impl GraphClass {
    pub fn zero(kind: ClassKind) -> GraphClass {
        static PLAIN: OnceLock<GraphClass> = OnceLock::new();
        static EXT: OnceLock<GraphClass> = OnceLock::new();
        let cell = match kind {
            ClassKind::Plain => &PLAIN,
            ClassKind::Extended => &EXT,
        };
        cell.get_or_init(|| make_class(kind, &AdjMatrix::empty(), &[]).expect("zero class"))
            .clone()
    }

    /// Class of a matrix-with-legs under the given kind; the legs are
    /// ignored for plain classes.
    pub fn from_diagram(kind: ClassKind, d: &ExtAdjMatrix) -> Result<GraphClass> {
        make_class(kind, d.internal(), d.external())
    }

    pub fn kind(&self) -> ClassKind {
        self.0.kind
    }

    pub fn rep(&self) -> &AdjMatrix {
        &self.0.rep
    }

    /// External legs of the representative; all zero for plain classes.
    pub fn legs(&self) -> &[u32] {
        &self.0.legs
    }

    pub fn ext_rep(&self) -> Option<ExtAdjMatrix> {
        (self.0.kind == ClassKind::Extended).then(|| self.diagram())
    }

    /// Representative as a matrix with legs (zero legs for plain classes).
    pub fn diagram(&self) -> ExtAdjMatrix {
        ExtAdjMatrix::new(self.0.rep.clone(), self.0.legs.clone()).expect("consistent rep")
    }

    pub fn degree(&self) -> u64 {
        self.0.degree
    }

    pub fn aut_order(&self) -> u64 {
        self.0.aut_order
    }

    pub fn key(&self) -> &str {
        &self.0.key
    }

    pub fn order(&self) -> usize {
        self.0.rep.order()
    }

    pub fn total_legs(&self) -> u64 {
        self.0.legs.iter().map(|&l| u64::from(l)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.rep.order() == 0
    }

    pub fn is_connected(&self) -> bool {
        self.0.rep.component_indices().len() <= 1
    }

    /// Connected components as classes of the same kind; empty for the zero
    /// class.
    pub fn components(&self) -> Vec<GraphClass> {
        let d = self.diagram();
        self.0
            .rep
            .component_indices()
            .into_iter()
            .map(|c| GraphClass::from_diagram(self.kind(), &d.induced(&c)).expect("component class"))
            .collect()
    }

    /// Class of the block sum. A plain operand is read as an extended class
    /// without legs when the other operand is extended.
    pub fn direct_sum(&self, other: &GraphClass) -> Result<GraphClass> {
        if other.is_zero() && other.kind() <= self.kind() {
            return Ok(self.clone());
        }
        if self.is_zero() && self.kind() <= other.kind() {
            return Ok(other.clone());
        }
        let kind = self.kind().max(other.kind());
        GraphClass::from_diagram(kind, &self.diagram().direct_sum(&other.diagram()))
    }

    /// Same class read with the given kind.
    pub fn with_kind(&self, kind: ClassKind) -> GraphClass {
        if kind == self.kind() {
            return self.clone();
        }
        GraphClass::from_diagram(kind, &self.diagram()).expect("already within cap")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Permutation;
    use rand::Rng;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_min(m: &AdjMatrix) -> (AdjMatrix, u64) {
        let mut best: Option<AdjMatrix> = None;
        for p in all_perms(m.order()) {
            let q = m.permute_by_index(&p);
            if best.as_ref().is_none_or(|b| q.entries() < b.entries()) {
                best = Some(q);
            }
        }
        let aut = all_perms(m.order())
            .iter()
            .filter(|p| m.permute_by_index(p) == *m)
            .count() as u64;
        (best.unwrap(), aut)
    }

    fn mat(rows: &[&[u32]]) -> AdjMatrix {
        AdjMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn triangle_is_invariant() {
        let t = mat(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(canonical_form(&t).unwrap(), t);
        assert_eq!(aut_order(&t).unwrap(), 6);
    }

    #[test]
    fn double_edge_with_pendant() {
        let a = mat(&[&[0, 0, 1], &[0, 0, 2], &[1, 2, 0]]);
        let (expected, aut) = brute_min(&a);
        assert_eq!(canonical_form(&a).unwrap(), expected);
        assert_eq!(expected, a);
        assert_eq!(aut_order(&a).unwrap(), aut);
        assert_eq!(aut, 1);
    }

    #[test]
    fn small_aut_orders() {
        let p3 = mat(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(aut_order(&p3).unwrap(), 2);
        let k2 = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(aut_order(&k2).unwrap(), 2);
        assert_eq!(canonical_form(&k2).unwrap(), k2);
    }

    #[test]
    fn matches_brute_force_on_fixed_cases() {
        let cases = [
            AdjMatrix::from_edges(4, &[(1, 2), (3, 4)]).unwrap(),
            AdjMatrix::from_edges(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap(),
            AdjMatrix::from_edges(5, &[(1, 2), (1, 2), (2, 3), (4, 5), (3, 5)]).unwrap(),
            AdjMatrix::from_edges(6, &[(1, 2), (3, 4), (5, 6), (1, 3)]).unwrap(),
            AdjMatrix::zero(4),
        ];
        for m in cases {
            let (expected, aut) = brute_min(&m);
            assert_eq!(canonical_form(&m).unwrap(), expected, "{m:?}");
            assert_eq!(aut_order(&m).unwrap(), aut, "{m:?}");
        }
    }

    #[test]
    fn tree_plus_edge_has_one_form() {
        let a = AdjMatrix::from_edges(7, &[(1, 7), (2, 7), (3, 6), (4, 5), (6, 7)]).unwrap();
        let b = AdjMatrix::from_edges(7, &[(1, 7), (2, 7), (3, 6), (4, 5), (5, 7)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_eq!(class_of(&a).unwrap(), class_of(&b).unwrap());
    }

    fn random_matrix(rng: &mut impl Rng, order: usize, edges: usize) -> AdjMatrix {
        let mut m = AdjMatrix::zero(order);
        for _ in 0..edges {
            let a = rng.random_range(0..order);
            let b = rng.random_range(0..order - 1);
            let b = if b >= a { b + 1 } else { b };
            m.add_edges(a, b, 1);
        }
        m
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let order = rng.random_range(2..=6);
            let edges = rng.random_range(0..=order + 1);
            let m = random_matrix(&mut rng, order, edges);
            let (expected, aut) = brute_min(&m);
            assert_eq!(canonical_form(&m).unwrap(), expected, "{m:?}");
            assert_eq!(aut_order(&m).unwrap(), aut, "{m:?}");
        }
    }

    #[test]
    fn permuting_larger_graphs_keeps_the_form() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..200 {
            let order = rng.random_range(6..=10);
            let edges = rng.random_range(order / 2..=order + 2);
            let m = random_matrix(&mut rng, order, edges);
            let mut p: Vec<usize> = (0..order).collect();
            p.shuffle(&mut rng);
            let q = m.permute_by_index(&p);
            assert_eq!(canonical_form(&m).unwrap(), canonical_form(&q).unwrap(), "{m:?}");
            assert_eq!(aut_order(&m).unwrap(), aut_order(&q).unwrap());
        }
    }

    #[test]
    fn class_prunes_isolated_vertices() {
        assert!(class_of(&AdjMatrix::zero(5)).unwrap().is_zero());
        let padded = mat(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let k2 = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(class_of(&padded).unwrap(), class_of(&k2).unwrap());
        assert_eq!(
            class_of(&k2.direct_sum(&AdjMatrix::zero(2))).unwrap(),
            class_of(&k2).unwrap()
        );
    }

    #[test]
    fn extended_keeps_leg_only_vertices() {
        let a = ExtAdjMatrix::new(AdjMatrix::zero(2), vec![0, 2]).unwrap();
        let c = class_of_ext(&a).unwrap();
        assert_eq!(c.order(), 1);
        assert_eq!(c.legs(), &[2]);
        assert!(!c.is_zero());
        let z = ExtAdjMatrix::new(AdjMatrix::zero(3), vec![0, 0, 0]).unwrap();
        assert!(class_of_ext(&z).unwrap().is_zero());
    }

    #[test]
    fn extended_minimizes_legs_after_matrix() {
        let k2 = mat(&[&[0, 1], &[1, 0]]);
        let a = ExtAdjMatrix::new(k2.clone(), vec![2, 0]).unwrap();
        let b = ExtAdjMatrix::new(k2, vec![0, 2]).unwrap();
        assert_eq!(class_of_ext(&a).unwrap(), class_of_ext(&b).unwrap());
        assert_eq!(class_of_ext(&a).unwrap().legs(), &[0, 2]);
        assert_eq!(aut_order_ext(&a).unwrap(), 1);
    }

    #[test]
    fn capacity_error_names_cap() {
        let big = AdjMatrix::from_edges(13, &(1..13).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        match canonical_form(&big) {
            Err(Error::Capacity { cap, .. }) => assert_eq!(cap, DEFAULT_ORDER_CAP),
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn large_symmetric_cases_are_fast() {
        // six disjoint edges and the complete graph on twelve vertices
        let m = AdjMatrix::from_edges(12, &(0..6).map(|i| (2 * i + 1, 2 * i + 2)).collect::<Vec<_>>())
            .unwrap();
        assert_eq!(aut_order(&m).unwrap(), 46080);
        let mut edges = Vec::new();
        for i in 1..=12 {
            for j in (i + 1)..=12 {
                edges.push((i, j));
            }
        }
        let k12 = AdjMatrix::from_edges(12, &edges).unwrap();
        assert_eq!(aut_order(&k12).unwrap(), 479_001_600);
        let p = Permutation::new((1..=12).rev().collect()).unwrap();
        assert_eq!(
            canonical_form(&m.permute(&p).unwrap()).unwrap(),
            canonical_form(&m).unwrap()
        );
    }

    #[test]
    fn ordering_puts_disjoint_pair_before_path() {
        let two_k2 = class_of(&AdjMatrix::from_edges(4, &[(1, 2), (3, 4)]).unwrap()).unwrap();
        let p3 = class_of(&AdjMatrix::from_edges(3, &[(1, 2), (2, 3)]).unwrap()).unwrap();
        assert!(two_k2 < p3);
        assert_eq!(p3.key(), "{\"type\":\"adj\",\"rows\":[[0,0,1],[0,0,1],[1,1,0]]}");
    }
}
