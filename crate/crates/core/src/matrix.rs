//! Adjacency matrices of loopless multigraphs and their extended (external leg)
//! counterparts.
//!
//! Matrices are stored row-major and accessed with zero-based storage indices
//! through [`AdjMatrix::entry`]. Everything that names a *vertex* ([`VertexSet`],
//! [`Permutation`], insertion positions) uses one-based labels `1..=m`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Symmetric natural-number matrix with zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjMatrix {
    order: usize,
    entries: Vec<u32>,
}

impl AdjMatrix {
    /// Builds a matrix from its rows, checking squareness, symmetry and the
    /// zero diagonal.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::invalid(format!(
                    "row {} has length {}, expected {}",
                    i + 1,
                    row.len(),
                    order
                )));
            }
            entries.extend(row);
        }
        Self::from_entries(order, entries)
    }

    pub fn from_entries(order: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::invalid(format!(
                "expected {} entries for order {}, got {}",
                order * order,
                order,
                entries.len()
            )));
        }
        for i in 0..order {
            if entries[i * order + i] != 0 {
                return Err(Error::invalid(format!(
                    "nonzero diagonal entry at ({}, {})",
                    i + 1,
                    i + 1
                )));
            }
            for j in (i + 1)..order {
                if entries[i * order + j] != entries[j * order + i] {
                    return Err(Error::invalid(format!(
                        "asymmetric entries at ({}, {}) and ({}, {})",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(AdjMatrix { order, entries })
    }

    /// Multigraph on `order` vertices from a list of edges between one-based
    /// labels; repeated pairs add multiplicity.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut m = AdjMatrix::zero(order);
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > order || b > order {
                return Err(Error::invalid(format!(
                    "edge ({a}, {b}) outside vertex range 1..={order}"
                )));
            }
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {a}")));
            }
            m.add_edges(a - 1, b - 1, 1);
        }
        Ok(m)
    }

    pub fn zero(order: usize) -> Self {
        AdjMatrix {
            order,
            entries: vec![0; order * order],
        }
    }

    /// The order-0 matrix.
    pub fn empty() -> Self {
        AdjMatrix::zero(0)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry at zero-based storage position `(row, col)`.
    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.order + col]
    }

    #[inline]
    pub fn row(&self, row: usize) -> &[u32] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub(crate) fn add_edges(&mut self, a: usize, b: usize, count: u32) {
        debug_assert_ne!(a, b);
        self.entries[a * self.order + b] += count;
        self.entries[b * self.order + a] += count;
    }

    /// Sum of the strictly upper-triangular entries, i.e. the number of edges.
    pub fn degree(&self) -> u64 {
        let mut total = 0u64;
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                total += u64::from(self.entry(i, j));
            }
        }
        total
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Weighted degree of a vertex (zero-based storage index).
    pub fn vertex_degree(&self, v: usize) -> u64 {
        self.row(v).iter().map(|&e| u64::from(e)).sum()
    }

    /// `M'[i][j] = M[π(i)][π(j)]`.
    pub fn permute(&self, pi: &Permutation) -> Result<AdjMatrix> {
        if pi.len() != self.order {
            return Err(Error::invalid(format!(
                "permutation acts on {} points but matrix has order {}",
                pi.len(),
                self.order
            )));
        }
        Ok(self.permute_by_index(pi.zero_based()))
    }

    /// Relabeling with zero-based images; `images[i]` is the old index placed
    /// at new position `i`.
    pub(crate) fn permute_by_index(&self, images: &[usize]) -> AdjMatrix {
        let n = images.len();
        let mut entries = Vec::with_capacity(n * n);
        for &pi in images {
            let row = self.row(pi);
            entries.extend(images.iter().map(|&pj| row[pj]));
        }
        AdjMatrix { order: n, entries }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &AdjMatrix) -> AdjMatrix {
        let n = self.order + other.order;
        let mut out = AdjMatrix::zero(n);
        for i in 0..self.order {
            out.entries[i * n..i * n + self.order].copy_from_slice(self.row(i));
        }
        for i in 0..other.order {
            let r = self.order + i;
            out.entries[r * n + self.order..(r + 1) * n].copy_from_slice(other.row(i));
        }
        out
    }

    /// Diagonal submatrix on zero-based storage indices, kept in the given order.
    pub(crate) fn induced(&self, indices: &[usize]) -> AdjMatrix {
        self.permute_by_index(indices)
    }

    /// Diagonal submatrix `M_I`.
    pub fn submatrix(&self, set: &VertexSet) -> Result<AdjMatrix> {
        set.check_within(self.order)?;
        Ok(self.induced(&set.zero_based()))
    }

    /// Connected components of the support graph as zero-based index lists,
    /// ordered by smallest member; isolated vertices are singletons.
    pub(crate) fn component_indices(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for (w, &e) in self.row(v).iter().enumerate() {
                    if e > 0 && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components with their induced diagonal blocks.
    pub fn components(&self) -> Vec<(VertexSet, AdjMatrix)> {
        self.component_indices()
            .into_iter()
            .map(|c| {
                let block = self.induced(&c);
                (VertexSet::from_zero_based(c), block)
            })
            .collect()
    }

    /// Connectivity of the support graph. Matrices of order at most one are
    /// connected; an edgeless matrix of larger order is not.
    pub fn is_connected(&self) -> bool {
        self.component_indices().len() <= 1
    }

    /// Zero-based indices of vertices with at least one incident edge.
    pub(crate) fn non_isolated(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&v| self.row(v).iter().any(|&e| e > 0))
            .collect()
    }
}

impl fmt::Debug for AdjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdjMatrix{:?}", self.rows())
    }
}

/// Adjacency matrix together with the number of external legs at each vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAdjMatrix {
    internal: AdjMatrix,
    external: Vec<u32>,
}

impl ExtAdjMatrix {
    pub fn new(internal: AdjMatrix, external: Vec<u32>) -> Result<Self> {
        if external.len() != internal.order() {
            return Err(Error::invalid(format!(
                "external vector has length {}, internal order is {}",
                external.len(),
                internal.order()
            )));
        }
        Ok(ExtAdjMatrix { internal, external })
    }

    /// Extended matrix with no external legs.
    pub fn without_legs(internal: AdjMatrix) -> Self {
        let external = vec![0; internal.order()];
        ExtAdjMatrix { internal, external }
    }

    pub fn empty() -> Self {
        ExtAdjMatrix::without_legs(AdjMatrix::empty())
    }

    pub fn internal(&self) -> &AdjMatrix {
        &self.internal
    }

    pub fn external(&self) -> &[u32] {
        &self.external
    }

    pub fn order(&self) -> usize {
        self.internal.order()
    }

    /// Degree of the internal part; legs do not contribute.
    pub fn degree(&self) -> u64 {
        self.internal.degree()
    }

    pub fn total_legs(&self) -> u64 {
        self.external.iter().map(|&a| u64::from(a)).sum()
    }

    /// The `(m+1) × (m+1)` adjacency matrix whose last row and column hold
    /// the external vector.
    pub fn realize(&self) -> AdjMatrix {
        let m = self.order();
        let mut out = self.internal.direct_sum(&AdjMatrix::zero(1));
        for (i, &a) in self.external.iter().enumerate() {
            if a > 0 {
                out.add_edges(i, m, a);
            }
        }
        out
    }

    pub fn permute(&self, pi: &Permutation) -> Result<ExtAdjMatrix> {
        let internal = self.internal.permute(pi)?;
        let external = pi.zero_based().iter().map(|&p| self.external[p]).collect();
        Ok(ExtAdjMatrix { internal, external })
    }

    pub(crate) fn permute_by_index(&self, images: &[usize]) -> ExtAdjMatrix {
        ExtAdjMatrix {
            internal: self.internal.permute_by_index(images),
            external: images.iter().map(|&p| self.external[p]).collect(),
        }
    }

    /// Internal parts block-summed, external vectors concatenated.
    pub fn direct_sum(&self, other: &ExtAdjMatrix) -> ExtAdjMatrix {
        let mut external = self.external.clone();
        external.extend_from_slice(&other.external);
        ExtAdjMatrix {
            internal: self.internal.direct_sum(&other.internal),
            external,
        }
    }

    pub(crate) fn induced(&self, indices: &[usize]) -> ExtAdjMatrix {
        self.permute_by_index(indices)
    }

    /// Components of the internal support graph; a vertex is its own
    /// component when it has no internal edges.
    pub fn components(&self) -> Vec<(VertexSet, ExtAdjMatrix)> {
        self.internal
            .component_indices()
            .into_iter()
            .map(|c| {
                let block = self.induced(&c);
                (VertexSet::from_zero_based(c), block)
            })
            .collect()
    }

    /// Zero-based indices of vertices with an edge or a leg.
    pub(crate) fn non_isolated(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&v| self.external[v] > 0 || self.internal.row(v).iter().any(|&e| e > 0))
            .collect()
    }

    pub(crate) fn into_parts(self) -> (AdjMatrix, Vec<u32>) {
        (self.internal, self.external)
    }
}

impl fmt::Debug for ExtAdjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ExtAdjMatrix{{ internal: {:?}, external: {:?} }}",
            self.internal.rows(),
            self.external
        )
    }
}

/// Bijection on `{1, …, m}`, stored by its one-based images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
    zero_based: Vec<usize>,
}

impl Permutation {
    /// `images[i - 1] = π(i)`, one-based.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::invalid(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[p - 1] = true;
        }
        let zero_based = images.iter().map(|&p| p - 1).collect();
        Ok(Permutation { images, zero_based })
    }

    pub fn identity(n: usize) -> Self {
        Permutation::from_zero_based((0..n).collect())
    }

    /// Transposition of two one-based labels.
    pub fn swap(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::invalid(format!("swap ({a}, {b}) outside 1..={n}")));
        }
        images.swap(a - 1, b - 1);
        Permutation::new(images)
    }

    pub(crate) fn from_zero_based(zero_based: Vec<usize>) -> Self {
        let images = zero_based.iter().map(|&p| p + 1).collect();
        Permutation { images, zero_based }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.zero_based
    }

    /// `π(i)` for a one-based label.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &p) in self.zero_based.iter().enumerate() {
            inv[p] = i;
        }
        Permutation::from_zero_based(inv)
    }
}

/// Strictly increasing set of one-based vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    indices: Vec<usize>,
}

impl VertexSet {
    /// Accepts labels in any order; rejects `0` and duplicates.
    pub fn new(labels: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut indices: Vec<usize> = labels.into_iter().collect();
        indices.sort_unstable();
        if indices.first() == Some(&0) {
            return Err(Error::invalid("vertex labels start at 1"));
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate vertex in {indices:?}")));
        }
        Ok(VertexSet { indices })
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    /// `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        VertexSet {
            indices: (1..=n).collect(),
        }
    }

    pub(crate) fn from_zero_based(mut zero_based: Vec<usize>) -> Self {
        zero_based.sort_unstable();
        VertexSet {
            indices: zero_based.into_iter().map(|i| i + 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.indices
    }

    pub fn contains(&self, label: usize) -> bool {
        self.indices.binary_search(&label).is_ok()
    }

    pub(crate) fn zero_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i - 1).collect()
    }

    pub fn complement(&self, order: usize) -> VertexSet {
        VertexSet {
            indices: (1..=order).filter(|i| !self.contains(*i)).collect(),
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.indices.iter().all(|i| !other.contains(*i))
    }

    pub(crate) fn check_within(&self, order: usize) -> Result<()> {
        match self.indices.last() {
            Some(&last) if last > order => Err(Error::invalid(format!(
                "vertex {last} outside 1..={order}"
            ))),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> AdjMatrix {
        AdjMatrix::new(vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn triangle() -> AdjMatrix {
        AdjMatrix::new(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]).unwrap()
    }

    #[test]
    fn degree_examples() {
        assert_eq!(AdjMatrix::zero(4).degree(), 0);
        assert_eq!(k2().degree(), 1);
        assert_eq!(triangle().degree(), 3);
        assert_eq!(triangle().direct_sum(&k2()).degree(), 4);
    }

    #[test]
    fn rejects_invalid_rows() {
        assert!(AdjMatrix::new(vec![vec![0, 1], vec![2, 0]]).is_err());
        assert!(AdjMatrix::new(vec![vec![1, 0], vec![0, 0]]).is_err());
        assert!(AdjMatrix::new(vec![vec![0, 1, 0], vec![1, 0]]).is_err());
    }

    #[test]
    fn permute_swap_relabels() {
        let m = AdjMatrix::new(vec![vec![0, 1, 0], vec![1, 0, 2], vec![0, 2, 0]]).unwrap();
        let swapped = m.permute(&Permutation::swap(3, 1, 3).unwrap()).unwrap();
        assert_eq!(
            swapped.rows(),
            vec![vec![0, 2, 0], vec![2, 0, 1], vec![0, 1, 0]]
        );
        assert_eq!(m.permute(&Permutation::identity(3)).unwrap(), m);
        assert!(m.permute(&Permutation::identity(2)).is_err());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        let p = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(p.inverse().images(), &[2, 3, 1]);
    }

    #[test]
    fn direct_sum_blocks() {
        assert_eq!(k2().direct_sum(&AdjMatrix::empty()), k2());
        assert_eq!(
            k2().direct_sum(&k2()).rows(),
            vec![
                vec![0, 1, 0, 0],
                vec![1, 0, 0, 0],
                vec![0, 0, 0, 1],
                vec![0, 0, 1, 0]
            ]
        );
    }

    #[test]
    fn ext_direct_sum_concatenates_legs() {
        let a = ExtAdjMatrix::new(k2(), vec![1, 0]).unwrap();
        let b = ExtAdjMatrix::new(k2(), vec![0, 2]).unwrap();
        let s = a.direct_sum(&b);
        assert_eq!(s.internal(), &k2().direct_sum(&k2()));
        assert_eq!(s.external(), &[1, 0, 0, 2]);
        assert_eq!(a.direct_sum(&ExtAdjMatrix::empty()), a);
        assert!(ExtAdjMatrix::new(k2(), vec![1]).is_err());
    }

    #[test]
    fn realize_appends_leg_vertex() {
        let a = ExtAdjMatrix::new(k2(), vec![2, 0]).unwrap();
        assert_eq!(
            a.realize().rows(),
            vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]]
        );
    }

    #[test]
    fn components_examples() {
        let comps = triangle().components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].0, VertexSet::full(3));

        let d2 = AdjMatrix::new(vec![vec![0, 2], vec![2, 0]]).unwrap();
        let comps = k2().direct_sum(&d2).components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], (VertexSet::new([1, 2]).unwrap(), k2()));
        assert_eq!(comps[1], (VertexSet::new([3, 4]).unwrap(), d2));

        let comps = AdjMatrix::zero(2).components();
        assert_eq!(
            comps,
            vec![
                (VertexSet::new([1]).unwrap(), AdjMatrix::zero(1)),
                (VertexSet::new([2]).unwrap(), AdjMatrix::zero(1)),
            ]
        );
    }

    #[test]
    fn connectivity_conventions() {
        assert!(k2().is_connected());
        assert!(!k2().direct_sum(&k2()).is_connected());
        assert!(!AdjMatrix::zero(3).is_connected());
        assert!(AdjMatrix::zero(1).is_connected());
        assert!(AdjMatrix::empty().is_connected());
    }

    #[test]
    fn vertex_set_rules() {
        assert!(VertexSet::new([0, 1]).is_err());
        assert!(VertexSet::new([2, 2]).is_err());
        let s = VertexSet::new([3, 1]).unwrap();
        assert_eq!(s.labels(), &[1, 3]);
        assert_eq!(s.complement(4).labels(), &[2, 4]);
        assert!(s.check_within(2).is_err());
    }
}
