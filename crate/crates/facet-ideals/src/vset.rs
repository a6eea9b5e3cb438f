//! Fixed-width vertex sets.
//!
//! A [`VertexSet`] is a subset of a vertex universe of at most 64 elements,
//! stored as a bit mask. The same type serves three roles: a face of a
//! simplicial complex, the support of a squarefree monomial, and a
//! squarefree multidegree.

/// Largest supported vertex universe.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices, backed by a `u64` bit mask.
///
/// Ordering is by bit pattern, which gives every collection of sets a
/// canonical, reproducible order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u64;
        for v in iter {
            debug_assert!(v < MAX_VERTICES);
            bits |= 1 << v;
        }
        VertexSet(bits)
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of vertices in the set.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Dimension of the face spanned by the set; the empty set has
    /// dimension -1.
    pub fn dim(self) -> i64 {
        self.len() as i64 - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1 << v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Iterates over the vertex indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All subsets of `self` with exactly `k` elements, in increasing
    /// bit-pattern order.
    pub fn subsets_of_size(self, k: usize) -> Vec<VertexSet> {
        let vertices: Vec<usize> = self.iter().collect();
        if k > vertices.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut stack = vec![(VertexSet::EMPTY, 0usize, k)];
        while let Some((cur, start, need)) = stack.pop() {
            if need == 0 {
                out.push(cur);
                continue;
            }
            // Push in reverse so smaller indices are explored first.
            for pos in (start..=vertices.len() - need).rev() {
                stack.push((cur.with(vertices[pos]), pos + 1, need - 1));
            }
        }
        out.sort();
        out
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_indices(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_indices([0, 2, 5]);
        let b = VertexSet::from_indices([2, 3]);
        assert_eq!(a.union(b), VertexSet::from_indices([0, 2, 3, 5]));
        assert_eq!(a.intersect(b), VertexSet::singleton(2));
        assert_eq!(a.minus(b), VertexSet::from_indices([0, 5]));
        assert!(VertexSet::EMPTY.is_subset_of(a));
        assert_eq!(a.len(), 3);
        assert_eq!(VertexSet::EMPTY.dim(), -1);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn subsets_enumeration() {
        let a = VertexSet::from_indices([1, 4, 6]);
        let pairs = a.subsets_of_size(2);
        assert_eq!(pairs.len(), 3);
        assert!(pairs.contains(&VertexSet::from_indices([1, 4])));
        assert!(pairs.contains(&VertexSet::from_indices([1, 6])));
        assert!(pairs.contains(&VertexSet::from_indices([4, 6])));
        assert_eq!(a.subsets_of_size(0), vec![VertexSet::EMPTY]);
        assert!(a.subsets_of_size(4).is_empty());
    }

    #[test]
    fn iteration_order() {
        let a = VertexSet::from_indices([7, 1, 3]);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![1, 3, 7]);
    }
}
