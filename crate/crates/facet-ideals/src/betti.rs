//! Multigraded Betti tables of quotients `R/I`.

use crate::vset::VertexSet;
use std::collections::BTreeMap;

/// Map from (homological degree, squarefree multidegree) to a rank. The
/// graded table aggregates multidegrees of equal cardinality. Tables of
/// `R/I` always carry the entry `b_{0,∅} = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, VertexSet), u64>,
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        BettiTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    /// The table of `R` itself (zero ideal): a single generator in
    /// homological degree zero.
    pub fn of_free_ring(n: usize) -> Self {
        let mut t = BettiTable::new(n);
        t.add(0, VertexSet::EMPTY, 1);
        t
    }

    pub fn num_variables(&self) -> usize {
        self.n
    }

    pub fn add(&mut self, i: usize, a: VertexSet, count: u64) {
        if count > 0 {
            *self.entries.entry((i, a)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, a: VertexSet) -> u64 {
        self.entries.get(&(i, a)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, VertexSet, u64)> + '_ {
        self.entries.iter().map(|(&(i, a), &b)| (i, a, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Graded view: `b_{i,j}` summed over multidegrees with `|a| = j`.
    pub fn graded(&self) -> BTreeMap<(usize, usize), u64> {
        let mut out = BTreeMap::new();
        for (i, a, b) in self.iter() {
            *out.entry((i, a.len())).or_insert(0) += b;
        }
        out
    }

    pub fn graded_entry(&self, i: usize, j: usize) -> u64 {
        self.iter()
            .filter(|&(bi, a, _)| bi == i && a.len() == j)
            .map(|(_, _, b)| b)
            .sum()
    }

    /// `max { j - i : b_{i,j} != 0 }`.
    pub fn regularity(&self) -> usize {
        self.iter().map(|(i, a, _)| a.len() - i).max().unwrap_or(0)
    }

    /// `max { i : b_{i,·} != 0 }`.
    pub fn projective_dimension(&self) -> usize {
        self.iter().map(|(i, _, _)| i).max().unwrap_or(0)
    }

    /// Adds all entries of `other`, each shifted by `di` in homological
    /// degree and by the disjoint multidegree `da`.
    pub fn absorb_shifted(&mut self, other: &BettiTable, di: usize, da: VertexSet) {
        for (i, a, b) in other.iter() {
            debug_assert!(a.is_disjoint_from(da));
            self.add(i + di, a.union(da), b);
        }
    }
}

impl std::fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let entries: Vec<String> = self
            .iter()
            .map(|(i, a, b)| format!("b[{i},{a:?}]={b}"))
            .collect();
        write!(f, "BettiTable{{{}}}", entries.join(", "))
    }
}
