//! Koszul homology of `R/I` for squarefree monomial ideals.
//!
//! This is the ground-truth engine of the crate. For a fixed squarefree
//! multidegree `a` the Koszul complex of `R/I` has the basis
//! `{ m e_L : L ⊆ a, m = x^(a\L), m ∉ I }` in homological degree `|L|`,
//! and the multigraded Betti number `b_{i,a}(R/I)` is the dimension of the
//! `i`-th homology of this finite complex over the chosen field. Ranks are
//! computed by exact linear algebra; only multidegrees in the lcm lattice
//! of the generators are enumerated, every other multidegree contributes
//! nothing.

use crate::betti::BettiTable;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ideal::SqfIdeal;
use crate::linalg::{self, FieldSpec};
use crate::vset::VertexSet;
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

/// A formal linear combination of Koszul terms in one homological degree
/// and one squarefree multidegree.
///
/// Terms are keyed by the wedge set `L`; the monomial part is implied as
/// `multidegree \ L`. Wedge sets carry the ascending orientation
/// `e_{l_1} ∧ ... ∧ e_{l_i}` with `l_1 < ... < l_i`; all signs are
/// normalized to it. Terms whose monomial lies in the ideal are dropped,
/// so coefficients live in `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulChain {
    degree: usize,
    multidegree: VertexSet,
    terms: BTreeMap<VertexSet, i64>,
}

impl KoszulChain {
    pub fn zero(degree: usize, multidegree: VertexSet) -> Self {
        KoszulChain {
            degree,
            multidegree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a chain from explicit `(wedge set, coefficient)` terms,
    /// validating the shape and reducing modulo the ideal.
    pub fn from_terms<T>(
        ideal: &SqfIdeal,
        degree: usize,
        multidegree: VertexSet,
        terms: T,
    ) -> Result<Self>
    where
        T: IntoIterator<Item = (VertexSet, i64)>,
    {
        let mut chain = KoszulChain::zero(degree, multidegree);
        for (wedge, coeff) in terms {
            if wedge.len() != degree || !wedge.is_subset_of(multidegree) {
                return Err(Error::InvalidChain(format!(
                    "wedge set {wedge:?} does not fit degree {degree} in multidegree {multidegree:?}"
                )));
            }
            if coeff == 0 || ideal.contains(multidegree.minus(wedge)) {
                continue;
            }
            let entry = chain.terms.entry(wedge).or_insert(0);
            *entry += coeff;
            if *entry == 0 {
                chain.terms.remove(&wedge);
            }
        }
        Ok(chain)
    }

    /// The monomial cycle candidate `f e_L` with `f = x^(a\L)`.
    pub fn monomial(ideal: &SqfIdeal, multidegree: VertexSet, wedge: VertexSet) -> Result<Self> {
        KoszulChain::from_terms(ideal, wedge.len(), multidegree, [(wedge, 1)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn multidegree(&self) -> VertexSet {
        self.multidegree
    }

    pub fn terms(&self) -> impl Iterator<Item = (VertexSet, i64)> + '_ {
        self.terms.iter().map(|(&l, &c)| (l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The Koszul differential
    /// `d(m e_L) = Σ_k (-1)^(k+1) (m x_{l_k} mod I) e_{L \ l_k}`.
    pub fn differential(&self, ideal: &SqfIdeal) -> KoszulChain {
        let mut out = KoszulChain::zero(self.degree.saturating_sub(1), self.multidegree);
        if self.degree == 0 {
            return out;
        }
        for (&wedge, &coeff) in &self.terms {
            for (pos, l) in wedge.iter().enumerate() {
                let target = wedge.without(l);
                if ideal.contains(self.multidegree.minus(target)) {
                    continue;
                }
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                let entry = out.terms.entry(target).or_insert(0);
                *entry += sign * coeff;
                if *entry == 0 {
                    out.terms.remove(&target);
                }
            }
        }
        out
    }

    pub fn is_cycle(&self, ideal: &SqfIdeal) -> bool {
        self.differential(ideal).is_zero()
    }

    /// Wedge product of two chains. Returns `None` when the multidegrees
    /// overlap: the product then lives in a non-squarefree multidegree,
    /// where the homology of `R/I` vanishes for squarefree `I`.
    pub fn wedge(&self, other: &KoszulChain, ideal: &SqfIdeal) -> Option<KoszulChain> {
        if !self.multidegree.is_disjoint_from(other.multidegree) {
            return None;
        }
        let multidegree = self.multidegree.union(other.multidegree);
        let mut out = KoszulChain::zero(self.degree + other.degree, multidegree);
        for (&l1, &c1) in &self.terms {
            for (&l2, &c2) in &other.terms {
                let wedge = l1.union(l2);
                if ideal.contains(multidegree.minus(wedge)) {
                    continue;
                }
                let sign = merge_sign(l1, l2);
                let entry = out.terms.entry(wedge).or_insert(0);
                *entry += sign * c1 * c2;
                if *entry == 0 {
                    out.terms.remove(&wedge);
                }
            }
        }
        Some(out)
    }
}

/// Sign of sorting the concatenation `e_{L1} ∧ e_{L2}` into ascending
/// order: `(-1)^(inversions)` with one inversion per pair `u ∈ L1`,
/// `v ∈ L2`, `v < u`.
fn merge_sign(l1: VertexSet, l2: VertexSet) -> i64 {
    let mut inversions = 0usize;
    for u in l1.iter() {
        inversions += l2.iter().filter(|&v| v < u).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The Koszul component of one multidegree: bases per homological degree
/// and differential matrices between them.
struct Component {
    multidegree: VertexSet,
    bases: Vec<Vec<VertexSet>>,
}

impl Component {
    fn new(ideal: &SqfIdeal, multidegree: VertexSet) -> Self {
        let top = multidegree.len();
        let bases = (0..=top)
            .map(|i| {
                multidegree
                    .subsets_of_size(i)
                    .into_iter()
                    .filter(|&l| !ideal.contains(multidegree.minus(l)))
                    .collect()
            })
            .collect();
        Component { multidegree, bases }
    }

    fn dim(&self, i: usize) -> usize {
        self.bases.get(i).map_or(0, |b| b.len())
    }

    fn index_of(&self, i: usize, wedge: VertexSet) -> Option<usize> {
        self.bases.get(i)?.binary_search(&wedge).ok()
    }

    /// Columns of the differential `K_i -> K_{i-1}` in this multidegree.
    fn differential_columns(&self, i: usize) -> Vec<Vec<i64>> {
        if i == 0 || i > self.multidegree.len() {
            return Vec::new();
        }
        let rows = self.dim(i - 1);
        self.bases[i]
            .iter()
            .map(|&wedge| {
                let mut col = vec![0i64; rows];
                for (pos, l) in wedge.iter().enumerate() {
                    if let Some(idx) = self.index_of(i - 1, wedge.without(l)) {
                        col[idx] += if pos % 2 == 0 { 1 } else { -1 };
                    }
                }
                col
            })
            .collect()
    }

    fn differential_rank(&self, i: usize, field: FieldSpec) -> usize {
        let cols = self.differential_columns(i);
        if cols.is_empty() || cols[0].is_empty() {
            return 0;
        }
        linalg::rank(field, &cols)
    }

    /// All homology dimensions of this component at once.
    fn homology_dims(&self, field: FieldSpec) -> Vec<u64> {
        let top = self.multidegree.len();
        let ranks: Vec<usize> = (0..=top + 1)
            .map(|i| {
                if i == 0 || i > top {
                    0
                } else {
                    self.differential_rank(i, field)
                }
            })
            .collect();
        (0..=top)
            .map(|i| (self.dim(i) - ranks[i] - ranks[i + 1]) as u64)
            .collect()
    }

    /// Coordinates of a chain with respect to the component basis.
    fn vector_of(&self, chain: &KoszulChain) -> Vec<i64> {
        let i = chain.degree;
        let mut v = vec![0i64; self.dim(i)];
        for (wedge, coeff) in chain.terms() {
            let idx = self
                .index_of(i, wedge)
                .expect("chain terms are reduced modulo the ideal");
            v[idx] = coeff;
        }
        v
    }
}

/// The basis `{ (m, L) : L ⊆ a, |L| = i, m = x^(a\L) ∉ I }` of the Koszul
/// component in homological degree `i` and multidegree `a`.
pub fn component_basis(ideal: &SqfIdeal, i: usize, a: VertexSet) -> Vec<(VertexSet, VertexSet)> {
    Component::new(ideal, a)
        .bases
        .get(i)
        .map(|b| b.iter().map(|&l| (a.minus(l), l)).collect())
        .unwrap_or_default()
}

/// All unions of generator supports; Betti numbers vanish off this set.
pub fn lcm_lattice(ideal: &SqfIdeal) -> BTreeSet<VertexSet> {
    let mut lattice = BTreeSet::from([VertexSet::EMPTY]);
    for &g in ideal.generators() {
        let additions: Vec<VertexSet> = lattice.iter().map(|&a| a.union(g)).collect();
        lattice.extend(additions);
    }
    lattice
}

/// One multigraded Betti number, computed directly from the Koszul
/// component of `a` (no lattice shortcut, so this is also an oracle for
/// the vanishing claims).
pub fn betti_number(ideal: &SqfIdeal, i: usize, a: VertexSet, field: FieldSpec) -> Result<u64> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if i > a.len() {
        return Ok(0);
    }
    let component = Component::new(ideal, a);
    Ok(component.homology_dims(field)[i])
}

/// The full multigraded Betti table of `R/I`, enumerating only lcm-lattice
/// multidegrees. Components are independent and evaluated in parallel.
pub fn betti_table(ideal: &SqfIdeal, field: FieldSpec) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(BettiTable::of_free_ring(ideal.num_variables()));
    }
    let lattice: Vec<VertexSet> = lcm_lattice(ideal).into_iter().collect();
    let per_degree: Vec<Vec<(usize, VertexSet, u64)>> = lattice
        .par_iter()
        .map(|&a| {
            let component = Component::new(ideal, a);
            component
                .homology_dims(field)
                .into_iter()
                .enumerate()
                .filter(|&(_, b)| b > 0)
                .map(|(i, b)| (i, a, b))
                .collect()
        })
        .collect();
    let mut table = BettiTable::new(ideal.num_variables());
    for entries in per_degree {
        for (i, a, b) in entries {
            table.add(i, a, b);
        }
    }
    Ok(table)
}

/// Regularity and projective dimension of `R/I` read off a complete
/// table: `max(j - i)` and `max(i)` over the nonzero entries.
pub fn reg_pd(table: &BettiTable) -> (usize, usize) {
    (table.regularity(), table.projective_dimension())
}

/// Whether `I` has a linear resolution: equigenerated in some degree `g`
/// with `b_{i,j}(R/I) = 0` for all `i >= 1` and `j != i + g - 1`.
pub fn is_linear_resolution(ideal: &SqfIdeal, table: &BettiTable) -> bool {
    let Some(g) = ideal.equigenerated_degree() else {
        return false;
    };
    table.iter().all(|(i, a, _)| i == 0 || a.len() == i + g - 1)
}

/// Monomial cycles of one component together with the rank of their
/// homology classes.
#[derive(Clone, Debug)]
pub struct MonomialCycleComponent {
    pub degree: usize,
    pub multidegree: VertexSet,
    /// Wedge sets `L` of the monomial cycles `x^(a\L) e_L`.
    pub cycles: Vec<VertexSet>,
    pub class_rank: usize,
    pub betti: u64,
    /// Whether the cycle classes span the homology component.
    pub spans: bool,
}

/// The monomial-cycle certificate across all homological degrees at once,
/// sharing one rank computation per component. Only components with
/// nonzero homology or at least one monomial cycle are reported.
pub fn monomial_cycle_census(
    ideal: &SqfIdeal,
    field: FieldSpec,
) -> Result<Vec<MonomialCycleComponent>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let lattice: Vec<VertexSet> = lcm_lattice(ideal).into_iter().collect();
    let per_degree: Vec<Vec<MonomialCycleComponent>> = lattice
        .par_iter()
        .map(|&a| {
            let component = Component::new(ideal, a);
            let dims = component.homology_dims(field);
            let mut out = Vec::new();
            for (r, &betti) in dims.iter().enumerate() {
                let cycles: Vec<VertexSet> = component.bases[r]
                    .iter()
                    .copied()
                    .filter(|&l| l.iter().all(|v| ideal.contains(a.minus(l.without(v)))))
                    .collect();
                if betti == 0 && cycles.is_empty() {
                    continue;
                }
                let boundaries = component.differential_columns(r + 1);
                let base_rank = if boundaries.is_empty() {
                    0
                } else {
                    linalg::rank(field, &boundaries)
                };
                let mut spanned = boundaries;
                for &l in &cycles {
                    let mut v = vec![0i64; component.dim(r)];
                    v[component.index_of(r, l).unwrap()] = 1;
                    spanned.push(v);
                }
                let class_rank = if spanned.is_empty() {
                    0
                } else {
                    linalg::rank(field, &spanned) - base_rank
                };
                out.push(MonomialCycleComponent {
                    degree: r,
                    multidegree: a,
                    cycles,
                    class_rank,
                    betti,
                    spans: class_rank as u64 == betti,
                });
            }
            out
        })
        .collect();
    Ok(per_degree.into_iter().flatten().collect())
}

/// Enumerates the monomial cycles `f e_L` in homological degree `r` per
/// lcm-lattice multidegree and certifies how much of the homology their
/// classes span.
pub fn monomial_cycle_basis(
    ideal: &SqfIdeal,
    r: usize,
    field: FieldSpec,
) -> Result<Vec<MonomialCycleComponent>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let lattice: Vec<VertexSet> = lcm_lattice(ideal).into_iter().collect();
    let out: Vec<MonomialCycleComponent> = lattice
        .par_iter()
        .filter(|a| r <= a.len())
        .map(|&a| {
            let component = Component::new(ideal, a);
            let betti = component.homology_dims(field)[r];
            // The cycle condition for f e_L: f x_l ∈ I for every l ∈ L.
            let cycles: Vec<VertexSet> = component.bases[r]
                .iter()
                .copied()
                .filter(|&l| l.iter().all(|v| ideal.contains(a.minus(l.without(v)))))
                .collect();
            let boundaries = component.differential_columns(r + 1);
            let base_rank = if boundaries.is_empty() {
                0
            } else {
                linalg::rank(field, &boundaries)
            };
            let mut spanned = boundaries;
            for &l in &cycles {
                let mut v = vec![0i64; component.dim(r)];
                v[component.index_of(r, l).unwrap()] = 1;
                spanned.push(v);
            }
            let class_rank = if spanned.is_empty() {
                0
            } else {
                linalg::rank(field, &spanned) - base_rank
            };
            MonomialCycleComponent {
                degree: r,
                multidegree: a,
                cycles,
                class_rank,
                betti,
                spans: class_rank as u64 == betti,
            }
        })
        .filter(|c| c.betti > 0 || !c.cycles.is_empty())
        .collect();
    Ok(out)
}

/// Decides whether the product of the homology classes of the given
/// cycles is nonzero: the representatives are wedged, reduced modulo the
/// ideal, and tested for boundary membership in their multidegree
/// component.
pub fn class_product_nonzero(
    ideal: &SqfIdeal,
    cycles: &[KoszulChain],
    field: FieldSpec,
) -> Result<bool> {
    if cycles.is_empty() {
        return Err(Error::EmptyInput);
    }
    for z in cycles {
        if !z.is_cycle(ideal) {
            return Err(Error::NotACycle);
        }
    }
    let mut product = cycles[0].clone();
    for z in &cycles[1..] {
        match product.wedge(z, ideal) {
            Some(p) => product = p,
            // Overlapping multidegrees land in a non-squarefree degree
            // where the class is zero.
            None => return Ok(false),
        }
    }
    if product.is_zero() {
        return Ok(false);
    }
    let component = Component::new(ideal, product.multidegree());
    let boundaries = component.differential_columns(product.degree() + 1);
    let target = component.vector_of(&product);
    if boundaries.is_empty() {
        return Ok(true);
    }
    Ok(!linalg::in_span(field, &boundaries, &target))
}

/// For the edge ideal of a one-dimensional forest: checks that products
/// of linear-cycle classes (bouquet cycles `x_root e_flowers`) span every
/// homology component, by rank comparison against the Betti numbers.
pub fn verify_linear_generation(ideal: &SqfIdeal, field: FieldSpec) -> Result<bool> {
    if ideal.generators().iter().any(|g| g.len() != 2) {
        return Err(Error::PreconditionViolated(
            "not an edge ideal: generators must have degree 2".into(),
        ));
    }
    if ideal.is_zero() {
        return Err(Error::PreconditionViolated("edge ideal is zero".into()));
    }
    if !complex_of_ideal(ideal)?.is_forest()? {
        return Err(Error::PreconditionViolated(
            "edge ideal does not come from a forest".into(),
        ));
    }
    let n = ideal.num_variables();
    let mut neighbors = vec![VertexSet::EMPTY; n];
    for &g in ideal.generators() {
        let vs: Vec<usize> = g.iter().collect();
        neighbors[vs[0]] = neighbors[vs[0]].with(vs[1]);
        neighbors[vs[1]] = neighbors[vs[1]].with(vs[0]);
    }
    for a in lcm_lattice(ideal) {
        if a.is_empty() {
            continue;
        }
        let component = Component::new(ideal, a);
        let dims = component.homology_dims(field);
        for (i, &betti) in dims.iter().enumerate().skip(1) {
            if betti == 0 {
                continue;
            }
            let mut families = Vec::new();
            let mut current = Vec::new();
            bouquet_partitions(&neighbors, a, i, &mut current, &mut families);
            let boundaries = component.differential_columns(i + 1);
            let base_rank = if boundaries.is_empty() {
                0
            } else {
                linalg::rank(field, &boundaries)
            };
            let mut spanned = boundaries;
            for family in &families {
                let mut product: Option<KoszulChain> = None;
                for &(root, flowers) in family {
                    let z = KoszulChain::monomial(ideal, flowers.with(root), flowers)?;
                    product = Some(match product {
                        None => z,
                        Some(p) => p.wedge(&z, ideal).expect("family parts are disjoint"),
                    });
                }
                let product = product.expect("families are nonempty");
                if !product.is_zero() {
                    spanned.push(component.vector_of(&product));
                }
            }
            let rank = if spanned.is_empty() {
                0
            } else {
                linalg::rank(field, &spanned) - base_rank
            };
            if rank as u64 != betti {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Partitions of the multidegree `a` into bouquets with `flowers_needed`
/// flowers in total. Each step covers the lowest remaining vertex, so
/// every family is produced exactly once.
fn bouquet_partitions(
    neighbors: &[VertexSet],
    remaining: VertexSet,
    flowers_needed: usize,
    current: &mut Vec<(usize, VertexSet)>,
    out: &mut Vec<Vec<(usize, VertexSet)>>,
) {
    if remaining.is_empty() {
        if flowers_needed == 0 {
            out.push(current.clone());
        }
        return;
    }
    if flowers_needed == 0 {
        return;
    }
    let v = remaining.iter().next().unwrap();
    // v as a root.
    let flower_pool = neighbors[v].intersect(remaining.without(v));
    for flowers in nonempty_submasks(flower_pool) {
        if flowers.len() > flowers_needed {
            continue;
        }
        current.push((v, flowers));
        bouquet_partitions(
            neighbors,
            remaining.without(v).minus(flowers),
            flowers_needed - flowers.len(),
            current,
            out,
        );
        current.pop();
    }
    // v as a flower of some root r.
    for r in remaining.without(v).iter() {
        if !neighbors[r].contains(v) {
            continue;
        }
        let pool = neighbors[r].intersect(remaining.without(r)).without(v);
        for rest in submasks(pool) {
            let flowers = rest.with(v);
            if flowers.len() > flowers_needed {
                continue;
            }
            current.push((r, flowers));
            bouquet_partitions(
                neighbors,
                remaining.without(r).minus(flowers),
                flowers_needed - flowers.len(),
                current,
                out,
            );
            current.pop();
        }
    }
}

fn submasks(m: VertexSet) -> impl Iterator<Item = VertexSet> {
    let bits = m.bits();
    let mut s = bits;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = s;
        if s == 0 {
            done = true;
        } else {
            s = (s - 1) & bits;
        }
        Some(VertexSet::from_bits(cur))
    })
}

fn nonempty_submasks(m: VertexSet) -> impl Iterator<Item = VertexSet> {
    submasks(m).filter(|s| !s.is_empty())
}

/// The complex spanned by the generator supports (universe restricted to
/// the covered vertices).
pub fn complex_of_ideal(ideal: &SqfIdeal) -> Result<SimplicialComplex> {
    let covered = ideal
        .generators()
        .iter()
        .fold(VertexSet::EMPTY, |acc, &g| acc.union(g));
    let old: Vec<usize> = covered.iter().collect();
    let facets = ideal
        .generators()
        .iter()
        .map(|g| {
            VertexSet::from_indices(g.iter().map(|v| old.iter().position(|&o| o == v).unwrap()))
        })
        .collect();
    SimplicialComplex::from_facets(old.len(), facets, false)
}
