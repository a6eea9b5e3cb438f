//! Squarefree monomial ideals presented by their minimal generators.
//!
//! Generators are vertex sets (supports); the unit monomial has empty
//! support. Colon ideals of squarefree ideals stay squarefree, so no
//! general exponent vectors are needed.

use crate::complex::{leaf_order_of, SimplicialComplex};
use crate::error::{Error, Result};
use crate::vset::VertexSet;
use std::collections::HashSet;

/// Cap on complete backtracking in the linear-quotient-order search.
pub const LQ_ORDER_BOUND: usize = 12;

/// A squarefree monomial ideal: an antichain of generator supports over a
/// universe of `n` variables, in canonical order.
///
/// The zero ideal has no generators; the unit ideal is generated by the
/// empty support.
#[derive(Clone, PartialEq, Eq)]
pub struct SqfIdeal {
    n: usize,
    gens: Vec<VertexSet>,
}

/// Result of passing to the complex of a colon ideal: the facets are the
/// generator supports, and universe vertices absent from every generator
/// are reported separately.
#[derive(Clone, Debug)]
pub struct QuotientComplex {
    pub complex: SimplicialComplex,
    pub isolated_vertices: Vec<String>,
}

impl SqfIdeal {
    /// The zero ideal in `n` variables.
    pub fn zero(n: usize) -> Self {
        SqfIdeal {
            n,
            gens: Vec::new(),
        }
    }

    /// Builds an ideal directly from an antichain. Callers must pass
    /// divisibility-incomparable supports; use [`SqfIdeal::minimalize`]
    /// otherwise.
    pub fn from_antichain(n: usize, mut gens: Vec<VertexSet>) -> Self {
        gens.sort();
        gens.dedup();
        debug_assert!(gens
            .iter()
            .all(|&f| !gens.iter().any(|&g| f != g && g.is_subset_of(f))));
        SqfIdeal { n, gens }
    }

    /// The divisibility-minimal antichain generating the same ideal.
    pub fn minimalize(n: usize, monomials: &[VertexSet]) -> Result<Self> {
        if monomials.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut gens: Vec<VertexSet> = monomials
            .iter()
            .copied()
            .filter(|&f| !monomials.iter().any(|&g| g != f && g.is_subset_of(f)))
            .collect();
        gens.sort();
        gens.dedup();
        Ok(SqfIdeal { n, gens })
    }

    /// The facet ideal: one generator per facet.
    pub fn facet_ideal(complex: &SimplicialComplex) -> Self {
        SqfIdeal::from_antichain(complex.vertex_count(), complex.facets().to_vec())
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn num_variables(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&VertexSet::EMPTY)
    }

    /// Membership of a squarefree monomial: divisibility by a generator.
    pub fn contains(&self, m: VertexSet) -> bool {
        self.gens.iter().any(|&g| g.is_subset_of(m))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.len()).min()
    }

    /// The common generator degree, when all generators share one.
    pub fn equigenerated_degree(&self) -> Option<usize> {
        let d = self.gens.first()?.len();
        self.gens.iter().all(|g| g.len() == d).then_some(d)
    }

    /// The colon ideal `self : f`, computed as the minimal antichain of
    /// `{ g / gcd(g, f) }`. The colon of the zero ideal is zero.
    pub fn colon_by(&self, f: VertexSet) -> SqfIdeal {
        if self.is_zero() {
            return SqfIdeal::zero(self.n);
        }
        let quotients: Vec<VertexSet> = self.gens.iter().map(|&g| g.minus(f)).collect();
        SqfIdeal::minimalize(self.n, &quotients).expect("nonzero ideal has generators")
    }

    /// Checks one order of the generators for the linear-quotient
    /// property: every colon by a prefix must be generated in degree one.
    /// The ideal must be equigenerated.
    pub fn is_linear_quotient_order(&self, order: &[usize]) -> Result<bool> {
        self.equigenerated_degree().ok_or(Error::MixedDegrees)?;
        let m = self.gens.len();
        if order.len() != m || {
            let mut seen = vec![false; m];
            order
                .iter()
                .any(|&i| i >= m || std::mem::replace(&mut seen[i], true))
        } {
            return Err(Error::BadOrder);
        }
        for i in 1..m {
            let prefix: Vec<VertexSet> = order[..i].iter().map(|&j| self.gens[j]).collect();
            if !colon_is_degree_one(&prefix, self.gens[order[i]]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Searches for a linear-quotient order: a leaf order of the
    /// generators is tried first, then complete backtracking with failed
    /// prefix sets memoized.
    pub fn find_linear_quotient_order(&self) -> Result<Option<Vec<usize>>> {
        self.equigenerated_degree().ok_or(Error::MixedDegrees)?;
        let m = self.gens.len();
        if m > LQ_ORDER_BOUND {
            return Err(Error::TooLarge(format!(
                "linear-quotient search on {m} generators exceeds the bound of {LQ_ORDER_BOUND}"
            )));
        }
        if m <= 1 {
            return Ok(Some((0..m).collect()));
        }
        if let Some(order) = leaf_order_of(&self.gens) {
            if self.is_linear_quotient_order(&order)? {
                return Ok(Some(order));
            }
        }
        let mut order = Vec::with_capacity(m);
        let mut used = vec![false; m];
        let mut dead: HashSet<u64> = HashSet::new();
        if self.lq_backtrack(&mut order, &mut used, 0, &mut dead) {
            Ok(Some(order))
        } else {
            Ok(None)
        }
    }

    fn lq_backtrack(
        &self,
        order: &mut Vec<usize>,
        used: &mut Vec<bool>,
        used_mask: u64,
        dead: &mut HashSet<u64>,
    ) -> bool {
        let m = self.gens.len();
        if order.len() == m {
            return true;
        }
        if dead.contains(&used_mask) {
            return false;
        }
        let prefix: Vec<VertexSet> = order.iter().map(|&j| self.gens[j]).collect();
        for next in 0..m {
            if used[next] {
                continue;
            }
            if !prefix.is_empty() && !colon_is_degree_one(&prefix, self.gens[next]) {
                continue;
            }
            order.push(next);
            used[next] = true;
            if self.lq_backtrack(order, used, used_mask | (1 << next), dead) {
                return true;
            }
            used[next] = false;
            order.pop();
        }
        dead.insert(used_mask);
        false
    }
}

/// Whether `(prefix) : f` is generated by degree-one monomials.
fn colon_is_degree_one(prefix: &[VertexSet], f: VertexSet) -> bool {
    let quotients: Vec<VertexSet> = prefix.iter().map(|&g| g.minus(f)).collect();
    let minimal: Vec<VertexSet> = quotients
        .iter()
        .copied()
        .filter(|&q| !quotients.iter().any(|&r| r != q && r.is_subset_of(q)))
        .collect();
    minimal.iter().all(|q| q.len() == 1)
}

/// The complex whose facet ideal is `(facets \ {f}) : f`, together with
/// the universe vertices that dropped out of every generator.
pub fn quotient_complex(complex: &SimplicialComplex, f: VertexSet) -> Result<QuotientComplex> {
    let idx = complex
        .facet_index(f)
        .ok_or_else(|| Error::NotAFacet(complex.format_face(f)))?;
    if complex.facet_count() < 2 {
        return Err(Error::PreconditionViolated(
            "quotient complex needs at least two facets".into(),
        ));
    }
    let rest: Vec<VertexSet> = complex
        .facets()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != idx)
        .map(|(_, &g)| g)
        .collect();
    let ideal = SqfIdeal::from_antichain(complex.vertex_count(), rest);
    let colon = ideal.colon_by(f);
    if colon.is_unit() {
        return Err(Error::UnitColon);
    }
    let covered = colon
        .generators()
        .iter()
        .fold(VertexSet::EMPTY, |acc, &g| acc.union(g));
    let old_indices: Vec<usize> = covered.iter().collect();
    let universe: Vec<String> = old_indices
        .iter()
        .map(|&v| complex.universe()[v].clone())
        .collect();
    let facets: Vec<VertexSet> = colon
        .generators()
        .iter()
        .map(|g| {
            VertexSet::from_indices(
                g.iter()
                    .map(|v| old_indices.iter().position(|&o| o == v).unwrap()),
            )
        })
        .collect();
    let isolated_vertices = (0..complex.vertex_count())
        .filter(|&v| !covered.contains(v))
        .map(|v| complex.universe()[v].clone())
        .collect();
    Ok(QuotientComplex {
        complex: SimplicialComplex::build(universe, facets, false)?,
        isolated_vertices,
    })
}

impl std::fmt::Debug for SqfIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| {
                if g.is_empty() {
                    "1".to_string()
                } else {
                    g.iter()
                        .map(|v| format!("x{v}"))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_complex;

    fn vs(indices: &[usize]) -> VertexSet {
        VertexSet::from_indices(indices.iter().copied())
    }

    #[test]
    fn facet_ideal_of_path() {
        let c = parse_complex("a b\nb c", false).unwrap();
        let ideal = SqfIdeal::facet_ideal(&c);
        assert_eq!(ideal.generators(), &[vs(&[0, 1]), vs(&[1, 2])]);
    }

    #[test]
    fn minimalize_examples() {
        let m = SqfIdeal::minimalize(3, &[vs(&[0, 1]), vs(&[0, 1, 2])]).unwrap();
        assert_eq!(m.generators(), &[vs(&[0, 1])]);
        let m = SqfIdeal::minimalize(2, &[vs(&[0]), vs(&[1])]).unwrap();
        assert_eq!(m.generators().len(), 2);
        assert!(SqfIdeal::minimalize(2, &[]).is_err());
    }

    #[test]
    fn colon_examples() {
        // (ab, bc) : bc is the unit ideal.
        let ideal = SqfIdeal::from_antichain(4, vec![vs(&[0, 1]), vs(&[1, 2])]);
        let unit = ideal.colon_by(vs(&[1, 2]));
        assert!(unit.is_unit());
        // (ab, bc) : cd = (b).
        let colon = ideal.colon_by(vs(&[2, 3]));
        assert_eq!(colon.generators(), &[vs(&[1])]);
        // Colon of the zero ideal stays zero.
        assert!(SqfIdeal::zero(2).colon_by(vs(&[0])).is_zero());
    }

    #[test]
    fn quotient_complex_of_path() {
        // For the path a-b-c-d and leaf {c,d}: (ab, bc) : cd = (b).
        let c = parse_complex("a b\nb c\nc d", false).unwrap();
        let q = quotient_complex(&c, vs(&[2, 3])).unwrap();
        assert_eq!(q.complex.facet_count(), 1);
        assert_eq!(q.complex.universe(), &["b"]);
        assert_eq!(q.isolated_vertices, vec!["a", "c", "d"]);
    }

    #[test]
    fn quotient_complex_disjoint_edges() {
        let c = parse_complex("a b\nc d", false).unwrap();
        let q = quotient_complex(&c, vs(&[2, 3])).unwrap();
        assert_eq!(q.complex.universe(), &["a", "b"]);
        assert_eq!(q.complex.facet_count(), 1);
    }

    #[test]
    fn quotient_complex_unit_colon() {
        // Removing a facet that contains another generator's support is
        // impossible on antichains, but colons by a facet equal to a
        // generator do produce the unit ideal.
        let c = parse_complex("a b\nb c", false).unwrap();
        // (bc) : ab = (c): fine.
        assert!(quotient_complex(&c, vs(&[0, 1])).is_ok());
        let single = parse_complex("a b", false).unwrap();
        assert!(quotient_complex(&single, vs(&[0, 1])).is_err());
    }

    #[test]
    fn quotient_of_forest_is_forest() {
        for text in ["a b\nb c\nc d", "a b c\nc d e\nd e f", "a b\nb c\nb d\nd e"] {
            let c = parse_complex(text, false).unwrap();
            assert!(c.is_forest().unwrap());
            for &f in c.facets() {
                match quotient_complex(&c, f) {
                    Ok(q) => assert!(q.complex.is_forest().unwrap(), "{text}"),
                    Err(Error::UnitColon) => {}
                    Err(e) => panic!("unexpected error {e:?}"),
                }
            }
        }
    }

    #[test]
    fn linear_quotient_order_checks() {
        let ideal = SqfIdeal::from_antichain(3, vec![vs(&[0, 1]), vs(&[1, 2])]);
        assert!(ideal.is_linear_quotient_order(&[0, 1]).unwrap());
        assert!(ideal.is_linear_quotient_order(&[1, 0]).unwrap());
        assert!(ideal.find_linear_quotient_order().unwrap().is_some());

        // Mixed degrees are rejected.
        let mixed = SqfIdeal::from_antichain(3, vec![vs(&[0]), vs(&[1, 2])]);
        assert_eq!(
            mixed.is_linear_quotient_order(&[0, 1]),
            Err(Error::MixedDegrees)
        );

        // Bad permutations are rejected.
        assert_eq!(
            ideal.is_linear_quotient_order(&[0, 0]),
            Err(Error::BadOrder)
        );
    }

    #[test]
    fn path_of_four_edges_has_no_lq_order() {
        let c = parse_complex("a b\nb c\nc d\nd e", false).unwrap();
        let ideal = SqfIdeal::facet_ideal(&c);
        assert_eq!(ideal.find_linear_quotient_order().unwrap(), None);
        for perm in [
            vec![0, 1, 2, 3],
            vec![3, 2, 1, 0],
            vec![1, 0, 2, 3],
            vec![0, 2, 1, 3],
        ] {
            assert!(!ideal.is_linear_quotient_order(&perm).unwrap());
        }
    }
}
