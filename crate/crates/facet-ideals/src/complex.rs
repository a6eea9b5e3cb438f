//! Simplicial complexes presented by their facets.
//!
//! A complex is an antichain of facets over a named vertex universe. All
//! structural notions used by the resolution machinery live here: leaves
//! and free vertices, stars and links, proper and irredundant chains,
//! connectivity in codimension 1, leaf orders, the forest/tree property,
//! distances and the intersection property.

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};
use std::collections::{BTreeMap, BTreeSet, HashSet};

/// Default cap on the facet count for the exhaustive forest test.
pub const DEFAULT_FOREST_BOUND: usize = 20;

/// An antichain of facets over a named vertex universe.
///
/// Facets are kept deduplicated and sorted by bit pattern, so two complexes
/// built from the same facet sets compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    universe: Vec<String>,
    facets: Vec<VertexSet>,
}

/// A sequence of facet indices into a fixed complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetChain {
    pub indices: Vec<usize>,
}

/// Distance between two facets of a pure forest: the length of the unique
/// irredundant proper chain, or infinite across components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(n) => Some(n),
            Distance::Infinite => None,
        }
    }
}

/// Outcome of the exhaustive forest test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestCheck {
    pub is_forest: bool,
    /// A minimal leafless facet subset when the complex is not a forest.
    pub witness: Option<Vec<VertexSet>>,
}

impl SimplicialComplex {
    /// Builds a complex from facets over a named universe.
    ///
    /// Rejects empty input, universes beyond the bit-set capacity, facets
    /// outside the universe, nested facets (unless `normalize` is set, in
    /// which case non-maximal faces are dropped) and universe vertices that
    /// occur in no facet.
    pub fn build(universe: Vec<String>, facets: Vec<VertexSet>, normalize: bool) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        if universe.len() > MAX_VERTICES {
            return Err(Error::CapacityExceeded(universe.len()));
        }
        let full = VertexSet::from_indices(0..universe.len());
        for &f in &facets {
            if !f.is_subset_of(full) {
                return Err(Error::NotAFace(format!("{f:?}")));
            }
        }
        let mut facets: Vec<VertexSet> = {
            let set: BTreeSet<VertexSet> = facets.into_iter().collect();
            set.into_iter().collect()
        };
        if normalize {
            facets = maximal_elements(&facets);
        } else {
            for (i, &f) in facets.iter().enumerate() {
                for (j, &g) in facets.iter().enumerate() {
                    if i != j && f.is_subset_of(g) {
                        return Err(Error::NotAntichain(format!("{f:?}"), format!("{g:?}")));
                    }
                }
            }
        }
        let covered = facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f));
        if let Some(v) = (0..universe.len()).find(|&v| !covered.contains(v)) {
            return Err(Error::UnusedVertex(universe[v].clone()));
        }
        Ok(SimplicialComplex { universe, facets })
    }

    /// Convenience builder with universe `v0, v1, ...` named after indices.
    pub fn from_facets(n: usize, facets: Vec<VertexSet>, normalize: bool) -> Result<Self> {
        let universe = (0..n).map(|i| format!("v{i}")).collect();
        SimplicialComplex::build(universe, facets, normalize)
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn vertex_count(&self) -> usize {
        self.universe.len()
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facet_index(&self, f: VertexSet) -> Option<usize> {
        self.facets.binary_search(&f).ok()
    }

    fn require_facet(&self, f: VertexSet) -> Result<usize> {
        self.facet_index(f)
            .ok_or_else(|| Error::NotAFacet(self.format_face(f)))
    }

    /// Renders a face using the universe's vertex names.
    pub fn format_face(&self, f: VertexSet) -> String {
        let names: Vec<&str> = f
            .iter()
            .map(|v| self.universe.get(v).map(|s| s.as_str()).unwrap_or("?"))
            .collect();
        format!("{{{}}}", names.join(","))
    }

    /// `max { dim F : F facet }`; the empty simplex has dimension -1.
    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dimension();
        self.facets.iter().all(|f| f.dim() == d)
    }

    /// True when `g` spans a face, i.e. is contained in some facet.
    pub fn is_face(&self, g: VertexSet) -> bool {
        self.facets.iter().any(|&f| g.is_subset_of(f))
    }

    /// A leaf is either the only facet, or a facet `f` dominated by some
    /// other facet `g`: every intersection `f ∩ h` sits inside `f ∩ g`.
    pub fn is_leaf(&self, f: VertexSet) -> Result<bool> {
        let idx = self.require_facet(f)?;
        Ok(leaf_in(&self.facets, idx))
    }

    /// All facets `g` that dominate the intersections of `f`.
    pub fn universal_set(&self, f: VertexSet) -> Result<Vec<VertexSet>> {
        let idx = self.require_facet(f)?;
        Ok(universal_set_in(&self.facets, idx))
    }

    /// Vertices of `f` that belong to no other facet.
    pub fn free_vertices(&self, f: VertexSet) -> Result<VertexSet> {
        self.require_facet(f)?;
        let others = self
            .facets
            .iter()
            .filter(|&&g| g != f)
            .fold(VertexSet::EMPTY, |acc, &g| acc.union(g));
        Ok(f.minus(others))
    }

    /// Subcomplex spanned by the facets containing `g`. The empty face
    /// yields the whole complex.
    pub fn star(&self, g: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_face(g) {
            return Err(Error::NotAFace(self.format_face(g)));
        }
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .copied()
            .filter(|f| g.is_subset_of(*f))
            .collect();
        Ok(self.restrict(facets))
    }

    /// Complex with facets `{f \ g : f facet, g ⊆ f}`.
    pub fn link(&self, g: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_face(g) {
            return Err(Error::NotAFace(self.format_face(g)));
        }
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|f| g.is_subset_of(**f))
            .map(|f| f.minus(g))
            .collect();
        Ok(self.restrict(facets))
    }

    /// Builds a sub-universe complex out of the given facets, keeping the
    /// original vertex names. Used by star/link/components.
    fn restrict(&self, facets: Vec<VertexSet>) -> SimplicialComplex {
        let covered = facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f));
        let old_indices: Vec<usize> = covered.iter().collect();
        let mut remap = [usize::MAX; MAX_VERTICES];
        for (new, &old) in old_indices.iter().enumerate() {
            remap[old] = new;
        }
        let universe = old_indices
            .iter()
            .map(|&v| self.universe[v].clone())
            .collect();
        let mut facets: Vec<VertexSet> = facets
            .into_iter()
            .map(|f| VertexSet::from_indices(f.iter().map(|v| remap[v])))
            .collect();
        facets.sort();
        facets.dedup();
        SimplicialComplex { universe, facets }
    }

    /// Partition of the facet indices into connected components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let m = self.facets.len();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let root = find(parent, parent[i]);
                parent[i] = root;
            }
            parent[i]
        }
        for i in 0..m {
            for j in i + 1..m {
                if !self.facets[i].is_disjoint_from(self.facets[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..m {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(i);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// One step of a proper chain: `dim(f ∩ g) = dim g - 1`.
    fn proper_step(&self, f: usize, g: usize) -> bool {
        f != g && self.facets[f].intersect(self.facets[g]).dim() == self.facets[g].dim() - 1
    }

    /// Reachability matrix of the directed proper-step graph.
    fn proper_reachability(&self) -> Vec<Vec<bool>> {
        let m = self.facets.len();
        let mut reach = vec![vec![false; m]; m];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for i in 0..m {
            for j in 0..m {
                if self.proper_step(i, j) {
                    reach[i][j] = true;
                }
            }
        }
        for k in 0..m {
            for i in 0..m {
                if reach[i][k] {
                    for j in 0..m {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        reach
    }

    /// Connected in codimension 1: every ordered facet pair with
    /// `dim f >= dim g` is joined by a proper chain.
    pub fn is_connected_codim1(&self) -> bool {
        let reach = self.proper_reachability();
        let m = self.facets.len();
        for i in 0..m {
            for j in 0..m {
                if self.facets[i].dim() >= self.facets[j].dim() && !reach[i][j] {
                    return false;
                }
            }
        }
        true
    }

    /// Chain predicates on explicit facet index sequences.
    pub fn is_chain(&self, chain: &FacetChain) -> bool {
        let ix = &chain.indices;
        !ix.is_empty()
            && ix.iter().all(|&i| i < self.facets.len())
            && ix
                .windows(2)
                .all(|w| !self.facets[w[0]].is_disjoint_from(self.facets[w[1]]))
    }

    pub fn is_proper_chain(&self, chain: &FacetChain) -> bool {
        let ix = &chain.indices;
        !ix.is_empty()
            && ix.iter().all(|&i| i < self.facets.len())
            && ix.windows(2).all(|w| self.proper_step(w[0], w[1]))
    }

    /// A chain is irredundant when no proper subsequence with the same
    /// endpoints is again a chain. Since every consecutive pair already
    /// joins, this amounts to: no two non-consecutive entries intersect.
    pub fn is_irredundant_chain(&self, chain: &FacetChain) -> bool {
        if !self.is_chain(chain) {
            return false;
        }
        let ix = &chain.indices;
        for p in 0..ix.len() {
            for q in p + 2..ix.len() {
                if !self.facets[ix[p]].is_disjoint_from(self.facets[ix[q]]) {
                    return false;
                }
            }
        }
        true
    }

    /// Irredundancy for proper chains: no skip pair `(p, q)`, `q >= p+2`,
    /// may itself be a proper step, otherwise the subsequence that jumps
    /// from `p` to `q` would again be a proper chain.
    pub fn is_irredundant_proper_chain(&self, chain: &FacetChain) -> bool {
        if !self.is_proper_chain(chain) {
            return false;
        }
        let ix = &chain.indices;
        for p in 0..ix.len() {
            for q in p + 2..ix.len() {
                if self.proper_step(ix[p], ix[q]) {
                    return false;
                }
            }
        }
        true
    }

    /// Enumerates all irredundant proper chains from `f` to `g`, in
    /// lexicographic order of the canonical facet indices.
    ///
    /// The search extends a partial chain only by facets that are a proper
    /// step from the last entry and not a proper step from any earlier
    /// entry; every completed chain is therefore irredundant, and no
    /// irredundant chain is missed.
    pub fn irredundant_proper_chains(&self, f: VertexSet, g: VertexSet) -> Result<Vec<FacetChain>> {
        let start = self.require_facet(f)?;
        let goal = self.require_facet(g)?;
        if start == goal {
            return Ok(vec![FacetChain {
                indices: vec![start],
            }]);
        }
        let m = self.facets.len();
        let mut out = Vec::new();
        let mut chain = vec![start];
        let mut on_chain = vec![false; m];
        on_chain[start] = true;
        self.chain_dfs(goal, &mut chain, &mut on_chain, &mut out);
        Ok(out)
    }

    fn chain_dfs(
        &self,
        goal: usize,
        chain: &mut Vec<usize>,
        on_chain: &mut Vec<bool>,
        out: &mut Vec<FacetChain>,
    ) {
        let last = *chain.last().unwrap();
        for next in 0..self.facets.len() {
            if on_chain[next] || !self.proper_step(last, next) {
                continue;
            }
            // A proper step from any earlier entry would create a shortcut.
            if chain[..chain.len() - 1]
                .iter()
                .any(|&e| self.proper_step(e, next))
            {
                continue;
            }
            if next == goal {
                let mut found = chain.clone();
                found.push(next);
                out.push(FacetChain { indices: found });
                continue;
            }
            chain.push(next);
            on_chain[next] = true;
            self.chain_dfs(goal, chain, on_chain, out);
            on_chain[next] = false;
            chain.pop();
        }
    }

    /// Verifies that the complex is a pure forest whose components are
    /// connected in codimension 1 (the setting in which facet distance is
    /// well defined).
    fn require_pure_codim1_forest(&self, bound: usize) -> Result<()> {
        if !self.is_pure() {
            return Err(Error::PreconditionViolated("complex is not pure".into()));
        }
        let check = self.forest_check(bound)?;
        if !check.is_forest {
            return Err(Error::PreconditionViolated(
                "complex is not a forest".into(),
            ));
        }
        for component in self.components() {
            let facets: Vec<VertexSet> = component.iter().map(|&i| self.facets[i]).collect();
            if !self.restrict(facets).is_connected_codim1() {
                return Err(Error::PreconditionViolated(
                    "a component is not connected in codimension 1".into(),
                ));
            }
        }
        Ok(())
    }

    /// Length of the unique irredundant proper chain between two facets of
    /// a pure forest; infinite across components.
    pub fn distance(&self, f: VertexSet, g: VertexSet) -> Result<Distance> {
        self.require_pure_codim1_forest(DEFAULT_FOREST_BOUND)?;
        self.distance_unchecked(f, g)
    }

    pub(crate) fn distance_unchecked(&self, f: VertexSet, g: VertexSet) -> Result<Distance> {
        let fi = self.require_facet(f)?;
        let gi = self.require_facet(g)?;
        let same_component = self
            .components()
            .iter()
            .any(|c| c.contains(&fi) && c.contains(&gi));
        if !same_component {
            return Ok(Distance::Infinite);
        }
        let chains = self.irredundant_proper_chains(f, g)?;
        assert_eq!(
            chains.len(),
            1,
            "pure codimension-1-connected trees admit a unique irredundant proper chain"
        );
        Ok(Distance::Finite(chains[0].indices.len() - 1))
    }

    /// Maximum finite facet distance.
    pub fn diameter(&self) -> Result<usize> {
        self.require_pure_codim1_forest(DEFAULT_FOREST_BOUND)?;
        let mut best = 0;
        for &f in &self.facets {
            for &g in &self.facets {
                if let Distance::Finite(d) = self.distance_unchecked(f, g)? {
                    best = best.max(d);
                }
            }
        }
        Ok(best)
    }

    /// Searches for an order `F_1, ..., F_n` in which every `F_i` is a leaf
    /// of the complex spanned by `F_1, ..., F_i`. Backtracking over "peel a
    /// leaf off the end", complete on failure.
    pub fn leaf_order(&self) -> Option<Vec<usize>> {
        leaf_order_of(&self.facets)
    }

    pub fn is_quasi_forest(&self) -> bool {
        self.leaf_order().is_some()
    }

    /// Exhaustive forest test with the default facet bound.
    pub fn forest_check_default(&self) -> Result<ForestCheck> {
        self.forest_check(DEFAULT_FOREST_BOUND)
    }

    /// Scans facet subsets by increasing size for a leafless subcomplex.
    /// Any subset of at most two facets has a leaf, so the scan starts at
    /// size three. The first witness found is of minimal size.
    pub fn forest_check(&self, bound: usize) -> Result<ForestCheck> {
        let m = self.facets.len();
        if m > bound {
            return Err(Error::TooLarge(format!(
                "forest test on {m} facets exceeds the bound of {bound}"
            )));
        }
        for size in 3..=m {
            // Gosper's hack: masks with `size` bits set, ascending.
            let mut mask: u64 = (1 << size) - 1;
            while mask < (1u64 << m) {
                let subset: Vec<VertexSet> = (0..m)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| self.facets[i])
                    .collect();
                if (0..subset.len()).all(|i| !leaf_in(&subset, i)) {
                    return Ok(ForestCheck {
                        is_forest: false,
                        witness: Some(subset),
                    });
                }
                let c = mask & mask.wrapping_neg();
                let r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        Ok(ForestCheck {
            is_forest: true,
            witness: None,
        })
    }

    pub fn is_forest(&self) -> Result<bool> {
        Ok(self.forest_check_default()?.is_forest)
    }

    pub fn is_tree(&self) -> Result<bool> {
        Ok(self.is_connected() && self.forest_check_default()?.is_forest)
    }

    /// All faces of dimension `d - 1` in a pure `d`-complex, with the
    /// number of facets containing each.
    pub fn codim1_faces(&self) -> Result<Vec<(VertexSet, usize)>> {
        if !self.is_pure() {
            return Err(Error::PreconditionViolated("complex is not pure".into()));
        }
        let mut degrees: BTreeMap<VertexSet, usize> = BTreeMap::new();
        for &f in &self.facets {
            for v in f.iter() {
                *degrees.entry(f.without(v)).or_insert(0) += 1;
            }
        }
        Ok(degrees.into_iter().collect())
    }

    /// The faces of `codim1_faces` lying in at least two facets.
    pub fn adjacent_faces(&self) -> Result<Vec<(VertexSet, usize)>> {
        Ok(self
            .codim1_faces()?
            .into_iter()
            .filter(|&(_, deg)| deg >= 2)
            .collect())
    }

    /// Intersection property: facets at intersection dimension `d - k` are
    /// at distance exactly `k`, for every pair. Distances are read off the
    /// irredundant proper chains (unique on trees; the minimum length is
    /// used in general).
    pub fn has_intersection_property(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::PreconditionViolated("complex is not pure".into()));
        }
        if !self.is_connected_codim1() {
            return Err(Error::PreconditionViolated(
                "complex is not connected in codimension 1".into(),
            ));
        }
        let d = self.dimension();
        for (i, &f) in self.facets.iter().enumerate() {
            for &g in &self.facets[i + 1..] {
                let k = (d - f.intersect(g).dim()) as usize;
                let chains = self.irredundant_proper_chains(f, g)?;
                let dist = chains
                    .iter()
                    .map(|c| c.indices.len() - 1)
                    .min()
                    .expect("codimension-1 connectivity guarantees a proper chain");
                if dist != k {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All distinct faces (subsets of facets), including the empty face.
    pub fn all_faces(&self) -> BTreeSet<VertexSet> {
        let mut faces = BTreeSet::new();
        for &f in &self.facets {
            for k in 0..=f.len() {
                faces.extend(f.subsets_of_size(k));
            }
        }
        faces
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.facets.iter().map(|&x| self.format_face(x)).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// Leaf test for a facet inside an explicit facet list.
pub(crate) fn leaf_in(facets: &[VertexSet], idx: usize) -> bool {
    if facets.len() == 1 {
        return true;
    }
    !universal_candidates(facets, idx).is_empty()
}

fn universal_candidates(facets: &[VertexSet], idx: usize) -> Vec<usize> {
    let f = facets[idx];
    (0..facets.len())
        .filter(|&gi| gi != idx)
        .filter(|&gi| {
            let fg = f.intersect(facets[gi]);
            (0..facets.len())
                .filter(|&hi| hi != idx)
                .all(|hi| f.intersect(facets[hi]).is_subset_of(fg))
        })
        .collect()
}

pub(crate) fn universal_set_in(facets: &[VertexSet], idx: usize) -> Vec<VertexSet> {
    universal_candidates(facets, idx)
        .into_iter()
        .map(|gi| facets[gi])
        .collect()
}

/// Complete backtracking search for a leaf order of the given facets.
/// Returns indices into the slice, in attachment order.
pub(crate) fn leaf_order_of(facets: &[VertexSet]) -> Option<Vec<usize>> {
    let m = facets.len();
    let mut remaining: Vec<usize> = (0..m).collect();
    let mut peeled = Vec::new();
    let mut dead: HashSet<Vec<u16>> = HashSet::new();
    fn peel(
        facets: &[VertexSet],
        remaining: &mut Vec<usize>,
        peeled: &mut Vec<usize>,
        dead: &mut HashSet<Vec<u16>>,
    ) -> bool {
        if remaining.len() == 1 {
            peeled.push(remaining[0]);
            return true;
        }
        let key: Vec<u16> = remaining.iter().map(|&i| i as u16).collect();
        if dead.contains(&key) {
            return false;
        }
        let current: Vec<VertexSet> = remaining.iter().map(|&i| facets[i]).collect();
        for pos in 0..remaining.len() {
            if !leaf_in(&current, pos) {
                continue;
            }
            let idx = remaining.remove(pos);
            peeled.push(idx);
            if peel(facets, remaining, peeled, dead) {
                return true;
            }
            peeled.pop();
            remaining.insert(pos, idx);
        }
        dead.insert(key);
        false
    }
    if m == 0 {
        return Some(Vec::new());
    }
    if peel(facets, &mut remaining, &mut peeled, &mut dead) {
        peeled.reverse();
        Some(peeled)
    } else {
        None
    }
}

/// Divisibility-maximal elements of a set family.
pub(crate) fn maximal_elements(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = sets
        .iter()
        .copied()
        .filter(|&f| !sets.iter().any(|&g| f != g && f.is_subset_of(g)))
        .collect();
    out.sort();
    out.dedup();
    out
}
