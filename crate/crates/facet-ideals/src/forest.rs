//! Fast algorithms and closed forms for facet ideals of forests: the
//! leaf recursion for multigraded Betti tables, the linear strand of pure
//! trees, linear-tree classification, regularity and projective dimension
//! of one-dimensional forests, and alternating strand sums.

use crate::betti::BettiTable;
use crate::complex::{leaf_in, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::SqfIdeal;
use crate::vset::VertexSet;
use std::collections::{BTreeMap, HashSet};

/// Edge-count cap for the exhaustive searches on one-dimensional forests.
pub const ONE_DIM_SEARCH_BOUND: usize = 24;

/// A star subgraph: a root vertex together with a nonempty set of
/// flowers, each joined to the root by an edge of the ambient graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bouquet {
    pub root: usize,
    pub flowers: VertexSet,
}

impl Bouquet {
    pub fn vertices(&self) -> VertexSet {
        self.flowers.with(self.root)
    }

    pub fn flower_count(&self) -> usize {
        self.flowers.len()
    }
}

/// Alternating strand sums `S_j = Σ_{i>=1} (-1)^i b_{i,i+j}(R/I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandSums {
    pub sums: BTreeMap<usize, i64>,
}

/// Outcome of the bouquet search for the projective dimension.
#[derive(Clone, Debug)]
pub struct PdSearch {
    pub pd: usize,
    /// A family of bouquets realizing the maximum flower count.
    pub family: Vec<Bouquet>,
    /// One stem per bouquet, pairwise disconnected, when a selection
    /// exists.
    pub stems: Option<Vec<(usize, usize)>>,
}

/// Facet, codimension-1-face and degree counts of a pure tree, with the
/// count identity `m - 1 = O - |V|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralCounts {
    pub facet_count: usize,
    pub codim1_face_count: usize,
    pub total_degree: usize,
    pub identity_holds: bool,
}

/// Per-pair distance/intersection data of a pure tree.
#[derive(Clone, Debug)]
pub struct DistanceReport {
    pub pairs: Vec<DistancePair>,
    pub all_at_least: bool,
    pub all_equal: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct DistancePair {
    pub f: VertexSet,
    pub g: VertexSet,
    /// `k` with `dim(f ∩ g) = d - k`.
    pub codim_k: usize,
    pub distance: usize,
}

/// Multigraded Betti table of the facet ideal of a forest by leaf
/// recursion: peel a leaf `f` off, recurse on the remaining ideal `J` and
/// on the colon `J : f` (again a facet ideal of a forest), and shift the
/// colon branch by the leaf's multidegree. Degree-one generators in colon
/// branches are split off first as a regular-sequence tensor step.
pub fn recursive_betti(complex: &SimplicialComplex) -> Result<BettiTable> {
    if !complex.forest_check_default()?.is_forest {
        return Err(Error::NotAForest);
    }
    let ideal = SqfIdeal::facet_ideal(complex);
    Ok(recursive_betti_gens(
        ideal.num_variables(),
        ideal.generators().to_vec(),
    ))
}

fn recursive_betti_gens(n: usize, gens: Vec<VertexSet>) -> BettiTable {
    if gens.is_empty() {
        return BettiTable::of_free_ring(n);
    }
    // Degree-one generators own their variable (the generators are an
    // antichain), so each is a regular variable on the rest of the ideal
    // and tensors the table with a (1, 1)-shifted copy.
    let (singles, rest): (Vec<VertexSet>, Vec<VertexSet>) = gens.iter().partition(|g| g.len() == 1);
    if !singles.is_empty() {
        let mut table = recursive_betti_gens(n, rest);
        for s in singles {
            let mut shifted = BettiTable::new(n);
            for (i, a, b) in table.iter() {
                shifted.add(i, a, b);
                shifted.add(i + 1, a.union(s), b);
            }
            table = shifted;
        }
        return table;
    }
    if gens.len() == 1 {
        let mut table = BettiTable::of_free_ring(n);
        table.add(1, gens[0], 1);
        return table;
    }
    let leaf_idx = (0..gens.len())
        .find(|&i| leaf_in(&gens, i))
        .expect("every forest has a leaf");
    let f = gens[leaf_idx];
    let rest: Vec<VertexSet> = gens
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != leaf_idx)
        .map(|(_, &g)| g)
        .collect();
    let colon = SqfIdeal::from_antichain(n, rest.clone()).colon_by(f);
    let mut table = recursive_betti_gens(n, rest);
    let colon_table = recursive_betti_gens(n, colon.generators().to_vec());
    table.absorb_shifted(&colon_table, 1, f);
    table
}

fn require_pure_codim1_tree(complex: &SimplicialComplex) -> Result<()> {
    if !complex.is_pure() {
        return Err(Error::PreconditionViolated("complex is not pure".into()));
    }
    if !complex.is_tree()? {
        return Err(Error::PreconditionViolated("complex is not a tree".into()));
    }
    if !complex.is_connected_codim1() {
        return Err(Error::PreconditionViolated(
            "complex is not connected in codimension 1".into(),
        ));
    }
    Ok(())
}

/// Linear strand of a pure `d`-dimensional tree connected in codimension
/// 1: `b_{1,1+d} = m` and `b_{i,i+d} = Σ_G C(deg G, i)` for `i >= 2`, the
/// sum running over the faces of dimension `d - 1`.
pub fn linear_strand_betti(complex: &SimplicialComplex) -> Result<BTreeMap<usize, u64>> {
    require_pure_codim1_tree(complex)?;
    strand_formula(complex)
}

fn strand_formula(complex: &SimplicialComplex) -> Result<BTreeMap<usize, u64>> {
    let faces = complex.codim1_faces()?;
    let mut out = BTreeMap::new();
    out.insert(1, complex.facet_count() as u64);
    let max_degree = faces.iter().map(|&(_, d)| d).max().unwrap_or(0);
    for i in 2..=max_degree {
        let total: u64 = faces.iter().map(|&(_, d)| binomial(d, i)).sum();
        if total > 0 {
            out.insert(i, total);
        }
    }
    Ok(out)
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result = 1u64;
    for i in 0..k {
        result = result * (n - i) as u64 / (i + 1) as u64;
    }
    result
}

/// `b_{2,3} = Σ_v C(deg v, 2)` for a one-dimensional tree.
pub fn second_betti_formula(complex: &SimplicialComplex) -> Result<u64> {
    if complex.dimension() != 1 {
        return Err(Error::PreconditionViolated(
            "complex is not 1-dimensional".into(),
        ));
    }
    if !complex.is_tree()? {
        return Err(Error::NotATree);
    }
    Ok((0..complex.vertex_count())
        .map(|v| {
            let deg = complex.facets().iter().filter(|f| f.contains(v)).count();
            binomial(deg, 2)
        })
        .sum())
}

/// A tree is a linear tree (its facet ideal has a linear resolution)
/// exactly when it has the intersection property. Trees that are not
/// pure or not connected in codimension 1 are never linear.
pub fn classify_linear_tree(complex: &SimplicialComplex) -> Result<bool> {
    if !complex.is_tree()? {
        return Err(Error::NotATree);
    }
    if !complex.is_pure() || !complex.is_connected_codim1() {
        return Ok(false);
    }
    complex.has_intersection_property()
}

/// Total Betti numbers of a linear tree: `b_1 = m` and
/// `b_i = Σ_G C(m(G), i)` for `i >= 2` over the `(d-1)`-faces `G`.
pub fn linear_tree_total_betti(complex: &SimplicialComplex) -> Result<BTreeMap<usize, u64>> {
    if !classify_linear_tree(complex)? {
        return Err(Error::NotLinearTree);
    }
    strand_formula(complex)
}

fn require_one_dim_forest(complex: &SimplicialComplex) -> Result<Vec<VertexSet>> {
    if complex.dimension() != 1 {
        return Err(Error::PreconditionViolated(
            "complex is not 1-dimensional".into(),
        ));
    }
    if !complex.forest_check_default()?.is_forest {
        return Err(Error::NotAForest);
    }
    Ok(complex
        .facets()
        .iter()
        .copied()
        .filter(|f| f.len() == 2)
        .collect())
}

/// Regularity of `R/I` for the edge ideal of a one-dimensional forest:
/// the maximum number of pairwise disconnected edges (vertex-disjoint
/// with no connecting edge), by exhaustive search with pruning.
pub fn reg_1dim(complex: &SimplicialComplex) -> Result<usize> {
    require_one_dim_forest(complex)?;
    max_disconnected_edges(complex)
}

/// The maximum number of pairwise disconnected edges of any complex of
/// dimension one. Off forests this no longer computes the regularity;
/// on the five-cycle it is 1 while the regularity is 2.
pub fn max_disconnected_edges(complex: &SimplicialComplex) -> Result<usize> {
    if complex.dimension() != 1 {
        return Err(Error::PreconditionViolated(
            "complex is not 1-dimensional".into(),
        ));
    }
    let edges: Vec<VertexSet> = complex
        .facets()
        .iter()
        .copied()
        .filter(|f| f.len() == 2)
        .collect();
    if edges.len() > ONE_DIM_SEARCH_BOUND {
        return Err(Error::TooLarge(format!(
            "induced-matching search on {} edges exceeds the bound of {ONE_DIM_SEARCH_BOUND}",
            edges.len()
        )));
    }
    let disconnected = |e: VertexSet, f: VertexSet| -> bool {
        e.is_disjoint_from(f)
            && e.iter().all(|u| {
                f.iter()
                    .all(|v| !complex.facets().contains(&VertexSet::from_indices([u, v])))
            })
    };
    fn search(
        edges: &[VertexSet],
        disconnected: &dyn Fn(VertexSet, VertexSet) -> bool,
        idx: usize,
        chosen: &mut Vec<VertexSet>,
        best: &mut usize,
    ) {
        *best = (*best).max(chosen.len());
        if idx == edges.len() || chosen.len() + (edges.len() - idx) <= *best {
            return;
        }
        if chosen.iter().all(|&c| disconnected(c, edges[idx])) {
            chosen.push(edges[idx]);
            search(edges, disconnected, idx + 1, chosen, best);
            chosen.pop();
        }
        search(edges, disconnected, idx + 1, chosen, best);
    }
    let mut best = 0;
    search(&edges, &disconnected, 0, &mut Vec::new(), &mut best);
    Ok(best)
}

fn edge_neighbors(complex: &SimplicialComplex) -> Vec<VertexSet> {
    let mut neighbors = vec![VertexSet::EMPTY; complex.vertex_count()];
    for f in complex.facets().iter().filter(|f| f.len() == 2) {
        let vs: Vec<usize> = f.iter().collect();
        neighbors[vs[0]] = neighbors[vs[0]].with(vs[1]);
        neighbors[vs[1]] = neighbors[vs[1]].with(vs[0]);
    }
    neighbors
}

/// All bouquets of the edge graph: every vertex with neighbors as root,
/// every nonempty neighbor subset as flowers.
pub fn enumerate_bouquets(complex: &SimplicialComplex) -> Vec<Bouquet> {
    let neighbors = edge_neighbors(complex);
    let mut out = Vec::new();
    for (root, &pool) in neighbors.iter().enumerate() {
        for k in 1..=pool.len() {
            for flowers in pool.subsets_of_size(k) {
                out.push(Bouquet { root, flowers });
            }
        }
    }
    out.sort_by(|a, b| {
        b.flower_count()
            .cmp(&a.flower_count())
            .then_with(|| (a.root, a.flowers).cmp(&(b.root, b.flowers)))
    });
    out
}

/// Validity of a bouquet family: stems are edges, all vertices pairwise
/// distinct, no two roots share an edge, and every bouquet keeps a flower
/// sharing no edge with any other root.
pub fn valid_bouquet_family(complex: &SimplicialComplex, family: &[Bouquet]) -> bool {
    let neighbors = edge_neighbors(complex);
    for b in family {
        if b.flowers.is_empty()
            || b.flowers.contains(b.root)
            || !b.flowers.is_subset_of(neighbors[b.root])
        {
            return false;
        }
    }
    // (a) pairwise distinct vertices.
    let mut seen = VertexSet::EMPTY;
    for b in family {
        if !seen.is_disjoint_from(b.vertices()) {
            return false;
        }
        seen = seen.union(b.vertices());
    }
    // (b) roots of any two bouquets share no edge.
    for (i, b) in family.iter().enumerate() {
        for c in &family[i + 1..] {
            if neighbors[b.root].contains(c.root) {
                return false;
            }
        }
    }
    // (c) every bouquet has a flower with no edge to any other root.
    for (i, b) in family.iter().enumerate() {
        let has_private = b.flowers.iter().any(|y| {
            family
                .iter()
                .enumerate()
                .all(|(j, c)| j == i || !neighbors[c.root].contains(y))
        });
        if !has_private {
            return false;
        }
    }
    true
}

/// One stem per bouquet such that the chosen stems are pairwise
/// disconnected edges, found by exhaustive choice.
pub fn pick_up_stems(
    complex: &SimplicialComplex,
    family: &[Bouquet],
) -> Option<Vec<(usize, usize)>> {
    let neighbors = edge_neighbors(complex);
    let stems_disconnected = |a: (usize, usize), b: (usize, usize)| -> bool {
        let sa = VertexSet::from_indices([a.0, a.1]);
        let sb = VertexSet::from_indices([b.0, b.1]);
        sa.is_disjoint_from(sb)
            && !neighbors[a.0].contains(b.0)
            && !neighbors[a.0].contains(b.1)
            && !neighbors[a.1].contains(b.0)
            && !neighbors[a.1].contains(b.1)
    };
    fn choose(
        family: &[Bouquet],
        idx: usize,
        chosen: &mut Vec<(usize, usize)>,
        disconnected: &dyn Fn((usize, usize), (usize, usize)) -> bool,
    ) -> bool {
        if idx == family.len() {
            return true;
        }
        for flower in family[idx].flowers.iter() {
            let stem = (family[idx].root, flower);
            if chosen.iter().all(|&c| disconnected(c, stem)) {
                chosen.push(stem);
                if choose(family, idx + 1, chosen, disconnected) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    choose(family, 0, &mut chosen, &stems_disconnected).then_some(chosen)
}

/// Whether the bouquets are pairwise vertex-disjoint with stems that are
/// edges and admit a pairwise disconnected stem selection. This implies
/// the three family conditions and is what nonzero cycle products
/// actually require: vertex-disjointness and root conditions alone admit
/// families whose product dies, such as `(a;b), (d;c)` on the path
/// `a-b-c-d`, where the only stem choice `{a,b}, {c,d}` fails to be an
/// induced matching because of the edge `{b,c}`.
pub fn strongly_disjoint_family(complex: &SimplicialComplex, family: &[Bouquet]) -> bool {
    let neighbors = edge_neighbors(complex);
    for b in family {
        if b.flowers.is_empty()
            || b.flowers.contains(b.root)
            || !b.flowers.is_subset_of(neighbors[b.root])
        {
            return false;
        }
    }
    let mut seen = VertexSet::EMPTY;
    for b in family {
        if !seen.is_disjoint_from(b.vertices()) {
            return false;
        }
        seen = seen.union(b.vertices());
    }
    pick_up_stems(complex, family).is_some()
}

/// Projective dimension of `R/I` for the facet ideal of a one-dimensional
/// forest: the maximum total flower count over strongly disjoint bouquet
/// families, plus one for each isolated-vertex facet (its variable is
/// regular on the rest of the ideal and shifts the resolution by one).
///
/// Enlarging a flower set inside the unused vertices never invalidates a
/// family, so a maximum family assigns every neighbor of the chosen root
/// set to an adjacent root. The search therefore runs over root sets:
/// pairwise non-adjacent vertices admitting a pairwise non-adjacent
/// selection of private neighbors, with value `|N(R) \ R|`.
pub fn pd_1dim(complex: &SimplicialComplex) -> Result<PdSearch> {
    require_one_dim_forest(complex)?;
    let isolated_facets = complex.facets().iter().filter(|f| f.len() == 1).count();
    let neighbors = edge_neighbors(complex);
    let candidates: Vec<usize> = (0..complex.vertex_count())
        .filter(|&v| !neighbors[v].is_empty())
        .collect();
    if candidates.len() > ONE_DIM_SEARCH_BOUND {
        return Err(Error::TooLarge(format!(
            "bouquet search on {} vertices exceeds the bound of {ONE_DIM_SEARCH_BOUND}",
            candidates.len()
        )));
    }
    // suffix_pool[idx]: neighbors reachable from candidates idx onward.
    let mut suffix_pool = vec![VertexSet::EMPTY; candidates.len() + 1];
    for idx in (0..candidates.len()).rev() {
        suffix_pool[idx] = suffix_pool[idx + 1].union(neighbors[candidates[idx]]);
    }
    let mut best_value = 0usize;
    let mut best_roots: Vec<usize> = Vec::new();
    let mut roots = Vec::new();
    search_roots(
        &neighbors,
        &candidates,
        &suffix_pool,
        0,
        &mut roots,
        &mut best_value,
        &mut best_roots,
    );
    let family = family_of_roots(&neighbors, &best_roots);
    debug_assert!(valid_bouquet_family(complex, &family));
    debug_assert_eq!(
        family.iter().map(Bouquet::flower_count).sum::<usize>(),
        best_value
    );
    let stems = pick_up_stems(complex, &family);
    debug_assert!(stems.is_some());
    Ok(PdSearch {
        pd: best_value + isolated_facets,
        family,
        stems,
    })
}

fn search_roots(
    neighbors: &[VertexSet],
    candidates: &[usize],
    suffix_pool: &[VertexSet],
    idx: usize,
    roots: &mut Vec<usize>,
    best_value: &mut usize,
    best_roots: &mut Vec<usize>,
) {
    let root_set = VertexSet::from_indices(roots.iter().copied());
    let covered = roots
        .iter()
        .fold(VertexSet::EMPTY, |acc, &r| acc.union(neighbors[r]));
    // No extension can beat the best value once even the full remaining
    // neighbor pool falls short.
    if covered.union(suffix_pool[idx]).minus(root_set).len() <= *best_value {
        return;
    }
    if idx == candidates.len() {
        if roots.is_empty() || !private_selection_exists(neighbors, roots) {
            return;
        }
        let value = covered.minus(root_set).len();
        if value > *best_value {
            *best_value = value;
            *best_roots = roots.clone();
        }
        return;
    }
    let v = candidates[idx];
    // Include v as a root when no chosen root is adjacent to it.
    if roots.iter().all(|&r| !neighbors[r].contains(v)) {
        roots.push(v);
        search_roots(
            neighbors,
            candidates,
            suffix_pool,
            idx + 1,
            roots,
            best_value,
            best_roots,
        );
        roots.pop();
    }
    search_roots(
        neighbors,
        candidates,
        suffix_pool,
        idx + 1,
        roots,
        best_value,
        best_roots,
    );
}

/// Whether each root can pick a private neighbor (adjacent to no other
/// root) such that the picks are pairwise non-adjacent. Such picks are
/// exactly the flowers of a pairwise disconnected stem selection.
fn private_selection_exists(neighbors: &[VertexSet], roots: &[usize]) -> bool {
    let privates: Vec<VertexSet> = roots
        .iter()
        .map(|&r| {
            VertexSet::from_indices(
                neighbors[r]
                    .iter()
                    .filter(|&y| roots.iter().all(|&s| s == r || !neighbors[s].contains(y))),
            )
        })
        .collect();
    fn pick(
        privates: &[VertexSet],
        neighbors: &[VertexSet],
        idx: usize,
        chosen: VertexSet,
    ) -> bool {
        if idx == privates.len() {
            return true;
        }
        privates[idx].iter().any(|y| {
            chosen.iter().all(|z| !neighbors[z].contains(y))
                && pick(privates, neighbors, idx + 1, chosen.with(y))
        })
    }
    pick(&privates, neighbors, 0, VertexSet::EMPTY)
}

/// A maximum family for a valid root set: private neighbors go to their
/// root, shared neighbors to the smallest adjacent root.
fn family_of_roots(neighbors: &[VertexSet], roots: &[usize]) -> Vec<Bouquet> {
    let root_set = VertexSet::from_indices(roots.iter().copied());
    let mut flowers: BTreeMap<usize, VertexSet> =
        roots.iter().map(|&r| (r, VertexSet::EMPTY)).collect();
    let covered = roots
        .iter()
        .fold(VertexSet::EMPTY, |acc, &r| acc.union(neighbors[r]));
    // A private neighbor has a unique adjacent root; shared neighbors go
    // to the smallest adjacent root.
    for y in covered.minus(root_set).iter() {
        let owner = roots
            .iter()
            .copied()
            .filter(|&r| neighbors[r].contains(y))
            .min()
            .expect("covered vertices have an adjacent root");
        let entry = flowers.get_mut(&owner).unwrap();
        *entry = entry.with(y);
    }
    flowers
        .into_iter()
        .filter(|(_, f)| !f.is_empty())
        .map(|(root, flowers)| Bouquet { root, flowers })
        .collect()
}

/// Strand sums `S_j = Σ_{i>=1} (-1)^i b_{i,i+j}` of a graded table.
pub fn strand_sums(table: &BettiTable) -> StrandSums {
    let mut sums: BTreeMap<usize, i64> = BTreeMap::new();
    for (&(i, j), &b) in &table.graded() {
        if i == 0 {
            continue;
        }
        let sign = if i % 2 == 0 { 1 } else { -1 };
        *sums.entry(j - i).or_insert(0) += sign * b as i64;
    }
    sums.retain(|_, v| *v != 0);
    StrandSums { sums }
}

/// The alternating sum property for minimum generator degree `g`:
/// `S_{g-1} = -1` and `S_j = 0` for every `j > g - 1`.
pub fn has_alternating_sum_property(table: &BettiTable, min_degree: usize) -> bool {
    let sums = strand_sums(table).sums;
    if min_degree == 0 {
        return false;
    }
    sums.get(&(min_degree - 1)) == Some(&-1) && sums.keys().all(|&j| j < min_degree)
}

/// Alternating sums including the `i = 0` column, per strand `j`.
pub fn full_alternating_sums(table: &BettiTable) -> BTreeMap<usize, i64> {
    let mut sums: BTreeMap<usize, i64> = BTreeMap::new();
    for (&(i, j), &b) in &table.graded() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        *sums.entry(j - i).or_insert(0) += sign * b as i64;
    }
    sums.retain(|_, v| *v != 0);
    sums
}

/// Searches for a facet order in which every facet past the first brings
/// a fresh vertex and some earlier facet exceeds it by exactly one
/// vertex. Such an order forces the alternating sum property.
pub fn find_main_order(complex: &SimplicialComplex) -> Option<Vec<usize>> {
    let facets = complex.facets();
    let m = facets.len();
    assert!(m <= 64, "main-order search supports at most 64 facets");
    let mut order = Vec::with_capacity(m);
    let mut dead: HashSet<u64> = HashSet::new();
    fn place(
        facets: &[VertexSet],
        order: &mut Vec<usize>,
        used_mask: u64,
        union: VertexSet,
        dead: &mut HashSet<u64>,
    ) -> bool {
        let m = facets.len();
        if order.len() == m {
            return true;
        }
        if dead.contains(&used_mask) {
            return false;
        }
        for next in 0..m {
            if used_mask & (1 << next) != 0 {
                continue;
            }
            if !order.is_empty() {
                let fresh = !facets[next].minus(union).is_empty();
                let near = order
                    .iter()
                    .any(|&j| facets[j].minus(facets[next]).len() == 1);
                if !fresh || !near {
                    continue;
                }
            }
            order.push(next);
            if place(
                facets,
                order,
                used_mask | (1 << next),
                union.union(facets[next]),
                dead,
            ) {
                return true;
            }
            order.pop();
        }
        dead.insert(used_mask);
        false
    }
    place(facets, &mut order, 0, VertexSet::EMPTY, &mut dead).then_some(order)
}

/// Attaches a facet `G ∪ {fresh}` at an adjacent face `G` of a linear
/// tree; the result is again a linear tree.
pub fn attach_facet_linear(
    complex: &SimplicialComplex,
    g: VertexSet,
    fresh: &str,
) -> Result<SimplicialComplex> {
    if !classify_linear_tree(complex)? {
        return Err(Error::NotLinearTree);
    }
    if !complex.adjacent_faces()?.iter().any(|&(face, _)| face == g) {
        return Err(Error::NotAdjacentFace(complex.format_face(g)));
    }
    if complex.universe().iter().any(|name| name == fresh) {
        return Err(Error::VertexClash(fresh.to_string()));
    }
    let mut universe = complex.universe().to_vec();
    universe.push(fresh.to_string());
    let new_facet = g.with(complex.vertex_count());
    let mut facets = complex.facets().to_vec();
    facets.push(new_facet);
    SimplicialComplex::build(universe, facets, false)
}

/// Counts `m`, `|V|`, `O` of a pure tree connected in codimension 1 and
/// the identity `m - 1 = O - |V|`.
pub fn structural_counts(complex: &SimplicialComplex) -> Result<StructuralCounts> {
    require_pure_codim1_tree(complex)?;
    let faces = complex.codim1_faces()?;
    let facet_count = complex.facet_count();
    let codim1_face_count = faces.len();
    let total_degree: usize = faces.iter().map(|&(_, d)| d).sum();
    Ok(StructuralCounts {
        facet_count,
        codim1_face_count,
        total_degree,
        identity_holds: facet_count - 1 == total_degree - codim1_face_count,
    })
}

/// For every facet pair of a pure tree connected in codimension 1:
/// the codimension `k` of the intersection against the chain distance.
/// `dist >= k` always; equality characterizes linear trees.
pub fn distance_property_check(complex: &SimplicialComplex) -> Result<DistanceReport> {
    require_pure_codim1_tree(complex)?;
    let d = complex.dimension();
    let mut pairs = Vec::new();
    let facets = complex.facets();
    for (i, &f) in facets.iter().enumerate() {
        for &g in &facets[i + 1..] {
            let codim_k = (d - f.intersect(g).dim()) as usize;
            let distance = complex
                .distance_unchecked(f, g)?
                .finite()
                .expect("tree is connected");
            pairs.push(DistancePair {
                f,
                g,
                codim_k,
                distance,
            });
        }
    }
    let all_at_least = pairs.iter().all(|p| p.distance >= p.codim_k);
    let all_equal = pairs.iter().all(|p| p.distance == p.codim_k);
    Ok(DistanceReport {
        pairs,
        all_at_least,
        all_equal,
    })
}
