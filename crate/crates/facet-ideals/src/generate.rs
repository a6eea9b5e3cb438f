//! Seeded random instance generators. Fixed seeds give bit-identical
//! output; every generator verifies its structural contract and retries
//! until the budget runs out.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::forest::classify_linear_tree;
use crate::vset::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Desk-scale cap on the facet count of generated instances.
pub const MAX_GEN_FACETS: usize = 12;

/// Kinds of complexes the generator can produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    /// Mixed-dimension forest, possibly disconnected.
    Forest,
    /// Pure tree connected in codimension 1.
    Codim1Tree,
    /// Tree with the intersection property.
    LinearTree,
    /// One-dimensional forest (a graph forest).
    GraphForest,
}

impl std::str::FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forest" => Ok(GenKind::Forest),
            "codim1-tree" => Ok(GenKind::Codim1Tree),
            "linear-tree" => Ok(GenKind::LinearTree),
            "graph-forest" => Ok(GenKind::GraphForest),
            other => Err(Error::PreconditionViolated(format!(
                "unknown generator kind {other:?}"
            ))),
        }
    }
}

/// Parameters of one generator run.
#[derive(Clone, Copy, Debug)]
pub struct GenParams {
    pub kind: GenKind,
    pub facets: usize,
    /// Maximum facet dimension (exact dimension for the pure kinds).
    pub dim: usize,
    pub seed: u64,
    pub max_vertices: usize,
}

impl GenParams {
    pub fn new(kind: GenKind, facets: usize, dim: usize, seed: u64) -> Self {
        GenParams {
            kind,
            facets,
            dim,
            seed,
            max_vertices: 64,
        }
    }

    pub fn with_max_vertices(mut self, max_vertices: usize) -> Self {
        self.max_vertices = max_vertices;
        self
    }
}

fn vertex_name(i: usize) -> String {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    if i < LETTERS.len() {
        (LETTERS[i] as char).to_string()
    } else {
        format!("v{i}")
    }
}

fn named_complex(facets: Vec<VertexSet>) -> Result<SimplicialComplex> {
    let covered = facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc.union(f));
    let count = covered.iter().max().map_or(0, |m| m + 1);
    let universe = (0..count).map(vertex_name).collect();
    SimplicialComplex::build(universe, facets, true)
}

/// Generates a complex of the requested kind; deterministic in the seed.
pub fn generate(params: GenParams) -> Result<SimplicialComplex> {
    if params.facets == 0 {
        return Err(Error::EmptyInput);
    }
    if params.facets > MAX_GEN_FACETS {
        return Err(Error::PreconditionViolated(format!(
            "generator facet count {} exceeds the desk-scale cap of {MAX_GEN_FACETS}",
            params.facets
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let budget = 64 * params.facets.max(4);
    for _ in 0..budget {
        let attempt = match params.kind {
            GenKind::Forest => grow_quasi_forest(&mut rng, params),
            GenKind::GraphForest => grow_graph_forest(&mut rng, params),
            GenKind::Codim1Tree | GenKind::LinearTree => grow_codim1_tree(&mut rng, params),
        };
        let Some(facets) = attempt else { continue };
        let Ok(complex) = named_complex(facets) else {
            continue;
        };
        let ok = match params.kind {
            GenKind::Forest => complex.is_forest().unwrap_or(false),
            GenKind::GraphForest => {
                complex.dimension() == 1 && complex.is_forest().unwrap_or(false)
            }
            GenKind::Codim1Tree => {
                complex.is_tree().unwrap_or(false) && complex.is_connected_codim1()
            }
            GenKind::LinearTree => classify_linear_tree(&complex).unwrap_or(false),
        };
        if ok {
            return Ok(complex);
        }
    }
    Err(Error::GenerationExhausted)
}

/// Random quasi-forest growth: each new facet takes a proper subset of an
/// existing facet plus fresh vertices, which keeps it a leaf of the
/// complex built so far. The forest property is verified by the caller.
fn grow_quasi_forest(rng: &mut ChaCha8Rng, params: GenParams) -> Option<Vec<VertexSet>> {
    let max_size = (params.dim + 1).min(params.max_vertices);
    let mut next_vertex = 0usize;
    let fresh = |count: usize, next_vertex: &mut usize| -> Option<VertexSet> {
        if *next_vertex + count > params.max_vertices {
            return None;
        }
        let set = VertexSet::from_indices(*next_vertex..*next_vertex + count);
        *next_vertex += count;
        Some(set)
    };
    let first_size = rng.gen_range(1..=max_size);
    let mut facets = vec![fresh(first_size, &mut next_vertex)?];
    while facets.len() < params.facets {
        let size = rng.gen_range(1..=max_size);
        let base = facets[rng.gen_range(0..facets.len())];
        // A proper (possibly empty) subset of an existing facet.
        let keep_max = size.min(base.len().saturating_sub(1));
        let keep = if keep_max == 0 {
            0
        } else {
            rng.gen_range(0..=keep_max)
        };
        let kept = random_subset(rng, base, keep);
        let new_facet = kept.union(fresh(size - keep, &mut next_vertex)?);
        facets.push(new_facet);
    }
    Some(facets)
}

fn grow_graph_forest(rng: &mut ChaCha8Rng, params: GenParams) -> Option<Vec<VertexSet>> {
    let mut next_vertex = 0usize;
    let mut facets: Vec<VertexSet> = Vec::new();
    let mut vertices: Vec<usize> = Vec::new();
    while facets.len() < params.facets {
        let start_component = vertices.is_empty() || rng.gen_bool(0.25);
        let (u, v) = if start_component {
            if next_vertex + 2 > params.max_vertices {
                return None;
            }
            let pair = (next_vertex, next_vertex + 1);
            next_vertex += 2;
            pair
        } else {
            if next_vertex + 1 > params.max_vertices {
                return None;
            }
            let u = vertices[rng.gen_range(0..vertices.len())];
            let v = next_vertex;
            next_vertex += 1;
            (u, v)
        };
        vertices.push(u);
        vertices.push(v);
        vertices.dedup();
        facets.push(VertexSet::from_indices([u, v]));
    }
    Some(facets)
}

/// Pure tree growth by gluing each new facet to an existing one along a
/// full codimension-1 face plus one fresh vertex.
fn grow_codim1_tree(rng: &mut ChaCha8Rng, params: GenParams) -> Option<Vec<VertexSet>> {
    let size = params.dim + 1;
    if size > params.max_vertices {
        return None;
    }
    let mut next_vertex = size;
    let mut facets = vec![VertexSet::from_indices(0..size)];
    while facets.len() < params.facets {
        if next_vertex + 1 > params.max_vertices {
            return None;
        }
        let base = facets[rng.gen_range(0..facets.len())];
        let dropped: Vec<usize> = base.iter().collect();
        let drop = dropped[rng.gen_range(0..dropped.len())];
        let new_facet = base.without(drop).with(next_vertex);
        next_vertex += 1;
        if !facets.contains(&new_facet) {
            facets.push(new_facet);
        }
    }
    Some(facets)
}

fn random_subset(rng: &mut ChaCha8Rng, set: VertexSet, size: usize) -> VertexSet {
    let mut pool: Vec<usize> = set.iter().collect();
    let mut out = VertexSet::EMPTY;
    for _ in 0..size {
        let pick = rng.gen_range(0..pool.len());
        out = out.with(pool.swap_remove(pick));
    }
    out
}

/// Deterministic corpus of seeded complexes of one kind, for tests and
/// batch verification. Seeds that exhaust their retry budget are skipped.
pub fn corpus(
    kind: GenKind,
    count: usize,
    max_facets: usize,
    dim: usize,
    max_vertices: usize,
    base_seed: u64,
) -> Vec<SimplicialComplex> {
    let mut out = Vec::new();
    let mut seed = base_seed;
    let mut shaper = ChaCha8Rng::seed_from_u64(base_seed ^ 0x5eed);
    while out.len() < count {
        let facets = 1 + (shaper.gen::<usize>() % max_facets);
        let d = 1 + (shaper.gen::<usize>() % dim.max(1));
        let params = GenParams::new(kind, facets, d, seed).with_max_vertices(max_vertices);
        seed = seed.wrapping_add(1);
        if let Ok(complex) = generate(params) {
            out.push(complex);
        }
        if seed.wrapping_sub(base_seed) > (count as u64) * 64 {
            break;
        }
    }
    out
}
