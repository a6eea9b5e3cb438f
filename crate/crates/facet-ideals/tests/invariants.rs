//! Corpus-level invariants of the combinatorial layer and the homology
//! engine, beyond the acceptance gate.

use facet_ideals::complex::SimplicialComplex;
use facet_ideals::forest::{self, classify_linear_tree};
use facet_ideals::generate::{corpus, GenKind};
use facet_ideals::ideal::SqfIdeal;
use facet_ideals::io::parse_complex;
use facet_ideals::koszul;
use facet_ideals::linalg::FieldSpec;
use facet_ideals::vset::VertexSet;
use facet_ideals::BettiTable;

const Q: FieldSpec = FieldSpec::Rational;

fn subcomplex(complex: &SimplicialComplex, keep: &[usize]) -> SimplicialComplex {
    let lines: Vec<String> = keep
        .iter()
        .map(|&i| {
            complex.facets()[i]
                .iter()
                .map(|v| complex.universe()[v].clone())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    parse_complex(&lines.join("\n"), false).unwrap()
}

#[test]
fn irredundant_proper_chains_satisfy_the_chain_lemmas() {
    for complex in corpus(GenKind::Codim1Tree, 40, 6, 3, 12, 1111) {
        for &f in complex.facets() {
            for &g in complex.facets() {
                for chain in complex.irredundant_proper_chains(f, g).unwrap() {
                    let ix = &chain.indices;
                    // Pairwise distinct facets.
                    let distinct: std::collections::BTreeSet<usize> = ix.iter().copied().collect();
                    assert_eq!(distinct.len(), ix.len());
                    // No consecutive intersection nests into an earlier one.
                    for i in 1..ix.len() - 1 {
                        let fi = complex.facets()[ix[i]];
                        let fi1 = complex.facets()[ix[i + 1]];
                        for &l in &ix[..i] {
                            let fl = complex.facets()[l];
                            assert!(
                                !fi.intersect(fi1).is_subset_of(fl.intersect(fi)),
                                "nested consecutive intersection"
                            );
                        }
                    }
                    // Interior facets are not leaves of the chain's span.
                    if ix.len() >= 3 {
                        let span = subcomplex(&complex, ix);
                        for &mid in &ix[1..ix.len() - 1] {
                            let facet = complex.facets()[mid];
                            let renamed = VertexSet::from_indices(facet.iter().map(|v| {
                                let name = &complex.universe()[v];
                                span.universe().iter().position(|n| n == name).unwrap()
                            }));
                            assert!(!span.is_leaf(renamed).unwrap(), "interior leaf");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn link_connectivity_characterizes_codim1_on_pure_trees() {
    let mut pure_trees: Vec<SimplicialComplex> = corpus(GenKind::Codim1Tree, 25, 5, 3, 11, 2222);
    // Add pure trees that are not codimension-1 connected.
    pure_trees.push(parse_complex("a b c\nb c d\nc e f\nc f g", false).unwrap());
    pure_trees.push(parse_complex("a b c\nc d e", false).unwrap());
    for complex in pure_trees {
        assert!(complex.is_pure() && complex.is_tree().unwrap());
        let d = complex.dimension();
        let links_connected = complex
            .all_faces()
            .into_iter()
            .filter(|f| f.dim() <= d - 2)
            .all(|f| complex.link(f).unwrap().is_connected());
        assert_eq!(
            complex.is_connected_codim1(),
            links_connected,
            "{complex:?}"
        );
    }
}

#[test]
fn forests_are_quasi_forests() {
    for complex in corpus(GenKind::Forest, 80, 6, 3, 11, 3333) {
        assert!(complex.is_quasi_forest(), "{complex:?}");
    }
}

#[test]
fn facets_of_codim1_trees_meet_the_rest_in_codimension_one() {
    // In a pure tree connected in codimension 1, every facet meets the
    // complex spanned by the others in a pure complex of dimension d-1:
    // the maximal intersections with other facets all have d vertices.
    for complex in corpus(GenKind::Codim1Tree, 40, 6, 3, 12, 1515) {
        if complex.facet_count() < 2 {
            continue;
        }
        let d = complex.dimension();
        for &f in complex.facets() {
            let intersections: Vec<VertexSet> = complex
                .facets()
                .iter()
                .filter(|&&g| g != f)
                .map(|&g| f.intersect(g))
                .collect();
            let maximal: Vec<VertexSet> = intersections
                .iter()
                .copied()
                .filter(|&x| !intersections.iter().any(|&y| x != y && x.is_subset_of(y)))
                .collect();
            for m in maximal {
                assert_eq!(m.dim(), d - 1, "{complex:?}: facet {f:?}");
            }
        }
    }
}

#[test]
fn main_orders_force_alternating_sums() {
    for complex in corpus(GenKind::Forest, 60, 6, 3, 10, 1616) {
        if forest::find_main_order(&complex).is_none() {
            continue;
        }
        let ideal = SqfIdeal::facet_ideal(&complex);
        let table = koszul::betti_table(&ideal, Q).unwrap();
        let g = ideal.min_degree().unwrap();
        assert!(
            forest::has_alternating_sum_property(&table, g),
            "{complex:?}"
        );
    }
}

#[test]
fn intersection_property_bounds_diameter_and_face_multiplicity() {
    for complex in corpus(GenKind::LinearTree, 30, 6, 3, 12, 4444) {
        let d = complex.dimension();
        assert!(complex.has_intersection_property().unwrap());
        assert!(complex.diameter().unwrap() as i64 <= d + 1, "{complex:?}");
        // Any face of dimension d-k inside a chain-spanned subcomplex lies
        // in at most k+1 of its facets.
        for &f in complex.facets() {
            for &g in complex.facets() {
                for chain in complex.irredundant_proper_chains(f, g).unwrap() {
                    let span = subcomplex(&complex, &chain.indices);
                    for face in span.all_faces() {
                        if face.is_empty() {
                            continue;
                        }
                        let k = (d - face.dim()) as usize;
                        let count = span
                            .facets()
                            .iter()
                            .filter(|&&h| face.is_subset_of(h))
                            .count();
                        assert!(
                            count <= k + 1,
                            "{complex:?}: face in {count} > {} facets",
                            k + 1
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn linear_trees_have_linear_quotients_along_chains() {
    // Along the unique irredundant proper chain of a linear tree, every
    // prefix colon is generated in degree one.
    for complex in corpus(GenKind::LinearTree, 30, 5, 3, 12, 5555) {
        let gens = complex.facets();
        for &f in gens {
            for &g in gens {
                let chains = complex.irredundant_proper_chains(f, g).unwrap();
                assert_eq!(chains.len(), 1);
                let chain = &chains[0];
                for l in 1..chain.indices.len() {
                    let prefix: Vec<VertexSet> =
                        chain.indices[..l].iter().map(|&i| gens[i]).collect();
                    let target = gens[chain.indices[l]];
                    let prefix_ideal = SqfIdeal::from_antichain(complex.vertex_count(), prefix);
                    let colon = prefix_ideal.colon_by(target);
                    assert!(
                        colon.generators().iter().all(|q| q.len() == 1),
                        "{complex:?}: chain colon not linear"
                    );
                }
            }
        }
    }
}

#[test]
fn codim1_connected_subcomplexes_of_linear_trees_are_linear() {
    for complex in corpus(GenKind::LinearTree, 20, 5, 3, 12, 6666) {
        let m = complex.facet_count();
        for mask in 1u32..(1 << m) {
            let keep: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).collect();
            if keep.len() < 2 {
                continue;
            }
            let sub = subcomplex(&complex, &keep);
            if sub.is_connected() && sub.is_connected_codim1() {
                assert!(
                    classify_linear_tree(&sub).unwrap(),
                    "{complex:?} restricted to {keep:?}"
                );
            }
        }
    }
}

#[test]
fn adding_facets_with_fresh_vertices_never_drops_betti_numbers() {
    // Along a leaf order every added facet brings a fresh vertex, so the
    // homology maps are injective and the table grows monotonically.
    for complex in corpus(GenKind::Forest, 40, 6, 3, 10, 7777) {
        let Some(order) = complex.leaf_order() else {
            panic!("forests admit leaf orders")
        };
        let n = complex.vertex_count();
        let mut previous = BettiTable::of_free_ring(n);
        for end in 1..=order.len() {
            let gens: Vec<VertexSet> = order[..end].iter().map(|&i| complex.facets()[i]).collect();
            let table = koszul::betti_table(&SqfIdeal::from_antichain(n, gens), Q).unwrap();
            for (i, a, b) in previous.iter() {
                assert!(
                    table.get(i, a) >= b,
                    "{complex:?}: entry ({i}, {a:?}) dropped"
                );
            }
            previous = table;
        }
    }
}

#[test]
fn colon_branch_betti_degrees_avoid_the_free_variable() {
    // Splitting off a leaf f with free variable t: no Betti degree of
    // R/(J:f) meets t, and after the shift by deg f every degree does.
    for complex in corpus(GenKind::Forest, 60, 6, 3, 10, 8888) {
        if complex.facet_count() < 2 {
            continue;
        }
        let n = complex.vertex_count();
        let facets = complex.facets();
        for (idx, &f) in facets.iter().enumerate() {
            if !complex.is_leaf(f).unwrap() {
                continue;
            }
            let free = complex.free_vertices(f).unwrap();
            if free.is_empty() {
                continue;
            }
            let rest: Vec<VertexSet> = facets
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, &g)| g)
                .collect();
            let colon = SqfIdeal::from_antichain(n, rest).colon_by(f);
            let table = koszul::betti_table(&colon, Q).unwrap();
            for (_, a, _) in table.iter() {
                assert!(
                    a.is_disjoint_from(free),
                    "{complex:?}: degree meets free vertex"
                );
                assert!(free.is_subset_of(a.union(f)));
            }
        }
    }
}

#[test]
fn betti_tables_respect_the_lcm_lattice_and_low_strands() {
    for complex in corpus(GenKind::Forest, 60, 6, 3, 10, 9999) {
        let ideal = SqfIdeal::facet_ideal(&complex);
        let lattice = koszul::lcm_lattice(&ideal);
        let g = ideal.min_degree().unwrap();
        let table = koszul::betti_table(&ideal, Q).unwrap();
        for (i, a, _) in table.iter() {
            assert!(lattice.contains(&a), "degree outside the lcm lattice");
            if i >= 1 {
                assert!(a.len() >= i + g - 1, "entry below the first strand");
            }
        }
    }
}

#[test]
fn second_betti_formula_matches_the_engine_on_graph_trees() {
    for complex in corpus(GenKind::GraphForest, 50, 7, 1, 11, 1414) {
        if !complex.is_connected() {
            continue;
        }
        let formula = forest::second_betti_formula(&complex).unwrap();
        let table = koszul::betti_table(&SqfIdeal::facet_ideal(&complex), Q).unwrap();
        assert_eq!(formula, table.graded_entry(2, 3), "{complex:?}");
    }
}

#[test]
fn distances_of_pure_trees_dominate_intersection_codimension() {
    for complex in corpus(GenKind::Codim1Tree, 40, 6, 3, 12, 1212) {
        let reportdoc = forest::distance_property_check(&complex).unwrap();
        assert!(reportdoc.all_at_least, "{complex:?}");
        let linear = classify_linear_tree(&complex).unwrap();
        assert_eq!(reportdoc.all_equal, linear, "{complex:?}");
    }
}

#[test]
fn stem_selections_exist_for_nonzero_products() {
    // Whenever a bouquet family has a nonzero product, a pairwise
    // disconnected stem selection exists.
    for complex in corpus(GenKind::GraphForest, 40, 7, 1, 10, 1313) {
        let ideal = SqfIdeal::facet_ideal(&complex);
        let bouquets = forest::enumerate_bouquets(&complex);
        if bouquets.len() > 30 {
            continue;
        }
        for i in 0..bouquets.len() {
            for j in i + 1..bouquets.len() {
                let family = [bouquets[i], bouquets[j]];
                let cycles: Vec<_> = family
                    .iter()
                    .map(|b| {
                        koszul::KoszulChain::monomial(&ideal, b.flowers.with(b.root), b.flowers)
                            .unwrap()
                    })
                    .collect();
                if koszul::class_product_nonzero(&ideal, &cycles, Q).unwrap() {
                    assert!(
                        forest::pick_up_stems(&complex, &family).is_some(),
                        "{complex:?}: {family:?}"
                    );
                }
            }
        }
    }
}
