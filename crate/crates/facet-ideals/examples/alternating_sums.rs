//! Alternating strand sums: for trees connected in codimension 1 (and
//! pure quasi-trees connected in codimension 1) the alternating sum over
//! each strand of the Betti table is -1 at the lowest strand and 0 above
//! it. A degree-one generator flattens every full alternating sum to 0.
//!
//! Run with: `cargo run --release --example alternating_sums`

use facet_ideals::forest::{
    find_main_order, full_alternating_sums, has_alternating_sum_property, strand_sums,
};
use facet_ideals::generate::{corpus, GenKind};
use facet_ideals::io::parse_complex;
use facet_ideals::koszul::betti_table;
use facet_ideals::vset::VertexSet;
use facet_ideals::{FieldSpec, SqfIdeal};

fn main() {
    println!("codimension-1-connected trees:");
    for complex in corpus(GenKind::Codim1Tree, 6, 6, 3, 12, 31) {
        let ideal = SqfIdeal::facet_ideal(&complex);
        let table = betti_table(&ideal, FieldSpec::Rational).unwrap();
        let g = ideal.min_degree().unwrap();
        let sums = strand_sums(&table);
        println!(
            "  {complex:?}: strand sums {:?}, property holds: {}",
            sums.sums,
            has_alternating_sum_property(&table, g)
        );
    }

    // A pure quasi-tree connected in codimension 1 that is NOT a tree.
    println!("\npure quasi-tree (not a tree):");
    let quasi = parse_complex("a b c\nb c d\nc d e\nb d f", false).unwrap();
    let ideal = SqfIdeal::facet_ideal(&quasi);
    let table = betti_table(&ideal, FieldSpec::Rational).unwrap();
    println!(
        "  {quasi:?}: forest = {}, property holds: {}",
        quasi.is_forest().unwrap(),
        has_alternating_sum_property(&table, 3)
    );
    println!(
        "  a facet order with fresh vertices and one-vertex overhangs exists: {}",
        find_main_order(&quasi).is_some()
    );

    println!("\na degree-one generator zeroes all full alternating sums:");
    let path = parse_complex("a b\nb c", false).unwrap();
    let base = SqfIdeal::facet_ideal(&path);
    let mut gens = base.generators().to_vec();
    gens.push(VertexSet::singleton(3));
    let with_var = SqfIdeal::from_antichain(4, gens);
    let table = betti_table(&with_var, FieldSpec::Rational).unwrap();
    println!(
        "  ideal {with_var:?}: nonzero full sums: {:?}",
        full_alternating_sums(&table)
    );
}
