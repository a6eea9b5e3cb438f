//! Regularity of edge ideals of graph forests equals the largest number
//! of pairwise disconnected edges (an induced matching). Off forests the
//! equality can fail: the five-cycle has regularity 2 but no two
//! disconnected edges.
//!
//! Run with: `cargo run --release --example regularity_and_matching`

use facet_ideals::forest::{max_disconnected_edges, reg_1dim};
use facet_ideals::generate::{corpus, GenKind};
use facet_ideals::io::{parse_complex, serialize_complex};
use facet_ideals::koszul::betti_table;
use facet_ideals::{FieldSpec, SqfIdeal};

fn main() {
    println!("seeded graph forests: induced matching vs regularity");
    for complex in corpus(GenKind::GraphForest, 8, 7, 1, 12, 2024) {
        let formula = reg_1dim(&complex).unwrap();
        let table = betti_table(&SqfIdeal::facet_ideal(&complex), FieldSpec::Rational).unwrap();
        println!(
            "  {:40} matching = {formula}, regularity = {}",
            serialize_complex(&complex).replace('\n', " ; "),
            table.regularity()
        );
        assert_eq!(formula, table.regularity());
    }

    println!("\nthe five-cycle is not a forest, and the equality fails there:");
    let five_cycle = parse_complex("a b\nb c\nc d\nd e\ne a", false).unwrap();
    let table = betti_table(&SqfIdeal::facet_ideal(&five_cycle), FieldSpec::Rational).unwrap();
    println!(
        "  regularity = {}, max disconnected edges = {}, forest = {}",
        table.regularity(),
        max_disconnected_edges(&five_cycle).unwrap(),
        five_cycle.is_forest().unwrap(),
    );
}
