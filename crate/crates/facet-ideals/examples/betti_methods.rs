//! Multigraded Betti tables three ways: the Koszul-homology engine, the
//! leaf recursion for forests, and the closed-form linear strand for pure
//! trees connected in codimension 1.
//!
//! Run with: `cargo run --release --example betti_methods`

use facet_ideals::forest::{linear_strand_betti, recursive_betti};
use facet_ideals::generate::{generate, GenKind, GenParams};
use facet_ideals::io::parse_complex;
use facet_ideals::koszul::betti_table;
use facet_ideals::report::betti_grid;
use facet_ideals::{FieldSpec, SqfIdeal};

fn main() {
    let star = parse_complex("x a\nx b\nx c", false).unwrap();
    let ideal = SqfIdeal::facet_ideal(&star);

    println!("=== star with three flowers ===");
    let oracle = betti_table(&ideal, FieldSpec::Rational).unwrap();
    println!("Koszul engine:\n{}", betti_grid(&oracle));
    let recursive = recursive_betti(&star).unwrap();
    println!("leaf recursion agrees: {}", recursive == oracle);
    let strand = linear_strand_betti(&star).unwrap();
    println!("linear strand from face degrees: {strand:?}");
    println!(
        "regularity {} / projective dimension {}",
        oracle.regularity(),
        oracle.projective_dimension()
    );

    println!("\n=== seeded random forest, both fields ===");
    let forest = generate(GenParams::new(GenKind::Forest, 6, 3, 12).with_max_vertices(10)).unwrap();
    println!("{forest:?}");
    let recursive = recursive_betti(&forest).unwrap();
    let ideal = SqfIdeal::facet_ideal(&forest);
    for field in [FieldSpec::Rational, FieldSpec::Prime(2)] {
        let oracle = betti_table(&ideal, field).unwrap();
        println!(
            "over {field}: recursion reproduces the engine: {}",
            oracle == recursive
        );
    }
    println!("{}", betti_grid(&recursive));

    println!("multigraded entries:");
    for (i, a, b) in recursive.iter() {
        println!("  b[{i}, {}] = {b}", forest.format_face(a));
    }
}
