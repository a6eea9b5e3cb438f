//! Seeded random generation of the four instance kinds, with the
//! structural contract of each verified and the text format round-tripped.
//!
//! Run with: `cargo run --release --example generate_corpus`

use facet_ideals::forest::classify_linear_tree;
use facet_ideals::generate::{generate, GenKind, GenParams};
use facet_ideals::io::{parse_complex, serialize_complex};

fn main() {
    for kind in [
        GenKind::GraphForest,
        GenKind::Forest,
        GenKind::Codim1Tree,
        GenKind::LinearTree,
    ] {
        println!("=== {kind:?}, seeds 0..3 ===");
        for seed in 0..3 {
            let params = GenParams::new(kind, 5, 2, seed).with_max_vertices(14);
            let complex = generate(params).unwrap();
            let text = serialize_complex(&complex);
            print!("{text}");
            let back = parse_complex(&text, false).unwrap();
            assert_eq!(back.facet_count(), complex.facet_count());
            let verdict = match kind {
                GenKind::GraphForest => complex.dimension() == 1 && complex.is_forest().unwrap(),
                GenKind::Forest => complex.is_forest().unwrap(),
                GenKind::Codim1Tree => complex.is_tree().unwrap() && complex.is_connected_codim1(),
                GenKind::LinearTree => classify_linear_tree(&complex).unwrap(),
            };
            println!("  -> contract holds: {verdict}\n");
            assert!(verdict);
        }
    }
}
