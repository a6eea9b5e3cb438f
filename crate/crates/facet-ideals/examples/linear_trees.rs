//! Linear trees: the intersection property (every intersection dimension
//! forces the matching chain distance) characterizes the facet ideals
//! with linear resolution, equivalently those with a linear-quotient
//! order. Closed-form total Betti numbers come from face degrees, and
//! attaching a facet at an adjacent face preserves linearity.
//!
//! Run with: `cargo run --release --example linear_trees`

use facet_ideals::forest::{attach_facet_linear, classify_linear_tree, linear_tree_total_betti};
use facet_ideals::io::parse_complex;
use facet_ideals::koszul::{betti_table, is_linear_resolution};
use facet_ideals::{FieldSpec, SqfIdeal};

fn main() {
    for (label, text) in [
        ("path of 3 edges", "a b\nb c\nc d"),
        ("path of 4 edges", "a b\nb c\nc d\nd e"),
        ("two glued triangles", "a b c\nb c d"),
        ("triangle fan", "a b c\nb c d\nc d e"),
        ("single tetrahedron", "a b c d"),
    ] {
        let complex = parse_complex(text, false).unwrap();
        let by_property = classify_linear_tree(&complex).unwrap();
        let ideal = SqfIdeal::facet_ideal(&complex);
        let table = betti_table(&ideal, FieldSpec::Rational).unwrap();
        let by_resolution = is_linear_resolution(&ideal, &table);
        let by_order = ideal
            .find_linear_quotient_order()
            .map(|o| o.is_some())
            .unwrap_or(false);
        println!(
            "{label:22} intersection-property={by_property:5} linear-resolution={by_resolution:5} \
             quotient-order={by_order:5}"
        );
        assert_eq!(by_property, by_resolution);
        assert_eq!(by_property, by_order);
        if by_property {
            println!(
                "{:24}total Betti numbers: {:?}",
                "",
                linear_tree_total_betti(&complex).unwrap()
            );
        }
    }

    // Grow a linear tree by attaching facets at adjacent faces.
    println!("\ngrowing a linear tree by adjacent-face attachments:");
    let mut complex = parse_complex("x a\nx b", false).unwrap();
    for fresh in ["c", "d", "e"] {
        let root = complex.adjacent_faces().unwrap()[0].0;
        complex = attach_facet_linear(&complex, root, fresh).unwrap();
        println!(
            "  attached {fresh}: {complex:?} is linear: {}",
            classify_linear_tree(&complex).unwrap()
        );
    }
}
