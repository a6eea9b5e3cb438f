//! Structural analysis of four small benchmark complexes: leaves and free
//! vertices, connectivity in codimension 1, quasi-forest orders, and
//! leafless witnesses.
//!
//! Run with: `cargo run --example analyze_fixtures`

use facet_ideals::commands::cmd_analyze;
use facet_ideals::io::parse_complex;

fn main() {
    let fixtures = [
        (
            "pure 2-tree that is NOT connected in codimension 1",
            "a b c\nb c d\nc e f\nc f g",
        ),
        (
            "facet {c,d,e} has the free vertex d but is not a leaf",
            "a b c\nc d e\ne f g",
        ),
        (
            "quasi-tree that is not a tree (leafless witness inside)",
            "a b c\nb c d\nc d e\nb d f",
        ),
        (
            "a path of three triangles: tree, pure, codimension-1 connected",
            "a b c\na c d\nc d e",
        ),
    ];
    for (label, text) in fixtures {
        println!("=== {label} ===");
        let complex = parse_complex(text, false).unwrap();
        let out = cmd_analyze(&complex, 20).unwrap();
        print!("{}", out.doc.to_text());
        println!();
    }

    // The middle facet of the free-vertex fixture, queried directly.
    let complex = parse_complex("a b c\nc d e\ne f g", false).unwrap();
    let cde = complex.facets()[1];
    println!(
        "facet {}: leaf = {}, free vertices = {}",
        complex.format_face(cde),
        complex.is_leaf(cde).unwrap(),
        complex.format_face(complex.free_vertices(cde).unwrap()),
    );
}
