//! Koszul homology of forest facet ideals is spanned by classes of
//! monomial cycles `f e_L` with `f x_l` in the ideal for every wedged
//! index. The four-cycle shows this fails with a cycle in the graph: its
//! top homology class is not reachable by any monomial cycle.
//!
//! Run with: `cargo run --release --example monomial_cycles`

use facet_ideals::io::parse_complex;
use facet_ideals::koszul::{monomial_cycle_census, KoszulChain};
use facet_ideals::vset::VertexSet;
use facet_ideals::{FieldSpec, SqfIdeal};

fn main() {
    let forest = parse_complex("a b\nb c\nc d\nb e", false).unwrap();
    let ideal = SqfIdeal::facet_ideal(&forest);
    println!("forest {forest:?}: monomial-cycle census");
    for comp in monomial_cycle_census(&ideal, FieldSpec::Rational).unwrap() {
        if comp.degree == 0 {
            continue;
        }
        println!(
            "  (r={}, {}): {} cycles, class rank {} vs homology {}, spans: {}",
            comp.degree,
            forest.format_face(comp.multidegree),
            comp.cycles.len(),
            comp.class_rank,
            comp.betti,
            comp.spans
        );
        assert!(comp.spans);
    }

    println!("\nfour-cycle: the top class escapes every monomial cycle");
    let square = parse_complex("x1 x2\nx2 x3\nx3 x4\nx4 x1", false).unwrap();
    let ideal = SqfIdeal::facet_ideal(&square);
    for comp in monomial_cycle_census(&ideal, FieldSpec::Rational).unwrap() {
        if !comp.spans {
            println!(
                "  (r={}, {}): homology rank {}, monomial cycles {}",
                comp.degree,
                square.format_face(comp.multidegree),
                comp.betti,
                comp.cycles.len()
            );
        }
    }
    // The witness: x1 e_{234} + x3 e_{124} is a cycle but no boundary and
    // no combination of monomial cycles.
    let full = VertexSet::from_indices(0..4);
    let witness = KoszulChain::from_terms(
        &ideal,
        3,
        full,
        [
            (VertexSet::from_indices([1, 2, 3]), 1),
            (VertexSet::from_indices([0, 1, 3]), 1),
        ],
    )
    .unwrap();
    println!(
        "  witness chain is a cycle: {}, zero: {}",
        witness.is_cycle(&ideal),
        witness.is_zero()
    );
}
