//! Library-side implementations of the command-line verbs. Each command
//! returns a report document plus a flag telling whether every checked
//! property held, which the binary maps to the exit code.

use crate::betti::BettiTable;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::forest;
use crate::generate::{self, GenParams};
use crate::ideal::SqfIdeal;
use crate::io;
use crate::koszul::{self, KoszulChain};
use crate::linalg::FieldSpec;
use crate::report::{betti_grid, multigraded_entries, ReportDocument, ReportValue};

/// Output of one command: the report and whether all checks passed.
pub struct CommandOutput {
    pub doc: ReportDocument,
    pub ok: bool,
}

impl CommandOutput {
    fn passing(doc: ReportDocument) -> Self {
        CommandOutput { doc, ok: true }
    }
}

/// Method selector for the betti command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BettiMethod {
    Oracle,
    Recursive,
    Strand,
    LinearTotal,
    All,
}

impl std::str::FromStr for BettiMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(BettiMethod::Oracle),
            "recursive" => Ok(BettiMethod::Recursive),
            "strand" => Ok(BettiMethod::Strand),
            "linear-total" => Ok(BettiMethod::LinearTotal),
            "all" => Ok(BettiMethod::All),
            other => Err(Error::PreconditionViolated(format!(
                "unknown betti method {other:?}"
            ))),
        }
    }
}

/// Property selector for the check command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckProperty {
    AlternatingSum,
    MonomialBasis,
    UniqueChain,
    LinearGeneration,
    BouquetProduct,
    Counts,
}

impl std::str::FromStr for CheckProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alternating-sum" => Ok(CheckProperty::AlternatingSum),
            "monomial-basis" => Ok(CheckProperty::MonomialBasis),
            "unique-chain" => Ok(CheckProperty::UniqueChain),
            "linear-generation" => Ok(CheckProperty::LinearGeneration),
            "bouquet-product" => Ok(CheckProperty::BouquetProduct),
            "counts" => Ok(CheckProperty::Counts),
            other => Err(Error::PreconditionViolated(format!(
                "unknown property {other:?}"
            ))),
        }
    }
}

fn face_list(complex: &SimplicialComplex, faces: &[crate::vset::VertexSet]) -> ReportValue {
    ReportValue::List(
        faces
            .iter()
            .map(|&f| ReportValue::Str(complex.format_face(f)))
            .collect(),
    )
}

/// Structural analysis: dimensions, connectivity, tree recognition,
/// leaves, diameter and face degrees.
pub fn cmd_analyze(complex: &SimplicialComplex, max_facets: usize) -> Result<CommandOutput> {
    let mut doc = ReportDocument::new("analyze");
    doc.push("facets", complex.facet_count());
    doc.push("vertices", complex.vertex_count());
    doc.push("dim", complex.dimension());
    doc.push("pure", complex.is_pure());
    doc.push("connected", complex.is_connected());
    doc.push("connected_codim1", complex.is_connected_codim1());

    let mut ok = true;
    match complex.leaf_order() {
        Some(order) => {
            doc.push("quasi_forest", true);
            doc.push(
                "leaf_order",
                ReportValue::List(
                    order
                        .iter()
                        .map(|&i| ReportValue::Str(complex.format_face(complex.facets()[i])))
                        .collect(),
                ),
            );
        }
        None => {
            doc.push("quasi_forest", false);
        }
    }

    let check = complex.forest_check(max_facets)?;
    doc.push("forest", check.is_forest);
    doc.push("tree", check.is_forest && complex.is_connected());
    if let Some(witness) = &check.witness {
        doc.push("leafless_witness", face_list(complex, witness));
    }

    let leaves: Vec<crate::vset::VertexSet> = complex
        .facets()
        .iter()
        .copied()
        .filter(|&f| complex.is_leaf(f).unwrap_or(false))
        .collect();
    doc.push("leaves", face_list(complex, &leaves));

    if let Ok(diameter) = complex.diameter() {
        doc.push("diameter", diameter);
    }
    if complex.is_pure() {
        let faces = complex.codim1_faces()?;
        let mut list = Vec::new();
        for (face, degree) in &faces {
            let mut entry = ReportValue::map();
            entry.push("face", complex.format_face(*face));
            entry.push("degree", *degree);
            entry.push("adjacent", *degree >= 2);
            list.push(entry);
        }
        doc.push("codim1_faces", ReportValue::List(list));
    }
    if let Ok(counts) = forest::structural_counts(complex) {
        let mut entry = ReportValue::map();
        entry.push("facet_count", counts.facet_count);
        entry.push("codim1_face_count", counts.codim1_face_count);
        entry.push("total_degree", counts.total_degree);
        entry.push("identity_holds", counts.identity_holds);
        doc.push("count_identity", entry);
        ok &= counts.identity_holds;
    }
    Ok(CommandOutput { doc, ok })
}

fn push_table(
    doc: &mut ReportDocument,
    key: &str,
    table: &BettiTable,
    complex: &SimplicialComplex,
    multigraded: bool,
) {
    let mut entry = ReportValue::map();
    entry.push("grid", ReportValue::Str(betti_grid(table)));
    entry.push("regularity", table.regularity());
    entry.push("projective_dimension", table.projective_dimension());
    if multigraded {
        entry.push(
            "multigraded",
            ReportValue::List(multigraded_entries(table, complex)),
        );
    }
    doc.push(key, entry);
}

/// Betti tables by the requested method(s); `all` cross-checks them and
/// reports any disagreement as a failure.
pub fn cmd_betti(
    complex: &SimplicialComplex,
    method: BettiMethod,
    field: FieldSpec,
    multigraded: bool,
) -> Result<CommandOutput> {
    let mut doc = ReportDocument::new("betti");
    doc.push("field", field.to_string());
    let ideal = SqfIdeal::facet_ideal(complex);
    let mut ok = true;

    let oracle = match method {
        BettiMethod::Oracle | BettiMethod::All => {
            let table = koszul::betti_table(&ideal, field)?;
            push_table(&mut doc, "oracle", &table, complex, multigraded);
            Some(table)
        }
        _ => None,
    };

    if matches!(method, BettiMethod::Recursive) {
        let table = forest::recursive_betti(complex)?;
        push_table(&mut doc, "recursive", &table, complex, multigraded);
    } else if matches!(method, BettiMethod::All) {
        match forest::recursive_betti(complex) {
            Ok(table) => {
                let agree = Some(&table) == oracle.as_ref();
                doc.push("recursive_agrees_with_oracle", agree);
                ok &= agree;
                push_table(&mut doc, "recursive", &table, complex, multigraded);
            }
            Err(e @ (Error::NotAForest | Error::TooLarge(_))) => {
                doc.push("recursive", format!("not applicable: {e}"));
            }
            Err(e) => return Err(e),
        }
    }

    if matches!(method, BettiMethod::Strand | BettiMethod::All) {
        match forest::linear_strand_betti(complex) {
            Ok(strand) => {
                let mut entry = ReportValue::map();
                for (i, b) in &strand {
                    entry.push(
                        &format!("b_{{{i},{}}}", i + complex.dimension() as usize),
                        *b,
                    );
                }
                doc.push("strand", entry);
                if let Some(oracle) = &oracle {
                    let d = complex.dimension() as usize;
                    let agree = (1..=oracle.projective_dimension().max(1)).all(|i| {
                        oracle.graded_entry(i, i + d) == strand.get(&i).copied().unwrap_or(0)
                    });
                    doc.push("strand_agrees_with_oracle", agree);
                    ok &= agree;
                }
            }
            Err(e) if matches!(method, BettiMethod::All) => {
                doc.push("strand", format!("not applicable: {e}"));
            }
            Err(e) => return Err(e),
        }
    }

    if matches!(method, BettiMethod::LinearTotal | BettiMethod::All) {
        match forest::linear_tree_total_betti(complex) {
            Ok(totals) => {
                let mut entry = ReportValue::map();
                for (i, b) in &totals {
                    entry.push(&format!("b_{i}"), *b);
                }
                doc.push("linear_total", entry);
                if let Some(oracle) = &oracle {
                    let graded = oracle.graded();
                    let agree = (1..=oracle.projective_dimension()).all(|i| {
                        let total: u64 = graded
                            .iter()
                            .filter(|&(&(bi, _), _)| bi == i)
                            .map(|(_, &b)| b)
                            .sum();
                        total == totals.get(&i).copied().unwrap_or(0)
                    });
                    doc.push("linear_total_agrees_with_oracle", agree);
                    ok &= agree;
                }
            }
            Err(e) if matches!(method, BettiMethod::All) => {
                doc.push("linear_total", format!("not applicable: {e}"));
            }
            Err(e) => return Err(e),
        }
    }

    Ok(CommandOutput { doc, ok })
}

/// Linear-tree classification: the intersection property against the
/// resolution computed by the homology engine and the linear-quotient
/// order search; any disagreement is a failure.
pub fn cmd_classify(complex: &SimplicialComplex, field: FieldSpec) -> Result<CommandOutput> {
    let mut doc = ReportDocument::new("classify");
    let ideal = SqfIdeal::facet_ideal(complex);
    let table = koszul::betti_table(&ideal, field)?;
    let oracle_linear = koszul::is_linear_resolution(&ideal, &table);
    doc.push("oracle_linear_resolution", oracle_linear);

    let is_tree = complex.is_tree()?;
    doc.push("tree", is_tree);
    if !is_tree {
        doc.push(
            "note",
            "not a tree: the intersection-property classification does not apply",
        );
        return Ok(CommandOutput::passing(doc));
    }
    let by_property = forest::classify_linear_tree(complex)?;
    doc.push("intersection_property", by_property);
    let by_order = if ideal.equigenerated_degree().is_some() {
        let order = ideal.find_linear_quotient_order()?;
        if let Some(order) = &order {
            doc.push(
                "linear_quotient_order",
                ReportValue::List(
                    order
                        .iter()
                        .map(|&i| ReportValue::Str(complex.format_face(ideal.generators()[i])))
                        .collect(),
                ),
            );
        }
        order.is_some()
    } else {
        false
    };
    doc.push("linear_quotient_order_exists", by_order);
    let ok = by_property == oracle_linear && by_order == oracle_linear;
    doc.push("classifications_agree", ok);
    Ok(CommandOutput { doc, ok })
}

/// Regularity: disconnected-edge count against the homology engine. Off
/// forests the theorem does not apply and only the engine value is
/// authoritative.
pub fn cmd_reg(complex: &SimplicialComplex, field: FieldSpec) -> Result<CommandOutput> {
    let mut doc = ReportDocument::new("reg");
    let ideal = SqfIdeal::facet_ideal(complex);
    let table = koszul::betti_table(&ideal, field)?;
    doc.push("oracle_regularity", table.regularity());
    if complex.dimension() != 1 {
        doc.push(
            "note",
            "regularity formula applies to 1-dimensional forests only",
        );
        return Ok(CommandOutput::passing(doc));
    }
    let forest = complex.forest_check_default()?.is_forest;
    doc.push("forest", forest);
    let matching = forest::max_disconnected_edges(complex)?;
    doc.push("disconnected_edges", matching);
    if !forest {
        doc.push(
            "note",
            "not a forest: the disconnected-edge theorem does not apply",
        );
        return Ok(CommandOutput::passing(doc));
    }
    let ok = matching == table.regularity();
    doc.push("theorem_agrees", ok);
    Ok(CommandOutput { doc, ok })
}

/// Projective dimension: the bouquet search against the homology engine.
pub fn cmd_pd(complex: &SimplicialComplex, field: FieldSpec) -> Result<CommandOutput> {
    let mut doc = ReportDocument::new("pd");
    let ideal = SqfIdeal::facet_ideal(complex);
    let table = koszul::betti_table(&ideal, field)?;
    doc.push("oracle_projective_dimension", table.projective_dimension());
    if complex.dimension() != 1 || !complex.forest_check_default()?.is_forest {
        doc.push(
            "note",
            "bouquet search applies to 1-dimensional forests only",
        );
        return Ok(CommandOutput::passing(doc));
    }
    let search = forest::pd_1dim(complex)?;
    doc.push("bouquet_pd", search.pd);
    let mut family = Vec::new();
    for b in &search.family {
        let mut entry = ReportValue::map();
        entry.push("root", complex.universe()[b.root].as_str());
        entry.push("flowers", complex.format_face(b.flowers));
        family.push(entry);
    }
    doc.push("family", ReportValue::List(family));
    if let Some(stems) = &search.stems {
        doc.push(
            "stems",
            ReportValue::List(
                stems
                    .iter()
                    .map(|&(r, f)| {
                        ReportValue::Str(format!(
                            "{{{},{}}}",
                            complex.universe()[r],
                            complex.universe()[f]
                        ))
                    })
                    .collect(),
            ),
        );
    }
    let ok = search.pd == table.projective_dimension();
    doc.push("theorem_agrees", ok);
    Ok(CommandOutput { doc, ok })
}

fn bouquet_cycle(ideal: &SqfIdeal, bouquet: &forest::Bouquet) -> Result<KoszulChain> {
    KoszulChain::monomial(ideal, bouquet.flowers.with(bouquet.root), bouquet.flowers)
}

/// Property checks; the exit code reflects whether the property held.
pub fn cmd_check(
    complex: &SimplicialComplex,
    property: CheckProperty,
    field: FieldSpec,
) -> Result<CommandOutput> {
    let mut doc = ReportDocument::new("check");
    let ideal = SqfIdeal::facet_ideal(complex);
    let ok = match property {
        CheckProperty::AlternatingSum => {
            doc.push("property", "alternating-sum");
            let table = koszul::betti_table(&ideal, field)?;
            let g = ideal.min_degree().expect("facet ideals have generators");
            let sums = forest::strand_sums(&table);
            let mut entry = ReportValue::map();
            for (j, s) in &sums.sums {
                entry.push(&format!("S_{j}"), *s);
            }
            doc.push("strand_sums", entry);
            let holds = forest::has_alternating_sum_property(&table, g);
            doc.push("holds", holds);
            holds
        }
        CheckProperty::MonomialBasis => {
            doc.push("property", "monomial-basis");
            let table = koszul::betti_table(&ideal, field)?;
            let mut failures = Vec::new();
            for r in 1..=table.projective_dimension() {
                for comp in koszul::monomial_cycle_basis(&ideal, r, field)? {
                    if !comp.spans {
                        let mut entry = ReportValue::map();
                        entry.push("degree", r);
                        entry.push("multidegree", complex.format_face(comp.multidegree));
                        entry.push("betti", comp.betti);
                        entry.push("monomial_cycle_rank", comp.class_rank);
                        failures.push(entry);
                    }
                }
            }
            let holds = failures.is_empty();
            if !holds {
                doc.push("unspanned_components", ReportValue::List(failures));
            }
            doc.push("holds", holds);
            holds
        }
        CheckProperty::UniqueChain => {
            doc.push("property", "unique-chain");
            if !(complex.is_pure() && complex.is_tree()? && complex.is_connected_codim1()) {
                return Err(Error::PreconditionViolated(
                    "unique-chain check needs a pure tree connected in codimension 1".into(),
                ));
            }
            let mut holds = true;
            for &f in complex.facets() {
                for &g in complex.facets() {
                    let count = complex.irredundant_proper_chains(f, g)?.len();
                    holds &= count == 1;
                }
            }
            doc.push("holds", holds);
            holds
        }
        CheckProperty::LinearGeneration => {
            doc.push("property", "linear-generation");
            let holds = koszul::verify_linear_generation(&ideal, field)?;
            doc.push("holds", holds);
            holds
        }
        CheckProperty::BouquetProduct => {
            doc.push("property", "bouquet-product");
            if complex.dimension() != 1 {
                return Err(Error::PreconditionViolated(
                    "bouquet products need a 1-dimensional complex".into(),
                ));
            }
            let bouquets = forest::enumerate_bouquets(complex);
            let mut checked = 0usize;
            let mut strong_mismatches = 0usize;
            let mut necessity_violations = 0usize;
            let mut sufficiency_violations = 0usize;
            let mut families: Vec<Vec<forest::Bouquet>> = Vec::new();
            for i in 0..bouquets.len() {
                families.push(vec![bouquets[i]]);
                for j in i + 1..bouquets.len() {
                    families.push(vec![bouquets[i], bouquets[j]]);
                }
            }
            for family in &families {
                let cycles: Vec<KoszulChain> = family
                    .iter()
                    .map(|b| bouquet_cycle(&ideal, b))
                    .collect::<Result<_>>()?;
                let nonzero = koszul::class_product_nonzero(&ideal, &cycles, field)?;
                let strong = forest::strongly_disjoint_family(complex, family);
                let literal = forest::valid_bouquet_family(complex, family);
                checked += 1;
                strong_mismatches += usize::from(strong != nonzero);
                necessity_violations += usize::from(nonzero && !literal);
                sufficiency_violations += usize::from(literal && !nonzero);
            }
            doc.push("families_checked", checked);
            doc.push("stem_selection_criterion_mismatches", strong_mismatches);
            doc.push(
                "vertex_root_conditions_necessary_violations",
                necessity_violations,
            );
            doc.push(
                "vertex_root_conditions_sufficient_violations",
                sufficiency_violations,
            );
            let holds = strong_mismatches == 0 && necessity_violations == 0;
            doc.push("holds", holds);
            holds
        }
        CheckProperty::Counts => {
            doc.push("property", "counts");
            let counts = forest::structural_counts(complex)?;
            doc.push("facet_count", counts.facet_count);
            doc.push("codim1_face_count", counts.codim1_face_count);
            doc.push("total_degree", counts.total_degree);
            doc.push("holds", counts.identity_holds);
            counts.identity_holds
        }
    };
    Ok(CommandOutput { doc, ok })
}

/// Deterministic instance generation; returns the complex-file text.
pub fn cmd_gen(params: GenParams) -> Result<String> {
    let complex = generate::generate(params)?;
    Ok(io::serialize_complex(&complex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::GenKind;
    use crate::io::parse_complex;

    #[test]
    fn analyze_reports_benchmark_fixtures() {
        // Pure, 2-dimensional, connected, but not in codimension 1.
        let complex = parse_complex("a b c\nb c d\nc e f\nc f g", false).unwrap();
        let out = cmd_analyze(&complex, 20).unwrap();
        assert!(out.ok);
        assert_eq!(out.doc.body.get("pure").unwrap().as_bool(), Some(true));
        assert_eq!(out.doc.body.get("dim"), Some(&ReportValue::Int(2)));
        assert_eq!(
            out.doc.body.get("connected_codim1").unwrap().as_bool(),
            Some(false)
        );

        // Quasi-tree that is not a tree, with its leafless witness.
        let quasi = parse_complex("a b c\nb c d\nc d e\nb d f", false).unwrap();
        let out = cmd_analyze(&quasi, 20).unwrap();
        assert_eq!(
            out.doc.body.get("quasi_forest").unwrap().as_bool(),
            Some(true)
        );
        assert_eq!(out.doc.body.get("forest").unwrap().as_bool(), Some(false));
        assert!(out.doc.body.get("leafless_witness").is_some());

        let single = parse_complex("a b c", false).unwrap();
        let out = cmd_analyze(&single, 20).unwrap();
        assert_eq!(out.doc.body.get("tree").unwrap().as_bool(), Some(true));
    }

    #[test]
    fn betti_all_cross_checks_on_a_path() {
        let complex = parse_complex("a b\nb c", false).unwrap();
        let out = cmd_betti(&complex, BettiMethod::All, FieldSpec::Rational, true).unwrap();
        assert!(out.ok);
        assert_eq!(
            out.doc
                .body
                .get("recursive_agrees_with_oracle")
                .unwrap()
                .as_bool(),
            Some(true)
        );
        assert_eq!(
            out.doc
                .body
                .get("strand_agrees_with_oracle")
                .unwrap()
                .as_bool(),
            Some(true)
        );
    }

    #[test]
    fn betti_recursive_rejects_cycles() {
        let complex = parse_complex("a b\nb c\nc d\nd a", false).unwrap();
        assert_eq!(
            cmd_betti(&complex, BettiMethod::Recursive, FieldSpec::Rational, false).err(),
            Some(Error::NotAForest)
        );
    }

    #[test]
    fn reg_on_five_cycle_reports_theorem_gap() {
        let complex = parse_complex("a b\nb c\nc d\nd e\ne a", false).unwrap();
        let out = cmd_reg(&complex, FieldSpec::Rational).unwrap();
        assert!(
            out.ok,
            "no failure: the theorem is inapplicable off forests"
        );
        assert_eq!(
            out.doc.body.get("oracle_regularity"),
            Some(&ReportValue::Int(2))
        );
        assert_eq!(
            out.doc.body.get("disconnected_edges"),
            Some(&ReportValue::Int(1))
        );
        assert_eq!(out.doc.body.get("forest").unwrap().as_bool(), Some(false));
        assert!(out.doc.body.get("note").is_some());
    }

    #[test]
    fn check_properties_on_small_instances() {
        let path = parse_complex("a b\nb c\nc d", false).unwrap();
        for property in [
            CheckProperty::AlternatingSum,
            CheckProperty::MonomialBasis,
            CheckProperty::UniqueChain,
            CheckProperty::LinearGeneration,
            CheckProperty::BouquetProduct,
            CheckProperty::Counts,
        ] {
            let out = cmd_check(&path, property, FieldSpec::Rational).unwrap();
            assert!(out.ok, "{property:?} on the path");
        }

        // The four-cycle has a homology class no monomial cycle reaches.
        let four_cycle = parse_complex("a b\nb c\nc d\nd a", false).unwrap();
        let out = cmd_check(
            &four_cycle,
            CheckProperty::MonomialBasis,
            FieldSpec::Rational,
        )
        .unwrap();
        assert!(!out.ok);
        assert!(out.doc.body.get("unspanned_components").is_some());
    }

    #[test]
    fn classify_agreement() {
        for text in ["a b\nb c\nc d", "a b\nb c\nc d\nd e", "a b c"] {
            let complex = parse_complex(text, false).unwrap();
            let out = cmd_classify(&complex, FieldSpec::Rational).unwrap();
            assert!(out.ok, "{text}");
        }
    }

    #[test]
    fn gen_round_trips() {
        let text = cmd_gen(GenParams::new(GenKind::LinearTree, 4, 2, 7)).unwrap();
        let complex = parse_complex(&text, false).unwrap();
        assert!(forest::classify_linear_tree(&complex).unwrap());
    }
}
