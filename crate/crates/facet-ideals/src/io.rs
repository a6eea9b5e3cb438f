//! Text format for complexes: one facet per line, whitespace-separated
//! vertex tokens, `#` comment lines. Vertex indices are assigned by first
//! appearance, so parsing is deterministic.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_VERTICES};

/// Parses the facet-per-line format. With `normalize` set, non-maximal
/// faces are dropped instead of rejected.
pub fn parse_complex(text: &str, normalize: bool) -> Result<SimplicialComplex> {
    let mut names: Vec<String> = Vec::new();
    let mut facets: Vec<VertexSet> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut facet = VertexSet::EMPTY;
        for token in line.split_whitespace() {
            let idx = match names.iter().position(|n| n == token) {
                Some(idx) => idx,
                None => {
                    if names.len() >= MAX_VERTICES {
                        return Err(Error::CapacityExceeded(names.len() + 1));
                    }
                    names.push(token.to_string());
                    names.len() - 1
                }
            };
            facet = facet.with(idx);
        }
        if facet.is_empty() {
            return Err(Error::ParseError {
                line: lineno + 1,
                msg: "facet line has no vertices".into(),
            });
        }
        facets.push(facet);
    }
    SimplicialComplex::build(names, facets, normalize)
}

/// Writes the complex in the same format, facets in canonical order.
pub fn serialize_complex(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for &f in complex.facets() {
        let names: Vec<&str> = f.iter().map(|v| complex.universe()[v].as_str()).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}
