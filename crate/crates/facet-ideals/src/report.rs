//! Report documents: an ordered key/value tree renderable as indented
//! text or JSON. The schema carries a version field so downstream tooling
//! can pin itself to it.

use crate::betti::BettiTable;
use crate::complex::SimplicialComplex;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: u32 = 1;

/// One node of a report tree. Maps preserve insertion order.
#[derive(Clone, Debug, PartialEq)]
pub enum ReportValue {
    Bool(bool),
    Int(i64),
    Str(String),
    List(Vec<ReportValue>),
    Map(Vec<(String, ReportValue)>),
}

impl ReportValue {
    pub fn map() -> ReportValue {
        ReportValue::Map(Vec::new())
    }

    pub fn push(&mut self, key: &str, value: impl Into<ReportValue>) -> &mut Self {
        match self {
            ReportValue::Map(entries) => entries.push((key.to_string(), value.into())),
            _ => panic!("push on a non-map report node"),
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&ReportValue> {
        match self {
            ReportValue::Map(entries) => entries.iter().find(|(k, _)| k == key).map(|(_, v)| v),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            ReportValue::Bool(b) => Some(*b),
            _ => None,
        }
    }
}

impl From<bool> for ReportValue {
    fn from(v: bool) -> Self {
        ReportValue::Bool(v)
    }
}

impl From<i64> for ReportValue {
    fn from(v: i64) -> Self {
        ReportValue::Int(v)
    }
}

impl From<usize> for ReportValue {
    fn from(v: usize) -> Self {
        ReportValue::Int(v as i64)
    }
}

impl From<u64> for ReportValue {
    fn from(v: u64) -> Self {
        ReportValue::Int(v as i64)
    }
}

impl From<&str> for ReportValue {
    fn from(v: &str) -> Self {
        ReportValue::Str(v.to_string())
    }
}

impl From<String> for ReportValue {
    fn from(v: String) -> Self {
        ReportValue::Str(v)
    }
}

impl From<Vec<ReportValue>> for ReportValue {
    fn from(v: Vec<ReportValue>) -> Self {
        ReportValue::List(v)
    }
}

impl Serialize for ReportValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ReportValue::Bool(b) => serializer.serialize_bool(*b),
            ReportValue::Int(i) => serializer.serialize_i64(*i),
            ReportValue::Str(s) => serializer.serialize_str(s),
            ReportValue::List(items) => {
                let mut seq = serializer.serialize_seq(Some(items.len()))?;
                for item in items {
                    seq.serialize_element(item)?;
                }
                seq.end()
            }
            ReportValue::Map(entries) => {
                let mut map = serializer.serialize_map(Some(entries.len()))?;
                for (k, v) in entries {
                    map.serialize_entry(k, v)?;
                }
                map.end()
            }
        }
    }
}

/// A complete report: command name, schema version, and the result tree.
#[derive(Clone, Debug)]
pub struct ReportDocument {
    pub command: String,
    pub body: ReportValue,
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        ReportDocument {
            command: command.to_string(),
            body: ReportValue::map(),
        }
    }

    pub fn push(&mut self, key: &str, value: impl Into<ReportValue>) -> &mut Self {
        self.body.push(key, value);
        self
    }

    pub fn to_json(&self) -> String {
        let mut root = ReportValue::map();
        root.push("schema_version", SCHEMA_VERSION as i64);
        root.push("command", self.command.as_str());
        root.push("result", self.body.clone());
        serde_json::to_string_pretty(&root).expect("report trees always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# {} (schema v{})\n", self.command, SCHEMA_VERSION);
        render_text(&self.body, 0, &mut out);
        out
    }
}

fn render_text(value: &ReportValue, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        ReportValue::Map(entries) => {
            for (k, v) in entries {
                match v {
                    ReportValue::Map(_) | ReportValue::List(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(v, indent + 1, out);
                    }
                    ReportValue::Str(s) if s.contains('\n') => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        let block = "  ".repeat(indent + 1);
                        for line in s.lines() {
                            out.push_str(&format!("{block}{line}\n"));
                        }
                    }
                    _ => {
                        out.push_str(&format!("{pad}{k}: "));
                        render_scalar(v, out);
                        out.push('\n');
                    }
                }
            }
        }
        ReportValue::List(items) => {
            for item in items {
                match item {
                    ReportValue::Map(_) | ReportValue::List(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(item, indent + 1, out);
                    }
                    _ => {
                        out.push_str(&format!("{pad}- "));
                        render_scalar(item, out);
                        out.push('\n');
                    }
                }
            }
        }
        scalar => {
            out.push_str(&pad);
            render_scalar(scalar, out);
            out.push('\n');
        }
    }
}

fn render_scalar(value: &ReportValue, out: &mut String) {
    match value {
        ReportValue::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        ReportValue::Int(i) => out.push_str(&i.to_string()),
        ReportValue::Str(s) => out.push_str(s),
        _ => unreachable!("scalar renderer on composite node"),
    }
}

/// The graded Betti table as a preformatted grid: rows `i`, columns `j`,
/// zero entries blank.
pub fn betti_grid(table: &BettiTable) -> String {
    let graded = table.graded();
    let max_i = graded.keys().map(|&(i, _)| i).max().unwrap_or(0);
    let max_j = graded.keys().map(|&(_, j)| j).max().unwrap_or(0);
    let width = graded
        .values()
        .map(|b| b.to_string().len())
        .max()
        .unwrap_or(1)
        .max(max_j.to_string().len())
        + 1;
    let mut out = String::new();
    out.push_str(&format!("{:>4} |", "i\\j"));
    for j in 0..=max_j {
        out.push_str(&format!("{j:>width$}"));
    }
    out.push('\n');
    out.push_str(&format!("-----+{}\n", "-".repeat(width * (max_j + 1))));
    for i in 0..=max_i {
        out.push_str(&format!("{i:>4} |"));
        for j in 0..=max_j {
            match graded.get(&(i, j)) {
                Some(b) => out.push_str(&format!("{b:>width$}")),
                None => out.push_str(&" ".repeat(width)),
            }
        }
        out.push('\n');
    }
    out
}

/// Multigraded entries rendered with vertex names.
pub fn multigraded_entries(table: &BettiTable, complex: &SimplicialComplex) -> Vec<ReportValue> {
    table
        .iter()
        .map(|(i, a, b)| {
            let mut entry = ReportValue::map();
            entry.push("i", i);
            entry.push("multidegree", complex.format_face(a));
            entry.push("rank", b);
            entry
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape_and_order() {
        let mut doc = ReportDocument::new("analyze");
        doc.push("dim", 2usize);
        doc.push("pure", true);
        let json = doc.to_json();
        assert!(json.contains("\"schema_version\": 1"));
        let dim_pos = json.find("\"dim\"").unwrap();
        let pure_pos = json.find("\"pure\"").unwrap();
        assert!(dim_pos < pure_pos, "insertion order is preserved");
        // Valid JSON round trip.
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["result"]["dim"], 2);
    }

    #[test]
    fn grid_blanks_zero_entries() {
        let mut table = BettiTable::of_free_ring(3);
        table.add(1, crate::vset::VertexSet::from_indices([0, 1]), 2);
        let grid = betti_grid(&table);
        assert!(grid.contains('2'));
        let lines: Vec<&str> = grid.lines().collect();
        assert_eq!(lines.len(), 2 + 2); // header, rule, rows i = 0, 1
    }
}
