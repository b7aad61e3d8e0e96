//! Reference matrix fixtures.

use super::kv::{parse_number, Document};
use crate::error::Result;
use crate::spatial::{MatrixKind, SpatialMatrix6};

pub const MATRIX_FORMAT: &str = "flexrcc-matrix";

/// Reads `kind = stiffness|compliance` and six `row = ...` lines.
pub fn parse_matrix(text: &str, origin: &str) -> Result<SpatialMatrix6> {
    let doc = Document::parse(text, origin)?;
    doc.expect_format(MATRIX_FORMAT, 1)?;
    for e in &doc.header {
        if !["format", "kind", "row"].contains(&e.key.as_str()) {
            return Err(doc.err(e.line, &e.key, "unknown key"));
        }
    }
    if let Some(s) = doc.sections.first() {
        return Err(doc.err(s.line, s.label(), "matrix files have no sections"));
    }
    let kind_entry = doc
        .header_value("kind")
        .ok_or_else(|| doc.err(1, "kind", "missing `kind = stiffness|compliance`"))?;
    let kind = match kind_entry.value.as_str() {
        "stiffness" => MatrixKind::Stiffness,
        "compliance" => MatrixKind::Compliance,
        other => return Err(doc.err(kind_entry.line, "kind", format!("unknown matrix kind `{other}`"))),
    };
    let rows: Vec<_> = doc.header.iter().filter(|e| e.key == "row").collect();
    if rows.len() != 6 {
        let line = rows.last().map_or(kind_entry.line, |e| e.line);
        return Err(doc.err(line, "row", format!("expected 6 rows, found {}", rows.len())));
    }
    let mut m = nalgebra::Matrix6::zeros();
    for (i, e) in rows.iter().enumerate() {
        let vals = e
            .value
            .split_whitespace()
            .map(|t| parse_number(origin, e.line, "row", t))
            .collect::<Result<Vec<f64>>>()?;
        if vals.len() != 6 {
            return Err(doc.err(e.line, "row", format!("expected 6 values, found {}", vals.len())));
        }
        for (j, v) in vals.into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    Ok(SpatialMatrix6::new(m, kind))
}
