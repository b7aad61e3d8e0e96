use super::kv::Document;
use super::mechanism_file::parse_measured_section;
use crate::error::Result;
use crate::mechanism::MeasuredStiffness;

pub const MEASURED_FORMAT: &str = "flexrcc-measured";

/// A file with a single `[measured]` section of `direction = value [value]`.
pub fn parse_measured(text: &str, origin: &str) -> Result<Vec<MeasuredStiffness>> {
    let doc = Document::parse(text, origin)?;
    doc.expect_format(MEASURED_FORMAT, 1)?;
    let mut out = Vec::new();
    for s in &doc.sections {
        if s.kind != "measured" || s.name.is_some() {
            return Err(doc.err(s.line, s.label(), "expected a [measured] section"));
        }
        if !out.is_empty() {
            return Err(doc.err(s.line, s.label(), "section given twice"));
        }
        out = parse_measured_section(&doc, s)?;
    }
    Ok(out)
}
