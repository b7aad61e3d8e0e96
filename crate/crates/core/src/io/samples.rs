//! Two-column `(time s, force N)` sample files.

use super::kv::parse_number;
use crate::error::{Error, Result};

/// Accepts comma, semicolon, tab or space separators and `#` comments. A
/// non-numeric first row is taken as a column header.
pub fn parse_samples(text: &str, origin: &str) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    let mut header_allowed = true;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let cols: Vec<&str> = content
            .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
            .filter(|c| !c.is_empty())
            .collect();
        let numeric = cols.iter().all(|c| c.parse::<f64>().is_ok());
        if header_allowed && !numeric {
            header_allowed = false;
            continue;
        }
        header_allowed = false;
        if cols.len() != 2 {
            return Err(Error::parse(origin, line, "sample", format!("expected 2 columns, found {}", cols.len())));
        }
        let t = parse_number(origin, line, "time", cols[0])?;
        let f = parse_number(origin, line, "force", cols[1])?;
        out.push((t, f));
    }
    Ok(out)
}
