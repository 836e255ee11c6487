//! External lists of orders (vertex-transitive, symmetric, ...).

use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{HbgError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RefClass {
    Symmetric,
    VertexTransitive,
    Custom(String),
}

impl RefClass {
    /// Guesses the class from a short list name such as `vt` or `sym`.
    pub fn from_name(name: &str) -> Self {
        let n = name.to_ascii_lowercase();
        if n == "vt" || n.contains("vertex") || n.contains("transitive") {
            RefClass::VertexTransitive
        } else if n.starts_with("sym") {
            RefClass::Symmetric
        } else {
            RefClass::Custom(name.to_string())
        }
    }
}

impl std::fmt::Display for RefClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RefClass::Symmetric => f.write_str("symmetric"),
            RefClass::VertexTransitive => f.write_str("vertex-transitive"),
            RefClass::Custom(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RefFormat {
    #[default]
    Csv,
}

impl FromStr for RefFormat {
    type Err = HbgError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(RefFormat::Csv),
            other => Err(HbgError::UnsupportedFormat(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReferenceList {
    pub name: String,
    pub class: RefClass,
    pub girth: Option<usize>,
    /// Strictly increasing, all even.
    pub orders: Vec<usize>,
    pub source: String,
}

impl ReferenceList {
    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn contains(&self, order: usize) -> bool {
        self.orders.binary_search(&order).is_ok()
    }

    pub fn with_girth(mut self, g: usize) -> Self {
        self.girth = Some(g);
        self
    }
}

/// Reads a list from a file. The list is named after the file stem.
pub fn ingest_reference(path: &Path, format: RefFormat) -> Result<ReferenceList> {
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let file = std::fs::File::open(path)?;
    let mut list = parse_reference(file, format, &name)?;
    list.source = path.display().to_string();
    Ok(list)
}

/// Parses CSV with an `order` column; `#` lines are comments.
pub fn parse_reference(input: impl Read, format: RefFormat, name: &str) -> Result<ReferenceList> {
    let RefFormat::Csv = format;
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(input);

    let headers = rdr.headers().map_err(|e| csv_error(&e))?.clone();
    let mut orders = Vec::new();
    if headers.is_empty() {
        return Ok(list(name, orders));
    }
    let col = headers
        .iter()
        .position(|h| h.eq_ignore_ascii_case("order"))
        .ok_or_else(|| HbgError::ParseError {
            line: 1,
            reason: format!("no `order` column in header {:?}", headers.iter().collect::<Vec<_>>()),
        })?;

    for rec in rdr.records() {
        let rec = rec.map_err(|e| csv_error(&e))?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        let Some(field) = rec.get(col) else {
            return Err(HbgError::ParseError {
                line,
                reason: "missing order field".to_string(),
            });
        };
        if field.is_empty() && rec.iter().all(str::is_empty) {
            continue;
        }
        let order: u64 = field.parse().map_err(|_| HbgError::ParseError {
            line,
            reason: format!("`{field}` is not a non-negative integer"),
        })?;
        if order % 2 != 0 {
            return Err(HbgError::OddOrderRejected { line, order });
        }
        orders.push(order as usize);
    }
    orders.sort_unstable();
    orders.dedup();
    Ok(list(name, orders))
}

fn list(name: &str, orders: Vec<usize>) -> ReferenceList {
    ReferenceList {
        name: name.to_string(),
        class: RefClass::from_name(name),
        girth: None,
        orders,
        source: String::new(),
    }
}

fn csv_error(e: &csv::Error) -> HbgError {
    HbgError::ParseError {
        line: e.position().map_or(0, |p| p.line() as usize),
        reason: e.to_string(),
    }
}

const BUILTIN: &[(&str, usize, &str, &str)] = &[
    ("3_6_symmetric", 6, "sym", include_str!("../../data/3_6_symmetric.csv")),
    ("3_6_vertex_transitive", 6, "vt", include_str!("../../data/3_6_vertex_transitive.csv")),
    ("3_8_vertex_transitive", 8, "vt", include_str!("../../data/3_8_vertex_transitive.csv")),
];

/// Lists shipped with the crate, by girth.
pub fn builtin_references(g: usize) -> Vec<ReferenceList> {
    BUILTIN
        .iter()
        .filter(|b| b.1 == g)
        .map(|&(id, g, short, text)| {
            let mut l = parse_reference(text.as_bytes(), RefFormat::Csv, short)
                .expect("embedded list parses")
                .with_girth(g);
            l.source = format!("builtin:{id}");
            l
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<ReferenceList> {
        parse_reference(s.as_bytes(), RefFormat::Csv, "custom")
    }

    #[test]
    fn symmetric_3_6() {
        let l = &builtin_references(6)[0];
        assert_eq!(l.class, RefClass::Symmetric);
        assert_eq!(l.orders, vec![14, 16, 18, 20, 24, 26, 32, 38, 42, 50]);
        assert_eq!(builtin_references(6)[1].len(), 19);
        assert_eq!(builtin_references(8)[0].len(), 21);
    }

    #[test]
    fn empty_and_comments() {
        assert!(parse("").unwrap().is_empty());
        assert!(parse("# nothing\norder\n").unwrap().is_empty());
        let l = parse("# c\norder,name\n16,a\n# skip\n14,b\n\n16,c\n").unwrap();
        assert_eq!(l.orders, vec![14, 16]);
    }

    #[test]
    fn odd_order_rejected_with_line() {
        match parse("order\n14\n15\n") {
            Err(HbgError::OddOrderRejected { line: 3, order: 15 }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn malformed_rows() {
        assert!(matches!(parse("order\n14\nabc\n"), Err(HbgError::ParseError { line: 3, .. })));
        assert!(matches!(parse("n\n14\n"), Err(HbgError::ParseError { line: 1, .. })));
        assert!(matches!(parse("order\n-2\n"), Err(HbgError::ParseError { .. })));
    }

    #[test]
    fn class_names() {
        assert_eq!(RefClass::from_name("VT"), RefClass::VertexTransitive);
        assert_eq!(RefClass::from_name("sym"), RefClass::Symmetric);
        assert_eq!(RefClass::from_name("foster"), RefClass::Custom("foster".into()));
    }
}
