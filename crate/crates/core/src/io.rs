//! Poset documents, table rendering and DOT export.

use serde::{Deserialize, Serialize};

use crate::connectives::{BinaryTable, OperatorTable, UnaryTable};
use crate::error::{Error, Result};
use crate::poset::Poset;

pub const FORMAT_VERSION: u32 = 1;

/// On-disk form of a poset: labels in element order and Hasse covers as
/// `[lower, upper]` label pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub version: u32,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<String>,
}

impl PosetDocument {
    /// Covers are listed in lexicographic order of element indices.
    pub fn from_poset(p: &Poset) -> Self {
        let mut covers = p.covers();
        covers.sort();
        PosetDocument {
            version: FORMAT_VERSION,
            elements: p.names().to_vec(),
            covers: covers
                .into_iter()
                .map(|(lo, hi)| (p.name(lo).to_owned(), p.name(hi).to_owned()))
                .collect(),
            bottom: None,
            top: None,
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        if self.version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported format version {} (expected {FORMAT_VERSION})",
                self.version
            )));
        }
        let index = |label: &str| {
            self.elements
                .iter()
                .position(|e| e == label)
                .ok_or_else(|| Error::Parse(format!("cover uses unknown label '{label}'")))
        };
        let covers = self
            .covers
            .iter()
            .map(|(lo, hi)| Ok((index(lo)?, index(hi)?)))
            .collect::<Result<Vec<_>>>()?;
        let p = Poset::from_covers(self.elements.clone(), &covers)?;
        for (declared, actual, what) in [
            (&self.bottom, p.bottom(), "bottom"),
            (&self.top, p.top(), "top"),
        ] {
            if let Some(label) = declared {
                if p.name(actual) != label {
                    return Err(Error::NotBounded(format!(
                        "declared {what} '{label}' but the computed {what} is '{}'",
                        p.name(actual)
                    )));
                }
            }
        }
        Ok(p)
    }
}

pub fn parse_document(text: &str) -> Result<PosetDocument> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse(text: &str) -> Result<Poset> {
    parse_document(text)?.to_poset()
}

/// Compact single-line JSON.
pub fn serialize(p: &Poset) -> String {
    serde_json::to_string(&PosetDocument::from_poset(p)).expect("documents serialize")
}

pub fn serialize_pretty(p: &Poset) -> String {
    serde_json::to_string_pretty(&PosetDocument::from_poset(p)).expect("documents serialize")
}

/// Two rows: the elements, then their images under `symbol`.
///
/// ```text
/// x: 0 a b c d e f 1
/// x⁰: 1 f ac d c 0 a 0
/// ```
pub fn render_unary(p: &Poset, table: &UnaryTable, symbol: &str) -> String {
    let header: Vec<&str> = p.names().iter().map(String::as_str).collect();
    let values: Vec<String> = table.entries().iter().map(|&s| p.format_set(s)).collect();
    format!("x: {}\nx{symbol}: {}\n", header.join(" "), values.join(" "))
}

/// A square grid with the row operand on the left and the column operand on
/// top; columns are padded to a common width.
pub fn render_binary(p: &Poset, table: &BinaryTable, symbol: &str) -> String {
    let n = table.size();
    let cells: Vec<Vec<String>> = (0..n)
        .map(|a| table.row(a).iter().map(|&s| p.format_set(s)).collect())
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(|c| c.chars().count())
        .chain(p.names().iter().map(|c| c.chars().count()))
        .chain(std::iter::once(symbol.chars().count()))
        .max()
        .unwrap_or(1);
    let pad = |s: &str| format!("{s}{}", " ".repeat(width - s.chars().count()));
    let mut out = String::new();
    let mut line = |first: &str, rest: &[String]| {
        let mut row = pad(first);
        for c in rest {
            row.push(' ');
            row.push_str(&pad(c));
        }
        out.push_str(row.trim_end());
        out.push('\n');
    };
    line(symbol, p.names());
    for (a, row) in cells.iter().enumerate() {
        line(p.name(a), row);
    }
    out
}

pub fn render_table(p: &Poset, table: &OperatorTable) -> String {
    match table {
        OperatorTable::Unary(t) => render_unary(p, t, "⁰"),
        OperatorTable::Binary(op, t) => render_binary(p, t, op.symbol()),
    }
}

/// Hasse diagram in DOT, drawn bottom to top.
pub fn export_dot(p: &Poset) -> String {
    let quote = |x: usize| format!("{:?}", p.name(x));
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in 0..p.len() {
        out.push_str(&format!("  {};\n", quote(x)));
    }
    out.push_str(&format!("  {{ rank=min; {}; }}\n", quote(p.bottom())));
    if p.top() != p.bottom() {
        out.push_str(&format!("  {{ rank=max; {}; }}\n", quote(p.top())));
    }
    let mut covers = p.covers();
    covers.sort();
    for (lo, hi) in covers {
        out.push_str(&format!("  {} -> {} [dir=none];\n", quote(lo), quote(hi)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectives::{operator_table, Operator};
    use crate::testutil::*;

    #[test]
    fn round_trip_is_stable() {
        for p in [p1(), p2(), p3(), p4(), diamond(), chain(1)] {
            let text = serialize(&p);
            let q = parse(&text).unwrap();
            assert_eq!(q, p);
            assert_eq!(serialize(&q), text);
        }
    }

    #[test]
    fn unknown_label_is_named() {
        let text = r#"{"version":1,"elements":["0","1"],"covers":[["0","x"]]}"#;
        match parse(text) {
            Err(Error::Parse(msg)) => assert!(msg.contains("'x'"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn malformed_and_versioned_documents() {
        assert!(matches!(parse("{"), Err(Error::Parse(_))));
        let text = r#"{"version":2,"elements":["0"],"covers":[]}"#;
        assert!(matches!(parse(text), Err(Error::Parse(_))));
        let text = r#"{"version":1,"elements":["0","1"],"covers":[["0","1"]],"top":"0"}"#;
        assert!(matches!(parse(text), Err(Error::NotBounded(_))));
        let text =
            r#"{"version":1,"elements":["0","1"],"covers":[["0","1"]],"bottom":"0","top":"1"}"#;
        assert!(parse(text).is_ok());
    }

    #[test]
    fn p1_negation_rows() {
        let p = p1();
        let text = render_table(&p, &operator_table(&p, Operator::Negation));
        assert_eq!(text, "x: 0 a b c d e f 1\nx⁰: 1 f ac d c 0 a 0\n");
    }

    #[test]
    fn p3_conjunction_grid() {
        let p = p3();
        let text = render_table(&p, &operator_table(&p, Operator::Conjunction));
        let expected = "\
⊙  0  a  b  c  d  e  1
0  0  0  0  0  0  0  0
a  0  a  0  0  a  a  a
b  0  0  b  0  b  b  b
c  0  0  0  c  0  0  c
d  0  a  b  0  d  ab d
e  0  a  b  0  ab e  e
1  0  a  b  c  d  e  1
";
        assert_eq!(text, expected);
    }

    #[test]
    fn one_element_negation() {
        let p = Poset::from_covers(vec!["1".into()], &[]).unwrap();
        let text = render_table(&p, &operator_table(&p, Operator::Negation));
        assert_eq!(text, "x: 1\nx⁰: 1\n");
    }

    #[test]
    fn dot_draws_covers_only() {
        let text = export_dot(&diamond());
        assert!(text.starts_with("digraph poset {\n  rankdir=BT;"));
        assert_eq!(text.matches("->").count(), 4);
        assert!(text.contains("rank=min; \"0\""));
        assert!(text.contains("rank=max; \"1\""));
    }
}
