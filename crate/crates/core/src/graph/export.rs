use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    labels: &'a [String],
    edges: Vec<[usize; 2]>,
}

fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Serialises `g`. Output is a pure function of the graph: edges appear
/// once each, as `(i, j)` with `i < j`, in lexicographic order.
pub fn export(g: &Graph, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Dot => {
            let mut s = String::from("graph G {\n");
            for l in g.labels() {
                let _ = writeln!(s, "  {};", dot_quote(l));
            }
            for (a, b) in g.edges() {
                let _ = writeln!(
                    s,
                    "  {} -- {};",
                    dot_quote(g.label(a)),
                    dot_quote(g.label(b))
                );
            }
            s.push_str("}\n");
            s.into_bytes()
        }
        ExportFormat::Json => {
            let doc = JsonGraph {
                labels: g.labels(),
                edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            };
            let mut out = serde_json::to_vec(&doc).expect("graph serialises");
            out.push(b'\n');
            out
        }
    }
}
