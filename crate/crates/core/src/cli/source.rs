//! Ring sources on the command line.
//!
//! Grammar: `ITEM ('*' ITEM)*` where `ITEM` is `zmod:N` or
//! `poly:P:C0,C1,...` (coefficients constant term first). A product of
//! several items is their direct product in the order given.

use std::str::FromStr;

use crate::{FiniteRing, Limits, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceItem {
    Zmod(u64),
    Poly { p: u64, coeffs: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSource(pub Vec<SourceItem>);

impl FromStr for SourceItem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if let Some(n) = s.strip_prefix("zmod:") {
            return n
                .trim()
                .parse()
                .map(SourceItem::Zmod)
                .map_err(|e| format!("bad modulus {n:?}: {e}"));
        }
        if let Some(rest) = s.strip_prefix("poly:") {
            let (p, coeffs) = parse_poly(rest)?;
            return Ok(SourceItem::Poly { p, coeffs });
        }
        Err(format!(
            "unknown ring source {s:?}; expected zmod:N or poly:P:C0,C1,..."
        ))
    }
}

/// Parses `P:C0,C1,...`.
pub fn parse_poly(s: &str) -> std::result::Result<(u64, Vec<u64>), String> {
    let (p, coeffs) = s
        .split_once(':')
        .ok_or_else(|| format!("expected P:C0,C1,... in {s:?}"))?;
    let p = p
        .trim()
        .parse()
        .map_err(|e| format!("bad prime {p:?}: {e}"))?;
    let coeffs = coeffs
        .split(',')
        .map(|c| {
            c.trim()
                .parse()
                .map_err(|e| format!("bad coefficient {c:?}: {e}"))
        })
        .collect::<std::result::Result<Vec<u64>, String>>()?;
    Ok((p, coeffs))
}

impl FromStr for RingSource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let items = s
            .split('*')
            .map(str::parse)
            .collect::<std::result::Result<Vec<SourceItem>, String>>()?;
        Ok(RingSource(items))
    }
}

impl SourceItem {
    pub fn build(&self, limits: &Limits) -> Result<FiniteRing> {
        match self {
            SourceItem::Zmod(n) => FiniteRing::zmod(*n, limits),
            SourceItem::Poly { p, coeffs } => FiniteRing::poly_quotient(*p, coeffs, limits),
        }
    }
}

impl RingSource {
    pub fn build(&self, limits: &Limits) -> Result<FiniteRing> {
        match self.0.as_slice() {
            [single] => single.build(limits),
            items => {
                let factors = items
                    .iter()
                    .map(|i| i.build(limits))
                    .collect::<Result<Vec<_>>>()?;
                FiniteRing::direct_product(&factors, limits)
            }
        }
    }
}
