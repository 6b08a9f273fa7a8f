//! JSON-lines atlas of sweep results.
//!
//! One object per spec in canonical order, then one per `Z/n` check, then
//! a trailer `{"trailer":true,"complete":…,"records":…}`. An interrupted
//! sweep stops at the first aborted entry and sets `complete` to false.

use serde::Serialize;

use crate::theorems::{ClassificationReport, EntryStatus, SweepOutcome, ZmodCheck};

#[derive(Serialize)]
struct SpecRecord<'a> {
    spec: Vec<usize>,
    n: usize,
    vertices: Option<usize>,
    edges: Option<usize>,
    omega: Option<usize>,
    alpha: Option<usize>,
    degree_sequence: Option<&'a [usize]>,
    planar: Option<bool>,
    predicted_planar: bool,
    universal: Option<bool>,
    predicted_universal: bool,
    star: Option<bool>,
    predicted_star: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_kind: Option<String>,
    status: &'static str,
}

#[derive(Serialize)]
struct ZmodRecord<'a> {
    zmod: u64,
    spec: &'a [usize],
    vertices: usize,
    edges: usize,
    engines_agree: bool,
    status: &'static str,
}

#[derive(Serialize)]
struct Trailer {
    trailer: bool,
    complete: bool,
    records: usize,
}

fn spec_record(r: &ClassificationReport) -> SpecRecord<'_> {
    let inv = r.invariants.as_ref();
    SpecRecord {
        spec: r.spec.counts(),
        n: r.spec.len(),
        vertices: inv.map(|i| i.vertex_count),
        edges: inv.map(|i| i.edge_count),
        omega: inv.map(|i| i.omega),
        alpha: inv.map(|i| i.alpha),
        degree_sequence: inv.map(|i| i.degree_sequence.as_slice()),
        planar: inv.map(|i| i.planar),
        predicted_planar: r.predictions.planar,
        universal: inv.map(|i| i.universal_vertex_exists),
        predicted_universal: r.predictions.universal,
        star: inv.map(|i| i.is_star),
        predicted_star: r.predictions.star,
        witness_kind: r.witness.as_ref().map(|w| w.kind.to_string()),
        status: r.status.as_str(),
    }
}

fn zmod_record(z: &ZmodCheck) -> ZmodRecord<'_> {
    ZmodRecord {
        zmod: z.n,
        spec: &z.counts,
        vertices: z.vertex_count,
        edges: z.edge_count,
        engines_agree: z.engines_agree,
        status: z.status.as_str(),
    }
}

/// Serialises the outcome as JSON lines.
pub fn render(outcome: &SweepOutcome) -> String {
    let mut lines = Vec::new();
    let mut complete = true;
    for r in &outcome.reports {
        if r.status == EntryStatus::Aborted {
            complete = false;
            break;
        }
        lines.push(serde_json::to_string(&spec_record(r)).expect("record serialises"));
    }
    if complete {
        for z in &outcome.zmod {
            if z.status == EntryStatus::Aborted {
                complete = false;
                break;
            }
            lines.push(serde_json::to_string(&zmod_record(z)).expect("record serialises"));
        }
    }
    let trailer = Trailer {
        trailer: true,
        complete,
        records: lines.len(),
    };
    lines.push(serde_json::to_string(&trailer).expect("trailer serialises"));
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use std::sync::atomic::AtomicBool;

    use super::*;
    use crate::theorems::{verify_sweep, SweepBounds};
    use crate::Limits;

    fn bounds() -> SweepBounds {
        SweepBounds {
            max_factors: 2,
            max_proper_ideals: 2,
        }
    }

    #[test]
    fn complete_sweep() {
        let out = verify_sweep(bounds(), &[6], &Limits::default(), 2, None).unwrap();
        let text = render(&out);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 7);
        assert_eq!(
            lines[2],
            r#"{"spec":[1,1],"n":2,"vertices":2,"edges":1,"omega":2,"alpha":1,"degree_sequence":[1,1],"planar":true,"predicted_planar":true,"universal":true,"predicted_universal":true,"star":true,"predicted_star":true,"status":"ok"}"#
        );
        assert!(lines[5].starts_with(r#"{"zmod":6,"spec":[1,1],"#));
        assert_eq!(lines[6], r#"{"trailer":true,"complete":true,"records":6}"#);
    }

    #[test]
    fn cancelled_sweep_is_flagged() {
        let cancel = AtomicBool::new(true);
        let out = verify_sweep(bounds(), &[6], &Limits::default(), 2, Some(&cancel)).unwrap();
        assert!(out.aborted());
        assert_eq!(
            render(&out),
            "{\"trailer\":true,\"complete\":false,\"records\":0}\n"
        );
    }

    #[test]
    fn capacity_entries_have_null_invariants() {
        let tight = Limits {
            graph_vertex_cap: 3,
            ..Limits::default()
        };
        let out = verify_sweep(bounds(), &[], &tight, 1, None).unwrap();
        let text = render(&out);
        let last_spec: serde_json::Value =
            serde_json::from_str(text.lines().nth(4).unwrap()).unwrap();
        assert_eq!(last_spec["spec"], serde_json::json!([2, 2]));
        assert_eq!(last_spec["status"], "capacity");
        assert!(last_spec["vertices"].is_null());
        assert!(text.ends_with("{\"trailer\":true,\"complete\":true,\"records\":5}\n"));
    }
}
