//! Classification predicates for Γ(R) and the sweep that checks them
//! against the graph algorithms.
//!
//! For a product of `n` local factors with proper-ideal counts `cᵢ`:
//!
//! * some vertex is adjacent to all others iff `n = 2` and one factor is a
//!   field (`min c = 1`);
//! * Γ is a star iff the same holds (`K_{1,1}` included);
//! * Γ is planar iff `n = 1` (empty graph), or `n = 2` and one factor has at
//!   most three ideals counting `0` and itself (`min c ≤ 2`), or `n = 3`,
//!   every factor has at most one non-trivial ideal and at most one factor
//!   is not a field (counts `(1,1,1)` or `(1,1,2)` up to order).
//!
//! The familiar statement of the three-factor case allows every factor a
//! non-trivial ideal; [`predicate_planar_as_stated`] keeps that form. It is
//! false for counts `(1,2,2)` and `(2,2,2)`: there Γ contains a subdivided
//! `K₃,₃`, and the sweep reports both as counterexamples.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::factor::{
    build_graph, edge_count, engine_pair, spec_from_ring, vertex_count, vertex_degree,
};
use crate::graph::{
    embedding_is_valid, extract_witness, independence_number, is_clique, is_independent_set,
    is_planar_capped, max_clique, max_independent_set, verify_witness, Graph, SubdivisionWitness,
    WitnessKind,
};
use crate::ring::FiniteRing;
use crate::{Coord, Error, Limits, ProductRingSpec, Result, VertexCode};

fn min_count(spec: &ProductRingSpec) -> usize {
    spec.counts().into_iter().min().unwrap_or(0)
}

/// A vertex adjacent to every other exists iff `R` is a local ring times a
/// field.
pub fn predicate_universal(spec: &ProductRingSpec) -> bool {
    spec.len() == 2 && min_count(spec) == 1
}

pub fn predicate_star(spec: &ProductRingSpec) -> bool {
    spec.len() == 2 && min_count(spec) == 1 && vertex_count(spec) >= 2
}

pub fn predicate_planar(spec: &ProductRingSpec) -> bool {
    match spec.len() {
        1 => true,
        2 => min_count(spec) <= 2,
        3 => {
            let counts = spec.counts();
            counts.iter().all(|&c| c <= 2) && counts.iter().filter(|&&c| c == 2).count() <= 1
        }
        _ => false,
    }
}

/// The three-factor condition in its commonly quoted form: every factor
/// has at most one non-trivial ideal.
pub fn predicate_planar_as_stated(spec: &ProductRingSpec) -> bool {
    match spec.len() {
        3 => spec.counts().iter().all(|&c| c <= 2),
        _ => predicate_planar(spec),
    }
}

fn index_of_code(g: &Graph, coords: Vec<Coord>) -> Result<usize> {
    let label = VertexCode::new(coords).label();
    g.index_of(&label)
        .ok_or_else(|| Error::Precondition(format!("{label} is not a vertex of the graph")))
}

fn code_with(n: usize, fill: Coord, set: &[(usize, Coord)]) -> Vec<Coord> {
    let mut coords = vec![fill; n];
    for &(i, c) in set {
        coords[i] = c;
    }
    coords
}

/// `K₃,₃` on `{m₁, m₂, m₁m₂}` and `{m₃, m₄, m₃m₄}`, where `mᵢ` is zero in
/// coordinate `i` and `R` elsewhere. `g` must be `build_graph(spec)`.
pub fn construct_k33_witness_max4(spec: &ProductRingSpec, g: &Graph) -> Result<SubdivisionWitness> {
    let n = spec.len();
    if n < 4 {
        return Err(Error::Precondition(format!(
            "needs at least four factors, spec has {n}"
        )));
    }
    let zero = Coord::Proper(0);
    let patterns: [&[(usize, Coord)]; 6] = [
        &[(0, zero)],
        &[(1, zero)],
        &[(0, zero), (1, zero)],
        &[(2, zero)],
        &[(3, zero)],
        &[(2, zero), (3, zero)],
    ];
    let branch = patterns
        .iter()
        .map(|p| index_of_code(g, code_with(n, Coord::Full, p)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SubdivisionWitness::direct(WitnessKind::K33, branch))
}

/// `K₃,₃` for three factors when factor `i` has two non-trivial ideals
/// `I, J`: `{I×R×R, J×R×R, 0×R×R}` against `{R×0×R, R×R×0, R×0×0}` (with
/// `i` moved to the front).
pub fn construct_k33_witness_three_factors(
    spec: &ProductRingSpec,
    g: &Graph,
) -> Result<SubdivisionWitness> {
    let counts = spec.counts();
    if counts.len() != 3 {
        return Err(Error::Precondition("needs exactly three factors".into()));
    }
    let i = counts
        .iter()
        .position(|&c| c >= 3)
        .ok_or_else(|| Error::Precondition("no factor has two non-trivial ideals".into()))?;
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    let zero = Coord::Proper(0);
    let patterns: [&[(usize, Coord)]; 6] = [
        &[(i, Coord::Proper(1))],
        &[(i, Coord::Proper(2))],
        &[(i, zero)],
        &[(j, zero)],
        &[(k, zero)],
        &[(j, zero), (k, zero)],
    ];
    let branch = patterns
        .iter()
        .map(|p| index_of_code(g, code_with(3, Coord::Full, p)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SubdivisionWitness::direct(WitnessKind::K33, branch))
}

/// Subdivided `K₅` for three factors when factors `j` and `k` each have a
/// non-trivial ideal `m`: branch vertices `0×R×R`, `R×0×R`, `R×m×R`,
/// `R×R×0`, `R×R×m` (with `i` the remaining factor, moved to the front);
/// `R×0×R`–`R×m×R` runs through `0×R×m` and `R×R×0`–`R×R×m` through
/// `0×m×R`.
pub fn construct_k5_witness_three_factors(
    spec: &ProductRingSpec,
    g: &Graph,
) -> Result<SubdivisionWitness> {
    let counts = spec.counts();
    if counts.len() != 3 {
        return Err(Error::Precondition("needs exactly three factors".into()));
    }
    let big: Vec<usize> = (0..3).filter(|&t| counts[t] >= 2).collect();
    if big.len() < 2 {
        return Err(Error::Precondition(
            "needs two factors with a non-trivial ideal".into(),
        ));
    }
    let (j, k) = (big[big.len() - 2], big[big.len() - 1]);
    let i = 3 - j - k;
    let (zero, m) = (Coord::Proper(0), Coord::Proper(1));
    let vertex = |set: &[(usize, Coord)]| index_of_code(g, code_with(3, Coord::Full, set));
    let branch = vec![
        vertex(&[(i, zero)])?,
        vertex(&[(j, zero)])?,
        vertex(&[(j, m)])?,
        vertex(&[(k, zero)])?,
        vertex(&[(k, m)])?,
    ];
    let mut w = SubdivisionWitness::direct(WitnessKind::K5, branch.clone());
    w.paths[4] = vec![branch[1], vertex(&[(i, zero), (k, m)])?, branch[2]];
    w.paths[9] = vec![branch[3], vertex(&[(i, zero), (j, m)])?, branch[4]];
    Ok(w)
}

/// `K₃,₃` inside `K_{c₁,c₂}` when both counts are at least three.
pub fn construct_k33_witness_two_factors(
    spec: &ProductRingSpec,
    g: &Graph,
) -> Result<SubdivisionWitness> {
    let counts = spec.counts();
    if counts.len() != 2 || counts.iter().any(|&c| c < 3) {
        return Err(Error::Precondition(
            "needs two factors with at least three proper ideals each".into(),
        ));
    }
    let mut branch = Vec::with_capacity(6);
    for full in [1, 0] {
        for k in 0..3 {
            let coords = code_with(2, Coord::Full, &[(1 - full, Coord::Proper(k))]);
            branch.push(index_of_code(g, coords)?);
        }
    }
    Ok(SubdivisionWitness::direct(WitnessKind::K33, branch))
}

/// Invariants measured on the built graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphInvariants {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub omega: usize,
    pub alpha: usize,
    pub degree_sequence: Vec<usize>,
    pub planar: bool,
    pub universal_vertex_exists: bool,
    pub is_star: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Predictions {
    pub planar: bool,
    pub universal: bool,
    pub star: bool,
}

/// Checks that are not themselves invariants: closed forms and
/// certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Certificates {
    pub formula_vertex_count: u128,
    pub formula_edge_count: u128,
    /// Closed-form degree equals graph degree at every vertex.
    pub degrees_match: bool,
    /// Returned clique and independent set were re-checked pairwise.
    pub extremal_sets_valid: bool,
    /// Planar: the embedding passed face counting. Nonplanar: a witness is
    /// present and verified, or none was required.
    pub planarity_certified: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub universal: bool,
    pub planar: bool,
    pub star: bool,
    pub counts: bool,
    pub omega: bool,
    pub certificates: bool,
}

impl Agreement {
    pub fn all(&self) -> bool {
        self.universal && self.planar && self.star && self.counts && self.omega && self.certificates
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail", rename_all = "snake_case")]
pub enum EntryStatus {
    Ok,
    Capacity(String),
    Budget(String),
    Aborted,
}

impl EntryStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            EntryStatus::Ok => "ok",
            EntryStatus::Capacity(_) => "capacity",
            EntryStatus::Budget(_) => "budget",
            EntryStatus::Aborted => "aborted",
        }
    }

    fn from_error(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => EntryStatus::Budget(e.to_string()),
            other => EntryStatus::Capacity(other.to_string()),
        }
    }
}

/// Outcome of classifying one product spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub spec: ProductRingSpec,
    pub predictions: Predictions,
    pub invariants: Option<GraphInvariants>,
    pub certificates: Option<Certificates>,
    pub witness: Option<SubdivisionWitness>,
    pub status: EntryStatus,
}

impl ClassificationReport {
    /// Agreement flags, recomputed from the stored measurements; `None` for
    /// entries that did not complete.
    pub fn agreement(&self) -> Option<Agreement> {
        let inv = self.invariants.as_ref()?;
        let cert = self.certificates.as_ref()?;
        let n = self.spec.len();
        Some(Agreement {
            universal: inv.universal_vertex_exists == self.predictions.universal,
            planar: inv.planar == self.predictions.planar,
            star: inv.is_star == self.predictions.star,
            counts: cert.formula_vertex_count == inv.vertex_count as u128
                && cert.formula_edge_count == inv.edge_count as u128
                && cert.degrees_match,
            omega: n < 2 || inv.omega == n,
            certificates: cert.extremal_sets_valid && cert.planarity_certified,
        })
    }

    pub fn agrees(&self) -> Option<bool> {
        self.agreement().map(|a| a.all())
    }
}

pub fn predictions(spec: &ProductRingSpec) -> Predictions {
    Predictions {
        planar: predicate_planar(spec),
        universal: predicate_universal(spec),
        star: predicate_star(spec),
    }
}

/// Nonplanar-graph witness: the explicit construction for four or more
/// factors, extraction for graphs within the witness cap, and the explicit
/// two- and three-factor constructions above it.
pub fn nonplanar_witness(
    spec: &ProductRingSpec,
    g: &Graph,
    limits: &Limits,
) -> Option<SubdivisionWitness> {
    match spec.len() {
        n if n >= 4 => construct_k33_witness_max4(spec, g).ok(),
        _ if g.vertex_count() <= limits.witness_cap => extract_witness(g),
        2 => construct_k33_witness_two_factors(spec, g).ok(),
        3 => construct_k33_witness_three_factors(spec, g)
            .or_else(|_| construct_k5_witness_three_factors(spec, g))
            .ok(),
        _ => None,
    }
}

/// Builds Γ(spec), measures every invariant and evaluates the predicates.
pub fn classify(spec: &ProductRingSpec, limits: &Limits) -> ClassificationReport {
    let predictions = predictions(spec);
    let mut report = ClassificationReport {
        spec: spec.clone(),
        predictions,
        invariants: None,
        certificates: None,
        witness: None,
        status: EntryStatus::Ok,
    };
    match measure(spec, limits) {
        Ok((invariants, certificates, witness)) => {
            report.invariants = Some(invariants);
            report.certificates = Some(certificates);
            report.witness = witness;
        }
        Err(e) => report.status = EntryStatus::from_error(e),
    }
    report
}

fn measure(
    spec: &ProductRingSpec,
    limits: &Limits,
) -> Result<(GraphInvariants, Certificates, Option<SubdivisionWitness>)> {
    let g = build_graph(spec, limits)?;
    let degrees_match = spec
        .vertex_codes()
        .iter()
        .enumerate()
        .map(|(v, code)| Ok(vertex_degree(spec, code)? == g.degree(v) as u128))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok);

    let planarity = is_planar_capped(&g, false, limits.witness_cap);
    let (witness, planarity_certified) = match &planarity.embedding {
        Some(rotation) => (None, embedding_is_valid(&g, rotation)),
        None => {
            let w = nonplanar_witness(spec, &g, limits);
            let required = spec.len() >= 4 || g.vertex_count() <= limits.witness_cap;
            let ok = match &w {
                Some(w) => verify_witness(&g, w),
                None => !required,
            };
            (w, ok)
        }
    };

    let clique = max_clique(&g, limits.search_budget)?;
    let independent = max_independent_set(&g, limits.search_budget)?;
    let invariants = GraphInvariants {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        omega: clique.len(),
        alpha: independent.len(),
        degree_sequence: g.degree_sequence(),
        planar: planarity.is_planar(),
        universal_vertex_exists: !g.universal_vertices().is_empty(),
        is_star: g.is_star(),
    };
    let certificates = Certificates {
        formula_vertex_count: vertex_count(spec),
        formula_edge_count: edge_count(spec),
        degrees_match,
        extremal_sets_valid: is_clique(&g, &clique) && is_independent_set(&g, &independent),
        planarity_certified,
    };
    Ok((invariants, certificates, witness))
}

/// Nondecreasing count tuples, `n = 1..=max_factors`, each count in
/// `1..=max_proper_ideals`; ordered by length, then lexicographically.
pub fn canonical_specs(max_factors: usize, max_proper_ideals: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, len: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let start = prefix.last().copied().unwrap_or(1);
        for c in start..=max {
            prefix.push(c);
            extend(prefix, len, max, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_factors {
        extend(&mut Vec::new(), n, max_proper_ideals, &mut out);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_factors: usize,
    pub max_proper_ideals: usize,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds {
            max_factors: 4,
            max_proper_ideals: 5,
        }
    }
}

/// Table engine vs factor model on `Z/n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZmodCheck {
    pub n: u64,
    pub counts: Vec<usize>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub engines_agree: bool,
    pub status: EntryStatus,
}

pub fn check_zmod(n: u64, limits: &Limits) -> ZmodCheck {
    let outcome = FiniteRing::zmod(n, limits).and_then(|ring| {
        let transport = spec_from_ring(&ring, limits)?;
        let (from_ring, from_spec) = engine_pair(&ring, limits)?;
        Ok((transport.spec.counts(), from_ring, from_spec))
    });
    match outcome {
        Ok((counts, a, b)) => ZmodCheck {
            n,
            counts,
            vertex_count: a.vertex_count(),
            edge_count: a.edge_count(),
            engines_agree: a.same_labelled(&b),
            status: EntryStatus::Ok,
        },
        Err(e) => ZmodCheck {
            n,
            counts: Vec::new(),
            vertex_count: 0,
            edge_count: 0,
            engines_agree: false,
            status: EntryStatus::from_error(e),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub reports: Vec<ClassificationReport>,
    pub zmod: Vec<ZmodCheck>,
}

impl SweepOutcome {
    /// True when every completed entry agrees. Capacity-limited entries do
    /// not count against the sweep; invalid zmod inputs do.
    pub fn all_agree(&self) -> bool {
        self.first_disagreement().is_none()
    }

    pub fn first_disagreement(&self) -> Option<String> {
        for r in &self.reports {
            if r.agrees() == Some(false) {
                return Some(format!("spec c={:?}: {:?}", r.spec.counts(), r.agreement()));
            }
        }
        for z in &self.zmod {
            if z.status == EntryStatus::Ok && !z.engines_agree {
                return Some(format!("Z/{}: engines disagree", z.n));
            }
        }
        None
    }

    pub fn aborted(&self) -> bool {
        self.reports
            .iter()
            .any(|r| r.status == EntryStatus::Aborted)
            || self.zmod.iter().any(|z| z.status == EntryStatus::Aborted)
    }
}

/// Classifies every canonical spec within `bounds` and cross-checks the two
/// engines on each `Z/n` in `zmod_list`. Entries run on `workers` threads;
/// results keep canonical order. Once `cancel` is raised, entries that have
/// not started are marked aborted.
pub fn verify_sweep(
    bounds: SweepBounds,
    zmod_list: &[u64],
    limits: &Limits,
    workers: usize,
    cancel: Option<&AtomicBool>,
) -> Result<SweepOutcome> {
    let cancelled = || cancel.is_some_and(|c| c.load(Ordering::Relaxed));
    let specs = canonical_specs(bounds.max_factors, bounds.max_proper_ideals)
        .into_iter()
        .map(|c| ProductRingSpec::from_counts(&c))
        .collect::<Result<Vec<_>>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start workers: {e}")))?;
    Ok(pool.install(|| {
        let reports = specs
            .par_iter()
            .map(|spec| {
                if cancelled() {
                    ClassificationReport {
                        spec: spec.clone(),
                        predictions: predictions(spec),
                        invariants: None,
                        certificates: None,
                        witness: None,
                        status: EntryStatus::Aborted,
                    }
                } else {
                    classify(spec, limits)
                }
            })
            .collect();
        let zmod = zmod_list
            .par_iter()
            .map(|&n| {
                if cancelled() {
                    ZmodCheck {
                        n,
                        counts: Vec::new(),
                        vertex_count: 0,
                        edge_count: 0,
                        engines_agree: false,
                        status: EntryStatus::Aborted,
                    }
                } else {
                    check_zmod(n, limits)
                }
            })
            .collect();
        SweepOutcome { reports, zmod }
    }))
}

fn alpha_of(counts: &[usize], limits: &Limits) -> Result<usize> {
    let g = build_graph(&ProductRingSpec::from_counts(counts)?, limits)?;
    independence_number(&g, limits.search_budget)
}

/// α is nondecreasing when any single count grows, over all canonical specs
/// with `n` factors and counts up to `max_proper_ideals`; for two factors
/// additionally α(K_{c₁,c₂}) = max(c₁, c₂), so a star `K_{1,k}` has α = k.
pub fn alpha_growth_check(n: usize, max_proper_ideals: usize, limits: &Limits) -> Result<bool> {
    let specs: Vec<Vec<usize>> = canonical_specs(n, max_proper_ideals)
        .into_iter()
        .filter(|c| c.len() == n)
        .collect();
    let mut alpha = std::collections::HashMap::new();
    for c in &specs {
        alpha.insert(c.clone(), alpha_of(c, limits)?);
    }
    for c in &specs {
        if n == 2 && alpha[c] != c[0].max(c[1]) {
            return Ok(false);
        }
        for i in 0..n {
            let mut bigger = c.clone();
            bigger[i] += 1;
            if bigger[i] > max_proper_ideals {
                continue;
            }
            bigger.sort_unstable();
            if alpha[c] > alpha[&bigger] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// ω(Γ) equals the number of factors for every canonical spec with at least
/// two factors within the bounds.
pub fn omega_equals_maxspec_check(bounds: SweepBounds, limits: &Limits) -> Result<bool> {
    for c in canonical_specs(bounds.max_factors, bounds.max_proper_ideals) {
        if c.len() < 2 {
            continue;
        }
        let spec = ProductRingSpec::from_counts(&c)?;
        let g = build_graph(&spec, limits)?;
        if crate::graph::clique_number(&g, limits.search_budget)? != c.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
