//! Command-line front end.
//!
//! Exit status: 0 success, 1 theorem disagreement or failed certificate,
//! 2 usage, configuration or I/O error, 3 capacity or budget abort (an
//! interrupted sweep also exits 3).

pub mod atlas;
pub mod config;
pub mod source;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::AtomicBool;

use clap::{Args, Parser, Subcommand};

use crate::factor::{build_graph, spec_from_ring};
use crate::graph::{
    clique_number, export, independence_number, is_planar_capped, verify_witness, ExportFormat,
};
use crate::ring::{comaximal_graph_of, enumerate_ideals, idempotents};
use crate::theorems::{
    nonplanar_witness, predicate_planar_as_stated, predictions, verify_sweep, Agreement,
    EntryStatus, SweepOutcome,
};
use crate::{Error, Graph, Limits, ProductRingSpec, SubdivisionWitness, WitnessKind};

pub use config::{ConfigError, SweepConfig};
pub use source::RingSource;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "comaximal",
    version,
    about = "Co-maximal ideal graphs of finite commutative rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ideal structure of a ring.
    Ring(SourceArgs),
    /// Export Γ(R) as DOT or JSON.
    Graph {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "dot")]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariants of Γ(R) next to the predicted classification.
    Invariants {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        planar: bool,
        #[arg(long)]
        omega: bool,
        #[arg(long)]
        alpha: bool,
        /// Print a Kuratowski witness when Γ(R) is nonplanar.
        #[arg(long)]
        witness: bool,
    },
    /// Run the classification sweep and report agreement.
    Verify { config: Option<PathBuf> },
    /// Run the sweep and write a JSON-lines atlas.
    Atlas {
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// The ring Z/N.
    #[arg(long, value_name = "N")]
    zmod: Option<u64>,
    /// F_P[x]/(f), coefficients of f constant term first.
    #[arg(long, value_name = "P:C0,C1,...")]
    poly: Option<String>,
    /// Direct product, e.g. `zmod:4*poly:2:1,1,1`.
    #[arg(long, value_name = "EXPR")]
    ring: Option<RingSource>,
    /// Product of local factors with the given proper-ideal counts.
    #[arg(long, value_name = "C1,C2,...", value_delimiter = ',')]
    factors: Option<Vec<usize>>,
}

/// Where a graph came from.
enum Built {
    Ring {
        label: String,
        spec: ProductRingSpec,
        graph: Graph,
        code_labels: Vec<String>,
    },
    Factors {
        spec: ProductRingSpec,
        graph: Graph,
    },
}

impl Built {
    fn spec(&self) -> &ProductRingSpec {
        match self {
            Built::Ring { spec, .. } | Built::Factors { spec, .. } => spec,
        }
    }

    fn graph(&self) -> &Graph {
        match self {
            Built::Ring { graph, .. } | Built::Factors { graph, .. } => graph,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_capacity() {
                EXIT_CAPACITY
            } else {
                EXIT_USAGE
            },
            message: e.to_string(),
        }
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        usage(e.0)
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    usage(format!("cannot write {}: {e}", path.display()))
}

type CmdResult = std::result::Result<i32, Failure>;

type AgreementFlag = fn(&Agreement) -> bool;

/// Parses `args` (program name first), runs the command and returns the
/// exit status. `cancel` interrupts sweeps when raised.
pub fn run<I, T>(
    args: I,
    out: &mut dyn Write,
    err: &mut dyn Write,
    cancel: Option<&AtomicBool>,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, cancel) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn env_lookup(key: &str) -> Option<String> {
    std::env::var(key).ok()
}

fn load_config(path: Option<&Path>) -> std::result::Result<SweepConfig, Failure> {
    let mut config = match path {
        Some(p) => SweepConfig::load(p)?,
        None => SweepConfig::default(),
    };
    config.apply_env(env_lookup)?;
    Ok(config)
}

fn dispatch(command: Command, out: &mut dyn Write, cancel: Option<&AtomicBool>) -> CmdResult {
    match command {
        Command::Ring(source) => {
            let limits = load_config(None)?.limits();
            cmd_ring(&source, &limits, out)
        }
        Command::Graph {
            source,
            format,
            out: path,
        } => {
            let limits = load_config(None)?.limits();
            cmd_graph(&source, format, path.as_deref(), &limits, out)
        }
        Command::Invariants {
            source,
            planar,
            omega,
            alpha,
            witness,
        } => {
            let limits = load_config(None)?.limits();
            let all = !(planar || omega || alpha || witness);
            let wanted = Wanted {
                planar: all || planar || witness,
                omega: all || omega,
                alpha: all || alpha,
                witness,
                classes: all,
            };
            cmd_invariants(&source, wanted, &limits, out)
        }
        Command::Verify { config } => {
            let config = load_config(config.as_deref())?;
            cmd_verify(&config, cancel, out)
        }
        Command::Atlas { config, out: path } => {
            let config = load_config(config.as_deref())?;
            let path = path.or_else(|| config.output.atlas.clone());
            cmd_atlas(&config, path.as_deref(), cancel, out)
        }
    }
}

fn ring_source(source: &SourceArgs) -> std::result::Result<Option<RingSource>, Failure> {
    if let Some(n) = source.zmod {
        return Ok(Some(RingSource(vec![source::SourceItem::Zmod(n)])));
    }
    if let Some(text) = &source.poly {
        let (p, coeffs) = source::parse_poly(text).map_err(usage)?;
        return Ok(Some(RingSource(vec![source::SourceItem::Poly {
            p,
            coeffs,
        }])));
    }
    Ok(source.ring.clone())
}

fn build(source: &SourceArgs, limits: &Limits) -> std::result::Result<Built, Failure> {
    match ring_source(source)? {
        Some(rs) => {
            let ring = rs.build(limits)?;
            let lattice = enumerate_ideals(&ring, limits)?;
            let graph = comaximal_graph_of(&ring, &lattice)?;
            let transport = spec_from_ring(&ring, limits)?;
            let code_labels = lattice
                .vertex_indices()
                .into_iter()
                .map(|k| transport.code_of_ideal(lattice.ideal(k)).map(|c| c.label()))
                .collect::<crate::Result<Vec<_>>>()?;
            Ok(Built::Ring {
                label: ring.label().to_string(),
                spec: transport.spec,
                graph,
                code_labels,
            })
        }
        None => {
            let counts = source.factors.as_deref().unwrap_or_default();
            let spec = ProductRingSpec::from_counts(counts)?;
            let graph = build_graph(&spec, limits)?;
            Ok(Built::Factors { spec, graph })
        }
    }
}

fn fmt_counts(spec: &ProductRingSpec) -> String {
    let parts: Vec<String> = spec.counts().iter().map(|c| c.to_string()).collect();
    format!("c=({})", parts.join(","))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_ring(source: &SourceArgs, limits: &Limits, out: &mut dyn Write) -> CmdResult {
    let rs = ring_source(source)?.ok_or_else(|| usage("ring needs --zmod, --poly or --ring"))?;
    let ring = rs.build(limits)?;
    let lattice = enumerate_ideals(&ring, limits)?;
    let transport = spec_from_ring(&ring, limits)?;
    let graph = comaximal_graph_of(&ring, &lattice)?;

    let mut maximal: Vec<&str> = lattice
        .maximal_indices()
        .iter()
        .map(|&k| lattice.label(k))
        .collect();
    maximal.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));

    let mut text = String::new();
    text += &format!("ring: {}\n", ring.label());
    text += &format!("order: {}\n", ring.order());
    text += &format!("ideals: {}\n", lattice.len());
    text += &format!("maximal: {{{}}}\n", maximal.join(","));
    text += &format!("J={}\n", lattice.label(lattice.jacobson_index()));
    text += &format!("local: {}\n", yes_no(lattice.is_local()));
    text += &format!("idempotents: {}\n", idempotents(&ring).len());
    text += &format!("factors: {}\n", fmt_counts(&transport.spec));
    if graph.vertex_count() == 0 {
        text += "Γ: empty\n";
    } else {
        text += &format!(
            "Γ: {} vertices, {} edges\n",
            graph.vertex_count(),
            graph.edge_count()
        );
    }
    out.write_all(text.as_bytes())
        .map_err(|e| usage(e.to_string()))?;
    Ok(EXIT_OK)
}

fn cmd_graph(
    source: &SourceArgs,
    format: ExportFormat,
    path: Option<&Path>,
    limits: &Limits,
    out: &mut dyn Write,
) -> CmdResult {
    let built = build(source, limits)?;
    let bytes = export(built.graph(), format);
    write_output(path, &bytes, out)?;
    Ok(EXIT_OK)
}

fn write_output(
    path: Option<&Path>,
    bytes: &[u8],
    out: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| io_failure(p, e)),
        None => out.write_all(bytes).map_err(|e| usage(e.to_string())),
    }
}

#[derive(Debug, Clone, Copy)]
struct Wanted {
    planar: bool,
    omega: bool,
    alpha: bool,
    witness: bool,
    classes: bool,
}

fn agreement_line(name: &str, actual: bool, predicted: bool) -> String {
    format!(
        "{name}: {}; predicted: {}; {}\n",
        yes_no(actual),
        yes_no(predicted),
        if actual == predicted {
            "agree"
        } else {
            "DISAGREE"
        }
    )
}

/// Witness on the ring graph, transported from the factor graph when the
/// source is a ring.
fn witness_for(
    built: &Built,
    limits: &Limits,
) -> std::result::Result<Option<SubdivisionWitness>, Failure> {
    match built {
        Built::Factors { spec, graph } => Ok(nonplanar_witness(spec, graph, limits)),
        Built::Ring {
            spec,
            graph,
            code_labels,
            ..
        } => {
            let factor_graph = build_graph(spec, limits)?;
            let Some(w) = nonplanar_witness(spec, &factor_graph, limits) else {
                return Ok(None);
            };
            let to_ring = |v: usize| {
                let label = factor_graph.label(v);
                code_labels
                    .iter()
                    .position(|l| l == label)
                    .expect("transport covers every vertex")
            };
            let mapped = SubdivisionWitness {
                kind: w.kind,
                branch_vertices: w.branch_vertices.iter().map(|&v| to_ring(v)).collect(),
                paths: w
                    .paths
                    .iter()
                    .map(|p| p.iter().map(|&v| to_ring(v)).collect())
                    .collect(),
            };
            debug_assert_eq!(graph.vertex_count(), code_labels.len());
            Ok(Some(mapped))
        }
    }
}

fn witness_text(g: &Graph, w: &SubdivisionWitness, max4_roles: bool) -> String {
    let names = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>();
    let mut text = format!(
        "witness: {} ({})\n",
        w.kind,
        if verify_witness(g, w) {
            "verified"
        } else {
            "INVALID"
        }
    );
    match w.kind {
        WitnessKind::K33 => {
            let branch = names(&w.branch_vertices);
            if max4_roles {
                let roles = ["m1", "m2", "m1m2", "m3", "m4", "m3m4"];
                let tagged: Vec<String> = roles
                    .iter()
                    .zip(&branch)
                    .map(|(r, l)| format!("{r}={l}"))
                    .collect();
                text += &format!("  side A: {}\n", tagged[..3].join(" "));
                text += &format!("  side B: {}\n", tagged[3..].join(" "));
            } else {
                text += &format!("  side A: {}\n", branch[..3].join(" "));
                text += &format!("  side B: {}\n", branch[3..].join(" "));
            }
        }
        WitnessKind::K5 => {
            text += &format!("  branch: {}\n", names(&w.branch_vertices).join(" "));
        }
    }
    for p in &w.paths {
        text += &format!("  path: {}\n", names(p).join(" -- "));
    }
    text
}

fn cmd_invariants(
    source: &SourceArgs,
    wanted: Wanted,
    limits: &Limits,
    out: &mut dyn Write,
) -> CmdResult {
    let built = build(source, limits)?;
    let spec = built.spec();
    let g = built.graph();
    let predicted = predictions(spec);
    let mut code = EXIT_OK;
    let mut text = String::new();

    if let Built::Ring { label, .. } = &built {
        text += &format!("ring: {label}\n");
    }
    text += &format!("factors: {}\n", fmt_counts(spec));
    text += &format!("vertices: {}\n", g.vertex_count());
    text += &format!("edges: {}\n", g.edge_count());

    if wanted.planar {
        let result = is_planar_capped(g, false, limits.witness_cap);
        let planar = result.embedding.is_some();
        text += &agreement_line("planar", planar, predicted.planar);
        if planar != predicted.planar {
            code = code.max(EXIT_DISAGREE);
        }
        if wanted.witness && !planar {
            match witness_for(&built, limits)? {
                Some(w) => {
                    if !verify_witness(g, &w) {
                        code = code.max(EXIT_DISAGREE);
                    }
                    text += &witness_text(g, &w, spec.len() >= 4);
                }
                None => text += "witness: unavailable\n",
            }
        }
    }

    let mut numbers = Vec::new();
    if wanted.omega {
        match clique_number(g, limits.search_budget) {
            Ok(w) => numbers.push(format!("ω={w}")),
            Err(e) => {
                numbers.push(format!("ω: {e}"));
                code = code.max(EXIT_CAPACITY);
            }
        }
    }
    if wanted.alpha {
        match independence_number(g, limits.search_budget) {
            Ok(a) => numbers.push(format!("α={a}")),
            Err(e) => {
                numbers.push(format!("α: {e}"));
                code = code.max(EXIT_CAPACITY);
            }
        }
    }
    if !numbers.is_empty() {
        text += &numbers.join(" ");
        text.push('\n');
    }

    if wanted.classes {
        let universal = !g.universal_vertices().is_empty();
        let star = g.is_star();
        text += &agreement_line("universal vertex", universal, predicted.universal);
        text += &agreement_line("star", star, predicted.star);
        if universal != predicted.universal || star != predicted.star {
            code = code.max(EXIT_DISAGREE);
        }
    }

    out.write_all(text.as_bytes())
        .map_err(|e| usage(e.to_string()))?;
    Ok(code)
}

fn run_sweep(
    config: &SweepConfig,
    cancel: Option<&AtomicBool>,
) -> std::result::Result<SweepOutcome, Failure> {
    Ok(verify_sweep(
        config.bounds(),
        &config.zmod_list,
        &config.limits(),
        config.workers,
        cancel,
    )?)
}

fn sweep_status(outcome: &SweepOutcome) -> i32 {
    if !outcome.all_agree() {
        EXIT_DISAGREE
    } else if outcome.aborted() {
        EXIT_CAPACITY
    } else {
        EXIT_OK
    }
}

/// Per-theorem summary lines.
pub fn summary(outcome: &SweepOutcome) -> String {
    let agreements: Vec<_> = outcome
        .reports
        .iter()
        .filter_map(|r| r.agreement())
        .collect();
    let completed = agreements.len();
    let count = |f: fn(&Agreement) -> bool| agreements.iter().filter(|a| f(a)).count();
    let status_count = |s: &str| {
        outcome
            .reports
            .iter()
            .filter(|r| r.status.as_str() == s)
            .count()
    };

    let mut text = format!(
        "specs: {} (completed {}, capacity {}, budget {}, aborted {})\n",
        outcome.reports.len(),
        completed,
        status_count("capacity"),
        status_count("budget"),
        status_count("aborted"),
    );
    let rows: [(&str, AgreementFlag); 6] = [
        ("universal vertex", |a| a.universal),
        ("planarity", |a| a.planar),
        ("star", |a| a.star),
        ("closed-form counts", |a| a.counts),
        ("clique number", |a| a.omega),
        ("certificates", |a| a.certificates),
    ];
    for (name, f) in rows {
        text += &format!("{name}: {}/{} agree\n", count(f), completed);
    }
    let stated: Vec<_> = outcome
        .reports
        .iter()
        .filter_map(|r| r.invariants.as_ref().map(|inv| (r, inv.planar)))
        .collect();
    let counterexamples: Vec<String> = stated
        .iter()
        .filter(|(r, planar)| *planar != predicate_planar_as_stated(&r.spec))
        .map(|(r, _)| fmt_counts(&r.spec))
        .collect();
    text += &format!(
        "planarity, three-factor case as commonly stated: {}/{} agree",
        stated.len() - counterexamples.len(),
        stated.len()
    );
    if counterexamples.is_empty() {
        text.push('\n');
    } else {
        text += &format!(" (counterexamples: {})\n", counterexamples.join(" "));
    }
    let zmod_done: Vec<_> = outcome
        .zmod
        .iter()
        .filter(|z| z.status == EntryStatus::Ok)
        .collect();
    text += &format!(
        "zmod engines: {}/{} agree ({} skipped)\n",
        zmod_done.iter().filter(|z| z.engines_agree).count(),
        zmod_done.len(),
        outcome.zmod.len() - zmod_done.len(),
    );
    text
}

fn cmd_verify(config: &SweepConfig, cancel: Option<&AtomicBool>, out: &mut dyn Write) -> CmdResult {
    let outcome = run_sweep(config, cancel)?;
    let mut text = summary(&outcome);
    let code = sweep_status(&outcome);
    if let Some(first) = outcome.first_disagreement() {
        text += &format!("first disagreement: {first}\n");
    }
    text += match code {
        EXIT_OK => "result: all agree\n",
        EXIT_DISAGREE => "result: DISAGREEMENT\n",
        _ => "result: interrupted\n",
    };
    out.write_all(text.as_bytes())
        .map_err(|e| usage(e.to_string()))?;
    Ok(code)
}

fn cmd_atlas(
    config: &SweepConfig,
    path: Option<&Path>,
    cancel: Option<&AtomicBool>,
    out: &mut dyn Write,
) -> CmdResult {
    if let Some(p) = path {
        std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(p)
            .map_err(|e| io_failure(p, e))?;
    }
    let outcome = run_sweep(config, cancel)?;
    write_output(path, atlas::render(&outcome).as_bytes(), out)?;
    Ok(sweep_status(&outcome))
}
