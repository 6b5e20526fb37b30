//! Subcommand implementations.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use dynamo_core::generate::gn_thresholds;
use dynamo_core::minimize::greedy_shrink;
use dynamo_core::strict_majority::{build_ordering, half_dynamo};
use dynamo_core::{
    bound_report, exact_min_dynamo, generate, is_dynamo, propagate, Budget, Family, Graph, Rational,
    ThresholdAssignment, ThresholdRule, ThresholdStats,
};
use serde::Serialize;

use crate::audit::{parse_checks, parse_range, run_audit, AuditConfig};
use crate::{AuditArgs, BoundsArgs, CliError, CliResult, FindArgs, GenArgs, Outcome, SimulateArgs, ThresholdsArgs};

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn emit<T: Serialize>(value: &T, code: i32) -> CliResult<Outcome> {
    let mut stdout = serde_json::to_string_pretty(value)?;
    stdout.push('\n');
    Ok(Outcome { code, stdout })
}

pub fn read_graph(path: &Path) -> CliResult<Graph> {
    Ok(Graph::parse(&read(path)?)?)
}

/// Resolve `strict-majority | simple-majority | degree | constant:<k> |
/// file:<path>` against a graph.
pub fn resolve_thresholds(rule_text: &str, g: &Graph) -> CliResult<ThresholdAssignment> {
    let tau = match rule_text.strip_prefix("file:") {
        Some(path) => ThresholdAssignment::parse(&read(Path::new(path))?, g.n())?,
        None => {
            let rule: ThresholdRule = rule_text.parse()?;
            ThresholdAssignment::from_rule(g, &rule)?
        }
    };
    tau.check_len(g)?;
    Ok(tau)
}

/// Parse a comma-separated vertex list such as `0,2`. The empty string is
/// the empty set.
pub fn parse_vertex_set(s: &str) -> CliResult<Vec<usize>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad vertex id {t:?} in {s:?}")))
        })
        .collect()
}

fn require<T>(value: Option<T>, flag: &str, family: &str) -> CliResult<T> {
    value.ok_or_else(|| CliError::Usage(format!("family {family} needs --{flag}")))
}

fn family(a: &GenArgs) -> CliResult<Family> {
    let name = a.family.as_str();
    let n = || require(a.n, "n", name);
    Ok(match name {
        "complete" => Family::Complete(n()?),
        "path" => Family::Path(n()?),
        "cycle" => Family::Cycle(n()?),
        "star" => Family::Star(require(a.k.or(a.n), "k", name)?),
        "circulant" => Family::Circulant {
            n: n()?,
            offsets: parse_vertex_set(&require(a.offsets.clone(), "offsets", name)?)?,
        },
        "gnp" => Family::Gnp {
            n: n()?,
            p: require(a.p, "p", name)?,
            seed: a.seed,
        },
        "gn" => Family::Gn(n()?),
        other => {
            return Err(CliError::Usage(format!(
                "unknown family {other:?}; expected complete, path, cycle, star, circulant, gnp or gn"
            )))
        }
    })
}

#[derive(Serialize)]
struct GenOutput {
    family: String,
    n: usize,
    m: usize,
    degree_sequence: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    thresholds_path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<String>,
}

pub fn gen(a: &GenArgs) -> CliResult<Outcome> {
    let fam = family(a)?;
    let g = generate(&fam)?;
    let text = g.render();
    if let Some(path) = &a.out {
        write(path, &text)?;
    }
    if let Some(path) = &a.thresholds_out {
        let Family::Gn(k) = fam else {
            return Err(CliError::Usage("--thresholds-out is only defined for the gn family".into()));
        };
        write(path, &gn_thresholds(&g, k).render())?;
    }
    emit(
        &GenOutput {
            family: a.family.clone(),
            n: g.n(),
            m: g.m(),
            degree_sequence: g.degree_sequence(),
            path: a.out.clone(),
            thresholds_path: a.thresholds_out.clone(),
            graph: a.out.is_none().then_some(text),
        },
        0,
    )
}

#[derive(Serialize)]
struct ThresholdsOutput {
    rule: String,
    n: usize,
    stats: Option<ThresholdStats>,
    respects_degrees: bool,
    forced: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<Vec<usize>>,
}

pub fn thresholds(a: &ThresholdsArgs) -> CliResult<Outcome> {
    let g = read_graph(&a.graph)?;
    let tau = resolve_thresholds(&a.rule, &g)?;
    if let Some(path) = &a.out {
        write(path, &tau.render())?;
    }
    emit(
        &ThresholdsOutput {
            rule: a.rule.clone(),
            n: g.n(),
            stats: tau.stats().ok(),
            respects_degrees: tau.respects_degrees(&g),
            forced: tau.forced_seeds(&g),
            path: a.out.clone(),
            values: a.out.is_none().then(|| tau.values().to_vec()),
        },
        0,
    )
}

pub fn simulate(a: &SimulateArgs) -> CliResult<Outcome> {
    let g = read_graph(&a.graph)?;
    let tau = resolve_thresholds(&a.thresholds, &g)?;
    let seed = parse_vertex_set(&a.seed)?;
    let trace = propagate(&g, &tau, &seed)?;
    emit(&trace, 0)
}

#[derive(Serialize)]
struct Certificate {
    order: Vec<usize>,
    f: Vec<i64>,
    zero_count: usize,
    odd_vertex: bool,
}

/// One ordering per component, concatenated; `f` is indexed by vertex id.
fn certificate(g: &Graph) -> CliResult<Certificate> {
    let mut order = Vec::with_capacity(g.n());
    let mut f = vec![0; g.n()];
    for comp in g.components() {
        let h = g.induced(&comp);
        let cert = build_ordering(&h, None)?;
        order.extend(cert.order.iter().map(|&i| comp[i]));
        for (i, &value) in cert.f.iter().enumerate() {
            f[comp[i]] = value;
        }
    }
    Ok(Certificate {
        zero_count: f.iter().filter(|&&x| x == 0).count(),
        odd_vertex: g.has_odd_vertex(),
        order,
        f,
    })
}

#[derive(Serialize)]
struct FindOutput {
    strategy: String,
    size: usize,
    dynamo: Vec<usize>,
    verified: bool,
    /// Whether the size is known to be the minimum.
    optimal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    propagations: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
}

pub fn find(a: &FindArgs) -> CliResult<Outcome> {
    let g = read_graph(&a.graph)?;
    let tau = resolve_thresholds(&a.thresholds, &g)?;
    let mut propagations = None;
    let mut cert = None;
    let dynamo = match a.strategy.as_str() {
        "ordering" => {
            if tau != ThresholdAssignment::strict_majority(&g) {
                return Err(CliError::Usage("the ordering strategy needs strict-majority thresholds".into()));
            }
            if a.certificate {
                cert = Some(certificate(&g)?);
            }
            half_dynamo(&g)
        }
        "greedy" => greedy_shrink(&g, &tau)?,
        "exact" => {
            let mut budget = a.budget.map_or_else(Budget::unlimited, Budget::new);
            let m = exact_min_dynamo(&g, &tau, &mut budget)?;
            propagations = Some(budget.used());
            m
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown strategy {other:?}; expected ordering, greedy or exact"
            )))
        }
    };
    let verified = is_dynamo(&g, &tau, &dynamo)?;
    emit(
        &FindOutput {
            strategy: a.strategy.clone(),
            size: dynamo.len(),
            optimal: a.strategy == "exact",
            dynamo,
            verified,
            propagations,
            certificate: cert,
        },
        if verified { 0 } else { 1 },
    )
}

#[derive(Serialize)]
struct BoundsOutput {
    #[serde(flatten)]
    report: dynamo_core::BoundReport,
    best_lower: Rational,
    best_upper: Option<Rational>,
}

pub fn bounds(a: &BoundsArgs) -> CliResult<Outcome> {
    let g = read_graph(&a.graph)?;
    let tau = resolve_thresholds(&a.thresholds, &g)?;
    let report = bound_report(&g, &tau, a.heavy)?;
    emit(
        &BoundsOutput {
            best_lower: report.best_lower(),
            best_upper: report.best_upper(),
            report,
        },
        0,
    )
}

pub fn audit(a: &AuditArgs) -> CliResult<Outcome> {
    let config = AuditConfig {
        max_n: a.max_n,
        count: a.count,
        seed: a.seed,
        checks: parse_checks(&a.checks)?,
        n_range: parse_range(&a.n_range)?,
        budget: a.budget,
    };
    let start = Instant::now();
    let report = run_audit(&config)?;
    log::info!(
        "audit: {} instances, {} failures, elapsed {:.2?}",
        report.instances_checked,
        report.failures,
        start.elapsed()
    );
    emit(&report, if report.passed() { 0 } else { 1 })
}
