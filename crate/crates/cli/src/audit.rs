//! Randomized and enumerated cross-checks of the library.
//!
//! Each check owns a corpus drawn from its own ChaCha8 stream, keyed by the
//! audit seed and the check name, so selecting a subset of checks never
//! changes the instances any one check sees. Every instance is judged by a
//! pure predicate over `(graph, τ, input)`; a failing instance is recorded
//! in exactly that form and can be re-judged with [`replay`].

use std::fmt;
use std::str::FromStr;

use dynamo_core::bounds::{kn_witness, lower_bound_average, upper_bound_degree_sequence};
use dynamo_core::combinatorics::{
    chromatic_number, independence_number, is_vertex_cover, maximum_matching, minimum_vertex_cover,
};
use dynamo_core::corpus::{connected_cubic_graphs, random_connected, random_degree_respecting};
use dynamo_core::generate::{gn, gn_central_size, gn_thresholds, gnp};
use dynamo_core::minimize::{greedy_shrink_run, ShrinkState};
use dynamo_core::strict_majority::{build_ordering, dynamo_containing, half_dynamo, matching_bound_audit};
use dynamo_core::{
    exact_min_dynamo, is_dynamo, is_minimal, oracle, propagate, verify_trace, Budget, Error, Graph, Rational,
    ThresholdAssignment,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{CliError, CliResult};

/// Largest order on which subset enumeration oracles are run.
const ORACLE_MAX_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Beta,
    Containing,
    Dynamics,
    Gn,
    Greedy,
    Kn,
    Matching,
    Minimal,
    Oracle,
    Ordering,
    Regular,
    Sandwich,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::Beta,
        Check::Containing,
        Check::Dynamics,
        Check::Gn,
        Check::Greedy,
        Check::Kn,
        Check::Matching,
        Check::Minimal,
        Check::Oracle,
        Check::Ordering,
        Check::Regular,
        Check::Sandwich,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Beta => "beta",
            Check::Containing => "containing",
            Check::Dynamics => "dynamics",
            Check::Gn => "gn",
            Check::Greedy => "greedy",
            Check::Kn => "kn",
            Check::Matching => "matching",
            Check::Minimal => "minimal",
            Check::Oracle => "oracle",
            Check::Ordering => "ordering",
            Check::Regular => "regular",
            Check::Sandwich => "sandwich",
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Check::Beta => "with τ = deg, dynamos are exactly the vertex covers and the minimum is β",
            Check::Containing => "even-order connected graphs have a strict-majority dynamo of size <= n/2 through any vertex",
            Check::Dynamics => "propagate agrees with the naive closure and any activation order; traces verify; monotone",
            Check::Gn => "gn(n) size, edge count, explicit dynamo and increasing fraction; exact minimum for small n",
            Check::Greedy => "greedy shrink output is a dynamo, stable under the removal test, within the degree-sequence bound",
            Check::Kn => "minimum dynamo of the complete-graph witness equals ⌊t⌋",
            Check::Matching => "strict-majority minimum <= α' + number of components",
            Check::Minimal => "every minimal dynamo meets the degree-sequence bound",
            Check::Oracle => "matching, vertex cover, independence and chromatic numbers agree with enumeration",
            Check::Ordering => "ordering certificates valid, both halves are dynamos, half dynamo within size cap",
            Check::Regular => "(2r+1)-regular graphs under strict majority need at least n/(4r+2) seeds; n/6 for cubic graphs",
            Check::Sandwich => "average-threshold lower bound <= exact minimum <= degree-sequence bound",
        }
    }

    /// Whether the corpus is enumerated rather than drawn `count` times.
    fn enumerated(self) -> bool {
        matches!(self, Check::Gn | Check::Kn | Check::Regular)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                CliError::Usage(format!("unknown check {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

/// Parse `all` or a comma-separated list of check names.
pub fn parse_checks(s: &str) -> CliResult<Vec<Check>> {
    if s == "all" {
        return Ok(Check::ALL.to_vec());
    }
    let mut checks = s.split(',').map(str::parse).collect::<CliResult<Vec<Check>>>()?;
    checks.sort();
    checks.dedup();
    Ok(checks)
}

/// Parse `lo..hi` or `lo..=hi`, both inclusive.
pub fn parse_range(s: &str) -> CliResult<(usize, usize)> {
    let bad = || CliError::Usage(format!("malformed range {s:?}; expected lo..hi"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditConfig {
    pub max_n: usize,
    pub count: usize,
    pub seed: u64,
    #[serde(serialize_with = "serialize_checks")]
    pub checks: Vec<Check>,
    pub n_range: (usize, usize),
    pub budget: u64,
}

fn serialize_checks<S: serde::Serializer>(checks: &[Check], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(checks.iter().map(|c| c.name()))
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            max_n: 8,
            count: 200,
            seed: 0,
            checks: Check::ALL.to_vec(),
            n_range: (3, 8),
            budget: 5_000_000,
        }
    }
}

/// A failing instance, self-contained enough to be re-judged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    /// The graph in edge-list file format.
    pub graph: String,
    pub thresholds: Vec<usize>,
    /// Check-specific input: a seed set, a vertex, a removal order or a
    /// family parameter.
    pub input: Vec<usize>,
    /// What the library produced on this instance.
    pub witness: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub name: String,
    pub property: String,
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    /// Instances whose exact search ran out of budget.
    pub skipped: usize,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub seed: u64,
    pub config: AuditConfig,
    pub instances_checked: usize,
    pub failures: usize,
    pub skipped: usize,
    /// Sorted by check name.
    pub checks: Vec<CheckSummary>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug)]
struct Instance {
    graph: Graph,
    tau: ThresholdAssignment,
    input: Vec<usize>,
}

impl Instance {
    fn new(graph: Graph, tau: ThresholdAssignment, input: Vec<usize>) -> Self {
        Instance { graph, tau, input }
    }

    fn plain(graph: Graph, tau: ThresholdAssignment) -> Self {
        Instance::new(graph, tau, Vec::new())
    }
}

enum Verdict {
    Pass,
    Fail { detail: String, witness: Vec<usize> },
    Skip,
}

fn fail(detail: impl Into<String>, witness: Vec<usize>) -> Verdict {
    Verdict::Fail {
        detail: detail.into(),
        witness,
    }
}

pub fn run_audit(config: &AuditConfig) -> CliResult<AuditReport> {
    let mut checks = Vec::new();
    for &check in &config.checks {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ fnv1a(check.name()));
        let corpus = build_corpus(check, config, &mut rng)?;
        let mut summary = CheckSummary {
            name: check.name().to_string(),
            property: check.describe().to_string(),
            instances: corpus.len(),
            pass: 0,
            fail: 0,
            skipped: 0,
            counterexample: None,
        };
        for inst in &corpus {
            match judge(check, inst, config.budget) {
                Verdict::Pass => summary.pass += 1,
                Verdict::Skip => summary.skipped += 1,
                Verdict::Fail { detail, witness } => {
                    summary.fail += 1;
                    if summary.counterexample.is_none() {
                        log::warn!("{check}: {detail}");
                        summary.counterexample = Some(Counterexample {
                            check: check.name().to_string(),
                            graph: inst.graph.render(),
                            thresholds: inst.tau.values().to_vec(),
                            input: inst.input.clone(),
                            witness,
                            detail,
                        });
                    }
                }
            }
        }
        log::info!(
            "{check}: {} instances, {} pass, {} fail, {} skipped",
            summary.instances,
            summary.pass,
            summary.fail,
            summary.skipped
        );
        checks.push(summary);
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(AuditReport {
        seed: config.seed,
        config: config.clone(),
        instances_checked: checks.iter().map(|c| c.instances).sum(),
        failures: checks.iter().map(|c| c.fail).sum(),
        skipped: checks.iter().map(|c| c.skipped).sum(),
        checks,
    })
}

/// Re-judge a recorded counterexample from scratch. Returns whether it
/// still fails.
pub fn replay(cx: &Counterexample, budget: u64) -> CliResult<bool> {
    let check: Check = cx.check.parse()?;
    let graph = Graph::parse(&cx.graph)?;
    let tau = ThresholdAssignment::new(cx.thresholds.clone());
    let inst = Instance::new(graph, tau, cx.input.clone());
    Ok(matches!(judge(check, &inst, budget), Verdict::Fail { .. }))
}

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn build_corpus(check: Check, cfg: &AuditConfig, rng: &mut ChaCha8Rng) -> CliResult<Vec<Instance>> {
    if cfg.max_n == 0 && !check.enumerated() {
        return Err(CliError::Usage("--max-n must be positive".into()));
    }
    let cap = |limit: usize| cfg.max_n.min(limit);
    let mut out = Vec::new();
    match check {
        Check::Kn => {
            let (lo, hi) = cfg.n_range;
            for n in lo.max(1)..=hi {
                for j in 0..=n * (n - 1) {
                    let w = kn_witness(n, Rational::new(j as i128, n as i128))?;
                    out.push(Instance::plain(w.graph, w.thresholds));
                }
            }
        }
        Check::Gn => {
            for n in 2..=6 {
                let g = gn(n)?;
                let tau = gn_thresholds(&g, n);
                out.push(Instance::new(g, tau, vec![n]));
            }
        }
        Check::Regular => {
            for n in (4..=cap(10)).step_by(2) {
                for g in connected_cubic_graphs(n) {
                    let tau = ThresholdAssignment::strict_majority(&g);
                    out.push(Instance::plain(g, tau));
                }
            }
        }
        Check::Sandwich => {
            for _ in 0..cfg.count {
                let g = connected(rng, cap(usize::MAX));
                let tau = random_degree_respecting(&g, rng);
                out.push(Instance::plain(g, tau));
            }
        }
        Check::Ordering => {
            for _ in 0..cfg.count {
                let g = connected(rng, cfg.max_n);
                let tau = ThresholdAssignment::strict_majority(&g);
                out.push(Instance::plain(g, tau));
            }
        }
        Check::Greedy | Check::Dynamics => {
            for _ in 0..cfg.count {
                let g = sparse_or_dense(rng, cfg.max_n);
                let tau = any_thresholds(&g, rng);
                let input = if check == Check::Dynamics {
                    (0..g.n()).filter(|_| rng.gen_bool(0.3)).collect()
                } else {
                    Vec::new()
                };
                out.push(Instance::new(g, tau, input));
            }
        }
        Check::Minimal => {
            for _ in 0..cfg.count {
                let g = sparse_or_dense(rng, cfg.max_n);
                let tau = random_degree_respecting(&g, rng);
                let mut order: Vec<usize> = (0..g.n()).collect();
                order.shuffle(rng);
                out.push(Instance::new(g, tau, order));
            }
        }
        Check::Beta => {
            for _ in 0..cfg.count {
                let g = without_isolated(rng, cap(ORACLE_MAX_N));
                let tau = ThresholdAssignment::new(g.degrees());
                out.push(Instance::plain(g, tau));
            }
        }
        Check::Matching | Check::Oracle => {
            for _ in 0..cfg.count {
                let g = sparse_or_dense(rng, cap(12));
                let tau = ThresholdAssignment::strict_majority(&g);
                out.push(Instance::plain(g, tau));
            }
        }
        Check::Containing => {
            if cfg.max_n < 2 {
                return Err(CliError::Usage("the containing check needs --max-n >= 2".into()));
            }
            for _ in 0..cfg.count {
                let n = 2 * rng.gen_range(1..=cap(16) / 2);
                let g = random_connected(n, rng.gen_range(0.0..0.6), rng);
                let v = rng.gen_range(0..n);
                let tau = ThresholdAssignment::strict_majority(&g);
                out.push(Instance::new(g, tau, vec![v]));
            }
        }
    }
    Ok(out)
}

fn connected(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.0..0.6);
    random_connected(n, p, rng)
}

fn sparse_or_dense(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.0..0.8);
    gnp(n, p, rng)
}

fn without_isolated(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n.max(2));
    let g = gnp(n, rng.gen_range(0.1..0.8), rng);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for v in 0..n {
        if g.degree(v) == 0 {
            let mut w = rng.gen_range(0..n - 1);
            if w >= v {
                w += 1;
            }
            edges.push((v.min(w), v.max(w)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, edges).expect("edges are valid")
}

/// Thresholds in `0..=deg + 1`, so forced vertices appear.
fn any_thresholds(g: &Graph, rng: &mut ChaCha8Rng) -> ThresholdAssignment {
    ThresholdAssignment::new((0..g.n()).map(|v| rng.gen_range(0..=g.degree(v) + 1)).collect())
}

fn judge(check: Check, inst: &Instance, budget: u64) -> Verdict {
    let g = &inst.graph;
    let tau = &inst.tau;
    if let Err(e) = tau.check_len(g) {
        return fail(e.to_string(), Vec::new());
    }
    let result = match check {
        Check::Sandwich => judge_sandwich(g, tau, budget),
        Check::Ordering => judge_ordering(g),
        Check::Greedy => judge_greedy(g, tau),
        Check::Minimal => judge_minimal(g, tau, &inst.input),
        Check::Dynamics => judge_dynamics(g, tau, &inst.input),
        Check::Beta => judge_beta(g, tau, budget),
        Check::Kn => judge_kn(g, tau, budget),
        Check::Gn => judge_gn(g, tau, &inst.input, budget),
        Check::Matching => judge_matching(g, budget),
        Check::Regular => judge_regular(g, tau, budget),
        Check::Oracle => judge_oracle(g),
        Check::Containing => judge_containing(g, &inst.input, budget),
    };
    match result {
        Ok(v) => v,
        Err(Error::BudgetExceeded(_)) => Verdict::Skip,
        Err(e) => fail(format!("library error: {e}"), Vec::new()),
    }
}

type Judged = dynamo_core::Result<Verdict>;

fn exact(g: &Graph, tau: &ThresholdAssignment, budget: u64) -> dynamo_core::Result<Vec<usize>> {
    exact_min_dynamo(g, tau, &mut Budget::new(budget))
}

fn judge_sandwich(g: &Graph, tau: &ThresholdAssignment, budget: u64) -> Judged {
    let lower = lower_bound_average(g, tau)?;
    let upper = upper_bound_degree_sequence(g, tau.stats()?.average);
    let m = exact(g, tau, budget)?;
    if !is_dynamo(g, tau, &m)? {
        return Ok(fail("exact result is not a dynamo", m));
    }
    if lower > Rational::from(m.len()) || m.len() > upper {
        return Ok(fail(format!("{lower} <= {} <= {upper} fails", m.len()), m));
    }
    if g.n() <= ORACLE_MAX_N {
        let brute = oracle::min_dynamo_size(g, tau);
        if brute != m.len() {
            return Ok(fail(format!("exact {} but enumeration finds {brute}", m.len()), m));
        }
    }
    Ok(Verdict::Pass)
}

fn judge_ordering(g: &Graph) -> Judged {
    let tau = ThresholdAssignment::strict_majority(g);
    let cert = build_ordering(g, None)?;
    let mut problems = cert.violations(g);
    for (name, set) in [("f >= 0", cert.nonnegative()), ("f <= 0", cert.nonpositive())] {
        if !is_dynamo(g, &tau, &set)? {
            problems.push(format!("{name} half is not a dynamo"));
        }
    }
    let m = half_dynamo(g);
    if !is_dynamo(g, &tau, &m)? {
        problems.push("half dynamo is not a dynamo".into());
    }
    let n = g.n();
    let cap = if g.has_odd_vertex() { n / 2 } else { n.div_ceil(2) };
    if m.len() > cap {
        problems.push(format!("half dynamo has {} > {cap} vertices", m.len()));
    }
    Ok(if problems.is_empty() {
        Verdict::Pass
    } else {
        fail(problems.join("; "), m)
    })
}

fn judge_greedy(g: &Graph, tau: &ThresholdAssignment) -> Judged {
    let run = greedy_shrink_run(g, tau)?;
    let m = run.dynamo;
    let mut current: Vec<bool> = vec![true; g.n()];
    for &v in &run.removed {
        current[v] = false;
        let set: Vec<usize> = (0..g.n()).filter(|&w| current[w]).collect();
        if !is_dynamo(g, tau, &set)? {
            return Ok(fail(format!("not a dynamo after removing {v}"), set));
        }
    }
    if !is_dynamo(g, tau, &m)? {
        return Ok(fail("result is not a dynamo", m));
    }
    let fresh = ShrinkState::new(g, tau, &m)?;
    if let Some(&v) = m.iter().find(|&&v| fresh.removable_by_claim(v)) {
        return Ok(fail(format!("vertex {v} still passes the removal test"), m));
    }
    let bound = upper_bound_degree_sequence(g, tau.stats()?.average);
    if tau.respects_degrees(g) && m.len() > bound {
        return Ok(fail(format!("size {} exceeds bound {bound}", m.len()), m));
    }
    Ok(Verdict::Pass)
}

fn judge_minimal(g: &Graph, tau: &ThresholdAssignment, order: &[usize]) -> Judged {
    let mut set: Vec<usize> = (0..g.n()).collect();
    for &v in order {
        let smaller: Vec<usize> = set.iter().copied().filter(|&w| w != v).collect();
        if is_dynamo(g, tau, &smaller)? {
            set = smaller;
        }
    }
    if !is_minimal(g, tau, &set)? {
        return Ok(fail("pruned dynamo is not minimal", set));
    }
    let bound = upper_bound_degree_sequence(g, tau.stats()?.average);
    if tau.respects_degrees(g) && set.len() > bound {
        return Ok(fail(format!("minimal dynamo of size {} exceeds bound {bound}", set.len()), set));
    }
    Ok(Verdict::Pass)
}

fn judge_dynamics(g: &Graph, tau: &ThresholdAssignment, seed: &[usize]) -> Judged {
    let trace = propagate(g, tau, seed)?;
    let active = trace.activated();
    if !verify_trace(g, tau, &trace.rounds)? {
        return Ok(fail("trace does not verify", active));
    }
    let closure = oracle::naive_closure(g, tau, seed);
    let expected: Vec<usize> = (0..g.n()).filter(|&v| closure[v]).collect();
    if active != expected {
        return Ok(fail(format!("closure differs from naive closure {expected:?}"), active));
    }
    if trace.complete != (expected.len() == g.n()) {
        return Ok(fail("complete flag disagrees with the closure", active));
    }
    if g.n() <= 12 && trace.complete != oracle::some_order_activates_all(g, tau, seed) {
        return Ok(fail("sequential activation orders disagree", active));
    }
    if trace.complete {
        for v in 0..g.n() {
            let mut bigger = seed.to_vec();
            bigger.push(v);
            if !is_dynamo(g, tau, &bigger)? {
                return Ok(fail(format!("adding {v} to a dynamo breaks it"), bigger));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn judge_beta(g: &Graph, tau: &ThresholdAssignment, budget: u64) -> Judged {
    if g.has_isolated_vertex() || tau.values() != g.degrees().as_slice() {
        return Ok(fail("instance must have τ = deg and no isolated vertex", Vec::new()));
    }
    if g.n() <= 8 {
        for set in oracle::all_subsets(g.n()) {
            if is_dynamo(g, tau, &set)? != is_vertex_cover(g, &set) {
                return Ok(fail("dynamo and vertex cover disagree", set));
            }
        }
    }
    let m = exact(g, tau, budget)?;
    let beta = minimum_vertex_cover(g).len();
    let brute = oracle::vertex_cover_number(g);
    if m.len() != beta || beta != brute {
        return Ok(fail(format!("exact {} vs β {beta} vs enumeration {brute}", m.len()), m));
    }
    Ok(Verdict::Pass)
}

fn judge_kn(g: &Graph, tau: &ThresholdAssignment, budget: u64) -> Judged {
    let n = g.n();
    if n == 0 || g.m() != n * (n - 1) / 2 {
        return Ok(fail("instance is not a complete graph", Vec::new()));
    }
    let t = tau.stats()?.average;
    let witness = kn_witness(n, t)?;
    if witness.thresholds != *tau {
        return Ok(fail(format!("τ is not the witness assignment for t = {t}"), Vec::new()));
    }
    let m = exact(g, tau, budget)?;
    let floor = t.floor() as usize;
    if m.len() != floor || witness.expected != floor {
        return Ok(fail(format!("exact {} but ⌊t⌋ = {floor}", m.len()), m));
    }
    Ok(Verdict::Pass)
}

fn judge_gn(g: &Graph, tau: &ThresholdAssignment, input: &[usize], budget: u64) -> Judged {
    let Some(&n) = input.first() else {
        return Ok(fail("missing family parameter", Vec::new()));
    };
    let c = gn_central_size(n);
    let expected_n = c + n * (c - 1);
    let expected_m = (n.pow(3) - n) * (n * n - n - 1);
    if g.n() != expected_n || g.m() != expected_m {
        return Ok(fail(
            format!("|V| = {}, |E| = {}, expected {expected_n}, {expected_m}", g.n(), g.m()),
            Vec::new(),
        ));
    }
    if !tau.respects_degrees(g) {
        return Ok(fail("thresholds exceed degrees", Vec::new()));
    }
    let claimed = (c - 1) * (n - 1);
    let explicit: Vec<usize> = (0..c - 1).flat_map(|k| (0..n - 1).map(move |i| c + k * n + i)).collect();
    if !is_dynamo(g, tau, &explicit)? {
        return Ok(fail("n - 1 vertices per copy do not form a dynamo", explicit));
    }
    let run = greedy_shrink_run(g, tau)?;
    if !is_dynamo(g, tau, &run.dynamo)? || run.dynamo.len() < claimed {
        return Ok(fail(format!("greedy dynamo of size {} below {claimed}", run.dynamo.len()), run.dynamo));
    }
    if n <= 3 {
        let m = exact(g, tau, budget)?;
        if m.len() != claimed {
            return Ok(fail(format!("exact minimum {} != {claimed}", m.len()), m));
        }
    }
    let ratio = |k: usize| {
        let c = gn_central_size(k);
        Rational::new(((c - 1) * (k - 1)) as i128, (c + k * (c - 1)) as i128)
    };
    if ratio(n) >= ratio(n + 1) {
        return Ok(fail(format!("fraction {} does not increase to {}", ratio(n), ratio(n + 1)), Vec::new()));
    }
    Ok(Verdict::Pass)
}

fn judge_matching(g: &Graph, budget: u64) -> Judged {
    let audit = matching_bound_audit(g, &mut Budget::new(budget))?;
    if audit.holds && audit.min_dynamo <= audit.matching_number + audit.components {
        return Ok(Verdict::Pass);
    }
    Ok(fail(
        format!(
            "minimum {} > α' {} + c {}",
            audit.min_dynamo, audit.matching_number, audit.components
        ),
        Vec::new(),
    ))
}

fn judge_regular(g: &Graph, tau: &ThresholdAssignment, budget: u64) -> Judged {
    let Some(d) = g.regular_degree().filter(|d| d % 2 == 1) else {
        return Ok(fail("instance is not odd-regular", Vec::new()));
    };
    if *tau != ThresholdAssignment::strict_majority(g) {
        return Ok(fail("thresholds are not strict majority", Vec::new()));
    }
    let m = exact(g, tau, budget)?;
    // d = 2r + 1, so n/(4r + 2) = n/(2d)
    let bound = Rational::new(g.n() as i128, (2 * d) as i128);
    if Rational::from(m.len()) < bound {
        return Ok(fail(format!("minimum {} < {bound}", m.len()), m));
    }
    Ok(Verdict::Pass)
}

fn judge_oracle(g: &Graph) -> Judged {
    let n = g.n();
    let matching = maximum_matching(g);
    let cover = minimum_vertex_cover(g);
    let beta = oracle::vertex_cover_number(g);
    let alpha = oracle::independence_number(g);
    let chi = chromatic_number(g);
    let mut problems = Vec::new();
    if !matching.is_valid(g) || matching.len() != oracle::matching_number(g) {
        problems.push("maximum matching");
    }
    if !cover.covers(g) || cover.len() != beta {
        problems.push("minimum vertex cover");
    }
    if independence_number(g) != alpha || alpha + beta != n {
        problems.push("independence number");
    }
    if matching.len() > beta || beta > 2 * matching.len() {
        problems.push("α' <= β <= 2α'");
    }
    if alpha * chi < n || chi > g.max_degree() + 1 || (g.m() > 0) != (chi >= 2) {
        problems.push("chromatic number");
    }
    Ok(if problems.is_empty() {
        Verdict::Pass
    } else {
        fail(problems.join(", "), cover.vertices)
    })
}

fn judge_containing(g: &Graph, input: &[usize], budget: u64) -> Judged {
    let Some(&v) = input.first() else {
        return Ok(fail("missing vertex", Vec::new()));
    };
    let tau = ThresholdAssignment::strict_majority(g);
    let m = dynamo_containing(g, v, &mut Budget::new(budget))?;
    if !m.contains(&v) || 2 * m.len() > g.n() || !is_dynamo(g, &tau, &m)? {
        return Ok(fail(format!("bad dynamo through {v}"), m));
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..8").unwrap(), (3, 8));
        assert_eq!(parse_range("3..=8").unwrap(), (3, 8));
        assert!(parse_range("8..3").is_err());
        assert!(parse_range("3-8").is_err());
    }

    #[test]
    fn check_lists_are_sorted_and_deduplicated() {
        assert_eq!(parse_checks("sandwich,kn,kn").unwrap(), vec![Check::Kn, Check::Sandwich]);
        assert_eq!(parse_checks("all").unwrap().len(), Check::ALL.len());
    }

    #[test]
    fn corrupted_instances_fail_on_replay() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let cx = Counterexample {
            check: "dynamics".into(),
            graph: p4.render(),
            thresholds: vec![1, 2, 2, 1],
            input: vec![7],
            witness: Vec::new(),
            detail: String::new(),
        };
        assert!(replay(&cx, 1000).unwrap());
        let cx = Counterexample {
            check: "kn".into(),
            graph: p4.render(),
            thresholds: vec![1, 1, 1, 1],
            ..cx
        };
        assert!(replay(&cx, 1000).unwrap());
    }

    #[test]
    fn sound_instances_pass_on_replay() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let cx = Counterexample {
            check: "dynamics".into(),
            graph: p4.render(),
            thresholds: vec![1, 2, 2, 1],
            input: vec![0, 2],
            witness: Vec::new(),
            detail: String::new(),
        };
        assert!(!replay(&cx, 1000).unwrap());
    }

    #[test]
    fn tiny_budgets_skip_rather_than_fail() {
        let config = AuditConfig {
            max_n: 8,
            count: 20,
            seed: 3,
            checks: vec![Check::Sandwich],
            n_range: (3, 4),
            budget: 1,
        };
        let report = run_audit(&config).unwrap();
        assert_eq!(report.failures, 0);
        assert!(report.skipped > 0);
    }
}
