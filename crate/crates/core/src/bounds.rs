//! Closed-form lower and upper bounds on the minimum dynamo size, evaluated
//! exactly.

use serde::Serialize;

use crate::combinatorics::{chromatic_number, maximum_matching, minimum_vertex_cover};
use crate::error::{Error, Result};
use crate::generate::complete;
use crate::graph::Graph;
use crate::rational::Rational;
use crate::threshold::ThresholdAssignment;

/// `max(0, n(t̄ - ε) / t_M)`, and 0 when every threshold is 0.
///
/// Each vertex outside a dynamo needs `τ(v)` distinct edges towards earlier
/// vertices, so `Σ_{v∉M} τ(v) <= |E|`; bounding `Σ_{v∈M} τ(v)` by `t_M |M|`
/// gives the inequality.
pub fn lower_bound_average(g: &Graph, tau: &ThresholdAssignment) -> Result<Rational> {
    tau.check_len(g)?;
    if g.n() == 0 {
        return Ok(Rational::ZERO);
    }
    let stats = tau.stats()?;
    if stats.max == 0 {
        return Ok(Rational::ZERO);
    }
    Ok(average_form(g, stats.average, stats.max))
}

/// `max(0, n(t̄ - ε) / divisor)`; `divisor > 0`.
fn average_form(g: &Graph, average: Rational, divisor: usize) -> Rational {
    let n = Rational::from(g.n());
    let eps = g.edge_density().expect("non-empty graph");
    (n * (average - eps) / Rational::from(divisor)).clamp_nonneg()
}

/// Largest `k` in `[0, n]` with `Σ_{i=1}^{k} (d_i + 1) <= n·t̄` over the
/// ascending degree sequence.
pub fn upper_bound_degree_sequence(g: &Graph, average: Rational) -> usize {
    let budget = Rational::from(g.n()) * average;
    let mut total = 0usize;
    let mut k = 0;
    for d in g.degree_sequence() {
        total += d + 1;
        if Rational::from(total) > budget {
            break;
        }
        k += 1;
    }
    k
}

/// `K_n` with thresholds averaging exactly `t` whose minimum dynamo has
/// `⌊t⌋` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnWitness {
    pub graph: Graph,
    pub thresholds: ThresholdAssignment,
    pub expected: usize,
}

/// The first `n(t - ⌊t⌋)` vertices get threshold `⌊t⌋ + 1`, the rest `⌊t⌋`.
pub fn kn_witness(n: usize, t: Rational) -> Result<KnWitness> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if t.is_negative() || t > Rational::from(n - 1) {
        return Err(Error::InvalidParameter(format!("t = {t} outside [0, {}]", n - 1)));
    }
    let total = Rational::from(n) * t;
    if !total.is_integer() {
        return Err(Error::InvalidParameter(format!("n·t = {total} is not an integer")));
    }
    let floor = t.floor() as usize;
    let high = (Rational::from(n) * (t - Rational::from(floor))).numer() as usize;
    let values = (0..n).map(|v| if v < high { floor + 1 } else { floor }).collect();
    Ok(KnWitness {
        graph: complete(n),
        thresholds: ThresholdAssignment::new(values),
        expected: floor,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub label: &'static str,
    pub value: Rational,
    pub applicable: bool,
    /// Why the bound does or does not apply to this instance.
    pub reason: String,
    pub citation: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundContext {
    pub n: usize,
    pub m: usize,
    pub edge_density: Rational,
    pub average_threshold: Rational,
    pub max_threshold: usize,
    pub min_threshold: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub respects_degrees: bool,
    pub vertex_cover_number: Option<usize>,
    pub chromatic_number: Option<usize>,
    pub matching_number: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub context: BoundContext,
    pub lower_bounds: Vec<BoundEntry>,
    pub upper_bounds: Vec<BoundEntry>,
}

impl BoundReport {
    /// Largest applicable lower bound.
    pub fn best_lower(&self) -> Rational {
        self.lower_bounds
            .iter()
            .filter(|b| b.applicable)
            .map(|b| b.value)
            .max()
            .unwrap_or(Rational::ZERO)
    }

    /// Smallest applicable upper bound, if any applies.
    pub fn best_upper(&self) -> Option<Rational> {
        self.upper_bounds.iter().filter(|b| b.applicable).map(|b| b.value).min()
    }
}

fn entry(label: &'static str, citation: &'static str, value: Rational, applicable: bool, reason: impl Into<String>) -> BoundEntry {
    BoundEntry {
        label,
        value,
        applicable,
        reason: reason.into(),
        citation,
    }
}

/// Every bound that can be stated for `(g, τ)`. The vertex-cover and
/// chromatic bounds need exponential-time invariants and are only computed
/// when `heavy` is set.
pub fn bound_report(g: &Graph, tau: &ThresholdAssignment, heavy: bool) -> Result<BoundReport> {
    tau.check_len(g)?;
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.n();
    let stats = tau.stats()?;
    let eps = g.edge_density()?;
    let avg = stats.average;
    let respects = tau.respects_degrees(g);
    let max_deg = g.max_degree();
    let min_deg = g.min_degree();
    let premise = |ok: bool, what: &str| -> String {
        if !respects {
            "some threshold exceeds its vertex degree".into()
        } else if ok {
            "premises hold".into()
        } else {
            what.into()
        }
    };

    let cover = heavy.then(|| minimum_vertex_cover(g).len());
    let chi = heavy.then(|| chromatic_number(g));
    let matching = heavy.then(|| maximum_matching(g).len());

    let mut lower = Vec::new();
    lower.push(entry(
        "average-threshold",
        "n(t̄ - ε)/t_M, from Σ_{v∉M} τ(v) <= |E|",
        lower_bound_average(g, tau)?,
        respects,
        premise(true, ""),
    ));
    lower.push(entry(
        "average-threshold-max-degree",
        "n(t̄ - ε)/Δ, weakening t_M <= Δ",
        if max_deg == 0 { Rational::ZERO } else { average_form(g, avg, max_deg) },
        respects && max_deg > 0,
        premise(max_deg > 0, "graph has no edges"),
    ));
    let margin_ok = eps > Rational::ZERO && avg > eps;
    lower.push(entry(
        "density-margin",
        "δ·ε with δ = t̄/ε - 1, using t_M < n",
        if margin_ok { avg - eps } else { Rational::ZERO },
        respects && margin_ok,
        premise(margin_ok, "needs ε > 0 and t̄ > ε"),
    ));
    let odd_regular = g.regular_degree().filter(|d| d % 2 == 1);
    let regular_ok = odd_regular.is_some_and(|d| avg == Rational::from((d - 1) / 2 + 1));
    lower.push(entry(
        "odd-regular",
        "n/(4r+2) on (2r+1)-regular graphs with t̄ = r+1",
        match odd_regular {
            Some(d) => Rational::new(n as i128, (2 * (d - 1) + 2) as i128),
            None => Rational::ZERO,
        },
        respects && regular_ok,
        premise(regular_ok, "needs a (2r+1)-regular graph with t̄ = r+1"),
    ));

    let mut upper = Vec::new();
    upper.push(entry(
        "degree-sequence",
        "max{k : Σ_{i<=k} (d_i + 1) <= n·t̄}",
        Rational::from(upper_bound_degree_sequence(g, avg)),
        respects,
        premise(true, ""),
    ));
    upper.push(entry(
        "min-degree",
        "n·t̄/(δ + 1)",
        Rational::from(n) * avg / Rational::from(min_deg + 1),
        respects,
        premise(true, ""),
    ));
    let no_isolated = !g.has_isolated_vertex();
    match cover {
        Some(beta) => upper.push(entry(
            "vertex-cover",
            "β(G): every vertex cover is a dynamo when τ <= deg",
            Rational::from(beta),
            respects && no_isolated,
            premise(no_isolated, "graph has an isolated vertex"),
        )),
        None => upper.push(entry(
            "vertex-cover",
            "β(G): every vertex cover is a dynamo when τ <= deg",
            Rational::ZERO,
            false,
            "not computed (heavy invariants disabled)",
        )),
    }
    match chi {
        Some(chi) => upper.push(entry(
            "chromatic",
            "n(1 - 1/χ), since β = n - α and n <= α·χ",
            Rational::from(n) * (Rational::ONE - Rational::new(1, chi as i128)),
            respects && no_isolated,
            premise(no_isolated, "graph has an isolated vertex"),
        )),
        None => upper.push(entry(
            "chromatic",
            "n(1 - 1/χ), since β = n - α and n <= α·χ",
            Rational::ZERO,
            false,
            "not computed (heavy invariants disabled)",
        )),
    }

    Ok(BoundReport {
        context: BoundContext {
            n,
            m: g.m(),
            edge_density: eps,
            average_threshold: avg,
            max_threshold: stats.max,
            min_threshold: stats.min,
            max_degree: max_deg,
            min_degree: min_deg,
            respects_degrees: respects,
            vertex_cover_number: cover,
            chromatic_number: chi,
            matching_number: matching,
        },
        lower_bounds: lower,
        upper_bounds: upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    fn find<'a>(list: &'a [BoundEntry], label: &str) -> &'a BoundEntry {
        list.iter().find(|b| b.label == label).unwrap()
    }

    #[test]
    fn average_lower_bound() {
        let k4 = complete(4);
        assert_eq!(
            lower_bound_average(&k4, &ThresholdAssignment::new(vec![1, 2, 3, 3])).unwrap(),
            Rational::ONE
        );
        assert_eq!(lower_bound_average(&k4, &ThresholdAssignment::new(vec![2; 4])).unwrap(), Rational::ONE);
        let p4 = generate(&Family::Path(4)).unwrap();
        assert_eq!(
            lower_bound_average(&p4, &ThresholdAssignment::new(vec![0, 1, 1, 0])).unwrap(),
            Rational::ZERO
        );
        assert_eq!(lower_bound_average(&p4, &ThresholdAssignment::new(vec![0; 4])).unwrap(), Rational::ZERO);
    }

    #[test]
    fn degree_sequence_bound() {
        let p4 = generate(&Family::Path(4)).unwrap();
        assert_eq!(upper_bound_degree_sequence(&p4, Rational::new(3, 2)), 2);
        assert_eq!(upper_bound_degree_sequence(&complete(5), Rational::new(12, 5)), 2);
        assert_eq!(upper_bound_degree_sequence(&p4, Rational::ZERO), 0);
        assert_eq!(upper_bound_degree_sequence(&Graph::empty(3), Rational::ZERO), 0);
    }

    #[test]
    fn witnesses() {
        let w = kn_witness(5, Rational::new(12, 5)).unwrap();
        assert_eq!(w.thresholds.values(), &[3, 3, 2, 2, 2]);
        assert_eq!(w.expected, 2);
        let w = kn_witness(4, Rational::from_int(2)).unwrap();
        assert_eq!(w.thresholds.values(), &[2; 4]);
        let w = kn_witness(4, Rational::new(9, 4)).unwrap();
        assert_eq!(w.thresholds.values(), &[3, 2, 2, 2]);
        assert_eq!(w.thresholds.stats().unwrap().average, Rational::new(9, 4));
        assert!(kn_witness(4, Rational::new(1, 3)).is_err());
        assert!(kn_witness(4, Rational::from_int(4)).is_err());
        assert!(kn_witness(4, Rational::from_int(-1)).is_err());
    }

    #[test]
    fn report_complete_four() {
        let k4 = complete(4);
        let r = bound_report(&k4, &ThresholdAssignment::strict_majority(&k4), false).unwrap();
        assert_eq!(find(&r.lower_bounds, "average-threshold").value, Rational::ONE);
        let reg = find(&r.lower_bounds, "odd-regular");
        assert!(reg.applicable);
        assert_eq!(reg.value, Rational::new(2, 3));
        assert_eq!(find(&r.upper_bounds, "degree-sequence").value, Rational::from_int(2));
        assert_eq!(find(&r.upper_bounds, "min-degree").value, Rational::from_int(2));
        assert!(!find(&r.upper_bounds, "vertex-cover").applicable);
    }

    #[test]
    fn report_cover_bound() {
        let p4 = generate(&Family::Path(4)).unwrap();
        let t = ThresholdAssignment::new(p4.degrees());
        assert_eq!(t.stats().unwrap().average, Rational::from_int(2) * p4.edge_density().unwrap());
        let r = bound_report(&p4, &t, true).unwrap();
        let vc = find(&r.upper_bounds, "vertex-cover");
        assert!(vc.applicable);
        assert_eq!(vc.value, Rational::from_int(2));
        assert_eq!(r.context.vertex_cover_number, Some(2));
    }

    #[test]
    fn report_edgeless() {
        let g = Graph::empty(4);
        let r = bound_report(&g, &ThresholdAssignment::new(vec![0; 4]), true).unwrap();
        for b in r.lower_bounds.iter().chain(&r.upper_bounds) {
            assert!(b.value.is_zero() || !b.applicable, "{b:?}");
        }
    }

    #[test]
    fn report_rejects_empty() {
        assert_eq!(
            bound_report(&Graph::empty(0), &ThresholdAssignment::new(vec![]), false),
            Err(Error::EmptyGraph)
        );
    }
}
