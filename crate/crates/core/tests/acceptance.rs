//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line;
//! run with `cargo test -p dynamo-core --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use dynamo_core::bounds::{kn_witness, lower_bound_average, upper_bound_degree_sequence};
use dynamo_core::combinatorics::{is_vertex_cover, maximum_matching, minimum_vertex_cover};
use dynamo_core::corpus::{all_graphs_up_to_iso, connected_cubic_graphs, random_connected, random_degree_respecting};
use dynamo_core::generate::{gn, gn_thresholds, gnp};
use dynamo_core::minimize::{exact_min_dynamo, greedy_shrink, Budget};
use dynamo_core::strict_majority::{build_ordering, half_dynamo};
use dynamo_core::{is_dynamo, oracle, Graph, Rational, ThresholdAssignment};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, what: &str, checked: usize, failures: &[String], elapsed: Duration, limit: Option<Duration>) {
    let slow = limit.is_some_and(|l| elapsed >= l);
    let status = if failures.is_empty() && !slow { "PASS" } else { "FAIL" };
    println!(
        "criterion {id}: {status} {what}: {checked} checked, {} violations, {:.2?}{}",
        failures.len(),
        elapsed,
        limit.map(|l| format!(" (limit {l:?})")).unwrap_or_default()
    );
    for f in failures.iter().take(5) {
        println!("    counterexample: {f}");
    }
    assert!(failures.is_empty(), "criterion {id} has violations");
    assert!(!slow, "criterion {id} exceeded its time limit");
}

fn exact(g: &Graph, tau: &ThresholdAssignment) -> usize {
    exact_min_dynamo(g, tau, &mut Budget::unlimited()).unwrap().len()
}

fn sandwich_corpus() -> Vec<(Graph, ThresholdAssignment)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a4d);
    let mut out = Vec::new();
    for _ in 0..6000 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.0..0.8);
        let g = random_connected(n, p, &mut rng);
        let tau = random_degree_respecting(&g, &mut rng);
        out.push((g, tau));
    }
    for n in 1..=6 {
        for g in all_graphs_up_to_iso(n).into_iter().filter(Graph::is_connected) {
            for _ in 0..3 {
                let tau = random_degree_respecting(&g, &mut rng);
                out.push((g.clone(), tau));
            }
        }
    }
    out
}

fn ordering_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0bde);
    (0..1000)
        .map(|_| {
            let n = rng.gen_range(1..=40);
            let p = rng.gen_range(0.0..0.3);
            random_connected(n, p, &mut rng)
        })
        .collect()
}

#[test]
fn criterion_1_sandwich() {
    let start = Instant::now();
    let corpus = sandwich_corpus();
    let mut failures = Vec::new();
    for (g, tau) in &corpus {
        let lower = lower_bound_average(g, tau).unwrap();
        let size = exact(g, tau);
        let upper = upper_bound_degree_sequence(g, tau.stats().unwrap().average);
        if lower > Rational::from(size) || size > upper {
            failures.push(format!("{:?} τ={:?}: {lower} <= {size} <= {upper} fails", g.render(), tau.values()));
        }
    }
    report(1, "lower_bound_average <= exact <= degree-sequence bound", corpus.len(), &failures, start.elapsed(), Some(Duration::from_secs(300)));
}

#[test]
fn criterion_2_ordering_construction() {
    let start = Instant::now();
    let corpus = ordering_corpus();
    let mut failures = Vec::new();
    for g in &corpus {
        let n = g.n();
        let tau = ThresholdAssignment::strict_majority(g);
        let cert = build_ordering(g, None).unwrap();
        let mut problems = cert.violations(g);
        for (name, set) in [("f >= 0", cert.nonnegative()), ("f <= 0", cert.nonpositive())] {
            if !is_dynamo(g, &tau, &set).unwrap() {
                problems.push(format!("{name} half is not a dynamo"));
            }
        }
        let m = half_dynamo(g);
        if !is_dynamo(g, &tau, &m).unwrap() {
            problems.push("half_dynamo output is not a dynamo".into());
        }
        let cap = if g.has_odd_vertex() { n / 2 } else { n.div_ceil(2) };
        if m.len() > cap {
            problems.push(format!("half_dynamo size {} > {cap}", m.len()));
        }
        if !problems.is_empty() {
            failures.push(format!("{:?}: {}", g.render(), problems.join("; ")));
        }
    }
    report(2, "ordering certificates and half dynamos", corpus.len(), &failures, start.elapsed(), Some(Duration::from_secs(60)));
}

fn min_time<F: FnMut()>(reps: usize, mut f: F) -> Duration {
    (0..reps)
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed()
        })
        .min()
        .unwrap()
}

#[test]
fn criterion_3_greedy_shrink() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut instances: Vec<(Graph, ThresholdAssignment)> = sandwich_corpus();
    instances.extend(ordering_corpus().into_iter().map(|g| {
        let t = ThresholdAssignment::strict_majority(&g);
        (g, t)
    }));
    for (g, tau) in &instances {
        let m = greedy_shrink(g, tau).unwrap();
        let bound = upper_bound_degree_sequence(g, tau.stats().unwrap().average);
        if !is_dynamo(g, tau, &m).unwrap() || (tau.respects_degrees(g) && m.len() > bound) {
            failures.push(format!("{:?} τ={:?}: greedy gave {m:?}, bound {bound}", g.render(), tau.values()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let big = gnp(500, 0.05, &mut rng);
    let half = gnp(250, 0.05, &mut rng);
    let big_tau = ThresholdAssignment::strict_majority(&big);
    let half_tau = ThresholdAssignment::strict_majority(&half);
    let single = Instant::now();
    let m = greedy_shrink(&big, &big_tau).unwrap();
    let single = single.elapsed();
    if single >= Duration::from_secs(10) {
        failures.push(format!("n = 500 run took {single:?}"));
    }
    if !is_dynamo(&big, &big_tau, &m).unwrap() || m.len() > upper_bound_degree_sequence(&big, big_tau.stats().unwrap().average) {
        failures.push("n = 500 output invalid".into());
    }
    let t500 = min_time(15, || {
        greedy_shrink(&big, &big_tau).unwrap();
    });
    let t250 = min_time(15, || {
        greedy_shrink(&half, &half_tau).unwrap();
    });
    let ratio = t500.as_secs_f64() / t250.as_secs_f64().max(1e-9);
    println!("    greedy n=500: {single:?} (|M| = {}), best-of-15 n=250 {t250:?}, n=500 {t500:?}, ratio {ratio:.2}", m.len());
    if ratio > 10.0 {
        failures.push(format!("runtime ratio 500/250 = {ratio:.2} > 10"));
    }
    report(3, "greedy shrink soundness, bound and timing", instances.len() + 1, &failures, start.elapsed(), None);
}

#[test]
fn criterion_4_cover_equivalence() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=6 {
        for g in all_graphs_up_to_iso(n).into_iter().filter(|g| !g.has_isolated_vertex()) {
            checked += 1;
            let tau = ThresholdAssignment::new(g.degrees());
            for set in oracle::all_subsets(n) {
                if is_dynamo(&g, &tau, &set).unwrap() != is_vertex_cover(&g, &set) {
                    failures.push(format!("{:?}: subset {set:?}", g.render()));
                }
            }
            let beta = minimum_vertex_cover(&g).len();
            let size = exact(&g, &tau);
            if size != beta {
                failures.push(format!("{:?}: exact {size} != β {beta}", g.render()));
            }
        }
    }
    report(4, "τ = deg: dynamo iff vertex cover, minimum = β", checked, &failures, start.elapsed(), None);
}

#[test]
fn criterion_5_complete_graph_witness() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 3..=8usize {
        for j in 0..=n * (n - 1) {
            let t = Rational::new(j as i128, n as i128);
            let w = kn_witness(n, t).unwrap();
            let size = exact(&w.graph, &w.thresholds);
            checked += 1;
            if size != t.floor() as usize || w.expected != size {
                failures.push(format!("K_{n}, t = {t}: exact {size}, ⌊t⌋ = {}", t.floor()));
            }
        }
    }
    report(5, "exact minimum on K_n witness equals ⌊t⌋", checked, &failures, start.elapsed(), None);
}

#[test]
fn criterion_6_extremal_family() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut ratios = Vec::new();
    for n in 2..=6usize {
        let g = gn(n).unwrap();
        let expected_m = (n.pow(3) - n) * (n * n - n - 1);
        if g.m() != expected_m {
            failures.push(format!("gn({n}) has {} edges, expected {expected_m}", g.m()));
        }
        let c = n * (n - 1);
        ratios.push(Rational::new(((c - 1) * (n - 1)) as i128, g.n() as i128));
    }
    let g2 = gn(2).unwrap();
    let size = exact(&g2, &gn_thresholds(&g2, 2));
    if size != 1 {
        failures.push(format!("exact minimum on gn(2) is {size}, expected 1"));
    }
    if ratios[0] != Rational::new(1, 4) || ratios[1] != Rational::new(10, 21) {
        failures.push(format!("leading ratios {:?}", &ratios[..2]));
    }
    if !ratios.windows(2).all(|w| w[0] < w[1]) {
        failures.push(format!("ratios not strictly increasing: {ratios:?}"));
    }
    println!("    ratios: {ratios:?}");
    report(6, "gn edge counts, gn(2) minimum, increasing ratios", 6, &failures, start.elapsed(), None);
}

#[test]
fn criterion_7_matching_bound() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xa1fa);
    let mut failures = Vec::new();
    let count = 2500;
    for _ in 0..count {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.0..0.7);
        let g = gnp(n, p, &mut rng);
        let tau = ThresholdAssignment::strict_majority(&g);
        let size = exact(&g, &tau);
        let alpha = maximum_matching(&g).len();
        let c = g.components().len();
        if size > alpha + c {
            failures.push(format!("{:?}: dyn {size} > α' {alpha} + c {c}", g.render()));
        }
    }
    report(7, "strict-majority minimum <= α' + c", count, &failures, start.elapsed(), None);
}

#[test]
fn criterion_8_cubic_lower_bound() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in [4, 6, 8, 10] {
        for g in connected_cubic_graphs(n) {
            checked += 1;
            let tau = ThresholdAssignment::strict_majority(&g);
            assert_eq!(tau.stats().unwrap().average, Rational::from_int(2));
            let size = exact(&g, &tau);
            if Rational::from(size) < Rational::new(n as i128, 6) {
                failures.push(format!("{:?}: minimum {size} < {n}/6", g.render()));
            }
        }
    }
    report(8, "connected cubic graphs: minimum >= n/6", checked, &failures, start.elapsed(), None);
}

#[test]
fn criterion_9_oracle_agreement() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x09ac);
    let mut failures = Vec::new();
    let count = 500;
    for _ in 0..count {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.0..0.8);
        let g = gnp(n, p, &mut rng);
        let matching = maximum_matching(&g);
        let cover = minimum_vertex_cover(&g);
        let alpha = oracle::independence_number(&g);
        let beta = oracle::vertex_cover_number(&g);
        let mut problems = Vec::new();
        if !matching.is_valid(&g) || matching.len() != oracle::matching_number(&g) {
            problems.push("matching");
        }
        if !cover.covers(&g) || cover.len() != beta {
            problems.push("cover");
        }
        if alpha + beta != n || alpha + cover.len() != n {
            problems.push("α + β != n");
        }
        if !problems.is_empty() {
            failures.push(format!("{:?}: {}", g.render(), problems.join(", ")));
        }
    }
    report(9, "matching and vertex cover agree with enumeration oracles", count, &failures, start.elapsed(), None);
}
