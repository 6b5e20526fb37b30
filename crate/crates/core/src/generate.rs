//! Graph families.
//!
//! Numbering conventions: `star(k)` has its centre at 0; `gn(n)` puts the
//! central clique `K_{n(n-1)}` on ids `0..n(n-1)` and lays the `n(n-1) - 1`
//! copies of `K_n` out consecutively after it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::threshold::ThresholdAssignment;

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,k}`.
    Star(usize),
    Circulant { n: usize, offsets: Vec<usize> },
    Gnp { n: usize, p: f64, seed: u64 },
    /// The extremal family whose minimum dynamo fraction tends to 1.
    Gn(usize),
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Complete(n) => Ok(complete(n)),
        Family::Path(n) => Graph::from_edges(n, (1..n).map(|v| (v - 1, v))),
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        Family::Star(k) => Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))),
        Family::Circulant { n, ref offsets } => circulant(n, offsets),
        Family::Gnp { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!("p must lie in [0, 1], got {p}")));
            }
            Ok(gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
        }
        Family::Gn(n) => gn(n),
    }
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("complete graph edges are valid")
}

fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut seen = Vec::new();
    for &d in offsets {
        if d == 0 || 2 * d > n {
            return Err(Error::InvalidParameter(format!(
                "circulant offset {d} outside [1, {}]",
                n / 2
            )));
        }
        if seen.contains(&d) {
            continue;
        }
        seen.push(d);
        for v in 0..n {
            let w = (v + d) % n;
            // offset n/2 on even n would otherwise add every edge twice
            if 2 * d == n && v >= w {
                continue;
            }
            edges.push((v.min(w), v.max(w)));
        }
    }
    Graph::from_edges(n, edges)
}

/// Erdős–Rényi `G(n, p)` drawn from `rng`, edges visited in lexicographic order.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("gnp edges are valid")
}

/// Vertices of the central clique of `gn(n)`.
pub fn gn_central_size(n: usize) -> usize {
    n * (n - 1)
}

pub fn gn(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("gn needs n >= 2, got {n}")));
    }
    let c = gn_central_size(n);
    let copies = c - 1;
    let total = c + n * copies;
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    for i in 0..copies {
        let base = c + i * n;
        for a in 0..n {
            for b in a + 1..n {
                edges.push((base + a, base + b));
            }
            for z in 0..c {
                edges.push((z, base + a));
            }
        }
    }
    Graph::from_edges(total, edges)
}

/// The threshold assignment with average equal to the edge density: 0 on the
/// central clique, full degree on every copy vertex.
pub fn gn_thresholds(g: &Graph, n: usize) -> ThresholdAssignment {
    let c = gn_central_size(n);
    ThresholdAssignment::new(
        (0..g.n())
            .map(|v| if v < c { 0 } else { g.degree(v) })
            .collect(),
    )
}
