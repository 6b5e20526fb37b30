//! The irreversible threshold activation process.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{check_vertices, Graph};
use crate::threshold::ThresholdAssignment;

/// Rounds `D_0, D_1, ..., D_k` of a greedy activation run.
///
/// `rounds[0]` is the seed exactly as given (sorted, deduplicated); every later
/// round is non-empty and holds every inactive vertex that had reached its
/// threshold against the union of the earlier rounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActivationTrace {
    pub rounds: Vec<Vec<usize>>,
    pub complete: bool,
    pub seed_size: usize,
    /// Number of rounds after the seed, `k`.
    pub total_rounds: usize,
}

impl ActivationTrace {
    pub fn activated(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.rounds.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn activated_count(&self) -> usize {
        self.rounds.iter().map(Vec::len).sum()
    }
}

/// Run simultaneous-update rounds from `seed` until no vertex changes.
pub fn propagate(g: &Graph, tau: &ThresholdAssignment, seed: &[usize]) -> Result<ActivationTrace> {
    tau.check_len(g)?;
    check_vertices(g.n(), seed)?;
    let n = g.n();
    let mut active = vec![false; n];
    let mut hits = vec![0usize; n];
    let mut d0: Vec<usize> = seed.to_vec();
    d0.sort_unstable();
    d0.dedup();
    for &v in &d0 {
        active[v] = true;
    }
    for &v in &d0 {
        for &w in g.neighbors(v) {
            hits[w] += 1;
        }
    }
    let mut next: Vec<usize> = (0..n)
        .filter(|&v| !active[v] && hits[v] >= tau.get(v))
        .collect();
    let mut count = d0.len();
    let mut rounds = vec![d0];
    while !next.is_empty() {
        for &v in &next {
            active[v] = true;
        }
        count += next.len();
        let mut upcoming = Vec::new();
        for &v in &next {
            for &w in g.neighbors(v) {
                hits[w] += 1;
                // a vertex crosses its threshold exactly once
                if !active[w] && hits[w] == tau.get(w) {
                    upcoming.push(w);
                }
            }
        }
        upcoming.sort_unstable();
        rounds.push(std::mem::replace(&mut next, upcoming));
    }
    let seed_size = rounds[0].len();
    let total_rounds = rounds.len() - 1;
    Ok(ActivationTrace {
        rounds,
        complete: count == n,
        seed_size,
        total_rounds,
    })
}

pub fn is_dynamo(g: &Graph, tau: &ThresholdAssignment, seed: &[usize]) -> Result<bool> {
    Ok(propagate(g, tau, seed)?.complete)
}

/// Check that `partition` is a legal activation schedule: the sets are
/// disjoint and every vertex outside the first set has at least `τ(v)`
/// neighbours in strictly earlier sets. Rounds need not be greedy-maximal and
/// need not cover the whole vertex set.
pub fn verify_trace(g: &Graph, tau: &ThresholdAssignment, partition: &[Vec<usize>]) -> Result<bool> {
    tau.check_len(g)?;
    let n = g.n();
    let mut round_of = vec![usize::MAX; n];
    for (i, set) in partition.iter().enumerate() {
        check_vertices(n, set)?;
        for &v in set {
            if round_of[v] != usize::MAX {
                return Err(Error::Overlap(v));
            }
            round_of[v] = i;
        }
    }
    for (i, set) in partition.iter().enumerate().skip(1) {
        for &v in set {
            let earlier = g.neighbors(v).iter().filter(|&&w| round_of[w] < i).count();
            if earlier < tau.get(v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::complete;

    fn p4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn path_rounds() {
        let g = p4();
        let t = ThresholdAssignment::strict_majority(&g);
        let tr = propagate(&g, &t, &[0, 2]).unwrap();
        assert_eq!(tr.rounds, vec![vec![0, 2], vec![1, 3]]);
        assert!(tr.complete);
        assert_eq!((tr.seed_size, tr.total_rounds), (2, 1));
        assert!(!is_dynamo(&g, &t, &[0]).unwrap());
        assert!(is_dynamo(&g, &t, &[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn complete_graph_chain() {
        let g = complete(4);
        let t = ThresholdAssignment::new(vec![1, 2, 3, 3]);
        let tr = propagate(&g, &t, &[3]).unwrap();
        assert_eq!(tr.rounds, vec![vec![3], vec![0], vec![1], vec![2]]);
        assert!(tr.complete);
    }

    #[test]
    fn zero_thresholds_activate_everyone() {
        let g = p4();
        let t = ThresholdAssignment::new(vec![0; 4]);
        let tr = propagate(&g, &t, &[]).unwrap();
        assert_eq!(tr.rounds, vec![vec![], vec![0, 1, 2, 3]]);
        assert!(tr.complete);
    }

    #[test]
    fn stalled_process_stops() {
        let g = p4();
        let t = ThresholdAssignment::strict_majority(&g);
        let tr = propagate(&g, &t, &[0]).unwrap();
        assert_eq!(tr.rounds, vec![vec![0]]);
        assert!(!tr.complete);
        assert_eq!(tr.total_rounds, 0);
    }

    #[test]
    fn bad_seed() {
        let g = p4();
        let t = ThresholdAssignment::strict_majority(&g);
        assert!(matches!(propagate(&g, &t, &[4]), Err(Error::VertexOutOfRange { .. })));
        let short = ThresholdAssignment::new(vec![1]);
        assert!(matches!(propagate(&g, &short, &[0]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn trace_checks() {
        let g = p4();
        let t = ThresholdAssignment::strict_majority(&g);
        let tr = propagate(&g, &t, &[0, 2]).unwrap();
        assert!(verify_trace(&g, &t, &tr.rounds).unwrap());
        assert!(!verify_trace(&g, &t, &[vec![0], vec![1], vec![2], vec![3]]).unwrap());
        assert_eq!(verify_trace(&g, &t, &[vec![0], vec![0]]), Err(Error::Overlap(0)));
        assert!(verify_trace(&g, &t, &[vec![9]]).is_err());
        // a slower but legal schedule
        assert!(verify_trace(&g, &t, &[vec![0, 2], vec![1], vec![], vec![3]]).unwrap());
    }
}
