//! Brute-force reference computations for cross-checking the fast routines
//! on small graphs. Nothing here shares code with the routines it checks.

use crate::graph::Graph;
use crate::threshold::ThresholdAssignment;

/// Activation closure by repeated full sweeps until nothing changes.
pub fn naive_closure(g: &Graph, tau: &ThresholdAssignment, seed: &[usize]) -> Vec<bool> {
    let n = g.n();
    let mut active = vec![false; n];
    for &v in seed {
        active[v] = true;
    }
    loop {
        let next: Vec<bool> = (0..n)
            .map(|v| active[v] || g.neighbors(v).iter().filter(|&&w| active[w]).count() >= tau.get(v))
            .collect();
        if next == active {
            return active;
        }
        active = next;
    }
}

pub fn naive_is_dynamo(g: &Graph, tau: &ThresholdAssignment, seed: &[usize]) -> bool {
    naive_closure(g, tau, seed).into_iter().all(|a| a)
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Minimum dynamo size over all `2^n` subsets (`n <= 20`).
pub fn min_dynamo_size(g: &Graph, tau: &ThresholdAssignment) -> usize {
    let n = g.n();
    assert!(n <= 20, "brute force limited to 20 vertices");
    (0u32..1 << n)
        .filter(|&mask| naive_is_dynamo(g, tau, &members(mask, n)))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("the full vertex set is a dynamo")
}

/// Every subset of `0..n` as an ascending vertex list.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(n <= 20);
    (0u32..1 << n).map(move |mask| members(mask, n))
}

/// Matching number by exhaustive search over edge subsets.
pub fn matching_number(g: &Graph) -> usize {
    fn rec(edges: &[(usize, usize)], used: &mut Vec<bool>) -> usize {
        let Some((&(u, v), rest)) = edges.split_first() else { return 0 };
        let mut best = rec(rest, used);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            best = best.max(1 + rec(rest, used));
            used[u] = false;
            used[v] = false;
        }
        best
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    rec(&edges, &mut vec![false; g.n()])
}

/// Vertex cover number by checking subsets in order of size (`n <= 20`).
pub fn vertex_cover_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << n)
        .filter(|&mask| edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// Independence number by checking subsets (`n <= 20`).
pub fn independence_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << n)
        .filter(|&mask| edges.iter().all(|&(u, v)| !(mask >> u & 1 == 1 && mask >> v & 1 == 1)))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Whether some sequential activation order, one vertex at a time, reaches
/// every vertex from `seed`. Explores orders depth-first, memoising visited
/// active sets (`n <= 20`).
pub fn some_order_activates_all(g: &Graph, tau: &ThresholdAssignment, seed: &[usize]) -> bool {
    let n = g.n();
    assert!(n <= 20);
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let start = seed.iter().fold(0u32, |m, &v| m | 1 << v);
    let mut visited = std::collections::HashSet::new();
    let mut stack = vec![start];
    while let Some(state) = stack.pop() {
        if state == full {
            return true;
        }
        if !visited.insert(state) {
            continue;
        }
        for v in 0..n {
            if state >> v & 1 == 0 {
                let earlier = g.neighbors(v).iter().filter(|&&w| state >> w & 1 == 1).count();
                if earlier >= tau.get(v) {
                    stack.push(state | 1 << v);
                }
            }
        }
    }
    false
}
