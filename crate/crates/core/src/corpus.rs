//! Instance corpora for audits: seeded random graphs and thresholds, and
//! exhaustive enumeration of small graphs up to isomorphism.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::threshold::ThresholdAssignment;

/// Random connected graph: a random recursive tree on a shuffled labelling,
/// plus every remaining pair independently with probability `extra_p`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, extra_p: f64, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut adj = vec![vec![false; n]; n];
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (perm[i], perm[j]);
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut edges = Vec::new();
    for (u, row) in adj.iter().enumerate() {
        for (v, &tree) in row.iter().enumerate().skip(u + 1) {
            if tree || rng.gen_bool(extra_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// Uniform random tree on `n` vertices (random recursive attachment over a
/// shuffled labelling).
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges = (1..n).map(|i| {
        let j = rng.gen_range(0..i);
        (perm[i].min(perm[j]), perm[i].max(perm[j]))
    });
    Graph::from_edges(n, edges).expect("tree edges are valid")
}

/// Independent uniform thresholds `τ(v) ∈ [0, deg(v)]`.
pub fn random_degree_respecting<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> ThresholdAssignment {
    ThresholdAssignment::new((0..g.n()).map(|v| rng.gen_range(0..=g.degree(v))).collect())
}

/// Canonical edge list: the lexicographically smallest relabelled, sorted
/// edge list over all leaves of an individualisation-refinement search.
/// Two graphs are isomorphic iff their canonical forms are equal.
pub fn canonical_form(g: &Graph) -> (usize, Vec<(usize, usize)>) {
    let n = g.n();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let cells = refine(g, initial_cells(g));
    search(g, cells, &mut best);
    (n, best.unwrap_or_default())
}

/// Cells grouped by a label-invariant vertex signature (triangles through the
/// vertex, then the number of vertices at each BFS distance), in signature
/// order.
fn initial_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut keyed: Vec<(Vec<usize>, usize)> = (0..n)
        .map(|v| {
            let nb = g.neighbors(v);
            let triangles = nb
                .iter()
                .enumerate()
                .map(|(i, &a)| nb[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count())
                .sum();
            let mut sig = vec![triangles];
            let mut dist = vec![usize::MAX; n];
            dist[v] = 0;
            let mut frontier = vec![v];
            while !frontier.is_empty() {
                sig.push(frontier.len());
                let mut next = Vec::new();
                for &u in &frontier {
                    for &w in g.neighbors(u) {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[u] + 1;
                            next.push(w);
                        }
                    }
                }
                frontier = next;
            }
            (sig, v)
        })
        .collect();
    keyed.sort();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (i, (sig, v)) in keyed.iter().enumerate() {
        if i > 0 && keyed[i - 1].0 == *sig {
            cells.last_mut().unwrap().push(*v);
        } else {
            cells.push(vec![*v]);
        }
    }
    cells
}

fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(k);
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut sig = vec![0usize; k];
                    for &w in g.neighbors(v) {
                        sig[cell_of[w]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    let mut part: Vec<usize> = keyed[start..i].iter().map(|x| x.1).collect();
                    part.sort_unstable();
                    next.push(part);
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<(usize, usize)>>) {
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut label = vec![0usize; g.n()];
            for (i, c) in cells.iter().enumerate() {
                label[c[0]] = i;
            }
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .map(|(u, v)| (label[u].min(label[v]), label[u].max(label[v])))
                .collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                *best = Some(edges);
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut split = cells[..i].to_vec();
                split.push(vec![v]);
                split.push(cells[i].iter().copied().filter(|&w| w != v).collect());
                split.extend(cells[i + 1..].iter().cloned());
                search(g, refine(g, split), best);
            }
        }
    }
}

/// One representative of every isomorphism class of graphs on `n` vertices
/// (`n <= 6` is practical), in order of first discovery.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).expect("valid pairs");
        if seen.insert(canonical_form(&g)) {
            out.push(g);
        }
    }
    out
}

/// One representative of every isomorphism class of connected cubic graphs
/// on `n` vertices (`n` even, `n <= 10` is practical).
pub fn connected_cubic_graphs(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if n < 4 || n % 2 == 1 {
        return out;
    }
    let mut adj = vec![Vec::new(); n];
    // vertex 0 may always be relabelled to see 1, 2, 3
    for w in 1..=3 {
        adj[0].push(w);
        adj[w].push(0);
    }
    let mut seen = HashSet::new();
    extend_cubic(&mut adj, 1, &mut |adj| {
        let g = Graph::from_edges(n, (0..n).flat_map(|u| adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v))))
            .expect("valid cubic edges");
        if g.is_connected() && seen.insert(canonical_form(&g)) {
            out.push(g);
        }
    });
    out
}

fn extend_cubic<F: FnMut(&[Vec<usize>])>(adj: &mut Vec<Vec<usize>>, v: usize, emit: &mut F) {
    let n = adj.len();
    if v == n {
        emit(adj);
        return;
    }
    let need = 3 - adj[v].len();
    let candidates: Vec<usize> = (v + 1..n).filter(|&w| adj[w].len() < 3 && !adj[v].contains(&w)).collect();
    if candidates.len() < need {
        return;
    }
    choose(&candidates, need, 0, &mut Vec::new(), &mut |chosen| {
        for &w in chosen {
            adj[v].push(w);
            adj[w].push(v);
        }
        extend_cubic(adj, v + 1, emit);
        for &w in chosen {
            adj[v].pop();
            adj[w].pop();
        }
    });
}

fn choose<F: FnMut(&[usize])>(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut F) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in start..items.len() {
        cur.push(items[i]);
        choose(items, k, i + 1, cur, f);
        cur.pop();
    }
}
