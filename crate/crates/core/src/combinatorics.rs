//! Exact classical invariants: matching number, vertex cover number and
//! chromatic number.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.edges.iter().all(|&(u, v)| {
            let ok = g.has_edge(u, v) && !used[u] && !used[v];
            used[u] = true;
            used[v] = true;
            ok
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCover {
    pub vertices: Vec<usize>,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn covers(&self, g: &Graph) -> bool {
        is_vertex_cover(g, &self.vertices)
    }

    /// The complement of the cover, an independent set.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        let mut inside = vec![false; n];
        for &v in &self.vertices {
            inside[v] = true;
        }
        (0..n).filter(|&v| !inside[v]).collect()
    }
}

pub fn is_vertex_cover(g: &Graph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    g.edges().all(|(u, v)| inside[u] || inside[v])
}

/// Maximum-cardinality matching by Edmonds' augmenting paths with blossom
/// contraction, `O(n^3)`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut b = Blossom::new(g);
    // greedy warm start
    for u in 0..g.n() {
        if b.mate[u] == NONE {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| b.mate[v] == NONE) {
                b.mate[u] = v;
                b.mate[v] = u;
            }
        }
    }
    for root in 0..g.n() {
        if b.mate[root] == NONE {
            if let Some(end) = b.find_path(root) {
                b.augment(end);
            }
        }
    }
    let edges = (0..g.n())
        .filter(|&u| b.mate[u] != NONE && u < b.mate[u])
        .map(|u| (u, b.mate[u]))
        .collect();
    Matching { edges }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Minimum vertex cover by branch and bound.
///
/// Branches on a maximum-degree vertex (take it, or take all of its
/// neighbours), forces the neighbour of any degree-one vertex, and prunes with
/// a greedy maximal matching of the remaining graph as a lower bound.
/// Exponential in the worst case; meant for graphs of a few dozen vertices.
pub fn minimum_vertex_cover(g: &Graph) -> VertexCover {
    let n = g.n();
    // initial incumbent: both ends of a maximal matching
    let mut best: Vec<usize> = {
        let mut taken = vec![false; n];
        for (u, v) in g.edges() {
            if !taken[u] && !taken[v] {
                taken[u] = true;
                taken[v] = true;
            }
        }
        (0..n).filter(|&v| taken[v]).collect()
    };
    let mut alive = vec![true; n];
    let mut chosen = Vec::new();
    cover_search(g, &mut alive, &mut chosen, &mut best);
    best.sort_unstable();
    VertexCover { vertices: best }
}

fn live_degree(g: &Graph, alive: &[bool], v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&w| alive[w]).count()
}

fn matching_lower_bound(g: &Graph, alive: &[bool]) -> usize {
    let mut used = vec![false; g.n()];
    let mut size = 0;
    for u in 0..g.n() {
        if !alive[u] || used[u] {
            continue;
        }
        if let Some(&w) = g.neighbors(u).iter().find(|&&w| alive[w] && !used[w]) {
            used[u] = true;
            used[w] = true;
            size += 1;
        }
    }
    size
}

fn cover_search(g: &Graph, alive: &mut [bool], chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
    let mark = chosen.len();
    let mut removed = Vec::new();
    // degree-one reduction: taking the neighbour is never worse
    loop {
        let leaf = (0..g.n()).find(|&v| alive[v] && live_degree(g, alive, v) == 1);
        let Some(leaf) = leaf else { break };
        let w = *g.neighbors(leaf).iter().find(|&&w| alive[w]).unwrap();
        alive[w] = false;
        removed.push(w);
        chosen.push(w);
    }
    let pick = (0..g.n())
        .filter(|&v| alive[v])
        .map(|v| (live_degree(g, alive, v), v))
        .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
    match pick {
        None | Some((0, _)) => {
            if chosen.len() < best.len() {
                *best = chosen.clone();
            }
        }
        Some((_, v)) => {
            if chosen.len() + matching_lower_bound(g, alive) < best.len() {
                alive[v] = false;
                chosen.push(v);
                cover_search(g, alive, chosen, best);
                chosen.pop();

                let nbrs: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
                if chosen.len() + nbrs.len() < best.len() {
                    for &w in &nbrs {
                        alive[w] = false;
                        chosen.push(w);
                    }
                    cover_search(g, alive, chosen, best);
                    for &w in &nbrs {
                        alive[w] = true;
                    }
                    chosen.truncate(chosen.len() - nbrs.len());
                }
                alive[v] = true;
            }
        }
    }
    for w in removed {
        alive[w] = true;
    }
    chosen.truncate(mark);
}

/// Independence number `α(G) = |G| - β(G)`.
pub fn independence_number(g: &Graph) -> usize {
    g.n() - minimum_vertex_cover(g).len()
}

/// Smallest `k` admitting a proper `k`-colouring, by backtracking for
/// `k = 1, 2, ...`. Meant for graphs of about twenty vertices.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colour = vec![NONE; n];
    (1..=n)
        .find(|&k| colour_from(g, &order, 0, k, 0, &mut colour))
        .expect("n colours always suffice")
}

fn colour_from(g: &Graph, order: &[usize], i: usize, k: usize, used: usize, colour: &mut [usize]) -> bool {
    let Some(&v) = order.get(i) else { return true };
    // a fresh colour is interchangeable with any other fresh colour
    let limit = k.min(used + 1);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        if colour_from(g, order, i + 1, k, used.max(c + 1), colour) {
            return true;
        }
    }
    colour[v] = NONE;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, generate, Family};

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        Graph::from_edges(10, e).unwrap()
    }

    #[test]
    fn matching_examples() {
        let p4 = generate(&Family::Path(4)).unwrap();
        assert_eq!(maximum_matching(&p4).len(), 2);
        let c5 = generate(&Family::Cycle(5)).unwrap();
        assert_eq!(maximum_matching(&c5).len(), 2);
        let m = maximum_matching(&petersen());
        assert_eq!(m.len(), 5);
        assert!(m.is_valid(&petersen()));
        assert!(maximum_matching(&Graph::empty(3)).is_empty());
    }

    #[test]
    fn matching_needs_blossom() {
        // triangle with pendant paths: greedy picks 0-1 first
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 3);
    }

    #[test]
    fn cover_examples() {
        let c5 = generate(&Family::Cycle(5)).unwrap();
        let c = minimum_vertex_cover(&c5);
        assert_eq!(c.len(), 3);
        assert!(c.covers(&c5));
        let star = generate(&Family::Star(4)).unwrap();
        assert_eq!(minimum_vertex_cover(&star).vertices, vec![0]);
        assert_eq!(minimum_vertex_cover(&complete(5)).len(), 4);
        assert_eq!(minimum_vertex_cover(&Graph::empty(3)).len(), 0);
        assert_eq!(minimum_vertex_cover(&petersen()).len(), 6);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&generate(&Family::Cycle(5)).unwrap()), 3);
        assert_eq!(chromatic_number(&complete(4)), 4);
        assert_eq!(chromatic_number(&generate(&Family::Path(4)).unwrap()), 2);
        assert_eq!(chromatic_number(&Graph::empty(3)), 1);
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
        assert_eq!(chromatic_number(&petersen()), 3);
    }
}
