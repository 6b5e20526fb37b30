//! Simple undirected graphs with contiguous 0-based vertex ids.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A simple undirected graph stored as sorted adjacency lists.
///
/// Construction goes through [`Graph::from_edges`], which rejects self-loops,
/// duplicate edges and out-of-range endpoints, so every `Graph` value is
/// symmetric and loop-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, m })
    }

    /// Number of vertices, `|G|`.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Degrees sorted ascending, `d_1 <= ... <= d_n`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_odd_vertex(&self) -> bool {
        self.adj.iter().any(|l| l.len() % 2 == 1)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(Vec::is_empty)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Edge density `|E| / |G|` (edges per vertex).
    pub fn edge_density(&self) -> Result<Rational> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Rational::new(self.m as i128, self.n() as i128))
    }

    /// Connected components, each sorted ascending; components are ordered by
    /// their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut m2 = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                    m2 += 1;
                }
            }
            adj[i].sort_unstable();
        }
        Graph { adj, m: m2 / 2 }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&v| v + off).collect::<Vec<_>>()),
        );
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    /// Parse the edge-list format: `#` comment lines, a header `n m`, then
    /// exactly `m` lines `u v` with `u < v < n`.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let [u, v] = parse_pair(line, l)?;
            if u >= v {
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                return Err(Error::Parse {
                    line,
                    msg: format!("edge {u} {v} must satisfy u < v"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            // a duplicate line is reported as such rather than as a count problem
            if let Err(e @ Error::DuplicateEdge(..)) = Graph::from_edges(n, edges.iter().copied()) {
                return Err(e);
            }
            return Err(Error::EdgeCountMismatch {
                declared: m,
                found: edges.len(),
            });
        }
        Graph::from_edges(n, edges)
    }

    /// Inverse of [`Graph::parse`].
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n(), self.m);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

fn parse_pair(line: usize, l: &str) -> Result<[usize; 2]> {
    let mut it = l.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::Parse {
            line,
            msg: format!("expected two non-negative integers, got {l:?}"),
        }),
    }
}

/// Checks that `set` only names vertices of a graph on `n` vertices.
pub(crate) fn check_vertices(n: usize, set: &[usize]) -> Result<()> {
    match set.iter().find(|&&v| v >= n) {
        Some(&v) => Err(Error::VertexOutOfRange { vertex: v, n }),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_path() {
        let g = Graph::parse("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.degrees(), vec![1, 2, 1]);
    }

    #[test]
    fn parse_with_comment() {
        let g = Graph::parse("# cmt\n3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.regular_degree(), Some(2));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Graph::parse("2 1\n0 1\n0 1"),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::parse("3 2\n0 1"),
            Err(Error::EdgeCountMismatch { declared: 2, found: 1 })
        ));
        assert!(matches!(
            Graph::parse("3 1\n0 3"),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert_eq!(Graph::parse("3 1\n1 1"), Err(Error::SelfLoop(1)));
        assert!(matches!(Graph::parse("x"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse(""), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("3 1\n2 1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn degree_sequences() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.degree_sequence(), vec![1, 1, 2, 2]);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.degree_sequence(), vec![1, 1, 1, 3]);
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(c5.degree_sequence(), vec![2; 5]);
    }

    #[test]
    fn densities() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.edge_density().unwrap(), Rational::new(3, 2));
        assert_eq!(Graph::empty(5).edge_density().unwrap(), Rational::ZERO);
        assert_eq!(Graph::empty(0).edge_density(), Err(Error::EmptyGraph));
    }

    #[test]
    fn components_partition() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.components(), vec![vec![0, 1, 2, 3]]);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(Graph::empty(3).components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn induced_relabels() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = p4.induced(&[3, 2, 0]);
        assert_eq!(h.m(), 1);
        assert!(h.has_edge(0, 1));
    }
}
