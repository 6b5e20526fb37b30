//! Vertex orderings with non-vanishing `f`, and the strict-majority dynamos
//! they yield.
//!
//! For an ordering `σ`, `f(v)` is the number of neighbours of `v` placed after
//! it minus the number placed before it. The recursive construction removes a
//! root `x` (an odd-degree vertex when one exists), orders every component of
//! `G - x` recursively, and lays the result out as
//!
//! ```text
//! A_1^+ .. A_k^+  A_1^0 .. A_k^0  x  A_1^- .. A_k^-
//! ```
//!
//! where `A_i^+`, `A_i^0`, `A_i^-` are the positive, zero and negative vertices
//! of the `i`-th component's ordering. A component whose degrees are all even
//! is asked to put its (at most one) zero on a neighbour of `x`, which then
//! turns positive. The vertices with `f >= 0` and those with `f <= 0` are
//! both strict-majority dynamos.

use std::collections::VecDeque;

use log::warn;
use serde::Serialize;

use crate::combinatorics::maximum_matching;
use crate::dynamics::is_dynamo;
use crate::error::{Error, Result};
use crate::graph::{check_vertices, Graph};
use crate::minimize::{exact_min_dynamo, Budget};
use crate::threshold::ThresholdAssignment;

const NONE: usize = usize::MAX;

/// An ordering together with its `f` values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderingCertificate {
    /// Vertices from first to last.
    pub order: Vec<usize>,
    /// `f[v]` for each vertex id `v`.
    pub f: Vec<i64>,
}

impl OrderingCertificate {
    pub fn from_order(g: &Graph, order: Vec<usize>) -> Result<Self> {
        let f = f_values(g, &order)?;
        Ok(OrderingCertificate { order, f })
    }

    pub fn zero_vertices(&self) -> Vec<usize> {
        (0..self.f.len()).filter(|&v| self.f[v] == 0).collect()
    }

    /// `{v : f(v) >= 0}`, ascending.
    pub fn nonnegative(&self) -> Vec<usize> {
        (0..self.f.len()).filter(|&v| self.f[v] >= 0).collect()
    }

    /// `{v : f(v) <= 0}`, ascending.
    pub fn nonpositive(&self) -> Vec<usize> {
        (0..self.f.len()).filter(|&v| self.f[v] <= 0).collect()
    }

    /// Every violated certificate property, described. Empty means valid.
    pub fn violations(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        match f_values(g, &self.order) {
            Ok(f) if f == self.f => {}
            Ok(_) => out.push("f does not match the ordering".into()),
            Err(e) => {
                out.push(format!("bad ordering: {e}"));
                return out;
            }
        }
        if self.f.iter().sum::<i64>() != 0 {
            out.push("f does not sum to zero".into());
        }
        if let Some(v) = (0..g.n()).find(|&v| (self.f[v] - g.degree(v) as i64).rem_euclid(2) != 0) {
            out.push(format!("parity of f({v}) differs from deg({v})"));
        }
        let zeros = self.zero_vertices().len();
        if zeros > 1 {
            out.push(format!("{zeros} vertices have f = 0"));
        }
        if zeros > 0 && g.has_odd_vertex() {
            out.push("zero f although an odd-degree vertex exists".into());
        }
        let class = |v: usize| match self.f[v] {
            x if x > 0 => 0,
            0 => 1,
            _ => 2,
        };
        if self.order.windows(2).any(|w| class(w[0]) > class(w[1])) {
            out.push("positives, zero, negatives are not laid out in that order".into());
        }
        out
    }
}

/// `f(v) = |later neighbours| - |earlier neighbours|` under `order`.
pub fn f_values(g: &Graph, order: &[usize]) -> Result<Vec<i64>> {
    let n = g.n();
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut pos = vec![NONE; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != NONE {
            return Err(Error::NotAPermutation);
        }
        pos[v] = i;
    }
    Ok((0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&w| if pos[w] > pos[v] { 1 } else { -1 })
                .sum()
        })
        .collect())
}

/// Build an ordering of a connected graph in which every `f` is non-zero,
/// except possibly one vertex when all degrees are even. With all degrees
/// even and `designated` given, the zero (if any) sits on `designated`.
pub fn build_ordering(g: &Graph, designated: Option<usize>) -> Result<OrderingCertificate> {
    if let Some(d) = designated {
        check_vertices(g.n(), &[d])?;
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let order = order_component(g, (0..g.n()).collect(), designated, None);
    OrderingCertificate::from_order(g, order)
}

/// Like [`build_ordering`] but with the first removed vertex fixed to `root`.
/// The certificate may then have a zero at `root` even when odd-degree
/// vertices exist.
pub fn build_ordering_rooted(g: &Graph, root: usize) -> Result<OrderingCertificate> {
    check_vertices(g.n(), &[root])?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let order = order_component(g, (0..g.n()).collect(), None, Some(root));
    OrderingCertificate::from_order(g, order)
}

struct Task {
    vertices: Vec<usize>,
    designated: Option<usize>,
    /// Membership mark shared by every vertex of the task in `label`.
    label: usize,
}

struct Frame {
    root: usize,
    root_nbrs: Vec<usize>,
    children: Vec<usize>,
}

#[derive(Default)]
struct Layout {
    pos: Vec<usize>,
    zero: Option<usize>,
    neg: VecDeque<usize>,
}

enum Step {
    Expand(usize),
    Combine(usize, Frame),
}

/// Orders one connected vertex set of `g`. Runs on an explicit stack since
/// chains of components can be as deep as the graph is long.
fn order_component(g: &Graph, vertices: Vec<usize>, designated: Option<usize>, forced_root: Option<usize>) -> Vec<usize> {
    if vertices.is_empty() {
        return Vec::new();
    }
    let n = g.n();
    let mut label = vec![NONE; n];
    // -1 after the parent root, +1 or 0 before it
    let mut side = vec![0i8; n];
    for &v in &vertices {
        label[v] = 0;
    }
    // degree inside the task currently holding the vertex
    let mut inner_deg = vec![0usize; n];
    for &v in &vertices {
        inner_deg[v] = g.neighbors(v).iter().filter(|&&w| label[w] == 0).count();
    }
    let mut next_label = 1;
    let mut tasks = vec![Task { vertices, designated, label: 0 }];
    let mut layouts: Vec<Option<Layout>> = vec![None];
    let mut stack = vec![Step::Expand(0)];
    let mut queue = VecDeque::new();

    while let Some(step) = stack.pop() {
        match step {
            Step::Expand(t) => {
                let mut verts = std::mem::take(&mut tasks[t].vertices);
                let mark = tasks[t].label;
                if verts.len() == 1 {
                    side[verts[0]] = 0;
                    layouts[t] = Some(Layout {
                        zero: Some(verts[0]),
                        ..Layout::default()
                    });
                    continue;
                }
                let odd = verts.iter().copied().filter(|&v| inner_deg[v] % 2 == 1).min();
                let root = match (t, forced_root) {
                    (0, Some(r)) => r,
                    _ => odd
                        .or(tasks[t].designated)
                        .unwrap_or_else(|| *verts.iter().min().unwrap()),
                };
                let root_nbrs: Vec<usize> = g.neighbors(root).iter().copied().filter(|&w| label[w] == mark).collect();
                label[root] = NONE;
                for &w in &root_nbrs {
                    inner_deg[w] -= 1;
                }
                let mut children = Vec::new();
                if root_nbrs.len() == 1 {
                    // removing a vertex of inner degree one leaves one component
                    verts.retain(|&v| v != root);
                    children.push((root_nbrs[0], verts, mark));
                } else {
                    for &s in &verts {
                        if label[s] != mark {
                            continue;
                        }
                        let c = next_label;
                        next_label += 1;
                        let mut comp = vec![s];
                        label[s] = c;
                        queue.push_back(s);
                        while let Some(u) = queue.pop_front() {
                            for &w in g.neighbors(u) {
                                if label[w] == mark {
                                    label[w] = c;
                                    comp.push(w);
                                    queue.push_back(w);
                                }
                            }
                        }
                        let designated = root_nbrs.iter().copied().filter(|&w| label[w] == c).min().expect("component touches the root");
                        children.push((designated, comp, c));
                    }
                }
                // components in order of their smallest vertex
                children.sort_by_cached_key(|ch| ch.1.iter().min().copied());
                let mut ids = Vec::with_capacity(children.len());
                for (designated, comp, mark) in children {
                    ids.push(tasks.len());
                    tasks.push(Task {
                        vertices: comp,
                        designated: Some(designated),
                        label: mark,
                    });
                    layouts.push(None);
                }
                stack.push(Step::Combine(t, Frame { root, root_nbrs, children: ids.clone() }));
                stack.extend(ids.into_iter().rev().map(Step::Expand));
            }
            Step::Combine(t, frame) => {
                let mut out = Layout::default();
                let mut zeros = Vec::new();
                let mut negs = VecDeque::new();
                for (i, &c) in frame.children.iter().enumerate() {
                    let child = layouts[c].take().expect("child laid out before parent");
                    if i == 0 {
                        out.pos = child.pos;
                        negs = child.neg;
                    } else {
                        out.pos.extend(child.pos);
                        negs.extend(child.neg);
                    }
                    zeros.extend(child.zero);
                }
                for &z in &zeros {
                    side[z] = 1;
                }
                out.pos.extend(zeros);
                let f_root: i64 = frame
                    .root_nbrs
                    .iter()
                    .map(|&w| if side[w] < 0 { 1 } else { -1 })
                    .sum();
                out.neg = negs;
                match f_root.signum() {
                    1 => {
                        side[frame.root] = 1;
                        out.pos.push(frame.root);
                    }
                    0 => {
                        side[frame.root] = 0;
                        out.zero = Some(frame.root);
                    }
                    _ => {
                        side[frame.root] = -1;
                        out.neg.push_front(frame.root);
                    }
                }
                layouts[t] = Some(out);
            }
        }
    }
    let top = layouts[0].take().expect("root task laid out");
    let mut order = top.pos;
    order.extend(top.zero);
    order.extend(top.neg);
    order
}

/// A strict-majority dynamo from orderings of each component: per component
/// the smaller of `{f >= 0}` and `{f <= 0}` (ties go to `{f >= 0}`).
///
/// On a connected graph the result has at most `⌈n/2⌉` vertices, and at most
/// `n/2` when some degree is odd; on a disconnected graph the bound is the sum
/// of the per-component bounds.
pub fn half_dynamo(g: &Graph) -> Vec<usize> {
    let comps = g.components();
    let order: Vec<usize> = comps
        .iter()
        .flat_map(|comp| order_component(g, comp.clone(), None, None))
        .collect();
    // no edges cross components, so f on the concatenation is per-component f
    let f = f_values(g, &order).expect("concatenated component orders form a permutation");
    let mut out = Vec::new();
    for comp in comps {
        let nonneg: Vec<usize> = comp.iter().copied().filter(|&v| f[v] >= 0).collect();
        let nonpos: Vec<usize> = comp.iter().copied().filter(|&v| f[v] <= 0).collect();
        out.extend(if nonpos.len() < nonneg.len() { nonpos } else { nonneg });
    }
    out.sort_unstable();
    out
}

/// How [`dynamo_containing_with_route`] found its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ContainingRoute {
    /// Default ordering with the vertex designated for the zero slot.
    Designated,
    /// Ordering rooted at the vertex itself.
    RootedAtVertex,
    /// Ordering rooted at an odd-degree vertex.
    RootedAtOdd(usize),
    /// Exhaustive search.
    Exhaustive,
}

/// A strict-majority dynamo of size at most `|G|/2` containing `v`, for a
/// connected graph of even order.
pub fn dynamo_containing(g: &Graph, v: usize, budget: &mut Budget) -> Result<Vec<usize>> {
    dynamo_containing_with_route(g, v, budget).map(|(set, _)| set)
}

pub fn dynamo_containing_with_route(g: &Graph, v: usize, budget: &mut Budget) -> Result<(Vec<usize>, ContainingRoute)> {
    let n = g.n();
    check_vertices(n, &[v])?;
    if n % 2 == 1 {
        return Err(Error::InvalidParameter(format!("graph order {n} is odd")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tau = ThresholdAssignment::strict_majority(g);
    let accept = |cert: &OrderingCertificate| -> Result<Option<Vec<usize>>> {
        for set in [cert.nonnegative(), cert.nonpositive()] {
            if set.len() * 2 <= n && set.binary_search(&v).is_ok() && is_dynamo(g, &tau, &set)? {
                return Ok(Some(set));
            }
        }
        Ok(None)
    };
    if let Some(set) = accept(&build_ordering(g, Some(v))?)? {
        return Ok((set, ContainingRoute::Designated));
    }
    if let Some(set) = accept(&build_ordering_rooted(g, v)?)? {
        return Ok((set, ContainingRoute::RootedAtVertex));
    }
    for x in (0..n).filter(|&x| g.degree(x) % 2 == 1 && x != v) {
        if let Some(set) = accept(&build_ordering_rooted(g, x)?)? {
            return Ok((set, ContainingRoute::RootedAtOdd(x)));
        }
    }
    warn!("orderings gave no half-size dynamo through vertex {v}; falling back to exhaustive search");
    let others: Vec<usize> = (0..n).filter(|&x| x != v).collect();
    for extra in 0..n / 2 {
        let mut found = None;
        for_each_subset(&others, extra, &mut |chosen| {
            budget.spend(1)?;
            let mut set = chosen.to_vec();
            set.push(v);
            if is_dynamo(g, &tau, &set)? {
                set.sort_unstable();
                found = Some(set);
                return Ok(true);
            }
            Ok(false)
        })?;
        if let Some(set) = found {
            return Ok((set, ContainingRoute::Exhaustive));
        }
    }
    Err(Error::SearchFailed(format!(
        "no strict-majority dynamo of size <= {} contains vertex {v}",
        n / 2
    )))
}

/// Calls `visit` on every `k`-subset of `items` in lexicographic order until
/// it returns `Ok(true)`.
pub(crate) fn for_each_subset<F>(items: &[usize], k: usize, visit: &mut F) -> Result<bool>
where
    F: FnMut(&[usize]) -> Result<bool>,
{
    fn rec<F>(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut F) -> Result<bool>
    where
        F: FnMut(&[usize]) -> Result<bool>,
    {
        if cur.len() == k {
            return visit(cur);
        }
        let need = k - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            if items.len() < need {
                break;
            }
            cur.push(items[i]);
            if rec(items, k, i + 1, cur, visit)? {
                return Ok(true);
            }
            cur.pop();
        }
        Ok(false)
    }
    if k > items.len() {
        return Ok(false);
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), visit)
}

/// Outcome of comparing the exact strict-majority dynamo number with
/// `α'(G) + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingBoundAudit {
    pub min_dynamo: usize,
    pub matching_number: usize,
    pub components: usize,
    pub holds: bool,
}

pub fn matching_bound_audit(g: &Graph, budget: &mut Budget) -> Result<MatchingBoundAudit> {
    let tau = ThresholdAssignment::strict_majority(g);
    let min_dynamo = exact_min_dynamo(g, &tau, budget)?.len();
    let matching_number = maximum_matching(g).len();
    let components = g.components().len();
    Ok(MatchingBoundAudit {
        min_dynamo,
        matching_number,
        components,
        holds: min_dynamo <= matching_number + components,
    })
}
