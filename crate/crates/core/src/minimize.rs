//! Shrinking a dynamo to the degree-sequence bound, minimality, and the exact
//! minimum-dynamo search.

use serde::Serialize;

use crate::dynamics::is_dynamo;
use crate::error::{Error, Result};
use crate::graph::{check_vertices, Graph};
use crate::strict_majority::for_each_subset;
use crate::threshold::ThresholdAssignment;

/// Work limit for exponential searches, counted in activation runs.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit: Some(limit), used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget { limit: None, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn spend(&mut self, units: u64) -> Result<()> {
        self.used += units;
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::BudgetExceeded(limit)),
            _ => Ok(()),
        }
    }
}

/// Partition of `V` relative to a dynamo `M`:
/// `A = {v ∉ M : |N_M(v)| <= τ(v)}` and `B = V \ M \ A`.
#[derive(Clone, Debug)]
pub struct ShrinkState<'a> {
    g: &'a Graph,
    tau: &'a ThresholdAssignment,
    in_m: Vec<bool>,
    /// `|N_M(v)|`
    m_hits: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Part {
    M,
    A,
    B,
}

impl<'a> ShrinkState<'a> {
    pub fn new(g: &'a Graph, tau: &'a ThresholdAssignment, m: &[usize]) -> Result<Self> {
        tau.check_len(g)?;
        check_vertices(g.n(), m)?;
        let mut in_m = vec![false; g.n()];
        for &v in m {
            in_m[v] = true;
        }
        let m_hits = (0..g.n())
            .map(|v| g.neighbors(v).iter().filter(|&&w| in_m[w]).count())
            .collect();
        Ok(ShrinkState { g, tau, in_m, m_hits })
    }

    pub fn part(&self, v: usize) -> Part {
        if self.in_m[v] {
            Part::M
        } else if self.m_hits[v] <= self.tau.get(v) {
            Part::A
        } else {
            Part::B
        }
    }

    pub fn members(&self, part: Part) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.part(v) == part).collect()
    }

    fn count_in(&self, v: usize, parts: &[Part]) -> usize {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&w| parts.contains(&self.part(w)))
            .count()
    }

    /// The removal test as stated on the partition:
    /// `|N_{A∪B}(v)| < |N_B(v)| + deg(v) - τ(v) + 1`.
    pub fn removable_by_claim(&self, v: usize) -> bool {
        let ab = self.count_in(v, &[Part::A, Part::B]) as i64;
        let b = self.count_in(v, &[Part::B]) as i64;
        ab < b + self.g.degree(v) as i64 - self.tau.get(v) as i64 + 1
    }

    /// Equivalent reduced form: `|N_A(v)| <= deg(v) - τ(v)`.
    pub fn removable(&self, v: usize) -> bool {
        debug_assert!(self.in_m[v]);
        let deg = self.g.degree(v);
        let t = self.tau.get(v);
        if t > deg {
            return false;
        }
        let mut slack = deg - t;
        for &w in self.g.neighbors(v) {
            if !self.in_m[w] && self.m_hits[w] <= self.tau.get(w) {
                if slack == 0 {
                    return false;
                }
                slack -= 1;
            }
        }
        true
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(self.in_m[v]);
        self.in_m[v] = false;
        for &w in self.g.neighbors(v) {
            self.m_hits[w] -= 1;
        }
    }

    pub fn in_m(&self, v: usize) -> bool {
        self.in_m[v]
    }

    pub fn m(&self) -> Vec<usize> {
        self.members(Part::M)
    }
}

/// Result of [`greedy_shrink_run`]: the final dynamo and the removal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShrinkRun {
    pub dynamo: Vec<usize>,
    pub removed: Vec<usize>,
}

/// Start from `M = V` and repeatedly drop the lowest-index vertex of `M`
/// passing the removal test, rescanning from index 0 after each removal.
/// The result is a dynamo on which no vertex passes the test, so its size is
/// at most `max{k : Σ_{i<=k} (d_i + 1) <= n·t̄}`.
pub fn greedy_shrink(g: &Graph, tau: &ThresholdAssignment) -> Result<Vec<usize>> {
    greedy_shrink_run(g, tau).map(|r| r.dynamo)
}

pub fn greedy_shrink_run(g: &Graph, tau: &ThresholdAssignment) -> Result<ShrinkRun> {
    let all: Vec<usize> = (0..g.n()).collect();
    let mut state = ShrinkState::new(g, tau, &all)?;
    let mut removed = Vec::new();
    'scan: loop {
        for v in 0..g.n() {
            if state.in_m(v) && state.removable(v) {
                state.remove(v);
                removed.push(v);
                continue 'scan;
            }
        }
        break;
    }
    Ok(ShrinkRun {
        dynamo: state.m(),
        removed,
    })
}

/// Whether no proper subset of the dynamo `m` is a dynamo. By monotonicity it
/// suffices to drop one vertex at a time.
pub fn is_minimal(g: &Graph, tau: &ThresholdAssignment, m: &[usize]) -> Result<bool> {
    if !is_dynamo(g, tau, m)? {
        return Err(Error::NotADynamo);
    }
    let mut set: Vec<usize> = m.to_vec();
    set.sort_unstable();
    set.dedup();
    for i in 0..set.len() {
        let mut smaller = set.clone();
        smaller.remove(i);
        if is_dynamo(g, tau, &smaller)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reusable activation closure test with preallocated buffers.
pub(crate) struct DynamoTester<'a> {
    g: &'a Graph,
    tau: &'a ThresholdAssignment,
    active: Vec<bool>,
    hits: Vec<usize>,
    queue: Vec<usize>,
}

impl<'a> DynamoTester<'a> {
    pub(crate) fn new(g: &'a Graph, tau: &'a ThresholdAssignment) -> Self {
        let n = g.n();
        DynamoTester {
            g,
            tau,
            active: vec![false; n],
            hits: vec![0; n],
            queue: Vec::with_capacity(n),
        }
    }

    pub(crate) fn is_dynamo(&mut self, seed: &[usize]) -> bool {
        let n = self.g.n();
        self.active.iter_mut().for_each(|x| *x = false);
        self.hits.iter_mut().for_each(|x| *x = 0);
        self.queue.clear();
        for &v in seed {
            if !self.active[v] {
                self.active[v] = true;
                self.queue.push(v);
            }
        }
        for v in 0..n {
            if !self.active[v] && self.tau.get(v) == 0 {
                self.active[v] = true;
                self.queue.push(v);
            }
        }
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            for &w in self.g.neighbors(u) {
                self.hits[w] += 1;
                if !self.active[w] && self.hits[w] >= self.tau.get(w) {
                    self.active[w] = true;
                    self.queue.push(w);
                }
            }
        }
        self.queue.len() == n
    }
}

/// A dynamo of minimum cardinality.
///
/// Candidates always contain the forced seeds (`τ(v) > deg(v)`) and are tried
/// in order of increasing size, strictly below the size of the greedy-shrink
/// dynamo, which is returned when nothing smaller exists. Each activation run
/// costs one budget unit; running out yields [`Error::BudgetExceeded`].
pub fn exact_min_dynamo(g: &Graph, tau: &ThresholdAssignment, budget: &mut Budget) -> Result<Vec<usize>> {
    let upper = greedy_shrink(g, tau)?;
    let forced = tau.forced_seeds(g);
    let free: Vec<usize> = {
        let flags = tau.forced_flags(g);
        (0..g.n()).filter(|&v| !flags[v]).collect()
    };
    let mut tester = DynamoTester::new(g, tau);
    let mut seed = forced.clone();
    for extra in 0..upper.len().saturating_sub(forced.len()) {
        let mut found = None;
        for_each_subset(&free, extra, &mut |chosen| {
            budget.spend(1)?;
            seed.truncate(forced.len());
            seed.extend_from_slice(chosen);
            if tester.is_dynamo(&seed) {
                let mut s = seed.clone();
                s.sort_unstable();
                found = Some(s);
                return Ok(true);
            }
            Ok(false)
        })?;
        if let Some(s) = found {
            return Ok(s);
        }
    }
    Ok(upper)
}
