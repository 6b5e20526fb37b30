//! Threshold assignments and the rules that produce them.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Per-vertex activation thresholds `τ(v)`.
///
/// Thresholds above the degree are representable; such vertices can never be
/// activated by neighbours and are reported by [`ThresholdAssignment::forced_seeds`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThresholdAssignment {
    values: Vec<usize>,
}

/// Average, maximum and minimum threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdStats {
    pub average: Rational,
    pub max: usize,
    pub min: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThresholdRule {
    /// `⌈(deg + 1) / 2⌉`
    StrictMajority,
    /// `⌈deg / 2⌉`
    SimpleMajority,
    Constant(usize),
    /// `τ(v) = deg(v)`
    Degree,
    Explicit(Vec<usize>),
}

impl ThresholdAssignment {
    pub fn new(values: Vec<usize>) -> Self {
        ThresholdAssignment { values }
    }

    pub fn from_rule(g: &Graph, rule: &ThresholdRule) -> Result<Self> {
        let values = match rule {
            ThresholdRule::StrictMajority => (0..g.n()).map(|v| (g.degree(v) + 2) / 2).collect(),
            ThresholdRule::SimpleMajority => (0..g.n()).map(|v| g.degree(v).div_ceil(2)).collect(),
            ThresholdRule::Constant(k) => vec![*k; g.n()],
            ThresholdRule::Degree => g.degrees(),
            ThresholdRule::Explicit(list) => {
                if list.len() != g.n() {
                    return Err(Error::LengthMismatch {
                        expected: g.n(),
                        got: list.len(),
                    });
                }
                list.clone()
            }
        };
        Ok(ThresholdAssignment { values })
    }

    pub fn strict_majority(g: &Graph) -> Self {
        Self::from_rule(g, &ThresholdRule::StrictMajority).expect("rule needs no input")
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> usize {
        self.values[v]
    }

    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn check_len(&self, g: &Graph) -> Result<()> {
        if self.values.len() != g.n() {
            return Err(Error::LengthMismatch {
                expected: g.n(),
                got: self.values.len(),
            });
        }
        Ok(())
    }

    /// `τ(v) <= deg(v)` for every vertex.
    pub fn respects_degrees(&self, g: &Graph) -> bool {
        self.values.len() == g.n() && self.values.iter().enumerate().all(|(v, &t)| t <= g.degree(v))
    }

    /// Per-vertex flag: `τ(v) > deg(v)`.
    pub fn forced_flags(&self, g: &Graph) -> Vec<bool> {
        self.values
            .iter()
            .enumerate()
            .map(|(v, &t)| t > g.degree(v))
            .collect()
    }

    /// Vertices with `τ(v) > deg(v)`; every dynamo contains them.
    pub fn forced_seeds(&self, g: &Graph) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&v| self.values[v] > g.degree(v))
            .collect()
    }

    pub fn stats(&self) -> Result<ThresholdStats> {
        let n = self.values.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(ThresholdStats {
            average: Rational::new(self.sum() as i128, n as i128),
            max: *self.values.iter().max().unwrap(),
            min: *self.values.iter().min().unwrap(),
        })
    }

    /// Parse a threshold file: one line of `n` integers, or `n` lines `v t`.
    /// Lines starting with `#` are ignored.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let num = |line: usize, tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                msg: format!("not a non-negative integer: {tok:?}"),
            })
        };
        // a single line holding exactly n tokens is the one-line form
        if lines.len() == 1 && lines[0].1.split_whitespace().count() == n {
            let (line, l) = lines[0];
            let values = l
                .split_whitespace()
                .map(|t| num(line, t))
                .collect::<Result<Vec<_>>>()?;
            return Ok(ThresholdAssignment { values });
        }
        let mut values = vec![None; n];
        for (line, l) in &lines {
            let toks: Vec<&str> = l.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::Parse {
                    line: *line,
                    msg: format!("expected `v t`, got {l:?}"),
                });
            }
            let v = num(*line, toks[0])?;
            let t = num(*line, toks[1])?;
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if values[v].replace(t).is_some() {
                return Err(Error::Parse {
                    line: *line,
                    msg: format!("vertex {v} listed twice"),
                });
            }
        }
        let got = values.iter().filter(|x| x.is_some()).count();
        if got != n {
            return Err(Error::LengthMismatch { expected: n, got });
        }
        Ok(ThresholdAssignment {
            values: values.into_iter().map(Option::unwrap).collect(),
        })
    }

    /// Single-line form accepted by [`ThresholdAssignment::parse`].
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (i, t) in self.values.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{t}");
        }
        s.push('\n');
        s
    }
}

impl FromStr for ThresholdRule {
    type Err = Error;

    /// `strict-majority`, `simple-majority`, `degree` or `constant:<k>`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict-majority" => Ok(ThresholdRule::StrictMajority),
            "simple-majority" => Ok(ThresholdRule::SimpleMajority),
            "degree" => Ok(ThresholdRule::Degree),
            _ => {
                if let Some(k) = s.strip_prefix("constant:") {
                    return k
                        .parse()
                        .map(ThresholdRule::Constant)
                        .map_err(|_| Error::InvalidParameter(format!("bad constant threshold {k:?}")));
                }
                Err(Error::InvalidParameter(format!("unknown threshold rule {s:?}")))
            }
        }
    }
}
