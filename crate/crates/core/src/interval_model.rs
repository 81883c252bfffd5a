//! Interval models and their canonical form.
//!
//! A raw [`IntervalModel`] holds closed intervals with arbitrary real
//! endpoints, indexed by vertex id. [`IntervalModel::canonicalize`] re-ranks
//! all endpoints to distinct integers and sorts intervals by left endpoint
//! without changing which pairs intersect.

use std::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IntervalError {
    #[error("interval {index} is degenerate: [{left}, {right}]")]
    Degenerate { index: usize, left: f64, right: f64 },
    #[error("interval {index} has a non-finite endpoint")]
    NonFinite { index: usize },
    #[error("endpoints must be distinct and intervals sorted by left endpoint (at interval {index})")]
    NotCanonical { index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub left: f64,
    pub right: f64,
}

impl Interval {
    pub fn new(left: f64, right: f64) -> Self {
        Self { left, right }
    }

    /// Closed-interval intersection test.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left.max(other.left) <= self.right.min(other.right)
    }
}

/// Raw interval model: interval `i` represents vertex `i`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct IntervalModel {
    intervals: Vec<Interval>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<Interval>) -> Self {
        Self { intervals }
    }

    pub fn from_pairs<I: IntoIterator<Item = (f64, f64)>>(pairs: I) -> Self {
        Self::new(pairs.into_iter().map(|(a, b)| Interval::new(a, b)).collect())
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn validate(&self) -> Result<(), IntervalError> {
        for (index, iv) in self.intervals.iter().enumerate() {
            if !iv.left.is_finite() || !iv.right.is_finite() {
                return Err(IntervalError::NonFinite { index });
            }
            if iv.left >= iv.right {
                return Err(IntervalError::Degenerate {
                    index,
                    left: iv.left,
                    right: iv.right,
                });
            }
        }
        Ok(())
    }

    /// Intersection graph computed pairwise on the raw endpoints.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.len();
        let edges = (0..n).flat_map(|i| {
            (i + 1..n)
                .filter(move |&j| self.intervals[i].intersects(&self.intervals[j]))
                .map(move |j| (i, j))
        });
        Graph::from_edges(n, edges).expect("pairwise edges are simple")
    }

    /// Re-ranks the 2n endpoints to distinct integers `0..2n` and sorts the
    /// intervals by left endpoint.
    ///
    /// Events are ordered by value; at equal value left endpoints come before
    /// right endpoints, and ties of the same kind fall back to interval index.
    /// Intervals that merely touch therefore still overlap afterwards.
    pub fn canonicalize(&self) -> Result<CanonicalModel, IntervalError> {
        self.validate()?;
        let n = self.len();
        let mut events: Vec<(f64, u8, usize)> = Vec::with_capacity(2 * n);
        for (i, iv) in self.intervals.iter().enumerate() {
            events.push((iv.left, 0, i));
            events.push((iv.right, 1, i));
        }
        events.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

        let mut spans = vec![(0i64, 0i64); n];
        for (rank, &(_, kind, i)) in events.iter().enumerate() {
            if kind == 0 {
                spans[i].0 = rank as i64;
            } else {
                spans[i].1 = rank as i64;
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| spans[i].0);
        Ok(CanonicalModel {
            spans: order.iter().map(|&i| spans[i]).collect(),
            original: order,
        })
    }
}

/// Interval model with pairwise distinct integer endpoints, sorted by left
/// endpoint. Position `i` in the sorted order corresponds to vertex
/// `original_id(i)` of the model it was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalModel {
    spans: Vec<(i64, i64)>,
    original: Vec<Vertex>,
}

impl CanonicalModel {
    /// Wraps spans that already satisfy the canonical invariants; the
    /// original ids are the positions themselves.
    pub fn from_spans(spans: Vec<(i64, i64)>) -> Result<Self, IntervalError> {
        for (index, &(a, b)) in spans.iter().enumerate() {
            if a >= b {
                return Err(IntervalError::Degenerate {
                    index,
                    left: a as f64,
                    right: b as f64,
                });
            }
            if index > 0 && spans[index - 1].0 >= a {
                return Err(IntervalError::NotCanonical { index });
            }
        }
        let mut endpoints: Vec<i64> = spans.iter().flat_map(|&(a, b)| [a, b]).collect();
        endpoints.sort_unstable();
        if endpoints.windows(2).any(|w| w[0] == w[1]) {
            return Err(IntervalError::NotCanonical { index: 0 });
        }
        let original = (0..spans.len()).collect();
        Ok(Self { spans, original })
    }

    pub fn len(&self) -> usize {
        self.spans.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    pub fn spans(&self) -> &[(i64, i64)] {
        &self.spans
    }

    pub fn left(&self, i: usize) -> i64 {
        self.spans[i].0
    }

    pub fn right(&self, i: usize) -> i64 {
        self.spans[i].1
    }

    pub fn original_id(&self, i: usize) -> Vertex {
        self.original[i]
    }

    pub fn original_ids(&self) -> &[Vertex] {
        &self.original
    }

    pub fn overlaps(&self, i: usize, j: usize) -> bool {
        let (a, b) = (self.spans[i], self.spans[j]);
        a.0.max(b.0) < a.1.min(b.1)
    }

    /// Maximal runs of the sorted order whose intervals form one connected
    /// component of the intersection graph.
    pub fn component_ranges(&self) -> Vec<Range<usize>> {
        let mut ranges = Vec::new();
        let mut start = 0;
        let mut reach = i64::MIN;
        for (i, &(a, b)) in self.spans.iter().enumerate() {
            if i > start && a > reach {
                ranges.push(start..i);
                start = i;
            }
            reach = if i == start { b } else { reach.max(b) };
        }
        if start < self.len() {
            ranges.push(start..self.len());
        }
        ranges
    }

    /// Sub-model on a contiguous range of sorted positions, keeping the
    /// original ids.
    pub fn slice(&self, range: Range<usize>) -> CanonicalModel {
        CanonicalModel {
            spans: self.spans[range.clone()].to_vec(),
            original: self.original[range].to_vec(),
        }
    }

    /// Intersection graph indexed by sorted position.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.left(j) > self.right(i) {
                    break;
                }
                edges.push((i, j));
            }
        }
        Graph::from_edges(n, edges).expect("pairwise edges are simple")
    }

    /// Raw model over the same vertex ids as the input this was built from.
    pub fn to_model(&self) -> IntervalModel {
        let mut intervals = vec![Interval::new(0.0, 0.0); self.len()];
        for (i, &(a, b)) in self.spans.iter().enumerate() {
            intervals[self.original[i]] = Interval::new(a as f64, b as f64);
        }
        IntervalModel::new(intervals)
    }
}
