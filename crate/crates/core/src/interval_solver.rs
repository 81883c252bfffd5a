//! Minimum semitotal dominating sets of interval graphs in `O(n²)` time.
//!
//! For a connected model with no interval containing all others, an optimal
//! set can be chosen among intervals not properly contained in another one.
//! Those intervals, plus a sentinel on each side, form the vertices of an
//! acyclic [`OverlapDigraph`]. Arcs join overlapping intervals (class `A1`)
//! or non-overlapping intervals with nothing strictly between them (class
//! `A2`); an `A2` arc is *marked* when a third interval overlaps both ends.
//! Semitotal dominating sets correspond to sentinel-to-sentinel paths that
//! never use two unmarked arcs in a row. Splitting every vertex into an
//! in-node and an out-node ([`SplitDigraph`]) turns that constraint into an
//! ordinary 0/1-weighted shortest path in a DAG.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Vertex, VertexSet};
use crate::interval_model::{CanonicalModel, IntervalError, IntervalModel};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error("the interval model is empty")]
    Empty,
    #[error("interval {vertex} intersects no other interval, so no semitotal dominating set exists")]
    Infeasible { vertex: Vertex },
    #[error("the overlap digraph needs at least two intervals, got {0}")]
    TooFewIntervals(usize),
    #[error("interval at position {0} properly contains all the others")]
    ContainsAll(usize),
    #[error("the intersection graph is disconnected")]
    Disconnected,
    #[error("no constrained path from source to sink")]
    NoPath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ArcClass {
    A1,
    A2Marked,
    A2Unmarked,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub class: ArcClass,
}

/// Position `k` of an interval that properly contains every other interval.
///
/// Because positions are sorted by left endpoint only position 0 can qualify.
pub fn contains_all(m: &CanonicalModel) -> Option<usize> {
    if m.is_empty() {
        return None;
    }
    let outer = m.right(0);
    (1..m.len()).all(|i| m.right(i) < outer).then_some(0)
}

/// Digraph over the non-contained intervals of a model extended by two
/// sentinels. Index 0 and `n + 1` are the sentinels; index `i` in `1..=n`
/// is sorted position `i - 1` of the model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapDigraph {
    n: usize,
    spans: Vec<(i64, i64)>,
    vertices: Vec<usize>,
    arcs: Vec<Arc>,
}

impl OverlapDigraph {
    /// Number of input intervals (sentinels excluded).
    pub fn interval_count(&self) -> usize {
        self.n
    }

    pub fn sink(&self) -> usize {
        self.n + 1
    }

    /// Endpoints of interval `i` of the extended family, sentinels included.
    pub fn span(&self, i: usize) -> (i64, i64) {
        self.spans[i]
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Arcs sorted by `(from, to)`.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_class(&self, from: usize, to: usize) -> Option<ArcClass> {
        self.arcs
            .binary_search_by(|a| (a.from, a.to).cmp(&(from, to)))
            .ok()
            .map(|pos| self.arcs[pos].class)
    }

    pub fn count(&self, class: ArcClass) -> usize {
        self.arcs.iter().filter(|a| a.class == class).count()
    }
}

/// Builds the overlap digraph of a connected canonical model with at least
/// two intervals and no interval containing all the others.
pub fn build_overlap_digraph(m: &CanonicalModel) -> Result<OverlapDigraph, SolverError> {
    let n = m.len();
    if n < 2 {
        return Err(SolverError::TooFewIntervals(n));
    }
    if let Some(k) = contains_all(m) {
        return Err(SolverError::ContainsAll(k));
    }
    if m.component_ranges().len() > 1 {
        return Err(SolverError::Disconnected);
    }

    let lo = m.spans().iter().map(|s| s.0).min().unwrap_or(0);
    let hi = m.spans().iter().map(|s| s.1).max().unwrap_or(0);
    let mut spans = Vec::with_capacity(n + 2);
    spans.push((lo - 3, lo - 2));
    spans.extend_from_slice(m.spans());
    spans.push((hi + 1, hi + 2));

    let lefts: Vec<i64> = m.spans().iter().map(|s| s.0).collect();
    // suffix_min_right[p]: smallest right endpoint among positions >= p.
    let mut suffix_min_right = vec![i64::MAX; n + 1];
    for p in (0..n).rev() {
        suffix_min_right[p] = suffix_min_right[p + 1].min(m.right(p));
    }
    // prefix_max_right[p]: largest right endpoint among positions < p.
    let mut prefix_max_right = vec![i64::MIN; n + 1];
    for p in 0..n {
        prefix_max_right[p + 1] = prefix_max_right[p].max(m.right(p));
    }

    let mut vertices = vec![0];
    vertices.extend((0..n).filter(|&p| prefix_max_right[p] < m.right(p)).map(|p| p + 1));
    vertices.push(n + 1);

    let mut arcs = Vec::new();
    for (vi, &i) in vertices.iter().enumerate() {
        if i == n + 1 {
            continue;
        }
        let (_, b_i) = spans[i];
        // Intervals starting after b_i; the closest right end among them
        // bounds how far an A2 arc from i may reach.
        let after = lefts.partition_point(|&a| a < b_i);
        let reach = suffix_min_right[after];
        let overlap_reach = prefix_max_right[after];
        for &j in &vertices[vi + 1..] {
            let (a_j, _) = spans[j];
            let class = if a_j < b_i {
                ArcClass::A1
            } else if a_j < reach {
                if overlap_reach > a_j {
                    ArcClass::A2Marked
                } else {
                    ArcClass::A2Unmarked
                }
            } else {
                // Non-contained intervals have increasing left endpoints, so
                // every later vertex is blocked as well.
                break;
            };
            arcs.push(Arc { from: i, to: j, class });
        }
    }
    Ok(OverlapDigraph {
        n,
        spans,
        vertices,
        arcs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SplitNode {
    Source,
    In(usize),
    Out(usize),
    Sink,
}

impl SplitNode {
    /// Overlap-digraph vertex this node was split from.
    pub fn interval(self, sink: usize) -> usize {
        match self {
            Self::Source => 0,
            Self::In(i) | Self::Out(i) => i,
            Self::Sink => sink,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SplitArc {
    pub from: SplitNode,
    pub to: SplitNode,
    pub length: u8,
}

/// Vertex-split form of an [`OverlapDigraph`]. Nodes are stored in
/// topological order: interval index ascending, in-node before out-node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDigraph {
    nodes: Vec<SplitNode>,
    /// Arcs as `(from, to, length)` over positions in `nodes`.
    arcs: Vec<(usize, usize, u8)>,
    sink: usize,
}

impl SplitDigraph {
    pub fn nodes(&self) -> &[SplitNode] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = SplitArc> + '_ {
        self.arcs.iter().map(|&(u, v, length)| SplitArc {
            from: self.nodes[u],
            to: self.nodes[v],
            length,
        })
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Index of the sink sentinel in the overlap digraph.
    pub fn sink_interval(&self) -> usize {
        self.sink
    }
}

pub fn build_split_digraph(d: &OverlapDigraph) -> SplitDigraph {
    let sink = d.sink();
    let inner: Vec<usize> = d.vertices().iter().copied().filter(|&i| i != 0 && i != sink).collect();
    let mut slot = vec![usize::MAX; sink + 1];
    let mut nodes = Vec::with_capacity(2 * inner.len() + 2);
    nodes.push(SplitNode::Source);
    for (p, &i) in inner.iter().enumerate() {
        slot[i] = p;
        nodes.push(SplitNode::In(i));
        nodes.push(SplitNode::Out(i));
    }
    nodes.push(SplitNode::Sink);
    let sink_pos = nodes.len() - 1;
    let in_pos = |i: usize| 2 * slot[i] + 1;
    let out_pos = |i: usize| 2 * slot[i] + 2;

    let mut arcs = Vec::with_capacity(inner.len() + d.arcs().len());
    for &i in &inner {
        arcs.push((in_pos(i), out_pos(i), 0));
    }
    for arc in d.arcs() {
        let (i, j) = (arc.from, arc.to);
        let mapped = if i == 0 && j == sink {
            None
        } else if i == 0 {
            Some((0, out_pos(j), 0))
        } else if j == sink {
            Some((in_pos(i), sink_pos, 1))
        } else {
            match arc.class {
                ArcClass::A1 | ArcClass::A2Marked => Some((out_pos(i), in_pos(j), 1)),
                ArcClass::A2Unmarked => Some((in_pos(i), out_pos(j), 1)),
            }
        };
        arcs.extend(mapped);
    }
    arcs.sort_unstable();
    SplitDigraph { nodes, arcs, sink }
}

/// A shortest source-to-sink path of a [`SplitDigraph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstrainedPath {
    pub nodes: Vec<SplitNode>,
    pub length: usize,
    /// Overlap-digraph indices of the real intervals on the path, ascending.
    pub intervals: Vec<usize>,
}

impl ConstrainedPath {
    /// Overlap-digraph vertices visited, sentinels included.
    pub fn digraph_vertices(&self, sink: usize) -> Vec<usize> {
        let mut seq: Vec<usize> = self.nodes.iter().map(|node| node.interval(sink)).collect();
        seq.dedup();
        seq
    }
}

/// Shortest source-to-sink path by relaxation in topological order. Among
/// equally short ways into a node the predecessor that comes first in node
/// order wins.
pub fn shortest_constrained_path(d: &SplitDigraph) -> Result<ConstrainedPath, SolverError> {
    let count = d.nodes.len();
    // Incoming arcs grouped by head, in CSR layout.
    let mut offsets = vec![0usize; count + 1];
    for &(_, v, _) in &d.arcs {
        offsets[v + 1] += 1;
    }
    for p in 0..count {
        offsets[p + 1] += offsets[p];
    }
    let mut fill = offsets.clone();
    let mut incoming = vec![(0usize, 0u8); d.arcs.len()];
    for &(u, v, len) in &d.arcs {
        incoming[fill[v]] = (u, len);
        fill[v] += 1;
    }

    let mut dist = vec![usize::MAX; count];
    let mut pred = vec![usize::MAX; count];
    dist[0] = 0;
    for v in 1..count {
        let mut best = (usize::MAX, usize::MAX);
        for &(u, len) in &incoming[offsets[v]..offsets[v + 1]] {
            debug_assert!(u < v, "split digraph arcs must follow node order");
            if dist[u] == usize::MAX {
                continue;
            }
            best = best.min((dist[u] + usize::from(len), u));
        }
        (dist[v], pred[v]) = best;
    }

    let sink = count - 1;
    if dist[sink] == usize::MAX {
        return Err(SolverError::NoPath);
    }
    let mut order = vec![sink];
    let mut cur = sink;
    while cur != 0 {
        cur = pred[cur];
        order.push(cur);
    }
    order.reverse();
    let nodes: Vec<SplitNode> = order.iter().map(|&p| d.nodes[p]).collect();
    let mut intervals: Vec<usize> = nodes
        .iter()
        .filter_map(|node| match node {
            SplitNode::In(i) | SplitNode::Out(i) => Some(*i),
            _ => None,
        })
        .collect();
    intervals.dedup();
    Ok(ConstrainedPath {
        nodes,
        length: dist[sink],
        intervals,
    })
}

/// Minimum semitotal dominating set of the intersection graph of `m`, as
/// vertex ids of `m`.
///
/// Each connected component is solved on its own; a component consisting of
/// a single interval makes the instance infeasible.
pub fn solve_interval(m: &IntervalModel) -> Result<VertexSet, SolverError> {
    if m.is_empty() {
        return Err(SolverError::Empty);
    }
    solve_canonical(&m.canonicalize()?)
}

/// Same as [`solve_interval`] for an already canonical model; the result is
/// expressed in the model's original ids.
pub fn solve_canonical(m: &CanonicalModel) -> Result<VertexSet, SolverError> {
    if m.is_empty() {
        return Err(SolverError::Empty);
    }
    let ranges = m.component_ranges();
    if let Some(r) = ranges.iter().find(|r| r.len() == 1) {
        return Err(SolverError::Infeasible {
            vertex: m.original_id(r.start),
        });
    }
    let mut solution = VertexSet::new();
    for range in ranges {
        let component = m.slice(range);
        for v in solve_component(&component)? {
            solution.insert(v);
        }
    }
    Ok(solution)
}

fn solve_component(m: &CanonicalModel) -> Result<Vec<Vertex>, SolverError> {
    if let Some(k) = contains_all(m) {
        let partner = (0..m.len())
            .filter(|&p| p != k)
            .map(|p| m.original_id(p))
            .min()
            .ok_or(SolverError::TooFewIntervals(m.len()))?;
        return Ok(vec![m.original_id(k), partner]);
    }
    let digraph = build_overlap_digraph(m)?;
    let path = shortest_constrained_path(&build_split_digraph(&digraph))?;
    Ok(path.intervals.iter().map(|&i| m.original_id(i - 1)).collect())
}
