//! Undirected simple graphs, vertex sets and split partitions.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("invalid split partition: {0}")]
    InvalidPartition(String),
}

/// An undirected simple graph on the vertices `0..n`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted; adjacency lists are
/// sorted as well. The value is immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Endpoints may be given in either
    /// order; self-loops and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: normalized,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Sorted open neighbourhood of `v`.
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adjacency.iter().any(Vec::is_empty)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Checks that every member of `set` is a vertex of this graph.
    pub fn check_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        match set.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// Copy of this graph with the extra edge `u-v`.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        Self::from_edges(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    /// Exploration stops after `limit` layers when a limit is given.
    fn bfs(&self, source: Vertex, limit: Option<usize>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            if limit.is_some_and(|l| du >= l) {
                continue;
            }
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest `u`-`v` path, or `None` when the two vertices lie
    /// in different components.
    pub fn bfs_distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Some(0));
        }
        Ok(self.bfs(u, None)[v])
    }

    /// All vertices within distance `radius` of `v`, including `v`.
    pub fn neighborhood_within(&self, v: Vertex, radius: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        let dist = self.bfs(v, Some(radius));
        Ok(VertexSet::from_sorted_unchecked(
            (0..self.n).filter(|&u| dist[u].is_some()).collect(),
        ))
    }

    /// True iff every vertex is reachable from vertex 0. Vacuously true for
    /// graphs with at most one vertex.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs(0, None).iter().all(Option::is_some)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut label = vec![usize::MAX; self.n];
        let mut components = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            label[start] = id;
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for &w in &self.adjacency[u] {
                    if label[w] == usize::MAX {
                        label[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    /// Subgraph induced by `vertices` (sorted, distinct), relabelled so that
    /// `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<Graph, GraphError> {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]));
        Graph::from_edges(vertices.len(), edges)
    }

    /// Proper 2-colouring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap_or(false);
                for &w in &self.adjacency[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

/// A strictly increasing list of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    fn from_sorted_unchecked(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self(members)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// Bitmask view; only valid for sets whose members are all below 64.
    pub(crate) fn to_mask(&self) -> u64 {
        self.iter().fold(0, |acc, v| acc | (1u64 << v))
    }

    pub(crate) fn from_mask(mut mask: u64) -> Self {
        let mut members = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            members.push(mask.trailing_zeros() as Vertex);
            mask &= mask - 1;
        }
        Self(members)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        let mut members: Vec<Vertex> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self(members)
    }
}

impl Extend<Vertex> for VertexSet {
    fn extend<T: IntoIterator<Item = Vertex>>(&mut self, iter: T) {
        self.0.extend(iter);
        self.0.sort_unstable();
        self.0.dedup();
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(members: Vec<Vertex>) -> Self {
        members.into_iter().collect()
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(set: VertexSet) -> Self {
        set.0
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(members: [Vertex; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Clique / independent-set partition of a split graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    pub fn new(clique: impl Into<VertexSet>, independent: impl Into<VertexSet>) -> Self {
        Self {
            clique: clique.into(),
            independent: independent.into(),
        }
    }

    /// Checks that the two parts cover `g` disjointly, the clique part is
    /// complete and the independent part has no edge.
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        g.check_set(&self.clique)?;
        g.check_set(&self.independent)?;
        if !self.clique.is_disjoint(&self.independent) {
            return Err(GraphError::InvalidPartition("parts overlap".into()));
        }
        if self.clique.len() + self.independent.len() != g.n() {
            return Err(GraphError::InvalidPartition("parts do not cover every vertex".into()));
        }
        let k = self.clique.as_slice();
        for (i, &u) in k.iter().enumerate() {
            for &v in &k[i + 1..] {
                if !g.has_edge(u, v) {
                    return Err(GraphError::InvalidPartition(format!(
                        "clique vertices {u} and {v} are not adjacent"
                    )));
                }
            }
        }
        if let Some(&(u, v)) = g
            .edges()
            .iter()
            .find(|&&(u, v)| self.independent.contains(u) && self.independent.contains(v))
        {
            return Err(GraphError::InvalidPartition(format!(
                "independent vertices {u} and {v} are adjacent"
            )));
        }
        Ok(())
    }
}
