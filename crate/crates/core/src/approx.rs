//! Greedy approximation of minimum semitotal domination.
//!
//! [`approx_semitotal`] first takes a greedy dominating set `D`. Members of
//! `D` with no other member within distance 2 form the universe `X` of a set
//! cover instance, whose sets are the distance-2 balls of the vertices
//! outside `D` restricted to `X`. A greedy cover `T` is added to `D`. The
//! result is within a factor `2 + 3 ln(Δ + 1)` of optimal.
//!
//! [`algo_dom_set`] runs the other direction: it approximates a minimum
//! dominating set through the semitotal approximation on the
//! [`GadgetKind::Ln`](crate::reductions::GadgetKind::Ln) gadget.

use serde::Serialize;
use thiserror::Error;

use crate::domination::{is_valid, DominationKind};
use crate::graph::{Graph, GraphError, Vertex, VertexSet};
use crate::reductions::{build_gadget, GadgetKind, ReductionError, Role};

/// Largest subset size `algo_dom_set` may search exhaustively.
pub const MAX_EXHAUSTIVE_K: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("the graph must be connected with at least two vertices")]
    NotConnected,
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("the given set does not dominate vertex {0}")]
    NotDominating(Vertex),
    #[error("no set in the family covers element {0}")]
    Uncoverable(Vertex),
    #[error("exhaustive subset size must lie in 1..={max}, got {k}")]
    InvalidK { k: usize, max: usize },
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

/// Greedy dominating set: repeatedly take the vertex whose closed
/// neighbourhood holds the most undominated vertices, smallest id on ties.
pub fn greedy_dominating_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut dominated = vec![false; n];
    let mut gain: Vec<usize> = g.vertices().map(|v| g.degree(v) + 1).collect();
    let mut left = n;
    let mut chosen = VertexSet::new();
    while left > 0 {
        let best = (0..n)
            .max_by(|&a, &b| gain[a].cmp(&gain[b]).then(b.cmp(&a)))
            .expect("vertices remain while some are undominated");
        chosen.insert(best);
        let newly: Vec<Vertex> = g
            .neighbors(best)
            .iter()
            .copied()
            .chain([best])
            .filter(|&v| !dominated[v])
            .collect();
        for v in newly {
            dominated[v] = true;
            left -= 1;
            gain[v] -= 1;
            for &w in g.neighbors(v) {
                gain[w] -= 1;
            }
        }
    }
    chosen
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverSet {
    pub owner: Vertex,
    pub members: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetCoverInstance {
    pub universe: VertexSet,
    /// Non-empty sets ordered by owner.
    pub family: Vec<CoverSet>,
    pub max_set_size: usize,
}

impl SetCoverInstance {
    pub fn new(universe: VertexSet, family: Vec<CoverSet>) -> Self {
        let mut family: Vec<CoverSet> = family.into_iter().filter(|s| !s.members.is_empty()).collect();
        family.sort_by_key(|s| s.owner);
        let max_set_size = family.iter().map(|s| s.members.len()).max().unwrap_or(0);
        Self {
            universe,
            family,
            max_set_size,
        }
    }
}

/// Set cover instance whose universe is the members of `d` with no other
/// member within distance 2, and whose sets are `N_2[u] ∩ X` for `u ∉ d`.
pub fn build_semitotal_setcover(g: &Graph, d: &VertexSet) -> Result<SetCoverInstance, ApproxError> {
    g.check_set(d)?;
    if let Some(v) = g
        .vertices()
        .find(|&v| !d.contains(v) && !g.neighbors(v).iter().any(|&w| d.contains(w)))
    {
        return Err(ApproxError::NotDominating(v));
    }
    let mut universe = VertexSet::new();
    for v in d.iter() {
        let ball = g.neighborhood_within(v, 2)?;
        if !ball.iter().any(|w| w != v && d.contains(w)) {
            universe.insert(v);
        }
    }
    let mut family = Vec::new();
    if !universe.is_empty() {
        for u in g.vertices().filter(|&u| !d.contains(u)) {
            let members: VertexSet = g
                .neighborhood_within(u, 2)?
                .iter()
                .filter(|&w| universe.contains(w))
                .collect();
            family.push(CoverSet { owner: u, members });
        }
    }
    Ok(SetCoverInstance::new(universe, family))
}

/// Greedy set cover: repeatedly take the set covering the most uncovered
/// elements, smallest owner on ties. Returns the chosen owners in the order
/// they were picked.
pub fn greedy_set_cover(inst: &SetCoverInstance) -> Result<Vec<Vertex>, ApproxError> {
    if let Some(x) = inst
        .universe
        .iter()
        .find(|&x| !inst.family.iter().any(|s| s.members.contains(x)))
    {
        return Err(ApproxError::Uncoverable(x));
    }
    let mut uncovered = inst.universe.clone();
    let mut picked = Vec::new();
    while !uncovered.is_empty() {
        let (best, gain) = inst
            .family
            .iter()
            .map(|s| (s, s.members.iter().filter(|&x| uncovered.contains(x)).count()))
            .fold(None::<(&CoverSet, usize)>, |acc, (s, gain)| match acc {
                Some((_, g)) if g >= gain => acc,
                _ => Some((s, gain)),
            })
            .expect("family is non-empty while the universe is uncovered");
        debug_assert!(gain > 0);
        picked.push(best.owner);
        for x in best.members.iter() {
            uncovered.remove(x);
        }
    }
    Ok(picked)
}

/// Greedy semitotal dominating set of a connected graph with at least two
/// vertices.
pub fn approx_semitotal(g: &Graph) -> Result<VertexSet, ApproxError> {
    if g.n() < 2 || !g.is_connected() {
        return Err(ApproxError::NotConnected);
    }
    let d = greedy_dominating_set(g);
    let inst = build_semitotal_setcover(g, &d)?;
    if inst.universe.is_empty() {
        return Ok(d);
    }
    let extra = greedy_set_cover(&inst)?;
    let mut result = d;
    for u in extra {
        result.insert(u);
    }
    debug_assert!(is_valid(g, &result, DominationKind::Semitotal));
    Ok(result)
}

/// Dominating set of a connected graph: the smallest dominating set with at
/// most `k` vertices if one exists, otherwise the projection of a greedy
/// semitotal dominating set of the `Ln` gadget back onto `g`.
pub fn algo_dom_set(g: &Graph, k: usize) -> Result<VertexSet, ApproxError> {
    if !(1..=MAX_EXHAUSTIVE_K).contains(&k) {
        return Err(ApproxError::InvalidK {
            k,
            max: MAX_EXHAUSTIVE_K,
        });
    }
    if g.n() == 0 {
        return Err(ApproxError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(ApproxError::NotConnected);
    }
    if let Some(small) = small_dominating_set(g, k) {
        return Ok(small);
    }
    let gadget = build_gadget(g, GadgetKind::Ln, None)?;
    let semitotal = approx_semitotal(&gadget.h)?;
    let projected = semitotal
        .iter()
        .filter_map(|h| match gadget.roles[h] {
            Role::Original(v) => Some(v),
            Role::Attached(crate::reductions::Tag::X, v) => Some(v),
            _ => None,
        })
        .collect();
    Ok(projected)
}

/// First dominating set in order of size, then lexicographic order, with at
/// most `k` vertices.
fn small_dominating_set(g: &Graph, k: usize) -> Option<VertexSet> {
    fn extend(g: &Graph, current: &mut Vec<Vertex>, next: Vertex, size: usize) -> Option<VertexSet> {
        if current.len() == size {
            let set: VertexSet = current.iter().copied().collect();
            return is_valid(g, &set, DominationKind::Dominating).then_some(set);
        }
        for v in next..g.n() {
            current.push(v);
            let found = extend(g, current, v + 1, size);
            current.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    (1..=k.min(g.n())).find_map(|size| extend(g, &mut Vec::with_capacity(size), 0, size))
}
