//! Verifiers for dominating, total dominating and semitotal dominating sets,
//! and an exact minimum-cardinality oracle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};

/// Largest graph the exact oracle accepts (vertex sets are packed into `u64`).
pub const EXACT_MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominationKind {
    Dominating,
    Total,
    Semitotal,
}

impl DominationKind {
    pub const ALL: [DominationKind; 3] = [Self::Dominating, Self::Total, Self::Semitotal];

    pub fn name(self) -> &'static str {
        match self {
            Self::Dominating => "dominating",
            Self::Total => "total",
            Self::Semitotal => "semitotal",
        }
    }
}

impl fmt::Display for DominationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DominationKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dom" | "dominating" => Ok(Self::Dominating),
            "total" => Ok(Self::Total),
            "semitotal" | "semi" => Ok(Self::Semitotal),
            other => Err(format!("unknown domination kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationReason {
    Undominated,
    #[serde(rename = "NO_PARTNER_WITHIN_2")]
    NoPartnerWithin2,
    NotTotallyDominated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub vertex: Vertex,
    pub reason: ViolationReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Self {
            valid: violations.is_empty(),
            violations,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("no {kind} dominating set exists: vertex {vertex} is isolated")]
    Infeasible { kind: DominationKind, vertex: Vertex },
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("exact search supports at most {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// Checks `set` against the chosen domination condition and lists every
/// failing vertex in increasing order.
pub fn verify(
    g: &Graph,
    set: &VertexSet,
    kind: DominationKind,
) -> Result<VerificationReport, DominationError> {
    g.check_set(set)?;
    let has_neighbor_in_set = |v: Vertex| g.neighbors(v).iter().any(|&w| set.contains(w));
    let mut violations = Vec::new();
    for v in g.vertices() {
        let reason = match kind {
            DominationKind::Total if !has_neighbor_in_set(v) => {
                Some(ViolationReason::NotTotallyDominated)
            }
            DominationKind::Total => None,
            _ if !set.contains(v) => {
                (!has_neighbor_in_set(v)).then_some(ViolationReason::Undominated)
            }
            DominationKind::Semitotal => {
                let ball = g.neighborhood_within(v, 2)?;
                let partnered = ball.iter().any(|w| w != v && set.contains(w));
                (!partnered).then_some(ViolationReason::NoPartnerWithin2)
            }
            DominationKind::Dominating => None,
        };
        if let Some(reason) = reason {
            violations.push(Violation { vertex: v, reason });
        }
    }
    Ok(VerificationReport::from_violations(violations))
}

pub fn is_valid(g: &Graph, set: &VertexSet, kind: DominationKind) -> bool {
    verify(g, set, kind).is_ok_and(|r| r.valid)
}

/// Minimum-cardinality set of the requested kind; among optimal sets the
/// lexicographically smallest one is returned.
///
/// Candidate sets are enumerated in lexicographic order for k = 1, 2, ...
/// (from 2 for semitotal). A branch is cut when some vertex can no longer be
/// dominated by a remaining candidate, when a packing of still-undominated
/// vertices with disjoint candidate dominators needs more picks than are
/// left, or (semitotal) when a chosen vertex can no longer get a partner.
pub fn exact_min(g: &Graph, kind: DominationKind) -> Result<VertexSet, DominationError> {
    let n = g.n();
    if n == 0 {
        return Err(DominationError::EmptyGraph);
    }
    if n > EXACT_MAX_VERTICES {
        return Err(DominationError::TooLarge {
            n,
            max: EXACT_MAX_VERTICES,
        });
    }
    if kind != DominationKind::Dominating {
        if let Some(vertex) = g.vertices().find(|&v| g.degree(v) == 0) {
            return Err(DominationError::Infeasible { kind, vertex });
        }
    }
    let search = ExactSearch::new(g, kind);
    let first = if kind == DominationKind::Semitotal { 2 } else { 1 };
    for k in first..=n {
        if let Some(mask) = search.find(k) {
            return Ok(VertexSet::from_mask(mask));
        }
    }
    unreachable!("the full vertex set is always feasible once isolated vertices are excluded")
}

fn mask_of(vertices: impl IntoIterator<Item = Vertex>) -> u64 {
    vertices.into_iter().fold(0, |acc, v| acc | (1u64 << v))
}

/// Highest set bit, or `None` for an empty mask.
fn top(mask: u64) -> Option<usize> {
    (mask != 0).then(|| 63 - mask.leading_zeros() as usize)
}

struct ExactSearch {
    n: usize,
    all: u64,
    semitotal: bool,
    /// Vertices dominated by choosing `v` (closed or open neighbourhood).
    dominated_by: Vec<u64>,
    /// `hopeless[l + 1]`: vertices none of whose dominators exceed `l`.
    hopeless: Vec<u64>,
    /// Vertices within distance 2 of `v`, excluding `v`.
    partners: Vec<u64>,
    /// `partnerless[l + 1]`: vertices whose partners all lie at or below `l`.
    partnerless: Vec<u64>,
}

impl ExactSearch {
    fn new(g: &Graph, kind: DominationKind) -> Self {
        let n = g.n();
        let dominated_by: Vec<u64> = g
            .vertices()
            .map(|v| {
                let open = mask_of(g.neighbors(v).iter().copied());
                if kind == DominationKind::Total {
                    open
                } else {
                    open | (1 << v)
                }
            })
            .collect();
        let partners: Vec<u64> = g
            .vertices()
            .map(|v| {
                let ball = g.neighborhood_within(v, 2).expect("vertex in range");
                ball.to_mask() & !(1u64 << v)
            })
            .collect();
        let threshold_masks = |sets: &[u64]| -> Vec<u64> {
            // Entry l + 1 holds the vertices whose set has no member above l.
            (0..=n)
                .map(|shifted| {
                    mask_of((0..n).filter(|&v| top(sets[v]).is_none_or(|t| t < shifted)))
                })
                .collect()
        };
        Self {
            n,
            all: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            semitotal: kind == DominationKind::Semitotal,
            hopeless: threshold_masks(&dominated_by),
            partnerless: threshold_masks(&partners),
            dominated_by,
            partners,
        }
    }

    fn find(&self, k: usize) -> Option<u64> {
        self.dfs(0, 0, 0, k)
    }

    /// `next` is the smallest vertex still allowed to be chosen.
    fn dfs(&self, chosen: u64, covered: u64, next: usize, remaining: usize) -> Option<u64> {
        let uncovered = self.all & !covered;
        if remaining == 0 {
            return (uncovered == 0 && self.partnered(chosen)).then_some(chosen);
        }
        if uncovered & self.hopeless[next] != 0 {
            return None;
        }
        if self.semitotal {
            let mut stranded = chosen & self.partnerless[next];
            while stranded != 0 {
                let c = stranded.trailing_zeros() as usize;
                stranded &= stranded - 1;
                if self.partners[c] & chosen == 0 {
                    return None;
                }
            }
        }
        if self.packing_bound(uncovered, next) > remaining {
            return None;
        }
        for x in next..=self.n - remaining {
            let found = self.dfs(
                chosen | (1 << x),
                covered | self.dominated_by[x],
                x + 1,
                remaining - 1,
            );
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Size of a greedy packing of uncovered vertices whose available
    /// dominators are pairwise disjoint; each needs its own pick.
    fn packing_bound(&self, uncovered: u64, next: usize) -> usize {
        let candidates = match next {
            64.. => 0,
            _ => !((1u64 << next) - 1) & self.all,
        };
        let mut used = 0u64;
        let mut count = 0;
        let mut rest = uncovered;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // dominated_by is symmetric: the dominators of v are the vertices v dominates.
            let dominators = self.dominated_by[v] & candidates;
            if dominators & used == 0 {
                used |= dominators;
                count += 1;
            }
        }
        count
    }

    fn partnered(&self, chosen: u64) -> bool {
        if !self.semitotal {
            return true;
        }
        let mut rest = chosen;
        while rest != 0 {
            let c = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.partners[c] & chosen == 0 {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    /// Minimum size by trying every subset.
    fn brute_force(g: &Graph, kind: DominationKind) -> Option<(usize, VertexSet)> {
        let n = g.n();
        let mut best: Option<(usize, VertexSet)> = None;
        for mask in 0u64..(1 << n) {
            let set = VertexSet::from_mask(mask);
            if !is_valid(g, &set, kind) {
                continue;
            }
            let key = (set.len(), set.clone());
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        best
    }

    #[test]
    fn verify_examples() {
        let p4 = path(4);
        assert!(verify(&p4, &VertexSet::from([1, 2]), DominationKind::Semitotal).unwrap().valid);

        let report = verify(&cycle(4), &VertexSet::from([0]), DominationKind::Semitotal).unwrap();
        assert!(!report.valid);
        assert_eq!(
            report.violations,
            vec![
                Violation { vertex: 0, reason: ViolationReason::NoPartnerWithin2 },
                Violation { vertex: 2, reason: ViolationReason::Undominated },
            ]
        );

        let report = verify(&p4, &VertexSet::from([0, 3]), DominationKind::Total).unwrap();
        let failing: Vec<_> = report.violations.iter().map(|v| v.vertex).collect();
        assert_eq!(failing, vec![0, 3]);
        assert!(report
            .violations
            .iter()
            .all(|v| v.reason == ViolationReason::NotTotallyDominated));

        assert!(matches!(
            verify(&p4, &VertexSet::from([7]), DominationKind::Dominating),
            Err(DominationError::Graph(GraphError::VertexOutOfRange { vertex: 7, .. }))
        ));
    }

    #[test]
    fn partner_at_distance_two_counts() {
        // 0-1-2 with {0, 2}: the two ends are at distance 2.
        assert!(is_valid(&path(3), &VertexSet::from([0, 2]), DominationKind::Semitotal));
        // 0-1-2-3-4 with {0, 3}: vertex 0 is three steps from 3.
        assert!(!is_valid(&path(5), &VertexSet::from([0, 3]), DominationKind::Semitotal));
    }

    #[test]
    fn c4_and_p5_values() {
        assert_eq!(exact_min(&cycle(4), DominationKind::Semitotal).unwrap().len(), 2);
        let p5 = path(5);
        assert_eq!(exact_min(&p5, DominationKind::Dominating).unwrap().len(), 2);
        assert_eq!(exact_min(&p5, DominationKind::Semitotal).unwrap().len(), 2);
        assert_eq!(exact_min(&p5, DominationKind::Total).unwrap().len(), 3);
        // lexicographically smallest optimal sets
        assert_eq!(exact_min(&p5, DominationKind::Dominating).unwrap(), VertexSet::from([0, 3]));
        assert_eq!(exact_min(&p5, DominationKind::Semitotal).unwrap(), VertexSet::from([1, 3]));
        assert_eq!(exact_min(&p5, DominationKind::Total).unwrap(), VertexSet::from([1, 2, 3]));
    }

    #[test]
    fn gp4_of_k2_has_semitotal_number_four() {
        // K2 on {0,1}; pendant paths 0-2-4-6-8 and 1-3-5-7-9 (w, x, y, z blocks).
        let g = Graph::from_edges(
            10,
            [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (6, 8), (7, 9)],
        )
        .unwrap();
        assert!(is_valid(&g, &VertexSet::from([2, 6, 3, 7]), DominationKind::Semitotal));
        assert_eq!(exact_min(&g, DominationKind::Semitotal).unwrap().len(), 4);
    }

    #[test]
    fn isolated_vertices() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(exact_min(&g, DominationKind::Dominating).unwrap(), VertexSet::from([0, 2]));
        for kind in [DominationKind::Total, DominationKind::Semitotal] {
            assert_eq!(
                exact_min(&g, kind),
                Err(DominationError::Infeasible { kind, vertex: 2 })
            );
        }
        assert_eq!(exact_min(&Graph::empty(1), DominationKind::Dominating).unwrap().len(), 1);
        assert_eq!(exact_min(&Graph::empty(0), DominationKind::Dominating), Err(DominationError::EmptyGraph));
        assert!(matches!(
            exact_min(&Graph::empty(65), DominationKind::Dominating),
            Err(DominationError::TooLarge { n: 65, .. })
        ));
    }

    #[test]
    fn oracle_matches_subset_enumeration() {
        let graphs = [
            path(2),
            path(6),
            cycle(5),
            cycle(7),
            star(4),
            complete(4),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]).unwrap(),
            Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            for kind in DominationKind::ALL {
                let expected = brute_force(g, kind).map(|(_, s)| s);
                assert_eq!(exact_min(g, kind).ok(), expected, "{kind} on {:?}", g.edges());
            }
        }
    }

    #[test]
    fn kind_names_parse() {
        for kind in DominationKind::ALL {
            assert_eq!(kind.name().parse::<DominationKind>(), Ok(kind));
        }
        assert_eq!("dom".parse::<DominationKind>(), Ok(DominationKind::Dominating));
        assert!("weak".parse::<DominationKind>().is_err());
    }
}
