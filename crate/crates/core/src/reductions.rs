//! Gadget constructions relating semitotal domination to other problems.
//!
//! Each [`GadgetKind`] turns a source graph `G` into a graph `H`. The
//! vertices of `G` keep their ids in `H`; gadget vertices follow, grouped by
//! [`Tag`] in the order listed for each kind and then by source vertex.
//!
//! | kind        | source problem   | added per vertex `v`                        | shared            |
//! |-------------|------------------|---------------------------------------------|-------------------|
//! | `Gp4`       | total domination | path `v w x y z`                            |                   |
//! | `Bipartite` | domination       | path `x y z u w`, edge `v z`                |                   |
//! | `Split`     | domination       | `x` (clique `v`) or `y` (independent `v`)   | `w z r s t`       |
//! | `Ln`        | domination       | pendant `x` joined to `y`                   | `y z`             |
//! | `Apx`       | vertex cover     | 4-cycle `u x y z`, edges `u v`, `u w`       | one vertex per edge |
//!
//! `Apx` drops the edges of `G`; every edge becomes a vertex adjacent to both
//! endpoints.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::domination::{exact_min, is_valid, DominationError, DominationKind};
use crate::graph::{Graph, GraphError, SplitPartition, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetKind {
    Gp4,
    Bipartite,
    Split,
    Ln,
    Apx,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 5] = [Self::Gp4, Self::Bipartite, Self::Split, Self::Ln, Self::Apx];

    pub fn name(self) -> &'static str {
        match self {
            Self::Gp4 => "gp4",
            Self::Bipartite => "bipartite",
            Self::Split => "split",
            Self::Ln => "ln",
            Self::Apx => "apx",
        }
    }

    /// Oracle limits for [`check_reduction`] as `(max n, max m)`.
    pub fn size_cap(self) -> (usize, Option<usize>) {
        match self {
            Self::Gp4 => (4, None),
            Self::Bipartite => (4, None),
            Self::Split => (6, None),
            Self::Ln => (6, None),
            Self::Apx => (3, Some(3)),
        }
    }

    /// Smallest source graph the gadget accepts.
    pub fn min_source_size(self) -> usize {
        match self {
            Self::Bipartite | Self::Split => 2,
            _ => 1,
        }
    }

    fn attached_tags(self) -> &'static [Tag] {
        match self {
            Self::Gp4 => &[Tag::W, Tag::X, Tag::Y, Tag::Z],
            Self::Bipartite => &[Tag::X, Tag::Y, Tag::Z, Tag::U, Tag::W],
            Self::Split => &[],
            Self::Ln => &[Tag::X],
            Self::Apx => &[Tag::U, Tag::X, Tag::Y, Tag::Z, Tag::W],
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GadgetKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown gadget kind `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    U,
    W,
    X,
    Y,
    Z,
    R,
    S,
    T,
}

impl Tag {
    fn letter(self) -> char {
        match self {
            Tag::U => 'u',
            Tag::W => 'w',
            Tag::X => 'x',
            Tag::Y => 'y',
            Tag::Z => 'z',
            Tag::R => 'r',
            Tag::S => 's',
            Tag::T => 't',
        }
    }
}

/// What a vertex of `H` stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Vertex of the source graph.
    Original(Vertex),
    /// Gadget vertex attached to a source vertex.
    Attached(Tag, Vertex),
    /// Gadget vertex shared by the whole construction.
    Hub(Tag),
    /// Subdivision vertex of the source edge with this index in `g.edges()`.
    Edge(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Original(v) => write!(f, "v{v}"),
            Role::Attached(tag, v) => write!(f, "{}_{v}", tag.letter()),
            Role::Hub(tag) => write!(f, "{}", tag.letter()),
            Role::Edge(i) => write!(f, "e_{i}"),
        }
    }
}

impl Serialize for Role {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error("the source graph must be connected")]
    Disconnected,
    #[error("the {kind} gadget needs a source graph with at least {min} vertices")]
    TooSmall { kind: GadgetKind, min: usize },
    #[error("the split gadget needs a clique/independent partition")]
    MissingPartition,
    #[error("the split gadget needs a non-empty independent part")]
    EmptyIndependentPart,
    #[error("the given set is not a {expected} of the {graph} graph")]
    InvalidSolution {
        expected: &'static str,
        graph: &'static str,
    },
    #[error("{kind} check is capped at n <= {max_n}{}, got n = {n}, m = {m}", .max_m.map(|m| format!(", m <= {m}")).unwrap_or_default())]
    SizeCapExceeded {
        kind: GadgetKind,
        n: usize,
        m: usize,
        max_n: usize,
        max_m: Option<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct GadgetOutput {
    pub h: Graph,
    pub kind: GadgetKind,
    /// Role of each vertex of `h`, indexed by vertex id.
    pub roles: Vec<Role>,
    pub source: Graph,
    /// Split partition of the source (only for `Split`).
    pub partition: Option<SplitPartition>,
    index: HashMap<Role, Vertex>,
}

impl GadgetOutput {
    pub fn vertex(&self, role: Role) -> Option<Vertex> {
        self.index.get(&role).copied()
    }

    fn at(&self, role: Role) -> Vertex {
        self.index[&role]
    }

    pub fn source_size(&self) -> usize {
        self.source.n()
    }

    pub fn source_edges(&self) -> usize {
        self.source.m()
    }

    /// Split partition of `h` (only for `Split`): the clique is the source
    /// clique with every `y` vertex and `s`, `w`; the rest is independent.
    pub fn h_partition(&self) -> Option<SplitPartition> {
        self.partition.as_ref()?;
        let (clique, independent): (Vec<Vertex>, Vec<Vertex>) = self.h.vertices().partition(|&v| {
            match self.roles[v] {
                Role::Original(u) => self.partition.as_ref().is_some_and(|p| p.clique.contains(u)),
                Role::Attached(Tag::Y, _) | Role::Hub(Tag::S) | Role::Hub(Tag::W) => true,
                _ => false,
            }
        });
        Some(SplitPartition::new(clique, independent))
    }
}

struct Builder {
    roles: Vec<Role>,
    index: HashMap<Role, Vertex>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn new(g: &Graph) -> Self {
        let roles: Vec<Role> = g.vertices().map(Role::Original).collect();
        let index = roles.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        Self {
            roles,
            index,
            edges: g.edges().to_vec(),
        }
    }

    fn add(&mut self, role: Role) -> Vertex {
        let id = self.roles.len();
        self.roles.push(role);
        self.index.insert(role, id);
        id
    }

    fn at(&self, role: Role) -> Vertex {
        self.index[&role]
    }

    fn join(&mut self, a: Role, b: Role) {
        self.edges.push((self.at(a), self.at(b)));
    }
}

/// Builds the gadget graph of `kind` over the connected graph `g`.
pub fn build_gadget(
    g: &Graph,
    kind: GadgetKind,
    partition: Option<&SplitPartition>,
) -> Result<GadgetOutput, ReductionError> {
    let min = kind.min_source_size();
    if g.n() < min {
        return Err(ReductionError::TooSmall { kind, min });
    }
    if !g.is_connected() {
        return Err(ReductionError::Disconnected);
    }
    let partition = match kind {
        GadgetKind::Split => {
            let p = partition.ok_or(ReductionError::MissingPartition)?;
            p.validate(g)?;
            if p.independent.is_empty() {
                return Err(ReductionError::EmptyIndependentPart);
            }
            Some(p.clone())
        }
        _ => None,
    };

    let mut b = Builder::new(g);
    for &tag in kind.attached_tags() {
        for v in g.vertices() {
            b.add(Role::Attached(tag, v));
        }
    }
    use Role::{Attached as At, Hub, Original as V};
    use Tag::*;
    match kind {
        GadgetKind::Gp4 => {
            for v in g.vertices() {
                b.join(V(v), At(W, v));
                b.join(At(W, v), At(X, v));
                b.join(At(X, v), At(Y, v));
                b.join(At(Y, v), At(Z, v));
            }
        }
        GadgetKind::Bipartite => {
            for v in g.vertices() {
                b.join(At(X, v), At(Y, v));
                b.join(At(Y, v), At(Z, v));
                b.join(At(Z, v), At(U, v));
                b.join(At(U, v), At(W, v));
                b.join(V(v), At(Z, v));
            }
        }
        GadgetKind::Split => {
            let p = partition.as_ref().expect("validated above");
            for v in p.clique.iter() {
                b.add(At(X, v));
            }
            for u in p.independent.iter() {
                b.add(At(Y, u));
            }
            for tag in [W, Z, R, S, T] {
                b.add(Hub(tag));
            }
            let clique: Vec<Role> = p
                .clique
                .iter()
                .map(V)
                .chain(p.independent.iter().map(|u| At(Y, u)))
                .chain([Hub(S), Hub(W)])
                .collect();
            for (i, &a) in clique.iter().enumerate() {
                for &c in &clique[i + 1..] {
                    if !matches!((a, c), (V(x), V(y)) if g.has_edge(x, y)) {
                        b.join(a, c);
                    }
                }
            }
            for v in p.clique.iter() {
                b.join(V(v), At(X, v));
                b.join(At(X, v), Hub(W));
            }
            for u in p.independent.iter() {
                b.join(V(u), At(Y, u));
                b.join(At(Y, u), Hub(T));
            }
            b.join(Hub(R), Hub(S));
            b.join(Hub(S), Hub(T));
            b.join(Hub(W), Hub(Z));
        }
        GadgetKind::Ln => {
            b.add(Hub(Y));
            b.add(Hub(Z));
            for v in g.vertices() {
                b.join(V(v), At(X, v));
                b.join(At(X, v), Hub(Y));
            }
            b.join(Hub(Y), Hub(Z));
        }
        GadgetKind::Apx => {
            b.edges.clear();
            for i in 0..g.m() {
                b.add(Role::Edge(i));
            }
            for v in g.vertices() {
                b.join(V(v), At(U, v));
                b.join(At(U, v), At(W, v));
                b.join(At(U, v), At(X, v));
                b.join(At(X, v), At(Y, v));
                b.join(At(Y, v), At(Z, v));
                b.join(At(Z, v), At(U, v));
            }
            for (i, &(x, y)) in g.edges().iter().enumerate() {
                b.join(Role::Edge(i), V(x));
                b.join(Role::Edge(i), V(y));
            }
        }
    }
    let h = Graph::from_edges(b.roles.len(), b.edges)?;
    Ok(GadgetOutput {
        h,
        kind,
        roles: b.roles,
        source: g.clone(),
        partition,
        index: b.index,
    })
}

/// Minimum vertex cover by exhaustive search over subsets in order of size;
/// the lexicographically smallest optimum is returned.
pub fn exact_vertex_cover(g: &Graph) -> Result<VertexSet, DominationError> {
    let n = g.n();
    if n > crate::domination::EXACT_MAX_VERTICES {
        return Err(DominationError::TooLarge {
            n,
            max: crate::domination::EXACT_MAX_VERTICES,
        });
    }
    fn search(g: &Graph, chosen: &mut Vec<Vertex>, next: Vertex, size: usize) -> bool {
        if chosen.len() == size {
            return g
                .edges()
                .iter()
                .all(|&(u, v)| chosen.contains(&u) || chosen.contains(&v));
        }
        for v in next..g.n() {
            chosen.push(v);
            if search(g, chosen, v + 1, size) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    for size in 0..=n {
        chosen.clear();
        if search(g, &mut chosen, 0, size) {
            return Ok(chosen.into_iter().collect());
        }
    }
    unreachable!("the full vertex set is a cover")
}

pub fn is_vertex_cover(g: &Graph, set: &VertexSet) -> bool {
    g.check_set(set).is_ok()
        && g
            .edges()
            .iter()
            .all(|&(u, v)| set.contains(u) || set.contains(v))
}

/// What a source solution must be for `kind`, and how it is checked.
fn source_requirement(kind: GadgetKind) -> &'static str {
    match kind {
        GadgetKind::Gp4 => "total dominating set",
        GadgetKind::Apx => "vertex cover",
        _ => "dominating set",
    }
}

fn is_source_solution(kind: GadgetKind, g: &Graph, set: &VertexSet) -> bool {
    match kind {
        GadgetKind::Gp4 => is_valid(g, set, DominationKind::Total),
        GadgetKind::Apx => is_vertex_cover(g, set),
        _ => is_valid(g, set, DominationKind::Dominating),
    }
}

/// Domination condition expected of gadget-side solutions.
pub fn gadget_kind_condition(kind: GadgetKind) -> DominationKind {
    match kind {
        GadgetKind::Gp4 => DominationKind::Total,
        _ => DominationKind::Semitotal,
    }
}

/// Lifts a solution of the source problem to a solution on `h`: a total
/// dominating set for `Gp4`, a semitotal dominating set otherwise.
pub fn extend_solution(go: &GadgetOutput, d_g: &VertexSet) -> Result<VertexSet, ReductionError> {
    let g = &go.source;
    if !is_source_solution(go.kind, g, d_g) || (go.kind == GadgetKind::Ln && d_g.is_empty()) {
        return Err(ReductionError::InvalidSolution {
            expected: source_requirement(go.kind),
            graph: "source",
        });
    }
    let per_vertex = |tags: [Tag; 2]| {
        g.vertices()
            .flat_map(move |v| tags.map(|t| Role::Attached(t, v)))
            .map(|r| go.at(r))
    };
    let mut out = d_g.clone();
    match go.kind {
        GadgetKind::Gp4 => out.extend(per_vertex([Tag::X, Tag::Y])),
        GadgetKind::Bipartite | GadgetKind::Apx => out.extend(per_vertex([Tag::U, Tag::Y])),
        GadgetKind::Split => out.extend([go.at(Role::Hub(Tag::W)), go.at(Role::Hub(Tag::S))]),
        GadgetKind::Ln => out.extend([go.at(Role::Hub(Tag::Y))]),
    }
    debug_assert!(is_valid(&go.h, &out, gadget_kind_condition(go.kind)));
    Ok(out)
}

/// Projects a solution on `h` back to a solution of the source problem,
/// choosing the smallest id whenever a replacement has a choice.
pub fn extract_solution(go: &GadgetOutput, d_h: &VertexSet) -> Result<VertexSet, ReductionError> {
    let condition = gadget_kind_condition(go.kind);
    if !is_valid(&go.h, d_h, condition) {
        return Err(ReductionError::InvalidSolution {
            expected: match condition {
                DominationKind::Total => "total dominating set",
                _ => "semitotal dominating set",
            },
            graph: "gadget",
        });
    }
    let g = &go.source;
    let mut out = VertexSet::new();
    for v in d_h.iter() {
        let mapped = match (go.kind, go.roles[v]) {
            (_, Role::Original(u)) => Some(u),
            (GadgetKind::Gp4, Role::Attached(Tag::W, u)) => match g.neighbors(u).first() {
                Some(&w) => Some(w),
                None => {
                    return Err(DominationError::Infeasible {
                        kind: DominationKind::Total,
                        vertex: u,
                    }
                    .into())
                }
            },
            (GadgetKind::Bipartite, Role::Attached(Tag::Z, u)) => Some(u),
            (GadgetKind::Split | GadgetKind::Ln, Role::Attached(Tag::X | Tag::Y, u)) => Some(u),
            (GadgetKind::Apx, Role::Edge(i)) => Some(g.edges()[i].0),
            _ => None,
        };
        if let Some(u) = mapped {
            out.insert(u);
        }
    }
    if go.kind == GadgetKind::Split && !is_valid(g, &out, DominationKind::Dominating) {
        // Only possible when no clique vertex survived, so every independent
        // vertex is in the set; trade one for a clique neighbour.
        let p = go.partition.as_ref().expect("split gadgets carry a partition");
        let u = out
            .iter()
            .find(|&u| p.independent.contains(u))
            .expect("a non-dominating projection contains an independent vertex");
        let k = *g.neighbors(u).first().expect("connected source with n >= 2");
        out.remove(u);
        out.insert(k);
    }
    debug_assert!(is_source_solution(go.kind, g, &out));
    Ok(out)
}

/// Upper bound on the size of [`extract_solution`] for an input of size
/// `d_h_len`.
pub fn extraction_bound(kind: GadgetKind, n: usize, d_h_len: usize) -> usize {
    match kind {
        GadgetKind::Gp4 | GadgetKind::Bipartite | GadgetKind::Apx => d_h_len.saturating_sub(2 * n),
        GadgetKind::Split => d_h_len.saturating_sub(2),
        GadgetKind::Ln => d_h_len.saturating_sub(1),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "==")]
    Eq,
    #[serde(rename = "<=")]
    Le,
}

impl Relation {
    fn holds(self, lhs: usize, rhs: usize) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Eq => "==",
            Relation::Le => "<=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub lhs: usize,
    pub relation: Relation,
    pub rhs: usize,
    pub holds: bool,
}

impl Check {
    fn new(label: impl Into<String>, lhs: usize, relation: Relation, rhs: usize) -> Self {
        Self {
            label: label.into(),
            lhs,
            relation,
            rhs,
            holds: relation.holds(lhs, rhs),
        }
    }

    fn flag(label: impl Into<String>, ok: bool) -> Self {
        Self::new(label, usize::from(ok), Relation::Eq, 1)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} {} {}", self.label, self.lhs, self.relation, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReductionReport {
    pub kind: GadgetKind,
    pub n: usize,
    pub m: usize,
    pub h_n: usize,
    pub h_m: usize,
    pub checks: Vec<Check>,
}

impl ReductionReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Builds the gadget and compares optimum values on both sides with the
/// exact oracles. Also round-trips optimal solutions through
/// [`extend_solution`] and [`extract_solution`].
pub fn check_reduction(
    g: &Graph,
    kind: GadgetKind,
    partition: Option<&SplitPartition>,
) -> Result<ReductionReport, ReductionError> {
    let (max_n, max_m) = kind.size_cap();
    if g.n() > max_n || max_m.is_some_and(|cap| g.m() > cap) {
        return Err(ReductionError::SizeCapExceeded {
            kind,
            n: g.n(),
            m: g.m(),
            max_n,
            max_m,
        });
    }
    let go = build_gadget(g, kind, partition)?;
    let n = g.n();
    let mut checks = Vec::new();
    let st_h = exact_min(&go.h, DominationKind::Semitotal)?;
    let source_opt = match kind {
        GadgetKind::Gp4 if n < 2 => None,
        GadgetKind::Gp4 => Some(exact_min(g, DominationKind::Total)?),
        GadgetKind::Apx => Some(exact_vertex_cover(g)?),
        _ => Some(exact_min(g, DominationKind::Dominating)?),
    };
    let opt = source_opt.as_ref().map(VertexSet::len);
    match kind {
        GadgetKind::Gp4 => {
            checks.push(Check::new("gamma_t2(H) == 2n", st_h.len(), Relation::Eq, 2 * n));
            if let Some(k) = opt {
                let t_h = exact_min(&go.h, DominationKind::Total)?;
                checks.push(Check::new(
                    "gamma_t(H) == 2n + gamma_t(G)",
                    t_h.len(),
                    Relation::Eq,
                    2 * n + k,
                ));
            }
        }
        GadgetKind::Bipartite => {
            let k = opt.expect("domination number exists");
            checks.push(Check::new("gamma_t2(H) == 2n + gamma(G)", st_h.len(), Relation::Eq, 2 * n + k));
        }
        GadgetKind::Split => {
            let k = opt.expect("domination number exists");
            checks.push(Check::new("gamma_t2(H) == gamma(G) + 2", st_h.len(), Relation::Eq, k + 2));
        }
        GadgetKind::Apx => {
            let k = opt.expect("vertex cover number exists");
            checks.push(Check::new("gamma_t2(H) == tau(G) + 2n", st_h.len(), Relation::Eq, k + 2 * n));
        }
        GadgetKind::Ln => {
            let k = opt.expect("domination number exists");
            checks.push(Check::new("gamma_t2(H) <= gamma(G) + 1", st_h.len(), Relation::Le, k + 1));
        }
    }

    if let Some(d_g) = &source_opt {
        let lifted = extend_solution(&go, d_g)?;
        checks.push(Check::flag(
            "extend(opt(G)) is valid on H",
            is_valid(&go.h, &lifted, gadget_kind_condition(kind)),
        ));
        let d_h = match kind {
            GadgetKind::Gp4 => exact_min(&go.h, DominationKind::Total)?,
            _ => st_h.clone(),
        };
        let back = extract_solution(&go, &d_h)?;
        checks.push(Check::flag(
            "extract(opt(H)) is valid on G",
            is_source_solution(kind, g, &back),
        ));
        checks.push(Check::new(
            "|extract(opt(H))| <= bound",
            back.len(),
            Relation::Le,
            extraction_bound(kind, n, d_h.len()),
        ));
    }
    Ok(ReductionReport {
        kind,
        n,
        m: g.m(),
        h_n: go.h.n(),
        h_m: go.h.m(),
        checks,
    })
}
