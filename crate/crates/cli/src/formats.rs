//! Text formats for graphs, interval models, vertex sets and split
//! partitions.
//!
//! Lines starting with `#` and blank lines are ignored everywhere.

use std::fmt::Write as _;
use std::path::Path;

use semitotal_core::graph::GraphError;
use semitotal_core::{Graph, Interval, IntervalModel, SplitPartition, Vertex, VertexSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} entries, found {found}")]
    Count { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn read_file(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), FormatError> {
    std::fs::write(path, contents).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Non-comment lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<T: std::str::FromStr>(line: usize, text: &str, want: usize) -> Result<Vec<T>, FormatError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != want {
        return Err(syntax(line, format!("expected {want} fields, found {}", fields.len())));
    }
    fields
        .iter()
        .map(|f| f.parse().map_err(|_| syntax(line, format!("cannot parse `{f}`"))))
        .collect()
}

/// Edge list: `n m`, then `m` lines `u v` with 0-based ids.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = data_lines(text);
    let (line, header) = lines.next().ok_or_else(|| syntax(1, "missing `n m` header"))?;
    let head: Vec<usize> = parse_fields(line, header, 2)?;
    let (n, m) = (head[0], head[1]);
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let e: Vec<Vertex> = parse_fields(line, text, 2)?;
        edges.push((e[0], e[1]));
    }
    if edges.len() != m {
        return Err(FormatError::Count {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_edge_list(g: &Graph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Interval file: `n`, then `n` lines `a b`.
pub fn parse_intervals(text: &str) -> Result<IntervalModel, FormatError> {
    let mut lines = data_lines(text);
    let (line, header) = lines.next().ok_or_else(|| syntax(1, "missing interval count"))?;
    let n: usize = parse_fields::<usize>(line, header, 1)?[0];
    let mut intervals = Vec::with_capacity(n);
    for (line, text) in lines {
        let ab: Vec<f64> = parse_fields(line, text, 2)?;
        intervals.push(Interval::new(ab[0], ab[1]));
    }
    if intervals.len() != n {
        return Err(FormatError::Count {
            expected: n,
            found: intervals.len(),
        });
    }
    Ok(IntervalModel::new(intervals))
}

pub fn write_intervals(m: &IntervalModel) -> String {
    let mut out = format!("{}\n", m.len());
    for iv in m.intervals() {
        let _ = writeln!(out, "{} {}", iv.left, iv.right);
    }
    out
}

/// Vertex ids separated by whitespace or commas.
pub fn parse_set(text: &str) -> Result<VertexSet, FormatError> {
    let mut set = VertexSet::new();
    for (line, text) in data_lines(text) {
        for field in text.split(|c: char| c.is_whitespace() || c == ',').filter(|f| !f.is_empty()) {
            let v = field
                .parse()
                .map_err(|_| syntax(line, format!("cannot parse vertex `{field}`")))?;
            set.insert(v);
        }
    }
    Ok(set)
}

/// `--set` argument: a path to a set file if one exists, otherwise an
/// inline list.
pub fn resolve_set(arg: &str) -> Result<VertexSet, FormatError> {
    let path = Path::new(arg);
    if path.is_file() {
        parse_set(&read_file(path)?)
    } else {
        parse_set(arg)
    }
}

/// Partition file: one line `K ids...` and one line `I ids...`.
pub fn parse_partition(text: &str) -> Result<SplitPartition, FormatError> {
    let mut clique = None;
    let mut independent = None;
    for (line, text) in data_lines(text) {
        let mut fields = text.split_whitespace();
        let slot = match fields.next() {
            Some("K") => &mut clique,
            Some("I") => &mut independent,
            Some(other) => return Err(syntax(line, format!("expected `K` or `I`, found `{other}`"))),
            None => continue,
        };
        if slot.is_some() {
            return Err(syntax(line, "part listed twice"));
        }
        let ids: Result<Vec<Vertex>, _> = fields
            .map(|f| f.parse().map_err(|_| syntax(line, format!("cannot parse vertex `{f}`"))))
            .collect();
        *slot = Some(VertexSet::from(ids?));
    }
    Ok(SplitPartition {
        clique: clique.unwrap_or_default(),
        independent: independent.unwrap_or_default(),
    })
}

pub fn write_partition(p: &SplitPartition) -> String {
    let join = |s: &VertexSet| s.iter().map(|v| format!(" {v}")).collect::<String>();
    format!("K{}\nI{}\n", join(&p.clique), join(&p.independent))
}
