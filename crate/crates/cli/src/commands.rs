use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use semitotal_core::approx::{algo_dom_set, approx_semitotal};
use semitotal_core::domination::{exact_min, is_valid, verify, Violation};
use semitotal_core::generators::{gen_connected_graph, gen_interval_model, gen_named, gen_split_graph, NamedFamily};
use semitotal_core::interval_solver::solve_interval;
use semitotal_core::reductions::{build_gadget, check_reduction, GadgetKind, ReductionError, ReductionReport, Role};
use semitotal_core::{DominationKind, Graph, IntervalModel, SplitPartition, VertexSet};

use crate::args::{
    Algo, BenchAlgo, BenchArgs, CheckReductionArgs, Family, Format, GenArgs, InputArgs, ReduceArgs, SolveArgs,
    VerifyArgs,
};
use crate::formats::{
    parse_edge_list, parse_intervals, parse_partition, read_file, resolve_set, write_edge_list, write_file,
    write_intervals, write_partition,
};
use crate::output::{CliError, Outcome, RunResult, EXIT_VERIFY};

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Graph of the input plus the interval model when the input is one.
fn load(input: &InputArgs) -> Result<(Graph, Option<IntervalModel>), CliError> {
    let text = read_file(&input.input)?;
    match input.format {
        Format::Edgelist => Ok((parse_edge_list(&text)?, None)),
        Format::Intervals => {
            let model = parse_intervals(&text)?;
            model.validate().map_err(|e| CliError::Input(e.to_string()))?;
            Ok((model.intersection_graph(), Some(model)))
        }
    }
}

fn load_partition(path: Option<&Path>) -> Result<Option<SplitPartition>, CliError> {
    path.map(|p| Ok(parse_partition(&read_file(p)?)?)).transpose()
}

fn require_no_isolated(g: &Graph, kind: DominationKind) -> Result<(), CliError> {
    if kind == DominationKind::Dominating {
        return Ok(());
    }
    match g.vertices().find(|&v| g.degree(v) == 0) {
        Some(v) => Err(CliError::Infeasible(format!(
            "no {kind} dominating set exists: vertex {v} is isolated"
        ))),
        None => Ok(()),
    }
}

/// Runs a solver that needs a connected input on each component and maps the
/// union back to the original ids.
fn per_component<E>(g: &Graph, solve: impl Fn(&Graph) -> Result<VertexSet, E>) -> Result<VertexSet, CliError>
where
    CliError: From<E>,
{
    let mut set = VertexSet::new();
    for component in g.components() {
        let sub = g.induced_subgraph(&component).map_err(|e| CliError::Input(e.to_string()))?;
        set.extend(solve(&sub)?.iter().map(|v| component[v]));
    }
    Ok(set)
}

pub fn solve(a: &SolveArgs) -> Result<Outcome, CliError> {
    let (g, model) = load(&a.input)?;
    let kind = DominationKind::from(a.kind);
    let start = Instant::now();
    let (set, extra) = match a.algo {
        Algo::Exact => (exact_min(&g, kind)?, json!({ "kind": kind })),
        Algo::Interval => {
            let model = model.ok_or_else(|| CliError::Input("--algo interval needs --format intervals".into()))?;
            if kind != DominationKind::Semitotal {
                return Err(CliError::Input("--algo interval solves only --kind semitotal".into()));
            }
            let components = model
                .canonicalize()
                .map_err(|e| CliError::Input(e.to_string()))?
                .component_ranges()
                .len();
            (solve_interval(&model)?, json!({ "kind": kind, "components": components }))
        }
        Algo::Approx => match kind {
            DominationKind::Semitotal => {
                require_no_isolated(&g, kind)?;
                let bound = 2.0 + 3.0 * ((g.max_degree() + 1) as f64).ln();
                (per_component(&g, approx_semitotal)?, json!({ "kind": kind, "ratioBound": bound }))
            }
            DominationKind::Dominating => (per_component(&g, |c| algo_dom_set(c, a.k))?, json!({ "kind": kind, "k": a.k })),
            DominationKind::Total => {
                return Err(CliError::Input("--algo approx supports --kind semitotal or dom".into()));
            }
        },
    };
    let elapsed_ms = millis(start);
    if !is_valid(&g, &set, kind) {
        return Err(CliError::Verification(format!("solver output {set} is not a {kind} dominating set")));
    }
    Ok(Outcome::ok(RunResult {
        algorithm: format!("{:?}", a.algo).to_lowercase(),
        n: g.n(),
        m: g.m(),
        size: set.len(),
        set: set.into(),
        verified: true,
        elapsed_ms,
        extra,
    }))
}

#[derive(Serialize)]
struct VerifyDocument {
    kind: DominationKind,
    n: usize,
    m: usize,
    size: usize,
    set: VertexSet,
    valid: bool,
    violations: Vec<Violation>,
}

pub fn verify_set(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let (g, _) = load(&a.input)?;
    let set = resolve_set(&a.set)?;
    let kind = DominationKind::from(a.kind);
    let report = verify(&g, &set, kind)?;
    let code = if report.valid { 0 } else { EXIT_VERIFY };
    Ok(Outcome::with_code(
        VerifyDocument {
            kind,
            n: g.n(),
            m: g.m(),
            size: set.len(),
            set,
            valid: report.valid,
            violations: report.violations,
        },
        code,
    ))
}

/// Path of the role-map sidecar written next to a gadget graph.
pub fn sidecar_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".roles.json");
    PathBuf::from(name)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RoleSidecar<'a> {
    kind: GadgetKind,
    source_n: usize,
    source_m: usize,
    roles: &'a [Role],
    #[serde(skip_serializing_if = "Option::is_none")]
    h_partition: Option<SplitPartition>,
}

pub fn reduce(a: &ReduceArgs) -> Result<Outcome, CliError> {
    let g = parse_edge_list(&read_file(&a.input)?)?;
    let partition = load_partition(a.partition.as_deref())?;
    let kind = GadgetKind::from(a.kind);
    let start = Instant::now();
    let go = build_gadget(&g, kind, partition.as_ref())?;
    let elapsed_ms = millis(start);
    let comment = format!("{kind} gadget of a graph with n={} m={}", g.n(), g.m());
    write_file(&a.output, &write_edge_list(&go.h, Some(&comment)))?;
    let sidecar = sidecar_path(&a.output);
    let roles = RoleSidecar {
        kind,
        source_n: g.n(),
        source_m: g.m(),
        roles: &go.roles,
        h_partition: go.h_partition(),
    };
    write_file(&sidecar, &serde_json::to_string_pretty(&roles).expect("roles serialize"))?;
    Ok(Outcome::ok(json!({
        "kind": kind,
        "n": g.n(),
        "m": g.m(),
        "hN": go.h.n(),
        "hM": go.h.m(),
        "output": a.output,
        "roles": sidecar,
        "elapsedMs": elapsed_ms,
    })))
}

/// Every labelled connected graph on exactly `n` vertices.
fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e);
            Graph::from_edges(n, edges).expect("distinct pairs")
        })
        .filter(Graph::is_connected)
        .collect()
}

fn reduction_sources(
    a: &CheckReductionArgs,
    kind: GadgetKind,
) -> Result<Vec<(Graph, Option<SplitPartition>)>, CliError> {
    if let Some(path) = &a.input {
        let g = parse_edge_list(&read_file(path)?)?;
        return Ok(vec![(g, load_partition(a.partition.as_deref())?)]);
    }
    if let Some(max) = a.all_connected {
        if kind == GadgetKind::Split {
            return Err(CliError::Input("--all-connected does not apply to split; use --clique/--ind".into()));
        }
        let (max_n, max_m) = kind.size_cap();
        if max > max_n {
            return Err(ReductionError::SizeCapExceeded { kind, n: max, m: 0, max_n, max_m }.into());
        }
        return Ok((kind.min_source_size()..=max)
            .flat_map(connected_graphs)
            .map(|g| (g, None))
            .collect());
    }
    let seeds = (0..a.count as u64).map(|i| a.seed.wrapping_add(i));
    if let (Some(p), Some(q)) = (a.clique, a.ind) {
        return seeds
            .map(|s| gen_split_graph(p, q, a.density, s).map(|(g, part)| (g, Some(part))).map_err(Into::into))
            .collect();
    }
    if let Some(n) = a.size {
        return seeds
            .map(|s| gen_connected_graph(n, a.density, s).map(|g| (g, None)).map_err(Into::into))
            .collect();
    }
    Err(CliError::Input(
        "choose sources with --input, --all-connected, --clique/--ind or --size".into(),
    ))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CheckDocument {
    kind: GadgetKind,
    instances: usize,
    holds: bool,
    elapsed_ms: f64,
    reports: Vec<ReductionReport>,
}

pub fn check(a: &CheckReductionArgs) -> Result<Outcome, CliError> {
    let kind = GadgetKind::from(a.kind);
    let sources = reduction_sources(a, kind)?;
    let start = Instant::now();
    let reports: Vec<ReductionReport> = sources
        .par_iter()
        .map(|(g, p)| check_reduction(g, kind, p.as_ref()))
        .collect::<Result<_, _>>()?;
    let holds = reports.iter().all(ReductionReport::holds);
    let doc = CheckDocument {
        kind,
        instances: reports.len(),
        holds,
        elapsed_ms: millis(start),
        reports,
    };
    Ok(Outcome::with_code(doc, if holds { 0 } else { EXIT_VERIFY }))
}

pub fn generate(a: &GenArgs) -> Result<Outcome, CliError> {
    let named = |f| gen_named(f, a.size, a.seed);
    let mut partition = None;
    let (text, n, m) = match a.family {
        Family::Interval => {
            let model = gen_interval_model(a.size, a.seed)?;
            let g = model.intersection_graph();
            (write_intervals(&model), g.n(), g.m())
        }
        family => {
            let g = match family {
                Family::Path => named(NamedFamily::Path)?,
                Family::Cycle => named(NamedFamily::Cycle)?,
                Family::Star => named(NamedFamily::Star)?,
                Family::Complete => named(NamedFamily::Complete)?,
                Family::Gp4 => named(NamedFamily::Gp4)?,
                Family::Connected => gen_connected_graph(a.size, a.p, a.seed)?,
                Family::Split => {
                    let (g, p) = gen_split_graph(a.size, a.ind, a.p, a.seed)?;
                    partition = Some(p);
                    g
                }
                Family::Interval => unreachable!(),
            };
            let comment = partition.as_ref().map(|p| write_partition(p).trim_end().to_string());
            (write_edge_list(&g, comment.as_deref()), g.n(), g.m())
        }
    };
    if let (Some(p), Some(path)) = (&partition, &a.partition_out) {
        write_file(path, &write_partition(p))?;
    }
    let Some(output) = &a.output else {
        return Ok(Outcome::text(text));
    };
    write_file(output, &text)?;
    let mut doc = json!({
        "family": format!("{:?}", a.family).to_lowercase(),
        "n": n,
        "m": m,
        "seed": a.seed,
        "output": output,
    });
    if let (Some(_), Some(path)) = (&partition, &a.partition_out) {
        doc["partitionOut"] = json!(path);
    }
    Ok(Outcome::ok(doc))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BenchRow {
    n: usize,
    m: usize,
    seed: u64,
    size: usize,
    min_ms: f64,
    median_ms: f64,
}

#[derive(Serialize)]
struct BenchRatio {
    from: usize,
    to: usize,
    ratio: f64,
}

/// First seed at or after `seed` whose interval model has no single-interval
/// component, so that a semitotal dominating set exists.
fn feasible_interval_model(n: usize, seed: u64) -> Result<(IntervalModel, u64), CliError> {
    for s in seed..seed.saturating_add(1000) {
        let model = gen_interval_model(n, s)?;
        let c = model.canonicalize().map_err(|e| CliError::Input(e.to_string()))?;
        if c.component_ranges().iter().all(|r| r.len() >= 2) {
            return Ok((model, s));
        }
    }
    Err(CliError::Infeasible(format!("no feasible interval model of size {n} near seed {seed}")))
}

// Sizes run one after another: parallel runs would skew each other's timings.
pub fn bench(a: &BenchArgs) -> Result<Outcome, CliError> {
    if a.reps == 0 || a.sizes.is_empty() || a.sizes.contains(&0) {
        return Err(CliError::Input("--reps and every --sizes entry must be positive".into()));
    }
    let mut rows = Vec::new();
    for &n in &a.sizes {
        let (times, size, m, seed) = match a.algo {
            BenchAlgo::Interval => {
                let (model, seed) = feasible_interval_model(n, a.seed)?;
                let mut times = Vec::with_capacity(a.reps);
                let mut size = 0;
                for _ in 0..a.reps {
                    let start = Instant::now();
                    size = solve_interval(&model)?.len();
                    times.push(millis(start));
                }
                (times, size, model.intersection_graph().m(), seed)
            }
            BenchAlgo::Approx => {
                let g = gen_connected_graph(n, (8.0 / n as f64).min(1.0), a.seed)?;
                let mut times = Vec::with_capacity(a.reps);
                let mut size = 0;
                for _ in 0..a.reps {
                    let start = Instant::now();
                    size = approx_semitotal(&g)?.len();
                    times.push(millis(start));
                }
                (times, size, g.m(), a.seed)
            }
        };
        let mut sorted = times;
        sorted.sort_by(f64::total_cmp);
        rows.push(BenchRow {
            n,
            m,
            seed,
            size,
            min_ms: sorted[0],
            median_ms: sorted[sorted.len() / 2],
        });
    }
    let ratios: Vec<BenchRatio> = rows
        .windows(2)
        .map(|w| BenchRatio {
            from: w[0].n,
            to: w[1].n,
            ratio: w[1].min_ms / w[0].min_ms.max(f64::MIN_POSITIVE),
        })
        .collect();
    Ok(Outcome::ok(json!({
        "algorithm": format!("{:?}", a.algo).to_lowercase(),
        "reps": a.reps,
        "rows": rows,
        "ratios": ratios,
    })))
}
