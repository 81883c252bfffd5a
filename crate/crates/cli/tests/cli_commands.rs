mod common;

use common::{path, schema, semitotal, write};
use serde_json::json;
use tempfile::tempdir;

const P5_INTERVALS: &str = "5\n1 4\n3 8\n5 12\n9 14\n13 16\n";
const C4: &str = "# 4-cycle\n4 4\n0 1\n1 2\n2 3\n0 3\n";

#[test]
fn solve_examples() {
    let dir = tempdir().unwrap();
    let p5 = write(dir.path(), "p5.txt", P5_INTERVALS);
    let c4 = write(dir.path(), "c4.txt", C4);

    let run = semitotal(&["solve", "--algo", "interval", "--format", "intervals", "--input", &p5]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc = run.json();
    assert_eq!(doc["size"], 2);
    assert_eq!(doc["verified"], true);
    assert_eq!(doc["set"], json!([1, 3]));

    let run = semitotal(&["solve", "--algo", "exact", "--input", &c4]);
    assert_eq!(run.code, 0);
    assert_eq!(run.json()["size"], 2);

    for algo in ["exact", "approx"] {
        let run = semitotal(&["solve", "--algo", algo, "--kind", "dom", "--input", &c4]);
        assert_eq!(run.code, 0, "{algo}: {}", run.stderr);
        assert_eq!(run.json()["size"], 2);
    }

    // Two disjoint edges: approx solves each component on its own.
    let two = write(dir.path(), "two.txt", "4 2\n0 1\n2 3\n");
    for kind in ["semitotal", "dom"] {
        let run = semitotal(&["solve", "--algo", "approx", "--kind", kind, "--input", &two]);
        assert_eq!(run.code, 0, "{kind}: {}", run.stderr);
        assert_eq!(run.json()["verified"], true);
    }
}

#[test]
fn exit_codes() {
    let dir = tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", C4);
    let lonely = write(dir.path(), "lonely.txt", "3 1\n0 1\n");
    let bad = write(dir.path(), "bad.txt", "3 2\n0 1\n");
    let big = write(dir.path(), "big.txt", "65 0\n");

    let run = semitotal(&["verify", "--input", &c4, "--set", "0", "--kind", "semitotal"]);
    assert_eq!(run.code, 2);
    let doc = run.json();
    assert_eq!(doc["valid"], false);
    assert_eq!(doc["violations"][0], json!({"vertex": 0, "reason": "NO_PARTNER_WITHIN_2"}));

    let run = semitotal(&["verify", "--input", &c4, "--set", "0,2", "--kind", "semi"]);
    assert_eq!(run.code, 0);

    let run = semitotal(&["solve", "--algo", "exact", "--input", &lonely]);
    assert_eq!(run.code, 3);
    assert_eq!(run.json()["error"], "INFEASIBLE");

    let run = semitotal(&["solve", "--algo", "exact", "--input", &bad]);
    assert_eq!(run.code, 1);

    let run = semitotal(&["solve", "--algo", "exact", "--kind", "dom", "--input", &big]);
    assert_eq!(run.code, 4);

    let run = semitotal(&["check-reduction", "--kind", "bipartite", "--all-connected", "5"]);
    assert_eq!(run.code, 4);
    assert_eq!(run.json()["error"], "SIZE_CAP_EXCEEDED");

    assert_eq!(semitotal(&["solve", "--algo", "nope"]).code, 1);
    assert_eq!(semitotal(&["frobnicate"]).code, 1);
    assert_eq!(semitotal(&[]).code, 1);
    assert_eq!(semitotal(&["--help"]).code, 0);
    assert_eq!(semitotal(&["--version"]).code, 0);
}

#[test]
fn reduce_writes_graph_and_roles() {
    let dir = tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", C4);
    let out = path(&dir.path().join("h.txt"));
    let run = semitotal(&["reduce", "--kind", "bipartite", "--input", &c4, "--output", &out]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.json()["hN"], 24);
    let h = std::fs::read_to_string(&out).unwrap();
    assert!(h.lines().any(|l| l == "24 24"));
    let roles: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("h.txt.roles.json")).unwrap()).unwrap();
    assert_eq!(roles["roles"].as_array().unwrap().len(), 24);
    assert_eq!(roles["roles"][12], "z_0");

    // The gadget graph feeds straight back into the solver.
    let run = semitotal(&["solve", "--algo", "exact", "--input", &out]);
    assert_eq!(run.json()["size"], 10);
}

#[test]
fn split_reduction_via_partition_file() {
    let dir = tempdir().unwrap();
    let g = path(&dir.path().join("s.txt"));
    let part = path(&dir.path().join("s.part"));
    let run = semitotal(&["gen", "--family", "split", "--size", "2", "--ind", "2", "--seed", "3", "--output", &g, "--partition-out", &part]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let run = semitotal(&["check-reduction", "--kind", "split", "--input", &g, "--partition", &part]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert_eq!(run.json()["holds"], true);

    let out = path(&dir.path().join("h.txt"));
    let run = semitotal(&["reduce", "--kind", "split", "--input", &g, "--output", &out]);
    assert_eq!(run.code, 1, "split without a partition is invalid input");
}

#[test]
fn check_reduction_examples() {
    let run = semitotal(&["check-reduction", "--kind", "split", "--clique", "1", "--ind", "1"]);
    assert_eq!(run.code, 0);
    let doc = run.json();
    assert_eq!(doc["reports"][0]["checks"][0]["lhs"], 3);

    let run = semitotal(&["check-reduction", "--kind", "apx", "--all-connected", "3"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.json()["instances"], 1 + 1 + 4);

    let run = semitotal(&["check-reduction", "--kind", "gp4", "--size", "3", "--count", "4", "--seed", "9"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.json()["instances"], 4);
}

#[test]
fn gen_is_deterministic() {
    let a = semitotal(&["gen", "--family", "connected", "--size", "9", "--seed", "4"]);
    let b = semitotal(&["gen", "--family", "connected", "--size", "9", "--seed", "4"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let star = semitotal(&["gen", "--family", "star", "--size", "4"]);
    assert_eq!(star.stdout, "4 3\n0 1\n0 2\n0 3\n");
    let iv = semitotal(&["gen", "--family", "interval", "--size", "2", "--seed", "1"]);
    assert!(iv.stdout.starts_with("2\n"));
}

#[test]
fn bench_reports_rows_and_ratios() {
    let run = semitotal(&["bench", "--algo", "interval", "--sizes", "50,100", "--reps", "2", "--seed", "1"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc = run.json();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 2);
    assert_eq!(doc["ratios"][0]["from"], 50);
}

fn golden(name: &str, doc: &serde_json::Value) {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.schema"));
    let actual = schema(doc) + "\n";
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "schema of `{name}` changed");
}

#[test]
fn output_schemas_are_stable() {
    let dir = tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", C4);
    let p5 = write(dir.path(), "p5.txt", P5_INTERVALS);
    let lonely = write(dir.path(), "lonely.txt", "3 1\n0 1\n");
    let h = path(&dir.path().join("h.txt"));
    let gen_out = path(&dir.path().join("g.txt"));
    let runs = [
        ("solve_exact", semitotal(&["solve", "--algo", "exact", "--input", &c4])),
        ("solve_interval", semitotal(&["solve", "--algo", "interval", "--format", "intervals", "--input", &p5])),
        ("solve_approx", semitotal(&["solve", "--algo", "approx", "--input", &c4])),
        ("verify", semitotal(&["verify", "--input", &c4, "--set", "0", "--kind", "semitotal"])),
        ("verify_valid", semitotal(&["verify", "--input", &c4, "--set", "0 1", "--kind", "semitotal"])),
        ("reduce", semitotal(&["reduce", "--kind", "ln", "--input", &c4, "--output", &h])),
        ("check_reduction", semitotal(&["check-reduction", "--kind", "split", "--clique", "1", "--ind", "1"])),
        ("gen", semitotal(&["gen", "--family", "path", "--size", "3", "--output", &gen_out])),
        ("bench", semitotal(&["bench", "--sizes", "20,40", "--reps", "1"])),
        ("error", semitotal(&["solve", "--algo", "exact", "--input", &lonely])),
    ];
    for (name, run) in runs {
        golden(name, &run.json());
    }
    let roles: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("h.txt.roles.json")).unwrap()).unwrap();
    golden("roles_sidecar", &roles);
}
