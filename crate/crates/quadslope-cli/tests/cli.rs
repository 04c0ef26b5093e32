//! End-to-end tests of the command-line interface and its exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use quadslope::document::DrawingDocument;
use quadslope::geometry::Point;
use quadslope::{fixture_drawing, samples, to_graph6, FixtureName};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadslope"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_quadslope"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn write(path: &Path, content: &str) {
    fs::write(path, content).expect("writable temp dir");
}

#[test]
fn draw_k4_emits_valid_document() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("k4.g6");
    let out = dir.path().join("k4.json");
    write(&input, &to_graph6(&samples::k4()));
    let result = run(&[
        "draw",
        "--in",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--emit",
        "json",
    ]);
    assert!(result.status.success(), "{result:?}");
    let doc = DrawingDocument::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc.graph.n, 4);
    assert_eq!(doc.graph.edges.len(), 6);
    assert_eq!(doc.slopes, quadslope::SlopeSet::basic());
    assert!(doc.trace.is_none());
}

#[test]
fn draw_petersen_traces_fixture_branch() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("petersen.g6");
    let out = dir.path().join("petersen.json");
    write(&input, &to_graph6(&samples::petersen()));
    let result = run(&[
        "draw",
        "--in",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--trace",
    ]);
    assert!(result.status.success());
    let doc = DrawingDocument::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    let trace = doc.trace.expect("trace requested");
    assert_eq!(
        serde_json::to_value(&trace.branch).unwrap(),
        serde_json::json!("fixture")
    );
}

#[test]
fn draw_rejects_non_cubic_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("c5.g6");
    let out = dir.path().join("c5.json");
    let five_cycle =
        quadslope::Graph::simple(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    write(&input, &to_graph6(&five_cycle));
    let result = run(&[
        "draw",
        "--in",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("not cubic"), "{stderr}");
}

#[test]
fn draw_reports_budget_exhaustion() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("prism.g6");
    let out = dir.path().join("prism.json");
    write(&input, &to_graph6(&samples::prism()));
    let result = run(&[
        "draw",
        "--in",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--budget",
        "1",
    ]);
    assert_eq!(result.status.code(), Some(3));
    // The environment override kicks in when no flag is given...
    let result = run_env(
        &[
            "draw",
            "--in",
            input.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
        ],
        &[("QUADSLOPE_BUDGET", "1")],
    );
    assert_eq!(result.status.code(), Some(3));
    // ...and the flag beats the environment.
    let result = run_env(
        &[
            "draw",
            "--in",
            input.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
            "--budget",
            "1000000",
        ],
        &[("QUADSLOPE_BUDGET", "1")],
    );
    assert_eq!(result.status.code(), Some(0));
}

#[test]
fn draw_emits_svg() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("tietze.g6");
    let out = dir.path().join("tietze.svg");
    write(&input, &to_graph6(&samples::tietze()));
    let result = run(&[
        "draw",
        "--in",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--emit",
        "svg",
    ]);
    assert!(result.status.success());
    let svg = fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<line").count(), 18);
}

#[test]
fn draw_batch_graph6_emits_array() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("batch.g6");
    let out = dir.path().join("batch.json");
    write(
        &input,
        &format!(
            "{}\n{}\n",
            to_graph6(&samples::k4()),
            to_graph6(&samples::prism())
        ),
    );
    let result = run(&[
        "draw",
        "--in",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(result.status.success());
    let docs: Vec<DrawingDocument> =
        serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(docs.len(), 2);
    assert_eq!(docs[0].graph.n, 4);
    assert_eq!(docs[1].graph.n, 6);
}

#[test]
fn verify_accepts_stored_fixture_and_rejects_perturbation() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("tietze.g6");
    let fixture = fixture_drawing(FixtureName::Tietze);
    write(&graph_path, &to_graph6(&fixture.graph));

    let doc_path = dir.path().join("tietze.json");
    let doc = DrawingDocument::from_drawing(&fixture, None);
    write(&doc_path, &doc.to_json().unwrap());
    let result = run(&[
        "verify",
        "--graph",
        graph_path.to_str().unwrap(),
        "--drawing",
        doc_path.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(0), "{result:?}");

    // One perturbed coordinate: rejected with a witness edge.
    let mut broken = fixture.clone();
    broken.pos[0] = Point::from_ints(0, 7);
    let broken_path = dir.path().join("broken.json");
    write(
        &broken_path,
        &DrawingDocument::from_drawing(&broken, None).to_json().unwrap(),
    );
    let result = run(&[
        "verify",
        "--graph",
        graph_path.to_str().unwrap(),
        "--drawing",
        broken_path.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(2));
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(stdout.contains("edge"), "{stdout}");
}

#[test]
fn verify_with_restricted_slope_list_fails() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("petersen.g6");
    let fixture = fixture_drawing(FixtureName::Petersen);
    write(&graph_path, &to_graph6(&fixture.graph));
    let doc_path = dir.path().join("petersen.json");
    write(
        &doc_path,
        &DrawingDocument::from_drawing(&fixture, None).to_json().unwrap(),
    );
    let result = run(&[
        "verify",
        "--graph",
        graph_path.to_str().unwrap(),
        "--drawing",
        doc_path.to_str().unwrap(),
        "--slopes",
        "0,1,inf",
    ]);
    assert_eq!(result.status.code(), Some(2));
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(stdout.contains("slope"), "{stdout}");
}

#[test]
fn verify_detects_schema_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("k33.g6");
    write(&graph_path, &to_graph6(&samples::k33()));
    let doc_path = dir.path().join("tietze.json");
    let doc = DrawingDocument::from_drawing(&fixture_drawing(FixtureName::Tietze), None);
    write(&doc_path, &doc.to_json().unwrap());
    let result = run(&[
        "verify",
        "--graph",
        graph_path.to_str().unwrap(),
        "--drawing",
        doc_path.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("mismatch"), "{stderr}");
}

#[test]
fn bounds_rows_match_known_values() {
    let result = run(&["bounds", "--n-range", "6:6:2"]);
    assert!(result.status.success());
    assert_eq!(String::from_utf8_lossy(&result.stdout).trim(), "[6,10,4,3]");

    let result = run(&["bounds", "--n-range", "18:18:2"]);
    assert_eq!(String::from_utf8_lossy(&result.stdout).trim(), "[18,16,6,4]");

    let result = run(&["bounds", "--n-range", "40:42:2"]);
    let rows: Vec<String> = String::from_utf8_lossy(&result.stdout)
        .lines()
        .map(str::to_string)
        .collect();
    assert_eq!(rows, vec!["[40,24,8,8]", "[42,24,8,8]"]);

    let result = run(&["bounds", "--n-range", "6:2"]);
    assert_eq!(result.status.code(), Some(1));
}

#[test]
fn slopes_verdicts() {
    let result = run(&["slopes", "--set", "0,1,inf,-1"]);
    assert!(result.status.success());
    let stdout = String::from_utf8_lossy(&result.stdout);
    assert!(stdout.starts_with("good"));
    assert!(stdout.contains("witness"));

    let result = run(&["slopes", "--set", "0,1,2,3"]);
    assert!(result.status.success());
    assert_eq!(
        String::from_utf8_lossy(&result.stdout).trim(),
        "not good"
    );

    let result = run(&["slopes", "--set", "0,1,inf"]);
    assert_eq!(result.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&result.stderr);
    assert!(stderr.contains("four"), "{stderr}");
}

#[test]
fn draw_accepts_edge_list_format() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("k4.edges");
    let out = dir.path().join("k4.json");
    write(&input, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let result = run(&[
        "draw",
        "--in",
        input.to_str().unwrap(),
        "--format",
        "edges",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(result.status.success());
    let result = run(&[
        "verify",
        "--graph",
        input.to_str().unwrap(),
        "--format",
        "edges",
        "--drawing",
        out.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(0));
}
