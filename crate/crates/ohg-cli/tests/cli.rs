//! End-to-end tests of the `ohg` binary: golden outputs and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fixture_path(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ohg"))
        .args(args)
        .current_dir(env!("CARGO_TARGET_TMPDIR"))
        .output()
        .expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ohg"))
        .args(args)
        .current_dir(env!("CARGO_TARGET_TMPDIR"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn info_prints_the_structural_summary() {
    let out = run(&["info", &fixture_path("p3.ohg")]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "vertices 3\nedges 2\nmax-degree 2\nrank 2\nlinear yes\nuniform 2\nregular -\n"
    );
}

#[test]
fn dual_twice_reproduces_the_input() {
    let p3 = std::fs::read_to_string(fixture_path("p3.ohg")).unwrap();
    let once = run(&["dual", &fixture_path("p3.ohg")]);
    assert!(once.status.success());
    let twice = run_with_stdin(&["dual", "-"], &stdout(&once));
    assert!(twice.status.success());
    assert_eq!(stdout(&twice), p3);
}

#[test]
fn linegraph_of_p3() {
    let out = run(&["linegraph", &fixture_path("p3.ohg")]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "ohg 1\nvertex e1\nvertex e2\nedge e1~e2 = e1:+ e2:+\n"
    );
}

#[test]
fn linegraph_rejects_nonlinear_input_with_exit_two() {
    let doc = "ohg 1\nvertex a\nvertex b\nvertex c\nedge big = a:+ b:+ c:+\nedge sub = b:+ c:-\n";
    let out = run_with_stdin(&["linegraph", "-"], doc);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("share more than one vertex"));
}

#[test]
fn section_output() {
    let strict = run(&["section", "-k", "2", "--strict", &fixture_path("p3.ohg")]);
    assert!(strict.status.success());
    assert_eq!(
        stdout(&strict),
        "ohg 1\nvertex v1\nvertex v2\nvertex v3\nedge e1|v1,v2 = v1:+ v2:+\nedge e2|v2,v3 = v2:+ v3:-\n"
    );
    let lax = run(&["section", "-k", "2", &fixture_path("p3.ohg")]);
    assert_eq!(stdout(&strict), stdout(&lax));
    let bad = run(&["section", "-k", "0", &fixture_path("p3.ohg")]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn matrix_outputs() {
    let adjacency = run(&["matrix", "--kind", "adjacency", &fixture_path("p3.ohg")]);
    assert_eq!(stdout(&adjacency), "0 -1 0\n-1 0 1\n0 1 0\n");
    let laplacian = run(&["matrix", "--kind", "laplacian", &fixture_path("p3.ohg")]);
    assert_eq!(stdout(&laplacian), "1 1 0\n1 2 -1\n0 -1 1\n");
    let incidence_dual = run(&[
        "matrix",
        "--kind",
        "incidence",
        "--dual",
        &fixture_path("p3.ohg"),
    ]);
    assert_eq!(stdout(&incidence_dual), "1 1 0\n0 1 -1\n");
    let degree = run(&["matrix", "--kind", "degree", &fixture_path("p3.ohg")]);
    assert_eq!(stdout(&degree), "1 0 0\n0 2 0\n0 0 1\n");
}

#[test]
fn spectrum_outputs() {
    let lap = run(&["spectrum", "--matrix", "laplacian", &fixture_path("p3.ohg")]);
    assert_eq!(stdout(&lap), "3.000000\n1.000000\n0.000000\n");
    let dual = run(&[
        "spectrum",
        "--matrix",
        "laplacian",
        "--dual",
        &fixture_path("p3.ohg"),
    ]);
    assert_eq!(stdout(&dual), "3.000000\n1.000000\n");
}

#[test]
fn switch_resigns_incidences() {
    let out = run(&[
        "switch",
        "--vertex-switch",
        "v2=-1",
        &fixture_path("p3.ohg"),
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "ohg 1\nvertex v1\nvertex v2\nvertex v3\nedge e1 = v1:+ v2:-\nedge e2 = v2:- v3:-\n"
    );
    let both = run(&[
        "switch",
        "--vertex-switch",
        "v2=-1,v3=-1",
        "--edge-switch",
        "e1=-1",
        &fixture_path("p3.ohg"),
    ]);
    assert_eq!(
        stdout(&both),
        "ohg 1\nvertex v1\nvertex v2\nvertex v3\nedge e1 = v1:- v2:+\nedge e2 = v2:- v3:+\n"
    );
}

#[test]
fn switch_rejects_unknown_labels() {
    let out = run(&[
        "switch",
        "--vertex-switch",
        "ghost=-1",
        &fixture_path("p3.ohg"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown vertex 'ghost'"));
    let out = run(&["switch", "--edge-switch", "e1=2", &fixture_path("p3.ohg")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_single_law_on_a_file() {
    let out = run(&["verify", "--law", "lemma-2.2", &fixture_path("p3.ohg")]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "lemma-2.2 pass 1/1\n");

    // P3 is not regular: the regular laws report a hypothesis miss.
    let out = run(&["verify", "--law", "lemma-4.5", &fixture_path("p3.ohg")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("hypothesis-not-met"));
}

#[test]
fn verify_accepts_design_documents() {
    let out = run(&["verify", "--law", "theorem-6.1", &fixture_path("fano.bibd")]);
    assert!(out.status.success());
    let out = run(&["verify", "--law", "lemma-2.1", &fixture_path("fano.bibd")]);
    assert!(out.status.success());
}

#[test]
fn verify_usage_errors() {
    assert_eq!(run(&["verify"]).status.code(), Some(1));
    assert_eq!(
        run(&["verify", "--law", "lemma-9.9"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["verify", "--law", "lemma-2.1", "--all"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["verify", "--all", "--trials", "0"]).status.code(),
        Some(1)
    );
}

#[test]
fn bibd_check_rejects_mutations_with_exit_two() {
    let fano = std::fs::read_to_string(fixture_path("fano.bibd")).unwrap();
    let broken = fano.replace("block b0 = 0 1 3", "block b0 = 0 1 2");
    let out = run_with_stdin(&["bibd", "check", "-"], &broken);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("invalid design"));
}

#[test]
fn parse_errors_exit_with_code_one() {
    let out = run_with_stdin(&["info", "-"], "ohg 1\nvertex a\nvertex a\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 3"));
    let missing = run(&["info", "does-not-exist.ohg"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn unknown_commands_exit_with_code_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert!(run(&["help"]).status.success());
}
