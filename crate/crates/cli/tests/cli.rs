use std::io::Write;
use std::process::{Command, Output, Stdio};

use cgrid_ham::grid::ShapeClass;
use cgrid_ham_cli::doc::{InstanceDocument, ResultDocument, ShapeDoc, Stats, Status};
use proptest::prelude::*;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cgrid-ham"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn result(o: &Output) -> ResultDocument {
    serde_json::from_slice(&o.stdout).unwrap()
}

const C_SMALL: [&str; 14] =
    ["--class", "c", "--m", "3", "--n", "2", "--k", "1", "--l", "1", "--d", "1", "--s", "1,1"];

#[test]
fn solve_small_c_shape() {
    let o = run(&[&["solve"], &C_SMALL[..], &["--t", "3,1"]].concat());
    assert_eq!(o.status.code(), Some(0));
    let r = result(&o);
    assert_eq!(r.status, Status::Path);
    assert_eq!(r.path.unwrap().len(), 5);
}

#[test]
fn solve_reports_f12() {
    let o = run(&["solve", "--class", "c", "--m", "5", "--n", "5", "--k", "1", "--l", "1", "--d", "1", "--s", "1,1", "--t", "3,1"]);
    assert_eq!(o.status.code(), Some(2));
    let r = result(&o);
    assert_eq!(r.status, Status::NotAcceptable);
    assert_eq!(r.condition.as_deref(), Some("F12"));
}

#[test]
fn zero_offset_is_invalid() {
    let o = run(&["solve", "--class", "c", "--m", "5", "--n", "5", "--k", "1", "--l", "1", "--d", "0", "--s", "1,1", "--t", "3,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(result(&o).status, Status::Invalid);
    assert!(!o.stderr.is_empty());
}

#[test]
fn malformed_json_is_invalid() {
    let o = run_stdin(&["solve", "-i", "-"], "{\"shape\":");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(result(&o).status, Status::Invalid);
    let o = run_stdin(&["check", "-i", "-"], "[]");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn check_outputs() {
    let o = run(&["check", "--class", "rect", "--m", "4", "--n", "4", "--s", "1,1", "--t", "4,4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check", "--class", "rect", "--m", "4", "--n", "4", "--s", "1,1", "--t", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"status":"acceptable"}"#);
    // Removing the middle column of a 3×2 block disconnects it.
    let o = run(&["check", "--class", "rect", "--m", "3", "--n", "2", "--s", "2,1", "--t", "2,2"]);
    assert_eq!(stdout(&o).trim(), r#"{"status":"not_acceptable","condition":"F1"}"#);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn flags_override_document() {
    let doc = r#"{"shape":{"class":"c","m":3,"n":2,"k":1,"l":1,"d":1},"s":[1,1],"t":[1,2]}"#;
    let o = run_stdin(&["solve", "-i", "-", "--t", "3,1"], doc);
    assert_eq!(o.status.code(), Some(0));
    let path = result(&o).path.unwrap();
    assert_eq!(path.first(), Some(&[1, 1]));
    assert_eq!(path.last(), Some(&[3, 1]));
}

#[test]
fn render_ascii_and_svg() {
    let solved = run(&[&["solve"], &C_SMALL[..], &["--t", "3,1"]].concat());
    let json = stdout(&solved);
    let ascii = run_stdin(&["render", "--format", "ascii"], &json);
    assert_eq!(ascii.status.code(), Some(0));
    assert_eq!(stdout(&ascii), "S T\n\\-/\n");

    let svg1 = stdout(&run_stdin(&["render", "--format", "svg"], &json));
    let svg2 = stdout(&run_stdin(&["render", "--format", "svg"], &json));
    assert_eq!(svg1, svg2);
    let points = svg1.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
    assert_eq!(points.split(' ').count(), 5);
}

#[test]
fn render_refuses_non_path() {
    let o = run(&["solve", "--class", "c", "--m", "5", "--n", "5", "--k", "1", "--l", "1", "--d", "1", "--s", "1,1", "--t", "3,1"]);
    let r = run_stdin(&["render"], &stdout(&o));
    assert_eq!(r.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&r.stderr).contains("render needs a result with status \"path\""));
}

#[test]
fn bench_csv() {
    let o = run(&["bench", "--sizes", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "side,vertices,elapsed_ms\n");
    let o = run(&["bench", "--sizes", "60,120", "--reps", "1"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("60,3200,"));
}

#[test]
fn verify_small_sweep() {
    let o = run(&["verify", "--class", "l", "--max-m", "4", "--max-n", "4", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let report: cgrid_ham::oracle::SweepReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.instances_checked, report.agreements);
    assert!(report.disagreements.is_empty() && report.construction_failures.is_empty());
}

#[test]
fn oracle_bound_from_environment() {
    let o = bin()
        .args(["verify", "--class", "rect", "--max-m", "3", "--max-n", "3"])
        .env("HAM_ORACLE_MAX_VERTICES", "6")
        .output()
        .unwrap();
    let report: cgrid_ham::oracle::SweepReport = serde_json::from_slice(&o.stdout).unwrap();
    // 3×3 has 9 vertices and 2×3 / 3×2 have 6.
    assert_eq!(report.skipped, 72);
    assert_eq!(report.instances_checked, 12 + 30 + 30);
}

fn shape_doc() -> impl Strategy<Value = ShapeDoc> {
    let opt = || proptest::option::of(-3..50i32);
    (prop_oneof![Just(ShapeClass::Rect), Just(ShapeClass::LShape), Just(ShapeClass::CShape)], -3..50i32, -3..50i32, opt(), opt(), opt())
        .prop_map(|(class, m, n, k, l, d)| ShapeDoc { class, m, n, k, l, d })
}

proptest! {
    #[test]
    fn instance_document_round_trip(shape in shape_doc(), s in any::<[i32; 2]>(), t in any::<[i32; 2]>()) {
        let doc = InstanceDocument { shape, s, t };
        let text = serde_json::to_string(&doc).unwrap();
        prop_assert_eq!(serde_json::from_str::<InstanceDocument>(&text).unwrap(), doc);
    }

    #[test]
    fn result_document_round_trip(
        status in prop_oneof![Just(Status::Path), Just(Status::NotAcceptable), Just(Status::Invalid)],
        condition in proptest::option::of("F[0-9]{1,2}"),
        path in proptest::option::of(proptest::collection::vec(any::<[i32; 2]>(), 0..20)),
        vertices in any::<u64>(),
        elapsed_ms in 0.0..1e7f64,
    ) {
        let doc = ResultDocument { status, condition, path, stats: Stats { vertices, elapsed_ms } };
        let text = serde_json::to_string(&doc).unwrap();
        prop_assert_eq!(serde_json::from_str::<ResultDocument>(&text).unwrap(), doc);
    }
}
