use std::path::PathBuf;
use std::process::{Command, Output};

use rmcode::io::parse_points_file;
use rmcode_cli::report::{to_json, validate, Report};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/golden").join(format!("{name}.pts"))
}

fn rmcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rmcode"))
        .args(args)
        .env_remove("RMCODE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn analyze(name: &str, flags: &[&str]) -> (Report, i32) {
    let path = golden(name);
    let mut args = vec!["analyze", path.to_str().unwrap()];
    args.extend_from_slice(flags);
    let o = rmcode(&args);
    let code = o.status.code().unwrap();
    let report = validate(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (report, code)
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rmcode-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn duality_and_gorenstein_on_five_points() {
    let (r, code) = analyze("five_points_p3_f3", &["--duality", "--gorenstein"]);
    assert_eq!(code, 0);
    let d = r.results.duality.unwrap();
    assert!(d.holds);
    assert_eq!(d.beta.unwrap(), ["-1", "-1", "-1", "1", "-1"]);
    let g = r.results.gorenstein.unwrap();
    assert!(g.gorenstein);
    assert!(!g.complete_intersection);
    assert_eq!(g.duality_crosscheck, Some(true));
    assert!(r.results.selfdual.is_none());
}

#[test]
fn selfdual_only_in_degree_four_over_f9() {
    let (r, _) = analyze("projective_line_f9", &["--selfdual"]);
    let scan = r.results.selfdual.unwrap();
    let so: Vec<u32> = scan.iter().filter(|e| e.self_orthogonal).map(|e| e.degree).collect();
    let sd: Vec<u32> = scan.iter().filter(|e| e.self_dual).map(|e| e.degree).collect();
    assert_eq!(so, [4]);
    assert_eq!(sd, [4]);
    let o = rmcode(&["analyze", golden("projective_line_f9").to_str().unwrap(), "--selfdual", "--table"]);
    assert!(stdout(&o).contains("self-dual: d = 4\n"));
}

#[test]
fn empty_file_is_an_input_error() {
    let path = temp_file("empty.pts", "");
    let o = rmcode(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 1, column 1"), "{err}");
}

#[test]
fn parse_errors_report_positions() {
    let path = temp_file("bad.pts", "field 3\nvars 2\n1 0\n1 q\n");
    let o = rmcode(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4, column 3"));
    assert_eq!(rmcode(&["analyze", "/nonexistent.pts"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_canonical() {
    let path = golden("projective_plane_f3");
    let a = rmcode(&["analyze", path.to_str().unwrap()]);
    let b = rmcode(&["analyze", path.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let report = validate(&stdout(&a)).unwrap();
    assert_eq!(to_json(&report), stdout(&a));
    assert!(report.timing_ms.is_none());
    let g = report.results.gorenstein.unwrap();
    assert_eq!((g.socle_type, g.level, g.s_number), (2, false, 3));
}

#[test]
fn validator_rejects_altered_documents() {
    let (r, _) = analyze("torus_p1_f5", &["--duality"]);
    let text = to_json(&r);
    assert!(validate(&text.replace("\"budget\"", "\"budjet\"")).is_err());
    assert!(validate(&text.replace("rmcode.report/1", "rmcode.report/0")).is_err());
    assert!(validate(&text.replace("\n  ", "\n   ")).is_err());
    let path = temp_file("report.json", &text);
    assert_eq!(rmcode(&["validate", path.to_str().unwrap()]).status.code(), Some(0));
    let bad = temp_file("bad.json", "{}");
    assert_eq!(rmcode(&["validate", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn timing_is_opt_in() {
    let (r, _) = analyze("self_dual_f4", &["--selfdual", "--timing"]);
    assert!(r.timing_ms.is_some());
}

#[test]
fn strict_exits_one_on_a_false_criterion() {
    let (r, code) = analyze("ten_points_glex_f3", &["--duality"]);
    assert_eq!(code, 0);
    let d = r.results.duality.unwrap();
    assert!(!d.holds);
    assert_eq!(d.witness.unwrap().reason, "v(I) = 3 < r0 = 4");
    let path = golden("ten_points_glex_f3");
    let o = rmcode(&["analyze", path.to_str().unwrap(), "--duality", "--strict"]);
    assert_eq!(o.status.code(), Some(1));
    let o = rmcode(&["analyze", golden("ci_four_points_f3").to_str().unwrap(), "--duality", "--strict"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn budget_exhaustion_keeps_partial_results() {
    let (r, code) = analyze("ten_points_glex_f3", &["--ghw", "2,2", "--duality", "--budget", "10"]);
    assert_eq!(code, 3);
    assert!(r.results.ghw.is_none());
    assert!(r.results.duality.is_some());
    assert_eq!(r.incomplete.len(), 1);
    assert_eq!(r.incomplete[0].analysis, "ghw");
}

#[test]
fn ghw_and_weight_matrix() {
    let (r, code) = analyze("seven_points_f3", &["--ghw", "1,2", "--weight-matrix", "--footprint"]);
    assert_eq!(code, 0);
    let w = r.results.weight_matrix.unwrap();
    assert!(w.fully_resolved);
    assert_eq!(w.cells.len(), r.results.hilbert.unwrap().r0 as usize);
    assert_eq!(Some(&w.cells[0][1]), r.results.ghw.map(|g| g.value).as_ref());
    assert!(r.results.footprint.is_some());
}

#[test]
fn user_supplied_regular_form() {
    let (r, _) = analyze("gorenstein_non_ci_f3", &["--gorenstein", "--h", "t1+t4"]);
    let g = r.results.gorenstein.unwrap();
    assert_eq!(g.h, "t1+t4");
    assert_eq!(g.socle_monomial.as_deref(), Some("t3*t4"));
    let path = golden("projective_plane_f3");
    let o = rmcode(&["analyze", path.to_str().unwrap(), "--gorenstein", "--h", "t1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn regular_form_needs_an_extension_on_the_full_line() {
    let path = temp_file("p1.pts", &stdout(&rmcode(&["generate", "projective", "--q", "3", "--s", "2"])));
    let (r, _) = {
        let o = rmcode(&["analyze", path.to_str().unwrap(), "--regular-form"]);
        (validate(&stdout(&o)).unwrap(), o.status.code())
    };
    assert_eq!(r.results.regular_form.unwrap().extension_degree, 2);
}

#[test]
fn affine_flag_takes_the_closure() {
    let path = temp_file("line.pts", "field 5\nvars 1\n0\n1\n2\n3\n4\n");
    let o = rmcode(&["analyze", path.to_str().unwrap(), "--affine", "--duality"]);
    let r = validate(&stdout(&o)).unwrap();
    assert!(r.input.affine);
    assert_eq!(r.input.points[1], ["1", "1"]);
    assert!(r.results.duality.unwrap().holds);
}

fn generated(args: &[&str]) -> Vec<Vec<String>> {
    let o = rmcode(args);
    assert_eq!(o.status.code(), Some(0));
    let file = parse_points_file(&stdout(&o)).unwrap();
    let x = file.point_set().unwrap().canonicalized();
    let mut pts: Vec<Vec<String>> = x
        .points()
        .iter()
        .map(|p| p.iter().map(|&c| x.field().format(c)).collect())
        .collect();
    pts.sort();
    pts
}

#[test]
fn generators() {
    assert_eq!(generated(&["generate", "torus", "--q", "5", "--s", "2"]).len(), 4);
    assert_eq!(generated(&["generate", "projective", "--q", "3", "--s", "3"]).len(), 13);
    assert_eq!(generated(&["generate", "affine-grid", "--q", "4", "--n", "2"]).len(), 16);
    assert_eq!(
        generated(&["generate", "parameterized", "--q", "5", "--exponents", "1,0,0;0,1,0;0,0,1"]),
        generated(&["generate", "torus", "--q", "5", "--s", "3"]),
    );
    assert_eq!(rmcode(&["generate", "torus", "--q", "6", "--s", "2"]).status.code(), Some(2));
    assert_eq!(rmcode(&["generate", "torus", "--q", "5"]).status.code(), Some(2));
    let out = temp_file("torus.pts", "");
    let o = rmcode(&["generate", "torus", "--q", "3", "--s", "3", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(parse_points_file(&std::fs::read_to_string(&out).unwrap()).is_ok());
}

#[test]
fn golden_runner() {
    let o = rmcode(&["golden"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("10/10 examples pass"));
    let o = rmcode(&["golden", "self_dual_f4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/1 examples pass"));
    assert_eq!(rmcode(&["golden", "missing"]).status.code(), Some(2));
}
