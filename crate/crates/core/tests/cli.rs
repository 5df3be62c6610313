use std::fs;
use std::path::Path;
use std::process::Command;

use matchdist::cli::{run, EXIT_ERROR, EXIT_NOT_CONVERGED, EXIT_OK};
use matchdist::io::read_filtration;
use matchdist::Diagram;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("matchdist").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

fn gen(dir: &Path, name: &str, seed: u64) -> String {
    let p = path(dir, name);
    let seed = seed.to_string();
    let (code, _, err) =
        call(&["gen", "--vertices", "12", "--maximal", "20", "--dim", "1", "--seed", &seed, "--coord-range", "50", "--out", &p]);
    assert_eq!(code, EXIT_OK, "{err}");
    p
}

fn field<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(" = ")))
        .unwrap_or_else(|| panic!("no `{key}` in {report}"))
}

#[test]
fn gen_to_stdout_parses_back() {
    let (code, out, _) = call(&["gen", "--vertices", "6", "--maximal", "4", "--dim", "2", "--seed", "3"]);
    assert_eq!(code, EXIT_OK);
    let f = matchdist::io::parse_filtration(&out).unwrap();
    assert_eq!(f.complex().dim_range(2).len(), 4);
}

#[test]
fn gen_rejects_impossible_counts() {
    let (code, _, err) = call(&["gen", "--vertices", "3", "--maximal", "5", "--dim", "1"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("cannot sample"), "{err}");
}

#[test]
fn dist_report_trace_and_diagrams() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(dir.path(), "a.txt", 1);
    let b = gen(dir.path(), "b.txt", 2);
    let trace = path(dir.path(), "trace.csv");
    let dumps = path(dir.path(), "diagrams");
    let (code, out, err) =
        call(&["dist", &a, &b, "--epsilon", "0.5", "--trace", &trace, "--dump-diagrams", &dumps, "--no-timing"]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(err.contains("time_ms"));
    assert_eq!(field(&out, "status"), "converged");
    let delta: f64 = field(&out, "delta").parse().unwrap();
    let upper: f64 = field(&out, "residual_upper").parse().unwrap();
    assert!(delta <= upper && upper <= delta + 0.5);

    let trace = fs::read_to_string(&trace).unwrap();
    let mut lines = trace.lines();
    assert_eq!(lines.next().unwrap(), matchdist::solver::TRACE_HEADER);
    let last: Vec<&str> = trace.lines().last().unwrap().split(',').collect();
    assert_eq!(last[0], field(&out, "calls"));
    assert_eq!(last[1], "0.000");
    assert_eq!(last[2], field(&out, "rho"));
    assert_eq!(last[3], field(&out, "residual_upper"));

    let da = Diagram::parse_dump(&fs::read_to_string(Path::new(&dumps).join("diagram_a.txt")).unwrap()).unwrap();
    let db = Diagram::parse_dump(&fs::read_to_string(Path::new(&dumps).join("diagram_b.txt")).unwrap()).unwrap();
    assert_eq!(matchdist::bottleneck_distance(&da, &db).unwrap(), delta);
}

#[test]
fn dist_options_agree() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(dir.path(), "a.txt", 3);
    let b = gen(dir.path(), "b.txt", 4);
    let mut deltas = Vec::new();
    for extra in [&["--bound", "g"][..], &["--bound", "c"], &["--traversal", "dfs"], &["--traversal", "priority"], &["--threads", "2"]] {
        let mut args = vec!["dist", &a, &b, "--epsilon", "1"];
        args.extend_from_slice(extra);
        let (code, out, err) = call(&args);
        assert_eq!(code, EXIT_OK, "{extra:?}: {err}");
        deltas.push(field(&out, "delta").parse::<f64>().unwrap());
    }
    let lo = deltas.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = deltas.iter().copied().fold(0.0, f64::max);
    assert!(hi - lo <= 1.0, "{deltas:?}");
}

#[test]
fn dist_budget_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(dir.path(), "a.txt", 5);
    let b = gen(dir.path(), "b.txt", 6);
    let (code, out, _) = call(&["dist", &a, &b, "--epsilon", "0.0001", "--relative", "--budget-ms", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "status"), "budget exhausted");
    assert_eq!(field(&out, "calls"), "4");

    let missing = path(dir.path(), "missing.txt");
    assert_eq!(call(&["dist", &a, &missing, "--epsilon", "1"]).0, EXIT_ERROR);
    assert_eq!(call(&["dist", &a, &b, "--epsilon", "0"]).0, EXIT_ERROR);
    assert_eq!(call(&["dist", &a, &b, "--epsilon", "1", "--bound", "q"]).0, EXIT_ERROR);
    assert_eq!(call(&["dist", &a, &b]).0, EXIT_ERROR);

    let bad = path(dir.path(), "bad.txt");
    fs::write(&bad, "bifiltration\n2\n0 ; 1 1\n0 1 ; 2 2\n").unwrap();
    let (code, _, err) = call(&["dist", &a, &bad, "--epsilon", "1"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("missing"), "{err}");
}

#[test]
fn dist_equal_inputs_in_relative_mode_do_not_converge() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(dir.path(), "a.txt", 7);
    let out = Command::new(env!("CARGO_BIN_EXE_matchdist"))
        .args(["dist", &a, &a, "--epsilon", "0.5", "--relative"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_NOT_CONVERGED));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(field(&stdout, "rho"), "0");
}

#[test]
fn heatmap_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(dir.path(), "a.txt", 8);
    let b = gen(dir.path(), "b.txt", 9);
    let out_dir = path(dir.path(), "heat");
    let (code, _, err) = call(&["heatmap", &a, &b, "--depth", "2", "--out", &out_dir]);
    assert_eq!(code, EXIT_OK, "{err}");
    let flat_x = fs::read_to_string(Path::new(&out_dir).join("flat_x.csv")).unwrap();
    assert_eq!(flat_x.lines().next().unwrap(), "# type=flat_x depth=2");
    assert_eq!(flat_x.lines().count(), 5);
    let composite = fs::read_to_string(Path::new(&out_dir).join("composite.csv")).unwrap();
    assert_eq!(composite.lines().count(), 9);
    assert!(composite.lines().skip(1).all(|l| l.split(',').count() == 8));

    let (code, stdout, _) = call(&["heatmap", &a, &b, "--depth", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(stdout.lines().count(), 5);
    let (code, _, err) = call(&["heatmap", &a, &b, "--depth", "11"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("depth"), "{err}");
}

#[test]
fn bench_directory() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..3 {
        gen(dir.path(), &format!("f{seed}.txt"), 20 + seed);
    }
    let csv = path(dir.path(), "bench.csv");
    let data = dir.path().to_string_lossy().into_owned();
    let (code, out, err) = call(&["bench", &data, "--epsilon", "0.5", "--relative", "--out", &csv]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("calls G/C"));
    let rows = fs::read_to_string(&csv).unwrap();
    assert_eq!(rows.lines().count(), 1 + 3 * 3);
    assert!(rows.starts_with(matchdist::bench::BENCH_HEADER));

    let empty = tempfile::tempdir().unwrap();
    let (code, _, err) = call(&["bench", &empty.path().to_string_lossy(), "--epsilon", "0.5"]);
    assert_eq!(code, EXIT_ERROR);
    assert!(err.contains("fewer than two"), "{err}");
}

#[test]
fn lower_star_input() {
    let dir = tempfile::tempdir().unwrap();
    let p = path(dir.path(), "ls.txt");
    fs::write(&p, "lowerstar\n3 5\n0 2\n1 0\n2 1\n0\n1\n2\n0 1\n1 2\n").unwrap();
    let f = read_filtration(Path::new(&p)).unwrap();
    assert_eq!(f.len(), 5);
    let (code, out, _) = call(&["dist", &p, &p, "--epsilon", "0.1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(field(&out, "delta"), "0");
}

#[test]
fn help_exits_cleanly() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    for cmd in ["dist", "heatmap", "gen", "bench"] {
        assert!(out.contains(cmd));
    }
}
