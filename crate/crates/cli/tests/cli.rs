use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_betaquad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_motivating_example_json() {
    let o = run(&[
        "check", "--a", "2", "--b", "5", "--c", "4", "--d", "2", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "Quadratic");
    assert_eq!(v["p"], "-4");
    assert_eq!(v["q"], "2");
    assert_eq!(v["real"], true);
}

#[test]
fn malformed_rational_is_usage_error() {
    let o = run(&["check", "--a", "2", "--b", "x"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check", "--a", "2", "--b", "1/0", "--c", "1", "--d", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "check", "--a", "2", "--b", "5", "--c", "4", "--d", "2", "--bogus",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn require_irreducible_fails_on_reducible() {
    // x^4 + 2x^3 + 14/3 x^2 + 2x + 1 is irreducible; (x^2 + 2x + 3)^2 is not
    let o = run(&[
        "check",
        "--a",
        "4",
        "--b",
        "10",
        "--c",
        "12",
        "--d",
        "9",
        "--require-irreducible",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&[
        "check",
        "--a",
        "2",
        "--b",
        "14/3",
        "--c",
        "2",
        "--d",
        "1",
        "--require-irreducible",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("p: -3"));
}

#[test]
fn root_of_unity_reported() {
    let o = run(&["check", "--a", "2", "--b", "2", "--c", "2", "--d", "-7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("x - 1"));
}

#[test]
fn minpoly_square() {
    let o = run(&["minpoly", "--a", "2", "--b", "5", "--c", "4", "--d", "2"]);
    assert_eq!(
        stdout(&o),
        "Y^4 - 8*Y^3 + 20*Y^2 - 16*Y + 4\nsquare of Y^2 + (-4)*Y + (2)\n"
    );
}

#[test]
fn family_pole_and_member() {
    let o = run(&["family", "--id", "f1", "--t", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["family", "--id", "f2", "--t", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["coeffs"]["b"], "5");
    assert_eq!(v["p"], "-4");
    let o = run(&["family", "--id", "cbranch", "--t", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn family_scan_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f1.csv");
    let o = run(&[
        "family-scan",
        "--id",
        "f1",
        "--t-from",
        "-1",
        "--t-to",
        "2",
        "--t-step",
        "1",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,t,a,b,c,d,p,q,disc,irreducible");
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[2], "f1,2,2,10,10,17,-13/2,85/8,-1/4,true");
}

#[test]
fn search_small_box_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.csv");
    let p2 = dir.path().join("b.csv");
    for (p, threads) in [(&p1, "1"), (&p2, "3")] {
        let o = run(&[
            "search",
            "--amin",
            "-4",
            "--amax",
            "4",
            "--bmin",
            "-10",
            "--bmax",
            "10",
            "--threads",
            threads,
            "--csv",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let a = fs::read(&p1).unwrap();
    assert_eq!(a, fs::read(&p2).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("a,b,c,d,p,q,family2_match\n"));
    assert!(text.contains("\n2,5,4,2,-4,2,true\n"));
    assert!(text.contains("\n4,10,12,9,"));
}

#[test]
fn solve_d_lists_candidates() {
    let o = run(&["solve-d", "--a", "2", "--b", "5", "--c", "4"]);
    assert!(stdout(&o).contains("d = 2: p = -4, q = 2"));
}

#[test]
fn param_pole_is_usage_error() {
    let o = run(&["param", "--a", "0", "--t", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["param", "--a", "1", "--t", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["q"], "-51/5");
}

#[test]
fn region_outputs_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("r.csv");
    let svg = dir.path().join("r.svg");
    let args = [
        "region",
        "--step",
        "1",
        "--csv",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ];
    assert_eq!(run(&args).status.code(), Some(0));
    let first = (fs::read(&csv).unwrap(), fs::read(&svg).unwrap());
    assert_eq!(run(&args).status.code(), Some(0));
    assert_eq!(first, (fs::read(&csv).unwrap(), fs::read(&svg).unwrap()));
    let text = String::from_utf8(first.0).unwrap();
    assert_eq!(text.lines().count(), 1 + 11 * 21);
    assert_eq!(
        run(&["region", "--step", "0", "--csv", "-"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "--suite", "lemmas"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|i| i["holds"] == true));
    assert_eq!(
        run(&["verify", "--suite", "torsion"]).status.code(),
        Some(0)
    );
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    // the printed parameter sign criterion and the (4, 1) value do not hold
    assert_eq!(run(&["verify", "--suite", "param"]).status.code(), Some(1));
}

#[test]
fn torsion_report() {
    let o = run(&["torsion"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 4);
    assert_eq!(v["points"][3], "(2, 0)");
    assert_eq!(v["divides_counts"], true);
}
