use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antimagic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn label_k5() {
    let o = run(&["label", &path("k5.txt"), "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("edge ")).count(), 10);
    for s in [
        "sum 0 34",
        "sum 1 13",
        "sum 2 18",
        "sum 3 21",
        "sum 4 24",
        "result: PASS",
    ] {
        assert!(out.contains(s), "missing {s:?}");
    }
}

#[test]
fn out_of_scope_inputs_exit_1() {
    let o = run(&["label", &path("c5.txt")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("degree 2 out of scope"));

    let o = run(&["label", &path("two_k5.txt")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("disconnected"));

    let o = run(&["label", &path("k5.txt"), "--root", "9"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["label", &path("missing.txt")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", &path("triangle.txt"), &path("triangle_good.txt")]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&[
        "verify",
        &path("triangle.txt"),
        &path("triangle_repeat.txt"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not a bijection"));

    let o = run(&["verify", &path("k5.txt"), &path("triangle_good.txt")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_accepts_pipeline_output_and_catches_tampering() {
    let dir = std::env::temp_dir().join(format!("antimagic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let doc = stdout(&run(&["label", &path("octahedron.txt")]));
    let good = dir.join("good.txt");
    std::fs::write(&good, &doc).unwrap();
    let o = run(&[
        "verify",
        &path("octahedron.txt"),
        good.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["passed"], true);

    // Swapping two labels keeps a bijection but breaks the recorded certificate.
    let mut lines: Vec<String> = doc.lines().map(str::to_string).collect();
    let edges: Vec<usize> = (0..lines.len())
        .filter(|&i| lines[i].starts_with("edge "))
        .collect();
    let label = |l: &str| l.split_whitespace().nth(3).unwrap().to_string();
    let (a, b) = (edges[0], edges[edges.len() - 1]);
    let (la, lb) = (label(&lines[a]), label(&lines[b]));
    lines[a] = lines[a].replacen(&format!(" {la} "), &format!(" {lb} "), 1);
    lines[b] = lines[b].replacen(&format!(" {lb} "), &format!(" {la} "), 1);
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, lines.join("\n") + "\n").unwrap();
    let o = run(&["verify", &path("octahedron.txt"), bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn oracle_runs() {
    let o = run(&["oracle", &path("k2.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("not antimagic"));

    let o = run(&["oracle", &path("k5.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("antimagic"));
}

#[test]
fn gen_is_seeded() {
    let o = run(&["gen", "--n", "5", "--degree", "4"]);
    assert_eq!(stdout(&o), std::fs::read_to_string(data("k5.txt")).unwrap());
    let a = run(&["gen", "--n", "30", "--degree", "6", "--seed", "11"]);
    let b = run(&["gen", "--n", "30", "--degree", "6", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 90);
    assert_eq!(
        run(&["gen", "--n", "5", "--degree", "3"]).status.code(),
        Some(1)
    );
}

#[test]
fn stress_reports_all_passing() {
    let o = run(&["stress", "--count", "50", "--degree", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("50/50 pass"));

    let o = run(&[
        "stress", "--count", "6", "--n", "10..20", "--degree", "4,6", "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], 6);
    assert_eq!(run(&["stress", "--degree", "5"]).status.code(), Some(1));
}
