use std::path::Path;
use std::process::{Command, Output};

fn gqlrc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gqlrc"))
        .args(args)
        .env_remove("GQLRC_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_reports_order() {
    let o = gqlrc(&["build", "--gq", "te-conic", "--q", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("15 points, 15 lines"), "{out}");
    assert!(out.contains("(2, 2, 1)"), "{out}");
}

#[test]
fn t2star_needs_even_q() {
    let o = gqlrc(&["build", "--gq", "t2star", "--q", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("q even"));
}

#[test]
fn mindist_of_hermitian() {
    let o = gqlrc(&["mindist", "--gq", "h3", "--q", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("d = 5"), "{out}");
    assert!(
        out.contains("27 minimum-weight words, all multiples of lines"),
        "{out}"
    );
}

#[test]
fn mindist_wmax_zero_finds_nothing() {
    let o = gqlrc(&["mindist", "--gq", "te-conic", "--q", "2", "--wmax", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("no nonzero word of weight at most 0"));
}

#[test]
fn sweep_over_budget_exits_2() {
    let o = gqlrc(&[
        "mindist", "--gq", "te-conic", "--q", "3", "--method", "sweep", "--budget", "10",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_gqlrc"))
        .args(["lrc-report", "--gq", "q5", "--q", "2"])
        .env("GQLRC_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lrc_reports() {
    let out = stdout(&gqlrc(&["lrc-report", "--gq", "q4", "--q", "3"]));
    assert!(out.contains("r = 3, availability a = 8"), "{out}");
    assert!(out.contains("a > t + 1 = 4"), "{out}");
    let out = stdout(&gqlrc(&["lrc-report", "--gq", "q5", "--q", "2"]));
    assert!(out.contains("r = 2, availability a = 5"), "{out}");
    let o = gqlrc(&["lrc-report", "--gq", "q4"]);
    assert_eq!(o.status.code(), Some(1));
    let o = gqlrc(&["lrc-report", "--gq", "nope", "--q", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn quadratic_form_and_egg_agree() {
    for via in ["egg", "form"] {
        let out = stdout(&gqlrc(&[
            "lrc-report",
            "--gq",
            "q4",
            "--q",
            "2",
            "--via",
            via,
        ]));
        assert!(out.contains("r = 2, availability a = 3"), "{via}: {out}");
    }
}

#[test]
fn files_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("s.json");
    let a = dir.path().join("n.alist");
    let r1 = dir.path().join("r1.json");
    let r2 = dir.path().join("r2.json");
    assert!(
        gqlrc(&["build", "--gq", "te-ovoid", "--q", "2", "--out", path(&s)])
            .status
            .success()
    );
    assert!(
        gqlrc(&["mindist", "--structure", path(&s), "--out", path(&r1)])
            .status
            .success()
    );
    assert!(gqlrc(&[
        "mindist",
        "--gq",
        "te-ovoid",
        "--q",
        "2",
        "--out",
        path(&r2),
        "--threads",
        "1"
    ])
    .status
    .success());
    assert_eq!(std::fs::read(&r1).unwrap(), std::fs::read(&r2).unwrap());

    assert!(gqlrc(&[
        "export",
        "--structure",
        path(&s),
        "--format",
        "alist",
        "--out",
        path(&a)
    ])
    .status
    .success());
    let out = stdout(&gqlrc(&["mindist", "--code", path(&a)]));
    assert!(out.contains("length 27, dimension 21"), "{out}");
    assert!(out.contains("d = 3"), "{out}");
}

#[test]
fn export_formats() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("n.csv");
    assert!(gqlrc(&[
        "export",
        "--gq",
        "te-conic",
        "--q",
        "2",
        "--format",
        "csv",
        "--out",
        path(&c)
    ])
    .status
    .success());
    let text = std::fs::read_to_string(&c).unwrap();
    assert_eq!(text.lines().count(), 15);
    let x = dir.path().join("x");
    let o = gqlrc(&[
        "export",
        "--gq",
        "te-conic",
        "--q",
        "3",
        "--matrix",
        "dual",
        "--format",
        "alist",
        "--out",
        path(&x),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = gqlrc(&[
        "export",
        "--gq",
        "te-conic",
        "--q",
        "2",
        "--format",
        "xml",
        "--out",
        path(&x),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn selftest_only_and_budget() {
    let o = gqlrc(&["selftest", "--only", "q4-2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with('[')).count(), 1);
    assert!(out.contains("[PASS] q4-2"));

    let o = gqlrc(&[
        "selftest", "--only", "q4-3", "--only", "lemma4", "--budget", "10",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("[BUDGET] q4-3"), "{out}");
    assert!(out.contains("[PASS] lemma4"), "{out}");
}
