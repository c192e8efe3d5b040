//! End-to-end tests of the `tworay` binary: golden outputs for the bundled
//! scenarios, JSON well-formedness and the documented exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tworay"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

macro_rules! golden {
    ($name:ident, $file:literal, $args:expr) => {
        #[test]
        fn $name() {
            let expected = include_str!(concat!("golden/", $file));
            let got = stdout_of(&$args);
            assert_eq!(got, expected, "golden mismatch for {}", $file);
        }
    };
}

golden!(
    describe_x,
    "describe_x.txt",
    ["describe", "--builtin", "paper-X"]
);
golden!(
    describe_x_json,
    "describe_x.json",
    ["describe", "--builtin", "paper-X", "--json"]
);
golden!(
    describe_xprime,
    "describe_xprime.txt",
    ["describe", "--builtin", "paper-Xprime"]
);
golden!(
    describe_xprime_json,
    "describe_xprime.json",
    ["describe", "--builtin", "paper-Xprime", "--json"]
);
golden!(game_x, "game_x.txt", ["game", "--builtin", "paper-X"]);
golden!(
    game_x_full,
    "game_x_full.txt",
    ["game", "--builtin", "paper-X", "--full-trace"]
);
golden!(
    game_x_full_json,
    "game_x_full.json",
    ["game", "--builtin", "paper-X", "--full-trace", "--json"]
);
golden!(
    game_xprime,
    "game_xprime.txt",
    ["game", "--builtin", "paper-Xprime"]
);
golden!(
    game_xprime_json,
    "game_xprime.json",
    ["game", "--builtin", "paper-Xprime", "--json"]
);
golden!(
    monomials_x,
    "monomials_x.txt",
    ["monomials", "--builtin", "paper-X"]
);
golden!(
    monomials_xprime,
    "monomials_xprime.txt",
    ["monomials", "--builtin", "paper-Xprime"]
);
golden!(
    baselocus_x,
    "baselocus_x.txt",
    ["baselocus", "--builtin", "paper-X"]
);
golden!(
    baselocus_xprime,
    "baselocus_xprime.txt",
    ["baselocus", "--builtin", "paper-Xprime"]
);
golden!(
    localchart_x,
    "localchart_x.txt",
    ["localchart", "--builtin", "paper-X", "--nonzero", "v,z"]
);
golden!(
    sections_x_div,
    "sections_x_div.txt",
    ["sections", "--builtin", "paper-X", "--ray", "(-2,1)"]
);
golden!(
    sections_x_vertical,
    "sections_x_vertical.txt",
    [
        "sections",
        "--builtin",
        "paper-X",
        "--ray",
        "(0,1)",
        "--bound",
        "6"
    ]
);
golden!(
    sections_xprime_vertical,
    "sections_xprime_vertical.txt",
    [
        "sections",
        "--builtin",
        "paper-Xprime",
        "--ray",
        "(0,1)",
        "--bound",
        "6"
    ]
);
golden!(
    transform_x,
    "transform_x.txt",
    ["transform", "--builtin", "paper-X"]
);

#[test]
fn json_outputs_are_well_formed() {
    for args in [
        vec!["describe", "--builtin", "paper-X", "--json"],
        vec!["monomials", "--builtin", "paper-Xprime", "--json"],
        vec!["baselocus", "--builtin", "paper-X", "--json"],
        vec![
            "localchart",
            "--builtin",
            "paper-X",
            "--nonzero",
            "v,z",
            "--json",
        ],
        vec!["game", "--builtin", "paper-X", "--full-trace", "--json"],
        vec![
            "sections",
            "--builtin",
            "paper-X",
            "--ray",
            "(-2,1)",
            "--json",
        ],
        vec!["transform", "--builtin", "paper-X", "--json"],
    ] {
        let text = stdout_of(&args);
        let value: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
        assert!(
            value.get("command").is_some(),
            "JSON of {args:?} names its command"
        );
    }
}

#[test]
fn scenario_files_load_from_disk() {
    let out = stdout_of(&["describe", data("ambient-only.scn").to_str().unwrap()]);
    assert!(out.contains("no hypersurface block: ambient report only"));
}

#[test]
fn parse_errors_exit_2_with_line_numbers() {
    let out = run(&["describe", data("broken.scn").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "stderr was: {err}");
}

#[test]
fn conflicting_sources_exit_2() {
    let out = run(&[
        "describe",
        data("ambient-only.scn").to_str().unwrap(),
        "--builtin",
        "paper-X",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_builtin_exits_2() {
    let out = run(&["describe", "--builtin", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("paper-X"));
}

#[test]
fn missing_hypersurface_is_a_precondition_violation() {
    let out = run(&["game", data("ambient-only.scn").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn strict_mode_flags_inconclusive_restrictions() {
    let path = data("inconclusive.scn");
    let plain = run(&["game", path.to_str().unwrap()]);
    assert_eq!(plain.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&plain.stdout).contains("restriction rule inconclusive"));
    let strict = run(&["game", path.to_str().unwrap(), "--strict"]);
    assert_eq!(strict.status.code(), Some(4));
}

#[test]
fn transform_writes_a_loadable_scenario() {
    let dir = std::env::temp_dir().join(format!("tworay-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("xprime.scn");
    let out = run(&[
        "transform",
        "--builtin",
        "paper-X",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let described = stdout_of(&["describe", out_path.to_str().unwrap()]);
    let reference = stdout_of(&["describe", "--builtin", "paper-Xprime"]);
    assert_eq!(described, reference);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn monomials_with_explicit_degree() {
    let out = stdout_of(&[
        "monomials",
        data("ambient-only.scn").to_str().unwrap(),
        "--degree",
        "(0,0)",
    ]);
    assert!(out.contains("1 fibre monomials, dimension 1"));
    // a degree outside the effective cone yields an empty table
    let out = stdout_of(&[
        "monomials",
        data("ambient-only.scn").to_str().unwrap(),
        "--degree",
        "(5,-1)",
    ]);
    assert!(out.contains("0 fibre monomials, dimension 0"));
}
