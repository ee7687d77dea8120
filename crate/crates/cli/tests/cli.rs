use std::process::{Command, Output};

fn ics(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ics")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = ics(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    ics(args).status.code().unwrap()
}

#[test]
fn count_engines_agree() {
    assert_eq!(stdout(&["count", "rect:2x2", "--method", "all"]), "13, 13, 13\n");
    assert_eq!(stdout(&["count", "rect:3x5", "--method", "all"]), stdout(&["count", "rect:5x3", "--method", "all"]));
    assert_eq!(stdout(&["count", "trunc:3x2:1", "--method", "all"]), "24, 24\n");
    assert_eq!(stdout(&["count", "ordsum:2+1+3", "--method", "all"]).lines().count(), 1);
}

#[test]
fn count_reference_values() {
    assert_eq!(stdout(&["count", "rootA:5", "--method", "series"]), "2385\n");
    assert_eq!(stdout(&["count", "cube:2x2x2", "--method", "oracle"]), "101\n");
    assert_eq!(stdout(&["count", "rootB:3"]), "115\n");
    assert_eq!(stdout(&["count", "minB:4"]), "96\n");
}

#[test]
fn count_json() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "count", "rect:2x2", "--method", "all"])).unwrap();
    assert_eq!(v["poset"], "rect:2x2");
    assert_eq!(v["counts"].as_array().unwrap().len(), 3);
    assert_eq!(v["counts"][1]["method"], "formula");
    assert_eq!(v["counts"][1]["count"], "13");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["count", "square:3"]), 2);
    assert_eq!(code(&["count", "rootA:5", "--method", "formula"]), 2);
    assert_eq!(code(&["count", "rect:9x9", "--method", "oracle"]), 3);
    assert_eq!(code(&["series", "typeA", "--order", "30"]), 3);
    assert_eq!(code(&["map", "rect:2x2", "[[3,1]]", "--to", "motzkin"]), 2);
    assert_eq!(code(&["map", "rect:2x2", "[[1,1],[2,2]]", "--to", "motzkin"]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
}

#[test]
fn non_ics_input_names_a_violating_triple() {
    let out = ics(&["map", "rect:3x3", "[[1,1],[1,3]]", "--to", "walk"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("[1,1] < [1,2] < [1,3]"), "{err}");
}

#[test]
fn map_examples() {
    assert_eq!(stdout(&["map", "rect:1x1", "[1,1]", "--to", "motzkin"]), "U D\n");
    assert_eq!(stdout(&["map", "rect:2x2", "", "--to", "motzkin"]), "1 1 2 2\n");
    assert_eq!(
        stdout(&["map", "rootA:5", "[[3,5],[3,6],[6,3]]", "--to", "walk"]),
        "e e nw w se e e w nw se w w\n"
    );
    assert_eq!(
        stdout(&["map", "trunc:4x5:1", "[[1,2],[1,3],[2,2],[3,1],[1,4],[2,3],[3,2],[4,1],[1,5],[2,4],[4,2]]", "--to", "walk"]),
        "nw w nw w se e nw se se\n"
    );
}

#[test]
fn map_inverse_round_trips() {
    assert_eq!(
        stdout(&["map", "rootA:5", "e e nw w se e e w nw se w w", "--to", "walk", "--inverse"]),
        "[[3,5],[3,6],[6,3]]\n"
    );
    let word = stdout(&["map", "rect:3x4", "[[1,2],[2,2],[1,3]]", "--to", "motzkin"]);
    let back = stdout(&["map", "rect:3x4", word.trim(), "--to", "motzkin", "--inverse"]);
    assert_eq!(back, "[[1,2],[1,3],[2,2]]\n");
    let pair = stdout(&["map", "rect:2x3", "[[1,2],[2,2]]", "--to", "pair"]);
    assert_eq!(stdout(&["map", "rect:2x3", &pair, "--to", "pair", "--inverse"]), "[[1,2],[2,2]]\n");
    assert_eq!(code(&["map", "rect:2x2", "[]", "--to", "classify", "--inverse"]), 2);
}

#[test]
fn map_classify() {
    let out = stdout(&["map", "rect:2x3", "[[1,2],[2,2]]", "--to", "classify"]);
    assert_eq!(out, "in: [[1,2],[2,2]]\nbelow: [[1,1],[2,1]]\nabove: [[1,3],[2,3]]\nincomparable: []\n");
}

#[test]
fn series_examples() {
    assert_eq!(stdout(&["series", "bminuscule", "--order", "5"]), "1, 2, 7, 26, 96, 356\n");
    assert_eq!(
        stdout(&["series", "typeA", "--order", "10"]),
        "1, 2, 8, 45, 307, 2385, 20362, 186812, 1814156, 18448851\n"
    );
    assert_eq!(stdout(&["series", "broot", "--order", "4"]), "2, 13, 115, 1166\n");
    assert_eq!(stdout(&["series", "broot", "--order", "2", "--format", "csv"]), "n,count\n1,2\n2,13\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["series", "rectangle", "--order", "3", "--format", "json"])).unwrap();
    assert_eq!(v["rows"][2][2], "13");
    let trunc = stdout(&["series", "truncated", "--order", "5", "--format", "csv"]);
    assert!(trunc.lines().any(|l| l == "3,2,1,24"), "{trunc}");
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "enumerate", "trunc:3x3:1", "--to", "walk"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn enumerate_respects_limit() {
    assert_eq!(stdout(&["enumerate", "rect:2x2"]).lines().count(), 13);
    assert_eq!(stdout(&["enumerate", "rect:2x2", "--limit", "4"]).lines().count(), 4);
    let words = stdout(&["enumerate", "rect:2x2", "--to", "motzkin"]);
    assert_eq!(words.lines().next(), Some("1 1 2 2"));
}

#[test]
fn stats_of_worked_example() {
    let out = stdout(&["stats", "rootA:5", "[[3,5],[3,6],[6,3]]"]);
    assert!(out.contains("cardinality: 3\n") && out.contains("components: 2\n"), "{out}");
    assert!(out.contains("walk: e e nw w se e e w nw se w w\n"), "{out}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "stats", "rect:2x2", "[[1,1]]"])).unwrap();
    assert_eq!(v["set"]["cardinality"], 1);
    assert_eq!(v["motzkin"]["stats"]["area"], 1);
}

#[test]
fn verify_levels_pass() {
    let quick = stdout(&["verify"]);
    assert!(quick.lines().last().unwrap().ends_with("checks passed (quick level)"), "{quick}");
    assert!(!quick.contains("FAIL"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "verify", "--level", "full"])).unwrap();
    assert_eq!(v["pass"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["expected"] == "33792" && c["source"] == "reference-table"));
    assert!(checks.iter().all(|c| c["pass"] == true));
}
