use std::path::PathBuf;
use std::process::{Command, Output};

fn compstat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compstat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(fixtures().join("golden").join(name)).unwrap()
}

fn bfile(id: &str) -> String {
    fixtures()
        .join("oeis")
        .join(format!("b{}.txt", &id[1..]))
        .to_string_lossy()
        .into_owned()
}

/// A scratch directory per test, under cargo's temp area.
fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn hk_text_and_json() {
    let o = compstat(&["hk", "--k", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 + p q\n");
    assert_eq!(stdout(&compstat(&["hk", "--k", "0"])), "1\n");
    assert_eq!(
        stdout(&compstat(&["hk", "--k", "3"])),
        "1 + p q + p q^2 + p^2 q + p^2 q^2 + p^3 q^3\n"
    );
    assert_eq!(
        stdout(&compstat(&["hk", "--k", "2", "--format", "json"])),
        "[{\"exponents\":{},\"coefficient\":\"1\"},{\"exponents\":{\"p\":1,\"q\":1},\"coefficient\":\"1\"}]\n"
    );
}

#[test]
fn hk_bound() {
    let o = compstat(&["hk", "--k", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds"));
}

#[test]
fn inversion_grid_matches_golden() {
    let o = compstat(&[
        "table", "ic", "--max-n", "16", "--format", "grid", "--max-r", "12",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), golden("ic_rn_grid.txt"));
}

#[test]
fn descent_grid_matches_golden() {
    let o = compstat(&["table", "dc", "--max-n", "16", "--format", "grid"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), golden("dc_rn_grid.txt"));
}

#[test]
fn table_formats() {
    let grid = compstat(&["table", "ic", "--max-n", "0", "--format", "grid"]);
    assert_eq!(stdout(&grid), "n/r 0\n  0 1\n");

    let csv = stdout(&compstat(&["table", "dc", "--max-n", "4"]));
    assert_eq!(
        csv,
        "n,r,count\n0,0,1\n1,0,1\n2,0,2\n3,0,3\n3,1,1\n4,0,5\n4,1,3\n"
    );
    let dense = stdout(&compstat(&["table", "dc", "--max-n", "2", "--dense"]));
    assert_eq!(dense, "n,r,count\n0,0,1\n1,0,1\n2,0,2\n");

    let json = stdout(&compstat(&[
        "table", "ic", "--max-n", "4", "--k", "2", "--format", "json",
    ]));
    assert_eq!(
        json,
        "{\"kind\":\"ic_nk\",\"k\":2,\"cap\":4,\"entries\":[[2,0,\"1\"],[3,0,\"1\"],[3,1,\"1\"],[4,0,\"2\"],[4,1,\"1\"]]}\n"
    );
}

#[test]
fn table_bound() {
    let o = compstat(&["table", "ic", "--max-n", "25"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bij_worked_example() {
    let o = compstat(&["bij", "4,2,1,2,1,5,3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("pi         6172435\n"), "{out}");
    assert!(out.contains("mu         5,4,3,2,2,1,1\n"));
    assert!(out.contains("lambda     2,2,1,1,1,1,1\n"));
    assert!(out.contains("maj(pi)    9\n"));
    assert!(out.contains("|lambda|   9\n"));
    assert!(out.contains("round trip 4,2,1,2,1,5,3\n"));
}

#[test]
fn bij_small_cases() {
    let out = stdout(&compstat(&["bij", "1,1,1"]));
    assert!(out.contains("pi         123\n") && out.contains("lambda     1,1,1\n"));
    let out = stdout(&compstat(&["bij", "5"]));
    assert!(out.contains("pi         1\n") && out.contains("lambda     5\n"));
}

#[test]
fn bij_rejects_malformed_input() {
    for bad in ["4,0,1", "a,b", "3,,2", "-1"] {
        let o = compstat(&["bij", bad]);
        assert_eq!(o.status.code(), Some(2), "input {bad:?}");
    }
}

#[test]
fn bij_empty_composition() {
    // The composition of 0 maps to the empty permutation and partition.
    let o = compstat(&["bij", ""]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("|sigma|    0\n"));
}

#[test]
fn verify_named_suites() {
    for args in [
        &["verify", "--suite", "genfuncid", "--k", "5", "--cap", "12"][..],
        &["verify", "--suite", "jointstat", "--k", "4", "--cap", "9"],
        &["verify", "--suite", "lemma", "--max-n", "12"],
        &["verify", "--suite", "foata"],
    ] {
        let o = compstat(args);
        assert!(o.status.success(), "{args:?}: {}", stderr(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn verify_usage_errors() {
    assert_eq!(
        compstat(&["verify", "--suite", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        compstat(&["verify", "--suite", "foata", "--k", "20"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(compstat(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn oeis_fixtures_agree() {
    for id in ["A189052", "A189073", "A189074", "A238343", "A238344"] {
        let o = compstat(&["oeis", "--seq", id, "--bfile", &bfile(id)]);
        assert!(o.status.success(), "{id}: {}", stderr(&o));
        assert!(stdout(&o).starts_with(&format!("{id}: ")));
    }
}

#[test]
fn oeis_reports_mismatch() {
    let dir = scratch("oeis_mismatch");
    let path = dir.join("b189052.txt");
    std::fs::write(&path, "0 0\n1 0\n2 0\n3 1\n4 5\n5 14\n").unwrap();
    let o = compstat(&[
        "oeis",
        "--seq",
        "A189052",
        "--bfile",
        path.to_str().unwrap(),
        "--max-n",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("5 of 6 entries agree"));
    assert!(stderr(&o).contains("index 4"));
}

#[test]
fn oeis_parse_error_has_line_number() {
    let dir = scratch("oeis_parse");
    let path = dir.join("b189052.txt");
    std::fs::write(&path, "# comment\n0 0\n1 zero\n").unwrap();
    let o = compstat(&[
        "oeis",
        "--seq",
        "A189052",
        "--bfile",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn oeis_unknown_sequence() {
    let o = compstat(&["oeis", "--seq", "A000045", "--bfile", &bfile("A189052")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("A000045"));
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "ic", "--max-n", "12", "--format", "json"];
    assert_eq!(compstat(&args).stdout, compstat(&args).stdout);
    let args = ["verify", "--suite", "equidist", "--k", "6"];
    assert_eq!(compstat(&args).stdout, compstat(&args).stdout);
}
