use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mna-verify"))
}

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn text_report_for_a_single_group() {
    let o = bin()
        .args(["--group", "catalog(quaternion, 8)", "--theorems", "abelian-maximal-count,kappa1-alpha1"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("abelian-maximal-count"), "{out}");
    assert!(out.contains("1 groups, 2 verdicts: 2 pass, 0 fail"), "{out}");
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "cyclic(4)\n\ndirect(cyclic(2) cyclic(3))\n").unwrap();
    let o = bin().arg("--corpus").arg(&path).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("3:18:"), "{}", stderr(&o));
}

#[test]
fn non_associative_cayley_table_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    // A loop of order 5 that is not a group.
    let table = "0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
    std::fs::write(dir.path().join("loop.cayley"), table).unwrap();
    std::fs::write(dir.path().join("corpus.txt"), "cayley(loop.cayley)\n").unwrap();
    let o = bin().arg("--corpus").arg(dir.path().join("corpus.txt")).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("associative"), "{}", stderr(&o));
}

#[test]
fn cap_refusals_are_reported_and_strict_mode_exits_3() {
    let args = ["--group", "catalog(dihedral, 32)", "--theorems", "kappa1-equals-p", "--oracle-cap", "16"];
    let lax = bin().args(args).output().unwrap();
    assert_eq!(lax.status.code(), Some(0), "{}", stderr(&lax));
    assert!(String::from_utf8_lossy(&lax.stdout).contains("not computed"));
    let strict = bin().args(args).arg("--strict").output().unwrap();
    assert_eq!(strict.status.code(), Some(3));

    let refused = bin()
        .args(["--group", "catalog(symmetric, 6)", "--max-order", "100", "--strict", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(refused.status.code(), Some(3));
    let doc: serde_json::Value = serde_json::from_slice(&refused.stdout).unwrap();
    assert!(doc["groups"][0]["refused"].as_str().unwrap().contains("cap of 100"));
    assert_eq!(doc["verdicts"][0]["passed"], "not_computed");
}

#[test]
fn json_output_replays_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("verdicts.json");
    let o = bin()
        .arg("--corpus")
        .arg(corpus("example.txt"))
        .args(["--format", "json", "--jobs", "2", "--output"])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    // The replayed document resolves `cayley(s3.cayley)` next to itself.
    std::fs::copy(corpus("s3.cayley"), dir.path().join("s3.cayley")).unwrap();
    let r = bin().arg("--replay").arg(&out).output().unwrap();
    assert_eq!(r.status.code(), Some(0), "{}", stderr(&r));

    let mut doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let verdicts = doc["verdicts"].as_array_mut().unwrap();
    let target = verdicts
        .iter_mut()
        .find(|v| v["group"] == "Example72" && v["theorem_id"] == "derived-complement-action")
        .unwrap();
    // Drop one element from the named complement: no longer a subgroup.
    target["witness"]["subgroups"]["A"].as_array_mut().unwrap().pop();
    std::fs::write(&out, serde_json::to_string(&doc).unwrap()).unwrap();
    let r = bin().arg("--replay").arg(&out).output().unwrap();
    assert_eq!(r.status.code(), Some(2));
    assert!(stderr(&r).contains("Example72 / derived-complement-action"), "{}", stderr(&r));
}

#[test]
fn unknown_check_ids_are_rejected() {
    let o = bin().args(["--group", "cyclic(2)", "--theorems", "nonsense"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("nonsense"));
}
