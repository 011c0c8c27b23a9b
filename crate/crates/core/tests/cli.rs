use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fermion-trees"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn emit_fenwick_majoranas() {
    let o = run(&["emit", "--scheme", "fenwick", "--n", "7", "--what", "majoranas", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 14);
    assert!(text.lines().any(|l| l == "k=6 +Z1 Z2 X3 X6"));
    assert!(text.lines().any(|l| l == "k=7 +Y3 X6"));
}

#[test]
fn emit_sets_and_tree() {
    let o = run(&["emit", "--scheme", "fenwick", "--n", "7", "--what", "sets"]);
    assert!(stdout(&o).lines().any(|l| l == "3: U={3,6} F={1,2,3} P={1,2} R={3}"));
    let o = run(&["emit", "--scheme", "sierpinski", "--n", "9", "--what", "tree"]);
    let edges: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(edges, ["1 0", "1 2", "4 1", "4 3", "4 5", "4 7", "7 6", "7 8"]);
}

#[test]
fn emit_json_creation() {
    let o = run(&["emit", "--scheme", "fenwick", "--n", "7", "--what", "creation", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["n"], 7);
    assert_eq!(doc["scheme"], "fenwick");
    assert_eq!(doc["G"][6], "1111111");
    assert_eq!(doc["majoranas"][6]["string"], "IZZXIIX");
    assert_eq!(doc["majoranas"][6]["phase"], "+");
    let a3 = &doc["creation"][3]["terms"];
    assert_eq!(a3.as_array().unwrap().len(), 2);
    let term = a3
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["string"] == "IIIYIIX")
        .unwrap();
    assert_eq!((term["re_num"].as_i64(), term["im_num"].as_i64(), term["log2_den"].as_u64()), (Some(0), Some(-1), Some(1)));
    assert_eq!(doc["annihilation"].as_array().unwrap().len(), 7);
}

#[test]
fn ternary_json_has_no_matrix() {
    let o = run(&["emit", "--scheme", "ternary", "--n", "4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(doc.get("G").is_none());
    assert_eq!(doc["majoranas"].as_array().unwrap().len(), 8);
    assert_eq!(doc["majoranas"][0]["string"], "XXII");
}

#[test]
fn custom_inputs() {
    let tree = scratch("fenwick7.tree");
    fs::write(&tree, "# fenwick on 7 nodes\n1 0\n3 1\n3 2\n5 4\n6 3\n6 5\n").unwrap();
    let custom = run(&["emit", "--scheme", "custom", "--n", "7", "--tree-file", tree.to_str().unwrap()]);
    let builtin = run(&["emit", "--scheme", "fenwick", "--n", "7"]);
    assert_eq!(custom.status.code(), Some(0));
    assert_eq!(custom.stdout, builtin.stdout);

    let matrix = scratch("cnot.matrix");
    fs::write(&matrix, "10\n11\n").unwrap();
    let o = run(&["verify", "--scheme", "custom", "--n", "2", "--matrix-file", matrix.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let singular = scratch("singular.matrix");
    fs::write(&singular, "11\n11\n").unwrap();
    let o = run(&["emit", "--scheme", "custom", "--n", "2", "--matrix-file", singular.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["emit", "--scheme", "custom", "--n", "3", "--matrix-file", matrix.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_file() {
    let path = scratch("jw3.txt");
    let o = run(&["emit", "--scheme", "jw", "--n", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap().lines().next(), Some("k=0 +X0"));
}

#[test]
fn stats_tables() {
    let o = run(&["stats", "--schemes", "ternary", "--n-min", "4", "--n-max", "4", "--format", "csv"]);
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[..2], ["ternary", "4"]);
    // the ternary average over all 9 path strings
    assert_eq!((row[7], row[8]), ("2", "1"));

    let o = run(&["stats", "--schemes", "sierpinski_pruned,ternary", "--n-min", "1", "--n-max", "30", "--csv"]);
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 60);
    for n in 0..30 {
        let (a, b) = (&rows[n], &rows[30 + n]);
        assert_eq!(a[1], b[1]);
        assert_eq!((a[7], a[8]), (b[7], b[8]), "n={}", a[1]);
    }

    let o = run(&["stats", "--schemes", "jw", "--n-min", "1", "--n-max", "3"]);
    assert!(stdout(&o).lines().nth(2).unwrap().contains("3/2"));
}

#[test]
fn verify_levels_and_exit_codes() {
    let o = run(&["verify", "--scheme", "fenwick", "--n", "7", "--level", "dense"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.ends_with("PASS")));

    let o = run(&["verify", "--scheme", "sierpinski", "--n", "729", "--level", "symplectic"]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["verify", "--scheme", "jw", "--n", "0"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["verify", "--scheme", "jw", "--n", "12", "--level", "dense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corrupted_majorana_file_fails() {
    let path = scratch("bad_majoranas.txt");
    // Jordan-Wigner on 2 modes with the first string corrupted
    fs::write(&path, "+XZ\n+YI\n+ZX\n+ZY\n").unwrap();
    let o = run(&["verify", "--scheme", "jw", "--n", "2", "--majorana-file", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc[0]["pass"], false);
    assert_eq!(doc[0]["firstViolation"]["k"], "(0,2)");

    let good = scratch("good_majoranas.txt");
    fs::write(&good, "+XI\n+YI\n+ZX\n+ZY\n").unwrap();
    let o = run(&["verify", "--scheme", "jw", "--n", "2", "--majorana-file", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["stats", "--schemes", "fenwick,sierpinski", "--n-min", "1", "--n-max", "40", "--csv"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["emit", "--scheme", "sierpinski_pruned", "--n", "18", "--what", "creation", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
