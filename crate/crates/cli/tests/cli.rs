use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn umbra(workspace: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbra"))
        .args(args)
        .env("UMBRA_WORKSPACE", workspace)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

#[test]
fn golden_outputs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let ws = dir.path().join("none.json");
    let cases = fs::read_to_string(manifest().join("cases.txt")).unwrap();
    let mut count = 0;
    for line in cases.lines().filter(|l| !l.trim().is_empty()) {
        let (name, args) = line.split_once('\t').unwrap();
        let args: Vec<&str> = args.split('|').collect();
        let expected = fs::read_to_string(manifest().join("golden").join(format!("{name}.txt"))).unwrap();
        let first = umbra(&ws, &args);
        let second = umbra(&ws, &args);
        assert_eq!(first.status.code(), Some(0), "{name}: {}", stderr(&first));
        assert_eq!(first.stdout, second.stdout, "{name} differs between runs");
        assert_eq!(stdout(&first), expected, "{name}");
        count += 1;
    }
    assert!(count >= 15);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ws = dir.path().join("ws.json");
    let corpus: &[(&[&str], i32, &str)] = &[
        (&["eval", "bell ^. 2", "--order", "3"], 0, ""),
        (&["eval", "u + "], 1, "line 1, column 5"),
        (&["eval", "adj u"], 1, "column 5"),
        (&["eval", "u..v"], 1, "column 2"),
        (&["eval", "1/0"], 1, "column 3"),
        (&["eval", "cinv(eps)", "--order", "3"], 2, "first moment is zero"),
        (&["eval", "nosuch", "--order", "3"], 2, "unknown umbra"),
        (&["sheffer", "--alpha", "u", "--gamma", "eps", "--order", "3"], 2, "first moment is zero"),
        (&["eval", "u", "--order", "65"], 1, "0..=64"),
        (&["eval", "u", "--format", "yaml"], 1, "yaml"),
        (&["frobnicate"], 1, ""),
        (&["stirling", "third", "--n", "3"], 1, ""),
        (&["example", "nope"], 1, ""),
        (&["define", "g", "--moments", "2,1"], 1, "not unital"),
        (&["define", "g", "--moments", "1,x"], 1, ""),
        (&["define", "bell", "--moments", "1,1"], 1, "reserved"),
        (&["define", "g"], 1, ""),
        (&["define", "g", "--moments", "1,1", "--egf", "1,1"], 1, ""),
        (&["--help"], 0, ""),
        (&["--version"], 0, ""),
    ];
    for (args, code, needle) in corpus {
        let o = umbra(&ws, args);
        assert_eq!(o.status.code(), Some(*code), "{args:?}: {}", stderr(&o));
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn unreadable_workspace_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{ not json").unwrap();
    let o = umbra(&bad, &["list"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("malformed workspace"));

    let o = umbra(dir.path(), &["list"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));

    let missing_dir = dir.path().join("no/such/dir/ws.json");
    let o = umbra(&missing_dir, &["define", "g", "--moments", "1,1"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
}

#[test]
fn syntax_errors_point_at_the_offending_column() {
    let dir = tempfile::tempdir().unwrap();
    let o = umbra(&dir.path().join("w.json"), &["eval", "u + "]);
    assert_eq!(
        stderr(&o),
        "error: unexpected end of input at line 1, column 5\n  u + \n      ^\nexpected one of: name, integer, '-', '(', keyword\n"
    );
}

#[test]
fn define_then_use() {
    let dir = tempfile::tempdir().unwrap();
    let ws = dir.path().join("ws.json");

    let o = umbra(&ws, &["define", "g", "--cumulants", "1,0,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "0  1\n1  1\n2  1\n3  1\n");

    let o = umbra(&ws, &["define", "p", "--egf", "1, 1, 1/2, 1/6"]);
    assert_eq!(stdout(&o), "0  1\n1  1\n2  1\n3  1\n");

    let o = umbra(&ws, &["define", "h", "--moments", "1,2,5"]);
    assert_eq!(o.status.code(), Some(0));

    let o = umbra(&ws, &["list", "--format", "csv"]);
    assert!(stdout(&o).ends_with("g,user,3\nh,user,2\np,user,3\n"), "{}", stdout(&o));

    // Without --order, the order is lowered to what `h` supports.
    let o = umbra(&ws, &["eval", "h"]);
    assert_eq!(stdout(&o), "0  1\n1  2\n2  5\n");
    let o = umbra(&ws, &["eval", "h . h"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = umbra(&ws, &["eval", "h", "--order", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("order 3 is needed"));

    // Replacing keeps unknown fields written by other tools.
    let mut doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&ws).unwrap()).unwrap();
    doc["umbrae"]["g"]["note"] = "kept".into();
    doc["owner"] = "someone".into();
    fs::write(&ws, serde_json::to_string(&doc).unwrap()).unwrap();
    umbra(&ws, &["define", "g", "--moments", "1,0,1"]);
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&ws).unwrap()).unwrap();
    assert_eq!(doc["umbrae"]["g"]["note"], "kept");
    assert_eq!(doc["owner"], "someone");
    assert_eq!(doc["umbrae"]["g"]["moments"], serde_json::json!(["1", "0", "1"]));
    assert!(fs::read_dir(dir.path()).unwrap().all(|e| !e.unwrap().file_name().to_string_lossy().contains(".tmp")));
}

#[test]
fn workspace_flag_takes_precedence_over_env() {
    let dir = tempfile::tempdir().unwrap();
    let by_env = dir.path().join("env.json");
    let by_flag = dir.path().join("flag.json");
    let o = Command::new(env!("CARGO_BIN_EXE_umbra"))
        .args(["define", "g", "--moments", "1,1", "--workspace"])
        .arg(&by_flag)
        .env("UMBRA_WORKSPACE", &by_env)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(by_flag.exists());
    assert!(!by_env.exists());
}

fn schema() -> jsonschema::Validator {
    let text =
        fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/output.schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

#[test]
fn json_output_matches_the_schema() {
    let schema = schema();
    let dir = tempfile::tempdir().unwrap();
    let ws = dir.path().join("w.json");
    let runs: &[&[&str]] = &[
        &["define", "myu", "--moments", "1,1,2,5", "--format", "json"],
        &["eval", "bell", "--order", "4", "--format", "json"],
        &["eval", "u", "chi", "--order", "2", "--format", "json"],
        &["eval", "x . u + y . chi - 1", "--order", "3", "--format", "json"],
        &["sheffer", "--alpha", "u", "--gamma", "chi", "--order", "3", "--format", "json"],
        &["associated", "--gamma", "myu", "--format", "json"],
        &["appell", "--alpha", "bern", "--order", "3", "--format", "json"],
        &["abel", "--gamma", "chi", "--order", "3", "--format", "json"],
        &[
            "connect",
            "--from-alpha",
            "u",
            "--from-gamma",
            "bell",
            "--to-alpha",
            "u",
            "--to-gamma",
            "chi",
            "--order",
            "3",
            "--format",
            "json",
        ],
        &["stirling", "first", "--n", "4", "--format", "json"],
        &["stirling", "second", "--n", "4", "--format", "json"],
        &["example", "bernoulli-diff", "--order", "3", "--format", "json"],
        &["example", "backward-diff", "--order", "3", "--format", "json"],
        &["example", "fibonacci", "--order", "3", "--format", "json"],
        &["list", "--format", "json"],
    ];
    for args in runs {
        let o = umbra(&ws, args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        let errors: Vec<String> = schema.iter_errors(&v).map(|e| format!("{} at {}", e, e.instance_path())).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:#?}");
    }
    let o = umbra(&ws, &["stirling", "second", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["matrix"][4], serde_json::json!(["0", "1", "7", "6", "1"]));
    // a document missing a required field is rejected
    assert!(!schema.is_valid(&serde_json::json!({"command": "eval", "order": 1})));
}

#[test]
fn csv_shape_matches_order() {
    let dir = tempfile::tempdir().unwrap();
    let ws = dir.path().join("w.json");
    for order in [0usize, 1, 4, 7] {
        let n = order.to_string();
        let mut runs = vec![vec!["eval", "x . bell", "--order", &n, "--format", "csv"]];
        // a Sheffer pair needs γ's first moment
        if order > 0 {
            runs.extend([
                vec!["sheffer", "--alpha", "bern", "--gamma", "u", "--order", &n, "--format", "csv"],
                vec![
                    "connect",
                    "--from-alpha",
                    "u",
                    "--from-gamma",
                    "bell",
                    "--to-alpha",
                    "u",
                    "--to-gamma",
                    "chi",
                    "--order",
                    &n,
                    "--format",
                    "csv",
                ],
            ]);
        }
        for args in runs {
            let out = stdout(&umbra(&ws, &args));
            let rows: Vec<&str> = out.lines().collect();
            assert_eq!(rows.len(), order + 2, "{args:?}");
            assert!(rows.iter().all(|r| r.split(',').count() == order + 2), "{args:?}");
        }
    }
}
