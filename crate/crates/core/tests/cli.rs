use std::process::Command;

use serde_json::Value;

fn lgknot(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lgknot")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn compute_text_and_json() {
    let (code, out, _) = lgknot(&["compute", "--braid", "1 1 1", "--strands", "2", "--invariant", "alexander-det"]);
    assert_eq!((code, out.trim()), (0, "1 - t + t^2"));

    let (code, out, _) = lgknot(&["compute", "--braid", "1 -2 1 -2", "--strands", "3", "--invariant", "all", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["invariants"]["alexander_det"]["text"], "1 - 3t + t^2");
    assert_eq!(v["main21_unit"]["sign"], 1);
    let terms = &v["invariants"]["lg21"]["terms"];
    assert!(terms.as_array().unwrap().iter().all(|t| t["y_degree"] == 0));
}

#[test]
fn raw_output_keeps_the_unit() {
    let (_, out, _) = lgknot(&["compute", "--braid", "1 -2 1 -2", "--strands", "3", "--invariant", "alexander-det", "--raw"]);
    assert_eq!(out.trim(), "-t^-2 + 3t^-1 - 1");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(lgknot(&["compute", "--braid", "5", "--strands", "2"]).0, 2);
    assert_eq!(lgknot(&["compute", "--braid", "1 x", "--strands", "2"]).0, 2);
    assert_eq!(lgknot(&["verify", "nosuchcheck"]).0, 2);
    assert_eq!(lgknot(&["verify", "main31", "--max-strands", "9"]).0, 2);
    assert_eq!(lgknot(&["frobnicate"]).0, 2);
}

#[test]
fn verify_single_braid() {
    let (code, out, _) = lgknot(&["verify", "main21", "--braid", "1 1 1", "--strands", "2"]);
    assert_eq!(code, 0);
    let r: Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(r["name"], "main21");
    assert_eq!(r["outcome"], "pass");
    assert_eq!(r["units"].as_array().unwrap().len(), 1);
}

#[test]
fn batch_keeps_order_and_flags_errors() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("table.txt");
    let output = dir.path().join("out.jsonl");
    std::fs::write(&input, "# knots\n3_1; 2; 1 1 1\n\n4_1; 3; 1 -2 1 -2\n5_1; 2; 1 1 1 1 1\n").unwrap();
    let args = ["batch", input.to_str().unwrap(), output.to_str().unwrap(), "--invariant", "lg21-special"];
    let (code, out, _) = lgknot(&args);
    assert_eq!((code, out.trim()), (0, "3 ok"));
    let lines: Vec<Value> = std::fs::read_to_string(&output).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let names: Vec<&str> = lines.iter().map(|v| v["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["3_1", "4_1", "5_1"]);

    std::fs::write(&input, "3_1; 2; 1 1 1\nbad; 2; 1 7\nno fields here\n").unwrap();
    let (code, out, _) = lgknot(&args);
    assert_eq!((code, out.trim()), (1, "1 ok, 2 failed"));
    let text = std::fs::read_to_string(&output).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines[0]["error"].is_null());
    assert!(lines[1]["error"].as_str().unwrap().contains("out of range"));
    assert_eq!(lines[2]["line"], 3);
}

#[test]
fn batch_all_embeds_main_units() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("t.txt");
    let output = dir.path().join("o.jsonl");
    std::fs::write(&input, "trefoil; 2; 1 1 1\n").unwrap();
    let (code, _, _) = lgknot(&["batch", input.to_str().unwrap(), output.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(std::fs::read_to_string(&output).unwrap().trim()).unwrap();
    assert!(v["main21_unit"].is_object());
    assert!(v["main31_unit"].is_object());
}
