use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_firmcor"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("firmcor runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

fn in_process(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("firmcor").chain(args.iter().copied()).map(str::to_string);
    let code = firmcor::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn repo_file(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

/// Checks `v` against the subset of JSON Schema the shipped schemas use.
fn conforms(schema: &Value, v: &Value, at: &str) -> Result<(), String> {
    if let Some(t) = schema.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        let ok = types.iter().any(|t| match *t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "boolean" => v.is_boolean(),
            "number" => v.is_number(),
            "integer" => v.is_u64() || v.is_i64(),
            "null" => v.is_null(),
            _ => false,
        });
        if !ok {
            return Err(format!("{at}: expected {types:?}, got {v}"));
        }
    }
    if let Some(Value::Array(allowed)) = schema.get("enum") {
        if !allowed.contains(v) {
            return Err(format!("{at}: {v} not in {allowed:?}"));
        }
    }
    if let Some(Value::Array(req)) = schema.get("required") {
        for k in req.iter().filter_map(Value::as_str) {
            if v.get(k).is_none() {
                return Err(format!("{at}: missing {k}"));
            }
        }
    }
    if let (Some(Value::Object(props)), Value::Object(obj)) = (schema.get("properties"), v) {
        for (k, val) in obj {
            match props.get(k) {
                Some(s) => conforms(s, val, &format!("{at}.{k}"))?,
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return Err(format!("{at}: unexpected key {k}"))
                }
                None => {}
            }
        }
    }
    if let (Some(items), Value::Array(arr)) = (schema.get("items"), v) {
        for (i, x) in arr.iter().enumerate() {
            conforms(items, x, &format!("{at}[{i}]"))?;
        }
    }
    Ok(())
}

#[test]
fn exit_codes_match_the_contract() {
    assert_eq!(run(&["validate", "sweedler-f4-f2"]).0, 0);
    let (code, out, _) = run(&["descent", "projection-f2xf2", "--max-dim", "2"]);
    assert_eq!(code, 1);
    assert!(out.contains("[FAIL] Σ faithfully flat: refuted by ideal [[1, 0]]"), "{out}");
    let (code, _, err) = run(&["galois", "missing.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("missing.json"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["descent"]).0, 2);
    assert_eq!(run(&["validate", "no-such-instance"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn bundled_instances_pass_every_command_except_projection_descent() {
    for name in firmcor::instances::bundled_names() {
        for cmd in ["validate", "comatrix", "galois", "dual"] {
            let (code, out) = in_process(&[cmd, &name]);
            assert_eq!(code, 0, "{cmd} {name}:\n{out}");
        }
        let (code, out) = in_process(&["flat", &name]);
        assert_eq!(code, i32::from(name == "projection-f2xf2"), "flat {name}:\n{out}");
    }
    assert_eq!(in_process(&["descent", "sweedler-f4-f2", "--max-dim", "2"]).0, 0);
    assert_eq!(in_process(&["list"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    for args in [&["--json", "descent", "projection-f2xf2"][..], &["flat", "sweedler-f4-f2"][..], &["list"][..]] {
        assert_eq!(in_process(args), in_process(args), "{args:?}");
    }
}

#[test]
fn json_reports_follow_the_schema() {
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(repo_file("schema/report.schema.json")).unwrap()).unwrap();
    let runs: [&[&str]; 7] = [
        &["--json", "validate", "trivial"],
        &["--json", "comatrix", "dual-basis-matrix"],
        &["--json", "galois", "sweedler-f4-f2"],
        &["--json", "flat", "projection-f2xf2"],
        &["--json", "--timing", "descent", "projection-f2xf2"],
        &["--json", "dual", "corner-idempotents"],
        &["--json", "list"],
    ];
    for args in runs {
        let (code, out) = in_process(args);
        let v: Value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\n{out}"));
        conforms(&schema, &v, "$").unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(code == 0, v["passed"] == Value::Bool(true), "{args:?}");
    }
}

#[test]
fn text_and_json_carry_the_same_checks() {
    let (_, json) = in_process(&["--json", "descent", "projection-f2xf2"]);
    let (_, text) = in_process(&["descent", "projection-f2xf2"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    for c in v["checks"].as_array().unwrap() {
        let line = format!(
            "[{}] {}: {}",
            if c["passed"] == Value::Bool(true) { "ok" } else { "FAIL" },
            c["name"].as_str().unwrap(),
            c["detail"].as_str().unwrap()
        );
        assert!(text.contains(&line), "missing {line}");
    }
    for w in v["witnesses"].as_array().unwrap() {
        assert!(text.contains(&format!("witness: {}", w.as_str().unwrap())));
    }
}

#[test]
fn comatrix_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweedler-comatrix.json");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["comatrix", "sweedler-f4-f2", "--out", p]).0, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(firmcor::instances::canonicalize(&text).unwrap() + "\n", text);
    assert_eq!(run(&["validate", p]).0, 0);
    // Σ over its own comatrix coring is Galois with can the identity
    let (code, out, _) = run(&["galois", p]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn sample_files_load_and_canonicalize_idempotently() {
    for name in ["sweedler-f4-f2", "projection-f2xf2", "corner-idempotents"] {
        let path = repo_file(&format!("samples/{name}.json"));
        let text = std::fs::read_to_string(&path).unwrap();
        let once = firmcor::instances::canonicalize(&text).unwrap();
        assert_eq!(firmcor::instances::canonicalize(&once).unwrap(), once);
        // same mathematics as the bundled instance; only the notes differ
        let bundled = firmcor::instances::by_name(name).unwrap();
        let mut sample: Value = serde_json::from_str(&once).unwrap();
        let mut reference = firmcor::instances::to_json(&bundled);
        sample["notes"] = Value::Null;
        reference["notes"] = Value::Null;
        assert_eq!(sample, reference, "{name}");
        assert_eq!(run(&["validate", path.to_str().unwrap()]).0, 0);
    }
}

#[test]
fn bad_files_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let text = firmcor::instances::save_string(&firmcor::instances::trivial());
    let cases = [
        ("p4.json", text.replace("\"p\":2", "\"p\":4")),
        ("broken.json", text[..text.len() / 2].to_string()),
        ("format.json", text.replace("firmcor-1", "firmcor-0")),
    ];
    for (name, body) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        let (code, _, err) = run(&["validate", path.to_str().unwrap()]);
        assert_eq!(code, 2, "{name}: {err}");
        assert!(err.contains("parse error"), "{name}: {err}");
    }
}

#[test]
fn selftest_quick_reports_every_criterion() {
    let (code, out) = in_process(&["selftest", "--quick"]);
    for id in 1..=11 {
        assert!(out.contains(&format!("criterion {id}:")), "criterion {id} missing:\n{out}");
    }
    // criterion 7 cannot hold on projection-f2xf2, so the suite exits 1
    assert_eq!(code, 1);
    assert_eq!(out.matches("[FAIL]").count(), 1, "{out}");
}
