use std::process::{Command, Output};

use serde_json::{Map, Value};

fn mixprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mixprod"))
        .args(args)
        .output()
        .expect("run mixprod")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let output = mixprod(args);
    assert!(
        output.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    stdout(&output)
}

fn check_ideal_object(value: &Value, context: &str) {
    let object = value
        .as_object()
        .unwrap_or_else(|| panic!("{context}: not an object"));
    let mut keys: Vec<&str> = object.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["expr", "gens"], "{context}");
    assert!(
        object["expr"].is_string() || object["expr"].is_null(),
        "{context}"
    );
    let gens = object["gens"]
        .as_array()
        .unwrap_or_else(|| panic!("{context}: gens"));
    assert!(gens.iter().all(Value::is_string), "{context}");
}

/// Checks one report against the documented key set and value types.
fn check_report(report: &Map<String, Value>, context: &str) {
    const REQUIRED: [&str; 13] = [
        "n",
        "m",
        "ideal",
        "betti",
        "pd",
        "depth",
        "dim",
        "cm",
        "type",
        "gorenstein",
        "field",
        "method",
        "agree",
    ];
    for key in REQUIRED {
        assert!(report.contains_key(key), "{context}: missing {key}");
    }
    for key in report.keys() {
        assert!(
            REQUIRED.contains(&key.as_str()) || key == "dual" || key == "hilbert",
            "{context}: unexpected key {key}"
        );
    }
    for key in ["n", "m", "pd", "depth", "dim"] {
        assert!(report[key].is_u64(), "{context}: {key}");
    }
    for key in ["cm", "gorenstein"] {
        assert!(report[key].is_boolean(), "{context}: {key}");
    }
    assert!(
        report["type"].is_u64() || report["type"].is_null(),
        "{context}: type"
    );
    assert!(
        report["agree"].is_boolean() || report["agree"].is_null(),
        "{context}: agree"
    );
    assert!(report["field"].is_string(), "{context}: field");
    let method = report["method"].as_str().unwrap();
    assert!(
        ["closed", "hochster", "both"].contains(&method),
        "{context}: {method}"
    );
    check_ideal_object(&report["ideal"], context);
    if let Some(dual) = report.get("dual") {
        check_ideal_object(dual, context);
    }
    let betti = report["betti"].as_object().unwrap();
    assert_eq!(betti["0"]["0"], 1, "{context}: beta_00");
    for (i, row) in betti {
        i.parse::<usize>().unwrap();
        for (j, v) in row.as_object().unwrap() {
            j.parse::<usize>().unwrap();
            assert!(v.as_u64().is_some_and(|v| v > 0), "{context}: beta_{i},{j}");
        }
    }
    let pd = report["pd"].as_u64().unwrap() as usize;
    assert_eq!(
        betti.keys().filter_map(|i| i.parse::<usize>().ok()).max(),
        Some(pd)
    );
}

#[test]
fn json_reports_follow_the_schema() {
    let inputs: [&[&str]; 8] = [
        &["--n", "2", "--m", "2", "I1*J1"],
        &["--n", "3", "--m", "2", "I2*J1 + I3"],
        &["--n", "3", "--m", "3", "I2*J3 + I3*J1 + J2"],
        &["--n", "4", "--m", "0", "I2"],
        &["--n", "0", "--m", "3", "J3"],
        &["--n", "3", "--m", "0", "--gens", "x1*x2,x3"],
        &[
            "--n",
            "2",
            "--m",
            "2",
            "--gens",
            "x1*y1,x2*y2",
            "--field",
            "gf2",
        ],
        &[
            "--n",
            "2",
            "--m",
            "3",
            "I1*J3 + I2*J2",
            "--field",
            "gfp:32003",
        ],
    ];
    for command in ["dual", "betti", "cm", "hilbert"] {
        for input in inputs {
            let mut args = vec![command, "--json"];
            args.extend_from_slice(input);
            let output = mixprod(&args);
            let context = format!("{args:?}");
            if !output.status.success() {
                panic!("{context}: {}", String::from_utf8_lossy(&output.stderr));
            }
            let value: Value = serde_json::from_str(&stdout(&output)).expect(&context);
            let report = value.as_object().expect(&context);
            check_report(report, &context);
            assert_eq!(report.contains_key("dual"), command == "dual", "{context}");
            assert_eq!(
                report.contains_key("hilbert"),
                command == "hilbert",
                "{context}"
            );
        }
    }
}

#[test]
fn dual_of_the_product_of_maximal_ideals() {
    let text = ok(&["dual", "--n", "2", "--m", "2", "I1*J1"]);
    assert!(text.contains("dual: I2 + J2"), "{text}");
    assert!(text.contains("dual generators: x1*x2, y1*y2"), "{text}");
    let value: Value =
        serde_json::from_str(&ok(&["dual", "--json", "--n", "2", "--m", "2", "I1*J1"])).unwrap();
    assert_eq!(value["dual"]["expr"], "I2 + J2");
    assert_eq!(value["dual"]["gens"], serde_json::json!(["x1*x2", "y1*y2"]));
}

#[test]
fn betti_both_methods_agree() {
    let text = ok(&["betti", "--n", "3", "--m", "0", "I2", "--method", "both"]);
    assert!(
        text.contains("closed:") && text.contains("hochster:"),
        "{text}"
    );
    assert!(text.contains("tables: EQUAL"), "{text}");
    let value: Value = serde_json::from_str(&ok(&[
        "betti", "--json", "--n", "3", "--m", "0", "I2", "--method", "both",
    ]))
    .unwrap();
    assert_eq!(value["method"], "both");
    assert_eq!(value["agree"], true);
    assert_eq!(
        value["betti"],
        serde_json::json!({"0": {"0": 1}, "1": {"2": 3}, "2": {"3": 2}})
    );
}

#[test]
fn cm_reports_type() {
    let value: Value = serde_json::from_str(&ok(&[
        "cm",
        "--json",
        "--n",
        "2",
        "--m",
        "3",
        "I1*J3 + I2*J2",
    ]))
    .unwrap();
    assert_eq!(value["cm"], true);
    assert_eq!(value["type"], 4);
    let value: Value =
        serde_json::from_str(&ok(&["cm", "--json", "--n", "2", "--m", "2", "I1*J1"])).unwrap();
    assert_eq!(value["cm"], false);
    assert_eq!(value["type"], Value::Null);
}

#[test]
fn hilbert_numerators_match() {
    let text = ok(&["hilbert", "--n", "3", "--m", "0", "I2"]);
    assert!(text.contains("k-polynomial: 1 - 3t^2 + 2t^3"), "{text}");
    assert!(text.contains("match: yes"), "{text}");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| mixprod(args).status.code();
    assert_eq!(code(&["betti", "--n", "3", "--m", "0", "I2"]), Some(0));
    // Usage errors.
    assert_eq!(code(&["betti", "--n", "3", "--m", "0", "I5"]), Some(2));
    assert_eq!(code(&["betti", "--n", "3", "I2"]), Some(2));
    assert_eq!(code(&["betti", "--n", "3", "--m", "0"]), Some(2));
    assert_eq!(code(&["betti", "--n", "3", "--m", "0", "I2*I1"]), Some(2));
    assert_eq!(
        code(&["betti", "--n", "3", "--m", "0", "--gens", "x4"]),
        Some(2)
    );
    assert_eq!(
        code(&["betti", "--n", "3", "--m", "0", "I2", "--field", "gfp:4"]),
        Some(2)
    );
    assert_eq!(code(&["frobnicate"]), Some(2));
    // Domain errors.
    let unit = mixprod(&["betti", "--n", "3", "--m", "0", "I0"]);
    assert_eq!(unit.status.code(), Some(1));
    assert!(!unit.stderr.is_empty());
    let shape = mixprod(&["cm", "--n", "3", "--m", "3", "I1*J1 + I2*J2 + I3"]);
    assert_eq!(
        shape.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&shape.stderr)
    );
    assert_eq!(
        code(&["betti", "--n", "2", "--m", "2", "--gens", "x1*y1", "--method", "closed"]),
        Some(1)
    );
}

#[test]
fn verify_passes_and_is_reproducible() {
    let text = ok(&["verify", "--max-vertices", "7"]);
    let last = text.lines().last().unwrap();
    assert!(
        last.starts_with("verify:") && last.ends_with("all PASS"),
        "{text}"
    );
    assert!(!text.contains("FAIL"), "{text}");
    let json = ok(&["verify", "--json", "--max-vertices", "5", "--field", "gf2"]);
    assert_eq!(
        json,
        ok(&["verify", "--json", "--max-vertices", "5", "--field", "gf2"])
    );
    let value: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["pass"], true);
    assert!(value["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "PASS"));
}
