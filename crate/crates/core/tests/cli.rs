use std::process::Command;

use serde_json::Value;

fn coxblock(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_coxblock"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &std::process::Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_reports_all_subsets() {
    let out = coxblock(&["verify", "--d", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("15/15 subsets verified"));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verified"], 15);
    assert_eq!(v["reports"].as_array().unwrap().len(), 15);
}

#[test]
fn verify_single_subset_and_enumeration() {
    let out = coxblock(&["verify", "--d", "3", "--I", "1,2", "--format", "tsv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("# 1/1 subsets verified\n"));

    let out = coxblock(&["verify", "--d", "5", "--enumerate"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["enumeration"]["affine_descent_classes"], 30);
    assert_eq!(v["enumeration"]["jacquet_consistent"], 15);
}

#[test]
fn enumeration_cap_respects_environment() {
    let out = coxblock(&["verify", "--d", "10", "--enumerate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_coxblock"))
        .args(["verify", "--d", "4", "--enumerate"])
        .env("COXBLOCK_MAX_D", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_coxblock"))
        .args(["verify", "--d", "4", "--enumerate"])
        .env("COXBLOCK_MAX_D", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--d", "6"][..],
        &["classify", "--d", "5", "--format", "tsv"],
        &["euler", "--d", "5"],
        &["decomp-matrix", "--d", "4"],
    ] {
        assert_eq!(stdout(&coxblock(args)), stdout(&coxblock(args)), "{args:?}");
    }
    let timed = coxblock(&["verify", "--d", "3", "--timing"]);
    let v: Value = serde_json::from_str(&stdout(&timed)).unwrap();
    assert!(v["elapsed_ms"].is_number());
}

#[test]
fn classify_json_and_tsv_agree() {
    let json: Value = serde_json::from_str(&stdout(&coxblock(&["classify", "--d", "4"]))).unwrap();
    let tsv = stdout(&coxblock(&["classify", "--d", "4", "--format", "tsv"]));
    let rows: Vec<&str> = tsv.lines().skip(1).collect();
    let records = json.as_array().unwrap();
    assert_eq!(rows.len(), 15);
    assert_eq!(records.len(), 15);
    for (row, rec) in rows.iter().zip(records) {
        let cols: Vec<&str> = row.split('\t').collect();
        assert_eq!(cols[0], rec["mask"].to_string());
        assert_eq!(cols[4], rec["lj_sign"].to_string());
        let levi: Vec<String> = rec["levi"]
            .as_array()
            .unwrap()
            .iter()
            .map(Value::to_string)
            .collect();
        assert_eq!(cols[2], format!("({})", levi.join(",")));
        let support: Vec<String> = rec["lj_support"]
            .as_array()
            .unwrap()
            .iter()
            .map(Value::to_string)
            .collect();
        assert_eq!(cols[5], format!("{{{}}}", support.join(",")));
    }
}

#[test]
fn subset_encodings_agree() {
    let by_mask = stdout(&coxblock(&["wd", "--d", "4", "--I", "10"]));
    let by_list = stdout(&coxblock(&["wd", "--d", "4", "--I", "1,3"]));
    let by_json = stdout(&coxblock(&["wd", "--d", "4", "--I", "[3,1]"]));
    assert_eq!(by_mask, by_list);
    assert_eq!(by_list, by_json);
    let v: Value = serde_json::from_str(&by_list).unwrap();
    assert_eq!(
        v["strings"],
        serde_json::json!([{"top": 1, "len": 2}, {"top": 3, "len": 2}])
    );
}

#[test]
fn module_commands() {
    let ext: Value = serde_json::from_str(&stdout(&coxblock(&[
        "ext", "--d", "3", "--kind", "vi", "--J", "1,", "--I", "2,",
    ])))
    .unwrap();
    assert_eq!(ext, serde_json::json!([[1, 1], [2, 1]]));

    let e1 = stdout(&coxblock(&[
        "e1", "--d", "2", "--I", "", "--i", "1", "--format", "tsv",
    ]));
    assert_eq!(e1, "q\\p\t-1\t0\n0\t0\t1\n-1\t1\t1\n");

    let lj: Value =
        serde_json::from_str(&stdout(&coxblock(&["lj", "--d", "3", "--I", "1,"]))).unwrap();
    assert_eq!(lj["coeffs"], serde_json::json!([-1, 0, -1]));

    let rstar = stdout(&coxblock(&[
        "rstar", "--d", "2", "--I", "1,", "--format", "tsv",
    ]));
    assert_eq!(
        rstar,
        "i\tj\tdegree\tdim\tlefschetz\n1\t0\t-1\t1\tiso\n0\t0\t1\t1\tzero\n"
    );

    let params: Value = serde_json::from_str(&stdout(&coxblock(&[
        "params", "--q", "2", "--ell", "3", "--d", "2",
    ])))
    .unwrap();
    assert_eq!(
        params,
        serde_json::json!({"coxeter": true, "kernel_count": 1})
    );
    let params: Value = serde_json::from_str(&stdout(&coxblock(&[
        "params", "--q", "4", "--ell", "3", "--d", "2",
    ])))
    .unwrap();
    assert_eq!(
        params,
        serde_json::json!({"coxeter": false, "kernel_count": null})
    );

    let euler = coxblock(&["euler", "--d", "4", "--I", "1,3", "--i", "2"]);
    assert_eq!(euler.status.code(), Some(0));
}

#[test]
fn usage_errors() {
    for args in [
        &["classify"][..],
        &["classify", "--d", "0"],
        &["classify", "--d", "17"],
        &["wd", "--d", "3", "--I", "0,1,2"],
        &["ext", "--d", "3", "--kind", "ii", "--J", "0,", "--I", ""],
        &["e1", "--d", "3", "--I", "", "--i", "3"],
        &["params", "--q", "2", "--ell", "4", "--d", "2"],
        &["lj", "--d", "3", "--I", "x"],
    ] {
        let out = coxblock(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}
