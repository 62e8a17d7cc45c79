use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qccd"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, text)
}

#[test]
fn factor_reports_slot_counts() {
    let (code, v, _) = run(&["factor", "--q", "2", "--m", "7"]);
    assert_eq!(code, 0);
    assert_eq!((v["s"].as_u64(), v["t"].as_u64()), (Some(1), Some(1)));
    assert_eq!(v["command"], "factor");
}

#[test]
fn dc_search_small_length() {
    let (code, v, _) = run(&["dc-search", "--q", "2", "--m", "5", "--exhaustive"]);
    assert_eq!(code, 0);
    assert_eq!(v["best"]["d"], 3);
    assert_eq!(v["oracle_agreement"], true);
}

#[test]
fn random_search_is_reproducible() {
    let args = [
        "dc-search",
        "--q",
        "2",
        "--m",
        "7",
        "--seed",
        "9",
        "--trials",
        "40",
    ];
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(a["best"], b["best"]);
    assert_eq!(a["lcd_count"], b["lcd_count"]);
}

#[test]
fn input_errors_exit_2_with_name() {
    let (code, v, _) = run(&["factor", "--q", "4", "--m", "6"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "NotCoprime");
    let (code, v, _) = run(&["factor", "--q", "6", "--m", "5"]);
    assert_eq!(code, 2);
    assert!(v["error"].is_string());
    let (code, v, _) = run(&["cyclic-check", "--q", "2", "--ell", "7", "--g", "1,0,1"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "NotADivisor");
    let (code, v, _) = run(&["qc-check", "--in", "data/does_not_exist.qc"]);
    assert_eq!(code, 2);
    assert!(v["error"].is_string());
    let (code, v, _) = run(&["factor", "--bogus"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "Usage");
}

#[test]
fn qc_check_lcd_double_circulant() {
    let (code, v, _) = run(&["qc-check", "--in", "data/dc_m5_lcd.qc"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["dc_criterion"], true);
    assert_eq!(v["params"]["d"], 3);
    assert_eq!(v["hull_dim"], 0);
}

#[test]
fn qc_check_non_lcd_double_circulant() {
    let (code, v, _) = run(&["qc-check", "--in", "data/dc_m5.qc"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["dc_criterion"], false);
    assert_eq!(v["params"]["d"], 4);
    assert_eq!(v["hull_dim"], 1);
}

#[test]
fn qc_check_inline_generator() {
    let (code, v, _) = run(&["qc-check", "--q", "2", "--m", "5", "--a", "1,0,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], true);
}

#[test]
fn cyclic_check_hermitian() {
    let (code, v, _) = run(&[
        "cyclic-check",
        "--q",
        "4",
        "--ell",
        "5",
        "--g",
        "1,1",
        "--form",
        "hermitian",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["lcd"], true);
    assert_eq!(v["conjugate_reversible"], true);
}

#[test]
fn table_output_lists_every_row() {
    let (code, _, text) = run(&["--format", "table", "table-repro", "--m-max", "9"]);
    assert_eq!(code, 0);
    let header: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(header, ["m", "3", "5", "7", "9"]);
    let d: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(d, ["d", "1", "3", "4", "3"]);
}

#[test]
fn extend_and_descend_quaternary_code() {
    let (code, v, _) = run(&["extend-hermitian", "--in", "data/gf4_4_2.code"]);
    assert_eq!(code, 0);
    assert_eq!(v["gram_identity"], true);
    assert_eq!(
        (v["output"]["n"].as_u64(), v["output"]["k"].as_u64()),
        (Some(6), Some(2))
    );
    let (code, v, _) = run(&["descend", "--in", "data/gf4_4_2.code", "--q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["lcd"], v["input_lcd"]);
    assert_eq!(
        (v["output"]["n"].as_u64(), v["output"]["k"].as_u64()),
        (Some(8), Some(4))
    );
}
