use std::io::Write;
use std::process::Command;

fn pa(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pa"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["pa"];
    full.extend_from_slice(args);
    let code = pa_core::cli::run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn table_csv_first_fifteen() {
    let (code, out, _) = pa(&["table", "--max", "15", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,pa,pa_o"));
    let pa: Vec<&str> = lines.map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(
        pa,
        ["1", "2", "3", "4", "6", "8", "11", "13", "21", "23", "33", "39", "54", "63", "88"]
    );
}

#[test]
fn table_json_single_row() {
    let (code, out, _) = run(&["table", "--max", "1", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"[{"n":1,"pa":1,"pa_o":1}]"#);
}

#[test]
fn table_json_keeps_big_integers_exact() {
    let (_, out, _) = run(&["table", "--max", "1500", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 1500);
    let last = pa_core::genfunc::series_g1(1500).unwrap().coefficients[1499].to_string();
    assert!(last.len() > 20);
    assert!(out.contains(&format!("\"pa\":{last}")));
}

#[test]
fn table_limits_are_usage_errors() {
    assert_eq!(pa(&["table", "--max", "0"]).0, 2);
    assert_eq!(run(&["table", "--max", "5001"]).0, 2);
    assert_eq!(run(&["table"]).0, 2);
}

#[test]
fn verify_table_and_heine() {
    let (code, out, _) = pa(&["verify", "--suite", "table", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["checks"].as_array().unwrap().len(), 15);

    let (code, out, _) = run(&["verify", "--suite", "heine", "--order", "40"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("suite heine: pass"));
}

#[test]
fn verify_oracles_small() {
    let (code, out, _) = run(&["verify", "--suite", "oracles", "--max-n", "20", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["parameters"]["n_max"], 20);
    assert_eq!(v["checks"].as_array().unwrap().len(), 60);
}

#[test]
fn verify_reports_identical_apart_from_timing() {
    let strip = |s: String| {
        let mut v: serde_json::Value = serde_json::from_str(&s).unwrap();
        v["timing_ms"] = 0.into();
        v
    };
    let a = run(&["verify", "--suite", "injection", "--max-n", "16", "--json"]).1;
    let b = run(&["verify", "--suite", "injection", "--max-n", "16", "--json"]).1;
    assert_eq!(strip(a), strip(b));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(pa(&["verify", "--suite", "nonsense"]).0, 2);
    assert_eq!(
        run(&["verify", "--suite", "injection", "--max-n", "12"]).0,
        2
    );
    assert_eq!(run(&["verify", "--suite", "genfunc", "--order", "0"]).0, 2);
    assert_eq!(run(&["verify"]).0, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("oeis-check"));
}

#[test]
fn asympt_default_csv() {
    let (code, out, _) = pa(&["asympt"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# precision: 12 decimal places\n"));
    assert!(out.contains("# A = 1.2855966"));
    assert!(out.contains("# auluck_integral = 0.463129"));
    let ingham: Vec<f64> = out
        .lines()
        .filter(|l| l.starts_with("ingham,"))
        .map(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap().abs())
        .collect();
    assert_eq!(ingham.len(), 3);
    assert!(ingham[0] > ingham[1] && ingham[1] > ingham[2]);
}

#[test]
fn asympt_json_grids() {
    let (code, out, _) = run(&[
        "asympt",
        "--n",
        "500,1000,2000",
        "--eps",
        "0.2,0.1",
        "--format",
        "json",
        "--precision",
        "8",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["precision"], 8);
    assert_eq!(v["tables"]["ingham"].as_array().unwrap().len(), 3);
    assert_eq!(v["tables"]["eta"].as_array().unwrap().len(), 2);
    let lhs = v["tables"]["eta"][0]["lhs"].as_str().unwrap();
    assert_eq!(lhs.split('.').nth(1).unwrap().len(), 8);
}

#[test]
fn asympt_rejects_bad_grids() {
    assert_eq!(run(&["asympt", "--n", "1000,500"]).0, 2);
    assert_eq!(run(&["asympt", "--n", "6000"]).0, 2);
    assert_eq!(run(&["asympt", "--eps", "0.1,0.2"]).0, 2);
    assert_eq!(run(&["asympt", "--eps", "0,-1"]).0, 2);
    assert_eq!(run(&["asympt", "--precision", "40"]).0, 2);
}

fn bfile(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn oeis_check_passes_known_entries() {
    let f = bfile("# pa(n)\n\n0 1\n1 1\n6 8\n15 88\n300 0000000001\n");
    let path = f.path().to_str().unwrap();
    let (code, out, _) = pa(&["oeis-check", "--bfile", path, "--max", "15"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("3 entries"));
}

#[test]
fn oeis_check_reports_mismatch() {
    let f = bfile("1 1\n2 2\n3 4\n");
    let (code, out, _) = run(&[
        "oeis-check",
        "--bfile",
        f.path().to_str().unwrap(),
        "--max",
        "10",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("first mismatch at n = 3"));
}

#[test]
fn oeis_check_parse_and_io_errors() {
    let f = bfile("1 1\nx y\n");
    let (code, _, err) = pa(&[
        "oeis-check",
        "--bfile",
        f.path().to_str().unwrap(),
        "--max",
        "10",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = run(&[
        "oeis-check",
        "--bfile",
        "/definitely/not/here",
        "--max",
        "10",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn oeis_check_without_entries_is_not_a_pass() {
    let f = bfile("# only comments\n");
    let (code, out, _) = run(&[
        "oeis-check",
        "--bfile",
        f.path().to_str().unwrap(),
        "--max",
        "10",
    ]);
    assert_eq!(code, 1);
    assert!(out.starts_with("suite oeis-check: skipped"));
}
