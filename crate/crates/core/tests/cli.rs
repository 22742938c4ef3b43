use std::collections::BTreeSet;
use std::process::{Command, Output};

fn feyncount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_feyncount"))
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

#[test]
fn counts_table() {
    let o = feyncount(&["counts", "--max-order", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let distinct: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().last().unwrap())
        .collect();
    assert_eq!(distinct, ["1", "2", "10", "74", "706"]);
    assert!(stderr(&o).is_empty());
}

#[test]
fn counts_csv() {
    let o = feyncount(&["counts", "--max-order", "4", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "m,total,bubble,connected,distinct\n\
         0,1,1,1,1\n\
         1,6,2,4,2\n\
         2,120,24,80,10\n\
         3,5040,720,3552,74\n\
         4,362880,40320,271104,706\n"
    );
}

#[test]
fn counts_all_methods_agree() {
    let o = feyncount(&[
        "counts",
        "--max-order",
        "12",
        "--method",
        "all",
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["method"], "all");
    assert_eq!(v["rows"].as_array().unwrap().len(), 13);
    let rec = feyncount(&["counts", "--max-order", "12", "--format", "json"]);
    let r: serde_json::Value = serde_json::from_str(&stdout(&rec)).unwrap();
    assert_eq!(v["rows"], r["rows"]);
}

#[test]
fn counts_bfile() {
    let o = feyncount(&["counts", "--max-order", "6", "--format", "bfile"]);
    assert!(o.status.success());
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines[0], "1 2");
    assert_eq!(lines[3], "4 706");
    assert_eq!(lines.len(), 6);
}

#[test]
fn counts_over_budget() {
    let o = feyncount(&["counts", "--max-order", "21", "--method", "arques-walsh"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(
        stderr(&o).contains("term budget of 1048576"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn output_is_reproducible() {
    let a = feyncount(&[
        "counts",
        "--max-order",
        "15",
        "--method",
        "closed-form",
        "--format",
        "json",
    ]);
    let b = feyncount(&[
        "counts",
        "--max-order",
        "15",
        "--method",
        "closed-form",
        "--format",
        "json",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_small() {
    let o = feyncount(&["verify", "--max-order", "4", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["overall"], true);
    let oracle_orders: BTreeSet<String> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"] == "oracle_orbit_count")
        .map(|c| c["params"].as_str().unwrap().to_owned())
        .collect();
    assert_eq!(
        oracle_orders,
        ["m=1", "m=2", "m=3", "m=4"].map(String::from).into()
    );
}

#[test]
fn verify_ten_caps_oracle() {
    let o = feyncount(&["verify", "--max-order", "10"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("overall: PASS"));
    assert!(text.contains("coefficient_recursion"));
    assert!(!text
        .lines()
        .any(|l| l.starts_with("oracle") && l.contains("m=5")));
    assert!(stderr(&o).contains("oracle checks limited to order 4"));
}

#[test]
fn verify_zero_is_refused() {
    let o = feyncount(&["verify", "--max-order", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_order_one() {
    let o = feyncount(&["oracle", "--order", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("total        6"));
    assert!(text.contains("connected    4"));
    assert!(text.contains("orbits       2"));
}

#[test]
fn oracle_json() {
    let o = feyncount(&["oracle", "--order", "2", "--format", "json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(
        text.starts_with(r#"{"total":"120","connected":"80","vacuum":"24","orbits":"10""#),
        "{text}"
    );
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["orbit_sizes"]["8"], "10");
}

#[test]
fn oracle_refuses_large_orders() {
    let o = feyncount(&["oracle", "--order", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("13! = 6227020800"), "{}", stderr(&o));
    let o = feyncount(&["oracle", "--order", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("override"));
}

#[test]
fn oracle_writes_dot_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = feyncount(&[
        "oracle",
        "--order",
        "2",
        "--dot-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let names: BTreeSet<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert_eq!(names.len(), 10);
    assert!(names.contains("diagram_m2_1.dot"));
    assert!(names.contains("diagram_m2_10.dot"));
}

#[test]
fn export_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let o = feyncount(&[
            "export",
            "--order",
            "3",
            "--dir",
            d.path().to_str().unwrap(),
        ]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), "74\n");
    }
    for i in 1..=74 {
        let name = format!("diagram_m3_{i}.dot");
        let x = std::fs::read(a.path().join(&name)).unwrap();
        let y = std::fs::read(b.path().join(&name)).unwrap();
        assert_eq!(x, y);
        let text = String::from_utf8(x).unwrap();
        assert_eq!(text.lines().filter(|l| l.contains(" -> ")).count(), 7);
    }
}

#[test]
fn compositions_count_and_list() {
    let o = feyncount(&["compositions", "--n", "5"]);
    assert_eq!(stdout(&o), "16\n");
    let o = feyncount(&["compositions", "--n", "5", "--list"]);
    let listed: BTreeSet<String> = stdout(&o).lines().map(str::to_owned).collect();
    let expected: BTreeSet<String> = [
        "5",
        "4+1",
        "1+4",
        "2+3",
        "3+2",
        "1+2+2",
        "2+1+2",
        "2+2+1",
        "3+1+1",
        "1+3+1",
        "1+1+3",
        "1+1+1+2",
        "1+1+2+1",
        "1+2+1+1",
        "2+1+1+1",
        "1+1+1+1+1",
    ]
    .map(String::from)
    .into();
    assert_eq!(listed, expected);
    let o = feyncount(&["compositions", "--n", "1", "--list"]);
    assert_eq!(stdout(&o), "1\n");
}
