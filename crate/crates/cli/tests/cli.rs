use std::process::{Command, Output};

use serde_json::Value;

fn osp32(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osp32")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn export(object: &str, p: u32, cutoff: u32) -> Value {
    let out = osp32(&["export", object, "--p", &p.to_string(), "--cutoff", &cutoff.to_string()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn dense(json: &Value) -> Vec<Vec<(f64, f64)>> {
    let n = json["basis"].as_array().unwrap().len();
    let mut m = vec![vec![(0.0, 0.0); n]; n];
    for e in json["entries"].as_array().unwrap() {
        let (r, c) = (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize);
        m[r][c] = (e[2].as_f64().unwrap(), e[3].as_f64().unwrap());
    }
    m
}

#[test]
fn basis_row_counts() {
    let csv = |p: &str, n: &str| {
        let out = osp32(&["basis", "--p", p, "--cutoff", n, "--format", "csv"]);
        assert_eq!(code(&out), 0);
        stdout(&out).lines().count() - 1
    };
    assert_eq!(csv("1", "0"), 2);
    assert_eq!(csv("3", "2"), 16);
    assert_eq!(csv("2", "5"), 3 + 4 * 5);
}

#[test]
fn basis_json_fields() {
    let out = osp32(&["basis", "--p", "2", "--cutoff", "1", "--format", "json", "--omega", "2"]);
    let rows: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 7);
    for r in rows {
        let (mu12, mu22, mu11) = (r["mu12"].as_i64().unwrap(), r["mu22"].as_i64().unwrap(), r["mu11"].as_i64().unwrap());
        assert_eq!(r["theta"].as_i64().unwrap(), mu12 - mu11);
        assert_eq!(r["n"].as_i64().unwrap(), mu22 + mu12 - mu11);
        assert_eq!(r["energy"].as_f64().unwrap(), 2.0 * (r["n"].as_f64().unwrap() + 1.0));
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&osp32(&["basis", "--p", "0", "--cutoff", "2"])), 2);
    assert_eq!(code(&osp32(&["export", "c3+"])), 2);
    assert_eq!(code(&osp32(&["export", "M4"])), 2);
    assert_eq!(code(&osp32(&["verify", "--suite", "nope"])), 2);
    assert_eq!(code(&osp32(&["verify", "--cutoff", "2"])), 2);
    assert_eq!(code(&osp32(&["spectrum", "--mass", "-1"])), 2);
    assert_eq!(code(&osp32(&["spectrum", "--tol", "0"])), 2);
    assert_eq!(code(&osp32(&["frobnicate"])), 2);
    assert_eq!(code(&osp32(&["basis", "--p", "x"])), 2);
}

#[test]
fn verification_failure_exits_1() {
    let out = osp32(&["verify", "--suite", "triple", "--p", "2", "--cutoff", "4", "--scheme", "as-printed"]);
    assert_eq!(code(&out), 1);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["overall_pass"], false);
}

#[test]
fn verify_all_passes() {
    let out = osp32(&["verify", "--suite", "all"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["overall_pass"], true);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert!(checks.iter().all(|c| c["residual"].as_f64().unwrap() >= 0.0));
}

#[test]
fn verify_defining_has_67_checks() {
    let out = osp32(&["verify", "--suite", "defining"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["checks"].as_array().unwrap().len(), 67);
}

#[test]
fn verify_triple_p4() {
    let out = osp32(&["verify", "--suite", "triple", "--p", "4", "--cutoff", "10"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["max_residual"].as_f64().unwrap() <= 1e-9);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["verify", "--suite", "wqs", "--p", "2", "--cutoff", "5"];
    let a = osp32(&args);
    let b = osp32(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let e1 = osp32(&["export", "H", "--p", "2", "--cutoff", "3"]);
    let e2 = osp32(&["export", "H", "--p", "2", "--cutoff", "3"]);
    assert_eq!(e1.stdout, e2.stdout);
}

#[test]
fn export_h1_diagonal() {
    let json = export("h1", 2, 1);
    assert_eq!(json["schema"], 1);
    let basis = json["basis"].as_array().unwrap();
    let mut seen = Vec::new();
    for e in json["entries"].as_array().unwrap() {
        assert_eq!(e[0], e[1]);
        let mu11 = basis[e[0].as_u64().unwrap() as usize][2].as_f64().unwrap();
        let v = e[2].as_f64().unwrap();
        assert_eq!(v, mu11 - 1.0);
        seen.push(v);
    }
    assert!(seen.contains(&-1.0));
    // zero diagonal entries are not stored
    assert!(!seen.contains(&0.0));
    assert!(basis.iter().any(|l| l[2] == 1));
}

#[test]
fn export_m3_diagonal() {
    for p in 1..=3 {
        let json = export("M3", p, 3);
        let m = dense(&json);
        for (i, row) in m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i != j {
                    assert!(v.0.abs() < 1e-12 && v.1.abs() < 1e-12, "M3[{i}][{j}] = {v:?}");
                }
            }
        }
    }
}

#[test]
fn export_c2_minus_is_transpose_of_c2_plus() {
    let plus = export("c2+", 2, 4);
    let minus = export("c2-", 2, 4);
    let (mp, mm) = (dense(&plus), dense(&minus));
    let basis = plus["basis"].as_array().unwrap();
    let interior: Vec<usize> = (0..basis.len())
        .filter(|&i| basis[i][1].as_i64().unwrap() + basis[i][0].as_i64().unwrap() - basis[i][2].as_i64().unwrap() < 4)
        .collect();
    assert_eq!(interior.len(), 3 + 4 * 3);
    for &i in &interior {
        for &j in &interior {
            let (a, b) = (mm[i][j], mp[j][i]);
            assert!((a.0 - b.0).abs() < 1e-10 && (a.1 + b.1).abs() < 1e-10, "({i},{j})");
        }
    }
    let level = |i: usize| basis[i][1].as_i64().unwrap() + basis[i][0].as_i64().unwrap() - basis[i][2].as_i64().unwrap();
    let boundary: Vec<usize> = plus["boundary_rows"].as_array().unwrap().iter().map(|r| r.as_u64().unwrap() as usize).collect();
    let top: Vec<usize> = (0..basis.len()).filter(|&i| level(i) == 4).collect();
    assert_eq!(boundary, top);
}

#[test]
fn spectrum_outputs() {
    let out = osp32(&["spectrum", "--p", "1", "--cutoff", "6", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,energy,multiplicity"));
    for (n, line) in lines.enumerate() {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[0].parse::<usize>().unwrap(), n);
        assert!((cols[1].parse::<f64>().unwrap() - (n as f64 + 0.5)).abs() < 1e-10);
        assert_eq!(cols[2], "2");
    }

    let out = osp32(&["spectrum", "--p", "4", "--cutoff", "3", "--format", "csv"]);
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], ["0", "2", "5"]);
    assert_eq!(rows[1][2], "8");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c1.json");
    let out = osp32(&["export", "c1+", "--p", "1", "--cutoff", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let json: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["cutoff"], 2);
}
