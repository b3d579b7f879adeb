//! End-to-end checks of the batch driver: exit codes, report schema,
//! byte-stable CSV output and the documented row contents.

use std::path::Path;
use std::process::Command;

fn r11() -> Command {
    Command::new(env!("CARGO_BIN_EXE_r11"))
}

fn write_job(dir: &Path, name: &str, body: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn verify_clifford_passes_and_reports_json() {
    let out = r11().args(["verify", "--suite", "clifford", "--seed", "42"]).output().unwrap();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["pass"], serde_json::Value::Bool(true));
    let checks = report["suites"][0]["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["pass"].as_bool().unwrap(), "failed check: {c}");
        assert!(c["max_error"].as_f64().unwrap() <= c["tolerance"].as_f64().unwrap());
    }
}

#[test]
fn verify_unknown_suite_exits_2() {
    let out = r11().args(["verify", "--suite", "nosuch"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn transform_disk_job_reproduces_powers() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("disk.csv");
    let job = write_job(
        dir.path(),
        "job.json",
        &format!(
            r#"{{
  "command": "cauchy-disk",
  "seed": 7,
  "params": {{
    "n": 1024,
    "boundary": {{"harmonics": [{{"k": 3, "re": 1.0, "im": 0.0}}]}},
    "points": [[0.1, 0.0], [0.2, 0.1], [0.0, 0.3], [-0.25, 0.15], [0.4, -0.2],
               [0.05, 0.05], [0.3, 0.3], [-0.1, -0.4], [0.5, 0.0], [0.0, -0.5]],
    "output": "{}"
  }}
}}"#,
            out_csv.display()
        ),
    );
    let out = r11().args(["transform", "--job"]).arg(&job).output().unwrap();
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&out_csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11); // header + 10 rows
    // each row's normalized value is a^3
    for (i, line) in lines[1..].iter().enumerate() {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f[0], i.to_string());
        let a = num_complex::Complex64::new(f[1].parse().unwrap(), f[2].parse().unwrap());
        let v = num_complex::Complex64::new(f[5].parse().unwrap(), f[6].parse().unwrap());
        let expect = a * a * a;
        assert!((v - expect).norm() < 1e-9, "row {i}: {v} vs {expect}");
        assert_eq!(f[8], "ok");
    }
}

#[test]
fn transform_outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let make = |name: &str| {
        let out_csv = dir.path().join(name);
        let job = write_job(
            dir.path(),
            &format!("{name}.json"),
            &format!(
                r#"{{
  "command": "cauchy-r11",
  "seed": 3,
  "params": {{
    "sigma": 0.0,
    "n_per_branch": 257,
    "t_max": 12.0,
    "boundary": {{"bump": {{"branch": 0, "center": 0.0, "width": 1.0}}}},
    "points": [[2.0, 0.1, "plus"], [0.3, 0.0, "minus"], [2.5, -0.4, "plus"]],
    "quadrature": {{"n": 256}},
    "output": "{}"
  }}
}}"#,
                out_csv.display()
            ),
        );
        let out = r11().args(["transform", "--job"]).arg(&job).output().unwrap();
        assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
        std::fs::read(&out_csv).unwrap()
    };
    let a = make("a.csv");
    let b = make("b.csv");
    assert_eq!(a, b, "reruns must be byte-identical");
    assert!(!a.is_empty());
}

#[test]
fn transform_r11_critical_points_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("bad.csv");
    // both points sit on the light-cone-critical locus |u^2| = 1
    let job = write_job(
        dir.path(),
        "bad.json",
        &format!(
            r#"{{
  "command": "cauchy-r11",
  "seed": 1,
  "params": {{
    "n_per_branch": 257,
    "boundary": {{"ones": true}},
    "points": [[1.0005, 0.0, "plus"], [1.0007, 0.0, "plus"]],
    "output": "{}"
  }}
}}"#,
            out_csv.display()
        ),
    );
    let out = r11().args(["transform", "--job"]).arg(&job).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let text = std::fs::read_to_string(&out_csv).unwrap();
    assert!(text.contains("error:pv-divergence"));
}

#[test]
fn empty_point_list_gives_header_only_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("empty.csv");
    let job = write_job(
        dir.path(),
        "empty.json",
        &format!(
            r#"{{"command": "cauchy-disk", "seed": 0,
                "params": {{"boundary": {{"ones": true}}, "points": [], "output": "{}"}}}}"#,
            out_csv.display()
        ),
    );
    let out = r11().args(["transform", "--job"]).arg(&job).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&out_csv).unwrap();
    assert_eq!(text.lines().count(), 1);
}

#[test]
fn geometry_dump_row_count_and_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("geo.csv");
    let job = write_job(
        dir.path(),
        "geo.json",
        &format!(
            r#"{{"command": "geometry-dump", "seed": 0,
                "params": {{"lambda": -0.5, "points_per_branch": 100, "output": "{}"}}}}"#,
            out_csv.display()
        ),
    );
    let out = r11().args(["dump", "--kind", "geometry", "--job"]).arg(&job).output().unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "branch,t,sheet,u1,u2");
    assert_eq!(lines.len(), 401); // header + 4 * 100
    // plus-sheet radius 0.5, minus-sheet radius 2
    for line in &lines[1..] {
        let f: Vec<&str> = line.split(',').collect();
        let u1: f64 = f[3].parse().unwrap();
        let u2: f64 = f[4].parse().unwrap();
        let sq = -u1 * u1 + u2 * u2;
        match f[2] {
            "plus" => assert!((sq + 0.25).abs() < 1e-12),
            "minus" => assert!((sq + 4.0).abs() < 1e-10),
            other => panic!("bad sheet {other}"),
        }
    }
}

#[test]
fn kernel_dump_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("kernel.csv");
    let job = write_job(
        dir.path(),
        "kernel.json",
        &format!(
            r#"{{"command": "kernel-dump", "seed": 0,
                "params": {{"u": [2.0, 0.0], "sheet": "plus", "sigma": 0.0,
                           "count": 50, "output": "{}"}}}}"#,
            out_csv.display()
        ),
    );
    let out = r11().args(["dump", "--kind", "kernel", "--job"]).arg(&job).output().unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_csv).unwrap();
    for line in text.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        if f[0] != "0" {
            continue;
        }
        let t: f64 = f[1].parse().unwrap();
        let p1: f64 = f[2].parse().unwrap();
        assert!(
            (p1 - 1.0 / (t.exp() + 2.0)).abs() < 1e-12,
            "p1 column must be 1/(e^t + 2)"
        );
    }
    // kind mismatch is a schema violation
    let out = r11().args(["dump", "--kind", "geometry", "--job"]).arg(&job).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn param_override_layer() {
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    let job = write_job(
        dir.path(),
        "job.json",
        &format!(
            r#"{{"command": "geometry-dump", "seed": 0,
                "params": {{"lambda": -0.5, "points_per_branch": 10, "output": "{}"}}}}"#,
            out_a.display()
        ),
    );
    let out = r11()
        .args(["dump", "--kind", "geometry", "--job"])
        .arg(&job)
        .args(["--param", &format!("output={}", out_b.display()), "--param", "points_per_branch=5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(!out_a.exists());
    let text = std::fs::read_to_string(&out_b).unwrap();
    assert_eq!(text.lines().count(), 21);
}

#[test]
fn taylor_job_emits_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("taylor.csv");
    let job = write_job(
        dir.path(),
        "taylor.json",
        &format!(
            r#"{{"command": "taylor", "seed": 0,
                "params": {{"mode": "classical", "a": [0.5, 0.0], "phi": 0.0,
                           "n_max": 25, "output": "{}"}}}}"#,
            out_csv.display()
        ),
    );
    let out = r11().args(["transform", "--job"]).arg(&job).output().unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_csv).unwrap();
    let last = text.lines().last().unwrap();
    let f: Vec<&str> = last.split(',').collect();
    let partial: f64 = f[3].parse().unwrap();
    assert!((partial - 0.75f64.sqrt() / 0.5).abs() < 1e-6);
}
