use std::path::PathBuf;
use std::process::{Command, Output};

fn becalc(args: &[&str], env: Option<(&str, &str)>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_becalc"));
    cmd.args(args).env_remove("BECALC_TOL");
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("becalc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const UMBRELLA3: &str = r#"{"num_vertices":4,"edges":[[0,1,1],[0,2,1],[0,3,1],[1,2,1.7320508],[2,3,1.7320508],[3,1,1.7320508]]}"#;

#[test]
fn k2_all_vertices() {
    let file = scratch("k2.txt", "2\n0 1 1.0\n");
    let out = becalc(&["curvature", file.to_str().unwrap(), "--all"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0: 2.0000000000\n1: 2.0000000000\n");
}

#[test]
fn umbrella_json_file_hub() {
    let file = scratch("g3.json", UMBRELLA3);
    let out = becalc(
        &["curvature", file.to_str().unwrap(), "--vertex", "0"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let k: f64 = text.trim().strip_prefix("0: ").unwrap().parse().unwrap();
    assert!((k - 0.8360).abs() < 1e-4, "{text}");
}

#[test]
fn malformed_file_names_line() {
    let file = scratch("bad.txt", "3\n0 1 1.0\n1 2 oops\n");
    let out = becalc(&["curvature", file.to_str().unwrap(), "--all"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
}

#[test]
fn input_errors_exit_two() {
    let missing = becalc(&["curvature", "/nonexistent/graph.txt", "--all"], None);
    assert_eq!(missing.status.code(), Some(2));
    let file = scratch("path.txt", "3\n0 1 1\n1 2 1\n");
    let range = becalc(
        &["curvature", file.to_str().unwrap(), "--vertex", "7"],
        None,
    );
    assert_eq!(range.status.code(), Some(2));
    let bad_tol = becalc(
        &["umbrella", "--n", "4", "--rho", "1"],
        Some(("BECALC_TOL", "eigen_tol=-1")),
    );
    assert_eq!(bad_tol.status.code(), Some(2));
    let usage = becalc(
        &["umbrella", "--n", "4", "--rho", "1", "--format", "xml"],
        None,
    );
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn sweep_cap_exits_three() {
    let out = becalc(
        &["umbrella", "--n", "6", "--rho", "0.7"],
        Some(("BECALC_TOL", "max_sweeps=1")),
    );
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    assert!(stderr(&out).contains("converge"));
}

#[test]
fn tolerance_override_accepted() {
    let out = becalc(
        &["umbrella", "--n", "6", "--rho", "1"],
        Some(("BECALC_TOL", "eigen_tol=1e-12,bisect_tol=1e-10")),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("curvature: 0.6666666667"));
}

#[test]
fn witness_text_and_json() {
    let file = scratch("path3.txt", "3\n0 1 1\n1 2 1\n");
    let path = file.to_str().unwrap();
    let text = becalc(&["curvature", path, "--vertex", "0", "--witness"], None);
    assert_eq!(
        stdout(&text),
        "0: 1.0000000000\n  witness: 0=0.0000000000 1=1.0000000000 2=2.0000000000\n"
    );
    let json = becalc(
        &[
            "curvature",
            path,
            "--vertex",
            "0",
            "--witness",
            "--format",
            "json",
        ],
        None,
    );
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let w = doc["results"][0]["witness"].as_array().unwrap();
    assert_eq!(w.len(), 3);
    assert_eq!(w[2][1].as_f64(), Some(2.0));
}

#[test]
fn json_reemits_byte_identically() {
    let file = scratch("g3b.json", UMBRELLA3);
    let runs = [
        becalc(
            &[
                "curvature",
                file.to_str().unwrap(),
                "--all",
                "--witness",
                "--format",
                "json",
            ],
            None,
        ),
        becalc(
            &["umbrella", "--n", "5", "--rho", "1.1", "--format", "json"],
            None,
        ),
        becalc(&["umbrella", "--table", "3,4,9", "--format", "json"], None),
        becalc(
            &[
                "umbrella",
                "--sweep",
                "--n",
                "3",
                "--rho-min",
                "0.1",
                "--rho-max",
                "1",
                "--steps",
                "4",
                "--format",
                "json",
            ],
            None,
        ),
    ];
    for out in runs {
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(format!("{}\n", becalc_cli::canonical_json(&value)), text);
    }
}

#[test]
fn csv_floats_round_trip() {
    let out = becalc(&["umbrella", "--table", "6", "--format", "csv"], None);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row.len(), 7);
    let k_plus: f64 = row[2].parse().unwrap();
    assert_eq!(format!("{k_plus:.16e}"), row[2]);
}

#[test]
fn table_text_matches_published_layout() {
    let out = becalc(&["umbrella", "--table", "3,4,5,6,7,8,9,10,20"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    let six: Vec<&str> = lines[4].split_whitespace().collect();
    assert_eq!(
        six,
        ["6", "0.8685", "0.6827", "1.0000", "0.6667", "1.1163", "0.6547"]
    );
}

#[test]
fn sweep_row_shape() {
    let out = becalc(
        &[
            "umbrella",
            "--sweep",
            "--n",
            "4",
            "--rho-min",
            "0.1",
            "--rho-max",
            "2.7",
            "--steps",
            "27",
            "--format",
            "csv",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 27);
    for row in rows {
        assert_eq!(row.split(',').count(), 3 + 4);
    }
    assert!(
        text.lines()
            .last()
            .unwrap()
            .starts_with("2.7000000000000002e0,")
            || text
                .lines()
                .last()
                .unwrap()
                .starts_with("2.7000000000000000e0,")
    );
}

#[test]
fn single_umbrella_outside_any_embedding() {
    let out = becalc(&["umbrella", "--n", "4", "--rho", "2.5"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("kind: none"));
}
