use std::path::PathBuf;
use std::process::Command;

fn pinch() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pinch"))
}

fn config(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/configs").join(name)
}

#[test]
fn run_writes_header_and_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rows.csv");
    let status = pinch()
        .args(["run", "--config"])
        .arg(config("power_sweep.json"))
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), pinching::experiment::SWEEP_CSV_HEADER.join(","));
    assert_eq!(lines.count(), 14);
}

#[test]
fn run_is_byte_identical_across_invocations() {
    let dir = tempfile::tempdir().unwrap();
    let outputs: Vec<Vec<u8>> = (0..2)
        .map(|i| {
            let out = dir.path().join(format!("{i}.csv"));
            let status = pinch()
                .args(["run", "--config"])
                .arg(config("distance_sweep.json"))
                .arg("--out")
                .arg(&out)
                .status()
                .unwrap();
            assert!(status.success());
            std::fs::read(out).unwrap()
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn trace_writes_one_column_triple_per_antenna() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("trace.csv");
    let output = pinch()
        .args(["trace", "--config"])
        .arg(config("step_trace.json"))
        .args(["--step", "2", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(String::from_utf8_lossy(&output.stdout).contains("PA 5"));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(
        text.lines().next().unwrap(),
        "x_m,phase_diff_exact_1,phase_diff_linear_1,gain_1,phase_diff_exact_2,phase_diff_linear_2,gain_2,total_gain"
    );
}

fn error_line(output: &std::process::Output) -> serde_json::Value {
    assert!(!output.status.success());
    let stderr = String::from_utf8_lossy(&output.stderr);
    let line = stderr.lines().find_map(|l| l.strip_prefix("error: ")).expect("error line");
    serde_json::from_str(line).unwrap()
}

#[test]
fn missing_config_reports_io_error() {
    let output = pinch().args(["run", "--config", "/nonexistent.json", "--out", "x.csv"]).output().unwrap();
    assert_eq!(error_line(&output)["kind"], "io");
}

#[test]
fn unknown_field_reports_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let mut value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(config("power_sweep.json")).unwrap()).unwrap();
    value["scenario"]["pa_cnt"] = 4.into();
    std::fs::write(&path, value.to_string()).unwrap();
    let output = pinch().args(["run", "--config"]).arg(&path).args(["--out", "x.csv"]).output().unwrap();
    let err = error_line(&output);
    assert_eq!(err["kind"], "config");
    assert!(err["message"].as_str().unwrap().contains("pa_cnt"));
}

#[test]
fn out_of_range_step_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let output = pinch()
        .args(["trace", "--config"])
        .arg(config("step_trace.json"))
        .args(["--step", "9", "--out"])
        .arg(dir.path().join("t.csv"))
        .output()
        .unwrap();
    let err = error_line(&output);
    assert_eq!(err["kind"], "config");
    assert!(err["message"].as_str().unwrap().contains("step"));
}

#[test]
fn run_falls_back_to_config_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(config("antenna_count_sweep.json")).unwrap();
    let path = dir.path().join("cfg.json");
    std::fs::write(&path, text).unwrap();
    let status = pinch().current_dir(dir.path()).args(["run", "--config"]).arg(&path).status().unwrap();
    assert!(status.success());
    assert!(dir.path().join("antenna_count_sweep.csv").exists());
}
