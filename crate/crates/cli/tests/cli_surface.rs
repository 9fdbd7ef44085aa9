//! Exit codes, printed values and artifact determinism of the binary.

use std::path::Path;
use std::process::Command;

use cli::RunConfig;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_i4mirror"))
}

#[test]
fn zeroth_section_coefficient_is_one()  {
    let out = binary().args(["bryan-leung", "--order", "0"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1");
}

#[test]
fn lowest_curve_count_prints_minus_nine() {
    let out = binary()
        .args(["j-coeffs", "--class", "0,2,0,1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "-9");
}

#[test]
fn usage_errors_exit_with_code_two() {
    let unknown = binary().arg("no-such-command").output().unwrap();
    assert_eq!(unknown.status.code(), Some(2));
    let bad_class = binary()
        .args(["j-coeffs", "--class", "1,2,3"])
        .output()
        .unwrap();
    assert_eq!(bad_class.status.code(), Some(2));
    let negative = binary()
        .args(["sections", "--degree", "-1"])
        .output()
        .unwrap();
    assert_eq!(negative.status.code(), Some(2));
}

#[test]
fn section_class_counts() {
    for (d, n) in [(0, 9), (1, 36)] {
        let out = binary()
            .args(["sections", "--degree", &d.to_string()])
            .output()
            .unwrap();
        assert!(out.status.success());
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.starts_with(&format!("{n} section classes")), "{text}");
    }
}

#[test]
fn artifacts_are_byte_identical_across_runs() {
    let base = std::env::temp_dir().join("i4mirror-determinism");
    let read = |dir: &Path, name: &str| std::fs::read(dir.join(name)).unwrap();
    let mut outputs = Vec::new();
    for run in ["a", "b"] {
        let dir = base.join(run);
        let status = binary()
            .args(["phi", "--max-ray", "6", "--svg"])
            .args(["--out", dir.to_str().unwrap()])
            .status()
            .unwrap();
        assert!(status.success());
        outputs.push((read(&dir, "phi.json"), read(&dir, "phi.svg")));
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn theta_evaluation_runs_at_a_sample_point() {
    let out = binary()
        .args(["elliptic", "theta", "--rho", "0.5+2i"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("|theta2|"));
    assert!(text.contains("|theta4|"));
}

#[test]
fn j_check_reports_agreement() {
    let out = binary().args(["elliptic", "j-check"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("agree"));
}

#[test]
fn config_file_parses_and_flags_override() {
    let text = "\
# sample run configuration
mirror_truncation = 30
i_grade = 4
theta_tol = 1e-20
emit_csv = true
";
    let config = RunConfig::from_str(text).unwrap();
    assert_eq!(config.mirror_truncation, 30);
    assert_eq!(config.i_grade, 4);
    assert!(config.emit_csv);
    assert!(config.emit_json);
    assert!(RunConfig::from_str("unknown_key = 1").is_err());
    assert!(RunConfig::from_str("mirror_truncation = 0").is_err());
    assert!(RunConfig::from_str("mirror_truncation").is_err());
}
