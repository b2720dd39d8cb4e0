// Copyright 2026 The qlbm Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! End-to-end tests of the `qlbm` binary.

use std::path::Path;
use std::process::{Command, Output};

fn qlbm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlbm"))
        .args(args)
        .output()
        .expect("binary should launch")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).to_string()
}

#[test]
fn run_writes_the_full_trajectory_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let output = qlbm(&[
        "run",
        "--sites",
        "32",
        "--steps",
        "40",
        "--velocity",
        "0.1",
        "--cs2",
        "1.0",
        "--initial",
        "triangle",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{}", stderr_of(&output));

    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("step,x,concentration"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 41 * 32);
    assert!(rows[0].starts_with("0,0,"));
    assert!(rows.last().unwrap().starts_with("40,31,"));

    // 17 significant digits, step-major and x-ascending.
    assert_eq!(rows[5], "0,5,5.0000000000000000e-1");
    assert_eq!(rows[6], "0,6,1.0000000000000000e0");
    assert_eq!(rows[32], "1,0,0.0000000000000000e0");
}

#[test]
fn run_rejects_non_power_of_two_sites() {
    let output = qlbm(&["run", "--sites", "20", "--out", "/dev/null"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("power of two"));
}

#[test]
fn run_rejects_inadmissible_velocity() {
    let output = qlbm(&[
        "run",
        "--velocity",
        "0.9",
        "--cs2",
        "0.3333",
        "--out",
        "/dev/null",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn zero_steps_yields_only_the_initial_field() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let output = qlbm(&["run", "--steps", "0", "--out", out.to_str().unwrap()]);
    assert!(output.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 1 + 32);
}

#[test]
fn identical_flags_produce_byte_identical_csv() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for out in [&a, &b] {
        let output = qlbm(&[
            "run",
            "--steps",
            "10",
            "--velocity",
            "0.05",
            "--cs2",
            "1.0",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(output.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn run_renders_an_svg_plot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let svg = dir.path().join("t.svg");
    let output = qlbm(&[
        "run",
        "--steps",
        "8",
        "--out",
        out.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg "));
    assert!(text.contains("<polyline"));
    assert!(text.trim_end().ends_with("</svg>"));
}

#[test]
fn validate_passes_on_the_paper_setup() {
    let output = qlbm(&["validate", "--sites", "32", "--steps", "40"]);
    assert!(output.status.success(), "{}", stderr_of(&output));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("step 40:"));
    assert!(stdout.trim_end().ends_with("PASS"));
}

#[test]
fn validate_fails_when_an_angle_is_perturbed() {
    let output = qlbm(&["validate", "--steps", "5", "--perturb", "0.05"]);
    assert_eq!(output.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.trim_end().ends_with("FAIL"));
}

#[test]
fn validate_rejects_out_of_range_velocity() {
    let output = qlbm(&["validate", "--velocity", "2.0", "--cs2", "1.0"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn emit_qasm_writes_a_circuit_that_reproduces_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let output = qlbm(&[
        "emit-qasm",
        "--sites",
        "32",
        "--emit-qasm-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{}", stderr_of(&output));
    let text = std::fs::read_to_string(dir.path().join("encoding.qasm")).unwrap();
    assert!(text.starts_with("OPENQASM 2.0;"));
    assert!(text.contains("qreg q[5];"));
    assert!(text.contains("ry("));

    // Round trip: the parsed file must prepare the normalized triangle.
    let kernel = qlbm_core::parse_qasm(&text).unwrap();
    let mut state = qlbm_core::StateVector::new(5).unwrap();
    kernel.run(&mut state).unwrap();
    let mut target = vec![0.0f64; 32];
    target[5] = 0.5;
    target[6] = 1.0;
    target[7] = 0.5;
    let norm = target.iter().map(|v| v * v).sum::<f64>().sqrt();
    for (amp, want) in state.amplitudes().iter().zip(&target) {
        assert!((amp.re - want / norm).abs() <= 1e-12 && amp.im.abs() <= 1e-15);
    }
}

#[test]
fn emit_qasm_fails_on_unwritable_directory() {
    let output = qlbm(&["emit-qasm", "--emit-qasm-dir", "/nonexistent/nowhere"]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn gaussian_and_file_initial_fields_are_supported() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let output = qlbm(&[
        "run",
        "--sites",
        "16",
        "--steps",
        "2",
        "--initial",
        "gaussian:8,1.5,1.0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{}", stderr_of(&output));

    let field = dir.path().join("field.txt");
    let mut lines = String::new();
    for x in 0..16 {
        lines.push_str(&format!("{}\n", if x == 8 { 1.0 } else { 0.0 }));
    }
    std::fs::write(&field, lines).unwrap();
    let output = qlbm(&[
        "run",
        "--sites",
        "16",
        "--steps",
        "2",
        "--initial",
        &format!("file:{}", field.display()),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{}", stderr_of(&output));

    let output = qlbm(&[
        "run",
        "--sites",
        "16",
        "--initial",
        "nonsense",
        "--out",
        "/dev/null",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn run_can_dump_per_step_encodings() {
    let dir = tempfile::tempdir().unwrap();
    let qasm_dir = dir.path().join("qasm");
    let out = dir.path().join("t.csv");
    let output = qlbm(&[
        "run",
        "--sites",
        "16",
        "--steps",
        "3",
        "--out",
        out.to_str().unwrap(),
        "--emit-qasm-dir",
        qasm_dir.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "{}", stderr_of(&output));
    for t in 0..3 {
        assert!(Path::new(&qasm_dir.join(format!("encoding_step_{t:04}.qasm"))).exists());
    }
    assert!(!Path::new(&qasm_dir.join("encoding_step_0003.qasm")).exists());
}
