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

//! Command-line front end: run the quantum solver, validate it against the
//! classical oracle, and export encoding circuits as OpenQASM.

mod initial;
mod plot;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qlbm_core::emit_qasm;
use qlbm_core::reference::classical_lbm_step;
use qlbm_core::solver::{
    collision_angles, run_simulation, step_with_angles, ConcentrationField, LatticeConfig,
};
use qlbm_core::stateprep::encode_amplitudes;

#[derive(Parser)]
#[command(
    name = "qlbm",
    version,
    about = "D1Q2 quantum lattice Boltzmann solver for 1D advection-diffusion",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the quantum solver and write the trajectory as CSV.
    Run(RunArgs),
    /// Run quantum and classical solvers side by side and compare per step.
    Validate(ValidateArgs),
    /// Write the state-preparation circuit for the initial field as OpenQASM.
    EmitQasm(EmitQasmArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Number of lattice sites (power of two, at least 16).
    #[arg(long, default_value_t = 32)]
    sites: usize,

    /// Number of time steps.
    #[arg(long, default_value_t = 40)]
    steps: usize,

    /// Advection velocity in lattice units per step (|velocity| <= cs2).
    #[arg(long, default_value_t = 0.0)]
    velocity: f64,

    /// Sound speed squared in lattice units.
    #[arg(long, default_value_t = 1.0 / 3.0)]
    cs2: f64,

    /// Initial field: `triangle`, `gaussian:x0,sigma,amp`, or `file:<path>`.
    #[arg(long, default_value = "triangle")]
    initial: String,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Output CSV path.
    #[arg(long, default_value = "trajectory.csv")]
    out: PathBuf,

    /// Optional SVG line plot of selected steps.
    #[arg(long)]
    svg: Option<PathBuf>,

    /// Optional directory for per-step encoding circuits (OpenQASM).
    #[arg(long)]
    emit_qasm_dir: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Largest tolerated |quantum - classical| over the whole trajectory.
    #[arg(long, default_value_t = 1e-12)]
    tolerance: f64,

    /// Fault-injection hook: perturb the first collision angle by this many
    /// radians in the quantum path only.
    #[arg(long, default_value_t = 0.0, hide = true)]
    perturb: f64,
}

#[derive(Args)]
struct EmitQasmArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Directory receiving `encoding.qasm`.
    #[arg(long, default_value = ".")]
    emit_qasm_dir: PathBuf,
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

enum CliError {
    /// Bad flags or precondition violations: exit code 2.
    Usage(String),
    /// I/O or solver failures at runtime: exit code 1.
    Runtime(String),
}

fn dispatch(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Validate(args) => cmd_validate(args),
        Command::EmitQasm(args) => cmd_emit_qasm(args),
    }
}

/// Validate the shared flags and build the solver configuration.
fn configure(common: &CommonArgs) -> Result<(LatticeConfig, ConcentrationField), CliError> {
    if !common.sites.is_power_of_two() || common.sites < 16 {
        return Err(CliError::Usage(format!(
            "sites must be a power of two >= 16, got {}",
            common.sites
        )));
    }
    let cfg = LatticeConfig::new(common.sites, common.velocity, common.cs2)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let values = initial::build(&common.initial, common.sites)?;
    let field = ConcentrationField::new(values).map_err(|e| CliError::Usage(e.to_string()))?;
    if field.norm() <= 0.0 {
        return Err(CliError::Usage(
            "initial field must not be all zero".to_string(),
        ));
    }
    Ok((cfg, field))
}

fn cmd_run(args: RunArgs) -> Result<ExitCode, CliError> {
    let (cfg, initial_field) = configure(&args.common)?;

    let trajectory = run_simulation(&initial_field, args.common.steps, &cfg)
        .map_err(|e| CliError::Runtime(e.to_string()))?;

    if let Some(dir) = &args.emit_qasm_dir {
        write_step_encodings(dir, &trajectory)?;
    }

    let csv = render_csv(&trajectory);
    std::fs::write(&args.out, csv)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", args.out.display())))?;

    if let Some(svg_path) = &args.svg {
        let svg = plot::render(&trajectory);
        std::fs::write(svg_path, svg)
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", svg_path.display())))?;
    }

    println!(
        "wrote {} steps x {} sites to {}",
        trajectory.len(),
        cfg.sites(),
        args.out.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_validate(args: ValidateArgs) -> Result<ExitCode, CliError> {
    let (cfg, initial_field) = configure(&args.common)?;
    if args.tolerance <= 0.0 || args.tolerance.is_nan() {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {}",
            args.tolerance
        )));
    }

    // The quantum path may be deliberately perturbed to exercise the
    // validator; the classical oracle never is.
    let mut angles =
        collision_angles(cfg.velocity(), cfg.cs2()).map_err(|e| CliError::Usage(e.to_string()))?;
    angles.lambda1 += args.perturb;
    angles.d1 = angles.lambda1.cos();

    let mut quantum = vec![initial_field.clone()];
    for _ in 0..args.common.steps {
        let next = step_with_angles(quantum.last().expect("seeded"), &cfg, &angles)
            .map_err(|e| CliError::Runtime(e.to_string()))?;
        quantum.push(next);
    }

    let mut classical = vec![initial_field.values().to_vec()];
    for _ in 0..args.common.steps {
        let next = classical_lbm_step(classical.last().expect("seeded"), cfg.velocity(), cfg.cs2())
            .map_err(|e| CliError::Runtime(e.to_string()))?;
        classical.push(next);
    }

    let mut global_max = 0.0f64;
    for (t, (q, c)) in quantum.iter().zip(&classical).enumerate() {
        let step_max = q
            .values()
            .iter()
            .zip(c)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        global_max = global_max.max(step_max);
        println!("step {t}: max |quantum - classical| = {step_max:.3e}");
    }
    println!(
        "global max difference = {global_max:.3e} (tolerance {:.1e})",
        args.tolerance
    );

    if global_max <= args.tolerance {
        println!("PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAIL");
        Ok(ExitCode::from(1))
    }
}

fn cmd_emit_qasm(args: EmitQasmArgs) -> Result<ExitCode, CliError> {
    let (cfg, initial_field) = configure(&args.common)?;

    let normalized: Vec<f64> = initial_field
        .values()
        .iter()
        .map(|v| v / initial_field.norm())
        .collect();
    let kernel = encode_amplitudes(&normalized).map_err(|e| CliError::Runtime(e.to_string()))?;
    let text = emit_qasm(&kernel).map_err(|e| CliError::Runtime(e.to_string()))?;

    let path = args.emit_qasm_dir.join("encoding.qasm");
    std::fs::write(&path, text)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))?;
    println!(
        "wrote encoding circuit for {} sites to {}",
        cfg.sites(),
        path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn write_step_encodings(dir: &PathBuf, trajectory: &[ConcentrationField]) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", dir.display())))?;
    // The field fed into step t is trajectory[t]; the last entry is never
    // re-encoded.
    for (t, field) in trajectory[..trajectory.len() - 1].iter().enumerate() {
        let normalized: Vec<f64> = field
            .values()
            .iter()
            .map(|v| v.max(0.0) / field.norm())
            .collect();
        let kernel =
            encode_amplitudes(&normalized).map_err(|e| CliError::Runtime(e.to_string()))?;
        let text = emit_qasm(&kernel).map_err(|e| CliError::Runtime(e.to_string()))?;
        let path = dir.join(format!("encoding_step_{t:04}.qasm"));
        std::fs::write(&path, text)
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

/// Stable schema: `step,x,concentration`, step-major, x ascending, values
/// with 17 significant digits.
fn render_csv(trajectory: &[ConcentrationField]) -> String {
    let mut out = String::from("step,x,concentration\n");
    for (t, field) in trajectory.iter().enumerate() {
        for (x, value) in field.values().iter().enumerate() {
            out.push_str(&format!("{t},{x},{value:.16e}\n"));
        }
    }
    out
}
