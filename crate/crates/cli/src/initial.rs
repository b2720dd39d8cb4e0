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

//! Built-in initial concentration fields.

use crate::CliError;

/// Parse an `--initial` spec into a concentration field of length `sites`.
///
/// Supported forms:
/// * `triangle` — C(5) = C(7) = 0.5, C(6) = 1.0;
/// * `gaussian:x0,sigma,amp` — amp * exp(-(x - x0)^2 / (2 sigma^2));
/// * `file:<path>` — one value per line, must match `sites`.
pub fn build(spec: &str, sites: usize) -> Result<Vec<f64>, CliError> {
    if spec == "triangle" {
        return triangle(sites);
    }
    if let Some(params) = spec.strip_prefix("gaussian:") {
        return gaussian(params, sites);
    }
    if let Some(path) = spec.strip_prefix("file:") {
        return from_file(path, sites);
    }
    Err(CliError::Usage(format!(
        "unknown initial field `{spec}`; expected `triangle`, `gaussian:x0,sigma,amp`, or `file:<path>`"
    )))
}

fn triangle(sites: usize) -> Result<Vec<f64>, CliError> {
    if sites < 8 {
        return Err(CliError::Usage(format!(
            "the triangle field needs at least 8 sites, got {sites}"
        )));
    }
    let mut values = vec![0.0; sites];
    values[5] = 0.5;
    values[6] = 1.0;
    values[7] = 0.5;
    Ok(values)
}

fn gaussian(params: &str, sites: usize) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = params.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "gaussian takes exactly x0,sigma,amp, got `{params}`"
        )));
    }
    let parse = |label: &str, text: &str| -> Result<f64, CliError> {
        text.trim()
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("gaussian {label} `{text}` is not a number")))
    };
    let x0 = parse("x0", parts[0])?;
    let sigma = parse("sigma", parts[1])?;
    let amp = parse("amp", parts[2])?;
    if sigma <= 0.0 || amp <= 0.0 {
        return Err(CliError::Usage(
            "gaussian sigma and amp must be positive".to_string(),
        ));
    }
    Ok((0..sites)
        .map(|x| {
            let d = x as f64 - x0;
            amp * (-d * d / (2.0 * sigma * sigma)).exp()
        })
        .collect())
}

fn from_file(path: &str, sites: usize) -> Result<Vec<f64>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read initial field {path}: {e}")))?;
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let value: f64 = line.parse().map_err(|_| {
            CliError::Usage(format!("{path}:{}: `{line}` is not a number", lineno + 1))
        })?;
        values.push(value);
    }
    if values.len() != sites {
        return Err(CliError::Usage(format!(
            "{path} holds {} value(s) but the lattice has {sites} sites",
            values.len()
        )));
    }
    Ok(values)
}
