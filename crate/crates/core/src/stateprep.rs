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

//! Amplitude encoding of real non-negative unit vectors.
//!
//! The target vector is split recursively into halves; each split gives a
//! rotation angle with cos(theta/2) equal to the norm of the left half over
//! the norm of the parent. Level k of the resulting [`AngleTree`] drives a
//! multiplexed RY on qubit n-1-k, controlled by the k more significant
//! qubits, which is lowered to plain {RY, CX} with the Gray-code walk.
//! Restricting to non-negative targets keeps the whole construction RY-only.

use crate::circuit::Kernel;
use crate::error::{Error, Result};
use crate::sim::GateInstruction;

/// Per-level multiplexed-rotation angles: level k holds 2^k angles for the
/// rotation on qubit n-1-k.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleTree {
    levels: Vec<Vec<f64>>,
}

impl AngleTree {
    pub fn num_qubits(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Vec<f64>] {
        &self.levels
    }
}

fn validate_target(target: &[f64]) -> Result<usize> {
    let len = target.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    for (index, &value) in target.iter().enumerate() {
        if value < 0.0 {
            return Err(Error::NegativeTargetEntry { index, value });
        }
    }
    let norm = target.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized(norm));
    }
    Ok(len.trailing_zeros() as usize)
}

/// Rotation angles for a real non-negative unit vector of length 2^n.
///
/// Zero-norm subtrees yield angle 0, so sparse targets cost no rotations.
pub fn rotation_angles(target: &[f64]) -> Result<AngleTree> {
    let n = validate_target(target)?;

    // Subtree norms, bottom-up: norms[k] has 2^k entries.
    let mut norms: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    norms.push(target.to_vec());
    for _ in 0..n {
        let prev = norms.last().expect("just pushed");
        let next: Vec<f64> = prev.chunks(2).map(|pair| pair[0].hypot(pair[1])).collect();
        norms.push(next);
    }
    norms.reverse(); // norms[k] now indexed by level, norms[0] = [1.0]

    let mut levels = Vec::with_capacity(n);
    for k in 0..n {
        let children = &norms[k + 1];
        let angles: Vec<f64> = children
            .chunks(2)
            .map(|pair| 2.0 * pair[1].atan2(pair[0]))
            .collect();
        levels.push(angles);
    }
    Ok(AngleTree { levels })
}

/// Circuit preparing `target` from |0...0>, lowered to {RY, CX}.
pub fn encode_amplitudes(target: &[f64]) -> Result<Kernel> {
    let tree = rotation_angles(target)?;
    let n = tree.num_qubits();

    let mut instructions = Vec::new();
    for (k, angles) in tree.levels().iter().enumerate() {
        // An all-zero level is the identity; skip it entirely.
        if angles.iter().all(|&a| a == 0.0) {
            continue;
        }
        let target_qubit = n - 1 - k;
        if k == 0 {
            instructions.push(GateInstruction::ry(angles[0], target_qubit));
        } else {
            lower_multiplexed_ry(&mut instructions, angles, target_qubit, n, k);
        }
    }
    Kernel::new("encode", n, instructions)
}

/// Gray-code lowering of a multiplexed RY with 2^k angles.
///
/// Control pattern bit i lives on qubit n-k+i, so bit k-1 (the most
/// significant) is qubit n-1. The rotated angles are the Hadamard-type
/// transform of the pattern angles against the Gray sequence; each CX flips
/// the accumulated sign for exactly the patterns with that control set,
/// and a full walk returns every control to parity zero.
fn lower_multiplexed_ry(
    instructions: &mut Vec<GateInstruction>,
    angles: &[f64],
    target: usize,
    n: usize,
    k: usize,
) {
    let m = 1usize << k;
    for s in 0..m {
        let gray = s ^ (s >> 1);
        let mut acc = 0.0;
        for (j, &theta) in angles.iter().enumerate() {
            if (j & gray).count_ones() % 2 == 1 {
                acc -= theta;
            } else {
                acc += theta;
            }
        }
        instructions.push(GateInstruction::ry(acc / m as f64, target));

        let control_bit = if s == m - 1 {
            k - 1
        } else {
            (s + 1).trailing_zeros() as usize
        };
        instructions.push(GateInstruction::cx(n - k + control_bit, target));
    }
}
