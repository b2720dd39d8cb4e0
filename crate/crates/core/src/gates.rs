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

//! Custom gates: decompositions of multi-qubit controlled operations into the
//! basic gate set, and the cyclic shift subcircuits built from them.
//!
//! Every constructor returns a [`Kernel`] whose width is `max(index) + 1`;
//! embed it into a wider register with [`Kernel::embed`] when composing.

use crate::circuit::Kernel;
use crate::error::{Error, Result};
use crate::sim::GateInstruction;

fn ensure_distinct(indices: &[usize]) -> Result<()> {
    for (i, &q) in indices.iter().enumerate() {
        if indices[..i].contains(&q) {
            return Err(Error::DuplicateOperand(q));
        }
    }
    Ok(())
}

fn width(indices: &[usize]) -> usize {
    indices.iter().copied().max().map_or(1, |m| m + 1)
}

/// Doubly controlled phase gate: e^{i lambda} on basis states with
/// `c1 = c2 = target = 1`, identity elsewhere.
///
/// Five-gate decomposition into {CPhase, CX} with half angles:
/// CPhase(c2,t,l/2) CX(c1,c2) CPhase(c2,t,-l/2) CX(c1,c2) CPhase(c1,t,l/2).
pub fn ccphase(c1: usize, c2: usize, target: usize, lambda: f64) -> Result<Kernel> {
    ensure_distinct(&[c1, c2, target])?;
    let instructions = ccphase_instructions(c1, c2, target, lambda);
    Kernel::new("ccphase", width(&[c1, c2, target]), instructions)
}

fn ccphase_instructions(c1: usize, c2: usize, target: usize, lambda: f64) -> Vec<GateInstruction> {
    vec![
        GateInstruction::cphase(lambda / 2.0, c2, target),
        GateInstruction::cx(c1, c2),
        GateInstruction::cphase(-lambda / 2.0, c2, target),
        GateInstruction::cx(c1, c2),
        GateInstruction::cphase(lambda / 2.0, c1, target),
    ]
}

/// Controlled global phase on the target line: multiplies BOTH target values
/// by e^{i lambda} when `c1 = c2 = 1`. The phase-X-phase-X sandwich lifted to
/// two controls: CCPHASE(l) Toffoli CCPHASE(l) Toffoli.
///
/// Since the phase is independent of the target value, the operator acts as a
/// controlled scalar on any register containing the target qubit.
pub fn cc_subspace_phase(c1: usize, c2: usize, target: usize, lambda: f64) -> Result<Kernel> {
    ensure_distinct(&[c1, c2, target])?;
    let instructions = cc_subspace_phase_instructions(c1, c2, target, lambda);
    Kernel::new("cc_subspace_phase", width(&[c1, c2, target]), instructions)
}

pub(crate) fn cc_subspace_phase_instructions(
    c1: usize,
    c2: usize,
    target: usize,
    lambda: f64,
) -> Vec<GateInstruction> {
    let mut instructions = ccphase_instructions(c1, c2, target, lambda);
    instructions.push(GateInstruction::toffoli(c1, c2, target));
    instructions.extend(ccphase_instructions(c1, c2, target, lambda));
    instructions.push(GateInstruction::toffoli(c1, c2, target));
    instructions
}

/// Multi-controlled X via a V-shaped Toffoli cascade with uncomputation.
///
/// With k controls and at least k-1 ancillas, the AND of all controls is
/// accumulated into the last used ancilla and a single CX drives the target;
/// with exactly k-2 ancillas the final Toffoli takes the last control
/// directly. Either way the ancillas are returned to their input values, and
/// on the ancillas-|0> subspace the kernel equals the k-controlled X.
pub fn mcx(controls: &[usize], target: usize, ancillas: &[usize]) -> Result<Kernel> {
    let k = controls.len();
    if k == 0 {
        return Err(Error::ArityMismatch {
            gate: "MCX",
            expected: 1,
            got: 0,
        });
    }
    let mut all: Vec<usize> = controls.to_vec();
    all.push(target);
    all.extend_from_slice(ancillas);
    ensure_distinct(&all)?;
    let instructions = mcx_instructions(controls, target, ancillas)?;
    // Width covers every named qubit, including spare ancillas.
    Kernel::new(format!("mcx{k}"), width(&all), instructions)
}

pub(crate) fn mcx_instructions(
    controls: &[usize],
    target: usize,
    ancillas: &[usize],
) -> Result<Vec<GateInstruction>> {
    let k = controls.len();
    match k {
        0 => unreachable!("caller checks for empty controls"),
        1 => return Ok(vec![GateInstruction::cx(controls[0], target)]),
        2 => {
            return Ok(vec![GateInstruction::toffoli(
                controls[0],
                controls[1],
                target,
            )])
        }
        _ => {}
    }
    if ancillas.len() < k - 2 {
        return Err(Error::InsufficientAncillas {
            have: ancillas.len(),
            need: k - 2,
        });
    }

    // Cascade depth: k-1 compute Toffolis ending in a CX when ancillas allow,
    // otherwise k-2 compute Toffolis with a Toffoli off the last control.
    let full_cascade = ancillas.len() >= k - 1;
    let chained = if full_cascade { k } else { k - 1 };

    let mut compute = Vec::with_capacity(chained - 1);
    compute.push(GateInstruction::toffoli(
        controls[0],
        controls[1],
        ancillas[0],
    ));
    for i in 2..chained {
        compute.push(GateInstruction::toffoli(
            controls[i],
            ancillas[i - 2],
            ancillas[i - 1],
        ));
    }

    let centre = if full_cascade {
        GateInstruction::cx(ancillas[k - 2], target)
    } else {
        GateInstruction::toffoli(controls[k - 1], ancillas[k - 3], target)
    };

    let mut instructions = compute.clone();
    instructions.push(centre);
    instructions.extend(compute.into_iter().rev());
    Ok(instructions)
}

/// Controlled cyclic increment: on the `selector = 0` subspace maps
/// |x> -> |(x + 1) mod 2^n>, identity on `selector = 1`.
///
/// `position` is little-endian (index 0 is the least significant bit of x).
/// A descending MCX cascade flips each bit while the lower bits still hold
/// their pre-increment values; X conjugation on the selector realizes the
/// open control.
pub fn right_shift(position: &[usize], selector: usize, ancillas: &[usize]) -> Result<Kernel> {
    let all = validate_shift_operands(position, selector, ancillas)?;
    let mut instructions = vec![GateInstruction::x(selector)];
    for bit in (1..position.len()).rev() {
        let mut controls = vec![selector];
        controls.extend_from_slice(&position[..bit]);
        instructions.extend(mcx_instructions(&controls, position[bit], ancillas)?);
    }
    instructions.push(GateInstruction::cx(selector, position[0]));
    instructions.push(GateInstruction::x(selector));
    Kernel::new("right_shift", width(&all), instructions)
}

/// Controlled cyclic decrement: on the `selector = 1` subspace maps
/// |x> -> |(x - 1) mod 2^n>, identity on `selector = 0`.
///
/// The mirror image of [`right_shift`]: the cascade runs in ascending order
/// (each block is its own palindrome, so this is exactly the adjoint) and the
/// selector is used as a closed control.
pub fn left_shift(position: &[usize], selector: usize, ancillas: &[usize]) -> Result<Kernel> {
    let all = validate_shift_operands(position, selector, ancillas)?;
    let mut instructions = vec![GateInstruction::cx(selector, position[0])];
    for bit in 1..position.len() {
        let mut controls = vec![selector];
        controls.extend_from_slice(&position[..bit]);
        instructions.extend(mcx_instructions(&controls, position[bit], ancillas)?);
    }
    Kernel::new("left_shift", width(&all), instructions)
}

fn validate_shift_operands(
    position: &[usize],
    selector: usize,
    ancillas: &[usize],
) -> Result<Vec<usize>> {
    if position.is_empty() {
        return Err(Error::EmptyRegister);
    }
    let mut all: Vec<usize> = position.to_vec();
    all.push(selector);
    all.extend_from_slice(ancillas);
    ensure_distinct(&all)?;
    Ok(all)
}
