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

//! Circuit intermediate representation.
//!
//! A [`Kernel`] is a named, immutable, validated sequence of gate instructions
//! over a fixed register width. Kernels compose by concatenation and can be
//! lowered to a dense unitary for testing small circuits.

mod qasm;

pub use qasm::{emit_qasm, parse_qasm};

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sim::{GateInstruction, StateVector};

/// Widest register for which a dense unitary may be materialized.
pub const MAX_DENSE_QUBITS: usize = 10;

/// An immutable subcircuit: an ordered gate sequence over `num_qubits` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct Kernel {
    name: String,
    num_qubits: usize,
    instructions: Vec<GateInstruction>,
}

impl Kernel {
    /// Validate and freeze an instruction sequence. An empty sequence is the
    /// identity kernel. Errors pinpoint the first offending instruction.
    pub fn new(
        name: impl Into<String>,
        num_qubits: usize,
        instructions: Vec<GateInstruction>,
    ) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::EmptyRegister);
        }
        for (index, inst) in instructions.iter().enumerate() {
            inst.validate_for(num_qubits)
                .map_err(|e| Error::InvalidInstruction {
                    index,
                    source: Box::new(e),
                })?;
        }
        Ok(Self {
            name: name.into(),
            num_qubits,
            instructions,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn instructions(&self) -> &[GateInstruction] {
        &self.instructions
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }

    /// The same instruction sequence on a wider register.
    pub fn embed(&self, num_qubits: usize) -> Result<Kernel> {
        if num_qubits < self.num_qubits {
            return Err(Error::WidthMismatch(self.num_qubits, num_qubits));
        }
        Kernel::new(self.name.clone(), num_qubits, self.instructions.clone())
    }

    /// Apply every instruction in order, mutating `state` in place.
    pub fn run(&self, state: &mut StateVector) -> Result<()> {
        if state.num_qubits() != self.num_qubits {
            return Err(Error::WidthMismatch(self.num_qubits, state.num_qubits()));
        }
        for inst in &self.instructions {
            state.apply(inst)?;
        }
        Ok(())
    }

    /// Dense 2^n x 2^n matrix of the kernel, column b = kernel applied to |b>.
    pub fn unitary(&self) -> Result<Array2<Complex64>> {
        if self.num_qubits > MAX_DENSE_QUBITS {
            return Err(Error::KernelTooWide {
                got: self.num_qubits,
                max: MAX_DENSE_QUBITS,
            });
        }
        let dim = 1usize << self.num_qubits;
        let mut u = Array2::zeros((dim, dim));
        for col in 0..dim {
            let mut state = StateVector::basis(self.num_qubits, col)?;
            self.run(&mut state)?;
            for (row, amp) in state.amplitudes().iter().enumerate() {
                u[(row, col)] = *amp;
            }
        }
        Ok(u)
    }
}

/// Concatenate kernels of equal width, preserving order.
pub fn compose(parts: &[&Kernel]) -> Result<Kernel> {
    let first = parts.first().ok_or(Error::EmptyComposition)?;
    let num_qubits = first.num_qubits;
    let mut instructions = Vec::with_capacity(parts.iter().map(|k| k.len()).sum());
    let mut names = Vec::with_capacity(parts.len());
    for part in parts {
        if part.num_qubits != num_qubits {
            return Err(Error::WidthMismatch(num_qubits, part.num_qubits));
        }
        instructions.extend_from_slice(&part.instructions);
        names.push(part.name.as_str());
    }
    Kernel::new(names.join("+"), num_qubits, instructions)
}
