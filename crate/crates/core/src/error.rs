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

//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("register of {0} qubits exceeds the {max}-qubit limit", max = crate::sim::MAX_QUBITS)]
    RegisterTooLarge(usize),

    #[error("register must contain at least one qubit")]
    EmptyRegister,

    #[error("qubit index {index} out of range for a {num_qubits}-qubit register")]
    QubitOutOfRange { index: usize, num_qubits: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    BasisIndexOutOfRange { index: usize, dim: usize },

    #[error("gate {gate} takes {expected} qubit operand(s), got {got}")]
    ArityMismatch {
        gate: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("duplicate qubit operand {0}")]
    DuplicateOperand(usize),

    #[error("gate angle must be finite, got {0}")]
    NonFiniteAngle(f64),

    #[error("amplitude vector of length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("state norm {0} differs from 1 beyond tolerance")]
    NotNormalized(f64),

    #[error("instruction {index} is invalid: {source}")]
    InvalidInstruction {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("kernel width mismatch: {0} vs {1} qubits")]
    WidthMismatch(usize, usize),

    #[error("cannot compose an empty kernel sequence")]
    EmptyComposition,

    #[error("dense unitary supported up to {max} qubits, kernel has {got}")]
    KernelTooWide { got: usize, max: usize },

    #[error("gate {0} has no OpenQASM 2 spelling in the supported subset")]
    UnsupportedQasmGate(&'static str),

    #[error("QASM parse error at line {line}, column {col}: {message}")]
    QasmParse {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("state-preparation target entry {index} is negative ({value})")]
    NegativeTargetEntry { index: usize, value: f64 },

    #[error("{have} ancilla qubit(s) provided, at least {need} required")]
    InsufficientAncillas { have: usize, need: usize },

    #[error("velocity {velocity} out of range for cs2 = {cs2}: collision diagonal leaves [-1, 1]")]
    VelocityOutOfRange { velocity: f64, cs2: f64 },

    #[error("sound speed squared must be positive, got {0}")]
    InvalidSoundSpeed(f64),

    #[error("lattice size {0} must be a power of two >= 16")]
    InvalidLatticeSize(usize),

    #[error("concentration field of length {got} does not match the {expected}-site lattice")]
    FieldSizeMismatch { expected: usize, got: usize },

    #[error("concentration field has zero norm")]
    ZeroField,

    #[error("concentration {value} at site {site} is below the negative-amplitude guard")]
    NegativeConcentration { site: usize, value: f64 },

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("trajectory of {0} snapshot(s) is too short, need at least 3")]
    TrajectoryTooShort(usize),
}
