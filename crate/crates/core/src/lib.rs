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

//! Quantum lattice Boltzmann solver for the 1D advection-diffusion equation.
//!
//! The crate is organized as a stack of small modules:
//!
//! * [`sim`] — full state-vector simulator with the basic one/two/three-qubit
//!   gate set.
//! * [`circuit`] — the kernel IR: building, composing and running subcircuits,
//!   dense-unitary lowering for tests, and OpenQASM 2 subset interchange.
//! * [`gates`] — decompositions of multi-controlled operations (CCPHASE,
//!   controlled subspace phases, MCX cascades) and the cyclic shift
//!   subcircuits built from them.
//! * [`stateprep`] — amplitude encoding of real non-negative vectors via
//!   multiplexed RY rotations lowered to {RY, CX}.
//! * [`solver`] — the D1Q2 lattice Boltzmann pipeline: collision angles,
//!   the four subcircuits, hybrid time stepping and amplitude renormalization.
//! * [`reference`] — classical lattice Boltzmann oracle, circular-statistics
//!   checks of trajectories, and a dense linear-combination-of-unitaries helper.
//!
//! The solver advances a concentration field one step at a time: each step
//! encodes the normalized field, runs the collision / propagation /
//! macroscopic subcircuits on a fresh register, and reads the new field back
//! off the post-selected amplitudes.

pub mod circuit;
pub mod error;
pub mod gates;
pub mod reference;
pub mod sim;
pub mod solver;
pub mod stateprep;

pub use circuit::{compose, emit_qasm, parse_qasm, Kernel};
pub use error::{Error, Result};
pub use sim::{Gate, GateInstruction, StateVector};
