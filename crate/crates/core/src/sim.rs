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

//! Full state-vector simulator.
//!
//! A [`StateVector`] holds the 2^n complex amplitudes of an n-qubit register and
//! applies gates in place. Qubit `i` is bit `i` of the basis index, so qubit 0 is
//! the least significant bit. Memory is 16 * 2^n bytes; the register size is
//! capped at [`MAX_QUBITS`].

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};

/// Hard cap on register size (16 GiB of amplitudes).
pub const MAX_QUBITS: usize = 30;

/// The supported gate set: one- and two-qubit gates plus the three-qubit Toffoli.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate {
    X,
    Y,
    Z,
    H,
    S,
    T,
    /// Phase shift diag(1, e^{i theta}).
    Phase(f64),
    Rx(f64),
    Ry(f64),
    Rz(f64),
    /// Controlled X; operands are (control, target).
    Cx,
    Cz,
    /// Controlled phase shift; symmetric in its two operands.
    CPhase(f64),
    Swap,
    /// Doubly controlled X; operands are (control, control, target).
    Toffoli,
}

impl Gate {
    pub fn arity(&self) -> usize {
        match self {
            Gate::X
            | Gate::Y
            | Gate::Z
            | Gate::H
            | Gate::S
            | Gate::T
            | Gate::Phase(_)
            | Gate::Rx(_)
            | Gate::Ry(_)
            | Gate::Rz(_) => 1,
            Gate::Cx | Gate::Cz | Gate::CPhase(_) | Gate::Swap => 2,
            Gate::Toffoli => 3,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::X => "X",
            Gate::Y => "Y",
            Gate::Z => "Z",
            Gate::H => "H",
            Gate::S => "S",
            Gate::T => "T",
            Gate::Phase(_) => "Phase",
            Gate::Rx(_) => "RX",
            Gate::Ry(_) => "RY",
            Gate::Rz(_) => "RZ",
            Gate::Cx => "CX",
            Gate::Cz => "CZ",
            Gate::CPhase(_) => "CPhase",
            Gate::Swap => "SWAP",
            Gate::Toffoli => "Toffoli",
        }
    }

    pub fn angle(&self) -> Option<f64> {
        match self {
            Gate::Phase(t) | Gate::Rx(t) | Gate::Ry(t) | Gate::Rz(t) | Gate::CPhase(t) => Some(*t),
            _ => None,
        }
    }
}

/// A gate bound to concrete qubit operands.
///
/// The convenience constructors fix the operand count per gate; operand
/// distinctness and range are checked when the instruction is applied to a
/// state or validated into a kernel.
#[derive(Clone, Debug, PartialEq)]
pub struct GateInstruction {
    gate: Gate,
    qubits: Vec<usize>,
}

impl GateInstruction {
    pub fn x(q: usize) -> Self {
        Self {
            gate: Gate::X,
            qubits: vec![q],
        }
    }

    pub fn y(q: usize) -> Self {
        Self {
            gate: Gate::Y,
            qubits: vec![q],
        }
    }

    pub fn z(q: usize) -> Self {
        Self {
            gate: Gate::Z,
            qubits: vec![q],
        }
    }

    pub fn h(q: usize) -> Self {
        Self {
            gate: Gate::H,
            qubits: vec![q],
        }
    }

    pub fn s(q: usize) -> Self {
        Self {
            gate: Gate::S,
            qubits: vec![q],
        }
    }

    pub fn t(q: usize) -> Self {
        Self {
            gate: Gate::T,
            qubits: vec![q],
        }
    }

    pub fn phase(theta: f64, q: usize) -> Self {
        Self {
            gate: Gate::Phase(theta),
            qubits: vec![q],
        }
    }

    pub fn rx(theta: f64, q: usize) -> Self {
        Self {
            gate: Gate::Rx(theta),
            qubits: vec![q],
        }
    }

    pub fn ry(theta: f64, q: usize) -> Self {
        Self {
            gate: Gate::Ry(theta),
            qubits: vec![q],
        }
    }

    pub fn rz(theta: f64, q: usize) -> Self {
        Self {
            gate: Gate::Rz(theta),
            qubits: vec![q],
        }
    }

    pub fn cx(control: usize, target: usize) -> Self {
        Self {
            gate: Gate::Cx,
            qubits: vec![control, target],
        }
    }

    pub fn cz(a: usize, b: usize) -> Self {
        Self {
            gate: Gate::Cz,
            qubits: vec![a, b],
        }
    }

    pub fn cphase(theta: f64, a: usize, b: usize) -> Self {
        Self {
            gate: Gate::CPhase(theta),
            qubits: vec![a, b],
        }
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Self {
            gate: Gate::Swap,
            qubits: vec![a, b],
        }
    }

    pub fn toffoli(c1: usize, c2: usize, target: usize) -> Self {
        Self {
            gate: Gate::Toffoli,
            qubits: vec![c1, c2, target],
        }
    }

    /// Build from a raw gate and operand slice, checking arity and distinctness.
    pub fn new(gate: Gate, qubits: &[usize]) -> Result<Self> {
        let inst = Self {
            gate,
            qubits: qubits.to_vec(),
        };
        inst.check_shape()?;
        Ok(inst)
    }

    pub fn gate(&self) -> Gate {
        self.gate
    }

    pub fn qubits(&self) -> &[usize] {
        &self.qubits
    }

    fn check_shape(&self) -> Result<()> {
        if self.qubits.len() != self.gate.arity() {
            return Err(Error::ArityMismatch {
                gate: self.gate.name(),
                expected: self.gate.arity(),
                got: self.qubits.len(),
            });
        }
        if let Some(theta) = self.gate.angle() {
            if !theta.is_finite() {
                return Err(Error::NonFiniteAngle(theta));
            }
        }
        for (i, &q) in self.qubits.iter().enumerate() {
            if self.qubits[..i].contains(&q) {
                return Err(Error::DuplicateOperand(q));
            }
        }
        Ok(())
    }

    /// Full validation against a register of `num_qubits` qubits.
    pub fn validate_for(&self, num_qubits: usize) -> Result<()> {
        self.check_shape()?;
        for &q in &self.qubits {
            if q >= num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits,
                });
            }
        }
        Ok(())
    }
}

/// Complex amplitudes of an n-qubit register, little-endian basis ordering.
#[derive(Clone, Debug)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Fresh register in |0...0>.
    pub fn new(num_qubits: usize) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::EmptyRegister);
        }
        if num_qubits > MAX_QUBITS {
            return Err(Error::RegisterTooLarge(num_qubits));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(Self { num_qubits, amps })
    }

    /// Adopt an explicit amplitude vector; the length must be a power of two
    /// and the norm must be 1 within 1e-10.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(len));
        }
        let num_qubits = len.trailing_zeros() as usize;
        if num_qubits > MAX_QUBITS {
            return Err(Error::RegisterTooLarge(num_qubits));
        }
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { num_qubits, amps })
    }

    /// Basis state |index> on `num_qubits` qubits.
    pub(crate) fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        let mut state = Self::new(num_qubits)?;
        if index >= state.dim() {
            return Err(Error::BasisIndexOutOfRange {
                index,
                dim: state.dim(),
            });
        }
        state.amps[0] = Complex64::new(0.0, 0.0);
        state.amps[index] = Complex64::new(1.0, 0.0);
        Ok(state)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, basis_index: usize) -> Result<Complex64> {
        self.amps
            .get(basis_index)
            .copied()
            .ok_or(Error::BasisIndexOutOfRange {
                index: basis_index,
                dim: self.dim(),
            })
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Amplitudes of all basis states consistent with the fixed qubit values,
    /// ordered by the little-endian index over the remaining free qubits.
    pub fn subspace_amplitudes(&self, fixed_bits: &[(usize, bool)]) -> Result<Vec<Complex64>> {
        let mut fixed_mask = 0usize;
        let mut value_mask = 0usize;
        for &(q, bit) in fixed_bits {
            if q >= self.num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits: self.num_qubits,
                });
            }
            let m = 1usize << q;
            if fixed_mask & m != 0 {
                return Err(Error::DuplicateOperand(q));
            }
            fixed_mask |= m;
            if bit {
                value_mask |= m;
            }
        }
        let free: Vec<usize> = (0..self.num_qubits)
            .filter(|q| fixed_mask & (1 << q) == 0)
            .collect();
        let mut out = Vec::with_capacity(1 << free.len());
        for j in 0..1usize << free.len() {
            let mut idx = value_mask;
            for (bit_pos, &q) in free.iter().enumerate() {
                if j & (1 << bit_pos) != 0 {
                    idx |= 1 << q;
                }
            }
            out.push(self.amps[idx]);
        }
        Ok(out)
    }

    /// Apply one gate in place.
    pub fn apply(&mut self, inst: &GateInstruction) -> Result<()> {
        inst.validate_for(self.num_qubits)?;
        let q = inst.qubits();
        match inst.gate() {
            Gate::X => self.apply_x(q[0]),
            Gate::Y => self.apply_single(
                q[0],
                &[
                    Complex64::new(0.0, 0.0),
                    Complex64::new(0.0, -1.0),
                    Complex64::new(0.0, 1.0),
                    Complex64::new(0.0, 0.0),
                ],
            ),
            Gate::Z => self.apply_diag(q[0], Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)),
            Gate::H => self.apply_h(q[0]),
            Gate::S => self.apply_diag(q[0], Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)),
            Gate::T => self.apply_diag(
                q[0],
                Complex64::new(1.0, 0.0),
                Complex64::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2),
            ),
            Gate::Phase(t) => self.apply_diag(
                q[0],
                Complex64::new(1.0, 0.0),
                Complex64::from_polar(1.0, t),
            ),
            Gate::Rx(t) => {
                let (c, s) = ((t / 2.0).cos(), (t / 2.0).sin());
                self.apply_single(
                    q[0],
                    &[
                        Complex64::new(c, 0.0),
                        Complex64::new(0.0, -s),
                        Complex64::new(0.0, -s),
                        Complex64::new(c, 0.0),
                    ],
                )
            }
            Gate::Ry(t) => {
                let (c, s) = ((t / 2.0).cos(), (t / 2.0).sin());
                self.apply_single(
                    q[0],
                    &[
                        Complex64::new(c, 0.0),
                        Complex64::new(-s, 0.0),
                        Complex64::new(s, 0.0),
                        Complex64::new(c, 0.0),
                    ],
                )
            }
            Gate::Rz(t) => self.apply_diag(
                q[0],
                Complex64::from_polar(1.0, -t / 2.0),
                Complex64::from_polar(1.0, t / 2.0),
            ),
            Gate::Cx => self.apply_cx(q[0], q[1]),
            Gate::Cz => self.apply_controlled_phase(&[q[0], q[1]], Complex64::new(-1.0, 0.0)),
            Gate::CPhase(t) => {
                self.apply_controlled_phase(&[q[0], q[1]], Complex64::from_polar(1.0, t))
            }
            Gate::Swap => self.apply_swap(q[0], q[1]),
            Gate::Toffoli => self.apply_toffoli(q[0], q[1], q[2]),
        }
        Ok(())
    }

    fn apply_single(&mut self, q: usize, m: &[Complex64; 4]) {
        let bit = 1usize << q;
        for base in (0..self.amps.len()).step_by(bit << 1) {
            for i in base..base + bit {
                let j = i | bit;
                let a = self.amps[i];
                let b = self.amps[j];
                self.amps[i] = m[0] * a + m[1] * b;
                self.amps[j] = m[2] * a + m[3] * b;
            }
        }
    }

    fn apply_h(&mut self, q: usize) {
        let bit = 1usize << q;
        for base in (0..self.amps.len()).step_by(bit << 1) {
            for i in base..base + bit {
                let j = i | bit;
                let a = self.amps[i];
                let b = self.amps[j];
                self.amps[i] = (a + b) * FRAC_1_SQRT_2;
                self.amps[j] = (a - b) * FRAC_1_SQRT_2;
            }
        }
    }

    fn apply_x(&mut self, q: usize) {
        let bit = 1usize << q;
        for base in (0..self.amps.len()).step_by(bit << 1) {
            for i in base..base + bit {
                self.amps.swap(i, i | bit);
            }
        }
    }

    fn apply_diag(&mut self, q: usize, m0: Complex64, m1: Complex64) {
        let bit = 1usize << q;
        for (i, amp) in self.amps.iter_mut().enumerate() {
            *amp *= if i & bit == 0 { m0 } else { m1 };
        }
    }

    fn apply_cx(&mut self, control: usize, target: usize) {
        let c = 1usize << control;
        let t = 1usize << target;
        for i in 0..self.amps.len() {
            if i & c != 0 && i & t == 0 {
                self.amps.swap(i, i | t);
            }
        }
    }

    /// Multiply amplitudes whose listed qubits are all |1> by `factor`.
    fn apply_controlled_phase(&mut self, qubits: &[usize], factor: Complex64) {
        let mask: usize = qubits.iter().map(|&q| 1usize << q).sum();
        for (i, amp) in self.amps.iter_mut().enumerate() {
            if i & mask == mask {
                *amp *= factor;
            }
        }
    }

    fn apply_swap(&mut self, a: usize, b: usize) {
        let ab = 1usize << a;
        let bb = 1usize << b;
        for i in 0..self.amps.len() {
            if i & ab != 0 && i & bb == 0 {
                self.amps.swap(i, i ^ ab ^ bb);
            }
        }
    }

    fn apply_toffoli(&mut self, c1: usize, c2: usize, target: usize) {
        let cmask = (1usize << c1) | (1usize << c2);
        let t = 1usize << target;
        for i in 0..self.amps.len() {
            if i & cmask == cmask && i & t == 0 {
                self.amps.swap(i, i | t);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: Complex64, b: Complex64, tol: f64) {
        assert!((a - b).norm() <= tol, "{a} != {b} (tol {tol})");
    }

    /// Columns of a gate's matrix, read off by applying it to basis states.
    fn columns_of(inst: &GateInstruction, num_qubits: usize) -> Vec<Vec<Complex64>> {
        (0..1usize << num_qubits)
            .map(|b| {
                let mut s = StateVector::basis(num_qubits, b).unwrap();
                s.apply(inst).unwrap();
                s.amplitudes().to_vec()
            })
            .collect()
    }

    /// Every gate kind pinned to its textbook matrix (up to 1e-15).
    #[test]
    fn gate_matrices_match_their_definitions() {
        let z = Complex64::new(0.0, 0.0);
        let o = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let s2 = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let theta = 0.7f64;
        let (c, sn) = ((theta / 2.0).cos(), (theta / 2.0).sin());
        let eit = Complex64::from_polar(1.0, theta);

        // (instruction, width, column-major expected matrix)
        let cases: Vec<(GateInstruction, usize, Vec<Vec<Complex64>>)> = vec![
            (GateInstruction::x(0), 1, vec![vec![z, o], vec![o, z]]),
            (GateInstruction::y(0), 1, vec![vec![z, i], vec![-i, z]]),
            (GateInstruction::z(0), 1, vec![vec![o, z], vec![z, -o]]),
            (GateInstruction::h(0), 1, vec![vec![s2, s2], vec![s2, -s2]]),
            (GateInstruction::s(0), 1, vec![vec![o, z], vec![z, i]]),
            (
                GateInstruction::t(0),
                1,
                vec![
                    vec![o, z],
                    vec![z, Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4)],
                ],
            ),
            (
                GateInstruction::phase(theta, 0),
                1,
                vec![vec![o, z], vec![z, eit]],
            ),
            (
                GateInstruction::rx(theta, 0),
                1,
                vec![
                    vec![Complex64::new(c, 0.0), Complex64::new(0.0, -sn)],
                    vec![Complex64::new(0.0, -sn), Complex64::new(c, 0.0)],
                ],
            ),
            (
                GateInstruction::ry(theta, 0),
                1,
                vec![
                    vec![Complex64::new(c, 0.0), Complex64::new(sn, 0.0)],
                    vec![Complex64::new(-sn, 0.0), Complex64::new(c, 0.0)],
                ],
            ),
            (
                GateInstruction::rz(theta, 0),
                1,
                vec![
                    vec![Complex64::from_polar(1.0, -theta / 2.0), z],
                    vec![z, Complex64::from_polar(1.0, theta / 2.0)],
                ],
            ),
            // Two-qubit gates on (0, 1): index 1 is |q0=1>, index 2 is |q1=1>.
            (
                GateInstruction::cx(0, 1),
                2,
                vec![
                    vec![o, z, z, z],
                    vec![z, z, z, o],
                    vec![z, z, o, z],
                    vec![z, o, z, z],
                ],
            ),
            (
                GateInstruction::cz(0, 1),
                2,
                vec![
                    vec![o, z, z, z],
                    vec![z, o, z, z],
                    vec![z, z, o, z],
                    vec![z, z, z, -o],
                ],
            ),
            (
                GateInstruction::cphase(theta, 0, 1),
                2,
                vec![
                    vec![o, z, z, z],
                    vec![z, o, z, z],
                    vec![z, z, o, z],
                    vec![z, z, z, eit],
                ],
            ),
            (
                GateInstruction::swap(0, 1),
                2,
                vec![
                    vec![o, z, z, z],
                    vec![z, z, o, z],
                    vec![z, o, z, z],
                    vec![z, z, z, o],
                ],
            ),
        ];
        for (inst, width, expected) in cases {
            let got = columns_of(&inst, width);
            for (col, want_col) in got.iter().zip(&expected) {
                for (a, b) in col.iter().zip(want_col) {
                    assert!(
                        (a - b).norm() <= 1e-15,
                        "{}: {a} != {b}",
                        inst.gate().name()
                    );
                }
            }
        }

        // Toffoli(0, 1, 2): swaps |011> (3) and |111> (7), fixes the rest.
        let got = columns_of(&GateInstruction::toffoli(0, 1, 2), 3);
        for (b, col) in got.iter().enumerate() {
            let expected_row = match b {
                3 => 7,
                7 => 3,
                other => other,
            };
            for (row, amp) in col.iter().enumerate() {
                let want = if row == expected_row { o } else { z };
                assert_eq!(*amp, want, "Toffoli column {b}, row {row}");
            }
        }
    }

    #[test]
    fn new_state_is_ground_state() {
        let s = StateVector::new(1).unwrap();
        assert_eq!(
            s.amplitudes(),
            &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]
        );

        let s = StateVector::new(3).unwrap();
        assert_eq!(s.dim(), 8);
        assert_eq!(s.amplitude(0).unwrap(), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn new_state_guards_register_size() {
        assert!(matches!(
            StateVector::new(31),
            Err(Error::RegisterTooLarge(31))
        ));
        assert!(matches!(StateVector::new(0), Err(Error::EmptyRegister)));
    }

    #[test]
    fn hadamard_on_ground_state() {
        let mut s = StateVector::new(1).unwrap();
        s.apply(&GateInstruction::h(0)).unwrap();
        assert_close(
            s.amplitude(0).unwrap(),
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            1e-15,
        );
        assert_close(
            s.amplitude(1).unwrap(),
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            1e-15,
        );
    }

    #[test]
    fn x_is_little_endian() {
        // X on qubit 1 of |00> lands on basis index 2.
        let mut s = StateVector::new(2).unwrap();
        s.apply(&GateInstruction::x(1)).unwrap();
        let probs = s.probabilities();
        assert_eq!(probs, vec![0.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn cphase_pi_flips_sign_of_one_one() {
        let mut s = StateVector::new(2).unwrap();
        s.apply(&GateInstruction::x(0)).unwrap();
        s.apply(&GateInstruction::x(1)).unwrap();
        s.apply(&GateInstruction::cphase(std::f64::consts::PI, 0, 1))
            .unwrap();
        let a = s.amplitude(3).unwrap();
        assert!((a.re + 1.0).abs() < 1e-15);
        assert!(a.im.abs() < 1e-15);
    }

    #[test]
    fn amplitude_bounds_check() {
        let s = StateVector::new(2).unwrap();
        assert_eq!(s.amplitude(3).unwrap(), Complex64::new(0.0, 0.0));
        assert!(matches!(
            s.amplitude(4),
            Err(Error::BasisIndexOutOfRange { index: 4, dim: 4 })
        ));
    }

    #[test]
    fn uniform_superposition_amplitude() {
        let mut s = StateVector::new(2).unwrap();
        s.apply(&GateInstruction::h(0)).unwrap();
        s.apply(&GateInstruction::h(1)).unwrap();
        assert_close(s.amplitude(2).unwrap(), Complex64::new(0.5, 0.0), 1e-15);
    }

    #[test]
    fn probabilities_of_simple_states() {
        let s = StateVector::new(1).unwrap();
        assert_eq!(s.probabilities(), vec![1.0, 0.0]);

        let mut s = StateVector::new(1).unwrap();
        s.apply(&GateInstruction::h(0)).unwrap();
        let p = s.probabilities();
        assert!((p[0] - 0.5).abs() < 1e-15 && (p[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn subspace_amplitudes_fix_one_qubit() {
        let mut s = StateVector::new(2).unwrap();
        s.apply(&GateInstruction::h(0)).unwrap();
        let sub = s.subspace_amplitudes(&[(1, false)]).unwrap();
        assert_eq!(sub.len(), 2);
        assert_close(sub[0], Complex64::new(FRAC_1_SQRT_2, 0.0), 1e-15);
        assert_close(sub[1], Complex64::new(FRAC_1_SQRT_2, 0.0), 1e-15);
    }

    #[test]
    fn subspace_amplitudes_fix_all_qubits() {
        let mut s = StateVector::new(2).unwrap();
        s.apply(&GateInstruction::h(0)).unwrap();
        s.apply(&GateInstruction::cx(0, 1)).unwrap();
        for idx in 0..4usize {
            let sub = s
                .subspace_amplitudes(&[(0, idx & 1 != 0), (1, idx & 2 != 0)])
                .unwrap();
            assert_eq!(sub.len(), 1);
            assert_eq!(sub[0], s.amplitude(idx).unwrap());
        }
    }

    #[test]
    fn subspace_amplitudes_rejects_bad_input() {
        let s = StateVector::new(2).unwrap();
        assert!(matches!(
            s.subspace_amplitudes(&[(2, false)]),
            Err(Error::QubitOutOfRange { index: 2, .. })
        ));
        assert!(matches!(
            s.subspace_amplitudes(&[(0, false), (0, true)]),
            Err(Error::DuplicateOperand(0))
        ));
    }

    #[test]
    fn apply_rejects_out_of_range_and_duplicates() {
        let mut s = StateVector::new(2).unwrap();
        assert!(matches!(
            s.apply(&GateInstruction::x(2)),
            Err(Error::QubitOutOfRange { index: 2, .. })
        ));
        assert!(matches!(
            s.apply(&GateInstruction::cx(1, 1)),
            Err(Error::DuplicateOperand(1))
        ));
        assert!(matches!(
            GateInstruction::new(Gate::Cx, &[0]),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 1,
                ..
            })
        ));
        assert!(matches!(
            s.apply(&GateInstruction::ry(f64::NAN, 0)),
            Err(Error::NonFiniteAngle(_))
        ));
    }

    #[test]
    fn involutions_restore_state() {
        // Fixed arbitrary 3-qubit state.
        let raw = [
            (0.1, 0.2),
            (0.3, -0.1),
            (-0.2, 0.4),
            (0.5, 0.0),
            (0.0, -0.3),
            (0.2, 0.2),
            (-0.1, -0.1),
            (0.35, 0.1),
        ];
        let norm = raw.iter().map(|(r, i)| r * r + i * i).sum::<f64>().sqrt();
        let amps: Vec<Complex64> = raw
            .iter()
            .map(|&(r, i)| Complex64::new(r / norm, i / norm))
            .collect();
        let original = StateVector::from_amplitudes(amps).unwrap();

        let cases: Vec<Vec<GateInstruction>> = vec![
            vec![GateInstruction::x(1), GateInstruction::x(1)],
            vec![GateInstruction::h(2), GateInstruction::h(2)],
            vec![GateInstruction::swap(0, 2), GateInstruction::swap(0, 2)],
            vec![
                GateInstruction::toffoli(0, 1, 2),
                GateInstruction::toffoli(0, 1, 2),
            ],
        ];
        for insts in cases {
            let mut s = original.clone();
            for inst in &insts {
                s.apply(inst).unwrap();
            }
            for (a, b) in s.amplitudes().iter().zip(original.amplitudes()) {
                assert!((a - b).norm() <= 1e-13);
            }
        }
    }
}
