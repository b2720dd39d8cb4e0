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

//! Ground-truth oracles for the quantum pipeline.
//!
//! [`classical_lbm_step`] is the plain D1Q2 lattice Boltzmann update that the
//! quantum solver must reproduce bit-for-bit up to floating-point noise.
//! [`analytical_checks`] measures drift, spreading and mass conservation of a
//! trajectory with periodic-aware circular statistics. [`lcu_combine`] forms
//! dense linear combinations of unitaries.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::solver::collision_angles;

/// One classical D1Q2 step with relaxation time 1: equilibrium distributions
/// d_i * C stream one site in their direction (periodic) and recombine.
pub fn classical_lbm_step(concentration: &[f64], velocity: f64, cs2: f64) -> Result<Vec<f64>> {
    let angles = collision_angles(velocity, cs2)?;
    let m = concentration.len();
    let mut next = vec![0.0; m];
    for x in 0..m {
        let right_moving = angles.d1 * concentration[(x + m - 1) % m];
        let left_moving = angles.d2 * concentration[(x + 1) % m];
        next[x] = right_moving + left_moving;
    }
    Ok(next)
}

/// Measured transport properties of a trajectory, with the values the
/// advection-diffusion model predicts for them.
#[derive(Clone, Copy, Debug)]
pub struct AnalyticalReport {
    /// Least-squares slope of the circular center of mass, sites per step.
    pub drift_rate: f64,
    /// Model drift: the advection velocity.
    pub expected_drift: f64,
    /// Least-squares slope of the circular variance, sites^2 per step.
    pub variance_slope: f64,
    /// Model slope 2 * (cs2 / 2): twice the diffusivity.
    pub expected_variance_slope: f64,
    /// Largest |sum C_t - sum C_0| over the trajectory.
    pub max_mass_deviation: f64,
}

/// Drift, variance growth and mass conservation of a concentration
/// trajectory on a periodic lattice.
pub fn analytical_checks(
    trajectory: &[Vec<f64>],
    velocity: f64,
    cs2: f64,
) -> Result<AnalyticalReport> {
    if trajectory.len() < 3 {
        return Err(Error::TrajectoryTooShort(trajectory.len()));
    }
    let m = trajectory[0].len();
    if m == 0 || trajectory.iter().any(|c| c.len() != m) {
        return Err(Error::DimensionMismatch(
            "trajectory snapshots must share a non-zero length".to_string(),
        ));
    }

    let mass0: f64 = trajectory[0].iter().sum();
    let mut max_mass_deviation = 0.0f64;
    let mut centers = Vec::with_capacity(trajectory.len());
    let mut variances = Vec::with_capacity(trajectory.len());

    for field in trajectory {
        let mass: f64 = field.iter().sum();
        max_mass_deviation = max_mass_deviation.max((mass - mass0).abs());

        let (center, variance) = circular_moments(field);
        centers.push(center);
        variances.push(variance);
    }

    // Unwrap the center positions so the fit sees a continuous drift.
    let m_f = m as f64;
    let mut unwrapped = Vec::with_capacity(centers.len());
    unwrapped.push(centers[0]);
    for &c in &centers[1..] {
        let prev = *unwrapped.last().expect("non-empty");
        let delta = (c - prev + m_f / 2.0).rem_euclid(m_f) - m_f / 2.0;
        unwrapped.push(prev + delta);
    }

    Ok(AnalyticalReport {
        drift_rate: least_squares_slope(&unwrapped),
        expected_drift: velocity,
        variance_slope: least_squares_slope(&variances),
        expected_variance_slope: cs2,
        max_mass_deviation,
    })
}

/// Mass-weighted circular mean (in sites) and the second moment about it,
/// measured with minimal signed circular distances.
fn circular_moments(field: &[f64]) -> (f64, f64) {
    let m = field.len() as f64;
    let mass: f64 = field.iter().sum();
    if mass == 0.0 {
        return (0.0, 0.0);
    }
    let tau = std::f64::consts::TAU;
    let mut z = Complex64::new(0.0, 0.0);
    for (x, &c) in field.iter().enumerate() {
        z += Complex64::from_polar(c, tau * x as f64 / m);
    }
    let center = (z.arg() / tau * m).rem_euclid(m);

    let mut second = 0.0;
    for (x, &c) in field.iter().enumerate() {
        let d = (x as f64 - center + m / 2.0).rem_euclid(m) - m / 2.0;
        second += c * d * d;
    }
    (center, second / mass)
}

fn least_squares_slope(series: &[f64]) -> f64 {
    let n = series.len() as f64;
    let t_mean = (n - 1.0) / 2.0;
    let y_mean = series.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (t, &y) in series.iter().enumerate() {
        let dt = t as f64 - t_mean;
        num += dt * (y - y_mean);
        den += dt * dt;
    }
    num / den
}

/// Entrywise sum of c_i * U_i over dense matrices of equal square shape.
pub fn lcu_combine(
    coefficients: &[Complex64],
    matrices: &[Array2<Complex64>],
) -> Result<Array2<Complex64>> {
    if coefficients.is_empty() || coefficients.len() != matrices.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} coefficient(s) for {} matrix(es)",
            coefficients.len(),
            matrices.len()
        )));
    }
    let shape = matrices[0].dim();
    if shape.0 != shape.1 {
        return Err(Error::DimensionMismatch(format!(
            "matrices must be square, got {}x{}",
            shape.0, shape.1
        )));
    }
    let mut sum = Array2::<Complex64>::zeros(shape);
    for (c, u) in coefficients.iter().zip(matrices) {
        if u.dim() != shape {
            return Err(Error::DimensionMismatch(format!(
                "matrix of shape {:?} does not match {:?}",
                u.dim(),
                shape
            )));
        }
        sum.zip_mut_with(u, |acc, x| *acc += c * x);
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn point_mass_splits_evenly_at_zero_velocity() {
        let next = classical_lbm_step(&[1.0, 0.0, 0.0, 0.0], 0.0, 1.0 / 3.0).unwrap();
        assert_eq!(next, vec![0.0, 0.5, 0.0, 0.5]);
    }

    #[test]
    fn mass_is_a_permutation_of_terms() {
        let c = [0.3, 1.7, 0.2, 0.9, 0.0, 0.45, 0.1, 0.05];
        let next = classical_lbm_step(&c, 0.2, 1.0 / 3.0).unwrap();
        let before: f64 = c.iter().sum();
        let after: f64 = next.iter().sum();
        assert!((before - after).abs() <= 1e-14);
    }

    #[test]
    fn step_is_linear_in_the_field() {
        let c1 = [0.1, 0.8, 0.3, 0.0, 0.2, 0.6, 0.05, 0.15];
        let c2 = [0.9, 0.0, 0.4, 0.7, 0.1, 0.0, 0.55, 0.25];
        let (a, b) = (0.7, 1.9);
        let mixed: Vec<f64> = c1.iter().zip(&c2).map(|(x, y)| a * x + b * y).collect();
        let left = classical_lbm_step(&mixed, 0.1, 1.0).unwrap();
        let s1 = classical_lbm_step(&c1, 0.1, 1.0).unwrap();
        let s2 = classical_lbm_step(&c2, 0.1, 1.0).unwrap();
        for x in 0..8 {
            assert!((left[x] - (a * s1[x] + b * s2[x])).abs() <= 1e-13);
        }
    }

    #[test]
    fn velocity_out_of_range_is_rejected() {
        assert!(matches!(
            classical_lbm_step(&[1.0, 0.0], 0.5, 1.0 / 3.0),
            Err(Error::VelocityOutOfRange { .. })
        ));
    }

    fn triangle(m: usize) -> Vec<f64> {
        let mut c = vec![0.0; m];
        c[5] = 0.5;
        c[6] = 1.0;
        c[7] = 0.5;
        c
    }

    fn oracle_trajectory(c0: Vec<f64>, steps: usize, u: f64, cs2: f64) -> Vec<Vec<f64>> {
        let mut trajectory = vec![c0];
        for _ in 0..steps {
            let next = classical_lbm_step(trajectory.last().unwrap(), u, cs2).unwrap();
            trajectory.push(next);
        }
        trajectory
    }

    #[test]
    fn zero_velocity_trajectory_has_no_drift() {
        let report =
            analytical_checks(&oracle_trajectory(triangle(32), 40, 0.0, 1.0), 0.0, 1.0).unwrap();
        assert!(
            report.drift_rate.abs() <= 0.05,
            "drift {}",
            report.drift_rate
        );
        assert!(report.max_mass_deviation <= 1e-12);
    }

    #[test]
    fn drift_tracks_the_advection_velocity() {
        let report =
            analytical_checks(&oracle_trajectory(triangle(32), 40, 0.1, 1.0), 0.1, 1.0).unwrap();
        let relative = (report.drift_rate - 0.1).abs() / 0.1;
        assert!(relative <= 0.15, "drift {} vs 0.1", report.drift_rate);
    }

    #[test]
    fn variance_slope_tracks_the_diffusivity() {
        let report =
            analytical_checks(&oracle_trajectory(triangle(32), 40, 0.0, 1.0), 0.0, 1.0).unwrap();
        let relative = (report.variance_slope - report.expected_variance_slope).abs()
            / report.expected_variance_slope;
        assert!(relative <= 0.2, "variance slope {}", report.variance_slope);
    }

    #[test]
    fn short_trajectories_are_rejected() {
        let c = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        assert!(matches!(
            analytical_checks(&c, 0.0, 1.0),
            Err(Error::TrajectoryTooShort(2))
        ));
    }

    #[test]
    fn hadamard_is_an_equal_pauli_mix() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let sigma_x = array![[zero, one], [one, zero]];
        let sigma_z = array![[one, zero], [zero, -one]];
        let combined = lcu_combine(
            &[Complex64::new(s, 0.0), Complex64::new(s, 0.0)],
            &[sigma_x, sigma_z],
        )
        .unwrap();
        let hadamard = array![
            [Complex64::new(s, 0.0), Complex64::new(s, 0.0)],
            [Complex64::new(s, 0.0), Complex64::new(-s, 0.0)],
        ];
        let diff = combined
            .iter()
            .zip(hadamard.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(diff <= 1e-15);
    }

    #[test]
    fn euler_identity_reproduces_the_collision_diagonal() {
        let lambda = 0.8f64;
        let plus = array![
            [Complex64::from_polar(1.0, lambda), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::from_polar(1.0, lambda)],
        ];
        let minus = plus.mapv(|z| z.conj());
        let half = Complex64::new(0.5, 0.0);
        let combined = lcu_combine(&[half, half], &[plus, minus]).unwrap();
        for i in 0..2 {
            assert!((combined[(i, i)] - Complex64::new(lambda.cos(), 0.0)).norm() <= 1e-15);
        }
    }

    #[test]
    fn single_term_combination_is_the_matrix_itself() {
        let m = array![
            [Complex64::new(0.0, 1.0), Complex64::new(2.0, 0.0)],
            [Complex64::new(0.0, -3.0), Complex64::new(0.5, 0.5)],
        ];
        let combined = lcu_combine(&[Complex64::new(1.0, 0.0)], std::slice::from_ref(&m)).unwrap();
        assert_eq!(combined, m);
    }

    #[test]
    fn dimension_mismatches_are_rejected() {
        let a = Array2::<Complex64>::eye(2);
        let b = Array2::<Complex64>::eye(4);
        assert!(lcu_combine(&[Complex64::new(1.0, 0.0)], &[]).is_err());
        assert!(lcu_combine(
            &[Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)],
            &[a, b]
        )
        .is_err());
    }
}
