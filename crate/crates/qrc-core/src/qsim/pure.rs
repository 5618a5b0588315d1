use num_complex::Complex64;

use crate::error::{Error, Result};

use super::{Circuit, Gate};

const NORM_TOL: f64 = 1e-9;
const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Statevector over 2^q complex amplitudes, unit norm.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// |0...0⟩ on `num_qubits` qubits.
    pub fn zero(num_qubits: usize) -> Self {
        let mut amplitudes = vec![Complex64::ZERO; 1 << num_qubits];
        amplitudes[0] = Complex64::ONE;
        PureState { amplitudes }
    }

    /// Wraps an amplitude vector; the length must be a power of two and the
    /// squared norm must be 1 within 1e-9.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() || !amplitudes.len().is_power_of_two() {
            return Err(Error::invalid_state(format!(
                "statevector length {} is not a power of two",
                amplitudes.len()
            )));
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::invalid_state(format!(
                "statevector squared norm {norm_sq} deviates from 1"
            )));
        }
        Ok(PureState { amplitudes })
    }

    pub fn num_qubits(&self) -> usize {
        self.amplitudes.len().trailing_zeros() as usize
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Exact outcome probabilities |amplitude|².
    pub fn probabilities(&self) -> super::ProbVector {
        let probs: Vec<f64> = self.amplitudes.iter().map(|a| a.norm_sqr()).collect();
        super::ProbVector::from_raw_normalized(probs)
    }
}

pub(crate) fn apply_gate_in_place(amps: &mut [Complex64], gate: &Gate) {
    match *gate {
        Gate::X { target } => {
            let mask = 1 << target;
            for i in 0..amps.len() {
                if i & mask == 0 {
                    amps.swap(i, i | mask);
                }
            }
        }
        Gate::H { target } => {
            let mask = 1 << target;
            for i in 0..amps.len() {
                if i & mask == 0 {
                    let (a, b) = (amps[i], amps[i | mask]);
                    amps[i] = (a + b) * FRAC_1_SQRT_2;
                    amps[i | mask] = (a - b) * FRAC_1_SQRT_2;
                }
            }
        }
        Gate::Ry { target, angle } => {
            let mask = 1 << target;
            let (s, c) = (angle / 2.0).sin_cos();
            for i in 0..amps.len() {
                if i & mask == 0 {
                    let (a, b) = (amps[i], amps[i | mask]);
                    amps[i] = a * c - b * s;
                    amps[i | mask] = a * s + b * c;
                }
            }
        }
        Gate::Cnot { control, target } => {
            let cmask = 1 << control;
            let tmask = 1 << target;
            for i in 0..amps.len() {
                if i & cmask != 0 && i & tmask == 0 {
                    amps.swap(i, i | tmask);
                }
            }
        }
    }
}

/// Applies one gate to a state, returning the new state.
pub fn apply_gate(state: &PureState, gate: &Gate) -> Result<PureState> {
    gate.validate(state.num_qubits())?;
    let mut amps = state.amplitudes.clone();
    apply_gate_in_place(&mut amps, gate);
    Ok(PureState { amplitudes: amps })
}

/// Runs all gates of `circuit` in order starting from `initial`.
pub fn run_pure(circuit: &Circuit, initial: &PureState) -> Result<PureState> {
    if initial.num_qubits() != circuit.num_qubits() {
        return Err(Error::DimensionMismatch {
            expected: 1 << circuit.num_qubits(),
            got: initial.amplitudes.len(),
        });
    }
    let mut amps = initial.amplitudes.clone();
    for gate in circuit.gates() {
        apply_gate_in_place(&mut amps, gate);
    }
    Ok(PureState { amplitudes: amps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn hadamard_on_zero() {
        let state = apply_gate(&PureState::zero(1), &Gate::H { target: 0 }).unwrap();
        let expect = FRAC_1_SQRT_2;
        assert!((state.amplitudes()[0] - c(expect)).norm() < 1e-12);
        assert!((state.amplitudes()[1] - c(expect)).norm() < 1e-12);
    }

    #[test]
    fn cnot_truth_table() {
        // |10⟩: qubit 0 set (lsb), qubit 1 clear -> index 1
        let mut amps = vec![Complex64::ZERO; 4];
        amps[1] = Complex64::ONE;
        let state = PureState::new(amps).unwrap();
        let out = apply_gate(
            &state,
            &Gate::Cnot {
                control: 0,
                target: 1,
            },
        )
        .unwrap();
        // -> |11⟩, index 3
        assert!((out.amplitudes()[3] - c(1.0)).norm() < 1e-12);
        assert!(out.amplitudes()[1].norm() < 1e-12);
    }

    #[test]
    fn ry_pi_flips_zero_to_one() {
        let out = apply_gate(
            &PureState::zero(1),
            &Gate::Ry {
                target: 0,
                angle: std::f64::consts::PI,
            },
        )
        .unwrap();
        assert!(out.amplitudes()[0].norm() < 1e-12);
        assert!((out.amplitudes()[1].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn empty_circuit_is_identity() {
        let init = PureState::zero(3);
        let out = run_pure(&Circuit::new(3), &init).unwrap();
        assert_eq!(out, init);
    }

    #[test]
    fn hadamard_is_self_inverse() {
        let mut circuit = Circuit::new(1);
        circuit.push(Gate::H { target: 0 }).unwrap();
        circuit.push(Gate::H { target: 0 }).unwrap();
        let out = run_pure(&circuit, &PureState::zero(1)).unwrap();
        assert!((out.amplitudes()[0] - c(1.0)).norm() < 1e-12);
        assert!(out.amplitudes()[1].norm() < 1e-12);
    }

    #[test]
    fn run_pure_rejects_dimension_mismatch() {
        let circuit = Circuit::new(2);
        assert!(run_pure(&circuit, &PureState::zero(3)).is_err());
    }

    #[test]
    fn apply_gate_rejects_out_of_range() {
        let state = PureState::zero(1);
        assert!(apply_gate(&state, &Gate::X { target: 1 }).is_err());
    }

    #[test]
    fn new_rejects_unnormalized() {
        assert!(PureState::new(vec![c(1.0), c(1.0)]).is_err());
        assert!(PureState::new(vec![c(1.0), Complex64::ZERO, Complex64::ZERO]).is_err());
    }
}
