use num_complex::Complex64;

use crate::error::{Error, Result};

use super::{Circuit, Gate, NoiseSpec, PureState};

const TRACE_TOL: f64 = 1e-9;
const HERMITIAN_TOL: f64 = 1e-9;
const DIAG_TOL: f64 = 1e-12;

/// Density matrix over 2^q basis states, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedState {
    dim: usize,
    rho: Vec<Complex64>,
}

impl MixedState {
    /// |0...0⟩⟨0...0| on `num_qubits` qubits.
    pub fn zero(num_qubits: usize) -> Self {
        let dim = 1 << num_qubits;
        let mut rho = vec![Complex64::ZERO; dim * dim];
        rho[0] = Complex64::ONE;
        MixedState { dim, rho }
    }

    /// Projector |ψ⟩⟨ψ| of a pure state.
    pub fn from_pure(state: &PureState) -> Self {
        let amps = state.amplitudes();
        let dim = amps.len();
        let mut rho = vec![Complex64::ZERO; dim * dim];
        for r in 0..dim {
            for c in 0..dim {
                rho[r * dim + c] = amps[r] * amps[c].conj();
            }
        }
        MixedState { dim, rho }
    }

    /// I / 2^q.
    pub fn maximally_mixed(num_qubits: usize) -> Self {
        let dim = 1 << num_qubits;
        let mut rho = vec![Complex64::ZERO; dim * dim];
        let p = 1.0 / dim as f64;
        for i in 0..dim {
            rho[i * dim + i] = Complex64::new(p, 0.0);
        }
        MixedState { dim, rho }
    }

    /// Wraps a raw matrix, validating trace, Hermiticity and the diagonal.
    pub fn new(rho: Vec<Complex64>, num_qubits: usize) -> Result<Self> {
        let dim = 1 << num_qubits;
        if rho.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                got: rho.len(),
            });
        }
        let state = MixedState { dim, rho };
        state.validate()?;
        Ok(state)
    }

    pub fn validate(&self) -> Result<()> {
        let trace: Complex64 = (0..self.dim).map(|i| self.entry(i, i)).sum();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::invalid_state(format!(
                "density matrix trace {trace} deviates from 1"
            )));
        }
        for r in 0..self.dim {
            if self.entry(r, r).im.abs() > HERMITIAN_TOL {
                return Err(Error::invalid_state("diagonal entry not real"));
            }
            if self.entry(r, r).re < -DIAG_TOL {
                return Err(Error::invalid_state(format!(
                    "negative diagonal entry {} at {r}",
                    self.entry(r, r).re
                )));
            }
            for c in (r + 1)..self.dim {
                let delta = self.entry(r, c) - self.entry(c, r).conj();
                if delta.norm() > HERMITIAN_TOL {
                    return Err(Error::invalid_state("density matrix not Hermitian"));
                }
            }
        }
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.rho[row * self.dim + col]
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.entry(i, i)).sum()
    }

    /// Diagonal in the computational basis. Negative diagonal round-off above
    /// -1e-12 is clamped to zero and the vector renormalized; anything below
    /// that tolerance signals a simulator bug and is reported as an error.
    pub fn probabilities(&self) -> Result<super::ProbVector> {
        let mut probs = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let p = self.entry(i, i).re;
            if p < -DIAG_TOL {
                return Err(Error::invalid_state(format!(
                    "diagonal entry {p} below clamping tolerance"
                )));
            }
            probs.push(p.max(0.0));
        }
        Ok(super::ProbVector::from_raw_normalized(probs))
    }
}

fn one_qubit_matrix(gate: &Gate) -> Option<(usize, [Complex64; 4])> {
    let re = |x: f64| Complex64::new(x, 0.0);
    match *gate {
        Gate::X { target } => Some((target, [re(0.0), re(1.0), re(1.0), re(0.0)])),
        Gate::H { target } => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            Some((target, [re(s), re(s), re(s), re(-s)]))
        }
        Gate::Ry { target, angle } => {
            let (s, c) = (angle / 2.0).sin_cos();
            Some((target, [re(c), re(-s), re(s), re(c)]))
        }
        Gate::Cnot { .. } => None,
    }
}

/// ρ → UρU† for one gate.
fn conjugate_gate(state: &mut MixedState, gate: &Gate) {
    let dim = state.dim;
    match one_qubit_matrix(gate) {
        Some((target, u)) => {
            let mask = 1 << target;
            // rows: ρ → Uρ
            for r in 0..dim {
                if r & mask != 0 {
                    continue;
                }
                for c in 0..dim {
                    let a = state.rho[r * dim + c];
                    let b = state.rho[(r | mask) * dim + c];
                    state.rho[r * dim + c] = u[0] * a + u[1] * b;
                    state.rho[(r | mask) * dim + c] = u[2] * a + u[3] * b;
                }
            }
            // columns: ρ → ρU†
            for c in 0..dim {
                if c & mask != 0 {
                    continue;
                }
                for r in 0..dim {
                    let a = state.rho[r * dim + c];
                    let b = state.rho[r * dim + (c | mask)];
                    state.rho[r * dim + c] = a * u[0].conj() + b * u[1].conj();
                    state.rho[r * dim + (c | mask)] = a * u[2].conj() + b * u[3].conj();
                }
            }
        }
        None => {
            let Gate::Cnot { control, target } = *gate else {
                unreachable!()
            };
            let cmask = 1 << control;
            let tmask = 1 << target;
            // CNOT is a permutation P with P = P†: swap rows, then columns.
            for r in 0..dim {
                if r & cmask != 0 && r & tmask == 0 {
                    for c in 0..dim {
                        state.rho.swap(r * dim + c, (r | tmask) * dim + c);
                    }
                }
            }
            for c in 0..dim {
                if c & cmask != 0 && c & tmask == 0 {
                    for r in 0..dim {
                        state.rho.swap(r * dim + c, r * dim + (c | tmask));
                    }
                }
            }
        }
    }
}

/// Runs `circuit` on a density matrix, applying the depolarizing channel on
/// each gate's target qubits immediately after the gate.
pub fn run_mixed(circuit: &Circuit, noise: &NoiseSpec, initial: &MixedState) -> Result<MixedState> {
    noise.validate()?;
    if initial.num_qubits() != circuit.num_qubits() {
        return Err(Error::DimensionMismatch {
            expected: 1 << circuit.num_qubits(),
            got: initial.dim,
        });
    }
    let mut state = initial.clone();
    for gate in circuit.gates() {
        conjugate_gate(&mut state, gate);
        let lambda = noise.depol_for(gate);
        if lambda > 0.0 {
            depolarize(&mut state, gate.qubit_mask(), lambda);
        }
    }
    Ok(state)
}

/// Depolarizing channel on the qubits in `mask` with strength `lambda`:
/// ρ → (1−λ)ρ + λ·Tr_mask(ρ) ⊗ I/2^k. The partial trace is taken before
/// ρ is scaled, so λ = 1 is exact.
fn depolarize(state: &mut MixedState, mask: usize, lambda: f64) {
    let dim = state.dim;
    let mut assignments = vec![0usize];
    for q in 0..state.num_qubits() {
        let bit = 1 << q;
        if mask & bit != 0 {
            let prev = assignments.clone();
            assignments.extend(prev.into_iter().map(|a| a | bit));
        }
    }
    let scale = lambda / assignments.len() as f64;

    // partial traces first
    let mut traced: Vec<Complex64> = Vec::new();
    let mut rest_pairs: Vec<(usize, usize)> = Vec::new();
    for r_rest in 0..dim {
        if r_rest & mask != 0 {
            continue;
        }
        for c_rest in 0..dim {
            if c_rest & mask != 0 {
                continue;
            }
            let mut t = Complex64::ZERO;
            for &s in &assignments {
                t += state.rho[(r_rest | s) * dim + (c_rest | s)];
            }
            traced.push(t);
            rest_pairs.push((r_rest, c_rest));
        }
    }

    for entry in state.rho.iter_mut() {
        *entry *= 1.0 - lambda;
    }
    for ((r_rest, c_rest), t) in rest_pairs.into_iter().zip(traced) {
        let embedded = t * scale;
        for &s in &assignments {
            state.rho[(r_rest | s) * dim + (c_rest | s)] += embedded;
        }
    }
}
