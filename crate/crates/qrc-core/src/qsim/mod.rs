//! Minimal quantum circuit simulator.
//!
//! Pure-state evolution for ideal runs, density-matrix evolution with
//! depolarizing channels for noisy runs, exact outcome probabilities and
//! finite-shot sampling. Qubit 0 is the least-significant bit of the
//! outcome index throughout.

mod mixed;
mod prob;
mod pure;

pub use mixed::{run_mixed, MixedState};
pub use prob::{apply_readout_flips, sample_shots, ProbVector};
pub use pure::{apply_gate, run_pure, PureState};

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Gate kinds supported by the reservoir circuits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GateKind {
    X,
    H,
    Ry,
    Cnot,
}

impl GateKind {
    pub fn name(&self) -> &'static str {
        match self {
            GateKind::X => "x",
            GateKind::H => "h",
            GateKind::Ry => "ry",
            GateKind::Cnot => "cnot",
        }
    }
}

/// A single gate instance with its target qubit(s).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Gate {
    X { target: usize },
    H { target: usize },
    Ry { target: usize, angle: f64 },
    Cnot { control: usize, target: usize },
}

impl Gate {
    pub fn kind(&self) -> GateKind {
        match self {
            Gate::X { .. } => GateKind::X,
            Gate::H { .. } => GateKind::H,
            Gate::Ry { .. } => GateKind::Ry,
            Gate::Cnot { .. } => GateKind::Cnot,
        }
    }

    /// Number of qubits the gate acts on.
    pub fn arity(&self) -> usize {
        match self {
            Gate::Cnot { .. } => 2,
            _ => 1,
        }
    }

    /// Bit mask over the qubits the gate touches.
    pub fn qubit_mask(&self) -> usize {
        match *self {
            Gate::X { target } | Gate::H { target } | Gate::Ry { target, .. } => 1 << target,
            Gate::Cnot { control, target } => (1 << control) | (1 << target),
        }
    }

    fn validate(&self, num_qubits: usize) -> Result<()> {
        let check = |qubit: usize| {
            if qubit >= num_qubits {
                Err(Error::QubitOutOfRange { qubit, num_qubits })
            } else {
                Ok(())
            }
        };
        match *self {
            Gate::X { target } | Gate::H { target } => check(target),
            Gate::Ry { target, angle } => {
                check(target)?;
                if !angle.is_finite() {
                    return Err(Error::NonFiniteAngle { angle });
                }
                Ok(())
            }
            Gate::Cnot { control, target } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(Error::DegenerateCnot { qubit: control });
                }
                Ok(())
            }
        }
    }
}

/// An ordered gate list over a fixed register size. Gates are validated on
/// insertion, so executing a circuit cannot hit an out-of-range index.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Circuit {
            num_qubits,
            gates: Vec::new(),
        }
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.num_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Appends all gates of `other`; register sizes must match.
    pub fn extend(&mut self, other: &Circuit) -> Result<()> {
        if other.num_qubits != self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                got: other.num_qubits,
            });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }
}

/// Depolarizing-noise parameters plus optional per-qubit readout flips.
///
/// `kind_depol` carries per-gate-kind strengths loaded from a calibration
/// profile; when a kind is absent the arity default (`one_qubit_depol` or
/// `two_qubit_depol`) applies.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct NoiseSpec {
    pub one_qubit_depol: f64,
    pub two_qubit_depol: f64,
    pub readout_flip: Vec<f64>,
    pub kind_depol: BTreeMap<GateKind, f64>,
}

impl NoiseSpec {
    pub fn noiseless() -> Self {
        NoiseSpec::default()
    }

    /// The paper-style model: probability `p` on 2-qubit gates, `p/10` on
    /// 1-qubit gates.
    pub fn depolarizing(p: f64) -> Self {
        NoiseSpec {
            one_qubit_depol: p / 10.0,
            two_qubit_depol: p,
            readout_flip: Vec::new(),
            kind_depol: BTreeMap::new(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |p: f64| (0.0..=1.0).contains(&p);
        let mut all = vec![self.one_qubit_depol, self.two_qubit_depol];
        all.extend(&self.readout_flip);
        all.extend(self.kind_depol.values());
        if let Some(bad) = all.into_iter().find(|p| !ok(*p)) {
            return Err(Error::invalid_config(format!(
                "noise probability {bad} outside [0, 1]"
            )));
        }
        Ok(())
    }

    /// Depolarizing strength applied after a gate of the given kind.
    pub fn depol_for(&self, gate: &Gate) -> f64 {
        if let Some(&p) = self.kind_depol.get(&gate.kind()) {
            return p;
        }
        match gate.arity() {
            1 => self.one_qubit_depol,
            _ => self.two_qubit_depol,
        }
    }

    pub fn is_noiseless(&self) -> bool {
        self.one_qubit_depol == 0.0
            && self.two_qubit_depol == 0.0
            && self.readout_flip.iter().all(|&f| f == 0.0)
            && self.kind_depol.values().all(|&p| p == 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circuit_rejects_out_of_range_targets() {
        let mut c = Circuit::new(2);
        assert!(c.push(Gate::X { target: 2 }).is_err());
        assert!(c
            .push(Gate::Cnot {
                control: 0,
                target: 2
            })
            .is_err());
        assert!(c.push(Gate::X { target: 1 }).is_ok());
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn circuit_rejects_degenerate_cnot_and_bad_angle() {
        let mut c = Circuit::new(3);
        assert!(matches!(
            c.push(Gate::Cnot {
                control: 1,
                target: 1
            }),
            Err(Error::DegenerateCnot { qubit: 1 })
        ));
        assert!(c
            .push(Gate::Ry {
                target: 0,
                angle: f64::NAN
            })
            .is_err());
    }

    #[test]
    fn extend_requires_matching_register() {
        let mut a = Circuit::new(2);
        let b = Circuit::new(3);
        assert!(a.extend(&b).is_err());
    }

    #[test]
    fn depolarizing_spec_defaults() {
        let n = NoiseSpec::depolarizing(0.03);
        assert_eq!(n.two_qubit_depol, 0.03);
        assert!((n.one_qubit_depol - 0.003).abs() < 1e-15);
        assert!(n.validate().is_ok());
        assert!(!n.is_noiseless());
        assert!(NoiseSpec::noiseless().is_noiseless());
    }

    #[test]
    fn kind_override_takes_precedence() {
        let mut n = NoiseSpec::depolarizing(0.03);
        n.kind_depol.insert(GateKind::Cnot, 0.5);
        assert_eq!(
            n.depol_for(&Gate::Cnot {
                control: 0,
                target: 1
            }),
            0.5
        );
        assert_eq!(n.depol_for(&Gate::H { target: 0 }), 0.003);
    }

    #[test]
    fn noise_validation_rejects_out_of_range() {
        let mut n = NoiseSpec::depolarizing(1.5);
        assert!(n.validate().is_err());
        n = NoiseSpec::noiseless();
        n.readout_flip = vec![0.2, -0.1];
        assert!(n.validate().is_err());
    }
}
