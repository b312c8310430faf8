use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gateir::{Circuit, Gate, GateKind};

pub const DEFAULT_QUBIT_CAP: usize = 16;

/// Dense amplitudes; bit `i` of an index is qubit `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn basis(qubits: usize, index: u64) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << qubits];
        amplitudes[index as usize] = Complex64::new(1.0, 0.0);
        StateVector { qubits, amplitudes }
    }

    /// Panics unless `amplitudes.len()` is a power of two.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Self {
        assert!(amplitudes.len().is_power_of_two(), "length must be 2^q");
        StateVector {
            qubits: amplitudes.len().trailing_zeros() as usize,
            amplitudes,
        }
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: u64) -> Complex64 {
        self.amplitudes[index as usize]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    fn apply(&mut self, gate: &Gate) {
        let amps = &mut self.amplitudes;
        let t = 1usize << gate.target().0;
        let cmask = gate.controls().iter().fold(0usize, |m, c| m | 1 << c.0);
        match gate.kind() {
            GateKind::X | GateKind::Cnot | GateKind::Toffoli => {
                for i in 0..amps.len() {
                    if i & t == 0 && i & cmask == cmask {
                        amps.swap(i, i | t);
                    }
                }
            }
            GateKind::H => {
                for i in 0..amps.len() {
                    if i & t == 0 {
                        let (a0, a1) = (amps[i], amps[i | t]);
                        amps[i] = (a0 + a1) * FRAC_1_SQRT_2;
                        amps[i | t] = (a0 - a1) * FRAC_1_SQRT_2;
                    }
                }
            }
            kind => {
                let phase = match kind {
                    GateKind::T => Complex64::new(FRAC_1_SQRT_2, FRAC_1_SQRT_2),
                    GateKind::Tdg => Complex64::new(FRAC_1_SQRT_2, -FRAC_1_SQRT_2),
                    GateKind::S => Complex64::new(0.0, 1.0),
                    GateKind::Sdg => Complex64::new(0.0, -1.0),
                    _ => unreachable!(),
                };
                for (i, a) in amps.iter_mut().enumerate() {
                    if i & t != 0 {
                        *a *= phase;
                    }
                }
            }
        }
    }
}

/// State-vector engine with a qubit cap.
#[derive(Clone, Copy, Debug)]
pub struct StateVectorSim {
    pub max_qubits: usize,
}

impl Default for StateVectorSim {
    fn default() -> Self {
        StateVectorSim {
            max_qubits: DEFAULT_QUBIT_CAP,
        }
    }
}

impl StateVectorSim {
    pub fn check(&self, circuit: &Circuit) -> Result<()> {
        if circuit.qubit_count() > self.max_qubits {
            return Err(Error::QubitCap {
                qubits: circuit.qubit_count(),
                cap: self.max_qubits,
            });
        }
        Ok(())
    }

    pub fn run(&self, circuit: &Circuit, state: &StateVector) -> Result<StateVector> {
        self.check(circuit)?;
        if state.qubits != circuit.qubit_count() {
            return Err(Error::StateWidth {
                expected: circuit.qubit_count(),
                got: state.qubits,
            });
        }
        let mut s = state.clone();
        for g in circuit.gates() {
            s.apply(g);
        }
        Ok(s)
    }
}

/// [`StateVectorSim::run`] with the default cap.
pub fn run_statevector(circuit: &Circuit, state: &StateVector) -> Result<StateVector> {
    StateVectorSim::default().run(circuit, state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gateir::{lower_to_clifford_t, toffoli_decomposition, QubitId};

    fn circuit(q: usize, gates: &[Gate]) -> Circuit {
        let mut c = Circuit::new(q).unwrap();
        c.extend(gates.iter().copied()).unwrap();
        c
    }

    #[test]
    fn hadamard_on_zero() {
        let out = run_statevector(&circuit(1, &[Gate::h(0)]), &StateVector::basis(1, 0)).unwrap();
        for i in 0..2 {
            assert!((out.amplitude(i) - Complex64::new(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        }
        assert!((out.amplitude(0).re - 1.0 / 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn gate_matrices() {
        let w = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let cases = [
            (Gate::t(0), w),
            (Gate::tdg(0), w.conj()),
            (Gate::s(0), Complex64::i()),
            (Gate::sdg(0), -Complex64::i()),
        ];
        for (g, phase) in cases {
            let out = run_statevector(&circuit(1, &[g]), &StateVector::basis(1, 1)).unwrap();
            assert!((out.amplitude(1) - phase).norm() < 1e-15, "{g}");
            let out = run_statevector(&circuit(1, &[g]), &StateVector::basis(1, 0)).unwrap();
            assert!((out.amplitude(0) - Complex64::new(1.0, 0.0)).norm() < 1e-15, "{g}");
        }
        let out = run_statevector(&circuit(2, &[Gate::cnot(0, 1)]), &StateVector::basis(2, 1)).unwrap();
        assert_eq!(out.amplitude(3), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn t_then_tdg_is_identity() {
        let init = StateVector::from_amplitudes(vec![
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.8),
        ]);
        let out = run_statevector(&circuit(1, &[Gate::t(0), Gate::tdg(0)]), &init).unwrap();
        for i in 0..2 {
            assert!((out.amplitude(i) - init.amplitude(i)).norm() < 1e-12);
        }
    }

    /// Columns of the lowered Toffoli's unitary against the 8x8 permutation.
    #[test]
    fn lowered_toffoli_unitary() {
        let gates = toffoli_decomposition(QubitId(0), QubitId(1), QubitId(2));
        let c = circuit(3, &gates);
        for col in 0..8u64 {
            let image = if col & 0b011 == 0b011 { col ^ 0b100 } else { col };
            let out = run_statevector(&c, &StateVector::basis(3, col)).unwrap();
            for row in 0..8u64 {
                let ideal = if row == image { 1.0 } else { 0.0 };
                assert!(
                    (out.amplitude(row) - Complex64::new(ideal, 0.0)).norm() < 1e-12,
                    "entry ({row},{col}) = {}",
                    out.amplitude(row)
                );
            }
        }
        let mut pre = Circuit::new(3).unwrap();
        pre.append(Gate::toffoli(0, 1, 2)).unwrap();
        assert_eq!(lower_to_clifford_t(&pre).gates(), &gates[..]);
    }

    #[test]
    fn qubit_cap() {
        let sim = StateVectorSim { max_qubits: 4 };
        let c = Circuit::new(5).unwrap();
        assert!(matches!(
            sim.run(&c, &StateVector::basis(5, 0)),
            Err(Error::QubitCap { qubits: 5, cap: 4 })
        ));
    }
}
