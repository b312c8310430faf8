//! Execution engines and exhaustive verification.
//!
//! [`run_reversible`] treats X/CNOT/Toffoli as classical bit flips and scales
//! to any width. [`run_statevector`] applies the Clifford+T unitaries to dense
//! amplitudes and is capped (16 qubits by default). The two meet in
//! [`check_lowering_equivalence`].

mod reversible;
mod statevector;
mod verify;

pub use reversible::{permutation_of, run_reversible, PERMUTATION_QUBIT_CAP};
pub use statevector::{run_statevector, StateVector, StateVectorSim, DEFAULT_QUBIT_CAP};
pub use verify::{
    check_lowering_equivalence, lowering_deviation, verify_block, verify_divider,
    verify_divider_with, BlockFailure, BlockReport, Failure, Probe, VerificationReport,
    VerifyOptions, MAX_BLOCK_SWEEP, MAX_DIVIDER_SWEEP,
};
