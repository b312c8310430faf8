use thiserror::Error;

use crate::gateir::GateKind;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a circuit needs at least one qubit")]
    ZeroQubits,

    #[error("{kind} takes {expected} operand(s), got {got}")]
    Arity {
        kind: GateKind,
        expected: usize,
        got: usize,
    },

    #[error("qubit {qubit} out of range for a {qubit_count}-qubit circuit")]
    OperandOutOfRange { qubit: usize, qubit_count: usize },

    #[error("qubit {0} appears more than once in a single gate")]
    DuplicateOperand(usize),

    #[error("register `{name}`: {reason}")]
    InvalidRegister { name: String, reason: String },

    #[error("unknown gate kind `{0}`")]
    UnknownGateKind(String),

    #[error("block width must be at least 1")]
    ZeroWidth,

    #[error("block ports: {0}")]
    InvalidPorts(String),

    #[error("divider width must be at least 2, got {0}")]
    DividerTooNarrow(usize),

    #[error("operand {name}={value} outside the valid range [{min}, {max}) for width {n}")]
    OperandDomain {
        name: &'static str,
        value: u64,
        min: u64,
        max: u64,
        n: usize,
    },

    #[error("width {0} is too wide to encode classical operands (maximum 64)")]
    WidthTooLarge(usize),

    #[error(
        "gate {kind} at position {index} is not reversible-classical; \
         lower the circuit and use the state-vector engine instead"
    )]
    NotReversible { kind: GateKind, index: usize },

    #[error("exhaustive sweep of width {n} exceeds the maximum of {max}")]
    SweepTooWide { n: usize, max: usize },

    #[error("{qubits} qubits exceeds the simulator cap of {cap}")]
    QubitCap { qubits: usize, cap: usize },

    #[error("state has {got} qubits, circuit has {expected}")]
    StateWidth { expected: usize, got: usize },

    #[error("malformed circuit document: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
