//! Gate-level circuit IR.
//!
//! A [`Circuit`] is a flat, ordered gate list over `qubit_count` wires plus a
//! table of named registers. Register qubit lists are least-significant bit
//! first. Program order is the order gates were appended; nothing here
//! reorders gates (scheduling lives in [`crate::analyze`]).

mod json;
mod lower;
mod qasm;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use json::{export_json, import_json};
pub use lower::{lower_to_clifford_t, toffoli_decomposition};
pub use qasm::export_qasm;

/// Position of a qubit in a circuit's qubit array.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QubitId(pub usize);

impl QubitId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for QubitId {
    fn from(index: usize) -> Self {
        QubitId(index)
    }
}

impl fmt::Display for QubitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GateKind {
    X,
    Cnot,
    Toffoli,
    H,
    T,
    Tdg,
    S,
    Sdg,
}

impl GateKind {
    pub const ALL: [GateKind; 8] = [
        GateKind::X,
        GateKind::Cnot,
        GateKind::Toffoli,
        GateKind::H,
        GateKind::T,
        GateKind::Tdg,
        GateKind::S,
        GateKind::Sdg,
    ];

    pub fn arity(self) -> usize {
        match self {
            GateKind::Cnot => 2,
            GateKind::Toffoli => 3,
            _ => 1,
        }
    }

    /// X, CNOT and Toffoli act as classical bit permutations.
    pub fn is_reversible_classical(self) -> bool {
        matches!(self, GateKind::X | GateKind::Cnot | GateKind::Toffoli)
    }

    pub fn is_t(self) -> bool {
        matches!(self, GateKind::T | GateKind::Tdg)
    }

    pub fn name(self) -> &'static str {
        match self {
            GateKind::X => "x",
            GateKind::Cnot => "cnot",
            GateKind::Toffoli => "toffoli",
            GateKind::H => "h",
            GateKind::T => "t",
            GateKind::Tdg => "tdg",
            GateKind::S => "s",
            GateKind::Sdg => "sdg",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        GateKind::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| Error::UnknownGateKind(name.to_owned()))
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// One gate application. Controls come first in the operand list; the
/// target (or the only qubit) is last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gate {
    kind: GateKind,
    qubits: [QubitId; 3],
}

impl Gate {
    /// Builds a gate from an operand slice, checking only the arity.
    /// Range and distinctness are checked when the gate joins a circuit.
    pub fn new(kind: GateKind, operands: &[QubitId]) -> Result<Self> {
        if operands.len() != kind.arity() {
            return Err(Error::Arity {
                kind,
                expected: kind.arity(),
                got: operands.len(),
            });
        }
        let mut qubits = [QubitId(0); 3];
        qubits[..operands.len()].copy_from_slice(operands);
        Ok(Gate { kind, qubits })
    }

    fn single(kind: GateKind, q: impl Into<QubitId>) -> Self {
        Gate {
            kind,
            qubits: [q.into(), QubitId(0), QubitId(0)],
        }
    }

    pub fn x(q: impl Into<QubitId>) -> Self {
        Self::single(GateKind::X, q)
    }

    pub fn h(q: impl Into<QubitId>) -> Self {
        Self::single(GateKind::H, q)
    }

    pub fn t(q: impl Into<QubitId>) -> Self {
        Self::single(GateKind::T, q)
    }

    pub fn tdg(q: impl Into<QubitId>) -> Self {
        Self::single(GateKind::Tdg, q)
    }

    pub fn s(q: impl Into<QubitId>) -> Self {
        Self::single(GateKind::S, q)
    }

    pub fn sdg(q: impl Into<QubitId>) -> Self {
        Self::single(GateKind::Sdg, q)
    }

    pub fn cnot(control: impl Into<QubitId>, target: impl Into<QubitId>) -> Self {
        Gate {
            kind: GateKind::Cnot,
            qubits: [control.into(), target.into(), QubitId(0)],
        }
    }

    pub fn toffoli(
        c0: impl Into<QubitId>,
        c1: impl Into<QubitId>,
        target: impl Into<QubitId>,
    ) -> Self {
        Gate {
            kind: GateKind::Toffoli,
            qubits: [c0.into(), c1.into(), target.into()],
        }
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn operands(&self) -> &[QubitId] {
        &self.qubits[..self.kind.arity()]
    }

    pub fn target(&self) -> QubitId {
        self.qubits[self.kind.arity() - 1]
    }

    pub fn controls(&self) -> &[QubitId] {
        &self.qubits[..self.kind.arity() - 1]
    }

    fn validate(&self, qubit_count: usize) -> Result<()> {
        let ops = self.operands();
        for (i, q) in ops.iter().enumerate() {
            if q.0 >= qubit_count {
                return Err(Error::OperandOutOfRange {
                    qubit: q.0,
                    qubit_count,
                });
            }
            if ops[..i].contains(q) {
                return Err(Error::DuplicateOperand(q.0));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for (i, q) in self.operands().iter().enumerate() {
            f.write_str(if i == 0 { " " } else { "," })?;
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    qubit_count: usize,
    gates: Vec<Gate>,
    registers: BTreeMap<String, Vec<QubitId>>,
}

impl Circuit {
    pub fn new(qubit_count: usize) -> Result<Self> {
        if qubit_count == 0 {
            return Err(Error::ZeroQubits);
        }
        Ok(Circuit {
            qubit_count,
            gates: Vec::new(),
            registers: BTreeMap::new(),
        })
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
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

    pub fn registers(&self) -> &BTreeMap<String, Vec<QubitId>> {
        &self.registers
    }

    pub fn register(&self, name: &str) -> Option<&[QubitId]> {
        self.registers.get(name).map(Vec::as_slice)
    }

    pub fn append(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.qubit_count)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Appends every gate, stopping at the first invalid one. Gates before the
    /// failing gate stay appended.
    pub fn extend<I: IntoIterator<Item = Gate>>(&mut self, gates: I) -> Result<()> {
        gates.into_iter().try_for_each(|g| self.append(g))
    }

    /// Names an ordered (LSB first) list of qubits. Registers must be in
    /// range, duplicate-free, and disjoint from every other register.
    pub fn add_register(&mut self, name: impl Into<String>, qubits: Vec<QubitId>) -> Result<()> {
        let name = name.into();
        let bad = |reason: String| Error::InvalidRegister {
            name: name.clone(),
            reason,
        };
        if self.registers.contains_key(&name) {
            return Err(bad("already defined".into()));
        }
        for (i, q) in qubits.iter().enumerate() {
            if q.0 >= self.qubit_count {
                return Err(bad(format!(
                    "qubit {} out of range for {} qubits",
                    q.0, self.qubit_count
                )));
            }
            if qubits[..i].contains(q) {
                return Err(bad(format!("qubit {} listed twice", q.0)));
            }
            if let Some((other, _)) = self.registers.iter().find(|(_, r)| r.contains(q)) {
                return Err(bad(format!("qubit {} already belongs to `{other}`", q.0)));
            }
        }
        self.registers.insert(name, qubits);
        Ok(())
    }

    /// Same qubits and registers, gates replaced.
    pub(crate) fn with_gates(&self, gates: Vec<Gate>) -> Circuit {
        Circuit {
            qubit_count: self.qubit_count,
            gates,
            registers: self.registers.clone(),
        }
    }

    /// The gate list in reverse. X, CNOT and Toffoli are self-inverse, so for
    /// reversible circuits this is the inverse circuit.
    pub fn reversed(&self) -> Circuit {
        self.with_gates(self.gates.iter().rev().copied().collect())
    }

    pub fn count(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind == kind).count()
    }

    pub fn is_reversible_classical(&self) -> bool {
        self.gates.iter().all(|g| g.kind.is_reversible_classical())
    }
}

/// A computational basis state; bit `i` is the value of qubit `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisState {
    width: usize,
    words: Vec<u64>,
}

impl BasisState {
    pub fn zeros(width: usize) -> Self {
        BasisState {
            width,
            words: vec![0; width.div_ceil(64)],
        }
    }

    /// Little-endian: bit `i` of `index` is qubit `i`.
    pub fn from_index(width: usize, index: u64) -> Self {
        let mut s = Self::zeros(width);
        for q in 0..width.min(64) {
            s.set(QubitId(q), index >> q & 1 == 1);
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, q: QubitId) -> bool {
        assert!(q.0 < self.width, "qubit {} outside width {}", q.0, self.width);
        self.words[q.0 / 64] >> (q.0 % 64) & 1 == 1
    }

    pub fn set(&mut self, q: QubitId, value: bool) {
        assert!(q.0 < self.width, "qubit {} outside width {}", q.0, self.width);
        let mask = 1u64 << (q.0 % 64);
        if value {
            self.words[q.0 / 64] |= mask;
        } else {
            self.words[q.0 / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, q: QubitId) {
        assert!(q.0 < self.width, "qubit {} outside width {}", q.0, self.width);
        self.words[q.0 / 64] ^= 1u64 << (q.0 % 64);
    }

    /// Index of this state among the `2^width` basis states. Width must be
    /// at most 64.
    pub fn to_index(&self) -> u64 {
        assert!(self.width <= 64, "width {} does not fit an index", self.width);
        self.words.first().copied().unwrap_or(0)
    }

    /// Reads a register (LSB first) as an unsigned integer. At most 64 qubits.
    pub fn read(&self, qubits: &[QubitId]) -> u64 {
        assert!(qubits.len() <= 64, "register wider than 64 qubits");
        qubits
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &q)| acc | (self.get(q) as u64) << i)
    }

    /// Writes the low `qubits.len()` bits of `value` into a register.
    pub fn write(&mut self, qubits: &[QubitId], value: u64) {
        assert!(qubits.len() <= 64, "register wider than 64 qubits");
        for (i, &q) in qubits.iter().enumerate() {
            self.set(q, value >> i & 1 == 1);
        }
    }
}

impl fmt::Display for BasisState {
    /// Qubit 0 is printed first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        (0..self.width).try_for_each(|q| f.write_str(if self.get(QubitId(q)) { "1" } else { "0" }))
    }
}

/// Convenience for building id lists from ranges.
pub fn qubits(range: impl IntoIterator<Item = usize>) -> Vec<QubitId> {
    range.into_iter().map(QubitId).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_circuit_sizes() {
        for n in [1, 11, 12] {
            let c = Circuit::new(n).unwrap();
            assert_eq!(c.qubit_count(), n);
            assert!(c.is_empty());
            assert!(c.registers().is_empty());
        }
        assert!(matches!(Circuit::new(0), Err(Error::ZeroQubits)));
    }

    #[test]
    fn append_validates_operands() {
        let mut c = Circuit::new(2).unwrap();
        c.append(Gate::cnot(0, 1)).unwrap();
        assert_eq!(c.len(), 1);
        assert!(matches!(
            c.append(Gate::toffoli(0, 0, 1)),
            Err(Error::DuplicateOperand(0))
        ));
        assert!(matches!(
            c.append(Gate::x(2)),
            Err(Error::OperandOutOfRange { qubit: 2, qubit_count: 2 })
        ));
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn gate_new_checks_arity() {
        let err = Gate::new(GateKind::Toffoli, &qubits(0..4)).unwrap_err();
        assert!(matches!(err, Error::Arity { expected: 3, got: 4, .. }));
        let g = Gate::new(GateKind::Cnot, &qubits([3, 1])).unwrap();
        assert_eq!(g.controls(), &[QubitId(3)]);
        assert_eq!(g.target(), QubitId(1));
    }

    #[test]
    fn registers_must_be_disjoint() {
        let mut c = Circuit::new(4).unwrap();
        c.add_register("a", qubits(0..2)).unwrap();
        assert!(c.add_register("b", qubits(1..3)).is_err());
        assert!(c.add_register("b", qubits([2, 2])).is_err());
        assert!(c.add_register("b", qubits([4])).is_err());
        assert!(c.add_register("a", qubits([3])).is_err());
        c.add_register("b", qubits(2..4)).unwrap();
        assert_eq!(c.register("b"), Some(&qubits(2..4)[..]));
    }

    #[test]
    fn basis_state_register_io() {
        let mut s = BasisState::zeros(70);
        s.write(&qubits(60..68), 0b1010_0110);
        assert_eq!(s.read(&qubits(60..68)), 0b1010_0110);
        assert!(s.get(QubitId(61)));
        assert!(!s.get(QubitId(60)));
        let t = BasisState::from_index(5, 0b10011);
        assert_eq!(t.to_string(), "11001");
        assert_eq!(t.to_index(), 0b10011);
    }
}
