#![allow(dead_code)]

use proptest::prelude::*;
use qdiv::gateir::{Circuit, Gate, GateKind, QubitId};

/// A gate of `kinds` on distinct qubits below `q`; `q >= 3`.
pub fn gate_of(kinds: &'static [GateKind], q: usize) -> impl Strategy<Value = Gate> {
    (
        proptest::sample::select(kinds),
        Just((0..q).collect::<Vec<_>>()).prop_shuffle(),
    )
        .prop_map(|(kind, order)| {
            let ops: Vec<QubitId> = order[..kind.arity()].iter().map(|&i| QubitId(i)).collect();
            Gate::new(kind, &ops).expect("arity matches")
        })
}

pub const REVERSIBLE: &[GateKind] = &[GateKind::X, GateKind::Cnot, GateKind::Toffoli];

pub fn circuit_of(
    kinds: &'static [GateKind],
    q: usize,
    len: std::ops::Range<usize>,
) -> impl Strategy<Value = Circuit> {
    proptest::collection::vec(gate_of(kinds, q), len).prop_map(move |gates| {
        let mut c = Circuit::new(q).unwrap();
        c.extend(gates).unwrap();
        c
    })
}

/// Circuit on `3..=max_q` qubits.
pub fn sized_circuit(
    kinds: &'static [GateKind],
    max_q: usize,
    len: std::ops::Range<usize>,
) -> impl Strategy<Value = Circuit> {
    (3..=max_q).prop_flat_map(move |q| circuit_of(kinds, q, len.clone()))
}
