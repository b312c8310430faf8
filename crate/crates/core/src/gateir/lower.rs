use super::{Circuit, Gate, GateKind, QubitId};

/// Exact, ancilla-free Clifford+T realization of `Toffoli(c0, c1, target)`.
///
/// 7 T/Tdg, 7 CNOT, 2 H. The target is conjugated by H so the middle section
/// is the phase polynomial of CCZ, `(-1)^(xyz)`, spread over the seven
/// parities of the three wires:
///
/// ```text
///   T on x, y, z, x^y^z        Tdg on x^y, y^z, x^z
/// ```
///
/// The CNOT network visits the parities so that an as-soon-as-possible
/// schedule puts the seven T gates in exactly three layers:
/// `{z, x, x^y}`, `{y^z, x^y^z}`, `{y, x^z}`. The unitary is the Toffoli
/// permutation with no global or relative phase.
pub fn toffoli_decomposition(c0: QubitId, c1: QubitId, target: QubitId) -> [Gate; 16] {
    let (x, y, z) = (c0, c1, target);
    [
        Gate::h(z),
        Gate::t(z),
        Gate::cnot(x, y),
        Gate::t(x),
        Gate::tdg(y),
        Gate::cnot(x, y),
        Gate::cnot(y, z),
        Gate::cnot(z, x),
        Gate::tdg(z),
        Gate::t(x),
        Gate::cnot(y, x),
        Gate::t(y),
        Gate::tdg(x),
        Gate::cnot(y, z),
        Gate::cnot(z, x),
        Gate::h(z),
    ]
}

/// Replaces every Toffoli with [`toffoli_decomposition`]; all other gates
/// and the register table are copied through unchanged.
pub fn lower_to_clifford_t(circuit: &Circuit) -> Circuit {
    let toffolis = circuit.count(GateKind::Toffoli);
    let mut gates = Vec::with_capacity(circuit.len() + 15 * toffolis);
    for g in circuit.gates() {
        if g.kind() == GateKind::Toffoli {
            let ops = g.operands();
            gates.extend(toffoli_decomposition(ops[0], ops[1], ops[2]));
        } else {
            gates.push(*g);
        }
    }
    circuit.with_gates(gates)
}
