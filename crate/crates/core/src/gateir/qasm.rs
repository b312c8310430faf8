use std::fmt::Write;

use super::{Circuit, GateKind};

fn mnemonic(kind: GateKind) -> &'static str {
    match kind {
        GateKind::X => "x",
        GateKind::Cnot => "cx",
        GateKind::Toffoli => "ccx",
        GateKind::H => "h",
        GateKind::T => "t",
        GateKind::Tdg => "tdg",
        GateKind::S => "s",
        GateKind::Sdg => "sdg",
    }
}

/// OpenQASM 2.0 text: one `qreg q[..]`, one line per gate in program order.
/// Register names are emitted as comments only.
pub fn export_qasm(circuit: &Circuit) -> String {
    let mut out = String::with_capacity(32 + circuit.len() * 16);
    out.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    for (name, qs) in circuit.registers() {
        let ids: Vec<String> = qs.iter().map(|q| q.0.to_string()).collect();
        let _ = writeln!(out, "// register {name} = q[{}]", ids.join(","));
    }
    let _ = writeln!(out, "qreg q[{}];", circuit.qubit_count());
    for g in circuit.gates() {
        out.push_str(mnemonic(g.kind()));
        for (i, q) in g.operands().iter().enumerate() {
            out.push(if i == 0 { ' ' } else { ',' });
            let _ = write!(out, "q[{}]", q.0);
        }
        out.push_str(";\n");
    }
    out
}
