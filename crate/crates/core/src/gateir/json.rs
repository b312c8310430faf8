use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Circuit, Gate, GateKind, QubitId};
use crate::error::Result;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CircuitDoc {
    qubits: usize,
    #[serde(default)]
    registers: BTreeMap<String, Vec<usize>>,
    gates: Vec<GateDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GateDoc {
    kind: String,
    operands: Vec<usize>,
}

/// `{"qubits": N, "registers": {name: [..]}, "gates": [{"kind", "operands"}]}`
pub fn export_json(circuit: &Circuit) -> String {
    let doc = CircuitDoc {
        qubits: circuit.qubit_count(),
        registers: circuit
            .registers()
            .iter()
            .map(|(k, v)| (k.clone(), v.iter().map(|q| q.0).collect()))
            .collect(),
        gates: circuit
            .gates()
            .iter()
            .map(|g| GateDoc {
                kind: g.kind().name().to_owned(),
                operands: g.operands().iter().map(|q| q.0).collect(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("circuit document serializes")
}

/// Parses and validates a circuit document with the same checks as
/// [`Circuit::append`] and [`Circuit::add_register`].
pub fn import_json(text: &str) -> Result<Circuit> {
    let doc: CircuitDoc = serde_json::from_str(text)?;
    let mut circuit = Circuit::new(doc.qubits)?;
    for (name, qs) in doc.registers {
        circuit.add_register(name, qs.into_iter().map(QubitId).collect())?;
    }
    for g in doc.gates {
        let kind = GateKind::from_name(&g.kind)?;
        let ops: Vec<QubitId> = g.operands.into_iter().map(QubitId).collect();
        circuit.append(Gate::new(kind, &ops)?)?;
    }
    Ok(circuit)
}
