//! Resource measurement: T-count, ASAP layering, T-depth and per-qubit
//! T-layer accounting.
//!
//! T-depth is always taken on the lowered circuit: a layer of the ASAP
//! schedule counts iff it holds at least one T or Tdg.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::gateir::{lower_to_clifford_t, Circuit, GateKind};

/// T gates in one lowered Toffoli.
pub const T_PER_TOFFOLI: u64 = 7;

/// T plus Tdg, with each Toffoli counted as its 7-T lowering.
pub fn t_count(circuit: &Circuit) -> u64 {
    circuit
        .gates()
        .iter()
        .map(|g| match g.kind() {
            GateKind::T | GateKind::Tdg => 1,
            GateKind::Toffoli => T_PER_TOFFOLI,
            _ => 0,
        })
        .sum()
}

/// Gate indices grouped into layers; gates inside a layer share no qubit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    pub layers: Vec<Vec<usize>>,
}

impl Schedule {
    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    /// Whether each layer contains a T or Tdg of `circuit`.
    pub fn t_layer_mask(&self, circuit: &Circuit) -> Vec<bool> {
        self.layers
            .iter()
            .map(|l| l.iter().any(|&i| circuit.gates()[i].kind().is_t()))
            .collect()
    }
}

/// Each gate goes one layer past the latest layer already holding any of
/// its qubits.
pub fn schedule_asap(circuit: &Circuit) -> Schedule {
    let mut frontier = vec![0usize; circuit.qubit_count()];
    let mut layers: Vec<Vec<usize>> = Vec::new();
    for (i, g) in circuit.gates().iter().enumerate() {
        let level = g.operands().iter().map(|q| frontier[q.0]).max().unwrap_or(0);
        if level == layers.len() {
            layers.push(Vec::new());
        }
        layers[level].push(i);
        for q in g.operands() {
            frontier[q.0] = level + 1;
        }
    }
    Schedule { layers }
}

fn lowered(circuit: &Circuit) -> std::borrow::Cow<'_, Circuit> {
    if circuit.count(GateKind::Toffoli) == 0 {
        std::borrow::Cow::Borrowed(circuit)
    } else {
        std::borrow::Cow::Owned(lower_to_clifford_t(circuit))
    }
}

/// Number of T-containing ASAP layers of the lowered circuit.
pub fn t_depth(circuit: &Circuit) -> u64 {
    let c = lowered(circuit);
    let s = schedule_asap(&c);
    s.t_layer_mask(&c).into_iter().filter(|&t| t).count() as u64
}

/// For each qubit, the number of T-containing layers in which some gate
/// touches it. Indexed by qubit id; lowers first.
pub fn per_qubit_t_layers(circuit: &Circuit) -> Vec<u64> {
    let c = lowered(circuit);
    let s = schedule_asap(&c);
    per_qubit_from_schedule(&c, &s)
}

fn per_qubit_from_schedule(c: &Circuit, s: &Schedule) -> Vec<u64> {
    let mut counts = vec![0u64; c.qubit_count()];
    for (layer, is_t) in s.layers.iter().zip(s.t_layer_mask(c)) {
        if is_t {
            for &i in layer {
                for q in c.gates()[i].operands() {
                    counts[q.0] += 1;
                }
            }
        }
    }
    counts
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResourceReport {
    pub t_count: u64,
    pub t_depth: u64,
    pub total_depth: u64,
    pub qubit_count: u64,
    /// Gate census of the lowered circuit, keyed by gate name.
    pub histogram: BTreeMap<String, u64>,
    /// Index is the qubit id.
    pub per_qubit_t_layers: Vec<u64>,
    /// Largest per-qubit T-layer count in each named register.
    pub per_register_max: BTreeMap<String, u64>,
}

/// Measures the lowered form of `circuit`; registers carry over.
pub fn resource_report(circuit: &Circuit) -> ResourceReport {
    let c = lowered(circuit);
    let s = schedule_asap(&c);
    let mask = s.t_layer_mask(&c);
    let per_qubit = per_qubit_from_schedule(&c, &s);
    let histogram = GateKind::ALL
        .iter()
        .map(|&k| (k.name().to_string(), c.count(k) as u64))
        .collect();
    let per_register_max = circuit
        .registers()
        .iter()
        .map(|(name, qs)| {
            let m = qs.iter().map(|q| per_qubit[q.0]).max().unwrap_or(0);
            (name.clone(), m)
        })
        .collect();
    ResourceReport {
        t_count: t_count(&c),
        t_depth: mask.iter().filter(|&&t| t).count() as u64,
        total_depth: s.depth() as u64,
        qubit_count: circuit.qubit_count() as u64,
        histogram,
        per_qubit_t_layers: per_qubit,
        per_register_max,
    }
}

impl ResourceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn row(&self, n: usize, kind: &str) -> ResourceRow {
        ResourceRow {
            n,
            kind: kind.to_string(),
            t_count: self.t_count,
            t_depth: self.t_depth,
            total_depth: self.total_depth,
            qubits: self.qubit_count,
        }
    }
}

/// One circuit's summary line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResourceRow {
    pub n: usize,
    pub kind: String,
    pub t_count: u64,
    pub t_depth: u64,
    pub total_depth: u64,
    pub qubits: u64,
}

const ROW_HEADER: [&str; 6] = ["n", "kind", "t_count", "t_depth", "total_depth", "qubits"];

pub fn rows_to_csv(rows: &[ResourceRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn rows_to_markdown(rows: &[ResourceRow]) -> String {
    let mut out = format!("| {} |\n", ROW_HEADER.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(ROW_HEADER.len())));
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |\n",
            r.n, r.kind, r.t_count, r.t_depth, r.total_depth, r.qubits
        ));
    }
    out
}
