//! The Clifford+T Toffoli network and an end-to-end lowering check.

use qdiv::analyze::{schedule_asap, t_count, t_depth};
use qdiv::dividers::DividerKind;
use qdiv::gateir::{toffoli_decomposition, Circuit, Gate, QubitId};
use qdiv::sim::lowering_deviation;

fn main() -> qdiv::Result<()> {
    let mut toffoli = Circuit::new(3)?;
    toffoli.append(Gate::toffoli(0, 1, 2))?;

    let mut network = Circuit::new(3)?;
    network.extend(toffoli_decomposition(QubitId(0), QubitId(1), QubitId(2)))?;
    let schedule = schedule_asap(&network);
    println!("Toffoli(q0, q1 -> q2) as Clifford+T, by ASAP layer:");
    for (i, layer) in schedule.layers.iter().enumerate() {
        let gates: Vec<String> = layer.iter().map(|&g| network.gates()[g].to_string()).collect();
        println!("  {i:2}: {}", gates.join("; "));
    }
    println!(
        "T-count {}, T-depth {}, max amplitude error {:e}",
        t_count(&network),
        t_depth(&network),
        lowering_deviation(&toffoli)?
    );

    for kind in DividerKind::ALL {
        let (c, _) = kind.build(2)?;
        println!("{kind} n=2 lowered vs permutation: max error {:e}", lowering_deviation(&c)?);
    }
    Ok(())
}
