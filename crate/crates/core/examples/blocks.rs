//! The four arithmetic blocks on hand-picked wiring inside a host circuit.

use qdiv::blocks::{BlockKind, BlockPorts};
use qdiv::gateir::{BasisState, Circuit, QubitId};
use qdiv::sim::run_reversible;

fn main() -> qdiv::Result<()> {
    let n = 4;
    // a on odd qubits, b on even qubits, ctrl last.
    let a: Vec<QubitId> = (0..n).map(|i| QubitId(2 * i + 1)).collect();
    let b: Vec<QubitId> = (0..n).map(|i| QubitId(2 * i)).collect();
    let ctrl = QubitId(2 * n);

    for kind in BlockKind::ALL {
        let ports = if kind.has_ctrl() {
            BlockPorts::with_ctrl(a.clone(), b.clone(), ctrl)?
        } else {
            BlockPorts::new(a.clone(), b.clone())?
        };
        let mut host = Circuit::new(2 * n + 1)?;
        host.extend(kind.build(&ports)?)?;
        for c in [false, true] {
            if !kind.has_ctrl() && c {
                continue;
            }
            let (va, vb) = (5, 12);
            let mut s = BasisState::zeros(host.qubit_count());
            s.write(&a, va);
            s.write(&b, vb);
            s.set(ctrl, c);
            let out = run_reversible(&host, &s)?;
            println!(
                "{kind:>10} ctrl={} a={va} b={vb} -> b={} (oracle {}), {} Toffolis",
                c as u8,
                out.read(&b),
                kind.oracle(n, c, va, vb),
                host.count(qdiv::gateir::GateKind::Toffoli),
            );
        }
    }
    Ok(())
}
