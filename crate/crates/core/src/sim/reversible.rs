use crate::error::{Error, Result};
use crate::gateir::{BasisState, Circuit};

/// Largest circuit [`permutation_of`] will tabulate.
pub const PERMUTATION_QUBIT_CAP: usize = 24;

fn check_reversible(circuit: &Circuit) -> Result<()> {
    match circuit
        .gates()
        .iter()
        .position(|g| !g.kind().is_reversible_classical())
    {
        Some(index) => Err(Error::NotReversible {
            kind: circuit.gates()[index].kind(),
            index,
        }),
        None => Ok(()),
    }
}

/// Runs an X/CNOT/Toffoli circuit on a basis state as conditional bit flips.
pub fn run_reversible(circuit: &Circuit, state: &BasisState) -> Result<BasisState> {
    if state.width() != circuit.qubit_count() {
        return Err(Error::StateWidth {
            expected: circuit.qubit_count(),
            got: state.width(),
        });
    }
    check_reversible(circuit)?;
    let mut s = state.clone();
    for g in circuit.gates() {
        if g.controls().iter().all(|&c| s.get(c)) {
            s.flip(g.target());
        }
    }
    Ok(s)
}

/// Image of every basis index under the circuit: `perm[i]` is the output
/// index for input index `i`.
pub fn permutation_of(circuit: &Circuit) -> Result<Vec<u64>> {
    let q = circuit.qubit_count();
    if q > PERMUTATION_QUBIT_CAP {
        return Err(Error::QubitCap {
            qubits: q,
            cap: PERMUTATION_QUBIT_CAP,
        });
    }
    check_reversible(circuit)?;
    // Gates compiled to (control mask, target bit) for a branch-free inner loop.
    let ops: Vec<(u64, u64)> = circuit
        .gates()
        .iter()
        .map(|g| {
            let mask = g.controls().iter().fold(0u64, |m, c| m | 1 << c.0);
            (mask, 1u64 << g.target().0)
        })
        .collect();
    Ok((0..1u64 << q)
        .map(|mut x| {
            for &(mask, t) in &ops {
                if x & mask == mask {
                    x ^= t;
                }
            }
            x
        })
        .collect())
}
