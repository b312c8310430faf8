//! Build both dividers, lower them, and write QASM, JSON and layout files.
//!
//! Usage: `cargo run --example build_and_export -- [n] [out_dir]`

use std::path::PathBuf;

use qdiv::dividers::DividerKind;
use qdiv::gateir::{export_json, export_qasm, import_json, lower_to_clifford_t};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "target/qdiv-circuits".into()));
    std::fs::create_dir_all(&dir)?;

    for kind in DividerKind::ALL {
        let (circuit, layout) = kind.build(n)?;
        let lowered = lower_to_clifford_t(&circuit);

        let stem = format!("{kind}-n{n}");
        std::fs::write(dir.join(format!("{stem}.json")), export_json(&circuit))?;
        std::fs::write(dir.join(format!("{stem}.lowered.qasm")), export_qasm(&lowered))?;
        std::fs::write(dir.join(format!("{stem}.layout.json")), layout.to_json())?;

        // The JSON form is lossless.
        assert_eq!(import_json(&export_json(&circuit))?, circuit);

        println!(
            "{stem}: {} qubits, {} gates ({} after lowering); quotient in {}, remainder in {}",
            circuit.qubit_count(),
            circuit.len(),
            lowered.len(),
            layout.quotient_source,
            layout.remainder_source,
        );
    }
    println!("wrote files to {}", dir.display());
    Ok(())
}
