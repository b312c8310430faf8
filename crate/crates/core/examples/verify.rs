//! Exhaustive verification of both dividers, and one division traced by hand.
//!
//! Usage: `cargo run --example verify -- [max_n]`

use qdiv::dividers::{decode_outputs, encode_inputs, DividerKind};
use qdiv::sim::{run_reversible, verify_divider_with, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);

    let (circuit, layout) = DividerKind::Restoring.build(4)?;
    let input = encode_inputs(&layout, 5, 2)?;
    let output = run_reversible(&circuit, &input)?;
    let r = decode_outputs(&layout, &output);
    println!("restoring n=4: 5 / 2 -> quotient {}, remainder {}, divisor {}", r.quotient, r.remainder, r.b_out);
    println!("  in  {input}\n  out {output}  (qubit 0 first: Q, R, B)");

    for kind in DividerKind::ALL {
        for n in 2..=max_n {
            let opts = VerifyOptions { jobs: None, probe_invalid: false };
            let report = verify_divider_with(kind, n, opts)?;
            println!(
                "{kind:>12} n={n}: {:5} pairs, {} failures, B restored: {}, quotient in {:?}, remainder in {:?}",
                report.pairs_tested,
                report.failures.len(),
                report.b_restored_everywhere,
                report.quotient_source,
                report.remainder_source,
            );
        }
    }

    // Division by zero is outside the verified domain; probe mode records it.
    let probes = verify_divider_with(
        DividerKind::NonRestoring,
        3,
        VerifyOptions { jobs: None, probe_invalid: true },
    )?
    .probes;
    for p in probes.iter().filter(|p| p.b == 0).take(4) {
        println!("probe {}/0 -> quotient {}, remainder {}", p.a, p.decoded.quotient, p.decoded.remainder);
    }
    Ok(())
}
