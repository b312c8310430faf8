//! Claimed against measured T-depth for both dividers at doubling widths.

use qdiv::baselines::compare_tdepth;
use qdiv::dividers::DividerKind;

fn main() -> qdiv::Result<()> {
    println!("kind,n,claimed,asap_t_depth,max_per_qubit,delta");
    for kind in DividerKind::ALL {
        let mut prev: Option<u64> = None;
        for n in [4, 8, 16, 32, 64] {
            let c = compare_tdepth(kind, n)?;
            let ratio = prev.map(|p| format!(" (x{:.2})", c.measured_asap as f64 / p as f64));
            println!(
                "{kind},{n},{},{}{},{},{}",
                c.claimed,
                c.measured_asap,
                ratio.unwrap_or_default(),
                c.measured_max_per_qubit,
                c.delta
            );
            prev = Some(c.measured_asap);
        }
    }
    Ok(())
}
