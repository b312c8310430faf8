//! Resource rows for blocks and dividers, with per-register T-layer counts.

use qdiv::analyze::{resource_report, rows_to_markdown};
use qdiv::blocks::{standalone, BlockKind};
use qdiv::dividers::DividerKind;

fn main() -> qdiv::Result<()> {
    let mut rows = Vec::new();
    for kind in BlockKind::ALL {
        for n in [4, 8] {
            rows.push(resource_report(&standalone(kind, n)?).row(n, kind.name()));
        }
    }
    for kind in DividerKind::ALL {
        for n in [4, 8, 16] {
            let (c, _) = kind.build(n)?;
            let report = resource_report(&c);
            rows.push(report.row(n, kind.name()));
            if n == 16 {
                println!("{kind} n=16 max T-layers per register: {:?}", report.per_register_max);
            }
        }
    }
    print!("{}", rows_to_markdown(&rows));
    Ok(())
}
