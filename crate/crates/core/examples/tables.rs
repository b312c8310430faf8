//! Regenerate every comparison table, cross-check the proposed cells
//! against built circuits up to n=64, and list the ledger notes.

use qdiv::baselines::{ledger, reproduce_table, ReproducedTable, TableId};

fn main() -> qdiv::Result<()> {
    for id in TableId::ALL {
        let mut table = reproduce_table(id);
        println!("## {id}\n");
        if let ReproducedTable::Comparison(t) = &mut table {
            let checks = t.use_measured(64)?;
            let agreeing = checks.iter().filter(|c| c.agrees()).count();
            println!("measured cells agreeing with formula: {agreeing}/{}\n", checks.len());
        }
        print!("{}", table.to_markdown());
        for note in ledger(id) {
            println!("- {note}");
        }
        println!();
    }
    Ok(())
}
