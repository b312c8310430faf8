//! One test per acceptance criterion. Each prints a single
//! `PASS`/`FAIL` line with its measured evidence, then asserts.

use std::time::{Duration, Instant};

use qdiv::analyze::{t_count, t_depth};
use qdiv::baselines::{improvement, reproduce_table, ComparisonTable, ReproducedTable, TableId};
use qdiv::blocks::{standalone, BlockKind};
use qdiv::dividers::DividerKind;
use qdiv::gateir::{lower_to_clifford_t, Circuit, Gate};
use qdiv::sim::{lowering_deviation, verify_block, verify_divider};

fn report(id: u32, name: &str, ok: bool, detail: String, elapsed: Duration) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("{verdict} criterion {id} {name}: {detail} ({:.2}s)", elapsed.as_secs_f64());
    assert!(ok, "criterion {id} failed: {detail}");
}

#[test]
fn criterion_1_divider_correctness() {
    let start = Instant::now();
    let mut pairs = 0;
    let mut bad = Vec::new();
    for kind in DividerKind::ALL {
        for n in 2..=6 {
            let r = verify_divider(kind, n).unwrap();
            pairs += r.pairs_tested;
            if !r.passed() {
                bad.push(format!("{kind} n={n}: {} failures", r.failures.len()));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(10);
    report(1, "divider sweeps n=2..6", ok, format!("{pairs} pairs, failures: {bad:?}"), elapsed);
}

#[test]
fn criterion_2_block_correctness() {
    let start = Instant::now();
    let mut cases = 0;
    let mut bad = Vec::new();
    for kind in BlockKind::ALL {
        for n in 1..=6 {
            let r = verify_block(kind, n, None).unwrap();
            cases += r.cases_tested;
            if !r.passed() {
                bad.push(format!("{kind} n={n}"));
            }
        }
    }
    // Ctrl-Add with ctrl=0 is the identity on every basis state.
    for n in 1..=6 {
        let c = standalone(BlockKind::CtrlAdd, n).unwrap();
        let perm = qdiv::sim::permutation_of(&c).unwrap();
        if (0..1u64 << (2 * n)).any(|x| perm[x as usize] != x) {
            bad.push(format!("ctrladd n={n} ctrl=0 not identity"));
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(10);
    report(2, "block sweeps n=1..6", ok, format!("{cases} cases, failures: {bad:?}"), elapsed);
}

#[test]
fn criterion_3_t_count_exactness() {
    let start = Instant::now();
    let printed_restoring = [(4, 448), (8, 2016), (16, 8512), (32, 34944), (64, 141568)];
    let printed_nonrestoring = [(4, 217), (8, 917), (16, 3661), (32, 14525), (64, 57757)];
    let mut bad = Vec::new();
    for n in [2u64, 4, 8, 16, 32, 64] {
        for kind in DividerKind::ALL {
            let (c, _) = kind.build(n as usize).unwrap();
            let measured = t_count(&lower_to_clifford_t(&c));
            let formula = match kind {
                DividerKind::Restoring => 35 * n * n - 28 * n,
                DividerKind::NonRestoring => 14 * n * n + 7 * n - 35,
            };
            let printed = match kind {
                DividerKind::Restoring => printed_restoring.iter(),
                DividerKind::NonRestoring => printed_nonrestoring.iter(),
            }
            .find(|(pn, _)| *pn == n)
            .map(|&(_, v)| v);
            if measured != formula || printed.is_some_and(|p| p != measured) {
                bad.push(format!("{kind} n={n}: measured {measured}, formula {formula}, printed {printed:?}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(30);
    report(3, "T-count exactness n=2..64", ok, format!("mismatches: {bad:?}"), elapsed);
}

#[test]
fn criterion_4_qubit_counts() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 2..=64usize {
        let (r, _) = DividerKind::Restoring.build(n).unwrap();
        let (nr, _) = DividerKind::NonRestoring.build(n).unwrap();
        if r.qubit_count() != 3 * n || nr.qubit_count() != 3 * n - 1 {
            bad.push(n);
        }
    }
    let ok = bad.is_empty();
    report(4, "qubit counts 3n and 3n-1", ok, format!("widths off: {bad:?}"), start.elapsed());
}

#[test]
fn criterion_5_lowering_soundness() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut circuits: Vec<(String, Circuit)> = DividerKind::ALL
        .iter()
        .map(|k| (k.to_string(), k.build(2).unwrap().0))
        .collect();
    circuits.extend(BlockKind::ALL.iter().map(|k| (k.to_string(), standalone(*k, 2).unwrap())));
    let mut bad = Vec::new();
    for (name, c) in &circuits {
        let d = lowering_deviation(c).unwrap();
        worst = worst.max(d);
        if d > 1e-9 {
            bad.push(format!("{name}: {d:e}"));
        }
    }
    let mut toffoli = Circuit::new(3).unwrap();
    toffoli.append(Gate::toffoli(0, 1, 2)).unwrap();
    let tof_dev = lowering_deviation(&toffoli).unwrap();
    let tof_depth = t_depth(&toffoli);
    if tof_dev > 1e-12 || tof_depth != 3 {
        bad.push(format!("toffoli deviation {tof_dev:e}, T-depth {tof_depth}"));
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(60);
    report(
        5,
        "lowering soundness",
        ok,
        format!("worst composite deviation {worst:e}, toffoli {tof_dev:e} T-depth {tof_depth}, failures {bad:?}"),
        elapsed,
    );
}

/// Printed improvement columns, one array per baseline, rows n=4..512,
/// followed by the printed averages.
struct Printed {
    id: TableId,
    columns: &'static [[f64; 8]],
    averages: &'static [f64],
    /// Printed cell values of baselines whose model is exact.
    exact_cells: &'static [(usize, [u64; 8])],
    proposed: [u64; 8],
}

const PRINTED: [Printed; 4] = [
    Printed {
        id: TableId::RestoringTcount,
        columns: &[
            [93.00, 92.13, 91.69, 91.47, 91.36, 91.30, 91.28, 91.26],
            [22.22, 56.25, 76.91, 88.15, 94.00, 96.98, 98.49, 99.24],
        ],
        averages: &[91.69, 79.03],
        exact_cells: &[],
        proposed: [448, 2016, 8512, 34944, 141568, 569856, 2286592, 9160704],
    },
    Printed {
        id: TableId::RestoringQubits,
        columns: &[
            [25.00; 8],
            [75.00, 91.67, 97.73, 99.42, 99.85, 99.96, 99.99, 99.99],
        ],
        averages: &[25.00, 93.94],
        exact_cells: &[(0, [16, 32, 64, 128, 256, 512, 1024, 2048])],
        proposed: [12, 24, 48, 96, 192, 384, 768, 1536],
    },
    Printed {
        id: TableId::NonrestoringTcount,
        columns: &[
            [51.56, 48.83, 48.93, 49.34, 49.64, 49.81, 49.90, 49.95],
            [72.32, 68.51, 67.31, 66.92, 66.77, 66.71, 66.69, 66.68],
            [62.33, 80.10, 90.07, 95.07, 97.55, 98.78, 99.39, 99.70],
        ],
        averages: &[49.75, 67.74, 90.37],
        exact_cells: &[
            (0, [448, 1792, 7168, 28672, 114688, 458752, 1835008, 7340032]),
            (1, [784, 2912, 11200, 43904, 173824, 691712, 2759680, 11024384]),
        ],
        proposed: [217, 917, 3661, 14525, 57757, 230237, 919261, 3673565],
    },
    Printed {
        id: TableId::NonrestoringQubits,
        columns: &[
            [78.43, 86.23, 92.05, 95.70, 97.76, 98.85, 99.42, 99.71],
            [89.42, 92.43, 95.26, 97.30, 98.55, 99.25, 99.62, 99.81],
            [77.08, 92.01, 97.77, 99.42, 99.85, 99.96, 99.99, 99.99],
        ],
        averages: &[93.52, 96.46, 95.76],
        exact_cells: &[
            (0, [51, 167, 591, 2207, 8511, 33407, 132351, 526847]),
            (1, [104, 304, 992, 3520, 13184, 50944, 200192, 793600]),
        ],
        proposed: [11, 23, 47, 95, 191, 383, 767, 1535],
    },
];

fn comparison(id: TableId) -> ComparisonTable {
    match reproduce_table(id) {
        ReproducedTable::Comparison(t) => t,
        ReproducedTable::Summary(_) => unreachable!(),
    }
}

#[test]
fn criterion_6_table_reproduction() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    let mut cells = 0;
    for p in &PRINTED {
        let t = comparison(p.id);
        for (j, col) in p.columns.iter().enumerate() {
            for (i, &printed) in col.iter().enumerate() {
                let row = &t.rows[i];
                // Recomputed from the row's own values, not from the library's column.
                let ours = improvement(row.baseline_values[j], row.proposed_value);
                let rounded = (ours * 100.0 + 1e-9).round() / 100.0;
                let diff = (rounded - printed).abs();
                worst = worst.max(diff);
                cells += 1;
                if diff > 0.05 + 1e-9 {
                    bad.push(format!("{} n={} col {j}: {rounded:.2} vs {printed:.2}", p.id, row.n));
                }
            }
            let avg = t.averages[j];
            let diff = ((avg * 100.0).round() / 100.0 - p.averages[j]).abs();
            worst = worst.max(diff);
            cells += 1;
            if diff > 0.05 + 1e-9 {
                bad.push(format!("{} average col {j}: {avg:.2} vs {:.2}", p.id, p.averages[j]));
            }
        }
        for (i, row) in t.rows.iter().enumerate() {
            if row.proposed_value != p.proposed[i] {
                bad.push(format!("{} n={} proposed {}", p.id, row.n, row.proposed_value));
            }
            for (j, values) in p.exact_cells {
                if row.baseline_values[*j] != values[i] {
                    bad.push(format!("{} n={} baseline {j}: {}", p.id, row.n, row.baseline_values[*j]));
                }
            }
        }
    }
    if !bad.is_empty() {
        let dibbo = &PRINTED[1].columns[1];
        let first_six = dibbo[..6].iter().sum::<f64>() / 6.0;
        println!(
            "  note: printed restoring-qubits Dibbo average 93.94 equals the mean of its first six rows ({first_six:.4}); all eight rows give {:.4}",
            dibbo.iter().sum::<f64>() / 8.0
        );
    }
    let ok = bad.is_empty();
    report(
        6,
        "table reproduction",
        ok,
        format!("{cells} percentages, worst |diff| {worst:.2}, mismatches {bad:?}"),
        start.elapsed(),
    );
}

#[test]
fn criterion_7_t_depth_scaling() {
    let start = Instant::now();
    let mut ratios = Vec::new();
    let mut bad = Vec::new();
    for kind in DividerKind::ALL {
        for n in [8usize, 16, 32] {
            let small = qdiv::baselines::compare_tdepth(kind, n).unwrap();
            let big = qdiv::baselines::compare_tdepth(kind, 2 * n).unwrap();
            let ratio = big.measured_asap as f64 / small.measured_asap as f64;
            println!(
                "  {kind} n={n}: asap T-depth {} -> {} (ratio {ratio:.2}); claimed {} (delta {:+}); max per-qubit {} -> {}",
                small.measured_asap,
                big.measured_asap,
                small.claimed,
                small.delta,
                small.measured_max_per_qubit,
                big.measured_max_per_qubit,
            );
            ratios.push(format!("{kind} {n}->{}: {ratio:.2}", 2 * n));
            if !(1.8..=2.2).contains(&ratio) {
                bad.push(format!("{kind} n={n}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(60);
    report(7, "T-depth doubling ratio in [1.8, 2.2]", ok, format!("ratios {ratios:?}"), elapsed);
}
