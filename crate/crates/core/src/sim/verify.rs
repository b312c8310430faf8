use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::reversible::run_reversible;
use super::statevector::{StateVector, StateVectorSim};
use crate::blocks::{standalone, BlockKind};
use crate::dividers::{
    decode_outputs, encode_inputs, encode_unchecked, DividerKind, DividerLayout, DivisionResult,
    RegisterName,
};
use crate::error::{Error, Result};
use crate::gateir::{lower_to_clifford_t, BasisState, Circuit};

/// Widest divider [`verify_divider`] will sweep.
pub const MAX_DIVIDER_SWEEP: usize = 8;
/// Widest block [`verify_block`] will sweep.
pub const MAX_BLOCK_SWEEP: usize = 10;

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    /// Also run inputs outside the valid domain and record their outputs.
    pub probe_invalid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub a: u64,
    pub b: u64,
    pub decoded: DivisionResult,
    pub expected_quotient: u64,
    pub expected_remainder: u64,
}

/// Output of one out-of-domain input; recorded, never judged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Probe {
    pub a: u64,
    pub b: u64,
    pub decoded: DivisionResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub kind: DividerKind,
    pub n: usize,
    pub pairs_tested: u64,
    /// Sorted by `(a, b)`.
    pub failures: Vec<Failure>,
    pub b_restored_everywhere: bool,
    /// Register whose final contents equal the quotient on every pair, if any.
    pub quotient_source: Option<RegisterName>,
    pub remainder_source: Option<RegisterName>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub probes: Vec<Probe>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.b_restored_everywhere
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn pool(jobs: Option<usize>) -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j.max(1));
    }
    b.build().expect("thread pool")
}

/// Exhaustive sweep with default options.
pub fn verify_divider(kind: DividerKind, n: usize) -> Result<VerificationReport> {
    verify_divider_with(kind, n, VerifyOptions::default())
}

/// Runs every `a in [0, 2^(n-1))`, `b in [1, 2^(n-1))` through the circuit.
///
/// Outputs are decoded through the layout's declared source registers.
/// Independently, each of `Q` and `R` is checked against the quotient and
/// remainder on every pair; the first candidate that matches everywhere
/// (declared register tried first) is reported as discovered.
pub fn verify_divider_with(
    kind: DividerKind,
    n: usize,
    opts: VerifyOptions,
) -> Result<VerificationReport> {
    if n > MAX_DIVIDER_SWEEP {
        return Err(Error::SweepTooWide { n, max: MAX_DIVIDER_SWEEP });
    }
    let (circuit, layout) = kind.build(n)?;
    let half = 1u64 << (n - 1);
    let pairs: Vec<(u64, u64)> = (0..half)
        .flat_map(|a| (1..half).map(move |b| (a, b)))
        .collect();

    struct Outcome {
        a: u64,
        b: u64,
        out: BasisState,
    }

    let run = |a: u64, b: u64, s: BasisState| -> Outcome {
        let out = run_reversible(&circuit, &s).expect("divider is reversible-classical");
        Outcome { a, b, out }
    };
    let pool = pool(opts.jobs);
    // Indexed collect keeps input order, so aggregation is scheduling-independent.
    let outcomes: Vec<Outcome> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(a, b)| run(a, b, encode_inputs(&layout, a, b).expect("pair in domain")))
            .collect()
    });

    let mut failures = Vec::new();
    let mut b_restored = true;
    for o in &outcomes {
        let decoded = decode_outputs(&layout, &o.out);
        b_restored &= decoded.b_out == o.b;
        let (eq, er) = (o.a / o.b, o.a % o.b);
        if decoded.quotient != eq || decoded.remainder != er || decoded.b_out != o.b {
            failures.push(Failure {
                a: o.a,
                b: o.b,
                decoded,
                expected_quotient: eq,
                expected_remainder: er,
            });
        }
    }

    let discover = |declared: RegisterName, value: fn(u64, u64) -> u64| {
        let other = match declared {
            RegisterName::Q => RegisterName::R,
            RegisterName::R => RegisterName::Q,
        };
        [declared, other].into_iter().find(|&name| {
            let reg = layout.register(name);
            outcomes.iter().all(|o| o.out.read(reg) == value(o.a, o.b))
        })
    };
    let quotient_source = discover(layout.quotient_source, |a, b| a / b);
    let remainder_source = discover(layout.remainder_source, |a, b| a % b);

    let probes = if opts.probe_invalid {
        probe(&circuit, &layout, &pool)
    } else {
        Vec::new()
    };

    Ok(VerificationReport {
        kind,
        n,
        pairs_tested: pairs.len() as u64,
        failures,
        b_restored_everywhere: b_restored,
        quotient_source,
        remainder_source,
        probes,
    })
}

/// Every encodable `(a, b)` with `a, b < 2^n` that the sweep skips:
/// `b = 0`, `a >= 2^(n-1)` or `b >= 2^(n-1)`.
fn probe(circuit: &Circuit, layout: &DividerLayout, pool: &rayon::ThreadPool) -> Vec<Probe> {
    let n = layout.n;
    let half = 1u64 << (n - 1);
    let full = 1u64 << n;
    let inputs: Vec<(u64, u64)> = (0..full)
        .flat_map(|a| (0..full).map(move |b| (a, b)))
        .filter(|&(a, b)| b == 0 || a >= half || b >= half)
        .collect();
    pool.install(|| {
        inputs
            .par_iter()
            .map(|&(a, b)| {
                let out = run_reversible(circuit, &encode_unchecked(layout, a, b))
                    .expect("divider is reversible-classical");
                Probe { a, b, decoded: decode_outputs(layout, &out) }
            })
            .collect()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockFailure {
    pub a: u64,
    pub b: u64,
    pub ctrl: bool,
    pub a_out: u64,
    pub b_out: u64,
    pub ctrl_out: bool,
    pub expected_b: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub kind: BlockKind,
    pub n: usize,
    pub cases_tested: u64,
    pub failures: Vec<BlockFailure>,
}

impl BlockReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Every `a, b in [0, 2^n)` (and both control values, when present) against
/// [`BlockKind::oracle`]; `a` and `ctrl` must come back unchanged.
pub fn verify_block(kind: BlockKind, n: usize, jobs: Option<usize>) -> Result<BlockReport> {
    if n > MAX_BLOCK_SWEEP {
        return Err(Error::SweepTooWide { n, max: MAX_BLOCK_SWEEP });
    }
    let c = standalone(kind, n)?;
    let ra = c.register("a").expect("block register a").to_vec();
    let rb = c.register("b").expect("block register b").to_vec();
    let rc = c.register("ctrl").map(|r| r.to_vec());
    let ctrls: &[bool] = if rc.is_some() { &[false, true] } else { &[false] };
    let cases: Vec<(u64, u64, bool)> = (0..1u64 << n)
        .flat_map(|a| (0..1u64 << n).flat_map(move |b| ctrls.iter().map(move |&k| (a, b, k))))
        .collect();
    let failures: Vec<BlockFailure> = pool(jobs).install(|| {
        cases
            .par_iter()
            .filter_map(|&(a, b, ctrl)| {
                let mut s = BasisState::zeros(c.qubit_count());
                s.write(&ra, a);
                s.write(&rb, b);
                if let Some(q) = &rc {
                    s.write(q, ctrl as u64);
                }
                let out = run_reversible(&c, &s).expect("block is reversible-classical");
                let (a_out, b_out) = (out.read(&ra), out.read(&rb));
                let ctrl_out = rc.as_ref().is_some_and(|q| out.read(q) == 1);
                let expected_b = kind.oracle(n, ctrl, a, b);
                (a_out != a || b_out != expected_b || ctrl_out != ctrl).then_some(BlockFailure {
                    a,
                    b,
                    ctrl,
                    a_out,
                    b_out,
                    ctrl_out,
                    expected_b,
                })
            })
            .collect()
    });
    Ok(BlockReport {
        kind,
        n,
        cases_tested: cases.len() as u64,
        failures,
    })
}

/// Largest amplitude error between the lowered circuit and the original over
/// every basis input.
///
/// A reversible-classical original is the ideal permutation, so each lowered
/// column must equal exactly one basis vector, phase included. Otherwise
/// both circuits are run through the state-vector engine.
pub fn lowering_deviation(circuit: &Circuit) -> Result<f64> {
    let sim = StateVectorSim::default();
    sim.check(circuit)?;
    let lowered = lower_to_clifford_t(circuit);
    let q = circuit.qubit_count();
    let classical = circuit.is_reversible_classical();
    let columns: Vec<Result<f64>> = (0..1u64 << q)
        .into_par_iter()
        .map(|col| {
            let input = StateVector::basis(q, col);
            let got = sim.run(&lowered, &input)?;
            let ideal = if classical {
                let image = run_reversible(circuit, &BasisState::from_index(q, col))?;
                StateVector::basis(q, image.to_index())
            } else {
                sim.run(circuit, &input)?
            };
            Ok(got
                .amplitudes()
                .iter()
                .zip(ideal.amplitudes())
                .map(|(x, y): (&Complex64, &Complex64)| (x - y).norm())
                .fold(0.0, f64::max))
        })
        .collect();
    columns
        .into_iter()
        .try_fold(0.0, |m, d| d.map(|d| f64::max(m, d)))
}

/// Whether every lowered column lands on the expected basis state with
/// amplitude error at most `tolerance`.
pub fn check_lowering_equivalence(circuit: &Circuit, tolerance: f64) -> Result<bool> {
    Ok(lowering_deviation(circuit)? <= tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gateir::Gate;

    #[test]
    fn restoring_n4_sweep() {
        let r = verify_divider(DividerKind::Restoring, 4).unwrap();
        assert_eq!(r.pairs_tested, 56);
        assert!(r.failures.is_empty());
        assert!(r.b_restored_everywhere);
        assert_eq!(r.quotient_source, Some(RegisterName::R));
        assert_eq!(r.remainder_source, Some(RegisterName::Q));
    }

    #[test]
    fn nonrestoring_smallest() {
        let r = verify_divider(DividerKind::NonRestoring, 2).unwrap();
        assert_eq!(r.pairs_tested, 2);
        assert!(r.passed());
        let r = verify_divider(DividerKind::NonRestoring, 4).unwrap();
        assert_eq!(r.quotient_source, Some(RegisterName::Q));
        assert_eq!(r.remainder_source, Some(RegisterName::R));
    }

    #[test]
    fn report_is_independent_of_job_count() {
        let one = verify_divider_with(
            DividerKind::NonRestoring,
            3,
            VerifyOptions { jobs: Some(1), probe_invalid: true },
        )
        .unwrap();
        let many = verify_divider_with(
            DividerKind::NonRestoring,
            3,
            VerifyOptions { jobs: Some(4), probe_invalid: true },
        )
        .unwrap();
        assert_eq!(one, many);
        // 8 * 8 encodable pairs minus the 4 * 3 in-domain ones.
        assert_eq!(one.probes.len(), 64 - 12);
    }

    #[test]
    fn width_limits() {
        assert!(matches!(
            verify_divider(DividerKind::Restoring, 1),
            Err(Error::DividerTooNarrow(1))
        ));
        assert!(matches!(
            verify_divider(DividerKind::Restoring, 9),
            Err(Error::SweepTooWide { .. })
        ));
    }

    #[test]
    fn block_sweeps() {
        for kind in BlockKind::ALL {
            let r = verify_block(kind, 3, None).unwrap();
            let per_ctrl = if kind.has_ctrl() { 2 } else { 1 };
            assert_eq!(r.cases_tested, 64 * per_ctrl);
            assert!(r.passed(), "{kind}: {:?}", r.failures.first());
        }
    }

    #[test]
    fn lowering_equivalence() {
        let sub = standalone(BlockKind::Subtractor, 2).unwrap();
        assert!(check_lowering_equivalence(&sub, 1e-9).unwrap());
        let (div, _) = DividerKind::Restoring.build(2).unwrap();
        assert!(check_lowering_equivalence(&div, 1e-9).unwrap());

        let mut clifford_t = Circuit::new(2).unwrap();
        clifford_t.extend([Gate::h(0), Gate::t(0), Gate::cnot(0, 1)]).unwrap();
        assert_eq!(lowering_deviation(&clifford_t).unwrap(), 0.0);
    }
}
