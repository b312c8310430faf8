//! In-place arithmetic blocks built from X, CNOT and Toffoli.
//!
//! Every block takes an operand `a` that is returned unchanged and an
//! operand `b` that receives the result, both `n` qubits wide and LSB first.
//! None of them use ancillae or a carry-out qubit, so all arithmetic is
//! modulo `2^n`.
//!
//! The shared core is a ripple-carry adder whose carries are computed in
//! place on the `a` register:
//!
//! 1. `b_i ^= a_i` for `i >= 1`
//! 2. `a_{i+1} ^= a_i` for `i = n-2 ..= 1`
//! 3. forward carry chain `Toffoli(b_i, a_i -> a_{i+1})` for `i = 0 .. n-1`
//! 4. for `i = n-1 ..= 1`: write sum bit `b_i ^= a_i`, then uncompute
//!    `Toffoli(b_{i-1}, a_{i-1} -> a_i)`
//! 5. write sum bit `b_0 ^= a_0`
//! 6. `a_{i+1} ^= a_i` for `i = 1 .. n-2`
//! 7. `b_i ^= a_i` for `i >= 1`
//!
//! That is `2n - 2` Toffolis. The conditional adder promotes the `n` sum-bit
//! writes of steps 4 and 5 to Toffolis on `ctrl`, giving `3n - 2`; with
//! `ctrl = 0` steps 1-3 are undone by steps 4-7.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gateir::{qubits, Circuit, Gate, QubitId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPorts {
    a: Vec<QubitId>,
    b: Vec<QubitId>,
    ctrl: Option<QubitId>,
}

impl BlockPorts {
    pub fn new(a: Vec<QubitId>, b: Vec<QubitId>) -> Result<Self> {
        Self::build(a, b, None)
    }

    pub fn with_ctrl(a: Vec<QubitId>, b: Vec<QubitId>, ctrl: QubitId) -> Result<Self> {
        Self::build(a, b, Some(ctrl))
    }

    fn build(a: Vec<QubitId>, b: Vec<QubitId>, ctrl: Option<QubitId>) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::ZeroWidth);
        }
        if a.len() != b.len() {
            return Err(Error::InvalidPorts(format!(
                "operand widths differ: a has {}, b has {}",
                a.len(),
                b.len()
            )));
        }
        let all: Vec<QubitId> = a.iter().chain(&b).chain(ctrl.as_ref()).copied().collect();
        for (i, q) in all.iter().enumerate() {
            if all[..i].contains(q) {
                return Err(Error::InvalidPorts(format!("qubit {} used twice", q.0)));
            }
        }
        Ok(BlockPorts { a, b, ctrl })
    }

    pub fn width(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[QubitId] {
        &self.a
    }

    pub fn b(&self) -> &[QubitId] {
        &self.b
    }

    pub fn ctrl(&self) -> Option<QubitId> {
        self.ctrl
    }

    fn require_ctrl(&self, block: BlockKind) -> Result<QubitId> {
        self.ctrl
            .ok_or_else(|| Error::InvalidPorts(format!("{block} needs a ctrl qubit")))
    }

    fn forbid_ctrl(&self, block: BlockKind) -> Result<()> {
        match self.ctrl {
            Some(_) => Err(Error::InvalidPorts(format!("{block} takes no ctrl qubit"))),
            None => Ok(()),
        }
    }
}

/// Ripple-carry core; `sum_ctrl` turns the sum-bit writes into Toffolis.
fn ripple(ports: &BlockPorts, sum_ctrl: Option<QubitId>) -> Vec<Gate> {
    let (a, b) = (&ports.a, &ports.b);
    let n = a.len();
    let write_sum = |i: usize| match sum_ctrl {
        Some(c) => Gate::toffoli(c, a[i], b[i]),
        None => Gate::cnot(a[i], b[i]),
    };

    let mut g = Vec::with_capacity(8 * n);
    g.extend((1..n).map(|i| Gate::cnot(a[i], b[i])));
    g.extend((1..n.saturating_sub(1)).rev().map(|i| Gate::cnot(a[i], a[i + 1])));
    g.extend((0..n - 1).map(|i| Gate::toffoli(b[i], a[i], a[i + 1])));
    for i in (1..n).rev() {
        g.push(write_sum(i));
        g.push(Gate::toffoli(b[i - 1], a[i - 1], a[i]));
    }
    g.push(write_sum(0));
    g.extend((1..n.saturating_sub(1)).map(|i| Gate::cnot(a[i], a[i + 1])));
    g.extend((1..n).map(|i| Gate::cnot(a[i], b[i])));
    g
}

/// `|a, b> -> |a, (a + b) mod 2^n>`.
pub fn build_adder(ports: &BlockPorts) -> Result<Vec<Gate>> {
    ports.forbid_ctrl(BlockKind::Adder)?;
    Ok(ripple(ports, None))
}

/// `|a, b> -> |a, (b - a) mod 2^n>`, computed as `NOT(NOT(b) + a)`.
pub fn build_subtractor(ports: &BlockPorts) -> Result<Vec<Gate>> {
    ports.forbid_ctrl(BlockKind::Subtractor)?;
    let flips = ports.b.iter().map(|&q| Gate::x(q));
    let mut g: Vec<Gate> = flips.clone().collect();
    g.extend(ripple(ports, None));
    g.extend(flips);
    Ok(g)
}

/// `ctrl = 0`: `b + a`; `ctrl = 1`: `b - a`. The complement of `b` is
/// applied through CNOTs from `ctrl`, so no extra T gates are introduced.
pub fn build_addsub(ports: &BlockPorts) -> Result<Vec<Gate>> {
    let ctrl = ports.require_ctrl(BlockKind::AddSub)?;
    let flips = ports.b.iter().map(|&q| Gate::cnot(ctrl, q));
    let mut g: Vec<Gate> = flips.clone().collect();
    g.extend(ripple(ports, None));
    g.extend(flips);
    Ok(g)
}

/// `ctrl = 1`: `b + a`; `ctrl = 0`: identity.
pub fn build_ctrladd(ports: &BlockPorts) -> Result<Vec<Gate>> {
    let ctrl = ports.require_ctrl(BlockKind::CtrlAdd)?;
    Ok(ripple(ports, Some(ctrl)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Adder,
    Subtractor,
    AddSub,
    CtrlAdd,
}

impl BlockKind {
    pub const ALL: [BlockKind; 4] = [
        BlockKind::Adder,
        BlockKind::Subtractor,
        BlockKind::AddSub,
        BlockKind::CtrlAdd,
    ];

    pub fn has_ctrl(self) -> bool {
        matches!(self, BlockKind::AddSub | BlockKind::CtrlAdd)
    }

    pub fn build(self, ports: &BlockPorts) -> Result<Vec<Gate>> {
        match self {
            BlockKind::Adder => build_adder(ports),
            BlockKind::Subtractor => build_subtractor(ports),
            BlockKind::AddSub => build_addsub(ports),
            BlockKind::CtrlAdd => build_ctrladd(ports),
        }
    }

    /// Classical result written to `b`.
    pub fn oracle(self, n: usize, ctrl: bool, a: u64, b: u64) -> u64 {
        let mask = if n >= 64 { u64::MAX } else { (1 << n) - 1 };
        let r = match (self, ctrl) {
            (BlockKind::Adder, _) | (BlockKind::AddSub, false) | (BlockKind::CtrlAdd, true) => {
                b.wrapping_add(a)
            }
            (BlockKind::Subtractor, _) | (BlockKind::AddSub, true) => b.wrapping_sub(a),
            (BlockKind::CtrlAdd, false) => b,
        };
        r & mask
    }

    /// Toffoli gates in a width-`n` block.
    pub fn toffoli_count(self, n: usize) -> usize {
        match self {
            BlockKind::CtrlAdd => 3 * n - 2,
            _ => 2 * n - 2,
        }
    }

    /// Lowered T-count: `14n - 14`, or `21n - 14` for the conditional adder.
    pub fn t_count(self, n: usize) -> usize {
        7 * self.toffoli_count(n)
    }

    pub fn name(self) -> &'static str {
        match self {
            BlockKind::Adder => "adder",
            BlockKind::Subtractor => "subtractor",
            BlockKind::AddSub => "addsub",
            BlockKind::CtrlAdd => "ctrladd",
        }
    }
}

impl std::fmt::Display for BlockKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(self.name())
    }
}

/// A block on its own circuit: `a` on qubits `0..n`, `b` on `n..2n`, and
/// `ctrl` (when the block has one) on qubit `2n`. Registers are named
/// `a`, `b`, `ctrl`.
pub fn standalone(kind: BlockKind, n: usize) -> Result<Circuit> {
    if n == 0 {
        return Err(Error::ZeroWidth);
    }
    let a = qubits(0..n);
    let b = qubits(n..2 * n);
    let (ports, total) = if kind.has_ctrl() {
        (BlockPorts::with_ctrl(a, b, QubitId(2 * n))?, 2 * n + 1)
    } else {
        (BlockPorts::new(a, b)?, 2 * n)
    };
    let mut c = Circuit::new(total)?;
    c.add_register("a", ports.a.clone())?;
    c.add_register("b", ports.b.clone())?;
    if let Some(q) = ports.ctrl {
        c.add_register("ctrl", vec![q])?;
    }
    c.extend(kind.build(&ports)?)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gateir::{BasisState, GateKind};
    use crate::sim::run_reversible;

    fn run_block(kind: BlockKind, n: usize, ctrl: bool, a: u64, b: u64) -> (u64, u64, bool) {
        let c = standalone(kind, n).unwrap();
        let mut s = BasisState::zeros(c.qubit_count());
        s.write(c.register("a").unwrap(), a);
        s.write(c.register("b").unwrap(), b);
        if let Some(q) = c.register("ctrl") {
            s.write(q, ctrl as u64);
        }
        let out = run_reversible(&c, &s).unwrap();
        let ctrl_out = c.register("ctrl").map_or(ctrl, |q| out.read(q) == 1);
        (out.read(c.register("a").unwrap()), out.read(c.register("b").unwrap()), ctrl_out)
    }

    #[test]
    fn adder_examples() {
        assert_eq!(run_block(BlockKind::Adder, 3, false, 5, 6).1, 3);
        for b in 0..64 {
            assert_eq!(run_block(BlockKind::Adder, 6, false, 0, b).1, b);
        }
        assert_eq!(BlockKind::Adder.t_count(4), 42);
    }

    #[test]
    fn subtractor_examples() {
        assert_eq!(run_block(BlockKind::Subtractor, 4, false, 3, 1).1, 14);
        for x in 0..16 {
            assert_eq!(run_block(BlockKind::Subtractor, 4, false, 0, x).1, x);
            assert_eq!(run_block(BlockKind::Subtractor, 4, false, x, x).1, 0);
        }
    }

    #[test]
    fn addsub_examples() {
        assert_eq!(run_block(BlockKind::AddSub, 4, true, 2, 7).1, 5);
        assert_eq!(BlockKind::AddSub.t_count(8), 98);
    }

    #[test]
    fn ctrladd_examples() {
        assert_eq!(run_block(BlockKind::CtrlAdd, 4, true, 5, 12).1, 1);
        assert_eq!(run_block(BlockKind::CtrlAdd, 4, false, 5, 12), (5, 12, false));
        assert_eq!(BlockKind::CtrlAdd.t_count(4), 70);
    }

    #[test]
    fn width_one_degenerates() {
        let a = qubits([0]);
        let b = qubits([1]);
        let add = build_adder(&BlockPorts::new(a.clone(), b.clone()).unwrap()).unwrap();
        assert_eq!(add, vec![Gate::cnot(0, 1)]);
        let cadd = build_ctrladd(&BlockPorts::with_ctrl(a, b, QubitId(2)).unwrap()).unwrap();
        assert_eq!(cadd, vec![Gate::toffoli(2, 0, 1)]);
    }

    #[test]
    fn toffoli_counts_are_exact() {
        for n in 1..=12 {
            for kind in BlockKind::ALL {
                let c = standalone(kind, n).unwrap();
                assert_eq!(c.count(GateKind::Toffoli), kind.toffoli_count(n), "{kind} n={n}");
                assert!(c.is_reversible_classical());
            }
        }
    }

    /// The gate sequence drawn for the 4-bit conditional adder, column by
    /// column, on wires `ctrl, b0, a0, b1, a1, b2, a2, b3, a3`.
    #[test]
    fn ctrladd_matches_four_bit_drawing() {
        let (ctrl, b0, a0, b1, a1, b2, a2, b3, a3) = (0, 1, 2, 3, 4, 5, 6, 7, 8);
        let drawn = vec![
            Gate::cnot(a1, b1),
            Gate::cnot(a2, b2),
            Gate::cnot(a3, b3),
            Gate::cnot(a2, a3),
            Gate::cnot(a1, a2),
            Gate::toffoli(b0, a0, a1),
            Gate::toffoli(b1, a1, a2),
            Gate::toffoli(b2, a2, a3),
            Gate::toffoli(ctrl, a3, b3),
            Gate::toffoli(b2, a2, a3),
            Gate::toffoli(ctrl, a2, b2),
            Gate::toffoli(b1, a1, a2),
            Gate::toffoli(ctrl, a1, b1),
            Gate::toffoli(b0, a0, a1),
            Gate::toffoli(ctrl, a0, b0),
            Gate::cnot(a1, a2),
            Gate::cnot(a2, a3),
            Gate::cnot(a1, b1),
            Gate::cnot(a2, b2),
            Gate::cnot(a3, b3),
        ];
        let ports = BlockPorts::with_ctrl(
            qubits([a0, a1, a2, a3]),
            qubits([b0, b1, b2, b3]),
            QubitId(ctrl),
        )
        .unwrap();
        let mut host = Circuit::new(9).unwrap();
        host.extend(drawn.iter().copied()).unwrap();
        assert_eq!(build_ctrladd(&ports).unwrap(), drawn);
    }

    #[test]
    fn port_errors() {
        assert!(matches!(BlockPorts::new(vec![], vec![]), Err(Error::ZeroWidth)));
        assert!(BlockPorts::new(qubits(0..2), qubits(2..5)).is_err());
        assert!(BlockPorts::new(qubits(0..2), qubits(1..3)).is_err());
        assert!(BlockPorts::with_ctrl(qubits(0..2), qubits(2..4), QubitId(1)).is_err());
        let plain = BlockPorts::new(qubits(0..2), qubits(2..4)).unwrap();
        assert!(build_addsub(&plain).is_err());
        assert!(build_ctrladd(&plain).is_err());
        let with = BlockPorts::with_ctrl(qubits(0..2), qubits(2..4), QubitId(4)).unwrap();
        assert!(build_adder(&with).is_err());
        assert!(matches!(standalone(BlockKind::Adder, 0), Err(Error::ZeroWidth)));
    }
}
