//! Restoring and non-restoring integer dividers.
//!
//! Both dividers work on three registers `Q`, `R`, `B` and use no ancillae.
//! Each iteration views a window of `Q` and `R` qubits as one `n`-qubit
//! operand `Y` (a list of ids, never a data move) and applies blocks from
//! [`crate::blocks`] with `B` as the unchanged operand.
//!
//! Register allocation: `Q` on qubits `0..n`, `R` next, `B` last.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::blocks::{build_addsub, build_ctrladd, build_subtractor, BlockPorts};
use crate::error::{Error, Result};
use crate::gateir::{qubits, BasisState, Circuit, Gate, QubitId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DividerKind {
    #[serde(rename = "restoring")]
    Restoring,
    #[serde(rename = "nonrestoring")]
    NonRestoring,
}

impl DividerKind {
    pub const ALL: [DividerKind; 2] = [DividerKind::Restoring, DividerKind::NonRestoring];

    pub fn name(self) -> &'static str {
        match self {
            DividerKind::Restoring => "restoring",
            DividerKind::NonRestoring => "nonrestoring",
        }
    }

    /// `3n` or `3n - 1`.
    pub fn qubit_count(self, n: usize) -> usize {
        match self {
            DividerKind::Restoring => 3 * n,
            DividerKind::NonRestoring => 3 * n - 1,
        }
    }

    /// `35n^2 - 28n` or `14n^2 + 7n - 35`.
    pub fn t_count(self, n: usize) -> u64 {
        let n = n as u64;
        match self {
            DividerKind::Restoring => 35 * n * n - 28 * n,
            DividerKind::NonRestoring => 14 * n * n + 7 * n - 35,
        }
    }

    pub fn build(self, n: usize) -> Result<(Circuit, DividerLayout)> {
        match self {
            DividerKind::Restoring => build_restoring(n),
            DividerKind::NonRestoring => build_nonrestoring(n),
        }
    }
}

impl fmt::Display for DividerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// One of the two working registers that can hold a logical output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegisterName {
    Q,
    R,
}

impl fmt::Display for RegisterName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegisterName::Q => "Q",
            RegisterName::R => "R",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DividerLayout {
    pub kind: DividerKind,
    pub n: usize,
    pub q: Vec<QubitId>,
    pub r: Vec<QubitId>,
    pub b: Vec<QubitId>,
    /// Physical register holding the quotient when the circuit ends.
    pub quotient_source: RegisterName,
    pub remainder_source: RegisterName,
}

impl DividerLayout {
    fn new(kind: DividerKind, n: usize) -> Self {
        let r_width = match kind {
            DividerKind::Restoring => n,
            DividerKind::NonRestoring => n - 1,
        };
        // The restoring circuit writes quotient bit q_{n-i} onto R_{n-i} and
        // leaves the final partial remainder in Q, the reverse of the
        // register names. `sim::verify_divider` rediscovers both by sweep.
        let (quotient_source, remainder_source) = match kind {
            DividerKind::Restoring => (RegisterName::R, RegisterName::Q),
            DividerKind::NonRestoring => (RegisterName::Q, RegisterName::R),
        };
        DividerLayout {
            kind,
            n,
            q: qubits(0..n),
            r: qubits(n..n + r_width),
            b: qubits(n + r_width..2 * n + r_width),
            quotient_source,
            remainder_source,
        }
    }

    pub fn qubit_count(&self) -> usize {
        self.q.len() + self.r.len() + self.b.len()
    }

    pub fn register(&self, name: RegisterName) -> &[QubitId] {
        match name {
            RegisterName::Q => &self.q,
            RegisterName::R => &self.r,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&LayoutDoc::from(self)).expect("layout serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: LayoutDoc = serde_json::from_str(text)?;
        Ok(DividerLayout {
            kind: doc.kind,
            n: doc.n,
            q: doc.q.into_iter().map(QubitId).collect(),
            r: doc.r.into_iter().map(QubitId).collect(),
            b: doc.b.into_iter().map(QubitId).collect(),
            quotient_source: doc.quotient_source,
            remainder_source: doc.remainder_source,
        })
    }

    fn circuit(&self) -> Result<Circuit> {
        let mut c = Circuit::new(self.qubit_count())?;
        c.add_register("Q", self.q.clone())?;
        c.add_register("R", self.r.clone())?;
        c.add_register("B", self.b.clone())?;
        Ok(c)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LayoutDoc {
    kind: DividerKind,
    n: usize,
    q: Vec<usize>,
    r: Vec<usize>,
    b: Vec<usize>,
    quotient_source: RegisterName,
    remainder_source: RegisterName,
}

impl From<&DividerLayout> for LayoutDoc {
    fn from(l: &DividerLayout) -> Self {
        let ids = |v: &[QubitId]| v.iter().map(|q| q.0).collect();
        LayoutDoc {
            kind: l.kind,
            n: l.n,
            q: ids(&l.q),
            r: ids(&l.r),
            b: ids(&l.b),
            quotient_source: l.quotient_source,
            remainder_source: l.remainder_source,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionResult {
    pub quotient: u64,
    pub remainder: u64,
    pub b_out: u64,
}

impl DivisionResult {
    /// Division by zero is outside the verified domain; whatever the
    /// circuit left in the output registers is reported as-is.
    pub fn divisor_was_zero(&self) -> bool {
        self.b_out == 0
    }
}

fn check_width(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::DividerTooNarrow(n));
    }
    Ok(())
}

/// Restoring divider on `3n` qubits.
///
/// For `i = 1 ..= n`, with `Y = Q[n-i..n] ++ R[0..n-i]` (so `Y_{n-1}` is the
/// sign of the trial difference) and flag qubit `R_{n-i}`:
///
/// 1. `Y -= B`
/// 2. `R_{n-i} ^= Y_{n-1}`
/// 3. if `R_{n-i}`: `Y += B`
/// 4. `X(R_{n-i})`
///
/// The last iteration (`i = n`) has `Y = Q` and flag `R_0`.
pub fn build_restoring(n: usize) -> Result<(Circuit, DividerLayout)> {
    check_width(n)?;
    let layout = DividerLayout::new(DividerKind::Restoring, n);
    let mut c = layout.circuit()?;
    let (q, r, b) = (&layout.q, &layout.r, &layout.b);
    for i in 1..=n {
        let y: Vec<QubitId> = q[n - i..].iter().chain(&r[..n - i]).copied().collect();
        let flag = r[n - i];
        c.extend(build_subtractor(&BlockPorts::new(b.clone(), y.clone())?)?)?;
        c.append(Gate::cnot(y[n - 1], flag))?;
        c.extend(build_ctrladd(&BlockPorts::with_ctrl(b.clone(), y, flag)?)?)?;
        c.append(Gate::x(flag))?;
    }
    Ok((c, layout))
}

/// Non-restoring divider on `3n - 1` qubits.
///
/// 1. `Q -= B`
/// 2. for `i = 1 .. n`: `X(Q_{n-i})`, then with
///    `Y = R[n-1-i..n-1] ++ Q[0..n-i]`, `Y -= B` if `Q_{n-i}` else `Y += B`
/// 3. if `Q_0`: `R += B[0..n-1]` (width `n - 1`), then `X(Q_0)`
pub fn build_nonrestoring(n: usize) -> Result<(Circuit, DividerLayout)> {
    check_width(n)?;
    let layout = DividerLayout::new(DividerKind::NonRestoring, n);
    let mut c = layout.circuit()?;
    let (q, r, b) = (&layout.q, &layout.r, &layout.b);
    c.extend(build_subtractor(&BlockPorts::new(b.clone(), q.clone())?)?)?;
    for i in 1..n {
        let sel = q[n - i];
        c.append(Gate::x(sel))?;
        let y: Vec<QubitId> = r[n - 1 - i..].iter().chain(&q[..n - i]).copied().collect();
        c.extend(build_addsub(&BlockPorts::with_ctrl(b.clone(), y, sel)?)?)?;
    }
    let fix = BlockPorts::with_ctrl(b[..n - 1].to_vec(), r.clone(), q[0])?;
    c.extend(build_ctrladd(&fix)?)?;
    c.append(Gate::x(q[0]))?;
    Ok((c, layout))
}

/// Loads operands; both must have a clear most significant bit, `b >= 1`.
///
/// Restoring: `Q = a`, `R = 0`, `B = b`. Non-restoring: `Q_0 = a_{n-1}`,
/// `R_i = a_i` for `i < n-1`, `B = b`.
pub fn encode_inputs(layout: &DividerLayout, a: u64, b: u64) -> Result<BasisState> {
    let n = layout.n;
    if n > 64 {
        return Err(Error::WidthTooLarge(n));
    }
    let limit = 1u64 << (n - 1);
    if a >= limit {
        return Err(Error::OperandDomain { name: "a", value: a, min: 0, max: limit, n });
    }
    if b == 0 || b >= limit {
        return Err(Error::OperandDomain { name: "b", value: b, min: 1, max: limit, n });
    }
    Ok(encode_unchecked(layout, a, b))
}

/// Like [`encode_inputs`] without the domain check; bits above the register
/// widths are dropped. Used to probe behaviour outside the verified domain.
pub fn encode_unchecked(layout: &DividerLayout, a: u64, b: u64) -> BasisState {
    let n = layout.n;
    let mut s = BasisState::zeros(layout.qubit_count());
    match layout.kind {
        DividerKind::Restoring => s.write(&layout.q, a),
        DividerKind::NonRestoring => {
            s.write(&layout.r, a);
            s.set(layout.q[0], a >> (n - 1) & 1 == 1);
        }
    }
    s.write(&layout.b, b);
    s
}

pub fn decode_outputs(layout: &DividerLayout, state: &BasisState) -> DivisionResult {
    DivisionResult {
        quotient: state.read(layout.register(layout.quotient_source)),
        remainder: state.read(layout.register(layout.remainder_source)),
        b_out: state.read(&layout.b),
    }
}
