//! Clifford+T restoring and non-restoring quantum integer dividers.
//!
//! Circuits are built from four ripple-carry blocks ([`blocks`]) wired into
//! the two dividers ([`dividers`]), lowered to Clifford+T ([`gateir`]),
//! checked exhaustively at small widths ([`sim`]) and costed ([`analyze`],
//! [`baselines`]). [`cli`] backs the `qdiv` binary.

pub mod analyze;
pub mod baselines;
pub mod blocks;
pub mod cli;
pub mod dividers;
pub mod error;
pub mod gateir;
pub mod sim;

pub use error::{Error, Result};
