//! Exact arithmetic in polynomial rings and the quantum affine plane, decision
//! procedures for sided divisibility, and a bounded three-valued evaluator for
//! first-order formulas that define `ℕ`, `ℤ` and power sets inside those rings.

pub mod divisibility;
pub mod cli;
pub mod definitions;
pub mod enumerate;
pub mod formula;
pub mod numeric;
pub mod parse;
pub mod ring;
