//! Finite-field arithmetic for the tower GF(p) ⊆ GF(q) ⊆ GF(q^n).

mod base;
mod tower;

pub use base::{BaseField, Fq};
pub use tower::{FieldElement, FieldTower, Level, DEFAULT_DLOG_BOUND};
