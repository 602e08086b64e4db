//! Exact construction and verification of exceptional number fields.

pub mod arith;
pub mod bigpoly;
pub mod cli;
pub mod error;
pub mod families;
mod fp;
pub mod galois4;
pub mod irreducibility;
pub mod monodisc;
pub mod numberfield;
pub mod quadsub;
pub mod realroots;
pub mod report;

pub use bigpoly::{IntPoly, RatPoly};
pub use error::{Error, Result};
