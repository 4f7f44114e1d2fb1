//! Exact computer algebra for the question: given a quartic `alpha` with
//! minimal polynomial `x^4 + a x^3 + b x^2 + c x + d`, when is
//! `beta = 4 alpha^4 / (alpha^4 - 1) - alpha / (alpha - 1)` quadratic?
//!
//! Everything is computed over the rationals with no floating point except
//! the root pre-isolation in [`surface::search`], which is always confirmed
//! exactly.

pub mod algebra;
pub mod error;
pub mod esystem;
pub mod families;
pub mod lemma_ec;
pub mod quartic;
pub mod surface;
pub mod verify;

pub use error::{Error, Result};
