//! Exact arithmetic over the tower of leveled hyperoperation semirings.
//!
//! Layers, bottom up:
//! - [`kernel`]: naturals, regular hyperoperations, `E`/`L`, tetration.
//! - [`leveled`]: `(N̂ⁿ, Fₙ, Fₙ₊₁)` in logarithmic coordinates.
//! - [`hereditary`]: hereditary power-series codec over those semirings.
//! - [`paths`]: path-indexed Peano systems and their hyperoperations.
//! - [`integers`] / [`fields`]: inverse completion and quotient fields.
//! - [`embedding`]: floating-point images under `exp_ω`.
//! - [`laws`]: seedable law suites; [`expr`]: the expression language.

pub mod embedding;
pub mod error;
pub mod expr;
pub mod fields;
pub mod hereditary;
pub mod integers;
pub mod kernel;
pub mod laws;
pub mod leveled;
pub mod paths;

pub use error::{Error, Result};
pub use kernel::{Budget, Natural};
pub use fields::LeveledRat;
pub use integers::{LeveledInt, NatPair};
pub use leveled::LeveledNat;
