//! Exact computations in higher Auslander–Reiten theory for bound quiver
//! algebras over prime fields.

pub mod algebra;
pub mod artheory;
pub mod approx;
pub mod dexact;
pub mod error;
pub mod exactlin;
pub mod homological;
pub mod repcat;

pub use error::{Error, Result};
