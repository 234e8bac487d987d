//! Invariants of 1-bridge torus knots in S³ and lens spaces, computed exactly
//! from Schubert and Conway normal forms.

pub mod alexander;
pub mod doublecover;
mod error;
pub mod exactalg;
pub mod knotgroup;
pub mod literal;
pub mod mcg;
pub mod schubert;
pub mod sweep;
pub mod word;

pub use error::{Error, Result};
pub use exactalg::{AbelianGroupInvariants, IntMatrix, LaurentPoly};
pub use knotgroup::LensSpace;
pub use mcg::ConwayForm;
pub use schubert::{SchubertForm, Sign};
pub use word::Word;
