//! Cyclic quotient singularities `C^n / G`, `G = <diag(ζ^{a_1}, ..., ζ^{a_n})>`,
//! their McKay quivers, and the quiver with relations `Γ(a_1, ..., a_n)`
//! obtained by deleting `rho_0` and the arrows that wrap around.
//!
//! The crate builds every finite object involved and checks, exactly, that
//! the path algebra `CΓ` is the total morphism algebra of
//! `(O(1), ..., O(N-1))` with `Hom(O(i), O(j)) = R_{j-i}`.

pub mod algebra;
pub mod checks;
pub mod cli;
pub mod error;
pub mod grading;
pub mod mckay;
pub mod parallel;
pub mod quiver;
pub mod sweep;

pub use error::{Error, Result};
pub use grading::{Monomial, WeightVector};
