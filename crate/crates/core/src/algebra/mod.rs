//! The path algebra `CΓ = CQ/I` as finite data.

mod basis;
mod confluence;
mod oracle;
mod rewrite;

pub use basis::{cartan_matrix, hom_basis, CartanMatrix};
pub use confluence::{check_confluence, ConfluenceReport, Divergence};
pub(crate) use confluence::{random_path, trial_rng};
pub use oracle::{cartan_matrix_oracle, exact_rank, EchelonBasis, DEFAULT_PATH_CAP};
pub use rewrite::{inversion_count, is_normal, normal_form, normal_form_with, RewriteSystem};
