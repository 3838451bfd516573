//! Exact signature conjugation of rational matrices.
//!
//! For a sign vector `c ∈ {−1, +1}^n` with `c_1 = +1`, the map
//! `φ_c(A)_ij = c_i · a_ij · c_j` is conjugation by `diag(c)`. This crate
//! computes it over exact rationals together with the quantities it
//! preserves ([`invariants`]), the group the maps form ([`group`]), the
//! split into fixed and negated parts ([`decomposition`]), the block forms
//! those parts are permutation similar to ([`blockform`]), and the orbit of a
//! matrix under all maps ([`orbit`]). Every identity is checked with exact
//! equality; there is no floating point anywhere.
//!
//! The `parallel` feature (on by default) lets the subset sums, Ryser
//! permanents and orbit enumeration fan out over a rayon pool sized by
//! [`Config::threads`]. Results do not depend on the thread count.

pub mod blockform;
pub mod cli;
pub mod config;
pub mod decomposition;
pub mod error;
pub mod group;
pub mod invariants;
pub mod matrix;
pub mod orbit;
mod par;
pub mod permutation;
pub mod polynomial;
pub mod scalar;
pub mod signs;

pub use config::Config;
pub use error::{Error, Result};
pub use matrix::{matrix_product, Matrix};
pub use permutation::Permutation;
pub use polynomial::Polynomial;
pub use scalar::Scalar;
pub use signs::{apply_phi, conjugate_by_signature, parse_sign_vector, signature_matrix, SignVector};
