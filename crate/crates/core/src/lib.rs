//! Exact combinatorics of the unipotent block of `GL_d(K)` modulo `l` when the
//! multiplicative order of `q` mod `l` equals `d`.
//!
//! The crate classifies the elliptic principal series `pi_I` by strict subsets
//! `I` of the affine simple roots, computes their decomposition matrix,
//! Langlands-Jacquet transfers and Weil-Deligne parameters, models the
//! bigraded cohomology `(R_pi^*, L_pi^*)` with its Lefschetz operator, and
//! checks the identity
//! `(R_pi^*, L_pi^*)^ss = |LJ(pi)| ⊗ (sigma^ss(pi), L(pi))` exhaustively.

pub mod arithmetic;
pub mod cli;
pub mod cohomology;
pub mod combinatorics;
pub mod error;
pub mod ext_spectral;
pub mod grothendieck;
pub mod jacquet_langlands;
pub mod oracle;
pub mod weil_deligne;

pub use error::{Error, Result};
