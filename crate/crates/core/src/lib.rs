//! Exact Weingarten calculus for the unitary and orthogonal groups via
//! Jucys–Murphy elements.
//!
//! Layers, bottom up: [`symcore`] (partitions, permutations, tableaux,
//! pairings), [`coeff`] (exact rationals and rational functions in the
//! dimension parameter `t`), [`groupalg`] (sparse `C[S_n]`), [`young`]
//! (characters and idempotents), then the two group-specific modules
//! [`unitary`] and [`orthogonal`], and the verification [`suites`].

pub mod coeff;
pub mod error;
pub mod groupalg;
pub mod matrix;
pub mod orthogonal;
pub mod report;
pub mod suites;
pub mod symcore;
pub mod table;
pub mod unitary;
pub mod young;

pub use error::{Result, WgError};
