//! Exact-arithmetic toolkit for classical Yang-Baxter solutions on
//! finite-dimensional anticommutative algebras.
//!
//! The crate verifies CYBE solutions given as tensors over a structure-constant
//! algebra, builds the Drinfeld double of the induced bialgebra, decomposes it
//! into a pair of complementary ideals, and derives the Rota-Baxter operators of
//! weight ±1 that the decomposition carries. Everything is computed over
//! arbitrary-precision rationals; every check is an exact equality.
//!
//! Modules:
//! - [`exactlinalg`]: rational scalars, dense matrices, row reduction.
//! - [`algebra`]: structure-constant algebras and identity checkers.
//! - [`yangbaxter`]: tensors, the switch map, CYBE residuals, comultiplication.
//! - [`double`]: the Drinfeld double, its canonical form and ideal decomposition.
//! - [`rotabaxter`]: Rota-Baxter operators, weight inference, companions.
//! - [`catalog`]: built-in algebras and tensor families with golden outcomes.

pub mod algebra;
pub mod catalog;
pub mod double;
pub mod exactlinalg;
pub mod rotabaxter;
pub mod yangbaxter;

use thiserror::Error;

/// Crate-wide error type.
///
/// `Input` covers malformed files, dimension mismatches and unbound
/// parameters; `CheckFailed` covers mathematical preconditions that did not
/// hold (a tensor that is not a CYBE solution, a skew input to the
/// decomposition, and so on). The CLI maps `Input` to exit code 2 and
/// `CheckFailed` to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
