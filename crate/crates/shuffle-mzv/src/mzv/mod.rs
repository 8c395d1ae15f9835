//! Numeric evaluation of multiple zeta values and the cyclic-sum apparatus.
//!
//! The engine of record is the convolution split at 1/2 ([`holder`]), backed
//! by fixed-point reals with rigorous error bounds ([`real`]) and the series
//! evaluators ([`series`]). The direct nested sum is retained as an
//! independent low-precision oracle. [`cyclic`] houses the insertion sums,
//! the proved aggregate identities, and the scanner for the open
//! cyclic-insertion statement.

pub mod args;
pub mod checks;
pub mod cyclic;
pub mod holder;
pub mod real;
pub mod series;

use thiserror::Error;

use crate::comp::CompError;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MzvError {
    #[error("divergent arguments: the leading entry must be at least 2")]
    DivergentArguments,
    #[error("word must begin with a and end with b to denote a convergent value")]
    InadmissibleWord,
    #[error("word ends in a: the innermost integrand diverges at zero")]
    DivergentWord,
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error(transparent)]
    Composition(#[from] CompError),
}

pub use args::{argstring_to_word, is_admissible, word_to_argstring, ArgString};
pub use cyclic::{
    cyclic_sum, scan_conjecture, theorem_t_suite, verify_theorem_t, z_closed, z_of, zeta_31_closed,
    ScanOutcome, SCAN_TOL, THEOREM_T_CROSS_TOL, THEOREM_T_SUM_TOL,
};
pub use holder::{zeta_args, zeta_holder, zeta_holder_at, HolderCache};
pub use real::{pi, PrecReal, DEFAULT_PREC};
pub use series::{polylog_half, polylog_word, zeta_direct};

/// Default series truncation: the split engine then converges like `2^-N`.
pub const DEFAULT_TERMS: u64 = 64;
