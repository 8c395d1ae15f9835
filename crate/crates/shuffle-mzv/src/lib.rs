//! Exact shuffle-algebra arithmetic and high-precision multiple zeta values.
//!
//! The crate has two halves that meet in the middle:
//!
//! - an exact symbolic engine for the rational noncommutative polynomial
//!   ring under concatenation and shuffle products ([`words`], [`poly`],
//!   [`shuffle`]), with the classical identities it satisfies checked with
//!   zero tolerance ([`lie`], [`basis`]);
//! - a configurable-precision numeric evaluator for multiple zeta values and
//!   multiple polylogarithms ([`mzv`]), built on the convolution that splits
//!   an iterated integral at 1/2, which converges geometrically.
//!
//! Start with the runnable demos in `examples/`, or the `shuffle-mzv` binary
//! for the command-line surface.

pub mod arith;
pub mod basis;
pub mod cli;
pub mod comp;
pub mod lie;
pub mod mzv;
pub mod poly;
pub mod report;
pub mod shuffle;
pub mod words;

pub use poly::{NcPoly, Rational};
pub use words::{Alphabet, Letter, Word};
