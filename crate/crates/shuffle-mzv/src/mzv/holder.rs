//! The convolution engine of record for zeta values.
//!
//! An iterated integral over [0, 1] splits at an intermediate point `z` into
//! a sum over the `|w| + 1` prefix/suffix cuts of the word; the upper piece
//! maps onto [0, 1-z] by the change of variable `t -> 1 - t`, which is the
//! word duality. Both pieces then become polylogarithm series inside the
//! unit interval, so the engine converges geometrically instead of the
//! direct sum's polynomial rate. At the canonical split `z = 1/2` the error
//! shrinks like `2^-N`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::HashMap;

use crate::shuffle::dual_word;
use crate::words::Word;

use super::args::{argstring_to_word, is_admissible, ArgString};
use super::real::PrecReal;
use super::series::polylog_word;
use super::MzvError;

/// Value of the iterated integral of an admissible word over [0, 1],
/// splitting at `z` in (0, 1):
/// `sum over cuts uv = w of polylog(dual(u), 1-z) * polylog(v, z)`.
///
/// Term counts are scaled so either series reaches roughly the accuracy the
/// requested `terms` would give at the canonical point 1/2.
pub fn zeta_holder_at(
    w: &Word,
    z: &BigRational,
    terms: u64,
    prec: u32,
) -> Result<PrecReal, MzvError> {
    if !is_admissible(w) {
        return Err(MzvError::InadmissibleWord);
    }
    if w.is_empty() {
        return Ok(PrecReal::one(prec));
    }
    let one = BigRational::one();
    let complement = &one - z;
    let upper_terms = scaled_terms(&complement, terms)?;
    let lower_terms = scaled_terms(z, terms)?;

    let mut total = PrecReal::zero(prec);
    for cut in 0..=w.len() {
        let upper = dual_word(&w.prefix(cut));
        let lower = w.suffix(cut);
        let upper_value = if upper.is_empty() {
            PrecReal::one(prec)
        } else {
            polylog_word(&upper, &complement, upper_terms, prec)?
        };
        let lower_value = if lower.is_empty() {
            PrecReal::one(prec)
        } else {
            polylog_word(&lower, z, lower_terms, prec)?
        };
        total = total.add(&upper_value.mul(&lower_value));
    }
    Ok(total)
}

/// Term count giving roughly `2^-terms` truncation at series point `x`.
fn scaled_terms(x: &BigRational, terms: u64) -> Result<u64, MzvError> {
    let x_f = num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN);
    if !(x_f > 0.0 && x_f < 1.0) {
        return Err(MzvError::InvalidArguments(format!(
            "split point {} outside (0, 1)",
            x
        )));
    }
    let scale = std::f64::consts::LN_2 / -x_f.ln();
    Ok(((terms as f64) * scale.max(1.0)).ceil() as u64)
}

/// Zeta value of an admissible word via the split at 1/2.
pub fn zeta_holder(w: &Word, terms: u64, prec: u32) -> Result<PrecReal, MzvError> {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    zeta_holder_at(w, &half, terms, prec)
}

/// Zeta value of an argument string via the split at 1/2.
pub fn zeta_args(s: &ArgString, terms: u64, prec: u32) -> Result<PrecReal, MzvError> {
    zeta_holder(&argstring_to_word(s), terms, prec)
}

/// Word-keyed memo of [`zeta_holder`] values at fixed parameters, for the
/// sweeps that revisit the same words many times.
pub struct HolderCache {
    terms: u64,
    prec: u32,
    values: HashMap<Word, PrecReal>,
}

impl HolderCache {
    pub fn new(terms: u64, prec: u32) -> Self {
        HolderCache {
            terms,
            prec,
            values: HashMap::new(),
        }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn zeta(&mut self, w: &Word) -> Result<PrecReal, MzvError> {
        if let Some(value) = self.values.get(w) {
            return Ok(value.clone());
        }
        let value = zeta_holder(w, self.terms, self.prec)?;
        self.values.insert(w.clone(), value.clone());
        Ok(value)
    }
}
