//! Noncommutative polynomials with exact rational coefficients.
//!
//! An [`NcPoly`] is a finitely supported map from words to rationals, kept in
//! canonical sparse form: zero coefficients are never stored and terms are
//! ordered length-lexicographically, so equality is plain map equality and
//! rendering is deterministic. Coefficients are exact rationals throughout;
//! the symbolic identities this crate checks hold with zero tolerance.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::words::{Alphabet, Word};

/// Exact rational coefficient type. Canonical form (positive denominator,
/// reduced fraction) is maintained by the arithmetic itself.
pub type Rational = BigRational;

/// Rational from an integer pair; panics on zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operands live over different alphabets")]
    AlphabetMismatch,
}

/// An element of the rational noncommutative polynomial ring over an alphabet.
#[derive(Clone, PartialEq, Eq)]
pub struct NcPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Rational>,
}

impl NcPoly {
    /// The zero polynomial (empty support).
    pub fn zero(alphabet: &Alphabet) -> Self {
        NcPoly {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative identity: 1 times the empty word.
    pub fn one(alphabet: &Alphabet) -> Self {
        Self::monomial(alphabet, Word::empty(), Rational::one())
    }

    /// A single word with coefficient 1.
    pub fn word(alphabet: &Alphabet, word: Word) -> Self {
        Self::monomial(alphabet, word, Rational::one())
    }

    /// `coefficient * word`; a zero coefficient yields the zero polynomial.
    pub fn monomial(alphabet: &Alphabet, word: Word, coefficient: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(word, coefficient);
        }
        NcPoly {
            alphabet: alphabet.clone(),
            terms,
        }
    }

    /// Build from an iterator of `(word, coefficient)` pairs, summing repeats
    /// and dropping zeros.
    pub fn from_terms(
        alphabet: &Alphabet,
        terms: impl IntoIterator<Item = (Word, Rational)>,
    ) -> Self {
        let mut poly = Self::zero(alphabet);
        for (word, coefficient) in terms {
            poly.add_term(word, coefficient);
        }
        poly
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of words in the support.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (length-lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of a word (zero if absent).
    pub fn coefficient(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sum of all coefficients.
    pub fn coefficient_mass(&self) -> Rational {
        self.terms.values().sum()
    }

    /// Add `coefficient * word` in place, restoring canonical form.
    pub fn add_term(&mut self, word: Word, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_alphabet(&self, other: &NcPoly) -> Result<(), PolyError> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(PolyError::AlphabetMismatch)
        }
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &NcPoly) -> Result<NcPoly, PolyError> {
        self.check_alphabet(other)?;
        let mut result = self.clone();
        for (word, coefficient) in &other.terms {
            result.add_term(word.clone(), coefficient.clone());
        }
        Ok(result)
    }

    /// Coefficient-wise difference.
    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly, PolyError> {
        self.check_alphabet(other)?;
        let mut result = self.clone();
        for (word, coefficient) in &other.terms {
            result.add_term(word.clone(), -coefficient.clone());
        }
        Ok(result)
    }

    /// Scalar multiple; scaling by zero gives the zero polynomial.
    pub fn scale(&self, scalar: &Rational) -> NcPoly {
        if scalar.is_zero() {
            return Self::zero(&self.alphabet);
        }
        NcPoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * scalar))
                .collect(),
        }
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(&-Rational::one())
    }

    /// Bilinear extension of word concatenation. The identity element is
    /// `NcPoly::one`.
    pub fn concat(&self, other: &NcPoly) -> Result<NcPoly, PolyError> {
        self.check_alphabet(other)?;
        let mut result = Self::zero(&self.alphabet);
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                result.add_term(u.concat(v), cu * cv);
            }
        }
        Ok(result)
    }

    /// Left-multiply every word by a fixed word.
    pub fn prepend_word(&self, prefix: &Word) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (prefix.concat(w), c.clone()))
                .collect(),
        }
    }

    /// Apply a word map linearly. The map must be injective on the support or
    /// images are summed, which is the correct linear extension either way.
    pub fn map_words(&self, target: &Alphabet, f: impl Fn(&Word) -> Word) -> NcPoly {
        let mut result = Self::zero(target);
        for (word, coefficient) in &self.terms {
            result.add_term(f(word), coefficient.clone());
        }
        result
    }

    /// Render in canonical order as `coef*word` terms joined by ` + ` / ` - `.
    ///
    /// Unit coefficients print the bare word, the empty word prints as `1`,
    /// and the zero polynomial prints as `0`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (word, coefficient)) in self.terms.iter().enumerate() {
            let magnitude = coefficient.abs();
            if i == 0 {
                if coefficient.is_negative() {
                    out.push('-');
                }
            } else if coefficient.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let word_text = word.render(&self.alphabet);
            if word_text.is_empty() {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&word_text);
            } else {
                out.push_str(&format!("{}*{}", magnitude, word_text));
            }
        }
        out
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly({})", self.render())
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}
