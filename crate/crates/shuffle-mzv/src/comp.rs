//! Ordered integer compositions and their correspondence with two-letter
//! words.
//!
//! A composition here is an ordered tuple of non-negative integers. The set
//! of compositions of `k` into `r` parts has `C(k+r-1, r-1)` elements and is
//! always enumerated in lexicographic order. Compositions with an odd number
//! of parts `2n+1` are in bijection with the words of the subsum `T_{m,n}`
//! (`m` = sum + 2n) through [`phi`]; [`phi_inv`] recovers the composition.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::binomial;
use crate::words::{Letter, Word};

/// Default cap on how many compositions an enumeration may produce.
pub const COMPOSITION_CAP: u64 = 1_000_000;

const A: Letter = Letter(0);
const B: Letter = Letter(1);

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CompError {
    #[error("composition must have an odd number of parts, got {0}")]
    EvenPartCount(usize),
    #[error("word is not of the block form (ab)^m0 prod (aab)(ab)^m' b (ab)^m''")]
    NotInImage,
    #[error("enumeration of {count} compositions exceeds cap {cap}")]
    CapExceeded { count: BigInt, cap: u64 },
}

/// An ordered tuple of non-negative integer parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<u64>);

impl Composition {
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(!parts.is_empty(), "a composition has at least one part");
        Composition(parts)
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// Sum of the parts.
    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Rotate parts left by `j` places.
    pub fn rotate_left(&self, j: usize) -> Composition {
        let r = self.0.len();
        let j = j % r;
        let mut parts = Vec::with_capacity(r);
        parts.extend_from_slice(&self.0[j..]);
        parts.extend_from_slice(&self.0[..j]);
        Composition(parts)
    }

    /// All cyclic rotations, starting with the composition itself.
    pub fn rotations(&self) -> Vec<Composition> {
        (0..self.0.len()).map(|j| self.rotate_left(j)).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{}", self)
    }
}

/// All compositions of `k` into `r` parts, lexicographically ordered,
/// refusing when the count `C(k+r-1, r-1)` exceeds `cap`.
pub fn compositions_capped(k: u64, r: usize, cap: u64) -> Result<Vec<Composition>, CompError> {
    assert!(r >= 1, "compositions need at least one part");
    let count = binomial(k + r as u64 - 1, r as u64 - 1);
    if count > BigInt::from(cap) {
        return Err(CompError::CapExceeded { count, cap });
    }
    let mut out = Vec::new();
    let mut parts = vec![0u64; r];
    fill(k, 0, &mut parts, &mut out);
    Ok(out)
}

fn fill(remaining: u64, pos: usize, parts: &mut Vec<u64>, out: &mut Vec<Composition>) {
    if pos + 1 == parts.len() {
        parts[pos] = remaining;
        out.push(Composition(parts.clone()));
        return;
    }
    for value in 0..=remaining {
        parts[pos] = value;
        fill(remaining - value, pos + 1, parts, out);
    }
}

/// [`compositions_capped`] at the default cap.
pub fn compositions(k: u64, r: usize) -> Result<Vec<Composition>, CompError> {
    compositions_capped(k, r, COMPOSITION_CAP)
}

fn push_ab_pairs(letters: &mut Vec<Letter>, count: u64) {
    for _ in 0..count {
        letters.push(A);
        letters.push(B);
    }
}

/// The word `(ab)^m0 prod_{k=1..n} (aab)(ab)^{m_{2k-1}} b (ab)^{m_{2k}}`
/// attached to a composition with `2n+1` parts.
///
/// This is a bijection onto the words of `T_{m,n}` where `m` is the part sum
/// plus `2n`; [`phi_inv`] inverts it.
pub fn phi(c: &Composition) -> Result<Word, CompError> {
    if c.len().is_multiple_of(2) {
        return Err(CompError::EvenPartCount(c.len()));
    }
    let parts = c.parts();
    let n = (c.len() - 1) / 2;
    let mut letters = Vec::new();
    push_ab_pairs(&mut letters, parts[0]);
    for k in 1..=n {
        letters.extend_from_slice(&[A, A, B]);
        push_ab_pairs(&mut letters, parts[2 * k - 1]);
        letters.push(B);
        push_ab_pairs(&mut letters, parts[2 * k]);
    }
    Ok(Word::from_letters(letters))
}

/// Recover the composition from a word in the image of [`phi`].
pub fn phi_inv(w: &Word) -> Result<Composition, CompError> {
    let ls = w.letters();
    let len = ls.len();
    let mut parts = Vec::new();
    let mut i = 0;

    // Leading run of ab pairs; an aa ahead opens the first block.
    let mut run = 0u64;
    while i + 1 < len && ls[i] == A && ls[i + 1] == B {
        run += 1;
        i += 2;
    }
    if i < len && !(i + 1 < len && ls[i] == A && ls[i + 1] == A) {
        return Err(CompError::NotInImage);
    }
    parts.push(run);

    while i < len {
        // aab
        if !(i + 2 < len && ls[i] == A && ls[i + 1] == A && ls[i + 2] == B) {
            return Err(CompError::NotInImage);
        }
        i += 3;
        // (ab)^m' up to the closing b
        let mut inner = 0u64;
        while i < len && ls[i] == A {
            if i + 1 < len && ls[i + 1] == B {
                inner += 1;
                i += 2;
            } else {
                return Err(CompError::NotInImage);
            }
        }
        if i >= len || ls[i] != B {
            return Err(CompError::NotInImage);
        }
        i += 1;
        parts.push(inner);
        // trailing run of ab pairs until the next aa block or the end
        let mut tail = 0u64;
        while i + 1 < len && ls[i] == A && ls[i + 1] == B {
            tail += 1;
            i += 2;
        }
        if i < len && !(i + 1 < len && ls[i] == A && ls[i + 1] == A) {
            return Err(CompError::NotInImage);
        }
        parts.push(tail);
    }
    Ok(Composition(parts))
}
