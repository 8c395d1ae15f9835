//! Argument strings of nested zeta sums and their word form.
//!
//! A convergent argument string `(s_1, ..., s_k)` has positive integer
//! entries with `s_1 >= 2`; the empty string is allowed and evaluates to 1.
//! Words over {a, b} that begin with `a` and end with `b` (or are empty) are
//! called admissible and correspond to argument strings through
//! `w = prod_j a^{s_j - 1} b`; the word length equals the depth `sum s_j`.

use std::fmt;

use crate::words::{Letter, Word};

use super::MzvError;

const A: Letter = Letter(0);
const B: Letter = Letter(1);

/// Arguments `(s_1, ..., s_k)` of a convergent nested zeta sum.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArgString(Vec<u32>);

impl ArgString {
    /// Validate and build: every entry positive, first entry at least 2.
    pub fn new(args: Vec<u32>) -> Result<Self, MzvError> {
        if args.contains(&0) {
            return Err(MzvError::InvalidArguments(
                "arguments must be positive integers".into(),
            ));
        }
        if let Some(&first) = args.first() {
            if first < 2 {
                return Err(MzvError::DivergentArguments);
            }
        }
        Ok(ArgString(args))
    }

    /// The empty argument string, value exactly 1.
    pub fn empty() -> Self {
        ArgString(Vec::new())
    }

    pub fn args(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Depth: the sum of the arguments, also the length of the word form.
    pub fn depth(&self) -> u64 {
        self.0.iter().map(|&s| s as u64).sum()
    }

    /// Parse a comma-separated list like `"3,1"`. Whitespace is ignored; an
    /// empty input gives the empty string.
    pub fn parse(text: &str) -> Result<Self, MzvError> {
        let trimmed: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if trimmed.is_empty() {
            return Ok(Self::empty());
        }
        let mut args = Vec::new();
        for piece in trimmed.split(',') {
            let value: u32 = piece.parse().map_err(|_| {
                MzvError::InvalidArguments(format!("cannot parse argument '{}'", piece))
            })?;
            args.push(value);
        }
        Self::new(args)
    }
}

impl fmt::Display for ArgString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Whether a word is admissible: empty, or starting with `a` and ending with
/// `b` over {a, b}.
pub fn is_admissible(w: &Word) -> bool {
    w.is_empty() || (w.first() == Some(A) && w.last() == Some(B))
}

/// Decompose any word ending in `b` (or empty) into exponents: the word
/// `prod_j a^{e_j} b` yields `(e_1 + 1, ..., e_k + 1)`, so leading `b`s give
/// entries equal to 1. Errors when the word ends in `a` (the innermost form
/// then diverges at zero).
pub fn word_exponents(w: &Word) -> Result<Vec<u32>, MzvError> {
    if w.is_empty() {
        return Ok(Vec::new());
    }
    if w.last() != Some(B) {
        return Err(MzvError::DivergentWord);
    }
    let mut exponents = Vec::new();
    let mut run = 0u32;
    for &letter in w.letters() {
        if letter == A {
            run += 1;
        } else {
            exponents.push(run + 1);
            run = 0;
        }
    }
    Ok(exponents)
}

/// Arguments of an admissible word.
pub fn word_to_argstring(w: &Word) -> Result<ArgString, MzvError> {
    if !is_admissible(w) {
        return Err(MzvError::InadmissibleWord);
    }
    ArgString::new(word_exponents(w)?)
}

/// The admissible word `prod_j a^{s_j - 1} b` of an argument string.
pub fn argstring_to_word(s: &ArgString) -> Word {
    let mut letters = Vec::with_capacity(s.depth() as usize);
    for &arg in s.args() {
        letters.extend(std::iter::repeat_n(A, arg as usize - 1));
        letters.push(B);
    }
    Word::from_letters(letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_word, Alphabet};

    fn w(text: &str) -> Word {
        parse_word(text, &Alphabet::ab()).unwrap()
    }

    fn s(args: &[u32]) -> ArgString {
        ArgString::new(args.to_vec()).unwrap()
    }

    #[test]
    fn word_correspondence_examples() {
        assert_eq!(word_to_argstring(&w("aab")).unwrap(), s(&[3]));
        assert_eq!(word_to_argstring(&w("aabb")).unwrap(), s(&[3, 1]));
        assert_eq!(word_to_argstring(&w("abab")).unwrap(), s(&[2, 2]));
        assert_eq!(argstring_to_word(&s(&[3])), w("aab"));
        assert_eq!(argstring_to_word(&s(&[3, 1])), w("aabb"));
        assert_eq!(argstring_to_word(&s(&[2, 2])), w("abab"));
        assert_eq!(argstring_to_word(&ArgString::empty()), Word::empty());
    }

    #[test]
    fn depth_is_word_length() {
        for args in [vec![2u32], vec![3, 1], vec![2, 3, 1], vec![4, 1, 1]] {
            let arg_string = s(&args);
            assert_eq!(
                arg_string.depth() as usize,
                argstring_to_word(&arg_string).len()
            );
        }
    }

    #[test]
    fn round_trip_on_admissible_words() {
        use crate::words::words_up_to;
        for word in words_up_to(&Alphabet::ab(), 8) {
            if is_admissible(&word) && !word.is_empty() {
                let args = word_to_argstring(&word).unwrap();
                assert_eq!(argstring_to_word(&args), word);
            }
        }
    }

    #[test]
    fn rejects_divergent_leading_one() {
        assert_eq!(
            ArgString::new(vec![1, 2]),
            Err(MzvError::DivergentArguments)
        );
        assert_eq!(
            word_to_argstring(&w("bab")),
            Err(MzvError::InadmissibleWord)
        );
    }

    #[test]
    fn rejects_zero_and_garbage() {
        assert!(matches!(
            ArgString::new(vec![2, 0]),
            Err(MzvError::InvalidArguments(_))
        ));
        assert!(matches!(
            ArgString::parse("2,x"),
            Err(MzvError::InvalidArguments(_))
        ));
    }

    #[test]
    fn parses_comma_lists() {
        assert_eq!(ArgString::parse("3,1").unwrap(), s(&[3, 1]));
        assert_eq!(ArgString::parse(" 2 , 2 ").unwrap(), s(&[2, 2]));
        assert_eq!(ArgString::parse("").unwrap(), ArgString::empty());
    }

    #[test]
    fn exponents_allow_leading_b() {
        // b-led words are fine for series at x < 1: each leading b is a 1.
        assert_eq!(word_exponents(&w("bab")).unwrap(), vec![1, 2]);
        assert_eq!(word_exponents(&w("bb")).unwrap(), vec![1, 1]);
        assert_eq!(word_exponents(&w("ba")), Err(MzvError::DivergentWord));
    }
}
