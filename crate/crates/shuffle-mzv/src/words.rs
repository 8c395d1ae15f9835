//! Alphabets, letters and words: the free monoid underneath everything else.
//!
//! A [`Word`] is a plain sequence of letter indices and carries no reference
//! to its alphabet; the [`Alphabet`] is only consulted when parsing, printing,
//! or combining polynomials. Words order length-lexicographically so that
//! rendered output is reproducible bit-for-bit.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// A finite alphabet of single-character letter names.
///
/// Cloning is cheap (shared storage); two alphabets compare equal when their
/// letter names match position for position.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Arc<Vec<char>>,
}

impl Alphabet {
    /// Build an alphabet from its letter names. Names must be distinct.
    pub fn new(names: &[char]) -> Self {
        let mut seen = names.to_vec();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), names.len(), "alphabet letters must be distinct");
        assert!(names.len() <= u8::MAX as usize + 1, "alphabet too large");
        Alphabet {
            names: Arc::new(names.to_vec()),
        }
    }

    /// Parse an alphabet from a string of letter names, e.g. `"ab"`.
    pub fn from_str_names(names: &str) -> Self {
        let chars: Vec<char> = names.chars().collect();
        Self::new(&chars)
    }

    /// The two-letter alphabet {a, b} used for multiple zeta value words.
    pub fn ab() -> Self {
        Self::new(&['a', 'b'])
    }

    /// The three-letter alphabet {a, b, c}.
    pub fn abc() -> Self {
        Self::new(&['a', 'b', 'c'])
    }

    /// The two-letter alphabet {b, c}, the target of the letter-shift map.
    pub fn bc() -> Self {
        Self::new(&['b', 'c'])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// All letters of this alphabet in declaration order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len()).map(|i| Letter(i as u8))
    }

    pub fn name(&self, letter: Letter) -> char {
        self.names[letter.0 as usize]
    }

    pub fn letter_of(&self, name: char) -> Option<Letter> {
        self.names
            .iter()
            .position(|&c| c == name)
            .map(|i| Letter(i as u8))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({})", self.names.iter().collect::<String>())
    }
}

/// A letter, stored as an index into its alphabet.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(pub u8);

/// A word over some alphabet: a finite, possibly empty, sequence of letters.
///
/// The empty word is the monoid identity. `Ord` is length-lexicographic:
/// shorter words sort first, ties broken letter by letter.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// Word from raw letter indices, e.g. `Word::from_indices(&[0, 0, 1])` = aab.
    pub fn from_indices(indices: &[u8]) -> Self {
        Word(indices.iter().copied().map(Letter).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The word repeated `k` times; `k = 0` gives the empty word.
    pub fn pow(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.0);
        }
        Word(letters)
    }

    /// Prefix of the first `i` letters.
    pub fn prefix(&self, i: usize) -> Word {
        Word(self.0[..i].to_vec())
    }

    /// Suffix starting at position `i`.
    pub fn suffix(&self, i: usize) -> Word {
        Word(self.0[i..].to_vec())
    }

    /// The reversed word.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Prepend a single letter.
    pub fn prepended(&self, letter: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }

    /// Append a single letter.
    pub fn appended(&self, letter: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.extend_from_slice(&self.0);
        letters.push(letter);
        Word(letters)
    }

    /// Number of positions `i` with `w[i] == w[i+1] == letter`.
    ///
    /// Overlapping occurrences count once per index, so `aaa` contains the
    /// square `aa` twice.
    pub fn square_count(&self, letter: Letter) -> usize {
        self.0
            .windows(2)
            .filter(|pair| pair[0] == letter && pair[1] == letter)
            .count()
    }

    /// Number of occurrences of a single letter.
    pub fn letter_count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Render using an alphabet's letter names. The empty word renders as `""`
    /// at this level; polynomial rendering handles the `1` convention.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.0.iter().map(|&l| alphabet.name(l)).collect()
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[")?;
        for l in &self.0 {
            write!(f, "{}", l.0)?;
        }
        write!(f, "]")
    }
}

/// All words of exactly `len` letters over `alphabet`, in lexicographic
/// order.
pub fn words_of_length(alphabet: &Alphabet, len: usize) -> Vec<Word> {
    let k = alphabet.len();
    let mut out = Vec::with_capacity(k.pow(len as u32));
    let mut current = vec![Letter(0); len];
    fill_words(k as u8, &mut current, 0, &mut out);
    out
}

fn fill_words(k: u8, current: &mut Vec<Letter>, pos: usize, out: &mut Vec<Word>) {
    if pos == current.len() {
        out.push(Word::from_letters(current.clone()));
        return;
    }
    for i in 0..k {
        current[pos] = Letter(i);
        fill_words(k, current, pos + 1, out);
    }
}

/// All words of length at most `max_len`, shortest first.
pub fn words_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|len| words_of_length(alphabet, len))
        .collect()
}

/// Errors from the word grammar parser.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unknown letter '{0}'")]
    UnknownLetter(char),
    #[error("malformed exponent: '^' must follow a letter or group and be followed by digits")]
    MalformedExponent,
    #[error("unbalanced parentheses")]
    UnbalancedParens,
}

/// Parse a word: single-character letters from `alphabet`, `^k` repeats the
/// preceding letter or parenthesized group `k >= 0` times, whitespace ignored.
///
/// `"a^2 b"`, `"aab"` and `"(a)^2b"` all parse to the word `aab`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, WordParseError> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (word, rest) = parse_seq(&chars, 0, alphabet)?;
    if rest != chars.len() {
        // The only way parse_seq stops early is an unmatched ')'.
        return Err(WordParseError::UnbalancedParens);
    }
    Ok(word)
}

fn parse_seq(
    chars: &[char],
    mut pos: usize,
    alphabet: &Alphabet,
) -> Result<(Word, usize), WordParseError> {
    let mut letters: Vec<Letter> = Vec::new();
    while pos < chars.len() && chars[pos] != ')' {
        let group: Vec<Letter>;
        match chars[pos] {
            '(' => {
                let (inner, next) = parse_seq(chars, pos + 1, alphabet)?;
                if next >= chars.len() || chars[next] != ')' {
                    return Err(WordParseError::UnbalancedParens);
                }
                group = inner.0;
                pos = next + 1;
            }
            '^' => return Err(WordParseError::MalformedExponent),
            c => {
                let letter = alphabet
                    .letter_of(c)
                    .ok_or(WordParseError::UnknownLetter(c))?;
                group = vec![letter];
                pos += 1;
            }
        }
        if pos < chars.len() && chars[pos] == '^' {
            pos += 1;
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == start {
                return Err(WordParseError::MalformedExponent);
            }
            let exp: usize = chars[start..pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| WordParseError::MalformedExponent)?;
            for _ in 0..exp {
                letters.extend_from_slice(&group);
            }
        } else {
            letters.extend_from_slice(&group);
        }
    }
    Ok((Word(letters), pos))
}
