//! The shuffle product, three ways, plus the ring (anti-)morphisms that
//! respect it.
//!
//! The product is implemented independently as a front recursion, a back
//! recursion, and a direct enumeration of interleavings. The recursions run
//! on a dynamic-programming table over suffix/prefix pairs; the enumeration
//! walks every interleaving mask and is kept as an oracle, guarded by a size
//! cap. All three agree word-for-word (see the acceptance suite).
//!
//! Word-level kernels operate on letter indices and need no alphabet; the
//! polynomial-level [`shuffle_poly`] checks alphabets like every other
//! `NcPoly` operation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arith::binomial;
use crate::poly::{NcPoly, PolyError, Rational};
use crate::words::{Alphabet, Letter, Word};

/// Sum of words with positive integer multiplicities, the raw output of a
/// word-level shuffle.
pub type WordSum = BTreeMap<Word, u64>;

/// Default cap on the number of interleavings [`shuffle_direct`] will
/// enumerate.
pub const DIRECT_ENUM_CAP: u64 = 1_000_000;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ShuffleError {
    #[error("too large for direct enumeration: C({n}+{m},{n}) = {size} exceeds cap {cap}")]
    TooLarge {
        n: usize,
        m: usize,
        size: u128,
        cap: u64,
    },
    #[error("this map is defined for two-letter alphabets only")]
    NotTwoLetters,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Kernel selector, mirroring the CLI's `--impl` flag.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShuffleImpl {
    Left,
    Right,
    Direct,
}

fn merge_prepend(acc: &mut WordSum, source: &WordSum, letter: Letter) {
    for (word, count) in source {
        *acc.entry(word.prepended(letter)).or_insert(0) += count;
    }
}

fn merge_append(acc: &mut WordSum, source: &WordSum, letter: Letter) {
    for (word, count) in source {
        *acc.entry(word.appended(letter)).or_insert(0) += count;
    }
}

/// Shuffle via the front recursion
/// `au x bv = a(u x bv) + b(au x v)`, with `1 x w = w x 1 = w`.
///
/// Runs bottom-up over the table of suffix pairs, which memoizes every
/// subproblem exactly once.
pub fn shuffle_left(u: &Word, v: &Word) -> WordSum {
    let (n, m) = (u.len(), v.len());
    // table[i][j] = shuffle of u[i..] and v[j..]; filled from the far end.
    let mut table: Vec<Vec<WordSum>> = vec![vec![WordSum::new(); m + 1]; n + 1];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            let cell = if i == n {
                WordSum::from([(v.suffix(j), 1)])
            } else if j == m {
                WordSum::from([(u.suffix(i), 1)])
            } else {
                let mut acc = WordSum::new();
                merge_prepend(&mut acc, &table[i + 1][j], u.letters()[i]);
                merge_prepend(&mut acc, &table[i][j + 1], v.letters()[j]);
                acc
            };
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[0][0])
}

/// Shuffle via the back recursion
/// `ua x vb = (u x vb)a + (ua x v)b`, with `1 x w = w x 1 = w`.
pub fn shuffle_right(u: &Word, v: &Word) -> WordSum {
    let (n, m) = (u.len(), v.len());
    // table[i][j] = shuffle of u[..i] and v[..j].
    let mut table: Vec<Vec<WordSum>> = vec![vec![WordSum::new(); m + 1]; n + 1];
    for i in 0..=n {
        for j in 0..=m {
            let cell = if i == 0 {
                WordSum::from([(v.prefix(j), 1)])
            } else if j == 0 {
                WordSum::from([(u.prefix(i), 1)])
            } else {
                let mut acc = WordSum::new();
                merge_append(&mut acc, &table[i - 1][j], u.letters()[i - 1]);
                merge_append(&mut acc, &table[i][j - 1], v.letters()[j - 1]);
                acc
            };
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[n][m])
}

/// Shuffle by enumerating all `C(n+m, n)` order-preserving interleavings.
///
/// Interleavings are walked as the subsets of slots receiving letters of `u`,
/// which is in bijection with the interleaving permutations. Refuses with
/// [`ShuffleError::TooLarge`] when the count exceeds `cap`.
pub fn shuffle_direct_capped(u: &Word, v: &Word, cap: u64) -> Result<WordSum, ShuffleError> {
    let (n, m) = (u.len(), v.len());
    let size_big = binomial((n + m) as u64, n as u64);
    let size: u128 = size_big.try_into().unwrap_or(u128::MAX);
    if size > cap as u128 {
        return Err(ShuffleError::TooLarge { n, m, size, cap });
    }

    let total = n + m;
    let mut result = WordSum::new();
    // Current subset of slots taken by u, as increasing positions.
    let mut slots: Vec<usize> = (0..n).collect();
    let mut buffer: Vec<Letter> = vec![Letter(0); total];
    loop {
        let mut ui = 0;
        let mut vi = 0;
        for (pos, out) in buffer.iter_mut().enumerate() {
            if ui < n && slots[ui] == pos {
                *out = u.letters()[ui];
                ui += 1;
            } else {
                *out = v.letters()[vi];
                vi += 1;
            }
        }
        *result
            .entry(Word::from_letters(buffer.clone()))
            .or_insert(0) += 1;

        // Advance to the next n-subset of {0..total} in lexicographic order.
        let mut advanced = false;
        let mut k = n;
        while k > 0 {
            k -= 1;
            if slots[k] < total - n + k {
                slots[k] += 1;
                for i in k + 1..n {
                    slots[i] = slots[i - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    Ok(result)
}

/// [`shuffle_direct_capped`] at the default cap.
pub fn shuffle_direct(u: &Word, v: &Word) -> Result<WordSum, ShuffleError> {
    shuffle_direct_capped(u, v, DIRECT_ENUM_CAP)
}

/// Run the selected kernel.
pub fn shuffle_with(kernel: ShuffleImpl, u: &Word, v: &Word) -> Result<WordSum, ShuffleError> {
    match kernel {
        ShuffleImpl::Left => Ok(shuffle_left(u, v)),
        ShuffleImpl::Right => Ok(shuffle_right(u, v)),
        ShuffleImpl::Direct => shuffle_direct(u, v),
    }
}

/// Total multiplicity of a word sum; equals `C(|u|+|v|, |u|)` for a shuffle.
pub fn mass(sum: &WordSum) -> u128 {
    sum.values().map(|&c| c as u128).sum()
}

/// Lift a word sum to a polynomial over the given alphabet.
pub fn word_sum_to_poly(alphabet: &Alphabet, sum: &WordSum) -> NcPoly {
    NcPoly::from_terms(
        alphabet,
        sum.iter()
            .map(|(w, &c)| (w.clone(), Rational::from_integer(BigInt::from(c)))),
    )
}

/// Shuffle two words straight into an `NcPoly` (front-recursion kernel).
pub fn shuffle_words_poly(alphabet: &Alphabet, u: &Word, v: &Word) -> NcPoly {
    word_sum_to_poly(alphabet, &shuffle_left(u, v))
}

/// Bilinear extension of the shuffle product to polynomials.
pub fn shuffle_poly(p: &NcPoly, q: &NcPoly) -> Result<NcPoly, PolyError> {
    if p.alphabet() != q.alphabet() {
        return Err(PolyError::AlphabetMismatch);
    }
    let mut result = NcPoly::zero(p.alphabet());
    for (u, cu) in p.terms() {
        for (v, cv) in q.terms() {
            let kernel = shuffle_left(u, v);
            let scalar = cu * cv;
            for (word, count) in kernel {
                result.add_term(word, &scalar * Rational::from_integer(BigInt::from(count)));
            }
        }
    }
    Ok(result)
}

/// The string-reversing involution `R`, extended linearly. A shuffle-algebra
/// automorphism and a concatenation anti-automorphism.
pub fn reverse(p: &NcPoly) -> NcPoly {
    p.map_words(p.alphabet(), |w| w.reversed())
}

/// Swap the two letters of a word over a two-letter alphabet.
pub fn swap_word(w: &Word) -> Word {
    Word::from_letters(w.letters().iter().map(|l| Letter(1 - l.0)).collect())
}

/// The letter-swapping ring automorphism `S` on a two-letter alphabet.
pub fn swap_letters(p: &NcPoly) -> Result<NcPoly, ShuffleError> {
    if p.alphabet().len() != 2 {
        return Err(ShuffleError::NotTwoLetters);
    }
    Ok(p.map_words(p.alphabet(), swap_word))
}

/// Reverse and swap: the dual of a word over {a, b}.
///
/// For iterated-integral words this realizes the change of variable
/// `t -> 1 - t`, so the integral over a word and over its dual agree.
pub fn dual_word(w: &Word) -> Word {
    swap_word(&w.reversed())
}

/// The duality involution `S . R` on a two-letter alphabet, extended
/// linearly. Words fixed by it are self-dual.
pub fn duality(p: &NcPoly) -> Result<NcPoly, ShuffleError> {
    if p.alphabet().len() != 2 {
        return Err(ShuffleError::NotTwoLetters);
    }
    Ok(p.map_words(p.alphabet(), dual_word))
}

/// Whether a word equals its own dual. Self-dual words have even length.
pub fn is_self_dual(w: &Word) -> bool {
    dual_word(w) == *w
}

/// Reverse a word and shift its letters one place up the alphabet, landing in
/// {b, c}: the word image of the letter-shifting, string-reversing ring
/// anti-homomorphism.
pub fn letter_shift_word(w: &Word) -> Word {
    // Index i of the source maps to index i of {b, c}; the shift lives in the
    // letter names, the reversal in the index sequence.
    w.reversed()
}

/// The letter-shifting, string-reversing anti-homomorphism from polynomials
/// over a two-letter alphabet onto polynomials over {b, c}. A shuffle-algebra
/// isomorphism.
pub fn letter_shift(p: &NcPoly) -> Result<NcPoly, ShuffleError> {
    if p.alphabet().len() != 2 {
        return Err(ShuffleError::NotTwoLetters);
    }
    Ok(p.map_words(&Alphabet::bc(), letter_shift_word))
}

/// Exhaustive three-kernel agreement sweep over every ordered word pair
/// with `|u| + |v| <= max_total`, also checking the total multiplicity
/// against `C(|u|+|v|, |u|)`.
pub fn kernel_agreement_sweep(alphabet: &Alphabet, max_total: usize) -> crate::report::Report {
    use crate::words::words_of_length;

    let mut cases = 0usize;
    let mut failures = Vec::new();
    for total in 0..=max_total {
        for n in 0..=total {
            let us = words_of_length(alphabet, n);
            let vs = words_of_length(alphabet, total - n);
            let expected_mass: u128 = binomial(total as u64, n as u64)
                .try_into()
                .expect("sweep sizes fit");
            for u in &us {
                for v in &vs {
                    cases += 1;
                    let left = shuffle_left(u, v);
                    if mass(&left) != expected_mass {
                        failures.push(format!(
                            "mass {} x {}",
                            u.render(alphabet),
                            v.render(alphabet)
                        ));
                        continue;
                    }
                    if left != shuffle_right(u, v)
                        || left != shuffle_direct(u, v).expect("below cap")
                    {
                        failures.push(format!("{} x {}", u.render(alphabet), v.render(alphabet)));
                    }
                }
            }
        }
    }
    crate::report::Report::exact(
        "three shuffle kernels agree with binomial total multiplicity",
        cases,
        failures,
    )
    .with_param("alphabet", {
        let name: String = alphabet.letters().map(|l| alphabet.name(l)).collect();
        name
    })
    .with_param("max_total", max_total as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use crate::words::parse_word;

    fn ab() -> Alphabet {
        Alphabet::ab()
    }

    fn w(text: &str) -> Word {
        parse_word(text, &ab()).unwrap()
    }

    fn sum(entries: &[(&str, u64)]) -> WordSum {
        entries.iter().map(|&(t, c)| (w(t), c)).collect()
    }

    #[test]
    fn two_single_letters() {
        let expected = sum(&[("ab", 1), ("ba", 1)]);
        assert_eq!(shuffle_left(&w("a"), &w("b")), expected);
        assert_eq!(shuffle_right(&w("a"), &w("b")), expected);
        assert_eq!(shuffle_direct(&w("a"), &w("b")).unwrap(), expected);
    }

    #[test]
    fn empty_word_is_the_identity() {
        for text in ["", "a", "abba"] {
            let expected = sum(&[(text, 1)]);
            assert_eq!(shuffle_left(&w(""), &w(text)), expected);
            assert_eq!(shuffle_left(&w(text), &w("")), expected);
            assert_eq!(shuffle_right(&w(""), &w(text)), expected);
            assert_eq!(shuffle_direct(&w(text), &w("")).unwrap(), expected);
        }
    }

    #[test]
    fn ab_shuffle_ab() {
        // The six interleavings of ab with ab collapse onto two words.
        let expected = sum(&[("abab", 2), ("aabb", 4)]);
        assert_eq!(shuffle_left(&w("ab"), &w("ab")), expected);
        assert_eq!(shuffle_right(&w("ab"), &w("ab")), expected);
        assert_eq!(shuffle_direct(&w("ab"), &w("ab")).unwrap(), expected);
    }

    #[test]
    fn aa_shuffle_a() {
        let expected = sum(&[("aaa", 3)]);
        assert_eq!(shuffle_direct(&w("aa"), &w("a")).unwrap(), expected);
        assert_eq!(shuffle_left(&w("aa"), &w("a")), expected);
    }

    #[test]
    fn mass_is_binomial() {
        for (u, v) in [("ab", "ab"), ("aab", "ba"), ("", "ab"), ("abab", "bb")] {
            let (u, v) = (w(u), w(v));
            let expected: u128 = binomial((u.len() + v.len()) as u64, u.len() as u64)
                .try_into()
                .unwrap();
            assert_eq!(mass(&shuffle_left(&u, &v)), expected);
        }
    }

    #[test]
    fn direct_cap_guard() {
        let u = w("ab").pow(8);
        let err = shuffle_direct_capped(&u, &u, 1000).unwrap_err();
        assert!(matches!(err, ShuffleError::TooLarge { .. }));
    }

    #[test]
    fn poly_shuffle_identity_and_bilinearity() {
        let one = NcPoly::one(&ab());
        let p = NcPoly::word(&ab(), w("ab"))
            .add(&NcPoly::word(&ab(), w("b")))
            .unwrap();
        assert_eq!(shuffle_poly(&one, &p).unwrap(), p);

        // (a + b) x (1 + a) = a + b + 2aa + ab + ba
        let lhs = shuffle_poly(
            &NcPoly::word(&ab(), w("a"))
                .add(&NcPoly::word(&ab(), w("b")))
                .unwrap(),
            &one.add(&NcPoly::word(&ab(), w("a"))).unwrap(),
        )
        .unwrap();
        let expected = NcPoly::from_terms(
            &ab(),
            [
                (w("a"), int(1)),
                (w("b"), int(1)),
                (w("aa"), int(2)),
                (w("ab"), int(1)),
                (w("ba"), int(1)),
            ],
        );
        assert_eq!(lhs, expected);
    }

    #[test]
    fn poly_shuffle_commutes() {
        let p = NcPoly::from_terms(&ab(), [(w("ab"), int(2)), (w("b"), int(-1))]);
        let q = NcPoly::from_terms(&ab(), [(w("a"), int(3)), (w(""), int(1))]);
        assert_eq!(shuffle_poly(&p, &q).unwrap(), shuffle_poly(&q, &p).unwrap());
    }

    #[test]
    fn reverse_is_an_involution() {
        let p = NcPoly::from_terms(&ab(), [(w("aab"), int(1)), (w("ba"), int(2))]);
        assert_eq!(
            reverse(&NcPoly::word(&ab(), w("aab"))),
            NcPoly::word(&ab(), w("baa"))
        );
        assert_eq!(reverse(&reverse(&p)), p);
    }

    #[test]
    fn reverse_respects_shuffle() {
        for (u, v) in [("ab", "ba"), ("aab", "b"), ("ab", "ab")] {
            let (u, v) = (w(u), w(v));
            let shuffled = shuffle_words_poly(&ab(), &u, &v);
            let lhs = reverse(&shuffled);
            let rhs = shuffle_words_poly(&ab(), &u.reversed(), &v.reversed());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn reverse_antimorphism_on_concat() {
        let p = NcPoly::word(&ab(), w("aab"));
        let q = NcPoly::word(&ab(), w("ba"));
        let lhs = reverse(&p.concat(&q).unwrap());
        let rhs = reverse(&q).concat(&reverse(&p)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_examples() {
        let p = NcPoly::word(&ab(), w("aab"));
        assert_eq!(swap_letters(&p).unwrap(), NcPoly::word(&ab(), w("bba")));
        assert_eq!(swap_letters(&swap_letters(&p).unwrap()).unwrap(), p);
        assert_eq!(
            swap_letters(&NcPoly::word(&ab(), w("ab"))).unwrap(),
            NcPoly::word(&ab(), w("ba"))
        );
    }

    #[test]
    fn swap_requires_two_letters() {
        let p = NcPoly::one(&Alphabet::abc());
        assert_eq!(swap_letters(&p), Err(ShuffleError::NotTwoLetters));
        assert_eq!(duality(&p), Err(ShuffleError::NotTwoLetters));
        assert_eq!(letter_shift(&p), Err(ShuffleError::NotTwoLetters));
    }

    #[test]
    fn duality_examples() {
        // aab reverses to baa, swaps to abb.
        assert_eq!(dual_word(&w("aab")), w("abb"));
        // ab is self-dual.
        assert!(is_self_dual(&w("ab")));
        assert!(!is_self_dual(&w("aab")));
        let p = NcPoly::word(&ab(), w("aab"));
        assert_eq!(duality(&duality(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn self_dual_count_is_power_of_two() {
        // Among words of length 2k, exactly 2^k are self-dual.
        for k in 1..=6usize {
            let len = 2 * k;
            let mut count = 0u64;
            for bits in 0..(1u64 << len) {
                let letters: Vec<u8> = (0..len).map(|i| ((bits >> i) & 1) as u8).collect();
                if is_self_dual(&Word::from_indices(&letters)) {
                    count += 1;
                }
            }
            assert_eq!(count, 1 << k, "length {}", len);
        }
    }

    #[test]
    fn letter_shift_examples() {
        let bc = Alphabet::bc();
        let p = NcPoly::word(&ab(), w("ab"));
        let image = letter_shift(&p).unwrap();
        assert_eq!(image.render(), "cb");
        assert_eq!(image.alphabet(), &bc);
        assert_eq!(letter_shift(&NcPoly::one(&ab())).unwrap(), NcPoly::one(&bc));
    }

    #[test]
    fn letter_shift_respects_shuffle() {
        for (u, v) in [("ab", "b"), ("aab", "ba"), ("a", "ab")] {
            let (u, v) = (w(u), w(v));
            let lhs = letter_shift(&shuffle_words_poly(&ab(), &u, &v)).unwrap();
            let rhs = shuffle_words_poly(
                &Alphabet::bc(),
                &letter_shift_word(&u),
                &letter_shift_word(&v),
            );
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn letter_shift_antimorphism_on_concat() {
        let p = NcPoly::word(&ab(), w("ab"));
        let q = NcPoly::word(&ab(), w("ba"));
        let lhs = letter_shift(&p.concat(&q).unwrap()).unwrap();
        let rhs = letter_shift(&q)
            .unwrap()
            .concat(&letter_shift(&p).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn kernels_agree_on_small_words() {
        // Fuller sweeps live in the acceptance suite; keep a smoke check here.
        for total in 0..=6usize {
            for n in 0..=total {
                let m = total - n;
                for ubits in 0..(1u32 << n) {
                    for vbits in 0..(1u32 << m) {
                        let u = Word::from_indices(
                            &(0..n).map(|i| ((ubits >> i) & 1) as u8).collect::<Vec<_>>(),
                        );
                        let v = Word::from_indices(
                            &(0..m).map(|i| ((vbits >> i) & 1) as u8).collect::<Vec<_>>(),
                        );
                        let left = shuffle_left(&u, &v);
                        assert_eq!(left, shuffle_right(&u, &v));
                        assert_eq!(left, shuffle_direct(&u, &v).unwrap());
                    }
                }
            }
        }
    }
}
