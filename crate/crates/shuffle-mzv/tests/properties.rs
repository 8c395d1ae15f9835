//! Property tests for the algebraic invariants: vector-space axioms, parser
//! round trips, shuffle associativity/commutativity, the morphism laws, and
//! the composition-word bijection.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use shuffle_mzv::basis::build_t;
use shuffle_mzv::comp::{phi, phi_inv, Composition};
use shuffle_mzv::mzv::{zeta_holder, zeta_holder_at};
use shuffle_mzv::poly::NcPoly;
use shuffle_mzv::shuffle::{
    dual_word, duality, letter_shift, letter_shift_word, mass, reverse, shuffle_left, shuffle_poly,
    shuffle_words_poly, swap_letters, swap_word,
};
use shuffle_mzv::words::{parse_word, Alphabet, Word};

#[test]
fn values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Word>();
    assert_send_sync::<Alphabet>();
    assert_send_sync::<NcPoly>();
    assert_send_sync::<Composition>();
    assert_send_sync::<shuffle_mzv::mzv::PrecReal>();
    assert_send_sync::<shuffle_mzv::mzv::ArgString>();
}

fn word_strategy(letters: u8, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..letters, 0..=max_len)
        .prop_map(|indices| Word::from_indices(&indices))
}

fn rational_strategy() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly_strategy(letters: u8, max_len: usize, max_terms: usize) -> impl Strategy<Value = NcPoly> {
    let alphabet = if letters == 2 {
        Alphabet::ab()
    } else {
        Alphabet::abc()
    };
    proptest::collection::vec(
        (word_strategy(letters, max_len), rational_strategy()),
        0..=max_terms,
    )
    .prop_map(move |terms| NcPoly::from_terms(&alphabet, terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vector_space_axioms(
        p in poly_strategy(2, 4, 4),
        q in poly_strategy(2, 4, 4),
        r in poly_strategy(2, 4, 4),
        c in rational_strategy(),
        d in rational_strategy(),
    ) {
        let ab = Alphabet::ab();
        let zero = NcPoly::zero(&ab);
        // additive group
        prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
        prop_assert_eq!(p.add(&q).unwrap().add(&r).unwrap(), p.add(&q.add(&r).unwrap()).unwrap());
        prop_assert_eq!(p.add(&zero).unwrap(), p.clone());
        prop_assert_eq!(p.add(&p.neg()).unwrap(), zero.clone());
        // scalar structure
        let one = BigRational::from_integer(BigInt::from(1));
        prop_assert_eq!(p.scale(&one), p.clone());
        prop_assert_eq!(p.scale(&c).scale(&d), p.scale(&(&c * &d)));
        prop_assert_eq!(p.add(&q).unwrap().scale(&c), p.scale(&c).add(&q.scale(&c)).unwrap());
        prop_assert_eq!(p.scale(&(&c + &d)), p.scale(&c).add(&p.scale(&d)).unwrap());
    }

    #[test]
    fn parse_render_round_trip(w in word_strategy(3, 12)) {
        let abc = Alphabet::abc();
        prop_assert_eq!(parse_word(&w.render(&abc), &abc).unwrap(), w);
    }

    #[test]
    fn concat_monoid_laws(
        u in word_strategy(3, 6),
        v in word_strategy(3, 6),
        w in word_strategy(3, 6),
    ) {
        prop_assert_eq!(u.concat(&v).concat(&w), u.concat(&v.concat(&w)));
        prop_assert_eq!(Word::empty().concat(&u), u.clone());
        prop_assert_eq!(u.concat(&Word::empty()), u);
    }

    #[test]
    fn shuffle_commutes_and_mass_is_binomial(
        u in word_strategy(2, 5),
        v in word_strategy(2, 4),
    ) {
        let left = shuffle_left(&u, &v);
        prop_assert_eq!(&left, &shuffle_left(&v, &u));
        let expected = shuffle_mzv::arith::binomial((u.len() + v.len()) as u64, u.len() as u64);
        prop_assert_eq!(BigInt::from(mass(&left)), expected);
    }

    #[test]
    fn shuffle_is_associative(
        u in word_strategy(2, 3),
        v in word_strategy(2, 3),
        w in word_strategy(2, 3),
    ) {
        let ab = Alphabet::ab();
        let uv = shuffle_words_poly(&ab, &u, &v);
        let vw = shuffle_words_poly(&ab, &v, &w);
        let lhs = shuffle_poly(&uv, &NcPoly::word(&ab, w.clone())).unwrap();
        let rhs = shuffle_poly(&NcPoly::word(&ab, u), &vw).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn morphisms_respect_the_shuffle(
        u in word_strategy(2, 4),
        v in word_strategy(2, 4),
    ) {
        let ab = Alphabet::ab();
        let shuffled = shuffle_words_poly(&ab, &u, &v);

        prop_assert_eq!(
            reverse(&shuffled),
            shuffle_words_poly(&ab, &u.reversed(), &v.reversed())
        );
        prop_assert_eq!(
            swap_letters(&shuffled).unwrap(),
            shuffle_words_poly(&ab, &swap_word(&u), &swap_word(&v))
        );
        prop_assert_eq!(
            duality(&shuffled).unwrap(),
            shuffle_words_poly(&ab, &dual_word(&u), &dual_word(&v))
        );
        prop_assert_eq!(
            letter_shift(&shuffled).unwrap(),
            shuffle_words_poly(&Alphabet::bc(), &letter_shift_word(&u), &letter_shift_word(&v))
        );
    }

    #[test]
    fn reversal_and_shift_are_concat_antimorphisms(
        p in poly_strategy(2, 3, 3),
        q in poly_strategy(2, 3, 3),
    ) {
        let pq = p.concat(&q).unwrap();
        prop_assert_eq!(reverse(&pq), reverse(&q).concat(&reverse(&p)).unwrap());
        prop_assert_eq!(
            letter_shift(&pq).unwrap(),
            letter_shift(&q).unwrap().concat(&letter_shift(&p).unwrap()).unwrap()
        );
    }

    #[test]
    fn composition_word_bijection(
        parts in proptest::collection::vec(0u64..=3, 1..=7),
    ) {
        prop_assume!(parts.len() % 2 == 1);
        prop_assume!(parts.iter().sum::<u64>() <= 6);
        let c = Composition::new(parts);
        let word = phi(&c).unwrap();
        prop_assert_eq!(phi_inv(&word).unwrap(), c.clone());
        // The image lies in the support of the matching T subsum.
        let n = (c.len() as u64 - 1) / 2;
        let m = c.sum() + 2 * n;
        let t = build_t(m as i64, n as i64);
        prop_assert!(t.terms().any(|(w, _)| *w == word));
    }

    #[test]
    fn split_point_does_not_change_the_integral(
        middle in proptest::collection::vec(0u8..=1, 0..=4),
        z_choice in 0usize..3,
    ) {
        // Build an admissible word a <middle> b and split it at 0.3, 0.5, 0.7.
        let mut letters = vec![0u8];
        letters.extend(middle);
        letters.push(1);
        let word = Word::from_indices(&letters);
        let (num, den) = [(3i64, 10i64), (1, 2), (7, 10)][z_choice];
        let z = BigRational::new(BigInt::from(num), BigInt::from(den));
        let reference = zeta_holder(&word, 64, 128).unwrap();
        let split = zeta_holder_at(&word, &z, 64, 128).unwrap();
        prop_assert!(reference.abs_diff_f64(&split) <= 1e-9);
    }
}
