//! Shuffle products from the ground up: the three kernels, the coefficient
//! mass, and the bilinear extension to polynomials.
//!
//! Run with `cargo run --example shuffle_basics`.

use shuffle_mzv::arith::binomial;
use shuffle_mzv::poly::NcPoly;
use shuffle_mzv::shuffle::{
    mass, shuffle_direct, shuffle_left, shuffle_poly, shuffle_right, word_sum_to_poly,
};
use shuffle_mzv::words::{parse_word, Alphabet};

fn main() {
    let ab = Alphabet::ab();
    let u = parse_word("ab", &ab).unwrap();
    let v = parse_word("ab", &ab).unwrap();

    // The same product three ways.
    let left = shuffle_left(&u, &v);
    let right = shuffle_right(&u, &v);
    let direct = shuffle_direct(&u, &v).unwrap();
    println!("front recursion: {}", word_sum_to_poly(&ab, &left).render());
    println!(
        "back recursion:  {}",
        word_sum_to_poly(&ab, &right).render()
    );
    println!(
        "enumeration:     {}",
        word_sum_to_poly(&ab, &direct).render()
    );
    assert_eq!(left, right);
    assert_eq!(left, direct);

    // Total multiplicity counts the interleavings.
    println!(
        "mass = {} = C({}, {}) = {}",
        mass(&left),
        u.len() + v.len(),
        u.len(),
        binomial((u.len() + v.len()) as u64, u.len() as u64)
    );

    // Bilinear extension: (a + b) x (1 + a).
    let a = NcPoly::word(&ab, parse_word("a", &ab).unwrap());
    let b = NcPoly::word(&ab, parse_word("b", &ab).unwrap());
    let sum = a.add(&b).unwrap();
    let one_plus_a = NcPoly::one(&ab).add(&a).unwrap();
    println!(
        "(a + b) x (1 + a) = {}",
        shuffle_poly(&sum, &one_plus_a).unwrap().render()
    );

    // The exponent grammar reaches longer words comfortably.
    let big = parse_word("(ab)^3", &ab).unwrap();
    let small = parse_word("a^2", &ab).unwrap();
    let product = shuffle_left(&big, &small);
    println!(
        "(ab)^3 x a^2 has {} distinct words, mass {}",
        product.len(),
        mass(&product)
    );
}
