//! The (anti-)morphisms that respect the shuffle: string reversal, letter
//! swap, their composition (the duality), and the letter shift onto {b, c}.
//!
//! Run with `cargo run --example homomorphisms`.

use shuffle_mzv::poly::NcPoly;
use shuffle_mzv::shuffle::{
    dual_word, duality, is_self_dual, letter_shift, reverse, shuffle_words_poly, swap_letters,
};
use shuffle_mzv::words::{parse_word, words_of_length, Alphabet};

fn main() {
    let ab = Alphabet::ab();
    let w = parse_word("aab", &ab).unwrap();
    let p = NcPoly::word(&ab, w.clone());

    println!("w        = {}", w.render(&ab));
    println!("R(w)     = {}", reverse(&p).render());
    println!("S(w)     = {}", swap_letters(&p).unwrap().render());
    println!("dual(w)  = {}", duality(&p).unwrap().render());

    // The dual of the zeta(3) word is the zeta(2,1) word: the classical
    // duality zeta(3) = zeta(2,1).
    assert_eq!(dual_word(&w), parse_word("abb", &ab).unwrap());

    // Self-dual words of length 2k number exactly 2^k.
    for k in 1..=4usize {
        let count = words_of_length(&ab, 2 * k)
            .iter()
            .filter(|w| is_self_dual(w))
            .count();
        println!("self-dual words of length {}: {} = 2^{}", 2 * k, count, k);
        assert_eq!(count, 1 << k);
    }

    // Every morphism turns a shuffle of words into the shuffle of images.
    let u = parse_word("ab", &ab).unwrap();
    let v = parse_word("ba", &ab).unwrap();
    let shuffled = shuffle_words_poly(&ab, &u, &v);
    let image = letter_shift(&shuffled).unwrap();
    println!(
        "shift of {} x {} over bc: {}",
        u.render(&ab),
        v.render(&ab),
        image.render()
    );
    assert_eq!(
        image,
        shuffle_words_poly(
            &Alphabet::bc(),
            &shuffle_mzv::shuffle::letter_shift_word(&u),
            &shuffle_mzv::shuffle::letter_shift_word(&v),
        )
    );

    // On concatenation the shift is an anti-morphism: images multiply in
    // reverse order.
    let p = NcPoly::word(&ab, u.clone());
    let q = NcPoly::word(&ab, v.clone());
    let lhs = letter_shift(&p.concat(&q).unwrap()).unwrap();
    let rhs = letter_shift(&q)
        .unwrap()
        .concat(&letter_shift(&p).unwrap())
        .unwrap();
    assert_eq!(lhs, rhs);
    println!("anti-morphism on concatenation checked: {}", lhs.render());
}
