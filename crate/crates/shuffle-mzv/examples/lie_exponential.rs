//! The exponential behaviour of the word series, checked degree by degree:
//! vacuum sums, the shuffle inverse, the functional equation, and the
//! noncommutative binomial theorem.
//!
//! Run with `cargo run --example lie_exponential`.

use shuffle_mzv::lie::{
    exp_functional_equation_check, nc_binomial_check, ree_inverse_check, vacuum_sum, vacuum_sweep,
    BiMonomialSeries,
};
use shuffle_mzv::words::{parse_word, Alphabet, Word};

fn main() {
    let ab = Alphabet::ab();

    // The alternating split sum collapses: 1 on the empty word, 0 otherwise.
    println!(
        "vacuum_sum(1)   = {}",
        vacuum_sum(&ab, &Word::empty()).render()
    );
    let w = parse_word("ab", &ab).unwrap();
    println!("vacuum_sum(ab)  = {}", vacuum_sum(&ab, &w).render());
    println!("{}", vacuum_sweep(&ab, 6).line());

    // The inverse series check reduces to exactly those vacuum sums.
    println!("{}", ree_inverse_check(&ab, 6).line());

    // G(X+Y) = G(X) x G(Y), coefficient by coefficient up to degree 4.
    println!("{}", exp_functional_equation_check(&ab, 4).line());

    // Peek at one coefficient: on the word aa, the monomial X_a Y_a appears
    // twice on both sides (patterns XY and YX; the shuffle a x a = 2aa).
    let single = Alphabet::new(&['a']);
    let lhs = BiMonomialSeries::mixed_exponential(&single, 2);
    let rhs = BiMonomialSeries::shuffle_product(&single, 2);
    let aa = Word::from_indices(&[0, 0]);
    let a = Word::from_indices(&[0]);
    println!(
        "coefficient of X_a Y_a on aa: {} (mixed side) = {} (shuffle side)",
        lhs.coefficient(&aa, &a, &a),
        rhs.coefficient(&aa, &a, &a)
    );

    // The binomial theorem behind it: 2^n selection strings, each once.
    for n in [1, 2, 8] {
        println!("{}", nc_binomial_check(n).line());
    }
}
