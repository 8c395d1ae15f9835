//! The T and U subsums of two-letter shuffles and their exact
//! decompositions, including the bivariate generating identity.
//!
//! Run with `cargo run --example basis_subsums`.

use shuffle_mzv::basis::{
    build_t, build_t_via_shuffle, build_u, verify_mixed, verify_t_basis, verify_t_binom,
    verify_u_basis, verify_u_binom, verify_umbral,
};

fn main() {
    // T_{m,n} collects the words of (ab)^n x (ab)^{m-n} with exactly n
    // squares aa; built from integer compositions, checked by the filter.
    for (m, n) in [(2, 0), (2, 1), (3, 1)] {
        let t = build_t(m, n);
        println!("T_{{{},{}}} = {}", m, n, t.render());
        assert_eq!(t, build_t_via_shuffle(m, n));
    }
    println!("T_{{2,5}} = {} (out of range)", build_t(2, 5).render());

    // U counts bb squares in shuffles of b-led blocks.
    for (m, n) in [(2, 1), (3, 1), (4, 2)] {
        println!("U_{{{},{}}} = {}", m, n, build_u(m, n).render());
    }

    // The decompositions are exact polynomial identities.
    println!("{}", verify_t_basis(2, 2).line());
    println!("{}", verify_u_basis(2, 3).line());
    println!("{}", verify_mixed(2, 2).line());

    // Packaged as generating functions in two commuting indeterminates,
    // or with indexed coefficient sequences.
    println!("{}", verify_t_binom(6).line());
    println!("{}", verify_u_binom(6).line());
    println!("{}", verify_umbral(5).line());
}
