//! Insertion sums: compositions into words, their zeta values, the proved
//! aggregate identity, and a scan of the open cyclic-insertion statement.
//!
//! Run with `cargo run --example cyclic_scan`.

use shuffle_mzv::comp::{compositions, phi, Composition};
use shuffle_mzv::mzv::{cyclic_sum, scan_conjecture, verify_theorem_t, z_closed, z_of, SCAN_TOL};
use shuffle_mzv::words::Alphabet;

fn main() {
    let prec = 128;
    let terms = 64;
    let ab = Alphabet::ab();

    // A composition distributes blocks of twos around the 3,1 string; phi
    // renders it as a word.
    let c = Composition::new(vec![1, 0, 0]);
    let word = phi(&c).unwrap();
    println!("phi({}) = {}  (the zeta(2,3,1) word)", c, word.render(&ab));
    let value = z_of(&c, terms, prec).unwrap();
    println!("Z({}) = {}", c, value.to_decimal(30));

    // The cyclic sum gathers all rotations; for this weight it lands on
    // Z(3) = pi^6/7! (a proved case).
    let cyclic = cyclic_sum(&c, terms, prec).unwrap();
    let closed = z_closed(3, prec);
    println!("cyclic sum   = {}", cyclic.to_decimal(30));
    println!("Z(3)         = {}", closed.to_decimal(30));
    println!("deviation    = {:.3e}", cyclic.abs_diff_f64(&closed));

    // The aggregate over a full composition set is a theorem; here the six
    // compositions of weight m = 4 with three parts.
    println!(
        "C_3(2) = {:?}",
        compositions(2, 3)
            .unwrap()
            .iter()
            .map(Composition::to_string)
            .collect::<Vec<_>>()
    );
    for report in verify_theorem_t(4, 1, terms, prec).unwrap() {
        println!("{}", report.line());
    }

    // The per-composition statement is open: scan it and report.
    let outcome = scan_conjecture(5, terms, prec, SCAN_TOL);
    println!(
        "scan to weight 5: {} (max deviation {:.3e} at {})",
        outcome.status(),
        outcome.max_deviation,
        outcome.worst_case
    );
}
