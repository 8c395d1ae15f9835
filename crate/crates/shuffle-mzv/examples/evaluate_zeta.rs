//! Evaluating multiple zeta values numerically: the geometric-rate
//! convolution engine against the plain nested sum, closed forms, and the
//! freedom in the split point.
//!
//! Run with `cargo run --example evaluate_zeta`.

use num_bigint::BigInt;
use num_rational::BigRational;

use shuffle_mzv::mzv::{
    pi, polylog_half, zeta_args, zeta_direct, zeta_holder, zeta_holder_at, ArgString,
};
use shuffle_mzv::words::{parse_word, Alphabet};

fn main() {
    let ab = Alphabet::ab();
    let prec = 128;

    // zeta(2) through the convolution at 1/2, against pi^2/6.
    let word = parse_word("ab", &ab).unwrap();
    let value = zeta_holder(&word, 64, prec).unwrap();
    let closed = pi(prec).powi(2).div_int(&BigInt::from(6));
    println!(
        "zeta(2)      = {} ± {:.1e}",
        value.to_decimal(36),
        value.bound()
    );
    println!("pi^2/6       = {}", closed.to_decimal(36));
    println!("difference   = {:.3e}", value.abs_diff_f64(&closed));

    // The same value by arguments, and the slow direct sum for contrast.
    let args = ArgString::parse("2").unwrap();
    let by_args = zeta_args(&args, 64, prec).unwrap();
    assert_eq!(by_args, value);
    let direct = zeta_direct(&args, 100_000, 64).unwrap();
    println!(
        "direct sum   = {} ± {:.1e}  (100000 terms and still 5 digits short)",
        direct.to_decimal(20),
        direct.bound()
    );

    // Depth two: zeta(2,1) = zeta(3), the simplest duality instance.
    let z21 = zeta_args(&ArgString::parse("2,1").unwrap(), 64, prec).unwrap();
    let z3 = zeta_args(&ArgString::parse("3").unwrap(), 64, prec).unwrap();
    println!("zeta(2,1)    = {}", z21.to_decimal(36));
    println!("zeta(3)      = {}", z3.to_decimal(36));
    println!("difference   = {:.3e}", z21.abs_diff_f64(&z3));

    // Polylogarithm building block: the geometric series at 1/2 is ln 2.
    let ln2 = polylog_half(&parse_word("b", &ab).unwrap(), 64, prec).unwrap();
    println!("Li_1(1/2)    = {} (= ln 2)", ln2.to_decimal(36));

    // Any split point in (0, 1) yields the same integral.
    let word31 = parse_word("aabb", &ab).unwrap();
    let at_half = zeta_holder(&word31, 64, prec).unwrap();
    let z = BigRational::new(BigInt::from(3), BigInt::from(10));
    let at_three_tenths = zeta_holder_at(&word31, &z, 64, prec).unwrap();
    println!("zeta(3,1) split at 1/2:  {}", at_half.to_decimal(36));
    println!(
        "zeta(3,1) split at 3/10: {}",
        at_three_tenths.to_decimal(36)
    );
    println!(
        "difference   = {:.3e}",
        at_half.abs_diff_f64(&at_three_tenths)
    );
}
