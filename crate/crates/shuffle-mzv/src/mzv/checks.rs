//! Numeric cross-check suites: closed forms, duality, the shuffle-to-product
//! homomorphism, and the convolution-versus-direct oracle comparison.
//!
//! These are the checks that tie the numeric engine back to the exact
//! machinery: every one either compares against a pi-power closed form or
//! plays two independent evaluation routes against each other.

use num_bigint::BigInt;

use crate::report::Report;
use crate::shuffle::{dual_word, shuffle_left};
use crate::words::{words_up_to, Alphabet, Word};

use super::args::{is_admissible, word_to_argstring};
use super::cyclic::{z_closed, zeta_31_closed};
use super::holder::{zeta_holder, HolderCache};
use super::real::PrecReal;
use super::series::zeta_direct;
use super::MzvError;

/// Nonempty admissible words up to the given length, shortest first.
pub fn admissible_words(max_len: usize) -> Vec<Word> {
    words_up_to(&Alphabet::ab(), max_len)
        .into_iter()
        .filter(|w| !w.is_empty() && is_admissible(w))
        .collect()
}

/// `zeta({2}^m)` against `pi^{2m}/(2m+1)!` for `m <= max_m`, and
/// `zeta({3,1}^n)` against `2 pi^{4n}/(4n+2)!` for `n <= max_n`.
pub fn closed_form_suite(
    max_m: u64,
    max_n: u64,
    terms: u64,
    prec: u32,
    tolerance: f64,
) -> Vec<Report> {
    let ab_block = Word::from_indices(&[0, 1]);
    let mut worst_two: Option<(f64, u64, PrecReal, PrecReal)> = None;
    for m in 0..=max_m {
        let value =
            zeta_holder(&ab_block.pow(m as usize), terms, prec).expect("(ab)^m is admissible");
        let closed = z_closed(m, prec);
        let diff = value.abs_diff_f64(&closed);
        if worst_two.as_ref().is_none_or(|(d, ..)| diff > *d) {
            worst_two = Some((diff, m, value, closed));
        }
    }
    let (diff, m, value, closed) = worst_two.expect("at least m = 0");
    let report_two = Report::numeric(
        "zeta of repeated twos matches pi^(2m)/(2m+1)!",
        value.to_decimal(24),
        closed.to_decimal(24),
        diff,
        value.bound() + closed.bound(),
        tolerance,
    )
    .with_param("max_m", max_m)
    .with_param("worst_m", m);

    let block_31 = Word::from_indices(&[0, 0, 1, 1]);
    let mut worst_31: Option<(f64, u64, PrecReal, PrecReal)> = None;
    for n in 0..=max_n {
        let value =
            zeta_holder(&block_31.pow(n as usize), terms, prec).expect("(aabb)^n is admissible");
        let closed = zeta_31_closed(n, prec);
        let diff = value.abs_diff_f64(&closed);
        if worst_31.as_ref().is_none_or(|(d, ..)| diff > *d) {
            worst_31 = Some((diff, n, value, closed));
        }
    }
    let (diff, n, value, closed) = worst_31.expect("at least n = 0");
    let report_31 = Report::numeric(
        "zeta of repeated 3,1 blocks matches 2 pi^(4n)/(4n+2)!",
        value.to_decimal(24),
        closed.to_decimal(24),
        diff,
        value.bound() + closed.bound(),
        tolerance,
    )
    .with_param("max_n", max_n)
    .with_param("worst_n", n);

    vec![report_two, report_31]
}

/// Duality invariance `zeta(w) = zeta(dual(w))` over every admissible word
/// of length at most `max_len`.
pub fn duality_suite(max_len: usize, terms: u64, prec: u32, tolerance: f64) -> Report {
    let mut cache = HolderCache::new(terms, prec);
    let mut cases = 0u64;
    let mut worst = 0.0f64;
    let mut worst_word = String::from("none");
    let mut bound = 0.0f64;
    for word in admissible_words(max_len) {
        cases += 1;
        let value = cache.zeta(&word).expect("admissible");
        let dual = cache.zeta(&dual_word(&word)).expect("duals are admissible");
        let diff = value.abs_diff_f64(&dual);
        if diff > worst {
            worst = diff;
            worst_word = word.render(&Alphabet::ab());
            bound = value.bound() + dual.bound();
        }
    }
    let mut report = Report::numeric(
        "duality invariance zeta(w) = zeta(dual w)",
        String::from("worst |zeta(w) - zeta(dual w)|"),
        String::from("0"),
        worst,
        bound,
        tolerance,
    );
    report = report
        .with_param("max_len", max_len as u64)
        .with_param("cases", cases)
        .with_param("worst_word", worst_word);
    report
}

/// The product rule: `zeta(u) zeta(v)` equals the zeta sum over the shuffle
/// `u x v` with multiplicity, for all admissible pairs with
/// `|u| + |v| <= max_total`.
pub fn shuffle_homomorphism_suite(
    max_total: usize,
    terms: u64,
    prec: u32,
    tolerance: f64,
) -> Report {
    let words = admissible_words(max_total.saturating_sub(2));
    let mut cache = HolderCache::new(terms, prec);
    let mut cases = 0u64;
    let mut worst = 0.0f64;
    let mut worst_pair = String::from("none");
    let mut bound = 0.0f64;
    for u in &words {
        for v in &words {
            if u.len() + v.len() > max_total || v < u {
                continue;
            }
            cases += 1;
            let product = cache
                .zeta(u)
                .expect("admissible")
                .mul(&cache.zeta(v).expect("admissible"));
            let mut sum = PrecReal::zero(prec);
            for (word, count) in shuffle_left(u, v) {
                let value = cache.zeta(&word).expect("shuffles of admissible words");
                sum = sum.add(&value.mul_int(&BigInt::from(count)));
            }
            let diff = product.abs_diff_f64(&sum);
            if diff > worst {
                worst = diff;
                worst_pair = format!(
                    "{} x {}",
                    u.render(&Alphabet::ab()),
                    v.render(&Alphabet::ab())
                );
                bound = product.bound() + sum.bound();
            }
        }
    }
    Report::numeric(
        "shuffle product maps to numeric product of zeta values",
        String::from("worst |zeta(u) zeta(v) - sum over u x v|"),
        String::from("0"),
        worst,
        bound,
        tolerance,
    )
    .with_param("max_total", max_total as u64)
    .with_param("cases", cases)
    .with_param("worst_pair", worst_pair)
}

/// Convolution engine versus the direct nested sum, each with its own
/// rigorous error bound; every pair must agree within the combined bounds.
///
/// Both run at the same fixed-point precision so the difference is computed
/// exactly; the direct oracle's truncation bound dominates the budget.
pub fn holder_vs_direct_suite(
    words: &[Word],
    holder_terms: u64,
    direct_terms: u64,
    prec: u32,
) -> Result<Report, MzvError> {
    let mut cases = 0u64;
    let mut worst_margin = f64::NEG_INFINITY;
    let mut worst_word = String::from("none");
    let mut failures = 0u64;
    let mut worst_diff = 0.0;
    let mut worst_bound = 0.0;
    for word in words {
        cases += 1;
        let holder = zeta_holder(word, holder_terms, prec)?;
        let direct = zeta_direct(&word_to_argstring(word)?, direct_terms, prec)?;
        let diff = holder.abs_diff_f64(&direct);
        let combined = holder.bound() + direct.bound();
        let margin = diff - combined;
        if margin > worst_margin {
            worst_margin = margin;
            worst_word = word.render(&Alphabet::ab());
            worst_diff = diff;
            worst_bound = combined;
        }
        if diff > combined {
            failures += 1;
        }
    }
    let mut report = Report::numeric(
        "convolution and direct series agree within combined error bounds",
        String::from("worst |holder - direct| minus combined bound"),
        String::from("<= 0"),
        worst_diff,
        worst_bound,
        f64::INFINITY,
    );
    report.pass = failures == 0;
    report.tolerance = None;
    Ok(report
        .with_param("cases", cases)
        .with_param("worst_word", worst_word)
        .with_param("failures", failures))
}
