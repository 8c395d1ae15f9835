//! Truncated nested-sum evaluators: the direct zeta series and the multiple
//! polylogarithm series at a rational point inside the unit interval.
//!
//! Both run the same dynamic programme over suffix partial sums, cost
//! `O(k N)` for depth `k` and `N` retained outer terms. Rounding is tracked
//! by [`PrecReal`] arithmetic; the series truncation is covered by the
//! documented tail bounds below, added to the result's error bound.
//!
//! The polylogarithm converges geometrically and is the engine of record;
//! the direct series converges only polynomially and is kept as an
//! independent low-precision oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::words::Word;

use super::args::{word_exponents, ArgString};
use super::real::PrecReal;
use super::MzvError;

/// Guard against f64 underflow in tail bounds.
const BOUND_FLOOR: f64 = 1e-300;

fn up(x: f64) -> f64 {
    x * (1.0 + 1e-12)
}

fn inv_power(n: u64, s: u32, prec: u32) -> PrecReal {
    PrecReal::from_ratio(&BigInt::from(1), &BigInt::from(n).pow(s), prec)
}

/// Shared dynamic programme:
/// `sum over N >= n_1 > ... > n_k >= 1 of x^{n_1} prod n_j^{-s_j}`
/// (`x` absent means the factor is 1). `tails[j]` holds the partial sum of
/// the levels `j..` with the bound one step behind the outer index, so every
/// update only reads values of the previous round.
fn truncated_nested_sum(
    exponents: &[u32],
    x: Option<&PrecReal>,
    terms: u64,
    prec: u32,
) -> PrecReal {
    let k = exponents.len();
    if k == 0 {
        return PrecReal::one(prec);
    }
    let mut tails: Vec<PrecReal> = vec![PrecReal::zero(prec); k + 1];
    tails[k] = PrecReal::one(prec);
    let mut x_power = PrecReal::one(prec);
    let mut acc = PrecReal::zero(prec);
    for n in 1..=terms {
        if let Some(x) = x {
            x_power = x_power.mul(x);
        }
        let mut term = inv_power(n, exponents[0], prec).mul(&tails[1]);
        if x.is_some() {
            term = term.mul(&x_power);
        }
        acc = acc.add(&term);
        for j in 1..k {
            let increment = inv_power(n, exponents[j], prec).mul(&tails[j + 1]);
            tails[j] = tails[j].add(&increment);
        }
    }
    acc
}

/// Truncation tail of the polylogarithm series at `x`, for depth `k` and
/// `n > terms`.
///
/// Every term with outer index `n` is at most `x^n n^{k-1}`: the inner
/// tuples number at most `n^{k-1}` and every power factor is at most 1.
/// With `(n+i)^{k-1} <= n^{k-1} e^{(k-1)i/n}`,
///
/// `sum_{n > N} x^n n^{k-1} <= x^{N+1} (N+1)^{k-1} / (1 - x e^{(k-1)/(N+1)})`
///
/// and the effective `N` is raised until `x e^{(k-1)/(N+1)} <= (1+x)/2`,
/// making the denominator at least `(1-x)/2`.
fn polylog_tail_bound(k: usize, x: f64, terms: u64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let n = terms as f64;
    let factor = up(2.0 / (1.0 - x));
    up(factor * x.powf(n + 1.0) * (n + 1.0).powi(k as i32 - 1)) + BOUND_FLOOR
}

/// Smallest term count at which the geometric tail argument above is valid.
fn polylog_min_terms(k: usize, x: f64) -> u64 {
    if k <= 1 {
        return 8;
    }
    // Need (k-1)/(N+1) <= ln((1+x)/(2x)).
    let threshold = ((1.0 + x) / (2.0 * x)).ln();
    let needed = ((k as f64 - 1.0) / threshold).ceil() as u64 + 1;
    needed.max(8)
}

/// Multiple polylogarithm series at rational `x` in (0, 1), truncated after
/// `terms` outer indices (raised automatically when the tail bound demands
/// more), for any word over {a, b} ending in `b` or empty.
pub fn polylog_word(
    w: &Word,
    x: &BigRational,
    terms: u64,
    prec: u32,
) -> Result<PrecReal, MzvError> {
    let x_f = x.to_f64().unwrap_or(f64::NAN);
    if !(x_f > 0.0 && x_f < 1.0) {
        return Err(MzvError::InvalidArguments(format!(
            "series point {} outside (0, 1)",
            x
        )));
    }
    if w.is_empty() {
        return Ok(PrecReal::one(prec));
    }
    let exponents = word_exponents(w)?;
    let k = exponents.len();
    let x_upper = up(x_f.abs());
    let effective_terms = terms.max(polylog_min_terms(k, x_upper));
    let x_fixed = PrecReal::from_rational(x, prec);
    let value = truncated_nested_sum(&exponents, Some(&x_fixed), effective_terms, prec);
    Ok(value.widen_bound(polylog_tail_bound(k, x_upper, effective_terms)))
}

/// [`polylog_word`] at the canonical point 1/2 (exact in binary fixed
/// point).
pub fn polylog_half(w: &Word, terms: u64, prec: u32) -> Result<PrecReal, MzvError> {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    polylog_word(w, &half, terms, prec)
}

/// Truncation tail of the direct zeta series after `terms` outer indices.
///
/// Writing `t` for the number of unit arguments beyond the first and `c`
/// for `1.65^(number of arguments >= 2 beyond the first)`, the inner sums
/// at outer index `n` are at most `c (2 + ln n)^t` (harmonic levels grow
/// logarithmically, the rest are bounded by zeta(2) < 1.65). The outer tail
/// is then bounded by one boundary term plus the integral
///
/// `int_N^inf x^{-s1} (2+ln x)^t dx
///    = N^{1-s1} sum_i C(t,i) (2+ln N)^{t-i} i! / (s1-1)^{i+1}`,
///
/// valid once the summand is decreasing, i.e. `ln(N+1) >= t/s1 - 2`.
fn zeta_direct_tail_bound(args: &[u32], terms: u64) -> f64 {
    let s1 = args[0] as f64;
    let t = args[1..].iter().filter(|&&s| s == 1).count();
    let heavy = args[1..].iter().filter(|&&s| s >= 2).count();
    let c = up(1.65f64.powi(heavy as i32));
    let n = terms as f64;
    let log_term = 2.0 + n.ln();

    let boundary = up(c * (n + 1.0).powf(-s1) * (2.0 + (n + 1.0).ln()).powi(t as i32));
    let mut integral = 0.0;
    let mut choose = 1.0f64; // C(t, i)
    let mut factorial = 1.0f64; // i!
    for i in 0..=t {
        if i > 0 {
            choose = choose * (t - i + 1) as f64 / i as f64;
            factorial *= i as f64;
        }
        integral +=
            choose * log_term.powi((t - i) as i32) * factorial / (s1 - 1.0).powi(i as i32 + 1);
    }
    integral = up(c * n.powf(1.0 - s1) * up(integral));
    up(boundary + integral) + BOUND_FLOOR
}

/// Smallest term count making the direct tail bound's monotonicity
/// assumption hold.
fn zeta_direct_min_terms(args: &[u32]) -> u64 {
    let s1 = args[0] as f64;
    let t = args[1..].iter().filter(|&&s| s == 1).count() as f64;
    let needed = (t / s1 - 2.0).exp().ceil() as u64;
    needed.max(16).max(args.len() as u64)
}

/// The nested zeta series summed directly with outer index at most `terms`
/// (raised automatically when the tail bound demands more). Converges like
/// `N^{1-s1}` up to logarithms; use the convolution engine for precision
/// work.
pub fn zeta_direct(s: &ArgString, terms: u64, prec: u32) -> Result<PrecReal, MzvError> {
    if s.is_empty() {
        return Ok(PrecReal::one(prec));
    }
    let args = s.args();
    let effective_terms = terms.max(zeta_direct_min_terms(args));
    let value = truncated_nested_sum(args, None, effective_terms, prec);
    Ok(value.widen_bound(zeta_direct_tail_bound(args, effective_terms)))
}
