//! Configurable-precision reals with rigorous error bounds.
//!
//! A [`PrecReal`] is a fixed-point number: an arbitrary-precision integer
//! mantissa scaled by `2^-prec`, together with an `f64` bound on the
//! distance between the stored value and the true quantity it represents.
//! The numeric engine only ever needs field operations against integers and
//! rationals plus pi, so fixed point is exact where it matters:
//!
//! - addition and subtraction carry no rounding at all;
//! - multiplication and division by a positive integer round within one unit
//!   in the last place, which is added to the bound;
//! - every bound combination is computed in `f64` and inflated by a slack
//!   factor that dominates `f64` rounding, keeping the bounds rigorous.
//!
//! Pi is produced by the classical two-term arctangent formula evaluated in
//! integer arithmetic with 64 guard bits.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Default working precision in fractional bits.
pub const DEFAULT_PREC: u32 = 128;

/// Multiplicative slack covering f64 rounding in bound arithmetic.
const SLACK: f64 = 1.0 + 1e-12;

fn up(x: f64) -> f64 {
    x * SLACK
}

/// Fixed-point real: `mantissa / 2^prec`, with `|stored - true| <= bound`.
///
/// Equality compares the stored value only; the bound is metadata.
#[derive(Clone)]
pub struct PrecReal {
    mantissa: BigInt,
    prec: u32,
    bound: f64,
}

impl PartialEq for PrecReal {
    fn eq(&self, other: &Self) -> bool {
        self.prec == other.prec && self.mantissa == other.mantissa
    }
}

impl Eq for PrecReal {}

impl PrecReal {
    pub fn zero(prec: u32) -> Self {
        PrecReal {
            mantissa: BigInt::zero(),
            prec,
            bound: 0.0,
        }
    }

    pub fn one(prec: u32) -> Self {
        Self::from_int(1, prec)
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        PrecReal {
            mantissa: BigInt::from(n) << prec,
            prec,
            bound: 0.0,
        }
    }

    /// Quantize `numer/denom` (`denom > 0`). Exact when the denominator is a
    /// power of two times a divisor of the shifted numerator.
    pub fn from_ratio(numer: &BigInt, denom: &BigInt, prec: u32) -> Self {
        assert!(denom.is_positive(), "denominator must be positive");
        let shifted = numer << prec;
        let mantissa = &shifted / denom;
        let bound = if (&mantissa * denom) == shifted {
            0.0
        } else {
            ulp(prec)
        };
        PrecReal {
            mantissa,
            prec,
            bound,
        }
    }

    pub fn from_rational(value: &BigRational, prec: u32) -> Self {
        Self::from_ratio(value.numer(), value.denom(), prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Rigorous bound on `|stored - true|`.
    pub fn bound(&self) -> f64 {
        self.bound
    }

    fn assert_same_prec(&self, other: &PrecReal) {
        assert_eq!(self.prec, other.prec, "mixed precisions");
    }

    /// Exact addition; bounds add.
    pub fn add(&self, other: &PrecReal) -> PrecReal {
        self.assert_same_prec(other);
        PrecReal {
            mantissa: &self.mantissa + &other.mantissa,
            prec: self.prec,
            bound: up(self.bound + other.bound),
        }
    }

    /// Exact subtraction; bounds add.
    pub fn sub(&self, other: &PrecReal) -> PrecReal {
        self.assert_same_prec(other);
        PrecReal {
            mantissa: &self.mantissa - &other.mantissa,
            prec: self.prec,
            bound: up(self.bound + other.bound),
        }
    }

    pub fn neg(&self) -> PrecReal {
        PrecReal {
            mantissa: -&self.mantissa,
            prec: self.prec,
            bound: self.bound,
        }
    }

    pub fn abs(&self) -> PrecReal {
        PrecReal {
            mantissa: self.mantissa.abs(),
            prec: self.prec,
            bound: self.bound,
        }
    }

    /// Product, rounded within one ulp.
    ///
    /// Bound: `|a| eb + |b| ea + ea eb + ulp` with the stored magnitudes
    /// taken as f64 upper bounds.
    pub fn mul(&self, other: &PrecReal) -> PrecReal {
        self.assert_same_prec(other);
        let product = &self.mantissa * &other.mantissa;
        let mantissa = product >> self.prec;
        let bound = up(self.mag_upper() * other.bound
            + other.mag_upper() * self.bound
            + self.bound * other.bound
            + ulp(self.prec));
        PrecReal {
            mantissa,
            prec: self.prec,
            bound,
        }
    }

    /// Multiply by an exact integer; no rounding.
    pub fn mul_int(&self, n: &BigInt) -> PrecReal {
        let scale = n.to_f64().map(f64::abs).unwrap_or(f64::INFINITY);
        PrecReal {
            mantissa: &self.mantissa * n,
            prec: self.prec,
            bound: up(self.bound * up(scale)),
        }
    }

    /// Divide by an exact positive integer, rounded within one ulp.
    pub fn div_int(&self, n: &BigInt) -> PrecReal {
        assert!(n.is_positive(), "divisor must be positive");
        let scale = n.to_f64().unwrap_or(f64::INFINITY);
        PrecReal {
            mantissa: &self.mantissa / n,
            prec: self.prec,
            bound: up(self.bound / scale * SLACK + ulp(self.prec)),
        }
    }

    /// Integer power by repeated multiplication.
    pub fn powi(&self, k: u32) -> PrecReal {
        let mut result = Self::one(self.prec);
        for _ in 0..k {
            result = result.mul(self);
        }
        result
    }

    /// f64 approximation of the stored value (not an upper bound).
    pub fn to_f64(&self) -> f64 {
        let int_part = (&self.mantissa >> self.prec).to_f64().unwrap_or(f64::NAN);
        let frac_mask = (BigInt::from(1) << self.prec) - 1;
        let frac = (&self.mantissa & &frac_mask).to_f64().unwrap_or(0.0);
        int_part + frac * ulp(self.prec)
    }

    /// f64 upper bound on `|true value|`.
    pub fn mag_upper(&self) -> f64 {
        up(up(self.to_f64().abs()) + self.bound + ulp(self.prec))
    }

    /// f64 upper bound on `|stored(self) - stored(other)|`.
    pub fn abs_diff_f64(&self, other: &PrecReal) -> f64 {
        self.assert_same_prec(other);
        let diff = (&self.mantissa - &other.mantissa).abs();
        up(diff.to_f64().unwrap_or(f64::INFINITY) * ulp(self.prec))
    }

    /// Same value with the bound enlarged by `extra` (used to account for
    /// series truncation on top of accumulated rounding).
    pub fn widen_bound(&self, extra: f64) -> PrecReal {
        PrecReal {
            mantissa: self.mantissa.clone(),
            prec: self.prec,
            bound: up(self.bound + extra),
        }
    }

    /// Decimal rendering, truncated to `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let negative = self.mantissa.is_negative();
        let abs = self.mantissa.abs();
        let int_part = &abs >> self.prec;
        let frac_mask = (BigInt::from(1) << self.prec) - 1;
        let frac = &abs & &frac_mask;
        let scaled = (frac * BigInt::from(10u32).pow(digits as u32)) >> self.prec;
        let mut frac_text = scaled.to_string();
        while frac_text.len() < digits {
            frac_text.insert(0, '0');
        }
        let sign = if negative { "-" } else { "" };
        if digits == 0 {
            format!("{}{}", sign, int_part)
        } else {
            format!("{}{}.{}", sign, int_part, frac_text)
        }
    }
}

impl PartialOrd for PrecReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.assert_same_prec(other);
        self.mantissa.partial_cmp(&other.mantissa)
    }
}

impl fmt::Debug for PrecReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PrecReal({} ± {:.3e} @{}b)",
            self.to_decimal(30),
            self.bound,
            self.prec
        )
    }
}

/// One unit in the last place at the given precision, as an f64 upper bound.
pub fn ulp(prec: u32) -> f64 {
    if prec >= 1000 {
        f64::MIN_POSITIVE
    } else {
        2f64.powi(-(prec as i32))
    }
}

/// `2^shift * arctan(1/k)` in integer arithmetic.
///
/// Alternating series; the truncation error is below the first omitted term
/// and each division contributes under one unit, all at the guarded scale.
fn atan_inv_scaled(k: u64, shift: u32) -> BigInt {
    let k_squared = BigInt::from(k) * BigInt::from(k);
    let mut power = (BigInt::from(1) << shift) / BigInt::from(k);
    let mut total = BigInt::zero();
    let mut j = 0u32;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * j + 1);
        if j.is_multiple_of(2) {
            total += &term;
        } else {
            total -= &term;
        }
        power /= &k_squared;
        j += 1;
    }
    total
}

/// Pi at the given precision: `16 arctan(1/5) - 4 arctan(1/239)`, computed
/// with 64 guard bits so the bound is two ulps.
pub fn pi(prec: u32) -> PrecReal {
    let guard = 64;
    let shift = prec + guard;
    let raw = BigInt::from(16) * atan_inv_scaled(5, shift)
        - BigInt::from(4) * atan_inv_scaled(239, shift);
    PrecReal {
        mantissa: raw >> guard,
        prec,
        bound: up(2.0 * ulp(prec)),
    }
}
