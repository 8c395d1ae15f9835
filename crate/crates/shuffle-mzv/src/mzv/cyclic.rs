//! Insertion sums of repeated twos, their cyclic sums, the closed-form
//! aggregate theorem, and the open-conjecture scanner.
//!
//! `Z(c)` is the zeta value of the word `phi(c)`: blocks of twos inserted
//! into the alternating 3,1 string according to the composition `c`. The
//! proved aggregate results evaluated here are
//!
//! - `sum of Z over all compositions of m-2n into 2n+1 parts
//!    = 2 pi^{2m} / (2m+2)! * C(m+1, 2n+1)`, and
//! - the equivalent cyclic form: `sum of the cyclic sums = Z(m) C(m, 2n)`
//!   with `Z(m) = pi^{2m} / (2m+1)!`.
//!
//! The scanner probes the stronger open statement that every single cyclic
//! sum already equals `Z(m)`. Consistency within tolerance is evidence, not
//! proof, and the reports say so.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::arith::{binomial, factorial};
use crate::basis::build_t;
use crate::comp::{compositions, phi, Composition};
use crate::report::Report;

use super::holder::HolderCache;
use super::real::{pi, PrecReal};
use super::MzvError;

/// Tolerance for the composition-sum aggregates against their closed forms.
pub const THEOREM_T_SUM_TOL: f64 = 1e-8;
/// Tolerance for the two evaluation routes of the same aggregate.
pub const THEOREM_T_CROSS_TOL: f64 = 1e-10;
/// Tolerance of the conjecture scanner.
pub const SCAN_TOL: f64 = 1e-8;

/// `Z(m) = pi^{2m} / (2m+1)!`, the closed form of the all-twos value.
pub fn z_closed(m: u64, prec: u32) -> PrecReal {
    pi(prec).powi(2 * m as u32).div_int(&factorial(2 * m + 1))
}

/// `2 pi^{4n} / (4n+2)!`, the closed form of the repeated 3,1 value.
pub fn zeta_31_closed(n: u64, prec: u32) -> PrecReal {
    theorem_t_target(2 * n, n, prec)
}

/// The aggregate closed form `2 pi^{2m} / (2m+2)! * C(m+1, 2n+1)`.
pub fn theorem_t_target(m: u64, n: u64, prec: u32) -> PrecReal {
    pi(prec)
        .powi(2 * m as u32)
        .mul_int(&(BigInt::from(2) * binomial(m + 1, 2 * n + 1)))
        .div_int(&factorial(2 * m + 2))
}

/// `Z(c)`: the zeta value of the word attached to an odd composition.
pub fn z_of(c: &Composition, terms: u64, prec: u32) -> Result<PrecReal, MzvError> {
    let mut cache = HolderCache::new(terms, prec);
    z_of_cached(c, &mut cache)
}

fn z_of_cached(c: &Composition, cache: &mut HolderCache) -> Result<PrecReal, MzvError> {
    let word = phi(c)?;
    cache.zeta(&word)
}

/// The cyclic sum: `Z` summed over all rotations of the composition.
pub fn cyclic_sum(c: &Composition, terms: u64, prec: u32) -> Result<PrecReal, MzvError> {
    let mut cache = HolderCache::new(terms, prec);
    cyclic_sum_cached(c, &mut cache)
}

fn cyclic_sum_cached(c: &Composition, cache: &mut HolderCache) -> Result<PrecReal, MzvError> {
    let mut total = PrecReal::zero(cache.prec());
    for rotation in c.rotations() {
        total = total.add(&z_of_cached(&rotation, cache)?);
    }
    Ok(total)
}

/// Verify the aggregate identities at one `(m, n)` with `m >= 2n`.
///
/// Produces three reports: the composition sum against its closed form, the
/// cyclic-sum aggregate against `Z(m) C(m,2n)` (with the rotation bookkeeping
/// checked structurally), and the agreement of the same sum taken over the
/// words of the `T` subsum.
pub fn verify_theorem_t(m: u64, n: u64, terms: u64, prec: u32) -> Result<Vec<Report>, MzvError> {
    if m < 2 * n {
        return Err(MzvError::InvalidArguments(format!(
            "need m >= 2n, got m={} n={}",
            m, n
        )));
    }
    let comps = compositions(m - 2 * n, (2 * n + 1) as usize)?;
    let mut cache = HolderCache::new(terms, prec);

    let mut composition_sum = PrecReal::zero(prec);
    for c in &comps {
        composition_sum = composition_sum.add(&z_of_cached(c, &mut cache)?);
    }
    let target = theorem_t_target(m, n, prec);
    let report_sum = Report::numeric(
        "sum of inserted-twos zeta values over compositions equals closed form",
        composition_sum.to_decimal(24),
        target.to_decimal(24),
        composition_sum.abs_diff_f64(&target),
        composition_sum.bound() + target.bound(),
        THEOREM_T_SUM_TOL,
    )
    .with_param("m", m)
    .with_param("n", n)
    .with_param("compositions", comps.len() as u64);

    // The cyclic aggregate counts every Z exactly 2n+1 times: check the
    // rotation multiset structurally, then compare numerically.
    let mut rotation_counts: BTreeMap<Composition, u64> = BTreeMap::new();
    for c in &comps {
        for rotation in c.rotations() {
            *rotation_counts.entry(rotation).or_insert(0) += 1;
        }
    }
    let multiplicity = 2 * n + 1;
    let structure_ok = rotation_counts.len() == comps.len()
        && comps
            .iter()
            .all(|c| rotation_counts.get(c) == Some(&multiplicity));
    let cyclic_aggregate = composition_sum.mul_int(&BigInt::from(multiplicity));
    let cyclic_target = z_closed(m, prec).mul_int(&binomial(m, 2 * n));
    let mut report_cyclic = Report::numeric(
        "aggregate of cyclic sums equals Z(m) times composition count",
        cyclic_aggregate.to_decimal(24),
        cyclic_target.to_decimal(24),
        cyclic_aggregate.abs_diff_f64(&cyclic_target),
        cyclic_aggregate.bound() + cyclic_target.bound(),
        THEOREM_T_SUM_TOL * multiplicity as f64,
    )
    .with_param("m", m)
    .with_param("n", n);
    if !structure_ok {
        report_cyclic.pass = false;
        report_cyclic
            .parameters
            .insert("rotation_structure".into(), "violated".into());
    }

    // Same aggregate through the T subsum support; also requires the word
    // sets to coincide exactly.
    let t_poly = build_t(m as i64, n as i64);
    let image: BTreeMap<_, _> = comps
        .iter()
        .map(|c| (phi(c).expect("odd parts"), ()))
        .collect();
    let words_match =
        t_poly.support_size() == image.len() && t_poly.terms().all(|(w, _)| image.contains_key(w));
    let mut t_sum = PrecReal::zero(prec);
    for (word, _) in t_poly.terms() {
        t_sum = t_sum.add(&cache.zeta(word)?);
    }
    let mut report_cross = Report::numeric(
        "composition route and T-subsum route agree",
        composition_sum.to_decimal(24),
        t_sum.to_decimal(24),
        composition_sum.abs_diff_f64(&t_sum),
        composition_sum.bound() + t_sum.bound(),
        THEOREM_T_CROSS_TOL,
    )
    .with_param("m", m)
    .with_param("n", n);
    if !words_match {
        report_cross.pass = false;
        report_cross
            .parameters
            .insert("word_sets".into(), "differ".into());
    }

    Ok(vec![report_sum, report_cyclic, report_cross])
}

/// Run [`verify_theorem_t`] for every pair `0 <= 2n <= m <= max_m`,
/// collapsing to one report per statement kind.
pub fn theorem_t_suite(max_m: u64, terms: u64, prec: u32) -> Vec<Report> {
    let mut worst: [Option<Report>; 3] = [None, None, None];
    let mut all_pass = [true; 3];
    let mut cases = 0u64;
    for m in 0..=max_m {
        for n in 0..=m / 2 {
            cases += 1;
            let reports = verify_theorem_t(m, n, terms, prec).expect("m >= 2n by construction");
            for (i, report) in reports.into_iter().enumerate() {
                all_pass[i] &= report.pass;
                let replace = match worst[i].as_ref() {
                    None => true,
                    Some(held) => report.abs_error.unwrap_or(0.0) > held.abs_error.unwrap_or(0.0),
                };
                if replace {
                    worst[i] = Some(report);
                }
            }
        }
    }
    let mut out = Vec::new();
    for (i, slot) in worst.into_iter().enumerate() {
        if let Some(mut report) = slot {
            report.pass = report.pass && all_pass[i];
            report.parameters.insert("max_m".into(), max_m.into());
            report.parameters.insert("cases".into(), cases.into());
            report
                .parameters
                .insert("shown".into(), "worst case".into());
            out.push(report);
        }
    }
    out
}

/// Outcome of a conjecture scan: per-weight reports plus the overall verdict.
pub struct ScanOutcome {
    pub reports: Vec<Report>,
    pub max_deviation: f64,
    pub worst_case: String,
    pub deviated: bool,
}

impl ScanOutcome {
    pub fn status(&self) -> &'static str {
        if self.deviated {
            "DEVIATION"
        } else {
            "conjecture-consistent"
        }
    }
}

/// Scan the cyclic-insertion statement: for every composition of every
/// weight `m <= max_m`, compare the cyclic sum against `Z(m)`.
///
/// This probes an OPEN conjecture; a clean scan is consistency at the given
/// tolerance, never proof. Any exceedance is reported as a deviation rather
/// than asserted impossible.
pub fn scan_conjecture(max_m: u64, terms: u64, prec: u32, tolerance: f64) -> ScanOutcome {
    let mut reports = Vec::new();
    let mut max_deviation = 0.0f64;
    let mut worst_case = String::from("none");
    let mut deviated = false;

    for m in 0..=max_m {
        let closed = z_closed(m, prec);
        let mut cache = HolderCache::new(terms, prec);
        let mut z_values: BTreeMap<Composition, PrecReal> = BTreeMap::new();
        let mut m_max = 0.0f64;
        let mut m_worst = String::from("none");
        let mut m_worst_value = closed.clone();
        let mut m_bound = 0.0f64;
        let mut count = 0u64;
        for n in 0..=m / 2 {
            let comps = compositions(m - 2 * n, (2 * n + 1) as usize)
                .expect("scan sizes are far below the cap");
            for c in comps {
                count += 1;
                let mut cyclic = PrecReal::zero(prec);
                for rotation in c.rotations() {
                    if !z_values.contains_key(&rotation) {
                        let value =
                            z_of_cached(&rotation, &mut cache).expect("phi words are admissible");
                        z_values.insert(rotation.clone(), value);
                    }
                    cyclic = cyclic.add(&z_values[&rotation]);
                }
                let deviation = cyclic.abs_diff_f64(&closed);
                if deviation > m_max {
                    m_max = deviation;
                    m_worst = c.to_string();
                    m_worst_value = cyclic.clone();
                    m_bound = cyclic.bound() + closed.bound();
                }
            }
        }
        let report = Report::numeric(
            "cyclic sum equals Z(m) for every composition (conjecture scan)",
            m_worst_value.to_decimal(24),
            closed.to_decimal(24),
            m_max,
            m_bound,
            tolerance,
        )
        .with_param("m", m)
        .with_param("compositions", count)
        .with_param("worst", m_worst.clone());
        if m_max > max_deviation {
            max_deviation = m_max;
            worst_case = format!("m={} {}", m, m_worst);
        }
        deviated = deviated || !report.pass;
        reports.push(report);
    }

    ScanOutcome {
        reports,
        max_deviation,
        worst_case,
        deviated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp::Composition;

    const PREC: u32 = 128;
    const TERMS: u64 = 64;

    fn comp(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn z_closed_small_values() {
        assert_eq!(z_closed(0, PREC), PrecReal::one(PREC));
        // Z(1) = pi^2/6.
        let z1 = z_closed(1, PREC);
        assert!((z1.to_f64() - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
        // Z(2) = pi^4/120.
        let z2 = z_closed(2, PREC);
        assert!((z2.to_f64() - std::f64::consts::PI.powi(4) / 120.0).abs() < 1e-13);
    }

    #[test]
    fn z_of_all_zero_composition_is_zeta_31_block() {
        // (0,0,0) maps to aabb: zeta(3,1) = pi^4/360.
        let value = z_of(&comp(&[0, 0, 0]), TERMS, PREC).unwrap();
        assert!((value.to_f64() - 0.27058080842778454).abs() < 1e-10);
        let closed = zeta_31_closed(1, PREC);
        assert!(value.abs_diff_f64(&closed) < 1e-12);
    }

    #[test]
    fn cyclic_sum_unrolls_the_rotations() {
        let c = comp(&[1, 0, 0]);
        let direct = cyclic_sum(&c, TERMS, PREC).unwrap();
        let mut expected = PrecReal::zero(PREC);
        for parts in [[1u64, 0, 0], [0, 0, 1], [0, 1, 0]] {
            expected = expected.add(&z_of(&comp(&parts), TERMS, PREC).unwrap());
        }
        assert_eq!(direct, expected);
    }

    #[test]
    fn cyclic_sum_is_rotation_invariant() {
        let c = comp(&[2, 1, 0]);
        let base = cyclic_sum(&c, TERMS, PREC).unwrap();
        for j in 1..3 {
            let rotated = cyclic_sum(&c.rotate_left(j), TERMS, PREC).unwrap();
            assert!(base.abs_diff_f64(&rotated) < 1e-12);
        }
    }

    #[test]
    fn all_zero_cyclic_sum_is_odd_multiple_of_31_block() {
        // C((0,...,0)) with 2n+1 zeros = (2n+1) zeta({3,1}^n).
        for n in 0..=2u64 {
            let zeros = comp(&vec![0u64; (2 * n + 1) as usize]);
            let cyclic = cyclic_sum(&zeros, TERMS, PREC).unwrap();
            let expected = zeta_31_closed(n, PREC).mul_int(&BigInt::from(2 * n + 1));
            assert!(
                cyclic.abs_diff_f64(&expected) < 1e-10,
                "n={} diff={}",
                n,
                cyclic.abs_diff_f64(&expected)
            );
        }
    }

    #[test]
    fn theorem_holds_at_small_weights() {
        // (2,1): single composition, sum = zeta(3,1) = pi^4/360.
        for report in verify_theorem_t(2, 1, TERMS, PREC).unwrap() {
            assert!(report.pass, "{}", report.line());
        }
        // (3,1): 2 pi^6/8! C(4,3) = pi^6/5040 = 0.19075182...
        let reports = verify_theorem_t(3, 1, TERMS, PREC).unwrap();
        assert!((theorem_t_target(3, 1, PREC).to_f64() - 0.19075182412208421).abs() < 1e-12);
        for report in reports {
            assert!(report.pass, "{}", report.line());
        }
        // n = 0: single composition (m), closed form via binomial identity.
        for m in 0..=4 {
            for report in verify_theorem_t(m, 0, TERMS, PREC).unwrap() {
                assert!(report.pass, "{}", report.line());
            }
        }
    }

    #[test]
    fn theorem_rejects_m_below_2n() {
        assert!(verify_theorem_t(1, 1, TERMS, PREC).is_err());
    }

    #[test]
    fn scan_small_weights_is_consistent() {
        let outcome = scan_conjecture(3, TERMS, PREC, SCAN_TOL);
        assert!(!outcome.deviated, "worst: {}", outcome.worst_case);
        assert!(outcome.max_deviation <= 1e-10);
        assert_eq!(outcome.status(), "conjecture-consistent");
        assert_eq!(outcome.reports.len(), 4);
    }
}
