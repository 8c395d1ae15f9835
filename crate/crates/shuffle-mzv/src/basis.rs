//! The `T` and `U` basis subsums of two-letter shuffles and the exact
//! decomposition and generating-function identities they satisfy.
//!
//! `T_{m,n}` is the sum of the `C(m,2n)` distinct words in the shuffle
//! `(ab)^n x (ab)^{m-n}` containing the square `aa` exactly `n` times;
//! `U_{m,n}` the analogue for `b(ab)^{n-1} x b(ab)^{m-n-1}` counting `bb`
//! squares. `T` words are built directly from integer compositions through
//! the correspondence in [`crate::comp`]; the shuffle-filter route is kept
//! alongside as an oracle and the two must agree word for word.
//!
//! All identities here are exact: coefficients are rationals, equality is
//! polynomial equality, and the verifiers report with zero tolerance.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::binomial;
use crate::comp::{compositions_capped, phi};
use crate::poly::{NcPoly, Rational};
use crate::report::Report;
use crate::shuffle::{shuffle_left, word_sum_to_poly};
use crate::words::{Alphabet, Letter, Word};

const A: Letter = Letter(0);
const B: Letter = Letter(1);

/// The word `(ab)^k`.
pub fn ab_power(k: usize) -> Word {
    Word::from_indices(&[0, 1]).pow(k)
}

/// The word `b(ab)^k`.
pub fn b_ab_power(k: usize) -> Word {
    ab_power(k).prepended(B)
}

fn rational_int(value: BigInt) -> Rational {
    Rational::from_integer(value)
}

fn four_pow(n: u64) -> Rational {
    rational_int(BigInt::from(4u32).pow(n as u32))
}

/// `T_{m,n}`: zero unless `m >= n >= 0`, otherwise the sum with unit
/// coefficients of the `C(m,2n)` distinct words described above.
///
/// Built from the composition correspondence: each composition of `m-2n`
/// into `2n+1` parts maps to one word of the subsum.
pub fn build_t(m: i64, n: i64) -> NcPoly {
    let ab = Alphabet::ab();
    if n < 0 || m < n {
        return NcPoly::zero(&ab);
    }
    let (m, n) = (m as u64, n as u64);
    if m < 2 * n {
        // No word can fit n disjoint aa squares; the composition set is empty.
        return NcPoly::zero(&ab);
    }
    let comps = compositions_capped(m - 2 * n, (2 * n + 1) as usize, u64::MAX)
        .expect("uncapped enumeration");
    NcPoly::from_terms(
        &ab,
        comps
            .iter()
            .map(|c| (phi(c).expect("odd part count"), Rational::one())),
    )
}

/// `T_{m,n}` by its defining filter: shuffle `(ab)^n` with `(ab)^{m-n}` and
/// keep the distinct words with exactly `n` squares `aa`. Oracle for
/// [`build_t`].
pub fn build_t_via_shuffle(m: i64, n: i64) -> NcPoly {
    let ab = Alphabet::ab();
    if n < 0 || m < n {
        return NcPoly::zero(&ab);
    }
    let (m, n) = (m as usize, n as usize);
    let kernel = shuffle_left(&ab_power(n), &ab_power(m - n));
    NcPoly::from_terms(
        &ab,
        kernel
            .keys()
            .filter(|w| w.square_count(A) == n)
            .map(|w| (w.clone(), Rational::one())),
    )
}

/// `U_{m,n}`: zero unless `m >= n+1 >= 2`, otherwise the sum with unit
/// coefficients of the distinct words in `b(ab)^{n-1} x b(ab)^{m-n-1}`
/// containing the square `bb` exactly `n` times.
pub fn build_u(m: i64, n: i64) -> NcPoly {
    let ab = Alphabet::ab();
    if n < 1 || m < n + 1 {
        return NcPoly::zero(&ab);
    }
    let (m, n) = (m as usize, n as usize);
    let kernel = shuffle_left(&b_ab_power(n - 1), &b_ab_power(m - n - 1));
    NcPoly::from_terms(
        &ab,
        kernel
            .keys()
            .filter(|w| w.square_count(B) == n)
            .map(|w| (w.clone(), Rational::one())),
    )
}

fn shuffle_of(u: &Word, v: &Word) -> NcPoly {
    word_sum_to_poly(&Alphabet::ab(), &shuffle_left(u, v))
}

/// Exact check of the decomposition
/// `(ab)^p x (ab)^q = sum_n 4^n C(p+q-2n, p-n) T_{p+q,n}`.
pub fn verify_t_basis(p: usize, q: usize) -> Report {
    let lhs = shuffle_of(&ab_power(p), &ab_power(q));
    let mut rhs = NcPoly::zero(&Alphabet::ab());
    for n in 0..=p.min(q) {
        let coefficient =
            four_pow(n as u64) * rational_int(binomial((p + q - 2 * n) as u64, (p - n) as u64));
        rhs = rhs
            .add(&build_t((p + q) as i64, n as i64).scale(&coefficient))
            .unwrap();
    }
    equality_report(
        "T-subsum decomposition of (ab)^p x (ab)^q",
        p,
        q,
        &lhs,
        &rhs,
    )
}

/// Exact check of the decomposition
/// `b(ab)^{p-1} x b(ab)^{q-1} = (1/2) sum_{n>=1} 4^n C(p+q-2n, p-n) U_{p+q,n}`.
///
/// Also confirms every aggregated coefficient on the right is an integer
/// (the half cancels into `4^n`).
pub fn verify_u_basis(p: usize, q: usize) -> Report {
    assert!(p >= 1 && q >= 1, "defined for positive p, q");
    let lhs = shuffle_of(&b_ab_power(p - 1), &b_ab_power(q - 1));
    let mut rhs = NcPoly::zero(&Alphabet::ab());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for n in 1..=p.min(q) {
        let coefficient = &half
            * four_pow(n as u64)
            * rational_int(binomial((p + q - 2 * n) as u64, (p - n) as u64));
        rhs = rhs
            .add(&build_u((p + q) as i64, n as i64).scale(&coefficient))
            .unwrap();
    }
    let mut report = equality_report("U-subsum decomposition with half factor", p, q, &lhs, &rhs);
    if rhs.terms().any(|(_, c)| !c.is_integer()) {
        report.pass = false;
        report
            .parameters
            .insert("integrality".into(), serde_json::Value::from("violated"));
    }
    report
}

/// Exact check of the mixed decomposition of `b(ab)^{p-1} x (ab)^q` into
/// `b T` and `a U` terms.
pub fn verify_mixed(p: usize, q: usize) -> Report {
    assert!(p >= 1, "defined for p >= 1");
    let lhs = shuffle_of(&b_ab_power(p - 1), &ab_power(q));
    let ab = Alphabet::ab();
    let mut rhs = NcPoly::zero(&ab);
    if p >= 1 {
        for n in 0..=(p - 1).min(q) {
            let coefficient = four_pow(n as u64)
                * rational_int(binomial((p + q - 2 * n - 1) as u64, (p - n - 1) as u64));
            let term = build_t((p + q - 1) as i64, n as i64)
                .prepend_word(&Word::from_letters(vec![B]))
                .scale(&coefficient);
            rhs = rhs.add(&term).unwrap();
        }
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for n in 1..=p.min(q) {
        let coefficient = &half
            * four_pow(n as u64)
            * rational_int(binomial((p + q - 2 * n) as u64, (p - n) as u64));
        let term = build_u((p + q) as i64, n as i64)
            .prepend_word(&Word::from_letters(vec![A]))
            .scale(&coefficient);
        rhs = rhs.add(&term).unwrap();
    }
    equality_report(
        "mixed decomposition of b(ab)^{p-1} x (ab)^q",
        p,
        q,
        &lhs,
        &rhs,
    )
}

fn equality_report(statement: &str, p: usize, q: usize, lhs: &NcPoly, rhs: &NcPoly) -> Report {
    let failures = if lhs == rhs {
        vec![]
    } else {
        vec![format!("p={} q={}", p, q)]
    };
    Report::exact(statement, 1, failures)
        .with_param("p", p as u64)
        .with_param("q", q as u64)
}

/// A polynomial in two commuting indeterminates whose coefficients are
/// shuffle-algebra elements, keyed by the exponent pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivariatePoly {
    terms: BTreeMap<(usize, usize), NcPoly>,
}

impl BivariatePoly {
    pub fn new() -> Self {
        BivariatePoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, poly: &NcPoly) {
        if poly.is_zero() {
            return;
        }
        match self.terms.remove(&(i, j)) {
            None => {
                self.terms.insert((i, j), poly.clone());
            }
            Some(existing) => {
                let sum = existing.add(poly).unwrap();
                if !sum.is_zero() {
                    self.terms.insert((i, j), sum);
                }
            }
        }
    }

    pub fn coefficient(&self, i: usize, j: usize) -> NcPoly {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| NcPoly::zero(&Alphabet::ab()))
    }

    pub fn keys(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.terms.keys()
    }
}

impl Default for BivariatePoly {
    fn default() -> Self {
        Self::new()
    }
}

/// A series in two families of indexed indeterminates `x_k`, `y_l`, each
/// term bilinear in one of each; keyed by the index pair.
///
/// The indeterminates need not commute with each other, but every term here
/// carries exactly one `x` and one `y`, so the index pair is a faithful key.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UmbralSeries {
    terms: BTreeMap<(usize, usize), NcPoly>,
}

impl UmbralSeries {
    pub fn new() -> Self {
        UmbralSeries {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_at(&mut self, k: usize, l: usize, poly: &NcPoly) {
        if poly.is_zero() {
            return;
        }
        match self.terms.remove(&(k, l)) {
            None => {
                self.terms.insert((k, l), poly.clone());
            }
            Some(existing) => {
                let sum = existing.add(poly).unwrap();
                if !sum.is_zero() {
                    self.terms.insert((k, l), sum);
                }
            }
        }
    }

    pub fn coefficient(&self, k: usize, l: usize) -> NcPoly {
        self.terms
            .get(&(k, l))
            .cloned()
            .unwrap_or_else(|| NcPoly::zero(&Alphabet::ab()))
    }

    /// Substitute the geometric specialization `x_k = x^k`, `y_l = y^l`:
    /// index pairs become exponent pairs unchanged.
    pub fn specialize_geometric(&self) -> BivariatePoly {
        let mut out = BivariatePoly::new();
        for (&(k, l), poly) in &self.terms {
            out.add_at(k, l, poly);
        }
        out
    }
}

impl Default for UmbralSeries {
    fn default() -> Self {
        Self::new()
    }
}

fn binom_rational(n: usize, k: usize) -> Rational {
    rational_int(binomial(n as u64, k as u64))
}

/// Left side of the bivariate T identity:
/// `sum_k x^k y^{m-k} [(ab)^k x (ab)^{m-k}]`.
pub fn t_binom_lhs(m: usize) -> BivariatePoly {
    let mut out = BivariatePoly::new();
    for k in 0..=m {
        out.add_at(k, m - k, &shuffle_of(&ab_power(k), &ab_power(m - k)));
    }
    out
}

/// Right side of the bivariate T identity:
/// `sum_n (4xy)^n (x+y)^{m-2n} T_{m,n}` with the binomial expansion of
/// `(x+y)^{m-2n}` written out.
pub fn t_binom_rhs(m: usize) -> BivariatePoly {
    let mut out = BivariatePoly::new();
    for n in 0..=m / 2 {
        let t = build_t(m as i64, n as i64);
        for j in 0..=m - 2 * n {
            let coefficient = four_pow(n as u64) * binom_rational(m - 2 * n, j);
            out.add_at(n + j, m - n - j, &t.scale(&coefficient));
        }
    }
    out
}

/// Bivariate-identity check for `T`, all exponent pairs compared exactly.
pub fn verify_t_binom(m: usize) -> Report {
    let (lhs, rhs) = (t_binom_lhs(m), t_binom_rhs(m));
    let failures = if lhs == rhs {
        vec![]
    } else {
        vec![format!("m={}", m)]
    };
    Report::exact("bivariate shuffle convolution identity (T)", 1, failures)
        .with_param("m", m as u64)
}

/// Left side of the bivariate U identity, defined for `m >= 2`.
pub fn u_binom_lhs(m: usize) -> BivariatePoly {
    let mut out = BivariatePoly::new();
    for k in 1..=m - 1 {
        out.add_at(
            k,
            m - k,
            &shuffle_of(&b_ab_power(k - 1), &b_ab_power(m - k - 1)),
        );
    }
    out
}

/// Right side of the bivariate U identity with the half factor.
pub fn u_binom_rhs(m: usize) -> BivariatePoly {
    let mut out = BivariatePoly::new();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for n in 1..=m / 2 {
        let u = build_u(m as i64, n as i64);
        for j in 0..=m - 2 * n {
            let coefficient = &half * four_pow(n as u64) * binom_rational(m - 2 * n, j);
            out.add_at(n + j, m - n - j, &u.scale(&coefficient));
        }
    }
    out
}

/// Bivariate-identity check for `U` (`m >= 2`).
pub fn verify_u_binom(m: usize) -> Report {
    assert!(m >= 2);
    let (lhs, rhs) = (u_binom_lhs(m), u_binom_rhs(m));
    let failures = if lhs == rhs {
        vec![]
    } else {
        vec![format!("m={}", m)]
    };
    Report::exact("bivariate shuffle convolution identity (U)", 1, failures)
        .with_param("m", m as u64)
}

fn umbral_t_sides(m: usize) -> (UmbralSeries, UmbralSeries) {
    let mut lhs = UmbralSeries::new();
    for k in 0..=m {
        lhs.add_at(k, m - k, &shuffle_of(&ab_power(k), &ab_power(m - k)));
    }
    let mut rhs = UmbralSeries::new();
    for n in 0..=m / 2 {
        let t = build_t(m as i64, n as i64);
        for j in 0..=m - 2 * n {
            let coefficient = four_pow(n as u64) * binom_rational(m - 2 * n, j);
            rhs.add_at(n + j, m - n - j, &t.scale(&coefficient));
        }
    }
    (lhs, rhs)
}

fn umbral_u_sides(m: usize) -> (UmbralSeries, UmbralSeries) {
    let mut lhs = UmbralSeries::new();
    for k in 1..=m.saturating_sub(1) {
        lhs.add_at(
            k,
            m - k,
            &shuffle_of(&b_ab_power(k - 1), &b_ab_power(m - k - 1)),
        );
    }
    let mut rhs = UmbralSeries::new();
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for n in 1..=m / 2 {
        let u = build_u(m as i64, n as i64);
        for j in 0..=m - 2 * n {
            let coefficient = &half * four_pow(n as u64) * binom_rational(m - 2 * n, j);
            rhs.add_at(n + j, m - n - j, &u.scale(&coefficient));
        }
    }
    (lhs, rhs)
}

/// Indexed-series convolution check for both the T and U variants at weight
/// `m`, plus the cross-check that the geometric specialization reproduces
/// the bivariate sides exactly.
pub fn verify_umbral(m: usize) -> Report {
    let mut failures = Vec::new();
    let (t_lhs, t_rhs) = umbral_t_sides(m);
    if t_lhs != t_rhs {
        failures.push(format!("T variant at m={}", m));
    }
    if t_lhs.specialize_geometric() != t_binom_lhs(m)
        || t_rhs.specialize_geometric() != t_binom_rhs(m)
    {
        failures.push(format!("T geometric specialization at m={}", m));
    }
    let mut cases = 1;
    if m >= 2 {
        cases += 1;
        let (u_lhs, u_rhs) = umbral_u_sides(m);
        if u_lhs != u_rhs {
            failures.push(format!("U variant at m={}", m));
        }
        if u_lhs.specialize_geometric() != u_binom_lhs(m)
            || u_rhs.specialize_geometric() != u_binom_rhs(m)
        {
            failures.push(format!("U geometric specialization at m={}", m));
        }
    }
    Report::exact(
        "indexed-series shuffle convolution identities",
        cases,
        failures,
    )
    .with_param("m", m as u64)
}

/// Shape predicate for `T` words with `m >= 1`: `n` squares of each letter,
/// `m` of each letter in total, first letter `a`, last letter `b`.
pub fn t_word_shape_ok(word: &Word, m: usize, n: usize) -> bool {
    word.square_count(A) == n
        && word.square_count(B) == n
        && word.letter_count(A) == m
        && word.letter_count(B) == m
        && word.first() == Some(A)
        && word.last() == Some(B)
}

/// Run the full exact suite: decompositions for `p+q <= max`, bivariate
/// identities for `m <= max`, indexed-series identities for `m <= max-2`,
/// and support-size / two-route / word-shape checks for `m <= max+2`.
pub fn basis_suite(max: usize) -> Vec<Report> {
    let mut reports = Vec::new();

    let mut failures = Vec::new();
    let mut cases = 0;
    for total in 0..=max {
        for p in 0..=total {
            let q = total - p;
            cases += 1;
            if !verify_t_basis(p, q).pass {
                failures.push(format!("p={} q={}", p, q));
            }
        }
    }
    reports.push(
        Report::exact("T-subsum decomposition of (ab)^p x (ab)^q", cases, failures)
            .with_param("max_pq", max as u64),
    );

    let mut failures = Vec::new();
    let mut cases = 0;
    for total in 2..=max {
        for p in 1..total {
            let q = total - p;
            cases += 1;
            if !verify_u_basis(p, q).pass {
                failures.push(format!("p={} q={}", p, q));
            }
        }
    }
    reports.push(
        Report::exact("U-subsum decomposition with half factor", cases, failures)
            .with_param("max_pq", max as u64),
    );

    let mut failures = Vec::new();
    let mut cases = 0;
    for total in 1..=max {
        for p in 1..=total {
            let q = total - p;
            cases += 1;
            if !verify_mixed(p, q).pass {
                failures.push(format!("p={} q={}", p, q));
            }
        }
    }
    reports.push(
        Report::exact(
            "mixed decomposition of b(ab)^{p-1} x (ab)^q",
            cases,
            failures,
        )
        .with_param("max_pq", max as u64),
    );

    let mut failures = Vec::new();
    let mut cases = 0;
    for m in 0..=max {
        cases += 1;
        if !verify_t_binom(m).pass {
            failures.push(format!("T m={}", m));
        }
        if m >= 2 {
            cases += 1;
            if !verify_u_binom(m).pass {
                failures.push(format!("U m={}", m));
            }
        }
    }
    reports.push(
        Report::exact(
            "bivariate shuffle convolution identities (T and U)",
            cases,
            failures,
        )
        .with_param("max_m", max as u64),
    );

    let mut failures = Vec::new();
    let umbral_max = max.saturating_sub(2);
    for m in 0..=umbral_max {
        if !verify_umbral(m).pass {
            failures.push(format!("m={}", m));
        }
    }
    reports.push(
        Report::exact(
            "indexed-series shuffle convolution identities",
            umbral_max + 1,
            failures,
        )
        .with_param("max_m", umbral_max as u64),
    );

    let mut failures = Vec::new();
    let mut cases = 0;
    let support_max = max + 2;
    for m in 0..=support_max {
        for n in 0..=m / 2 {
            cases += 1;
            let t = build_t(m as i64, n as i64);
            let expected: u64 = binomial(m as u64, 2 * n as u64).try_into().unwrap();
            if t.support_size() as u64 != expected {
                failures.push(format!("support size m={} n={}", m, n));
            }
            if t != build_t_via_shuffle(m as i64, n as i64) {
                failures.push(format!("route disagreement m={} n={}", m, n));
            }
            if m >= 1 && !t.terms().all(|(word, _)| t_word_shape_ok(word, m, n)) {
                failures.push(format!("word shape m={} n={}", m, n));
            }
        }
    }
    reports.push(
        Report::exact(
            "T support size, route agreement and word shape",
            cases,
            failures,
        )
        .with_param("max_m", support_max as u64),
    );

    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use crate::words::parse_word;

    fn ab() -> Alphabet {
        Alphabet::ab()
    }

    fn w(text: &str) -> Word {
        parse_word(text, &ab()).unwrap()
    }

    #[test]
    fn t_2_values() {
        assert_eq!(build_t(2, 0), NcPoly::word(&ab(), w("abab")));
        assert_eq!(build_t(2, 1), NcPoly::word(&ab(), w("aabb")));
        assert_eq!(build_t(1, 0), NcPoly::word(&ab(), w("ab")));
        assert_eq!(build_t(0, 0), NcPoly::one(&ab()));
    }

    #[test]
    fn t_vanishes_off_range() {
        assert!(build_t(2, 3).is_zero());
        assert!(build_t(2, -1).is_zero());
        assert!(build_t(-1, -2).is_zero());
        assert!(build_t(3, 2).is_zero());
    }

    #[test]
    fn t_routes_agree_small() {
        for m in 0..=8i64 {
            for n in 0..=m / 2 {
                assert_eq!(build_t(m, n), build_t_via_shuffle(m, n), "m={} n={}", m, n);
            }
        }
    }

    #[test]
    fn t_support_size() {
        for m in 0..=10i64 {
            for n in 0..=m {
                let expected: u64 = binomial(m as u64, 2 * n as u64).try_into().unwrap();
                assert_eq!(
                    build_t(m, n).support_size() as u64,
                    expected,
                    "m={} n={}",
                    m,
                    n
                );
            }
        }
    }

    #[test]
    fn u_values() {
        assert_eq!(build_u(2, 1), NcPoly::word(&ab(), w("bb")));
        let expected = NcPoly::from_terms(&ab(), [(w("bbab"), int(1)), (w("babb"), int(1))]);
        assert_eq!(build_u(3, 1), expected);
        assert!(build_u(2, 0).is_zero());
        assert!(build_u(1, 1).is_zero());
        assert!(build_u(5, -1).is_zero());
    }

    #[test]
    fn t_basis_hand_cases() {
        // p = q = 1: shuffle(ab, ab) = 2 T_{2,0} + 4 T_{2,1}.
        assert!(verify_t_basis(1, 1).pass);
        let rhs = build_t(2, 0)
            .scale(&int(2))
            .add(&build_t(2, 1).scale(&int(4)))
            .unwrap();
        assert_eq!(rhs, shuffle_of(&ab_power(1), &ab_power(1)));
        // p = 0: only the n = 0 term survives.
        for q in 0..=4 {
            assert!(verify_t_basis(0, q).pass);
        }
    }

    #[test]
    fn u_basis_hand_cases() {
        // p = q = 1: b x b = 2bb = (1/2) * 4 * U_{2,1}.
        assert!(verify_u_basis(1, 1).pass);
        assert!(verify_u_basis(1, 2).pass);
        assert!(verify_u_basis(2, 2).pass);
    }

    #[test]
    fn mixed_hand_cases() {
        // p = 1, q = 1: b x ab = bab + 2abb.
        let lhs = shuffle_of(&b_ab_power(0), &ab_power(1));
        let expected = NcPoly::from_terms(&ab(), [(w("bab"), int(1)), (w("abb"), int(2))]);
        assert_eq!(lhs, expected);
        assert!(verify_mixed(1, 1).pass);
        // q = 0 leaves only the leading bT term.
        for p in 1..=4 {
            assert!(verify_mixed(p, 0).pass);
        }
    }

    #[test]
    fn binom_small() {
        for m in 0..=6 {
            assert!(verify_t_binom(m).pass, "T m={}", m);
        }
        for m in 2..=6 {
            assert!(verify_u_binom(m).pass, "U m={}", m);
        }
    }

    #[test]
    fn umbral_small() {
        for m in 0..=6 {
            assert!(verify_umbral(m).pass, "m={}", m);
        }
    }

    #[test]
    fn even_weight_mass_identity() {
        // On the diagonal p = q = m/2 the T decomposition must account for
        // the full shuffle mass C(2m, m) of (ab)^{m/2} x (ab)^{m/2}.
        for half in 0..=5u64 {
            let m = 2 * half;
            let mut total = BigInt::from(0);
            for n in 0..=half {
                total += BigInt::from(4u32).pow(n as u32)
                    * binomial(m - 2 * n, half - n)
                    * binomial(m, 2 * n);
            }
            assert_eq!(total, binomial(2 * m, m), "m={}", m);
        }
    }

    #[test]
    fn word_shape_predicate() {
        for m in 1..=7usize {
            for n in 0..=m / 2 {
                for (word, _) in build_t(m as i64, n as i64).terms() {
                    assert!(t_word_shape_ok(word, m, n), "m={} n={}", m, n);
                }
            }
        }
    }
}
