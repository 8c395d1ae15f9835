//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Exact criteria run at zero tolerance; numeric criteria at the pinned
//! absolute tolerances. The stated runtime budgets are asserted too, which
//! is why the workspace pins `opt-level = 2` for tests.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use shuffle_mzv::basis::basis_suite;
use shuffle_mzv::lie::{
    exp_functional_equation_check, nc_binomial_check, ree_inverse_check, vacuum_sweep,
};
use shuffle_mzv::mzv::checks::{
    closed_form_suite, duality_suite, holder_vs_direct_suite, shuffle_homomorphism_suite,
};
use shuffle_mzv::mzv::{scan_conjecture, theorem_t_suite, SCAN_TOL};
use shuffle_mzv::report::Report;
use shuffle_mzv::shuffle::kernel_agreement_sweep;
use shuffle_mzv::words::{Alphabet, Word};

const TERMS: u64 = 64;
const PREC: u32 = 128;

fn conclude(criterion: &str, reports: &[Report], elapsed: Duration, budget: Duration) {
    let all_pass = reports.iter().all(|r| r.pass);
    let verdict = if all_pass && elapsed <= budget {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "{} {} ({} statements, {:.1?} of {:.0?} budget)",
        verdict,
        criterion,
        reports.len(),
        elapsed,
        budget
    );
    for report in reports {
        assert!(report.pass, "{}: {}", criterion, report.line());
    }
    assert!(
        elapsed <= budget,
        "{}: {:.1?} exceeded {:.0?}",
        criterion,
        elapsed,
        budget
    );
}

#[test]
fn criterion_1_shuffle_kernel_agreement() {
    let start = Instant::now();
    let reports = vec![
        kernel_agreement_sweep(&Alphabet::ab(), 12),
        kernel_agreement_sweep(&Alphabet::abc(), 8),
    ];
    conclude(
        "criterion 1: three shuffle kernels agree (length <= 12 on two letters, <= 8 on three)",
        &reports,
        start.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_2_exponential_series_identities() {
    let start = Instant::now();
    let ab = Alphabet::ab();
    let reports = vec![
        vacuum_sweep(&ab, 8),
        ree_inverse_check(&ab, 6),
        exp_functional_equation_check(&ab, 5),
        nc_binomial_check(8),
    ];
    conclude(
        "criterion 2: vacuum sums, shuffle inverse, functional equation, binomial theorem",
        &reports,
        start.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_3_basis_subsums_exact() {
    let start = Instant::now();
    // max 10 drives p+q <= 10 and bivariate m <= 10; the suite derives the
    // indexed-series bound m <= 8 and the support/route bound m <= 12.
    let reports = basis_suite(10);
    conclude(
        "criterion 3: subsum decompositions and generating identities, exact",
        &reports,
        start.elapsed(),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_4_closed_form_numerics() {
    let start = Instant::now();
    let reports = closed_form_suite(6, 3, TERMS, PREC, 1e-10);
    conclude(
        "criterion 4: repeated-two and repeated-3,1 closed forms within 1e-10",
        &reports,
        start.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_5_aggregate_theorem() {
    let start = Instant::now();
    let reports = theorem_t_suite(8, TERMS, PREC);
    assert_eq!(reports.len(), 3, "sum, cyclic aggregate, and route checks");
    conclude(
        "criterion 5: insertion-sum aggregates for all m <= 8 (1e-8, routes to 1e-10)",
        &reports,
        start.elapsed(),
        Duration::from_secs(120),
    );
}

fn random_admissible_words(count: usize, max_len: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut words = Vec::with_capacity(count);
    while words.len() < count {
        let len = rng.gen_range(2..=max_len);
        let mut letters = vec![0u8; len];
        for slot in letters.iter_mut().take(len - 1).skip(1) {
            *slot = rng.gen_range(0..=1);
        }
        letters[len - 1] = 1;
        words.push(Word::from_indices(&letters));
    }
    words
}

#[test]
fn criterion_6_oracle_cross_checks() {
    let start = Instant::now();
    let words = random_admissible_words(50, 6, 0x5eed);
    let reports = vec![
        holder_vs_direct_suite(&words, TERMS, 100_000, 64).expect("admissible words"),
        duality_suite(8, TERMS, PREC, 1e-10),
        shuffle_homomorphism_suite(8, TERMS, PREC, 1e-9),
    ];
    conclude(
        "criterion 6: convolution vs direct oracle, duality, product rule",
        &reports,
        start.elapsed(),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_7_conjecture_scan() {
    let start = Instant::now();
    let outcome = scan_conjecture(7, TERMS, PREC, SCAN_TOL);
    let elapsed = start.elapsed();
    println!(
        "{} criterion 7: conjecture scan m <= 7 ({}, max deviation {:.3e} at {}, {:.1?})",
        if outcome.deviated { "FAIL" } else { "PASS" },
        outcome.status(),
        outcome.max_deviation,
        outcome.worst_case,
        elapsed
    );
    for report in &outcome.reports {
        assert!(report.pass, "{}", report.line());
    }
    assert!(!outcome.deviated);
    assert!(outcome.max_deviation <= SCAN_TOL);
    assert_eq!(outcome.status(), "conjecture-consistent");
    assert!(elapsed <= Duration::from_secs(120));
}
