//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its elapsed time and asserting both the checks and the stated time
//! budget. Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};

use interlace_core::appreal::AppReal;
use interlace_core::cf::{cf_expand, cf_fold};
use interlace_core::convergents::{example_m5_check, m2_suite};
use interlace_core::mat::RatMat;
use interlace_core::minors::{example_m5_minors_check, minor_order_check};
use interlace_core::poly::UniPoly;
use interlace_core::polyfam::{
    calq_chain, corollary1_suite, minpoly_suite, poly_cal_p, poly_cal_q, poly_p, poly_q,
    theorem1_suite,
};
use interlace_core::rat::{rat, rat_int, Int, Rat};
use interlace_core::sequences::{
    appendix_check, diag_orthogonality, fleck, fleck_correspondence, m6_decomposition_check,
    ratio_lemma_check, sum_of_squares, SeqEngine, SeqFamily, SeqId,
};
use interlace_core::spectral::{
    cd_check, critical_line_check, ladder_check, mellin_oracle_check, ode_check,
    quad_identity_check, TanhSinhGrid, PQ,
};
use interlace_core::{Report, Status};

fn finish(criterion: &str, budget: Duration, started: Instant, rep: &Report) {
    let elapsed = started.elapsed();
    let ok = rep.passed();
    let (p, f, n) = rep.counts();
    println!(
        "{}: {} ({p} passed, {f} failed, {n} notes; {:.2?} of {:.0?} budget)",
        criterion,
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        budget,
    );
    if let Some(c) = rep.first_failure() {
        println!("    first failure: {} : {}", c.name, c.detail);
    }
    assert!(ok, "criterion failed: {criterion}");
    assert!(
        elapsed <= budget,
        "{criterion} exceeded its time budget: {elapsed:.2?} > {budget:.2?}"
    );
}

/// 1. Both appendix tables reproduced exactly, every entry, < 1 s.
#[test]
fn criterion_01_appendix_reproduction() {
    let start = Instant::now();
    let rep = appendix_check();
    // 15 positive rows + 15 negative rows, 10 entries each.
    let (p, _, _) = rep.counts();
    assert_eq!(p, 300, "expected every appendix entry to be checked");
    finish("criterion 1 (appendix tables)", Duration::from_secs(1), start, &rep);
}

/// 2. The dimension-5 reference convergent: exact big-integer ratios,
/// certified distance < 1e-13, residual polynomial < 3e-13; < 5 s at 128 bits.
#[test]
fn criterion_02_example_m5() {
    let start = Instant::now();
    let rep = example_m5_check(128);
    finish("criterion 2 (dimension-5 convergent)", Duration::from_secs(5), start, &rep);
}

/// 3. Fleck: the -11^2*204 reference value and the negative-index
/// correspondence for all m <= 6, j <= m, 0 <= r <= 20 against the
/// brute-force oracle; < 2 s.
#[test]
fn criterion_03_fleck_correspondence() {
    let start = Instant::now();
    let mut rep = Report::new("criterion-3");
    let v = fleck(17, 2, 11) * Int::from(11);
    rep.check("11*Fleck(17,2 mod 11)", v == Int::from(-121i64 * 204), || format!("{v}"));
    for m in 1..=6u32 {
        let eng = SeqEngine::new(m);
        for j in 1..=m {
            for r in 0..=20 {
                rep.merge(fleck_correspondence(&eng, j, r));
            }
        }
    }
    finish("criterion 3 (Fleck correspondence)", Duration::from_secs(2), start, &rep);
}

/// 4. Numerator integrality: exact integers for m = 1..12 (n = 9, 15, 21,
/// 25 included), -15 <= r <= 30, zero non-integer events, both families;
/// < 10 s.
#[test]
fn criterion_04_integrality() {
    let start = Instant::now();
    let mut rep = Report::new("criterion-4");
    for m in 1..=12u32 {
        let eng = SeqEngine::new(m);
        for j in 1..=m {
            for fam in [SeqFamily::F, SeqFamily::G] {
                let id = SeqId::new(fam, m, j).expect("valid id");
                for r in -15..=30 {
                    match eng.numerator(&id, r) {
                        Ok(_) => {}
                        Err(e) => rep.fail(
                            &format!("integrality:m={m},j={j},r={r},{fam:?}"),
                            e.to_string(),
                        ),
                    }
                }
            }
        }
    }
    if rep.checks.is_empty() {
        rep.pass("integrality: zero non-integer events for all m <= 12");
    }
    finish("criterion 4 (numerator integrality)", Duration::from_secs(10), start, &rep);
}

/// 5. The theorem1/corollary1/minpoly exact sweeps for m <= 32 and the
/// calQ_223 factorization by exact multiplication; < 30 s.
#[test]
fn criterion_05_identity_sweeps() {
    let start = Instant::now();
    let mut rep = Report::new("criterion-5");
    for m in 1..=32u64 {
        rep.merge(theorem1_suite(m, 128));
        rep.merge(minpoly_suite(m));
    }
    rep.merge(corollary1_suite(32));
    // calQ_223 = P_3 calP_3 Q_7 Q_14 Q_28 Q_56 Q_112, exact multiplication.
    let (q_indices, even_k) = calq_chain(223);
    rep.check("calq223-chain", q_indices == vec![112, 56, 28, 14, 7] && even_k == 6, || {
        format!("{q_indices:?}, even k {even_k}")
    });
    let mut prod = poly_p(3).mul(&poly_cal_p(3));
    for q in [7u64, 14, 28, 56, 112] {
        prod = prod.mul(&poly_q(q));
    }
    rep.check("calq223-product", prod == poly_cal_q(223), || {
        String::from("product differs from calQ_223")
    });
    finish("criterion 5 (identity sweeps + calQ_223)", Duration::from_secs(30), start, &rep);
}

/// 6. Spectral: ODEs (m <= 32), Christoffel-Darboux (n <= 16), quadratic
/// identity (m <= 32), ladders (m <= 16), Mellin functional equation and
/// Sturm-certified critical line (m <= 16, both families), quadrature oracle
/// at s in {1,2,3} for m <= 10; < 60 s.
#[test]
fn criterion_06_spectral() {
    let start = Instant::now();
    let mut rep = Report::new("criterion-6");
    rep.merge(ode_check(PQ::P, 32));
    rep.merge(ode_check(PQ::Q, 32));
    rep.merge(cd_check(16));
    rep.merge(quad_identity_check(32));
    rep.merge(ladder_check(16));
    rep.merge(critical_line_check(PQ::P, 16));
    rep.merge(critical_line_check(PQ::Q, 16));
    let grid = TanhSinhGrid::new(192, 7);
    for family in [PQ::P, PQ::Q] {
        for m in 0..=10 {
            rep.merge(mellin_oracle_check(&grid, family, m));
        }
    }
    finish("criterion 6 (spectral)", Duration::from_secs(60), start, &rep);
}

/// 7. Square sums: first identity exact (m <= 6, |r| <= 10), both
/// Fleck-level identities exact (n in {3,5,7,9,11,13}, r <= 10), the m = 6
/// reference value and decomposition, and the shifted-index discrepancy
/// report itself; < 5 s.
#[test]
fn criterion_07_sum_of_squares() {
    let start = Instant::now();
    let mut rep = Report::new("criterion-7");
    let mut saw_printed_discrepancy = false;
    for m in 1..=6u32 {
        let eng = SeqEngine::new(m);
        for r in -10..=10i64 {
            let (_, sub) = sum_of_squares(&eng, r);
            for c in &sub.checks {
                if c.status == Status::Note && c.name.contains("squ-G-printed") {
                    if c.detail.contains("FAILS") {
                        saw_printed_discrepancy = true;
                    }
                }
            }
            rep.merge(sub);
        }
    }
    rep.check(
        "printed-second-display-reported-failing",
        saw_printed_discrepancy,
        || String::from("expected the printed (2r+1) form to be reported as failing somewhere"),
    );
    rep.merge(m6_decomposition_check());
    finish("criterion 7 (sum of squares)", Duration::from_secs(5), start, &rep);
}

/// 8. Minors: fitted m = 5 lists match for i in {1,2,4,5}; order bound and
/// 20-term out-of-sample annihilation for all m <= 5; < 10 s.
#[test]
fn criterion_08_minors() {
    let start = Instant::now();
    let mut rep = Report::new("criterion-8");
    rep.merge(example_m5_minors_check());
    for m in 1..=5u32 {
        for i in 1..=m {
            rep.merge(minor_order_check(m, i, 128));
        }
    }
    finish("criterion 8 (minor recurrences)", Duration::from_secs(10), start, &rep);
}

/// 9. The m = 2 suite: series, Binet accuracy identities certified to 1e-20
/// at r <= 30, numerator interlacing, divisibility, signed continued
/// fractions; < 2 s.
#[test]
fn criterion_09_m2_suite() {
    let start = Instant::now();
    let rep = m2_suite(30, 160);
    finish("criterion 9 (m = 2 suite)", Duration::from_secs(2), start, &rep);
}

/// 10. Property suites at 128 bits with zero certified violations: exact
/// round trips, forward/backward closure, diagonal orthogonality, ratio
/// lemma; < 30 s.
#[test]
fn criterion_10_property_suites() {
    let start = Instant::now();
    let mut rep = Report::new("criterion-10");

    // Deterministic pseudo-random stream (xorshift) for the round trips.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };

    // cf round trip on 1000 rationals.
    let mut ok = true;
    for _ in 0..1000 {
        let n = (next() % 2_000_001) as i64 - 1_000_000;
        let d = (next() % 999_983) as i64 + 1;
        let x = rat(n, d);
        if cf_fold(&cf_expand(&x)) != x {
            ok = false;
        }
    }
    rep.check("cf-round-trip-1000", ok, || String::from("fold mismatch"));

    // poly divrem reconstruction up to degree 50.
    let mut ok = true;
    for _ in 0..60 {
        let da = (next() % 51) as usize;
        let db = (next() % 26) as usize;
        let a = UniPoly::new((0..=da).map(|_| rat((next() % 101) as i64 - 50, 1 + (next() % 9) as i64)).collect());
        let b = UniPoly::new((0..=db).map(|_| rat((next() % 101) as i64 - 50, 1 + (next() % 9) as i64)).collect());
        if b.is_zero() {
            continue;
        }
        let (q, r) = a.divrem(&b).unwrap();
        if b.mul(&q).add(&r) != a {
            ok = false;
        }
    }
    rep.check("divrem-reconstruction", ok, || String::from("A != Bq + r"));

    // matrix power additivity on random invertible 3x3 matrices.
    let mut ok = true;
    let mut tried = 0;
    while tried < 25 {
        let entries: Vec<i64> = (0..9).map(|_| (next() % 11) as i64 - 5).collect();
        let m = RatMat::from_i64(3, 3, &entries);
        if m.det().is_zero() {
            continue;
        }
        tried += 1;
        for (a, b) in [(2i64, 3i64), (-2, 3), (-1, -2), (3, -3)] {
            let lhs = m.pow(a + b).unwrap();
            let rhs = m.pow(a).unwrap().mul(&m.pow(b).unwrap());
            if lhs != rhs {
                ok = false;
            }
        }
    }
    rep.check("mat-pow-additivity", ok, || String::from("M^(a+b) != M^a M^b"));

    // forward/backward closure, m <= 8.
    for m in 1..=8u32 {
        let eng = SeqEngine::new(m);
        for j in 1..=m {
            let before: Vec<Rat> = (1..=m as i64).map(|r| eng.f_term(j, r)).collect();
            let _ = eng.f_term(j, m as i64 + 10);
            let _ = eng.f_term(j, -10);
            let after: Vec<Rat> = (1..=m as i64).map(|r| eng.f_term(j, r)).collect();
            rep.check(&format!("closure:m={m},j={j}"), before == after, || String::new());
        }
    }

    // diagonal-product orthogonality at 128 bits for n = 3..13 odd.
    for n in [3u64, 5, 7, 9, 11, 13] {
        let m = ((n - 1) / 2) as i64;
        for u in 1..=m {
            for v in 1..=m {
                rep.merge(diag_orthogonality(n, u, v, 128).1);
            }
        }
    }

    // cosine-difference ratio checks at 128 bits.
    for m in 1..=4u32 {
        rep.merge(ratio_lemma_check(m, 128));
    }

    // AppReal certified square-root round trip.
    let two = AppReal::from_int(2, 128);
    let sq = two.sqrt().unwrap();
    rep.check("sqrt2-roundtrip", sq.mul(&sq).encloses_rat(&rat_int(2)), || String::new());

    finish("criterion 10 (property suites)", Duration::from_secs(30), start, &rep);
}
