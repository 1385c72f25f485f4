//! Property suites for the exact kernels: arithmetic round trips, division
//! reconstruction, continued-fraction folding, matrix-power additivity,
//! certified trig consistency, Sturm cross-checks, and the structural
//! invariants of the polynomial families and sequences.

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use interlace_core::appreal::{cos2pi, AppReal};
use interlace_core::cf::{cf_expand, cf_fold};
use interlace_core::combin::totient;
use interlace_core::convergents::{psi_vector, psi_vector_from_numerators};
use interlace_core::mat::RatMat;
use interlace_core::poly::UniPoly;
use interlace_core::polyfam::{cheb_t, poly_cal_p, poly_cal_q, poly_p, poly_q, poly_v, psi_min};
use interlace_core::rat::{rat, rat_int, Int, Rat};
use interlace_core::sequences::{
    fleck, mu_approx, recurrence_residual, SeqEngine, SeqFamily, SeqId,
};
use interlace_core::sturm::{count_real_roots, Bound};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-10_000i64..10_000, 1i64..10_000).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(-50i64..50, 1..=max_deg + 1)
        .prop_map(|cs| UniPoly::from_i64(&cs))
}

proptest! {
    #[test]
    fn rat_field_laws(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        // normalization invariants
        let s = &a + &b;
        prop_assert!(s.denom().is_positive());
        prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()).is_one());
    }

    #[test]
    fn poly_divrem_reconstructs(a in arb_poly(50), b in arb_poly(25)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(b.mul(&q).add(&r), a);
        if let (Some(dr), Some(db)) = (r.degree(), b.degree()) {
            prop_assert!(dr < db);
        }
    }

    #[test]
    fn mat_pow_additive(entries in proptest::collection::vec(-6i64..6, 9), a in -3i64..=3, b in -3i64..=3) {
        let m = RatMat::from_i64(3, 3, &entries);
        prop_assume!(!m.det().is_zero());
        let lhs = m.pow(a + b).unwrap();
        let rhs = m.pow(a).unwrap().mul(&m.pow(b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chebyshev_trig_consistency(num in 1i64..200, den in 1i64..200, n in 1u64..=20) {
        // |T_n(cos theta) - cos(n theta)| lies inside the combined bounds.
        let t = rat(num, den * 4); // theta = 2 pi t
        let prec = 128;
        let c = cos2pi(&t, prec);
        let lhs = cheb_t(n).eval_appreal(&c);
        let rhs = cos2pi(&(&t * rat_int(n as i64)), prec);
        let diff = lhs.sub(&rhs);
        prop_assert!(diff.contains_zero(), "difference enclosure misses zero");
        prop_assert!(diff.err_le_2pow(-32), "error bound too loose: {}", diff.err_rat());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn cf_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000) {
        let x = rat(n, d);
        let terms = cf_expand(&x);
        prop_assert_eq!(cf_fold(&terms), x);
        // canonical form: inner terms >= 1, final term >= 2 when n >= 1
        for t in &terms[1..] {
            prop_assert!(*t >= Int::one());
        }
        if terms.len() > 1 {
            prop_assert!(*terms.last().unwrap() >= Int::from(2));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn sturm_matches_constructed_roots(
        roots in proptest::collection::vec(-32i64..32, 1..=2),
        complex_pair in proptest::option::of((-6i64..6, 1i64..9)),
        quartic in proptest::bool::ANY,
    ) {
        // Assemble a cubic/quartic with known real roots (kept 1/4 apart) and
        // optionally an irreducible quadratic factor; the grid oracle then
        // counts sign changes on a mesh finer than half the separation.
        let mut reals: Vec<Rat> = roots.iter().map(|&r| rat(r, 4)).collect();
        reals.sort();
        reals.dedup();
        prop_assume!(reals.windows(2).all(|w| &w[1] - &w[0] >= rat(1, 2)));
        let mut p = UniPoly::one();
        for r in &reals {
            p = p.mul(&UniPoly::new(vec![-r.clone(), Rat::one()]));
        }
        if let Some((b, c)) = complex_pair {
            // x^2 + bx + c with negative discriminant
            prop_assume!(b * b < 4 * c);
            p = p.mul(&UniPoly::from_i64(&[c, b, 1]));
        }
        let deg = p.degree().unwrap();
        prop_assume!((3..=4).contains(&deg) || (!quartic && deg >= 1));
        prop_assume!(p.is_squarefree());

        let sturm = count_real_roots(&p, &Bound::NegInf, &Bound::PosInf).unwrap();
        prop_assert_eq!(sturm, reals.len(), "sturm count vs constructed roots");

        // Grid oracle: sign changes on an offset 1/8 mesh across the root bound.
        let bound = p.cauchy_root_bound();
        let mut grid_changes = 0usize;
        let step = rat(1, 8);
        let offset = rat(1, 1000);
        let mut x = -&bound - &offset;
        let mut last_sign = p.sign_at(&x);
        while x <= &bound + rat_int(1) {
            x = &x + &step;
            let s = p.sign_at(&x);
            if s != 0 && last_sign != 0 && s != last_sign {
                grid_changes += 1;
            }
            if s != 0 {
                last_sign = s;
            }
        }
        prop_assert_eq!(grid_changes, sturm, "grid refinement oracle");
    }
}

#[test]
fn family_degrees_and_leading_coefficients() {
    for m in 1..=64u64 {
        let p = poly_p(m);
        let q = poly_q(m);
        let cp = poly_cal_p(m);
        let cq = poly_cal_q(m);
        let v = poly_v(m);
        for (name, poly) in [("P", &p), ("Q", &q), ("calP", &cp), ("calQ", &cq), ("V", &v)] {
            assert_eq!(poly.degree(), Some(m as usize), "degree of {name}_{m}");
        }
        assert!(p.is_monic());
        assert!(cq.is_monic());
        assert!(q.leading().is_one());
        // three-term recurrences with the binomial seeds
        if m >= 2 {
            let shift = UniPoly::from_i64(&[2, 1]);
            assert_eq!(poly_p(m), shift.mul(&poly_p(m - 1)).sub(&poly_p(m - 2)));
            assert_eq!(poly_q(m), shift.mul(&poly_q(m - 1)).sub(&poly_q(m - 2)));
        }
        // cross-family reflection
        let reflected = p.compose(&UniPoly::from_i64(&[-2, -1]));
        let expect = if m % 2 == 1 { reflected.neg() } else { reflected };
        assert_eq!(v, expect, "V_{m} = (-1)^m P_{m}(-x-2)");
    }
}

#[test]
fn psi_min_degree_is_half_totient() {
    for n in 1..=120u64 {
        let d = psi_min(n).degree().unwrap() as u64;
        let expect = if n <= 2 { 1 } else { totient(n) / 2 };
        assert_eq!(d, expect);
    }
}

#[test]
fn roots_interlace_between_consecutive_m() {
    let prec = 128;
    for m in 1..20u32 {
        for k in 1..=m as i64 {
            let outer_hi = mu_approx(m + 1, k, prec);
            let inner = mu_approx(m, k, prec);
            let outer_lo = mu_approx(m + 1, k + 1, prec);
            assert_eq!(inner.certified_lt(&outer_hi), Some(true), "m={m},k={k}");
            assert_eq!(outer_lo.certified_lt(&inner), Some(true), "m={m},k={k}");
        }
    }
}

#[test]
fn theorem2_recombinations_m_up_to_8() {
    use interlace_core::sequences::theorem2_check;
    for m in 1..=8u32 {
        let eng = SeqEngine::new(m);
        let rep = theorem2_check(&eng, 1, 25);
        assert!(rep.passed(), "m={m}: {:?}", rep.first_failure());
    }
}

#[test]
fn recurrence_residuals_vanish() {
    for m in 1..=8u32 {
        let eng = SeqEngine::new(m);
        for fam in [SeqFamily::F, SeqFamily::G, SeqFamily::G0] {
            let top_j = if fam == SeqFamily::G0 { 0 } else { m };
            for j in if fam == SeqFamily::G0 { 0..=0 } else { 1..=top_j } {
                for r in -20..=40 {
                    let res = recurrence_residual(&eng, fam, j.max(1), r);
                    assert!(res.is_zero(), "m={m} fam={fam:?} j={j} r={r}: {res}");
                }
            }
        }
    }
}

#[test]
fn forward_backward_closure() {
    for m in 1..=8u32 {
        let eng = SeqEngine::new(m);
        for j in 1..=m {
            let orig: Vec<Rat> = (1..=m as i64).map(|r| eng.f_term(j, r)).collect();
            // walk forward 10, then far backward, then reread
            let _ = eng.f_term(j, m as i64 + 10);
            let _ = eng.f_term(j, -10);
            let back: Vec<Rat> = (1..=m as i64).map(|r| eng.f_term(j, r)).collect();
            assert_eq!(orig, back);
        }
    }
}

#[test]
fn theorem4_closure_m_up_to_6() {
    for m in 1..=6u32 {
        let eng = SeqEngine::new(m);
        let n = 2 * m as u64 + 1;
        for j in 1..=m {
            for r in 0..=20u64 {
                let lhs = eng.f_term(j, -(r as i64));
                let rhs = Rat::from_integer(fleck(2 * r + 1, r as i64 + j as i64, n) * Int::from(n));
                assert_eq!(lhs, rhs, "thm4 F m={m} j={j} r={r}");
                let lhs = eng.g_term(j, -(r as i64));
                let rhs = Rat::from_integer(fleck(2 * r + 2, r as i64 + j as i64 + 1, n) * Int::from(n));
                assert_eq!(lhs, rhs, "thm4 G m={m} j={j} r={r}");
            }
        }
    }
}

#[test]
fn mirror_and_leading_diagonal() {
    for m in 1..=8u32 {
        let eng = SeqEngine::new(m);
        for r in -20..=20i64 {
            assert_eq!(eng.f_term(m, r), -eng.g_term(m, r));
            let mut gsum = Rat::zero();
            for k in 1..=m {
                gsum += eng.g_term(k, r);
            }
            assert_eq!(eng.g0_term(r), gsum * rat_int(-2));
            assert_eq!(eng.g0_term(r), eng.f_term(1, r) * rat_int(2));
        }
    }
}

#[test]
fn psi_ratio_invariance() {
    for m in 1..=8u32 {
        let eng = SeqEngine::new(m);
        for r in 1..=30i64 {
            match (psi_vector(&eng, r), psi_vector_from_numerators(&eng, r)) {
                (Ok(a), Ok(b)) => assert_eq!(a.components, b.components, "m={m} r={r}"),
                (Err(_), Err(_)) => {}
                _ => panic!("zero-denominator detection differs between routes (m={m}, r={r})"),
            }
        }
    }
}

#[test]
fn minor_top_multiplicativity() {
    use interlace_core::minors::minor_seq;
    use interlace_core::sequences::{recurrence_matrix, Direction};
    for m in 1..=6u32 {
        let eng = SeqEngine::new(m);
        let s = minor_seq(&eng, m, SeqFamily::F, 1, 21);
        let det_r = recurrence_matrix(m, Direction::Forward).det();
        for w in s.values.windows(2) {
            assert_eq!(&w[1] / &w[0], det_r, "m={m}");
        }
    }
}

#[test]
fn appreal_sqrt_square_round_trip() {
    for k in 2..=40u32 {
        let x = AppReal::from_int(k as i64, 160);
        let r = x.sqrt().unwrap();
        let sq = r.mul(&r);
        assert!(sq.encloses_rat(&rat_int(k as i64)));
        assert!(sq.err_le_2pow(-140));
    }
}
