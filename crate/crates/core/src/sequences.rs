//! The m-dimensional interlacing Fibonacci sequences.
//!
//! Sequences F_r^(m,j) and G_r^(m,j) are generated from the binomial
//! initial-value matrices by a companion-style recurrence matrix R_m, in both
//! directions of r. Negative indices are n = 2m+1 times renumbered Fleck
//! numbers, which the brute-force binomial oracle checks term by term.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_traits::{One, Signed, Zero};

use crate::appreal::{cos_shift_approx, AppReal, TrigKind};
use crate::combin::{binom, prime_factors};
use crate::error::Error;
use crate::mat::RatMat;
use crate::poly::UniPoly;
use crate::polyfam::{poly_p, poly_q};
use crate::rat::{is_integer, rat, rat_int, rat_pow, Int, Rat};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqFamily {
    F,
    G,
    /// G^(m,0) = 2 F^(m,1), the leading-diagonal sequence.
    G0,
    /// Integer numerators of F (prime-power scaling cleared).
    NOfF,
    /// Integer numerators of G.
    NOfG,
    /// The unlaced reordering of the F sequences.
    UnlacedF,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeqId {
    pub family: SeqFamily,
    pub m: u32,
    pub j: u32,
}

impl SeqId {
    pub fn new(family: SeqFamily, m: u32, j: u32) -> Result<Self, Error> {
        let ok = match family {
            SeqFamily::G0 => j == 0,
            _ => j >= 1 && j <= m,
        };
        if m < 1 || !ok {
            return Err(Error::UndefinedIndex(format!("family {family:?} m={m} j={j}")));
        }
        Ok(SeqId { family, m, j })
    }

    pub fn n(&self) -> u64 {
        2 * self.m as u64 + 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// h_k = C(m+k, 2k) / (2k+1), the forward recurrence weights.
pub fn h_weights(m: u32) -> Vec<Rat> {
    let m = m as u64;
    (1..=m)
        .map(|k| Rat::new(binom(m + k, 2 * k as i64), Int::from(2 * k + 1)))
        .collect()
}

/// g_k = (2m+1) h_{m-k}, the inverse recurrence weights.
pub fn g_weights(m: u32) -> Vec<Rat> {
    let n = rat_int(2 * m as i64 + 1);
    let mut h = h_weights(m);
    h.insert(0, Rat::one()); // h_0 = 1
    (1..=m as usize).map(|k| &n * &h[m as usize - k]).collect()
}

/// The recurrence matrix R_m (forward) or its exact inverse.
/// The inverse is verified against R_m by exact multiplication.
pub fn recurrence_matrix(m: u32, direction: Direction) -> RatMat {
    let mm = m as usize;
    match direction {
        Direction::Forward => {
            let h = h_weights(m);
            let mut r = RatMat::zero(mm, mm);
            for i in 0..mm {
                *r.at_mut(i, 0) = -h[i].clone();
                if i + 1 < mm {
                    *r.at_mut(i, i + 1) = Rat::one();
                }
            }
            r
        }
        Direction::Inverse => {
            let g = g_weights(m);
            let mut r = RatMat::zero(mm, mm);
            for i in 0..mm {
                if i >= 1 {
                    *r.at_mut(i, i - 1) = Rat::one();
                }
                *r.at_mut(i, mm - 1) = -g[mm - 1 - i].clone();
            }
            let fwd = recurrence_matrix(m, Direction::Forward);
            debug_assert_eq!(fwd.mul(&r), RatMat::identity(mm));
            r
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// B_odd / B_even, the binomial initial-condition matrices.
pub fn binomial_matrix(parity: Parity, m: u32) -> RatMat {
    let mm = m as usize;
    let mut b = RatMat::zero(mm, mm);
    for i in 1..=mm {
        for j in 1..=mm {
            let (row, pick, sign_flip) = match parity {
                Parity::Odd => (2 * j as u64 - 1, j as i64 - i as i64, (i + j - 1) % 2),
                Parity::Even => (2 * j as u64, j as i64 - i as i64, (i + j) % 2),
            };
            let mut c = Rat::from_integer(binom(row, pick));
            if sign_flip == 1 {
                c = -c;
            }
            *b.at_mut(i - 1, j - 1) = c;
        }
    }
    b
}

/// M_o(m,0) or M_e(m,0) = (2m+1) B R_m^m; row j holds (F_m, ..., F_1) for
/// the j-th sequence (G for even parity). Integrality holds exactly when
/// 2m+1 is prime (asserted).
pub fn initial_matrix(parity: Parity, m: u32) -> RatMat {
    let b = binomial_matrix(parity, m);
    let r_m = recurrence_matrix(m, Direction::Forward)
        .pow(m as i64)
        .expect("R_m is invertible");
    let mat = b.mul(&r_m).scale(&rat_int(2 * m as i64 + 1));
    assert_eq!(
        mat.is_integer(),
        crate::combin::is_prime(2 * m as u64 + 1),
        "initial matrix integrality must match primality of 2m+1"
    );
    mat
}

/// Windowed generator for the F and G sequences of one dimension m.
///
/// The engine caches every column it has computed; extension costs O(m)
/// rational operations per new index. Not `Sync`: use one engine per thread.
pub struct SeqEngine {
    m: u32,
    h: Vec<Rat>,
    g: Vec<Rat>,
    /// r -> (F_r^(m,1..m)) and r -> (G_r^(m,1..m)), contiguous index ranges.
    f_cols: RefCell<BTreeMap<i64, Vec<Rat>>>,
    g_cols: RefCell<BTreeMap<i64, Vec<Rat>>>,
}

impl SeqEngine {
    pub fn new(m: u32) -> Self {
        assert!(m >= 1);
        let mo = initial_matrix(Parity::Odd, m);
        let me = initial_matrix(Parity::Even, m);
        let mut f_cols = BTreeMap::new();
        let mut g_cols = BTreeMap::new();
        // Row j of M(m,0) is (X_m, ..., X_1); column c holds index m - c.
        for r in 1..=m as i64 {
            let c = (m as i64 - r) as usize;
            f_cols.insert(r, (0..m as usize).map(|j| mo.at(j, c).clone()).collect());
            g_cols.insert(r, (0..m as usize).map(|j| me.at(j, c).clone()).collect());
        }
        SeqEngine {
            m,
            h: h_weights(m),
            g: g_weights(m),
            f_cols: RefCell::new(f_cols),
            g_cols: RefCell::new(g_cols),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u64 {
        2 * self.m as u64 + 1
    }

    fn extend_to(&self, r: i64, even: bool) {
        let cols = if even { &self.g_cols } else { &self.f_cols };
        let mut cols = cols.borrow_mut();
        let m = self.m as usize;
        let mut hi = *cols.keys().next_back().expect("non-empty cache");
        while hi < r {
            // X_{hi+1} = -sum_k h_k X_{hi+1-k}
            let mut next = alloc::vec![Rat::zero(); m];
            for (k, hk) in self.h.iter().enumerate() {
                let prev = &cols[&(hi - k as i64)];
                for (j, val) in prev.iter().enumerate() {
                    next[j] -= hk * val;
                }
            }
            hi += 1;
            cols.insert(hi, next);
        }
        let mut lo = *cols.keys().next().expect("non-empty cache");
        while lo > r {
            // X_{lo-1} = -sum_k g_k X_{lo-1+k}
            let mut prev = alloc::vec![Rat::zero(); m];
            for (k, gk) in self.g.iter().enumerate() {
                let nxt = &cols[&(lo + k as i64)];
                for (j, val) in nxt.iter().enumerate() {
                    prev[j] -= gk * val;
                }
            }
            lo -= 1;
            cols.insert(lo, prev);
        }
    }

    /// F_r^(m,j), any integer r.
    pub fn f_term(&self, j: u32, r: i64) -> Rat {
        assert!(j >= 1 && j <= self.m);
        self.extend_to(r, false);
        self.f_cols.borrow()[&r][(j - 1) as usize].clone()
    }

    /// G_r^(m,j), any integer r.
    pub fn g_term(&self, j: u32, r: i64) -> Rat {
        assert!(j >= 1 && j <= self.m);
        self.extend_to(r, true);
        self.g_cols.borrow()[&r][(j - 1) as usize].clone()
    }

    /// G_r^(m,0) = 2 F_r^(m,1).
    pub fn g0_term(&self, r: i64) -> Rat {
        self.f_term(1, r) * rat_int(2)
    }

    /// The unlaced sequence *F_i^(m,j) for i >= 1.
    pub fn unlaced_f(&self, j: u32, i: i64) -> Rat {
        assert!(i >= 1 && j >= 1 && j <= self.m);
        let m = self.m as i64;
        let s = (i - 1).rem_euclid(m) + 1;
        let q = (i - s) / m;
        let fam = if s % 2 == 1 {
            ((s + 1) / 2) as u32
        } else {
            (m + 1 - s / 2) as u32
        };
        self.f_term(fam, m * q + j as i64)
    }

    /// Exact term for any sequence id.
    pub fn seq_term(&self, id: &SeqId, r: i64) -> Result<Rat, Error> {
        assert_eq!(id.m, self.m, "engine dimension mismatch");
        Ok(match id.family {
            SeqFamily::F => self.f_term(id.j, r),
            SeqFamily::G => self.g_term(id.j, r),
            SeqFamily::G0 => self.g0_term(r),
            SeqFamily::NOfF | SeqFamily::NOfG => Rat::from_integer(self.numerator(id, r)?),
            SeqFamily::UnlacedF => self.unlaced_f(id.j, r),
        })
    }

    /// Prime-power scaling factor turning F_r (or G_r) into an integer.
    pub fn numerator_scale(&self, r: i64) -> Rat {
        let n = self.n();
        let factors = prime_factors(n);
        if r > 0 {
            let mut scale = Rat::one();
            for (p, _) in &factors {
                let q = (p - 1) / 2;
                let e = (r - 1).div_euclid(q as i64);
                scale *= rat_pow(&rat_int(*p as i64), e);
            }
            scale
        } else if factors.len() >= 2 {
            Rat::one()
        } else {
            // Prime-power modulus. The appendix tables force the exponent
            // floor((r-1) / (phi(p^alpha)/2)), which coincides with the
            // stated -alpha - floor((-2r+1-p^(alpha-1))/phi(p^alpha)) when
            // alpha = 1 but differs from it at composite prime powers
            // (n = 9 already); the tables are normative.
            let (p, alpha) = factors[0];
            let half_phi = (p.pow(alpha) - p.pow(alpha - 1)) / 2;
            let theta = (r - 1).div_euclid(half_phi as i64);
            rat_pow(&rat_int(p as i64), theta)
        }
    }

    /// Non-reduced integer numerator N_r^(m,j); errors if the prime-power
    /// scaling fails to produce an integer (it must not).
    pub fn numerator(&self, id: &SeqId, r: i64) -> Result<Int, Error> {
        let base = match id.family {
            SeqFamily::F | SeqFamily::NOfF => self.f_term(id.j, r),
            SeqFamily::G | SeqFamily::NOfG => self.g_term(id.j, r),
            SeqFamily::G0 => self.g0_term(r),
            SeqFamily::UnlacedF => {
                // Numerator of the underlying interlaced term.
                let m = self.m as i64;
                let s = (r - 1).rem_euclid(m) + 1;
                let q = (r - s) / m;
                let fam = if s % 2 == 1 { ((s + 1) / 2) as u32 } else { (m + 1 - s / 2) as u32 };
                let inner = SeqId::new(SeqFamily::F, self.m, fam)?;
                return self.numerator(&inner, m * q + id.j as i64);
            }
        };
        let scaled = base * self.numerator_scale(r);
        if is_integer(&scaled) {
            Ok(scaled.to_integer())
        } else {
            Err(Error::NonIntegerNumerator(format!(
                "m={} j={} r={r}: {scaled}",
                self.m, id.j
            )))
        }
    }
}

// ---------------------------------------------------------------------------
// Fleck numbers
// ---------------------------------------------------------------------------

/// Brute-force Fleck number: sum of (-1)^k C(N,k) over k = a (mod n),
/// 0 <= k <= N. This is the independent oracle for the negative-index
/// correspondence.
pub fn fleck(big_n: u64, a: i64, n: u64) -> Int {
    assert!(n >= 1);
    let a = a.rem_euclid(n as i64) as u64;
    let mut total = Int::zero();
    let mut c = Int::one(); // C(N, 0)
    for k in 0..=big_n {
        if k % n == a {
            if k % 2 == 0 {
                total += &c;
            } else {
                total -= &c;
            }
        }
        if k < big_n {
            c = c * Int::from(big_n - k) / Int::from(k + 1);
        }
    }
    total
}

/// Negative-index correspondence: F_{-r}^(m,j) = n Fleck(2r+1, r+j mod n) and
/// G_{-r}^(m,j) = n Fleck(2r+2, r+j+1 mod n), matrix stepping vs oracle.
pub fn fleck_correspondence(eng: &SeqEngine, j: u32, r: u64) -> Report {
    let mut rep = Report::new("fleck-correspondence");
    let n = eng.n();
    let m = eng.m();
    let lhs_f = eng.f_term(j, -(r as i64));
    let rhs_f = Rat::from_integer(fleck(2 * r + 1, r as i64 + j as i64, n) * Int::from(n));
    rep.check(&format!("thm4-F:m={m},j={j},r={r}"), lhs_f == rhs_f, || {
        format!("matrix {lhs_f}, n*fleck {rhs_f}")
    });
    let lhs_g = eng.g_term(j, -(r as i64));
    let rhs_g = Rat::from_integer(fleck(2 * r + 2, r as i64 + j as i64 + 1, n) * Int::from(n));
    rep.check(&format!("thm4-G:m={m},j={j},r={r}"), lhs_g == rhs_g, || {
        format!("matrix {lhs_g}, n*fleck {rhs_g}")
    });
    rep
}

/// Weisman's congruence: p^omega divides Fleck(N, a mod p^alpha) for every
/// residue a, with omega = floor((N - p^(alpha-1)) / phi(p^alpha)).
pub fn weisman_check(big_n: u64, p: u64, alpha: u32) -> Report {
    let mut rep = Report::new("weisman");
    let pa = p.pow(alpha);
    let pa1 = p.pow(alpha - 1);
    assert!(big_n >= pa1, "requires N >= p^(alpha-1)");
    let phi = pa - pa1;
    let omega = ((big_n - pa1) / phi) as u32;
    let modulus = Int::from(p).pow(omega);
    for a in 0..pa {
        let f = fleck(big_n, a as i64, pa);
        let ok = (&f % &modulus).is_zero();
        rep.check(&format!("weisman:N={big_n},p={p},a={alpha},res={a}"), ok, || {
            format!("{f} not divisible by {p}^{omega}")
        });
    }
    rep
}

// ---------------------------------------------------------------------------
// Trigonometric closed forms
// ---------------------------------------------------------------------------

/// mu_{m,t} = 2cos(2 pi t/(2m+1)) - 2 as a certified ball.
pub fn mu_approx(m: u32, t: i64, prec: u32) -> AppReal {
    cos_shift_approx(2 * m as u64 + 1, t, TrigKind::Cos2Pi, prec).sub(&AppReal::from_int(2, prec))
}

/// phi_{m,k} = 2cos(2 pi k/(2m+1)).
pub fn phi_approx(m: u32, k: i64, prec: u32) -> AppReal {
    cos_shift_approx(2 * m as u64 + 1, k, TrigKind::Cos2Pi, prec)
}

/// Signed diagonal d_{n,k} = 2 sin(pi k/n).
pub fn diag_approx(n: u64, k: i64, prec: u32) -> AppReal {
    cos_shift_approx(n, k, TrigKind::Sin, prec)
}

/// Closed-form evaluation of F, G or G0 terms as a certified sum over the
/// recurrence-root powers.
pub fn trig_closed_form(id: &SeqId, r: i64, prec: u32) -> Result<AppReal, Error> {
    let m = id.m;
    let mut acc = AppReal::zero(prec);
    for t in 1..=m as i64 {
        let mu_pow = mu_approx(m, t, prec).powi(-r)?;
        let coeff = match id.family {
            SeqFamily::F => phi_approx(m, id.j as i64 * t, prec)
                .sub(&phi_approx(m, (id.j as i64 - 1) * t, prec)),
            SeqFamily::G => phi_approx(m, (id.j as i64 + 1) * t, prec)
                .sub(&phi_approx(m, id.j as i64 * t, prec).mul_int(2))
                .add(&phi_approx(m, (id.j as i64 - 1) * t, prec)),
            SeqFamily::G0 => phi_approx(m, t, prec).mul_int(2).sub(&AppReal::from_int(4, prec)),
            _ => return Err(Error::UndefinedIndex(String::from("trig form needs F, G or G0"))),
        };
        acc = acc.add(&mu_pow.mul(&coeff));
    }
    Ok(acc)
}

/// Sine-ratio form over the signed diagonals of the regular n-gon.
pub fn diag_closed_form(id: &SeqId, r: i64, prec: u32) -> Result<AppReal, Error> {
    let m = id.m;
    let n = id.n();
    let mut acc = AppReal::zero(prec);
    for t in 1..=m as i64 {
        let d_t = diag_approx(n, t, prec);
        let term = match id.family {
            SeqFamily::F => {
                let num = diag_approx(n, (2 * id.j as i64 - 1) * t, prec);
                num.div(&d_t.powi(2 * r - 1)?)?
            }
            SeqFamily::G => {
                // 2cos(2j pi t / n) = 2cos(2 pi (jt) / n)
                let num = cos_shift_approx(n, id.j as i64 * t, TrigKind::Cos2Pi, prec);
                num.div(&d_t.powi(2 * r - 2)?)?
            }
            _ => return Err(Error::UndefinedIndex(String::from("diag form needs F or G"))),
        };
        acc = acc.add(&term);
    }
    Ok(if r % 2 == 0 { acc.neg() } else { acc })
}

/// Evaluates the closed forms for one term, asserting certified agreement
/// with the exact matrix-stepped value and between the two forms.
pub fn trig_eval(eng: &SeqEngine, id: &SeqId, r: i64, prec: u32) -> Result<(AppReal, Report), Error> {
    let mut rep = Report::new("trig-eval");
    let approx = trig_closed_form(id, r, prec)?;
    let exact = eng.seq_term(id, r)?;
    let tol = err_tolerance(prec);
    let diff = approx.sub(&AppReal::from_rat(&exact, prec));
    let fam = match id.family {
        SeqFamily::F => "F",
        SeqFamily::G => "G",
        _ => "G0",
    };
    rep.check(
        &format!("l36-l37:{fam},m={},j={},r={r}", id.m, id.j),
        diff.abs_le_rat(&tol),
        || format!("closed form {} vs exact {exact}", approx.to_decimal(20)),
    );
    if matches!(id.family, SeqFamily::F | SeqFamily::G) {
        let diag = diag_closed_form(id, r, prec)?;
        let diff = diag.sub(&approx);
        rep.check(
            &format!("t63-t65:{fam},m={},j={},r={r}", id.m, id.j),
            diff.abs_le_rat(&tol),
            || format!("diagonal form differs by {}", diff.abs_upper()),
        );
    }
    Ok((approx, rep))
}

/// Certified tolerance used by the numeric suites: 2^-(prec/2).
pub fn err_tolerance(prec: u32) -> Rat {
    rat_pow(&rat(1, 2), (prec / 2) as i64)
}

/// Diagonal-product orthogonality: sum over j of d_{n,(2j-1)u} d_{n,(2j-1)v}
/// is 0 (u != v) or n
/// (u = v), certified.
pub fn diag_orthogonality(n: u64, u: i64, v: i64, prec: u32) -> (AppReal, Report) {
    assert!(n % 2 == 1 && n >= 3);
    let m = ((n - 1) / 2) as i64;
    assert!((1..=m).contains(&u) && (1..=m).contains(&v), "need 1 <= u, v <= m");
    let mut rep = Report::new("diag-orthogonality");
    let mut acc = AppReal::zero(prec);
    for j in 1..=m {
        let a = diag_approx(n, (2 * j - 1) * u, prec);
        let b = diag_approx(n, (2 * j - 1) * v, prec);
        acc = acc.add(&a.mul(&b));
    }
    let expect = if u == v { rat_int(n as i64) } else { Rat::zero() };
    let diff = acc.sub(&AppReal::from_rat(&expect, prec));
    rep.check(&format!("l34:n={n},u={u},v={v}"), diff.abs_le_rat(&err_tolerance(prec)), || {
        format!("sum {} vs expected {expect}", acc.to_decimal(20))
    });
    (acc, rep)
}

/// Cosine-difference ratio identities, certified for 0 <= j <= m, 1 <= t <= m.
pub fn ratio_lemma_check(m: u32, prec: u32) -> Report {
    let mut rep = Report::new("ratio-lemma");
    let tol = err_tolerance(prec);
    let phi = |k: i64| phi_approx(m, k, prec);
    for t in 1..=m as i64 {
        let mu_t = mu_approx(m, t, prec);
        for j in 0..=m as i64 {
            // (l1): mu_t P_j(mu_t) = phi_{(j+1)t} - phi_{jt}
            let lhs = mu_t.mul(&poly_p(j as u64).eval_appreal(&mu_t));
            let rhs = phi((j + 1) * t).sub(&phi(j * t));
            let diff = lhs.sub(&rhs);
            rep.check(&format!("l1-P:m={m},j={j},t={t}"), diff.abs_le_rat(&tol), || {
                format!("difference {}", diff.abs_upper())
            });
            // (l1): mu_t Q_j(mu_t) = phi_{(j+1)t} - 2 phi_{jt} + phi_{(j-1)t}
            let lhs = mu_t.mul(&poly_q(j as u64).eval_appreal(&mu_t));
            let rhs = phi((j + 1) * t)
                .sub(&phi(j * t).mul_int(2))
                .add(&phi((j - 1) * t));
            let diff = lhs.sub(&rhs);
            rep.check(&format!("l1-Q:m={m},j={j},t={t}"), diff.abs_le_rat(&tol), || {
                format!("difference {}", diff.abs_upper())
            });
        }
        // (l2)/(l3) in cross-multiplied form (denominators may vanish for
        // composite n).
        let mi = m as i64;
        for j in 1..=mi {
            let den = phi((mi - j + 1) * t).sub(&phi((mi - j) * t));
            let (num, sign) = if j <= mi / 2 {
                (phi((mi - 2 * j + 1) * t).sub(&phi((mi - 2 * j) * t)), 1)
            } else {
                (phi((2 * j - mi) * t).sub(&phi((2 * j - mi - 1) * t)), -1)
            };
            let rhs = phi(j * t).mul_int(sign).mul(&den);
            let diff = num.sub(&rhs);
            rep.check(&format!("l2-l3:m={m},j={j},t={t}"), diff.abs_le_rat(&tol), || {
                format!("difference {}", diff.abs_upper())
            });
        }
        // (l38): product forms against roots of lower-dimensional families.
        for j in 1..=m as i64 {
            let mut prod = mu_t.clone();
            for k in 1..=(j - 1) {
                prod = prod.mul(&mu_t.sub(&mu_approx((j - 1) as u32, k, prec)));
            }
            let rhs = phi(j * t).sub(&phi((j - 1) * t));
            let diff = prod.sub(&rhs);
            rep.check(&format!("l38-P:m={m},j={j},t={t}"), diff.abs_le_rat(&tol), || {
                format!("difference {}", diff.abs_upper())
            });
            let mut prod = mu_t.clone();
            for k in 1..=j {
                let nu = cos_shift_approx(2 * j as u64, k, TrigKind::CosOdd, prec)
                    .sub(&AppReal::from_int(2, prec));
                prod = prod.mul(&mu_t.sub(&nu));
            }
            let rhs = phi((j + 1) * t).sub(&phi(j * t).mul_int(2)).add(&phi((j - 1) * t));
            let diff = prod.sub(&rhs);
            rep.check(&format!("l38-Q:m={m},j={j},t={t}"), diff.abs_le_rat(&tol), || {
                format!("difference {}", diff.abs_upper())
            });
        }
    }
    rep
}

// ---------------------------------------------------------------------------
// Recombination identities, square sums, determinant products
// ---------------------------------------------------------------------------

/// Binomial recombinations (s9), (s12), (s13), the F/G mirror at
/// j = m, and the leading-diagonal relation (t26).
pub fn theorem2_check(eng: &SeqEngine, r_lo: i64, r_hi: i64) -> Report {
    let mut rep = Report::new("theorem2");
    let m = eng.m() as u64;
    for r in r_lo..=r_hi {
        for j in 0..m {
            // (s9): F_r^(m,m-j) = sum_k C(j+k+1, 2k+1) F_{r-k}^(m,m)
            let mut acc_f = Rat::zero();
            let mut acc_g = Rat::zero();
            for k in 0..=j {
                let f = eng.f_term(m as u32, r - k as i64);
                acc_f += Rat::from_integer(binom(j + k + 1, 2 * k as i64 + 1)) * &f;
                acc_g -= Rat::from_integer(binom(j + k, 2 * k as i64)) * f;
            }
            let ok = acc_f == eng.f_term((m - j) as u32, r);
            rep.check(&format!("s9-F:m={m},j={j},r={r}"), ok, || String::new());
            let ok = acc_g == eng.g_term((m - j) as u32, r);
            rep.check(&format!("s9-G:m={m},j={j},r={r}"), ok, || String::new());
        }
        for j in 1..=m {
            // (s12): F_r^(m,j) = sum_{k<j} (2j-1)/(2k+1) C(j+k-1, 2k) F_{r-k}^(m,1)
            let mut acc = Rat::zero();
            for k in 0..j {
                let c = Rat::new(
                    Int::from(2 * j - 1) * binom(j + k - 1, 2 * k as i64),
                    Int::from(2 * k + 1),
                );
                acc += c * eng.f_term(1, r - k as i64);
            }
            let ok = acc == eng.f_term(j as u32, r);
            rep.check(&format!("s12:m={m},j={j},r={r}"), ok, || String::new());
        }
        for j in 1..m {
            // (s13): G_r^(m,j) = sum_k (j/k) C(j+k-1, 2k-1) F_{r-k}^(m,1),
            // k = 0 term taken with the limit coefficient 2.
            let mut acc = eng.f_term(1, r) * rat_int(2);
            for k in 1..=j {
                let c = Rat::new(Int::from(j) * binom(j + k - 1, 2 * k as i64 - 1), Int::from(k));
                acc += c * eng.f_term(1, r - k as i64);
            }
            let ok = acc == eng.g_term(j as u32, r);
            rep.check(&format!("s13:m={m},j={j},r={r}"), ok, || String::new());
        }
        // F^(m,m) = -G^(m,m)
        let ok = eng.f_term(m as u32, r) == -eng.g_term(m as u32, r);
        rep.check(&format!("fg-mirror:m={m},r={r}"), ok, || String::new());
        // (t26): G0 = 2 F^(m,1) = -2 sum_k G^(m,k)
        let mut gsum = Rat::zero();
        for k in 1..=m {
            gsum += eng.g_term(k as u32, r);
        }
        let ok = eng.g0_term(r) == -(gsum * rat_int(2));
        rep.check(&format!("t26:m={m},r={r}"), ok, || String::new());
    }
    rep
}

/// Square-sum decomposition record for one (m, r).
#[derive(Clone, Debug)]
pub struct SquareDecomposition {
    pub m: u32,
    pub r: i64,
    /// |N_r^(m,j)| for j = 1..m (integer square roots of the F identity).
    pub f_numerators: Vec<Int>,
    /// -n F_{2r}^(m,1) as produced by the identity.
    pub f_square_sum: Rat,
}

/// Square sums: the F identity exactly, the G-form in its
/// oracle-validated index (2r-1), the stated (2r+1) form as a finding, and
/// the Fleck-level corollary identities (for r >= 0).
pub fn sum_of_squares(eng: &SeqEngine, r: i64) -> (SquareDecomposition, Report) {
    let mut rep = Report::new("sum-of-squares");
    let m = eng.m();
    let n = eng.n() as i64;

    // sum_j (F_r^(m,j))^2 = -n F_{2r}^(m,1)
    let mut sq = Rat::zero();
    for j in 1..=m {
        let f = eng.f_term(j, r);
        sq += &f * &f;
    }
    let rhs = eng.f_term(1, 2 * r) * rat_int(-n);
    rep.check(&format!("squ-F:m={m},r={r}"), sq == rhs, || {
        format!("sum of squares {sq}, -n F_2r = {rhs}")
    });

    // (G0)^2 + 2 sum_j (G_r^(m,j))^2 = 2n F_{2r-1}^(m,1)  [validated index]
    let g0 = eng.g0_term(r);
    let mut gsq = &g0 * &g0;
    for j in 1..=m {
        let g = eng.g_term(j, r);
        gsq += (&g * &g) * rat_int(2);
    }
    let rhs_fixed = eng.f_term(1, 2 * r - 1) * rat_int(2 * n);
    rep.check(&format!("squ-G(2r-1):m={m},r={r}"), gsq == rhs_fixed, || {
        format!("lhs {gsq}, 2n F_(2r-1) = {rhs_fixed}")
    });
    let rhs_printed = eng.f_term(1, 2 * r + 1) * rat_int(2 * n);
    rep.note(
        &format!("squ-G-printed(2r+1):m={m},r={r}"),
        format!(
            "printed index form {}: lhs {gsq}, 2n F_(2r+1) = {rhs_printed}",
            if gsq == rhs_printed { "holds here" } else { "FAILS (expected: index shift)" }
        ),
    );

    // Fleck-level corollary identities, brute force.
    if r >= 0 {
        let rr = r as u64;
        let nn = eng.n();
        let mut sum1 = Int::zero();
        for j in 1..=m as i64 {
            let f = fleck(2 * rr + 1, r + j, nn);
            sum1 += &f * &f;
        }
        let lhs1 = fleck(4 * rr + 1, 2 * r + 1, nn);
        let neg_sum1 = -sum1;
        rep.check(&format!("fleck-squ1:m={m},r={r}"), lhs1 == neg_sum1, || {
            format!("Fleck(4r+1) = {lhs1}, -sum of squares = {neg_sum1}")
        });
        let base = fleck(2 * rr + 2, r + 1, nn);
        let mut sum2 = &base * &base;
        for j in 1..=m as i64 {
            let f = fleck(2 * rr + 2, r + j + 1, nn);
            sum2 += Int::from(2) * &f * &f;
        }
        let lhs2a = Int::from(2) * fleck(4 * rr + 3, 2 * r + 2, nn);
        let lhs2b = fleck(4 * rr + 4, 2 * r + 2, nn);
        rep.check(&format!("fleck-squ2a:m={m},r={r}"), lhs2a == sum2, || {
            format!("2 Fleck(4r+3) = {lhs2a}, rhs = {sum2}")
        });
        rep.check(&format!("fleck-squ2b:m={m},r={r}"), lhs2b == sum2, || {
            format!("Fleck(4r+4) = {lhs2b}, rhs = {sum2}")
        });
    }

    let mut f_numerators = Vec::new();
    for j in 1..=m {
        let id = SeqId::new(SeqFamily::F, m, j).expect("valid id");
        match eng.numerator(&id, r) {
            Ok(v) => f_numerators.push(v.abs()),
            Err(_) => f_numerators.clear(),
        }
    }
    (
        SquareDecomposition { m, r, f_numerators, f_square_sum: rhs },
        rep,
    )
}

/// The m = 6 reference decomposition:
/// -N_10^(6,3) = 29226191 = -5 N_10^(6,1) - 5 N_9^(6,1) - N_8^(6,1), with
/// each component a signed sum of the reference squares.
pub fn m6_decomposition_check() -> Report {
    let mut rep = Report::new("m6-example");
    let eng = SeqEngine::new(6);
    let id = |j| SeqId::new(SeqFamily::F, 6, j).expect("valid id");

    let n10_3 = eng.numerator(&id(3), 10).expect("integer");
    rep.check("m6:N_10^(6,3)", n10_3 == Int::from(-29226191i64), || format!("got {n10_3}"));

    let n10 = eng.numerator(&id(1), 10).expect("integer");
    let n9 = eng.numerator(&id(1), 9).expect("integer");
    let n8 = eng.numerator(&id(1), 8).expect("integer");
    let combo = Int::from(-5) * &n10 + Int::from(-5) * &n9 - &n8;
    rep.check("m6:s12-combination", -&n10_3 == combo, || {
        format!("-N_10^(6,3) = {}, -5N_10 - 5N_9 - N_8 = {combo}", -&n10_3)
    });
    rep.check(
        "m6:component-values",
        n10 == Int::from(-7480420) && n9 == Int::from(1713705) && n8 == Int::from(-392616),
        || format!("N_10 = {n10}, N_9 = {n9}, N_8 = {n8}"),
    );

    // Square decompositions of the three components.
    let squares = |vals: &[i64]| -> Int {
        vals.iter().map(|&v| Int::from(v) * Int::from(v)).sum()
    };
    let f5: Vec<Int> = (1..=6).map(|j| eng.numerator(&id(j), 5).expect("integer").abs()).collect();
    let mut want: Vec<Int> = [1505i64, 1421, 1245, 1010, 702, 365].iter().map(|&v| Int::from(v)).collect();
    let mut got = f5.clone();
    got.sort();
    want.sort();
    rep.check("m6:F5-squares", got == want, || format!("|N_5^(6,j)| = {f5:?}"));
    rep.check(
        "m6:N10-square-sum",
        -&n10 == squares(&[1505, 1421, 1245, 1010, 702, 365]),
        || String::new(),
    );

    // N_9 = 2*365^2 + sum of the reference G squares.
    let g5: Vec<Int> = (1..=6)
        .map(|j| {
            let gid = SeqId::new(SeqFamily::G, 6, j).expect("valid id");
            eng.numerator(&gid, 5).expect("integer").abs()
        })
        .collect();
    let mut got = g5.clone();
    got.sort();
    let mut want: Vec<Int> = [702i64, 645, 543, 411, 260, 84].iter().map(|&v| Int::from(v)).collect();
    want.sort();
    rep.check("m6:G5-squares", got == want, || format!("|G_5^(6,j)| = {g5:?}"));
    rep.check(
        "m6:N9-square-sum",
        n9 == squares(&[702, 645, 543, 411, 260, 84]) + Int::from(2) * Int::from(365i64) * Int::from(365i64),
        || String::new(),
    );

    let f4: Vec<Int> = (1..=6).map(|j| eng.numerator(&id(j), 4).expect("integer").abs()).collect();
    let mut got = f4.clone();
    got.sort();
    let mut want: Vec<Int> = [344i64, 327, 283, 234, 159, 85].iter().map(|&v| Int::from(v)).collect();
    want.sort();
    rep.check("m6:F4-squares", got == want, || format!("|N_4^(6,j)| = {f4:?}"));
    rep.check(
        "m6:N8-square-sum",
        -&n8 == squares(&[344, 327, 283, 234, 159, 85]),
        || String::new(),
    );
    rep
}

/// Determinant structure: det B_odd = (-1)^m, det B_even = 1,
/// det R_m = (-1)^m/(2m+1), trace R_m = -m(m+1)/6, and the +-(2m+1)^-k
/// progression of det M(m,k).
pub fn detproduct_check(m: u32, k_max: u32) -> Report {
    let mut rep = Report::new("detproduct");
    let n = 2 * m as i64 + 1;
    let sgn = if m % 2 == 0 { 1 } else { -1 };
    let b_odd = binomial_matrix(Parity::Odd, m);
    let b_even = binomial_matrix(Parity::Even, m);
    rep.check(&format!("detBodd:m={m}"), b_odd.det() == rat_int(sgn), || format!("{}", b_odd.det()));
    rep.check(&format!("detBeven:m={m}"), b_even.det() == Rat::one(), || format!("{}", b_even.det()));
    let r = recurrence_matrix(m, Direction::Forward);
    let det_r = r.det();
    rep.check(&format!("detR:m={m}"), det_r == rat(sgn, n), || format!("{det_r}"));
    let tr = r.trace();
    let expect = -rat_int(m as i64) * rat_int(m as i64 + 1) / rat_int(6);
    rep.check(&format!("traceR:m={m}"), tr == expect, || format!("{tr}"));

    for parity in [Parity::Odd, Parity::Even] {
        let base = binomial_matrix(parity, m).scale(&rat_int(n));
        let mut cur = base
            .mul(&r.pow(m as i64).expect("invertible"));
        let mut prev_det = cur.det();
        let tag = if parity == Parity::Odd { "Mo" } else { "Me" };
        rep.check(&format!("det{tag}(m,0):m={m}"), prev_det.abs() == Rat::one(), || {
            format!("{prev_det}")
        });
        for k in 1..=k_max {
            cur = cur.mul(&r);
            let d = cur.det();
            let ratio = &d / &prev_det;
            rep.check(&format!("det{tag}-ratio:m={m},k={k}"), ratio == det_r, || format!("{ratio}"));
            prev_det = d;
        }
    }
    rep
}

/// Unlaced sequences: materialization, the m = 3 reference table, and the
/// certified monotone approach of the stride ratios to their cosine limits.
pub fn unlaced_suite(m: u32, depth: i64, prec: u32) -> Report {
    assert!(m >= 2);
    let mut rep = Report::new("unlaced");
    let eng = SeqEngine::new(m);

    // Defining interleave map consistency on the materialized window.
    for j in 1..=m {
        for i in 1..=depth {
            let v = eng.unlaced_f(j, i);
            let mm = m as i64;
            let s = (i - 1).rem_euclid(mm) + 1;
            let q = (i - s) / mm;
            let fam = if s % 2 == 1 { ((s + 1) / 2) as u32 } else { m + 1 - (s / 2) as u32 };
            let direct = eng.f_term(fam, mm * q + j as i64);
            rep.check(&format!("unlace-map:m={m},j={j},i={i}"), v == direct, || String::new());
        }
    }

    if m == 3 {
        // Example table: *F_r^(3,j) for r = 1..10 (numerators over 7^q).
        let table_n: [[i64; 10]; 3] = [
            [3, 1, 2, -17, -29, -37, 269, 484, 604, -4406],
            [-2, -2, -3, 22, 39, 49, -357, -643, -802, 5851],
            [2, 3, 4, -29, -52, -65, 474, 854, 1065, -7770],
        ];
        let den: [i64; 10] = [1, 1, 1, 7, 7, 7, 49, 49, 49, 343];
        for j in 1..=3u32 {
            for (idx, &num) in table_n[(j - 1) as usize].iter().enumerate() {
                let i = idx as i64 + 1;
                let expect = rat(num, den[idx]);
                let got = eng.unlaced_f(j, i);
                rep.check(&format!("unlace-m3-F:j={j},r={i}"), got == expect, || {
                    format!("got {got}, printed {expect}")
                });
                let nid = SeqId::new(SeqFamily::UnlacedF, 3, j).expect("valid id");
                let got_n = eng.numerator(&nid, i).expect("integer numerator");
                rep.check(&format!("unlace-m3-N:j={j},r={i}"), got_n == Int::from(num), || {
                    format!("got {got_n}, printed {num}")
                });
            }
        }

        // The three stride-ratio limits 2cos(2pi/7), -2cos(4pi/7), -2cos(6pi/7).
        let limits = [
            phi_approx(3, 1, prec),
            phi_approx(3, 2, prec).neg(),
            phi_approx(3, 3, prec).neg(),
        ];
        for j in 1..=3u32 {
            for (which, limit) in limits.iter().enumerate() {
                let mut last_err: Option<Rat> = None;
                let top = (depth / 3).max(8);
                for t in 2..=top {
                    let (ia, ib) = match which {
                        0 => (3 * t, 3 * t - 1),
                        1 => (3 * t - 2, 3 * t),
                        _ => (3 * t - 1, 3 * t - 2),
                    };
                    let ratio = eng.unlaced_f(j, ia) / eng.unlaced_f(j, ib);
                    let err = AppReal::from_rat(&ratio, prec).sub(limit);
                    let upper = err.abs_upper();
                    if let Some(prev) = &last_err {
                        rep.check(
                            &format!("unlace-monotone:j={j},limit={which},t={t}"),
                            upper < *prev,
                            || format!("error {upper} did not shrink from {prev}"),
                        );
                    }
                    last_err = Some(upper);
                }
                if let Some(fin) = last_err {
                    rep.check(
                        &format!("unlace-limit:j={j},limit={which}"),
                        fin < rat(1, 1_000_000),
                        || format!("final error {fin}"),
                    );
                }
            }
        }
    }
    rep
}

// ---------------------------------------------------------------------------
// Appendix fixtures (dimension <= 5 reference tables)
// ---------------------------------------------------------------------------

/// Integer interlacing sequences N_r^(m,j) for r = 1..10.
pub const APPENDIX_POSITIVE: &[(u32, u32, [i64; 10])] = &[
    (1, 1, [1, -1, 1, -1, 1, -1, 1, -1, 1, -1]),
    (2, 1, [2, -1, 3, -2, 7, -5, 18, -13, 47, -34]),
    (2, 2, [1, -1, 4, -3, 11, -8, 29, -21, 76, -55]),
    (3, 1, [3, -2, 2, -17, 22, -29, 269, -357, 474, -4406]),
    (3, 2, [2, -3, 4, -37, 49, -65, 604, -802, 1065, -9900]),
    (3, 3, [1, -2, 3, -29, 39, -52, 484, -643, 854, -7939]),
    (4, 1, [4, -10, 46, -271, 1702, -10855, 69499, -445420, 2855494, -18307378]),
    (4, 2, [3, -18, 108, -675, 4293, -27459, 175932, -1127763, 7230222, -46355652]),
    (4, 3, [2, -17, 116, -755, 4859, -31184, 199988, -1282310, 8221661, -52713260]),
    (4, 4, [1, -10, 73, -487, 3160, -20332, 130492, -836893, 5366170, -34405885]),
    (5, 1, [5, -5, 11, -32, 99, -3415, 10744, -33830, 106545, -335575]),
    (5, 2, [4, -10, 28, -85, 265, -9156, 28817, -90746, 285805, -900180]),
    (5, 3, [3, -11, 35, -110, 346, -11982, 37734, -118845, 374319, -1178980]),
    (5, 4, [2, -9, 31, -100, 317, -11002, 34669, -109210, 343988, -1083461]),
    (5, 5, [1, -5, 18, -59, 188, -6535, 20602, -64906, 204447, -643954]),
];

/// Negative-index table: N_r^(m,j) for r = -8..1 (index 0 holds r = -8).
pub const APPENDIX_NEGATIVE: &[(u32, u32, [i64; 10])] = &[
    (1, 1, [-1, 1, -1, 1, -1, 1, -1, 1, -1, 1]),
    (2, 1, [-34, 47, -13, 18, -5, 7, -2, 3, -1, 2]),
    (2, 2, [21, -29, 8, -11, 3, -4, 1, -1, 0, 1]),
    (3, 1, [-493, 131, -35, 66, -18, 5, -10, 3, -1, 3]),
    (3, 2, [383, -100, 26, -47, 12, -3, 5, -1, 0, 2]),
    (3, 3, [-204, 52, -13, 22, -5, 1, -1, 0, 0, 1]),
    (4, 1, [-8103, 2145, -572, 462, -126, 35, -30, 9, -3, 4]),
    (4, 2, [6477, -1668, 429, -330, 84, -21, 15, -3, 0, 3]),
    (4, 3, [-4080, 996, -238, 165, -36, 7, -3, 0, 0, 2]),
    (4, 4, [1836, -420, 91, -54, 9, -1, 0, 0, 0, 1]),
    (5, 1, [-2210, 585, -156, 42, -126, 35, -10, 3, -1, 5]),
    (5, 2, [1768, -455, 117, -30, 84, -21, 5, -1, 0, 4]),
    (5, 3, [-1125, 273, -65, 15, -36, 7, -1, 0, 0, 3]),
    (5, 4, [561, -124, 26, -5, 9, -1, 0, 0, 0, 2]),
    (5, 5, [-204, 40, -7, 1, -1, 0, 0, 0, 0, 1]),
];

/// Reproduces both reference tables from the matrix machinery, exactly.
pub fn appendix_check() -> Report {
    let mut rep = Report::new("appendix");
    rep.note(
        "theta-exponent",
        String::from(
            "negative-index scaling uses floor((r-1)/(phi(p^a)/2)); the stated              -a-floor((-2r+1-p^(a-1))/phi(p^a)) disagrees with the n = 9 table rows",
        ),
    );
    for m in 1..=5u32 {
        let eng = SeqEngine::new(m);
        for (tm, j, row) in APPENDIX_POSITIVE {
            if *tm != m {
                continue;
            }
            let id = SeqId::new(SeqFamily::F, m, *j).expect("valid id");
            for (idx, want) in row.iter().enumerate() {
                let r = idx as i64 + 1;
                match eng.numerator(&id, r) {
                    Ok(v) => rep.check(&format!("app-pos:m={m},j={j},r={r}"), v == Int::from(*want), || {
                        format!("computed {v}, table {want}")
                    }),
                    Err(e) => rep.fail(&format!("app-pos:m={m},j={j},r={r}"), format!("{e}")),
                }
            }
        }
        for (tm, j, row) in APPENDIX_NEGATIVE {
            if *tm != m {
                continue;
            }
            let id = SeqId::new(SeqFamily::F, m, *j).expect("valid id");
            for (idx, want) in row.iter().enumerate() {
                let r = idx as i64 - 8;
                match eng.numerator(&id, r) {
                    Ok(v) => rep.check(&format!("app-neg:m={m},j={j},r={r}"), v == Int::from(*want), || {
                        format!("computed {v}, table {want}")
                    }),
                    Err(e) => rep.fail(&format!("app-neg:m={m},j={j},r={r}"), format!("{e}")),
                }
            }
        }
    }
    rep
}

/// Recurrence residual: the window must satisfy the h-weighted relation
/// exactly; used by the property suites.
pub fn recurrence_residual(eng: &SeqEngine, family: SeqFamily, j: u32, r: i64) -> Rat {
    let term = |rr: i64| match family {
        SeqFamily::F => eng.f_term(j, rr),
        SeqFamily::G => eng.g_term(j, rr),
        SeqFamily::G0 => eng.g0_term(rr),
        _ => panic!("recurrence residual over F/G/G0 only"),
    };
    let m = eng.m() as i64;
    let mut acc = term(r + m);
    for (k, hk) in h_weights(eng.m()).iter().enumerate() {
        acc += hk * term(r + m - 1 - k as i64);
    }
    acc
}

/// The characteristic polynomial of R_m is (-1)^m P_m(x) / (2m+1) reversed;
/// concretely R_m^{-1}'s characteristic polynomial equals -P up to sign.
/// Exposed for the minors module cross-checks.
pub fn recurrence_char_poly(m: u32) -> UniPoly {
    recurrence_matrix(m, Direction::Forward).char_poly()
}


/// Exploratory Remark follow-up: for prime-power n with repeated factors,
/// lists observed extra prime powers shared by the sampled numerators.
/// Findings only; no formula is asserted.
pub fn extra_divisibility_observations(max_m: u32) -> Report {
    let mut rep = Report::new("extra-divisibility");
    for m in 1..=max_m {
        let n = 2 * m as u64 + 1;
        let factors = prime_factors(n);
        if factors.len() != 1 || factors[0].1 < 2 {
            continue;
        }
        let p = factors[0].0;
        let eng = SeqEngine::new(m);
        for j in 1..=m {
            let id = SeqId::new(SeqFamily::F, m, j).expect("valid id");
            let mut min_extra = u32::MAX;
            for r in 1..=12i64 {
                match eng.numerator(&id, r) {
                    Ok(mut v) => {
                        let mut extra = 0u32;
                        let big_p = Int::from(p);
                        while !v.is_zero() && (&v % &big_p).is_zero() {
                            v /= &big_p;
                            extra += 1;
                        }
                        min_extra = min_extra.min(extra);
                    }
                    Err(_) => min_extra = 0,
                }
            }
            if min_extra != u32::MAX && min_extra > 0 {
                rep.note(
                    &format!("extra-power:m={m},j={j}"),
                    format!("every sampled numerator carries at least {p}^{min_extra} beyond the stated scaling"),
                );
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_matrix_m2_matches_display() {
        let r = recurrence_matrix(2, Direction::Forward);
        assert_eq!(r, RatMat::new(2, 2, alloc::vec![rat_int(-1), rat_int(1), rat(-1, 5), rat_int(0)]));
        let inv = recurrence_matrix(2, Direction::Inverse);
        assert_eq!(inv, RatMat::new(2, 2, alloc::vec![rat_int(0), rat_int(-5), rat_int(1), rat_int(-5)]));
        let r1 = recurrence_matrix(1, Direction::Forward);
        assert_eq!(*r1.at(0, 0), rat(-1, 3));
    }

    #[test]
    fn m5_first_column() {
        let r = recurrence_matrix(5, Direction::Forward);
        let col: Vec<Rat> = (0..5).map(|i| r.at(i, 0).clone()).collect();
        assert_eq!(
            col,
            alloc::vec![rat_int(-5), rat_int(-7), rat_int(-4), rat_int(-1), rat(-1, 11)]
        );
    }

    #[test]
    fn initial_matrix_m3_matches_display() {
        let mo = initial_matrix(Parity::Odd, 3);
        assert_eq!(mo, RatMat::from_i64(3, 3, &[2, -2, 3, 4, -3, 2, 3, -2, 1]));
        let mo1 = initial_matrix(Parity::Odd, 1);
        assert_eq!(mo1, RatMat::from_i64(1, 1, &[1]));
    }

    #[test]
    fn m5_row1_tail_and_f7() {
        let eng = SeqEngine::new(5);
        assert_eq!(eng.f_term(1, 5), rat_int(99));
        assert_eq!(eng.f_term(1, 4), rat_int(-32));
        assert_eq!(eng.f_term(1, 3), rat_int(11));
        assert_eq!(eng.f_term(1, 7), rat(10744, 11));
        assert_eq!(eng.f_term(3, 6), rat(-11982, 11));
    }

    #[test]
    fn seq_term_examples() {
        let eng = SeqEngine::new(3);
        assert_eq!(eng.f_term(1, 4), rat(-17, 7));
        let eng1 = SeqEngine::new(1);
        assert_eq!(eng1.f_term(1, 1), rat_int(1));
        assert_eq!(eng1.f_term(1, 3), rat(1, 9));
        let eng2 = SeqEngine::new(2);
        assert_eq!(eng2.f_term(2, 5), rat(11, 25));
        let eng4 = SeqEngine::new(4);
        assert_eq!(eng4.f_term(1, -3), rat_int(315));
    }

    #[test]
    fn numerator_examples() {
        let eng = SeqEngine::new(3);
        let id = SeqId::new(SeqFamily::F, 3, 1).unwrap();
        assert_eq!(eng.numerator(&id, 4).unwrap(), Int::from(-17));
        let eng5 = SeqEngine::new(5);
        let id5 = SeqId::new(SeqFamily::F, 5, 1).unwrap();
        assert_eq!(eng5.numerator(&id5, 7).unwrap(), Int::from(10744));
        let eng4 = SeqEngine::new(4);
        let id4 = SeqId::new(SeqFamily::F, 4, 1).unwrap();
        assert_eq!(eng4.numerator(&id4, -3).unwrap(), Int::from(35));
    }

    #[test]
    fn fleck_examples() {
        assert_eq!(fleck(7, 4, 9), Int::from(35));
        assert_eq!(fleck(17, 2, 11), Int::from(-2244));
        assert_eq!(fleck(2, 1, 3), Int::from(-2));
        assert_eq!(fleck(1, 1, 3), Int::from(-1));
    }

    #[test]
    fn fleck_correspondence_examples() {
        let eng5 = SeqEngine::new(5);
        assert_eq!(eng5.f_term(5, -8), rat_int(-24684)); // -11^2 * 204
        let rep = fleck_correspondence(&eng5, 5, 8);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        let eng1 = SeqEngine::new(1);
        assert_eq!(eng1.f_term(1, 0), rat_int(-3));
        let rep = fleck_correspondence(&eng1, 1, 0);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn weisman_examples() {
        assert!(weisman_check(7, 3, 1).passed());
        assert!(weisman_check(9, 3, 2).passed());
        assert!(weisman_check(1, 3, 1).passed());
    }

    #[test]
    fn trig_eval_examples() {
        let eng = SeqEngine::new(3);
        let id = SeqId::new(SeqFamily::F, 3, 1).unwrap();
        let (v, rep) = trig_eval(&eng, &id, 4, 128).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_failure());
        assert!(v.encloses_rat(&rat(-17, 7)));
        let eng2 = SeqEngine::new(2);
        let id2 = SeqId::new(SeqFamily::F, 2, 1).unwrap();
        let (v, rep) = trig_eval(&eng2, &id2, 1, 96).unwrap();
        assert!(rep.passed());
        assert!(v.encloses_rat(&rat_int(2)));
    }

    #[test]
    fn diag_orthogonality_examples() {
        let (v, rep) = diag_orthogonality(5, 1, 2, 96);
        assert!(rep.passed());
        assert!(v.contains_zero() || v.abs_upper() < rat(1, 1 << 40));
        let (v, rep) = diag_orthogonality(5, 1, 1, 96);
        assert!(rep.passed());
        assert!(v.encloses_rat(&rat_int(5)));
        let (v, rep) = diag_orthogonality(3, 1, 1, 96);
        assert!(rep.passed());
        assert!(v.encloses_rat(&rat_int(3)));
    }

    #[test]
    fn ratio_lemma_small() {
        for m in 1..=3 {
            let rep = ratio_lemma_check(m, 96);
            assert!(rep.passed(), "m={m}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn sum_of_squares_examples() {
        let eng2 = SeqEngine::new(2);
        let (_, rep) = sum_of_squares(&eng2, 1);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        // 2^2 + 1^2 = 5 = -5 * F_2^(2,1) with F_2 = -1
        assert_eq!(eng2.f_term(1, 2), rat_int(-1));
        let eng1 = SeqEngine::new(1);
        let (_, rep) = sum_of_squares(&eng1, 1);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        let (_, rep) = sum_of_squares(&eng1, 0);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn theorem2_small() {
        for m in 1..=4 {
            let eng = SeqEngine::new(m);
            let rep = theorem2_check(&eng, -3, 8);
            assert!(rep.passed(), "m={m}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn detproduct_examples() {
        for m in 1..=4 {
            let rep = detproduct_check(m, 3);
            assert!(rep.passed(), "m={m}: {:?}", rep.first_failure());
        }
        assert_eq!(recurrence_matrix(2, Direction::Forward).det(), rat(1, 5));
        assert_eq!(binomial_matrix(Parity::Odd, 3).det(), rat_int(-1));
    }

    #[test]
    fn unlaced_m3_table() {
        let rep = unlaced_suite(3, 12, 96);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn appendix_reproduction() {
        let rep = appendix_check();
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn forward_backward_round_trip() {
        for m in 1..=5u32 {
            let eng = SeqEngine::new(m);
            for j in 1..=m {
                let v = eng.f_term(j, 1);
                let fwd = eng.f_term(j, 11);
                let _ = fwd;
                let back = eng.f_term(j, 1);
                assert_eq!(v, back);
                let neg = eng.f_term(j, -9);
                let _ = neg;
                assert_eq!(eng.f_term(j, 1), v);
            }
        }
    }
}
