//! Orthogonal-polynomial structure of the P and Q families: recurrences,
//! differential equations, Christoffel-Darboux, ladder operators, the
//! quadratic identity, orthogonality via exact sine-frequency reduction, and
//! the Mellin-transform polynomials with their functional equation and
//! critical-line zeros.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::appreal::{self, AppReal};
use crate::bigfloat::BigFloat;
use crate::combin::binom;
use crate::error::Error;
use crate::poly::{rising_factorial, UniPoly};
use crate::rat::{rat, rat_int, rat_pow, Int, Rat};
use crate::report::Report;
use crate::sturm::{count_real_roots, Bound};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PQ {
    P,
    Q,
}

fn member(family: PQ, m: u64) -> UniPoly {
    match family {
        PQ::P => crate::polyfam::poly_p(m),
        PQ::Q => crate::polyfam::poly_q(m),
    }
}

/// Resolved sign of the m^2 term in the Q differential equation: the stated
/// +m^2 fails the exact oracle at m = 1, 2; the equation holds with -m^2.
pub const Q_ODE_SIGN: i64 = -1;

/// Three-term recurrences X_{m+1} = (x+2) X_m - X_{m-1} from the binomial
/// definitions' seeds P_0 = 1, P_1 = x+3, Q_0 = 2, Q_1 = x+2.
pub fn three_term_check(family: PQ, m_max: u64) -> Report {
    let mut rep = Report::new("three-term");
    let shift = UniPoly::from_i64(&[2, 1]);
    for m in 1..m_max {
        let lhs = member(family, m + 1);
        let rhs = shift.mul(&member(family, m)).sub(&member(family, m - 1));
        rep.check(&format!("three-term:{family:?},m={m}"), lhs == rhs, || {
            format!("{lhs} vs {rhs}")
        });
    }
    rep
}

fn ode_residual(family: PQ, m: u64, msq_sign: i64) -> UniPoly {
    let p = member(family, m);
    let d1 = p.derivative();
    let d2 = d1.derivative();
    let x4x = UniPoly::from_i64(&[0, 4, 1]);
    match family {
        PQ::P => {
            // x(4+x) P'' + 2(x+3) P' - m(m+1) P
            x4x.mul(&d2)
                .add(&UniPoly::from_i64(&[6, 2]).mul(&d1))
                .sub(&p.scale(&rat_int((m * (m + 1)) as i64)))
        }
        PQ::Q => {
            // x(4+x) Q'' + (2+x) Q' + sign * m^2 Q
            x4x.mul(&d2)
                .add(&UniPoly::from_i64(&[2, 1]).mul(&d1))
                .add(&p.scale(&rat_int(msq_sign * (m * m) as i64)))
        }
    }
}

/// Differential equations. The P equation is asserted as stated; for Q the
/// stated +m^2 sign is tried first and the -m^2 variant reported when it is
/// the one that holds.
pub fn ode_check(family: PQ, m_max: u64) -> Report {
    let mut rep = Report::new("ode");
    for m in 1..=m_max {
        match family {
            PQ::P => {
                let r = ode_residual(PQ::P, m, 1);
                rep.check(&format!("ode-P:m={m}"), r.is_zero(), || format!("residual {r}"));
            }
            PQ::Q => {
                let printed = ode_residual(PQ::Q, m, 1);
                if printed.is_zero() {
                    rep.fail(
                        &format!("ode-Q:m={m}"),
                        String::from("printed +m^2 sign unexpectedly holds; pinned sign is -m^2"),
                    );
                    continue;
                }
                let fixed = ode_residual(PQ::Q, m, Q_ODE_SIGN);
                rep.check(&format!("ode-Q:m={m}"), fixed.is_zero(), || {
                    format!("residual {fixed} under both signs")
                });
            }
        }
    }
    if matches!(family, PQ::Q) {
        rep.note(
            "ode-Q-sign",
            String::from("the m^2 term enters with a minus sign; the printed plus sign fails already at m = 1"),
        );
    }
    rep
}

/// Christoffel-Darboux: sum_{k<=n} P_k(y) P_k(x) (x-y) =
/// P_{n+1}(x) P_n(y) - P_{n+1}(y) P_n(x), as an exact bivariate identity.
///
/// Both sides have y-degree <= n+1; agreement at n+3 distinct rational y
/// values (as exact x-polynomials) proves the identity.
pub fn cd_check(n_max: u64) -> Report {
    let mut rep = Report::new("christoffel-darboux");
    let ps: Vec<UniPoly> = (0..=n_max + 1).map(|k| member(PQ::P, k)).collect();
    for n in 0..=n_max {
        let mut ok = true;
        for yi in 0..=(n + 2) {
            let y0 = rat_int(yi as i64);
            let x_minus_y = UniPoly::new(alloc::vec![-y0.clone(), Rat::one()]);
            let mut lhs = UniPoly::zero();
            for k in 0..=n {
                let py = ps[k as usize].eval_rat(&y0);
                lhs = lhs.add(&ps[k as usize].scale(&py));
            }
            lhs = lhs.mul(&x_minus_y);
            let rhs = ps[(n + 1) as usize]
                .scale(&ps[n as usize].eval_rat(&y0))
                .sub(&ps[n as usize].scale(&ps[(n + 1) as usize].eval_rat(&y0)));
            if lhs != rhs {
                ok = false;
                break;
            }
        }
        rep.check(&format!("cd:n={n}"), ok, || String::from("bivariate identity failed"));
        // Confluent form: sum P_k^2 = P'_{n+1} P_n - P_{n+1} P_n'.
        let mut sq = UniPoly::zero();
        for k in 0..=n {
            sq = sq.add(&ps[k as usize].mul(&ps[k as usize]));
        }
        let rhs = ps[(n + 1) as usize]
            .derivative()
            .mul(&ps[n as usize])
            .sub(&ps[(n + 1) as usize].mul(&ps[n as usize].derivative()));
        rep.check(&format!("cd-confluent:n={n}"), sq == rhs, || String::new());
    }
    rep
}

/// Derivative relation (t74) and the raising/lowering operators.
///
/// The reference constants (2m-1)/(2m+3) belong to the Legendre-side
/// normalization P~_m = P_m/(2m+1) (the one behind the "P_1 = 1 + x/3"
/// seeds); they are asserted in that normalization, together with the
/// equivalent binomial-family forms, whose constants are all 2m+1.
pub fn ladder_check(m_max: u64) -> Report {
    let mut rep = Report::new("ladder");
    let x4x = UniPoly::from_i64(&[0, 4, 1]);
    let norm = |m: u64| member(PQ::P, m).scale(&rat(1, 2 * m as i64 + 1));
    for m in 1..=m_max {
        let p = member(PQ::P, m);
        let d = p.derivative();
        let pn = norm(m);
        let dn = pn.derivative();
        let factor = UniPoly::new(alloc::vec![rat_int(2 * m as i64 - 1), rat_int(m as i64)]);
        // (t74) normalized: x(4+x) P~' = -(2m-1) P~_{m-1} + (m(x+2)-1) P~_m
        let lhs = x4x.mul(&dn);
        let rhs = factor
            .mul(&pn)
            .sub(&norm(m - 1).scale(&rat_int(2 * m as i64 - 1)));
        rep.check(&format!("t74:m={m}"), lhs == rhs, || String::new());
        // Binomial-family equivalent: x(4+x) P' = -(2m+1) P_{m-1} + (m(x+2)-1) P
        let lhs = x4x.mul(&d);
        let rhs = factor
            .mul(&p)
            .sub(&member(PQ::P, m - 1).scale(&rat_int(2 * m as i64 + 1)));
        rep.check(&format!("t74-binomial:m={m}"), lhs == rhs, || String::new());
        // Raising: R_m P~_m = (2m+3) P~_{m+1}; on P_m the constant is 2m+1.
        let raise_mult = UniPoly::new(alloc::vec![rat_int(2 * m as i64 + 3), rat_int(m as i64 + 1)]);
        let raise = x4x.mul(&dn).add(&raise_mult.mul(&pn));
        let want = norm(m + 1).scale(&rat_int(2 * m as i64 + 3));
        rep.check(&format!("t75-raise:m={m}"), raise == want, || String::new());
        let raise = x4x.mul(&d).add(&raise_mult.mul(&p));
        let want = member(PQ::P, m + 1).scale(&rat_int(2 * m as i64 + 1));
        rep.check(&format!("t75-raise-binomial:m={m}"), raise == want, || String::new());
        // Lowering: L_m P~_m = (2m-1) P~_{m-1}; on P_m the constant is 2m+1.
        let lower = factor.mul(&pn).sub(&x4x.mul(&dn));
        let want = norm(m - 1).scale(&rat_int(2 * m as i64 - 1));
        rep.check(&format!("t76-lower:m={m}"), lower == want, || String::new());
        let lower = factor.mul(&p).sub(&x4x.mul(&d));
        let want = member(PQ::P, m - 1).scale(&rat_int(2 * m as i64 + 1));
        rep.check(&format!("t76-lower-binomial:m={m}"), lower == want, || String::new());
    }
    rep.note(
        "ladder-normalization",
        String::from("ladder constants as printed hold for P_m/(2m+1); on the binomial family every ladder constant becomes 2m+1"),
    );
    rep
}

/// Quadratic identity Q_m^2 = Q_{2m} + 2.
pub fn quad_identity_check(m_max: u64) -> Report {
    let mut rep = Report::new("quad-identity");
    for m in 1..=m_max {
        let q = member(PQ::Q, m);
        let lhs = q.mul(&q);
        let rhs = member(PQ::Q, 2 * m).add(&UniPoly::constant(rat_int(2)));
        rep.check(&format!("t77:m={m}"), lhs == rhs, || String::new());
    }
    rep
}

/// Exact orthogonality reduction. Under x = 2cos(2y) - 2 the weighted inner
/// product of the P family becomes a pure sine-frequency integral
/// int_0^pi sin((2l+1)y) sin((2k+1)y) dy (cosines of frequency 2l for Q);
/// the returned rational is that integral in units of pi, computed by
/// product-to-sum. The trig reduction identities are asserted exactly first.
pub fn ortho_inner(family: PQ, l: u64, k: u64) -> (Rat, Report) {
    let mut rep = Report::new("ortho-inner");
    // cos-integral over [0, pi] in units of pi: 1 at frequency 0, else 0.
    let cos_int = |freq: i64| if freq == 0 { Rat::one() } else { Rat::zero() };
    let shift4 = UniPoly::from_i64(&[4, 1]);
    let value = match family {
        PQ::P => {
            for idx in [l, k] {
                let reduced = crate::polyfam::cheb_s(2 * idx)
                    .even_part_subst()
                    .map(|s| s.compose(&shift4));
                match reduced {
                    Ok(r) => rep.check(
                        &format!("trig-reduction-P:{idx}"),
                        r == member(PQ::P, idx),
                        || String::from("S_(2m)(sqrt(x+4)) reduction failed"),
                    ),
                    Err(e) => rep.fail(&format!("trig-reduction-P:{idx}"), format!("{e}")),
                }
            }
            // sin A sin B = (cos(A-B) - cos(A+B))/2 with A = (2l+1)y, B = (2k+1)y.
            (cos_int(2 * l as i64 - 2 * k as i64) - cos_int(2 * (l + k) as i64 + 2)) / rat_int(2)
        }
        PQ::Q => {
            assert!(l >= 1 && k >= 1, "Q orthogonality needs k >= 1");
            for idx in [l, k] {
                let reduced = crate::polyfam::cheb_c(2 * idx)
                    .even_part_subst()
                    .map(|s| s.compose(&shift4));
                match reduced {
                    Ok(r) => rep.check(
                        &format!("trig-reduction-Q:{idx}"),
                        r == member(PQ::Q, idx),
                        || String::from("C_(2m)(sqrt(x+4)) reduction failed"),
                    ),
                    Err(e) => rep.fail(&format!("trig-reduction-Q:{idx}"), format!("{e}")),
                }
            }
            // cos A cos B = (cos(A-B) + cos(A+B))/2 with A = 2ly, B = 2ky.
            (cos_int(2 * l as i64 - 2 * k as i64) + cos_int(2 * (l + k) as i64)) / rat_int(2)
        }
    };
    let expect_zero = l != k;
    rep.check(
        &format!("ortho:{family:?},l={l},k={k}"),
        value.is_zero() == expect_zero,
        || format!("frequency integral {value} / pi"),
    );
    (value, rep)
}

// ---------------------------------------------------------------------------
// Mellin polynomials
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct MellinPoly {
    pub family: PQ,
    pub m: u64,
    /// Content-normalized polynomial in s.
    pub poly: UniPoly,
    /// Removed content factor (poly * normalization = raw sum).
    pub normalization: Rat,
}

/// Beta-function term-by-term reduction of the Mellin transform: with
/// X_m = sum c_k x^k,
///   P: p_m(s) ~ sum_k c_k (-4)^k (s+1/4)^(rise k) (s+k+1/2)^(rise m-k)
///   Q: q_m(s) ~ sum_k d_k (-4)^k (s-1/4)^(rise k) (s+k)^(rise m-k)
pub fn mellin_poly(family: PQ, m: u64) -> MellinPoly {
    let coeffs = member(family, m);
    let mut acc = UniPoly::zero();
    let s = UniPoly::x();
    for k in 0..=m {
        let c = coeffs.coeff(k as usize);
        if c.is_zero() {
            continue;
        }
        let scale = c * rat_pow(&rat_int(-4), k as i64);
        let term = match family {
            PQ::P => {
                let a = rising_factorial(&s.add(&UniPoly::constant(rat(1, 4))), k as u32);
                let b = rising_factorial(
                    &s.add(&UniPoly::constant(rat(2 * k as i64 + 1, 2))),
                    (m - k) as u32,
                );
                a.mul(&b)
            }
            PQ::Q => {
                let a = rising_factorial(&s.add(&UniPoly::constant(rat(-1, 4))), k as u32);
                let b = rising_factorial(&s.add(&UniPoly::constant(rat_int(k as i64))), (m - k) as u32);
                a.mul(&b)
            }
        };
        acc = acc.add(&term.scale(&scale));
    }
    let (poly, normalization) = acc.content_normalize();
    MellinPoly { family, m, poly, normalization }
}

/// Functional-equation sign: p(s) = sign * p(1-s); the leading coefficient
/// forces sign = (-1)^m, which is asserted as the regression pattern.
pub fn mellin_sign(mp: &MellinPoly) -> Result<i64, Error> {
    let reflected = mp.poly.compose(&UniPoly::from_i64(&[1, -1]));
    if mp.poly == reflected {
        Ok(1)
    } else if mp.poly == reflected.neg() {
        Ok(-1)
    } else {
        Err(Error::UndefinedIndex(format!(
            "no functional equation for {:?} m={}",
            mp.family, mp.m
        )))
    }
}

/// Functional equation + Sturm-certified critical-line zeros for all
/// m <= m_max of one family.
pub fn critical_line_check(family: PQ, m_max: u64) -> Report {
    let mut rep = Report::new("critical-line");
    for m in 1..=m_max {
        let mp = mellin_poly(family, m);
        let sign = match mellin_sign(&mp) {
            Ok(s) => s,
            Err(_) => {
                rep.fail(&format!("th213:{family:?},m={m}"), String::from("functional equation fails"));
                continue;
            }
        };
        let expect = if m % 2 == 0 { 1 } else { -1 };
        rep.check(&format!("th213:{family:?},m={m}"), sign == expect, || {
            format!("sign {sign}, expected (-1)^m = {expect}")
        });
        // s = 1/2 + t: the polynomial in t is even (sign +) or odd (sign -);
        // with u = t^2 the reduced polynomial must have only real negative
        // roots (t = 0, i.e. u contributing s = 1/2, counts as on-line).
        let g = mp.poly.shift(&rat(1, 2)); // p(1/2 + t) as polynomial in t
        let (even, odd) = g.parity_split();
        let (h, parity_ok) = if sign == 1 {
            (even, odd.is_zero())
        } else {
            (odd, even.is_zero())
        };
        rep.check(&format!("parity:{family:?},m={m}"), parity_ok, || {
            String::from("t-substitution parity does not match the sign")
        });
        if h.is_zero() {
            rep.fail(
                &format!("critical:{family:?},m={m}"),
                String::from("reduced polynomial vanished"),
            );
            continue;
        }
        let deg = h.degree().unwrap_or(0);
        if deg == 0 {
            rep.pass(&format!("critical:{family:?},m={m}"));
            continue;
        }
        match count_real_roots(&h, &Bound::NegInf, &Bound::Finite(Rat::zero())) {
            Ok(count) => rep.check(&format!("critical:{family:?},m={m}"), count == deg, || {
                format!("{count} of {deg} roots certified in (-inf, 0]")
            }),
            Err(e) => rep.fail(&format!("critical:{family:?},m={m}"), format!("{e}")),
        }
    }
    rep
}

/// Closed radical forms (th214)/(th215) at rational sample points away from
/// the branch points, plus the iterated recurrences (th216)/(th217) exactly.
pub fn radical_form_check(m: u64, samples: &[Rat], prec: u32) -> Report {
    let mut rep = Report::new("radical-form");
    let p = member(PQ::P, m);
    let q = member(PQ::Q, m);
    let tol = crate::sequences::err_tolerance(prec);
    for x in samples {
        let x2 = x * x;
        if (&x2 - rat_int(4)).is_positive() {
            let p_branch_ok = x > &rat_int(2); // th214's branch weights presume x > 2
            let xa = AppReal::from_rat(x, prec);
            let s = AppReal::from_rat(&(&x2 - rat_int(4)), prec).sqrt().expect("sqrt");
            let lo = xa.sub(&s);
            let hi = xa.add(&s);
            // Q_m(x-2) = 2^-m ((x-s)^m + (x+s)^m)
            let qm = lo
                .powi(m as i64)
                .and_then(|a| Ok(a.add(&hi.powi(m as i64)?)))
                .expect("powi")
                .mul_rat(&rat_pow(&rat(1, 2), m as i64));
            let exact = q.eval_rat(&(x - rat_int(2)));
            let d = qm.sub(&AppReal::from_rat(&exact, prec));
            rep.check(&format!("th215:m={m},x={x}"), d.abs_le_rat(&tol), || {
                format!("residual {}", d.abs_upper())
            });
            // P_m(x-2) via the weighted branches with w = sqrt((x+2)/(x-2)).
            if p_branch_ok {
                let ratio = (x + rat_int(2)) / (x - rat_int(2));
                let w = AppReal::from_rat(&ratio, prec).sqrt().expect("sqrt");
                let one = AppReal::one(prec);
                let pm = one
                    .sub(&w)
                    .mul(&lo.powi(m as i64).expect("powi"))
                    .add(&one.add(&w).mul(&hi.powi(m as i64).expect("powi")))
                    .mul_rat(&rat_pow(&rat(1, 2), m as i64 + 1));
                let exact = p.eval_rat(&(x - rat_int(2)));
                let d = pm.sub(&AppReal::from_rat(&exact, prec));
                rep.check(&format!("th214:m={m},x={x}"), d.abs_le_rat(&tol), || {
                    format!("residual {}", d.abs_upper())
                });
            }
        } else if x == &rat_int(2) {
            // Branch point handled as the exact polynomial value.
            rep.check(&format!("th215-branch:m={m}"), q.eval_rat(&Rat::zero()) == rat_int(2), || {
                String::new()
            });
        }
    }
    // (th216)/(th217): iterated recurrences, exact; the inner sign is
    // (-1)^j (with (-1)^r instead the identity fails already at m = 2, r = 1).
    for r in 0..=(m / 2) {
        let xp2 = UniPoly::from_i64(&[2, 1]);
        let mut acc_p = UniPoly::zero();
        let mut acc_q = UniPoly::zero();
        for j in 0..=r {
            let c = Rat::from_integer(binom(r, j as i64) * Int::from(if j % 2 == 0 { 1 } else { -1 }));
            let pw = xp2.pow((r - j) as usize).scale(&c);
            acc_p = acc_p.add(&pw.mul(&member(PQ::P, m - r - j)));
            acc_q = acc_q.add(&pw.mul(&member(PQ::Q, m - r - j)));
        }
        rep.check(&format!("th216:m={m},r={r}"), acc_p == p, || format!("{acc_p}"));
        rep.check(&format!("th217:m={m},r={r}"), acc_q == q, || format!("{acc_q}"));
    }
    if m >= 2 {
        rep.note(
            "th216-sign",
            String::from("the inner alternating sign is (-1)^j; with the printed (-1)^r the identity fails"),
        );
    }
    rep
}

/// Numeric spot-checks of the Jacobi-type generating function (t78) and the
/// derivative relation (t79).
pub fn q_analytic_checks(m: u64, samples: &[(Rat, Rat)], terms: u64, prec: u32) -> Report {
    let mut rep = Report::new("q-analytic");
    for (x, r) in samples {
        assert!(x > &rat_int(-4) && x < &Rat::zero(), "sample x must be in (-4, 0)");
        assert!(r.abs() < rat(1, 4), "sample r must be small for convergence");
        // LHS: truncated sum of (1/2)_k / k! Q_k(x) r^k.
        let mut lhs = AppReal::zero(prec);
        let mut poch = Rat::one(); // (1/2)_k / k!
        for k in 0..=terms {
            let qv = member(PQ::Q, k).eval_rat(x);
            lhs = lhs.add(&AppReal::from_rat(&(&poch * qv * rat_pow(r, k as i64)), prec));
            poch = &poch * rat(2 * k as i64 + 1, 2 * k as i64 + 2);
        }
        // RHS: R^-1 (1-r+R)^1/2 (1+r+R)^1/2 with R = sqrt(1-2r-xr+r^2).
        let r2 = Rat::one() - rat_int(2) * r - x * r + r * r;
        let rr = AppReal::from_rat(&r2, prec).sqrt().expect("sqrt");
        let one = AppReal::one(prec);
        let ra = AppReal::from_rat(r, prec);
        let rhs = one
            .sub(&ra)
            .add(&rr)
            .sqrt()
            .expect("sqrt")
            .mul(&one.add(&ra).add(&rr).sqrt().expect("sqrt"))
            .div(&rr)
            .expect("div");
        // Tail bound: |Q_k| <= 2 on [-4,0] and (1/2)_k/k! <= 1, so the
        // truncation error is below 2 |r|^(terms+1) / (1 - |r|).
        let tail = rat_int(2) * rat_pow(&r.abs(), terms as i64 + 1)
            / (Rat::one() - r.abs());
        let d = lhs.sub(&rhs);
        let bound = tail + crate::sequences::err_tolerance(prec);
        rep.check(&format!("t78:x={x},r={r}"), d.abs_le_rat(&bound), || {
            format!("|lhs - rhs| up to {}, allowed {bound}", d.abs_upper())
        });
    }
    // (t79): Q_m'(x) = 2m sin(m arccos(1+x/2)) / sqrt(-x(4+x)); with
    // y = 1+x/2, sin(m arccos y) = sqrt(1-y^2) U_{m-1}(y).
    let dq = member(PQ::Q, m).derivative();
    let tol = crate::sequences::err_tolerance(prec);
    for (x, _) in samples {
        let y = Rat::one() + x / rat_int(2);
        let u_val = crate::polyfam::cheb_u(m - 1).eval_rat(&y);
        let siny = AppReal::from_rat(&(Rat::one() - &y * &y), prec).sqrt().expect("sqrt");
        let denom = AppReal::from_rat(&(-(x * (rat_int(4) + x))), prec).sqrt().expect("sqrt");
        let rhs = siny
            .mul_rat(&(rat_int(2 * m as i64) * u_val))
            .div(&denom)
            .expect("div");
        let lhs = AppReal::from_rat(&dq.eval_rat(x), prec);
        let d = lhs.sub(&rhs);
        rep.check(&format!("t79:m={m},x={x}"), d.abs_le_rat(&tol), || {
            format!("|lhs - rhs| up to {}", d.abs_upper())
        });
    }
    rep
}

// ---------------------------------------------------------------------------
// tanh-sinh quadrature oracle for the Mellin transforms
// ---------------------------------------------------------------------------

struct QuadNode {
    /// Level at which this node first appears (t = j * 2^-k_max, odd j for
    /// the finest level and so on).
    level: u32,
    u: AppReal,
    four_minus_u: AppReal,
    /// u^(1/4) and (4-u)^(1/4).
    u4: AppReal,
    v4: AppReal,
    /// pi cosh(t) 4E/(1+E)^2 without the step factor h.
    weight: AppReal,
}

/// Precomputed tanh-sinh grid on (0, 4); shared by every Mellin integral at
/// one working precision.
pub struct TanhSinhGrid {
    prec: u32,
    k_max: u32,
    nodes: Vec<QuadNode>,
}

impl TanhSinhGrid {
    pub fn new(prec: u32, k_max: u32) -> Self {
        let pi = appreal::pi(prec);
        let half_pi = pi.mul_rat(&rat(1, 2));
        let mut nodes = Vec::new();
        let h_inv = 1i64 << k_max;
        // t ranges over +-j/2^k_max; stop once the weighted integrand bound
        // underflows the working precision. The bound multiplies in the
        // endpoint-singular factors u^(-1/4) and (4-u)^(-3/4), which grow
        // only single-exponentially against the double-exponential weight.
        let cutoff = BigFloat::two_pow(-(prec as i64 + 96));
        for sign in [1i64, -1] {
            let mut j = if sign == 1 { 0 } else { 1 };
            loop {
                let t = rat(sign * j, h_inv);
                let level = level_of(j, k_max);
                let ta = AppReal::from_rat(&t, prec);
                let et = appreal::exp(&ta);
                let emt = et.recip().expect("exp never zero");
                let sinh_t = et.sub(&emt).mul_rat(&rat(1, 2));
                let cosh_t = et.add(&emt).mul_rat(&rat(1, 2));
                let a = half_pi.mul(&sinh_t);
                let e2a = appreal::exp(&a.mul_int(2));
                let one_plus = e2a.add(&AppReal::one(prec));
                // u = 4 E/(1+E), 4-u = 4/(1+E)
                let u = e2a.mul_int(4).div(&one_plus).expect("div");
                let v = AppReal::from_int(4, prec).div(&one_plus).expect("div");
                let sech2 = e2a.mul_int(4).div(&one_plus.mul(&one_plus)).expect("div");
                let weight = pi.mul(&cosh_t).mul(&sech2);
                let u4 = u.sqrt().and_then(|s| s.sqrt()).expect("u >= 0");
                let v4 = v.sqrt().and_then(|s| s.sqrt()).expect("v >= 0");
                let singular = u4.mul(&u4).mul(&u4).div(&u).expect("u > 0") // u^(-1/4)
                    .mul(&v4.div(&v).expect("v > 0")); // (4-u)^(-3/4)
                let eff = weight.mul(&singular);
                let tiny = eff.value().abs().cmp(&cutoff) == core::cmp::Ordering::Less
                    && eff.err().cmp(&cutoff) == core::cmp::Ordering::Less;
                if tiny && j > h_inv {
                    break;
                }
                nodes.push(QuadNode { level, u, four_minus_u: v, u4, v4, weight });
                j += 1;
                assert!(j < (1i64 << (k_max + 14)), "tanh-sinh failed to truncate");
            }
        }
        TanhSinhGrid { prec, k_max, nodes }
    }

    /// integral of X_m(-u) u^(s-3/4 or s-5/4) (4-u)^(-3/4) du over (0,4),
    /// with the level-agreement difference folded into the error bound.
    pub fn mellin_integral(&self, family: PQ, m: u64, s: i64) -> AppReal {
        let poly = member(family, m).reflect(); // X_m(-u) as polynomial in u
        let mut partial: Vec<AppReal> = alloc::vec![AppReal::zero(self.prec); self.k_max as usize + 1];
        for node in &self.nodes {
            let pv = poly.eval_appreal(&node.u);
            // u-power: P uses u^(s-1) u^(1/4); Q uses u^(s-2) u^(3/4).
            let upow = match family {
                PQ::P => node.u.powi(s - 1).expect("u > 0").mul(&node.u4),
                PQ::Q => {
                    let u34 = node.u4.mul(&node.u4).mul(&node.u4);
                    node.u.powi(s - 2).expect("u > 0").mul(&u34)
                }
            };
            let vpow = node.v4.div(&node.four_minus_u).expect("v > 0");
            let term = pv.mul(&upow).mul(&vpow).mul(&node.weight);
            // A node at `level` participates in every level >= level.
            for lvl in node.level..=self.k_max {
                partial[lvl as usize] = partial[lvl as usize].add(&term);
            }
        }
        // S_k = h_k * sum, h_k = 2^-k.
        let fin = partial[self.k_max as usize].mul_rat(&rat(1, 1i64 << self.k_max));
        let prevsum = partial[(self.k_max - 1) as usize].mul_rat(&rat(1, 1i64 << (self.k_max - 1)));
        let level_diff = fin.sub(&prevsum).abs();
        // Fold the discretization estimate into the certified ball: the
        // double-exponential rule gains digits quadratically per level, so
        // |S_k - S_{k-1}| dominates the remaining discretization error.
        AppReal::with_err(
            fin.value().clone(),
            fin.err().add(level_diff.value()).add(level_diff.err()),
            self.prec,
        )
    }
}

fn level_of(j: i64, k_max: u32) -> u32 {
    // j = odd * 2^z: first level where t = j/2^k_max appears is k_max - z.
    if j == 0 {
        return 0;
    }
    let z = j.trailing_zeros().min(k_max);
    k_max - z
}

/// Quadrature validation of the Mellin polynomials at s in {1, 2, 3}: the
/// cross-ratios I(s)/I(1) must match 4^(s-1) (p(s)/p(1)) times an exact
/// rising-factorial factor (the gamma constants cancel).
pub fn mellin_oracle_check(grid: &TanhSinhGrid, family: PQ, m: u64) -> Report {
    let mut rep = Report::new("mellin-oracle");
    let mp = mellin_poly(family, m);
    let prec = grid.prec;
    let i1 = grid.mellin_integral(family, m, 1);
    let tol = rat_pow(&rat(1, 10), 30);
    for s in [2i64, 3] {
        let is = grid.mellin_integral(family, m, s);
        let measured = is.div(&i1).expect("nonzero integral");
        // Gamma-ratio adjustment as exact rationals:
        //   P: (5/4)^(rise s-1) / (m + 3/2)^(rise s-1)
        //   Q: (3/4)^(rise s-1) / (m + 1)^(rise s-1)
        let (a, b) = match family {
            PQ::P => (rat(5, 4), rat(2 * m as i64 + 3, 2)),
            PQ::Q => (rat(3, 4), rat_int(m as i64 + 1)),
        };
        let gamma_adjust = crate::poly::rising_factorial_rat(&a, (s - 1) as u32)
            / crate::poly::rising_factorial_rat(&b, (s - 1) as u32);
        let ps = mp.poly.eval_rat(&rat_int(s));
        let p1 = mp.poly.eval_rat(&Rat::one());
        let predicted = rat_pow(&rat_int(4), s - 1) * (ps / p1) * gamma_adjust;
        let d = measured.sub(&AppReal::from_rat(&predicted, prec));
        // relative comparison
        let rel_ok = d.abs_upper() <= predicted.abs() * &tol + &tol;
        rep.check(&format!("mellin-oracle:{family:?},m={m},s={s}"), rel_ok, || {
            format!(
                "measured {} predicted {} (diff up to {})",
                measured.to_decimal(40),
                crate::rat::rat_to_decimal(&predicted, 40),
                d.abs_upper()
            )
        });
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_term_seeds() {
        // P_2 = (x+2)(x+3) - 1, Q_2 = (x+2)^2 - 2
        assert!(three_term_check(PQ::P, 8).passed());
        assert!(three_term_check(PQ::Q, 8).passed());
    }

    #[test]
    fn ode_signs() {
        assert!(ode_check(PQ::P, 6).passed());
        let rep = ode_check(PQ::Q, 6);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        // the plus-sign variant really does fail at m = 1
        assert!(!ode_residual(PQ::Q, 1, 1).is_zero());
        assert!(ode_residual(PQ::Q, 1, -1).is_zero());
        assert!(ode_residual(PQ::Q, 2, -1).is_zero());
    }

    #[test]
    fn cd_small() {
        let rep = cd_check(6);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        // n=1 hand expansion: RHS/(x-y) at y=0 gives 1 + 3(x+3) + ... sanity
        let p1 = member(PQ::P, 1);
        let p2 = member(PQ::P, 2);
        let lhs = UniPoly::one().add(&p1.scale(&p1.eval_rat(&rat_int(0))));
        let rhs = p2.scale(&member(PQ::P, 1).eval_rat(&rat_int(0)));
        let _ = (lhs, rhs);
    }

    #[test]
    fn ladder_small() {
        let rep = ladder_check(8);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        // m=2 on the binomial family: raising lands on 5 P_3
        let p2 = member(PQ::P, 2);
        let d = p2.derivative();
        let x4x = UniPoly::from_i64(&[0, 4, 1]);
        let raise = x4x.mul(&d).add(&UniPoly::from_i64(&[7, 3]).mul(&p2));
        assert_eq!(raise, member(PQ::P, 3).scale(&rat_int(5)));
        // and with the P/(2m+1) normalization the 2m+3 constant appears:
        // R_2 (P_2/5) = 7 (P_3/7) = P_3
        assert_eq!(raise.scale(&rat(1, 5)), member(PQ::P, 3));
    }

    #[test]
    fn quad_identity_small() {
        assert!(quad_identity_check(8).passed());
        let q1 = member(PQ::Q, 1);
        assert_eq!(q1.mul(&q1), member(PQ::Q, 2).add(&UniPoly::constant(rat_int(2))));
    }

    #[test]
    fn ortho_values() {
        let (v, rep) = ortho_inner(PQ::P, 1, 2);
        assert!(rep.passed());
        assert!(v.is_zero());
        let (v, rep) = ortho_inner(PQ::P, 2, 2);
        assert!(rep.passed());
        assert_eq!(v, rat(1, 2));
        let (v, rep) = ortho_inner(PQ::Q, 1, 3);
        assert!(rep.passed());
        assert!(v.is_zero());
    }

    #[test]
    fn mellin_poly_shapes() {
        let p0 = mellin_poly(PQ::P, 0);
        assert_eq!(p0.poly, UniPoly::one());
        let p1 = mellin_poly(PQ::P, 1);
        assert_eq!(p1.poly.degree(), Some(1));
        assert_eq!(mellin_sign(&p1).unwrap(), -1);
        let q2 = mellin_poly(PQ::Q, 2);
        assert_eq!(q2.poly.degree(), Some(2));
        assert_eq!(mellin_sign(&q2).unwrap(), 1);
    }

    #[test]
    fn critical_line_small() {
        let rep = critical_line_check(PQ::P, 6);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        let rep = critical_line_check(PQ::Q, 6);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn radical_forms() {
        // Q_2(x-2) at x=3: 2^-2 ((3-sqrt5)^2 + (3+sqrt5)^2) = 7 = L_4
        let rep = radical_form_check(2, &[rat_int(3), rat_int(2), rat(-5, 2)], 96);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        let rep = radical_form_check(4, &[rat_int(3), rat(7, 2)], 96);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn q_analytic_small() {
        let samples = alloc::vec![(rat_int(-1), rat(1, 8)), (rat_int(-2), rat(1, 16))];
        let rep = q_analytic_checks(2, &samples, 20, 128);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        // exact Q_2'(-1) = 2(-1) + 4 = 2
        assert_eq!(member(PQ::Q, 2).derivative().eval_rat(&rat_int(-1)), rat_int(2));
    }

    #[test]
    fn mellin_quadrature_validates_m_small() {
        let grid = TanhSinhGrid::new(192, 7);
        for family in [PQ::P, PQ::Q] {
            for m in 0..=2 {
                let rep = mellin_oracle_check(&grid, family, m);
                assert!(rep.passed(), "{family:?} m={m}: {:?}", rep.first_failure());
            }
        }
    }
}
