//! Certified arbitrary-precision reals.
//!
//! An `AppReal` is a ball (value, error): the true quantity is guaranteed to
//! lie in `[value - err, value + err]`. Sums and products of the dyadic
//! values are exact; rounding, division, square roots and series truncation
//! feed conservative bounds into `err`. There are no floating-point fast
//! paths: every bound is computed in integer arithmetic.

use alloc::string::String;
use core::cmp::Ordering;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bigfloat::BigFloat;
use crate::error::Error;
use crate::rat::{rat, rat_int, round_to_int, Int, Rat};

#[derive(Clone, Debug)]
pub struct AppReal {
    v: BigFloat,
    e: BigFloat,
    prec: u32,
}

impl AppReal {
    pub fn exact(v: BigFloat, prec: u32) -> Self {
        AppReal { v, e: BigFloat::zero(), prec }.trim()
    }

    pub fn zero(prec: u32) -> Self {
        AppReal { v: BigFloat::zero(), e: BigFloat::zero(), prec }
    }

    pub fn one(prec: u32) -> Self {
        AppReal { v: BigFloat::one(), e: BigFloat::zero(), prec }
    }

    pub fn from_int(n: i64, prec: u32) -> Self {
        Self::exact(BigFloat::from_i64(n), prec)
    }

    pub fn from_rat(r: &Rat, prec: u32) -> Self {
        let num = BigFloat::from_int(r.numer().clone());
        let den = r.denom();
        // Power-of-two denominators convert exactly.
        if den.is_one() {
            return Self::exact(num, prec);
        }
        let tz = den.trailing_zeros().unwrap_or(0);
        if (den >> tz).is_one() {
            return Self::exact(num.shr(tz as i64), prec);
        }
        let (q, err) = BigFloat::div_to_prec(&num, &BigFloat::from_int(den.clone()), prec + 8);
        AppReal { v: q, e: err, prec }.trim()
    }

    pub fn with_err(v: BigFloat, e: BigFloat, prec: u32) -> Self {
        debug_assert!(!e.is_negative());
        AppReal { v, e, prec }.trim()
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn value(&self) -> &BigFloat {
        &self.v
    }

    pub fn err(&self) -> &BigFloat {
        &self.e
    }

    pub fn is_exact(&self) -> bool {
        self.e.is_zero()
    }

    /// Rounds the value to the working precision and the error bound to a
    /// short upward-rounded mantissa.
    fn trim(mut self) -> Self {
        let (v, round_err) = self.v.round_to(self.prec + 16);
        self.v = v;
        self.e = self.e.add(&round_err).coarsen_up();
        self
    }

    fn promote(a: &Self, b: &Self) -> u32 {
        a.prec.max(b.prec)
    }

    pub fn neg(&self) -> Self {
        AppReal { v: self.v.neg(), e: self.e.clone(), prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        AppReal { v: self.v.abs(), e: self.e.clone(), prec: self.prec }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = Self::promote(self, other);
        AppReal { v: self.v.add(&other.v), e: self.e.add(&other.e), prec }.trim()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = Self::promote(self, other);
        let v = self.v.mul(&other.v);
        let e = self
            .v
            .abs()
            .mul(&other.e)
            .add(&other.v.abs().mul(&self.e))
            .add(&self.e.mul(&other.e));
        AppReal { v, e, prec }.trim()
    }

    pub fn mul_int(&self, k: i64) -> Self {
        let kk = Int::from(k);
        AppReal {
            v: self.v.mul_int(&kk),
            e: self.e.mul_int(&kk.abs()),
            prec: self.prec,
        }
        .trim()
    }

    /// Multiplication by an exact rational.
    pub fn mul_rat(&self, r: &Rat) -> Self {
        let scaled = AppReal {
            v: self.v.mul_int(r.numer()),
            e: self.e.mul_int(&r.numer().abs()),
            prec: self.prec,
        };
        if r.denom().is_one() {
            return scaled.trim();
        }
        let den = BigFloat::from_int(r.denom().clone());
        let (q, qerr) = BigFloat::div_to_prec(&scaled.v, &den, self.prec + 8);
        let (eq, eqerr) = BigFloat::div_to_prec(&scaled.e, &den, 16);
        AppReal { v: q, e: qerr.add(&eq).add(&eqerr), prec: self.prec }.trim()
    }

    /// Division; errors when the divisor interval contains zero.
    pub fn div(&self, other: &Self) -> Result<Self, Error> {
        let prec = Self::promote(self, other);
        let babs = other.v.abs();
        if babs.cmp(&other.e) != Ordering::Greater {
            return Err(Error::IntervalDivByZero);
        }
        let (q, qerr) = BigFloat::div_to_prec(&self.v, &other.v, prec + 8);
        // |a*/b* - a.v/b.v| <= (a.e*|b.v| + |a.v|*b.e) / (|b.v| * (|b.v| - b.e))
        let num = self.e.mul(&babs).add(&self.v.abs().mul(&other.e));
        let den = babs.mul(&babs.sub(&other.e));
        let prop = if num.is_zero() {
            BigFloat::zero()
        } else {
            let (p, perr) = BigFloat::div_to_prec(&num, &den, 16);
            p.add(&perr)
        };
        Ok(AppReal { v: q, e: qerr.add(&prop), prec }.trim())
    }

    pub fn recip(&self) -> Result<Self, Error> {
        Self::one(self.prec).div(self)
    }

    /// Square root via directed-rounded endpoint roots.
    pub fn sqrt(&self) -> Result<Self, Error> {
        let prec = self.prec;
        let lo = self.v.sub(&self.e);
        let hi = self.v.add(&self.e);
        if hi.is_negative() {
            return Err(Error::UndefinedIndex(String::from("sqrt of negative interval")));
        }
        let lo = if lo.is_negative() { BigFloat::zero() } else { lo };
        let (slo, _) = lo.sqrt_to_prec(prec + 8); // truncated: slo <= sqrt(lo)
        let (shi, sherr) = hi.sqrt_to_prec(prec + 8);
        let shi_up = shi.add(&sherr); // shi_up >= sqrt(hi)
        let two = BigFloat::from_i64(2);
        let (center, cerr) = BigFloat::div_to_prec(&slo.add(&shi_up), &two, prec + 8);
        let (half_width, hwerr) = BigFloat::div_to_prec(&shi_up.sub(&slo), &two, 16);
        let e = half_width.add(&hwerr).add(&cerr);
        Ok(AppReal { v: center, e, prec }.trim())
    }

    /// Integer power; negative exponents via certified reciprocal.
    pub fn powi(&self, e: i64) -> Result<Self, Error> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one(self.prec);
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            n >>= 1;
            if n > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    /// Exact rational endpoints of the enclosure.
    pub fn interval(&self) -> (Rat, Rat) {
        (self.v.sub(&self.e).to_rat(), self.v.add(&self.e).to_rat())
    }

    /// Exact upper bound on |true value|.
    pub fn abs_upper(&self) -> Rat {
        self.v.abs().add(&self.e).to_rat()
    }

    /// Exact lower bound on |true value| (zero if the interval straddles 0).
    pub fn abs_lower(&self) -> Rat {
        let l = self.v.abs().sub(&self.e);
        if l.is_negative() {
            Rat::zero()
        } else {
            l.to_rat()
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.v.abs().cmp(&self.e) != Ordering::Greater
    }

    pub fn encloses_rat(&self, r: &Rat) -> bool {
        let (lo, hi) = self.interval();
        lo <= *r && *r <= hi
    }

    /// Certified |true value| <= bound.
    pub fn abs_le_rat(&self, bound: &Rat) -> bool {
        self.abs_upper() <= *bound
    }

    /// Certified error bound <= 2^k.
    pub fn err_le_2pow(&self, k: i64) -> bool {
        self.e.cmp(&BigFloat::two_pow(k)) != Ordering::Greater
    }

    pub fn err_rat(&self) -> Rat {
        self.e.to_rat()
    }

    /// Certified strict comparison; `None` when the enclosures overlap.
    pub fn certified_lt(&self, other: &Self) -> Option<bool> {
        let (alo, ahi) = self.interval();
        let (blo, bhi) = other.interval();
        if ahi < blo {
            Some(true)
        } else if bhi < alo {
            Some(false)
        } else {
            None
        }
    }

    /// Certified sign of the true value; `None` when the interval straddles 0.
    pub fn certified_sign(&self) -> Option<i32> {
        if self.contains_zero() {
            None
        } else if self.v.is_negative() {
            Some(-1)
        } else {
            Some(1)
        }
    }

    /// Certified floor: `Some(n)` when every point of the enclosure has
    /// floor n.
    pub fn certified_floor(&self) -> Option<Int> {
        let lo = self.v.sub(&self.e).floor_int();
        let hi = self.v.add(&self.e).floor_int();
        if lo == hi {
            Some(lo)
        } else {
            None
        }
    }

    /// Decimal rendering of the centre value (diagnostics / CLI output).
    pub fn to_decimal(&self, digits: u32) -> String {
        crate::rat::rat_to_decimal(&self.v.to_rat(), digits)
    }

    pub fn to_f64(&self) -> f64 {
        self.v.to_f64()
    }
}

// ---------------------------------------------------------------------------
// Constants
// ---------------------------------------------------------------------------

/// atan(1/k) scaled by 2^p, with the count of floor errors (in units of 2^-p).
fn atan_inv_scaled(k: u64, p: u32) -> (Int, Int) {
    let one_scaled = Int::one() << p as usize;
    let k2 = Int::from(k) * Int::from(k);
    let mut kpow = Int::from(k);
    let mut j: u64 = 0;
    let mut acc = Int::zero();
    let mut terms: u64 = 0;
    loop {
        let denom = Int::from(2 * j + 1) * &kpow;
        let t = &one_scaled / &denom;
        if t.is_zero() {
            break;
        }
        if j % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
        terms += 1;
        kpow *= &k2;
        j += 1;
    }
    // One unit of floor error per term plus the alternating tail (< 1 unit).
    (acc, Int::from(terms + 1))
}

/// pi with certified error <= 2^-(prec).
pub fn pi(prec: u32) -> AppReal {
    let p = prec + 32;
    let (s5, e5) = atan_inv_scaled(5, p);
    let (s239, e239) = atan_inv_scaled(239, p);
    let val = s5 * 16 - s239 * 4;
    let err = e5 * 16 + e239 * 4;
    AppReal::with_err(
        BigFloat { mant: val, exp: -(p as i64) },
        BigFloat { mant: err, exp: -(p as i64) },
        prec,
    )
}

/// ln 2 with certified error bound.
pub fn ln2(prec: u32) -> AppReal {
    let p = prec + 32;
    let one_scaled = Int::one() << p as usize;
    let mut acc = Int::zero();
    let mut terms: u64 = 0;
    let mut j: u64 = 1;
    loop {
        let denom = Int::from(j) << j.min(p as u64 + 8) as usize;
        let t = &one_scaled / &denom;
        if t.is_zero() {
            break;
        }
        acc += t;
        terms += 1;
        j += 1;
    }
    // Floor errors plus geometric tail bound 2^{p-J+1} < 2J units.
    let err = Int::from(terms + 2 * j);
    AppReal::with_err(
        BigFloat { mant: acc, exp: -(p as i64) },
        BigFloat { mant: err, exp: -(p as i64) },
        prec,
    )
}

// ---------------------------------------------------------------------------
// cos / sin at rational multiples of 2*pi
// ---------------------------------------------------------------------------

/// Alternating cosine series on |x| <= 2: truncation is bounded by the
/// first omitted term, input-ball width enters through the Lipschitz bound.
fn alternating_kernel(x: &AppReal, wp: u32) -> AppReal {
    let c = x.value().clone();
    let c2 = c.mul(&c);
    let mut term = BigFloat::one();
    let mut sum = term.clone();
    let mut round_err = BigFloat::zero();
    let tiny = BigFloat::two_pow(-(wp as i64));
    let mut j: i64 = 1;
    loop {
        let divisor = Int::from(2 * j - 1) * Int::from(2 * j);
        let num = term.mul(&c2).neg();
        let (t, terr) = BigFloat::div_to_prec(&num, &BigFloat::from_int(divisor), wp + 8);
        let (t, rerr) = t.round_to(wp + 8);
        term = t;
        round_err = round_err.add(&terr).add(&rerr).coarsen_up();
        sum = sum.add(&term);
        let (s, serr) = sum.round_to(wp + 16);
        sum = s;
        round_err = round_err.add(&serr).coarsen_up();
        if term.abs().cmp(&tiny) != Ordering::Greater {
            break;
        }
        j += 1;
        assert!(j < 10_000, "series failed to converge");
    }
    // Alternating decreasing series: truncation <= |first omitted| <= |last|.
    let trunc = term.abs();
    // Lipschitz constant 1 for both cos and sin on the input ball.
    let e = round_err.add(&trunc).add(x.err());
    AppReal::with_err(sum, e, x.prec())
}

/// cos(x) for |x| <= 2 (callers reduce the argument first).
fn cos_kernel(x: &AppReal) -> AppReal {
    alternating_kernel(x, x.prec() + 24)
}

/// cos(2*pi*t) for exact rational t, with certified error <= 2^-prec.
/// Exact at the rational points t in {0, 1/4, 1/3, 1/2, 1/6, ...} that fold
/// onto {0, 1/6, 1/4}.
pub fn cos2pi(t: &Rat, prec: u32) -> AppReal {
    use num_integer::Integer;
    // Reduce t mod 1 to [0, 1).
    let num = t.numer().mod_floor(t.denom());
    let mut t = Rat::new(num, t.denom().clone());
    let mut sign = 1i64;
    if t > rat(1, 2) {
        t = rat_int(1) - t; // cos(2pi(1-t)) = cos(2pi t)
    }
    if t > rat(1, 4) {
        t = rat(1, 2) - t; // cos(2pi(1/2-u)) = -cos(2pi u)
        sign = -1;
    }
    // Exact rational cosines.
    if t.is_zero() {
        return AppReal::from_int(sign, prec);
    }
    if t == rat(1, 4) {
        return AppReal::zero(prec);
    }
    if t == rat(1, 6) {
        return AppReal::from_rat(&rat(sign, 2), prec);
    }
    let theta = pi(prec + 24).mul_rat(&(&t * rat_int(2)));
    let c = cos_kernel(&theta);
    if sign < 0 {
        c.neg()
    } else {
        c
    }
}

/// sin(2*pi*t) = cos(2*pi*(1/4 - t)).
pub fn sin2pi(t: &Rat, prec: u32) -> AppReal {
    cos2pi(&(rat(1, 4) - t), prec)
}

/// Kind selector for the shifted-cosine constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigKind {
    /// 2*cos(2*pi*k/n)
    Cos2Pi,
    /// 2*cos((2k-1)*pi/n)
    CosOdd,
    /// 2*sin(pi*k/n)
    Sin,
}

/// Doubled trigonometric values 2cos(2*pi*k/n), 2cos((2k-1)*pi/n) and
/// 2sin(pi*k/n) with err <= 2^-precision_bits.
pub fn cos_shift_approx(n: u64, k: i64, kind: TrigKind, precision_bits: u32) -> AppReal {
    assert!(n >= 1);
    let nn = rat_int(n as i64);
    let t = match kind {
        TrigKind::Cos2Pi => rat_int(k) / &nn,
        TrigKind::CosOdd => rat_int(2 * k - 1) / (&nn * rat_int(2)),
        TrigKind::Sin => rat(1, 4) - rat_int(k) / (&nn * rat_int(2)),
    };
    cos2pi(&t, precision_bits + 2).mul_int(2)
}

// ---------------------------------------------------------------------------
// exp (used by the Mellin quadrature oracle)
// ---------------------------------------------------------------------------

/// e^x with a certified bound. |x| is assumed moderate (|x| < 2^40).
pub fn exp(x: &AppReal) -> AppReal {
    let prec = x.prec();
    let wp = prec + 32;
    let l2 = ln2(wp);
    // Nearest integer k to x / ln2.
    let (q, _) = BigFloat::div_to_prec(x.value(), l2.value(), 40);
    let k = round_to_int(&q.to_rat());
    let k_i64 = k.to_i64().expect("exp argument out of supported range");
    let r = x.sub(&l2.mul_int(k_i64));
    // |r| <= 3/4 must hold; ln2 rounding cannot push it further at this size.
    assert!(
        r.abs_upper() < rat(7, 8),
        "exp reduction failed: remainder too large"
    );
    let c = r.value().clone();
    let mut term = BigFloat::one();
    let mut sum = BigFloat::one();
    let mut round_err = BigFloat::zero();
    let tiny = BigFloat::two_pow(-(wp as i64));
    let mut j: i64 = 1;
    loop {
        let num = term.mul(&c);
        let (t, terr) = BigFloat::div_to_prec(&num, &BigFloat::from_i64(j), wp + 8);
        let (t, rerr) = t.round_to(wp + 8);
        term = t;
        round_err = round_err.add(&terr).add(&rerr).coarsen_up();
        sum = sum.add(&term);
        let (s, serr) = sum.round_to(wp + 16);
        sum = s;
        round_err = round_err.add(&serr).coarsen_up();
        if term.abs().cmp(&tiny) != Ordering::Greater {
            break;
        }
        j += 1;
        assert!(j < 10_000, "exp series failed to converge");
    }
    // Tail: sum_{i>J} |r|^i/i! <= |t_J| * sum (7/8)^i = 8 |t_J|.
    let trunc = term.abs().mul_int(&Int::from(8));
    // Input-ball propagation: |e^{c+d} - e^c| <= e^c (e^|d| - 1) <= 3 e^c |d|
    // for |d| <= 1; e^c <= 3 on the reduced range.
    let prop = r.err().mul_int(&Int::from(9));
    let e = round_err.add(&trunc).add(&prop);
    let scaled = AppReal::with_err(sum, e, prec);
    // Multiply by 2^k exactly.
    let shift = k_i64;
    AppReal::with_err(
        scaled.value().shr(-shift),
        scaled.err().shr(-shift),
        prec,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_encloses(x: &AppReal, lo: Rat, hi: Rat, max_err_pow: i64) {
        let (a, b) = x.interval();
        assert!(a >= lo && b <= hi, "enclosure [{a}, {b}] escapes [{lo}, {hi}]");
        assert!(x.err_le_2pow(max_err_pow), "error bound too large: {}", x.err_rat());
    }

    #[test]
    fn pi_enclosure() {
        let p = pi(128);
        // 3.14159265358979323846... pinned between two rationals
        assert_encloses(
            &p,
            rat(314159265358979323, 100000000000000000),
            rat(314159265358979324, 100000000000000000),
            -128,
        );
    }

    #[test]
    fn cos_special_and_generic() {
        let z = cos2pi(&rat(1, 4), 64);
        assert!(z.is_exact() && z.value().is_zero());
        let half = cos2pi(&rat(1, 6), 64);
        assert!(half.is_exact());
        assert_eq!(half.value().to_rat(), rat(1, 2));
        let third = cos2pi(&rat(1, 3), 64);
        assert!(third.is_exact());
        assert_eq!(third.value().to_rat(), rat(-1, 2));

        // golden ratio: 2cos(4*pi/5) = -(1+sqrt 5)/2
        let g = cos_shift_approx(5, 2, TrigKind::Cos2Pi, 96);
        assert_encloses(
            &g,
            rat(-16180339888, 10000000000),
            rat(-16180339887, 10000000000),
            -96,
        );
    }

    #[test]
    fn sin_value() {
        // 2 sin(pi/5) = 1.1755705...
        let s = cos_shift_approx(5, 1, TrigKind::Sin, 80);
        let (lo, hi) = s.interval();
        assert!(lo > rat(11755705, 10000000) && hi < rat(11755706, 10000000));
    }

    #[test]
    fn arithmetic_and_sqrt() {
        let two = AppReal::from_int(2, 128);
        let r = two.sqrt().unwrap();
        let sq = r.mul(&r);
        assert!(sq.encloses_rat(&rat(2, 1)));
        assert!(sq.err_le_2pow(-120));

        let third = AppReal::from_rat(&rat(1, 3), 128);
        let nine = third.powi(-2).unwrap();
        assert!(nine.encloses_rat(&rat(9, 1)));
    }

    #[test]
    fn division_certified() {
        let a = AppReal::from_rat(&rat(22, 7), 96);
        let b = AppReal::from_rat(&rat(2, 7), 96);
        let q = a.div(&b).unwrap();
        assert!(q.encloses_rat(&rat(11, 1)));
        let zeroish = AppReal::with_err(BigFloat::zero(), BigFloat::two_pow(-4), 96);
        assert!(a.div(&zeroish).is_err());
    }

    #[test]
    fn exp_values() {
        let one = AppReal::from_int(1, 96);
        let e1 = exp(&one);
        let (lo, hi) = e1.interval();
        assert!(lo > rat(2718281828459045, 1000000000000000));
        assert!(hi < rat(2718281828459046, 1000000000000000));
        let big = AppReal::from_int(-30, 96);
        let tiny = exp(&big);
        assert!(tiny.abs_upper() < rat(1, 10_000_000_000_000));
    }

    #[test]
    fn certified_floor_retries() {
        let x = AppReal::from_rat(&rat(7, 2), 64);
        assert_eq!(x.certified_floor(), Some(Int::from(3)));
        let fuzzy = AppReal::with_err(BigFloat::from_i64(3), BigFloat::two_pow(-1), 64);
        assert_eq!(fuzzy.certified_floor(), None);
    }
}
