//! Dyadic big floats: `mant * 2^exp` with exact add/mul and explicit rounding.

use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rat::{Int, Rat};

#[derive(Clone, Debug)]
pub struct BigFloat {
    pub mant: Int,
    pub exp: i64,
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat { mant: Int::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        BigFloat { mant: Int::from(1), exp: 0 }
    }

    pub fn from_int(n: Int) -> Self {
        BigFloat { mant: n, exp: 0 }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_int(Int::from(n))
    }

    /// `2^k`.
    pub fn two_pow(k: i64) -> Self {
        BigFloat { mant: Int::from(1), exp: k }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Bit length of the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.magnitude().bits()
    }

    /// Drops trailing zero bits of the mantissa.
    pub fn normalize(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
        self
    }

    pub fn neg(&self) -> Self {
        BigFloat { mant: -self.mant.clone(), exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        BigFloat { mant: self.mant.abs(), exp: self.exp }
    }

    /// Exact sum.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &other.mant << (other.exp - e) as usize;
        BigFloat { mant: a + b, exp: e }.normalize()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        BigFloat { mant: &self.mant * &other.mant, exp: self.exp + other.exp }
    }

    pub fn mul_int(&self, k: &Int) -> Self {
        BigFloat { mant: &self.mant * k, exp: self.exp }
    }

    pub fn shr(&self, k: i64) -> Self {
        BigFloat { mant: self.mant.clone(), exp: self.exp - k }
    }

    /// Rounds the mantissa to at most `prec` bits (round to nearest, away on
    /// ties). Returns (rounded, error bound): |rounded - self| <= error.
    pub fn round_to(&self, prec: u32) -> (Self, Self) {
        let bits = self.bits();
        if bits <= prec as u64 {
            return (self.clone(), Self::zero());
        }
        let drop = (bits - prec as u64) as i64;
        let sign = if self.mant.is_negative() { -1 } else { 1 };
        let mag = self.mant.magnitude();
        let shifted: num_bigint::BigUint = mag >> (drop as u64 - 1);
        let rounded_mag = (&shifted + 1u32) >> 1;
        let mant = BigInt::from_biguint(
            if sign < 0 { Sign::Minus } else { Sign::Plus },
            rounded_mag,
        );
        let out = BigFloat { mant, exp: self.exp + drop }.normalize();
        // Half-ulp bound, stated as one full dropped-bit unit for safety.
        let err = BigFloat { mant: Int::from(1), exp: self.exp + drop - 1 };
        (out, err)
    }

    /// Compare as real numbers.
    pub fn cmp(&self, other: &Self) -> Ordering {
        let d = self.sub(other);
        if d.mant.is_zero() {
            Ordering::Equal
        } else if d.mant.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    pub fn cmp_abs(&self, other: &Self) -> Ordering {
        self.abs().cmp(&other.abs())
    }

    /// Exact value as a rational.
    pub fn to_rat(&self) -> Rat {
        if self.exp >= 0 {
            Rat::from_integer(&self.mant << self.exp as usize)
        } else {
            Rat::new(self.mant.clone(), Int::from(1) << (-self.exp) as usize)
        }
    }

    /// floor(self) as a big integer.
    pub fn floor_int(&self) -> Int {
        if self.exp >= 0 {
            &self.mant << self.exp as usize
        } else {
            use num_integer::Integer;
            let d = Int::from(1) << (-self.exp) as usize;
            self.mant.div_floor(&d)
        }
    }

    /// Quotient a/b to roughly `prec` significant bits; the true quotient
    /// differs from the result by at most 1 ulp of the result.
    pub fn div_to_prec(a: &Self, b: &Self, prec: u32) -> (Self, Self) {
        assert!(!b.is_zero(), "BigFloat division by zero");
        if a.is_zero() {
            return (Self::zero(), Self::zero());
        }
        let abits = a.bits() as i64;
        let bbits = b.bits() as i64;
        let shift = (prec as i64 + 2) + (bbits - abits).max(0) + 2;
        let num = &a.mant << shift as usize;
        let q = num / &b.mant;
        let out = BigFloat { mant: q, exp: a.exp - b.exp - shift }.normalize();
        let err = BigFloat { mant: Int::from(1), exp: a.exp - b.exp - shift };
        (out, err)
    }

    /// sqrt(self) for self >= 0, truncated; result s satisfies
    /// s <= sqrt(self) <= s + err with err one ulp.
    pub fn sqrt_to_prec(&self, prec: u32) -> (Self, Self) {
        assert!(!self.is_negative(), "sqrt of negative BigFloat");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        // Scale so the shifted exponent is even and the mantissa has ~2*prec bits.
        let bits = self.bits() as i64;
        let mut shift = (2 * prec as i64 + 4 - bits).max(0);
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let scaled = &self.mant << shift as usize;
        let root = num_integer::Roots::sqrt(&scaled);
        let e = (self.exp - shift) / 2;
        let out = BigFloat { mant: root, exp: e }.normalize();
        let err = BigFloat { mant: Int::from(1), exp: e };
        (out, err)
    }

    /// Rounds up to a short (<= 16-bit) mantissa, never decreasing the value.
    /// Intended for error bounds, so `self` must be >= 0.
    pub fn coarsen_up(&self) -> Self {
        debug_assert!(!self.is_negative());
        let bits = self.bits();
        if bits <= 16 {
            return self.clone();
        }
        let drop = (bits - 16) as u64;
        let mag = self.mant.magnitude();
        let shifted = (mag >> drop) + 1u32;
        BigFloat { mant: BigInt::from_biguint(Sign::Plus, shifted), exp: self.exp + drop as i64 }
            .normalize()
    }

    /// Crude double conversion for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        let bits = self.bits();
        if bits == 0 {
            return 0.0;
        }
        let drop = bits as i64 - 53;
        if drop > 0 {
            let m = (&self.mant >> drop as usize).to_f64().unwrap_or(f64::NAN);
            m * libm_exp2((self.exp + drop) as f64)
        } else {
            self.mant.to_f64().unwrap_or(f64::NAN) * libm_exp2(self.exp as f64)
        }
    }
}

fn libm_exp2(e: f64) -> f64 {
    // Powers of two via repeated squaring on f64; adequate for diagnostics.
    let mut acc = 1.0f64;
    let neg = e < 0.0;
    let mut k = if neg { -e } else { e } as i64;
    let mut base = 2.0f64;
    while k > 0 {
        if k & 1 == 1 {
            acc *= base;
        }
        base *= base;
        k >>= 1;
        if !acc.is_finite() {
            break;
        }
    }
    if neg {
        1.0 / acc
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn exact_ops() {
        let a = BigFloat { mant: Int::from(3), exp: -1 }; // 1.5
        let b = BigFloat { mant: Int::from(1), exp: -2 }; // 0.25
        assert_eq!(a.add(&b).to_rat(), rat(7, 4));
        assert_eq!(a.mul(&b).to_rat(), rat(3, 8));
        assert_eq!(a.sub(&b).to_rat(), rat(5, 4));
    }

    #[test]
    fn division_error_bound() {
        let a = BigFloat::from_i64(1);
        let b = BigFloat::from_i64(3);
        let (q, e) = BigFloat::div_to_prec(&a, &b, 64);
        let diff = (q.to_rat() - rat(1, 3)).abs();
        assert!(diff <= e.to_rat());
        assert!(e.to_rat() < rat(1, 1 << 62));
    }

    #[test]
    fn sqrt_error_bound() {
        let a = BigFloat::from_i64(2);
        let (s, e) = a.sqrt_to_prec(80);
        let s_rat = s.to_rat();
        let hi = &s_rat + e.to_rat();
        assert!(&s_rat * &s_rat <= rat(2, 1));
        assert!(&hi * &hi >= rat(2, 1));
    }

    #[test]
    fn floor_and_round() {
        let a = BigFloat { mant: Int::from(-5), exp: -1 }; // -2.5
        assert_eq!(a.floor_int(), Int::from(-3));
        let big = BigFloat { mant: Int::from(0xffff_ffffu64), exp: 0 };
        let (r, e) = big.round_to(16);
        assert!((r.to_rat() - big.to_rat()).abs() <= e.to_rat());
    }
}
