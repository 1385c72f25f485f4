//! Exact rational scalars and Gaussian rationals.
//!
//! `Rat` is a normalized big-integer fraction: gcd(|num|, den) = 1, den >= 1,
//! zero is 0/1. Every sequence term and polynomial coefficient in this crate
//! is carried as a `Rat`.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// `n/d` as a normalized rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_from_big(n: Int) -> Rat {
    Rat::from_integer(n)
}

/// True when the denominator is 1.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Integer power with exact inversion for negative exponents.
/// Panics on `0^e` with `e < 0`.
pub fn rat_pow(base: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let mut b = if e < 0 {
        assert!(!base.is_zero(), "rat_pow: zero base with negative exponent");
        base.recip()
    } else {
        base.clone()
    };
    let mut n = e.unsigned_abs();
    let mut acc = Rat::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        n >>= 1;
    }
    acc
}

/// `10^d` as a big integer, `d >= 0`.
pub fn pow10(d: u32) -> Int {
    let mut acc = Int::one();
    let ten = Int::from(10);
    for _ in 0..d {
        acc *= &ten;
    }
    acc
}

/// Fixed-point decimal rendering of an exact rational, truncated towards zero.
pub fn rat_to_decimal(r: &Rat, digits: u32) -> String {
    use alloc::format;
    let neg = r.is_negative();
    let a = r.abs();
    let scaled = (a.numer() * pow10(digits)) / a.denom();
    let s = scaled.to_string();
    let (int_part, frac_part) = if s.len() > digits as usize {
        let split = s.len() - digits as usize;
        (String::from(&s[..split]), String::from(&s[split..]))
    } else {
        let mut frac = String::new();
        for _ in 0..(digits as usize - s.len()) {
            frac.push('0');
        }
        frac.push_str(&s);
        (String::from("0"), frac)
    };
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Gaussian rational a + b*i with exact arithmetic, i^2 = -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::one() }
    }

    pub fn zero() -> Self {
        GaussRat { re: Rat::zero(), im: Rat::zero() }
    }

    pub fn one() -> Self {
        GaussRat { re: Rat::one(), im: Rat::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussRat { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GaussRat { re: &self.re - &other.re, im: &self.im - &other.im }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussRat {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Exact division; panics on zero divisor.
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "GaussRat division by zero");
        let n2 = &other.re * &other.re + &other.im * &other.im;
        let num = self.mul(&other.conj());
        GaussRat { re: num.re / &n2, im: num.im / n2 }
    }

    /// i^e for any integer e.
    pub fn i_pow(e: i64) -> Self {
        match e.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => GaussRat { re: -Rat::one(), im: Rat::zero() },
            _ => GaussRat { re: Rat::zero(), im: -Rat::one() },
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}*i", self.re, self.im)
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

/// Rounds a rational to the nearest integer (ties towards +inf).
pub fn round_to_int(r: &Rat) -> Int {
    use num_integer::Integer;
    let two = Int::from(2);
    let (q, rem) = (r.numer() * &two + r.denom()).div_mod_floor(&(r.denom() * &two));
    let _ = rem;
    q
}
