//! Dense univariate polynomials over the exact rationals.
//!
//! Coefficients are stored by ascending power with no trailing zeros; the zero
//! polynomial is the empty coefficient list and reports `degree() == None`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::appreal::AppReal;
use crate::error::Error;
use crate::rat::{rat_int, GaussRat, Int, Rat};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(alloc::vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = alloc::vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - other.coeff(k));
        }
        Self::new(v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = alloc::vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = e;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self), Error> {
        if b.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let db = b.coeffs.len() - 1;
        let lead_inv = b.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![Rat::zero(); self.coeffs.len().saturating_sub(db)];
        while rem.len() > db && !rem.is_empty() {
            let dr = rem.len() - 1;
            let c = rem.last().unwrap() * &lead_inv;
            if !c.is_zero() {
                quot[dr - db] = c.clone();
                for (j, bc) in b.coeffs.iter().enumerate() {
                    let idx = dr - db + j;
                    let delta = bc * &c;
                    rem[idx] -= delta;
                }
            }
            rem.pop();
            while rem.last().map_or(false, |x| x.is_zero()) {
                rem.pop();
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient; errors if the remainder is nonzero.
    pub fn exact_div(&self, b: &Self) -> Result<Self, Error> {
        let (q, r) = self.divrem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            v.push(c * rat_int(k as i64));
        }
        Self::new(v)
    }

    /// Horner composition `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &Rat) -> Self {
        self.compose(&Self::new(alloc::vec![c.clone(), Rat::one()]))
    }

    /// `self(c * x)`.
    pub fn scale_arg(&self, c: &Rat) -> Self {
        let mut v = Vec::with_capacity(self.coeffs.len());
        let mut p = Rat::one();
        for a in &self.coeffs {
            v.push(a * &p);
            p *= c;
        }
        Self::new(v)
    }

    /// `self(-x)`.
    pub fn reflect(&self) -> Self {
        self.scale_arg(&rat_int(-1))
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_gauss(&self, x: &GaussRat) -> GaussRat {
        let mut acc = GaussRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&GaussRat::from_rat(c.clone()));
        }
        acc
    }

    /// Horner evaluation with conservative error propagation.
    pub fn eval_appreal(&self, x: &AppReal) -> AppReal {
        let prec = x.prec();
        let mut acc = AppReal::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&AppReal::from_rat(c, prec));
        }
        acc
    }

    /// Sign of the value at a rational point.
    pub fn sign_at(&self, x: &Rat) -> i32 {
        let v = self.eval_rat(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Sign of the polynomial at +inf / -inf.
    pub fn sign_at_inf(&self, positive: bool) -> i32 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let lead = self.leading();
                let s = if lead.is_positive() { 1 } else { -1 };
                if positive || d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("gcd: nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = a.leading().recip();
            a.scale(&inv)
        }
    }

    /// True when gcd(p, p') is constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    /// Removes rational content: integer coprime coefficients, positive leading
    /// coefficient. Returns (normalized, content) with `self = content * normalized`.
    pub fn content_normalize(&self) -> (Self, Rat) {
        if self.is_zero() {
            return (Self::zero(), Rat::zero());
        }
        let mut den_lcm = Int::one();
        for c in &self.coeffs {
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        let mut num_gcd = Int::zero();
        for c in &self.coeffs {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_integer::Integer::gcd(&num_gcd, &scaled);
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.leading().is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (self.scale(&inv), content)
    }

    /// For a polynomial with only even-degree terms, returns `q` with
    /// `q(y^2) = self(y)`. Errors if an odd-degree coefficient is present.
    pub fn even_part_subst(&self) -> Result<Self, Error> {
        let mut v = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k % 2 == 0 {
                v.push(c.clone());
            } else if !c.is_zero() {
                return Err(Error::OddCoefficient(k));
            }
        }
        Ok(Self::new(v))
    }

    /// Exact division by x; errors unless the constant term vanishes.
    pub fn div_x(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(self.coeffs[1..].to_vec()))
    }

    /// Splits into even/odd parts: `self(x) = even(x^2) + x * odd(x^2)`.
    pub fn parity_split(&self) -> (Self, Self) {
        let mut ev = Vec::new();
        let mut od = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k % 2 == 0 {
                ev.push(c.clone());
            } else {
                od.push(c.clone());
            }
        }
        (Self::new(ev), Self::new(od))
    }

    /// Upper bound 1 + max |coeff| / |lead| on the absolute value of any
    /// real root (Cauchy bound).
    pub fn cauchy_root_bound(&self) -> Rat {
        let lead = self.leading();
        let mut best = Rat::zero();
        for c in &self.coeffs {
            let q = (c / &lead).abs();
            if q > best {
                best = q;
            }
        }
        best + Rat::one()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            if k > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", k)?;
                }
            }
        }
        Ok(())
    }
}

/// Rising factorial of a polynomial: `prod_{i=0}^{k-1} (base + i)`; k = 0 gives 1.
pub fn rising_factorial(base: &UniPoly, k: u32) -> UniPoly {
    let mut acc = UniPoly::one();
    for i in 0..k {
        acc = acc.mul(&base.add(&UniPoly::constant(rat_int(i as i64))));
    }
    acc
}

/// Rising factorial of a rational scalar.
pub fn rising_factorial_rat(base: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= base + rat_int(i as i64);
    }
    acc
}

pub fn poly_to_string(p: &UniPoly) -> String {
    use alloc::format;
    format!("{p}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn mul_and_compose() {
        let a = UniPoly::from_i64(&[1, 1]); // x + 1
        let b = UniPoly::from_i64(&[-1, 1]); // x - 1
        assert_eq!(a.mul(&b), UniPoly::from_i64(&[-1, 0, 1]));
        let sq = UniPoly::from_i64(&[0, 0, 1]);
        let shifted = sq.compose(&UniPoly::from_i64(&[2, 1]));
        assert_eq!(shifted, UniPoly::from_i64(&[4, 4, 1]));
    }

    #[test]
    fn derivative_of_p3_denominator() {
        let p = UniPoly::from_i64(&[7, 14, 7, 1]);
        assert_eq!(p.derivative(), UniPoly::from_i64(&[14, 14, 3]));
    }

    #[test]
    fn divrem_cases() {
        let (q, r) = UniPoly::from_i64(&[-1, 0, 1])
            .divrem(&UniPoly::from_i64(&[-1, 1]))
            .unwrap();
        assert_eq!(q, UniPoly::from_i64(&[1, 1]));
        assert!(r.is_zero());

        // x^3 - 3x = x * (x^2 - 3)
        let (q, r) = UniPoly::from_i64(&[0, -3, 0, 1])
            .divrem(&UniPoly::from_i64(&[-3, 0, 1]))
            .unwrap();
        assert_eq!(q, UniPoly::x());
        assert!(r.is_zero());

        let (q, r) = UniPoly::from_i64(&[1, 0, 1]).divrem(&UniPoly::x()).unwrap();
        assert_eq!(q, UniPoly::x());
        assert_eq!(r, UniPoly::one());

        assert!(UniPoly::one().divrem(&UniPoly::zero()).is_err());
    }

    #[test]
    fn eval_gauss_and_special_points() {
        // x^2 + 5x + 5 at 0 and at i
        let p = UniPoly::from_i64(&[5, 5, 1]);
        assert_eq!(p.eval_rat(&rat(0, 1)), rat(5, 1));
        let at_i = p.eval_gauss(&GaussRat::i());
        assert_eq!(at_i, GaussRat::new(rat(4, 1), rat(5, 1)));
        assert_eq!(UniPoly::zero().eval_rat(&rat(17, 3)), rat(0, 1));
    }

    #[test]
    fn rising_factorial_examples() {
        let s = UniPoly::x();
        assert_eq!(rising_factorial(&s, 0), UniPoly::one());
        assert_eq!(rising_factorial(&s, 2), UniPoly::from_i64(&[0, 1, 1]));
        // (s + 1/4)(s + 5/4)(s + 9/4) expanded directly
        let base = UniPoly::new(alloc::vec![rat(1, 4), rat(1, 1)]);
        let direct = UniPoly::new(alloc::vec![rat(1, 4), rat(1, 1)])
            .mul(&UniPoly::new(alloc::vec![rat(5, 4), rat(1, 1)]))
            .mul(&UniPoly::new(alloc::vec![rat(9, 4), rat(1, 1)]));
        assert_eq!(rising_factorial(&base, 3), direct);
    }

    #[test]
    fn even_part_and_content() {
        let p = UniPoly::from_i64(&[2, 0, -6, 0, 4]);
        let q = p.even_part_subst().unwrap();
        assert_eq!(q, UniPoly::from_i64(&[2, -6, 4]));
        assert!(UniPoly::from_i64(&[0, 1]).even_part_subst().is_err());

        let (norm, content) = UniPoly::new(alloc::vec![rat(-2, 3), rat(-4, 3)])
            .content_normalize();
        assert_eq!(norm, UniPoly::from_i64(&[1, 2]));
        assert_eq!(content, rat(-2, 3));
    }

    #[test]
    fn display_form() {
        let p = UniPoly::from_i64(&[7, 14, 7, 1]);
        assert_eq!(poly_to_string(&p), "x^3 + 7*x^2 + 14*x + 7");
        assert_eq!(poly_to_string(&UniPoly::from_i64(&[-1, 1])), "x - 1");
    }
}
