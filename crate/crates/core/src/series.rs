//! Truncated power-series expansion of rational generating functions,
//! generic over the coefficient ring (rationals for one-variable series,
//! polynomials for the bivariate generating functions).

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::poly::UniPoly;
use crate::rat::Rat;

pub trait SeriesCoeff: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_one(&self) -> bool;
}

impl SeriesCoeff for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_one(&self) -> bool {
        <Rat as One>::is_one(self)
    }
}

impl SeriesCoeff for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn add(&self, other: &Self) -> Self {
        UniPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        UniPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        UniPoly::mul(self, other)
    }
    fn is_one(&self) -> bool {
        self.degree() == Some(0) && <Rat as One>::is_one(&self.coeff(0))
    }
}

/// First `n` coefficients of num(t)/den(t) as a power series in t.
/// Requires den[0] = 1 (callers normalize first).
pub fn rational_series<C: SeriesCoeff>(num: &[C], den: &[C], n: usize) -> Vec<C> {
    assert!(!den.is_empty() && den[0].is_one(), "denominator must start with 1");
    let mut out: Vec<C> = Vec::with_capacity(n);
    for k in 0..n {
        let mut c = if k < num.len() { num[k].clone() } else { C::zero() };
        for i in 1..den.len().min(k + 1) {
            c = c.sub(&den[i].mul(&out[k - i]));
        }
        out.push(c);
    }
    out
}

/// Coefficients of num(x)/den(x) over the rationals after normalizing the
/// constant denominator coefficient to 1.
pub fn rational_series_rat(num: &UniPoly, den: &UniPoly, n: usize) -> Vec<Rat> {
    let c0 = den.coeff(0);
    assert!(!<Rat as Zero>::is_zero(&c0), "denominator constant term must be nonzero");
    let inv = c0.recip();
    let num_n = num.scale(&inv);
    let den_n = den.scale(&inv);
    let mut nv: Vec<Rat> = num_n.coeffs().to_vec();
    if nv.is_empty() {
        nv.push(<Rat as Zero>::zero());
    }
    rational_series(&nv, den_n.coeffs(), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn geometric() {
        let num = UniPoly::one();
        let den = UniPoly::from_i64(&[1, -1]);
        let s = rational_series_rat(&num, &den, 5);
        assert!(s.iter().all(|c| c == &rat_int(1)));
    }

    #[test]
    fn interlaced_m2_series() {
        // 5(x+2)/(x^2+5x+5) = 2 - x + 3x^2/5 - 2x^3/5 + 7x^4/25 - ...
        let num = UniPoly::from_i64(&[10, 5]);
        let den = UniPoly::from_i64(&[5, 5, 1]);
        let s = rational_series_rat(&num, &den, 6);
        assert_eq!(s[0], rat_int(2));
        assert_eq!(s[1], rat_int(-1));
        assert_eq!(s[2], rat(3, 5));
        assert_eq!(s[3], rat(-2, 5));
        assert_eq!(s[4], rat(7, 25));
        assert_eq!(s[5], rat(-1, 5));
    }

    #[test]
    fn bivariate_lucas_gf() {
        // (1+t)/(1-(2+x)t+t^2): coefficient of t^1 is x+3.
        let one = UniPoly::one();
        let num = alloc::vec![one.clone(), one.clone()];
        let den = alloc::vec![
            one.clone(),
            UniPoly::from_i64(&[-2, -1]),
            one.clone(),
        ];
        let s = rational_series(&num, &den, 3);
        assert_eq!(s[0], UniPoly::one());
        assert_eq!(s[1], UniPoly::from_i64(&[3, 1]));
    }
}
