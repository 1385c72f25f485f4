//! Sturm chains and exact real-root counting / isolation.
//!
//! The chain is carried as primitive integer polynomials (pseudo-remainder
//! sequence with content removal), and signs at rational points are taken
//! from homogenized integer evaluations, so no rational reductions happen in
//! the inner loops.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::poly::UniPoly;
use crate::rat::{Int, Rat};

/// Interval endpoint for root counting.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

/// Primitive integer polynomial, ascending coefficients, no trailing zeros.
type IntPoly = Vec<Int>;

fn to_int_poly(p: &UniPoly) -> IntPoly {
    let mut den_lcm = Int::from(1);
    for c in p.coeffs() {
        den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
    }
    let mut v: IntPoly = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den_lcm / c.denom()))
        .collect();
    primitive(&mut v);
    v
}

fn primitive(v: &mut IntPoly) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    let mut g = Int::zero();
    for c in v.iter() {
        g = num_integer::Integer::gcd(&g, c);
    }
    if !g.is_zero() && g != Int::from(1) {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
}

fn deg(v: &IntPoly) -> usize {
    v.len().saturating_sub(1)
}

fn derivative_int(v: &IntPoly) -> IntPoly {
    if v.len() <= 1 {
        return Vec::new();
    }
    let mut out: IntPoly = v
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Int::from(k as i64))
        .collect();
    primitive(&mut out);
    out
}

/// Pseudo-remainder of a by b (deg a >= deg b), made primitive and
/// sign-corrected so that it has the sign of the true remainder.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = deg(b);
    let lead_b = b.last().expect("nonzero divisor").clone();
    let mut r = a.clone();
    let mut scale_sign = 1i32;
    while r.len() > db && !r.is_empty() {
        let dr = deg(&r);
        let lead_r = r.last().unwrap().clone();
        // r <- lead_b * r - lead_r * x^(dr-db) * b
        for c in r.iter_mut() {
            *c = &*c * &lead_b;
        }
        for (k, bc) in b.iter().enumerate() {
            r[dr - db + k] -= bc * &lead_r;
        }
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        if lead_b.is_negative() {
            scale_sign = -scale_sign;
        }
    }
    primitive(&mut r);
    if scale_sign < 0 {
        for c in r.iter_mut() {
            *c = -c.clone();
        }
    }
    r
}

/// Signed-remainder Sturm chain over primitive integer polynomials.
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Self {
        let p0 = to_int_poly(p);
        let p1 = derivative_int(&p0);
        let mut polys = alloc::vec![p0];
        if p1.is_empty() {
            return SturmChain { polys };
        }
        polys.push(p1);
        loop {
            let n = polys.len();
            let r = pseudo_rem(&polys[n - 2], &polys[n - 1]);
            if r.is_empty() {
                break;
            }
            polys.push(r.iter().map(|c| -c.clone()).collect());
        }
        SturmChain { polys }
    }

    /// gcd(p, p') is constant iff the chain terminates at degree 0.
    pub fn squarefree(&self) -> bool {
        self.polys
            .last()
            .map_or(false, |last| deg(last) == 0 && !last.is_empty())
    }

    fn variations(&self, b: &Bound) -> usize {
        let mut count = 0;
        let mut last = 0i32;
        for p in &self.polys {
            let s = match b {
                Bound::NegInf => sign_at_inf(p, false),
                Bound::PosInf => sign_at_inf(p, true),
                Bound::Finite(x) => sign_at_rat(p, x),
            };
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Exact count of distinct roots of the (squarefree) base polynomial in
    /// (lo, hi]; with zeros skipped the variation at a simple root equals
    /// its right limit, so endpoints may land on roots.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo) - self.variations(hi)
    }

    pub fn sign_at(&self, x: &Rat) -> i32 {
        sign_at_rat(&self.polys[0], x)
    }
}

/// Sign of the integer polynomial at num/den (den > 0), via the homogenized
/// integer value sum c_k num^k den^(deg-k).
fn sign_at_rat(p: &IntPoly, x: &Rat) -> i32 {
    if p.is_empty() {
        return 0;
    }
    let num = x.numer();
    let den = x.denom();
    let d = deg(p);
    let mut acc = p[d].clone();
    let mut dpow = Int::from(1);
    for k in (0..d).rev() {
        dpow *= den;
        acc = acc * num + &p[k] * &dpow;
    }
    if acc.is_zero() {
        0
    } else if acc.is_negative() {
        -1
    } else {
        1
    }
}

fn sign_at_inf(p: &IntPoly, positive: bool) -> i32 {
    let Some(lead) = p.last() else { return 0 };
    let s = if lead.is_negative() { -1 } else { 1 };
    if positive || deg(p) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Exact count of distinct real roots in (lo, hi]. Requires a squarefree
/// nonzero polynomial; rejects other input.
pub fn count_real_roots(p: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::NotSquarefree);
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    let chain = SturmChain::new(p);
    if !chain.squarefree() {
        return Err(Error::NotSquarefree);
    }
    Ok(chain.count(lo, hi))
}

/// Certifies that `p` (squarefree) has exactly one root inside each of the
/// given pairwise-disjoint open rational intervals and no roots elsewhere
/// when `exhaustive` is set.
pub fn certify_isolated_roots(
    p: &UniPoly,
    intervals: &[(Rat, Rat)],
    exhaustive: bool,
) -> Result<bool, Error> {
    if p.is_zero() {
        return Err(Error::NotSquarefree);
    }
    let chain = SturmChain::new(p);
    if !chain.squarefree() {
        return Err(Error::NotSquarefree);
    }
    // Disjointness.
    let mut sorted: Vec<&(Rat, Rat)> = intervals.iter().collect();
    sorted.sort_by(|x, y| x.0.cmp(&y.0));
    for w in sorted.windows(2) {
        if w[0].1 >= w[1].0 {
            return Ok(false);
        }
    }
    for (a, b) in intervals {
        if a >= b {
            return Ok(false);
        }
        // Endpoints must not be roots for clean open-interval counting.
        if chain.sign_at(a) == 0 || chain.sign_at(b) == 0 {
            return Ok(false);
        }
        if chain.count(&Bound::Finite(a.clone()), &Bound::Finite(b.clone())) != 1 {
            return Ok(false);
        }
    }
    if exhaustive {
        let total = chain.count(&Bound::NegInf, &Bound::PosInf);
        if total != intervals.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn basic_counts() {
        let p = UniPoly::from_i64(&[-3, 0, 1]); // x^2 - 3
        assert_eq!(count_real_roots(&p, &Bound::NegInf, &Bound::PosInf).unwrap(), 2);
        let q = UniPoly::from_i64(&[1, 0, 1]); // x^2 + 1
        assert_eq!(count_real_roots(&q, &Bound::NegInf, &Bound::PosInf).unwrap(), 0);
        // minimal polynomial of 2cos(2pi/7): three roots in (-2, 2)
        let theta7 = UniPoly::from_i64(&[-1, -2, 1, 1]);
        assert_eq!(
            count_real_roots(
                &theta7,
                &Bound::Finite(rat_int(-2)),
                &Bound::Finite(rat_int(2))
            )
            .unwrap(),
            3
        );
    }

    #[test]
    fn rejects_non_squarefree() {
        let p = UniPoly::from_i64(&[1, 2, 1]); // (x+1)^2
        assert!(count_real_roots(&p, &Bound::NegInf, &Bound::PosInf).is_err());
    }

    #[test]
    fn root_at_endpoint() {
        let p = UniPoly::from_i64(&[-2, 1]); // x - 2
        assert_eq!(
            count_real_roots(&p, &Bound::Finite(rat_int(0)), &Bound::Finite(rat_int(2))).unwrap(),
            1
        );
        assert_eq!(
            count_real_roots(&p, &Bound::Finite(rat_int(2)), &Bound::PosInf).unwrap(),
            0
        );
    }

    #[test]
    fn isolation_certificates() {
        let p = UniPoly::from_i64(&[-3, 0, 1]);
        let boxes = alloc::vec![(rat(-7, 4), rat(-3, 2)), (rat(3, 2), rat(7, 4))];
        assert!(certify_isolated_roots(&p, &boxes, true).unwrap());
        let bad = alloc::vec![(rat(-7, 4), rat(7, 4))];
        assert!(!certify_isolated_roots(&p, &bad, true).unwrap());
    }

    #[test]
    fn rational_coefficient_input() {
        // 6x^2 - 1/3: roots of either sign
        let p = UniPoly::new(alloc::vec![rat(-1, 3), rat(0, 1), rat(6, 1)]);
        assert_eq!(count_real_roots(&p, &Bound::NegInf, &Bound::PosInf).unwrap(), 2);
        assert_eq!(
            count_real_roots(&p, &Bound::Finite(rat_int(0)), &Bound::PosInf).unwrap(),
            1
        );
    }
}
