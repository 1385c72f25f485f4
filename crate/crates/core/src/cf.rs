//! Simple continued fractions: exact expansion, folding, convergent lists,
//! signed periodic expansions, and certified expansion of real numbers.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::appreal::AppReal;
use crate::error::Error;
use crate::rat::{Int, Rat};

/// Canonical simple continued fraction [a0; a1, ..., an] of a rational:
/// a_i >= 1 for i >= 1 and the final term is >= 2 whenever n >= 1.
/// Floor-based Euclid produces this form directly.
pub fn cf_expand(x: &Rat) -> Vec<Int> {
    let mut out = Vec::new();
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    loop {
        let (q, r) = num.div_mod_floor(&den);
        out.push(q);
        if r.is_zero() {
            break;
        }
        num = den;
        den = r;
    }
    out
}

/// Folds a (possibly signed) continued fraction back to a rational via the
/// standard convergent recurrence.
pub fn cf_fold(terms: &[Int]) -> Rat {
    let (p, q) = convergent_pq(terms);
    Rat::new(p, q)
}

fn convergent_pq(terms: &[Int]) -> (Int, Int) {
    let mut p_prev = Int::one();
    let mut p = terms[0].clone();
    let mut q_prev = Int::zero();
    let mut q = Int::one();
    for a in &terms[1..] {
        let p_next = a * &p + &p_prev;
        let q_next = a * &q + &q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
    }
    (p, q)
}

/// All convergents p_k/q_k of a term list (signed terms allowed; convergents
/// with vanishing denominator are skipped).
pub fn cf_convergents(terms: &[Int]) -> Vec<Rat> {
    let mut out = Vec::new();
    let mut p_prev = Int::one();
    let mut p = terms[0].clone();
    let mut q_prev = Int::zero();
    let mut q = Int::one();
    if !q.is_zero() {
        out.push(Rat::new(p.clone(), q.clone()));
    }
    for a in &terms[1..] {
        let p_next = a * &p + &p_prev;
        let q_next = a * &q + &q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
        if !q.is_zero() {
            out.push(Rat::new(p.clone(), q.clone()));
        }
    }
    out
}

/// Expands `prefix` followed by `reps` copies of the recurring block into a
/// full term list.
pub fn periodic_terms(prefix: &[i64], block: &[i64], reps: usize) -> Vec<Int> {
    let mut v: Vec<Int> = prefix.iter().map(|&a| Int::from(a)).collect();
    for _ in 0..reps {
        v.extend(block.iter().map(|&a| Int::from(a)));
    }
    v
}

/// Continued fraction of a real number with certified floor decisions.
///
/// `approx(prec)` must return an enclosure of the same real number at the
/// requested precision; the expansion restarts at doubled precision whenever
/// a floor or a reciprocal is inconclusive.
pub fn cf_of_real<F>(approx: F, terms: usize, start_prec: u32) -> Result<Vec<Int>, Error>
where
    F: Fn(u32) -> AppReal,
{
    let mut prec = start_prec;
    for _ in 0..16 {
        if let Some(v) = try_expand(&approx(prec), terms) {
            return Ok(v);
        }
        prec *= 2;
    }
    Err(Error::InconclusivePrecision)
}

fn try_expand(x: &AppReal, terms: usize) -> Option<Vec<Int>> {
    let mut out = Vec::new();
    let mut cur = x.clone();
    for _ in 0..terms {
        let a = cur.certified_floor()?;
        out.push(a.clone());
        let frac = cur.sub(&AppReal::exact(
            crate::bigfloat::BigFloat::from_int(a),
            cur.prec(),
        ));
        cur = frac.recip().ok()?;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn euclid_examples() {
        let terms = cf_expand(&rat(8, 5));
        assert_eq!(terms, alloc::vec![Int::from(1), Int::from(1), Int::from(1), Int::from(2)]);
        assert_eq!(cf_expand(&rat(2, 1)), alloc::vec![Int::from(2)]);
        assert_eq!(
            cf_expand(&rat(5, 3)),
            alloc::vec![Int::from(1), Int::from(1), Int::from(2)]
        );
        // negative input uses floor semantics
        assert_eq!(
            cf_expand(&rat(-7, 2)),
            alloc::vec![Int::from(-4), Int::from(2)]
        );
    }

    #[test]
    fn fold_round_trip() {
        for &(n, d) in &[(8i64, 5i64), (5, 3), (-355, 113), (1, 7), (22, 7)] {
            let x = rat(n, d);
            assert_eq!(cf_fold(&cf_expand(&x)), x);
        }
    }

    #[test]
    fn signed_periodic_expansion() {
        // [1; -5, 1, -5, 1, ...] produces 1, 4/5, 3/4, 11/15, 8/11, ...
        let terms = periodic_terms(&[1], &[-5, 1], 3);
        let conv = cf_convergents(&terms);
        assert_eq!(conv[0], rat_int(1));
        assert_eq!(conv[1], rat(4, 5));
        assert_eq!(conv[2], rat(3, 4));
        assert_eq!(conv[3], rat(11, 15));
        assert_eq!(conv[4], rat(8, 11));
    }

    #[test]
    fn real_expansion_of_sqrt2() {
        // sqrt(2) = [1; 2, 2, 2, ...]
        let cf = cf_of_real(
            |p| AppReal::from_int(2, p).sqrt().unwrap(),
            6,
            64,
        )
        .unwrap();
        assert_eq!(cf[0], Int::from(1));
        for a in &cf[1..] {
            assert_eq!(*a, Int::from(2));
        }
    }
}
