//! Dense rational matrices.
//!
//! Determinants and inverses run fraction-free (Bareiss) on the
//! denominator-cleared integer matrix to control intermediate growth; the
//! initial-value matrices need exact powers like R_m^m whose entries carry
//! the denominator 2m+1.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rat::{Int, Rat};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        RatMat { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat { rows, cols, data: alloc::vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        Self::new(rows, cols, data.iter().map(|&x| crate::rat::rat_int(x)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// True when every entry has denominator 1.
    pub fn is_integer(&self) -> bool {
        self.data.iter().all(|c| c.denom().is_one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Clears denominators: returns (integer matrix Z, scalar l) with self = Z / l.
    fn clear_denominators(&self) -> (Vec<Int>, Int) {
        let mut l = Int::one();
        for c in &self.data {
            l = num_integer::Integer::lcm(&l, c.denom());
        }
        let z = self
            .data
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        (z, l)
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        let (mut z, l) = self.clear_denominators();
        let mut sign = 1i64;
        let mut prev = Int::one();
        for p in 0..n - 1 {
            if z[p * n + p].is_zero() {
                let Some(swap) = (p + 1..n).find(|&r| !z[r * n + p].is_zero()) else {
                    return Rat::zero();
                };
                for j in 0..n {
                    z.swap(p * n + j, swap * n + j);
                }
                sign = -sign;
            }
            for i in p + 1..n {
                for j in p + 1..n {
                    let t = &z[p * n + p] * &z[i * n + j] - &z[i * n + p] * &z[p * n + j];
                    z[i * n + j] = &t / &prev;
                }
                z[i * n + p] = Int::zero();
            }
            prev = z[p * n + p].clone();
        }
        let det_z = z[(n - 1) * n + (n - 1)].clone() * Int::from(sign);
        let mut scale = Int::one();
        for _ in 0..n {
            scale *= &l;
        }
        Rat::new(det_z, scale)
    }

    /// Exact inverse: Bareiss forward elimination on the cleared augmented
    /// system, rational back-substitution.
    pub fn inverse(&self) -> Result<Self, Error> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let (z, l) = self.clear_denominators();
        // Augment [Z | I]; solving Z X = I gives self^{-1} = l * X.
        let w = 2 * n;
        let mut a: Vec<Int> = alloc::vec![Int::zero(); n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = z[i * n + j].clone();
            }
            a[i * w + n + i] = Int::one();
        }
        let mut prev = Int::one();
        for p in 0..n - 1 {
            if a[p * w + p].is_zero() {
                let Some(swap) = (p + 1..n).find(|&r| !a[r * w + p].is_zero()) else {
                    return Err(Error::SingularMatrix);
                };
                for j in 0..w {
                    a.swap(p * w + j, swap * w + j);
                }
            }
            for i in p + 1..n {
                for j in p + 1..w {
                    let t = &a[p * w + p] * &a[i * w + j] - &a[i * w + p] * &a[p * w + j];
                    a[i * w + j] = &t / &prev;
                }
                a[i * w + p] = Int::zero();
            }
            prev = a[p * w + p].clone();
        }
        if a[(n - 1) * w + (n - 1)].is_zero() {
            return Err(Error::SingularMatrix);
        }
        // Back-substitution over the rationals.
        let mut x = alloc::vec![Rat::zero(); n * n];
        for col in 0..n {
            for i in (0..n).rev() {
                let mut acc = Rat::from_integer(a[i * w + n + col].clone());
                for j in i + 1..n {
                    acc -= Rat::from_integer(a[i * w + j].clone()) * &x[j * n + col];
                }
                x[i * n + col] = acc / Rat::from_integer(a[i * w + i].clone());
            }
        }
        let inv = RatMat { rows: n, cols: n, data: x };
        Ok(inv.scale(&Rat::from_integer(l)))
    }

    /// Exact matrix power; e = 0 gives the identity, negative e uses the
    /// exact inverse and errors on singular input.
    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        assert!(self.is_square(), "power of non-square matrix");
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::identity(self.rows);
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        let mut t = Rat::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    /// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier scheme.
    pub fn char_poly(&self) -> crate::poly::UniPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = alloc::vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = Self::identity(n);
        for k in 1..=n {
            m = self.mul(&m);
            let c = -(m.trace() / crate::rat::rat_int(k as i64));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                *m.at_mut(i, i) += &c;
            }
        }
        crate::poly::UniPoly::new(coeffs)
    }
}

/// row-vector * matrix.
pub fn row_times_mat(row: &[Rat], m: &RatMat) -> Vec<Rat> {
    assert_eq!(row.len(), m.rows());
    let mut out = alloc::vec![Rat::zero(); m.cols()];
    for (k, a) in row.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for j in 0..m.cols() {
            let b = m.at(k, j);
            if !b.is_zero() {
                out[j] += a * b;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn inverse_round_trip() {
        let m = RatMat::new(
            2,
            2,
            alloc::vec![rat_int(-1), rat_int(1), rat(-1, 5), rat_int(0)],
        );
        let inv = m.inverse().unwrap();
        assert_eq!(
            inv,
            RatMat::new(2, 2, alloc::vec![rat_int(0), rat_int(-5), rat_int(1), rat_int(-5)])
        );
        assert_eq!(m.mul(&inv), RatMat::identity(2));
        assert_eq!(m.det(), rat(1, 5));
    }

    #[test]
    fn pow_identity_and_negative() {
        let m = RatMat::from_i64(2, 2, &[1, 2, 3, 4]);
        assert_eq!(m.pow(0).unwrap(), RatMat::identity(2));
        let p = m.pow(3).unwrap();
        let q = m.mul(&m).mul(&m);
        assert_eq!(p, q);
        let r = m.pow(-2).unwrap().mul(&m.pow(2).unwrap());
        assert_eq!(r, RatMat::identity(2));
        let sing = RatMat::from_i64(2, 2, &[1, 2, 2, 4]);
        assert!(sing.pow(-1).is_err());
        assert_eq!(sing.det(), rat_int(0));
    }

    #[test]
    fn char_poly_companion() {
        // companion of x^2 - x - 1
        let m = RatMat::from_i64(2, 2, &[0, 1, 1, 1]);
        assert_eq!(m.char_poly(), crate::poly::UniPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn det_bareiss_vs_known() {
        let m = RatMat::from_i64(3, 3, &[2, -2, 3, 4, -3, 2, 3, -2, 1]);
        assert_eq!(m.det(), rat_int(1));
    }
}
