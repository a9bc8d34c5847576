//! Integer combinations of `N`-th roots of unity.
//!
//! Elements are stored in the (redundant) power basis `1, z, ..., z^{N-1}`.
//! Deciding whether an element is a rational integer reduces modulo the
//! cyclotomic polynomial `Phi_N`, whose powers `1, ..., z^{phi(N)-1}` are a
//! basis of `Q(zeta_N)`.

use std::ops::{Add, AddAssign, Mul};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomicError {
    #[error("element is not a rational integer (reduced form has {nonconstant} nonconstant terms)")]
    NotRational { nonconstant: usize },
    #[error("cannot lift from modulus {from} to {to}")]
    BadLift { from: u32, to: u32 },
    #[error("moduli differ: {0} and {1}")]
    ModulusMismatch(u32, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicInt {
    modulus: u32,
    coeffs: Vec<i64>,
}

impl CyclotomicInt {
    pub fn zero(modulus: u32) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        CyclotomicInt { modulus, coeffs: vec![0; modulus as usize] }
    }

    pub fn integer(modulus: u32, value: i64) -> Self {
        let mut out = CyclotomicInt::zero(modulus);
        out.coeffs[0] = value;
        out
    }

    /// `zeta_N^k`.
    pub fn root_power(modulus: u32, k: i64) -> Self {
        let mut out = CyclotomicInt::zero(modulus);
        out.coeffs[k.rem_euclid(i64::from(modulus)) as usize] = 1;
        out
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Re-express over `zeta_M` for a multiple `M` of the current modulus.
    pub fn lift(&self, modulus: u32) -> Result<Self, CyclotomicError> {
        if modulus == 0 || !modulus.is_multiple_of(self.modulus) {
            return Err(CyclotomicError::BadLift { from: self.modulus, to: modulus });
        }
        let factor = (modulus / self.modulus) as usize;
        let mut out = CyclotomicInt::zero(modulus);
        for (k, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[k * factor] = c;
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CyclotomicError> {
        if self.modulus != other.modulus {
            return Err(CyclotomicError::ModulusMismatch(self.modulus, other.modulus));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CyclotomicInt { modulus: self.modulus, coeffs })
    }

    /// The rational integer this element equals, if it is one.
    pub fn to_integer(&self) -> Result<i64, CyclotomicError> {
        let phi = cyclotomic_polynomial(self.modulus);
        let rem = poly_rem_monic(&self.coeffs, &phi);
        let nonconstant = rem.iter().skip(1).filter(|&&c| c != 0).count();
        if nonconstant == 0 {
            Ok(rem.first().copied().unwrap_or(0))
        } else {
            Err(CyclotomicError::NotRational { nonconstant })
        }
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self.try_add(rhs).expect("cyclotomic moduli differ")
    }
}

impl AddAssign<&CyclotomicInt> for CyclotomicInt {
    fn add_assign(&mut self, rhs: &CyclotomicInt) {
        assert_eq!(self.modulus, rhs.modulus, "cyclotomic moduli differ");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Mul<&CyclotomicInt> for i64 {
    type Output = CyclotomicInt;

    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        CyclotomicInt { modulus: rhs.modulus, coeffs: rhs.coeffs.iter().map(|c| self * c).collect() }
    }
}

/// Integer coefficients of `Phi_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = poly_div_exact(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

fn trim(mut p: Vec<i64>) -> Vec<i64> {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

fn poly_divmod_monic(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let den = trim(den.to_vec());
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem = trim(num.to_vec());
    if rem.len() <= dd {
        return (vec![0], rem);
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k];
        if c == 0 {
            continue;
        }
        quot[k - dd] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[k - dd + j] -= c * dc;
        }
    }
    rem.truncate(dd.max(1));
    (trim(quot), trim(rem))
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let (q, r) = poly_divmod_monic(num, den);
    debug_assert!(r.iter().all(|&c| c == 0), "inexact polynomial division");
    q
}

fn poly_rem_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    poly_divmod_monic(num, den).1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // phi(60) = 16
        assert_eq!(cyclotomic_polynomial(60).len(), 17);
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for n in 2..=30u32 {
            let mut acc = CyclotomicInt::zero(n);
            for k in 0..n {
                acc += &CyclotomicInt::root_power(n, i64::from(k));
            }
            assert_eq!(acc.to_integer(), Ok(0), "n = {n}");
        }
    }

    #[test]
    fn golden_ratio_is_irrational() {
        // 1 + z + z^4 over zeta_5 is 1 + 2cos(2pi/5)
        let mut x = CyclotomicInt::integer(5, 1);
        x += &CyclotomicInt::root_power(5, 1);
        x += &CyclotomicInt::root_power(5, -1);
        assert!(matches!(x.to_integer(), Err(CyclotomicError::NotRational { .. })));
        // x + conj(x) squared pieces: x + (1 + z^2 + z^3) = 2 + sum of roots = 1
        let mut y = CyclotomicInt::integer(5, 1);
        y += &CyclotomicInt::root_power(5, 2);
        y += &CyclotomicInt::root_power(5, 3);
        assert_eq!((&x + &y).to_integer(), Ok(1));
    }

    #[test]
    fn lifting() {
        let z = CyclotomicInt::root_power(3, 1).lift(12).unwrap();
        assert_eq!(z, CyclotomicInt::root_power(12, 4));
        assert!(CyclotomicInt::root_power(5, 1).lift(12).is_err());
        let m = 3 * &CyclotomicInt::root_power(2, 1);
        assert_eq!(m.to_integer(), Ok(-3));
    }
}
