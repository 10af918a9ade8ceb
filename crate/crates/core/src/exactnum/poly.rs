//! Dense univariate polynomials over the rationals.

use std::fmt;

use super::Rational;
use crate::error::{Error, Result};

/// Dense polynomial, ascending degree, no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycPoly {
    coeffs: Vec<Rational>,
}

impl CycPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        CycPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn zero() -> Self {
        CycPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        CycPoly { coeffs: vec![Rational::ONE] }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![Rational::ZERO; n + 1];
        coeffs[0] = Rational::from_integer(-1);
        coeffs[n] = Rational::ONE;
        CycPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rational::is_one)
    }

    pub fn mul(&self, other: &CycPoly) -> CycPoly {
        if self.is_zero() || other.is_zero() {
            return CycPoly::zero();
        }
        let mut out = vec![Rational::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        CycPoly::new(out)
    }

    pub fn sub(&self, other: &CycPoly) -> CycPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let out = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&Rational::ZERO);
                let b = other.coeffs.get(i).unwrap_or(&Rational::ZERO);
                a - b
            })
            .collect();
        CycPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> CycPoly {
        CycPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &CycPoly) -> Result<(CycPoly, CycPoly)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[d].recip()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((CycPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::ZERO; rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lead_inv;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rem[i - d + j] -= &(&q * c);
                }
            }
            quot[i - d] = q;
        }
        rem.truncate(d);
        Ok((CycPoly::new(quot), CycPoly::new(rem)))
    }

    /// Returns `s` with `s * self ≡ 1 (mod modulus)`, assuming the two are coprime.
    pub fn inverse_mod(&self, modulus: &CycPoly) -> Result<CycPoly> {
        let (_, a) = self.div_rem(modulus)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Invariant: s0 * self ≡ r0, s1 * self ≡ r1 (mod modulus).
        let (mut r0, mut r1) = (modulus.clone(), a);
        let (mut s0, mut s1) = (CycPoly::zero(), CycPoly::one());
        while r1.degree().is_some_and(|d| d > 0) {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            if r1.is_zero() {
                // gcd has positive degree: not invertible modulo `modulus`.
                return Err(Error::DivisionByZero);
            }
            // Keep the remainder monic to curb coefficient growth.
            let lead = r1.leading().expect("nonzero").recip()?;
            r1 = r1.scale(&lead);
            s1 = s1.scale(&lead);
        }
        let c = r1.coeffs[0].recip()?;
        let (_, s) = s1.scale(&c).div_rem(modulus)?;
        Ok(s)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::ZERO, |acc, c| &(&acc * x) + c)
    }
}

impl fmt::Debug for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_reconstructs() {
        let a = CycPoly::from_integers(&[3, 0, -2, 5, 1]);
        let b = CycPoly::from_integers(&[1, 2, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        let back = q.mul(&b);
        let back = CycPoly::new(
            (0..5)
                .map(|i| {
                    back.coeffs().get(i).cloned().unwrap_or_default()
                        + r.coeffs().get(i).cloned().unwrap_or_default()
                })
                .collect(),
        );
        assert_eq!(back, a);
    }

    #[test]
    fn inverse_mod_quadratic() {
        // (1 + x)^{-1} mod x^2 + 1 = (1 - x)/2
        let m = CycPoly::from_integers(&[1, 0, 1]);
        let a = CycPoly::from_integers(&[1, 1]);
        let inv = a.inverse_mod(&m).unwrap();
        assert_eq!(
            inv,
            CycPoly::new(vec![Rational::new(1, 2), Rational::new(-1, 2)])
        );
    }

    #[test]
    fn inverse_mod_rejects_common_factor() {
        let m = CycPoly::from_integers(&[-1, 0, 1]); // (x-1)(x+1)
        let a = CycPoly::from_integers(&[1, 1]);
        assert!(a.inverse_mod(&m).is_err());
        assert!(CycPoly::zero().inverse_mod(&m).is_err());
    }
}
