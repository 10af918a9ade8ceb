//! Elements of cyclotomic fields `Q(ζ_N)` in the power basis modulo `Φ_N`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{CycPoly, Rational};
use crate::error::{Error, Result};

/// Per-order data shared by every element of `Q(ζ_N)`.
pub struct CyclotomicField {
    order: u32,
    poly: CycPoly,
    /// `x^j mod Φ_N` for `φ(N) <= j < N`, as sparse `(power, coeff)` lists.
    monomials: Vec<Vec<(u32, Rational)>>,
}

type FieldCache = RwLock<HashMap<u32, Arc<CyclotomicField>>>;

fn cache() -> &'static FieldCache {
    static CACHE: OnceLock<FieldCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl CyclotomicField {
    /// The memoized field of order `n`.
    pub fn get(n: u32) -> Result<Arc<CyclotomicField>> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if let Some(f) = cache().read().expect("field cache poisoned").get(&n) {
            return Ok(Arc::clone(f));
        }
        // Build divisors first (recursively) without holding the lock.
        let poly = compute_cyclotomic_polynomial(n)?;
        let field = Arc::new(Self::build(n, poly));
        let mut w = cache().write().expect("field cache poisoned");
        Ok(Arc::clone(w.entry(n).or_insert(field)))
    }

    fn build(order: u32, poly: CycPoly) -> Self {
        let phi = poly.degree().expect("cyclotomic polynomial is nonzero");
        let low = &poly.coeffs()[..phi];
        let mut monomials = Vec::with_capacity(order as usize - phi);
        let mut cur = vec![Rational::ZERO; phi];
        cur[phi - 1] = Rational::ONE;
        for _ in phi..order as usize {
            // cur <- x * cur mod Φ_N (Φ_N is monic).
            let top = cur.pop().expect("phi >= 1");
            cur.insert(0, Rational::ZERO);
            if !top.is_zero() {
                for (c, p) in cur.iter_mut().zip(low) {
                    if !p.is_zero() {
                        *c -= &(&top * p);
                    }
                }
            }
            monomials.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i as u32, c.clone()))
                    .collect(),
            );
        }
        CyclotomicField {
            order,
            poly,
            monomials,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(N)`, the degree of the field.
    pub fn degree(&self) -> usize {
        self.poly.degree().expect("nonzero")
    }

    pub fn polynomial(&self) -> &CycPoly {
        &self.poly
    }
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.order)
    }
}

fn compute_cyclotomic_polynomial(n: u32) -> Result<CycPoly> {
    let mut denom = CycPoly::one();
    for d in 1..n {
        if n % d == 0 {
            denom = denom.mul(CyclotomicField::get(d)?.polynomial());
        }
    }
    let (q, r) = CycPoly::x_pow_minus_one(n as usize).div_rem(&denom)?;
    debug_assert!(r.is_zero());
    Ok(q)
}

/// The `n`-th cyclotomic polynomial `Φ_n`.
pub fn cyclotomic_polynomial(n: u32) -> Result<CycPoly> {
    Ok(CyclotomicField::get(n)?.polynomial().clone())
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// An element of `Q(ζ_N)`: a polynomial in `ζ_N` of degree `< φ(N)`.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn zero(order: u32) -> Result<Self> {
        Ok(Self::zero_in(CyclotomicField::get(order)?))
    }

    pub fn zero_in(field: Arc<CyclotomicField>) -> Self {
        let coeffs = vec![Rational::ZERO; field.degree()];
        CycNum { field, coeffs }
    }

    pub fn one(order: u32) -> Result<Self> {
        Self::from_rational(order, Rational::ONE)
    }

    pub fn from_rational(order: u32, r: Rational) -> Result<Self> {
        let mut z = Self::zero(order)?;
        z.coeffs[0] = r;
        Ok(z)
    }

    pub fn from_integer(order: u32, n: i64) -> Result<Self> {
        Self::from_rational(order, Rational::from_integer(n))
    }

    /// `ζ_N^k`, for any integer `k`.
    pub fn root(order: u32, k: i64) -> Result<Self> {
        let mut acc = CycAccumulator::new(order)?;
        acc.add_monomial(k, &Rational::ONE);
        Ok(acc.finish())
    }

    /// Builds from coefficients in the power basis; they must already be reduced.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Self> {
        let field = CyclotomicField::get(order)?;
        if coeffs.len() != field.degree() {
            return Err(Error::Parse(format!(
                "expected {} coefficients for order {order}, got {}",
                field.degree(),
                coeffs.len()
            )));
        }
        Ok(CycNum { field, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// The rational value, if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    fn check_order(&self, other: &CycNum) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn checked_add(&self, other: &CycNum) -> Result<CycNum> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNum {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycNum {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &CycNum) -> Result<CycNum> {
        self.check_order(other)?;
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(r));
        }
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(r));
        }
        let mut acc = CycAccumulator::with_field(Arc::clone(&self.field));
        acc.add_product(self, other, None);
        Ok(acc.finish())
    }

    pub fn scale(&self, r: &Rational) -> CycNum {
        CycNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    /// Multiplies by `ζ_N^k`.
    pub fn mul_root(&self, k: i64) -> CycNum {
        let mut acc = CycAccumulator::with_field(Arc::clone(&self.field));
        acc.add_shifted(self, k, None);
        acc.finish()
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against `Φ_N`.
    pub fn inverse(&self) -> Result<CycNum> {
        if let Some(r) = self.as_rational() {
            let inv = r.recip()?;
            return Ok(CycNum::from_rational(self.order(), inv).expect("valid order"));
        }
        let p = CycPoly::new(self.coeffs.clone());
        let inv = p.inverse_mod(self.field.polynomial())?;
        let mut coeffs = inv.into_coeffs();
        coeffs.resize(self.field.degree(), Rational::ZERO);
        Ok(CycNum {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum> {
        self.checked_mul(&other.inverse()?)
    }

    /// Complex conjugation, the automorphism `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> CycNum {
        self.galois(-1).expect("-1 is a unit")
    }

    /// The automorphism `ζ ↦ ζ^u` for `u` coprime to `N`.
    pub fn galois(&self, u: i64) -> Result<CycNum> {
        let n = self.order() as i64;
        if u.rem_euclid(n).gcd(&n) != 1 && n > 1 {
            return Err(Error::Domain(format!("{u} is not a unit modulo {n}")));
        }
        if self.as_rational().is_some() {
            return Ok(self.clone());
        }
        let mut acc = CycAccumulator::with_field(Arc::clone(&self.field));
        for (j, c) in self.nonzero_terms() {
            acc.add_monomial(j as i64 * u, c);
        }
        Ok(acc.finish())
    }

    /// The same element expressed in `Q(ζ_M)`, via `ζ_N ↦ ζ_M^{M/N}`.
    pub fn lift(&self, m: u32) -> Result<CycNum> {
        let n = self.order();
        if m == 0 || m % n != 0 {
            return Err(Error::NotDivisible { order: n, target: m });
        }
        if m == n {
            return Ok(self.clone());
        }
        let step = (m / n) as i64;
        let mut acc = CycAccumulator::new(m)?;
        for (j, c) in self.nonzero_terms() {
            acc.add_monomial(j as i64 * step, c);
        }
        Ok(acc.finish())
    }

    /// Double-precision value `Σ c_j e^{2πij/N}`.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order() as f64;
        self.nonzero_terms().fold((0.0, 0.0), |(re, im), (j, c)| {
            let angle = std::f64::consts::TAU * j as f64 / n;
            let v = c.to_f64();
            (re + v * angle.cos(), im + v * angle.sin())
        })
    }

    pub fn pow(&self, exp: u32) -> CycNum {
        let mut acc = CycNum::one(self.order()).expect("valid order");
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}

impl Eq for CycNum {}

impl std::hash::Hash for CycNum {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as a polynomial in `z{N}`, e.g. `1/2 + z8^3`.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let n = self.order();
        for (j, c) in self.nonzero_terms() {
            let (neg, mag) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let power = match j {
                0 => String::new(),
                1 => format!("z{n}"),
                _ => format!("z{n}^{j}"),
            };
            if j == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}*{power}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! cyc_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a CycNum> for &'a CycNum {
            type Output = CycNum;
            /// Panics when the orders differ; see the `checked_*` forms.
            fn $m(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
    };
}
cyc_op!(Add, add, checked_add);
cyc_op!(Sub, sub, checked_sub);
cyc_op!(Mul, mul, checked_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

/// Binary operation selector, mirroring the four ring operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Exact field arithmetic on two elements of the same order.
/// `Neg` ignores `y` beyond the order check.
pub fn cyc_arith(op: CycOp, x: &CycNum, y: &CycNum) -> Result<CycNum> {
    match op {
        CycOp::Add => x.checked_add(y),
        CycOp::Sub => x.checked_sub(y),
        CycOp::Mul => x.checked_mul(y),
        CycOp::Neg => {
            x.check_order(y)?;
            Ok(-x)
        }
    }
}

/// Wire form `{"order": N, "coeffs": ["p/q", ...]}`.
#[derive(Serialize, Deserialize)]
struct CycNumWire {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycNumWire {
            order: self.order(),
            coeffs: self.coeffs.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = CycNumWire::deserialize(d)?;
        CycNum::from_coeffs(w.order, w.coeffs).map_err(serde::de::Error::custom)
    }
}

/// A short sum `Σ c ζ_N^e` of scaled roots of unity, kept unreduced.
///
/// Values with a known closed form (signs, `i`, `2 cos`) are carried this way
/// so that sums of products can be formed with a handful of slot updates.
pub type RootSum = Vec<(i64, Rational)>;

/// Reduces a [`RootSum`] to canonical form in `Q(ζ_N)`.
pub fn reduce_root_sum(order: u32, terms: &RootSum) -> Result<CycNum> {
    let mut acc = CycAccumulator::new(order)?;
    acc.add_root_sum(terms, None);
    Ok(acc.finish())
}

/// Unreduced accumulator over `Q[x]/(x^N - 1)`.
///
/// Reduction modulo `Φ_N` is a ring homomorphism from this ring, so sums of
/// products can be gathered here and reduced once in [`finish`](Self::finish).
pub struct CycAccumulator {
    field: Arc<CyclotomicField>,
    slots: Vec<Rational>,
}

impl CycAccumulator {
    pub fn new(order: u32) -> Result<Self> {
        Ok(Self::with_field(CyclotomicField::get(order)?))
    }

    pub fn with_field(field: Arc<CyclotomicField>) -> Self {
        let slots = vec![Rational::ZERO; field.order as usize];
        CycAccumulator { field, slots }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    #[inline]
    fn slot(&self, exp: i64) -> usize {
        exp.rem_euclid(self.field.order as i64) as usize
    }

    /// Adds `c * ζ^exp`.
    pub fn add_monomial(&mut self, exp: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let i = self.slot(exp);
        self.slots[i] += c;
    }

    /// Adds `scale * Σ c ζ^e` over a [`RootSum`].
    pub fn add_root_sum(&mut self, terms: &RootSum, scale: Option<&Rational>) {
        for (e, c) in terms {
            match scale {
                Some(s) => self.add_monomial(*e, &(c * s)),
                None => self.add_monomial(*e, c),
            }
        }
    }

    /// Adds `scale * x * conj(y)` for root sums `x`, `y`.
    pub fn add_root_product_conj(&mut self, x: &RootSum, y: &RootSum, scale: &Rational) {
        for (e, c) in x {
            for (f, d) in y {
                self.add_monomial(e - f, &(&(c * d) * scale));
            }
        }
    }

    pub fn add_rational(&mut self, c: &Rational) {
        self.slots[0] += c;
    }

    /// Adds `scale * ζ^shift * x`; `x` must share this accumulator's order.
    pub fn add_shifted(&mut self, x: &CycNum, shift: i64, scale: Option<&Rational>) {
        debug_assert_eq!(x.order(), self.order());
        let n = self.field.order as usize;
        let base = self.slot(shift);
        for (j, c) in x.nonzero_terms() {
            let i = (base + j) % n;
            match scale {
                Some(s) => self.slots[i] += &(c * s),
                None => self.slots[i] += c,
            }
        }
    }

    pub fn add(&mut self, x: &CycNum) {
        self.add_shifted(x, 0, None);
    }

    /// Adds `scale * x * y`.
    pub fn add_product(&mut self, x: &CycNum, y: &CycNum, scale: Option<&Rational>) {
        self.add_product_impl(x, y, scale, false);
    }

    /// Adds `scale * x * conj(y)`.
    pub fn add_product_conj(&mut self, x: &CycNum, y: &CycNum, scale: Option<&Rational>) {
        self.add_product_impl(x, y, scale, true);
    }

    fn add_product_impl(&mut self, x: &CycNum, y: &CycNum, scale: Option<&Rational>, conj: bool) {
        debug_assert_eq!(x.order(), self.order());
        debug_assert_eq!(y.order(), self.order());
        let n = self.field.order as usize;
        let ys: Vec<(usize, Rational)> = y
            .nonzero_terms()
            .map(|(j, c)| {
                let j = if conj { (n - j) % n } else { j };
                (j, scale.map_or_else(|| c.clone(), |s| c * s))
            })
            .collect();
        for (i, a) in x.nonzero_terms() {
            for (j, b) in &ys {
                let k = (i + j) % n;
                self.slots[k] += &(a * b);
            }
        }
    }

    /// Reduces modulo `Φ_N` into canonical form.
    pub fn finish(self) -> CycNum {
        let phi = self.field.degree();
        let mut iter = self.slots.into_iter();
        let mut coeffs: Vec<Rational> = iter.by_ref().take(phi).collect();
        for (offset, c) in iter.enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, v) in &self.field.monomials[offset] {
                coeffs[*t as usize] += &(&c * v);
            }
        }
        CycNum {
            field: self.field,
            coeffs,
        }
    }
}

/// `lcm(a, b)`.
pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// `cos(pπ/q)` exactly, in `Q(ζ_M)` with `M = lcm(2q, 4)`.
pub fn cos_frac(p: i64, q: u32) -> Result<CycNum> {
    if q == 0 {
        return Err(Error::Domain("cos_frac with q = 0".into()));
    }
    let m = lcm(2 * q, 4);
    let e = p * (m / (2 * q)) as i64;
    let half = Rational::new(1, 2);
    let mut acc = CycAccumulator::new(m)?;
    acc.add_monomial(e, &half);
    acc.add_monomial(-e, &half);
    Ok(acc.finish())
}

/// `sin(pπ/q)` exactly, in `Q(ζ_M)` with `M = lcm(2q, 4)`.
pub fn sin_frac(p: i64, q: u32) -> Result<CycNum> {
    if q == 0 {
        return Err(Error::Domain("sin_frac with q = 0".into()));
    }
    let m = lcm(2 * q, 4);
    let e = p * (m / (2 * q)) as i64;
    let quarter = (m / 4) as i64;
    // (ζ^e - ζ^{-e}) / 2i = -(i/2)(ζ^e - ζ^{-e})
    let half = Rational::new(1, 2);
    let mut acc = CycAccumulator::new(m)?;
    acc.add_monomial(e + quarter, &-&half);
    acc.add_monomial(quarter - e, &half);
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn cyc(order: u32, coeffs: &[(i64, i64)]) -> CycNum {
        CycNum::from_coeffs(order, coeffs.iter().map(|&(n, d)| r(n, d)).collect()).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials_small() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), CycPoly::from_integers(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4).unwrap(), CycPoly::from_integers(&[1, 0, 1]));
        assert_eq!(
            cyclotomic_polynomial(12).unwrap(),
            CycPoly::from_integers(&[1, 0, -1, 0, 1])
        );
        assert!(matches!(cyclotomic_polynomial(0), Err(Error::InvalidOrder(0))));
    }

    #[test]
    fn phi_vanishes_at_generator() {
        for n in 1..=64u32 {
            let f = CyclotomicField::get(n).unwrap();
            assert_eq!(f.degree(), totient(n) as usize, "degree of Φ_{n}");
            let z = CycNum::root(n, 1).unwrap();
            let mut acc = CycNum::zero(n).unwrap();
            let mut pow = CycNum::one(n).unwrap();
            for c in f.polynomial().coeffs() {
                acc = &acc + &pow.scale(c);
                pow = &pow * &z;
            }
            assert!(acc.is_zero(), "Φ_{n}(ζ_{n}) != 0");
        }
    }

    #[test]
    fn make_root_examples() {
        let i = CycNum::root(4, 1).unwrap();
        assert_eq!(i, cyc(4, &[(0, 1), (1, 1)]));
        let (re, im) = i.to_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        for n in 1..20 {
            assert!(CycNum::root(n, n as i64).unwrap().is_one());
            assert!(CycNum::root(n, 0).unwrap().is_one());
        }
        assert_eq!(CycNum::root(3, 2).unwrap(), cyc(3, &[(-1, 1), (-1, 1)]));
    }

    #[test]
    fn arith_examples() {
        let i = CycNum::root(4, 1).unwrap();
        assert_eq!(&i * &i, CycNum::from_integer(4, -1).unwrap());
        let z3 = CycNum::root(3, 1).unwrap();
        let z3sq = CycNum::root(3, 2).unwrap();
        assert_eq!(&z3 + &z3sq, CycNum::from_integer(3, -1).unwrap());
        let x = cyc(5, &[(1, 2), (-3, 1), (0, 1), (7, 4)]);
        assert_eq!(&x * &CycNum::one(5).unwrap(), x);
        assert!(matches!(
            cyc_arith(CycOp::Add, &i, &z3),
            Err(Error::OrderMismatch(4, 3))
        ));
        assert_eq!(cyc_arith(CycOp::Neg, &i, &i).unwrap(), -&i);
    }

    #[test]
    fn inverse_examples() {
        let one_plus_i = cyc(4, &[(1, 1), (1, 1)]);
        assert_eq!(one_plus_i.inverse().unwrap(), cyc(4, &[(1, 2), (-1, 2)]));
        for n in [3u32, 5, 8, 12] {
            let z = CycNum::root(n, 1).unwrap();
            assert_eq!(z.inverse().unwrap(), CycNum::root(n, n as i64 - 1).unwrap());
        }
        let one_plus_z3 = cyc(3, &[(1, 1), (1, 1)]);
        assert_eq!(one_plus_z3.inverse().unwrap(), -CycNum::root(3, 1).unwrap());
        assert!(matches!(
            CycNum::zero(7).unwrap().inverse(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn lift_examples() {
        let z2 = CycNum::root(2, 1).unwrap();
        assert_eq!(z2.lift(4).unwrap(), CycNum::from_integer(4, -1).unwrap());
        assert!(CycNum::one(3).unwrap().lift(12).unwrap().is_one());
        assert_eq!(
            CycNum::root(3, 1).unwrap().lift(12).unwrap(),
            CycNum::root(12, 4).unwrap()
        );
        assert!(matches!(
            CycNum::root(3, 1).unwrap().lift(8),
            Err(Error::NotDivisible { order: 3, target: 8 })
        ));
    }

    #[test]
    fn trig_examples() {
        assert_eq!(cos_frac(1, 3).unwrap().as_rational(), Some(&r(1, 2)));
        assert!(cos_frac(1, 2).unwrap().is_zero());
        assert!(sin_frac(1, 2).unwrap().is_one());
        let c = cos_frac(1, 5).unwrap();
        assert!((c.to_complex().0 - 0.8090169944).abs() < 1e-10);
        assert!(c.to_complex().1.abs() < 1e-12);
        assert_eq!(cos_frac(1, 5).unwrap().order(), 20);
    }

    #[test]
    fn to_complex_examples() {
        let (re, im) = CycNum::root(8, 1).unwrap().to_complex();
        assert!((re - 0.7071067812).abs() < 1e-10 && (im - 0.7071067812).abs() < 1e-10);
        let x = &CycNum::from_integer(3, -1).unwrap() + &CycNum::root(3, 1).unwrap();
        let (re, im) = x.to_complex();
        assert!((re + 1.5).abs() < 1e-10 && (im - 0.8660254038).abs() < 1e-10);
    }

    #[test]
    fn pythagoras_and_float_agreement() {
        for q in 1..=50u32 {
            for p in 0..(2 * q as i64) {
                let c = cos_frac(p, q).unwrap();
                let s = sin_frac(p, q).unwrap();
                assert!((&(&c * &c) + &(&s * &s)).is_one(), "p={p} q={q}");
                let angle = std::f64::consts::PI * p as f64 / q as f64;
                assert!((c.to_complex().0 - angle.cos()).abs() < 1e-10);
                assert!((s.to_complex().0 - angle.sin()).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn serde_wire_format() {
        let x = cyc(4, &[(1, 2), (-3, 1)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"order":4,"coeffs":["1/2","-3"]}"#);
        let back: CycNum = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<CycNum>(r#"{"order":4,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn totient_values() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(totient(i as u32 + 1), *e);
        }
    }

    fn arb_cyc(order: u32) -> impl Strategy<Value = CycNum> {
        let phi = totient(order) as usize;
        proptest::collection::vec((-6i64..=6, 1i64..=4), phi).prop_map(move |v| {
            CycNum::from_coeffs(order, v.into_iter().map(|(n, d)| Rational::new(n, d)).collect())
                .unwrap()
        })
    }

    fn arb_order() -> impl Strategy<Value = u32> {
        prop_oneof![Just(3u32), Just(4), Just(7), Just(8), Just(12), Just(15), Just(20), Just(24)]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms((x, y, z) in arb_order().prop_flat_map(|n| (arb_cyc(n), arb_cyc(n), arb_cyc(n)))) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                prop_assert!((&x * &x.inverse().unwrap()).is_one());
            }
        }

        #[test]
        fn embedding_is_multiplicative((x, y) in arb_order().prop_flat_map(|n| (arb_cyc(n), arb_cyc(n)))) {
            let (a, b) = (x.to_complex(), y.to_complex());
            let p = (&x * &y).to_complex();
            let expect = (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
            prop_assert!((p.0 - expect.0).abs() < 1e-9 && (p.1 - expect.1).abs() < 1e-9);
        }

        #[test]
        fn lift_is_ring_homomorphism((x, y) in arb_order().prop_flat_map(|n| (arb_cyc(n), arb_cyc(n))), k in 1u32..4) {
            let m = x.order() * k;
            prop_assert_eq!((&x * &y).lift(m).unwrap(), &x.lift(m).unwrap() * &y.lift(m).unwrap());
            prop_assert_eq!((&x + &y).lift(m).unwrap(), &x.lift(m).unwrap() + &y.lift(m).unwrap());
        }

        #[test]
        fn conj_matches_float(x in arb_order().prop_flat_map(arb_cyc)) {
            let (re, im) = x.to_complex();
            let (cre, cim) = x.conj().to_complex();
            prop_assert!((re - cre).abs() < 1e-9 && (im + cim).abs() < 1e-9);
        }
    }
}
