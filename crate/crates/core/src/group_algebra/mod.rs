//! Elements of the group algebra `Q(ζ_N)[G]` for the two group families.

mod format;
pub mod spectral;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{lcm, CycAccumulator, CycNum, CyclotomicField, Rational, RootSum};
use crate::groups::{GroupElem, GroupKind};
use crate::linalg::Mat2;

pub use format::{number_to_latex, to_latex, to_text};

/// A finitely supported map `G → Q(ζ_N)`, zero coefficients dropped.
#[derive(Clone)]
pub struct AlgElem {
    kind: GroupKind,
    order: u32,
    terms: BTreeMap<GroupElem, CycNum>,
}

fn kind_mismatch(a: GroupKind, b: GroupKind) -> Error {
    Error::KindMismatch(a.to_string(), b.to_string())
}

impl AlgElem {
    pub fn zero(kind: GroupKind, order: u32) -> Result<Self> {
        CyclotomicField::get(order)?;
        Ok(AlgElem {
            kind,
            order,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(kind: GroupKind, order: u32) -> Result<Self> {
        Self::basis(kind, GroupElem::IDENTITY, order)
    }

    /// The basis element `g` with coefficient 1.
    pub fn basis(kind: GroupKind, g: GroupElem, order: u32) -> Result<Self> {
        Self::from_terms(kind, order, [(g, CycNum::one(order)?)])
    }

    /// Sums the given terms; repeated elements accumulate.
    pub fn from_terms(
        kind: GroupKind,
        order: u32,
        terms: impl IntoIterator<Item = (GroupElem, CycNum)>,
    ) -> Result<Self> {
        let mut x = Self::zero(kind, order)?;
        for (g, c) in terms {
            kind.elem(g.rot(), g.flip())?;
            if c.order() != order {
                return Err(Error::OrderMismatch(order, c.order()));
            }
            x.add_term(g, &c);
        }
        Ok(x)
    }

    /// Rational combination of basis elements.
    pub fn from_rationals(
        kind: GroupKind,
        order: u32,
        terms: impl IntoIterator<Item = (GroupElem, Rational)>,
    ) -> Result<Self> {
        let terms: Vec<_> = terms
            .into_iter()
            .map(|(g, c)| CycNum::from_rational(order, c).map(|c| (g, c)))
            .collect::<Result<_>>()?;
        Self::from_terms(kind, order, terms)
    }

    fn add_term(&mut self, g: GroupElem, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&g);
                }
            }
            None => {
                self.terms.insert(g, c.clone());
            }
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn field_order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, g: GroupElem) -> Option<&CycNum> {
        self.terms.get(&g)
    }

    /// Coefficient of `g`, zero if absent.
    pub fn coeff_or_zero(&self, g: GroupElem) -> CycNum {
        self.terms
            .get(&g)
            .cloned()
            .unwrap_or_else(|| CycNum::zero(self.order).expect("valid order"))
    }

    pub fn terms(&self) -> impl Iterator<Item = (GroupElem, &CycNum)> {
        self.terms.iter().map(|(g, c)| (*g, c))
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&GroupElem::IDENTITY)
                .is_some_and(CycNum::is_one)
    }

    /// The same element with coefficients in `Q(ζ_M)`.
    pub fn lift(&self, m: u32) -> Result<AlgElem> {
        if m == self.order {
            return Ok(self.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(g, c)| Ok((*g, c.lift(m)?)))
            .collect::<Result<_>>()?;
        Ok(AlgElem {
            kind: self.kind,
            order: m,
            terms,
        })
    }

    /// Both operands lifted to the lcm of their field orders.
    fn common(&self, other: &AlgElem) -> Result<(AlgElem, AlgElem)> {
        if self.kind != other.kind {
            return Err(kind_mismatch(self.kind, other.kind));
        }
        let n = lcm(self.order, other.order);
        Ok((self.lift(n)?, other.lift(n)?))
    }

    pub fn checked_add(&self, other: &AlgElem) -> Result<AlgElem> {
        let (mut x, y) = self.common(other)?;
        for (g, c) in &y.terms {
            x.add_term(*g, c);
        }
        Ok(x)
    }

    pub fn checked_sub(&self, other: &AlgElem) -> Result<AlgElem> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> AlgElem {
        AlgElem {
            kind: self.kind,
            order: self.order,
            terms: self.terms.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }

    /// `c · self`, lifting to a common field order.
    pub fn scale(&self, c: &CycNum) -> Result<AlgElem> {
        let n = lcm(self.order, c.order());
        let c = c.lift(n)?;
        let x = self.lift(n)?;
        Ok(AlgElem {
            kind: x.kind,
            order: n,
            terms: x
                .terms
                .iter()
                .map(|(g, v)| (*g, v * &c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        })
    }

    pub fn scale_rational(&self, c: &Rational) -> AlgElem {
        AlgElem {
            kind: self.kind,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(g, v)| (*g, v.scale(c)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// Convolution product.
    pub fn checked_mul(&self, other: &AlgElem) -> Result<AlgElem> {
        let (x, y) = self.common(other)?;
        let kind = x.kind;
        let field: Arc<CyclotomicField> = CyclotomicField::get(x.order)?;
        let mut acc: Vec<Option<CycAccumulator>> = (0..kind.order()).map(|_| None).collect();
        for (g, a) in &x.terms {
            for (h, b) in &y.terms {
                let t = kind.index(kind.mul(*g, *h));
                acc[t]
                    .get_or_insert_with(|| CycAccumulator::with_field(Arc::clone(&field)))
                    .add_product(a, b, None);
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter_map(|(i, a)| a.map(|a| (kind.elem_at(i), a.finish())))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(AlgElem {
            kind,
            order: x.order,
            terms,
        })
    }

    /// `g · self`.
    pub fn left_translate(&self, g: GroupElem) -> AlgElem {
        AlgElem {
            kind: self.kind,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(h, c)| (self.kind.mul(g, *h), c.clone()))
                .collect(),
        }
    }

    /// `self · g`.
    pub fn right_translate(&self, g: GroupElem) -> AlgElem {
        AlgElem {
            kind: self.kind,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(h, c)| (self.kind.mul(*h, g), c.clone()))
                .collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.checked_mul(self).is_ok_and(|sq| &sq == self)
    }

    /// Commutes with every group element; checking both generators suffices.
    pub fn is_central(&self) -> bool {
        [self.kind.rotation(1), self.kind.reflection(0)]
            .into_iter()
            .all(|g| self.left_translate(g) == self.right_translate(g))
    }

    /// The augmentation `Σ_g x(g)`.
    pub fn augmentation(&self) -> CycNum {
        let mut acc = CycAccumulator::new(self.order).expect("valid order");
        for c in self.terms.values() {
            acc.add(c);
        }
        acc.finish()
    }

    /// Applies a representation whose image of every group element is a
    /// matrix of short sums `Σ c ζ_M^e`, with `M` a multiple of the field order.
    ///
    /// The result is `Σ_g x(g) ρ(g)` in `Q(ζ_M)`.
    pub fn apply_monomial<F>(&self, order: u32, image: F) -> Result<Mat2>
    where
        F: Fn(GroupElem) -> MonomialMatrix,
    {
        let x = self.lift(order)?;
        let field = CyclotomicField::get(order)?;
        let mut acc: [CycAccumulator; 4] =
            std::array::from_fn(|_| CycAccumulator::with_field(Arc::clone(&field)));
        for (g, c) in &x.terms {
            for (slot, entry) in acc.iter_mut().zip(image(*g).iter()) {
                for (e, s) in entry {
                    slot.add_shifted(c, *e, Some(s));
                }
            }
        }
        Mat2::new(acc.map(CycAccumulator::finish))
    }

    /// Coefficients embedded as complex floats, in basis order.
    pub fn to_complex_terms(&self) -> Vec<(GroupElem, (f64, f64))> {
        self.terms.iter().map(|(g, c)| (*g, c.to_complex())).collect()
    }

    /// The pair `(A, B)` of `C_L` coefficient vectors with `x = A + B t`.
    pub(crate) fn split_halves(&self) -> [Vec<(u32, &CycNum)>; 2] {
        let mut out = [Vec::new(), Vec::new()];
        for (g, c) in &self.terms {
            out[g.flip() as usize].push((g.rot(), c));
        }
        out
    }
}

/// Entries `[a11, a12, a21, a22]` as root sums.
pub type MonomialMatrix = [RootSum; 4];

impl PartialEq for AlgElem {
    fn eq(&self, other: &Self) -> bool {
        if self.kind != other.kind || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            return self.terms == other.terms;
        }
        match self.common(other) {
            Ok((x, y)) => x.terms == y.terms,
            Err(_) => false,
        }
    }
}

impl Eq for AlgElem {}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] {}", self.kind, self.order, to_text(self))
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_text(self))
    }
}

/// Free-function forms of the algebra operations.
pub fn a_add(x: &AlgElem, y: &AlgElem) -> Result<AlgElem> {
    x.checked_add(y)
}

pub fn a_scale(c: &CycNum, x: &AlgElem) -> Result<AlgElem> {
    x.scale(c)
}

pub fn a_mul(x: &AlgElem, y: &AlgElem) -> Result<AlgElem> {
    x.checked_mul(y)
}

pub fn is_idempotent(x: &AlgElem) -> bool {
    x.is_idempotent()
}

pub fn is_central(x: &AlgElem) -> bool {
    x.is_central()
}

/// `xy = 0` and `yx = 0`.
pub fn are_orthogonal(x: &AlgElem, y: &AlgElem) -> Result<bool> {
    Ok(x.checked_mul(y)?.is_zero() && y.checked_mul(x)?.is_zero())
}
