//! Exact Fourier transform over the cyclic normal subgroup.
//!
//! Write `x = A + B t` with `A, B` supported on `C_L = <r>` (or `<a>`) and
//! `t^2 = x^c`. For each `j` the map
//!
//! ```text
//! ρ_j(A + B t) = [ Â(j)   ω^{jc} B̂(j) ]
//!                [ B̂(-j)  Â(-j)       ],   Â(j) = Σ_i A_i ω^{ij},  ω = ζ_L
//! ```
//!
//! is a representation of the group algebra, and the blocks `j = 0..=L/2`
//! together determine every `Â(j)` and `B̂(j)`, hence `x`. So products can be
//! checked blockwise: `xy = z` iff `ρ_j(x) ρ_j(y) = ρ_j(z)` for every block.
//! Primitive idempotents are nonzero on one or two blocks only, which makes
//! exhaustive orthogonality checks cheap.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{lcm, CycAccumulator, CycNum, CyclotomicField, Rational};
use crate::groups::GroupKind;
use crate::linalg::Mat2;

use super::AlgElem;

/// Blockwise image of a group-algebra element; `None` marks a zero block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    kind: GroupKind,
    order: u32,
    blocks: Vec<Option<Mat2>>,
}

/// Field order used for the transform of elements over `Q(ζ_N)`.
pub fn spectral_order(kind: GroupKind, field_order: u32) -> u32 {
    lcm(field_order, kind.cyclic_order())
}

impl Spectrum {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn blocks(&self) -> &[Option<Mat2>] {
        &self.blocks
    }

    /// Indices of nonzero blocks.
    pub fn support(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&j| self.blocks[j].is_some())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Option::is_none)
    }

    pub fn is_identity(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.as_ref().is_some_and(Mat2::is_identity))
    }

    fn check(&self, other: &Spectrum) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::KindMismatch(
                self.kind.to_string(),
                other.kind.to_string(),
            ));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Spectrum) -> Result<Spectrum> {
        self.check(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => {
                    let p = a.checked_mul(b)?;
                    Ok((!p.is_zero()).then_some(p))
                }
                _ => Ok(None),
            })
            .collect::<Result<_>>()?;
        Ok(Spectrum {
            kind: self.kind,
            order: self.order,
            blocks,
        })
    }

    pub fn checked_add(&self, other: &Spectrum) -> Result<Spectrum> {
        self.check(other)?;
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => {
                    let s = a.checked_add(b)?;
                    Ok((!s.is_zero()).then_some(s))
                }
                (Some(a), None) => Ok(Some(a.clone())),
                (None, b) => Ok(b.clone()),
            })
            .collect::<Result<_>>()?;
        Ok(Spectrum {
            kind: self.kind,
            order: self.order,
            blocks,
        })
    }

    /// Recovers the group-algebra element, at the transform's field order.
    pub fn inverse(&self) -> Result<AlgElem> {
        let kind = self.kind;
        let l = kind.cyclic_order() as i64;
        let c = kind.twist() as i64;
        let w = (self.order as i64) / l;
        let zero = CycNum::zero(self.order)?;
        // Â(j) and B̂(j) for every j in Z_L.
        let mut a_hat = vec![zero.clone(); l as usize];
        let mut b_hat = vec![zero.clone(); l as usize];
        for (j, block) in self.blocks.iter().enumerate() {
            let Some(m) = block else { continue };
            let j = j as i64;
            let neg = (l - j).rem_euclid(l) as usize;
            a_hat[j as usize] = m.get(1, 1).clone();
            a_hat[neg] = m.get(2, 2).clone();
            b_hat[j as usize] = m.get(1, 2).mul_root(-w * j * c);
            b_hat[neg] = m.get(2, 1).clone();
        }
        let inv_l = Rational::new(1, l);
        let field = CyclotomicField::get(self.order)?;
        let mut terms = Vec::new();
        for (flip, hat) in [(0u8, &a_hat), (1u8, &b_hat)] {
            for i in 0..l {
                let mut acc = CycAccumulator::with_field(Arc::clone(&field));
                for (j, v) in hat.iter().enumerate() {
                    acc.add_shifted(v, -w * i * j as i64, Some(&inv_l));
                }
                terms.push((kind.elem(i as u32, flip)?, acc.finish()));
            }
        }
        AlgElem::from_terms(kind, self.order, terms)
    }
}

/// The blockwise image of `x`, computed exactly.
pub fn transform(x: &AlgElem) -> Result<Spectrum> {
    let kind = x.kind();
    let order = spectral_order(kind, x.field_order());
    let x = x.lift(order)?;
    let field = CyclotomicField::get(order)?;
    let l = kind.cyclic_order() as i64;
    let c = kind.twist() as i64;
    let w = order as i64 / l;
    let [a, b] = x.split_halves();
    let new_acc = || CycAccumulator::with_field(Arc::clone(&field));
    let blocks = (0..=l / 2)
        .map(|j| {
            // [Â(j), B̂(j), B̂(-j), Â(-j)]
            let mut acc = [new_acc(), new_acc(), new_acc(), new_acc()];
            for &(i, v) in &a {
                let e = w * i as i64 * j;
                acc[0].add_shifted(v, e, None);
                acc[3].add_shifted(v, -e, None);
            }
            for &(i, v) in &b {
                let e = w * i as i64 * j;
                acc[1].add_shifted(v, e + w * j * c, None);
                acc[2].add_shifted(v, -e, None);
            }
            let m = Mat2::new(acc.map(CycAccumulator::finish))?;
            Ok((!m.is_zero()).then_some(m))
        })
        .collect::<Result<_>>()?;
    Ok(Spectrum {
        kind,
        order,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupElem;
    use proptest::prelude::*;

    fn kinds() -> impl Strategy<Value = GroupKind> {
        prop_oneof![
            (1u32..9).prop_map(|n| GroupKind::Dihedral { n }),
            (1u32..5).prop_map(|m| GroupKind::Quaternion { m }),
        ]
    }

    fn elem(kind: GroupKind) -> impl Strategy<Value = AlgElem> {
        let order = lcm(2 * kind.cyclic_order(), 4);
        let g = kind.order();
        proptest::collection::vec((0..g, -3i64..=3, 0..order), 0..8).prop_map(move |v| {
            AlgElem::from_terms(
                kind,
                order,
                v.into_iter().map(|(idx, c, e)| {
                    (
                        kind.elem_at(idx),
                        CycNum::root(order, e as i64).unwrap().scale(&Rational::from_integer(c)),
                    )
                }),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn transform_is_multiplicative((x, y) in kinds().prop_flat_map(|k| (elem(k), elem(k)))) {
            let tx = transform(&x).unwrap();
            let ty = transform(&y).unwrap();
            let xy = x.checked_mul(&y).unwrap();
            prop_assert_eq!(tx.checked_mul(&ty).unwrap(), transform(&xy).unwrap());
            let s = x.checked_add(&y).unwrap();
            prop_assert_eq!(tx.checked_add(&ty).unwrap(), transform(&s).unwrap());
        }

        #[test]
        fn transform_is_invertible(x in kinds().prop_flat_map(elem)) {
            let t = transform(&x).unwrap();
            prop_assert_eq!(t.inverse().unwrap(), x.clone());
            prop_assert_eq!(t.is_zero(), x.is_zero());
        }
    }

    #[test]
    fn identity_and_basis() {
        for k in [
            GroupKind::Dihedral { n: 1 },
            GroupKind::Dihedral { n: 6 },
            GroupKind::Dihedral { n: 7 },
            GroupKind::Quaternion { m: 1 },
            GroupKind::Quaternion { m: 3 },
        ] {
            let order = lcm(2 * k.cyclic_order(), 4);
            assert!(transform(&AlgElem::one(k, order).unwrap()).unwrap().is_identity());
            // Distinct basis elements have distinct images.
            let imgs: Vec<_> = k
                .enumerate()
                .into_iter()
                .map(|g: GroupElem| transform(&AlgElem::basis(k, g, order).unwrap()).unwrap())
                .collect();
            for i in 0..imgs.len() {
                for j in 0..i {
                    assert_ne!(imgs[i], imgs[j]);
                }
            }
        }
    }
}
