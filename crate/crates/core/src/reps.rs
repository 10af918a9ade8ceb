//! The two-dimensional irreducible representations `ρ_k` of `D_2n` and `Q_4m`.
//!
//! For `D_2n`: `r ↦ [[cos 2kπ/n, -sin 2kπ/n], [sin 2kπ/n, cos 2kπ/n]]`,
//! `s ↦ [[0, 1], [1, 0]]`, `1 <= k <= ⌊(n-1)/2⌋`.
//!
//! For `Q_4m`: `a ↦ diag(ε^k, ε^-k)` with `ε = e^{πi/m}`,
//! `b ↦ [[0, 1], [(-1)^k, 0]]`, `1 <= k <= m-1`.

use serde::Serialize;

use crate::chartab::table_order;
use crate::error::{Error, Result};
use crate::exactnum::{cos_frac, sin_frac, CycNum, Rational, RootSum};
use crate::group_algebra::{AlgElem, MonomialMatrix};
use crate::groups::{GroupElem, GroupKind};
pub use crate::linalg::Mat2;

/// Diagonal position `E_jj` hit by the first-listed idempotent `e'_{ρ_k}` of
/// the closed-form splits. The dihedral `e'` lands on `E_22`, the quaternion
/// one on `E_11`, for every valid `k`; both are verified in the test suites.
pub fn e_prime_unit(kind: GroupKind) -> usize {
    match kind {
        GroupKind::Dihedral { .. } => 2,
        GroupKind::Quaternion { .. } => 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rep2 {
    group: GroupKind,
    k: u32,
    field_order: u32,
    /// Images of `(r, s)` or `(a, b)`.
    generators: [Mat2; 2],
}

/// Number of two-dimensional irreducible representations.
pub fn two_dim_count(kind: GroupKind) -> u32 {
    match kind {
        GroupKind::Dihedral { n } => (n.saturating_sub(1)) / 2,
        GroupKind::Quaternion { m } => m - 1,
    }
}

fn check_k(kind: GroupKind, k: u32) -> Result<()> {
    let hi = two_dim_count(kind);
    if hi == 0 {
        return Err(Error::NoTwoDimensionalRep(kind.to_string()));
    }
    if !(1..=hi).contains(&k) {
        return Err(Error::IndexOutOfRange {
            index: k as i64,
            lo: 1,
            hi: hi as i64,
        });
    }
    Ok(())
}

pub fn rep_dihedral(n: u32, k: u32) -> Result<Rep2> {
    let kind = GroupKind::dihedral(n)?;
    check_k(kind, k)?;
    let order = table_order(kind);
    let c = cos_frac(2 * k as i64, n)?.lift(order)?;
    let s = sin_frac(2 * k as i64, n)?.lift(order)?;
    let zero = CycNum::zero(order)?;
    let one = CycNum::one(order)?;
    Ok(Rep2 {
        group: kind,
        k,
        field_order: order,
        generators: [
            Mat2::from_rows(c.clone(), -&s, s, c)?,
            Mat2::from_rows(zero.clone(), one.clone(), one, zero)?,
        ],
    })
}

pub fn rep_quaternion(m: u32, k: u32) -> Result<Rep2> {
    let kind = GroupKind::quaternion(m)?;
    check_k(kind, k)?;
    let order = table_order(kind);
    let eps = CycNum::root(order, 2 * k as i64)?;
    let zero = CycNum::zero(order)?;
    let sign = CycNum::from_integer(order, if k % 2 == 0 { 1 } else { -1 })?;
    Ok(Rep2 {
        group: kind,
        k,
        field_order: order,
        generators: [
            Mat2::from_rows(eps.clone(), zero.clone(), zero.clone(), eps.conj())?,
            Mat2::from_rows(zero.clone(), CycNum::one(order)?, sign, zero)?,
        ],
    })
}

/// `ρ_k` for either family.
pub fn rep(kind: GroupKind, k: u32) -> Result<Rep2> {
    match kind {
        GroupKind::Dihedral { n } => rep_dihedral(n, k),
        GroupKind::Quaternion { m } => rep_quaternion(m, k),
    }
}

impl Rep2 {
    pub fn kind(&self) -> GroupKind {
        self.group
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn generators(&self) -> &[Mat2; 2] {
        &self.generators
    }

    /// `ρ(x^i t^j) = X^i T^j` by repeated multiplication.
    pub fn image(&self, g: GroupElem) -> Mat2 {
        let [x, t] = &self.generators;
        let p = x.pow(g.rot());
        if g.flip() == 1 {
            p.checked_mul(t).expect("same order")
        } else {
            p
        }
    }

    /// `ρ(g)` from its closed form as root sums in `Q(ζ_M)`, `M` a multiple of
    /// the representation's field order.
    pub fn root_sum_image(&self, g: GroupElem, target: u32) -> MonomialMatrix {
        let w = (target / self.field_order) as i64;
        let n = self.field_order as i64;
        let i = g.rot() as i64;
        let k = self.k as i64;
        let half = Rational::new(1, 2);
        let e = |x: i64| x * w;
        match self.group {
            GroupKind::Dihedral { n: deg } => {
                // ρ(r^i) = rotation by iα, α = 2πk/n, i.e. ζ_N^{ikN/n}.
                let p = i * k * (n / deg as i64);
                let q = n / 4;
                let cos: RootSum = vec![(e(p), half.clone()), (e(-p), half.clone())];
                let sin: RootSum = vec![(e(p + q), -&half), (e(q - p), half.clone())];
                let neg = |v: &RootSum| -> RootSum { v.iter().map(|(x, c)| (*x, -c)).collect() };
                if g.flip() == 0 {
                    [cos.clone(), neg(&sin), sin, cos]
                } else {
                    [neg(&sin), cos.clone(), cos, sin]
                }
            }
            GroupKind::Quaternion { .. } => {
                // ρ(a^i) = diag(ζ^{2ki}, ζ^{-2ki}) at N = 4m.
                let p = 2 * k * i;
                let one = Rational::ONE;
                if g.flip() == 0 {
                    [vec![(e(p), one.clone())], vec![], vec![], vec![(e(-p), one)]]
                } else {
                    let sign = Rational::from_integer(if k % 2 == 0 { 1 } else { -1 });
                    [vec![], vec![(e(p), one)], vec![(e(-p), sign)], vec![]]
                }
            }
        }
    }

    /// `Σ_g x(g) ρ(g)`.
    pub fn apply(&self, x: &AlgElem) -> Result<Mat2> {
        if x.kind() != self.group {
            return Err(Error::KindMismatch(
                x.kind().to_string(),
                self.group.to_string(),
            ));
        }
        let order = crate::exactnum::lcm(self.field_order, x.field_order());
        x.apply_monomial(order, |g| self.root_sum_image(g, order))
    }

    /// Checks the defining relations of the group on the generator images.
    pub fn verify_relations(&self) -> RelationReport {
        let [x, t] = &self.generators;
        let id = |m: &Mat2| m.is_identity();
        let relations = match self.group {
            GroupKind::Dihedral { n } => vec![
                ("r^n = 1".to_string(), id(&x.pow(n))),
                ("s^2 = 1".to_string(), id(&t.pow(2))),
                (
                    "s r s = r^-1".to_string(),
                    id(&t.checked_mul(x).and_then(|m| m.checked_mul(t)).and_then(|m| m.checked_mul(x)).expect("same order")),
                ),
            ],
            GroupKind::Quaternion { m } => vec![
                ("a^2m = 1".to_string(), id(&x.pow(2 * m))),
                ("a^m = b^2".to_string(), x.pow(m) == t.pow(2)),
                (
                    "b^-1 a b = a^-1".to_string(),
                    t.inverse()
                        .and_then(|ti| ti.checked_mul(x))
                        .and_then(|m| m.checked_mul(t))
                        .and_then(|m| m.checked_mul(x))
                        .is_ok_and(|m| m.is_identity()),
                ),
            ],
        };
        RelationReport {
            group: self.group,
            k: self.k,
            relations,
        }
    }
}

/// Free-function form of [`Rep2::apply`].
pub fn apply_algebra(rep: &Rep2, x: &AlgElem) -> Result<Mat2> {
    rep.apply(x)
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub group: GroupKind,
    pub k: u32,
    pub relations: Vec<(String, bool)>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok)
    }
}
