//! Trigonometric identities behind the orthogonality relations.
//!
//! Exact for angles that are rational multiples of `π`:
//!
//! ```text
//! Σ_{r=0}^{n-1} (-1)^r cos(rkπ/n) = 1 if n + k is odd, 0 otherwise
//! Σ_{r=1}^{n} cos rθ = sin(θ/2 + nθ) / (2 sin θ/2) - 1/2
//! ```

use num_integer::Integer;
use serde::Serialize;

use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::exactnum::{cos_frac, lcm, sin_frac, CycAccumulator, CycNum, Rational};
use crate::groups::GroupKind;
use crate::reps::two_dim_count;

/// The angle `pπ/q`, stored reduced with `q > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RationalAngle {
    p: i64,
    q: u32,
}

impl RationalAngle {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = p.gcd(&q).max(1);
        let (p, q) = if q < 0 { (-p / g, -q / g) } else { (p / g, q / g) };
        let q = u32::try_from(q).map_err(|_| Error::Domain(format!("denominator {q} too large")))?;
        Ok(RationalAngle { p, q })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> u32 {
        self.q
    }

    /// `θ = 2kπ` for some integer `k`.
    pub fn is_multiple_of_two_pi(self) -> bool {
        self.q == 1 && self.p % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.p as f64 * std::f64::consts::PI / self.q as f64
    }

    /// Field order holding `cos rθ` and the half-angle sines.
    pub fn field_order(self) -> u32 {
        lcm(4 * self.q, 4)
    }
}

/// `Σ_{r=0}^{n-1} (-1)^r cos(rkπ/n)`, exactly.
pub fn alternating_cos_sum(n: u32, k: u32) -> Result<CycNum> {
    if n == 0 || !(1..n).contains(&k) {
        return Err(Error::IndexOutOfRange {
            index: k as i64,
            lo: 1,
            hi: n as i64 - 1,
        });
    }
    // cos(rkπ/n) = ½(ζ^{wrk} + ζ^{-wrk}), ζ = ζ_N, w = N/2n.
    let order = lcm(2 * n, 4);
    let w = (order / (2 * n)) as i64;
    let mut acc = CycAccumulator::new(order)?;
    for r in 0..n as i64 {
        let c = Rational::new(if r % 2 == 0 { 1 } else { -1 }, 2);
        let e = w * r * k as i64;
        acc.add_monomial(e, &c);
        acc.add_monomial(-e, &c);
    }
    Ok(acc.finish())
}

/// The value the alternating sum takes: 1 when `n + k` is odd.
pub fn alternating_expected(n: u32, k: u32) -> i64 {
    ((n + k) % 2) as i64
}

/// Both sides of the partial cosine sum for `n = 1..=n_max`.
pub fn cos_partial_sums(angle: RationalAngle, n_max: u32) -> Result<Vec<(CycNum, CycNum)>> {
    if angle.is_multiple_of_two_pi() {
        return Err(Error::Domain(format!(
            "angle {}π/{} is a multiple of 2π",
            angle.p, angle.q
        )));
    }
    let order = angle.field_order();
    let (p, q) = (angle.p, angle.q);
    let half_sin = sin_frac(p, 2 * q)?.lift(order)?;
    let inv = half_sin.scale(&Rational::from_integer(2)).inverse()?;
    let half = CycNum::from_rational(order, Rational::new(1, 2))?;
    let mut lhs = CycNum::zero(order)?;
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max as i64 {
        lhs = &lhs + &cos_frac(n * p, q)?.lift(order)?;
        // θ/2 + nθ = (2n+1)pπ/2q
        let top = sin_frac((2 * n + 1) * p, 2 * q)?.lift(order)?;
        out.push((lhs.clone(), &(&top * &inv) - &half));
    }
    Ok(out)
}

/// `(Σ_{r=1}^n cos rθ, sin(θ/2 + nθ)/(2 sin θ/2) - ½)`, exactly.
pub fn cos_partial_sum(angle: RationalAngle, n: u32) -> Result<(CycNum, CycNum)> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, lo: 1, hi: i64::MAX });
    }
    Ok(cos_partial_sums(angle, n)?.pop().expect("n >= 1"))
}

/// Double-precision form for arbitrary `θ`.
pub fn float_cos_partial_sum(theta: f64, n: u32) -> Result<(f64, f64)> {
    let s = (theta / 2.0).sin();
    if s.abs() <= 1e-8 {
        return Err(Error::Domain(format!("sin(θ/2) = {s:e} is too close to zero")));
    }
    let lhs: f64 = (1..=n).map(|r| (r as f64 * theta).cos()).sum();
    let rhs = (theta / 2.0 + n as f64 * theta).sin() / (2.0 * s) - 0.5;
    Ok((lhs, rhs))
}

/// Error bound for [`float_cos_partial_sum`]: `1e-9`, widened as the
/// denominator `2 sin θ/2` approaches zero.
pub fn float_tolerance(theta: f64, n: u32) -> f64 {
    let s = (theta / 2.0).sin().abs();
    1e-9_f64.max(4.0 * f64::EPSILON * (n as f64 + 1.0) / s)
}

/// One instantiated sum identity with its orthogonality cross-check.
#[derive(Clone, Debug, Serialize)]
pub struct SumCheck {
    pub identity: String,
    pub indices: Vec<u32>,
    pub value: CycNum,
    pub expected: CycNum,
    pub holds: bool,
    /// The inner product rebuilt from `value`.
    pub inner_product: CycNum,
    /// The same inner product from the character table.
    pub table_inner_product: CycNum,
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalitySums {
    pub group: GroupKind,
    pub checks: Vec<SumCheck>,
}

impl OrthogonalitySums {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.holds && c.agrees)
    }
}

struct Ctx<'a> {
    table: &'a CharacterTable,
    order: u32,
    checks: Vec<SumCheck>,
}

impl Ctx<'_> {
    fn int(&self, v: i64) -> CycNum {
        CycNum::from_integer(self.order, v).expect("valid")
    }

    fn q(&self, a: i64, b: i64) -> CycNum {
        CycNum::from_rational(self.order, Rational::new(a, b)).expect("valid")
    }

    fn cos(&self, p: i64, q: u32) -> CycNum {
        cos_frac(p, q).and_then(|c| c.lift(self.order)).expect("divides")
    }

    #[allow(clippy::too_many_arguments)]
    fn push(&mut self, identity: &str, indices: Vec<u32>, value: CycNum, expected: CycNum, inner: CycNum, rows: (&str, &str)) {
        let i = self.table.row_index(rows.0).expect("row");
        let j = self.table.row_index(rows.1).expect("row");
        let table_ip = self.table.inner_product(i, j).expect("same table");
        self.checks.push(SumCheck {
            identity: identity.into(),
            indices,
            holds: value == expected,
            agrees: inner == table_ip,
            value,
            expected,
            inner_product: inner,
            table_inner_product: table_ip,
        });
    }
}

/// Every sum identity read off the first orthogonality relation, instantiated
/// for all admissible indices and compared with the table's inner products.
pub fn orthogonality_sums(kind: GroupKind) -> Result<OrthogonalitySums> {
    let count = two_dim_count(kind);
    if count == 0 {
        return Err(Error::NoTwoDimensionalRep(kind.to_string()));
    }
    let table = CharacterTable::new(kind);
    let mut cx = Ctx {
        table: &table,
        order: table.field_order(),
        checks: Vec::new(),
    };
    let g = kind.order() as i64;
    let sum = |cx: &Ctx, top: i64, f: &dyn Fn(i64) -> CycNum| {
        (1..=top).fold(cx.int(0), |acc, r| &acc + &f(r))
    };
    match kind {
        GroupKind::Dihedral { n } => {
            let nn = n as i64;
            let odd = n % 2 == 1;
            let m = if odd { (nn - 1) / 2 } else { nn / 2 };
            // θ = 2π/n; cos krθ = cos(2krπ/n).
            for k in 1..=count as i64 {
                let s = sum(&cx, if odd { m } else { m - 1 }, &|r| cx.cos(2 * k * r, n));
                let (expected, inner) = if odd {
                    // <χ₁, χ_ρk> = [2 + 4 Σ_{r=1}^m cos krθ] / (4m+2)
                    let ip = &(&cx.int(2) + &s.scale(&Rational::from_integer(4))) * &cx.q(1, g);
                    (cx.q(-1, 2), ip)
                } else {
                    // <χ₁, χ_ρk> = [2 + 4 Σ_{r=1}^{m-1} cos krθ + 2(-1)^k] / 4m
                    let sg = if k % 2 == 0 { 1 } else { -1 };
                    let ip = &(&(&cx.int(2) + &s.scale(&Rational::from_integer(4))) + &cx.int(2 * sg)) * &cx.q(1, g);
                    (cx.q(-(1 + sg), 2), ip)
                };
                cx.push("sum cos(k r theta)", vec![k as u32], s, expected, inner, ("chi1", &format!("rho{k}")));
            }
            for a in 1..=count as i64 {
                for b in 1..=count as i64 {
                    if a == b {
                        continue;
                    }
                    let top = if odd { m } else { m - 1 };
                    let s = sum(&cx, top, &|r| &cx.cos(2 * a * r, n) * &cx.cos(2 * b * r, n));
                    let (expected, inner) = if odd {
                        // [4 + 8 Σ cos arθ cos brθ] / (4m+2)
                        let ip = &(&cx.int(4) + &s.scale(&Rational::from_integer(8))) * &cx.q(1, g);
                        (cx.q(-1, 2), ip)
                    } else {
                        // [4 + 8 Σ_{r=1}^{m-1} cos arθ cos brθ + 4(-1)^{a+b}] / 4m
                        let sg = if (a + b) % 2 == 0 { 1 } else { -1 };
                        let ip = &(&(&cx.int(4) + &s.scale(&Rational::from_integer(8))) + &cx.int(4 * sg)) * &cx.q(1, g);
                        (cx.q(-(1 + sg), 2), ip)
                    };
                    cx.push(
                        "sum cos(a r theta) cos(b r theta)",
                        vec![a as u32, b as u32],
                        s,
                        expected,
                        inner,
                        (&format!("rho{a}"), &format!("rho{b}")),
                    );
                }
            }
        }
        GroupKind::Quaternion { m } => {
            let mm = m as i64;
            let even = m % 2 == 0;
            for k in 1..mm {
                // Σ_{r=1}^{m-1} (-1)^r cos(krπ/m)
                let s = sum(&cx, mm - 1, &|r| cx.cos(k * r, m).scale(&Rational::from_integer(if r % 2 == 0 { 1 } else { -1 })));
                let expected = if (mm + k) % 2 == 1 { cx.int(0) } else { cx.int(-1) };
                // [2 + 4S + 2(-1)^{k+1}] / 4m for odd m, [2 + 4S + 2(-1)^k] / 4m for even m.
                let e = if even { k } else { k + 1 };
                let tail = cx.int(if e % 2 == 0 { 2 } else { -2 });
                let inner = &(&(&cx.int(2) + &s.scale(&Rational::from_integer(4))) + &tail) * &cx.q(1, g);
                cx.push("sum (-1)^r cos(k r pi / m)", vec![k as u32], s, expected, inner, ("chi3", &format!("rho{k}")));
            }
            for a in 1..mm {
                for b in 1..mm {
                    if a == b {
                        continue;
                    }
                    let s = sum(&cx, mm - 1, &|r| &cx.cos(a * r, m) * &cx.cos(b * r, m));
                    let sg = if (a + b) % 2 == 0 { 1 } else { -1 };
                    let expected = cx.int(if sg == 1 { -1 } else { 0 });
                    // [4 + 8S + 4(-1)^{a+b}] / 4m
                    let inner = &(&(&cx.int(4) + &s.scale(&Rational::from_integer(8))) + &cx.int(4 * sg)) * &cx.q(1, g);
                    cx.push(
                        "sum cos(a r pi / m) cos(b r pi / m)",
                        vec![a as u32, b as u32],
                        s,
                        expected,
                        inner,
                        (&format!("rho{a}"), &format!("rho{b}")),
                    );
                }
            }
        }
    }
    Ok(OrthogonalitySums {
        group: kind,
        checks: cx.checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(order: u32, v: i64) -> CycNum {
        CycNum::from_integer(order, v).unwrap()
    }

    #[test]
    fn alternating_examples() {
        assert!(alternating_cos_sum(4, 1).unwrap().is_one());
        assert!(alternating_cos_sum(3, 1).unwrap().is_zero());
        assert!(alternating_cos_sum(6, 2).unwrap().is_zero());
        assert!(alternating_cos_sum(4, 4).is_err());
        assert!(alternating_cos_sum(1, 1).is_err());
    }

    #[test]
    fn alternating_sweep() {
        for n in 1..=200 {
            for k in 1..n {
                let v = alternating_cos_sum(n, k).unwrap();
                assert_eq!(v.as_rational().cloned(), Some(Rational::from_integer(alternating_expected(n, k))), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn partial_sum_examples() {
        let (l, r) = cos_partial_sum(RationalAngle::new(1, 1).unwrap(), 2).unwrap();
        assert!(l.is_zero() && r.is_zero());
        let (l, r) = cos_partial_sum(RationalAngle::new(2, 5).unwrap(), 2).unwrap();
        let h = CycNum::from_rational(l.order(), Rational::new(-1, 2)).unwrap();
        assert_eq!(l, h);
        assert_eq!(r, h);
        assert!(matches!(cos_partial_sum(RationalAngle::new(2, 1).unwrap(), 3), Err(Error::Domain(_))));
        assert!(cos_partial_sum(RationalAngle::new(4, 2).unwrap(), 3).is_err());
        assert!(cos_partial_sum(RationalAngle::new(3, 1).unwrap(), 3).is_ok());
    }

    #[test]
    fn angles_reduce() {
        let a = RationalAngle::new(4, -6).unwrap();
        assert_eq!((a.p(), a.q()), (-2, 3));
        assert!(RationalAngle::new(1, 0).is_err());
        assert!(RationalAngle::new(0, 5).unwrap().is_multiple_of_two_pi());
    }

    #[test]
    fn partial_sum_sweep_small() {
        for q in 1..=12i64 {
            for p in 1..2 * q {
                let a = RationalAngle::new(p, q).unwrap();
                if a.q() as i64 != q {
                    continue;
                }
                for (n, (l, r)) in cos_partial_sums(a, 24).unwrap().into_iter().enumerate() {
                    assert_eq!(l, r, "{p}/{q} n={}", n + 1);
                }
            }
        }
    }

    #[test]
    fn float_examples() {
        for (t, n) in [(1.0, 10), (0.1, 100)] {
            let (l, r) = float_cos_partial_sum(t, n).unwrap();
            assert!((l - r).abs() < 1e-9);
        }
        let t = 2.0 * std::f64::consts::PI - 1e-3;
        let (l, r) = float_cos_partial_sum(t, 5).unwrap();
        assert!((l - r).abs() < float_tolerance(t, 5));
        assert!(float_cos_partial_sum(0.0, 3).is_err());
        assert!(float_cos_partial_sum(4.0 * std::f64::consts::PI, 3).is_err());
    }

    #[test]
    fn orthogonality_examples() {
        let d5 = orthogonality_sums(GroupKind::Dihedral { n: 5 }).unwrap();
        assert!(d5.passed());
        let c = &d5.checks[0];
        assert_eq!(c.value, CycNum::from_rational(c.value.order(), Rational::new(-1, 2)).unwrap());

        let q4 = orthogonality_sums(GroupKind::Quaternion { m: 4 }).unwrap();
        let c = q4.checks.iter().find(|c| c.identity.starts_with("sum (-1)") && c.indices == [1]).unwrap();
        assert!(c.value.is_zero());

        let q3 = orthogonality_sums(GroupKind::Quaternion { m: 3 }).unwrap();
        let c = q3.checks.iter().find(|c| c.indices == [1, 2]).unwrap();
        assert!(c.value.is_zero() && c.holds);
        let q4c = q4.checks.iter().find(|c| c.indices == [1, 3]).unwrap();
        assert_eq!(q4c.value, int(q4c.value.order(), -1));
        assert!(orthogonality_sums(GroupKind::Dihedral { n: 2 }).is_err());
    }

    #[test]
    fn orthogonality_sweep() {
        for n in 3..=40 {
            let r = orthogonality_sums(GroupKind::Dihedral { n }).unwrap();
            assert!(r.passed(), "D n={n}");
        }
        for m in 2..=20 {
            let r = orthogonality_sums(GroupKind::Quaternion { m }).unwrap();
            assert!(r.passed(), "Q m={m}");
        }
    }

    proptest! {
        #[test]
        fn float_identity(t in -50.0f64..50.0, n in 1u32..200) {
            prop_assume!((t / 2.0).sin().abs() > 1e-3);
            let (l, r) = float_cos_partial_sum(t, n).unwrap();
            prop_assert!((l - r).abs() < 1e-9, "t={t} n={n} diff={}", (l - r).abs());
        }
    }
}
