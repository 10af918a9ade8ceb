//! An explicit algebra isomorphism `ψ: C[Q_8] → C[D_8]`.
//!
//! On generators: `ab ↦ r³`, `a ↦ ½(r²s + s - i·rs + i·r³s)`,
//! `b ↦ ½(rs + r³s - i·s + i·r²s)`, extended linearly over the bases
//! `(1, a², a, a³, b, a²b, ab, a³b)` and `(1, r, r², r³, s, rs, r²s, r³s)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{lcm, CycNum, Rational};
use crate::group_algebra::AlgElem;
use crate::groups::{GroupElem, GroupKind};
use crate::idempotents::complete_set;
use crate::linalg::{det, solve};

/// Source basis order for the coordinates `x₀..x₇`.
pub const Q8_BASIS: [&str; 8] = ["1", "a^2", "a", "a^3", "b", "a^2b", "ab", "a^3b"];
pub const D8_BASIS: [&str; 8] = ["1", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"];

/// Every coefficient of ψ lies in `Q(i)`.
pub const FIELD_ORDER: u32 = 4;

pub fn q8() -> GroupKind {
    GroupKind::Quaternion { m: 2 }
}

pub fn d8() -> GroupKind {
    GroupKind::Dihedral { n: 4 }
}

fn basis(kind: GroupKind, names: &[&str; 8]) -> [GroupElem; 8] {
    names.map(|s| kind.parse_elem(s).expect("fixed basis"))
}

/// ψ as an 8×8 matrix: column `j` holds ψ of the `j`-th source basis element
/// in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMap {
    columns: Vec<Vec<CycNum>>,
}

fn gauss(re: i64, im: i64, den: i64) -> CycNum {
    let i = CycNum::root(FIELD_ORDER, 1).expect("order 4");
    let re = CycNum::from_rational(FIELD_ORDER, Rational::new(re, den)).expect("order 4");
    &re + &i.scale(&Rational::new(im, den))
}

impl BasisMap {
    /// The displayed image of `α = Σ x_j q_j`.
    pub fn psi() -> BasisMap {
        let z = || gauss(0, 0, 1);
        let mut cols = vec![vec![z(); 8]; 8];
        // x₀·1 + x₇·r + x₁·r² + x₆·r³
        cols[0][0] = gauss(1, 0, 1);
        cols[7][1] = gauss(1, 0, 1);
        cols[1][2] = gauss(1, 0, 1);
        cols[6][3] = gauss(1, 0, 1);
        // s:   ½(x₂ + x₃ - i x₄ + i x₅)
        // rs:  ½(-i x₂ + i x₃ + x₄ + x₅)
        // r²s: ½(x₂ + x₃ + i x₄ - i x₅)
        // r³s: ½(i x₂ - i x₃ + x₄ + x₅)
        let rows: [(usize, [(i64, i64); 4]); 4] = [
            (4, [(1, 0), (1, 0), (0, -1), (0, 1)]),
            (5, [(0, -1), (0, 1), (1, 0), (1, 0)]),
            (6, [(1, 0), (1, 0), (0, 1), (0, -1)]),
            (7, [(0, 1), (0, -1), (1, 0), (1, 0)]),
        ];
        for (row, cs) in rows {
            for (x, (re, im)) in (2..6).zip(cs) {
                cols[x][row] = gauss(re, im, 2);
            }
        }
        BasisMap { columns: cols }
    }

    pub fn columns(&self) -> &[Vec<CycNum>] {
        &self.columns
    }

    /// Row-major form, `rows[target][source]`.
    pub fn rows(&self) -> Vec<Vec<CycNum>> {
        (0..8)
            .map(|r| (0..8).map(|c| self.columns[c][r].clone()).collect())
            .collect()
    }

    pub fn determinant(&self) -> CycNum {
        det(&self.rows()).expect("square")
    }

    /// The inverse map, column by column.
    pub fn inverse(&self) -> Result<BasisMap> {
        let rows = self.rows();
        let columns = (0..8)
            .map(|j| {
                let e: Vec<CycNum> = (0..8).map(|i| gauss((i == j) as i64, 0, 1)).collect();
                solve(&rows, &e)
            })
            .collect::<Result<_>>()?;
        Ok(BasisMap { columns })
    }

    /// Applies the map from `from` coordinates to `to` coordinates.
    fn apply(
        &self,
        x: &AlgElem,
        from: (GroupKind, &[&str; 8]),
        to: (GroupKind, &[&str; 8]),
    ) -> Result<AlgElem> {
        if x.kind() != from.0 {
            return Err(Error::KindMismatch(x.kind().to_string(), from.0.to_string()));
        }
        let order = lcm(x.field_order(), FIELD_ORDER);
        let x = x.lift(order)?;
        let src = basis(from.0, from.1);
        let dst = basis(to.0, to.1);
        let mut terms = Vec::new();
        for (j, g) in src.iter().enumerate() {
            let c = x.coeff_or_zero(*g);
            if c.is_zero() {
                continue;
            }
            for (i, h) in dst.iter().enumerate() {
                let m = &self.columns[j][i];
                if !m.is_zero() {
                    terms.push((*h, &c * &m.lift(order)?));
                }
            }
        }
        AlgElem::from_terms(to.0, order, terms)
    }
}

impl Serialize for BasisMap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BasisMap", 4)?;
        st.serialize_field("source_basis", &Q8_BASIS)?;
        st.serialize_field("target_basis", &D8_BASIS)?;
        st.serialize_field("rows", &self.rows())?;
        st.serialize_field("determinant", &self.determinant())?;
        st.end()
    }
}

pub fn psi(x: &AlgElem) -> Result<AlgElem> {
    BasisMap::psi().apply(x, (q8(), &Q8_BASIS), (d8(), &D8_BASIS))
}

pub fn psi_inv(y: &AlgElem) -> Result<AlgElem> {
    BasisMap::psi().inverse()?.apply(y, (d8(), &D8_BASIS), (q8(), &Q8_BASIS))
}

fn q8_elem(name: &str) -> AlgElem {
    AlgElem::basis(q8(), q8().parse_elem(name).expect("valid"), FIELD_ORDER).expect("order 4")
}

#[derive(Clone, Debug, Serialize)]
pub struct HomomorphismReport {
    pub pairs_checked: usize,
    pub pair_failures: Vec<(String, String)>,
    pub unit_preserved: bool,
    pub determinant: CycNum,
    pub invertible: bool,
    pub inverse_round_trip: bool,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.pairs_checked == 64
            && self.pair_failures.is_empty()
            && self.unit_preserved
            && self.invertible
            && self.inverse_round_trip
    }
}

/// `ψ(gh) = ψ(g)ψ(h)` on all 64 basis pairs, `ψ(1) = 1`, `det ≠ 0`, and
/// `ψ⁻¹ ∘ ψ = id` on the basis.
pub fn verify_homomorphism() -> Result<HomomorphismReport> {
    let images: Vec<AlgElem> = Q8_BASIS.iter().map(|g| psi(&q8_elem(g))).collect::<Result<_>>()?;
    let src = basis(q8(), &Q8_BASIS);
    let mut pair_failures = Vec::new();
    let mut pairs_checked = 0;
    for (i, g) in src.iter().enumerate() {
        for (j, h) in src.iter().enumerate() {
            pairs_checked += 1;
            let gh = AlgElem::basis(q8(), q8().mul(*g, *h), FIELD_ORDER)?;
            if psi(&gh)? != images[i].checked_mul(&images[j])? {
                pair_failures.push((Q8_BASIS[i].to_string(), Q8_BASIS[j].to_string()));
            }
        }
    }
    let unit_preserved = psi(&AlgElem::one(q8(), FIELD_ORDER)?)?.is_one();
    let determinant = BasisMap::psi().determinant();
    let mut inverse_round_trip = true;
    for g in Q8_BASIS {
        let x = q8_elem(g);
        inverse_round_trip &= psi_inv(&psi(&x)?)? == x;
    }
    Ok(HomomorphismReport {
        pairs_checked,
        pair_failures,
        unit_preserved,
        invertible: !determinant.is_zero(),
        determinant,
        inverse_round_trip,
    })
}

/// The twelve parameters of the ansatz
/// `ψ(ab) = r + (k₁ + k₂r + k₃rs + k₄s)(1 - r²)`,
/// `ψ(b) = rs + (k₅ + k₆r + k₇rs + k₈s)(1 - r²)`,
/// `ψ(a) = s + (k₉ + k₁₀r + k₁₁rs + k₁₂s)(1 - r²)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KParams(pub [CycNum; 12]);

impl KParams {
    /// `k₂ = -1, k₇ = -½, k₈ = -i/2, k₁₁ = -i/2, k₁₂ = -½`, all others zero.
    pub fn stated() -> KParams {
        let mut k: [CycNum; 12] = std::array::from_fn(|_| gauss(0, 0, 1));
        k[1] = gauss(-1, 0, 1);
        k[6] = gauss(-1, 0, 2);
        k[7] = gauss(0, -1, 2);
        k[10] = gauss(0, -1, 2);
        k[11] = gauss(-1, 0, 2);
        KParams(k)
    }

    pub fn zero() -> KParams {
        KParams(std::array::from_fn(|_| gauss(0, 0, 1)))
    }

    fn order(&self) -> u32 {
        self.0.iter().fold(FIELD_ORDER, |o, c| lcm(o, c.order()))
    }

    /// `(ψ(ab), ψ(a), ψ(b))` built from the ansatz.
    pub fn generator_images(&self) -> Result<[AlgElem; 3]> {
        let order = self.order();
        let d = d8();
        let el = |s: &str| d.parse_elem(s).expect("valid");
        let unit = |g: &str| AlgElem::basis(d, el(g), order);
        let ideal = AlgElem::from_rationals(
            d,
            order,
            [(el("1"), Rational::ONE), (el("r^2"), Rational::from_integer(-1))],
        )?;
        let make = |base: &str, ks: &[CycNum]| -> Result<AlgElem> {
            let terms = ["1", "r", "rs", "s"]
                .iter()
                .zip(ks)
                .map(|(g, k)| Ok((el(g), k.lift(order)?)))
                .collect::<Result<Vec<_>>>()?;
            let p = AlgElem::from_terms(d, order, terms)?;
            unit(base)?.checked_add(&p.checked_mul(&ideal)?)
        };
        Ok([
            make("r", &self.0[0..4])?,
            make("s", &self.0[8..12])?,
            make("rs", &self.0[4..8])?,
        ])
    }
}

/// The three blocks of the displayed quadratic system, each evaluated at `k`.
/// Block 1 comes from `ψ(ab)² = r²`, block 2 from `ψ(b)² = r²` and block 3
/// from `ψ(a)² = r²`.
pub fn k_system_equations(k: &KParams) -> [[CycNum; 4]; 3] {
    let order = k.order();
    let k: Vec<CycNum> = k.0.iter().map(|c| c.lift(order).expect("divides")).collect();
    let n = |v: i64| Rational::from_integer(v);
    let sq2 = |c: &CycNum| (c * c).scale(&n(2));
    let one = CycNum::one(order).expect("valid");
    let lin = |lead: &CycNum, base: &CycNum| &(lead * base).scale(&n(4)) + &lead.scale(&n(2));
    // k₁k₃, k₁k₄, 4k₁k₂ + 2k₁, 2k₁² + 2k₃² + 2k₄² - 2k₂² - 2k₂
    let b1 = [
        &k[0] * &k[2],
        &k[0] * &k[3],
        lin(&k[0], &k[1]),
        &(&(&(&sq2(&k[0]) + &sq2(&k[2])) + &sq2(&k[3])) - &sq2(&k[1])) - &k[1].scale(&n(2)),
    ];
    // k₅k₆, k₅k₈, 4k₅k₇ + 2k₅, 2k₅² + 2k₇² + 2k₈² - 2k₆² + 1 + 2k₇
    let b2 = [
        &k[4] * &k[5],
        &k[4] * &k[7],
        lin(&k[4], &k[6]),
        &(&(&(&(&sq2(&k[4]) + &sq2(&k[6])) + &sq2(&k[7])) - &sq2(&k[5])) + &one) + &k[6].scale(&n(2)),
    ];
    // k₉k₁₀, k₉k₁₁, 4k₉k₁₂ + 2k₉, 2k₉² + 2k₁₁² + 2k₁₂² - 2k₁₀² + 1 + 2k₁₂
    let b3 = [
        &k[8] * &k[9],
        &k[8] * &k[10],
        lin(&k[8], &k[11]),
        &(&(&(&(&sq2(&k[8]) + &sq2(&k[10])) + &sq2(&k[11])) - &sq2(&k[9])) + &one) + &k[11].scale(&n(2)),
    ];
    [b1, b2, b3]
}

#[derive(Clone, Debug, Serialize)]
pub struct KSystemReport {
    pub params: KParams,
    /// One flag per block: all four equations vanish.
    pub blocks: [bool; 3],
    /// `ψ(ab)² = ψ(a)² = ψ(b)² = r²` computed directly.
    pub squares: bool,
    /// `ψ(a)ψ(b) = ψ(ab)`, `ψ(b)ψ(ab) = ψ(a)`, `ψ(ab)ψ(a) = ψ(b)`.
    pub consistency: [bool; 3],
    /// The generator images agree with the linear map.
    pub matches_basis_map: bool,
}

impl KSystemReport {
    pub fn passed(&self) -> bool {
        self.blocks.iter().all(|b| *b) && self.squares && self.consistency.iter().all(|b| *b) && self.matches_basis_map
    }
}

pub fn verify_k_system(k: &KParams) -> Result<KSystemReport> {
    let eqs = k_system_equations(k);
    let blocks = eqs.map(|b| b.iter().all(CycNum::is_zero));
    let [ab, a, b] = k.generator_images()?;
    let order = ab.field_order();
    let r2 = AlgElem::basis(d8(), d8().rotation(2), order)?;
    let squares = [&ab, &a, &b]
        .iter()
        .map(|x| x.checked_mul(x).map(|sq| sq == r2))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|ok| ok);
    let consistency = [
        a.checked_mul(&b)? == ab,
        b.checked_mul(&ab)? == a,
        ab.checked_mul(&a)? == b,
    ];
    let matches_basis_map =
        psi(&q8_elem("ab"))? == ab && psi(&q8_elem("a"))? == a && psi(&q8_elem("b"))? == b;
    Ok(KSystemReport {
        params: k.clone(),
        blocks,
        squares,
        consistency,
        matches_basis_map,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Correspondence {
    pub source: String,
    pub target: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorrespondenceReport {
    pub entries: Vec<Correspondence>,
    pub sum_maps_to_one: bool,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.entries.len() == 6 && self.entries.iter().all(|e| e.holds) && self.sum_maps_to_one
    }
}

/// `ψ(e_i) = ē_i`, `ψ(e') = ē''` and `ψ(e'') = ē'`.
pub fn idempotent_correspondence() -> Result<CorrespondenceReport> {
    let q = complete_set(q8())?;
    let d = complete_set(d8())?;
    let mut entries = Vec::new();
    for (i, (e, f)) in q.linear.iter().zip(&d.linear).enumerate() {
        entries.push(Correspondence {
            source: format!("e{}", i + 1),
            target: format!("e{}_bar", i + 1),
            holds: psi(e)? == *f,
        });
    }
    let (qp, dp) = (&q.pairs[0], &d.pairs[0]);
    entries.push(Correspondence {
        source: "e'_rho1".into(),
        target: "e''_rho1_bar".into(),
        holds: psi(&qp.prime)? == dp.second,
    });
    entries.push(Correspondence {
        source: "e''_rho1".into(),
        target: "e'_rho1_bar".into(),
        holds: psi(&qp.second)? == dp.prime,
    });
    let mut total = AlgElem::zero(q8(), FIELD_ORDER)?;
    for x in q.primitive() {
        total = total.checked_add(x)?;
    }
    Ok(CorrespondenceReport {
        entries,
        sum_maps_to_one: psi(&total)?.is_one(),
    })
}

/// `ψ` maps the class sums of `Q_8` onto central elements, `ψ⁻¹` does the
/// same for `D_8`, and the non-central basis elements stay non-central.
pub fn center_preserved() -> Result<bool> {
    let class_sums = |kind: GroupKind| -> Result<Vec<AlgElem>> {
        kind.conjugacy_classes()
            .into_iter()
            .map(|c| AlgElem::from_rationals(kind, FIELD_ORDER, c.into_iter().map(|g| (g, Rational::ONE))))
            .collect()
    };
    for z in class_sums(q8())? {
        if !psi(&z)?.is_central() {
            return Ok(false);
        }
    }
    for z in class_sums(d8())? {
        if !psi_inv(&z)?.is_central() {
            return Ok(false);
        }
    }
    for g in Q8_BASIS {
        let x = q8_elem(g);
        if x.is_central() != psi(&x)?.is_central() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d8_elem(terms: &[(&str, CycNum)]) -> AlgElem {
        AlgElem::from_terms(d8(), FIELD_ORDER, terms.iter().map(|(g, c)| (d8().parse_elem(g).unwrap(), c.clone()))).unwrap()
    }

    #[test]
    fn generator_images() {
        assert_eq!(psi(&q8_elem("ab")).unwrap(), d8_elem(&[("r^3", gauss(1, 0, 1))]));
        assert!(psi(&q8_elem("1")).unwrap().is_one());
        assert_eq!(psi(&q8_elem("a^2")).unwrap(), d8_elem(&[("r^2", gauss(1, 0, 1))]));
        let a3 = d8_elem(&[
            ("r^2s", gauss(1, 0, 2)),
            ("s", gauss(1, 0, 2)),
            ("rs", gauss(0, 1, 2)),
            ("r^3s", gauss(0, -1, 2)),
        ]);
        assert_eq!(psi(&q8_elem("a^3")).unwrap(), a3);
        assert_eq!(psi(&q8_elem("a^3b")).unwrap(), d8_elem(&[("r", gauss(1, 0, 1))]));
        let a2b = d8_elem(&[
            ("rs", gauss(1, 0, 2)),
            ("r^3s", gauss(1, 0, 2)),
            ("s", gauss(0, 1, 2)),
            ("r^2s", gauss(0, -1, 2)),
        ]);
        assert_eq!(psi(&q8_elem("a^2b")).unwrap(), a2b);
        assert!(psi(&AlgElem::one(d8(), 4).unwrap()).is_err());
    }

    #[test]
    fn homomorphism() {
        let r = verify_homomorphism().unwrap();
        assert!(r.passed(), "{r:?}");
        let a = psi(&q8_elem("a")).unwrap();
        let b = psi(&q8_elem("b")).unwrap();
        assert_eq!(a.checked_mul(&b).unwrap(), psi(&q8_elem("ab")).unwrap());
        assert_eq!(a.checked_mul(&a).unwrap(), psi(&q8_elem("a^2")).unwrap());
    }

    #[test]
    fn k_system() {
        let r = verify_k_system(&KParams::stated()).unwrap();
        assert!(r.passed(), "{r:?}");
        let z = verify_k_system(&KParams::zero()).unwrap();
        assert!(z.blocks[0] && !z.blocks[1] && !z.blocks[2]);
        assert!(!z.passed());
        let eq = k_system_equations(&KParams::zero());
        assert!(eq[1][3].is_one());
    }

    #[test]
    fn correspondence() {
        let r = idempotent_correspondence().unwrap();
        assert!(r.passed(), "{r:?}");
        let q = complete_set(q8()).unwrap();
        let want = AlgElem::from_rationals(
            d8(),
            4,
            [("1", 1), ("r^2", -1), ("rs", -1), ("r^3s", 1)]
                .map(|(g, c)| (d8().parse_elem(g).unwrap(), Rational::new(c, 4))),
        )
        .unwrap();
        assert_eq!(psi(&q.pairs[0].prime).unwrap(), want);
    }

    #[test]
    fn center() {
        assert!(center_preserved().unwrap());
        assert!(!BasisMap::psi().determinant().is_zero());
    }

    fn gaussian_elem(kind: GroupKind) -> impl Strategy<Value = AlgElem> {
        proptest::collection::vec((0..8usize, -3i64..=3, -3i64..=3, 1i64..=4), 0..8).prop_map(move |v| {
            AlgElem::from_terms(kind, 4, v.into_iter().map(|(g, re, im, d)| (kind.elem_at(g), gauss(re, im, d)))).unwrap()
        })
    }

    /// `(P₀ + P₁ r + P₂ rs + P₃ s)(1 - r²)` for the given positional values.
    fn ideal_elem(p: [CycNum; 4], order: u32) -> AlgElem {
        let d = d8();
        let terms = ["1", "r", "rs", "s"].iter().zip(p).map(|(g, c)| (d.parse_elem(g).unwrap(), c.lift(order).unwrap()));
        let base = AlgElem::from_terms(d, order, terms).unwrap();
        let ideal = AlgElem::from_rationals(d, order, [(d.rotation(0), Rational::ONE), (d.rotation(2), Rational::from_integer(-1))]).unwrap();
        base.checked_mul(&ideal).unwrap()
    }

    fn gk() -> impl Strategy<Value = CycNum> {
        (-3i64..=3, -3i64..=3, 1i64..=2).prop_map(|(a, b, d)| gauss(a, b, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn psi_inv_round_trips(x in gaussian_elem(q8())) {
            prop_assert_eq!(psi_inv(&psi(&x).unwrap()).unwrap(), x);
        }

        #[test]
        fn psi_is_multiplicative(x in gaussian_elem(q8()), y in gaussian_elem(q8())) {
            let lhs = psi(&x.checked_mul(&y).unwrap()).unwrap();
            let rhs = psi(&x).unwrap().checked_mul(&psi(&y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        /// The displayed system is exactly `ψ(x)² - r² = 0` written in the
        /// ideal `(1 - r²)`: the square minus `r²` equals the block values
        /// placed on `(1, r, rs, s)` times `(1 - r²)`.
        #[test]
        fn k_blocks_encode_the_squares(ks in proptest::array::uniform12(gk())) {
            let k = KParams(ks);
            let eqs = k_system_equations(&k);
            let [ab, a, b] = k.generator_images().unwrap();
            let order = ab.field_order();
            let r2 = AlgElem::basis(d8(), d8().rotation(2), order).unwrap();
            let four = Rational::from_integer(4);
            let place = |blk: &[CycNum; 4], slots: [usize; 4], scales: [&Rational; 4]| {
                let mut p: [CycNum; 4] = std::array::from_fn(|_| CycNum::zero(order).unwrap());
                for ((v, s), c) in blk.iter().zip(slots).zip(scales) {
                    p[s] = v.lift(order).unwrap().scale(c);
                }
                p
            };
            // ψ(ab): constant ← quadratic, r ← 4k₁k₂+2k₁, rs ← 4k₁k₃, s ← 4k₁k₄.
            let want_ab = ideal_elem(place(&eqs[0], [2, 3, 1, 0], [&four, &four, &Rational::ONE, &Rational::ONE]), order);
            // ψ(b): r ← 4k₅k₆, s ← 4k₅k₈, rs ← 4k₅k₇+2k₅.
            let want_b = ideal_elem(place(&eqs[1], [1, 3, 2, 0], [&four, &four, &Rational::ONE, &Rational::ONE]), order);
            // ψ(a): r ← 4k₉k₁₀, rs ← 4k₉k₁₁, s ← 4k₉k₁₂+2k₉.
            let want_a = ideal_elem(place(&eqs[2], [1, 2, 3, 0], [&four, &four, &Rational::ONE, &Rational::ONE]), order);
            prop_assert_eq!(ab.checked_mul(&ab).unwrap().checked_sub(&r2).unwrap(), want_ab);
            prop_assert_eq!(b.checked_mul(&b).unwrap().checked_sub(&r2).unwrap(), want_b);
            prop_assert_eq!(a.checked_mul(&a).unwrap().checked_sub(&r2).unwrap(), want_a);
        }
    }
}
