//! Character tables of `D_2n` and `Q_4m` in exact arithmetic.
//!
//! Entries are built from their closed forms (`±1`, `±i`, `2 cos`) as short
//! sums of roots of unity, then reduced. Inner products are accumulated on the
//! unreduced sums and reduced once, which is exact because reduction modulo
//! `Φ_N` is a ring homomorphism commuting with `ζ ↦ ζ^{-1}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{lcm, reduce_root_sum, CycAccumulator, CycNum, Rational, RootSum};
use crate::groups::{GroupElem, GroupKind};

#[derive(Clone, Debug)]
pub struct CharacterTable {
    kind: GroupKind,
    order: u32,
    classes: Vec<Vec<GroupElem>>,
    class_sizes: Vec<usize>,
    /// Class index of every element, in enumeration order.
    class_of: Vec<usize>,
    row_labels: Vec<String>,
    rows: Vec<Vec<CycNum>>,
    sums: Vec<Vec<RootSum>>,
}

/// Field order shared by the table and the representation matrices.
pub fn table_order(kind: GroupKind) -> u32 {
    match kind {
        GroupKind::Dihedral { n } => lcm(2 * n, 4),
        GroupKind::Quaternion { m } => lcm(4 * m, 4),
    }
}

fn int(v: i64) -> RootSum {
    vec![(0, Rational::from_integer(v))]
}

fn sign(e: u32) -> RootSum {
    int(if e % 2 == 0 { 1 } else { -1 })
}

/// `2 cos(2π e / N) = ζ_N^e + ζ_N^-e`.
fn two_cos(e: i64) -> RootSum {
    vec![(e, Rational::ONE), (-e, Rational::ONE)]
}

impl CharacterTable {
    pub fn new(kind: GroupKind) -> Self {
        let order = table_order(kind);
        let classes = kind.conjugacy_classes();
        let mut rows: Vec<(String, Vec<RootSum>)> = Vec::new();
        let quarter = order as i64 / 4;
        let i_unit = vec![(quarter, Rational::ONE)];
        let minus_i = vec![(-quarter, Rational::ONE)];
        match kind {
            GroupKind::Dihedral { n } if n % 2 == 1 => {
                // Columns: 1, [s], [r], …, [r^m].
                let m = n / 2;
                let rot = |f: &dyn Fn(u32) -> RootSum| (1..=m).map(f).collect::<Vec<_>>();
                let with = |a: RootSum, b: RootSum, rest: Vec<RootSum>| {
                    let mut v = vec![a, b];
                    v.extend(rest);
                    v
                };
                rows.push(("chi1".into(), with(int(1), int(1), rot(&|_| int(1)))));
                rows.push(("chi2".into(), with(int(1), int(-1), rot(&|_| int(1)))));
                let step = order as i64 / n as i64;
                for k in 1..=m {
                    let vals = rot(&|i| two_cos(step * (i * k) as i64));
                    rows.push((format!("rho{k}"), with(int(2), int(0), vals)));
                }
            }
            GroupKind::Dihedral { n } => {
                // Columns: 1, [s], [rs], [r], …, [r^{m-1}], [r^m].
                let m = n / 2;
                let lin = |s: i64, rs: i64, alt: bool| {
                    let mut v = vec![int(1), int(s), int(rs)];
                    v.extend((1..=m).map(|i| if alt { sign(i) } else { int(1) }));
                    v
                };
                rows.push(("chi1".into(), lin(1, 1, false)));
                rows.push(("chi2".into(), lin(1, -1, true)));
                rows.push(("chi3".into(), lin(-1, 1, true)));
                rows.push(("chi4".into(), lin(-1, -1, false)));
                let step = order as i64 / n as i64;
                for k in 1..m {
                    let mut v = vec![int(2), int(0), int(0)];
                    v.extend((1..m).map(|i| two_cos(step * (i * k) as i64)));
                    v.push(vec![(0, Rational::from_integer(2 * if k % 2 == 0 { 1 } else { -1 }))]);
                    rows.push((format!("rho{k}"), v));
                }
            }
            GroupKind::Quaternion { m } => {
                // Columns: 1, [a], …, [a^{m-1}], [a^m], [b], [ab].
                let lin = |alt: bool, b: RootSum, ab: RootSum| {
                    let mut v = vec![int(1)];
                    v.extend((1..=m).map(|i| if alt { sign(i) } else { int(1) }));
                    v.push(b);
                    v.push(ab);
                    v
                };
                rows.push(("chi1".into(), lin(false, int(1), int(1))));
                rows.push(("chi2".into(), lin(false, int(-1), int(-1))));
                if m % 2 == 1 {
                    rows.push(("chi3".into(), lin(true, i_unit.clone(), minus_i.clone())));
                    rows.push(("chi4".into(), lin(true, minus_i, i_unit)));
                } else {
                    rows.push(("chi3".into(), lin(true, int(1), int(-1))));
                    rows.push(("chi4".into(), lin(true, int(-1), int(1))));
                }
                // 2 cos(ikπ/m) = ζ_{4m}^{2ik} + ζ_{4m}^{-2ik}.
                let step = order as i64 / (2 * m as i64);
                for k in 1..m {
                    let mut v = vec![int(2)];
                    v.extend((1..m).map(|i| two_cos(step * (i * k) as i64)));
                    v.push(vec![(0, Rational::from_integer(2 * if k % 2 == 0 { 1 } else { -1 }))]);
                    v.push(int(0));
                    v.push(int(0));
                    rows.push((format!("rho{k}"), v));
                }
            }
        }
        let mut class_of = vec![0; kind.order()];
        for (c, class) in classes.iter().enumerate() {
            for g in class {
                class_of[kind.index(*g)] = c;
            }
        }
        let (row_labels, sums): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        let rows = sums
            .iter()
            .map(|row: &Vec<RootSum>| {
                row.iter()
                    .map(|s| reduce_root_sum(order, s).expect("valid order"))
                    .collect()
            })
            .collect();
        CharacterTable {
            kind,
            order,
            class_sizes: classes.iter().map(Vec::len).collect(),
            classes,
            class_of,
            row_labels,
            rows,
            sums,
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn field_order(&self) -> u32 {
        self.order
    }

    pub fn classes(&self) -> &[Vec<GroupElem>] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn representatives(&self) -> Vec<GroupElem> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn rows(&self) -> &[Vec<CycNum>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Row index of a label such as `"chi3"` or `"rho2"`.
    pub fn row_index(&self, label: &str) -> Result<usize> {
        self.row_labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Parse(format!("no character {label:?} for {}", self.kind)))
    }

    pub fn class_index(&self, g: GroupElem) -> usize {
        self.class_of[self.kind.index(g)]
    }

    /// `χ_row(g)`.
    pub fn value(&self, row: usize, g: GroupElem) -> &CycNum {
        &self.rows[row][self.class_index(g)]
    }

    /// `χ_row(g)` as an unreduced root sum.
    pub fn value_root_sum(&self, row: usize, g: GroupElem) -> &RootSum {
        &self.sums[row][self.class_index(g)]
    }

    /// Degree `χ(1)`.
    pub fn degree(&self, row: usize) -> i64 {
        if self.row_labels[row].starts_with("rho") {
            2
        } else {
            1
        }
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i < self.rows.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i as i64,
                lo: 0,
                hi: self.rows.len() as i64 - 1,
            })
        }
    }

    /// `⟨χ_i, χ_j⟩ = (1/|G|) Σ_c |c| χ_i(c) conj(χ_j(c))`.
    pub fn inner_product(&self, i: usize, j: usize) -> Result<CycNum> {
        self.check_row(i)?;
        self.check_row(j)?;
        let mut acc = CycAccumulator::new(self.order)?;
        let g = self.kind.order() as i64;
        for (c, size) in self.class_sizes.iter().enumerate() {
            let w = Rational::new(*size as i64, g);
            acc.add_root_product_conj(&self.sums[i][c], &self.sums[j][c], &w);
        }
        Ok(acc.finish())
    }

    /// `Σ_χ χ(c) conj(χ(c'))` over all rows.
    pub fn column_product(&self, c: usize, d: usize) -> CycNum {
        let mut acc = CycAccumulator::new(self.order).expect("valid order");
        for row in &self.sums {
            acc.add_root_product_conj(&row[c], &row[d], &Rational::ONE);
        }
        acc.finish()
    }

    /// Checks both orthogonality relations on every ordered pair.
    pub fn verify_orthogonality(&self) -> OrthogonalityReport {
        let n = self.rows.len();
        let mut row_failures = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.inner_product(i, j).expect("valid rows");
                let want = Rational::from_integer((i == j) as i64);
                if v.as_rational() != Some(&want) {
                    row_failures.push((i, j));
                }
            }
        }
        let mut col_failures = Vec::new();
        let g = self.kind.order() as i64;
        for c in 0..self.classes.len() {
            for d in 0..self.classes.len() {
                let v = self.column_product(c, d);
                let want = if c == d {
                    Rational::new(g, self.class_sizes[c] as i64)
                } else {
                    Rational::ZERO
                };
                if v.as_rational() != Some(&want) {
                    col_failures.push((c, d));
                }
            }
        }
        let degree_sum: i64 = (0..n).map(|r| self.degree(r).pow(2)).sum();
        OrthogonalityReport {
            group: self.kind,
            rows: n,
            row_pairs: n * n,
            column_pairs: self.classes.len().pow(2),
            row_failures,
            column_failures: col_failures,
            degree_square_sum: degree_sum as usize,
            group_order: self.kind.order(),
        }
    }

    /// Column headers `"rep (size)"`.
    pub fn headers(&self) -> Vec<String> {
        self.classes
            .iter()
            .map(|c| format!("{} ({})", self.kind.render(c[0]), c.len()))
            .collect()
    }

    /// Wide CSV: one row per character; each class gives an exact column and
    /// an `approx` column with the complex value.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["character".to_string()];
        for h in self.headers() {
            header.push(h.clone());
            header.push(format!("{h} approx"));
        }
        w.write_record(&header).expect("in-memory write");
        for (label, row) in self.row_labels.iter().zip(&self.rows) {
            let mut rec = vec![label.clone()];
            for v in row {
                rec.push(v.to_string());
                rec.push(format_complex(v.to_complex()));
            }
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Class {
            representative: String,
            size: usize,
            elements: Vec<String>,
        }
        #[derive(Serialize)]
        struct Row<'a> {
            label: &'a str,
            values: &'a [CycNum],
            approx: Vec<[f64; 2]>,
        }
        let classes: Vec<Class> = self
            .classes
            .iter()
            .map(|c| Class {
                representative: self.kind.render(c[0]),
                size: c.len(),
                elements: c.iter().map(|g| self.kind.render(*g)).collect(),
            })
            .collect();
        let rows: Vec<Row> = self
            .row_labels
            .iter()
            .zip(&self.rows)
            .map(|(l, r)| Row {
                label: l,
                values: r,
                approx: r
                    .iter()
                    .map(|v| {
                        let (a, b) = v.to_complex();
                        [a, b]
                    })
                    .collect(),
            })
            .collect();
        serde_json::json!({
            "group": self.kind,
            "field_order": self.order,
            "headers": self.headers(),
            "classes": classes,
            "rows": rows,
        })
    }
}

/// Free-function form.
pub fn character_table(kind: GroupKind) -> CharacterTable {
    CharacterTable::new(kind)
}

fn format_complex((re, im): (f64, f64)) -> String {
    let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im == 0.0 {
        format!("{re:.10}")
    } else {
        format!("{re:.10}{im:+.10}i")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityReport {
    pub group: GroupKind,
    pub rows: usize,
    pub row_pairs: usize,
    pub column_pairs: usize,
    pub row_failures: Vec<(usize, usize)>,
    pub column_failures: Vec<(usize, usize)>,
    pub degree_square_sum: usize,
    pub group_order: usize,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.row_failures.is_empty()
            && self.column_failures.is_empty()
            && self.degree_square_sum == self.group_order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(t: &CharacterTable, label: &str) -> Vec<CycNum> {
        t.rows()[t.row_index(label).unwrap()].clone()
    }

    fn ints(order: u32, v: &[i64]) -> Vec<CycNum> {
        v.iter().map(|&x| CycNum::from_integer(order, x).unwrap()).collect()
    }

    fn all_kinds(max_order: usize) -> impl Iterator<Item = GroupKind> {
        (1..=(max_order / 2) as u32)
            .map(|n| GroupKind::Dihedral { n })
            .chain((1..=(max_order / 4) as u32).map(|m| GroupKind::Quaternion { m }))
    }

    #[test]
    fn table_examples() {
        let d8 = CharacterTable::new(GroupKind::dihedral(4).unwrap());
        assert_eq!(row(&d8, "rho1"), ints(8, &[2, 0, 0, 0, -2]));
        assert_eq!(d8.headers(), ["1 (1)", "s (2)", "r*s (2)", "r (2)", "r^2 (1)"]);
        let q8 = CharacterTable::new(GroupKind::quaternion(2).unwrap());
        assert_eq!(row(&q8, "chi3"), ints(8, &[1, -1, 1, 1, -1]));
        let q12 = CharacterTable::new(GroupKind::quaternion(3).unwrap());
        let i = CycNum::root(4, 1).unwrap().lift(12).unwrap();
        let chi3 = q12.row_index("chi3").unwrap();
        let q = q12.kind();
        assert_eq!(q12.value(chi3, q.reflection(0)), &i);
        assert_eq!(q12.value(chi3, q.reflection(1)), &-&i);
    }

    #[test]
    fn inner_product_examples() {
        let d10 = CharacterTable::new(GroupKind::dihedral(5).unwrap());
        assert!(d10.inner_product(0, 0).unwrap().is_one());
        let rho1 = d10.row_index("rho1").unwrap();
        assert!(d10.inner_product(0, rho1).unwrap().is_zero());
        let d14 = CharacterTable::new(GroupKind::dihedral(7).unwrap());
        let r = d14.row_index("rho1").unwrap();
        assert!(d14.inner_product(r, r).unwrap().is_one());
        assert!(d14.inner_product(99, 0).is_err());
    }

    #[test]
    fn orthogonality_small() {
        let rep = CharacterTable::new(GroupKind::dihedral(4).unwrap()).verify_orthogonality();
        assert!(rep.passed());
        assert_eq!(rep.row_pairs, 25);
        assert!(CharacterTable::new(GroupKind::quaternion(2).unwrap())
            .verify_orthogonality()
            .passed());
    }

    /// Naive inner product in reduced arithmetic, against the root-sum path.
    #[test]
    fn inner_product_matches_reduced_arithmetic() {
        for k in all_kinds(48) {
            let t = CharacterTable::new(k);
            let g = Rational::new(1, k.order() as i64);
            for i in 0..t.num_rows() {
                for j in 0..t.num_rows() {
                    let mut acc = CycNum::zero(t.field_order()).unwrap();
                    for (c, size) in t.class_sizes().iter().enumerate() {
                        let p = &t.rows()[i][c] * &t.rows()[j][c].conj();
                        acc = &acc + &p.scale(&Rational::from_integer(*size as i64));
                    }
                    assert_eq!(acc.scale(&g), t.inner_product(i, j).unwrap(), "{k} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn structure_invariants() {
        for k in all_kinds(400) {
            let t = CharacterTable::new(k);
            assert_eq!(t.num_rows(), t.classes().len(), "{k}");
            assert_eq!(t.class_sizes().iter().sum::<usize>(), k.order());
            let deg: i64 = (0..t.num_rows()).map(|r| t.degree(r).pow(2)).sum();
            assert_eq!(deg as usize, k.order(), "{k}");
            assert!(t.rows()[0].iter().all(CycNum::is_one));
            for r in 0..t.num_rows() {
                assert_eq!(
                    t.rows()[r][0].as_rational(),
                    Some(&Rational::from_integer(t.degree(r)))
                );
            }
        }
    }

    #[test]
    fn linear_characters_are_multiplicative() {
        for k in all_kinds(80) {
            let t = CharacterTable::new(k);
            let elems = k.enumerate();
            for r in (0..t.num_rows()).filter(|&r| t.degree(r) == 1) {
                for &g in &elems {
                    for &h in &elems {
                        let gh = t.value(r, k.mul(g, h));
                        assert_eq!(gh, &(t.value(r, g) * t.value(r, h)), "{k} row {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_tables() {
        let d2 = CharacterTable::new(GroupKind::dihedral(1).unwrap());
        assert_eq!(d2.row_labels(), ["chi1", "chi2"]);
        let d4 = CharacterTable::new(GroupKind::dihedral(2).unwrap());
        assert_eq!(d4.num_rows(), 4);
        let q4 = CharacterTable::new(GroupKind::quaternion(1).unwrap());
        assert_eq!(q4.num_rows(), 4);
        for t in [d2, d4, q4] {
            assert!(t.verify_orthogonality().passed());
        }
    }

    #[test]
    fn csv_and_json() {
        let t = CharacterTable::new(GroupKind::dihedral(4).unwrap());
        let csv = t.to_csv();
        let first = csv.lines().next().unwrap();
        assert!(first.starts_with("character,1 (1),1 (1) approx,s (2),"));
        assert_eq!(csv.lines().count(), 6);
        let j = t.to_json();
        assert_eq!(j["rows"][4]["label"], "rho1");
        assert_eq!(j["classes"][2]["representative"], "r*s");
        assert_eq!(j["rows"][4]["values"][4]["coeffs"][0], "-2");
    }
}
