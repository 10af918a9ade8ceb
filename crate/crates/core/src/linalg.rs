//! 2×2 matrices and Gaussian elimination over a cyclotomic field.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{CycNum, Rational};

/// A 2×2 matrix over `Q(ζ_N)`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat2 {
    entries: [CycNum; 4],
}

impl Mat2 {
    pub fn new(entries: [CycNum; 4]) -> Result<Self> {
        let n = entries[0].order();
        if let Some(e) = entries.iter().find(|e| e.order() != n) {
            return Err(Error::OrderMismatch(n, e.order()));
        }
        Ok(Mat2 { entries })
    }

    pub fn from_rows(a: CycNum, b: CycNum, c: CycNum, d: CycNum) -> Result<Self> {
        Self::new([a, b, c, d])
    }

    pub fn zero(order: u32) -> Result<Self> {
        let z = CycNum::zero(order)?;
        Ok(Mat2 {
            entries: [z.clone(), z.clone(), z.clone(), z],
        })
    }

    pub fn identity(order: u32) -> Result<Self> {
        Self::unit(order, 1).and_then(|e| e.checked_add(&Self::unit(order, 2)?))
    }

    /// Matrix unit `E_jj` for `j ∈ {1, 2}`.
    pub fn unit(order: u32, j: usize) -> Result<Self> {
        if !(1..=2).contains(&j) {
            return Err(Error::IndexOutOfRange {
                index: j as i64,
                lo: 1,
                hi: 2,
            });
        }
        let mut m = Self::zero(order)?;
        m.entries[if j == 1 { 0 } else { 3 }] = CycNum::one(order)?;
        Ok(m)
    }

    /// Builds from rational entries.
    pub fn from_rationals(order: u32, e: [Rational; 4]) -> Result<Self> {
        let [a, b, c, d] = e;
        Self::from_rows(
            CycNum::from_rational(order, a)?,
            CycNum::from_rational(order, b)?,
            CycNum::from_rational(order, c)?,
            CycNum::from_rational(order, d)?,
        )
    }

    pub fn order(&self) -> u32 {
        self.entries[0].order()
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &CycNum {
        &self.entries[(row - 1) * 2 + (col - 1)]
    }

    pub fn entries(&self) -> &[CycNum; 4] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycNum::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        let [a, b, c, d] = &self.entries;
        a.is_one() && d.is_one() && b.is_zero() && c.is_zero()
    }

    fn check(&self, other: &Mat2) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn checked_add(&self, other: &Mat2) -> Result<Mat2> {
        self.check(other)?;
        let e = &self.entries;
        let f = &other.entries;
        Ok(Mat2 {
            entries: [&e[0] + &f[0], &e[1] + &f[1], &e[2] + &f[2], &e[3] + &f[3]],
        })
    }

    pub fn checked_sub(&self, other: &Mat2) -> Result<Mat2> {
        self.check(other)?;
        let e = &self.entries;
        let f = &other.entries;
        Ok(Mat2 {
            entries: [&e[0] - &f[0], &e[1] - &f[1], &e[2] - &f[2], &e[3] - &f[3]],
        })
    }

    pub fn checked_mul(&self, other: &Mat2) -> Result<Mat2> {
        self.check(other)?;
        let [a, b, c, d] = &self.entries;
        let [p, q, r, s] = &other.entries;
        Ok(Mat2 {
            entries: [
                &(a * p) + &(b * r),
                &(a * q) + &(b * s),
                &(c * p) + &(d * r),
                &(c * q) + &(d * s),
            ],
        })
    }

    pub fn scale(&self, c: &CycNum) -> Result<Mat2> {
        if c.order() != self.order() {
            return Err(Error::OrderMismatch(self.order(), c.order()));
        }
        Ok(Mat2 {
            entries: self.entries.clone().map(|e| &e * c),
        })
    }

    pub fn trace(&self) -> CycNum {
        &self.entries[0] + &self.entries[3]
    }

    pub fn det(&self) -> CycNum {
        let [a, b, c, d] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let inv_det = self.det().inverse()?;
        let [a, b, c, d] = &self.entries;
        Mat2::from_rows(d.clone(), -b, -c, a.clone())?.scale(&inv_det)
    }

    /// `self^e` by repeated multiplication.
    pub fn pow(&self, e: u32) -> Mat2 {
        let mut acc = Mat2::identity(self.order()).expect("valid order");
        for _ in 0..e {
            acc = acc.checked_mul(self).expect("same order");
        }
        acc
    }

    pub fn lift(&self, m: u32) -> Result<Mat2> {
        let [a, b, c, d] = &self.entries;
        Mat2::from_rows(a.lift(m)?, b.lift(m)?, c.lift(m)?, d.lift(m)?)
    }

    pub fn to_complex(&self) -> [[(f64, f64); 2]; 2] {
        let z = self.entries.clone().map(|e| e.to_complex());
        [[z[0], z[1]], [z[2], z[3]]]
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.entries;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}

/// `{"order": N, "entries": [[..],[..]], "approx": [[[re, im], ..], ..]}`.
impl Serialize for Mat2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let [a, b, c, d] = &self.entries;
        let mut st = s.serialize_struct("Mat2", 3)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("entries", &[[a, b], [c, d]])?;
        st.serialize_field("approx", &self.to_complex())?;
        st.end()
    }
}

/// Solves `A x = b` over `Q(ζ_N)`, setting free variables to zero.
///
/// `a` is row-major with `rows × cols` entries. Fails with
/// [`Error::Singular`] if the system is inconsistent.
pub fn solve(a: &[Vec<CycNum>], b: &[CycNum]) -> Result<Vec<CycNum>> {
    let rows = a.len();
    if rows != b.len() {
        return Err(Error::Singular("row count mismatch".into()));
    }
    let cols = a.first().map_or(0, Vec::len);
    let order = b.first().map_or(1, CycNum::order);
    let mut m: Vec<Vec<CycNum>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inverse()?;
        for c in col..=cols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=cols {
                    let t = &f * &m[row][c];
                    m[r][c] = &m[r][c] - &t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return Err(Error::Singular("inconsistent system".into()));
    }
    let mut x = vec![CycNum::zero(order)?; cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Ok(x)
}

/// Determinant of a square matrix by exact elimination.
pub fn det(a: &[Vec<CycNum>]) -> Result<CycNum> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Singular("matrix is not square".into()));
    }
    let order = a.first().and_then(|r| r.first()).map_or(1, CycNum::order);
    let mut m = a.to_vec();
    let mut d = CycNum::one(order)?;
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return CycNum::zero(order);
        };
        if p != col {
            m.swap(p, col);
            d = -&d;
        }
        d = &d * &m[col][col];
        let inv = m[col][col].inverse()?;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let t = &f * &m[col][c];
                m[r][c] = &m[r][c] - &t;
            }
        }
    }
    Ok(d)
}
