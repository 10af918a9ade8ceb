//! Text, LaTeX and JSON forms of [`AlgElem`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::AlgElem;
use crate::exactnum::{CycNum, Rational};
use crate::groups::{GroupElem, GroupKind};

/// Largest positive rational `c` with every coefficient of `x` in `c·Z[ζ]`.
fn content(x: &AlgElem) -> Rational {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for (_, c) in x.terms() {
        for (_, q) in c.nonzero_terms() {
            g = g.gcd(&q.numer());
            l = l.lcm(&q.denom());
        }
    }
    if g.is_zero() {
        return Rational::ONE;
    }
    Rational::from_bigints(g.abs(), l).expect("nonzero denominator")
}

enum Coeff {
    /// A nonzero rational.
    Rational(Rational),
    Cyclotomic(CycNum),
}

fn split(x: &AlgElem) -> (Rational, Vec<(GroupElem, Coeff)>) {
    let c = content(x);
    let inv = c.recip().expect("content is positive");
    let terms = x
        .terms()
        .map(|(g, v)| {
            let v = v.scale(&inv);
            let coeff = match v.as_rational() {
                Some(q) => Coeff::Rational(q.clone()),
                None => Coeff::Cyclotomic(v),
            };
            (g, coeff)
        })
        .collect();
    (c, terms)
}

/// Plain-text form, e.g. `1/4*(1 - r^2 + r*s - r^3*s)`.
pub fn to_text(x: &AlgElem) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let kind = x.kind();
    let (c, terms) = split(x);
    let mut body = String::new();
    for (idx, (g, coeff)) in terms.iter().enumerate() {
        let elem = kind.render(*g);
        let (neg, text) = match coeff {
            Coeff::Rational(q) => {
                let mag = q.abs();
                let t = match (g.is_identity(), mag.is_one()) {
                    (true, _) => mag.to_string(),
                    (false, true) => elem,
                    (false, false) => format!("{mag}*{elem}"),
                };
                (q.is_negative(), t)
            }
            Coeff::Cyclotomic(v) if g.is_identity() => (false, format!("({v})")),
            Coeff::Cyclotomic(v) => (false, format!("({v})*{elem}")),
        };
        match (idx, neg) {
            (0, true) => body.push('-'),
            (0, false) => {}
            (_, true) => body.push_str(" - "),
            (_, false) => body.push_str(" + "),
        }
        body.push_str(&text);
    }
    if c.is_one() {
        body
    } else {
        format!("{c}*({body})")
    }
}

fn latex_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

fn latex_root(order: u32, j: usize) -> String {
    match (order, j) {
        (_, 0) => String::new(),
        (4, 1) => "i".into(),
        (_, 1) => format!("\\zeta_{{{order}}}"),
        (_, j) => format!("\\zeta_{{{order}}}^{{{j}}}"),
    }
}

/// LaTeX for a non-rational cyclotomic number as a `ζ`-polynomial.
fn latex_cyc(v: &CycNum) -> (String, usize) {
    let mut out = String::new();
    let mut count = 0;
    for (idx, (j, q)) in v.nonzero_terms().enumerate() {
        count += 1;
        let mag = q.abs();
        match (idx, q.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let root = latex_root(v.order(), j);
        if j == 0 || !mag.is_one() {
            out.push_str(&latex_rational(&mag));
        }
        out.push_str(&root);
    }
    (out, count)
}

/// LaTeX for a single number: a fraction when rational, else a
/// `ζ`-polynomial.
pub fn number_to_latex(v: &CycNum) -> String {
    match v.as_rational() {
        Some(q) if q.is_negative() => format!("-{}", latex_rational(&q.abs())),
        Some(q) => latex_rational(q),
        None => latex_cyc(v).0,
    }
}

/// LaTeX form mirroring the usual display, e.g.
/// `\frac{1}{4}(\mathbf{1} - r^2 + rs - r^3s)`.
pub fn to_latex(x: &AlgElem) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let kind = x.kind();
    let (c, terms) = split(x);
    let mut body = String::new();
    for (idx, (g, coeff)) in terms.iter().enumerate() {
        let elem = kind.render_latex(*g);
        let (neg, text) = match coeff {
            Coeff::Rational(q) => {
                let mag = q.abs();
                let t = if mag.is_one() {
                    elem
                } else {
                    format!("{}{elem}", latex_rational(&mag))
                };
                (q.is_negative(), t)
            }
            Coeff::Cyclotomic(v) => {
                let (s, n) = latex_cyc(v);
                let neg = n == 1 && s.starts_with('-');
                let s = if neg { s[1..].to_string() } else { s };
                let s = if n > 1 { format!("({s})") } else { s };
                (neg, format!("{s}{elem}"))
            }
        };
        match (idx, neg) {
            (0, true) => body.push('-'),
            (0, false) => {}
            (_, true) => body.push_str(" - "),
            (_, false) => body.push_str(" + "),
        }
        body.push_str(&text);
    }
    if c.is_one() {
        body
    } else {
        format!("{}({body})", latex_rational(&c))
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    elem: String,
    coeff: CycNum,
    #[serde(default, skip_deserializing)]
    approx: [f64; 2],
}

#[derive(Serialize, Deserialize)]
struct AlgElemWire {
    group: GroupKind,
    field_order: u32,
    terms: Vec<TermWire>,
}

/// `{"group": {...}, "field_order": N, "terms": [{"elem", "coeff", "approx"}]}`.
impl Serialize for AlgElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let kind = self.kind();
        AlgElemWire {
            group: kind,
            field_order: self.field_order(),
            terms: self
                .terms()
                .map(|(g, c)| {
                    let (re, im) = c.to_complex();
                    TermWire {
                        elem: kind.render(g),
                        coeff: c.clone(),
                        approx: [re, im],
                    }
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let w = AlgElemWire::deserialize(d)?;
        let terms = w
            .terms
            .into_iter()
            .map(|t| Ok((w.group.parse_elem(&t.elem)?, t.coeff)))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        AlgElem::from_terms(w.group, w.field_order, terms).map_err(D::Error::custom)
    }
}
