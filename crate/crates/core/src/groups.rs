//! Dihedral groups `D_2n = <r, s | r^n = s^2 = 1, srs = r^-1>` and generalized
//! quaternion groups `Q_4m = <a, b | a^2m = 1, a^m = b^2, b^-1 a b = a^-1>`.
//!
//! Both are `C_L ⋊ <t>` with `t x t^-1 = x^-1` and `t^2 = x^c`: for `D_2n`,
//! `L = n` and `c = 0`; for `Q_4m`, `L = 2m` and `c = m`. Elements are stored
//! in the normal form `x^i t^j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupKind {
    /// `D_2n`, of order `2n`.
    Dihedral { n: u32 },
    /// `Q_4m`, of order `4m`.
    Quaternion { m: u32 },
}

/// Normal form `r^rot s^flip` (dihedral) or `a^rot b^flip` (quaternion).
///
/// Ordering is by `(flip, rot)`, matching [`GroupKind::enumerate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    flip: u8,
    rot: u32,
}

impl GroupElem {
    pub const IDENTITY: GroupElem = GroupElem { flip: 0, rot: 0 };

    pub fn rot(self) -> u32 {
        self.rot
    }

    pub fn flip(self) -> u8 {
        self.flip
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }
}

impl GroupKind {
    pub fn dihedral(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("dihedral group needs n >= 1".into()));
        }
        Ok(GroupKind::Dihedral { n })
    }

    pub fn quaternion(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidGroup("quaternion group needs m >= 1".into()));
        }
        Ok(GroupKind::Quaternion { m })
    }

    pub fn is_dihedral(self) -> bool {
        matches!(self, GroupKind::Dihedral { .. })
    }

    /// `|G|`.
    pub fn order(self) -> usize {
        2 * self.cyclic_order() as usize
    }

    /// Order `L` of the cyclic normal subgroup `<r>` or `<a>`.
    pub fn cyclic_order(self) -> u32 {
        match self {
            GroupKind::Dihedral { n } => n,
            GroupKind::Quaternion { m } => 2 * m,
        }
    }

    /// `c` with `t^2 = x^c`.
    pub fn twist(self) -> u32 {
        match self {
            GroupKind::Dihedral { .. } => 0,
            GroupKind::Quaternion { m } => m,
        }
    }

    /// Generator symbols, e.g. `('r', 's')`.
    pub fn symbols(self) -> (char, char) {
        match self {
            GroupKind::Dihedral { .. } => ('r', 's'),
            GroupKind::Quaternion { .. } => ('a', 'b'),
        }
    }

    /// Validated constructor for a normal form.
    pub fn elem(self, rot: u32, flip: u8) -> Result<GroupElem> {
        if rot >= self.cyclic_order() || flip > 1 {
            let (x, t) = self.symbols();
            return Err(Error::InvalidElement {
                elem: format!("{x}^{rot}*{t}^{flip}"),
                group: self.to_string(),
            });
        }
        Ok(GroupElem { flip, rot })
    }

    /// `x^e`, exponent reduced modulo `L`.
    pub fn rotation(self, e: i64) -> GroupElem {
        GroupElem {
            flip: 0,
            rot: e.rem_euclid(self.cyclic_order() as i64) as u32,
        }
    }

    /// `x^e t`, exponent reduced modulo `L`.
    pub fn reflection(self, e: i64) -> GroupElem {
        GroupElem {
            flip: 1,
            rot: e.rem_euclid(self.cyclic_order() as i64) as u32,
        }
    }

    pub fn mul(self, x: GroupElem, y: GroupElem) -> GroupElem {
        let l = self.cyclic_order();
        if x.flip == 0 {
            GroupElem {
                flip: y.flip,
                rot: (x.rot + y.rot) % l,
            }
        } else {
            // x^i t x^k t^j = x^{i-k} t^{1+j}, and t^2 = x^c.
            let base = (x.rot + l - y.rot) % l;
            if y.flip == 0 {
                GroupElem { flip: 1, rot: base }
            } else {
                GroupElem {
                    flip: 0,
                    rot: (base + self.twist()) % l,
                }
            }
        }
    }

    pub fn inverse(self, x: GroupElem) -> GroupElem {
        let l = self.cyclic_order();
        if x.flip == 0 {
            GroupElem {
                flip: 0,
                rot: (l - x.rot) % l,
            }
        } else {
            GroupElem {
                flip: 1,
                rot: (x.rot + self.twist()) % l,
            }
        }
    }

    pub fn pow(self, x: GroupElem, e: u64) -> GroupElem {
        let mut acc = GroupElem::IDENTITY;
        for _ in 0..e % self.order() as u64 {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// All elements: rotations ascending, then `x^i t` ascending.
    pub fn enumerate(self) -> Vec<GroupElem> {
        (0..2u8)
            .flat_map(|flip| (0..self.cyclic_order()).map(move |rot| GroupElem { flip, rot }))
            .collect()
    }

    /// Position of `x` in [`enumerate`](Self::enumerate).
    pub fn index(self, x: GroupElem) -> usize {
        x.flip as usize * self.cyclic_order() as usize + x.rot as usize
    }

    pub fn elem_at(self, index: usize) -> GroupElem {
        let l = self.cyclic_order() as usize;
        GroupElem {
            flip: (index / l) as u8,
            rot: (index % l) as u32,
        }
    }

    /// Conjugacy classes, in character-table column order.
    ///
    /// - `D_2n`, `n = 2m+1`: `1, [s], [r], …, [r^m]`
    /// - `D_2n`, `n = 2m`: `1, [s], [rs], [r], …, [r^{m-1}], [r^m]`
    /// - `Q_4m`: `1, [a], …, [a^{m-1}], [a^m], [b], [ab]`
    ///
    /// Within a class the first element is its representative.
    pub fn conjugacy_classes(self) -> Vec<Vec<GroupElem>> {
        let pair = |i: u32| {
            let a = self.rotation(i as i64);
            let b = self.rotation(-(i as i64));
            if a == b {
                vec![a]
            } else {
                vec![a, b]
            }
        };
        let reflections = |parity: Option<u32>| -> Vec<GroupElem> {
            (0..self.cyclic_order())
                .filter(|i| parity.is_none_or(|p| i % 2 == p))
                .map(|i| self.reflection(i as i64))
                .collect()
        };
        let mut classes = vec![vec![GroupElem::IDENTITY]];
        match self {
            GroupKind::Dihedral { n } if n % 2 == 1 => {
                classes.push(reflections(None));
                classes.extend((1..=n / 2).map(pair));
            }
            GroupKind::Dihedral { n } => {
                let m = n / 2;
                classes.push(reflections(Some(0)));
                classes.push(reflections(Some(1)));
                classes.extend((1..m).map(pair));
                classes.push(vec![self.rotation(m as i64)]);
            }
            GroupKind::Quaternion { m } => {
                classes.extend((1..m).map(pair));
                classes.push(vec![self.rotation(m as i64)]);
                classes.push(reflections(Some(0)));
                classes.push(reflections(Some(1)));
            }
        }
        classes
    }

    /// Renders `x` as `1`, `r^3`, `r^2*s`, `a*b`.
    pub fn render(self, x: GroupElem) -> String {
        let (g, t) = self.symbols();
        match (x.rot, x.flip) {
            (0, 0) => "1".to_string(),
            (0, _) => t.to_string(),
            (1, 0) => g.to_string(),
            (1, _) => format!("{g}*{t}"),
            (i, 0) => format!("{g}^{i}"),
            (i, _) => format!("{g}^{i}*{t}"),
        }
    }

    /// LaTeX form: `\mathbf{1}`, `r^{3}`, `r^{2}s`, `rs`.
    pub fn render_latex(self, x: GroupElem) -> String {
        let (g, t) = self.symbols();
        let rot = match x.rot {
            0 => String::new(),
            1 => g.to_string(),
            i if i < 10 => format!("{g}^{i}"),
            i => format!("{g}^{{{i}}}"),
        };
        match (x.rot, x.flip) {
            (0, 0) => "\\mathbf{1}".to_string(),
            (_, 0) => rot,
            _ => format!("{rot}{t}"),
        }
    }

    /// Parses a word in the generators, e.g. `r^2*s`, `s*r`, `rs`, `a^-1b`, `1`.
    pub fn parse_elem(self, s: &str) -> Result<GroupElem> {
        let bad = || Error::InvalidElement {
            elem: s.to_string(),
            group: self.to_string(),
        };
        let (g, t) = self.symbols();
        let word: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if word.is_empty() {
            return Err(bad());
        }
        let mut acc = GroupElem::IDENTITY;
        let mut i = 0;
        while i < word.len() {
            let c = word[i];
            i += 1;
            let base = match c {
                '*' if i > 1 && i < word.len() => continue,
                '1' => GroupElem::IDENTITY,
                _ if c == g => self.rotation(1),
                _ if c == t => GroupElem { flip: 1, rot: 0 },
                _ => return Err(bad()),
            };
            let mut exp: i64 = 1;
            if word.get(i) == Some(&'^') {
                i += 1;
                let braced = word.get(i) == Some(&'{');
                if braced {
                    i += 1;
                }
                let start = i;
                if word.get(i) == Some(&'-') {
                    i += 1;
                }
                while word.get(i).is_some_and(|c| c.is_ascii_digit()) {
                    i += 1;
                }
                let digits: String = word[start..i].iter().collect();
                exp = digits.parse().map_err(|_| bad())?;
                if braced {
                    if word.get(i) != Some(&'}') {
                        return Err(bad());
                    }
                    i += 1;
                }
            }
            let factor = if exp >= 0 {
                self.pow(base, exp as u64)
            } else {
                self.inverse(self.pow(base, exp.unsigned_abs()))
            };
            acc = self.mul(acc, factor);
        }
        Ok(acc)
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Dihedral { n } => write!(f, "D_{}", 2 * n),
            GroupKind::Quaternion { m } => write!(f, "Q_{}", 4 * m),
        }
    }
}

/// Accepts `D8`, `D_8`, `Q8`, `Q_8` (the subscript is the group order).
impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid group name {s:?}"));
        let s = s.trim();
        let (head, rest) = s.split_at(s.chars().next().ok_or_else(bad)?.len_utf8());
        let order: u32 = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
        match head {
            "D" | "d" if order % 2 == 0 => GroupKind::dihedral(order / 2),
            "Q" | "q" if order % 4 == 0 => GroupKind::quaternion(order / 4),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn small_kinds(max_order: usize) -> Vec<GroupKind> {
        let mut v: Vec<GroupKind> = (1..=(max_order / 2) as u32)
            .map(|n| GroupKind::Dihedral { n })
            .collect();
        v.extend((1..=(max_order / 4) as u32).map(|m| GroupKind::Quaternion { m }));
        v
    }

    #[test]
    fn multiplication_examples() {
        let d = GroupKind::dihedral(5).unwrap();
        let s = d.reflection(0);
        let r = d.rotation(1);
        assert_eq!(d.mul(s, r), d.reflection(4));
        let q = GroupKind::quaternion(3).unwrap();
        let b = q.reflection(0);
        let ab = q.reflection(1);
        assert_eq!(q.mul(b, b), q.rotation(3));
        assert_eq!(q.mul(ab, ab), q.rotation(3));
    }

    #[test]
    fn inverse_examples() {
        let d = GroupKind::dihedral(6).unwrap();
        assert_eq!(d.inverse(d.rotation(1)), d.rotation(5));
        for i in 0..6 {
            assert_eq!(d.inverse(d.reflection(i)), d.reflection(i));
        }
        let q = GroupKind::quaternion(4).unwrap();
        assert_eq!(q.inverse(q.reflection(0)), q.reflection(4));
    }

    #[test]
    fn enumerate_sizes() {
        assert_eq!(GroupKind::dihedral(3).unwrap().enumerate().len(), 6);
        assert_eq!(GroupKind::quaternion(2).unwrap().enumerate().len(), 8);
        assert_eq!(GroupKind::dihedral(1).unwrap().enumerate().len(), 2);
        for k in small_kinds(40) {
            for (i, g) in k.enumerate().into_iter().enumerate() {
                assert_eq!(k.index(g), i);
                assert_eq!(k.elem_at(i), g);
            }
        }
        assert!(GroupKind::dihedral(0).is_err());
        assert!(GroupKind::quaternion(0).is_err());
    }

    #[test]
    fn group_axioms_exhaustive() {
        for k in small_kinds(64) {
            let elems = k.enumerate();
            for &x in &elems {
                assert_eq!(k.mul(x, GroupElem::IDENTITY), x);
                assert_eq!(k.mul(GroupElem::IDENTITY, x), x);
                assert!(k.mul(x, k.inverse(x)).is_identity(), "{k} {x:?}");
                assert!(k.mul(k.inverse(x), x).is_identity());
                for &y in &elems {
                    let xy = k.mul(x, y);
                    for &z in &elems {
                        assert_eq!(k.mul(xy, z), k.mul(x, k.mul(y, z)), "{k}");
                    }
                }
            }
        }
    }

    #[test]
    fn defining_relations() {
        for n in 1..20 {
            let d = GroupKind::dihedral(n).unwrap();
            let (r, s) = (d.rotation(1), d.reflection(0));
            assert!(d.pow(r, n as u64).is_identity());
            assert!(d.mul(s, s).is_identity());
            assert_eq!(d.mul(d.mul(s, r), s), d.inverse(r));
        }
        for m in 1..20 {
            let q = GroupKind::quaternion(m).unwrap();
            let (a, b) = (q.rotation(1), q.reflection(0));
            assert!(q.pow(a, 2 * m as u64).is_identity());
            assert_eq!(q.pow(a, m as u64), q.mul(b, b));
            assert_eq!(q.mul(q.mul(q.inverse(b), a), b), q.inverse(a));
        }
    }

    fn sizes(k: GroupKind) -> Vec<usize> {
        k.conjugacy_classes().iter().map(Vec::len).collect()
    }

    #[test]
    fn class_examples() {
        let mut d5 = sizes(GroupKind::dihedral(5).unwrap());
        d5.sort();
        assert_eq!(d5, vec![1, 2, 2, 5]);
        let d4 = GroupKind::dihedral(4).unwrap();
        assert_eq!(sizes(d4), vec![1, 2, 2, 2, 1]);
        let reps: Vec<String> = d4
            .conjugacy_classes()
            .iter()
            .map(|c| d4.render(c[0]))
            .collect();
        assert_eq!(reps, ["1", "s", "r*s", "r", "r^2"]);
        let q2 = GroupKind::quaternion(2).unwrap();
        let got: BTreeSet<BTreeSet<String>> = q2
            .conjugacy_classes()
            .iter()
            .map(|c| c.iter().map(|&g| q2.render(g)).collect())
            .collect();
        let want: BTreeSet<BTreeSet<String>> = [
            vec!["1"],
            vec!["a^2"],
            vec!["a", "a^3"],
            vec!["b", "a^2*b"],
            vec!["a*b", "a^3*b"],
        ]
        .iter()
        .map(|c| c.iter().map(|s| s.to_string()).collect())
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn classes_are_conjugation_invariant_partitions() {
        for k in small_kinds(64) {
            let elems = k.enumerate();
            let classes = k.conjugacy_classes();
            let mut seen = BTreeSet::new();
            for c in &classes {
                assert_eq!(k.order() % c.len(), 0);
                let set: BTreeSet<_> = c.iter().copied().collect();
                assert_eq!(set.len(), c.len());
                for &g in &elems {
                    let conj: BTreeSet<_> = c
                        .iter()
                        .map(|&x| k.mul(k.mul(g, x), k.inverse(g)))
                        .collect();
                    assert_eq!(conj, set, "{k}");
                }
                for x in set {
                    assert!(seen.insert(x), "{k}: classes overlap");
                }
            }
            assert_eq!(seen.len(), k.order());
            // Orbit of the representative is exactly its class.
            for c in &classes {
                let orbit: BTreeSet<_> = elems
                    .iter()
                    .map(|&g| k.mul(k.mul(g, c[0]), k.inverse(g)))
                    .collect();
                assert_eq!(orbit, c.iter().copied().collect(), "{k}");
            }
        }
    }

    #[test]
    fn render_and_parse() {
        let d = GroupKind::dihedral(4).unwrap();
        assert_eq!(d.render(GroupElem::IDENTITY), "1");
        assert_eq!(d.render(d.rotation(3)), "r^3");
        assert_eq!(d.render(d.reflection(2)), "r^2*s");
        let q = GroupKind::quaternion(3).unwrap();
        assert_eq!(q.render(q.reflection(5)), "a^5*b");
        for k in small_kinds(40) {
            for g in k.enumerate() {
                assert_eq!(k.parse_elem(&k.render(g)).unwrap(), g);
            }
        }
        assert_eq!(d.parse_elem("s*r").unwrap(), d.reflection(3));
        assert_eq!(d.parse_elem("rs").unwrap(), d.reflection(1));
        assert_eq!(d.parse_elem("r^{-1}").unwrap(), d.rotation(3));
        assert_eq!(q.parse_elem("b b").unwrap(), q.rotation(3));
        assert!(d.parse_elem("a").is_err());
        assert!(d.parse_elem("").is_err());
        assert!(d.parse_elem("r^").is_err());
        assert!(d.elem(4, 0).is_err());
    }

    #[test]
    fn latex_rendering() {
        let d = GroupKind::dihedral(4).unwrap();
        assert_eq!(d.render_latex(GroupElem::IDENTITY), "\\mathbf{1}");
        assert_eq!(d.render_latex(d.reflection(1)), "rs");
        assert_eq!(d.render_latex(d.reflection(3)), "r^3s");
        assert_eq!(d.render_latex(d.rotation(2)), "r^2");
        let big = GroupKind::dihedral(20).unwrap();
        assert_eq!(big.render_latex(big.rotation(12)), "r^{12}");
    }

    #[test]
    fn kind_names() {
        assert_eq!("D8".parse::<GroupKind>().unwrap(), GroupKind::Dihedral { n: 4 });
        assert_eq!("Q_12".parse::<GroupKind>().unwrap(), GroupKind::Quaternion { m: 3 });
        assert!("Q6".parse::<GroupKind>().is_err());
        let j = serde_json::to_string(&GroupKind::Dihedral { n: 4 }).unwrap();
        assert_eq!(j, r#"{"type":"dihedral","n":4}"#);
    }
}
