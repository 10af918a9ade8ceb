//! Primitive idempotents of `C[D_2n]` and `C[Q_4m]`.
//!
//! Central idempotents come from characters, `e_χ = (1/|G|) Σ χ(1) χ(g⁻¹) g`.
//! The one-dimensional ones and the splits `e_{ρ_k} = e' + e''` also have
//! closed forms, implemented here term by term with their original index
//! ranges. A generic pullback of matrix units serves as an oracle for the
//! closed forms.

use serde::Serialize;

use crate::chartab::{table_order, CharacterTable};
use crate::error::{Error, Result};
use crate::exactnum::{cos_frac, sin_frac, CycNum, Rational};
use crate::group_algebra::spectral::{transform, Spectrum};
use crate::group_algebra::AlgElem;
use crate::groups::{GroupElem, GroupKind};
use crate::linalg::{solve, Mat2};
use crate::reps::{rep, two_dim_count, Rep2};

/// `e_χ` for row `row` of `table`.
pub fn central_idempotent(table: &CharacterTable, row: usize) -> Result<AlgElem> {
    let kind = table.kind();
    if row >= table.num_rows() {
        return Err(Error::IndexOutOfRange {
            index: row as i64,
            lo: 0,
            hi: table.num_rows() as i64 - 1,
        });
    }
    let order = table.field_order();
    let deg = table.degree(row);
    let c = Rational::new(deg, kind.order() as i64);
    let terms = kind
        .enumerate()
        .into_iter()
        .map(|g| (g, table.value(row, kind.inverse(g)).scale(&c)));
    AlgElem::from_terms(kind, order, terms)
}

/// Accumulates `c·x^i t^j` terms with raw (unreduced) exponents.
struct Builder {
    kind: GroupKind,
    order: u32,
    terms: Vec<(GroupElem, CycNum)>,
}

impl Builder {
    fn new(kind: GroupKind) -> Self {
        Builder {
            kind,
            order: table_order(kind),
            terms: Vec::new(),
        }
    }

    fn q(&self, n: i64, d: i64) -> CycNum {
        CycNum::from_rational(self.order, Rational::new(n, d)).expect("valid order")
    }

    fn lifted(&self, x: Result<CycNum>) -> Result<CycNum> {
        x?.lift(self.order)
    }

    fn rot(&mut self, e: i64, c: CycNum) {
        self.terms.push((self.kind.rotation(e), c));
    }

    fn refl(&mut self, e: i64, c: CycNum) {
        self.terms.push((self.kind.reflection(e), c));
    }

    /// The accumulated sum times `c`.
    fn finish(self, c: &CycNum) -> Result<AlgElem> {
        AlgElem::from_terms(self.kind, self.order, self.terms)?.scale(c)
    }
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `e₁, e₂` for odd `n`; `e₁..e₄` for even `n`.
pub fn linear_idempotents_dihedral(n: u32) -> Result<Vec<AlgElem>> {
    let kind = GroupKind::dihedral(n)?;
    let b = Builder::new(kind);
    let one = b.q(1, 1);
    let n = n as i64;
    // Σ_{l=1}^{L} r^l ± Σ_{l=1}^{L} r^l s over 2L
    let full = |top: i64, sgn: i64| -> Result<AlgElem> {
        let mut b = Builder::new(kind);
        for l in 1..=top {
            b.rot(l, one.clone());
            b.refl(l, b.q(sgn, 1));
        }
        let c = b.q(1, 2 * top);
        b.finish(&c)
    };
    if n % 2 == 1 {
        return Ok(vec![full(n, 1)?, full(n, -1)?]);
    }
    let m = n / 2;
    let bracket = |shift: i64| -> Result<AlgElem> {
        let mut b = Builder::new(kind);
        b.rot(0, one.clone());
        for l in 1..=2 * m {
            b.refl(l, b.q(sign(l + shift), 1));
        }
        for l in 1..m {
            b.rot(l, b.q(sign(l), 1));
            b.rot(-l, b.q(sign(l), 1));
        }
        b.rot(m, b.q(sign(m), 1));
        let c = b.q(1, 4 * m);
        b.finish(&c)
    };
    Ok(vec![full(2 * m, 1)?, bracket(0)?, bracket(1)?, full(2 * m, -1)?])
}

/// `e₁..e₄`; for odd `m` the last two carry the factor `i`.
pub fn linear_idempotents_quaternion(m: u32) -> Result<Vec<AlgElem>> {
    let kind = GroupKind::quaternion(m)?;
    let b0 = Builder::new(kind);
    let one = b0.q(1, 1);
    let m = m as i64;
    let c = b0.q(1, 4 * m);
    // i realized as ζ_4 lifted to the common order.
    let i = b0.lifted(CycNum::root(4, 1))?;
    let full = |sgn: i64| -> Result<AlgElem> {
        let mut b = Builder::new(kind);
        for l in 1..=2 * m {
            b.rot(l, one.clone());
            b.refl(l, b.q(sgn, 1));
        }
        b.finish(&c)
    };
    let odd = m % 2 == 1;
    let bracket = |shift: i64| -> Result<AlgElem> {
        let mut b = Builder::new(kind);
        b.rot(0, one.clone());
        for l in 1..=2 * m {
            let s = b.q(sign(l + shift), 1);
            b.refl(l, if odd { &s * &i } else { s });
        }
        for l in 1..m {
            b.rot(l, b.q(sign(l), 1));
            b.rot(-l, b.q(sign(l), 1));
        }
        b.rot(m, b.q(if odd { -1 } else { 1 }, 1));
        b.finish(&c)
    };
    Ok(vec![full(1)?, full(-1)?, bracket(0)?, bracket(1)?])
}

/// Linear idempotents for either family.
pub fn linear_idempotents(kind: GroupKind) -> Result<Vec<AlgElem>> {
    match kind {
        GroupKind::Dihedral { n } => linear_idempotents_dihedral(n),
        GroupKind::Quaternion { m } => linear_idempotents_quaternion(m),
    }
}

/// `(e_{ρ_k}, e'_{ρ_k}, e''_{ρ_k})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Split {
    pub k: u32,
    pub central: AlgElem,
    pub prime: AlgElem,
    pub second: AlgElem,
}

fn check_k(kind: GroupKind, k: u32) -> Result<()> {
    // Same validation as the representation itself.
    rep(kind, k).map(|_| ())
}

/// The dihedral split, `θ = 2π/n`.
pub fn split_dihedral(n: u32, k: u32) -> Result<Split> {
    let kind = GroupKind::dihedral(n)?;
    check_k(kind, k)?;
    let b0 = Builder::new(kind);
    let n = n as i64;
    let k = k as i64;
    let cos = |l: i64| b0.lifted(cos_frac(2 * l * k, n as u32));
    let sin = |l: i64| b0.lifted(sin_frac(2 * l * k, n as u32));
    // (n odd, n = 2m+1): e = 2/(2m+1) Σ_{l=1}^{2m+1}, e', e'' over l = 1..2m.
    // (n even, n = 2m):  e = 1/m Σ_{l=1}^{2m},       e', e'' over l = 1..2m-1.
    let (c_central, top_central, top) = if n % 2 == 1 {
        (b0.q(2, n), n, n - 1)
    } else {
        (b0.q(1, n / 2), n, n - 1)
    };
    let mut central = Builder::new(kind);
    for l in 1..=top_central {
        central.rot(l, cos(l)?);
    }
    let half = |sgn: i64| -> Result<AlgElem> {
        let mut b = Builder::new(kind);
        b.rot(0, b.q(1, 1));
        for l in 1..=top {
            b.rot(l, cos(l)?);
            b.refl(l, sin(l)?.scale(&Rational::from_integer(sgn)));
        }
        let c = b.q(1, n);
        b.finish(&c)
    };
    Ok(Split {
        k: k as u32,
        central: central.finish(&c_central)?,
        prime: half(1)?,
        second: half(-1)?,
    })
}

/// The quaternion split, `ϑ = π/m`, `ε = e^{iϑ}`.
pub fn split_quaternion(m: u32, k: u32) -> Result<Split> {
    let kind = GroupKind::quaternion(m)?;
    check_k(kind, k)?;
    let b0 = Builder::new(kind);
    let order = b0.order;
    let m = m as i64;
    let k = k as i64;
    let cos = |l: i64| b0.lifted(cos_frac(l * k, m as u32));
    let eps = CycNum::root(order, 2 * k)?;
    let eps_inv = eps.conj();
    let i = b0.lifted(CycNum::root(4, 1))?;
    // ∓1/(2mi sin kϑ): minus for odd k, plus for even k.
    let denom = b0.lifted(sin_frac(k, m as u32))?.scale(&Rational::from_integer(2 * m));
    let pref = (&denom * &i).inverse()?.scale(&Rational::from_integer(sign(k)));
    let mut central = Builder::new(kind);
    for l in 1..=2 * m {
        central.rot(l, cos(l)?);
    }
    let mut prime = Builder::new(kind);
    let mut second = Builder::new(kind);
    for l in 1..=2 * m {
        let c = cos(l)?;
        // (ε^k a^{m+l} - a^{m+l-1}) cos lkϑ
        prime.rot(m + l, &eps * &c);
        prime.rot(m + l - 1, -&c);
        // (a^{m+l-1} - ε^{-k} a^{m+l}) cos lkϑ
        second.rot(m + l - 1, c.clone());
        second.rot(m + l, -&(&eps_inv * &c));
    }
    Ok(Split {
        k: k as u32,
        central: central.finish(&b0.q(1, m))?,
        prime: prime.finish(&pref)?,
        second: second.finish(&pref)?,
    })
}

/// Split for either family.
pub fn split(kind: GroupKind, k: u32) -> Result<Split> {
    match kind {
        GroupKind::Dihedral { n } => split_dihedral(n, k),
        GroupKind::Quaternion { m } => split_quaternion(m, k),
    }
}

/// The element of `C[G]·e` mapped to the matrix unit `E_jj` by `rep`.
///
/// Solves `Σ_g c_g ρ(g e) = E_jj`; since `ρ(e) = I` this is `Σ_g c_g ρ(g)`.
/// The answer `(Σ c_g g)·e` is unique because `C[G]e ≅ M_2(C)` through
/// `rep`, and is certified idempotent before it is returned.
pub fn pullback_matrix_unit(rep: &Rep2, e: &AlgElem, j: usize) -> Result<AlgElem> {
    let image = rep.apply(e)?;
    if !image.is_identity() {
        return Err(Error::Domain(format!(
            "idempotent does not map to the identity under rho{}",
            rep.k()
        )));
    }
    let order = image.order();
    let kind = rep.kind();
    let elems = kind.enumerate();
    let images: Vec<Mat2> = elems.iter().map(|g| rep.image(*g).lift(order)).collect::<Result<_>>()?;
    let a: Vec<Vec<CycNum>> = (0..4)
        .map(|slot| images.iter().map(|m| m.entries()[slot].clone()).collect())
        .collect();
    let target = Mat2::unit(order, j)?;
    let x = solve(&a, target.entries())?;
    let coeffs = AlgElem::from_terms(kind, order, elems.into_iter().zip(x))?;
    let out = coeffs.checked_mul(e)?;
    if !out.is_idempotent() || rep.apply(&out)? != target {
        return Err(Error::Singular("pullback failed certification".into()));
    }
    Ok(out)
}

/// A complete set of primitive orthogonal idempotents.
#[derive(Clone, Debug, Serialize)]
pub struct IdempotentSet {
    pub group: GroupKind,
    pub linear: Vec<AlgElem>,
    pub pairs: Vec<Split>,
}

impl IdempotentSet {
    /// Primitive idempotents in listing order: linear, then `e', e''` by `k`.
    pub fn primitive(&self) -> Vec<&AlgElem> {
        self.linear
            .iter()
            .chain(self.pairs.iter().flat_map(|p| [&p.prime, &p.second]))
            .collect()
    }

    /// The central ones: every linear idempotent and every `e_{ρ_k}`.
    pub fn central(&self) -> Vec<&AlgElem> {
        self.linear
            .iter()
            .chain(self.pairs.iter().map(|p| &p.central))
            .collect()
    }
}

pub fn complete_set(kind: GroupKind) -> Result<IdempotentSet> {
    let pairs = (1..=two_dim_count(kind))
        .map(|k| split(kind, k))
        .collect::<Result<_>>()?;
    Ok(IdempotentSet {
        group: kind,
        linear: linear_idempotents(kind)?,
        pairs,
    })
}

/// How products are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    /// Blockwise, through the exact transform.
    #[default]
    Spectral,
    /// Direct convolution in the group algebra.
    Convolution,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompleteSetReport {
    pub group: GroupKind,
    pub sum_is_one: bool,
    pub pairwise_orthogonal: bool,
    pub idempotent: bool,
    pub central: bool,
    pub decomposition: bool,
    pub count: usize,
    pub expected_count: usize,
    pub failures: Vec<String>,
}

impl CompleteSetReport {
    pub fn passed(&self) -> bool {
        self.sum_is_one
            && self.pairwise_orthogonal
            && self.idempotent
            && self.central
            && self.decomposition
            && self.count == self.expected_count
            && self.failures.is_empty()
    }
}

enum Products {
    Spectral(Vec<Spectrum>),
    Convolution(Vec<AlgElem>),
}

impl Products {
    fn new(engine: Engine, xs: &[&AlgElem]) -> Result<Self> {
        Ok(match engine {
            Engine::Spectral => Products::Spectral(xs.iter().map(|x| transform(x)).collect::<Result<_>>()?),
            Engine::Convolution => Products::Convolution(xs.iter().map(|x| (*x).clone()).collect()),
        })
    }

    fn is_idempotent(&self, i: usize) -> Result<bool> {
        Ok(match self {
            Products::Spectral(s) => s[i].checked_mul(&s[i])? == s[i],
            Products::Convolution(x) => x[i].is_idempotent(),
        })
    }

    fn product_is_zero(&self, i: usize, j: usize) -> Result<bool> {
        Ok(match self {
            Products::Spectral(s) => s[i].checked_mul(&s[j])?.is_zero(),
            Products::Convolution(x) => x[i].checked_mul(&x[j])?.is_zero(),
        })
    }
}

/// Certifies `Σ = 1`, idempotency, pairwise orthogonality, centrality of the
/// central elements, `e' + e'' = e_{ρ_k}`, and the count against `Σ χ(1)`.
pub fn verify_complete_set(set: &IdempotentSet, engine: Engine) -> Result<CompleteSetReport> {
    let kind = set.group;
    let prim = set.primitive();
    let mut failures = Vec::new();
    let name = |i: usize| -> String {
        let nl = set.linear.len();
        if i < nl {
            format!("e{}", i + 1)
        } else {
            let p = &set.pairs[(i - nl) / 2];
            let mark = if (i - nl) % 2 == 0 { "'" } else { "''" };
            format!("e{mark}_rho{}", p.k)
        }
    };

    let mut total = AlgElem::zero(kind, table_order(kind))?;
    for x in &prim {
        total = total.checked_add(x)?;
    }
    let sum_is_one = total.is_one();
    if !sum_is_one {
        failures.push("sum is not 1".to_string());
    }

    let products = Products::new(engine, &prim)?;
    let mut idempotent = true;
    for i in 0..prim.len() {
        if prim[i].is_zero() || !products.is_idempotent(i)? {
            idempotent = false;
            failures.push(format!("{} is not a nonzero idempotent", name(i)));
        }
    }
    let mut pairwise_orthogonal = true;
    for i in 0..prim.len() {
        for j in 0..prim.len() {
            if i != j && !products.product_is_zero(i, j)? {
                pairwise_orthogonal = false;
                failures.push(format!("{} * {} != 0", name(i), name(j)));
            }
        }
    }

    let mut central = true;
    for (idx, x) in set.central().into_iter().enumerate() {
        if !x.is_central() {
            central = false;
            failures.push(format!("central element #{idx} is not central"));
        }
    }
    let mut decomposition = true;
    for p in &set.pairs {
        if p.prime.checked_add(&p.second)? != p.central {
            decomposition = false;
            failures.push(format!("e' + e'' != e for rho{}", p.k));
        }
    }

    let table = CharacterTable::new(kind);
    let expected_count = (0..table.num_rows()).map(|r| table.degree(r) as usize).sum();
    if prim.len() != expected_count {
        failures.push(format!("{} idempotents, expected {expected_count}", prim.len()));
    }
    Ok(CompleteSetReport {
        group: kind,
        sum_is_one,
        pairwise_orthogonal,
        idempotent,
        central,
        decomposition,
        count: prim.len(),
        expected_count,
        failures,
    })
}
