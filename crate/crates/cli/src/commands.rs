//! Subcommand bodies. Each produces a [`Bundle`] carrying all three
//! renderings plus the overall verdict.

use std::fmt::Write as _;

use serde_json::{json, Value};

use dqalg::chartab::CharacterTable;
use dqalg::group_algebra::{number_to_latex, to_latex, to_text};
use dqalg::idempotents::{self, Engine, IdempotentSet};
use dqalg::iso_q8_d8::{self, BasisMap, KParams};
use dqalg::linalg::Mat2;
use dqalg::reps::{self, e_prime_unit, two_dim_count};
use dqalg::trig::{self, RationalAngle};
use dqalg::{CycNum, Error, GroupKind, Result};

use crate::{Format, Identity, Ranges, Suite};

pub struct Bundle {
    pub passed: bool,
    json: Value,
    text: String,
    latex: String,
}

impl Bundle {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
            Format::Latex => self.latex.clone(),
        }
    }
}

fn to_value<T: serde::Serialize + ?Sized>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn missing(flag: &str) -> Error {
    Error::Parse(format!("--{flag} is required for this identity"))
}

/// `chi3` -> `\chi_{3}`, `rho2` -> `\rho_{2}`.
fn latex_label(label: &str) -> String {
    for (prefix, cmd) in [("chi", "\\chi"), ("rho", "\\rho")] {
        if let Some(rest) = label.strip_prefix(prefix) {
            return format!("{cmd}_{{{rest}}}");
        }
    }
    format!("\\text{{{label}}}")
}

/// Display names of the primitive idempotents, in [`IdempotentSet::primitive`] order.
fn names(set: &IdempotentSet) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = (1..=set.linear.len())
        .map(|i| (format!("e{i}"), format!("e_{{{i}}}")))
        .collect();
    for p in &set.pairs {
        let k = p.k;
        out.push((format!("e'_{k}"), format!("e'_{{{k}}}")));
        out.push((format!("e''_{k}"), format!("e''_{{{k}}}")));
    }
    out
}

fn table_text(table: &CharacterTable) -> String {
    let mut grid = vec![std::iter::once(String::new()).chain(table.headers()).collect::<Vec<_>>()];
    for (label, row) in table.row_labels().iter().zip(table.rows()) {
        grid.push(std::iter::once(label.clone()).chain(row.iter().map(|v| v.to_string())).collect());
    }
    let cols = grid[0].len();
    let width: Vec<usize> = (0..cols)
        .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for row in &grid {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, v)| format!("{v:<w$}", w = width[c]))
            .collect();
        let _ = writeln!(s, "{}", cells.join("  ").trim_end());
    }
    s
}

fn table_latex(table: &CharacterTable) -> String {
    let kind = table.kind();
    let mut s = String::new();
    let _ = writeln!(s, "\\begin{{tabular}}{{c|{}}}", "c".repeat(table.classes().len()));
    let head: Vec<String> = table
        .classes()
        .iter()
        .map(|c| format!("${}$", kind.render_latex(c[0])))
        .collect();
    let _ = writeln!(s, " & {} \\\\ \\hline", head.join(" & "));
    for (label, row) in table.row_labels().iter().zip(table.rows()) {
        let vals: Vec<String> = row.iter().map(|v| format!("${}$", number_to_latex(v))).collect();
        let _ = writeln!(s, "${}$ & {} \\\\", latex_label(label), vals.join(" & "));
    }
    s.push_str("\\end{tabular}\n");
    s
}

fn mat_text(m: &Mat2) -> String {
    let e = m.entries();
    format!("[[{}, {}], [{}, {}]]", e[0], e[1], e[2], e[3])
}

fn mat_latex(m: &Mat2) -> String {
    let e: Vec<String> = m.entries().iter().map(number_to_latex).collect();
    format!("\\begin{{pmatrix}} {} & {} \\\\ {} & {} \\end{{pmatrix}}", e[0], e[1], e[2], e[3])
}

pub fn generate(kind: GroupKind) -> Result<Bundle> {
    let table = CharacterTable::new(kind);
    let set = idempotents::complete_set(kind)?;
    let report = idempotents::verify_complete_set(&set, Engine::Spectral)?;
    let ortho = table.verify_orthogonality();
    let passed = report.passed() && ortho.passed();
    let named = names(&set);
    let primitive = set.primitive();

    let json = json!({
        "group": kind,
        "character_table": table.to_json(),
        "idempotents": to_value(&set),
        "primitive": named.iter().zip(&primitive).map(|((n, _), e)| json!({
            "name": n,
            "element": to_value(*e),
        })).collect::<Vec<_>>(),
        "report": to_value(&report),
        "orthogonality": to_value(&ortho),
        "passed": passed,
    });

    let mut text = format!("{kind}, order {}\n\nCharacter table\n", kind.order());
    text.push_str(&table_text(&table));
    text.push_str("\nCentral idempotents\n");
    for (label, e) in table.row_labels().iter().zip(set.central()) {
        let _ = writeln!(text, "e_{label} = {}", to_text(e));
    }
    text.push_str("\nPrimitive idempotents\n");
    for ((n, _), e) in named.iter().zip(&primitive) {
        let _ = writeln!(text, "{n} = {}", to_text(e));
    }
    let _ = write!(
        text,
        "\nChecks\nsum is one: {}\npairwise orthogonal: {}\nidempotent: {}\ncentral: {}\n\
         decomposition: {}\ncount: {} of {}\ncharacter orthogonality: {}\n",
        mark(report.sum_is_one),
        mark(report.pairwise_orthogonal),
        mark(report.idempotent),
        mark(report.central),
        mark(report.decomposition),
        report.count,
        report.expected_count,
        mark(ortho.passed()),
    );
    for f in &report.failures {
        let _ = writeln!(text, "failure: {f}");
    }
    let _ = writeln!(text, "result: {}", mark(passed));

    let mut latex = table_latex(&table);
    latex.push_str("\n\\begin{align*}\n");
    let lines: Vec<String> = named
        .iter()
        .zip(&primitive)
        .map(|((_, l), e)| format!("{l} &= {}", to_latex(e)))
        .collect();
    latex.push_str(&lines.join(" \\\\\n"));
    latex.push_str("\n\\end{align*}\n");

    Ok(Bundle { passed, json, text, latex })
}

pub fn rep(kind: GroupKind, k: u32) -> Result<Bundle> {
    let r = reps::rep(kind, k)?;
    let report = r.verify_relations();
    let passed = report.passed();
    let (g, t) = kind.symbols();
    let [x, y] = r.generators();
    let json = json!({ "representation": to_value(&r), "relations": to_value(&report), "passed": passed });
    let mut text = format!("rho_{k} of {kind}\n{g} -> {}\n{t} -> {}\n", mat_text(x), mat_text(y));
    for (name, ok) in &report.relations {
        let _ = writeln!(text, "{name}: {}", mark(*ok));
    }
    let _ = writeln!(text, "result: {}", mark(passed));
    let latex = format!(
        "\\rho_{{{k}}}({g}) = {}, \\quad \\rho_{{{k}}}({t}) = {}\n",
        mat_latex(x),
        mat_latex(y)
    );
    Ok(Bundle { passed, json, text, latex })
}

pub fn iso() -> Result<Bundle> {
    let map = BasisMap::psi();
    let hom = iso_q8_d8::verify_homomorphism()?;
    let ks = iso_q8_d8::verify_k_system(&KParams::stated())?;
    let corr = iso_q8_d8::idempotent_correspondence()?;
    let center = iso_q8_d8::center_preserved()?;
    let passed = hom.passed() && ks.passed() && corr.passed() && center;
    let json = json!({
        "map": to_value(&map),
        "homomorphism": to_value(&hom),
        "k_system": to_value(&ks),
        "correspondence": to_value(&corr),
        "center_preserved": center,
        "passed": passed,
    });

    let rows = map.rows();
    let mut text = String::from("psi: C[Q_8] -> C[D_8]\n");
    let _ = writeln!(text, "columns: {}", iso_q8_d8::Q8_BASIS.join(" "));
    for (label, row) in iso_q8_d8::D8_BASIS.iter().zip(&rows) {
        let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(text, "{label:>4} | {}", vals.join("  "));
    }
    let _ = write!(
        text,
        "determinant: {}\nhomomorphism ({} pairs): {}\nunit preserved: {}\ninverse round trip: {}\n\
         k-system: {}\nidempotent correspondence: {}\ncenter preserved: {}\nresult: {}\n",
        hom.determinant,
        hom.pairs_checked,
        mark(hom.pair_failures.is_empty()),
        mark(hom.unit_preserved),
        mark(hom.inverse_round_trip),
        mark(ks.passed()),
        mark(corr.passed()),
        mark(center),
        mark(passed),
    );

    let mut latex = String::from("\\psi = \\begin{pmatrix}\n");
    let body: Vec<String> = rows
        .iter()
        .map(|r| r.iter().map(number_to_latex).collect::<Vec<_>>().join(" & "))
        .collect();
    latex.push_str(&body.join(" \\\\\n"));
    latex.push_str("\n\\end{pmatrix}\n");
    Ok(Bundle { passed, json, text, latex })
}

struct Line {
    label: String,
    value: CycNum,
    expected: CycNum,
}

fn lines_bundle(title: &str, lines: Vec<Line>) -> Bundle {
    let passed = lines.iter().all(|l| l.value == l.expected);
    let json = json!({
        "identity": title,
        "checks": lines.iter().map(|l| json!({
            "case": l.label,
            "value": to_value(&l.value),
            "expected": to_value(&l.expected),
            "holds": l.value == l.expected,
        })).collect::<Vec<_>>(),
        "passed": passed,
    });
    let mut text = format!("{title}\n");
    let mut latex = String::new();
    for l in &lines {
        let _ = writeln!(
            text,
            "{}: {} (expected {}) {}",
            l.label,
            l.value,
            l.expected,
            mark(l.value == l.expected)
        );
        let _ = writeln!(latex, "{} = {}", number_to_latex(&l.value), number_to_latex(&l.expected));
    }
    let _ = writeln!(text, "result: {}", mark(passed));
    Bundle { passed, json, text, latex }
}

pub fn trig(
    identity: Identity,
    n: Option<u32>,
    m: Option<u32>,
    k: Option<u32>,
    p: Option<i64>,
    q: Option<i64>,
) -> Result<Bundle> {
    match identity {
        Identity::Alt => {
            let n = n.ok_or_else(|| missing("n"))?;
            let ks: Vec<u32> = match k {
                Some(k) => vec![k],
                None => (1..n).collect(),
            };
            let mut lines = Vec::new();
            for k in ks {
                let value = trig::alternating_cos_sum(n, k)?;
                let expected = CycNum::from_integer(value.order(), trig::alternating_expected(n, k))?;
                lines.push(Line { label: format!("n={n} k={k}"), value, expected });
            }
            Ok(lines_bundle("sum_{r=0}^{n-1} (-1)^r cos(rk pi/n)", lines))
        }
        Identity::Partial => {
            let (p, q, n) = (
                p.ok_or_else(|| missing("p"))?,
                q.ok_or_else(|| missing("q"))?,
                n.ok_or_else(|| missing("n"))?,
            );
            let angle = RationalAngle::new(p, q)?;
            let (value, expected) = trig::cos_partial_sum(angle, n)?;
            let label = format!("theta={}pi/{} n={n}", angle.p(), angle.q());
            Ok(lines_bundle(
                "sum_{r=1}^n cos(r theta) = sin(theta/2 + n theta)/(2 sin(theta/2)) - 1/2",
                vec![Line { label, value, expected }],
            ))
        }
        Identity::Ortho => {
            let kind = match (n, m) {
                (Some(n), None) => GroupKind::dihedral(n)?,
                (None, Some(m)) => GroupKind::quaternion(m)?,
                _ => return Err(Error::Parse("pass exactly one of --n or --m".into())),
            };
            let sums = trig::orthogonality_sums(kind)?;
            let passed = sums.passed();
            let json = json!({ "sums": to_value(&sums), "passed": passed });
            let mut text = format!("orthogonality sums of {kind}\n");
            let mut latex = String::new();
            for c in &sums.checks {
                let _ = writeln!(
                    text,
                    "{} {:?}: {} (expected {}) {}, inner product {} (table {}) {}",
                    c.identity,
                    c.indices,
                    c.value,
                    c.expected,
                    mark(c.holds),
                    c.inner_product,
                    c.table_inner_product,
                    mark(c.agrees),
                );
                let _ = writeln!(latex, "{} = {}", number_to_latex(&c.value), number_to_latex(&c.expected));
            }
            let _ = writeln!(text, "result: {}", mark(passed));
            Ok(Bundle { passed, json, text, latex })
        }
    }
}

/// Kinds swept by `verify`: `D_2n` for `3 <= n <= dmax`, `Q_4m` for `2 <= m <= qmax`.
fn sweep(dmax: u32, qmax: u32) -> Result<Vec<GroupKind>> {
    let mut kinds = Vec::new();
    for n in 3..=dmax {
        kinds.push(GroupKind::dihedral(n)?);
    }
    for m in 2..=qmax {
        kinds.push(GroupKind::quaternion(m)?);
    }
    Ok(kinds)
}

fn bounds(r: Ranges, dmax: u32, qmax: u32) -> (u32, u32) {
    match r.max {
        Some(mx) => (r.dihedral_max.unwrap_or(2 * mx), r.quaternion_max.unwrap_or(mx)),
        None => (r.dihedral_max.unwrap_or(dmax), r.quaternion_max.unwrap_or(qmax)),
    }
}

fn check_oracle(kind: GroupKind) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for k in 1..=two_dim_count(kind) {
        let r = reps::rep(kind, k)?;
        let s = idempotents::split(kind, k)?;
        let (first, second) = if e_prime_unit(kind) == 1 {
            (&s.prime, &s.second)
        } else {
            (&s.second, &s.prime)
        };
        let p1 = idempotents::pullback_matrix_unit(&r, &s.central, 1)?;
        let p2 = idempotents::pullback_matrix_unit(&r, &s.central, 2)?;
        if &p1 != first || &p2 != second {
            failures.push(format!("{kind} k={k}: closed form differs from pullback"));
        }
    }
    Ok(failures)
}

fn check_trig(nmax: u32, qmax: u32) -> Result<(usize, Vec<String>)> {
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 2..=nmax {
        for k in 1..n {
            cases += 1;
            let v = trig::alternating_cos_sum(n, k)?;
            if v != CycNum::from_integer(v.order(), trig::alternating_expected(n, k))? {
                failures.push(format!("alternating n={n} k={k}: {v}"));
            }
        }
    }
    for q in 1..=qmax as i64 {
        for p in 1..2 * q {
            let angle = RationalAngle::new(p, q)?;
            if angle.q() as i64 != q {
                continue;
            }
            for (i, (lhs, rhs)) in trig::cos_partial_sums(angle, 60)?.into_iter().enumerate() {
                cases += 1;
                if lhs != rhs {
                    failures.push(format!("partial {p}pi/{q} n={}", i + 1));
                }
            }
        }
    }
    Ok((cases, failures))
}

pub fn verify(suite: Suite, ranges: Ranges) -> Result<Bundle> {
    let mut cases = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let name = match suite {
        Suite::Idempotents => {
            let (dm, qm) = bounds(ranges, 64, 32);
            for kind in sweep(dm, qm)? {
                cases += 1;
                let set = idempotents::complete_set(kind)?;
                let rep = idempotents::verify_complete_set(&set, Engine::Spectral)?;
                if !rep.passed() {
                    failures.push(format!("{kind}: {}", rep.failures.join("; ")));
                }
            }
            "idempotents"
        }
        Suite::Orthogonality => {
            let (dm, qm) = bounds(ranges, 200, 100);
            for kind in sweep(dm, qm)? {
                cases += 1;
                if !CharacterTable::new(kind).verify_orthogonality().passed() {
                    failures.push(format!("{kind}: character orthogonality"));
                }
                if !trig::orthogonality_sums(kind)?.passed() {
                    failures.push(format!("{kind}: trigonometric sums"));
                }
            }
            "orthogonality"
        }
        Suite::Oracle => {
            let (dm, qm) = bounds(ranges, 24, 12);
            for kind in sweep(dm, qm)? {
                cases += 1;
                failures.extend(check_oracle(kind)?);
            }
            "oracle"
        }
        Suite::Trig => {
            let (dm, qm) = bounds(ranges, 200, 60);
            let (c, f) = check_trig(dm, qm)?;
            cases = c;
            failures = f;
            "trig"
        }
        Suite::Iso => {
            let b = iso()?;
            cases = 1;
            if !b.passed {
                failures.push("isomorphism checks".into());
            }
            "iso"
        }
    };
    let passed = failures.is_empty();
    let json = json!({ "suite": name, "cases": cases, "failures": failures, "passed": passed });
    let mut text = format!("suite {name}: {cases} cases, {} failures\n", failures.len());
    for f in &failures {
        let _ = writeln!(text, "failure: {f}");
    }
    let _ = writeln!(text, "result: {}", mark(passed));
    let latex = format!("% suite {name}: {cases} cases, {} failures\n", failures.len());
    Ok(Bundle { passed, json, text, latex })
}
