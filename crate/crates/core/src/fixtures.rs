//! Literal reference systems and point sets, regenerated from the general
//! machinery and compared entry by entry.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::Result;
use crate::pathgen::{paths_for_word, PathKind};
use crate::polytope::{build_system, enumerate_points, Point, SystemOptions};
use crate::rootsys::{inversion_set, Family, LieType, ReflectionWord, Root, RootSystem, Weight, WordVariant};

pub const FIXTURE_IDS: [&str; 7] = [
    "intro-sp6",
    "intro-sl4",
    "table1-sp8",
    "table2-C-fund",
    "table3-so9",
    "table4-B-fund",
    "fundamental-points",
];

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// Differs from the literal text in a documented way.
    Flagged,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureLine {
    pub item: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub id: String,
    pub mode: &'static str,
    pub status: Status,
    pub lines: Vec<FixtureLine>,
}

impl FixtureReport {
    fn new(id: &str, mode: &'static str, lines: Vec<FixtureLine>) -> Self {
        let status = if lines.iter().any(|l| l.status == Status::Fail) {
            Status::Fail
        } else if lines.iter().any(|l| l.status == Status::Flagged) {
            Status::Flagged
        } else {
            Status::Pass
        };
        Self { id: id.to_string(), mode, status, lines }
    }

    /// Pass or flagged.
    pub fn ok(&self) -> bool {
        self.status != Status::Fail
    }
}

fn line(item: impl Into<String>, status: Status, detail: impl Into<String>) -> FixtureLine {
    FixtureLine { item: item.into(), status, detail: detail.into() }
}

/// An inequality keyed by root labels, comparable across constructions.
type Key = (BTreeMap<String, u32>, Vec<u32>);

fn key(pairs: &[(&str, u32)], bound: &[u32]) -> Key {
    (pairs.iter().map(|(l, c)| (l.to_string(), *c)).collect(), bound.to_vec())
}

fn generated_keys(word: &ReflectionWord, include_redundant: bool, filter: impl Fn(PathKind) -> bool) -> Result<BTreeMap<Key, String>> {
    Ok(paths_for_word(word, include_redundant)?
        .into_iter()
        .filter(|p| filter(p.kind))
        .map(|p| {
            let map = p.roots.iter().map(Root::label).zip(p.coeffs.iter().copied()).collect();
            ((map, p.bound.0.clone()), p.render())
        })
        .collect())
}

fn render_key(k: &Key) -> String {
    let lhs: Vec<String> = k.0.iter().map(|(l, c)| if *c == 1 { l.clone() } else { format!("{c}{l}") }).collect();
    format!("{} <= {:?}", lhs.join("+"), k.1)
}

/// Bijective comparison of literal rows with generated inequalities.
fn compare_lists(expected: &[(String, Key)], generated: &BTreeMap<Key, String>) -> Vec<FixtureLine> {
    let mut lines = Vec::new();
    let mut used = BTreeSet::new();
    for (name, k) in expected {
        match generated.get(k) {
            Some(text) => {
                used.insert(k.clone());
                lines.push(line(name.clone(), Status::Pass, text.clone()));
            }
            None => lines.push(line(name.clone(), Status::Fail, format!("not generated: {}", render_key(k)))),
        }
    }
    for (k, text) in generated {
        if !used.contains(k) {
            lines.push(line("extra", Status::Fail, format!("generated but not listed: {text}")));
        }
    }
    lines
}

fn word(f: Family, n: usize) -> ReflectionWord {
    let v = if f == Family::D { WordVariant::Hatted } else { WordVariant::Standard };
    ReflectionWord::reflection(LieType::new(f, n).expect("fixture rank"), 1, v).expect("fixture word")
}

fn intro_sp6() -> Result<FixtureReport> {
    let (a, b, c, b2, b1) = ("a[1,1]", "a[1,2]", "a[1,3]", "a[1,-2]", "a[1,-1]");
    let rows = [
        ("dyck 1", key(&[(a, 1)], &[1, 0, 0])),
        ("dyck 2", key(&[(a, 1), (b, 1)], &[1, 1, 0])),
        ("dyck 3", key(&[(a, 1), (b, 1), (b1, 1)], &[1, 1, 1])),
        ("degree 1", key(&[(a, 1), (b, 1), (c, 1), (b1, 1)], &[1, 1, 2])),
        ("degree 2", key(&[(a, 1), (b, 1), (c, 1), (b2, 1), (b1, 1)], &[1, 2, 2])),
        ("coefficient 1", key(&[(a, 2), (b, 2), (c, 1), (b1, 2)], &[2, 2, 2])),
        ("coefficient 2", key(&[(a, 2), (b, 1), (c, 1), (b2, 1), (b1, 2)], &[2, 2, 2])),
        ("coefficient 3", key(&[(a, 2), (b, 2), (c, 1), (b2, 1), (b1, 2)], &[2, 3, 2])),
    ];
    let expected: Vec<(String, Key)> = rows.into_iter().map(|(n, k)| (n.to_string(), k)).collect();
    let generated = generated_keys(&word(Family::C, 3), false, |_| true)?;
    Ok(FixtureReport::new("intro-sp6", "inequality-list", compare_lists(&expected, &generated)))
}

fn intro_sl4() -> Result<FixtureReport> {
    let (a11, a12, a13, a23, a33) = ("a[1,1]", "a[1,2]", "a[1,3]", "a[2,3]", "a[3,3]");
    let rows = [
        ("dyck s11", key(&[(a11, 1)], &[1, 0, 0])),
        ("dyck s11+s12 (misprint corrected)", key(&[(a11, 1), (a12, 1)], &[1, 1, 0])),
        ("dyck s23+s33", key(&[(a23, 1), (a33, 1)], &[0, 1, 1])),
        ("dyck s33", key(&[(a33, 1)], &[0, 0, 1])),
        ("dyck s11+s12+s13+s33", key(&[(a11, 1), (a12, 1), (a13, 1), (a33, 1)], &[1, 1, 1])),
        ("dyck s11+s13+s23+s33", key(&[(a11, 1), (a13, 1), (a23, 1), (a33, 1)], &[1, 1, 1])),
        ("degree", key(&[(a11, 1), (a12, 1), (a13, 1), (a23, 1), (a33, 1)], &[1, 2, 1])),
    ];
    let expected: Vec<(String, Key)> = rows.into_iter().map(|(n, k)| (n.to_string(), k)).collect();
    let w = word(Family::A, 3);
    let mut lines = compare_lists(&expected, &generated_keys(&w, false, |_| true)?);

    let system = build_system(&w, &SystemOptions::default())?;
    let lam = Weight(vec![0, 1, 0]);
    let got = enumerate_points(&system, &lam, None)?.as_set();
    // coordinates (s11, s12, s13, s23, s33)
    let listed: BTreeSet<Point> =
        [vec![0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0], vec![0, 0, 1, 0, 0], vec![0, 0, 0, 1, 0], vec![0, 1, 0, 1, 0]].into_iter().collect();
    lines.push(line(
        "S(omega_2)",
        if got == listed { Status::Pass } else { Status::Fail },
        format!("{} points enumerated, {} listed", got.len(), listed.len()),
    ));
    // the swapped pair s12 + s23 <= m2 cuts off the fifth point
    let fifth = [0u32, 1, 0, 1, 0];
    let swapped = fifth[1] + fifth[3];
    lines.push(line(
        "fifth point outside swapped-pair constraint",
        if swapped as i64 > lam.coords()[1] { Status::Pass } else { Status::Fail },
        format!("s12+s23 = {swapped} > m2 = {}", lam.coords()[1]),
    ));
    Ok(FixtureReport::new("intro-sl4", "inequality-list", lines))
}

/// Sum `Σ_{l=lo}^{hi} m_l` as a bound vector.
fn range(n: usize, lo: usize, hi: usize) -> Vec<u32> {
    (1..=n).map(|l| u32::from(lo <= l && l <= hi)).collect()
}

fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Literal table row: coefficient tuple over the chain-ordered support and
/// the extra bound on top of `q`.
struct TableRow {
    j: usize,
    tuple: &'static [u32],
    extra: Vec<u32>,
}

fn table_rows(id: &str, family: Family, rows: Vec<TableRow>, q: impl Fn(usize) -> Vec<u32>, support: impl Fn(usize) -> Vec<String>, include_degree: bool) -> Result<FixtureReport> {
    let n = 4;
    let expected: Vec<(String, Key)> = rows
        .iter()
        .map(|r| {
            let labels = support(r.j);
            assert_eq!(labels.len(), r.tuple.len(), "{id} row j={}", r.j);
            let map = labels.into_iter().zip(r.tuple.iter().copied()).collect();
            (format!("j={} {:?}", r.j, r.tuple), (map, add(&q(r.j), &r.extra)))
        })
        .collect();
    let w = word(family, n);
    let generated = generated_keys(&w, include_degree, |k| k != PathKind::Dyck)?;
    Ok(FixtureReport::new(id, "inequality-list", compare_lists(&expected, &generated)))
}

fn table1_sp8() -> Result<FixtureReport> {
    let n = 4;
    let zero = vec![0; n];
    let row = |j, tuple, extra: Vec<u32>| TableRow { j, tuple, extra };
    let rows = vec![
        row(4, &[2, 2, 2, 1, 2], range(n, 1, 3)),
        row(4, &[1, 1, 1, 1, 1], zero.clone()),
        row(3, &[2, 2, 2, 1, 1, 2], range(n, 1, 3)),
        row(3, &[2, 2, 1, 1, 1, 2], range(n, 1, 2)),
        row(3, &[1, 1, 1, 1, 1, 1], zero.clone()),
        row(2, &[2, 2, 2, 1, 1, 1, 2], range(n, 1, 3)),
        row(2, &[2, 2, 1, 1, 1, 1, 2], range(n, 1, 2)),
        row(2, &[2, 1, 1, 1, 1, 1, 2], range(n, 1, 1)),
        row(2, &[1, 1, 1, 1, 1, 1, 1], zero),
    ];
    // q = m_1 + ⋯ + m_{j-1} + 2m_j + ⋯ + 2m_n
    let q = |j: usize| add(&range(n, 1, j - 1), &add(&range(n, j, n), &range(n, j, n)));
    let support = |j: usize| {
        let mut s: Vec<String> = (1..=n).map(|l| format!("a[1,{l}]")).collect();
        s.extend((j..n).rev().map(|l| format!("a[1,-{l}]")));
        s.push("a[1,-1]".into());
        s
    };
    table_rows("table1-sp8", Family::C, rows, q, support, false)
}

fn table3_so9() -> Result<FixtureReport> {
    let n = 4;
    let row = |j, tuple, extra: Vec<u32>| TableRow { j, tuple, extra };
    let rows = vec![
        row(4, &[2, 2, 2, 1, 2], range(n, 2, 4)),
        row(4, &[2, 2, 2, 1, 1], range(n, 2, 3)),
        row(3, &[2, 2, 2, 1, 2, 2], add(&range(n, 2, 4), &range(n, 3, 3))),
        row(3, &[2, 2, 2, 1, 1, 1], range(n, 2, 3)),
        row(3, &[2, 2, 1, 1, 1, 1], range(n, 2, 2)),
        row(2, &[2, 2, 2, 1, 2, 2, 2], add(&range(n, 2, 4), &range(n, 2, 3))),
        row(2, &[2, 2, 2, 1, 1, 1, 1], range(n, 2, 3)),
        row(2, &[2, 2, 1, 1, 1, 1, 1], range(n, 2, 2)),
        row(2, &[2, 1, 1, 1, 1, 1, 1], vec![0; n]),
    ];
    // q = 2m_1 + m_2 + ⋯ + m_{j-1} + 2m_j + ⋯ + 2m_{n-1} + m_n
    let q = |j: usize| {
        let mut v = range(n, 1, 1);
        v = add(&v, &range(n, 1, 1));
        v = add(&v, &range(n, 2, j - 1));
        v = add(&v, &range(n, j, n - 1));
        v = add(&v, &range(n, j, n - 1));
        add(&v, &range(n, n, n))
    };
    let support = |j: usize| {
        let mut s: Vec<String> = (1..=n).map(|l| format!("a[1,{l}]")).collect();
        s.extend((j..=n).rev().map(|l| format!("a[1,-{l}]")));
        s
    };
    table_rows("table3-so9", Family::B, rows, q, support, false)
}

/// A literal inequality `Σ c·s ≤ b·m_i` (or `= 0` when `equality`).
struct LitIneq {
    coeffs: Vec<(String, u32)>,
    bound: i64,
    equality: bool,
}

fn literal_points(labels: &[String], ineqs: &[LitIneq]) -> BTreeSet<Point> {
    let dim = labels.len();
    let idx = |l: &str| labels.iter().position(|x| x == l).unwrap_or_else(|| panic!("label {l} not in {labels:?}"));
    let rows: Vec<(Vec<u32>, i64, bool)> = ineqs
        .iter()
        .map(|q| {
            let mut c = vec![0u32; dim];
            for (l, v) in &q.coeffs {
                c[idx(l)] = *v;
            }
            (c, q.bound, q.equality)
        })
        .collect();
    let cap = 2u32;
    let mut out = BTreeSet::new();
    let mut cur = vec![0u32; dim];
    loop {
        let ok = rows.iter().all(|(c, b, eq)| {
            let lhs: i64 = c.iter().zip(&cur).map(|(x, y)| (*x * *y) as i64).sum();
            if *eq {
                lhs == 0
            } else {
                lhs <= *b
            }
        });
        if ok {
            out.insert(cur.clone());
        }
        let mut d = dim;
        loop {
            if d == 0 {
                return out;
            }
            d -= 1;
            if cur[d] < cap {
                cur[d] += 1;
                break;
            }
            cur[d] = 0;
        }
    }
}

fn lits(labels: impl IntoIterator<Item = String>, coeff: impl Fn(&str) -> u32, bound: i64, equality: bool) -> LitIneq {
    LitIneq { coeffs: labels.into_iter().map(|l| { let c = coeff(&l); (l, c) }).collect(), bound, equality }
}

fn fundamental_table(id: &str, family: Family, ranks: &[usize], literal: impl Fn(usize, usize, &[String]) -> (Vec<LitIneq>, bool)) -> Result<FixtureReport> {
    let mut lines = Vec::new();
    for &n in ranks {
        let w = word(family, n);
        let system = build_system(&w, &SystemOptions::default())?;
        let labels = system.order();
        for i in 1..=n {
            let (ineqs, documented) = literal(n, i, &labels);
            let lit = literal_points(&labels, &ineqs);
            let got = enumerate_points(&system, &Weight::fundamental(n, i), None)?.as_set();
            let item = format!("{family}{n} omega_{i}");
            if lit == got {
                lines.push(line(item, Status::Pass, format!("{} points", got.len())));
            } else {
                let missing = got.difference(&lit).next().cloned();
                let extra = lit.difference(&got).next().cloned();
                let detail = format!(
                    "literal {} points, enumerated {}; first enumerated-only {:?}, first literal-only {:?}",
                    lit.len(),
                    got.len(),
                    missing,
                    extra
                );
                lines.push(line(item, if documented { Status::Flagged } else { Status::Fail }, detail));
            }
        }
    }
    Ok(FixtureReport::new(id, "point-set", lines))
}

fn plain(l: usize) -> String {
    format!("a[1,{l}]")
}

fn bar(l: usize) -> String {
    format!("a[1,-{l}]")
}

fn table2_c_fund() -> Result<FixtureReport> {
    fundamental_table("table2-C-fund", Family::C, &[2, 3, 4], |n, i, labels| {
        let tail = |from: usize| -> Vec<String> {
            let mut v: Vec<String> = (from..=n).map(plain).collect();
            v.extend((1..n).rev().map(bar));
            v
        };
        if i == 1 {
            return (vec![lits(labels.to_vec(), |_| 1, 1, false)], false);
        }
        let mut ineqs = vec![lits((1..i).map(plain), |_| 1, 0, true)];
        if i < n {
            let mut first: Vec<String> = (i..=n).map(plain).collect();
            first.extend((i + 1..n).rev().map(bar));
            first.push(bar(1));
            ineqs.push(lits(first, |_| 1, 1, false));
        } else {
            ineqs.push(lits(tail(n), |_| 1, 1, false));
        }
        ineqs.push(lits(tail(i), |_| 1, 2, false));
        ineqs.push(lits(tail(i), |l| if l == bar(1) { 2 } else { 1 }, 2, false));
        // the ω_n block bounds the first sum by m_n
        (ineqs, i == n)
    })
}

fn table4_b_fund() -> Result<FixtureReport> {
    fundamental_table("table4-B-fund", Family::B, &[2, 3, 4], |n, i, _| {
        let mut ineqs = vec![lits((1..i).map(plain), |_| 1, 0, true)];
        let tail: Vec<String> = (i..=n).map(plain).chain((2..=n).rev().map(bar)).collect();
        if i == n {
            ineqs.push(lits(tail, |_| 1, 1, false));
            return (ineqs, false);
        }
        let mut second: Vec<String> = (i..n).map(plain).collect();
        second.extend((i + 1..=n).rev().map(bar));
        ineqs.push(lits(second.clone(), |_| 1, 1, false));
        ineqs.push(lits(tail, |_| 1, 2, false));
        let mut fourth = second;
        fourth.push(plain(n));
        ineqs.push(lits(fourth, |l| if l == plain(n) { 1 } else { 2 }, 2, false));
        // second row omits s_{1,n}
        (ineqs, true)
    })
}

/// Points asserted to lie in `S(ω_i)` for the start-1 systems, with the
/// corrected index ranges; returned as lists of root labels.
pub fn fundamental_point_families(ty: LieType, i: usize) -> Vec<Vec<(usize, usize, bool)>> {
    let n = ty.rank();
    let mut out: Vec<Vec<(usize, usize, bool)>> = Vec::new();
    let rs = RootSystem::new(ty);
    let w = word(ty.family(), n);
    let poset = inversion_set(&w).expect("reduced");
    let r_i: Vec<&Root> = poset.elements().iter().filter(|r| r.involves(i)).collect();
    for r in &r_i {
        out.push(vec![(r.start, r.end, r.barred)]);
    }
    let in_ri = |s: usize, e: usize, b: bool| rs.root_by_label(s, e, b).is_some_and(|r| r_i.contains(&r));
    let mut pair = |a: (usize, usize, bool), b: (usize, usize, bool)| {
        if in_ri(a.0, a.1, a.2) && in_ri(b.0, b.1, b.2) {
            out.push(vec![a, b]);
        }
    };
    match ty.family() {
        Family::A => {
            // hook α_{1,n}: vertical α_{1,p}, i ≤ p ≤ n−1, with horizontal α_{q,n}, 2 ≤ q ≤ i
            for p in i..n {
                for q in 2..=i {
                    pair((1, p, false), (q, n, false));
                }
            }
        }
        Family::B if i == n => {}
        Family::B | Family::C => {
            for j in i..=n {
                for jp in 2..=i {
                    pair((1, j, false), (1, jp, true));
                }
            }
            for j in 2..=i {
                for jp in j..=i {
                    pair((1, j, true), (1, jp, true));
                }
            }
            if ty.family() == Family::B && i < n {
                pair((1, n, false), (1, n, false));
            }
        }
        Family::D => {
            pair((1, n - 1, false), (1, n, true));
            if (2..=n - 2).contains(&i) {
                for j in i..n {
                    for jp in 2..=i {
                        pair((1, j, false), (1, jp, true));
                    }
                }
                for j in 2..=i {
                    for jp in 2..=i {
                        if j != jp {
                            pair((1, j, true), (1, jp, true));
                        }
                    }
                }
            }
        }
    }
    out
}

fn fundamental_points() -> Result<FixtureReport> {
    let mut lines = Vec::new();
    for (family, ranks) in [(Family::A, 2..=5), (Family::B, 2..=5), (Family::C, 2..=5), (Family::D, 4..=5)] {
        for n in ranks {
            let ty = LieType::new(family, n)?;
            let rs = RootSystem::new(ty);
            let w = word(family, n);
            let system = build_system(&w, &SystemOptions::default())?;
            for i in 1..=n {
                let pts = enumerate_points(&system, &Weight::fundamental(n, i), None)?.as_set();
                let families = fundamental_point_families(ty, i);
                let mut missing = Vec::new();
                for fam in &families {
                    let mut p = vec![0u32; system.dim()];
                    for &(s, e, b) in fam {
                        let root = rs.root_by_label(s, e, b).expect("root");
                        p[system.poset().index_of(root).expect("in poset")] += 1;
                    }
                    if !pts.contains(&p) {
                        missing.push(format!("{p:?}"));
                    }
                }
                lines.push(line(
                    format!("{ty} omega_{i}"),
                    if missing.is_empty() { Status::Pass } else { Status::Fail },
                    if missing.is_empty() {
                        format!("{} asserted points present", families.len())
                    } else {
                        format!("missing {}", missing.join(" "))
                    },
                ));
            }
        }
    }
    Ok(FixtureReport::new("fundamental-points", "membership", lines))
}

pub fn run_fixture(id: &str) -> Result<FixtureReport> {
    match id {
        "intro-sp6" => intro_sp6(),
        "intro-sl4" => intro_sl4(),
        "table1-sp8" => table1_sp8(),
        "table2-C-fund" => table2_c_fund(),
        "table3-so9" => table3_so9(),
        "table4-B-fund" => table4_b_fund(),
        "fundamental-points" => fundamental_points(),
        other => Err(crate::error::Error::Parse(format!("unknown fixture {other:?}"))),
    }
}

pub fn fixtures_check() -> Result<Vec<FixtureReport>> {
    FIXTURE_IDS.iter().map(|id| run_fixture(id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_ok() {
        for r in fixtures_check().unwrap() {
            assert!(r.ok(), "{r:#?}");
        }
    }

    #[test]
    fn unknown_fixture() {
        assert!(run_fixture("table9").is_err());
    }

    #[test]
    fn deterministic() {
        assert_eq!(fixtures_check().unwrap(), fixtures_check().unwrap());
    }
}
