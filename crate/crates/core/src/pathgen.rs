//! Path families (Dyck, degree, coefficient) attached to reflection words,
//! together with their symbolic bounds.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{inversion_set, Family, LieType, ReflectionWord, Root, RootPoset, RootSystem, Weight, WordVariant};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    Dyck,
    Degree,
    #[serde(rename = "coeff")]
    Coefficient,
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathKind::Dyck => "dyck",
            PathKind::Degree => "degree",
            PathKind::Coefficient => "coeff",
        })
    }
}

/// A linear form `b · m` in the weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct BoundForm(pub Vec<u32>);

impl BoundForm {
    pub fn zero(rank: usize) -> Self {
        BoundForm(vec![0; rank])
    }

    pub fn eval(&self, lambda: &Weight) -> i64 {
        self.0.iter().zip(lambda.coords()).map(|(&b, &m)| b as i64 * m).sum()
    }

    /// Adds `c` to every entry with 1-based index in `lo..=hi`.
    fn add_range(&mut self, lo: usize, hi: usize, c: u32) {
        for l in lo..=hi {
            self.0[l - 1] += c;
        }
    }

    pub fn dominated_by(&self, other: &BoundForm) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Human-readable form such as `2m1+m2`.
    pub fn render(&self) -> String {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(l, &b)| if b == 1 { format!("m{}", l + 1) } else { format!("{b}m{}", l + 1) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// A path through the inversion poset, with per-root coefficients and bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSpec {
    pub id: String,
    pub kind: PathKind,
    /// Roots in chain order.
    pub roots: Vec<Root>,
    pub coeffs: Vec<u32>,
    pub bound: BoundForm,
    /// Family parameters, counted from the word's start index.
    pub params: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathRecord {
    pub id: String,
    pub kind: PathKind,
    pub roots: Vec<String>,
    pub coeffs: Vec<u32>,
    pub bound: Vec<u32>,
    pub params: BTreeMap<String, i64>,
}

impl PathSpec {
    pub fn record(&self) -> PathRecord {
        PathRecord {
            id: self.id.clone(),
            kind: self.kind,
            roots: self.roots.iter().map(Root::label).collect(),
            coeffs: self.coeffs.clone(),
            bound: self.bound.0.clone(),
            params: self.params.clone(),
        }
    }

    pub fn coeff_of(&self, root: &Root) -> u32 {
        self.roots.iter().position(|r| r == root).map_or(0, |p| self.coeffs[p])
    }

    /// `self` is implied by `other`: every coefficient at least as large on
    /// `other`, and `other`'s bound no larger.
    pub fn dominated_by(&self, other: &PathSpec) -> bool {
        self.roots.iter().zip(&self.coeffs).all(|(r, &c)| other.coeff_of(r) >= c)
            && other.bound.dominated_by(&self.bound)
    }

    /// Text form `2s[1,1]+s[1,2] <= 2m1+m2`.
    pub fn render(&self) -> String {
        let lhs: Vec<String> = self
            .roots
            .iter()
            .zip(&self.coeffs)
            .map(|(r, &c)| {
                let name = r.label().trim_start_matches('a').to_string();
                if c == 1 {
                    format!("s{name}")
                } else {
                    format!("{c}s{name}")
                }
            })
            .collect();
        format!("{} <= {}", lhs.join("+"), self.bound.render())
    }
}

fn params(pairs: &[(&str, usize)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v as i64)).collect()
}

/// Drops every path implied by another one; of identical paths the first is kept.
pub fn prune_dominated(paths: Vec<PathSpec>) -> Vec<PathSpec> {
    let keep: Vec<bool> = (0..paths.len())
        .map(|a| {
            !(0..paths.len()).any(|b| {
                b != a
                    && paths[a].dominated_by(&paths[b])
                    && (!paths[b].dominated_by(&paths[a]) || b < a)
            })
        })
        .collect();
    paths.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).collect()
}

/// Builder that turns relative labels into roots of the ambient system.
struct Frame<'a> {
    rs: &'a RootSystem,
    start: usize,
}

impl Frame<'_> {
    fn abs(&self, l: usize) -> usize {
        self.start + l - 1
    }

    fn plain(&self, l: usize) -> Root {
        self.rs.root_by_label(self.start, self.abs(l), false).expect("unbarred root in range").clone()
    }

    fn barred(&self, l: usize) -> Root {
        self.rs.root_by_label(self.start, self.abs(l), true).expect("barred root in range").clone()
    }

    fn bound(&self) -> BoundForm {
        BoundForm::zero(self.rs.rank())
    }

    /// Adds `c · m_l` for relative `l` in `lo..=hi`.
    fn add(&self, b: &mut BoundForm, lo: usize, hi: usize, c: u32) {
        if lo <= hi {
            b.add_range(self.abs(lo), self.abs(hi), c);
        }
    }

    fn path(&self, id: String, kind: PathKind, roots: Vec<Root>, coeffs: Vec<u32>, bound: BoundForm, params: BTreeMap<String, i64>) -> PathSpec {
        let mut pairs: Vec<(Root, u32)> = roots.into_iter().zip(coeffs).collect();
        let ty = self.rs.lie_type();
        pairs.sort_by(|a, b| crate::rootsys::chain_cmp(ty, &a.0, &b.0));
        let (roots, coeffs) = pairs.into_iter().unzip();
        PathSpec { id, kind, roots, coeffs, bound, params }
    }
}

/// Ladder-shaped inversion sets: the type A hook and the reduced type D full
/// word. The ladder lists the simple indices of the rising half of the word.
fn ladder_paths(rs: &RootSystem, ladder: &[usize], h: usize) -> Vec<PathSpec> {
    let n = rs.rank();
    let t = ladder.len();
    let support_root = |lo: usize, hi: usize| -> Root {
        let mut v = vec![0i64; n];
        for &l in &ladder[lo - 1..hi] {
            v[l - 1] = 1;
        }
        rs.root_by_coeffs(&v).expect("ladder interval is a root").clone()
    };
    let vertical = |a: usize| support_root(1, a);
    let horizontal = |b: usize| support_root(b, t);
    let bound_over = |lo: usize, hi: usize| {
        let mut b = BoundForm::zero(n);
        if lo <= hi {
            for &l in &ladder[lo - 1..hi] {
                b.0[l - 1] += 1;
            }
        }
        b
    };
    let add = |x: &BoundForm, y: &BoundForm| BoundForm(x.0.iter().zip(&y.0).map(|(a, b)| a + b).collect());
    let ones = |roots: Vec<Root>| {
        let len = roots.len();
        (roots, vec![1u32; len])
    };
    let frame = Frame { rs, start: ladder[0] };
    let mut out = Vec::new();

    if t == 1 {
        let (roots, coeffs) = ones(vec![vertical(1)]);
        out.push(frame.path("dyck:D1:a=1".into(), PathKind::Dyck, roots, coeffs, bound_over(1, 1), params(&[("a", 1)])));
        return out;
    }
    for a in 1..t {
        let (roots, coeffs) = ones((1..=a).map(vertical).collect());
        out.push(frame.path(format!("dyck:D1:a={a}"), PathKind::Dyck, roots, coeffs, bound_over(1, a), params(&[("a", a)])));
    }
    for b in h..=t {
        let (roots, coeffs) = ones((b..=t).map(horizontal).collect());
        out.push(frame.path(format!("dyck:D2:b={b}"), PathKind::Dyck, roots, coeffs, bound_over(b, t), params(&[("b", b)])));
    }
    for a in 0..t {
        for b in h.max(a + 1)..=t + 1 {
            let mut roots: Vec<Root> = (1..=a).map(vertical).collect();
            roots.push(vertical(t));
            roots.extend((b..=t).map(horizontal));
            let (roots, coeffs) = ones(roots);
            out.push(frame.path(format!("dyck:D3:a={a},b={b}"), PathKind::Dyck, roots, coeffs, bound_over(1, t), params(&[("a", a), ("b", b)])));
        }
    }
    for c in h..t {
        for r in c..t {
            let mut roots: Vec<Root> = (1..=r).map(vertical).collect();
            roots.push(vertical(t));
            roots.extend((c..=t).map(horizontal));
            let (roots, coeffs) = ones(roots);
            let bound = add(&bound_over(1, t), &bound_over(c, r));
            out.push(frame.path(format!("degree:c={c},r={r}"), PathKind::Degree, roots, coeffs, bound, params(&[("c", c), ("r", r)])));
        }
    }
    out
}

/// Type A paths for the hook `α_{i,k}`; `suffix_from` restricts the
/// horizontal arm to `α_{p,k}` with `p > suffix_from`.
pub fn paths_type_a(ty: LieType, i: usize, k: usize, suffix_from: Option<usize>) -> Result<Vec<PathSpec>> {
    if ty.family() != Family::A {
        return Err(Error::Unsupported(format!("type A paths requested for {ty}")));
    }
    if i == 0 || k < i || k > ty.rank() {
        return Err(Error::StartOutOfRange { lie_type: ty.to_string(), start: i, max: k.min(ty.rank()) });
    }
    let rs = RootSystem::new(ty);
    let ladder: Vec<usize> = (i..=k).collect();
    let h = suffix_from.map_or(2, |s| s - i + 2);
    Ok(ladder_paths(&rs, &ladder, h))
}

/// Type C paths for the word starting at `start`.
pub fn paths_type_c(ty: LieType, start: usize) -> Result<Vec<PathSpec>> {
    if ty.family() != Family::C {
        return Err(Error::Unsupported(format!("type C paths requested for {ty}")));
    }
    check_start(ty, start, ty.rank())?;
    let rs = RootSystem::new(ty);
    let f = Frame { rs: &rs, start };
    let r = ty.rank() - start + 1;
    let mut out = Vec::new();
    if r == 1 {
        let mut b = f.bound();
        f.add(&mut b, 1, 1, 1);
        out.push(f.path("dyck:prefix:j=1".into(), PathKind::Dyck, vec![f.plain(1)], vec![1], b, params(&[("j", 1)])));
        return Ok(out);
    }
    for j in 1..r {
        let mut b = f.bound();
        f.add(&mut b, 1, j, 1);
        out.push(f.path(format!("dyck:prefix:j={j}"), PathKind::Dyck, (1..=j).map(|l| f.plain(l)).collect(), vec![1; j], b, params(&[("j", j)])));
    }
    {
        let mut roots: Vec<Root> = (1..r).map(|l| f.plain(l)).collect();
        roots.push(f.barred(1));
        let mut b = f.bound();
        f.add(&mut b, 1, r, 1);
        let len = roots.len();
        out.push(f.path("dyck:special".into(), PathKind::Dyck, roots, vec![1; len], b, BTreeMap::new()));
    }
    for j in 2..=r {
        let mut q = f.bound();
        f.add(&mut q, 1, j - 1, 1);
        f.add(&mut q, j, r, 2);
        let support = |k: Option<usize>| {
            let mut roots = Vec::new();
            let mut coeffs = Vec::new();
            for l in 1..=r {
                roots.push(f.plain(l));
                coeffs.push(if k.is_some_and(|k| l <= k) { 2 } else { 1 });
            }
            for l in j..r {
                roots.push(f.barred(l));
                coeffs.push(1);
            }
            roots.push(f.barred(1));
            coeffs.push(if k.is_some() { 2 } else { 1 });
            (roots, coeffs)
        };
        let (roots, coeffs) = support(None);
        out.push(f.path(format!("degree:j={j}"), PathKind::Degree, roots, coeffs, q.clone(), params(&[("j", j)])));
        for k in j - 1..r {
            let (roots, coeffs) = support(Some(k));
            let mut b = q.clone();
            f.add(&mut b, 1, k, 1);
            out.push(f.path(format!("coeff:j={j},k={k}"), PathKind::Coefficient, roots, coeffs, b, params(&[("j", j), ("k", k)])));
        }
    }
    Ok(out)
}

/// Type B paths for the word starting at `start`. The all-ones degree
/// inequalities are included only when `include_degree` is set.
pub fn paths_type_b(ty: LieType, start: usize, include_degree: bool) -> Result<Vec<PathSpec>> {
    if ty.family() != Family::B {
        return Err(Error::Unsupported(format!("type B paths requested for {ty}")));
    }
    check_start(ty, start, ty.rank())?;
    let rs = RootSystem::new(ty);
    let f = Frame { rs: &rs, start };
    let r = ty.rank() - start + 1;
    let mut out = Vec::new();
    if r == 1 {
        let mut b = f.bound();
        f.add(&mut b, 1, 1, 1);
        out.push(f.path("dyck:prefix:j=1".into(), PathKind::Dyck, vec![f.plain(1)], vec![1], b, params(&[("j", 1)])));
        return Ok(out);
    }
    for j in 1..r {
        let mut b = f.bound();
        f.add(&mut b, 1, j, 1);
        out.push(f.path(format!("dyck:prefix:j={j}"), PathKind::Dyck, (1..=j).map(|l| f.plain(l)).collect(), vec![1; j], b, params(&[("j", j)])));
    }
    for j in 2..=r {
        let mut q = f.bound();
        f.add(&mut q, 1, 1, 2);
        f.add(&mut q, 2, j - 1, 1);
        f.add(&mut q, j, r - 1, 2);
        f.add(&mut q, r, r, 1);
        let support = |plain_coeff: &dyn Fn(usize) -> u32, barred_coeff: u32| {
            let mut roots = Vec::new();
            let mut coeffs = Vec::new();
            for l in 1..=r {
                roots.push(f.plain(l));
                coeffs.push(plain_coeff(l));
            }
            for l in j..=r {
                roots.push(f.barred(l));
                coeffs.push(barred_coeff);
            }
            (roots, coeffs)
        };
        let mut t2 = q.clone();
        f.add(&mut t2, 2, r, 1);
        f.add(&mut t2, j, r - 1, 1);
        let (roots, coeffs) = support(&|l| if l < r { 2 } else { 1 }, 2);
        out.push(f.path(format!("coeff-t2:j={j}"), PathKind::Coefficient, roots, coeffs, t2, params(&[("j", j), ("t", 2)])));
        for k in (j - 1..r).rev() {
            let mut b = q.clone();
            f.add(&mut b, 2, k, 1);
            let (roots, coeffs) = support(&|l| if l <= k { 2 } else { 1 }, 1);
            out.push(f.path(format!("coeff-t1:j={j},k={k}"), PathKind::Coefficient, roots, coeffs, b, params(&[("j", j), ("k", k), ("t", 1)])));
        }
        if include_degree {
            let (roots, coeffs) = support(&|_| 1, 1);
            out.push(f.path(format!("degree:j={j}"), PathKind::Degree, roots, coeffs, q.clone(), params(&[("j", j)])));
        }
    }
    Ok(out)
}

/// Type D paths for the word starting at `start`.
pub fn paths_type_d(ty: LieType, start: usize, variant: WordVariant) -> Result<Vec<PathSpec>> {
    if ty.family() != Family::D {
        return Err(Error::Unsupported(format!("type D paths requested for {ty}")));
    }
    check_start(ty, start, ReflectionWord::max_start(ty, variant))?;
    let rs = RootSystem::new(ty);
    let n = ty.rank();
    match variant {
        WordVariant::Full => {
            let mut ladder: Vec<usize> = (start..=n - 2).collect();
            ladder.push(n);
            Ok(ladder_paths(&rs, &ladder, 2))
        }
        WordVariant::Hatted => Ok(paths_type_d_hatted(&rs, start)),
        other => Err(Error::VariantMismatch { lie_type: ty.to_string(), variant: other.to_string() }),
    }
}

fn paths_type_d_hatted(rs: &RootSystem, start: usize) -> Vec<PathSpec> {
    let f = Frame { rs, start };
    let r = rs.rank() - start + 1;
    let mut out = Vec::new();
    let ones = |roots: Vec<Root>| {
        let len = roots.len();
        (roots, vec![1u32; len])
    };
    for j in 1..r {
        let mut b = f.bound();
        f.add(&mut b, 1, j, 1);
        let (roots, coeffs) = ones((1..=j).map(|l| f.plain(l)).collect());
        out.push(f.path(format!("dyck:prefix:j={j}"), PathKind::Dyck, roots, coeffs, b, params(&[("j", j)])));
    }
    let prefix = |to: usize| -> Vec<Root> { (1..=to).map(|l| f.plain(l)).collect() };
    let mut all = f.bound();
    f.add(&mut all, 1, r, 1);
    {
        let mut roots = prefix(r - 2);
        roots.push(f.barred(r));
        let mut b = f.bound();
        f.add(&mut b, 1, r - 2, 1);
        f.add(&mut b, r, r, 1);
        let (roots, coeffs) = ones(roots);
        out.push(f.path("dyck:branch-bar".into(), PathKind::Dyck, roots, coeffs, b, BTreeMap::new()));
    }
    {
        let mut roots = prefix(r - 1);
        roots.push(f.barred(r - 1));
        let (roots, coeffs) = ones(roots);
        out.push(f.path("dyck:through-plain".into(), PathKind::Dyck, roots, coeffs, all.clone(), BTreeMap::new()));
    }
    {
        let mut roots = prefix(r - 2);
        roots.push(f.barred(r));
        roots.push(f.barred(r - 1));
        let (roots, coeffs) = ones(roots);
        out.push(f.path("dyck:through-bar".into(), PathKind::Dyck, roots, coeffs, all, BTreeMap::new()));
    }
    let q_of = |d: usize| {
        let mut q = f.bound();
        f.add(&mut q, 1, d - 1, 1);
        f.add(&mut q, d, r - 2, 2);
        f.add(&mut q, r - 1, r, 1);
        q
    };
    for d in 2..=r - 2 {
        let q = q_of(d);
        let mut roots = prefix(r - 1);
        roots.extend((d..r).map(|l| f.barred(l)));
        let (roots, coeffs) = ones(roots);
        out.push(f.path(format!("degree:d={d},via=plain"), PathKind::Degree, roots, coeffs, q.clone(), params(&[("d", d)])));
        let mut roots = prefix(r - 2);
        roots.extend((d..=r).map(|l| f.barred(l)));
        let (roots, coeffs) = ones(roots);
        out.push(f.path(format!("degree:d={d},via=bar"), PathKind::Degree, roots, coeffs, q, params(&[("d", d)])));
    }
    for d in 2..r {
        let q = q_of(d);
        for k in d - 1..=r - 2 {
            let mut roots = Vec::new();
            let mut coeffs = Vec::new();
            for l in 1..r {
                roots.push(f.plain(l));
                coeffs.push(if l <= k { 2 } else { 1 });
            }
            for l in d..=r {
                roots.push(f.barred(l));
                coeffs.push(1);
            }
            let mut b = q.clone();
            f.add(&mut b, 1, k, 1);
            out.push(f.path(format!("coeff:d={d},k={k}"), PathKind::Coefficient, roots, coeffs, b, params(&[("d", d), ("k", k)])));
        }
    }
    out
}

fn check_start(ty: LieType, start: usize, max: usize) -> Result<()> {
    if start == 0 || start > max {
        return Err(Error::StartOutOfRange { lie_type: ty.to_string(), start, max });
    }
    Ok(())
}

/// The path system of a reflection word or one of its suffixes, pruned of
/// dominated paths unless `include_redundant` is set.
///
/// Suffix words of types B, C and D use the ambient paths restricted to the
/// suffix's inversion set.
pub fn paths_for_word(word: &ReflectionWord, include_redundant: bool) -> Result<Vec<PathSpec>> {
    let ty = word.lie_type();
    let start = word.start();
    let ambient = match (ty.family(), word.variant()) {
        (_, WordVariant::Custom) => {
            return Err(Error::Unsupported("no path system is attached to custom words".into()));
        }
        (Family::A, _) => paths_type_a(ty, start, word.end(), word.suffix_from())?,
        (Family::B, _) => paths_type_b(ty, start, include_redundant)?,
        (Family::C, _) => paths_type_c(ty, start)?,
        (Family::D, v) => paths_type_d(ty, start, v)?,
    };
    let paths = if word.suffix_from().is_some() && ty.family() != Family::A {
        let sub = inversion_set(word)?;
        restrict_paths(ambient, &sub)
    } else {
        ambient
    };
    Ok(if include_redundant { paths } else { prune_dominated(paths) })
}

/// Restriction of each path to the roots of `poset`; empty restrictions are dropped.
pub fn restrict_paths(paths: Vec<PathSpec>, poset: &RootPoset) -> Vec<PathSpec> {
    paths
        .into_iter()
        .filter_map(|p| {
            let (roots, coeffs): (Vec<Root>, Vec<u32>) =
                p.roots.into_iter().zip(p.coeffs).filter(|(r, _)| poset.contains(r)).unzip();
            (!roots.is_empty()).then_some(PathSpec { roots, coeffs, ..p })
        })
        .collect()
}

/// Rectangle condition for a set of type A roots inside the inversion set:
/// for every pair `α_{i₁,j₁}, α_{i₂,j₂}` each corner `α_{i₁,j₂}`, `α_{i₂,j₁}`
/// that is a positive root lies in `poset`.
pub fn satisfies_rectangle_condition(poset: &RootPoset, roots: &[Root]) -> bool {
    let contains = |i: usize, j: usize| poset.elements().iter().any(|r| !r.barred && r.start == i && r.end == j);
    roots.iter().all(|x| {
        roots.iter().all(|y| {
            let corner_ok = |i: usize, j: usize| i > j || contains(i, j);
            corner_ok(x.start, y.end) && corner_ok(y.start, x.end)
        })
    })
}

/// Maximal PBW degree `max_{s ∈ S(λ)} Σ s_α`, by enumeration.
pub fn max_pbw_degree(word: &ReflectionWord, lambda: &Weight) -> Result<u64> {
    let system = crate::polytope::build_system(word, &crate::polytope::SystemOptions::default())?;
    let points = crate::polytope::enumerate_points(&system, lambda, None)?;
    Ok(points.points.iter().map(|p| p.iter().map(|&x| x as u64).sum()).max().unwrap_or(0))
}

/// Closed form of the maximal PBW degree for the type A hook `α_{i,k}`:
/// `Σ_{d=i}^{k} m_d + Σ_{d=i+1}^{k-1} m_d`.
pub fn type_a_max_degree_closed_form(i: usize, k: usize, lambda: &Weight) -> i64 {
    let m = lambda.coords();
    let outer: i64 = (i..=k).map(|d| m[d - 1]).sum();
    let inner: i64 = (i + 1..k).map(|d| m[d - 1]).sum();
    outer + inner
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(f: Family, n: usize) -> LieType {
        LieType::new(f, n).unwrap()
    }

    fn rendered(paths: &[PathSpec]) -> Vec<String> {
        paths.iter().map(PathSpec::render).collect()
    }

    #[test]
    fn type_a_example_paths() {
        let t = ty(Family::A, 3);
        let paths = paths_type_a(t, 1, 3, None).unwrap();
        let deg: Vec<&PathSpec> = paths.iter().filter(|p| p.kind == PathKind::Degree).collect();
        assert_eq!(deg.len(), 1);
        assert_eq!(deg[0].render(), "s[1,1]+s[1,2]+s[1,3]+s[2,3]+s[3,3] <= m1+2m2+m3");
        let d3 = paths.iter().find(|p| p.id == "dyck:D3:a=2,b=3").unwrap();
        assert_eq!(d3.render(), "s[1,1]+s[1,2]+s[1,3]+s[3,3] <= m1+m2+m3");
        let single = paths_type_a(ty(Family::A, 1), 1, 1, None).unwrap();
        assert_eq!(rendered(&single), vec!["s[1,1] <= m1"]);
    }

    #[test]
    fn sl4_pruned_system_has_seven_inequalities() {
        let t = ty(Family::A, 3);
        let w = ReflectionWord::reflection(t, 1, WordVariant::Standard).unwrap();
        let paths = paths_for_word(&w, false).unwrap();
        assert_eq!(paths.len(), 7, "{:#?}", rendered(&paths));
        let all = paths_for_word(&w, true).unwrap();
        assert!(all.len() > 7);
    }

    #[test]
    fn type_c_examples() {
        let paths = paths_type_c(ty(Family::C, 3), 1).unwrap();
        assert_eq!(paths.len(), 8);
        let r = rendered(&paths);
        assert!(r.contains(&"2s[1,1]+2s[1,2]+s[1,3]+s[1,-2]+2s[1,-1] <= 2m1+3m2+2m3".to_string()));
        assert!(r.contains(&"s[1,1]+s[1,2]+s[1,3]+s[1,-1] <= m1+m2+2m3".to_string()));
        let c4 = paths_type_c(ty(Family::C, 4), 1).unwrap();
        let p = c4.iter().find(|p| p.id == "coeff:j=3,k=3").unwrap();
        assert_eq!(p.coeffs, vec![2, 2, 2, 1, 1, 2]);
        let q = c4.iter().find(|p| p.id == "degree:j=3").unwrap();
        let expected: Vec<u32> = q.bound.0.iter().zip([1, 1, 1, 0]).map(|(a, b)| a + b).collect();
        assert_eq!(p.bound.0, expected);
    }

    #[test]
    fn type_b_examples() {
        let b4 = paths_type_b(ty(Family::B, 4), 1, false).unwrap();
        let p = b4.iter().find(|p| p.id == "coeff-t1:j=3,k=2").unwrap();
        assert_eq!(p.coeffs, vec![2, 2, 1, 1, 1, 1]);
        // q_3 = 2m1 + m2 + 2m3 + m4, plus m2
        assert_eq!(p.bound.0, vec![2, 2, 2, 1]);
        let t2 = b4.iter().find(|p| p.id == "coeff-t2:j=2").unwrap();
        assert_eq!(t2.coeffs, vec![2, 2, 2, 1, 2, 2, 2]);
        assert_eq!(t2.bound.0, vec![2, 4, 4, 2]);
        assert!(b4.iter().all(|p| p.kind != PathKind::Degree));

        let b2 = paths_type_b(ty(Family::B, 2), 1, false).unwrap();
        let p = b2.iter().find(|p| p.id == "coeff-t1:j=2,k=1").unwrap();
        assert_eq!(p.render(), "2s[1,1]+s[1,2]+s[1,-2] <= 2m1+m2");
    }

    #[test]
    fn type_b_all_ones_dominated_only_for_first_degree_path() {
        for n in 2..=5 {
            let paths = paths_type_b(ty(Family::B, n), 1, true).unwrap();
            for j in 2..=n {
                let deg = paths.iter().find(|p| p.id == format!("degree:j={j}")).unwrap();
                let t1 = paths.iter().find(|p| p.id == format!("coeff-t1:j={j},k={}", j - 1)).unwrap();
                assert_eq!(deg.dominated_by(t1), j == 2, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn type_d_examples() {
        let d4 = paths_type_d(ty(Family::D, 4), 1, WordVariant::Hatted).unwrap();
        let r = rendered(&d4);
        assert!(r.contains(&"s[1,1]+s[1,2]+s[1,-4] <= m1+m2+m4".to_string()), "{r:#?}");
        let c = d4.iter().find(|p| p.id == "coeff:d=2,k=2").unwrap();
        assert_eq!(c.render(), "2s[1,1]+2s[1,2]+s[1,3]+s[1,-4]+s[1,-3]+s[1,-2] <= 2m1+3m2+m3+m4");
        let full = paths_type_d(ty(Family::D, 4), 1, WordVariant::Full).unwrap();
        let deg = full.iter().find(|p| p.id == "degree:c=2,r=2").unwrap();
        assert_eq!(deg.render(), "s[1,1]+s[1,2]+s[1,-4]+s[2,-4]+s[3,-4] <= m1+2m2+m4");
    }

    #[test]
    fn every_coordinate_is_covered() {
        let cases = [
            (Family::A, 5, WordVariant::Standard),
            (Family::B, 5, WordVariant::Standard),
            (Family::C, 5, WordVariant::Standard),
            (Family::D, 6, WordVariant::Hatted),
            (Family::D, 6, WordVariant::Full),
        ];
        for (f, n, v) in cases {
            let t = ty(f, n);
            for start in 1..=ReflectionWord::max_start(t, v) {
                let w = ReflectionWord::reflection(t, start, v).unwrap();
                let poset = inversion_set(&w).unwrap();
                let paths = paths_for_word(&w, false).unwrap();
                for p in &paths {
                    assert!(p.roots.iter().all(|r| poset.contains(r)), "{t} {start} {}", p.id);
                    assert!(p.coeffs.iter().all(|&c| c == 1 || c == 2));
                    if p.kind != PathKind::Coefficient {
                        assert!(p.coeffs.iter().all(|&c| c == 1));
                    }
                }
                for r in poset.elements() {
                    assert!(paths.iter().any(|p| p.coeff_of(r) > 0), "{t} start {start}: {r} uncovered");
                }
            }
        }
    }

    #[test]
    fn type_a_dyck_families_match_rectangle_condition() {
        for n in 1..=4 {
            let t = ty(Family::A, n);
            let w = ReflectionWord::reflection(t, 1, WordVariant::Standard).unwrap();
            let poset = inversion_set(&w).unwrap();
            let paths = paths_type_a(t, 1, n, None).unwrap();
            for p in &paths {
                let dyck = satisfies_rectangle_condition(&poset, &p.roots);
                assert_eq!(dyck, p.kind == PathKind::Dyck, "{}", p.id);
            }
            let elems = poset.elements();
            for mask in 1u32..(1 << elems.len()) {
                let subset: Vec<Root> = (0..elems.len()).filter(|b| mask >> b & 1 == 1).map(|b| elems[b].clone()).collect();
                if !satisfies_rectangle_condition(&poset, &subset) {
                    continue;
                }
                // bound m_p + ⋯ + m_q from the first start to the last end
                let lo = subset.iter().map(|r| r.start).min().unwrap();
                let hi = subset.iter().map(|r| r.end).max().unwrap();
                let mut bound = BoundForm::zero(n);
                bound.add_range(lo, hi, 1);
                let len = subset.len();
                let candidate = PathSpec { id: String::new(), kind: PathKind::Dyck, roots: subset, coeffs: vec![1; len], bound, params: BTreeMap::new() };
                assert!(
                    paths.iter().filter(|p| p.kind == PathKind::Dyck).any(|p| candidate.dominated_by(p)),
                    "n={n}: {} not covered",
                    candidate.render()
                );
            }
        }
    }

    #[test]
    fn pruning_keeps_first_duplicate() {
        let t = ty(Family::A, 2);
        let mut paths = paths_type_a(t, 1, 2, None).unwrap();
        let first = paths[0].clone();
        paths.push(PathSpec { id: "copy".into(), ..first.clone() });
        let pruned = prune_dominated(paths);
        assert!(pruned.iter().any(|p| p.id == first.id));
        assert!(pruned.iter().all(|p| p.id != "copy"));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(type_a_max_degree_closed_form(1, 3, &Weight(vec![0, 1, 0])), 2);
        assert_eq!(type_a_max_degree_closed_form(1, 3, &Weight(vec![0, 0, 0])), 0);
    }
}
