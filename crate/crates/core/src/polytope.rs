//! Inequality systems instantiated at a weight, exact lattice-point
//! enumeration, and the Minkowski, normality and face checks.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pathgen::{paths_for_word, BoundForm, PathKind, PathSpec};
use crate::rootsys::{inversion_set, ReflectionWord, RootPoset, Weight};

pub type Point = Vec<u32>;

/// One inequality `Σ coeffs[c] · s_c ≤ bound(λ)` over the poset coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub path: PathSpec,
    /// Coefficient per coordinate, in poset order.
    pub coeffs: Vec<u32>,
}

impl Inequality {
    pub fn bound(&self) -> &BoundForm {
        &self.path.bound
    }

    pub fn lhs(&self, s: &[u32]) -> i64 {
        self.coeffs.iter().zip(s).map(|(&c, &x)| c as i64 * x as i64).sum()
    }

    pub fn rhs(&self, lambda: &Weight) -> i64 {
        self.path.bound.eval(lambda)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SystemOptions {
    pub include_redundant: bool,
    /// Drop the coefficient paths, leaving the Dyck and degree inequalities.
    pub exclude_coefficient: bool,
}

/// An inequality system on the coordinates of an inversion set.
#[derive(Clone, Debug)]
pub struct System {
    word: ReflectionWord,
    poset: RootPoset,
    inequalities: Vec<Inequality>,
}

impl System {
    pub fn word(&self) -> &ReflectionWord {
        &self.word
    }

    pub fn poset(&self) -> &RootPoset {
        &self.poset
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    pub fn dim(&self) -> usize {
        self.poset.len()
    }

    pub fn order(&self) -> Vec<String> {
        self.poset.labels()
    }

    /// `(coeffs, rhs)` pairs at `lambda`.
    pub fn instantiate(&self, lambda: &Weight) -> Vec<(Vec<u32>, i64)> {
        self.inequalities.iter().map(|q| (q.coeffs.clone(), q.rhs(lambda))).collect()
    }

    pub fn contains(&self, lambda: &Weight, s: &[u32]) -> bool {
        self.inequalities.iter().all(|q| q.lhs(s) <= q.rhs(lambda))
    }

    /// Per-coordinate maxima implied by single inequalities.
    pub fn box_bounds(&self, lambda: &Weight) -> Result<Vec<u32>> {
        (0..self.dim())
            .map(|c| {
                self.inequalities
                    .iter()
                    .filter(|q| q.coeffs[c] > 0)
                    .map(|q| (q.rhs(lambda).max(0) / q.coeffs[c] as i64) as u32)
                    .min()
                    .ok_or_else(|| Error::UnboundedSystem(self.poset.elements()[c].label()))
            })
            .collect()
    }
}

/// Assembles the inequality system of a reflection word (or suffix word).
pub fn build_system(word: &ReflectionWord, opts: &SystemOptions) -> Result<System> {
    let poset = inversion_set(word)?;
    let paths = paths_for_word(word, opts.include_redundant)?;
    Ok(system_from_paths(word.clone(), poset, paths, opts.exclude_coefficient))
}

pub fn system_from_paths(word: ReflectionWord, poset: RootPoset, paths: Vec<PathSpec>, exclude_coefficient: bool) -> System {
    let inequalities = paths
        .into_iter()
        .filter(|p| !(exclude_coefficient && p.kind == PathKind::Coefficient))
        .map(|p| {
            let coeffs = poset.elements().iter().map(|r| p.coeff_of(r)).collect();
            Inequality { path: p, coeffs }
        })
        .collect();
    System { word, poset, inequalities }
}

/// Lattice points of a system at a weight, in lexicographic chain order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointSet {
    pub lambda: Vec<i64>,
    pub order: Vec<String>,
    pub points: Vec<Point>,
    pub count: usize,
}

impl PointSet {
    pub fn as_set(&self) -> BTreeSet<Point> {
        self.points.iter().cloned().collect()
    }
}

fn check_dominant(lambda: &Weight, rank: usize) -> Result<()> {
    if lambda.rank() != rank {
        return Err(Error::LengthMismatch { expected: rank, actual: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(())
}

struct Walker<'a> {
    rows: &'a [(Vec<u32>, i64)],
    caps: &'a [u32],
    limit: usize,
}

impl Walker<'_> {
    fn walk(&self, depth: usize, slack: &mut [i64], cur: &mut Point, out: &mut Vec<Point>) -> Result<()> {
        if depth == cur.len() {
            if out.len() >= self.limit {
                return Err(Error::ResourceLimit(format!("more than {} points", self.limit)));
            }
            out.push(cur.clone());
            return Ok(());
        }
        let mut hi = self.caps[depth] as i64;
        for (row, s) in self.rows.iter().zip(slack.iter()) {
            let c = row.0[depth] as i64;
            if c > 0 {
                hi = hi.min(s / c);
            }
        }
        for v in 0..=hi.max(-1) {
            for (row, s) in self.rows.iter().zip(slack.iter_mut()) {
                *s -= row.0[depth] as i64 * v;
            }
            cur[depth] = v as u32;
            let res = self.walk(depth + 1, slack, cur, out);
            for (row, s) in self.rows.iter().zip(slack.iter_mut()) {
                *s += row.0[depth] as i64 * v;
            }
            res?;
        }
        cur[depth] = 0;
        Ok(())
    }
}

/// Exact enumeration by a depth-first walk in chain order with running slacks.
/// The outermost coordinate is split across worker threads.
pub fn enumerate_points(system: &System, lambda: &Weight, max_points: Option<usize>) -> Result<PointSet> {
    check_dominant(lambda, system.word().lie_type().rank())?;
    let caps = system.box_bounds(lambda)?;
    let rows = system.instantiate(lambda);
    let dim = system.dim();
    let limit = max_points.unwrap_or(usize::MAX);
    let walker = Walker { rows: &rows, caps: &caps, limit };
    let points = if rows.iter().any(|r| r.1 < 0) {
        Vec::new()
    } else if dim == 0 {
        vec![Vec::new()]
    } else {
        let chunks: Vec<Result<Vec<Point>>> = (0..=caps[0])
            .into_par_iter()
            .map(|v| {
                let mut slack: Vec<i64> = rows.iter().map(|r| r.1 - r.0[0] as i64 * v as i64).collect();
                let mut out = Vec::new();
                if slack.iter().any(|&s| s < 0) {
                    return Ok(out);
                }
                let mut cur = vec![0; dim];
                cur[0] = v;
                walker.walk(1, &mut slack, &mut cur, &mut out)?;
                Ok(out)
            })
            .collect();
        let mut points = Vec::new();
        for chunk in chunks {
            points.extend(chunk?);
            if points.len() > limit {
                return Err(Error::ResourceLimit(format!("more than {limit} points")));
            }
        }
        points
    };
    Ok(PointSet { lambda: lambda.coords().to_vec(), order: system.order(), count: points.len(), points })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub path: String,
    pub lhs: i64,
    pub rhs: i64,
    /// `rhs − lhs`, negative for a violated inequality.
    pub slack: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub inside: bool,
    pub violated: Vec<Violation>,
}

pub fn membership(system: &System, lambda: &Weight, s: &[u32]) -> Result<Membership> {
    if s.len() != system.dim() {
        return Err(Error::LengthMismatch { expected: system.dim(), actual: s.len() });
    }
    let violated: Vec<Violation> = system
        .inequalities()
        .iter()
        .filter_map(|q| {
            let (lhs, rhs) = (q.lhs(s), q.rhs(lambda));
            (lhs > rhs).then(|| Violation { path: q.path.id.clone(), lhs, rhs, slack: rhs - lhs })
        })
        .collect();
    Ok(Membership { inside: violated.is_empty(), violated })
}

pub fn minkowski_sum(a: &[Point], b: &[Point]) -> BTreeSet<Point> {
    a.par_iter()
        .flat_map_iter(|p| b.iter().map(move |q| p.iter().zip(q).map(|(x, y)| x + y).collect::<Point>()))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinkowskiReport {
    pub lambda: Vec<i64>,
    pub mu: Vec<i64>,
    pub sum_count: usize,
    pub target_count: usize,
    /// `S(λ) + S(μ) ⊆ S(λ + μ)`.
    pub contained: bool,
    pub equal: bool,
    /// A point in the symmetric difference, if any.
    pub witness: Option<Point>,
}

pub fn minkowski_check(system: &System, lambda: &Weight, mu: &Weight, max_points: Option<usize>) -> Result<MinkowskiReport> {
    let a = enumerate_points(system, lambda, max_points)?;
    let b = enumerate_points(system, mu, max_points)?;
    let target = enumerate_points(system, &lambda.add(mu), max_points)?.as_set();
    let sum = minkowski_sum(&a.points, &b.points);
    let outside = sum.difference(&target).next().cloned();
    let missing = target.difference(&sum).next().cloned();
    Ok(MinkowskiReport {
        lambda: lambda.coords().to_vec(),
        mu: mu.coords().to_vec(),
        sum_count: sum.len(),
        target_count: target.len(),
        contained: outside.is_none(),
        equal: outside.is_none() && missing.is_none(),
        witness: outside.or(missing),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityRow {
    pub k: u32,
    pub dilate_count: usize,
    pub sum_count: usize,
    pub equal: bool,
    pub witness: Option<Point>,
}

/// Compares `S(kλ)` with the `k`-fold sum of `S(λ)` for `k = 1..=kmax`.
pub fn normality_check(system: &System, lambda: &Weight, kmax: u32, max_points: Option<usize>) -> Result<Vec<NormalityRow>> {
    let base = enumerate_points(system, lambda, max_points)?;
    let mut acc: BTreeSet<Point> = base.as_set();
    let mut rows = Vec::new();
    for k in 1..=kmax {
        if k > 1 {
            let cur: Vec<Point> = acc.into_iter().collect();
            acc = minkowski_sum(&cur, &base.points);
        }
        let dilate = enumerate_points(system, &lambda.scale(k as i64), max_points)?.as_set();
        let witness = acc.symmetric_difference(&dilate).next().cloned();
        rows.push(NormalityRow { k, dilate_count: dilate.len(), sum_count: acc.len(), equal: witness.is_none(), witness });
    }
    Ok(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceReport {
    pub start: usize,
    pub substart: usize,
    pub lambda: Vec<i64>,
    pub sub_count: usize,
    pub slice_count: usize,
    pub equal: bool,
    pub witness: Option<Point>,
}

/// Compares the zero-padded points of the suffix word `u` starting at letter
/// `substart` with the slice of the ambient polytope where the coordinates
/// outside `R_u` vanish.
pub fn face_embedding_check(word: &ReflectionWord, substart: usize, lambda: &Weight, opts: &SystemOptions) -> Result<FaceReport> {
    let sub_word = word.suffix(substart)?;
    let ambient = build_system(word, opts)?;
    let sub = build_system(&sub_word, opts)?;
    let positions: Vec<usize> = sub
        .poset()
        .elements()
        .iter()
        .map(|r| {
            ambient
                .poset()
                .index_of(r)
                .ok_or_else(|| Error::SubwordNotContained(r.label()))
        })
        .collect::<Result<_>>()?;
    let inside: Vec<bool> = (0..ambient.dim()).map(|c| positions.contains(&c)).collect();
    let padded: BTreeSet<Point> = enumerate_points(&sub, lambda, None)?
        .points
        .into_iter()
        .map(|p| {
            let mut full = vec![0; ambient.dim()];
            for (v, &pos) in p.into_iter().zip(&positions) {
                full[pos] = v;
            }
            full
        })
        .collect();
    let slice: BTreeSet<Point> = enumerate_points(&ambient, lambda, None)?
        .points
        .into_iter()
        .filter(|p| p.iter().zip(&inside).all(|(&v, &ins)| ins || v == 0))
        .collect();
    let witness = padded.symmetric_difference(&slice).next().cloned();
    Ok(FaceReport {
        start: word.start(),
        substart,
        lambda: lambda.coords().to_vec(),
        sub_count: padded.len(),
        slice_count: slice.len(),
        equal: witness.is_none(),
        witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    /// Fundamental index `i`.
    pub index: usize,
    pub point: Point,
}

/// Splits `s ∈ S(λ)` into summands `m_i ∈ S(ω_i)`, one per unit of `λ`.
///
/// Each step takes the smallest `i` with `m_i > 0`, the first root `β` of
/// `R_i` with `s_β > 0`, and the first companion `α'` such that
/// `unit(β) + unit(α')` lies in `S(ω_i)`; if the remainder leaves
/// `S(λ − ω_i)`, all points of `S(ω_i)` below `s` are tried instead.
pub fn minkowski_decompose(system: &System, lambda: &Weight, s: &[u32]) -> Result<Vec<Summand>> {
    let rank = system.word().lie_type().rank();
    check_dominant(lambda, rank)?;
    if s.len() != system.dim() || !system.contains(lambda, s) {
        return Err(Error::NotInPolytope { point: s.to_vec(), weight: lambda.to_string() });
    }
    let dim = system.dim();
    let unit = |c: usize| {
        let mut p = vec![0; dim];
        p[c] = 1;
        p
    };
    let mut rest = s.to_vec();
    let mut lam = lambda.clone();
    let mut out = Vec::new();
    while let Some(i) = lam.coords().iter().position(|&m| m > 0).map(|p| p + 1) {
        let fund = Weight::fundamental(rank, i);
        let smaller = lam.sub(&fund);
        let r_i: Vec<usize> = (0..dim).filter(|&c| system.poset().elements()[c].involves(i) && rest[c] > 0).collect();
        let fits = |m: &Point| m.iter().zip(&rest).all(|(a, b)| a <= b);
        let remainder_ok = |m: &Point| {
            let r: Point = rest.iter().zip(m).map(|(a, b)| a - b).collect();
            system.contains(&smaller, &r)
        };
        let greedy = match r_i.first() {
            None => vec![0; dim],
            Some(&beta) => r_i
                .iter()
                .skip(1)
                .map(|&alpha| {
                    let mut m = unit(beta);
                    m[alpha] += 1;
                    m
                })
                .find(|m| system.contains(&fund, m))
                .unwrap_or_else(|| unit(beta)),
        };
        let choice = if system.contains(&fund, &greedy) && fits(&greedy) && remainder_ok(&greedy) {
            greedy
        } else {
            enumerate_points(system, &fund, None)?
                .points
                .into_iter()
                .find(|m| fits(m) && remainder_ok(m))
                .ok_or_else(|| Error::NotInPolytope { point: rest.clone(), weight: lam.to_string() })?
        };
        for (r, c) in rest.iter_mut().zip(&choice) {
            *r -= c;
        }
        out.push(Summand { index: i, point: choice });
        lam = smaller;
    }
    if rest.iter().any(|&v| v > 0) {
        return Err(Error::NotInPolytope { point: rest, weight: lam.to_string() });
    }
    Ok(out)
}

/// Lattice points of the full box `[0, caps]`, filtered by the system; the
/// naive reference for [`enumerate_points`].
pub fn brute_force_points(system: &System, lambda: &Weight, caps: &[u32]) -> Vec<Point> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; caps.len()];
    loop {
        if system.contains(lambda, &cur) {
            out.push(cur.clone());
        }
        let mut c = caps.len();
        loop {
            if c == 0 {
                return out;
            }
            c -= 1;
            if cur[c] < caps[c] {
                cur[c] += 1;
                break;
            }
            cur[c] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, LieType, WordVariant};

    fn system(f: Family, n: usize, start: usize) -> System {
        let t = LieType::new(f, n).unwrap();
        let v = if f == Family::D { WordVariant::Hatted } else { WordVariant::Standard };
        let w = ReflectionWord::reflection(t, start, v).unwrap();
        build_system(&w, &SystemOptions::default()).unwrap()
    }

    #[test]
    fn sl4_fundamental_points() {
        let s = system(Family::A, 3, 1);
        let pts = enumerate_points(&s, &Weight(vec![0, 1, 0]), None).unwrap();
        assert_eq!(pts.count, 5);
        assert!(pts.points.contains(&vec![0, 1, 0, 1, 0]));
        assert!(membership(&s, &Weight(vec![0, 1, 0]), &[0, 1, 0, 1, 0]).unwrap().inside);
    }

    #[test]
    fn zero_weight_gives_origin() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let s = system(f, n, 1);
            let pts = enumerate_points(&s, &Weight::zero(n), None).unwrap();
            assert_eq!(pts.points, vec![vec![0; s.dim()]]);
        }
    }

    #[test]
    fn c2_points_and_membership() {
        let s = system(Family::C, 2, 1);
        let lam = Weight(vec![0, 1]);
        let pts = enumerate_points(&s, &lam, None).unwrap();
        let expected: BTreeSet<Point> = [vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![0, 2, 0]].into_iter().collect();
        assert_eq!(pts.as_set(), expected);
        let m = membership(&s, &lam, &[0, 1, 1]).unwrap();
        assert!(!m.inside);
        assert_eq!(m.violated.len(), 1);
        assert_eq!(m.violated[0].path, "coeff:j=2,k=1");
        assert_eq!((m.violated[0].lhs, m.violated[0].rhs), (3, 2));
    }

    #[test]
    fn errors() {
        let s = system(Family::A, 2, 1);
        assert!(matches!(enumerate_points(&s, &Weight(vec![1, -1]), None), Err(Error::NotDominant(_))));
        assert!(matches!(enumerate_points(&s, &Weight(vec![5, 5]), Some(3)), Err(Error::ResourceLimit(_))));
        let mut bare = s.clone();
        bare.inequalities.retain(|q| q.coeffs[0] == 0);
        assert!(matches!(enumerate_points(&bare, &Weight(vec![1, 0]), None), Err(Error::UnboundedSystem(_))));
    }

    #[test]
    fn minkowski_examples() {
        let s = system(Family::A, 3, 1);
        let r = minkowski_check(&s, &Weight(vec![1, 0, 0]), &Weight(vec![0, 1, 0]), None).unwrap();
        assert!(r.equal && r.contained);
        let r = minkowski_check(&s, &Weight(vec![1, 1, 0]), &Weight::zero(3), None).unwrap();
        assert!(r.equal);
        let c3 = system(Family::C, 3, 1);
        assert!(minkowski_check(&c3, &Weight(vec![0, 1, 0]), &Weight(vec![0, 0, 1]), None).unwrap().equal);
    }

    #[test]
    fn normality_examples() {
        let rows = normality_check(&system(Family::A, 3, 1), &Weight(vec![0, 1, 0]), 2, None).unwrap();
        assert!(rows.iter().all(|r| r.equal));
        let rows = normality_check(&system(Family::C, 2, 1), &Weight(vec![0, 1]), 3, None).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.equal));
    }

    #[test]
    fn face_examples() {
        let a3 = LieType::new(Family::A, 3).unwrap();
        let w = ReflectionWord::reflection(a3, 1, WordVariant::Standard).unwrap();
        assert!(face_embedding_check(&w, 2, &Weight(vec![0, 1, 0]), &SystemOptions::default()).unwrap().equal);
        assert!(face_embedding_check(&w, 3, &Weight::zero(3), &SystemOptions::default()).unwrap().equal);
        let c3 = LieType::new(Family::C, 3).unwrap();
        let w = ReflectionWord::reflection(c3, 1, WordVariant::Standard).unwrap();
        assert!(face_embedding_check(&w, 2, &Weight(vec![1, 0, 1]), &SystemOptions::default()).unwrap().equal);
    }

    #[test]
    fn decompose_examples() {
        let s = system(Family::A, 3, 1);
        let d = minkowski_decompose(&s, &Weight(vec![1, 0, 0]), &[0; 5]).unwrap();
        assert_eq!(d, vec![Summand { index: 1, point: vec![0; 5] }]);
        let lam = Weight(vec![1, 1, 0]);
        let p = [1, 1, 0, 1, 0];
        let d = minkowski_decompose(&s, &lam, &p).unwrap();
        assert_eq!(d[0], Summand { index: 1, point: vec![1, 0, 0, 0, 0] });
        assert!(s.contains(&Weight(vec![0, 1, 0]), &d[1].point));

        let c2 = system(Family::C, 2, 1);
        let d = minkowski_decompose(&c2, &Weight(vec![0, 2]), &[0, 2, 0]).unwrap();
        assert_eq!(d.iter().map(|x| x.point.clone()).collect::<Vec<_>>(), vec![vec![0, 1, 0], vec![0, 1, 0]]);
        assert!(matches!(minkowski_decompose(&c2, &Weight(vec![0, 1]), &[0, 1, 1]), Err(Error::NotInPolytope { .. })));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (f, n) in [(Family::A, 3), (Family::B, 2), (Family::C, 3), (Family::D, 4)] {
            let s = system(f, n, 1);
            for lam in Weight::dominant_up_to(n, 2) {
                let caps = s.box_bounds(&lam).unwrap();
                let fast = enumerate_points(&s, &lam, None).unwrap().points;
                assert_eq!(fast, brute_force_points(&s, &lam, &caps), "{f:?}{n} {lam}");
            }
        }
    }
}
