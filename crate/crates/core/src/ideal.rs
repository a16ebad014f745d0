//! Monomial generators attached to paths, compared with the minimal
//! generators of the complement of the point set.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pathgen::PathKind;
use crate::polytope::{enumerate_points, Point, PointSet, System};
use crate::rootsys::{chain_cmp, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub path: String,
    pub kind: PathKind,
    pub weighted_sum: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub point: Point,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    pub lambda: Vec<i64>,
    pub order: Vec<String>,
    pub generators: Vec<Generator>,
    pub count: usize,
}

impl GeneratorSet {
    pub fn points(&self) -> BTreeSet<Point> {
        self.generators.iter().map(|g| g.point.clone()).collect()
    }
}

/// All exponent vectors on `support` whose weighted sum lies in `lo..=hi`.
fn compositions(support: &[(usize, u32)], dim: usize, lo: i64, hi: i64, out: &mut Vec<(Point, i64)>) {
    fn rec(support: &[(usize, u32)], idx: usize, left: i64, lo: i64, hi: i64, cur: &mut Point, out: &mut Vec<(Point, i64)>) {
        if idx == support.len() {
            let total = hi - left;
            if total >= lo {
                out.push((cur.clone(), total));
            }
            return;
        }
        let (c, w) = support[idx];
        let w = w as i64;
        let mut v = 0;
        while v * w <= left {
            cur[c] = v as u32;
            rec(support, idx + 1, left - v * w, lo, hi, cur, out);
            v += 1;
        }
        cur[c] = 0;
    }
    let mut cur = vec![0; dim];
    rec(support, 0, hi, lo, hi, &mut cur, out);
}

/// Generators read off the paths: for every inequality `Σ c_α s_α ≤ q`, the
/// exponents supported on the path with weighted sum `q + 1`, together with
/// weighted sum `q + 2` when every used coefficient is 2. Each generator is
/// a minimal violator of its own inequality.
pub fn theorem_generators(system: &System, lambda: &Weight) -> Result<GeneratorSet> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let dim = system.dim();
    let mut seen = BTreeSet::new();
    let mut generators = Vec::new();
    for q in system.inequalities() {
        let rhs = q.rhs(lambda);
        let support: Vec<(usize, u32)> = q.coeffs.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, &c)| (i, c)).collect();
        let mut cands = Vec::new();
        compositions(&support, dim, rhs + 1, rhs + 2, &mut cands);
        for (point, sum) in cands {
            let minimal = point
                .iter()
                .zip(&q.coeffs)
                .all(|(&v, &c)| v == 0 || sum - c as i64 <= rhs);
            if minimal && seen.insert(point.clone()) {
                generators.push(Generator {
                    point,
                    provenance: Provenance { path: q.path.id.clone(), kind: q.path.kind, weighted_sum: sum },
                });
            }
        }
    }
    Ok(GeneratorSet { lambda: lambda.coords().to_vec(), order: system.order(), count: generators.len(), generators })
}

/// Default comparison box: componentwise maximum over `S(λ)` plus two.
pub fn default_box(points: &PointSet, dim: usize) -> Vec<u32> {
    let mut b = vec![0u32; dim];
    for p in &points.points {
        for (x, &v) in b.iter_mut().zip(p) {
            *x = (*x).max(v);
        }
    }
    b.into_iter().map(|x| x + 2).collect()
}

fn check_box(points: &PointSet, bx: &[u32]) -> Result<()> {
    let too_small = points.points.iter().any(|p| p.iter().zip(bx).any(|(&v, &b)| v + 1 > b));
    if too_small {
        return Err(Error::BoxTooSmall(bx.to_vec()));
    }
    Ok(())
}

/// Minimal elements of `box ∖ S(λ)` under the componentwise order.
///
/// Since `S(λ)` is a down-set, a point outside it is minimal exactly when
/// every unit step down lands in `S(λ)`; such points have the form `p + e_c`
/// with `p ∈ S(λ)`.
pub fn complement_min_generators(system: &System, lambda: &Weight, bx: &[u32]) -> Result<BTreeSet<Point>> {
    let points = enumerate_points(system, lambda, None)?;
    if bx.len() != system.dim() {
        return Err(Error::LengthMismatch { expected: system.dim(), actual: bx.len() });
    }
    check_box(&points, bx)?;
    let inside = points.as_set();
    let mut out = BTreeSet::new();
    for p in &points.points {
        for c in 0..p.len() {
            let mut x = p.clone();
            x[c] += 1;
            if x[c] > bx[c] || inside.contains(&x) {
                continue;
            }
            let minimal = (0..x.len()).all(|d| {
                if x[d] == 0 {
                    return true;
                }
                let mut y = x.clone();
                y[d] -= 1;
                inside.contains(&y)
            });
            if minimal {
                out.insert(x);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpsetReport {
    pub lambda: Vec<i64>,
    pub equal: bool,
    pub theorem_count: usize,
    pub complement_count: usize,
    /// Points of `S(λ)` lying above some generator.
    pub unsound: Vec<Point>,
    /// Minimal complement points above no generator.
    pub uncovered: Vec<Point>,
}

fn dominates(x: &[u32], g: &[u32]) -> bool {
    x.iter().zip(g).all(|(a, b)| a >= b)
}

/// Compares the up-closure of the path generators inside the box with
/// `box ∖ S(λ)`: the two agree iff no point of `S(λ)` dominates a generator
/// and every minimal complement point dominates one.
pub fn upset_equality(system: &System, lambda: &Weight, bx: Option<&[u32]>) -> Result<UpsetReport> {
    let points = enumerate_points(system, lambda, None)?;
    let bx: Vec<u32> = match bx {
        Some(b) => b.to_vec(),
        None => default_box(&points, system.dim()),
    };
    let gens = theorem_generators(system, lambda)?;
    let gen_points: Vec<Point> = gens
        .points()
        .into_iter()
        .filter(|g| g.iter().zip(&bx).all(|(a, b)| a <= b))
        .collect();
    let comp = complement_min_generators(system, lambda, &bx)?;
    let unsound: Vec<Point> = points.points.iter().filter(|p| gen_points.iter().any(|g| dominates(p, g))).cloned().collect();
    let uncovered: Vec<Point> = comp.iter().filter(|x| !gen_points.iter().any(|g| dominates(x, g))).cloned().collect();
    Ok(UpsetReport {
        lambda: lambda.coords().to_vec(),
        equal: unsound.is_empty() && uncovered.is_empty(),
        theorem_count: gens.count,
        complement_count: comp.len(),
        unsound,
        uncovered,
    })
}

/// Homogeneous lexicographic key: total degree, then the exponents listed
/// from the largest generator downwards (reverse chain order).
pub fn canonical_monomial_key(system: &System, s: &[u32]) -> (u64, Vec<u32>) {
    let ty = system.word().lie_type();
    let elems = system.poset().elements();
    let mut idx: Vec<usize> = (0..elems.len()).collect();
    idx.sort_by(|&a, &b| chain_cmp(ty, &elems[b], &elems[a]));
    let degree = s.iter().map(|&v| v as u64).sum();
    (degree, idx.into_iter().map(|i| s[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{build_system, SystemOptions};
    use crate::rootsys::{Family, LieType, ReflectionWord, WordVariant};

    fn system(f: Family, n: usize) -> System {
        let v = if f == Family::D { WordVariant::Hatted } else { WordVariant::Standard };
        let w = ReflectionWord::reflection(LieType::new(f, n).unwrap(), 1, v).unwrap();
        build_system(&w, &SystemOptions::default()).unwrap()
    }

    fn unit(dim: usize, c: usize) -> Point {
        let mut p = vec![0; dim];
        p[c] = 1;
        p
    }

    #[test]
    fn a3_generators() {
        let s = system(Family::A, 3);
        let g = theorem_generators(&s, &Weight(vec![0, 1, 0])).unwrap();
        assert!(g.points().contains(&unit(5, 4)));
        assert!(upset_equality(&s, &Weight(vec![0, 1, 0]), None).unwrap().equal);
        assert!(upset_equality(&s, &Weight(vec![1, 1, 0]), None).unwrap().equal);
    }

    #[test]
    fn zero_weight_units() {
        let s = system(Family::C, 3);
        let lam = Weight::zero(3);
        let g = theorem_generators(&s, &lam).unwrap();
        let units: BTreeSet<Point> = (0..s.dim()).map(|c| unit(s.dim(), c)).collect();
        assert!(units.is_subset(&g.points()));
        let comp = complement_min_generators(&s, &lam, &vec![2; s.dim()]).unwrap();
        assert_eq!(comp, units);
        assert!(upset_equality(&s, &lam, None).unwrap().equal);
    }

    #[test]
    fn c2_weighted_generator() {
        let s = system(Family::C, 2);
        let lam = Weight(vec![0, 1]);
        let g = theorem_generators(&s, &lam).unwrap();
        let hit = g.generators.iter().find(|x| x.point == vec![0, 1, 1]).unwrap();
        assert_eq!(hit.provenance.kind, PathKind::Coefficient);
        assert_eq!(hit.provenance.weighted_sum, 3);
        let comp = complement_min_generators(&s, &lam, &[2, 4, 3]).unwrap();
        assert!(comp.contains(&vec![0, 1, 1]));
        assert!(comp.contains(&vec![0, 3, 0]));
        assert!(upset_equality(&s, &lam, None).unwrap().equal);
    }

    #[test]
    fn box_too_small() {
        let s = system(Family::C, 2);
        assert!(matches!(complement_min_generators(&s, &Weight(vec![0, 1]), &[1, 2, 1]), Err(Error::BoxTooSmall(_))));
    }

    #[test]
    fn generators_are_minimal_violators() {
        let s = system(Family::C, 3);
        let lam = Weight(vec![1, 0, 1]);
        for g in theorem_generators(&s, &lam).unwrap().generators {
            let q = s.inequalities().iter().find(|q| q.path.id == g.provenance.path).unwrap();
            assert!(q.lhs(&g.point) > q.rhs(&lam));
            for c in 0..g.point.len() {
                if g.point[c] > 0 {
                    let mut y = g.point.clone();
                    y[c] -= 1;
                    assert!(q.lhs(&y) <= q.rhs(&lam));
                }
            }
        }
    }

    #[test]
    fn monomial_key_order() {
        let s = system(Family::C, 3);
        let bar1 = s.poset().labels().iter().position(|l| l == "a[1,-1]").unwrap();
        let bar2 = s.poset().labels().iter().position(|l| l == "a[1,-2]").unwrap();
        assert!(canonical_monomial_key(&s, &unit(5, bar1)) > canonical_monomial_key(&s, &unit(5, bar2)));
        assert_eq!(canonical_monomial_key(&s, &[0; 5]).0, 0);
    }
}
