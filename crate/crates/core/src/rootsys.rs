//! Cartan data, positive roots, reflection words, inversion sets and weight
//! arithmetic for the classical types.
//!
//! Roots are stored by label `(start, end, barred)` together with their
//! expansion in simple roots. Weights are stored in fundamental-weight
//! coordinates, so the `k`-th coordinate of a weight is its pairing with the
//! coroot `α_k^∨`, and the simple root `α_j` is column `j` of the Cartan matrix.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 4,
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown Lie type family {other:?}"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A classical Lie type `X_n`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = family.min_rank();
        if rank < min {
            return Err(Error::RankDomain { family, rank, min });
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A positive root `α_{i,j}` or `α_{i,\bar j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub start: usize,
    pub end: usize,
    pub barred: bool,
    /// Expansion in simple roots `α_1 … α_n`.
    pub coeffs: Vec<i64>,
}

impl Root {
    /// Wire label: `a[i,j]` or `a[i,-j]`.
    pub fn label(&self) -> String {
        if self.barred {
            format!("a[{},-{}]", self.start, self.end)
        } else {
            format!("a[{},{}]", self.start, self.end)
        }
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Pairing with `ω_i` is nonzero.
    pub fn involves(&self, i: usize) -> bool {
        i >= 1 && i <= self.coeffs.len() && self.coeffs[i - 1] != 0
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Parses `a[i,j]` / `a[i,-j]` into `(start, end, barred)`.
pub fn parse_root_label(label: &str) -> Result<(usize, usize, bool)> {
    let bad = || Error::Parse(format!("bad root label {label:?}"));
    let inner = label
        .trim()
        .strip_prefix("a[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(bad)?;
    let (a, b) = inner.split_once(',').ok_or_else(bad)?;
    let start: usize = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim();
    let (barred, b) = match b.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, b),
    };
    let end: usize = b.parse().map_err(|_| bad())?;
    Ok((start, end, barred))
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut m = vec![0; rank];
        m[i - 1] = 1;
        Weight(m)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// All dominant weights of the given rank with coordinate sum at most `max_total`.
    pub fn dominant_up_to(rank: usize, max_total: i64) -> Vec<Weight> {
        fn rec(rank: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if cur.len() == rank {
                out.push(Weight(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur.push(v);
                rec(rank, left - v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rank, max_total.max(0), &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| b.0.cmp(&a.0)));
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate {p:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Bourbaki Cartan matrix, `cartan[k][j] = ⟨α_j, α_k^∨⟩`; column `j` holds the
/// fundamental-weight coordinates of `α_j`.
pub fn cartan_matrix(ty: LieType) -> Vec<Vec<i64>> {
    let n = ty.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (k, row) in a.iter_mut().enumerate() {
        row[k] = 2;
    }
    let link = |a: &mut Vec<Vec<i64>>, x: usize, y: usize| {
        a[x][y] = -1;
        a[y][x] = -1;
    };
    match ty.family() {
        Family::A => {
            for k in 0..n.saturating_sub(1) {
                link(&mut a, k, k + 1);
            }
        }
        Family::B => {
            for k in 0..n - 1 {
                link(&mut a, k, k + 1);
            }
            // α_n short
            a[n - 1][n - 2] = -2;
        }
        Family::C => {
            for k in 0..n - 1 {
                link(&mut a, k, k + 1);
            }
            // α_n long
            a[n - 2][n - 1] = -2;
        }
        Family::D => {
            for k in 0..n - 2 {
                link(&mut a, k, k + 1);
            }
            link(&mut a, n - 3, n - 1);
        }
    }
    a
}

fn coeff_vector(n: usize, ranges: &[(usize, usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &(lo, hi, c) in ranges {
        for k in lo..=hi {
            v[k - 1] += c;
        }
    }
    v
}

/// All positive roots with their simple-root expansions.
pub fn build_positive_roots(ty: LieType) -> Vec<Root> {
    let n = ty.rank();
    let mut roots = Vec::with_capacity(ty.num_positive_roots());
    let unbarred_max = match ty.family() {
        Family::A | Family::B | Family::C => n,
        Family::D => n - 1,
    };
    for i in 1..=n {
        for j in i..=unbarred_max {
            roots.push(Root { start: i, end: j, barred: false, coeffs: coeff_vector(n, &[(i, j, 1)]) });
        }
    }
    match ty.family() {
        Family::A => {}
        Family::B => {
            for i in 1..=n {
                for j in i + 1..=n {
                    let coeffs = coeff_vector(n, &[(i, j - 1, 1), (j, n, 2)]);
                    roots.push(Root { start: i, end: j, barred: true, coeffs });
                }
            }
        }
        Family::C => {
            // α_{i,\bar n} coincides with α_{i,n} and is stored unbarred.
            for i in 1..=n {
                for j in i..n {
                    let coeffs = coeff_vector(n, &[(i, j - 1, 1), (j, n - 1, 2), (n, n, 1)]);
                    roots.push(Root { start: i, end: j, barred: true, coeffs });
                }
            }
        }
        Family::D => {
            for i in 1..=n {
                for j in i + 1..=n {
                    let mut coeffs = vec![0; n];
                    for k in i..=n.saturating_sub(2) {
                        coeffs[k - 1] += 1;
                    }
                    for k in j..=n {
                        coeffs[k - 1] += 1;
                    }
                    roots.push(Root { start: i, end: j, barred: true, coeffs });
                }
            }
        }
    }
    roots
}

/// Cartan matrix plus positive roots, the context most operations need.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        Self { lie_type, cartan: cartan_matrix(lie_type), positive: build_positive_roots(lie_type) }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn root_by_coeffs(&self, coeffs: &[i64]) -> Option<&Root> {
        self.positive.iter().find(|r| r.coeffs == coeffs)
    }

    /// Root with a given label, applying the type C identification
    /// `α_{i,\bar n} = α_{i,n}`.
    pub fn root_by_label(&self, start: usize, end: usize, barred: bool) -> Option<&Root> {
        let n = self.rank();
        let (end, barred) = match self.lie_type.family() {
            Family::C if barred && end == n => (n, false),
            _ => (end, barred),
        };
        self.positive.iter().find(|r| r.start == start && r.end == end && r.barred == barred)
    }

    pub fn root_by_wire(&self, label: &str) -> Result<&Root> {
        let (s, e, b) = parse_root_label(label)?;
        self.root_by_label(s, e, b)
            .ok_or_else(|| Error::Parse(format!("{label} is not a positive root of {}", self.lie_type)))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: self.rank() });
        }
        Ok(())
    }

    /// `⟨v, α_i^∨⟩` for `v` in simple-root coordinates.
    pub fn pair_with_coroot(&self, v: &[i64], i: usize) -> i64 {
        v.iter().zip(&self.cartan[i - 1]).map(|(a, c)| a * c).sum()
    }

    /// `s_i(v)` for `v` in simple-root coordinates.
    pub fn simple_reflection_apply(&self, i: usize, v: &[i64]) -> Result<Vec<i64>> {
        self.check_index(i)?;
        if v.len() != self.rank() {
            return Err(Error::LengthMismatch { expected: self.rank(), actual: v.len() });
        }
        let p = self.pair_with_coroot(v, i);
        let mut out = v.to_vec();
        out[i - 1] -= p;
        Ok(out)
    }

    /// `s_i(μ)` for `μ` in fundamental-weight coordinates.
    pub fn reflect_weight(&self, i: usize, mu: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        let k = mu.0[i - 1];
        let mut out = mu.0.clone();
        for (row, o) in out.iter_mut().enumerate() {
            *o -= k * self.cartan[row][i - 1];
        }
        Ok(Weight(out))
    }

    /// Converts a simple-root expansion into fundamental-weight coordinates.
    pub fn root_to_weight(&self, coeffs: &[i64]) -> Weight {
        let n = self.rank();
        Weight((0..n).map(|k| (0..n).map(|j| self.cartan[k][j] * coeffs[j]).sum()).collect())
    }

    pub fn simple_root_weight(&self, i: usize) -> Weight {
        Weight((0..self.rank()).map(|k| self.cartan[k][i - 1]).collect())
    }
}

/// Simple-reflection action on a coefficient vector; free-function form.
pub fn simple_reflection_apply(ty: LieType, i: usize, v: &[i64]) -> Result<Vec<i64>> {
    RootSystem::new(ty).simple_reflection_apply(i, v)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WordVariant {
    /// `s_i ⋯ s_n ⋯ s_i` (types A, B, C).
    Standard,
    /// Type D word `s_i ⋯ s_{n-1} s_n s_{n-2} ⋯ s_i`.
    Hatted,
    /// Type D word `s_i ⋯ s_{n-1} s_n s_{n-1} ⋯ s_i`, stored in its reduced
    /// form `s_i ⋯ s_{n-2} s_n s_{n-2} ⋯ s_i`.
    Full,
    /// Arbitrary letters; no polytope is attached.
    Custom,
}

impl FromStr for WordVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "standard" => Ok(WordVariant::Standard),
            "hatted" => Ok(WordVariant::Hatted),
            "full" => Ok(WordVariant::Full),
            other => Err(Error::Parse(format!("unknown word variant {other:?}"))),
        }
    }
}

impl fmt::Display for WordVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            WordVariant::Standard => "standard",
            WordVariant::Hatted => "hatted",
            WordVariant::Full => "full",
            WordVariant::Custom => "custom",
        };
        f.write_str(s)
    }
}

/// A word in the simple reflections.
///
/// For the reflection words the letters rise along a ladder of simple indices
/// from `start` to the top node and descend back to `start`. A suffix word
/// `s_k ⋯ s_top ⋯ s_start` drops the rising letters before `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ReflectionWord {
    lie_type: LieType,
    start: usize,
    end: usize,
    variant: WordVariant,
    suffix_from: Option<usize>,
    letters: Vec<usize>,
}

impl ReflectionWord {
    /// The word of `r_γ` starting at `start`; `variant` must be
    /// [`WordVariant::Standard`] outside type D.
    pub fn reflection(lie_type: LieType, start: usize, variant: WordVariant) -> Result<Self> {
        Self::build(lie_type, start, lie_type.rank(), variant, None)
    }

    /// Type A word `s_i ⋯ s_k ⋯ s_i` for the reflection at `α_{i,k}`.
    pub fn hook(lie_type: LieType, start: usize, end: usize) -> Result<Self> {
        if lie_type.family() != Family::A {
            return Err(Error::Unsupported("hook words with end < n exist only in type A".into()));
        }
        Self::build(lie_type, start, end, WordVariant::Standard, None)
    }

    /// Arbitrary letters, used to probe reducedness.
    pub fn from_letters(lie_type: LieType, letters: Vec<usize>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l > lie_type.rank() {
                return Err(Error::IndexOutOfRange { index: l, rank: lie_type.rank() });
            }
        }
        Ok(Self {
            lie_type,
            start: letters.first().copied().unwrap_or(1),
            end: lie_type.rank(),
            variant: WordVariant::Custom,
            suffix_from: None,
            letters,
        })
    }

    /// The suffix `s_k ⋯ s_top ⋯ s_start` of this word.
    pub fn suffix(&self, k: usize) -> Result<Self> {
        if self.variant == WordVariant::Custom || self.suffix_from.is_some() {
            return Err(Error::Unsupported("suffixes are taken of reflection words only".into()));
        }
        Self::build(self.lie_type, self.start, self.end, self.variant, Some(k))
    }

    /// Largest admissible start index for a family and variant.
    pub fn max_start(lie_type: LieType, variant: WordVariant) -> usize {
        let n = lie_type.rank();
        match (lie_type.family(), variant) {
            (Family::D, WordVariant::Hatted) => n - 3,
            (Family::D, WordVariant::Full) => n - 2,
            _ => n,
        }
    }

    fn build(lie_type: LieType, start: usize, end: usize, variant: WordVariant, suffix_from: Option<usize>) -> Result<Self> {
        let n = lie_type.rank();
        let family = lie_type.family();
        let variant_ok = match family {
            Family::D => matches!(variant, WordVariant::Hatted | WordVariant::Full),
            _ => variant == WordVariant::Standard,
        };
        if !variant_ok {
            return Err(Error::VariantMismatch { lie_type: lie_type.to_string(), variant: variant.to_string() });
        }
        let max = if family == Family::A { end.min(n) } else { Self::max_start(lie_type, variant) };
        if start == 0 || start > max || end > n || end < start {
            return Err(Error::StartOutOfRange { lie_type: lie_type.to_string(), start, max });
        }
        let (rising, falling): (Vec<usize>, Vec<usize>) = match variant {
            WordVariant::Standard => ((start..=end).collect(), (start..end).rev().collect()),
            WordVariant::Hatted => ((start..=n).collect(), (start..=n - 2).rev().collect()),
            WordVariant::Full => {
                let mut rise: Vec<usize> = (start..=n - 2).collect();
                rise.push(n);
                (rise, (start..=n - 2).rev().collect())
            }
            WordVariant::Custom => unreachable!(),
        };
        let rising = match suffix_from {
            None => rising,
            Some(k) => {
                let pos = rising.iter().position(|&l| l == k).filter(|&p| p > 0).ok_or_else(|| {
                    Error::StartOutOfRange { lie_type: lie_type.to_string(), start: k, max: *rising.last().unwrap() }
                })?;
                rising[pos..].to_vec()
            }
        };
        let mut letters = rising;
        letters.extend(falling);
        Ok(Self { lie_type, start, end, variant, suffix_from, letters })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Top of the ladder: `n`, or the hook end `k` in type A.
    pub fn end(&self) -> usize {
        self.end
    }

    pub fn variant(&self) -> WordVariant {
        self.variant
    }

    pub fn suffix_from(&self) -> Option<usize> {
        self.suffix_from
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `w(v)` for `v` in simple-root coordinates, with `w = s_{i_1} ⋯ s_{i_l}`.
    pub fn apply_to_root(&self, rs: &RootSystem, v: &[i64]) -> Vec<i64> {
        let mut out = v.to_vec();
        for &i in self.letters.iter().rev() {
            out = rs.simple_reflection_apply(i, &out).expect("letters validated at construction");
        }
        out
    }

    /// `w(μ)` for `μ` in fundamental-weight coordinates.
    pub fn apply_to_weight(&self, rs: &RootSystem, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        for &i in self.letters.iter().rev() {
            out = rs.reflect_weight(i, &out).expect("letters validated at construction");
        }
        out
    }
}

/// Reflection word constructor in free-function form.
pub fn reflection_word(lie_type: LieType, start: usize, variant: WordVariant) -> Result<ReflectionWord> {
    ReflectionWord::reflection(lie_type, start, variant)
}

/// Position of a root along the chains of the displayed posets; the poset
/// order is `α ≥ β ⇔ start(α) ≤ start(β) ∧ key(α) ≤ key(β)`.
pub fn chain_key(ty: LieType, root: &Root) -> usize {
    let n = ty.rank();
    if !root.barred {
        return root.end;
    }
    match ty.family() {
        Family::A => root.end,
        Family::B | Family::C => 2 * n + 1 - root.end,
        Family::D => {
            if root.end == n {
                n - 1
            } else {
                2 * n - root.end
            }
        }
    }
}

/// Total order used for listing coordinates; refines the poset order.
pub fn chain_cmp(ty: LieType, a: &Root, b: &Root) -> Ordering {
    (a.start, chain_key(ty, a), a.barred).cmp(&(b.start, chain_key(ty, b), b.barred))
}

/// The inversion set `R_w⁻` with its restricted partial order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootPoset {
    lie_type: LieType,
    elements: Vec<Root>,
    /// Pairs `(a, b)` of element indices where `elements[a]` covers `elements[b]`.
    covers: Vec<(usize, usize)>,
}

impl RootPoset {
    pub fn from_roots(lie_type: LieType, mut elements: Vec<Root>) -> Self {
        elements.sort_by(|a, b| chain_cmp(lie_type, a, b));
        let len = elements.len();
        let ge = |a: &Root, b: &Root| a.start <= b.start && chain_key(lie_type, a) <= chain_key(lie_type, b);
        let gt = |a: usize, b: usize| {
            let (x, y) = (&elements[a], &elements[b]);
            a != b && ge(x, y) && !(x.start == y.start && chain_key(lie_type, x) == chain_key(lie_type, y))
        };
        let mut covers = Vec::new();
        for a in 0..len {
            for b in 0..len {
                if gt(a, b) && !(0..len).any(|c| gt(a, c) && gt(c, b)) {
                    covers.push((a, b));
                }
            }
        }
        Self { lie_type, elements, covers }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn elements(&self) -> &[Root] {
        &self.elements
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, root: &Root) -> Option<usize> {
        self.elements.iter().position(|r| r == root)
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.index_of(root).is_some()
    }

    /// Strict order `a > b` in the restricted poset.
    pub fn greater(&self, a: usize, b: usize) -> bool {
        let (x, y) = (&self.elements[a], &self.elements[b]);
        let kx = chain_key(self.lie_type, x);
        let ky = chain_key(self.lie_type, y);
        a != b && x.start <= y.start && kx <= ky && !(x.start == y.start && kx == ky)
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements.iter().map(Root::label).collect()
    }
}

/// Inversion set `R⁺ ∩ w⁻¹(R⁻)` computed by applying `w` to every positive
/// root; fails when its size differs from the word length.
pub fn inversion_set(word: &ReflectionWord) -> Result<RootPoset> {
    let rs = RootSystem::new(word.lie_type());
    let inverted: Vec<Root> = rs
        .positive_roots()
        .iter()
        .filter(|r| word.apply_to_root(&rs, &r.coeffs).iter().all(|&c| c <= 0))
        .cloned()
        .collect();
    if inverted.len() != word.len() {
        return Err(Error::NonReducedWord {
            letters: word.letters().to_vec(),
            inversions: inverted.len(),
            len: word.len(),
        });
    }
    Ok(RootPoset::from_roots(word.lie_type(), inverted))
}

/// `λ − Σ_α s_α α` in fundamental-weight coordinates.
pub fn weight_of_point(rs: &RootSystem, s: &[u32], lambda: &Weight, poset: &RootPoset) -> Result<Weight> {
    if s.len() != poset.len() {
        return Err(Error::LengthMismatch { expected: poset.len(), actual: s.len() });
    }
    if lambda.rank() != rs.rank() {
        return Err(Error::LengthMismatch { expected: rs.rank(), actual: lambda.rank() });
    }
    let n = rs.rank();
    let mut total = vec![0i64; n];
    for (root, &e) in poset.elements().iter().zip(s) {
        for (t, c) in total.iter_mut().zip(&root.coeffs) {
            *t += c * e as i64;
        }
    }
    Ok(lambda.sub(&rs.root_to_weight(&total)))
}
