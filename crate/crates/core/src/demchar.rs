//! Demazure characters computed with Demazure operators; the independent
//! oracle for dimensions and weight multiplicities.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polytope::PointSet;
use crate::rootsys::{inversion_set, weight_of_point, LieType, ReflectionWord, RootSystem, Weight};

/// A finite sum `Σ c_μ e^μ` with weights in fundamental-weight coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterPoly {
    terms: BTreeMap<Vec<i64>, i64>,
}

impl CharacterPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(mu: &Weight) -> Self {
        let mut c = Self::new();
        c.add_term(mu.coords().to_vec(), 1);
        c
    }

    pub fn add_term(&mut self, weight: Vec<i64>, mult: i64) {
        if mult == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(weight) {
            Entry::Vacant(v) => {
                v.insert(mult);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, i64> {
        &self.terms
    }

    pub fn mult(&self, mu: &Weight) -> i64 {
        self.terms.get(mu.coords()).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The Demazure operator `D_i` on a character.
pub fn demazure_op(rs: &RootSystem, i: usize, f: &CharacterPoly) -> Result<CharacterPoly> {
    let n = rs.rank();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    let alpha = rs.simple_root_weight(i);
    let shift = |mu: &[i64], t: i64| -> Vec<i64> { mu.iter().zip(alpha.coords()).map(|(m, a)| m + t * a).collect() };
    let mut out = CharacterPoly::new();
    for (mu, &c) in f.terms() {
        if mu.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: mu.len() });
        }
        let k = mu[i - 1];
        if k >= 0 {
            for t in 0..=k {
                out.add_term(shift(mu, -t), c);
            }
        } else if k <= -2 {
            for t in 1..=(-k - 1) {
                out.add_term(shift(mu, t), -c);
            }
        }
    }
    Ok(out)
}

/// `D_{i_1} ⋯ D_{i_l} e^λ` for a reduced word, rightmost operator first.
pub fn demazure_character(word: &ReflectionWord, lambda: &Weight) -> Result<CharacterPoly> {
    let rs = RootSystem::new(word.lie_type());
    if lambda.rank() != rs.rank() {
        return Err(Error::LengthMismatch { expected: rs.rank(), actual: lambda.rank() });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    inversion_set(word)?;
    let mut f = CharacterPoly::monomial(lambda);
    for &i in word.letters().iter().rev() {
        f = demazure_op(&rs, i, &f)?;
    }
    Ok(f)
}

pub fn dimension(c: &CharacterPoly) -> i64 {
    c.dimension()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterTerm {
    pub weight: Vec<i64>,
    pub mult: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterRecord {
    pub lambda: Vec<i64>,
    pub word: Vec<usize>,
    pub dim: i64,
    pub terms: Vec<CharacterTerm>,
}

pub fn character_record(word: &ReflectionWord, lambda: &Weight, c: &CharacterPoly) -> CharacterRecord {
    CharacterRecord {
        lambda: lambda.coords().to_vec(),
        word: word.letters().to_vec(),
        dim: c.dimension(),
        terms: c.terms().iter().map(|(w, &m)| CharacterTerm { weight: w.clone(), mult: m }).collect(),
    }
}

/// Weight multiset of a point set: `w(λ − Σ s_α α)` for every point.
pub fn point_weights(word: &ReflectionWord, lambda: &Weight, points: &PointSet) -> Result<CharacterPoly> {
    let rs = RootSystem::new(word.lie_type());
    let poset = inversion_set(word)?;
    let mut c = CharacterPoly::new();
    for p in &points.points {
        let mu = weight_of_point(&rs, p, lambda, &poset)?;
        c.add_term(word.apply_to_weight(&rs, &mu).coords().to_vec(), 1);
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub lambda: Vec<i64>,
    pub points: usize,
    pub dim: i64,
    pub dim_match: bool,
    pub weights_match: bool,
    /// First weight (in key order) whose multiplicities differ, with
    /// `(point count, character multiplicity)`.
    pub first_mismatch: Option<(Vec<i64>, i64, i64)>,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.dim_match && self.weights_match
    }
}

/// Compares a point set with the Demazure character of the same word and weight.
pub fn verify_against_points(word: &ReflectionWord, lambda: &Weight, points: &PointSet) -> Result<OracleReport> {
    let character = demazure_character(word, lambda)?;
    let weights = point_weights(word, lambda, points)?;
    let mut keys: Vec<&Vec<i64>> = character.terms().keys().chain(weights.terms().keys()).collect();
    keys.sort();
    keys.dedup();
    let first_mismatch = keys.into_iter().find_map(|k| {
        let a = weights.terms().get(k).copied().unwrap_or(0);
        let b = character.terms().get(k).copied().unwrap_or(0);
        (a != b).then(|| (k.clone(), a, b))
    });
    Ok(OracleReport {
        lambda: lambda.coords().to_vec(),
        points: points.count,
        dim: character.dimension(),
        dim_match: points.count as i64 == character.dimension(),
        weights_match: first_mismatch.is_none(),
        first_mismatch,
    })
}

/// `w(λ)` where `w` is the product of the word's letters.
pub fn extremal_weight(ty: LieType, word: &ReflectionWord, lambda: &Weight) -> Weight {
    word.apply_to_weight(&RootSystem::new(ty), lambda)
}
