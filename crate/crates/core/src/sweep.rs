//! Batched oracle comparisons over ranges of types, ranks, starts and weights.

use rayon::prelude::*;
use serde::Serialize;

use crate::demchar::verify_against_points;
use crate::error::Result;
use crate::polytope::{build_system, enumerate_points, minkowski_check, normality_check, SystemOptions};
use crate::rootsys::{Family, LieType, ReflectionWord, Weight, WordVariant};

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub ranks: Vec<usize>,
    /// Restrict to this start index; all admissible starts otherwise.
    pub start: Option<usize>,
    /// Weights with coordinate sum `1..=sum_max` (plus zero when `include_zero`).
    pub sum_max: i64,
    pub include_zero: bool,
    pub minkowski: bool,
    pub normality: bool,
    pub options: SystemOptions,
    pub max_points: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            families: vec![Family::A, Family::C],
            ranks: vec![2, 3, 4],
            start: None,
            sum_max: 2,
            include_zero: false,
            minkowski: false,
            normality: false,
            options: SystemOptions::default(),
            max_points: Some(2_000_000),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub lie_type: String,
    pub start: usize,
    pub variant: String,
    pub lambda: String,
    pub points: usize,
    pub dim: i64,
    pub dim_match: bool,
    pub weights_match: bool,
    pub minkowski: Option<bool>,
    pub normality: Option<bool>,
    pub hard_gate: bool,
    pub first_mismatch: Option<String>,
    pub error: Option<String>,
}

impl SweepRow {
    pub fn pass(&self) -> bool {
        self.error.is_none()
            && self.dim_match
            && self.weights_match
            && self.minkowski != Some(false)
            && self.normality != Some(false)
    }
}

/// Types whose oracle comparisons are hard gates: A, C, and B₂.
pub fn is_hard_gate(ty: LieType) -> bool {
    matches!(ty.family(), Family::A | Family::C) || (ty.family() == Family::B && ty.rank() == 2)
}

pub fn variants_for(family: Family) -> Vec<WordVariant> {
    match family {
        Family::D => vec![WordVariant::Hatted, WordVariant::Full],
        _ => vec![WordVariant::Standard],
    }
}

/// All `(word, λ)` cells of a configuration, in canonical order.
pub fn cells(cfg: &SweepConfig) -> Vec<(ReflectionWord, Weight)> {
    let mut out = Vec::new();
    for &family in &cfg.families {
        for &rank in &cfg.ranks {
            let Ok(ty) = LieType::new(family, rank) else { continue };
            for variant in variants_for(family) {
                let starts: Vec<usize> = match cfg.start {
                    Some(s) => vec![s],
                    None => (1..=ReflectionWord::max_start(ty, variant)).collect(),
                };
                for start in starts {
                    let Ok(word) = ReflectionWord::reflection(ty, start, variant) else { continue };
                    for lam in Weight::dominant_up_to(rank, cfg.sum_max) {
                        if lam.total() == 0 && !cfg.include_zero {
                            continue;
                        }
                        out.push((word.clone(), lam));
                    }
                }
            }
        }
    }
    out
}

fn run_cell(cfg: &SweepConfig, word: &ReflectionWord, lam: &Weight) -> SweepRow {
    let ty = word.lie_type();
    let mut row = SweepRow {
        lie_type: ty.to_string(),
        start: word.start(),
        variant: word.variant().to_string(),
        lambda: lam.to_string(),
        points: 0,
        dim: 0,
        dim_match: false,
        weights_match: false,
        minkowski: None,
        normality: None,
        hard_gate: is_hard_gate(ty),
        first_mismatch: None,
        error: None,
    };
    let result: Result<()> = (|| {
        let system = build_system(word, &cfg.options)?;
        let points = enumerate_points(&system, lam, cfg.max_points)?;
        let report = verify_against_points(word, lam, &points)?;
        row.points = report.points;
        row.dim = report.dim;
        row.dim_match = report.dim_match;
        row.weights_match = report.weights_match;
        row.first_mismatch = report
            .first_mismatch
            .map(|(w, a, b)| format!("weight {} points {a} character {b}", Weight(w)));
        if cfg.minkowski {
            if let Some(i) = lam.coords().iter().position(|&m| m > 0) {
                let fund = Weight::fundamental(lam.rank(), i + 1);
                row.minkowski = Some(minkowski_check(&system, &fund, &lam.sub(&fund), cfg.max_points)?.equal);
            }
        }
        if cfg.normality {
            row.normality = Some(normality_check(&system, lam, 2, cfg.max_points)?.iter().all(|r| r.equal));
        }
        Ok(())
    })();
    if let Err(e) = result {
        row.error = Some(e.to_string());
    }
    row
}

/// Runs every cell in parallel; rows come back in canonical cell order.
pub fn run_sweep(cfg: &SweepConfig) -> Vec<SweepRow> {
    cells(cfg).par_iter().map(|(w, l)| run_cell(cfg, w, l)).collect()
}

pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let opt = |b: Option<bool>| b.map_or(String::new(), |v| v.to_string());
    let mut out = String::from("type,start,variant,lambda,points,dim,dim_match,weights_match,minkowski,normality,hard_gate,status,detail\n");
    for r in rows {
        let detail = r.error.clone().or_else(|| r.first_mismatch.clone()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},\"{}\",{},{},{},{},{},{},{},{},\"{}\"\n",
            r.lie_type,
            r.start,
            r.variant,
            r.lambda,
            r.points,
            r.dim,
            r.dim_match,
            r.weights_match,
            opt(r.minkowski),
            opt(r.normality),
            r.hard_gate,
            if r.pass() { "pass" } else { "fail" },
            detail.replace('"', "'"),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_range_is_empty() {
        let cfg = SweepConfig { ranks: vec![], ..SweepConfig::default() };
        assert!(run_sweep(&cfg).is_empty());
        assert_eq!(rows_to_csv(&[]).lines().count(), 1);
    }

    #[test]
    fn b2_fundamentals() {
        let cfg = SweepConfig { families: vec![Family::B], ranks: vec![2], start: Some(1), sum_max: 1, ..SweepConfig::default() };
        let rows = run_sweep(&cfg);
        let got: Vec<(String, usize, i64)> = rows.iter().map(|r| (r.lambda.clone(), r.points, r.dim)).collect();
        assert_eq!(got, vec![("1,0".into(), 5, 5), ("0,1".into(), 3, 3)]);
        assert!(rows.iter().all(|r| r.pass() && r.hard_gate));
    }

    #[test]
    fn small_a_and_c_pass() {
        let cfg = SweepConfig { ranks: vec![2, 3], sum_max: 2, minkowski: true, normality: true, ..SweepConfig::default() };
        let rows = run_sweep(&cfg);
        assert!(!rows.is_empty());
        for r in &rows {
            assert!(r.pass(), "{r:?}");
        }
    }
}
