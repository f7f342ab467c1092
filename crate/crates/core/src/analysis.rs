//! Dimension, gap statistics, a finite-stage thickness proxy, and
//! translation-intersection experiments.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::interval::{ClosedInterval, IntervalSet};
use crate::rational::Rational;

/// Largest decimal precision honoured for `log K / log(1/r)`; beyond this an
/// `f64` evaluation is no longer trustworthy.
pub const MAX_DIMENSION_PRECISION: usize = 12;

/// `log K / log(1/r)` for `K` maps of common ratio `r`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Dimension {
    pub maps: u32,
    pub ratio_reciprocal: u32,
    pub value: f64,
    pub decimal: String,
}

pub fn hausdorff_dimension(maps: u32, ratio_reciprocal: u32, precision: usize) -> Result<Dimension> {
    if maps < 2 || ratio_reciprocal < 2 {
        return Err(Error::Domain(format!(
            "need at least 2 maps and ratio 1/r with r >= 2, got K = {maps}, 1/r = {ratio_reciprocal}"
        )));
    }
    if maps > ratio_reciprocal {
        return Err(Error::Domain(format!(
            "{maps} maps of ratio 1/{ratio_reciprocal} must overlap"
        )));
    }
    if precision > MAX_DIMENSION_PRECISION {
        return Err(Error::Domain(format!(
            "precision {precision} exceeds {MAX_DIMENSION_PRECISION} digits"
        )));
    }
    let value = f64::from(maps).ln() / f64::from(ratio_reciprocal).ln();
    Ok(Dimension {
        maps,
        ratio_reciprocal,
        value,
        decimal: format!("{value:.precision$}"),
    })
}

/// Dimension of a family member's limit set.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpecDimension {
    /// Self-similar with a single ratio.
    SelfSimilar(Dimension),
    /// Positive Lebesgue measure, hence dimension exactly 1.
    PositiveMeasure { measure: Rational },
}

pub fn spec_dimension(spec: &FamilySpec, precision: usize) -> Result<SpecDimension> {
    let (maps, ratio) = match spec {
        FamilySpec::Gamma3(g) => {
            let measure = g.measure();
            if !measure.is_zero() {
                return Ok(SpecDimension::PositiveMeasure { measure });
            }
            // only α = 1/3 has measure zero, which is the middle-third set
            (2, 3)
        }
        other => {
            let d = other.digit_ifs().expect("digit presentation");
            (d.alphabet().len() as u32, d.base())
        }
    };
    hausdorff_dimension(maps, ratio, precision).map(SpecDimension::SelfSimilar)
}

/// Exact distribution of gap lengths.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GapStatistics {
    pub stage: Option<u32>,
    pub count: usize,
    pub min_gap: Option<Rational>,
    pub max_gap: Option<Rational>,
    pub total_gap: Rational,
    /// `(length, multiplicity)`, longest first.
    pub histogram: Vec<HistogramBin>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HistogramBin {
    pub length: Rational,
    pub multiplicity: usize,
}

pub fn gap_statistics(s: &IntervalSet, hull: &ClosedInterval) -> Result<GapStatistics> {
    let gaps = s.gaps_within(hull)?;
    let mut bins: BTreeMap<Rational, usize> = BTreeMap::new();
    for g in &gaps {
        *bins.entry(g.length()).or_default() += 1;
    }
    Ok(GapStatistics {
        stage: None,
        count: gaps.len(),
        min_gap: bins.keys().next().cloned(),
        max_gap: bins.keys().next_back().cloned(),
        total_gap: gaps.total_length(),
        histogram: bins
            .into_iter()
            .rev()
            .map(|(length, multiplicity)| HistogramBin { length, multiplicity })
            .collect(),
    })
}

/// Gap statistics of a family's stage-`n` set inside `[0,1]`.
pub fn stage_gap_statistics(spec: &FamilySpec, n: u32) -> Result<GapStatistics> {
    let mut stats = gap_statistics(&spec.stage(n)?, &ClosedInterval::unit())?;
    stats.stage = Some(n);
    Ok(stats)
}

/// Finite-stage thickness proxy.
///
/// For every gap `G` lying between two components, each side has a bridge:
/// the stretch from the edge of `G` to the nearest gap at least as long as
/// `G`, or to the hull boundary. The proxy is the minimum over interior gaps
/// of `min(left bridge, right bridge) / |G|`.
pub fn thickness_proxy(s: &IntervalSet, hull: &ClosedInterval) -> Result<Rational> {
    if s.len() < 2 {
        return Err(Error::Undefined(format!(
            "thickness proxy needs at least 2 components, got {}",
            s.len()
        )));
    }
    let gaps = s.gaps_within(hull)?;
    let gaps = gaps.gaps();
    let lengths: Vec<Rational> = gaps.iter().map(|g| g.length()).collect();
    let left_stop = nearest_at_least(&lengths, 0..gaps.len());
    let right_stop = nearest_at_least(&lengths, (0..gaps.len()).rev());

    let mut best: Option<Rational> = None;
    for (i, gap) in gaps.iter().enumerate() {
        let interior = gap.lo() > hull.lo() && gap.hi() < hull.hi();
        if !interior {
            continue;
        }
        let left_edge = left_stop[i].map_or(hull.lo(), |j| gaps[j].hi());
        let right_edge = right_stop[i].map_or(hull.hi(), |j| gaps[j].lo());
        let left = gap.lo() - left_edge;
        let right = right_edge - gap.hi();
        let ratio = left.min(right) / &lengths[i];
        best = Some(match best {
            Some(b) if b <= ratio => b,
            _ => ratio,
        });
    }
    best.ok_or_else(|| Error::Undefined("no interior gap".into()))
}

/// For each index in visiting order, the most recently visited index whose
/// length is at least as large (monotone stack).
fn nearest_at_least(lengths: &[Rational], order: impl Iterator<Item = usize>) -> Vec<Option<usize>> {
    let mut out = vec![None; lengths.len()];
    let mut stack: Vec<usize> = Vec::new();
    for i in order {
        while stack.last().is_some_and(|&j| lengths[j] < lengths[i]) {
            stack.pop();
        }
        out[i] = stack.last().copied();
        stack.push(i);
    }
    out
}

/// Stage-`n` set of `a` intersected with the stage-`n` set of `b` shifted
/// by `t`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Intersection {
    pub set: IntervalSet,
    pub length: Rational,
}

pub fn translate_intersection(a: &FamilySpec, b: &FamilySpec, t: &Rational, n: u32) -> Result<Intersection> {
    let set = a.stage(n)?.intersect(&b.stage(n)?.translate(t));
    Ok(Intersection {
        length: set.total_length(),
        set,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepRow {
    pub t: Rational,
    pub intersection_length: Rational,
    pub component_count: usize,
}

/// [`translate_intersection`] over a grid of shifts; stage sets are built once.
pub fn translation_sweep(a: &FamilySpec, b: &FamilySpec, shifts: &[Rational], n: u32) -> Result<Vec<SweepRow>> {
    let left = a.stage(n)?;
    let right = b.stage(n)?;
    Ok(shifts
        .iter()
        .map(|t| {
            let set = left.intersect(&right.translate(t));
            SweepRow {
                t: t.clone(),
                intersection_length: set.total_length(),
                component_count: set.len(),
            }
        })
        .collect())
}

/// `count` shifts evenly spaced over `[from, to]`, endpoints included.
pub fn shift_grid(from: &Rational, to: &Rational, count: usize) -> Result<Vec<Rational>> {
    match count {
        0 => Ok(Vec::new()),
        1 => Ok(vec![from.clone()]),
        _ => {
            let step = (to - from) / Rational::integer(count as i64 - 1);
            Ok((0..count)
                .map(|i| from + &(Rational::integer(i as i64) * &step))
                .collect())
        }
    }
}

/// CSV with header `t_num,t_den,intersection_length_num,intersection_length_den,component_count`.
pub fn sweep_to_csv(rows: &[SweepRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "t_num",
            "t_den",
            "intersection_length_num",
            "intersection_length_den",
            "component_count",
        ])
        .expect("in-memory write");
    for row in rows {
        writer
            .write_record([
                row.t.numer().to_string(),
                row.t.denom().to_string(),
                row.intersection_length.numer().to_string(),
                row.intersection_length.denom().to_string(),
                row.component_count.to_string(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
}
