//! Stage-wise equivalence checks between independent constructions.
//!
//! A comparison that shows differences is a result, not an error. Only
//! [`verify_gamma3`] is expected to come out all-equal; the digit and
//! printed-gap comparisons record whatever they find.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::family::{DigitIfs, Gamma1, Gamma2, Gamma3};
use crate::interval::IntervalSet;
use crate::rational::Rational;

/// Outcome of comparing two stage sets.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub left_label: String,
    pub right_label: String,
    pub stage: u32,
    pub equal: bool,
    /// Closure of `left \ right`.
    pub left_minus_right: IntervalSet,
    /// Closure of `right \ left`.
    pub right_minus_left: IntervalSet,
    /// A point in exactly one of the two sets.
    pub witness: Option<Rational>,
}

impl ComparisonReport {
    pub fn new(
        left_label: impl Into<String>,
        right_label: impl Into<String>,
        stage: u32,
        left: &IntervalSet,
        right: &IntervalSet,
    ) -> Self {
        let left_minus_right = left.difference_closure(right);
        let right_minus_left = right.difference_closure(left);
        // leftmost component of either difference; its midpoint is interior
        // to that piece, or the point itself when the piece is degenerate
        let first = match (left_minus_right.intervals().first(), right_minus_left.intervals().first()) {
            (Some(a), Some(b)) => Some(if a.lo() <= b.lo() { a } else { b }),
            (a, b) => a.or(b),
        };
        ComparisonReport {
            left_label: left_label.into(),
            right_label: right_label.into(),
            stage,
            equal: left_minus_right.is_empty() && right_minus_left.is_empty(),
            witness: first.map(|c| c.midpoint()),
            left_minus_right,
            right_minus_left,
        }
    }
}

/// Compares two canonical stage sets by exact symmetric difference.
pub fn compare_stages(a: &IntervalSet, b: &IntervalSet) -> ComparisonReport {
    ComparisonReport::new("left", "right", 0, a, b)
}

/// Whether every report in the sequence found equality.
pub fn all_equal(reports: &[ComparisonReport]) -> bool {
    reports.iter().all(|r| r.equal)
}

/// Endpoint recursion against the direct middle-α construction, `n = 0..=n_max`.
pub fn verify_gamma3(spec: &Gamma3, n_max: u32) -> Result<Vec<ComparisonReport>> {
    (0..=n_max)
        .map(|n| {
            Ok(ComparisonReport::new(
                format!("gamma3:p={},q={} endpoint recursion", spec.p(), spec.q()),
                "nested middle-alpha construction",
                n,
                &spec.endpoints(n).stage_set(),
                &spec.nested_stage(n)?,
            ))
        })
        .collect()
}

/// The base-`2q` digit set against the direct middle-α construction.
pub fn verify_digit_characterization(spec: &Gamma3, n_max: u32) -> Result<Vec<ComparisonReport>> {
    let digits = spec.digit_spec();
    let label = digit_label(&digits);
    (0..=n_max)
        .map(|n| {
            Ok(ComparisonReport::new(
                label.clone(),
                "nested middle-alpha construction",
                n,
                &digits.stage(n),
                &spec.nested_stage(n)?,
            ))
        })
        .collect()
}

/// Printed gap formula against the `{0, q-1}` digit set.
pub fn verify_gamma2_formula(spec: &Gamma2, n_max: u32) -> Result<Vec<ComparisonReport>> {
    let digits = spec.digit_ifs();
    let label = digit_label(&digits);
    (0..=n_max)
        .map(|n| {
            Ok(ComparisonReport::new(
                format!("gamma2:q={} printed gaps", spec.q()),
                label.clone(),
                n,
                &spec.stage(n)?,
                &digits.stage(n),
            ))
        })
        .collect()
}

/// Even-digit gap formula against the even-digit set.
pub fn verify_gamma1_formula(spec: &Gamma1, n_max: u32) -> Result<Vec<ComparisonReport>> {
    let digits = spec.digit_ifs();
    let label = digit_label(&digits);
    (0..=n_max)
        .map(|n| {
            Ok(ComparisonReport::new(
                format!("gamma1:q={} gaps", spec.q()),
                label.clone(),
                n,
                &spec.stage(n)?,
                &digits.stage(n),
            ))
        })
        .collect()
}

/// The four descriptions of the middle-third set, compared pairwise at every
/// stage `0..=n_max`.
pub fn verify_middle_third(n_max: u32) -> Result<Vec<ComparisonReport>> {
    let gamma1 = Gamma1::new(3)?;
    let gamma2 = Gamma2::new(3)?;
    let gamma3 = Gamma3::new(1, 3)?;
    let digits = DigitIfs::new(3, vec![0, 2])?;
    let mut reports = Vec::new();
    for n in 0..=n_max {
        let sets = [
            ("gamma1:q=3 gaps", gamma1.stage(n)?),
            ("gamma2:q=3 gaps", gamma2.stage(n)?),
            ("gamma3:p=1,q=3 endpoint recursion", gamma3.endpoints(n).stage_set()),
            ("digit:base=3,A=0,2", digits.stage(n)),
        ];
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                reports.push(ComparisonReport::new(sets[i].0, sets[j].0, n, &sets[i].1, &sets[j].1));
            }
        }
    }
    Ok(reports)
}

fn digit_label(spec: &DigitIfs) -> String {
    let digits: Vec<String> = spec.alphabet().iter().map(u32::to_string).collect();
    format!("digit:base={},A={}", spec.base(), digits.join(","))
}

/// Membership of `x` in the limit set of a digit IFS, for every reduced
/// `x = a/b` in `[0,1]` with `b <= denominator_bound`.
///
/// For a fixed denominator `b` the remainders `c/b`, `0 <= c <= b`, form a
/// finite automaton: digit `d` moves `c` to `c*base - d*b` when that stays in
/// `[0, b]`. `x` is in the limit set iff some infinite path of allowed digits
/// starts at `x`, i.e. iff `x` survives pruning of dead-end states.
pub fn exhaustive_digit_membership(spec: &DigitIfs, denominator_bound: u32) -> Vec<(Rational, bool)> {
    let mut out = Vec::new();
    for b in 1..=u64::from(denominator_bound) {
        let alive = surviving_remainders(spec, b);
        for c in 0..=b {
            if num::integer::gcd(c, b) == 1 || (c == 0 && b == 1) {
                out.push((Rational::make(c, b).expect("b >= 1"), alive[c as usize]));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Membership of one rational `x in [0,1]` in the limit set.
pub fn in_limit_set(spec: &DigitIfs, x: &Rational) -> bool {
    if x.is_negative() || x > &Rational::one() {
        return false;
    }
    let Ok(b) = u64::try_from(x.denom()) else {
        return false;
    };
    let c = u64::try_from(x.numer()).expect("0 <= x <= 1");
    surviving_remainders(spec, b)[c as usize]
}

fn successors(spec: &DigitIfs, b: u64, c: u64) -> impl Iterator<Item = u64> + '_ {
    let base = u64::from(spec.base());
    spec.alphabet().iter().filter_map(move |&d| {
        let next = (c * base).checked_sub(u64::from(d) * b)?;
        (next <= b).then_some(next)
    })
}

fn surviving_remainders(spec: &DigitIfs, b: u64) -> Vec<bool> {
    let states = (b + 1) as usize;
    let mut alive = vec![true; states];
    loop {
        let mut changed = false;
        for c in 0..states {
            if alive[c] && !successors(spec, b, c as u64).any(|next| alive[next as usize]) {
                alive[c] = false;
                changed = true;
            }
        }
        if !changed {
            return alive;
        }
    }
}
