//! Closed intervals and canonical finite unions of them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `[lo, hi]` with `lo <= hi`; degenerate points are allowed.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(Rational, Rational)", into = "(Rational, Rational)")]
pub struct ClosedInterval {
    lo: Rational,
    hi: Rational,
}

impl ClosedInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(ClosedInterval { lo, hi })
    }

    pub fn unit() -> Self {
        ClosedInterval {
            lo: Rational::zero(),
            hi: Rational::one(),
        }
    }

    pub fn point(x: Rational) -> Self {
        ClosedInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &ClosedInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn midpoint(&self) -> Rational {
        self.lo.midpoint(&self.hi)
    }

    pub fn translate(&self, t: &Rational) -> Self {
        ClosedInterval {
            lo: &self.lo + t,
            hi: &self.hi + t,
        }
    }

    /// Image under `x -> 1 - x`.
    pub fn reflect(&self) -> Self {
        ClosedInterval {
            lo: Rational::one() - &self.hi,
            hi: Rational::one() - &self.lo,
        }
    }

    pub fn into_bounds(self) -> (Rational, Rational) {
        (self.lo, self.hi)
    }
}

impl TryFrom<(Rational, Rational)> for ClosedInterval {
    type Error = Error;
    fn try_from((lo, hi): (Rational, Rational)) -> Result<Self> {
        ClosedInterval::new(lo, hi)
    }
}

impl From<ClosedInterval> for (Rational, Rational) {
    fn from(i: ClosedInterval) -> Self {
        (i.lo, i.hi)
    }
}

impl fmt::Display for ClosedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl fmt::Debug for ClosedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Open interval `(lo, hi)` with `lo < hi`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(Rational, Rational)", into = "(Rational, Rational)")]
pub struct OpenInterval {
    lo: Rational,
    hi: Rational,
}

impl OpenInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidGap {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(OpenInterval { lo, hi })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }
}

impl TryFrom<(Rational, Rational)> for OpenInterval {
    type Error = Error;
    fn try_from((lo, hi): (Rational, Rational)) -> Result<Self> {
        OpenInterval::new(lo, hi)
    }
}

impl From<OpenInterval> for (Rational, Rational) {
    fn from(i: OpenInterval) -> Self {
        (i.lo, i.hi)
    }
}

impl fmt::Display for OpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

impl fmt::Debug for OpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sorted, pairwise-disjoint open intervals.
///
/// Overlapping inputs are merged. Gaps that only share an endpoint stay
/// separate, since the shared point belongs to neither.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GapList(Vec<OpenInterval>);

impl GapList {
    pub fn new(mut raw: Vec<OpenInterval>) -> Self {
        raw.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
        let mut merged: Vec<OpenInterval> = Vec::with_capacity(raw.len());
        for gap in raw {
            match merged.last_mut() {
                Some(last) if gap.lo < last.hi => {
                    if gap.hi > last.hi {
                        last.hi = gap.hi;
                    }
                }
                _ => merged.push(gap),
            }
        }
        GapList(merged)
    }

    pub fn gaps(&self) -> &[OpenInterval] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_length(&self) -> Rational {
        self.0.iter().map(OpenInterval::length).sum()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, OpenInterval> {
        self.0.iter()
    }
}

impl fmt::Debug for GapList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl<'a> IntoIterator for &'a GapList {
    type Item = &'a OpenInterval;
    type IntoIter = std::slice::Iter<'a, OpenInterval>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// A finite union of closed intervals in canonical form: sorted, with
/// `prev.hi < next.lo` for neighbours. Equal sets compare equal.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<ClosedInterval>", into = "Vec<ClosedInterval>")]
pub struct IntervalSet(Vec<ClosedInterval>);

impl TryFrom<Vec<ClosedInterval>> for IntervalSet {
    type Error = Error;
    fn try_from(raw: Vec<ClosedInterval>) -> Result<Self> {
        Ok(IntervalSet::normalize(raw))
    }
}

impl From<IntervalSet> for Vec<ClosedInterval> {
    fn from(s: IntervalSet) -> Self {
        s.0
    }
}

impl From<ClosedInterval> for IntervalSet {
    fn from(i: ClosedInterval) -> Self {
        IntervalSet(vec![i])
    }
}

impl FromIterator<ClosedInterval> for IntervalSet {
    fn from_iter<I: IntoIterator<Item = ClosedInterval>>(iter: I) -> Self {
        IntervalSet::normalize(iter.into_iter().collect())
    }
}

impl IntervalSet {
    /// Sorts and merges overlapping or touching intervals.
    pub fn normalize(mut raw: Vec<ClosedInterval>) -> Self {
        raw.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
        let mut merged: Vec<ClosedInterval> = Vec::with_capacity(raw.len());
        for iv in raw {
            match merged.last_mut() {
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => merged.push(iv),
            }
        }
        IntervalSet(merged)
    }

    /// Builds from already-canonical input.
    fn from_sorted(intervals: Vec<ClosedInterval>) -> Self {
        debug_assert!(intervals.windows(2).all(|w| w[0].hi < w[1].lo));
        IntervalSet(intervals)
    }

    pub fn empty() -> Self {
        IntervalSet(Vec::new())
    }

    pub fn unit() -> Self {
        IntervalSet(vec![ClosedInterval::unit()])
    }

    pub fn intervals(&self) -> &[ClosedInterval] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ClosedInterval> {
        self.0.iter()
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest closed interval containing the set.
    pub fn hull(&self) -> Option<ClosedInterval> {
        match (self.0.first(), self.0.last()) {
            (Some(first), Some(last)) => Some(ClosedInterval {
                lo: first.lo.clone(),
                hi: last.hi.clone(),
            }),
            _ => None,
        }
    }

    pub fn total_length(&self) -> Rational {
        self.0.iter().map(ClosedInterval::length).sum()
    }

    pub fn contains_point(&self, x: &Rational) -> bool {
        // first interval whose hi >= x
        let idx = self.0.partition_point(|iv| &iv.hi < x);
        self.0.get(idx).is_some_and(|iv| &iv.lo <= x)
    }

    /// Component containing `x`, if any.
    pub fn component_of(&self, x: &Rational) -> Option<&ClosedInterval> {
        let idx = self.0.partition_point(|iv| &iv.hi < x);
        self.0.get(idx).filter(|iv| &iv.lo <= x)
    }

    pub fn is_subset_of(&self, other: &IntervalSet) -> bool {
        self.0
            .iter()
            .all(|iv| other.component_of(&iv.lo).is_some_and(|c| c.contains_interval(iv)))
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            let lo = (&a[i].lo).max(&b[j].lo);
            let hi = (&a[i].hi).min(&b[j].hi);
            if lo <= hi {
                out.push(ClosedInterval {
                    lo: lo.clone(),
                    hi: hi.clone(),
                });
            }
            if a[i].hi < b[j].hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalSet::from_sorted(out)
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        IntervalSet::normalize(self.0.iter().chain(other.0.iter()).cloned().collect())
    }

    /// Removes the union of the open gaps; gap endpoints stay in the set.
    pub fn subtract_gaps(&self, gaps: &GapList) -> IntervalSet {
        let gaps = gaps.gaps();
        let mut out = Vec::with_capacity(self.0.len());
        let mut first = 0;
        for iv in &self.0 {
            // skip gaps lying entirely to the left of this interval
            while first < gaps.len() && gaps[first].hi <= iv.lo {
                first += 1;
            }
            let mut start = iv.lo.clone();
            let mut covered_to_end = false;
            for gap in gaps[first..].iter().take_while(|g| g.lo < iv.hi) {
                if gap.lo >= start {
                    out.push(ClosedInterval {
                        lo: start,
                        hi: gap.lo.clone(),
                    });
                }
                start = gap.hi.clone();
                if start > iv.hi {
                    covered_to_end = true;
                    break;
                }
            }
            if !covered_to_end {
                out.push(ClosedInterval {
                    lo: start,
                    hi: iv.hi.clone(),
                });
            }
        }
        IntervalSet::normalize(out)
    }

    /// The open complement of the set inside `hull`.
    pub fn gaps_within(&self, hull: &ClosedInterval) -> Result<GapList> {
        if !self.0.iter().all(|iv| hull.contains_interval(iv)) {
            return Err(Error::NotContained {
                lo: hull.lo.to_string(),
                hi: hull.hi.to_string(),
            });
        }
        let mut gaps = Vec::with_capacity(self.0.len() + 1);
        let mut cursor = hull.lo.clone();
        for iv in &self.0 {
            if iv.lo > cursor {
                gaps.push(OpenInterval {
                    lo: cursor,
                    hi: iv.lo.clone(),
                });
            }
            cursor = iv.hi.clone();
        }
        if hull.hi > cursor {
            gaps.push(OpenInterval {
                lo: cursor,
                hi: hull.hi.clone(),
            });
        }
        Ok(GapList(gaps))
    }

    pub fn translate(&self, t: &Rational) -> IntervalSet {
        IntervalSet(self.0.iter().map(|iv| iv.translate(t)).collect())
    }

    /// Image under `x -> 1 - x`.
    pub fn reflect(&self) -> IntervalSet {
        IntervalSet(self.0.iter().rev().map(ClosedInterval::reflect).collect())
    }

    /// Closure of the set difference `self \ other`.
    ///
    /// Components are the closures of the nonempty pieces left after deleting
    /// `other`; an isolated point survives only when it is a degenerate
    /// component of `self` not covered by `other`.
    pub fn difference_closure(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = Vec::new();
        for iv in &self.0 {
            if iv.lo == iv.hi {
                if !other.contains_point(&iv.lo) {
                    out.push(iv.clone());
                }
                continue;
            }
            let mut start = iv.lo.clone();
            let first = other.0.partition_point(|b| b.hi < iv.lo);
            for b in other.0[first..].iter().take_while(|b| b.lo <= iv.hi) {
                if b.lo > start {
                    out.push(ClosedInterval {
                        lo: start.clone(),
                        hi: b.lo.clone(),
                    });
                }
                if b.hi > start {
                    start = b.hi.clone();
                }
            }
            if start < iv.hi {
                out.push(ClosedInterval {
                    lo: start,
                    hi: iv.hi.clone(),
                });
            }
        }
        IntervalSet::normalize(out)
    }

    /// CSV with header `lo_num,lo_den,hi_num,hi_den`.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(["lo_num", "lo_den", "hi_num", "hi_den"])
            .expect("in-memory write");
        for iv in &self.0 {
            writer
                .write_record([
                    iv.lo.numer().to_string(),
                    iv.lo.denom().to_string(),
                    iv.hi.numer().to_string(),
                    iv.hi.denom().to_string(),
                ])
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn from_csv(text: &str) -> Result<IntervalSet> {
        let bad = |input: &str| Error::Parse {
            what: "interval csv",
            input: input.to_string(),
        };
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let mut raw = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| bad(&e.to_string()))?;
            if record.len() != 4 {
                return Err(bad(&format!("{record:?}")));
            }
            let lo = Rational::make(
                record[0].parse::<num::BigInt>().map_err(|_| bad(&record[0]))?,
                record[1].parse::<num::BigInt>().map_err(|_| bad(&record[1]))?,
            )?;
            let hi = Rational::make(
                record[2].parse::<num::BigInt>().map_err(|_| bad(&record[2]))?,
                record[3].parse::<num::BigInt>().map_err(|_| bad(&record[3]))?,
            )?;
            raw.push(ClosedInterval::new(lo, hi)?);
        }
        Ok(IntervalSet::normalize(raw))
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, iv) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{iv}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> IntoIterator for &'a IntervalSet {
    type Item = &'a ClosedInterval;
    type IntoIter = std::slice::Iter<'a, ClosedInterval>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
