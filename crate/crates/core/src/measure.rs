//! Self-similar measures on a construction tree and their distribution
//! function (the generalized Devil's staircase).
//!
//! Mass is pushed down the construction tree multiplicatively: a stage-`n`
//! cylinder carries the product of the weights along its address. The CDF
//! is reported as an exact bracket `[lower, upper]` that tightens with the
//! stage; it collapses to a point wherever `x` falls outside every
//! stage-`n` cylinder interior.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{Address, DigitIfs, FamilySpec, Gamma3};
use crate::interval::ClosedInterval;
use crate::rational::Rational;

/// The tree along which mass is split.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MeasureTree {
    /// One child per alphabet digit, in alphabet order.
    Digit(DigitIfs),
    /// Two children per interval from the endpoint recursion; addresses use
    /// digits `0` (left) and `1` (right).
    Gamma3(Gamma3),
}

impl From<DigitIfs> for MeasureTree {
    fn from(d: DigitIfs) -> Self {
        MeasureTree::Digit(d)
    }
}

impl From<Gamma3> for MeasureTree {
    fn from(g: Gamma3) -> Self {
        MeasureTree::Gamma3(g)
    }
}

impl From<&FamilySpec> for MeasureTree {
    fn from(spec: &FamilySpec) -> Self {
        match spec {
            FamilySpec::Gamma3(g) => MeasureTree::Gamma3(*g),
            other => MeasureTree::Digit(other.digit_ifs().expect("digit presentation")),
        }
    }
}

impl MeasureTree {
    pub fn map_count(&self) -> usize {
        match self {
            MeasureTree::Digit(d) => d.alphabet().len(),
            MeasureTree::Gamma3(_) => 2,
        }
    }

    fn child_index(&self, digit: u32) -> Option<usize> {
        match self {
            MeasureTree::Digit(d) => d.digit_index(digit),
            MeasureTree::Gamma3(_) => (digit < 2).then_some(digit as usize),
        }
    }

    /// Children of a stage-`(level-1)` cylinder, in weight order.
    fn children(&self, level: u32, parent: &ClosedInterval) -> Vec<ClosedInterval> {
        match self {
            MeasureTree::Digit(d) => {
                let width = Rational::from(d.base()).pow(level).recip().expect("base >= 2");
                d.alphabet()
                    .iter()
                    .map(|&digit| {
                        let lo = parent.lo() + &(Rational::from(digit) * &width);
                        let hi = &lo + &width;
                        ClosedInterval::new(lo, hi).expect("width > 0")
                    })
                    .collect()
            }
            MeasureTree::Gamma3(g) => g.children(level, parent).expect("level >= 1").to_vec(),
        }
    }

    /// Interval named by an address.
    pub fn cylinder(&self, address: &Address) -> Result<ClosedInterval> {
        let mut interval = ClosedInterval::unit();
        for (i, &digit) in address.digits().iter().enumerate() {
            let index = self.child_index(digit).ok_or_else(|| {
                Error::Address(format!("digit {digit} does not name a child"))
            })?;
            interval = self.children(i as u32 + 1, &interval).swap_remove(index);
        }
        Ok(interval)
    }

    /// All addresses of length `n`.
    pub fn addresses(&self, n: u32) -> Vec<Address> {
        match self {
            MeasureTree::Digit(d) => d.addresses(n),
            MeasureTree::Gamma3(_) => DigitIfs::new(2, vec![0, 1]).expect("binary").addresses(n),
        }
    }
}

/// Strictly positive weights summing to one, one per map.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Weights("no weights given".into()));
        }
        if let Some(w) = weights.iter().find(|w| w <= &&Rational::zero()) {
            return Err(Error::Weights(format!("weight {w} is not positive")));
        }
        let total: Rational = weights.iter().sum();
        if total != Rational::one() {
            return Err(Error::Weights(format!("weights sum to {total}, not 1")));
        }
        Ok(WeightVector(weights))
    }

    pub fn uniform(count: usize) -> Result<Self> {
        let each = Rational::make(1, count as i64)?;
        Self::new(vec![each; count])
    }

    pub fn weights(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_weight(&self) -> &Rational {
        self.0.iter().max().expect("nonempty")
    }

    fn check(&self, tree: &MeasureTree) -> Result<()> {
        if self.0.len() != tree.map_count() {
            return Err(Error::Spec(format!(
                "{} weights given for {} maps",
                self.0.len(),
                tree.map_count()
            )));
        }
        Ok(())
    }
}

impl TryFrom<Vec<Rational>> for WeightVector {
    type Error = Error;
    fn try_from(weights: Vec<Rational>) -> Result<Self> {
        WeightVector::new(weights)
    }
}

impl From<WeightVector> for Vec<Rational> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl std::str::FromStr for WeightVector {
    type Err = Error;
    /// Comma-separated fractions, e.g. `1/3,2/3`.
    fn from_str(s: &str) -> Result<Self> {
        let weights = s.split(',').map(str::parse).collect::<Result<Vec<Rational>>>()?;
        WeightVector::new(weights)
    }
}

/// Mass of the cylinder named by `address`.
pub fn cylinder_mass(tree: &MeasureTree, w: &WeightVector, address: &Address) -> Result<Rational> {
    w.check(tree)?;
    address
        .digits()
        .iter()
        .map(|&digit| {
            tree.child_index(digit)
                .map(|i| w.0[i].clone())
                .ok_or_else(|| Error::Address(format!("digit {digit} does not name a child")))
        })
        .product()
}

/// Exact bracket on the distribution function at a stage.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CdfBound {
    pub lower: Rational,
    pub upper: Rational,
    pub stage: u32,
}

impl CdfBound {
    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Brackets `F(x) = mu([0, x])` using stage-`n` cylinders.
///
/// `lower` is the mass of cylinders lying in `[0, x]`; `upper` adds the
/// mass of cylinders whose interior contains `x`. The measure has no atoms,
/// so a cylinder touching `x` only at an endpoint is fully on one side.
pub fn cdf_bounds(tree: &MeasureTree, w: &WeightVector, x: &Rational, n: u32) -> Result<CdfBound> {
    w.check(tree)?;
    if x.is_negative() || x > &Rational::one() {
        return Err(Error::Domain(format!("{x} is outside [0,1]")));
    }
    let mut lower = Rational::zero();
    let mut straddling: Vec<(ClosedInterval, Rational)> = Vec::new();
    let root = ClosedInterval::unit();
    if root.hi() <= x {
        lower = Rational::one();
    } else if root.lo() < x {
        straddling.push((root, Rational::one()));
    }
    for level in 1..=n {
        let mut next = Vec::new();
        for (parent, mass) in &straddling {
            for (child, weight) in tree.children(level, parent).into_iter().zip(&w.0) {
                let child_mass = mass * weight;
                if child.hi() <= x {
                    lower += &child_mass;
                } else if child.lo() < x {
                    next.push((child, child_mass));
                }
            }
        }
        straddling = next;
    }
    let pending: Rational = straddling.iter().map(|(_, m)| m).sum();
    Ok(CdfBound {
        upper: &lower + &pending,
        lower,
        stage: n,
    })
}

/// One sampled abscissa of the staircase.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct StaircaseSample {
    pub x: Rational,
    pub lower: Rational,
    pub upper: Rational,
    pub stage: u32,
}

/// CDF brackets at `m` equally spaced points `i/(m-1)`.
pub fn staircase_samples(
    tree: &MeasureTree,
    w: &WeightVector,
    m: usize,
    n: u32,
) -> Result<Vec<StaircaseSample>> {
    if m < 2 {
        return Err(Error::Domain(format!("need at least 2 samples, got {m}")));
    }
    (0..m)
        .map(|i| {
            let x = Rational::make(i as i64, (m - 1) as i64)?;
            let bound = cdf_bounds(tree, w, &x, n)?;
            Ok(StaircaseSample {
                x,
                lower: bound.lower,
                upper: bound.upper,
                stage: n,
            })
        })
        .collect()
}

/// CSV with header `x_num,x_den,lower_num,lower_den,upper_num,upper_den,stage`.
pub fn samples_to_csv(samples: &[StaircaseSample]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["x_num", "x_den", "lower_num", "lower_den", "upper_num", "upper_den", "stage"])
        .expect("in-memory write");
    for s in samples {
        writer
            .write_record([
                s.x.numer().to_string(),
                s.x.denom().to_string(),
                s.lower.numer().to_string(),
                s.lower.denom().to_string(),
                s.upper.numer().to_string(),
                s.upper.denom().to_string(),
                s.stage.to_string(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// Stage measure of a middle-α set.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MeasureProfileRow {
    pub n: u32,
    pub measure: Rational,
}

/// Exact stage measures `1 - sum_{m<=n} 2^(m-1) α^m` for `n = 0..=n_max`.
pub fn gamma3_measure_profile(spec: &Gamma3, n_max: u32) -> Vec<MeasureProfileRow> {
    let alpha = spec.alpha();
    let mut measure = Rational::one();
    let mut out = vec![MeasureProfileRow {
        n: 0,
        measure: measure.clone(),
    }];
    for m in 1..=n_max {
        measure -= &(Rational::integer(2).pow(m - 1) * alpha.pow(m));
        out.push(MeasureProfileRow {
            n: m,
            measure: measure.clone(),
        });
    }
    out
}
