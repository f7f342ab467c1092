use num::integer::gcd;
use serde::{Deserialize, Serialize};

use super::DigitIfs;
use crate::error::{Error, Result};
use crate::interval::{ClosedInterval, IntervalSet, OpenInterval};
use crate::rational::Rational;

/// The middle-α family: at stage `m` a centred open gap of length `α^m` is
/// removed from each of the `2^(m-1)` surviving components, with
/// `α = p/q`, `gcd(p, q) = 1` and `0 < α <= 1/3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gamma3 {
    p: u32,
    q: u32,
}

/// One row `k` of an [`EndpointTable`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EndpointRow {
    pub k: u64,
    pub a: Rational,
    pub b: Rational,
}

/// Endpoints `(a_{n,k}, b_{n,k})` for `k = 1..=2^n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EndpointTable {
    pub p: u32,
    pub q: u32,
    pub stage: u32,
    pub rows: Vec<EndpointRow>,
}

impl EndpointTable {
    pub fn stage_set(&self) -> IntervalSet {
        self.intervals().collect()
    }

    pub fn intervals(&self) -> impl Iterator<Item = ClosedInterval> + '_ {
        self.rows
            .iter()
            .map(|row| ClosedInterval::new(row.a.clone(), row.b.clone()).expect("a <= b"))
    }

    /// Row `k`, 1-based.
    pub fn row(&self, k: u64) -> Result<&EndpointRow> {
        k.checked_sub(1)
            .and_then(|i| self.rows.get(i as usize))
            .ok_or_else(|| Error::Range(format!("k = {k} outside 1..={}", self.rows.len())))
    }
}

impl Gamma3 {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Spec(format!("gamma3 needs positive p and q, got p = {p}, q = {q}")));
        }
        if gcd(p, q) != 1 {
            return Err(Error::Spec(format!("gamma3 needs gcd(p, q) = 1, got p = {p}, q = {q}")));
        }
        if 3 * u64::from(p) > u64::from(q) {
            return Err(Error::Spec(format!("gamma3 needs p/q <= 1/3, got {p}/{q}")));
        }
        Ok(Gamma3 { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn alpha(&self) -> Rational {
        Rational::make(self.p, self.q).expect("q > 0")
    }

    /// Common length of every stage-`n` interval:
    /// `((2α)^(n+1) + 2(1-3α)) / (2^(n+1) (1-2α))`.
    pub fn interval_length(&self, n: u32) -> Rational {
        let alpha = self.alpha();
        let one = Rational::one();
        let two = Rational::integer(2);
        let two_alpha = &two * &alpha;
        let numer = two_alpha.pow(n + 1) + &two * (&one - Rational::integer(3) * &alpha);
        let denom = two.pow(n + 1) * (&one - &two_alpha);
        numer / denom
    }

    /// Endpoint increment `((1-3α) + (1-α)(2α)^n) / ((1-2α) 2^n)`, which
    /// equals the stage-`n` interval length plus the stage-`n` gap `α^n`.
    pub fn delta(&self, n: u32) -> Result<Rational> {
        if n == 0 {
            return Err(Error::Range("the endpoint increment is defined for n >= 1".into()));
        }
        let alpha = self.alpha();
        let one = Rational::one();
        let two = Rational::integer(2);
        let two_alpha = &two * &alpha;
        let numer = (&one - Rational::integer(3) * &alpha) + (&one - &alpha) * two_alpha.pow(n);
        let denom = (&one - &two_alpha) * two.pow(n);
        Ok(numer / denom)
    }

    /// Lebesgue measure of the limit set, `(1-3α)/(1-2α)`.
    pub fn measure(&self) -> Rational {
        let alpha = self.alpha();
        let one = Rational::one();
        (&one - Rational::integer(3) * &alpha) / (&one - Rational::integer(2) * &alpha)
    }

    /// Total length removed through stage `n`: `sum_{m=1..n} 2^(m-1) α^m`.
    pub fn removed_length(&self, n: u32) -> Rational {
        let alpha = self.alpha();
        (1..=n)
            .map(|m| Rational::integer(2).pow(m - 1) * alpha.pow(m))
            .sum()
    }

    /// Full stage-`n` table, built level by level from the parent rows.
    ///
    /// Odd `k` keeps the parent's left end and pulls the right end in by Δ;
    /// even `k` keeps the parent's right end and pushes the left end out by Δ.
    pub fn endpoints(&self, n: u32) -> EndpointTable {
        let mut rows = vec![(Rational::zero(), Rational::one())];
        for level in 1..=n {
            let delta = self.delta(level).expect("level >= 1");
            rows = rows
                .iter()
                .flat_map(|(a, b)| [(a.clone(), b - &delta), (a + &delta, b.clone())])
                .collect();
        }
        EndpointTable {
            p: self.p,
            q: self.q,
            stage: n,
            rows: rows
                .into_iter()
                .enumerate()
                .map(|(i, (a, b))| EndpointRow {
                    k: i as u64 + 1,
                    a,
                    b,
                })
                .collect(),
        }
    }

    /// `a_{n,k}` by direct recursion on the parent index.
    pub fn lower_endpoint(&self, n: u32, k: u64) -> Result<Rational> {
        self.check_index(n, k)?;
        if n == 0 {
            return Ok(Rational::zero());
        }
        if k % 2 == 1 {
            self.lower_endpoint(n - 1, k.div_ceil(2))
        } else {
            Ok(self.lower_endpoint(n - 1, k / 2)? + self.delta(n)?)
        }
    }

    /// `b_{n,k}` by direct recursion on the parent index.
    pub fn upper_endpoint(&self, n: u32, k: u64) -> Result<Rational> {
        self.check_index(n, k)?;
        if n == 0 {
            return Ok(Rational::one());
        }
        if k % 2 == 1 {
            Ok(self.upper_endpoint(n - 1, k.div_ceil(2))? - self.delta(n)?)
        } else {
            self.upper_endpoint(n - 1, k / 2)
        }
    }

    fn check_index(&self, n: u32, k: u64) -> Result<()> {
        if n >= 64 {
            return Err(Error::Range(format!("stage {n} is too deep for point queries")));
        }
        let count = 1u64 << n;
        if k < 1 || k > count {
            return Err(Error::Range(format!("k = {k} must satisfy 1 <= k <= 2^{n} = {count}")));
        }
        Ok(())
    }

    /// Split of a stage-`(level-1)` interval into its two stage-`level`
    /// children.
    pub fn children(&self, level: u32, parent: &ClosedInterval) -> Result<[ClosedInterval; 2]> {
        let delta = self.delta(level)?;
        Ok([
            ClosedInterval::new(parent.lo().clone(), parent.hi() - &delta)?,
            ClosedInterval::new(parent.lo() + &delta, parent.hi().clone())?,
        ])
    }

    /// Direct construction: at stage `m` cut a centred open gap of length
    /// `α^m` out of every component.
    pub fn nested_stage(&self, n: u32) -> Result<IntervalSet> {
        let alpha = self.alpha();
        let mut components = vec![ClosedInterval::unit()];
        for m in 1..=n {
            let gap = alpha.pow(m);
            let half = &gap / Rational::integer(2);
            let mut next = Vec::with_capacity(components.len() * 2);
            for c in &components {
                if gap >= c.length() {
                    return Err(Error::Construction(format!(
                        "gap {gap} at stage {m} does not fit inside {c}"
                    )));
                }
                let mid = c.midpoint();
                let removed = OpenInterval::new(&mid - &half, &mid + &half)?;
                next.push(ClosedInterval::new(c.lo().clone(), removed.lo().clone())?);
                next.push(ClosedInterval::new(removed.hi().clone(), c.hi().clone())?);
            }
            components = next;
        }
        Ok(IntervalSet::normalize(components))
    }

    /// Base `2q` with digits `0..=q-p-1` and `q+p..=2q-1`.
    pub fn digit_spec(&self) -> DigitIfs {
        let (p, q) = (self.p, self.q);
        let alphabet = (0..q - p).chain(q + p..2 * q).collect();
        DigitIfs::new(2 * q, alphabet).expect("p <= q/3 keeps both digit runs nonempty")
    }
}
