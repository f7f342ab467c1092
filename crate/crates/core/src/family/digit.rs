use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{ClosedInterval, IntervalSet};
use crate::rational::Rational;

/// Maps `x -> (x + a) / base` for each digit `a` of the alphabet.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DigitIfs {
    base: u32,
    alphabet: Vec<u32>,
}

/// A finite digit string naming one stage-`n` cylinder.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Address(Vec<u32>);

impl Address {
    pub fn new(digits: Vec<u32>) -> Self {
        Address(digits)
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    /// Stage index, i.e. the number of digits.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<u32>> for Address {
    fn from(digits: Vec<u32>) -> Self {
        Address(digits)
    }
}

impl fmt::Debug for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl DigitIfs {
    pub fn new(base: u32, alphabet: Vec<u32>) -> Result<Self> {
        if base < 2 {
            return Err(Error::Spec(format!("digit base must be >= 2, got {base}")));
        }
        if alphabet.len() < 2 {
            return Err(Error::Spec("alphabet needs at least two digits".into()));
        }
        if !alphabet.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Spec(format!("alphabet {alphabet:?} must be strictly increasing")));
        }
        if let Some(d) = alphabet.iter().find(|&&d| d >= base) {
            return Err(Error::Spec(format!("digit {d} is not below base {base}")));
        }
        Ok(DigitIfs { base, alphabet })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn alphabet(&self) -> &[u32] {
        &self.alphabet
    }

    /// Position of `digit` within the alphabet.
    pub fn digit_index(&self, digit: u32) -> Option<usize> {
        self.alphabet.binary_search(&digit).ok()
    }

    fn check(&self, address: &Address) -> Result<()> {
        match address.digits().iter().find(|&&d| self.digit_index(d).is_none()) {
            Some(d) => Err(Error::Address(format!(
                "digit {d} is not in alphabet {:?}",
                self.alphabet
            ))),
            None => Ok(()),
        }
    }

    /// `T_{a_1} o ... o T_{a_n}([0,1]) = [s, s + base^-n]` with
    /// `s = sum a_k base^-k`.
    pub fn address_interval(&self, address: &Address) -> Result<ClosedInterval> {
        self.check(address)?;
        let base = Rational::from(self.base);
        let mut left = Rational::zero();
        let mut scale = Rational::one();
        for &d in address.digits() {
            scale = scale / &base;
            left += &(Rational::from(d) * &scale);
        }
        let right = &left + &scale;
        ClosedInterval::new(left, right)
    }

    /// All `|A|^n` addresses of length `n`, in lexicographic order.
    pub fn addresses(&self, n: u32) -> Vec<Address> {
        let mut out = vec![Address::default()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    self.alphabet.iter().map(move |&d| {
                        let mut digits = prefix.0.clone();
                        digits.push(d);
                        Address(digits)
                    })
                })
                .collect();
        }
        out
    }

    /// Canonical union of all stage-`n` address intervals.
    ///
    /// Built as `S_n = U_a T_a(S_{n-1})`, which keeps only merged runs at
    /// each level instead of enumerating every address.
    pub fn stage(&self, n: u32) -> IntervalSet {
        let base = Rational::from(self.base);
        let mut stage = IntervalSet::unit();
        for _ in 0..n {
            let mut pieces = Vec::with_capacity(stage.len() * self.alphabet.len());
            for &d in &self.alphabet {
                let shift = Rational::from(d);
                for iv in &stage {
                    let lo = (iv.lo() + &shift) / &base;
                    let hi = (iv.hi() + &shift) / &base;
                    pieces.push(ClosedInterval::new(lo, hi).expect("maps preserve order"));
                }
            }
            stage = IntervalSet::normalize(pieces);
        }
        stage
    }

    /// Whether every digit of `prefix` is in the alphabet.
    pub fn accepts_prefix(&self, prefix: &[u32]) -> bool {
        prefix.iter().all(|&d| self.digit_index(d).is_some())
    }
}

/// Every length-`len` prefix of a base-`base` expansion of `x`.
///
/// A rational has at most two expansions: the terminating one and its
/// twin ending in repeated `base - 1`.
pub fn digit_expansions(x: &Rational, base: u32, len: usize) -> Result<BTreeSet<Vec<u32>>> {
    if x.is_negative() || x > &Rational::one() {
        return Err(Error::Domain(format!("{x} is outside [0,1]")));
    }
    if base < 2 {
        return Err(Error::Domain(format!("base must be >= 2, got {base}")));
    }
    let base_r = Rational::from(base);
    let mut frontier = vec![(Vec::with_capacity(len), x.clone())];
    for _ in 0..len {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for (prefix, rest) in frontier {
            let scaled = &rest * &base_r;
            // digits d with 0 <= scaled - d <= 1
            let floor = scaled.floor();
            let mut candidates = vec![floor.clone()];
            if scaled.is_integer() {
                candidates.push(floor - 1);
            }
            for d in candidates {
                let Ok(d32) = u32::try_from(&d) else { continue };
                if d32 >= base {
                    continue;
                }
                let remainder = &scaled - Rational::from(d32);
                if remainder.is_negative() || remainder > Rational::one() {
                    continue;
                }
                let mut digits = prefix.clone();
                digits.push(d32);
                next.push((digits, remainder));
            }
        }
        frontier = next;
    }
    Ok(frontier.into_iter().map(|(digits, _)| digits).collect())
}
