use num::BigInt;

use super::DigitIfs;
use crate::error::{Error, Result};
use crate::interval::{GapList, IntervalSet, OpenInterval};
use crate::rational::Rational;

/// Base-`q` expansions with even digits only; `q` odd, `q >= 3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gamma1 {
    q: u32,
}

/// Base-`q` expansions with digits `{0, q-1}`; `q >= 3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gamma2 {
    q: u32,
}

/// Which gap formula to use for [`Gamma2`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Gamma2Formula {
    /// `((qk+1)/q^n, (qk+2)/q^n)` exactly as published.
    #[default]
    Printed,
    /// `((qk+1)/q^n, (qk+q-1)/q^n)`. Not from the source; a guess at the
    /// intended formula that removes every digit strictly between 0 and q-1.
    ConjecturedCorrection,
}

fn unit_gap(numer_lo: BigInt, numer_hi: BigInt, denom: &BigInt) -> OpenInterval {
    OpenInterval::new(
        Rational::make(numer_lo, denom.clone()).expect("q^n > 0"),
        Rational::make(numer_hi, denom.clone()).expect("q^n > 0"),
    )
    .expect("gap numerators increase")
}

fn stage_level(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Range("gap levels start at n = 1".into()));
    }
    Ok(())
}

impl Gamma1 {
    pub fn new(q: u32) -> Result<Self> {
        if q < 3 || q.is_multiple_of(2) {
            return Err(Error::Spec(format!("gamma1 needs an odd q >= 3, got q = {q}")));
        }
        Ok(Gamma1 { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Level-`n` gaps `((qk+2r-1)/q^n, (qk+2r)/q^n)` for
    /// `0 <= k < q^(n-1)`, `1 <= r <= (q-1)/2`.
    pub fn gaps(&self, n: u32) -> Result<GapList> {
        stage_level(n)?;
        let q = BigInt::from(self.q);
        let denom = num::pow(q.clone(), n as usize);
        let blocks = num::pow(q.clone(), (n - 1) as usize);
        let mut gaps = Vec::new();
        let mut k = BigInt::from(0);
        while k < blocks {
            let base = &q * &k;
            for r in 1..=(self.q - 1) / 2 {
                let odd = &base + BigInt::from(2 * r - 1);
                let even = &base + BigInt::from(2 * r);
                gaps.push(unit_gap(odd, even, &denom));
            }
            k += 1;
        }
        Ok(GapList::new(gaps))
    }

    /// `[0,1]` minus every gap of levels `1..=n`.
    pub fn stage(&self, n: u32) -> Result<IntervalSet> {
        let mut stage = IntervalSet::unit();
        for m in 1..=n {
            stage = stage.subtract_gaps(&self.gaps(m)?);
        }
        Ok(stage)
    }

    pub fn digit_ifs(&self) -> DigitIfs {
        DigitIfs::new(self.q, (0..self.q).step_by(2).collect()).expect("even digits below odd q")
    }
}

impl Gamma2 {
    pub fn new(q: u32) -> Result<Self> {
        if q < 3 {
            return Err(Error::Spec(format!("gamma2 needs q >= 3, got q = {q}")));
        }
        Ok(Gamma2 { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn gaps(&self, n: u32) -> Result<GapList> {
        self.gaps_with(n, Gamma2Formula::Printed)
    }

    pub fn gaps_with(&self, n: u32, formula: Gamma2Formula) -> Result<GapList> {
        stage_level(n)?;
        let q = BigInt::from(self.q);
        let denom = num::pow(q.clone(), n as usize);
        let blocks = num::pow(q.clone(), (n - 1) as usize);
        let upper = match formula {
            Gamma2Formula::Printed => 2,
            Gamma2Formula::ConjecturedCorrection => self.q - 1,
        };
        let mut gaps = Vec::new();
        let mut k = BigInt::from(0);
        while k < blocks {
            let base = &q * &k;
            gaps.push(unit_gap(&base + 1, &base + upper, &denom));
            k += 1;
        }
        Ok(GapList::new(gaps))
    }

    pub fn stage(&self, n: u32) -> Result<IntervalSet> {
        self.stage_with(n, Gamma2Formula::Printed)
    }

    pub fn stage_with(&self, n: u32, formula: Gamma2Formula) -> Result<IntervalSet> {
        let mut stage = IntervalSet::unit();
        for m in 1..=n {
            stage = stage.subtract_gaps(&self.gaps_with(m, formula)?);
        }
        Ok(stage)
    }

    pub fn digit_ifs(&self) -> DigitIfs {
        DigitIfs::new(self.q, vec![0, self.q - 1]).expect("0 < q-1 < q")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::ClosedInterval;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn gaps(pairs: &[(&str, &str)]) -> Vec<OpenInterval> {
        pairs
            .iter()
            .map(|(a, b)| OpenInterval::new(r(a), r(b)).unwrap())
            .collect()
    }

    fn set(pairs: &[(&str, &str)]) -> IntervalSet {
        pairs
            .iter()
            .map(|(a, b)| ClosedInterval::new(r(a), r(b)).unwrap())
            .collect()
    }

    #[test]
    fn gamma1_gap_examples() {
        let g3 = Gamma1::new(3).unwrap();
        assert_eq!(g3.gaps(1).unwrap().gaps(), gaps(&[("1/3", "2/3")]).as_slice());
        assert_eq!(
            g3.gaps(2).unwrap().gaps(),
            gaps(&[("1/9", "2/9"), ("4/9", "5/9"), ("7/9", "8/9")]).as_slice()
        );
        let g5 = Gamma1::new(5).unwrap();
        assert_eq!(
            g5.gaps(1).unwrap().gaps(),
            gaps(&[("1/5", "2/5"), ("3/5", "4/5")]).as_slice()
        );
        // q^(n-1) (q-1)/2 gaps of length q^-n
        let level3 = g5.gaps(3).unwrap();
        assert_eq!(level3.len(), 25 * 2);
        assert!(level3.iter().all(|g| g.length() == r("1/125")));
        assert!(g5.gaps(0).is_err());
    }

    #[test]
    fn gamma1_rejects_bad_q() {
        assert!(Gamma1::new(4).is_err());
        assert!(Gamma1::new(1).is_err());
        assert!(Gamma1::new(7).is_ok());
    }

    #[test]
    fn gamma1_stage_examples() {
        let g3 = Gamma1::new(3).unwrap();
        assert_eq!(g3.stage(1).unwrap(), set(&[("0", "1/3"), ("2/3", "1")]));
        assert_eq!(
            g3.stage(2).unwrap(),
            set(&[("0", "1/9"), ("2/9", "1/3"), ("2/3", "7/9"), ("8/9", "1")])
        );
        assert_eq!(Gamma1::new(5).unwrap().stage(0).unwrap(), IntervalSet::unit());
    }

    #[test]
    fn gamma2_examples() {
        let g3 = Gamma2::new(3).unwrap();
        assert_eq!(g3.gaps(1).unwrap().gaps(), gaps(&[("1/3", "2/3")]).as_slice());
        let g4 = Gamma2::new(4).unwrap();
        assert_eq!(
            g4.gaps(2).unwrap().gaps(),
            gaps(&[
                ("1/16", "2/16"),
                ("5/16", "6/16"),
                ("9/16", "10/16"),
                ("13/16", "14/16")
            ])
            .as_slice()
        );
        assert_eq!(g4.stage(1).unwrap(), set(&[("0", "1/4"), ("1/2", "1")]));
        assert!(Gamma2::new(2).is_err());
    }

    #[test]
    fn gamma2_conjectured_correction_matches_two_digit_set() {
        let g4 = Gamma2::new(4).unwrap();
        let corrected = g4.stage_with(2, Gamma2Formula::ConjecturedCorrection).unwrap();
        assert_eq!(
            corrected,
            set(&[("0", "1/16"), ("3/16", "1/4"), ("3/4", "13/16"), ("15/16", "1")])
        );
        assert_eq!(corrected, g4.digit_ifs().stage(2));
    }

    #[test]
    fn digit_presentations() {
        assert_eq!(Gamma1::new(7).unwrap().digit_ifs().alphabet(), &[0, 2, 4, 6]);
        assert_eq!(Gamma2::new(5).unwrap().digit_ifs().alphabet(), &[0, 4]);
    }
}
