//! Canonical interval sets: merging, intersection, gap extraction and the CSV
//! round trip.
//!
//!     cargo run --example interval_algebra

use std::fmt::Write;

use cantor::{ClosedInterval, GapList, IntervalSet, OpenInterval, Rational};

fn iv(lo: &str, hi: &str) -> cantor::Result<ClosedInterval> {
    ClosedInterval::new(lo.parse()?, hi.parse()?)
}

pub fn run_example() -> cantor::Result<String> {
    let mut out = String::new();
    let a = IntervalSet::normalize(vec![iv("1/2", "3/4")?, iv("0", "1/4")?, iv("1/4", "1/3")?]);
    let b = IntervalSet::normalize(vec![iv("1/5", "3/5")?]);
    writeln!(out, "a = {a}\nb = {b}").unwrap();
    writeln!(out, "a ∩ b = {}\na ∪ b = {}", a.intersect(&b), a.union(&b)).unwrap();

    let third: Rational = "1/3".parse()?;
    let gaps = GapList::new(vec![OpenInterval::new(third.clone(), &third + &third)?]);
    let stage1 = IntervalSet::unit().subtract_gaps(&gaps);
    writeln!(out, "[0,1] minus (1/3,2/3) = {stage1}, reflected {}", stage1.reflect()).unwrap();
    writeln!(out, "gaps back out: {:?}", stage1.gaps_within(&ClosedInterval::unit())?).unwrap();

    let csv = a.to_csv();
    assert_eq!(IntervalSet::from_csv(&csv)?, a);
    out.push_str(&csv);
    Ok(out)
}

fn main() -> cantor::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
