//! Exact brackets on the staircase function of the middle-third set, and of
//! a middle-quarter set with lopsided weights; samples as CSV.
//!
//!     cargo run --example staircase_cdf

use std::fmt::Write;

use cantor::measure::{cdf_bounds, samples_to_csv, staircase_samples, MeasureTree, WeightVector};
use cantor::{DigitIfs, Gamma3, Rational};

pub fn run_example() -> cantor::Result<String> {
    let mut out = String::new();
    let cantor = MeasureTree::from(DigitIfs::new(3, vec![0, 2])?);
    let uniform = WeightVector::uniform(2)?;
    for x in ["1/4", "1/3", "1/2", "3/4"] {
        let x: Rational = x.parse()?;
        for n in [2, 6, 10] {
            let b = cdf_bounds(&cantor, &uniform, &x, n)?;
            writeln!(out, "F({x}) at n={n}: [{}, {}] width {}", b.lower, b.upper, b.width()).unwrap();
        }
    }
    let lopsided: WeightVector = "1/3,2/3".parse()?;
    let quarter = MeasureTree::from(Gamma3::new(1, 4)?);
    let samples = staircase_samples(&quarter, &lopsided, 5, 6)?;
    out.push_str("\nmiddle-quarter, weights 1/3,2/3, stage 6:\n");
    out.push_str(&samples_to_csv(&samples));
    Ok(out)
}

fn main() -> cantor::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
