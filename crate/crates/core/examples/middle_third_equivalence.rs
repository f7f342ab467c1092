//! The middle-third set built four ways (two gap formulas, the endpoint
//! recursion, ternary digits) and compared stage by stage.
//!
//!     cargo run --example middle_third_equivalence

use std::fmt::Write;

use cantor::verify::{all_equal, verify_middle_third};
use cantor::{DigitIfs, Gamma1};

pub fn run_example() -> cantor::Result<String> {
    let mut out = String::new();
    let gaps = Gamma1::new(3)?;
    let digits = DigitIfs::new(3, vec![0, 2])?;
    for n in 0..=3 {
        writeln!(out, "stage {n}: {}", gaps.stage(n)?).unwrap();
        assert_eq!(gaps.stage(n)?, digits.stage(n));
    }
    let reports = verify_middle_third(8)?;
    writeln!(
        out,
        "{} pairwise comparisons through stage 8, all equal: {}",
        reports.len(),
        all_equal(&reports)
    )
    .unwrap();
    Ok(out)
}

fn main() -> cantor::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
