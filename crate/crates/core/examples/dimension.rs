//! Similarity dimension `log K / log(1/r)` for digit families; middle-α sets
//! with `α < 1/3` have positive measure and so dimension 1.
//!
//!     cargo run --example dimension

use std::fmt::Write;

use cantor::analysis::{hausdorff_dimension, spec_dimension, SpecDimension};
use cantor::FamilySpec;

pub fn run_example() -> cantor::Result<String> {
    let mut out = String::new();
    for (k, r) in [(2, 3), (3, 5), (2, 4), (4, 6)] {
        let d = hausdorff_dimension(k, r, 10)?;
        writeln!(out, "log {k} / log {r} = {}", d.decimal).unwrap();
    }
    for spec in ["gamma1:q=7", "gamma2:q=5", "gamma3:p=1,q=3", "gamma3:p=1,q=4"] {
        let spec: FamilySpec = spec.parse()?;
        let line = match spec_dimension(&spec, 6)? {
            SpecDimension::SelfSimilar(d) => format!("{} maps of ratio 1/{}: {}", d.maps, d.ratio_reciprocal, d.decimal),
            SpecDimension::PositiveMeasure { measure } => format!("measure {measure}, dimension 1"),
        };
        writeln!(out, "{spec}: {line}").unwrap();
    }
    Ok(out)
}

fn main() -> cantor::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
