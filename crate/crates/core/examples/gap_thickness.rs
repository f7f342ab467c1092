//! Gap-length histograms and the finite-stage thickness proxy across
//! families.
//!
//!     cargo run --example gap_thickness

use std::fmt::Write;

use cantor::analysis::{stage_gap_statistics, thickness_proxy};
use cantor::{ClosedInterval, FamilySpec};

pub fn run_example() -> cantor::Result<String> {
    let mut out = String::new();
    for spec in ["gamma1:q=3", "gamma3:p=1,q=4", "gamma3:p=2,q=7", "digit:base=5,A=0,2,4"] {
        let spec: FamilySpec = spec.parse()?;
        writeln!(out, "{spec}").unwrap();
        for n in [1, 3, 5] {
            let stats = stage_gap_statistics(&spec, n)?;
            let thickness = thickness_proxy(&spec.stage(n)?, &ClosedInterval::unit())?;
            let bins: Vec<String> = stats
                .histogram
                .iter()
                .map(|b| format!("{}x{}", b.multiplicity, b.length))
                .collect();
            writeln!(
                out,
                "  n={n}: {} gaps, total {}, thickness {thickness}, bins {}",
                stats.count,
                stats.total_gap,
                bins.join(" ")
            )
            .unwrap();
        }
    }
    Ok(out)
}

fn main() -> cantor::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
