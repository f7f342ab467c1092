//! Length of `C ∩ (D + t)` at a fixed stage as `t` sweeps an interval.
//!
//!     cargo run --example translation_intersections

use std::fmt::Write;

use cantor::analysis::{shift_grid, sweep_to_csv, translate_intersection, translation_sweep};
use cantor::{FamilySpec, Rational};

pub fn run_example() -> cantor::Result<String> {
    let mut out = String::new();
    let c: FamilySpec = "gamma1:q=3".parse()?;
    let thick: FamilySpec = "gamma3:p=1,q=5".parse()?;
    let half: Rational = "1/2".parse()?;
    let hit = translate_intersection(&c, &c, &half, 3)?;
    writeln!(out, "C ∩ (C + 1/2) at n=3: {} (length {})", hit.set, hit.length).unwrap();

    let shifts = shift_grid(&"-1".parse()?, &"1".parse()?, 9)?;
    let rows = translation_sweep(&thick, &c, &shifts, 4)?;
    out.push_str("\nmiddle-fifth against middle-third, n=4:\n");
    out.push_str(&sweep_to_csv(&rows));
    Ok(out)
}

fn main() -> cantor::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
