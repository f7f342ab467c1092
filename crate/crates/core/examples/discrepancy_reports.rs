//! Two comparisons that do not come out equal: the `{0, q-1}` gap formula at
//! `q = 4`, and the base-`2q` digit set against the middle-α construction.
//! Witnesses are then checked against the limit sets themselves.
//!
//!     cargo run --example discrepancy_reports

use std::fmt::Write;

use cantor::verify::{in_limit_set, verify_digit_characterization, verify_gamma2_formula, ComparisonReport};
use cantor::{Gamma2, Gamma2Formula, Gamma3};

fn describe(out: &mut String, reports: &[ComparisonReport]) {
    for r in reports {
        match &r.witness {
            None => writeln!(out, "  n={}: equal", r.stage).unwrap(),
            Some(w) => writeln!(
                out,
                "  n={}: left-only {} right-only {} witness {w}",
                r.stage, r.left_minus_right, r.right_minus_left
            )
            .unwrap(),
        }
    }
}

pub fn run_example() -> cantor::Result<String> {
    let mut out = String::new();
    let gamma2 = Gamma2::new(4)?;
    let reports = verify_gamma2_formula(&gamma2, 3)?;
    writeln!(out, "{} vs {}", reports[0].left_label, reports[0].right_label).unwrap();
    describe(&mut out, &reports);
    let digits = gamma2.digit_ifs();
    for x in ["1/2", "5/8", "1/5"] {
        let x = x.parse()?;
        writeln!(out, "  {x} in limit set: {}", in_limit_set(&digits, &x)).unwrap();
    }
    let corrected = gamma2.stage_with(3, Gamma2Formula::ConjecturedCorrection)?;
    writeln!(out, "  corrected gaps reproduce the digit set at n=3: {}", corrected == digits.stage(3)).unwrap();

    let gamma3 = Gamma3::new(1, 3)?;
    let reports = verify_digit_characterization(&gamma3, 3)?;
    writeln!(out, "{} vs {}", reports[0].left_label, reports[0].right_label).unwrap();
    describe(&mut out, &reports);
    let digits = gamma3.digit_spec();
    if let Some(w) = reports.iter().find_map(|r| r.witness.clone()) {
        writeln!(out, "  witness {w} in base-{} limit set: {}", digits.base(), in_limit_set(&digits, &w)).unwrap();
    }
    Ok(out)
}

fn main() -> cantor::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
