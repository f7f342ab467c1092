//! Which rationals lie in a digit limit set: digit prefixes of single points,
//! then every reduced fraction up to a denominator bound.
//!
//!     cargo run --example limit_membership

use std::fmt::Write;

use cantor::family::digit_expansions;
use cantor::verify::exhaustive_digit_membership;
use cantor::{DigitIfs, Rational};

pub fn run_example() -> cantor::Result<String> {
    let mut out = String::new();
    let cantor = DigitIfs::new(3, vec![0, 2])?;
    for x in ["1/3", "1/4", "3/4", "1/2"] {
        let x: Rational = x.parse()?;
        let prefixes = digit_expansions(&x, 3, 4)?;
        let admissible = prefixes.iter().any(|p| cantor.accepts_prefix(p));
        writeln!(out, "{x}: ternary prefixes {prefixes:?}, admissible {admissible}").unwrap();
    }
    let members: Vec<String> = exhaustive_digit_membership(&cantor, 30)
        .into_iter()
        .filter(|(_, inside)| *inside)
        .map(|(x, _)| x.to_string())
        .collect();
    writeln!(out, "\nmiddle-third members with denominator <= 30 ({}):", members.len()).unwrap();
    writeln!(out, "{}", members.join(" ")).unwrap();
    Ok(out)
}

fn main() -> cantor::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
