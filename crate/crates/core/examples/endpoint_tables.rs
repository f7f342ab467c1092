//! Middle-α endpoint tables for a few `p/q`, reduced and in the un-reduced
//! `x/q^n` layout.
//!
//!     cargo run --example endpoint_tables

use std::fmt::Write;

use cantor::cli::{paper_fraction, render_endpoints, FractionStyle, OutputConfig};
use cantor::Gamma3;

pub fn run_example() -> cantor::Result<String> {
    let mut out = String::new();
    for (p, q) in [(1, 3), (1, 4), (2, 7)] {
        let spec = Gamma3::new(p, q)?;
        let table = spec.endpoints(2);
        writeln!(out, "gamma3 p={p} q={q}, stage 2, interval length {}", spec.interval_length(2)).unwrap();
        for row in &table.rows {
            writeln!(
                out,
                "  k={}  [{}, {}]  =  [{}, {}]",
                row.k,
                row.a,
                row.b,
                paper_fraction(&row.a, q, 2),
                paper_fraction(&row.b, q, 2)
            )
            .unwrap();
        }
    }
    let cfg = OutputConfig {
        fraction_style: FractionStyle::Paper,
        ..OutputConfig::default()
    };
    out.push_str("\nmatrix layout, p=1 q=4:\n");
    out.push_str(&render_endpoints(&Gamma3::new(1, 4)?, 2, &cfg));
    Ok(out)
}

fn main() -> cantor::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
