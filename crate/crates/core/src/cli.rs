//! Command-line front end.
//!
//! Every subcommand renders to a `String` so tests can drive the CLI
//! in-process; the `cantor` binary only forwards arguments and the exit code.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::analysis::{
    hausdorff_dimension, shift_grid, spec_dimension, sweep_to_csv, translate_intersection,
    translation_sweep, SpecDimension,
};
use crate::error::Error;
use crate::family::{DigitIfs, FamilySpec, Gamma1, Gamma2, Gamma2Formula, Gamma3};
use crate::interval::{ClosedInterval, IntervalSet};
use crate::measure::{
    cdf_bounds, gamma3_measure_profile, samples_to_csv, staircase_samples, MeasureTree,
    StaircaseSample, WeightVector,
};
use crate::rational::Rational;
use crate::verify::{
    exhaustive_digit_membership, verify_digit_characterization, verify_gamma1_formula,
    verify_gamma2_formula, verify_gamma3, verify_middle_third, ComparisonReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
/// The endpoint recursion disagreed with the direct construction.
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// Deepest stage the CLI will build.
pub const MAX_STAGE: u32 = 20;

#[derive(Parser, Debug)]
#[command(name = "cantor", version, about = "Exact construction and analysis of Cantor sets on [0,1]")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct OutputConfig {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// `paper` renders interval endpoints over a common `q^n` denominator
    /// without reduction, allowing fractional numerators such as `2.5/16`.
    #[arg(long, value_enum, default_value_t = FractionStyle::Reduced, global = true)]
    pub fraction_style: FractionStyle,
    /// Decimal digits for approximations.
    #[arg(long, default_value_t = 6, global = true)]
    pub precision: usize,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig {
            format: Format::Table,
            fraction_style: FractionStyle::Reduced,
            precision: 6,
            out: None,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FractionStyle {
    Reduced,
    Paper,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Endpoint table a_{n,k}, b_{n,k} of the middle-α set with α = p/q.
    Endpoints { p: u32, q: u32, n: u32 },
    /// Gaps of a stage set inside [0,1], or one level of a gap formula.
    Gaps {
        spec: FamilySpec,
        n: u32,
        /// Print only the level-n gap family of a gamma1/gamma2 formula.
        #[arg(long)]
        level: bool,
        /// Use the conjectured corrected gamma2 gap formula (not from the source).
        #[arg(long)]
        conjectured_correction: bool,
    },
    /// Stage-n set of a family.
    Stage {
        spec: FamilySpec,
        n: u32,
        /// Use the conjectured corrected gamma2 gap formula (not from the source).
        #[arg(long)]
        conjectured_correction: bool,
    },
    /// Lebesgue measure of the middle-α limit set.
    Measure {
        p: u32,
        q: u32,
        /// Also list stage measures for n = 0..=N.
        #[arg(long, value_name = "N")]
        profile: Option<u32>,
    },
    /// Similarity dimension log K / log(1/r).
    Dim {
        spec: Option<FamilySpec>,
        #[arg(long, requires = "ratio_reciprocal", conflicts_with = "spec")]
        maps: Option<u32>,
        #[arg(long, requires = "maps")]
        ratio_reciprocal: Option<u32>,
    },
    /// Brackets on the self-similar distribution function.
    Cdf {
        spec: FamilySpec,
        /// Comma-separated weights, one per map; uniform when omitted.
        #[arg(long)]
        weights: Option<WeightVector>,
        /// Single point in [0,1].
        #[arg(long, conflicts_with = "samples", required_unless_present = "samples")]
        x: Option<Rational>,
        /// Evenly spaced sample count over [0,1].
        #[arg(long)]
        samples: Option<usize>,
        /// Construction depth; brackets shrink as it grows.
        #[arg(long, short = 'n')]
        stage: u32,
    },
    /// Cross-representation comparisons.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Stage set of A intersected with the stage set of B shifted by t.
    Intersect {
        a: FamilySpec,
        b: FamilySpec,
        #[arg(allow_hyphen_values = true)]
        t: Rational,
        n: u32,
        /// Sweep t over COUNT evenly spaced shifts from t to UNTIL.
        #[arg(long, value_name = "UNTIL", requires = "count", allow_hyphen_values = true)]
        sweep_to: Option<Rational>,
        #[arg(long)]
        count: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Endpoint recursion against the direct middle-α construction.
    Gamma3 { p: u32, q: u32, n: u32 },
    /// Base-2q digit set against the direct middle-α construction.
    Digit { p: u32, q: u32, n: u32 },
    /// Printed gamma2 gap formula against the {0, q-1} digit set.
    Gamma2 { q: u32, n: u32 },
    /// Even-digit gamma1 gap formula against the even-digit set.
    Gamma1 { q: u32, n: u32 },
    /// All four middle-third descriptions, pairwise.
    Corollary { n: u32 },
    /// Limit-set membership of every rational with denominator <= BOUND.
    Membership { spec: FamilySpec, bound: u32 },
}

/// Rendered output plus the exit status it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub status: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, status: EXIT_OK }
    }
}

/// Parses arguments, runs, prints, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            if let Some(path) = &cli.output.out {
                if let Err(e) = std::fs::write(path, &outcome.text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return EXIT_DOMAIN;
                }
            } else {
                print!("{}", outcome.text);
            }
            outcome.status
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Spec(_) | Error::Range(_) | Error::Address(_) | Error::Weights(_) => {
            EXIT_USAGE
        }
        _ => EXIT_DOMAIN,
    }
}

fn check_stage(n: u32) -> Result<(), Error> {
    if n > MAX_STAGE {
        return Err(Error::Range(format!("stage {n} exceeds the CLI limit of {MAX_STAGE}")));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Outcome, Error> {
    let cfg = &cli.output;
    match &cli.command {
        Command::Endpoints { p, q, n } => {
            check_stage(*n)?;
            let spec = Gamma3::new(*p, *q)?;
            Ok(Outcome::ok(render_endpoints(&spec, *n, cfg)))
        }
        Command::Gaps {
            spec,
            n,
            level,
            conjectured_correction,
        } => {
            check_stage(*n)?;
            let formula = gamma2_formula(*conjectured_correction);
            let gaps = if *level {
                match spec {
                    FamilySpec::Gamma1(g) => g.gaps(*n)?,
                    FamilySpec::Gamma2(g) => g.gaps_with(*n, formula)?,
                    _ => {
                        return Err(Error::Spec(
                            "--level applies to gamma1 and gamma2 gap formulas only".into(),
                        ))
                    }
                }
            } else {
                stage_of(spec, *n, formula)?.gaps_within(&ClosedInterval::unit())?
            };
            let pairs: Vec<(Rational, Rational)> = gaps
                .iter()
                .map(|g| (g.lo().clone(), g.hi().clone()))
                .collect();
            Ok(Outcome::ok(render_interval_list(spec, *n, &pairs, ('(', ')'), cfg)))
        }
        Command::Stage {
            spec,
            n,
            conjectured_correction,
        } => {
            check_stage(*n)?;
            let set = stage_of(spec, *n, gamma2_formula(*conjectured_correction))?;
            Ok(Outcome::ok(render_stage(spec, *n, &set, cfg)))
        }
        Command::Measure { p, q, profile } => {
            let spec = Gamma3::new(*p, *q)?;
            Ok(Outcome::ok(render_measure(&spec, *profile, cfg)?))
        }
        Command::Dim {
            spec,
            maps,
            ratio_reciprocal,
        } => {
            let dim = match (spec, maps, ratio_reciprocal) {
                (Some(spec), _, _) => spec_dimension(spec, cfg.precision)?,
                (None, Some(k), Some(r)) => {
                    SpecDimension::SelfSimilar(hausdorff_dimension(*k, *r, cfg.precision)?)
                }
                _ => return Err(Error::Spec("give a family spec or --maps with --ratio-reciprocal".into())),
            };
            Ok(Outcome::ok(render_dimension(&dim, cfg)))
        }
        Command::Cdf {
            spec,
            weights,
            x,
            samples,
            stage,
        } => {
            check_stage(*stage)?;
            let tree = MeasureTree::from(spec);
            let weights = match weights {
                Some(w) => w.clone(),
                None => WeightVector::uniform(tree.map_count())?,
            };
            let rows = match (x, samples) {
                (Some(x), _) => {
                    let bound = cdf_bounds(&tree, &weights, x, *stage)?;
                    vec![StaircaseSample {
                        x: x.clone(),
                        lower: bound.lower,
                        upper: bound.upper,
                        stage: *stage,
                    }]
                }
                (None, Some(m)) => staircase_samples(&tree, &weights, *m, *stage)?,
                (None, None) => return Err(Error::Spec("give --x or --samples".into())),
            };
            Ok(Outcome::ok(render_cdf(&rows, cfg)))
        }
        Command::Verify { check } => run_verify(check, cfg),
        Command::Intersect {
            a,
            b,
            t,
            n,
            sweep_to,
            count,
        } => {
            check_stage(*n)?;
            match (sweep_to, count) {
                (Some(until), Some(count)) => {
                    let shifts = shift_grid(t, until, *count)?;
                    let rows = translation_sweep(a, b, &shifts, *n)?;
                    Ok(Outcome::ok(match cfg.format {
                        Format::Csv => sweep_to_csv(&rows),
                        Format::Json => to_json(&rows),
                        Format::Table => {
                            let mut out = String::new();
                            for row in &rows {
                                let _ = writeln!(
                                    out,
                                    "t={} length={} components={}",
                                    row.t, row.intersection_length, row.component_count
                                );
                            }
                            out
                        }
                    }))
                }
                _ => {
                    let hit = translate_intersection(a, b, t, *n)?;
                    Ok(Outcome::ok(render_intersection(a, *n, t, &hit.set, &hit.length, cfg)))
                }
            }
        }
    }
}

fn gamma2_formula(corrected: bool) -> Gamma2Formula {
    if corrected {
        Gamma2Formula::ConjecturedCorrection
    } else {
        Gamma2Formula::Printed
    }
}

fn stage_of(spec: &FamilySpec, n: u32, formula: Gamma2Formula) -> Result<IntervalSet, Error> {
    match spec {
        FamilySpec::Gamma2(g) => g.stage_with(n, formula),
        other => other.stage(n),
    }
}

/// Un-reduced `num/q^n` rendering.
///
/// The value is scaled to `q^(n+1)`, rounded to an integer numerator, and
/// that numerator is divided by `q` for display, so halves and other
/// fractions of a `q^-n` step show up as decimal numerators (`2.5/16`).
pub fn paper_fraction(value: &Rational, q: u32, n: u32) -> String {
    let q_r = Rational::from(q);
    let scaled = (value * &q_r.pow(n + 1)).round_half_even();
    let numer = Rational::from(scaled) / &q_r;
    format!("{}/{}", numer.to_significant(15), q_r.pow(n))
}

fn fraction(value: &Rational, q: u32, n: u32, style: FractionStyle) -> String {
    match style {
        FractionStyle::Reduced => value.to_string(),
        FractionStyle::Paper => paper_fraction(value, q, n),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

/// JSON schema of `endpoints`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct EndpointsOutput {
    pub p: u32,
    pub q: u32,
    pub stage: u32,
    pub fraction_style: String,
    /// `k = 0` is the stage-0 base interval, then `k = 1..=2^n`.
    pub rows: Vec<EndpointsRow>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct EndpointsRow {
    pub k: u64,
    pub a: String,
    pub b: String,
    pub interval: String,
}

fn style_name(style: FractionStyle) -> String {
    match style {
        FractionStyle::Reduced => "reduced".into(),
        FractionStyle::Paper => "paper".into(),
    }
}

pub fn render_endpoints(spec: &Gamma3, n: u32, cfg: &OutputConfig) -> String {
    let table = spec.endpoints(n);
    let q = spec.q();
    let style = cfg.fraction_style;
    let base = (Rational::zero(), Rational::one());
    let rows: Vec<EndpointsRow> = std::iter::once((0u64, &base.0, &base.1))
        .chain(table.rows.iter().map(|row| (row.k, &row.a, &row.b)))
        .map(|(k, a, b)| {
            let a = fraction(a, q, n, style);
            let b = fraction(b, q, n, style);
            EndpointsRow {
                k,
                interval: format!("[{a},{b}]"),
                a,
                b,
            }
        })
        .collect();
    match cfg.format {
        Format::Json => to_json(&EndpointsOutput {
            p: spec.p(),
            q,
            stage: n,
            fraction_style: style_name(style),
            rows,
        }),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(["k", "a", "b", "interval"]).expect("in-memory write");
            for row in &rows {
                writer
                    .write_record([row.k.to_string(), row.a.clone(), row.b.clone(), row.interval.clone()])
                    .expect("in-memory write");
            }
            String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Table => {
            let row_names: Vec<String> = rows.iter().map(|r| format!("k={}", r.k)).collect();
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| vec![r.a.clone(), r.b.clone(), r.interval.clone()])
                .collect();
            quoted_matrix(
                &row_names,
                &["a_(n,k)(α)", "b_(n,k)(α)", "[a_(n,k)(α),b_(n,k)(α)]"],
                &cells,
            )
        }
    }
}

/// Character-matrix layout with quoted, left-aligned cells.
///
/// Column `j` is as wide as the wider of its header and its longest quoted
/// cell. Headers sit one column right of the cells' opening quotes.
fn quoted_matrix(row_names: &[String], headers: &[&str], cells: &[Vec<String>]) -> String {
    let width = |s: &str| s.chars().count();
    let name_width = row_names.iter().map(|s| width(s)).max().unwrap_or(0);
    let col_widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(j, h)| {
            cells
                .iter()
                .map(|row| width(&row[j]) + 2)
                .chain(std::iter::once(width(h)))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(width(s))));

    let mut out = String::new();
    out.push_str(&" ".repeat(name_width + 2));
    let header_cells: Vec<String> = headers
        .iter()
        .zip(&col_widths)
        .map(|(h, &w)| pad(h, w))
        .collect();
    out.push_str(header_cells.join(" ").trim_end());
    out.push('\n');
    for (name, row) in row_names.iter().zip(cells) {
        out.push_str(&pad(name, name_width));
        for (cell, &w) in row.iter().zip(&col_widths) {
            out.push(' ');
            out.push_str(&pad(&format!("\"{cell}\""), w));
        }
        out.push('\n');
    }
    out
}

/// JSON schema of `stage` and `gaps`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct IntervalListOutput {
    pub spec: FamilySpec,
    pub stage: u32,
    pub count: usize,
    pub length: Rational,
    pub fraction_style: String,
    pub intervals: Vec<[String; 2]>,
}

fn render_interval_list(
    spec: &FamilySpec,
    n: u32,
    pairs: &[(Rational, Rational)],
    brackets: (char, char),
    cfg: &OutputConfig,
) -> String {
    let q = spec.display_base();
    let style = cfg.fraction_style;
    let length: Rational = pairs.iter().map(|(lo, hi)| hi - lo).sum();
    let rendered: Vec<[String; 2]> = pairs
        .iter()
        .map(|(lo, hi)| [fraction(lo, q, n, style), fraction(hi, q, n, style)])
        .collect();
    match cfg.format {
        Format::Json => to_json(&IntervalListOutput {
            spec: spec.clone(),
            stage: n,
            count: pairs.len(),
            length,
            fraction_style: style_name(style),
            intervals: rendered,
        }),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["lo_num", "lo_den", "hi_num", "hi_den"])
                .expect("in-memory write");
            for (lo, hi) in pairs {
                writer
                    .write_record([
                        lo.numer().to_string(),
                        lo.denom().to_string(),
                        hi.numer().to_string(),
                        hi.denom().to_string(),
                    ])
                    .expect("in-memory write");
            }
            String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Table => {
            let mut out = String::new();
            for [lo, hi] in &rendered {
                let _ = writeln!(out, "{}{lo},{hi}{}", brackets.0, brackets.1);
            }
            let noun = if brackets.0 == '(' { "gaps" } else { "intervals" };
            let _ = writeln!(out, "# {spec} stage {n}: {} {noun}, total length {length}", pairs.len());
            out
        }
    }
}

fn render_stage(spec: &FamilySpec, n: u32, set: &IntervalSet, cfg: &OutputConfig) -> String {
    let pairs: Vec<(Rational, Rational)> = set.iter().map(|iv| (iv.lo().clone(), iv.hi().clone())).collect();
    render_interval_list(spec, n, &pairs, ('[', ']'), cfg)
}

/// JSON schema of `measure`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MeasureOutput {
    pub p: u32,
    pub q: u32,
    pub measure: Rational,
    pub decimal: String,
    pub profile: Vec<ProfileRow>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ProfileRow {
    pub n: u32,
    pub measure: Rational,
}

fn render_measure(spec: &Gamma3, profile: Option<u32>, cfg: &OutputConfig) -> Result<String, Error> {
    let measure = spec.measure();
    let rows: Vec<ProfileRow> = match profile {
        Some(n_max) => {
            check_stage(n_max)?;
            gamma3_measure_profile(spec, n_max)
                .into_iter()
                .map(|row| ProfileRow {
                    n: row.n,
                    measure: row.measure,
                })
                .collect()
        }
        None => Vec::new(),
    };
    Ok(match cfg.format {
        Format::Json => to_json(&MeasureOutput {
            p: spec.p(),
            q: spec.q(),
            decimal: measure.to_decimal(cfg.precision),
            measure,
            profile: rows,
        }),
        Format::Csv => {
            let mut out = String::from("n,measure_num,measure_den\n");
            for row in &rows {
                let _ = writeln!(out, "{},{},{}", row.n, row.measure.numer(), row.measure.denom());
            }
            let _ = writeln!(out, "limit,{},{}", measure.numer(), measure.denom());
            out
        }
        Format::Table => {
            let mut out = format!("{measure}\n");
            for row in &rows {
                let _ = writeln!(out, "n={} {}", row.n, row.measure);
            }
            out
        }
    })
}

fn render_dimension(dim: &SpecDimension, cfg: &OutputConfig) -> String {
    match cfg.format {
        Format::Json => to_json(dim),
        Format::Csv => match dim {
            SpecDimension::SelfSimilar(d) => format!(
                "maps,ratio_reciprocal,dimension\n{},{},{}\n",
                d.maps, d.ratio_reciprocal, d.decimal
            ),
            SpecDimension::PositiveMeasure { .. } => {
                format!("maps,ratio_reciprocal,dimension\n,,{}\n", Rational::one().to_decimal(cfg.precision))
            }
        },
        Format::Table => match dim {
            SpecDimension::SelfSimilar(d) => {
                format!("log {} / log {} = {}\n", d.maps, d.ratio_reciprocal, d.decimal)
            }
            SpecDimension::PositiveMeasure { measure } => {
                format!("1 (positive Lebesgue measure {measure})\n")
            }
        },
    }
}

fn render_cdf(rows: &[StaircaseSample], cfg: &OutputConfig) -> String {
    match cfg.format {
        Format::Json => to_json(&rows),
        Format::Csv => samples_to_csv(rows),
        Format::Table => {
            let mut out = String::new();
            for row in rows {
                if row.lower == row.upper {
                    let _ = writeln!(out, "F({}) = {} (stage {})", row.x, row.lower, row.stage);
                } else {
                    let _ = writeln!(
                        out,
                        "F({}) in [{}, {}] (stage {})",
                        row.x, row.lower, row.upper, row.stage
                    );
                }
            }
            out
        }
    }
}

/// JSON schema of `verify`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutput {
    pub check: String,
    pub all_equal: bool,
    pub reports: Vec<ComparisonReport>,
}

/// JSON schema of `verify membership`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MembershipRow {
    pub x: Rational,
    pub member: bool,
}

fn run_verify(check: &VerifyCommand, cfg: &OutputConfig) -> Result<Outcome, Error> {
    let (name, reports, must_hold) = match check {
        VerifyCommand::Gamma3 { p, q, n } => {
            check_stage(*n)?;
            let spec = Gamma3::new(*p, *q)?;
            (format!("gamma3 p={p} q={q}"), verify_gamma3(&spec, *n)?, true)
        }
        VerifyCommand::Digit { p, q, n } => {
            check_stage(*n)?;
            let spec = Gamma3::new(*p, *q)?;
            (format!("digit p={p} q={q}"), verify_digit_characterization(&spec, *n)?, false)
        }
        VerifyCommand::Gamma2 { q, n } => {
            check_stage(*n)?;
            (format!("gamma2 q={q}"), verify_gamma2_formula(&Gamma2::new(*q)?, *n)?, false)
        }
        VerifyCommand::Gamma1 { q, n } => {
            check_stage(*n)?;
            (format!("gamma1 q={q}"), verify_gamma1_formula(&Gamma1::new(*q)?, *n)?, false)
        }
        VerifyCommand::Corollary { n } => {
            check_stage(*n)?;
            ("middle-third representations".to_string(), verify_middle_third(*n)?, false)
        }
        VerifyCommand::Membership { spec, bound } => {
            let digits: DigitIfs = spec
                .digit_ifs()
                .ok_or_else(|| Error::Spec(format!("{spec} has no digit presentation; use its digit spec")))?;
            let rows: Vec<MembershipRow> = exhaustive_digit_membership(&digits, *bound)
                .into_iter()
                .map(|(x, member)| MembershipRow { x, member })
                .collect();
            let text = match cfg.format {
                Format::Json => to_json(&rows),
                Format::Csv => {
                    let mut out = String::from("x_num,x_den,member\n");
                    for row in &rows {
                        let _ = writeln!(out, "{},{},{}", row.x.numer(), row.x.denom(), row.member);
                    }
                    out
                }
                Format::Table => {
                    let members: Vec<String> = rows.iter().filter(|r| r.member).map(|r| r.x.to_string()).collect();
                    format!(
                        "{} of {} rationals with denominator <= {bound} lie in the limit set\n{}\n",
                        members.len(),
                        rows.len(),
                        members.join(" ")
                    )
                }
            };
            return Ok(Outcome::ok(text));
        }
    };
    let all_equal = reports.iter().all(|r| r.equal);
    let n_max = reports.last().map_or(0, |r| r.stage);
    let text = match cfg.format {
        Format::Json => to_json(&VerifyOutput {
            check: name,
            all_equal,
            reports,
        }),
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["stage", "left_label", "right_label", "equal", "witness"])
                .expect("in-memory write");
            for r in &reports {
                writer
                    .write_record([
                        r.stage.to_string(),
                        r.left_label.clone(),
                        r.right_label.clone(),
                        r.equal.to_string(),
                        r.witness.as_ref().map(Rational::to_string).unwrap_or_default(),
                    ])
                    .expect("in-memory write");
            }
            String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Table => {
            let mut out = String::new();
            if all_equal {
                let _ = writeln!(out, "equal at all stages 0..{n_max}");
            } else {
                for r in reports.iter().filter(|r| !r.equal) {
                    let _ = writeln!(
                        out,
                        "stage {}: {} differs from {}; {} only: {}; {} only: {}; witness {}",
                        r.stage,
                        r.left_label,
                        r.right_label,
                        r.left_label,
                        r.left_minus_right,
                        r.right_label,
                        r.right_minus_left,
                        r.witness.as_ref().map(Rational::to_string).unwrap_or_default()
                    );
                }
                let first = reports.iter().find(|r| !r.equal).map_or(0, |r| r.stage);
                let _ = writeln!(out, "differences found from stage {first} (checked 0..{n_max})");
            }
            out
        }
    };
    let status = if must_hold && !all_equal {
        EXIT_VERIFY_FAILED
    } else {
        EXIT_OK
    };
    Ok(Outcome { text, status })
}

/// JSON schema of `intersect`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct IntersectOutput {
    pub stage: u32,
    pub t: Rational,
    pub length: Rational,
    pub components: usize,
    pub set: IntervalSet,
}

fn render_intersection(
    a: &FamilySpec,
    n: u32,
    t: &Rational,
    set: &IntervalSet,
    length: &Rational,
    cfg: &OutputConfig,
) -> String {
    match cfg.format {
        Format::Json => to_json(&IntersectOutput {
            stage: n,
            t: t.clone(),
            length: length.clone(),
            components: set.len(),
            set: set.clone(),
        }),
        Format::Csv => set.to_csv(),
        Format::Table => {
            let q = a.display_base();
            let mut out = String::new();
            for iv in set {
                let _ = writeln!(
                    out,
                    "[{},{}]",
                    fraction(iv.lo(), q, n, cfg.fraction_style),
                    fraction(iv.hi(), q, n, cfg.fraction_style)
                );
            }
            let _ = writeln!(out, "# components: {}, total length {length}", set.len());
            out
        }
    }
}

/// Runs a command line in-process and returns its rendered output.
pub fn run_args<I, T>(args: I) -> Result<Outcome, Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::Parse {
        what: "command line",
        input: e.to_string(),
    })?;
    run(&cli)
}
