//! Exact construction and analysis of deterministic Cantor sets on `[0,1]`.
//!
//! Every quantity is an exact [`Rational`]; stage sets are canonical
//! [`IntervalSet`]s, so two constructions of the same stage can be compared
//! with `==`.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod family;
pub mod interval;
pub mod measure;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use family::{Address, DigitIfs, EndpointTable, FamilySpec, Gamma1, Gamma2, Gamma2Formula, Gamma3};
pub use interval::{ClosedInterval, GapList, IntervalSet, OpenInterval};
pub use rational::Rational;
