//! Executable axioms for aggregation functions.
//!
//! An [`Aggregator`] wraps any total function on score vectors over a fixed
//! scale. [`check_axiom`] tests one axiom on seeded random instances drawn from
//! the axiom's quantifier domain, enumerating finite sub-domains exhaustively.
//! [`run_characterization_suite`] checks the axiom bundle characterizing an
//! integral family and elicits the carrier back from the integral.

mod aggregator;
mod check;
mod elicit;
mod generators;
mod suite;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bipolar_ops::Variant;
use crate::model::{Interval, ModelError};
use crate::unipolar::IntegralError;

pub use aggregator::{Aggregator, TabulatedGrid};
pub use check::{check_axiom, check_axioms, MAX_WITNESSES};
pub use elicit::{elicit_bicapacity, elicit_capacity};
pub use generators::{
    gen_bipolar_comonotone_pair, gen_chain, gen_comonotone_pair, random_bicapacity,
    random_capacity, random_measure, ChainSpec,
};
pub use suite::{run_characterization_suite, Carrier, Family, SuiteReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AxiomError {
    #[error("axiom {axiom} is not defined on the scale {scale}")]
    UnsupportedAxiomForScale { axiom: Axiom, scale: Interval },
    #[error("scale {0} is not supported here")]
    UnsupportedScale(Interval),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("family {family} needs a {expected} carrier")]
    CarrierMismatch {
        family: Family,
        expected: &'static str,
    },
    #[error("elicited carrier is invalid: {0}")]
    Elicitation(#[source] ModelError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Integral(#[from] IntegralError),
}

/// A property of aggregation functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    Idempotency,
    Homogeneity,
    Additivity,
    Maxitivity,
    Minitivity,
    MinStability,
    ComonotoneAdditivity,
    ComonotoneMaxitivity,
    ComonotoneMinitivity,
    BipolarComonotoneAdditivity,
    BipolarComonotoneMaxitivity(Variant),
    BipolarSignStability,
    BipolarMinStability,
}

impl Axiom {
    pub const ALL: [Axiom; 15] = [
        Axiom::Idempotency,
        Axiom::Homogeneity,
        Axiom::Additivity,
        Axiom::Maxitivity,
        Axiom::Minitivity,
        Axiom::MinStability,
        Axiom::ComonotoneAdditivity,
        Axiom::ComonotoneMaxitivity,
        Axiom::ComonotoneMinitivity,
        Axiom::BipolarComonotoneAdditivity,
        Axiom::BipolarComonotoneMaxitivity(Variant::Neutral),
        Axiom::BipolarComonotoneMaxitivity(Variant::Right),
        Axiom::BipolarComonotoneMaxitivity(Variant::Left),
        Axiom::BipolarSignStability,
        Axiom::BipolarMinStability,
    ];

    /// Refuse scales on which the axiom is undefined or cannot be sampled.
    pub fn check_scale(self, scale: Interval) -> Result<(), AxiomError> {
        let (lo, hi) = (scale.lower(), scale.upper());
        let ok = scale.is_closed()
            && lo.is_finite()
            && hi.is_finite()
            && match self {
                Axiom::Idempotency
                | Axiom::MinStability
                | Axiom::ComonotoneMaxitivity
                | Axiom::ComonotoneMinitivity => true,
                Axiom::Homogeneity | Axiom::Additivity | Axiom::ComonotoneAdditivity => {
                    lo <= 0.0 && hi >= 0.0
                }
                Axiom::Maxitivity => lo >= 0.0,
                Axiom::Minitivity => hi <= 0.0,
                Axiom::BipolarComonotoneAdditivity
                | Axiom::BipolarComonotoneMaxitivity(_)
                | Axiom::BipolarSignStability
                | Axiom::BipolarMinStability => scale == Interval::bipolar(),
            };
        if ok {
            Ok(())
        } else {
            Err(AxiomError::UnsupportedAxiomForScale { axiom: self, scale })
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Idempotency => "idempotency",
            Axiom::Homogeneity => "homogeneity",
            Axiom::Additivity => "additivity",
            Axiom::Maxitivity => "maxitivity",
            Axiom::Minitivity => "minitivity",
            Axiom::MinStability => "min-stability",
            Axiom::ComonotoneAdditivity => "comonotone-additivity",
            Axiom::ComonotoneMaxitivity => "comonotone-maxitivity",
            Axiom::ComonotoneMinitivity => "comonotone-minitivity",
            Axiom::BipolarComonotoneAdditivity => "bipolar-comonotone-additivity",
            Axiom::BipolarComonotoneMaxitivity(v) => {
                return write!(f, "bipolar-comonotone-maxitivity({v})")
            }
            Axiom::BipolarSignStability => "bipolar-sign-stability",
            Axiom::BipolarMinStability => "bipolar-min-stability",
        };
        f.write_str(name)
    }
}

impl FromStr for Axiom {
    type Err = AxiomError;

    /// Accepts the display names; `bipolar-comonotone-maxitivity` alone means the neutral variant.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("bipolar-comonotone-maxitivity") {
            let variant = match rest {
                "" => Variant::Neutral,
                _ => rest
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| AxiomError::UnknownAxiom(s.to_string()))?,
            };
            return Ok(Axiom::BipolarComonotoneMaxitivity(variant));
        }
        Axiom::ALL
            .iter()
            .copied()
            .find(|a| a.to_string() == s)
            .ok_or_else(|| AxiomError::UnknownAxiom(s.to_string()))
    }
}

impl Serialize for Axiom {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One failed instance of an axiom.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub trial: u64,
    pub inputs: Vec<Vec<f64>>,
    pub note: String,
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

/// Outcome of checking one axiom.
///
/// At most [`MAX_WITNESSES`] violations are kept, in trial order;
/// `violation_count` counts all of them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub trials: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub passed: bool,
}

impl AxiomReport {
    pub(crate) fn new(axiom: Axiom, trials: u64, mut violations: Vec<Violation>) -> Self {
        violations.sort_by_key(|v| v.trial);
        let violation_count = violations.len() as u64;
        violations.truncate(MAX_WITNESSES);
        Self {
            axiom,
            trials,
            violation_count,
            passed: violations.is_empty(),
            violations,
        }
    }
}
