//! Scales, score vectors, coalitions and the carriers integrals are taken against.

mod bicapacity;
mod capacity;
mod coalition;
mod comonotone;
mod interval;
mod score;

use std::fmt;

use thiserror::Error;

pub use bicapacity::{upper_covers, validate_bicapacity, BiCapacity};
pub use capacity::{validate_capacity, validate_measure, Capacity, Measure};
pub use coalition::{
    indicator, lattice_leq, level_pair, pair_inclusion, Coalition, SignedCoalition,
};
pub use comonotone::{is_bipolar_comonotone, is_comonotone};
pub use interval::Interval;
pub use score::{negative_part, positive_part, ScoreVector};

pub(crate) use coalition::{indicator_values, level_pair_of};

/// Largest supported criterion count; coalitions are `u32` bitmasks and
/// bi-capacity tables hold `3^n` entries.
pub const MAX_CRITERIA: usize = 20;

/// A point of either carrier domain, used to name offending entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticePoint {
    Set(Coalition),
    Pair(SignedCoalition),
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticePoint::Set(a) => write!(f, "{a}"),
            LatticePoint::Pair(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("criterion count {0} outside 1..={MAX_CRITERIA}")]
    CriterionCount(usize),
    #[error("criterion index {0} outside 1..={MAX_CRITERIA}")]
    CriterionIndex(usize),
    #[error("invalid interval: {0}")]
    InvalidInterval(String),
    #[error("criterion {criterion}: score {value} outside scale {scale}")]
    OutOfScale {
        criterion: usize,
        value: f64,
        scale: Interval,
    },
    #[error("positive side {pos} and negative side {neg} overlap")]
    DisjointnessViolation { pos: Coalition, neg: Coalition },
    #[error("no entry for {0}")]
    MissingEntry(LatticePoint),
    #[error("duplicate entry for {0}")]
    DuplicateEntry(LatticePoint),
    #[error("entry {at} mentions criteria beyond n = {n}")]
    EntryOutOfRange { at: LatticePoint, n: usize },
    #[error("value {value} at {at} outside {range}")]
    ValueRange {
        at: LatticePoint,
        value: f64,
        range: Interval,
    },
    #[error("boundary value at {at} must be {expected}, found {found}")]
    BoundaryViolation {
        at: LatticePoint,
        expected: f64,
        found: f64,
    },
    #[error("not monotone: {lower} -> {lower_value} exceeds {upper} -> {upper_value}")]
    MonotonicityViolation {
        lower: LatticePoint,
        upper: LatticePoint,
        lower_value: f64,
        upper_value: f64,
    },
    #[error("table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("measures need a closed scale, got {0}")]
    OpenScale(Interval),
}

pub(crate) fn check_criterion_count(n: usize) -> Result<(), ModelError> {
    if n == 0 || n > MAX_CRITERIA {
        return Err(ModelError::CriterionCount(n));
    }
    Ok(())
}
