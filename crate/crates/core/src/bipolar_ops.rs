//! The symmetric maximum and the bipolar maximum family.
//!
//! The symmetric maximum `a ⊘ b` keeps the operand of larger magnitude and
//! cancels exact opposites to 0. It is not associative, so the bipolar maximum
//! of a set is defined directly: the unique element of strictly largest
//! magnitude, or 0 when an opposite pair shares the largest magnitude. The
//! positive and negative variants resolve that tie toward the nonnegative or
//! nonpositive element instead.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::model::{Interval, ScoreVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpsError {
    #[error("empty input")]
    EmptyInput,
    #[error("vectors of lengths {expected} and {found} cannot be combined")]
    LengthMismatch { expected: usize, found: usize },
    #[error("NaN in input")]
    NotANumber,
}

/// Which bipolar maximum is used.
///
/// `Right` is the positive (optimistic) bipolar maximum, `Left` the negative
/// (pessimistic) one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    Neutral,
    Right,
    Left,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Neutral, Variant::Right, Variant::Left];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Neutral => "neutral",
            Variant::Right => "right",
            Variant::Left => "left",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "neutral" => Ok(Variant::Neutral),
            "right" | "pos" | "positive" => Ok(Variant::Right),
            "left" | "neg" | "negative" => Ok(Variant::Left),
            other => Err(format!(
                "unknown variant `{other}` (expected neutral, right or left)"
            )),
        }
    }
}

/// `a ⊘ b`.
pub fn symmetric_max(a: f64, b: f64) -> f64 {
    if b == -a {
        return 0.0;
    }
    let m = a.abs().max(b.abs());
    if m == -a || m == -b {
        -m
    } else {
        m
    }
}

/// A nonempty bag of reals.
#[derive(Debug, Clone, PartialEq)]
pub struct RealBag(Vec<f64>);

impl RealBag {
    pub fn new(values: Vec<f64>) -> Result<Self, OpsError> {
        if values.is_empty() {
            return Err(OpsError::EmptyInput);
        }
        if values.iter().any(|v| v.is_nan()) {
            return Err(OpsError::NotANumber);
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn bipolar_max(&self) -> f64 {
        select(&self.0, Variant::Neutral)
    }

    pub fn bipolar_max_pos(&self) -> f64 {
        select(&self.0, Variant::Right)
    }

    pub fn bipolar_max_neg(&self) -> f64 {
        select(&self.0, Variant::Left)
    }

    pub fn bipolar_max_variant(&self, variant: Variant) -> f64 {
        select(&self.0, variant)
    }
}

pub fn bipolar_max(xs: &[f64]) -> Result<f64, OpsError> {
    bipolar_max_variant(xs, Variant::Neutral)
}

pub fn bipolar_max_pos(xs: &[f64]) -> Result<f64, OpsError> {
    bipolar_max_variant(xs, Variant::Right)
}

pub fn bipolar_max_neg(xs: &[f64]) -> Result<f64, OpsError> {
    bipolar_max_variant(xs, Variant::Left)
}

pub fn bipolar_max_variant(xs: &[f64], variant: Variant) -> Result<f64, OpsError> {
    if xs.is_empty() {
        return Err(OpsError::EmptyInput);
    }
    if xs.iter().any(|v| v.is_nan()) {
        return Err(OpsError::NotANumber);
    }
    Ok(select(xs, variant))
}

/// Core selection on a nonempty, NaN-free slice. Equal values count once, so
/// an opposite pair at the top magnitude is the only possible tie.
pub(crate) fn select(xs: &[f64], variant: Variant) -> f64 {
    debug_assert!(!xs.is_empty());
    let top = xs.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if top == 0.0 {
        return 0.0;
    }
    let has_pos = xs.contains(&top);
    let has_neg = xs.iter().any(|&v| v == -top);
    match (has_pos, has_neg, variant) {
        (true, true, Variant::Neutral) => 0.0,
        (true, true, Variant::Right) => top,
        (true, true, Variant::Left) => -top,
        (true, false, _) => top,
        (false, _, _) => -top,
    }
}

/// Componentwise bipolar maximum of a family of equal-length vectors.
pub fn vector_bipolar_max(
    family: &[ScoreVector],
    variant: Variant,
) -> Result<ScoreVector, OpsError> {
    let first = family.first().ok_or(OpsError::EmptyInput)?;
    let n = first.len();
    if let Some(bad) = family.iter().find(|v| v.len() != n) {
        return Err(OpsError::LengthMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    let rows: Vec<&[f64]> = family.iter().map(|v| v.scores()).collect();
    let scores = vector_select(&rows, variant);
    let scale = if family.iter().all(|v| v.scale() == first.scale()) {
        first.scale()
    } else {
        Interval::real_line()
    };
    Ok(ScoreVector::new(scores, scale)
        .expect("components are drawn from the family or are 0 between opposites"))
}

pub(crate) fn vector_select(rows: &[&[f64]], variant: Variant) -> Vec<f64> {
    let n = rows[0].len();
    let mut column = Vec::with_capacity(rows.len());
    (0..n)
        .map(|i| {
            column.clear();
            column.extend(rows.iter().map(|r| r[i]));
            select(&column, variant)
        })
        .collect()
}
