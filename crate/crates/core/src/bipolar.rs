//! Bipolar Choquet, Shilkret and Sugeno integrals with respect to a bi-capacity,
//! on the scale `[-1, 1]`.
//!
//! Every integral reads the bi-capacity at the level pairs
//! `({j : x_j ≥ t}, {j : x_j ≤ -t})` for `t` ranging over the absolute scores.
//! The Choquet integral sums them weighted by level increments; the Shilkret
//! and Sugeno integrals combine per-level terms with a bipolar maximum, whose
//! variant (neutral, right, left) selects the integral variant.

use crate::bipolar_ops::{select, Variant};
use crate::model::Interval;
use crate::model::{level_pair_of, BiCapacity, ScoreVector};
use crate::unipolar::{check_dimension, IntegralError};
use crate::EPS;

/// Scores further than this outside `[-1, 1]` are rejected; closer ones are clamped.
pub const SCALE_SLACK: f64 = 1e-12;

/// Indices arranging `|x|` nondecreasingly; ties broken by criterion index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbsSortPermutation(Vec<usize>);

impl AbsSortPermutation {
    pub fn of(x: &[f64]) -> Self {
        let mut order: Vec<usize> = (0..x.len()).collect();
        order.sort_by(|&a, &b| x[a].abs().total_cmp(&x[b].abs()).then(a.cmp(&b)));
        AbsSortPermutation(order)
    }

    pub fn order(&self) -> &[usize] {
        &self.0
    }
}

fn prepare(x: &ScoreVector, mb: &BiCapacity) -> Result<Vec<f64>, IntegralError> {
    prepare_slice(x.scores(), mb.n())
}

pub(crate) fn prepare_slice(x: &[f64], n: usize) -> Result<Vec<f64>, IntegralError> {
    check_dimension(x, n)?;
    x.iter()
        .enumerate()
        .map(|(i, &v)| {
            if v.is_nan() || v.abs() > 1.0 + SCALE_SLACK {
                Err(IntegralError::ScaleViolation {
                    criterion: i + 1,
                    value: v,
                    scale: Interval::bipolar(),
                })
            } else {
                Ok(v.clamp(-1.0, 1.0))
            }
        })
        .collect()
}

/// Bipolar Choquet integral in sum form over an absolute-value sorting permutation.
pub fn bipolar_choquet(x: &ScoreVector, mb: &BiCapacity) -> Result<f64, IntegralError> {
    let x = prepare(x, mb)?;
    Ok(bipolar_choquet_raw(&x, mb))
}

pub(crate) fn bipolar_choquet_raw(x: &[f64], mb: &BiCapacity) -> f64 {
    let order = AbsSortPermutation::of(x);
    let mut previous = 0.0;
    let mut sum = 0.0;
    for &i in order.order() {
        let level = x[i].abs();
        let width = level - previous;
        if width > 0.0 {
            sum += width * mb.value(level_pair_of(x, level));
        }
        previous = level;
    }
    sum
}

/// Bipolar Choquet integral as the exact integral over `t ≥ 0` of
/// `μ_b({x_i > t}, {x_i < -t})`.
///
/// The integrand is a step function; on the gap `(a, b)` between consecutive
/// distinct absolute levels it is evaluated through strict comparisons with `a`.
pub fn bipolar_choquet_oracle(x: &ScoreVector, mb: &BiCapacity) -> Result<f64, IntegralError> {
    let x = prepare(x, mb)?;
    let mut levels: Vec<f64> = x.iter().map(|v| v.abs()).collect();
    levels.push(0.0);
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    let mut total = 0.0;
    for gap in levels.windows(2) {
        let (a, b) = (gap[0], gap[1]);
        let (mut pos, mut neg) = (0u32, 0u32);
        for (bit, &v) in x.iter().enumerate() {
            if v > a {
                pos |= 1 << bit;
            } else if v < -a {
                neg |= 1 << bit;
            }
        }
        let pair = crate::model::SignedCoalition::new(
            crate::model::Coalition::from_mask(pos),
            crate::model::Coalition::from_mask(neg),
        )
        .expect("a criterion cannot be both above a and below -a for a >= 0");
        total += (b - a) * mb.value(pair);
    }
    Ok(total)
}

/// Distinct absolute levels of `x`, ascending.
fn abs_levels(x: &[f64]) -> Vec<f64> {
    let mut levels: Vec<f64> = x.iter().map(|v| v.abs()).collect();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    levels
}

pub(crate) fn shilkret_terms(x: &[f64], mb: &BiCapacity) -> Vec<f64> {
    abs_levels(x)
        .into_iter()
        .map(|level| level * mb.value(level_pair_of(x, level)))
        .collect()
}

pub(crate) fn sugeno_terms(x: &[f64], mb: &BiCapacity) -> Vec<f64> {
    abs_levels(x)
        .into_iter()
        .map(|level| {
            let v = mb.value(level_pair_of(x, level));
            if v > 0.0 {
                v.min(level)
            } else if v < 0.0 {
                v.max(-level)
            } else {
                0.0
            }
        })
        .collect()
}

/// Bipolar Shilkret integral: bipolar maximum over levels of `|x_i| · μ_b(level pair)`.
pub fn bipolar_shilkret(
    x: &ScoreVector,
    mb: &BiCapacity,
    variant: Variant,
) -> Result<f64, IntegralError> {
    let x = prepare(x, mb)?;
    Ok(bipolar_shilkret_raw(&x, mb, variant))
}

pub(crate) fn bipolar_shilkret_raw(x: &[f64], mb: &BiCapacity, variant: Variant) -> f64 {
    select(&shilkret_terms(x, mb), variant)
}

/// Bipolar Sugeno integral: bipolar maximum over levels of
/// `sign(μ_b(level pair)) · min(|μ_b(level pair)|, |x_i|)`.
pub fn bipolar_sugeno(
    x: &ScoreVector,
    mb: &BiCapacity,
    variant: Variant,
) -> Result<f64, IntegralError> {
    let x = prepare(x, mb)?;
    Ok(bipolar_sugeno_raw(&x, mb, variant))
}

pub(crate) fn bipolar_sugeno_raw(x: &[f64], mb: &BiCapacity, variant: Variant) -> f64 {
    select(&sugeno_terms(x, mb), variant)
}

/// Which max-based bipolar integral [`link_check`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxFamily {
    Shilkret,
    Sugeno,
}

/// Evaluate the neutral, right and left variants and verify how they relate:
/// the neutral value is the bipolar maximum of the other two, all three agree
/// when it is nonzero, and right = −left when it is zero.
pub fn link_check(
    x: &ScoreVector,
    mb: &BiCapacity,
    family: MaxFamily,
) -> Result<(f64, f64, f64), IntegralError> {
    let x = prepare(x, mb)?;
    let terms = match family {
        MaxFamily::Shilkret => shilkret_terms(&x, mb),
        MaxFamily::Sugeno => sugeno_terms(&x, mb),
    };
    let neutral = select(&terms, Variant::Neutral);
    let right = select(&terms, Variant::Right);
    let left = select(&terms, Variant::Left);
    let linked = (neutral - select(&[right, left], Variant::Neutral)).abs() <= EPS;
    let split = if neutral.abs() > EPS {
        (right - neutral).abs() <= EPS && (left - neutral).abs() <= EPS
    } else {
        (right + left).abs() <= EPS
    };
    if linked && split {
        Ok((neutral, right, left))
    } else {
        Err(IntegralError::LinkViolation {
            neutral,
            right,
            left,
        })
    }
}
