//! Choquet, Shilkret and Sugeno integrals with respect to a capacity or measure,
//! plus the negative and symmetric (Šipoš-style) variants.

use thiserror::Error;

use crate::model::{
    negative_part, positive_part, Capacity, Coalition, Interval, Measure, ScoreVector,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IntegralError {
    #[error("vector has {found} criteria, carrier has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("criterion {criterion}: score {value} outside scale {scale}")]
    ScaleViolation {
        criterion: usize,
        value: f64,
        scale: Interval,
    },
    #[error("criterion {criterion}: score {value} is positive, negative integral needs x <= 0")]
    PositiveComponent { criterion: usize, value: f64 },
    #[error("variants inconsistent: neutral {neutral}, right {right}, left {left}")]
    LinkViolation { neutral: f64, right: f64, left: f64 },
}

/// Indices arranging a vector nondecreasingly; ties broken by criterion index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortPermutation(Vec<usize>);

impl SortPermutation {
    pub fn of(x: &[f64]) -> Self {
        let mut order: Vec<usize> = (0..x.len()).collect();
        order.sort_by(|&a, &b| x[a].total_cmp(&x[b]).then(a.cmp(&b)));
        SortPermutation(order)
    }

    /// 0-based criterion indices, smallest score first.
    pub fn order(&self) -> &[usize] {
        &self.0
    }
}

pub(crate) fn check_dimension(x: &[f64], n: usize) -> Result<(), IntegralError> {
    if x.len() != n {
        return Err(IntegralError::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    Ok(())
}

pub(crate) fn check_scale(x: &[f64], scale: Interval) -> Result<(), IntegralError> {
    match x.iter().enumerate().find(|(_, v)| !scale.contains(**v)) {
        Some((i, &value)) => Err(IntegralError::ScaleViolation {
            criterion: i + 1,
            value,
            scale,
        }),
        None => Ok(()),
    }
}

fn check_nonpositive(x: &[f64]) -> Result<(), IntegralError> {
    match x.iter().enumerate().find(|(_, v)| **v > 0.0) {
        Some((i, &value)) => Err(IntegralError::PositiveComponent {
            criterion: i + 1,
            value,
        }),
        None => Ok(()),
    }
}

fn coalition_where(x: &[f64], pred: impl Fn(f64) -> bool) -> Coalition {
    let mask = x
        .iter()
        .enumerate()
        .filter(|(_, v)| pred(**v))
        .fold(0u32, |m, (i, _)| m | (1 << i));
    Coalition::from_mask(mask)
}

/// Choquet integral, sum form over a sorting permutation.
pub fn choquet(x: &ScoreVector, mu: &Capacity) -> Result<f64, IntegralError> {
    check_dimension(x.scores(), mu.n())?;
    Ok(choquet_raw(x.scores(), mu))
}

pub(crate) fn choquet_raw(x: &[f64], mu: &Capacity) -> f64 {
    let order = SortPermutation::of(x);
    let order = order.order();
    // suffix[i] = criteria at sorted positions i..n
    let mut suffix = vec![0u32; order.len() + 1];
    for i in (0..order.len()).rev() {
        suffix[i] = suffix[i + 1] | (1 << order[i]);
    }
    let mut sum = 0.0;
    for i in 1..order.len() {
        let step = x[order[i]] - x[order[i - 1]];
        sum += step * mu.value(Coalition::from_mask(suffix[i]));
    }
    sum + x[order[0]]
}

/// Choquet integral as the exact integral of the survival function
/// `t ↦ μ({x ≥ t})` over `[min x, max x]`, plus `min x`.
///
/// The integrand is constant on each gap between consecutive distinct values,
/// where it equals `μ({x > left end})`.
pub fn choquet_level_integral(x: &ScoreVector, mu: &Capacity) -> Result<f64, IntegralError> {
    let x = x.scores();
    check_dimension(x, mu.n())?;
    let mut levels = x.to_vec();
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    let mut total = levels[0];
    for w in levels.windows(2) {
        let above = coalition_where(x, |v| v > w[0]);
        total += (w[1] - w[0]) * mu.value(above);
    }
    Ok(total)
}

/// Shilkret integral `max_i x_i · μ({j : x_j ≥ x_i})`; accepts mixed signs.
pub fn shilkret(x: &ScoreVector, mu: &Capacity) -> Result<f64, IntegralError> {
    check_dimension(x.scores(), mu.n())?;
    Ok(shilkret_raw(x.scores(), mu))
}

pub(crate) fn shilkret_raw(x: &[f64], mu: &Capacity) -> f64 {
    x.iter()
        .map(|&xi| xi * mu.value(coalition_where(x, |v| v >= xi)))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Negative Shilkret integral `min_i x_i · μ({j : x_j ≤ x_i})` for `x ≤ 0`.
pub fn shilkret_negative(x: &ScoreVector, mu: &Capacity) -> Result<f64, IntegralError> {
    check_dimension(x.scores(), mu.n())?;
    check_nonpositive(x.scores())?;
    Ok(shilkret_negative_raw(x.scores(), mu))
}

pub(crate) fn shilkret_negative_raw(x: &[f64], mu: &Capacity) -> f64 {
    x.iter()
        .map(|&xi| xi * mu.value(coalition_where(x, |v| v <= xi)))
        .fold(f64::INFINITY, f64::min)
}

/// `Sh(x ∨ 0) + Sh⁻(x ∧ 0)`.
pub fn shilkret_symmetric(x: &ScoreVector, mu: &Capacity) -> Result<f64, IntegralError> {
    check_dimension(x.scores(), mu.n())?;
    Ok(shilkret_symmetric_raw(x.scores(), mu))
}

pub(crate) fn shilkret_symmetric_raw(x: &[f64], mu: &Capacity) -> f64 {
    shilkret_raw(&positive_part(x), mu) + shilkret_negative_raw(&negative_part(x), mu)
}

/// Sugeno integral `max_i min(x_i, ν({j : x_j ≥ x_i}))`; `x` must lie on the measure's scale.
pub fn sugeno(x: &ScoreVector, nu: &Measure) -> Result<f64, IntegralError> {
    check_dimension(x.scores(), nu.n())?;
    check_scale(x.scores(), nu.scale())?;
    Ok(sugeno_raw(x.scores(), nu.table()))
}

/// `table` is indexed by coalition mask.
pub(crate) fn sugeno_raw(x: &[f64], table: &[f64]) -> f64 {
    x.iter()
        .map(|&xi| xi.min(table[coalition_where(x, |v| v >= xi).mask() as usize]))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Sugeno integral by enumeration of all coalitions:
/// `max_A min(ν(A), min_{i∈A} x_i)`, with the empty minimum taken as the scale top.
pub fn sugeno_subset_oracle(x: &ScoreVector, nu: &Measure) -> Result<f64, IntegralError> {
    let xs = x.scores();
    check_dimension(xs, nu.n())?;
    check_scale(xs, nu.scale())?;
    let top = nu.scale().upper();
    let best = Coalition::all(nu.n())
        .map(|a| {
            let floor = a.members().map(|i| xs[i - 1]).fold(top, f64::min);
            nu.value(a).min(floor)
        })
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(best)
}

/// `Su(x ∨ 0, μ) − Su((−x) ∨ 0, μ)` for `x ∈ [-1, 1]^n`.
pub fn sugeno_symmetric(x: &ScoreVector, mu: &Capacity) -> Result<f64, IntegralError> {
    check_dimension(x.scores(), mu.n())?;
    check_scale(x.scores(), Interval::bipolar())?;
    Ok(sugeno_symmetric_raw(x.scores(), mu))
}

pub(crate) fn sugeno_symmetric_raw(x: &[f64], mu: &Capacity) -> f64 {
    let negated: Vec<f64> = x.iter().map(|v| -v).collect();
    sugeno_raw(&positive_part(x), mu.table()) - sugeno_raw(&positive_part(&negated), mu.table())
}

/// Negative Sugeno integral `min_i max(x_i, −μ({j : x_j ≤ x_i}))` for `x ∈ [-1, 0]^n`.
pub fn sugeno_negative(x: &ScoreVector, mu: &Capacity) -> Result<f64, IntegralError> {
    check_dimension(x.scores(), mu.n())?;
    check_scale(x.scores(), Interval::negative_unit())?;
    Ok(sugeno_negative_raw(x.scores(), mu))
}

pub(crate) fn sugeno_negative_raw(x: &[f64], mu: &Capacity) -> f64 {
    x.iter()
        .map(|&xi| xi.max(-mu.value(coalition_where(x, |v| v <= xi))))
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::indicator;
    use crate::model::SignedCoalition;

    /// μ({1})=.2, μ({2})=.3, μ({3})=.4, μ({1,2})=.5, μ({1,3})=.7, μ({2,3})=.8
    fn three() -> Capacity {
        Capacity::from_table(3, vec![0.0, 0.2, 0.3, 0.5, 0.4, 0.7, 0.8, 1.0]).unwrap()
    }

    fn unit(v: &[f64]) -> ScoreVector {
        ScoreVector::unit(v.to_vec()).unwrap()
    }

    fn real(v: &[f64]) -> ScoreVector {
        ScoreVector::real(v.to_vec()).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn choquet_worked_example() {
        let x = unit(&[0.6, 0.2, 0.4]);
        let mu = three();
        assert!(close(choquet(&x, &mu).unwrap(), 0.38));
        assert!(close(choquet_level_integral(&x, &mu).unwrap(), 0.38));
    }

    #[test]
    fn choquet_constant_and_indicator() {
        let mu = three();
        assert_eq!(choquet(&real(&[-2.5, -2.5, -2.5]), &mu).unwrap(), -2.5);
        for a in Coalition::all(3) {
            let x = indicator(SignedCoalition::new(a, Coalition::EMPTY).unwrap(), 3);
            assert_eq!(choquet(&x, &mu).unwrap(), mu.value(a));
        }
    }

    #[test]
    fn shilkret_examples() {
        let mu = three();
        assert!(close(shilkret(&unit(&[0.6, 0.2, 0.4]), &mu).unwrap(), 0.28));
        let four = Capacity::from_fn(4, |a| a.len() as f64 / 4.0).unwrap();
        let x = real(&[-100.0, -100.0, -100.0, 1.0]);
        assert_eq!(shilkret(&x, &four).unwrap(), 0.25);
        for a in Coalition::all(3) {
            let x = indicator(SignedCoalition::new(a, Coalition::EMPTY).unwrap(), 3);
            assert_eq!(shilkret(&x, &mu).unwrap(), mu.value(a));
        }
    }

    #[test]
    fn shilkret_negative_examples() {
        let mu = three();
        assert_eq!(
            shilkret_negative(&real(&[0.0, 0.0, 0.0]), &mu).unwrap(),
            0.0
        );
        assert!(close(
            shilkret_negative(&real(&[-0.6, -0.2, -0.4]), &mu).unwrap(),
            -0.28
        ));
        for a in Coalition::all(3) {
            let x = indicator(SignedCoalition::new(Coalition::EMPTY, a).unwrap(), 3);
            assert_eq!(shilkret_negative(&x, &mu).unwrap(), -mu.value(a));
        }
        let err = shilkret_negative(&real(&[-0.6, 0.1, 0.0]), &mu).unwrap_err();
        assert_eq!(
            err,
            IntegralError::PositiveComponent {
                criterion: 2,
                value: 0.1
            }
        );
    }

    #[test]
    fn shilkret_symmetric_examples() {
        let mu = Capacity::from_table(2, vec![0.0, 0.5, 0.5, 1.0]).unwrap();
        assert!(close(
            shilkret_symmetric(&real(&[0.6, -0.2]), &mu).unwrap(),
            0.2
        ));
        assert_eq!(shilkret_symmetric(&real(&[-0.3, -0.3]), &mu).unwrap(), -0.3);
        let x = real(&[0.6, 0.2, 0.4]);
        assert_eq!(
            shilkret_symmetric(&x, &three()).unwrap(),
            shilkret(&x, &three()).unwrap()
        );
    }

    #[test]
    fn sugeno_examples() {
        let nu = Measure::from_capacity(&three());
        let x = unit(&[0.6, 0.2, 0.4]);
        assert_eq!(sugeno(&x, &nu).unwrap(), 0.4);
        assert_eq!(sugeno_subset_oracle(&x, &nu).unwrap(), 0.4);
        assert_eq!(sugeno(&unit(&[0.3, 0.3, 0.3]), &nu).unwrap(), 0.3);
        for a in Coalition::all(3) {
            let x = indicator(SignedCoalition::new(a, Coalition::EMPTY).unwrap(), 3);
            let x = x.with_scale(Interval::unit()).unwrap();
            assert_eq!(sugeno(&x, &nu).unwrap(), nu.value(a));
        }
    }

    #[test]
    fn sugeno_single_criterion_on_general_scale() {
        let scale = Interval::closed(-3.0, 5.0).unwrap();
        let nu = Measure::from_table(1, scale, vec![-3.0, 5.0]).unwrap();
        for t in [-3.0, -1.0, 0.0, 4.5, 5.0] {
            let x = ScoreVector::new(vec![t], scale).unwrap();
            assert_eq!(sugeno(&x, &nu).unwrap(), t);
            assert_eq!(sugeno_subset_oracle(&x, &nu).unwrap(), t);
        }
    }

    #[test]
    fn sugeno_rejects_off_scale_and_wrong_dimension() {
        let nu = Measure::from_capacity(&three());
        let err = sugeno(&real(&[0.5, 1.5, 0.0]), &nu).unwrap_err();
        assert!(matches!(
            err,
            IntegralError::ScaleViolation { criterion: 2, .. }
        ));
        let err = sugeno(&unit(&[0.5, 0.5]), &nu).unwrap_err();
        assert_eq!(
            err,
            IntegralError::DimensionMismatch {
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn sugeno_symmetric_examples() {
        let mu = three();
        let x = ScoreVector::bipolar(vec![0.6, 0.2, 0.4]).unwrap();
        assert_eq!(sugeno_symmetric(&x, &mu).unwrap(), 0.4);
        let x = ScoreVector::bipolar(vec![-0.6, -0.2, -0.4]).unwrap();
        assert_eq!(sugeno_symmetric(&x, &mu).unwrap(), -0.4);
        assert_eq!(sugeno_negative(&x, &mu).unwrap(), -0.4);
        let zero = ScoreVector::bipolar(vec![0.0; 3]).unwrap();
        assert_eq!(sugeno_symmetric(&zero, &mu).unwrap(), 0.0);
    }

    #[test]
    fn sort_permutation_breaks_ties_by_index() {
        let p = SortPermutation::of(&[0.5, 0.1, 0.5, 0.1]);
        assert_eq!(p.order(), &[1, 3, 0, 2]);
    }
}
