use std::fmt;
use std::sync::Arc;

use super::AxiomError;
use crate::bipolar::{bipolar_choquet_raw, bipolar_shilkret_raw, bipolar_sugeno_raw};
use crate::bipolar_ops::Variant;
use crate::model::{check_criterion_count, BiCapacity, Capacity, Interval, Measure, ScoreVector};
use crate::unipolar::{
    check_dimension, check_scale, choquet_raw, shilkret_negative_raw, shilkret_raw,
    shilkret_symmetric_raw, sugeno_negative_raw, sugeno_raw, sugeno_symmetric_raw, IntegralError,
};

type EvalFn = dyn Fn(&[f64]) -> f64 + Send + Sync;

/// A deterministic aggregation function on `scale^n`.
///
/// Cheap to clone and safe to share across threads.
#[derive(Clone)]
pub struct Aggregator {
    name: String,
    n: usize,
    scale: Interval,
    eval: Arc<EvalFn>,
}

impl fmt::Debug for Aggregator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Aggregator")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("scale", &self.scale)
            .finish_non_exhaustive()
    }
}

impl Aggregator {
    /// Wrap a function. The scale must be closed and bounded.
    pub fn from_fn(
        name: impl Into<String>,
        n: usize,
        scale: Interval,
        f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Result<Self, AxiomError> {
        check_criterion_count(n)?;
        if !scale.is_closed() || !scale.lower().is_finite() || !scale.upper().is_finite() {
            return Err(AxiomError::UnsupportedScale(scale));
        }
        Ok(Self {
            name: name.into(),
            n,
            scale,
            eval: Arc::new(f),
        })
    }

    fn builtin(
        name: String,
        n: usize,
        scale: Interval,
        f: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            name,
            n,
            scale,
            eval: Arc::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scale(&self) -> Interval {
        self.scale
    }

    pub fn eval(&self, x: &ScoreVector) -> Result<f64, IntegralError> {
        check_dimension(x.scores(), self.n)?;
        check_scale(x.scores(), self.scale)?;
        Ok(self.eval_raw(x.scores()))
    }

    /// Evaluate on a vector already known to lie in the domain.
    pub(crate) fn eval_raw(&self, x: &[f64]) -> f64 {
        (self.eval)(x)
    }

    pub fn choquet(mu: Capacity) -> Self {
        Self::builtin("choquet".into(), mu.n(), Interval::unit(), move |x| {
            choquet_raw(x, &mu)
        })
    }

    pub fn shilkret(mu: Capacity) -> Self {
        Self::builtin("shilkret".into(), mu.n(), Interval::unit(), move |x| {
            shilkret_raw(x, &mu)
        })
    }

    pub fn shilkret_negative(mu: Capacity) -> Self {
        Self::builtin(
            "shilkret-negative".into(),
            mu.n(),
            Interval::negative_unit(),
            move |x| shilkret_negative_raw(x, &mu),
        )
    }

    pub fn shilkret_symmetric(mu: Capacity) -> Self {
        Self::builtin(
            "shilkret-symmetric".into(),
            mu.n(),
            Interval::bipolar(),
            move |x| shilkret_symmetric_raw(x, &mu),
        )
    }

    pub fn sugeno(nu: Measure) -> Self {
        Self::builtin("sugeno".into(), nu.n(), nu.scale(), move |x| {
            sugeno_raw(x, nu.table())
        })
    }

    pub fn sugeno_negative(mu: Capacity) -> Self {
        Self::builtin(
            "sugeno-negative".into(),
            mu.n(),
            Interval::negative_unit(),
            move |x| sugeno_negative_raw(x, &mu),
        )
    }

    pub fn sugeno_symmetric(mu: Capacity) -> Self {
        Self::builtin(
            "sugeno-symmetric".into(),
            mu.n(),
            Interval::bipolar(),
            move |x| sugeno_symmetric_raw(x, &mu),
        )
    }

    pub fn bipolar_choquet(mb: BiCapacity) -> Self {
        Self::builtin(
            "bipolar-choquet".into(),
            mb.n(),
            Interval::bipolar(),
            move |x| bipolar_choquet_raw(x, &mb),
        )
    }

    pub fn bipolar_shilkret(mb: BiCapacity, variant: Variant) -> Self {
        Self::builtin(
            format!("bipolar-shilkret({variant})"),
            mb.n(),
            Interval::bipolar(),
            move |x| bipolar_shilkret_raw(x, &mb, variant),
        )
    }

    pub fn bipolar_sugeno(mb: BiCapacity, variant: Variant) -> Self {
        Self::builtin(
            format!("bipolar-sugeno({variant})"),
            mb.n(),
            Interval::bipolar(),
            move |x| bipolar_sugeno_raw(x, &mb, variant),
        )
    }

    /// Arithmetic mean of the scores.
    pub fn mean(n: usize, scale: Interval) -> Result<Self, AxiomError> {
        Self::from_fn("mean", n, scale, |x| x.iter().sum::<f64>() / x.len() as f64)
    }

    /// Largest score.
    pub fn coordinate_max(n: usize, scale: Interval) -> Result<Self, AxiomError> {
        Self::from_fn("max", n, scale, |x| {
            x.iter().copied().fold(f64::NEG_INFINITY, f64::max)
        })
    }

    /// Multilinear interpolation of a function tabulated on a product grid.
    pub fn tabulated(grid: TabulatedGrid) -> Self {
        let scale = Interval::closed(
            grid.levels[0],
            *grid.levels.last().expect("grid has two levels"),
        )
        .expect("grid levels are strictly increasing");
        Self::builtin("tabulated".into(), grid.n, scale, move |x| {
            grid.interpolate(x)
        })
    }
}

/// Values of a function on `levels^n`, row-major with the last criterion varying fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedGrid {
    n: usize,
    levels: Vec<f64>,
    values: Vec<f64>,
}

impl TabulatedGrid {
    pub fn new(n: usize, levels: Vec<f64>, values: Vec<f64>) -> Result<Self, AxiomError> {
        check_criterion_count(n)?;
        if levels.len() < 2
            || levels.iter().any(|l| !l.is_finite())
            || levels.windows(2).any(|w| w[0] >= w[1])
        {
            return Err(AxiomError::InvalidGrid(
                "levels must be at least two finite, strictly increasing values".into(),
            ));
        }
        let expected = levels
            .len()
            .checked_pow(n as u32)
            .ok_or_else(|| AxiomError::InvalidGrid("grid too large".into()))?;
        if values.len() != expected {
            return Err(AxiomError::InvalidGrid(format!(
                "expected {expected} values, found {}",
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(AxiomError::InvalidGrid("values must be finite".into()));
        }
        Ok(Self { n, levels, values })
    }

    /// Tabulate `f` on the grid.
    pub fn from_fn(
        n: usize,
        levels: Vec<f64>,
        f: impl Fn(&[f64]) -> f64,
    ) -> Result<Self, AxiomError> {
        check_criterion_count(n)?;
        let k = levels.len();
        let total = k
            .checked_pow(n as u32)
            .ok_or_else(|| AxiomError::InvalidGrid("grid too large".into()))?;
        let mut point = vec![0.0; n];
        let values = (0..total)
            .map(|mut idx| {
                for slot in point.iter_mut().rev() {
                    *slot = levels[idx % k];
                    idx /= k;
                }
                f(&point)
            })
            .collect();
        Self::new(n, levels, values)
    }

    fn interpolate(&self, x: &[f64]) -> f64 {
        let k = self.levels.len();
        // per criterion: lower grid index and weight of the upper neighbour
        let cells: Vec<(usize, f64)> = x
            .iter()
            .map(|&v| {
                let v = v.clamp(self.levels[0], self.levels[k - 1]);
                let hi = self.levels.partition_point(|&l| l <= v).clamp(1, k - 1);
                let (a, b) = (self.levels[hi - 1], self.levels[hi]);
                (hi - 1, (v - a) / (b - a))
            })
            .collect();
        let mut total = 0.0;
        for corner in 0u32..(1 << self.n) {
            let mut weight = 1.0;
            let mut idx = 0;
            for (i, &(lo, t)) in cells.iter().enumerate() {
                let up = corner >> i & 1 == 1;
                weight *= if up { t } else { 1.0 - t };
                idx = idx * k + lo + usize::from(up);
            }
            if weight != 0.0 {
                total += weight * self.values[idx];
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_check_domain() {
        let g = Aggregator::bipolar_choquet(
            BiCapacity::from_fn(1, |p| {
                if p.pos().is_empty() && p.neg().is_empty() {
                    0.0
                } else if p.neg().is_empty() {
                    1.0
                } else {
                    -1.0
                }
            })
            .unwrap(),
        );
        assert_eq!(
            g.eval(&ScoreVector::bipolar(vec![-0.3]).unwrap()).unwrap(),
            -0.3
        );
        assert!(matches!(
            g.eval(&ScoreVector::bipolar(vec![0.1, 0.2]).unwrap()),
            Err(IntegralError::DimensionMismatch { .. })
        ));
        let mean = Aggregator::mean(2, Interval::unit()).unwrap();
        assert!(matches!(
            mean.eval(&ScoreVector::bipolar(vec![-0.5, 0.5]).unwrap()),
            Err(IntegralError::ScaleViolation { .. })
        ));
        assert_eq!(
            mean.eval(&ScoreVector::unit(vec![0.5, 1.0]).unwrap())
                .unwrap(),
            0.75
        );
        assert!(Aggregator::mean(2, Interval::real_line()).is_err());
    }

    #[test]
    fn tabulated_grid_reproduces_multilinear_functions() {
        let levels = vec![-1.0, 0.0, 1.0];
        let f = |x: &[f64]| 0.5 * x[0] - 0.25 * x[1] + 0.125 * x[0] * x[1];
        let grid = TabulatedGrid::from_fn(2, levels, f).unwrap();
        let g = Aggregator::tabulated(grid);
        for x in [[0.3, -0.7], [1.0, 1.0], [-1.0, 0.2], [0.0, 0.0]] {
            let got = g.eval(&ScoreVector::bipolar(x.to_vec()).unwrap()).unwrap();
            assert!((got - f(&x)).abs() < 1e-12, "{x:?}");
        }
        assert!(TabulatedGrid::new(1, vec![0.0, 0.0], vec![0.0, 0.0]).is_err());
        assert!(TabulatedGrid::new(2, vec![0.0, 1.0], vec![0.0; 3]).is_err());
    }
}
