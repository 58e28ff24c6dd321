use super::{Interval, ModelError, MAX_CRITERIA};

/// Evaluations of one alternative on `n` criteria, all lying in `scale`.
///
/// Criterion `i` (1-based in the domain language) is stored at index `i - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    scores: Vec<f64>,
    scale: Interval,
}

impl ScoreVector {
    pub fn new(scores: Vec<f64>, scale: Interval) -> Result<Self, ModelError> {
        if scores.is_empty() || scores.len() > MAX_CRITERIA {
            return Err(ModelError::CriterionCount(scores.len()));
        }
        if let Some((i, &v)) = scores
            .iter()
            .enumerate()
            .find(|(_, v)| !scale.contains(**v))
        {
            return Err(ModelError::OutOfScale {
                criterion: i + 1,
                value: v,
                scale,
            });
        }
        Ok(Self { scores, scale })
    }

    /// Scores on the bipolar scale `[-1, 1]`.
    pub fn bipolar(scores: Vec<f64>) -> Result<Self, ModelError> {
        Self::new(scores, Interval::bipolar())
    }

    /// Scores on the unit scale `[0, 1]`.
    pub fn unit(scores: Vec<f64>) -> Result<Self, ModelError> {
        Self::new(scores, Interval::unit())
    }

    /// Scores on the real line.
    pub fn real(scores: Vec<f64>) -> Result<Self, ModelError> {
        Self::new(scores, Interval::real_line())
    }

    /// The constant vector `(c, ..., c)`.
    pub fn constant(n: usize, c: f64, scale: Interval) -> Result<Self, ModelError> {
        Self::new(vec![c; n], scale)
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn scale(&self) -> Interval {
        self.scale
    }

    pub fn into_scores(self) -> Vec<f64> {
        self.scores
    }

    /// Same scores re-declared on another scale.
    pub fn with_scale(&self, scale: Interval) -> Result<Self, ModelError> {
        Self::new(self.scores.clone(), scale)
    }

    /// `-x`, on the mirrored scale.
    pub fn negated(&self) -> Self {
        Self {
            scores: self.scores.iter().map(|v| -v).collect(),
            scale: self.scale.negated(),
        }
    }
}

impl AsRef<[f64]> for ScoreVector {
    fn as_ref(&self) -> &[f64] {
        &self.scores
    }
}

/// `x ∨ 0` componentwise.
pub fn positive_part(x: &[f64]) -> Vec<f64> {
    x.iter().map(|&v| if v > 0.0 { v } else { 0.0 }).collect()
}

/// `x ∧ 0` componentwise.
pub fn negative_part(x: &[f64]) -> Vec<f64> {
    x.iter().map(|&v| if v < 0.0 { v } else { 0.0 }).collect()
}
