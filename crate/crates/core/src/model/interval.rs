use std::fmt;

use super::ModelError;

/// A real interval with independently open or closed endpoints.
///
/// Infinite endpoints are always open.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lower: f64,
    upper: f64,
    lower_open: bool,
    upper_open: bool,
}

impl Interval {
    pub fn new(
        lower: f64,
        upper: f64,
        lower_open: bool,
        upper_open: bool,
    ) -> Result<Self, ModelError> {
        if lower.is_nan() || upper.is_nan() || lower >= upper {
            return Err(ModelError::InvalidInterval(format!("[{lower}, {upper}]")));
        }
        if (lower.is_infinite() && !lower_open) || (upper.is_infinite() && !upper_open) {
            return Err(ModelError::InvalidInterval(
                "infinite endpoints must be open".to_string(),
            ));
        }
        Ok(Self {
            lower,
            upper,
            lower_open,
            upper_open,
        })
    }

    pub fn closed(lower: f64, upper: f64) -> Result<Self, ModelError> {
        Self::new(lower, upper, false, false)
    }

    /// `[0, 1]`, the scale of capacities.
    pub const fn unit() -> Self {
        Self {
            lower: 0.0,
            upper: 1.0,
            lower_open: false,
            upper_open: false,
        }
    }

    /// `[-1, 1]`, the bipolar scale.
    pub const fn bipolar() -> Self {
        Self {
            lower: -1.0,
            upper: 1.0,
            lower_open: false,
            upper_open: false,
        }
    }

    /// `[-1, 0]`, the scale of negative-only evaluations.
    pub const fn negative_unit() -> Self {
        Self {
            lower: -1.0,
            upper: 0.0,
            lower_open: false,
            upper_open: false,
        }
    }

    /// The whole real line.
    pub const fn real_line() -> Self {
        Self {
            lower: f64::NEG_INFINITY,
            upper: f64::INFINITY,
            lower_open: true,
            upper_open: true,
        }
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn lower_open(&self) -> bool {
        self.lower_open
    }

    pub fn upper_open(&self) -> bool {
        self.upper_open
    }

    pub fn is_closed(&self) -> bool {
        !self.lower_open && !self.upper_open
    }

    pub fn contains(&self, x: f64) -> bool {
        if x.is_nan() {
            return false;
        }
        let above = if self.lower_open {
            x > self.lower
        } else {
            x >= self.lower
        };
        let below = if self.upper_open {
            x < self.upper
        } else {
            x <= self.upper
        };
        above && below
    }

    /// Mirror image `{-x : x in self}`.
    pub fn negated(&self) -> Self {
        Self {
            lower: -self.upper,
            upper: -self.lower,
            lower_open: self.upper_open,
            upper_open: self.lower_open,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lower_open { ']' } else { '[' };
        let close = if self.upper_open { '[' } else { ']' };
        write!(f, "{open}{}, {}{close}", self.lower, self.upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_closed_infinite() {
        assert!(Interval::closed(1.0, 1.0).is_err());
        assert!(Interval::closed(2.0, 1.0).is_err());
        assert!(Interval::new(f64::NEG_INFINITY, 0.0, false, false).is_err());
        assert!(Interval::new(f64::NEG_INFINITY, 0.0, true, false).is_ok());
    }

    #[test]
    fn membership_respects_openness() {
        let half_open = Interval::new(0.0, 1.0, true, false).unwrap();
        assert!(!half_open.contains(0.0));
        assert!(half_open.contains(1.0));
        assert!(Interval::real_line().contains(-1e300));
        assert!(!Interval::bipolar().contains(f64::NAN));
        assert_eq!(Interval::unit().negated(), Interval::negative_unit());
    }
}
