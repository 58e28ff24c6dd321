use super::{check_criterion_count, Coalition, Interval, LatticePoint, ModelError};

/// A monotone set function on `2^N` with `μ(∅) = 0` and `μ(N) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Capacity {
    n: usize,
    table: Vec<f64>,
}

impl Capacity {
    /// Validate a dense table indexed by coalition mask.
    pub fn from_table(n: usize, table: Vec<f64>) -> Result<Self, ModelError> {
        check_criterion_count(n)?;
        if table.len() != 1 << n {
            return Err(ModelError::TableLength {
                expected: 1 << n,
                found: table.len(),
            });
        }
        let scale = Interval::unit();
        check_set_table(n, &table, scale)?;
        Ok(Self { n, table })
    }

    /// Tabulate `f` over every coalition and validate the result.
    pub fn from_fn(n: usize, f: impl FnMut(Coalition) -> f64) -> Result<Self, ModelError> {
        check_criterion_count(n)?;
        Self::from_table(n, Coalition::all(n).map(f).collect())
    }

    /// The additive capacity `|A| / n`.
    pub fn uniform(n: usize) -> Result<Self, ModelError> {
        Self::from_fn(n, |a| a.len() as f64 / n as f64)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, a: Coalition) -> f64 {
        self.table[a.mask() as usize]
    }

    /// Values indexed by coalition mask.
    pub fn table(&self) -> &[f64] {
        &self.table
    }
}

/// Build a [`Capacity`] from an explicit list covering all `2^n` coalitions exactly once.
pub fn validate_capacity(
    n: usize,
    entries: impl IntoIterator<Item = (Coalition, f64)>,
) -> Result<Capacity, ModelError> {
    check_criterion_count(n)?;
    let table = collect_set_entries(n, entries)?;
    Capacity::from_table(n, table)
}

/// A monotone set function on `2^N` into a closed scale `[α, β]`, attaining `α` on `∅` and `β` on `N`.
#[derive(Debug, Clone, PartialEq)]
pub struct Measure {
    n: usize,
    scale: Interval,
    table: Vec<f64>,
}

impl Measure {
    pub fn from_table(n: usize, scale: Interval, table: Vec<f64>) -> Result<Self, ModelError> {
        check_criterion_count(n)?;
        if !scale.is_closed() {
            return Err(ModelError::OpenScale(scale));
        }
        if table.len() != 1 << n {
            return Err(ModelError::TableLength {
                expected: 1 << n,
                found: table.len(),
            });
        }
        check_set_table(n, &table, scale)?;
        Ok(Self { n, scale, table })
    }

    /// A capacity seen as a measure on `[0, 1]`.
    pub fn from_capacity(mu: &Capacity) -> Self {
        Self {
            n: mu.n,
            scale: Interval::unit(),
            table: mu.table.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scale(&self) -> Interval {
        self.scale
    }

    pub fn value(&self, a: Coalition) -> f64 {
        self.table[a.mask() as usize]
    }

    pub fn table(&self) -> &[f64] {
        &self.table
    }
}

pub fn validate_measure(
    n: usize,
    scale: Interval,
    entries: impl IntoIterator<Item = (Coalition, f64)>,
) -> Result<Measure, ModelError> {
    check_criterion_count(n)?;
    let table = collect_set_entries(n, entries)?;
    Measure::from_table(n, scale, table)
}

fn collect_set_entries(
    n: usize,
    entries: impl IntoIterator<Item = (Coalition, f64)>,
) -> Result<Vec<f64>, ModelError> {
    let mut table: Vec<Option<f64>> = vec![None; 1 << n];
    for (a, v) in entries {
        if !a.fits(n) {
            return Err(ModelError::EntryOutOfRange {
                at: LatticePoint::Set(a),
                n,
            });
        }
        let slot = &mut table[a.mask() as usize];
        if slot.is_some() {
            return Err(ModelError::DuplicateEntry(LatticePoint::Set(a)));
        }
        *slot = Some(v);
    }
    table
        .into_iter()
        .enumerate()
        .map(|(mask, v)| {
            v.ok_or(ModelError::MissingEntry(LatticePoint::Set(
                Coalition::from_mask(mask as u32),
            )))
        })
        .collect()
}

/// Range, boundary and covering-pair monotonicity checks; all comparisons exact.
fn check_set_table(n: usize, table: &[f64], scale: Interval) -> Result<(), ModelError> {
    for a in Coalition::all(n) {
        let v = table[a.mask() as usize];
        if !v.is_finite() || !scale.contains(v) {
            return Err(ModelError::ValueRange {
                at: LatticePoint::Set(a),
                value: v,
                range: scale,
            });
        }
    }
    for a in Coalition::all(n) {
        let lower_value = table[a.mask() as usize];
        for i in 1..=n {
            if a.contains(i) {
                continue;
            }
            let b = a.with(i);
            let upper_value = table[b.mask() as usize];
            if lower_value > upper_value {
                return Err(ModelError::MonotonicityViolation {
                    lower: LatticePoint::Set(a),
                    upper: LatticePoint::Set(b),
                    lower_value,
                    upper_value,
                });
            }
        }
    }
    let full = Coalition::full(n);
    for (at, expected) in [(Coalition::EMPTY, scale.lower()), (full, scale.upper())] {
        let found = table[at.mask() as usize];
        if found != expected {
            return Err(ModelError::BoundaryViolation {
                at: LatticePoint::Set(at),
                expected,
                found,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: &[usize]) -> Coalition {
        Coalition::from_members(m).unwrap()
    }

    #[test]
    fn single_criterion_is_forced() {
        let mu = validate_capacity(1, [(c(&[]), 0.0), (c(&[1]), 1.0)]).unwrap();
        assert_eq!(mu.table(), &[0.0, 1.0]);
    }

    #[test]
    fn two_criteria_example_is_valid() {
        let mu = validate_capacity(
            2,
            [
                (c(&[]), 0.0),
                (c(&[1]), 0.6),
                (c(&[2]), 0.4),
                (c(&[1, 2]), 1.0),
            ],
        )
        .unwrap();
        assert_eq!(mu.value(c(&[2])), 0.4);
    }

    #[test]
    fn monotonicity_violation_names_the_covering_pair() {
        let err = validate_capacity(
            2,
            [
                (c(&[]), 0.0),
                (c(&[1]), 0.6),
                (c(&[2]), 0.4),
                (c(&[1, 2]), 0.5),
            ],
        )
        .unwrap_err();
        assert_eq!(
            err,
            ModelError::MonotonicityViolation {
                lower: LatticePoint::Set(c(&[1])),
                upper: LatticePoint::Set(c(&[1, 2])),
                lower_value: 0.6,
                upper_value: 0.5,
            }
        );
    }

    #[test]
    fn boundary_violation() {
        let err = Capacity::from_table(2, vec![0.0, 0.2, 0.3, 0.9]).unwrap_err();
        assert!(
            matches!(err, ModelError::BoundaryViolation { expected, found, .. } if expected == 1.0 && found == 0.9)
        );
    }

    #[test]
    fn missing_duplicate_and_nan_entries() {
        let err =
            validate_capacity(2, [(c(&[]), 0.0), (c(&[1]), 0.6), (c(&[1, 2]), 1.0)]).unwrap_err();
        assert_eq!(err, ModelError::MissingEntry(LatticePoint::Set(c(&[2]))));
        let err =
            validate_capacity(1, [(c(&[]), 0.0), (c(&[1]), 1.0), (c(&[1]), 1.0)]).unwrap_err();
        assert_eq!(err, ModelError::DuplicateEntry(LatticePoint::Set(c(&[1]))));
        let err = validate_capacity(
            2,
            [
                (c(&[]), 0.0),
                (c(&[1]), f64::NAN),
                (c(&[2]), 0.4),
                (c(&[1, 2]), 1.0),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, ModelError::ValueRange { .. }));
        let err =
            validate_capacity(1, [(c(&[]), 0.0), (c(&[1]), 1.0), (c(&[2]), 1.0)]).unwrap_err();
        assert!(matches!(err, ModelError::EntryOutOfRange { .. }));
    }

    #[test]
    fn measure_requires_closed_scale_and_endpoints() {
        let open = Interval::new(0.0, 5.0, true, false).unwrap();
        assert!(matches!(
            Measure::from_table(1, open, vec![0.0, 5.0]),
            Err(ModelError::OpenScale(_))
        ));
        let scale = Interval::closed(-2.0, 5.0).unwrap();
        let nu = Measure::from_table(2, scale, vec![-2.0, 0.0, 3.0, 5.0]).unwrap();
        assert_eq!(nu.value(c(&[2])), 3.0);
        assert!(Measure::from_table(2, scale, vec![0.0, 0.0, 3.0, 5.0]).is_err());
    }

    #[test]
    fn measure_validator_from_entries() {
        let scale = Interval::closed(1.0, 3.0).unwrap();
        let nu = validate_measure(1, scale, [(c(&[]), 1.0), (c(&[1]), 3.0)]).unwrap();
        assert_eq!(nu.scale(), scale);
    }
}
