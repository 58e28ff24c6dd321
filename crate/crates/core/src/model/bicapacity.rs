use super::{check_criterion_count, Interval, LatticePoint, ModelError, SignedCoalition};

/// A monotone function on the lattice of disjoint pairs into `[-1, 1]` with
/// `μ(∅,∅) = 0`, `μ(N,∅) = 1` and `μ(∅,N) = -1`.
///
/// Stored densely in [`SignedCoalition::ternary_index`] order.
#[derive(Debug, Clone, PartialEq)]
pub struct BiCapacity {
    n: usize,
    table: Vec<f64>,
}

impl BiCapacity {
    /// Validate a dense table in ternary-index order.
    pub fn from_table(n: usize, table: Vec<f64>) -> Result<Self, ModelError> {
        check_criterion_count(n)?;
        let expected = 3usize.pow(n as u32);
        if table.len() != expected {
            return Err(ModelError::TableLength {
                expected,
                found: table.len(),
            });
        }
        check_pair_table(n, &table)?;
        Ok(Self { n, table })
    }

    pub fn from_fn(n: usize, f: impl FnMut(SignedCoalition) -> f64) -> Result<Self, ModelError> {
        check_criterion_count(n)?;
        Self::from_table(n, SignedCoalition::all(n).map(f).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, p: SignedCoalition) -> f64 {
        self.table[p.ternary_index()]
    }

    /// Values in ternary-index order.
    pub fn table(&self) -> &[f64] {
        &self.table
    }
}

/// Build a [`BiCapacity`] from an explicit list covering all `3^n` disjoint pairs exactly once.
pub fn validate_bicapacity(
    n: usize,
    entries: impl IntoIterator<Item = (SignedCoalition, f64)>,
) -> Result<BiCapacity, ModelError> {
    check_criterion_count(n)?;
    let mut table: Vec<Option<f64>> = vec![None; 3usize.pow(n as u32)];
    for (p, v) in entries {
        if !p.fits(n) {
            return Err(ModelError::EntryOutOfRange {
                at: LatticePoint::Pair(p),
                n,
            });
        }
        let slot = &mut table[p.ternary_index()];
        if slot.is_some() {
            return Err(ModelError::DuplicateEntry(LatticePoint::Pair(p)));
        }
        *slot = Some(v);
    }
    let table = table
        .into_iter()
        .enumerate()
        .map(|(idx, v)| {
            v.ok_or(ModelError::MissingEntry(LatticePoint::Pair(
                SignedCoalition::from_ternary(n, idx),
            )))
        })
        .collect::<Result<Vec<_>, _>>()?;
    BiCapacity::from_table(n, table)
}

/// Upward covering moves of `p`: add a free criterion to the positive side,
/// or drop a criterion from the negative side.
pub fn upper_covers(p: SignedCoalition, n: usize) -> impl Iterator<Item = SignedCoalition> {
    (1..=n).filter_map(move |i| {
        if p.neg().contains(i) {
            Some(SignedCoalition::new_unchecked(p.pos(), p.neg().without(i)))
        } else if !p.pos().contains(i) {
            Some(SignedCoalition::new_unchecked(p.pos().with(i), p.neg()))
        } else {
            None
        }
    })
}

fn check_pair_table(n: usize, table: &[f64]) -> Result<(), ModelError> {
    let range = Interval::bipolar();
    for (idx, &v) in table.iter().enumerate() {
        if !v.is_finite() || !range.contains(v) {
            return Err(ModelError::ValueRange {
                at: LatticePoint::Pair(SignedCoalition::from_ternary(n, idx)),
                value: v,
                range,
            });
        }
    }
    for (idx, &lower_value) in table.iter().enumerate() {
        let p = SignedCoalition::from_ternary(n, idx);
        for q in upper_covers(p, n) {
            let upper_value = table[q.ternary_index()];
            if lower_value > upper_value {
                return Err(ModelError::MonotonicityViolation {
                    lower: LatticePoint::Pair(p),
                    upper: LatticePoint::Pair(q),
                    lower_value,
                    upper_value,
                });
            }
        }
    }
    let boundary = [
        (SignedCoalition::EMPTY, 0.0),
        (SignedCoalition::top(n), 1.0),
        (SignedCoalition::bottom(n), -1.0),
    ];
    for (at, expected) in boundary {
        let found = table[at.ternary_index()];
        if found != expected {
            return Err(ModelError::BoundaryViolation {
                at: LatticePoint::Pair(at),
                expected,
                found,
            });
        }
    }
    Ok(())
}
