use std::fmt;

use super::{ModelError, ScoreVector, MAX_CRITERIA};

/// A subset of the criteria `{1..n}`, stored as a bitmask (criterion `i` is bit `i - 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_mask(mask: u32) -> Self {
        Coalition(mask)
    }

    /// Build from 1-based criterion indices.
    pub fn from_members(members: &[usize]) -> Result<Self, ModelError> {
        let mut mask = 0u32;
        for &m in members {
            if m == 0 || m > MAX_CRITERIA {
                return Err(ModelError::CriterionIndex(m));
            }
            mask |= 1 << (m - 1);
        }
        Ok(Coalition(mask))
    }

    /// `N = {1..n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_CRITERIA);
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, criterion: usize) -> bool {
        (1..=32).contains(&criterion) && self.0 & (1 << (criterion - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Coalition) -> bool {
        self.0 & other.0 == 0
    }

    /// Whether every member lies in `{1..n}`.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(Coalition::full(n))
    }

    pub fn union(self, other: Coalition) -> Self {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Coalition) -> Self {
        Coalition(self.0 & other.0)
    }

    pub fn with(self, criterion: usize) -> Self {
        Coalition(self.0 | (1 << (criterion - 1)))
    }

    pub fn without(self, criterion: usize) -> Self {
        Coalition(self.0 & !(1 << (criterion - 1)))
    }

    /// 1-based members in increasing order.
    pub fn members(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |b| mask & (1 << b) != 0).map(|b| b + 1)
    }

    /// All `2^n` subsets of `{1..n}`, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
        (0..(1u32 << n)).map(Coalition)
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, m) in self.members().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// A disjoint pair `(A, B)`: criteria evaluated positively and negatively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCoalition {
    pos: Coalition,
    neg: Coalition,
}

impl SignedCoalition {
    pub const EMPTY: SignedCoalition = SignedCoalition {
        pos: Coalition::EMPTY,
        neg: Coalition::EMPTY,
    };

    pub fn new(pos: Coalition, neg: Coalition) -> Result<Self, ModelError> {
        if !pos.is_disjoint(neg) {
            return Err(ModelError::DisjointnessViolation { pos, neg });
        }
        Ok(Self { pos, neg })
    }

    pub(crate) fn new_unchecked(pos: Coalition, neg: Coalition) -> Self {
        debug_assert!(pos.is_disjoint(neg));
        Self { pos, neg }
    }

    /// `(N, ∅)`, the top of the lattice.
    pub fn top(n: usize) -> Self {
        Self::new_unchecked(Coalition::full(n), Coalition::EMPTY)
    }

    /// `(∅, N)`, the bottom of the lattice.
    pub fn bottom(n: usize) -> Self {
        Self::new_unchecked(Coalition::EMPTY, Coalition::full(n))
    }

    pub fn pos(self) -> Coalition {
        self.pos
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Coalition {
        self.neg
    }

    pub fn fits(self, n: usize) -> bool {
        self.pos.fits(n) && self.neg.fits(n)
    }

    /// Lattice supremum `(A ∪ C, B ∩ D)`.
    pub fn sup(self, other: Self) -> Self {
        Self::new_unchecked(self.pos.union(other.pos), self.neg.intersection(other.neg))
    }

    /// Lattice infimum `(A ∩ C, B ∪ D)`.
    pub fn inf(self, other: Self) -> Self {
        Self::new_unchecked(self.pos.intersection(other.pos), self.neg.union(other.neg))
    }

    /// All `3^n` disjoint pairs over `{1..n}`, enumerated in ternary-index order.
    pub fn all(n: usize) -> impl Iterator<Item = SignedCoalition> {
        (0..3usize.pow(n as u32)).map(move |idx| Self::from_ternary(n, idx))
    }

    /// Position in the dense `3^n` table: digit `i` is 0 (absent), 1 (pos) or 2 (neg).
    pub fn ternary_index(self) -> usize {
        let mut idx = 0usize;
        let mut place = 1usize;
        let both = self.pos.union(self.neg).mask();
        let mut rest = both;
        let mut bit = 0;
        while rest != 0 {
            if rest & 1 != 0 {
                let digit = if self.pos.mask() & (1 << bit) != 0 {
                    1
                } else {
                    2
                };
                idx += digit * place;
            }
            rest >>= 1;
            bit += 1;
            place *= 3;
        }
        idx
    }

    pub fn from_ternary(n: usize, mut idx: usize) -> Self {
        let (mut pos, mut neg) = (0u32, 0u32);
        for bit in 0..n {
            match idx % 3 {
                1 => pos |= 1 << bit,
                2 => neg |= 1 << bit,
                _ => {}
            }
            idx /= 3;
        }
        Self::new_unchecked(Coalition(pos), Coalition(neg))
    }
}

impl fmt::Display for SignedCoalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.pos, self.neg)
    }
}

/// The order of the bi-capacity lattice: `(A,B) ≼ (C,D)` iff `A ⊆ C` and `B ⊇ D`.
pub fn lattice_leq(p: SignedCoalition, q: SignedCoalition) -> bool {
    p.pos.is_subset_of(q.pos) && q.neg.is_subset_of(p.neg)
}

/// Componentwise inclusion: `(A,B) ⊆ (C,D)` iff `A ⊆ C` and `B ⊆ D`.
///
/// Not the lattice order; used for chains of bi-constant vectors.
pub fn pair_inclusion(p: SignedCoalition, q: SignedCoalition) -> bool {
    p.pos.is_subset_of(q.pos) && p.neg.is_subset_of(q.neg)
}

/// The vector `1_(A,B)`: 1 on `A`, -1 on `B`, 0 elsewhere, on the scale `[-1, 1]`.
pub fn indicator(p: SignedCoalition, n: usize) -> ScoreVector {
    ScoreVector::bipolar(indicator_values(p, n)).expect("indicator values lie in [-1, 1]")
}

pub(crate) fn indicator_values(p: SignedCoalition, n: usize) -> Vec<f64> {
    (1..=n)
        .map(|i| {
            if p.pos.contains(i) {
                1.0
            } else if p.neg.contains(i) {
                -1.0
            } else {
                0.0
            }
        })
        .collect()
}

/// `({j : x_j ≥ t}, {j : x_j ≤ -t})`, where at `t = 0` the negative side is `{j : x_j < 0}`.
pub fn level_pair(x: &ScoreVector, t: f64) -> SignedCoalition {
    level_pair_of(x.scores(), t)
}

pub(crate) fn level_pair_of(x: &[f64], t: f64) -> SignedCoalition {
    debug_assert!(t >= 0.0);
    let (mut pos, mut neg) = (0u32, 0u32);
    for (bit, &v) in x.iter().enumerate() {
        if v >= t {
            pos |= 1 << bit;
        } else if (t > 0.0 && v <= -t) || (t == 0.0 && v < 0.0) {
            neg |= 1 << bit;
        }
    }
    SignedCoalition::new_unchecked(Coalition(pos), Coalition(neg))
}
