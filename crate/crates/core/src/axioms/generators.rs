use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::AxiomError;
use crate::model::{
    check_criterion_count, indicator_values, BiCapacity, Capacity, Coalition, Interval, Measure,
    ScoreVector, SignedCoalition,
};

/// Generator for trial `trial` under `seed`; trials never share a stream.
pub(crate) fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// A bounded closed scale as `(lower, upper)`.
pub(crate) fn bounds(scale: Interval) -> Result<(f64, f64), AxiomError> {
    if scale.is_closed() && scale.lower().is_finite() && scale.upper().is_finite() {
        Ok((scale.lower(), scale.upper()))
    } else {
        Err(AxiomError::UnsupportedScale(scale))
    }
}

/// A point of `[lo, hi]`, snapped to a grid of eighths a quarter of the time
/// so that ties and endpoints show up.
pub(crate) fn draw(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    let u: f64 = rng.gen();
    let u = if rng.gen_ratio(1, 4) {
        (u * 8.0).round() / 8.0
    } else {
        u
    };
    (lo + (hi - lo) * u).clamp(lo, hi)
}

pub(crate) fn draw_vector(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| draw(rng, lo, hi)).collect()
}

/// A level in `(0, 1]`.
pub(crate) fn draw_level(rng: &mut impl Rng) -> f64 {
    if rng.gen_ratio(1, 4) {
        f64::from(rng.gen_range(1..=8u32)) / 8.0
    } else {
        1.0 - rng.gen::<f64>()
    }
}

pub(crate) fn comonotone_pair(
    rng: &mut impl Rng,
    n: usize,
    lo: f64,
    hi: f64,
) -> (Vec<f64>, Vec<f64>) {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut a = draw_vector(rng, n, lo, hi);
    let mut b = draw_vector(rng, n, lo, hi);
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (mut x, mut y) = (vec![0.0; n], vec![0.0; n]);
    for (rank, &i) in order.iter().enumerate() {
        x[i] = a[rank];
        y[i] = b[rank];
    }
    (x, y)
}

/// Two comonotone vectors on `scale`: a shared random permutation along which both are sorted.
pub fn gen_comonotone_pair(
    n: usize,
    scale: Interval,
    seed: u64,
) -> Result<(ScoreVector, ScoreVector), AxiomError> {
    check_criterion_count(n)?;
    let (lo, hi) = bounds(scale)?;
    let (x, y) = comonotone_pair(&mut ChaCha8Rng::seed_from_u64(seed), n, lo, hi);
    Ok((ScoreVector::new(x, scale)?, ScoreVector::new(y, scale)?))
}

/// Levels `0 < l_1 < … < l_k ≤ 1` attached to a chain of disjoint pairs that
/// shrinks under componentwise inclusion.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainSpec {
    levels: Vec<f64>,
    pairs: Vec<SignedCoalition>,
}

impl ChainSpec {
    pub fn new(levels: Vec<f64>, pairs: Vec<SignedCoalition>) -> Result<Self, AxiomError> {
        if levels.is_empty() || levels.len() != pairs.len() {
            return Err(AxiomError::InvalidChain(format!(
                "{} levels for {} pairs",
                levels.len(),
                pairs.len()
            )));
        }
        let strictly_increasing = levels.windows(2).all(|w| w[0] < w[1]);
        if levels.iter().any(|v| v.is_nan())
            || levels[0] <= 0.0
            || levels[levels.len() - 1] > 1.0
            || !strictly_increasing
        {
            return Err(AxiomError::InvalidChain(
                "levels must increase strictly within (0, 1]".into(),
            ));
        }
        if let Some(w) = pairs
            .windows(2)
            .find(|w| !crate::model::pair_inclusion(w[1], w[0]))
        {
            return Err(AxiomError::InvalidChain(format!(
                "{} is not contained in {}",
                w[1], w[0]
            )));
        }
        Ok(Self { levels, pairs })
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn pairs(&self) -> &[SignedCoalition] {
        &self.pairs
    }

    /// The scaled indicators `l_i · 1_(A_i, B_i)` on `n` criteria.
    pub fn vectors(&self, n: usize) -> Vec<Vec<f64>> {
        self.levels
            .iter()
            .zip(&self.pairs)
            .map(|(&l, &p)| indicator_values(p, n).into_iter().map(|v| l * v).collect())
            .collect()
    }
}

pub(crate) fn chain(rng: &mut impl Rng, n: usize) -> ChainSpec {
    let k = rng.gen_range(1..=n + 1);
    let mut levels: Vec<f64> = Vec::with_capacity(k);
    while levels.len() < k {
        let l = draw_level(rng);
        if !levels.contains(&l) {
            levels.push(l);
        }
    }
    levels.sort_by(f64::total_cmp);
    let mut pairs = Vec::with_capacity(k);
    let mut current = random_pair(rng, n);
    for _ in 0..k {
        pairs.push(current);
        current = shrink(rng, current, n);
    }
    ChainSpec { levels, pairs }
}

pub(crate) fn random_pair(rng: &mut impl Rng, n: usize) -> SignedCoalition {
    let (mut pos, mut neg) = (Coalition::EMPTY, Coalition::EMPTY);
    for i in 1..=n {
        match rng.gen_range(0..3) {
            0 => pos = pos.with(i),
            1 => neg = neg.with(i),
            _ => {}
        }
    }
    SignedCoalition::new_unchecked(pos, neg)
}

fn shrink(rng: &mut impl Rng, p: SignedCoalition, n: usize) -> SignedCoalition {
    let (mut pos, mut neg) = (p.pos(), p.neg());
    for i in 1..=n {
        if rng.gen_ratio(1, 3) {
            pos = pos.without(i);
            neg = neg.without(i);
        }
    }
    SignedCoalition::new_unchecked(pos, neg)
}

pub fn gen_chain(n: usize, seed: u64) -> Result<ChainSpec, AxiomError> {
    check_criterion_count(n)?;
    Ok(chain(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

/// `x = Σ a_i · 1_(A_i,B_i)` and `y = Σ b_i · 1_(A_i,B_i)` over a chain of pairs.
pub(crate) fn sum_over_chain(
    pairs: &[SignedCoalition],
    a: &[f64],
    b: &[f64],
    n: usize,
) -> (Vec<f64>, Vec<f64>) {
    let (mut x, mut y) = (vec![0.0; n], vec![0.0; n]);
    for ((&p, &da), &db) in pairs.iter().zip(a).zip(b) {
        for (j, v) in indicator_values(p, n).into_iter().enumerate() {
            x[j] += da * v;
            y[j] += db * v;
        }
    }
    (x, y)
}

pub(crate) fn bipolar_comonotone_pair(rng: &mut impl Rng, n: usize) -> (Vec<f64>, Vec<f64>) {
    let chain = chain(rng, n);
    fn increment(rng: &mut impl Rng) -> f64 {
        match rng.gen_range(0..6) {
            0 => 0.0,
            1 => f64::from(rng.gen_range(1..=4u32)) / 8.0,
            _ => rng.gen(),
        }
    }
    let k = chain.len();
    let a: Vec<f64> = (0..k).map(|_| increment(rng)).collect();
    let b: Vec<f64> = (0..k).map(|_| increment(rng)).collect();
    let total: f64 = a.iter().sum::<f64>() + b.iter().sum::<f64>();
    let (mut x, mut y) = sum_over_chain(&chain.pairs, &a, &b, n);
    if total > 1.0 {
        for v in x.iter_mut().chain(y.iter_mut()) {
            *v /= total;
        }
    }
    for v in x.iter_mut().chain(y.iter_mut()) {
        *v = v.clamp(-1.0, 1.0);
    }
    (x, y)
}

/// Two bipolar comonotone vectors whose sum stays in `[-1, 1]^n`.
pub fn gen_bipolar_comonotone_pair(
    n: usize,
    seed: u64,
) -> Result<(ScoreVector, ScoreVector), AxiomError> {
    check_criterion_count(n)?;
    let (x, y) = bipolar_comonotone_pair(&mut ChaCha8Rng::seed_from_u64(seed), n);
    Ok((ScoreVector::bipolar(x)?, ScoreVector::bipolar(y)?))
}

/// Step up from `lo`, sometimes snapping to eighths or staying put.
fn step(rng: &mut impl Rng, lo: f64, hi: f64, weight: f64) -> f64 {
    match rng.gen_range(0..8) {
        0 => lo,
        1 | 2 => {
            ((lo + (hi - lo) * rng.gen::<f64>() * weight) * 8.0)
                .ceil()
                .min(hi * 8.0)
                / 8.0
        }
        _ => lo + (hi - lo) * rng.gen::<f64>() * weight,
    }
    .clamp(lo, hi)
}

pub(crate) fn capacity_table(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    let mut masks: Vec<u32> = (0..1u32 << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    let full = (1u32 << n) - 1;
    let mut table = vec![0.0; 1 << n];
    for m in masks {
        if m == 0 {
            continue;
        }
        if m == full {
            table[m as usize] = 1.0;
            continue;
        }
        let lo = (0..n)
            .filter(|i| m >> i & 1 == 1)
            .map(|i| table[(m & !(1 << i)) as usize])
            .fold(0.0, f64::max);
        let weight = f64::from(m.count_ones()) / n as f64;
        table[m as usize] = step(rng, lo, 1.0, weight);
    }
    table
}

pub fn random_capacity(n: usize, seed: u64) -> Result<Capacity, AxiomError> {
    check_criterion_count(n)?;
    let table = capacity_table(&mut ChaCha8Rng::seed_from_u64(seed), n);
    Ok(Capacity::from_table(n, table)?)
}

/// A random measure on `scale`: an affine image of a random capacity.
pub fn random_measure(n: usize, scale: Interval, seed: u64) -> Result<Measure, AxiomError> {
    check_criterion_count(n)?;
    let (lo, hi) = bounds(scale)?;
    let table = capacity_table(&mut ChaCha8Rng::seed_from_u64(seed), n)
        .into_iter()
        .map(|v| {
            if v == 1.0 {
                hi
            } else {
                (lo + (hi - lo) * v).min(hi)
            }
        })
        .collect();
    Ok(Measure::from_table(n, scale, table)?)
}

pub(crate) fn bicapacity_table(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    let size = 3usize.pow(n as u32);
    let negative = capacity_table(rng, n);
    let mut table = vec![f64::NAN; size];
    let mut order: Vec<SignedCoalition> = SignedCoalition::all(n).collect();
    order.sort_by_key(|p| p.pos().len() as i64 - p.neg().len() as i64);
    for p in order {
        let idx = p.ternary_index();
        if p.pos().is_empty() {
            table[idx] = 0.0 - negative[p.neg().mask() as usize];
            continue;
        }
        if p == SignedCoalition::top(n) {
            table[idx] = 1.0;
            continue;
        }
        let lo = lower_covers(p, n)
            .map(|q| table[q.ternary_index()])
            .fold(-1.0, f64::max);
        let rank = (p.pos().len() as f64 - p.neg().len() as f64 + n as f64) / (2.0 * n as f64);
        table[idx] = step(rng, lo, 1.0, rank);
    }
    table
}

fn lower_covers(p: SignedCoalition, n: usize) -> impl Iterator<Item = SignedCoalition> {
    (1..=n).filter_map(move |i| {
        if p.pos().contains(i) {
            Some(SignedCoalition::new_unchecked(p.pos().without(i), p.neg()))
        } else if !p.neg().contains(i) {
            Some(SignedCoalition::new_unchecked(p.pos(), p.neg().with(i)))
        } else {
            None
        }
    })
}

pub fn random_bicapacity(n: usize, seed: u64) -> Result<BiCapacity, AxiomError> {
    check_criterion_count(n)?;
    let table = bicapacity_table(&mut ChaCha8Rng::seed_from_u64(seed), n);
    Ok(BiCapacity::from_table(n, table)?)
}
