use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::generators::{
    bipolar_comonotone_pair, chain, comonotone_pair, draw, draw_level, draw_vector, random_pair,
    trial_rng,
};
use super::{Aggregator, Axiom, AxiomError, AxiomReport, Violation};
use crate::bipolar_ops::{select, vector_select, Variant};
use crate::model::{indicator_values, SignedCoalition};

/// Violations kept per report.
pub const MAX_WITNESSES: usize = 100;

/// Exactly representable scale factors tried before random ones.
const DYADIC: [f64; 4] = [0.25, 0.5, 0.75, 1.0];

/// Finite quantifier domains up to this size are enumerated instead of sampled.
const EXHAUSTIVE_LIMIT: usize = 100_000;

/// Check `axiom` on `trials` seeded instances; identical arguments give identical reports.
///
/// Constant-vector and indicator checks also run a fixed set of instances
/// that does not depend on `trials`.
pub fn check_axiom(
    g: &Aggregator,
    axiom: Axiom,
    trials: u64,
    seed: u64,
    eps: f64,
) -> Result<AxiomReport, AxiomError> {
    axiom.check_scale(g.scale())?;
    let (lo, hi) = (g.scale().lower(), g.scale().upper());
    let n = g.n();
    let (count, violations) = match axiom {
        Axiom::Idempotency => {
            let fixed = constants(lo, hi);
            let offset = fixed.len() as u64;
            let mut found: Vec<Violation> = fixed
                .iter()
                .enumerate()
                .filter_map(|(t, &a)| idempotent(g, t as u64, a, eps))
                .collect();
            found.extend(sampled(trials, seed, |rng, t| {
                idempotent(g, offset + t, draw(rng, lo, hi), eps)
            }));
            (offset + trials, found)
        }
        Axiom::Homogeneity => (
            trials,
            sampled(trials, seed, |rng, t| {
                let x = draw_vector(rng, n, lo, hi);
                let random_c = 1.0 - rng.gen::<f64>();
                [DYADIC[(t % 4) as usize], random_c]
                    .into_iter()
                    .find_map(|c| {
                        let cx: Vec<f64> = x.iter().map(|v| c * v).collect();
                        compare(
                            t,
                            vec![x.clone()],
                            format!("c={c}"),
                            g.eval_raw(&cx),
                            c * g.eval_raw(&x),
                            eps,
                        )
                    })
            }),
        ),
        Axiom::Additivity => (
            trials,
            sampled(trials, seed, |rng, t| {
                let x = draw_vector(rng, n, lo, hi);
                let y = draw_vector(rng, n, lo, hi);
                additive(g, t, x, y, eps)
            }),
        ),
        Axiom::ComonotoneAdditivity => (
            trials,
            sampled(trials, seed, |rng, t| {
                let (x, y) = comonotone_pair(rng, n, lo, hi);
                additive(g, t, x, y, eps)
            }),
        ),
        Axiom::BipolarComonotoneAdditivity => (
            trials,
            sampled(trials, seed, |rng, t| {
                let (x, y) = bipolar_comonotone_pair(rng, n);
                additive(g, t, x, y, eps)
            }),
        ),
        Axiom::Maxitivity => (
            trials,
            sampled(trials, seed, |rng, t| {
                let x = draw_vector(rng, n, lo, hi);
                let y = draw_vector(rng, n, lo, hi);
                lattice(g, t, x, y, f64::max, eps)
            }),
        ),
        Axiom::Minitivity => (
            trials,
            sampled(trials, seed, |rng, t| {
                let x = draw_vector(rng, n, lo, hi);
                let y = draw_vector(rng, n, lo, hi);
                lattice(g, t, x, y, f64::min, eps)
            }),
        ),
        Axiom::ComonotoneMaxitivity => (
            trials,
            sampled(trials, seed, |rng, t| {
                let (x, y) = comonotone_pair(rng, n, lo, hi);
                lattice(g, t, x, y, f64::max, eps)
            }),
        ),
        Axiom::ComonotoneMinitivity => (
            trials,
            sampled(trials, seed, |rng, t| {
                let (x, y) = comonotone_pair(rng, n, lo, hi);
                lattice(g, t, x, y, f64::min, eps)
            }),
        ),
        Axiom::MinStability => (
            trials,
            sampled(trials, seed, |rng, t| {
                let x = draw_vector(rng, n, lo, hi);
                let gamma = if rng.gen_bool(0.5) {
                    x[rng.gen_range(0..n)]
                } else {
                    draw(rng, lo, hi)
                };
                let cut: Vec<f64> = x.iter().map(|v| v.min(gamma)).collect();
                compare(
                    t,
                    vec![x.clone()],
                    format!("gamma={gamma}"),
                    g.eval_raw(&cut),
                    g.eval_raw(&x).min(gamma),
                    eps,
                )
            }),
        ),
        Axiom::BipolarComonotoneMaxitivity(variant) => (
            trials,
            sampled(trials, seed, |rng, t| {
                chain_maxitive(g, t, rng, variant, eps)
            }),
        ),
        Axiom::BipolarSignStability | Axiom::BipolarMinStability => {
            indicator_axiom(g, axiom, trials, seed, eps)
        }
    };
    Ok(AxiomReport::new(axiom, count, violations))
}

/// Check several axioms with shared settings.
pub fn check_axioms(
    g: &Aggregator,
    axioms: &[Axiom],
    trials: u64,
    seed: u64,
    eps: f64,
) -> Result<Vec<AxiomReport>, AxiomError> {
    axioms
        .iter()
        .map(|&a| check_axiom(g, a, trials, seed, eps))
        .collect()
}

fn sampled<F>(trials: u64, seed: u64, f: F) -> Vec<Violation>
where
    F: Fn(&mut ChaCha8Rng, u64) -> Option<Violation> + Sync,
{
    (0..trials)
        .into_par_iter()
        .filter_map(|t| f(&mut trial_rng(seed, t), t))
        .collect()
}

fn compare(
    trial: u64,
    inputs: Vec<Vec<f64>>,
    note: String,
    lhs: f64,
    rhs: f64,
    eps: f64,
) -> Option<Violation> {
    let gap = (lhs - rhs).abs();
    if gap <= eps {
        None
    } else {
        Some(Violation {
            trial,
            inputs,
            note,
            lhs,
            rhs,
            gap,
        })
    }
}

/// Endpoints, midpoint, zero and the signed dyadic quarters inside `[lo, hi]`.
fn constants(lo: f64, hi: f64) -> Vec<f64> {
    let mut out = vec![lo, hi, lo + (hi - lo) / 2.0, 0.0];
    out.extend(DYADIC.iter().flat_map(|&d| [d, -d]));
    out.retain(|&a| lo <= a && a <= hi);
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

fn idempotent(g: &Aggregator, t: u64, a: f64, eps: f64) -> Option<Violation> {
    let x = vec![a; g.n()];
    let value = g.eval_raw(&x);
    compare(t, vec![x], String::new(), value, a, eps)
}

fn additive(
    g: &Aggregator,
    t: u64,
    mut x: Vec<f64>,
    mut y: Vec<f64>,
    eps: f64,
) -> Option<Violation> {
    let scale = g.scale();
    if x.iter().zip(&y).any(|(a, b)| !scale.contains(a + b)) {
        for v in x.iter_mut().chain(y.iter_mut()) {
            *v /= 2.0;
        }
    }
    let (lo, hi) = (scale.lower(), scale.upper());
    let sum: Vec<f64> = x
        .iter()
        .zip(&y)
        .map(|(a, b)| (a + b).clamp(lo, hi))
        .collect();
    let lhs = g.eval_raw(&sum);
    let rhs = g.eval_raw(&x) + g.eval_raw(&y);
    compare(t, vec![x, y], String::new(), lhs, rhs, eps)
}

fn lattice(
    g: &Aggregator,
    t: u64,
    x: Vec<f64>,
    y: Vec<f64>,
    op: fn(f64, f64) -> f64,
    eps: f64,
) -> Option<Violation> {
    let joined: Vec<f64> = x.iter().zip(&y).map(|(&a, &b)| op(a, b)).collect();
    let lhs = g.eval_raw(&joined);
    let rhs = op(g.eval_raw(&x), g.eval_raw(&y));
    compare(t, vec![x, y], String::new(), lhs, rhs, eps)
}

fn chain_maxitive(
    g: &Aggregator,
    t: u64,
    rng: &mut ChaCha8Rng,
    variant: Variant,
    eps: f64,
) -> Option<Violation> {
    let c = chain(rng, g.n());
    let vectors = c.vectors(g.n());
    let rows: Vec<&[f64]> = vectors.iter().map(Vec::as_slice).collect();
    let lhs = g.eval_raw(&vector_select(&rows, variant));
    let values: Vec<f64> = vectors.iter().map(|v| g.eval_raw(v)).collect();
    let rhs = select(&values, variant);
    compare(
        t,
        vectors,
        format!("levels={:?}", c.levels()),
        lhs,
        rhs,
        eps,
    )
}

fn sign(v: f64, eps: f64) -> i8 {
    if v > eps {
        1
    } else if v < -eps {
        -1
    } else {
        0
    }
}

/// Sign or minimum stability on scaled indicators `r · 1_(A,B)`.
///
/// Every pair is visited when there are at most [`EXHAUSTIVE_LIMIT`] of them,
/// otherwise `trials` random pairs. Each pair is scaled by the dyadic quarters
/// and `trials` shared random levels.
fn indicator_axiom(
    g: &Aggregator,
    axiom: Axiom,
    trials: u64,
    seed: u64,
    eps: f64,
) -> (u64, Vec<Violation>) {
    let n = g.n();
    let pairs: Vec<SignedCoalition> = match 3usize.checked_pow(n as u32) {
        Some(total) if total <= EXHAUSTIVE_LIMIT => SignedCoalition::all(n).collect(),
        _ => (0..trials)
            .map(|t| random_pair(&mut trial_rng(seed, t), n))
            .collect(),
    };
    let mut levels = DYADIC.to_vec();
    let mut rng = trial_rng(seed, u64::MAX);
    levels.extend((0..trials).map(|_| draw_level(&mut rng)));
    levels.sort_by(f64::total_cmp);
    levels.dedup();
    let count = (pairs.len() * levels.len()) as u64;
    let violations = pairs
        .par_iter()
        .enumerate()
        .filter_map(|(i, &p)| {
            let base = indicator_values(p, n);
            let scaled = |l: f64| -> Vec<f64> { base.iter().map(|v| l * v).collect() };
            let values: Vec<f64> = levels.iter().map(|&l| g.eval_raw(&scaled(l))).collect();
            let witness = |r: usize, s: usize, note: &str, lhs: f64, rhs: f64| Violation {
                trial: i as u64,
                inputs: vec![scaled(levels[r]), scaled(levels[s])],
                note: format!("pair={p} r={} s={} {note}", levels[r], levels[s]),
                lhs,
                rhs,
                gap: (lhs - rhs).abs(),
            };
            if axiom == Axiom::BipolarSignStability {
                let first = sign(values[0], eps);
                return (1..levels.len())
                    .find(|&k| sign(values[k], eps) != first)
                    .map(|k| witness(k, 0, "sign changes", values[k], values[0]));
            }
            let magnitudes: Vec<f64> = values.iter().map(|v| v.abs()).collect();
            if let Some(k) = (1..levels.len()).find(|&k| magnitudes[k] < magnitudes[k - 1] - eps) {
                return Some(witness(
                    k,
                    k - 1,
                    "magnitude decreases",
                    magnitudes[k],
                    magnitudes[k - 1],
                ));
            }
            let mut above = f64::NEG_INFINITY;
            let mut above_at = 0;
            for k in (0..levels.len()).rev() {
                if above > magnitudes[k] + eps && (magnitudes[k] - levels[k]).abs() > eps {
                    return Some(witness(
                        above_at,
                        k,
                        "strict increase off the level",
                        magnitudes[k],
                        levels[k],
                    ));
                }
                if magnitudes[k] > above {
                    above = magnitudes[k];
                    above_at = k;
                }
            }
            None
        })
        .collect();
    (count, violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{random_bicapacity, random_capacity};
    use crate::model::Interval;

    #[test]
    fn constants_stay_inside_the_scale() {
        assert_eq!(constants(0.0, 1.0), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(constants(2.0, 3.0), vec![2.0, 2.5, 3.0]);
    }

    #[test]
    fn bipolar_choquet_is_bipolar_comonotone_additive() {
        for seed in 0..5 {
            let g = Aggregator::bipolar_choquet(random_bicapacity(3, seed).unwrap());
            let report =
                check_axiom(&g, Axiom::BipolarComonotoneAdditivity, 1000, seed, 1e-9).unwrap();
            assert!(report.passed, "{report:?}");
            assert_eq!(report.trials, 1000);
        }
    }

    #[test]
    fn bipolar_shilkret_is_exactly_idempotent() {
        let g = Aggregator::bipolar_shilkret(random_bicapacity(3, 1).unwrap(), Variant::Neutral);
        let report = check_axiom(&g, Axiom::Idempotency, 500, 0, 0.0).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn mean_fails_bipolar_min_stability_with_witness() {
        let g = Aggregator::mean(3, Interval::bipolar()).unwrap();
        let report = check_axiom(&g, Axiom::BipolarMinStability, 10, 0, 1e-9).unwrap();
        assert!(!report.passed);
        assert!(report.violation_count > 0);
        assert!(!report.violations[0].inputs.is_empty());
        // sign is stable for the mean
        assert!(
            check_axiom(&g, Axiom::BipolarSignStability, 10, 0, 1e-9)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn mean_is_additive_but_not_maxitive() {
        let g = Aggregator::mean(3, Interval::unit()).unwrap();
        assert!(
            check_axiom(&g, Axiom::Additivity, 300, 2, 1e-9)
                .unwrap()
                .passed
        );
        let report = check_axiom(&g, Axiom::Maxitivity, 300, 2, 1e-9).unwrap();
        assert!(!report.passed);
        assert!(report
            .violations
            .windows(2)
            .all(|w| w[0].trial < w[1].trial));
    }

    #[test]
    fn reports_are_reproducible() {
        let g = Aggregator::mean(3, Interval::unit()).unwrap();
        let a = check_axiom(&g, Axiom::ComonotoneMaxitivity, 400, 9, 1e-9).unwrap();
        let b = check_axiom(&g, Axiom::ComonotoneMaxitivity, 400, 9, 1e-9).unwrap();
        assert_eq!(a, b);
        assert!(a.violations.len() <= MAX_WITNESSES);
    }

    #[test]
    fn zero_trials_still_run_fixed_checks() {
        let g = Aggregator::mean(2, Interval::bipolar()).unwrap();
        let report = check_axiom(&g, Axiom::BipolarMinStability, 0, 0, 1e-9).unwrap();
        assert_eq!(report.trials, 9 * 4);
        assert!(!report.passed);
        let report = check_axiom(&g, Axiom::Homogeneity, 0, 0, 1e-9).unwrap();
        assert!(report.passed && report.trials == 0);
    }

    #[test]
    fn unsupported_scale_is_refused() {
        let g = Aggregator::shilkret(random_capacity(2, 0).unwrap());
        assert!(matches!(
            check_axiom(&g, Axiom::Minitivity, 10, 0, 1e-9),
            Err(AxiomError::UnsupportedAxiomForScale { .. })
        ));
        assert!(check_axiom(&g, Axiom::Maxitivity, 10, 0, 1e-9).is_ok());
    }
}
