use bifuzzy::axioms::{random_bicapacity, random_capacity};
use bifuzzy::bipolar::{
    bipolar_choquet, bipolar_choquet_oracle, bipolar_shilkret, bipolar_sugeno, link_check,
    MaxFamily,
};
use bifuzzy::bipolar_ops::Variant;
use bifuzzy::io::{
    format_value, parse_alternatives, parse_bicapacity, parse_capacity, save_bicapacity,
    save_capacity,
};
use bifuzzy::unipolar::{choquet, choquet_level_integral, shilkret, sugeno, sugeno_subset_oracle};
use bifuzzy::{Interval, Measure, ScoreVector};
use proptest::prelude::*;

fn bipolar_vector(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(
        prop_oneof![(-4i32..=4).prop_map(|k| f64::from(k) / 4.0), -1.0..=1.0f64],
        n,
    )
}

fn instance() -> impl Strategy<Value = (usize, u64, Vec<f64>)> {
    (1usize..=4, any::<u64>()).prop_flat_map(|(n, seed)| (Just(n), Just(seed), bipolar_vector(n)))
}

fn pair() -> impl Strategy<Value = (usize, u64, Vec<f64>, Vec<f64>)> {
    (1usize..=4, any::<u64>())
        .prop_flat_map(|(n, seed)| (Just(n), Just(seed), bipolar_vector(n), bipolar_vector(n)))
}

fn sv(x: &[f64]) -> ScoreVector {
    ScoreVector::bipolar(x.to_vec()).unwrap()
}

proptest! {
    #[test]
    fn bipolar_choquet_matches_oracle((n, seed, x) in instance()) {
        let mb = random_bicapacity(n, seed).unwrap();
        let a = bipolar_choquet(&sv(&x), &mb).unwrap();
        let b = bipolar_choquet_oracle(&sv(&x), &mb).unwrap();
        prop_assert!((a - b).abs() <= 1e-12, "{a} vs {b}");
    }

    #[test]
    fn bipolar_integrals_are_monotone((n, seed, x, y) in pair()) {
        let mb = random_bicapacity(n, seed).unwrap();
        let lo: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a.min(*b)).collect();
        let hi: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a.max(*b)).collect();
        let (lo, hi) = (sv(&lo), sv(&hi));
        prop_assert!(bipolar_choquet(&lo, &mb).unwrap() <= bipolar_choquet(&hi, &mb).unwrap() + 1e-12);
        for v in Variant::ALL {
            prop_assert!(bipolar_shilkret(&lo, &mb, v).unwrap() <= bipolar_shilkret(&hi, &mb, v).unwrap() + 1e-12);
            prop_assert!(bipolar_sugeno(&lo, &mb, v).unwrap() <= bipolar_sugeno(&hi, &mb, v).unwrap());
        }
    }

    #[test]
    fn bipolar_integrals_are_idempotent(n in 1usize..=4, seed in any::<u64>(), c in -1.0..=1.0f64) {
        let mb = random_bicapacity(n, seed).unwrap();
        let x = ScoreVector::constant(n, c, Interval::bipolar()).unwrap();
        prop_assert!((bipolar_choquet(&x, &mb).unwrap() - c).abs() <= 1e-12);
        for v in Variant::ALL {
            prop_assert_eq!(bipolar_shilkret(&x, &mb, v).unwrap(), c);
            prop_assert_eq!(bipolar_sugeno(&x, &mb, v).unwrap(), c);
        }
    }

    #[test]
    fn bipolar_choquet_is_positively_homogeneous((n, seed, x) in instance(), c in 0.0..=1.0f64) {
        let mb = random_bicapacity(n, seed).unwrap();
        let scaled: Vec<f64> = x.iter().map(|v| c * v).collect();
        let a = bipolar_choquet(&sv(&scaled), &mb).unwrap();
        let b = c * bipolar_choquet(&sv(&x), &mb).unwrap();
        prop_assert!((a - b).abs() <= 1e-12, "{a} vs {b}");
    }

    #[test]
    fn variants_stay_linked((n, seed, x) in instance()) {
        let mb = random_bicapacity(n, seed).unwrap();
        for family in [MaxFamily::Shilkret, MaxFamily::Sugeno] {
            prop_assert!(link_check(&sv(&x), &mb, family).is_ok());
        }
    }

    #[test]
    fn unipolar_forms_agree(n in 1usize..=4, seed in any::<u64>(), raw in prop::collection::vec(0.0..=1.0f64, 4)) {
        let mu = random_capacity(n, seed).unwrap();
        let x = ScoreVector::unit(raw[..n].to_vec()).unwrap();
        let a = choquet(&x, &mu).unwrap();
        let b = choquet_level_integral(&x, &mu).unwrap();
        prop_assert!((a - b).abs() <= 1e-12);
        let nu = Measure::from_capacity(&mu);
        prop_assert_eq!(sugeno(&x, &nu).unwrap(), sugeno_subset_oracle(&x, &nu).unwrap());
        prop_assert!(shilkret(&x, &mu).unwrap() <= sugeno(&x, &nu).unwrap() + 1e-12);
    }

    #[test]
    fn carriers_round_trip(n in 1usize..=5, seed in any::<u64>()) {
        let mu = random_capacity(n, seed).unwrap();
        let text = save_capacity(&mu);
        prop_assert_eq!(parse_capacity(&text).unwrap(), mu);
        let mb = random_bicapacity(n, seed).unwrap();
        let text = save_bicapacity(&mb);
        let back = parse_bicapacity(&text).unwrap();
        prop_assert_eq!(save_bicapacity(&back), text);
        prop_assert_eq!(back, mb);
    }

    #[test]
    fn alternatives_round_trip(rows in prop::collection::vec(prop::collection::vec(-1.0..=1.0f64, 3), 0..8)) {
        let mut text = "id,c1,c2,c3\n".to_string();
        for (i, r) in rows.iter().enumerate() {
            text.push_str(&format!("alt{i},{},{},{}\n", r[0], r[1], r[2]));
        }
        let table = parse_alternatives(&text, Interval::bipolar()).unwrap();
        prop_assert_eq!(table.len(), rows.len());
        for (got, want) in table.rows().iter().zip(&rows) {
            prop_assert_eq!(got.scores(), want.as_slice());
        }
    }

    #[test]
    fn formatted_values_keep_twelve_digits(v in -1e6..1e6f64) {
        let back: f64 = format_value(v).parse().unwrap();
        prop_assert!((back - v).abs() <= 1e-11 * v.abs().max(1e-300), "{v} -> {back}");
    }
}
