use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{
    check_axioms, elicit_bicapacity, elicit_capacity, Aggregator, Axiom, AxiomError, AxiomReport,
};
use crate::bipolar_ops::Variant;
use crate::model::{BiCapacity, Capacity, Measure};

/// An integral family with a characterization by axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Choquet,
    Shilkret,
    ShilkretNegative,
    Sugeno,
    BipolarChoquet,
    BipolarShilkret(Variant),
    BipolarSugeno(Variant),
}

impl Family {
    pub fn is_bipolar(self) -> bool {
        matches!(
            self,
            Family::BipolarChoquet | Family::BipolarShilkret(_) | Family::BipolarSugeno(_)
        )
    }

    /// The axioms jointly characterizing the family.
    pub fn bundle(self) -> Vec<Axiom> {
        match self {
            Family::Choquet => vec![Axiom::Idempotency, Axiom::ComonotoneAdditivity],
            Family::Shilkret => vec![
                Axiom::Idempotency,
                Axiom::ComonotoneMaxitivity,
                Axiom::Homogeneity,
            ],
            Family::ShilkretNegative => vec![
                Axiom::Idempotency,
                Axiom::ComonotoneMinitivity,
                Axiom::Homogeneity,
            ],
            Family::Sugeno => vec![
                Axiom::Idempotency,
                Axiom::ComonotoneMaxitivity,
                Axiom::MinStability,
            ],
            Family::BipolarChoquet => vec![Axiom::Idempotency, Axiom::BipolarComonotoneAdditivity],
            Family::BipolarShilkret(v) => vec![
                Axiom::Idempotency,
                Axiom::BipolarComonotoneMaxitivity(v),
                Axiom::Homogeneity,
            ],
            Family::BipolarSugeno(v) => vec![
                Axiom::Idempotency,
                Axiom::BipolarComonotoneMaxitivity(v),
                Axiom::BipolarSignStability,
                Axiom::BipolarMinStability,
            ],
        }
    }

    /// Bind the family's integral to a carrier of matching polarity.
    pub fn aggregator(self, carrier: &Carrier) -> Result<Aggregator, AxiomError> {
        match (self, carrier) {
            (Family::Choquet, Carrier::Capacity(mu)) => Ok(Aggregator::choquet(mu.clone())),
            (Family::Shilkret, Carrier::Capacity(mu)) => Ok(Aggregator::shilkret(mu.clone())),
            (Family::ShilkretNegative, Carrier::Capacity(mu)) => {
                Ok(Aggregator::shilkret_negative(mu.clone()))
            }
            (Family::Sugeno, Carrier::Capacity(mu)) => {
                Ok(Aggregator::sugeno(Measure::from_capacity(mu)))
            }
            (Family::BipolarChoquet, Carrier::BiCapacity(mb)) => {
                Ok(Aggregator::bipolar_choquet(mb.clone()))
            }
            (Family::BipolarShilkret(v), Carrier::BiCapacity(mb)) => {
                Ok(Aggregator::bipolar_shilkret(mb.clone(), v))
            }
            (Family::BipolarSugeno(v), Carrier::BiCapacity(mb)) => {
                Ok(Aggregator::bipolar_sugeno(mb.clone(), v))
            }
            (family, _) => Err(AxiomError::CarrierMismatch {
                family,
                expected: if family.is_bipolar() {
                    "bi-capacity"
                } else {
                    "capacity"
                },
            }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Choquet => f.write_str("choquet"),
            Family::Shilkret => f.write_str("shilkret"),
            Family::ShilkretNegative => f.write_str("shilkret-negative"),
            Family::Sugeno => f.write_str("sugeno"),
            Family::BipolarChoquet => f.write_str("bipolar-choquet"),
            Family::BipolarShilkret(v) => write!(f, "bipolar-shilkret({v})"),
            Family::BipolarSugeno(v) => write!(f, "bipolar-sugeno({v})"),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    /// `bipolar-shilkret` and `bipolar-sugeno` without a variant mean the neutral one.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (head, variant) = match s.split_once('(') {
            Some((head, rest)) => {
                let v = rest
                    .strip_suffix(')')
                    .ok_or_else(|| format!("unknown family `{s}`"))?
                    .parse::<Variant>()?;
                (head, Some(v))
            }
            None => (s, None),
        };
        let family = match (head, variant) {
            ("choquet", None) => Family::Choquet,
            ("shilkret", None) => Family::Shilkret,
            ("shilkret-negative", None) => Family::ShilkretNegative,
            ("sugeno", None) => Family::Sugeno,
            ("bipolar-choquet", None) => Family::BipolarChoquet,
            ("bipolar-shilkret", v) => Family::BipolarShilkret(v.unwrap_or_default()),
            ("bipolar-sugeno", v) => Family::BipolarSugeno(v.unwrap_or_default()),
            _ => return Err(format!("unknown family `{s}`")),
        };
        Ok(family)
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Carrier {
    Capacity(Capacity),
    BiCapacity(BiCapacity),
}

impl Carrier {
    pub fn n(&self) -> usize {
        match self {
            Carrier::Capacity(mu) => mu.n(),
            Carrier::BiCapacity(mb) => mb.n(),
        }
    }

    pub fn table(&self) -> &[f64] {
        match self {
            Carrier::Capacity(mu) => mu.table(),
            Carrier::BiCapacity(mb) => mb.table(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub family: Family,
    pub reports: Vec<AxiomReport>,
    pub roundtrip_exact: bool,
    pub passed: bool,
}

/// Check the family's axiom bundle on its integral bound to `carrier`, then
/// elicit the carrier back and compare tables entry for entry.
pub fn run_characterization_suite(
    family: Family,
    carrier: &Carrier,
    trials: u64,
    seed: u64,
    eps: f64,
) -> Result<SuiteReport, AxiomError> {
    let g = family.aggregator(carrier)?;
    let reports = check_axioms(&g, &family.bundle(), trials, seed, eps)?;
    let elicited = match carrier {
        Carrier::Capacity(_) => elicit_capacity(&g).map(Carrier::Capacity),
        Carrier::BiCapacity(_) => elicit_bicapacity(&g).map(Carrier::BiCapacity),
    };
    let roundtrip_exact = match elicited {
        Ok(e) => e.table() == carrier.table(),
        Err(AxiomError::Elicitation(_)) => false,
        Err(e) => return Err(e),
    };
    let passed = roundtrip_exact && reports.iter().all(|r| r.passed);
    Ok(SuiteReport {
        family,
        reports,
        roundtrip_exact,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{random_bicapacity, random_capacity};

    #[test]
    fn family_names_round_trip() {
        let all = [
            Family::Choquet,
            Family::Shilkret,
            Family::ShilkretNegative,
            Family::Sugeno,
            Family::BipolarChoquet,
            Family::BipolarShilkret(Variant::Left),
            Family::BipolarSugeno(Variant::Right),
        ];
        for f in all {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert_eq!(
            "bipolar-sugeno".parse::<Family>().unwrap(),
            Family::BipolarSugeno(Variant::Neutral)
        );
        assert!("choquet(left)".parse::<Family>().is_err());
    }

    #[test]
    fn suites_pass_for_builtins() {
        let mu = Carrier::Capacity(random_capacity(3, 4).unwrap());
        let mb = Carrier::BiCapacity(random_bicapacity(3, 4).unwrap());
        for family in [
            Family::Choquet,
            Family::Shilkret,
            Family::ShilkretNegative,
            Family::Sugeno,
        ] {
            let report = run_characterization_suite(family, &mu, 200, 0, 1e-9).unwrap();
            assert!(report.passed, "{report:?}");
        }
        for v in Variant::ALL {
            for family in [
                Family::BipolarChoquet,
                Family::BipolarShilkret(v),
                Family::BipolarSugeno(v),
            ] {
                let report = run_characterization_suite(family, &mb, 200, 0, 1e-9).unwrap();
                assert!(report.passed, "{report:?}");
                assert_eq!(report.reports.len(), family.bundle().len());
            }
        }
    }

    #[test]
    fn carrier_polarity_must_match() {
        let mu = Carrier::Capacity(random_capacity(2, 0).unwrap());
        assert!(matches!(
            run_characterization_suite(Family::BipolarChoquet, &mu, 10, 0, 1e-9),
            Err(AxiomError::CarrierMismatch { .. })
        ));
    }
}
