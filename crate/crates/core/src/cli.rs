//! Command line surface.
//!
//! [`run`] parses arguments and executes one command, returning its output and
//! exit code instead of printing, so the binary is a thin wrapper.
//!
//! Exit codes: 0 success, 1 parse, validation or usage error, 2 dimension or
//! scale error, 3 internal consistency failure, 4 failed axiom audit.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::axioms::{
    check_axioms, elicit_bicapacity, elicit_capacity, run_characterization_suite, Aggregator,
    Axiom, AxiomReport, Carrier, Family,
};
use crate::bipolar::{bipolar_choquet, bipolar_shilkret, bipolar_sugeno, SCALE_SLACK};
use crate::bipolar_ops::Variant;
use crate::error::Error;
use crate::io::{
    fingerprint, format_value, load_alternatives, load_bicapacity, load_capacity, save_bicapacity,
    save_capacity, AlternativesTable,
};
use crate::model::{Interval, Measure, ScoreVector};
use crate::unipolar::{
    choquet, shilkret, shilkret_negative, shilkret_symmetric, sugeno, sugeno_negative,
    sugeno_symmetric,
};
use crate::EPS;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

pub const EXIT_AUDIT_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "bifuzzy",
    version,
    about = "Fuzzy integrals over capacities and bi-capacities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a carrier file is a valid capacity or bi-capacity.
    Validate(ValidateArgs),
    /// Score every alternative.
    Score(ScoreArgs),
    /// Rank alternatives by score, best first.
    Rank(ScoreArgs),
    /// Audit an integral or a demo aggregator against its characterizing axioms.
    CheckAxioms(CheckArgs),
    /// Recover the carrier from the integral's values on indicators.
    Elicit(ElicitArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IntegralArg {
    Choquet,
    Shilkret,
    Sugeno,
    /// Arithmetic mean (audit demo only).
    Mean,
    /// Largest score (audit demo only).
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Polarity {
    Classic,
    Negative,
    Symmetric,
    Bipolar,
}

impl Polarity {
    fn as_str(self) -> &'static str {
        match self {
            Polarity::Classic => "classic",
            Polarity::Negative => "negative",
            Polarity::Symmetric => "symmetric",
            Polarity::Bipolar => "bipolar",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    #[arg(long)]
    carrier: PathBuf,
    /// `bipolar` reads a bi-capacity, anything else a capacity.
    #[arg(long, value_enum, default_value = "bipolar")]
    polarity: Polarity,
}

#[derive(Debug, Args)]
struct IntegralSelection {
    #[arg(long, value_enum)]
    integral: IntegralArg,
    #[arg(long, value_enum, default_value = "bipolar")]
    polarity: Polarity,
    /// neutral, right or left; bipolar Shilkret and Sugeno only.
    #[arg(long)]
    variant: Option<Variant>,
}

#[derive(Debug, Args)]
struct ScoreArgs {
    #[arg(long)]
    carrier: PathBuf,
    #[arg(long)]
    alternatives: PathBuf,
    #[command(flatten)]
    selection: IntegralSelection,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Required unless auditing a demo aggregator.
    #[arg(long)]
    carrier: Option<PathBuf>,
    #[command(flatten)]
    selection: IntegralSelection,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = EPS)]
    eps: f64,
    /// Comma-separated axioms replacing the default bundle.
    #[arg(long, value_delimiter = ',')]
    axioms: Option<Vec<Axiom>>,
    /// Criterion count for demo aggregators without a carrier.
    #[arg(long)]
    criteria: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Debug, Args)]
struct ElicitArgs {
    #[arg(long)]
    carrier: PathBuf,
    #[command(flatten)]
    selection: IntegralSelection,
    /// Where to write the elicited carrier; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parse `args` (program name first) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Validate(a) => validate(&a).map(Outcome::ok),
        Command::Score(a) => score(&a).map(Outcome::ok),
        Command::Rank(a) => rank(&a).map(Outcome::ok),
        Command::CheckAxioms(a) => check(&a),
        Command::Elicit(a) => elicit(&a).map(Outcome::ok),
    };
    result.unwrap_or_else(|e| Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}

fn load_carrier(path: &Path, polarity: Polarity) -> Result<(Carrier, String), Error> {
    if polarity == Polarity::Bipolar {
        let mb = load_bicapacity(path)?;
        let print = fingerprint(&save_bicapacity(&mb));
        Ok((Carrier::BiCapacity(mb), print))
    } else {
        let mu = load_capacity(path)?;
        let print = fingerprint(&save_capacity(&mu));
        Ok((Carrier::Capacity(mu), print))
    }
}

fn validate(a: &ValidateArgs) -> Result<String, Error> {
    let (carrier, print) = load_carrier(&a.carrier, a.polarity)?;
    let kind = match carrier {
        Carrier::Capacity(_) => "capacity",
        Carrier::BiCapacity(_) => "bi-capacity",
    };
    Ok(format!(
        "valid {kind} on {} criteria\nfingerprint: {print}\n",
        carrier.n()
    ))
}

/// The variant, refusing it where it has no meaning.
fn variant_of(s: &IntegralSelection) -> Result<Variant, Error> {
    match s.variant {
        None => Ok(Variant::Neutral),
        Some(v)
            if s.polarity == Polarity::Bipolar
                && matches!(s.integral, IntegralArg::Shilkret | IntegralArg::Sugeno) =>
        {
            Ok(v)
        }
        Some(_) => Err(Error::Usage(
            "--variant applies to bipolar shilkret and sugeno only".into(),
        )),
    }
}

fn unsupported(s: &IntegralSelection) -> Error {
    Error::Usage(format!(
        "no {} integral with {} polarity",
        s.integral
            .to_possible_value()
            .expect("no skipped variants")
            .get_name(),
        s.polarity.as_str()
    ))
}

/// Scale that alternatives must lie on for the selected integral.
fn input_scale(s: &IntegralSelection) -> Result<Interval, Error> {
    let nonpositive = Interval::new(f64::NEG_INFINITY, 0.0, true, false).expect("valid interval");
    Ok(match (s.integral, s.polarity) {
        (IntegralArg::Choquet | IntegralArg::Shilkret, Polarity::Classic) => Interval::real_line(),
        (IntegralArg::Sugeno, Polarity::Classic) => Interval::unit(),
        (IntegralArg::Shilkret, Polarity::Negative) => nonpositive,
        (IntegralArg::Sugeno, Polarity::Negative) => Interval::negative_unit(),
        (IntegralArg::Shilkret, Polarity::Symmetric) => Interval::real_line(),
        (IntegralArg::Sugeno, Polarity::Symmetric) => Interval::bipolar(),
        (IntegralArg::Choquet | IntegralArg::Shilkret | IntegralArg::Sugeno, Polarity::Bipolar) => {
            Interval::bipolar()
        }
        _ => return Err(unsupported(s)),
    })
}

fn evaluate(
    s: &IntegralSelection,
    variant: Variant,
    carrier: &Carrier,
    x: &ScoreVector,
) -> Result<f64, Error> {
    let value = match (carrier, s.integral, s.polarity) {
        (Carrier::Capacity(mu), IntegralArg::Choquet, Polarity::Classic) => choquet(x, mu)?,
        (Carrier::Capacity(mu), IntegralArg::Shilkret, Polarity::Classic) => shilkret(x, mu)?,
        (Carrier::Capacity(mu), IntegralArg::Sugeno, Polarity::Classic) => {
            sugeno(x, &Measure::from_capacity(mu))?
        }
        (Carrier::Capacity(mu), IntegralArg::Shilkret, Polarity::Negative) => {
            shilkret_negative(x, mu)?
        }
        (Carrier::Capacity(mu), IntegralArg::Sugeno, Polarity::Negative) => sugeno_negative(x, mu)?,
        (Carrier::Capacity(mu), IntegralArg::Shilkret, Polarity::Symmetric) => {
            shilkret_symmetric(x, mu)?
        }
        (Carrier::Capacity(mu), IntegralArg::Sugeno, Polarity::Symmetric) => {
            sugeno_symmetric(x, mu)?
        }
        (Carrier::BiCapacity(mb), IntegralArg::Choquet, Polarity::Bipolar) => {
            bipolar_choquet(x, mb)?
        }
        (Carrier::BiCapacity(mb), IntegralArg::Shilkret, Polarity::Bipolar) => {
            bipolar_shilkret(x, mb, variant)?
        }
        (Carrier::BiCapacity(mb), IntegralArg::Sugeno, Polarity::Bipolar) => {
            bipolar_sugeno(x, mb, variant)?
        }
        _ => return Err(unsupported(s)),
    };
    Ok(value)
}

struct Scored {
    header: String,
    table: AlternativesTable,
    values: Vec<f64>,
}

fn compute_scores(a: &ScoreArgs) -> Result<Scored, Error> {
    let s = &a.selection;
    let variant = variant_of(s)?;
    let scale = input_scale(s)?;
    let (carrier, print) = load_carrier(&a.carrier, s.polarity)?;
    let table = load_alternatives(&a.alternatives, scale)?;
    let values = table
        .rows()
        .par_iter()
        .map(|x| evaluate(s, variant, &carrier, x))
        .collect::<Result<Vec<f64>, Error>>()?;
    let tolerance = if s.polarity == Polarity::Bipolar {
        SCALE_SLACK
    } else {
        0.0
    };
    let header = format!(
        "\"integral\": {}, \"polarity\": {}, \"variant\": {}, \"fingerprint\": {}, \"tolerance\": {}",
        json_str(s.integral.to_possible_value().expect("no skipped variants").get_name()),
        json_str(s.polarity.as_str()),
        json_str(variant.as_str()),
        json_str(&print),
        format_value(tolerance)
    );
    Ok(Scored {
        header,
        table,
        values,
    })
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn score(a: &ScoreArgs) -> Result<String, Error> {
    let scored = compute_scores(a)?;
    let mut out = String::new();
    match a.format {
        Format::Table => {
            out.push_str("id,value\n");
            for ((id, _), v) in scored.table.iter().zip(&scored.values) {
                writeln!(out, "{},{}", csv_field(id), format_value(*v)).unwrap();
            }
        }
        Format::Json => {
            let rows: Vec<String> = scored
                .table
                .iter()
                .zip(&scored.values)
                .map(|((id, _), v)| {
                    format!(
                        "{{\"id\": {}, \"value\": {}}}",
                        json_str(id),
                        format_value(*v)
                    )
                })
                .collect();
            writeln!(
                out,
                "{{{}, \"rows\": [{}]}}",
                scored.header,
                rows.join(", ")
            )
            .unwrap();
        }
    }
    Ok(out)
}

/// Positions sorted by value, best first, ties in input order, with competition ranks.
pub fn ranking(values: &[f64]) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    let mut ranked: Vec<(usize, usize)> = Vec::with_capacity(order.len());
    for (k, &i) in order.iter().enumerate() {
        let rank = match ranked.last() {
            Some(&(r, prev)) if values[prev] == values[i] => r,
            _ => k + 1,
        };
        ranked.push((rank, i));
    }
    ranked
}

fn rank(a: &ScoreArgs) -> Result<String, Error> {
    let scored = compute_scores(a)?;
    let ids = scored.table.ids();
    let ranked = ranking(&scored.values);
    let mut out = String::new();
    match a.format {
        Format::Table => {
            out.push_str("rank,id,value\n");
            for &(r, i) in &ranked {
                writeln!(
                    out,
                    "{r},{},{}",
                    csv_field(&ids[i]),
                    format_value(scored.values[i])
                )
                .unwrap();
            }
        }
        Format::Json => {
            let rows: Vec<String> = ranked
                .iter()
                .map(|&(r, i)| {
                    format!(
                        "{{\"rank\": {r}, \"id\": {}, \"value\": {}}}",
                        json_str(&ids[i]),
                        format_value(scored.values[i])
                    )
                })
                .collect();
            writeln!(
                out,
                "{{{}, \"ranking\": [{}]}}",
                scored.header,
                rows.join(", ")
            )
            .unwrap();
        }
    }
    Ok(out)
}

fn family_of(s: &IntegralSelection, variant: Variant) -> Result<Family, Error> {
    Ok(match (s.integral, s.polarity) {
        (IntegralArg::Choquet, Polarity::Classic) => Family::Choquet,
        (IntegralArg::Shilkret, Polarity::Classic) => Family::Shilkret,
        (IntegralArg::Shilkret, Polarity::Negative) => Family::ShilkretNegative,
        (IntegralArg::Sugeno, Polarity::Classic) => Family::Sugeno,
        (IntegralArg::Choquet, Polarity::Bipolar) => Family::BipolarChoquet,
        (IntegralArg::Shilkret, Polarity::Bipolar) => Family::BipolarShilkret(variant),
        (IntegralArg::Sugeno, Polarity::Bipolar) => Family::BipolarSugeno(variant),
        _ => {
            return Err(Error::Usage(format!(
                "no axiom bundle for the {} integral with {} polarity",
                s.integral
                    .to_possible_value()
                    .expect("no skipped variants")
                    .get_name(),
                s.polarity.as_str()
            )))
        }
    })
}

fn demo_scale(polarity: Polarity) -> Interval {
    match polarity {
        Polarity::Classic => Interval::unit(),
        Polarity::Negative => Interval::negative_unit(),
        Polarity::Symmetric | Polarity::Bipolar => Interval::bipolar(),
    }
}

/// Every axiom defined on `scale`, keeping only the chosen maxitivity variant.
fn default_axioms(scale: Interval, variant: Variant) -> Vec<Axiom> {
    Axiom::ALL
        .into_iter()
        .filter(|a| match a {
            Axiom::BipolarComonotoneMaxitivity(v) => *v == variant,
            _ => true,
        })
        .filter(|a| a.check_scale(scale).is_ok())
        .collect()
}

struct Audit {
    target: String,
    fingerprint: Option<String>,
    reports: Vec<AxiomReport>,
    roundtrip_exact: Option<bool>,
}

impl Audit {
    fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed) && self.roundtrip_exact != Some(false)
    }
}

fn check(a: &CheckArgs) -> Result<Outcome, Error> {
    let s = &a.selection;
    let variant = match s.integral {
        IntegralArg::Mean | IntegralArg::Max => s.variant.unwrap_or_default(),
        _ => variant_of(s)?,
    };
    let audit = match s.integral {
        IntegralArg::Mean | IntegralArg::Max => {
            let (n, print) = match &a.carrier {
                Some(path) => {
                    let (carrier, print) = load_carrier(path, s.polarity)?;
                    (a.criteria.unwrap_or(carrier.n()), Some(print))
                }
                None => (a.criteria.unwrap_or(3), None),
            };
            let scale = demo_scale(s.polarity);
            let g = if s.integral == IntegralArg::Mean {
                Aggregator::mean(n, scale)?
            } else {
                Aggregator::coordinate_max(n, scale)?
            };
            let axioms = a
                .axioms
                .clone()
                .unwrap_or_else(|| default_axioms(scale, variant));
            Audit {
                target: format!("{} on {scale}^{n}", g.name()),
                fingerprint: print,
                reports: check_axioms(&g, &axioms, a.trials, a.seed, a.eps)?,
                roundtrip_exact: None,
            }
        }
        _ => {
            let family = family_of(s, variant)?;
            let path = a
                .carrier
                .as_ref()
                .ok_or_else(|| Error::Usage("--carrier is required for integrals".into()))?;
            let (carrier, print) = load_carrier(path, s.polarity)?;
            match &a.axioms {
                Some(axioms) => Audit {
                    target: family.to_string(),
                    fingerprint: Some(print),
                    reports: check_axioms(
                        &family.aggregator(&carrier)?,
                        axioms,
                        a.trials,
                        a.seed,
                        a.eps,
                    )?,
                    roundtrip_exact: None,
                },
                None => {
                    let suite =
                        run_characterization_suite(family, &carrier, a.trials, a.seed, a.eps)?;
                    Audit {
                        target: family.to_string(),
                        fingerprint: Some(print),
                        reports: suite.reports,
                        roundtrip_exact: Some(suite.roundtrip_exact),
                    }
                }
            }
        }
    };
    let stdout = match a.format {
        Format::Table => render_audit(&audit),
        Format::Json => {
            let value = serde_json::json!({
                "target": audit.target,
                "fingerprint": audit.fingerprint,
                "reports": audit.reports,
                "roundtrip_exact": audit.roundtrip_exact,
                "passed": audit.passed(),
            });
            serde_json::to_string_pretty(&value).expect("reports serialize") + "\n"
        }
    };
    Ok(Outcome {
        code: if audit.passed() { 0 } else { EXIT_AUDIT_FAILED },
        stdout,
        stderr: String::new(),
    })
}

/// Witnesses printed per failing axiom in table output.
const SHOWN_WITNESSES: usize = 3;

fn render_vector(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| format_value(*x)).collect();
    format!("({})", parts.join(", "))
}

fn render_audit(audit: &Audit) -> String {
    let mut out = format!("target: {}\n", audit.target);
    if let Some(print) = &audit.fingerprint {
        writeln!(out, "carrier: {print}").unwrap();
    }
    for r in &audit.reports {
        if r.passed {
            writeln!(out, "PASS {} ({} trials)", r.axiom, r.trials).unwrap();
            continue;
        }
        writeln!(
            out,
            "FAIL {} ({} trials, {} violations)",
            r.axiom, r.trials, r.violation_count
        )
        .unwrap();
        for v in r.violations.iter().take(SHOWN_WITNESSES) {
            write!(
                out,
                "  witness trial {}: lhs={} rhs={} gap={}",
                v.trial,
                format_value(v.lhs),
                format_value(v.rhs),
                format_value(v.gap)
            )
            .unwrap();
            if !v.note.is_empty() {
                write!(out, " {}", v.note).unwrap();
            }
            out.push('\n');
            for x in &v.inputs {
                writeln!(out, "    input {}", render_vector(x)).unwrap();
            }
        }
    }
    if let Some(exact) = audit.roundtrip_exact {
        writeln!(
            out,
            "elicitation round-trip: {}",
            if exact { "exact" } else { "MISMATCH" }
        )
        .unwrap();
    }
    writeln!(
        out,
        "result: {}",
        if audit.passed() { "PASS" } else { "FAIL" }
    )
    .unwrap();
    out
}

fn bind(s: &IntegralSelection, variant: Variant, carrier: &Carrier) -> Result<Aggregator, Error> {
    Ok(match (carrier, s.integral, s.polarity) {
        (Carrier::Capacity(mu), IntegralArg::Choquet, Polarity::Classic) => {
            Aggregator::choquet(mu.clone())
        }
        (Carrier::Capacity(mu), IntegralArg::Shilkret, Polarity::Classic) => {
            Aggregator::shilkret(mu.clone())
        }
        (Carrier::Capacity(mu), IntegralArg::Sugeno, Polarity::Classic) => {
            Aggregator::sugeno(Measure::from_capacity(mu))
        }
        (Carrier::Capacity(mu), IntegralArg::Shilkret, Polarity::Negative) => {
            Aggregator::shilkret_negative(mu.clone())
        }
        (Carrier::Capacity(mu), IntegralArg::Sugeno, Polarity::Negative) => {
            Aggregator::sugeno_negative(mu.clone())
        }
        (Carrier::Capacity(mu), IntegralArg::Shilkret, Polarity::Symmetric) => {
            Aggregator::shilkret_symmetric(mu.clone())
        }
        (Carrier::Capacity(mu), IntegralArg::Sugeno, Polarity::Symmetric) => {
            Aggregator::sugeno_symmetric(mu.clone())
        }
        (Carrier::BiCapacity(mb), IntegralArg::Choquet, Polarity::Bipolar) => {
            Aggregator::bipolar_choquet(mb.clone())
        }
        (Carrier::BiCapacity(mb), IntegralArg::Shilkret, Polarity::Bipolar) => {
            Aggregator::bipolar_shilkret(mb.clone(), variant)
        }
        (Carrier::BiCapacity(mb), IntegralArg::Sugeno, Polarity::Bipolar) => {
            Aggregator::bipolar_sugeno(mb.clone(), variant)
        }
        _ => return Err(unsupported(s)),
    })
}

fn elicit(a: &ElicitArgs) -> Result<String, Error> {
    let s = &a.selection;
    let variant = variant_of(s)?;
    let (carrier, _) = load_carrier(&a.carrier, s.polarity)?;
    let g = bind(s, variant, &carrier)?;
    let (text, exact) = match &carrier {
        Carrier::Capacity(mu) => {
            let elicited = elicit_capacity(&g)?;
            (save_capacity(&elicited), elicited.table() == mu.table())
        }
        Carrier::BiCapacity(mb) => {
            let elicited = elicit_bicapacity(&g)?;
            (save_bicapacity(&elicited), elicited.table() == mb.table())
        }
    };
    let mut out = String::new();
    match &a.out {
        Some(path) => std::fs::write(path, &text).map_err(|source| crate::io::IoError::Write {
            path: path.clone(),
            source,
        })?,
        None => out.push_str(&text),
    }
    writeln!(out, "exact-roundtrip: {exact}").unwrap();
    Ok(out)
}
