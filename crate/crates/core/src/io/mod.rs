//! Carrier files, alternatives tables and number rendering.

mod alternatives;
mod carrier;

use std::path::PathBuf;

use thiserror::Error;

use crate::model::{Interval, ModelError};

pub use alternatives::{load_alternatives, parse_alternatives, AlternativesTable};
pub use carrier::{
    fingerprint, load_bicapacity, load_capacity, parse_bicapacity, parse_capacity, save_bicapacity,
    save_capacity, write_bicapacity, write_capacity,
};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("entry {entry}: {message}")]
    Entry { entry: usize, message: String },
    #[error("entry {entry}: {source}")]
    EntryModel {
        entry: usize,
        #[source]
        source: ModelError,
    },
    #[error("invalid carrier: {0}")]
    Invalid(#[from] ModelError),
    #[error("line {line}: expected {expected} fields, found {found}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: duplicate id `{id}`")]
    DuplicateId { line: usize, id: String },
    #[error("line {line}: score {value} of criterion {criterion} is outside {scale}")]
    ScaleViolation {
        line: usize,
        criterion: usize,
        value: f64,
        scale: Interval,
    },
}

/// Render with 12 significant digits, `%g` style: trailing zeros dropped,
/// exponent form below `1e-5` or from `1e12` on.
pub fn format_value(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_value(0.25), "0.25");
        assert_eq!(format_value(-0.0), "0");
        assert_eq!(format_value(1.0), "1");
        assert_eq!(format_value(0.1 + 0.2), "0.3");
        assert_eq!(format_value(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_value(-2.0 / 3.0), "-0.666666666667");
        assert_eq!(format_value(123456.0), "123456");
        assert_eq!(format_value(1e-7), "1e-07");
        assert_eq!(format_value(2.5e13), "2.5e+13");
        assert_eq!(format_value(0.0001), "0.0001");
        assert_eq!(format_value(999999999999.5), "1e+12");
    }
}
