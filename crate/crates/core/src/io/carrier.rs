//! Carrier files.
//!
//! A carrier is a JSON document `{"n": 2, "entries": [...]}` whose entries
//! read `{"pos": [1], "neg": [2], "value": 0.2}`. Capacity entries have no
//! `neg`. The boundary entries may be omitted and default to their forced
//! values.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use sha2::{Digest, Sha256};

use super::IoError;
use crate::model::{
    validate_bicapacity, validate_capacity, BiCapacity, Capacity, Coalition, SignedCoalition,
};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCarrier {
    n: usize,
    entries: Vec<RawEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    pos: Vec<usize>,
    #[serde(default)]
    neg: Option<Vec<usize>>,
    value: f64,
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_raw(text: &str) -> Result<RawCarrier, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn coalition(entry: usize, side: &str, members: &[usize]) -> Result<Coalition, IoError> {
    if members.windows(2).any(|w| w[0] >= w[1]) {
        return Err(IoError::Entry {
            entry,
            message: format!("`{side}` must be strictly increasing"),
        });
    }
    Coalition::from_members(members).map_err(|source| IoError::EntryModel { entry, source })
}

pub fn parse_capacity(text: &str) -> Result<Capacity, IoError> {
    let raw = parse_raw(text)?;
    let n = raw.n;
    let mut entries = Vec::with_capacity(raw.entries.len() + 2);
    for (i, e) in raw.entries.iter().enumerate() {
        if e.neg.is_some() {
            return Err(IoError::Entry {
                entry: i,
                message: "capacity entries have no `neg`".into(),
            });
        }
        entries.push((coalition(i, "pos", &e.pos)?, e.value));
    }
    if n <= 20 {
        for (at, value) in [(Coalition::EMPTY, 0.0), (Coalition::full(n), 1.0)] {
            if !entries.iter().any(|(a, _)| *a == at) {
                entries.push((at, value));
            }
        }
    }
    Ok(validate_capacity(n, entries)?)
}

pub fn parse_bicapacity(text: &str) -> Result<BiCapacity, IoError> {
    let raw = parse_raw(text)?;
    let n = raw.n;
    let mut entries = Vec::with_capacity(raw.entries.len() + 3);
    for (i, e) in raw.entries.iter().enumerate() {
        let neg = e.neg.as_deref().ok_or_else(|| IoError::Entry {
            entry: i,
            message: "bi-capacity entries need `neg`".into(),
        })?;
        let pair = SignedCoalition::new(coalition(i, "pos", &e.pos)?, coalition(i, "neg", neg)?)
            .map_err(|source| IoError::EntryModel { entry: i, source })?;
        entries.push((pair, e.value));
    }
    if n <= 20 {
        for (at, value) in [
            (SignedCoalition::EMPTY, 0.0),
            (SignedCoalition::top(n), 1.0),
            (SignedCoalition::bottom(n), -1.0),
        ] {
            if !entries.iter().any(|(p, _)| *p == at) {
                entries.push((at, value));
            }
        }
    }
    Ok(validate_bicapacity(n, entries)?)
}

pub fn load_capacity(path: impl AsRef<Path>) -> Result<Capacity, IoError> {
    parse_capacity(&read(path.as_ref())?)
}

pub fn load_bicapacity(path: impl AsRef<Path>) -> Result<BiCapacity, IoError> {
    parse_bicapacity(&read(path.as_ref())?)
}

/// Shortest text that parses back to the same value; negative zero prints as `0`.
fn number(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else {
        v.to_string()
    }
}

fn members(c: Coalition) -> String {
    let list: Vec<String> = c.members().map(|i| i.to_string()).collect();
    format!("[{}]", list.join(", "))
}

fn render(n: usize, mut entries: Vec<(SignedCoalition, f64)>, bipolar: bool) -> String {
    entries.sort_by_key(|(p, _)| {
        (
            p.pos().len() + p.neg().len(),
            p.pos().mask(),
            p.neg().mask(),
        )
    });
    let mut out = format!("{{\n  \"n\": {n},\n  \"entries\": [");
    for (k, (p, v)) in entries.iter().enumerate() {
        out.push_str(if k == 0 { "\n" } else { ",\n" });
        write!(out, "    {{\"pos\": {}", members(p.pos())).unwrap();
        if bipolar {
            write!(out, ", \"neg\": {}", members(p.neg())).unwrap();
        }
        write!(out, ", \"value\": {}}}", number(*v)).unwrap();
    }
    if !entries.is_empty() {
        out.push_str("\n  ");
    }
    out.push_str("]\n}\n");
    out
}

/// Canonical text: entries ordered by size, then positive mask, then negative mask; defaults omitted.
pub fn save_capacity(mu: &Capacity) -> String {
    let n = mu.n();
    let full = Coalition::full(n);
    let entries = Coalition::all(n)
        .filter(|&a| a != Coalition::EMPTY && a != full)
        .map(|a| {
            (
                SignedCoalition::new_unchecked(a, Coalition::EMPTY),
                mu.value(a),
            )
        })
        .collect();
    render(n, entries, false)
}

pub fn save_bicapacity(mb: &BiCapacity) -> String {
    let n = mb.n();
    let defaults = [
        SignedCoalition::EMPTY,
        SignedCoalition::top(n),
        SignedCoalition::bottom(n),
    ];
    let entries = SignedCoalition::all(n)
        .filter(|p| !defaults.contains(p))
        .map(|p| (p, mb.value(p)))
        .collect();
    render(n, entries, true)
}

fn write(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Write {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_capacity(mu: &Capacity, path: impl AsRef<Path>) -> Result<(), IoError> {
    write(path.as_ref(), &save_capacity(mu))
}

pub fn write_bicapacity(mb: &BiCapacity, path: impl AsRef<Path>) -> Result<(), IoError> {
    write(path.as_ref(), &save_bicapacity(mb))
}

/// Hex SHA-256 of a canonical carrier text.
pub fn fingerprint(canonical: &str) -> String {
    Sha256::digest(canonical.as_bytes())
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            write!(s, "{b:02x}").unwrap();
            s
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{LatticePoint, ModelError};

    const EXAMPLE: &str = r#"{
  "n": 2,
  "entries": [
    {"pos": [], "neg": [1], "value": -0.6},
    {"pos": [], "neg": [2], "value": -0.3},
    {"pos": [1], "neg": [], "value": 0.5},
    {"pos": [2], "neg": [], "value": 0.4},
    {"pos": [1], "neg": [2], "value": 0.2},
    {"pos": [2], "neg": [1], "value": -0.2}
  ]
}
"#;

    #[test]
    fn example_bicapacity_is_canonical() {
        let mb = parse_bicapacity(EXAMPLE).unwrap();
        assert_eq!(mb.value(SignedCoalition::top(2)), 1.0);
        assert_eq!(save_bicapacity(&mb), EXAMPLE);
        assert_eq!(parse_bicapacity(&save_bicapacity(&mb)).unwrap(), mb);
    }

    #[test]
    fn minimal_files_default_the_boundary() {
        let mb = parse_bicapacity(r#"{"n": 1, "entries": []}"#).unwrap();
        assert_eq!(mb.table().len(), 3);
        assert_eq!(
            save_bicapacity(&mb),
            "{\n  \"n\": 1,\n  \"entries\": []\n}\n"
        );
        let mu = parse_capacity(r#"{"n": 1, "entries": []}"#).unwrap();
        assert_eq!(mu.table(), &[0.0, 1.0]);
    }

    #[test]
    fn overlapping_pair_is_rejected() {
        let err =
            parse_bicapacity(r#"{"n": 1, "entries": [{"pos": [1], "neg": [1], "value": 0}]}"#)
                .unwrap_err();
        assert!(matches!(
            err,
            IoError::EntryModel {
                entry: 0,
                source: ModelError::DisjointnessViolation { .. }
            }
        ));
    }

    #[test]
    fn schemas_do_not_mix() {
        assert!(matches!(
            parse_capacity(EXAMPLE),
            Err(IoError::Entry { entry: 0, .. })
        ));
        let cap =
            r#"{"n": 2, "entries": [{"pos": [1], "value": 0.3}, {"pos": [2], "value": 0.3}]}"#;
        assert!(parse_capacity(cap).is_ok());
        assert!(matches!(
            parse_bicapacity(cap),
            Err(IoError::Entry { entry: 0, .. })
        ));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_capacity("{\n  \"n\": 2,\n  \"entries\": [oops]\n}").unwrap_err();
        assert!(matches!(err, IoError::Parse { line: 3, .. }), "{err:?}");
        assert!(matches!(
            parse_capacity(r#"{"n": 2, "entries": [{"pos": [2, 1], "value": 0.5}]}"#),
            Err(IoError::Entry { .. })
        ));
    }

    #[test]
    fn validation_errors_name_the_entry() {
        let err =
            parse_capacity(r#"{"n": 2, "entries": [{"pos": [1], "value": 0.6}]}"#).unwrap_err();
        assert!(matches!(
            err,
            IoError::Invalid(ModelError::MissingEntry(LatticePoint::Set(c))) if c == Coalition::from_members(&[2]).unwrap()
        ));
    }

    #[test]
    fn reload_is_bit_exact() {
        let mu = Capacity::from_table(2, vec![0.0, 0.219552367045458, 0.18657752171628839, 1.0])
            .unwrap();
        assert_eq!(parse_capacity(&save_capacity(&mu)).unwrap(), mu);
    }

    #[test]
    fn capacity_round_trip_and_fingerprint() {
        let mu = Capacity::from_table(2, vec![0.0, 0.1 + 0.2, 0.4, 1.0]).unwrap();
        let text = save_capacity(&mu);
        assert!(text.contains("0.30000000000000004"));
        assert_eq!(parse_capacity(&text).unwrap(), mu);
        assert_eq!(
            fingerprint(&text),
            fingerprint(&save_capacity(&parse_capacity(&text).unwrap()))
        );
        assert_eq!(fingerprint("").len(), 64);
        assert_eq!(
            fingerprint("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
