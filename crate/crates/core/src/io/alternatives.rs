use std::collections::HashSet;
use std::fs;
use std::path::Path;

use super::IoError;
use crate::model::{Interval, ScoreVector};

/// Named score vectors sharing one length and one scale.
#[derive(Debug, Clone, PartialEq)]
pub struct AlternativesTable {
    criteria: Vec<String>,
    ids: Vec<String>,
    rows: Vec<ScoreVector>,
}

impl AlternativesTable {
    /// Number of criteria; 0 for a file without a header.
    pub fn n(&self) -> usize {
        self.criteria.len()
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn rows(&self) -> &[ScoreVector] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &ScoreVector)> {
        self.ids.iter().map(String::as_str).zip(&self.rows)
    }
}

/// Parse comma-separated text with header `id,c1,...,cn`, checking every score against `scale`.
pub fn parse_alternatives(text: &str, scale: Interval) -> Result<AlternativesTable, IoError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let parse_error = |e: csv::Error| {
        let line = e.position().map_or(0, |p| p.line() as usize);
        IoError::Parse {
            line,
            column: 0,
            message: e.to_string(),
        }
    };
    let header = match records.next() {
        None => {
            return Ok(AlternativesTable {
                criteria: Vec::new(),
                ids: Vec::new(),
                rows: Vec::new(),
            })
        }
        Some(r) => r.map_err(parse_error)?,
    };
    if header.len() < 2 || &header[0] != "id" {
        return Err(IoError::Parse {
            line: 1,
            column: 1,
            message: "header must read `id,c1,...,cn` with at least one criterion".into(),
        });
    }
    let criteria: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    let mut ids = Vec::new();
    let mut rows = Vec::new();
    let mut seen = HashSet::new();
    for record in records {
        let record = record.map_err(parse_error)?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != header.len() {
            return Err(IoError::RaggedRow {
                line,
                expected: header.len(),
                found: record.len(),
            });
        }
        let id = record[0].to_string();
        if !seen.insert(id.clone()) {
            return Err(IoError::DuplicateId { line, id });
        }
        let scores = record
            .iter()
            .skip(1)
            .enumerate()
            .map(|(i, field)| {
                let value: f64 = field.parse().map_err(|_| IoError::Parse {
                    line,
                    column: i + 2,
                    message: format!("`{field}` is not a number"),
                })?;
                if scale.contains(value) {
                    Ok(value)
                } else {
                    Err(IoError::ScaleViolation {
                        line,
                        criterion: i + 1,
                        value,
                        scale,
                    })
                }
            })
            .collect::<Result<Vec<f64>, IoError>>()?;
        rows.push(ScoreVector::new(scores, scale)?);
        ids.push(id);
    }
    Ok(AlternativesTable {
        criteria,
        ids,
        rows,
    })
}

pub fn load_alternatives(
    path: impl AsRef<Path>,
    scale: Interval,
) -> Result<AlternativesTable, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_alternatives(&text, scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_row_table() {
        let t = parse_alternatives("id,c1,c2\na,0.8,-0.5\n", Interval::bipolar()).unwrap();
        assert_eq!(t.ids(), &["a".to_string()]);
        assert_eq!(t.rows()[0].scores(), &[0.8, -0.5]);
        assert_eq!(t.n(), 2);
    }

    #[test]
    fn ragged_and_duplicate_rows() {
        let err = parse_alternatives("id,c1,c2\na,0.1,0.2\nb,0.3\n", Interval::unit()).unwrap_err();
        assert!(
            matches!(
                err,
                IoError::RaggedRow {
                    line: 3,
                    expected: 3,
                    found: 2
                }
            ),
            "{err:?}"
        );
        let err = parse_alternatives("id,c1\na,0.1\na,0.2\n", Interval::unit()).unwrap_err();
        assert!(matches!(err, IoError::DuplicateId { line: 3, ref id } if id == "a"));
    }

    #[test]
    fn scale_and_number_errors() {
        let err = parse_alternatives("id,c1,c2\na,0.1,1.5\n", Interval::bipolar()).unwrap_err();
        assert!(matches!(
            err,
            IoError::ScaleViolation {
                line: 2,
                criterion: 2,
                ..
            }
        ));
        let err = parse_alternatives("id,c1\na,abc\n", Interval::bipolar()).unwrap_err();
        assert!(matches!(
            err,
            IoError::Parse {
                line: 2,
                column: 2,
                ..
            }
        ));
        assert!(parse_alternatives("name,c1\na,0.1\n", Interval::bipolar()).is_err());
    }

    #[test]
    fn empty_inputs() {
        assert!(parse_alternatives("", Interval::unit()).unwrap().is_empty());
        let t = parse_alternatives("id,c1,c2\n", Interval::unit()).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.n(), 2);
    }
}
