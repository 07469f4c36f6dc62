//! Plain-text series files.
//!
//! ```text
//! # comment
//! name=rect-d2
//! d=2
//! sign=alternating
//! kind=mayer_b
//! 1 1
//! 2 -7/2
//! 3 1.25e1
//! ```
//!
//! Indices run contiguously from 1, or from the value of a `first=<n>`
//! header. Alpha files share the headers and carry `<n> <i> <value>` lines.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use dashu::base::Sign;
use dashu::rational::RBig;

use super::{check_sign_pattern, AlphaTable, LatticeMeta, SeriesKind, SeriesTable, SignCheck, SignConvention};
use crate::error::{Error, Result};
use crate::numerics::Number;

#[derive(Default)]
struct Headers {
    name: Option<String>,
    d: Option<RBig>,
    sign: Option<SignConvention>,
    kind: Option<SeriesKind>,
    first: Option<usize>,
}

impl Headers {
    fn apply(&mut self, key: &str, value: &str, line: usize) -> Result<()> {
        let err = |message: String| Error::Parse { line, message };
        match key {
            "name" => self.name = Some(value.to_string()),
            "d" => {
                let d = Number::parse_exact(value).map_err(err)?;
                if d.sign() != Sign::Positive || d.is_zero() {
                    return Err(err(format!("d must be positive, got {value}")));
                }
                self.d = Some(d);
            }
            "sign" => {
                self.sign = Some(match value {
                    "alternating" => SignConvention::Alternating,
                    "positive" => SignConvention::AllPositive,
                    _ => return Err(err(format!("unknown sign convention `{value}`"))),
                })
            }
            "kind" => {
                self.kind = Some(
                    SeriesKind::from_keyword(value)
                        .ok_or_else(|| err(format!("unknown kind `{value}`")))?,
                )
            }
            "first" => {
                let f: usize = value
                    .parse()
                    .map_err(|_| err(format!("bad first index `{value}`")))?;
                if f == 0 {
                    return Err(err("first index must be at least 1".into()));
                }
                self.first = Some(f);
            }
            _ => return Err(err(format!("unknown header `{key}`"))),
        }
        Ok(())
    }

    fn meta(&self) -> LatticeMeta {
        LatticeMeta {
            name: self.name.clone().unwrap_or_else(|| "unnamed".into()),
            d: self.d.clone(),
            kind: self.kind.unwrap_or(SeriesKind::Other),
        }
    }
}

/// Splits `text` into header assignments and data lines (with 1-based line
/// numbers), applying the headers as it goes.
fn scan(text: &str, headers: &mut Headers) -> Result<Vec<(usize, Vec<String>)>> {
    let mut data = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if let Some((k, v)) = t.split_once('=') {
            headers.apply(k.trim(), v.trim(), line)?;
        } else {
            data.push((line, t.split_whitespace().map(str::to_string).collect()));
        }
    }
    Ok(data)
}

fn parse_index(field: &str, line: usize) -> Result<usize> {
    field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("bad index `{field}`"),
    })
}

/// Parses and validates a series file. Missing `sign=` defaults to
/// alternating.
pub fn parse_series_file(text: &str) -> Result<SeriesTable> {
    let mut headers = Headers::default();
    let data = scan(text, &mut headers)?;

    let mut entries: BTreeMap<usize, (usize, RBig)> = BTreeMap::new();
    for (line, fields) in data {
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected `<n> <value>`, found {} fields", fields.len()),
            });
        }
        let n = parse_index(&fields[0], line)?;
        let value = Number::parse_exact(&fields[1]).map_err(|message| Error::Parse { line, message })?;
        match entries.entry(n) {
            Entry::Occupied(_) => {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate index {n}"),
                })
            }
            Entry::Vacant(v) => {
                v.insert((line, value));
            }
        }
    }

    let first = headers.first.unwrap_or(1);
    let mut expected = first;
    let mut values = Vec::with_capacity(entries.len());
    for (n, (line, value)) in entries {
        if n != expected {
            return Err(Error::Parse {
                line,
                message: if n < first {
                    format!("index {n} precedes first index {first}")
                } else {
                    format!("gap in indices: expected {expected}, found {n}")
                },
            });
        }
        values.push(value);
        expected += 1;
    }
    if values.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: "no data lines".into(),
        });
    }

    let sign = headers.sign.unwrap_or(SignConvention::Alternating);
    let table = SeriesTable::unchecked(first, values, sign, headers.meta())?;
    match check_sign_pattern(&table) {
        SignCheck::Clean => Ok(table),
        SignCheck::Violation { n, value } => Err(Error::SignViolation {
            n,
            value: value.to_string(),
        }),
    }
}

/// Writes a table in the format [`parse_series_file`] reads.
pub fn serialize_series(series: &SeriesTable) -> String {
    let meta = series.meta();
    let mut out = String::new();
    out.push_str(&format!("name={}\n", meta.name));
    if let Some(d) = &meta.d {
        out.push_str(&format!("d={}\n", Number::Rational(d.clone())));
    }
    out.push_str(&format!("sign={}\n", series.sign_convention().keyword()));
    out.push_str(&format!("kind={}\n", meta.kind.keyword()));
    if series.first() != 1 {
        out.push_str(&format!("first={}\n", series.first()));
    }
    for (n, v) in series.iter() {
        out.push_str(&format!("{n} {}\n", Number::Rational(v.clone())));
    }
    out
}

/// Parses an alpha file (`<n> <i> <value>` lines).
pub fn parse_alpha_file(text: &str) -> Result<AlphaTable> {
    let mut headers = Headers::default();
    let data = scan(text, &mut headers)?;
    let mut table = AlphaTable::new(headers.meta());
    for (line, fields) in data {
        if fields.len() != 3 {
            return Err(Error::Parse {
                line,
                message: format!("expected `<n> <i> <value>`, found {} fields", fields.len()),
            });
        }
        let n = parse_index(&fields[0], line)?;
        let i = parse_index(&fields[1], line)?;
        let value = Number::parse_exact(&fields[2]).map_err(|message| Error::Parse { line, message })?;
        table.insert(n, i, value).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::gen_rect_d1;

    #[test]
    fn minimal_alternating_file() {
        let t = parse_series_file("sign=alternating\n1 1\n2 -3/2\n3 10/3\n").unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.get(3), Some(&RBig::from_parts(10.into(), 3u8.into())));
        assert_eq!(t.sign_convention(), SignConvention::Alternating);
    }

    #[test]
    fn sign_violation_reports_index() {
        let err = parse_series_file("sign=alternating\n1 1\n2 +3/2\n").unwrap_err();
        assert!(matches!(err, Error::SignViolation { n: 2, .. }));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            parse_series_file("1 1\n1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_series_file("sign=positive\n1 1\n3 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_series_file("2 -1\n3 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_series_file("1 1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_series_file("bogus=1\n1 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_series_file("d=-2\n1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_series_file("# only a comment\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn first_header_and_decimals() {
        let t = parse_series_file("first=12\nsign=alternating\n12 -2.5e3\n13 1.5\n").unwrap();
        assert_eq!(t.first(), 12);
        assert_eq!(t.get(12), Some(&RBig::from(-2500)));
    }

    #[test]
    fn serialize_round_trip() {
        let t = gen_rect_d1(20);
        let back = parse_series_file(&serialize_series(&t)).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn alpha_file() {
        let a = parse_alpha_file("name=toy\n2 1 3/4\n2 2 -1\n").unwrap();
        assert_eq!(a.get(2, 1), Some(&RBig::from_parts(3.into(), 4u8.into())));
        // i = 0 lies outside the window for n = 2
        assert!(matches!(parse_alpha_file("2 0 1\n"), Err(Error::Parse { line: 1, .. })));
    }
}
