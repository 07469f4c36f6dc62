//! Rendering of command results as aligned text, CSV, or JSON.
//!
//! Text and CSV put parameters in rows and lattices in columns, rounded to
//! [`DISPLAY_DIGITS`] significant digits. JSON keeps every value at full
//! precision and adds a rounded `display` block.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::approximant::AccuracyCheck;
use crate::duality::AsymptoticExponent;
use crate::fitting::{RatioPolynomial, ScanRow};
use crate::metrics::{ComparisonReport, GrowthDifference, DISPLAY_DIGITS};
use crate::numerics::Number;
use crate::series::{serialize_series, LatticeMeta, SeriesTable, SignConvention};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// A header row plus data rows, rendered as text or CSV.
#[derive(Debug, Clone, Default)]
struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: Vec<String>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn to_text(&self) -> String {
        let ncol = self.header.len();
        let mut widths = vec![0; ncol];
        for row in std::iter::once(&self.header).chain(&self.rows) {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    fn render(&self, format: Format, preamble: &str) -> String {
        match format {
            Format::Text => format!("{preamble}{}", self.to_text()),
            Format::Csv => self.to_csv(),
            Format::Json => unreachable!("JSON is rendered from typed documents"),
        }
    }
}

fn show(v: &Number) -> String {
    v.display_sig(DISPLAY_DIGITS)
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

fn header_with(first: &str, names: impl IntoIterator<Item = String>) -> Vec<String> {
    std::iter::once(first.to_string()).chain(names).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEntry {
    #[serde(flatten)]
    pub report: ComparisonReport,
    pub display: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub precision: usize,
    pub reports: Vec<ReportEntry>,
}

/// Parses the JSON written by [`emit`].
pub fn parse_report_json(text: &str) -> serde_json::Result<ReportDocument> {
    serde_json::from_str(text)
}

/// Renders comparison reports, one column per lattice.
pub fn emit(reports: &[ComparisonReport], format: Format, precision: usize) -> String {
    if format == Format::Json {
        let doc = ReportDocument {
            precision,
            reports: reports
                .iter()
                .map(|r| ReportEntry {
                    report: r.clone(),
                    display: r.display_map(),
                })
                .collect(),
        };
        return json(&doc);
    }
    let mut table = Table::new(header_with("param", reports.iter().map(|r| r.lattice.name.clone())));
    let per_report: Vec<Vec<(String, String)>> = reports.iter().map(ComparisonReport::display_rows).collect();
    if let Some(first) = per_report.first() {
        for (i, (label, _)) in first.iter().enumerate() {
            let mut row = vec![label.clone()];
            row.extend(per_report.iter().map(|rows| rows.get(i).map(|(_, v)| v.clone()).unwrap_or_default()));
            table.push(row);
        }
        let mut anchors = vec!["anchors".to_string()];
        anchors.extend(reports.iter().map(|r| {
            r.anchors
                .pairs()
                .iter()
                .map(|(a, b)| format!("{a}-{b}"))
                .collect::<Vec<_>>()
                .join(",")
        }));
        table.push(anchors);
    }
    let preamble = format!(
        "# precision={precision} evaluator=exponential r={}\n",
        reports
            .iter()
            .map(|r| r.r.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    table.render(format, &preamble)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitEntry {
    pub lattice: LatticeMeta,
    pub r: usize,
    pub nmax: usize,
    pub c: RatioPolynomial,
}

pub fn emit_fits(fits: &[FitEntry], format: Format, precision: usize) -> String {
    if format == Format::Json {
        #[derive(Serialize)]
        struct Doc<'a> {
            precision: usize,
            fits: &'a [FitEntry],
        }
        return json(&Doc { precision, fits });
    }
    let mut table = Table::new(header_with("param", fits.iter().map(|f| f.lattice.name.clone())));
    let width = fits.iter().map(|f| f.c.coefficients().len()).max().unwrap_or(0);
    for i in 0..width {
        let mut row = vec![format!("c_{i}")];
        row.extend(fits.iter().map(|f| f.c.coefficients().get(i).map(show).unwrap_or_default()));
        table.push(row);
    }
    table.render(format, &format!("# precision={precision}\n"))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub lattice: LatticeMeta,
    pub nmax: usize,
    pub rows: Vec<ScanRow>,
}

pub fn emit_scans(scans: &[ScanEntry], format: Format, precision: usize) -> String {
    if format == Format::Json {
        #[derive(Serialize)]
        struct Doc<'a> {
            precision: usize,
            scans: &'a [ScanEntry],
        }
        return json(&Doc { precision, scans });
    }
    let r_values: Vec<usize> = scans.first().map(|s| s.rows.iter().map(|row| row.r).collect()).unwrap_or_default();
    let names: Vec<String> = scans.iter().map(|s| s.lattice.name.clone()).collect();
    let block = |pick: fn(&ScanRow) -> &Number| {
        let mut t = Table::new(header_with("r", names.clone()));
        for (i, r) in r_values.iter().enumerate() {
            let mut row = vec![r.to_string()];
            row.extend(scans.iter().map(|s| s.rows.get(i).map(|x| show(pick(x))).unwrap_or_default()));
            t.push(row);
        }
        t
    };
    let c0 = block(|row| &row.c0);
    let c1 = block(|row| &row.c1);
    match format {
        Format::Text => format!(
            "# precision={precision}\n# c_0\n{}# c_1\n{}",
            c0.to_text(),
            c1.to_text()
        ),
        _ => {
            let mut t = Table::new(header_with("quantity", header_with("r", names.clone())));
            for (label, block) in [("c_0", &c0), ("c_1", &c1)] {
                for row in &block.rows {
                    t.push(header_with(label, row.iter().cloned()));
                }
            }
            t.to_csv()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub lattice: LatticeMeta,
    pub top_index: usize,
    pub k: AsymptoticExponent,
}

pub fn emit_ideal(entries: &[IdealEntry], format: Format, precision: usize) -> String {
    if format == Format::Json {
        #[derive(Serialize)]
        struct Doc<'a> {
            precision: usize,
            solutions: &'a [IdealEntry],
        }
        return json(&Doc {
            precision,
            solutions: entries,
        });
    }
    let mut table = Table::new(header_with("param", entries.iter().map(|e| e.lattice.name.clone())));
    let pick: [(&str, fn(&AsymptoticExponent) -> Option<&Number>); 5] = [
        ("ln_c", |k| k.ln_c.as_ref()),
        ("k_-1", |k| Some(&k.k_minus1)),
        ("k_0", |k| Some(&k.k0)),
        ("k_1", |k| Some(&k.k1)),
        ("k_2", |k| Some(&k.k2)),
    ];
    for (label, f) in pick {
        let mut row = vec![label.to_string()];
        row.extend(entries.iter().map(|e| f(&e.k).map(show).unwrap_or_default()));
        table.push(row);
    }
    let mut tops = vec!["top_index".to_string()];
    tops.extend(entries.iter().map(|e| e.top_index.to_string()));
    table.push(tops);
    table.render(format, &format!("# precision={precision}\n"))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub lattice: LatticeMeta,
    pub sign: String,
    pub r: usize,
    pub k_anchor: usize,
    pub check: AccuracyCheck,
}

pub fn emit_checks(entries: &[CheckEntry], format: Format, precision: usize) -> String {
    if format == Format::Json {
        #[derive(Serialize)]
        struct Doc<'a> {
            precision: usize,
            checks: &'a [CheckEntry],
        }
        return json(&Doc {
            precision,
            checks: entries,
        });
    }
    let mut table = Table::new(header_with("param", entries.iter().map(|e| e.lattice.name.clone())));
    let rows: [(&str, fn(&CheckEntry) -> String); 7] = [
        ("sign", |e| e.sign.clone()),
        ("r", |e| e.r.to_string()),
        ("k_anchor", |e| e.k_anchor.to_string()),
        ("epsilon", |e| show(&e.check.epsilon)),
        ("worst_index", |e| e.check.worst_index.to_string()),
        ("worst_error", |e| show(&e.check.worst_error)),
        ("status", |e| if e.check.passed { "pass".into() } else { "fail".into() }),
    ];
    for (label, f) in rows {
        let mut row = vec![label.to_string()];
        row.extend(entries.iter().map(f));
        table.push(row);
    }
    table.render(format, &format!("# precision={precision} evaluator=product\n"))
}

pub fn emit_compare(rates: &[(String, Number)], diffs: &[GrowthDifference], format: Format, precision: usize) -> String {
    if format == Format::Json {
        #[derive(Serialize)]
        struct Doc<'a> {
            precision: usize,
            k_minus1: BTreeMap<&'a str, &'a Number>,
            differences: &'a [GrowthDifference],
        }
        return json(&Doc {
            precision,
            k_minus1: rates.iter().map(|(n, k)| (n.as_str(), k)).collect(),
            differences: diffs,
        });
    }
    let mut rates_table = Table::new(header_with("param", rates.iter().map(|(n, _)| n.clone())));
    let mut row = vec!["k_-1".to_string()];
    row.extend(rates.iter().map(|(_, k)| show(k)));
    rates_table.push(row);
    let mut pairs = Table::new(vec!["first".into(), "second".into(), "|dk_-1|".into()]);
    for d in diffs {
        pairs.push(vec![d.first.clone(), d.second.clone(), show(&d.difference)]);
    }
    match format {
        Format::Text => format!(
            "# precision={precision}\n{}\n{}",
            rates_table.to_text(),
            pairs.to_text()
        ),
        _ => pairs.to_csv(),
    }
}

pub fn emit_series(series: &SeriesTable, format: Format) -> String {
    match format {
        Format::Text => serialize_series(series),
        Format::Csv => {
            let mut t = Table::new(vec!["n".into(), "value".into()]);
            for (n, v) in series.iter() {
                t.push(vec![n.to_string(), Number::Rational(v.clone()).to_string()]);
            }
            t.to_csv()
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc<'a> {
                lattice: &'a LatticeMeta,
                sign: SignConvention,
                first: usize,
                values: Vec<Number>,
            }
            json(&Doc {
                lattice: series.meta(),
                sign: series.sign_convention(),
                first: series.first(),
                values: series.iter().map(|(_, v)| Number::Rational(v.clone())).collect(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{build_report, ReportConfig};
    use crate::series::gen_rect_d1;

    #[test]
    fn empty_csv_is_header_only() {
        assert_eq!(emit(&[], Format::Csv, 25), "param\n");
    }

    #[test]
    fn d1_text_rows() {
        let report = build_report(&gen_rect_d1(20), &ReportConfig::default()).unwrap();
        let text = emit(&[report], Format::Text, 25);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# precision=25 evaluator=exponential r=6");
        assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["param", "rect-d1"]);
        let row = |label: &str| {
            lines
                .iter()
                .find(|l| l.split_whitespace().next() == Some(label))
                .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
                .unwrap()
        };
        assert_eq!(row("k_-1"), "1.3863");
        assert_eq!(row("k_0"), "-1.5000");
        assert_eq!(row("k_1"), "-0.12500");
        assert_eq!(row("k_2"), "0");
        assert_eq!(row("Q_1"), "140.08");
    }

    #[test]
    fn json_round_trip() {
        let report = build_report(&gen_rect_d1(20), &ReportConfig::default()).unwrap();
        let text = emit(std::slice::from_ref(&report), Format::Json, 25);
        let doc = parse_report_json(&text).unwrap();
        assert_eq!(doc.precision, 25);
        assert_eq!(doc.reports[0].report, report);
        assert_eq!(doc.reports[0].display["k_0"], "-1.5000");
    }
}
