use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use super::Format;
use crate::count::Count;
use crate::counting::{CountTable, Method, Order};
use crate::oracle::{MatchingCensus, OrbitCensus};
use crate::report::VerificationReport;
use crate::Error;

/// Output formats available for reports and oracle summaries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Csv,
    Json,
}

impl ReportFormat {
    pub fn for_report(format: Format) -> Result<Self, Error> {
        match format {
            Format::Table => Ok(ReportFormat::Table),
            Format::Csv => Ok(ReportFormat::Csv),
            Format::Json => Ok(ReportFormat::Json),
            Format::Bfile => Err(Error::Usage(
                "the bfile format only applies to `counts`".to_owned(),
            )),
        }
    }
}

/// Right-aligns every column; the first row is the header.
fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:>w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

fn csv(rows: &[Vec<String>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",") + "\n")
        .collect()
}

fn count_rows(table: &CountTable) -> Vec<Vec<String>> {
    let header = ["m", "total", "bubble", "connected", "distinct"];
    std::iter::once(header.iter().map(|h| h.to_string()).collect())
        .chain(table.rows.iter().map(|r| {
            vec![
                r.m.to_string(),
                r.total.to_string(),
                r.bubble.to_string(),
                r.connected.to_string(),
                r.distinct.to_string(),
            ]
        }))
        .collect()
}

pub fn count_table(table: &CountTable) -> String {
    aligned(&count_rows(table))
}

pub fn count_csv(table: &CountTable) -> String {
    csv(&count_rows(table))
}

pub fn count_json(table: &CountTable, method: Method) -> String {
    #[derive(Serialize)]
    struct Wire<'a> {
        method: String,
        rows: &'a [crate::counting::CountRow],
    }
    let wire = Wire {
        method: method.to_string(),
        rows: &table.rows,
    };
    serde_json::to_string_pretty(&wire).expect("serializable") + "\n"
}

/// `m value` lines of the distinct connected counts, from `m = 1`.
pub fn count_bfile(table: &CountTable) -> String {
    table
        .rows
        .iter()
        .filter(|r| r.m >= 1)
        .map(|r| format!("{} {}\n", r.m, r.distinct))
        .collect()
}

pub fn report(report: &VerificationReport, format: ReportFormat) -> String {
    let rows: Vec<Vec<String>> = std::iter::once(
        ["check", "params", "expected", "actual", "result"]
            .iter()
            .map(|h| h.to_string())
            .collect(),
    )
    .chain(report.checks().iter().map(|c| {
        vec![
            c.name.clone(),
            c.params.clone(),
            c.expected.clone(),
            c.actual.clone(),
            if c.pass { "pass" } else { "FAIL" }.to_owned(),
        ]
    }))
    .collect();
    match format {
        ReportFormat::Table => {
            let mut out = String::new();
            for row in &rows {
                writeln!(
                    out,
                    "{:<28} {:<10} {:>40} {:>40}  {}",
                    row[0], row[1], row[2], row[3], row[4]
                )
                .unwrap();
            }
            let overall = if report.overall() { "PASS" } else { "FAIL" };
            writeln!(out, "overall: {overall} ({} checks)", report.len()).unwrap();
            out
        }
        ReportFormat::Csv => csv(&rows),
        ReportFormat::Json => serde_json::to_string_pretty(report).expect("serializable") + "\n",
    }
}

/// Oracle results for one order. Orbit fields are absent above the census
/// cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub total: Count,
    pub connected: Count,
    pub vacuum: Count,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Count>,
    /// Orbit size (decimal string) to number of orbits of that size.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_sizes: Option<BTreeMap<String, Count>>,
    pub order: Order,
}

impl OracleSummary {
    pub fn new(
        order: Order,
        matchings: MatchingCensus,
        vacuum: Count,
        census: Option<&OrbitCensus>,
    ) -> Self {
        OracleSummary {
            total: matchings.total,
            connected: matchings.connected,
            vacuum,
            orbits: census.map(|c| c.orbit_count.clone()),
            orbit_sizes: census.map(|c| {
                c.orbit_sizes
                    .iter()
                    .map(|(&size, &freq)| (size.to_string(), Count::from(freq)))
                    .collect()
            }),
            order,
        }
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let mut rows = vec![
            vec!["order".to_owned(), self.order.to_string()],
            vec!["total".to_owned(), self.total.to_string()],
            vec!["connected".to_owned(), self.connected.to_string()],
            vec!["vacuum".to_owned(), self.vacuum.to_string()],
        ];
        if let Some(orbits) = &self.orbits {
            rows.push(vec!["orbits".to_owned(), orbits.to_string()]);
        }
        if let Some(sizes) = &self.orbit_sizes {
            let text: Vec<String> = sizes.iter().map(|(s, f)| format!("{s}:{f}")).collect();
            rows.push(vec!["orbit_sizes".to_owned(), text.join(" ")]);
        }
        rows
    }
}

pub fn oracle(summary: &OracleSummary, format: ReportFormat) -> String {
    match format {
        ReportFormat::Table => {
            let rows = summary.rows();
            let width = rows.iter().map(|r| r[0].len()).max().unwrap_or(0);
            rows.iter()
                .map(|r| format!("{:<width$}  {}\n", r[0], r[1]))
                .collect()
        }
        ReportFormat::Csv => {
            let mut rows = vec![vec!["quantity".to_owned(), "value".to_owned()]];
            rows.extend(summary.rows());
            csv(&rows)
        }
        ReportFormat::Json => serde_json::to_string(summary).expect("serializable") + "\n",
    }
}
