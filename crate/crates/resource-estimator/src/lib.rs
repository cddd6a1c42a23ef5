//! Gate census of qubit circuits, symbolic T counts, and published cost tables.

mod census;
mod tables;

pub use census::{census, GateCounts, ResourceReport};
pub use tables::*;

use group_core::GroupId;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ResourceError {
    #[error("no published row for {0} {1}")]
    UnknownRow(GroupId, Impl),
    #[error("epsilon must lie in (0, 1], got {0}")]
    BadEpsilon(f64),
    #[error("d must be a positive integer, got {0}")]
    BadDimension(u32),
    #[error("unknown implementation {0:?}")]
    UnknownImpl(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Impl {
    Ft,
    Fft,
}

impl fmt::Display for Impl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Impl::Ft => "FT",
            Impl::Fft => "FFT",
        })
    }
}

impl FromStr for Impl {
    type Err = ResourceError;
    fn from_str(s: &str) -> Result<Self, ResourceError> {
        match s.to_ascii_lowercase().as_str() {
            "ft" => Ok(Impl::Ft),
            "fft" => Ok(Impl::Fft),
            _ => Err(ResourceError::UnknownImpl(s.to_string())),
        }
    }
}

/// a + b log2(1/eps).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Symbolic {
    pub a: f64,
    pub b: f64,
}

impl Symbolic {
    pub fn at(&self, epsilon: f64) -> Result<f64, ResourceError> {
        Ok(self.a + self.b * log_bits(epsilon)?)
    }
}

pub fn t_count(t: &Symbolic, epsilon: f64) -> Result<f64, ResourceError> {
    t.at(epsilon)
}

/// One line of the published-versus-synthesized comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonRow {
    pub group: GroupId,
    pub implementation: Impl,
    pub source: &'static str,
    pub t: Symbolic,
    pub width: usize,
    pub ancilla: usize,
    pub t_at_eps: f64,
}

impl ComparisonRow {
    pub fn ours(group: GroupId, r: &ResourceReport, epsilon: f64) -> Result<Self, ResourceError> {
        Ok(ComparisonRow {
            group,
            implementation: Impl::Fft,
            source: "ours",
            t: r.t,
            width: r.t_width,
            ancilla: r.ancilla,
            t_at_eps: r.t.at(epsilon)?,
        })
    }

    pub fn paper(f: &CostFormula, epsilon: f64) -> Result<Self, ResourceError> {
        Ok(ComparisonRow {
            group: f.group,
            implementation: f.implementation,
            source: "paper",
            t: f.t,
            width: f.t_width as usize,
            ancilla: f.ancilla as usize,
            t_at_eps: f.t.at(epsilon)?,
        })
    }
}

/// Published rows for `group` followed by the census row.
pub fn comparison_rows(group: GroupId, ours: &ResourceReport, epsilon: f64) -> Result<Vec<ComparisonRow>, ResourceError> {
    let mut rows = Vec::new();
    for f in TABLE7.iter().filter(|f| f.group == group) {
        rows.push(ComparisonRow::paper(f, epsilon)?);
    }
    rows.push(ComparisonRow::ours(group, ours, epsilon)?);
    Ok(rows)
}

const HEADER: [&str; 8] = ["group", "impl", "source", "a", "b", "width", "ancilla", "T(eps)"];

fn short(x: f64) -> String {
    format!("{}", (x * 1e6).round() / 1e6)
}

fn cells(r: &ComparisonRow) -> [String; 8] {
    [
        r.group.name().to_string(),
        r.implementation.to_string(),
        r.source.to_string(),
        short(r.t.a),
        short(r.t.b),
        r.width.to_string(),
        r.ancilla.to_string(),
        format!("{:.1}", r.t_at_eps),
    ]
}

pub fn comparison_csv(rows: &[ComparisonRow]) -> String {
    let mut s = HEADER.join(",") + "\n";
    for r in rows {
        s += &cells(r).join(",");
        s.push('\n');
    }
    s
}

pub fn comparison_text(rows: &[ComparisonRow]) -> String {
    let body: Vec<[String; 8]> = rows.iter().map(cells).collect();
    let mut w: Vec<usize> = HEADER.iter().map(|h| h.len()).collect();
    for r in &body {
        for (k, c) in r.iter().enumerate() {
            w[k] = w[k].max(c.len());
        }
    }
    let line = |r: &[String]| {
        let parts: Vec<String> = r.iter().enumerate().map(|(k, c)| format!("{:>1$}", c, w[k])).collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(&HEADER.map(String::from));
    for r in &body {
        s += &line(r);
    }
    s
}
