//! Text formats: part lists, edge-list graph files, id lists, structured
//! result records and the s1/s2/gamma table.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::{compute_gamma, Case, GammaBreakdown};
use crate::oracle::{Graph, VertexSet};
use crate::parts::{PartSet, PartSizes};
use crate::subset_opt::{admissible_family, DemandValue};
use crate::witness::{build_witness, WitnessCounts};

fn parse_u64_entry(entry: &str, what: &str, location: impl Fn() -> String) -> Result<u64> {
    if entry.is_empty() {
        return Err(Error::parse(location(), format!("empty {what}")));
    }
    if entry.starts_with('-') {
        return Err(Error::parse(location(), format!("negative {what} {entry:?}")));
    }
    if !entry.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(location(), format!("{what} {entry:?} is not an integer")));
    }
    entry
        .parse::<u64>()
        .map_err(|_| Error::parse(location(), format!("{what} {entry:?} overflows u64")))
}

/// Comma-separated positive part sizes, e.g. `"2, 2, 10, 17"`.
pub fn parse_parts(text: &str) -> Result<PartSizes> {
    if text.trim().is_empty() {
        return Err(Error::parse("entry 1", "empty part list"));
    }
    let mut sizes = Vec::new();
    let mut column = 1;
    for (idx, raw) in text.split(',').enumerate() {
        let lead = raw.len() - raw.trim_start().len();
        let location = || format!("entry {} (column {})", idx + 1, column + lead);
        let n = parse_u64_entry(raw.trim(), "part size", location)?;
        if n == 0 {
            return Err(Error::parse(location(), "part size must be at least 1"));
        }
        sizes.push(n);
        column += raw.len() + 1;
    }
    PartSizes::new(sizes).map_err(|e| Error::parse("part list", e.to_string()))
}

/// Comma-separated vertex ids; the empty string is the empty set.
pub fn parse_id_list(text: &str) -> Result<VertexSet> {
    if text.trim().is_empty() {
        return Ok(VertexSet::default());
    }
    let mut ids = Vec::new();
    for (idx, raw) in text.split(',').enumerate() {
        let v = parse_u64_entry(raw.trim(), "vertex id", || format!("entry {}", idx + 1))?;
        let v = usize::try_from(v)
            .map_err(|_| Error::parse(format!("entry {}", idx + 1), "vertex id too large"))?;
        if ids.contains(&v) {
            return Err(Error::parse(format!("entry {}", idx + 1), format!("duplicate vertex {v}")));
        }
        ids.push(v);
    }
    Ok(VertexSet::new(ids))
}

/// Inclusive range `A..B` of p values.
pub fn parse_p_range(text: &str) -> Result<Vec<u64>> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| Error::parse("p range", format!("expected A..B, got {text:?}")))?;
    let a = parse_u64_entry(a.trim(), "range start", || "p range".to_string())?;
    let b = parse_u64_entry(b.trim(), "range end", || "p range".to_string())?;
    if a == 0 || a > b {
        return Err(Error::parse("p range", format!("need 1 <= A <= B, got {a}..{b}")));
    }
    Ok((a..=b).collect())
}

fn fields(line: &str) -> Vec<&str> {
    line.split([' ', '\t']).filter(|f| !f.is_empty()).collect()
}

/// Edge-list graph file.
///
/// Lines starting with `#` and blank lines are skipped. The first data line
/// is `n m`, followed by exactly `m` lines `u v` with `0 <= u, v < n` and
/// `u != v`. Fields are separated by spaces or tabs; LF and CRLF line endings
/// are accepted.
pub fn parse_graph_file(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.split('\n').enumerate() {
        let lineno = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim_matches([' ', '\t']);
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let at = || format!("line {lineno}");
        let f = fields(trimmed);
        if f.len() != 2 {
            return Err(Error::parse(at(), format!("expected two fields, found {}", f.len())));
        }
        let a = parse_u64_entry(f[0], "field", at)?;
        let b = parse_u64_entry(f[1], "field", at)?;
        let (a, b) = match (usize::try_from(a), usize::try_from(b)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Err(Error::parse(at(), "value too large")),
        };
        let Some((n, m)) = header else {
            header = Some((a, b));
            continue;
        };
        if edges.len() == m {
            return Err(Error::parse(at(), format!("more than the declared {m} edges")));
        }
        if a >= n || b >= n {
            return Err(Error::parse(at(), format!("vertex id out of range for n = {n}")));
        }
        if a == b {
            return Err(Error::parse(at(), format!("self-loop on vertex {a}")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::parse(at(), format!("duplicate edge {a} {b}")));
        }
        edges.push((a, b));
    }
    let (n, m) = header.ok_or_else(|| Error::parse("line 1", "missing \"n m\" header"))?;
    if edges.len() != m {
        return Err(Error::parse(
            format!("line {}", text.split('\n').count()),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges)
}

/// One line of structured output for `compute`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultRecord {
    pub parts: PartSizes,
    pub p: u64,
    pub gamma: u64,
    pub case: Case,
    pub s1: Option<u64>,
    pub s2: Option<DemandValue>,
    pub s1_witness: Option<PartSet>,
    pub s2_witness: Option<PartSet>,
    pub witness_counts: WitnessCounts,
}

impl ResultRecord {
    pub fn compute(parts: &PartSizes, p: u64) -> Result<Self> {
        let b = compute_gamma(parts, p)?;
        let counts = build_witness(parts, p)?;
        Ok(ResultRecord::from_parts(parts.clone(), b, counts))
    }

    pub fn from_parts(parts: PartSizes, b: GammaBreakdown, witness_counts: WitnessCounts) -> Self {
        ResultRecord {
            parts,
            p: b.p,
            gamma: b.gamma,
            case: b.case,
            s1: b.s1,
            s2: b.s2,
            s1_witness: b.s1_witness,
            s2_witness: b.s2_witness,
            witness_counts,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialise")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        let record: ResultRecord = serde_json::from_str(line.trim_end())
            .map_err(|e| Error::parse(format!("column {}", e.column()), e.to_string()))?;
        record.check()?;
        Ok(record)
    }

    /// Internal consistency: case tag, optional fields and witness total.
    pub fn check(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::invalid(format!("inconsistent record: {m}")));
        self.witness_counts.check(&self.parts)?;
        if self.witness_counts.total() != self.gamma {
            return bad("witness_counts does not sum to gamma");
        }
        let trivial = self.parts.len() == 1 || self.parts.total() <= self.p;
        match (self.case, self.s1, self.s2) {
            (Case::AllVertices, None, None) if trivial && self.gamma == self.parts.total() => Ok(()),
            (Case::AllVertices, ..) => bad("all-vertices record"),
            (_, Some(s1), Some(s2)) if !trivial => {
                let balanced = s2.plus(self.p);
                let want = match balanced {
                    DemandValue::Finite(b) if b < s1 => (b, Case::Balanced),
                    _ => (s1, Case::FullParts),
                };
                if want == (self.gamma, self.case) {
                    Ok(())
                } else {
                    bad("gamma/case disagree with s1 and s2")
                }
            }
            _ => bad("missing s1 or s2"),
        }
    }

    /// Multi-line human-readable rendering.
    pub fn to_text(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
        let mut out = String::new();
        let _ = writeln!(out, "graph:   {}", self.parts);
        let _ = writeln!(out, "p:       {}", self.p);
        let _ = writeln!(out, "gamma_p: {}", self.gamma);
        let _ = writeln!(out, "case:    {}", self.case);
        let _ = writeln!(
            out,
            "s1:      {} (parts {})",
            opt(self.s1.map(|v| v.to_string())),
            opt(self.s1_witness.as_ref().map(|s| s.to_string()))
        );
        let _ = writeln!(
            out,
            "s2:      {} (parts {})",
            opt(self.s2.map(|v| v.to_string())),
            opt(self.s2_witness.as_ref().map(|s| s.to_string()))
        );
        let _ = writeln!(out, "counts:  {}", join(self.witness_counts.counts()));
        out
    }
}

pub(crate) fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub p: u64,
    pub s1: Option<u64>,
    pub s2: Option<DemandValue>,
    pub gamma: u64,
    pub case: Case,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Vec<PartSet>>,
}

pub fn table_rows(parts: &PartSizes, p_values: &[u64], family: bool) -> Result<Vec<TableRow>> {
    p_values
        .iter()
        .map(|&p| {
            let b = compute_gamma(parts, p)?;
            let family = if family {
                Some(admissible_family(parts, p)?)
            } else {
                None
            };
            Ok(TableRow {
                p,
                s1: b.s1,
                s2: b.s2,
                gamma: b.gamma,
                case: b.case,
                family,
            })
        })
        .collect()
}

fn family_text(family: &[PartSet]) -> String {
    if family.is_empty() {
        return "none".to_string();
    }
    family.iter().map(PartSet::to_string).collect::<Vec<_>>().join(" ")
}

/// Renders one row per p value with columns `p, s1, s2, gamma, case`, plus
/// the admissible family when `family` is set.
pub fn emit_table(
    parts: &PartSizes,
    p_values: &[u64],
    format: TableFormat,
    family: bool,
) -> Result<String> {
    let rows = table_rows(parts, p_values, family)?;
    let cells = |r: &TableRow| {
        let mut c = vec![
            r.p.to_string(),
            r.s1.map(|v| v.to_string()).unwrap_or_default(),
            r.s2.map(|v| v.to_string()).unwrap_or_default(),
            r.gamma.to_string(),
            r.case.to_string(),
        ];
        if let Some(f) = &r.family {
            c.push(family_text(f));
        }
        c
    };
    let mut header = vec!["p", "s1", "s2", "gamma", "case"];
    if family {
        header.push("family");
    }

    Ok(match format {
        TableFormat::Json => rows
            .iter()
            .map(|r| serde_json::to_string(r).expect("rows always serialise") + "\n")
            .collect(),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).map_err(csv_err)?;
            for r in &rows {
                w.write_record(cells(r)).map_err(csv_err)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| csv_err(e.into_error()))?)
                .expect("csv output is utf-8")
        }
        TableFormat::Plain => {
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    cells(r)
                        .into_iter()
                        .map(|c| if c.is_empty() { "-".to_string() } else { c })
                        .collect()
                })
                .collect();
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in &body {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.len());
                }
            }
            let mut out = String::new();
            let head: Vec<String> = header.iter().map(|h| h.to_string()).collect();
            for row in std::iter::once(&head).chain(&body) {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .enumerate()
                    .map(|(i, (c, &w))| if i < 4 { format!("{c:>w$}") } else { format!("{c:<w$}") })
                    .collect();
                let _ = writeln!(out, "{}", line.join("  ").trim_end());
            }
            out
        }
    })
}

fn csv_err(e: impl std::fmt::Display) -> Error {
    Error::invalid(format!("csv output: {e}"))
}
