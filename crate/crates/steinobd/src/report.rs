//! Report payloads shared by every subcommand: a single JSON shape plus a
//! stable line-oriented text rendering.
//!
//! The JSON schema (documented in the README) is:
//!
//! ```text
//! {
//!   "command":  string,          // echo of the invocation
//!   "source":   provenance,      // {"file": {...}} | {"family": {...}} | ...
//!   "warnings": [string],
//!   "result":   { "kind": string, ... }   // kind-specific fields
//! }
//! ```

use crate::classify::{ContactLabel, DiffeoType};
use crate::families::FamilyParams;
use serde::Serialize;
use std::fmt::Write as _;

/// Where an input came from, echoed into reports.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    File { path: String },
    Family(FamilyParams),
    Canonical { r: i64, n: usize },
    Vectors { from: Vec<i64>, to: Vec<i64> },
    Pair { a: Box<Provenance>, b: Box<Provenance> },
}

impl Provenance {
    fn describe(&self) -> String {
        match self {
            Provenance::File { path } => format!("file {path}"),
            Provenance::Family(params) => format!("family {params}"),
            Provenance::Canonical { r, n } => format!("canonical r={r} n={n}"),
            Provenance::Vectors { from, to } => {
                format!("vectors from={from:?} to={to:?}")
            }
            Provenance::Pair { a, b } => format!("{} | {}", a.describe(), b.describe()),
        }
    }
}

/// The classification record for one page: the label data together with the
/// c1 cochain it was derived from.
#[derive(Debug, Clone, Serialize)]
pub struct LabelRecord {
    pub zeta: String,
    pub r: i64,
    pub n: usize,
    pub diffeo: DiffeoType,
    pub b2: usize,
    pub c1: Vec<i64>,
    pub rotation_divisor: i64,
    pub source: Provenance,
}

impl LabelRecord {
    pub fn new(label: ContactLabel, c1: Vec<i64>, source: Provenance) -> Self {
        LabelRecord {
            zeta: label.zeta(),
            r: label.r,
            n: label.n,
            diffeo: label.diffeo,
            b2: label.n,
            c1,
            rotation_divisor: label.r,
            source,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentInvariants {
    pub component: usize,
    pub tb: i64,
    pub rot: i64,
    pub writhe: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub p: i64,
    pub rot: Vec<i64>,
    pub r: i64,
    pub label: String,
    pub diffeo: DiffeoType,
    pub n: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Invariants {
        components: Vec<ComponentInvariants>,
        linking: Vec<Vec<i64>>,
    },
    Label(LabelRecord),
    Equivalence {
        equivalent: bool,
        a: LabelRecord,
        b: LabelRecord,
        witness: Option<Vec<Vec<i64>>>,
        reason: Option<String>,
    },
    Table {
        rows: Vec<TableRow>,
        all_equal: bool,
        pairwise_distinct: bool,
        expectation: String,
        matches_expectation: bool,
    },
    Canonical {
        r: i64,
        n: usize,
        path: String,
        front_paths: Vec<String>,
        label: LabelRecord,
    },
    Automorphism {
        from: Vec<i64>,
        to: Vec<i64>,
        gcd: i64,
        matrix: Vec<Vec<i64>>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub source: Provenance,
    pub warnings: Vec<String>,
    pub result: Payload,
}

fn paint(s: &str, code: &str, color: bool) -> String {
    if color {
        format!("\u{1b}[{code}m{s}\u{1b}[0m")
    } else {
        s.to_string()
    }
}

fn write_matrix(out: &mut String, m: &[Vec<i64>], indent: &str) {
    let width = m
        .iter()
        .flatten()
        .map(|e| e.to_string().len())
        .max()
        .unwrap_or(1);
    for row in m {
        let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
        let _ = writeln!(out, "{indent}[{}]", cells.join(" "));
    }
}

fn write_label(out: &mut String, rec: &LabelRecord, color: bool) {
    let _ = writeln!(out, "label: {}", paint(&rec.zeta, "1", color));
    let _ = writeln!(out, "diffeo: #_{} {}", rec.n, rec.diffeo);
    let _ = writeln!(out, "r: {}", rec.r);
    let _ = writeln!(out, "n: {}", rec.n);
    let _ = writeln!(out, "b2: {}", rec.b2);
    let _ = writeln!(out, "c1: {:?}", rec.c1);
    let _ = writeln!(out, "rotation divisor: {}", rec.rotation_divisor);
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    /// Deterministic text rendering; `color` adds ANSI styling and nothing
    /// else.
    pub fn to_text(&self, color: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "source: {}", self.source.describe());
        for w in &self.warnings {
            let _ = writeln!(out, "{} {w}", paint("warning:", "33", color));
        }
        match &self.result {
            Payload::Invariants {
                components,
                linking,
            } => {
                let _ = writeln!(out, "components: {}", components.len());
                for c in components {
                    let _ = writeln!(
                        out,
                        "component {}: tb={} rot={} writhe={}",
                        c.component, c.tb, c.rot, c.writhe
                    );
                }
                if linking.len() > 1 {
                    let _ = writeln!(out, "linking:");
                    write_matrix(&mut out, linking, "  ");
                }
            }
            Payload::Label(rec) => write_label(&mut out, rec, color),
            Payload::Equivalence {
                equivalent,
                a,
                b,
                witness,
                reason,
            } => {
                let _ = writeln!(out, "a: {} ({})", a.zeta, a.source.describe());
                let _ = writeln!(out, "b: {} ({})", b.zeta, b.source.describe());
                let verdict = if *equivalent {
                    paint("yes", "32", color)
                } else {
                    paint("no", "31", color)
                };
                let _ = writeln!(out, "equivalent: {verdict}");
                if let Some(reason) = reason {
                    let _ = writeln!(out, "reason: {reason}");
                }
                if let Some(w) = witness {
                    let _ = writeln!(out, "witness (maps c1 of a to c1 of b):");
                    write_matrix(&mut out, w, "  ");
                }
            }
            Payload::Table {
                rows,
                all_equal,
                pairwise_distinct,
                expectation,
                matches_expectation,
            } => {
                for row in rows {
                    let _ = writeln!(
                        out,
                        "p={} rot={:?} r={} label={} diffeo=#_{} {}",
                        row.p, row.rot, row.r, row.label, row.n, row.diffeo
                    );
                }
                let _ = writeln!(out, "labels all equal: {}", yesno(*all_equal));
                let _ = writeln!(
                    out,
                    "labels pairwise distinct: {}",
                    yesno(*pairwise_distinct)
                );
                let _ = writeln!(
                    out,
                    "expectation: {expectation} -> {}",
                    paint(
                        if *matches_expectation { "met" } else { "NOT MET" },
                        if *matches_expectation { "32" } else { "31" },
                        color
                    )
                );
            }
            Payload::Canonical {
                r,
                n,
                path,
                front_paths,
                label,
            } => {
                let _ = writeln!(out, "wrote: {path}");
                for fp in front_paths {
                    let _ = writeln!(out, "wrote front: {fp}");
                }
                let _ = writeln!(out, "requested: r={r} n={n}");
                write_label(&mut out, label, color);
            }
            Payload::Automorphism {
                from,
                to,
                gcd,
                matrix,
            } => {
                let _ = writeln!(out, "from: {from:?}");
                let _ = writeln!(out, "to: {to:?}");
                let _ = writeln!(out, "gcd: {gcd}");
                let _ = writeln!(out, "matrix (maps from to to):");
                write_matrix(&mut out, matrix, "  ");
            }
        }
        out
    }
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
