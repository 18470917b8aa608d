//! Report assembly and rendering. Every numeric cell is carried as an
//! exact rational string; the renderers never touch floating point. A
//! report is fully determined by its config echo (including the seed), so
//! rendering the same report twice gives byte-identical output.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::envelop::PbwElement;
use crate::polyalg::Poly;
use crate::scalar::{rat_string, Rat};

#[derive(Clone, Debug, Serialize)]
pub struct NamedTable {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub command: String,
    pub root_system: String,
    pub seed: u64,
    pub config: BTreeMap<String, String>,
    pub tables: Vec<NamedTable>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteEntry {
    pub name: String,
    /// "pass" for ordinary checks, "fail" for negative tests whose failure
    /// is the expected outcome.
    pub expect: String,
    pub observed: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl SuiteEntry {
    pub fn positive(name: impl Into<String>, observed_pass: bool) -> Self {
        SuiteEntry {
            name: name.into(),
            expect: "pass".into(),
            observed: if observed_pass { "pass" } else { "fail" }.into(),
            ok: observed_pass,
            witness: None,
        }
    }

    pub fn negative(name: impl Into<String>, observed_pass: bool) -> Self {
        SuiteEntry {
            name: name.into(),
            expect: "fail".into(),
            observed: if observed_pass { "pass" } else { "fail" }.into(),
            ok: !observed_pass,
            witness: None,
        }
    }

    pub fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub command: String,
    pub suite: String,
    pub root_system: String,
    pub seed: u64,
    pub config: BTreeMap<String, String>,
    pub passed: bool,
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn new(
        suite: &str,
        root_system: String,
        seed: u64,
        config: BTreeMap<String, String>,
        entries: Vec<SuiteEntry>,
    ) -> Self {
        let passed = entries.iter().all(|e| e.ok);
        SuiteReport {
            command: "verify".into(),
            suite: suite.into(),
            root_system,
            seed,
            config,
            passed,
            entries,
        }
    }
}

/// `p/q` in lowest terms, denominator always present.
pub fn json_rat(r: &Rat) -> Value {
    Value::String(rat_string(r))
}

/// Human cell: integers without the `/1`.
pub fn cell_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn cell_rat_vec(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(cell_rat).collect();
    format!("({})", parts.join(","))
}

pub fn poly_string(p: &Poly<Rat>) -> String {
    p.to_string()
}

/// PBW element as a list of `{"exp": [..], "coef": "p/q"}` objects, in the
/// element's own (deterministic) term order.
pub fn pbw_json(a: &PbwElement) -> Value {
    let terms: Vec<Value> = a
        .terms
        .iter()
        .map(|(exp, c)| json!({ "exp": exp, "coef": rat_string(c) }))
        .collect();
    Value::Array(terms)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "table" => Some(Format::Table),
            "json" => Some(Format::Json),
            "csv" => Some(Format::Csv),
            _ => None,
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(cells: &[String]) -> String {
    cells
        .iter()
        .map(|c| csv_field(c))
        .collect::<Vec<_>>()
        .join(",")
}

fn aligned(columns: &[String], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
    for row in rows {
        for (j, cell) in row.iter().enumerate() {
            width[j] = width[j].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: &[String], width: &[usize]| -> String {
        let mut line = String::new();
        for (j, cell) in cells.iter().enumerate() {
            if j > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            for _ in cell.chars().count()..width[j] {
                line.push(' ');
            }
        }
        line.trim_end().to_string()
    };
    out.push_str(&fmt_row(columns, &width));
    out.push('\n');
    let total: usize = width.iter().sum::<usize>() + 2 * (width.len() - 1);
    out.push_str(&"-".repeat(total));
    out.push('\n');
    for row in rows {
        out.push_str(&fmt_row(row, &width));
        out.push('\n');
    }
    out
}

pub fn render_tables(r: &TableReport, f: Format) -> String {
    match f {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("serializable report");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::new();
            for t in &r.tables {
                out.push_str(&format!("# {} {} seed={}\n", r.root_system, t.name, r.seed));
                out.push_str(&csv_line(&t.columns));
                out.push('\n');
                for row in &t.rows {
                    out.push_str(&csv_line(row));
                    out.push('\n');
                }
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            for (i, t) in r.tables.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&format!("{} — {} (seed {})\n", r.root_system, t.name, r.seed));
                out.push_str(&aligned(&t.columns, &t.rows));
            }
            out
        }
    }
}

pub fn render_suite(r: &SuiteReport, f: Format) -> String {
    match f {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("serializable report");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&format!(
                "# verify {} {} seed={} passed={}\n",
                r.suite, r.root_system, r.seed, r.passed
            ));
            out.push_str("name,expect,observed,ok\n");
            for e in &r.entries {
                out.push_str(&csv_line(&[
                    e.name.clone(),
                    e.expect.clone(),
                    e.observed.clone(),
                    e.ok.to_string(),
                ]));
                out.push('\n');
            }
            out
        }
        Format::Table => {
            let mut out = String::new();
            out.push_str(&format!("verify {} on {} (seed {})\n", r.suite, r.root_system, r.seed));
            for e in &r.entries {
                let mark = if e.ok { "ok " } else { "FAIL" };
                out.push_str(&format!(
                    "[{}] {} (expect {}, observed {})\n",
                    mark, e.name, e.expect, e.observed
                ));
            }
            out.push_str(&format!(
                "{}: {} of {} entries ok\n",
                if r.passed { "PASS" } else { "FAIL" },
                r.entries.iter().filter(|e| e.ok).count(),
                r.entries.len()
            ));
            out
        }
    }
}
