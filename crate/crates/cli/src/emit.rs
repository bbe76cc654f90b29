//! Report serialization: canonical JSON, CSV tables, and plain text.

use std::fmt::Write;

use crate::run::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => json(report),
        Format::Csv => csv(report),
        Format::Text => text(report),
    }
}

/// Pretty JSON with keys sorted at every level.
fn json(report: &Report) -> String {
    // serde_json's default map is ordered by key
    let value = serde_json::to_value(report).expect("report serializes");
    let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
    s.push('\n');
    s
}

fn csv(report: &Report) -> String {
    let mut s = String::from("complex,degree,dim\n");
    for t in report.all_tables() {
        for e in &t.entries {
            writeln!(s, "{},{},{}", t.complex, e.degree, e.dim).unwrap();
        }
    }
    s
}

fn text(report: &Report) -> String {
    let mut s = String::new();
    let status = if report.passed { "PASS" } else { "FAIL" };
    writeln!(s, "{} over {} (max degree {}): {status}", report.command, report.field, report.max_degree).unwrap();
    for v in &report.validation {
        writeln!(s, "validation: {}", v.subject).unwrap();
        for c in &v.checks {
            check_line(&mut s, c.passed, &c.name, c.cases, c.witness.as_deref());
        }
    }
    for o in &report.oracles {
        writeln!(s, "oracle: {}", o.oracle).unwrap();
        for c in &o.checks {
            // a failed alternative inside a passing oracle is informational
            let mark = match (c.passed, o.passed) {
                (true, _) => "ok  ",
                (false, true) => "alt ",
                (false, false) => "FAIL",
            };
            check_mark(&mut s, mark, &c.name, c.cases, c.witness.as_deref());
        }
        for n in &o.notes {
            writeln!(s, "  note: {n}").unwrap();
        }
    }
    for t in report.all_tables() {
        let dims: Vec<String> = t.entries.iter().map(|e| e.dim.to_string()).collect();
        writeln!(s, "{} [{}]: {}", t.complex, t.field, dims.join(" ")).unwrap();
    }
    for n in &report.notes {
        writeln!(s, "note: {n}").unwrap();
    }
    if let Some(a) = &report.algebra {
        writeln!(s, "algebra of dimension {} with {} nonzero structure constants", a.names.len(), a.mult.sparse.len())
            .unwrap();
    }
    s
}

fn check_line(s: &mut String, passed: bool, name: &str, cases: u64, witness: Option<&str>) {
    check_mark(s, if passed { "ok  " } else { "FAIL" }, name, cases, witness);
}

fn check_mark(s: &mut String, mark: &str, name: &str, cases: u64, witness: Option<&str>) {
    write!(s, "  {mark} {name} ({cases} cases)").unwrap();
    if let Some(w) = witness {
        write!(s, ": {w}").unwrap();
    }
    s.push('\n');
}
