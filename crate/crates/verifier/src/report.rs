//! Serialized and human-readable forms of a verdict document.

use std::fmt::Write;

use crate::run::VerdictDocument;
use crate::verdict::Outcome;

pub fn to_json(doc: &VerdictDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("verdict document serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<VerdictDocument, serde_json::Error> {
    serde_json::from_str(text)
}

/// One row per (group, check) pair that was applicable or refused, followed
/// by the totals. Vacuous verdicts are only counted.
pub fn to_text(doc: &VerdictDocument) -> String {
    let rows: Vec<_> = doc.verdicts.iter().filter(|v| v.passed != Outcome::Vacuous).collect();
    let gw = rows.iter().map(|v| v.group.len()).max().unwrap_or(0).max(5);
    let tw = rows.iter().map(|v| v.theorem_id.as_str().len()).max().unwrap_or(0).max(5);
    let mut out = String::new();
    writeln!(out, "{:gw$}  {:tw$}  result", "group", "check").unwrap();
    writeln!(out, "{}  {}  ------------", "-".repeat(gw), "-".repeat(tw)).unwrap();
    for v in rows {
        writeln!(out, "{:gw$}  {:tw$}  {}", v.group, v.theorem_id.as_str(), v.passed.label()).unwrap();
    }
    let s = &doc.summary;
    writeln!(
        out,
        "\n{} groups, {} verdicts: {} pass, {} fail, {} vacuous, {} not computed",
        doc.groups.len(),
        doc.verdicts.len(),
        s.pass,
        s.fail,
        s.vacuous,
        s.not_computed
    )
    .unwrap();
    out
}
