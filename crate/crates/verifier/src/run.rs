//! Corpus runs: build every group, run the selected checks on a worker
//! pool, and merge results in corpus order.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use mna_core::Limits;

use crate::checks::{run_check, GroupCtx};
use crate::ids::CheckId;
use crate::parse::{build, parse_corpus, parse_descriptor, CorpusEntry, InputError};
use crate::verdict::{Outcome, TheoremVerdict, Witness};

pub const SCHEMA: &str = "mna-verify/1";

/// Everything a run depends on.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub entries: Vec<CorpusEntry>,
    /// Directory that relative `cayley(...)` paths are resolved against.
    pub base_dir: PathBuf,
    pub limits: Limits,
    pub checks: Vec<CheckId>,
}

impl CorpusSpec {
    pub fn from_corpus_file(path: &Path, limits: Limits, checks: Vec<CheckId>) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| InputError::Io { path: path.display().to_string(), source })?;
        let entries = parse_corpus(&text).map_err(|e| match e {
            InputError::Syntax { line, col, msg } => {
                InputError::Syntax { line, col, msg: format!("{}: {msg}", path.display()) }
            }
            other => other,
        })?;
        let base_dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(Self { entries, base_dir, limits, checks })
    }

    /// Appends command-line descriptors, named by their own text.
    pub fn push_descriptor(&mut self, src: &str) -> Result<(), InputError> {
        parse_descriptor(src)?;
        self.entries.push(CorpusEntry {
            name: src.trim().to_string(),
            descriptor: src.trim().to_string(),
            line: 0,
        });
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_order: usize,
    pub oracle_cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub name: String,
    pub descriptor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    /// Set when the group could not be built within the caps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refused: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub not_computed: usize,
}

impl Summary {
    fn add(&mut self, o: Outcome) {
        match o {
            Outcome::Pass => self.pass += 1,
            Outcome::Fail => self.fail += 1,
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::NotComputed => self.not_computed += 1,
        }
    }
}

/// The single output document of a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub schema: String,
    pub caps: Caps,
    pub theorems: Vec<CheckId>,
    pub groups: Vec<GroupRecord>,
    pub verdicts: Vec<TheoremVerdict>,
    pub summary: Summary,
}

impl VerdictDocument {
    /// Copy with every timing field zeroed, for run-to-run comparison.
    pub fn without_timing(&self) -> Self {
        let mut d = self.clone();
        for v in &mut d.verdicts {
            v.elapsed_ms = 0;
        }
        d
    }

    /// Process exit code: 2 if any check failed, 3 if `strict` and some
    /// check was refused by a cap, 0 otherwise.
    pub fn exit_code(&self, strict: bool) -> i32 {
        if self.summary.fail > 0 {
            2
        } else if strict && self.summary.not_computed > 0 {
            3
        } else {
            0
        }
    }

    pub fn verdict(&self, group: &str, id: CheckId) -> Option<&TheoremVerdict> {
        self.verdicts.iter().find(|v| v.group == group && v.theorem_id == id)
    }
}

fn verify_entry(
    spec: &CorpusSpec,
    entry: &CorpusEntry,
) -> Result<(GroupRecord, Vec<TheoremVerdict>), InputError> {
    let d = parse_descriptor(&entry.descriptor)?;
    let mut record = GroupRecord {
        name: entry.name.clone(),
        descriptor: entry.descriptor.clone(),
        order: None,
        refused: None,
    };
    let g = match build(&d, &spec.limits, &spec.base_dir) {
        Ok(g) => g,
        Err(e) if e.is_cap() => {
            record.refused = Some(e.to_string());
            let verdicts = spec
                .checks
                .iter()
                .map(|&id| {
                    let mut w = Witness::default();
                    w.val("reason", e.to_string());
                    TheoremVerdict {
                        group: entry.name.clone(),
                        descriptor: entry.descriptor.clone(),
                        theorem_id: id,
                        applicable: false,
                        passed: Outcome::NotComputed,
                        witness: w,
                        elapsed_ms: 0,
                    }
                })
                .collect();
            return Ok((record, verdicts));
        }
        Err(e) => return Err(e),
    };
    record.order = Some(g.order());
    let ctx = GroupCtx::new(entry.name.clone(), entry.descriptor.clone(), g, spec.limits);
    let verdicts = spec.checks.par_iter().map(|&id| run_check(&ctx, id)).collect();
    Ok((record, verdicts))
}

/// Runs the corpus on `jobs` workers (0 means one per core). Output order
/// depends only on `spec`, never on scheduling.
pub fn run(spec: &CorpusSpec, jobs: usize) -> Result<VerdictDocument, InputError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("worker pool");
    let results: Vec<_> = pool
        .install(|| spec.entries.par_iter().map(|e| verify_entry(spec, e)).collect::<Result<Vec<_>, _>>())?;
    let mut groups = Vec::with_capacity(results.len());
    let mut verdicts = Vec::new();
    let mut summary = Summary::default();
    for (record, vs) in results {
        groups.push(record);
        for v in vs {
            summary.add(v.passed);
            verdicts.push(v);
        }
    }
    Ok(VerdictDocument {
        schema: SCHEMA.to_string(),
        caps: Caps { max_order: spec.limits.max_order, oracle_cap: spec.limits.oracle_cap },
        theorems: spec.checks.clone(),
        groups,
        verdicts,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(summary: Summary) -> VerdictDocument {
        VerdictDocument {
            schema: SCHEMA.into(),
            caps: Caps { max_order: 1, oracle_cap: 1 },
            theorems: Vec::new(),
            groups: Vec::new(),
            verdicts: Vec::new(),
            summary,
        }
    }

    #[test]
    fn exit_codes() {
        let clean = doc(Summary { pass: 3, vacuous: 2, ..Summary::default() });
        assert_eq!(clean.exit_code(true), 0);
        let refused = doc(Summary { pass: 1, not_computed: 1, ..Summary::default() });
        assert_eq!(refused.exit_code(false), 0);
        assert_eq!(refused.exit_code(true), 3);
        let failed = doc(Summary { fail: 1, not_computed: 1, ..Summary::default() });
        assert_eq!(failed.exit_code(false), 2);
        assert_eq!(failed.exit_code(true), 2);
    }
}
