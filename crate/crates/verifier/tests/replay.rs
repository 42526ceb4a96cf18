//! Every witness produced on the default corpus re-validates against a
//! freshly rebuilt group, and the committed example document is current.

use std::path::Path;

use mna_core::Limits;
use mna_verify::ids::parse_selection;
use mna_verify::replay::replay_document;
use mna_verify::report::{from_json, to_json};
use mna_verify::verdict::Claim;
use mna_verify::{run, CorpusSpec, Outcome};

fn corpus_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus"))
}

fn run_corpus(name: &str) -> mna_verify::VerdictDocument {
    let spec = CorpusSpec::from_corpus_file(
        &corpus_dir().join(name),
        Limits::default(),
        parse_selection("all").unwrap(),
    )
    .unwrap();
    run(&spec, 0).unwrap()
}

#[test]
fn default_corpus_witnesses_replay() {
    let doc = run_corpus("default.txt");
    let problems = replay_document(&doc, corpus_dir()).unwrap();
    assert!(problems.is_empty(), "{problems:#?}");
    assert!(doc.verdicts.iter().all(|v| v.applicable || v.passed != Outcome::Pass));
    let claims: usize = doc.verdicts.iter().map(|v| v.witness.claims.len()).sum();
    assert!(claims > 500, "only {claims} claims replayed");
    assert!(doc.verdicts.iter().any(|v| v
        .witness
        .claims
        .iter()
        .any(|c| matches!(c, Claim::FrobeniusModCenter { .. }))));
}

#[test]
fn committed_example_document_is_current() {
    let path = Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/docs/example-verdicts.json"));
    let committed = from_json(&std::fs::read_to_string(path).unwrap()).unwrap();
    let fresh = run_corpus("example.txt");
    assert_eq!(
        to_json(&committed.without_timing()),
        to_json(&fresh.without_timing()),
        "regenerate with: mna-verify --corpus crates/verifier/corpus/example.txt --format json --output {}",
        path.display()
    );
}
