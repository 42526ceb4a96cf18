use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use mna_core::{Limits, DEFAULT_MAX_ORDER, DEFAULT_ORACLE_CAP};
use mna_verify::ids::parse_selection;
use mna_verify::replay::replay_document;
use mna_verify::{report, run, CorpusSpec};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Verify theorems about minimal non-abelian subgroups on a corpus of
/// finite groups.
#[derive(Parser, Debug)]
#[command(version, about)]
struct Cli {
    /// Corpus file: one group descriptor per line, `# name` comments.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Extra group descriptor; may be repeated.
    #[arg(long = "group", value_name = "DESCRIPTOR")]
    groups: Vec<String>,
    /// Comma-separated check ids, or `all`, `theorems`, `lemmas`.
    #[arg(long, default_value = "all")]
    theorems: String,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Largest order for which full subgroup lattices are enumerated.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    oracle_cap: usize,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Exit with status 3 when a cap prevented some check from running.
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Re-validate the witnesses of an existing JSON verdict document.
    #[arg(long, value_name = "DOCUMENT", conflicts_with_all = ["corpus", "groups"])]
    replay: Option<PathBuf>,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("mna-verify: {msg}");
    ExitCode::from(1)
}

fn replay(path: &Path, base_dir: Option<&Path>) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(format!("{}: {e}", path.display())),
    };
    let doc = match report::from_json(&text) {
        Ok(d) => d,
        Err(e) => return fail(format!("{}: {e}", path.display())),
    };
    let base = base_dir.unwrap_or_else(|| path.parent().unwrap_or(Path::new(".")));
    match replay_document(&doc, base) {
        Ok(problems) if problems.is_empty() => {
            println!("{} verdicts replayed, all witnesses valid", doc.verdicts.len());
            ExitCode::SUCCESS
        }
        Ok(problems) => {
            for p in &problems {
                eprintln!("{p}");
            }
            ExitCode::from(2)
        }
        Err(e) => fail(e),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(path) = &cli.replay {
        return replay(path, None);
    }
    if cli.max_order == 0 || cli.oracle_cap == 0 {
        return fail("caps must be positive");
    }
    let checks = match parse_selection(&cli.theorems) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let limits = Limits { max_order: cli.max_order, oracle_cap: cli.oracle_cap };
    let mut spec = match &cli.corpus {
        Some(path) => match CorpusSpec::from_corpus_file(path, limits, checks) {
            Ok(s) => s,
            Err(e) => return fail(e),
        },
        None => CorpusSpec { entries: Vec::new(), base_dir: PathBuf::from("."), limits, checks },
    };
    for g in &cli.groups {
        if let Err(e) = spec.push_descriptor(g) {
            return fail(format!("--group {g:?}: {e}"));
        }
    }
    if spec.entries.is_empty() {
        return fail("nothing to verify; pass --corpus or --group");
    }
    let doc = match run(&spec, cli.jobs) {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    let out = match cli.format {
        Format::Json => report::to_json(&doc),
        Format::Text => report::to_text(&doc),
    };
    match &cli.output {
        Some(p) => {
            if let Err(e) = std::fs::write(p, out) {
                return fail(format!("{}: {e}", p.display()));
            }
        }
        None => print!("{out}"),
    }
    ExitCode::from(doc.exit_code(cli.strict) as u8)
}
