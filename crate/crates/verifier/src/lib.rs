//! Batch verification of structure theorems about minimal non-abelian
//! subgroups over a corpus of finite groups.

pub mod checks;
pub mod ids;
pub mod parse;
pub mod replay;
pub mod report;
pub mod run;
pub mod verdict;

pub use ids::CheckId;
pub use run::{run, CorpusSpec, VerdictDocument};
pub use verdict::{Outcome, TheoremVerdict};
