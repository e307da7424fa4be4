//! Generators, checkers, and sweeps for verifying reconfiguration
//! statements on small graphs.

pub mod assignments;
pub mod checks;
pub mod corpus;
pub mod sampling;
pub mod sweep;

pub use assignments::{
    canonicalize, enumerate_canonical_degree_assignments, is_canonical, AssignmentGenerator, GeneratorMode,
};
pub use checks::{
    check_claim1, check_claim2, check_claim3, check_lemma3, check_lemma4, check_lemma5, check_lemma6, Checker,
    Hypothesis, Outcome, Verdict,
};
pub use corpus::{canonical_form, connected_graphs};
pub use sweep::{
    search_conjecture, verify_theorem1_boundary, verify_theorem2, GraphSummary, Severity, SweepKind, SweepOptions,
    VerificationReport, Violation,
};
