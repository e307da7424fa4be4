//! Degree-swappability sweeps and their reports.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::assignments::{enumerate_canonical_degree_assignments, AssignmentGenerator, GeneratorMode};
use crate::coloring::ListAssignment;
use crate::error::{Error, Result};
use crate::graph::{classify_exception, encode_graph6, vertex_connectivity, Exception, Graph};
use crate::io::{serialize_lists, sha256_hex};
use crate::oracle::{classify, KempeClassReport, DEFAULT_NODE_CAP};

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepKind {
    Theorem1,
    Theorem2,
    Conjecture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    /// Contradicts a proven statement.
    Critical,
    /// A counterexample candidate for an open statement.
    Finding,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub graph6: String,
    /// SHA-256 of the graph6 encoding.
    pub digest: String,
    pub n: usize,
    pub edges: usize,
    pub connectivity: usize,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        let graph6 = encode_graph6(g);
        GraphSummary {
            digest: sha256_hex(graph6.as_bytes()),
            graph6,
            n: g.n(),
            edges: g.edge_count(),
            connectivity: vertex_connectivity(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Position of the assignment in generation order.
    pub index: usize,
    pub severity: Severity,
    #[serde(serialize_with = "serialize_lists")]
    pub lists: ListAssignment,
    pub classes: KempeClassReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub check: SweepKind,
    pub graph: GraphSummary,
    pub mode: &'static str,
    pub palette_cap: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exception: Option<Exception>,
    pub assignments_tested: usize,
    pub colorable_assignments: usize,
    pub max_class_count: usize,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<u64>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub node_cap: usize,
    /// Record elapsed time; off for byte-reproducible reports.
    pub include_timing: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            node_cap: DEFAULT_NODE_CAP,
            include_timing: true,
        }
    }
}

struct Outcome {
    colorable: bool,
    classes: usize,
    violation: Option<KempeClassReport>,
}

/// Classifies each assignment in parallel and merges in index order.
fn sweep_assignments(
    g: &Graph,
    assignments: &[ListAssignment],
    node_cap: usize,
    violates: impl Fn(usize) -> bool + Sync,
) -> Result<Vec<Outcome>> {
    let results: Vec<Result<Outcome>> = assignments
        .par_iter()
        .map(|l| {
            let classes = classify(g, l, node_cap)?;
            let bad = violates(classes.class_count);
            Ok(Outcome {
                colorable: !classes.colorings.is_empty(),
                classes: classes.class_count,
                violation: bad.then(|| classes.report(true)),
            })
        })
        .collect();
    results.into_iter().collect()
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    kind: SweepKind,
    g: &Graph,
    gen: &AssignmentGenerator,
    assignments: Vec<ListAssignment>,
    outcomes: Vec<Outcome>,
    severity: Severity,
    exception: Option<Exception>,
    started: Option<Instant>,
) -> VerificationReport {
    let (seed, samples) = match gen.mode {
        GeneratorMode::ExhaustiveCanonical => (None, None),
        GeneratorMode::Random { samples, seed } => (Some(seed), Some(samples)),
    };
    let mut violations = Vec::new();
    for (index, (lists, o)) in assignments.into_iter().zip(&outcomes).enumerate() {
        if let Some(classes) = &o.violation {
            violations.push(Violation {
                index,
                severity,
                lists,
                classes: classes.clone(),
            });
        }
    }
    VerificationReport {
        tool: TOOL,
        version: VERSION,
        check: kind,
        graph: GraphSummary::of(g),
        mode: gen.mode.name(),
        palette_cap: gen.palette_cap,
        seed,
        samples,
        exception,
        assignments_tested: outcomes.len(),
        colorable_assignments: outcomes.iter().filter(|o| o.colorable).count(),
        max_class_count: outcomes.iter().map(|o| o.classes).max().unwrap_or(0),
        violations,
        wall_clock_ms: started.map(|t| t.elapsed().as_millis() as u64),
    }
}

fn run(
    kind: SweepKind,
    g: &Graph,
    gen: &AssignmentGenerator,
    severity: Severity,
    opts: SweepOptions,
) -> Result<VerificationReport> {
    if gen.graph != *g {
        return Err(Error::Precondition("generator was built for a different graph".into()));
    }
    let started = opts.include_timing.then(Instant::now);
    let assignments = enumerate_canonical_degree_assignments(gen)?;
    let outcomes = sweep_assignments(g, &assignments, opts.node_cap, |k| k > 1)?;
    Ok(assemble(kind, g, gen, assignments, outcomes, severity, None, started))
}

/// Identical lists `{1..Δ}`: one class expected unless `g` is complete
/// (no expectation) or the triangular prism (several classes expected).
pub fn verify_theorem1_boundary(g: &Graph, opts: SweepOptions) -> Result<VerificationReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let delta = g.max_degree();
    if delta < 3 {
        return Err(Error::Precondition(format!(
            "maximum degree is {delta}, need at least 3"
        )));
    }
    let started = opts.include_timing.then(Instant::now);
    let exception = classify_exception(g);
    let gen = AssignmentGenerator::exhaustive(g.clone(), delta);
    let lists = vec![ListAssignment::identical(g.n(), delta as u32)];
    let outcomes = sweep_assignments(g, &lists, opts.node_cap, |k| match exception {
        Exception::Complete => false,
        Exception::TriangularPrism => k < 2,
        _ => k > 1,
    })?;
    let mut report = assemble(
        SweepKind::Theorem1,
        g,
        &gen,
        lists,
        outcomes,
        Severity::Critical,
        Some(exception),
        started,
    );
    report.mode = "identical";
    Ok(report)
}

/// Every tight assignment from `gen` must give at most one class.
pub fn verify_theorem2(g: &Graph, gen: &AssignmentGenerator, opts: SweepOptions) -> Result<VerificationReport> {
    if g.is_complete() {
        return Err(Error::Precondition("graph is complete".into()));
    }
    let kappa = vertex_connectivity(g);
    if kappa < 4 {
        return Err(Error::Precondition(format!(
            "vertex connectivity is {kappa}, need at least 4"
        )));
    }
    run(SweepKind::Theorem2, g, gen, Severity::Critical, opts)
}

/// The same sweep on a 3-connected graph; any multi-class assignment is a
/// counterexample candidate.
pub fn search_conjecture(g: &Graph, gen: &AssignmentGenerator, opts: SweepOptions) -> Result<VerificationReport> {
    if g.is_complete() {
        return Err(Error::Precondition("graph is complete".into()));
    }
    let kappa = vertex_connectivity(g);
    if kappa != 3 {
        return Err(Error::Precondition(format!(
            "vertex connectivity is {kappa}, need exactly 3"
        )));
    }
    if classify_exception(g) == Exception::TriangularPrism {
        return Err(Error::Precondition("graph is the triangular prism".into()));
    }
    run(SweepKind::Conjecture, g, gen, Severity::Finding, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn quiet() -> SweepOptions {
        SweepOptions {
            include_timing: false,
            ..SweepOptions::default()
        }
    }

    #[test]
    fn theorem1_boundary_cases() {
        let r = verify_theorem1_boundary(&families::prism(), quiet()).unwrap();
        assert!(r.is_clean());
        assert!(r.max_class_count >= 2);
        assert_eq!(r.exception, Some(Exception::TriangularPrism));

        let r = verify_theorem1_boundary(&families::complete_bipartite(3, 3), quiet()).unwrap();
        assert!(r.is_clean());
        assert_eq!(r.max_class_count, 1);

        let r = verify_theorem1_boundary(&families::complete(4), quiet()).unwrap();
        assert_eq!(r.colorable_assignments, 0);
        assert!(r.is_clean());

        assert!(verify_theorem1_boundary(&families::cycle(6), quiet()).is_err());
    }

    #[test]
    fn theorem2_preconditions() {
        let k5 = families::complete(5);
        let gen = AssignmentGenerator::exhaustive(k5.clone(), 4);
        assert!(matches!(
            verify_theorem2(&k5, &gen, quiet()),
            Err(Error::Precondition(_))
        ));
        let cube = families::cube();
        let gen = AssignmentGenerator::exhaustive(cube.clone(), 3);
        assert!(matches!(
            verify_theorem2(&cube, &gen, quiet()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn octahedron_small_palette_is_clean() {
        let g = families::octahedron();
        // with four colors every tight list is {1,2,3,4}
        let gen = AssignmentGenerator::exhaustive(g.clone(), 4);
        let r = verify_theorem2(&g, &gen, quiet()).unwrap();
        assert_eq!(r.assignments_tested, 1);
        let gen = AssignmentGenerator::exhaustive(g.clone(), 5);
        let r = verify_theorem2(&g, &gen, quiet()).unwrap();
        assert!(r.is_clean());
        assert!(r.assignments_tested > 1);
        assert!(r.colorable_assignments > 0);
    }

    #[test]
    fn conjecture_preconditions() {
        let prism = families::prism();
        let gen = AssignmentGenerator::exhaustive(prism.clone(), 3);
        assert!(search_conjecture(&prism, &gen, quiet()).is_err());
        let k33 = families::complete_bipartite(3, 3);
        let gen = AssignmentGenerator::exhaustive(k33.clone(), 3);
        let r = search_conjecture(&k33, &gen, quiet()).unwrap();
        assert_eq!(r.check, SweepKind::Conjecture);
    }

    #[test]
    fn random_reports_are_reproducible() {
        let g = families::octahedron();
        let gen = AssignmentGenerator::random(g.clone(), 7, 30, 9);
        let a = verify_theorem2(&g, &gen, quiet()).unwrap().to_json();
        let b = verify_theorem2(&g, &gen, quiet()).unwrap().to_json();
        assert_eq!(a, b);
        assert!(!a.contains("wallClockMs"));
        assert!(a.contains("\"seed\": 9"));
    }

    #[test]
    fn violations_carry_witnesses() {
        // a sweep that treats the prism as an ordinary graph flags it
        let g = families::prism();
        let gen = AssignmentGenerator::exhaustive(g.clone(), 3);
        let assignments = vec![ListAssignment::identical(6, 3)];
        let outcomes = sweep_assignments(&g, &assignments, DEFAULT_NODE_CAP, |k| k > 1).unwrap();
        let r = assemble(
            SweepKind::Conjecture,
            &g,
            &gen,
            assignments,
            outcomes,
            Severity::Finding,
            None,
            None,
        );
        assert_eq!(r.violations.len(), 1);
        let json = r.to_json();
        assert!(json.contains("\"severity\": \"finding\""));
        assert!(json.contains("\"colorings\""));
        assert!(json.contains("\"0\": ["));
    }
}
