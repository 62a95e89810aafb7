//! Exhaustive sweep over small connected graphs, cross-checking the
//! searches against the brute-force oracle and the structural claims.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::decompose::{
    brute_force_certificates, convert_type_i_to_ii, decide, partition_agrees, partition_view,
    structure_check, verify_partition_i, verify_partition_ii, Certificate, PartitionView, Pattern,
    DEFAULT_ORACLE_CAP,
};
use crate::error::{Error, Result};
use crate::families::{enumerate_connected_graphs, DEFAULT_ENUMERATION_CAP};
use crate::graph::{Edge, Graph};

const CHUNK: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    /// Cross-check every graph against the exhaustive oracle.
    pub oracle: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub max_oracle_d: usize,
    pub max_n_cap: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 4,
            oracle: false,
            jobs: None,
            max_oracle_d: DEFAULT_ORACLE_CAP,
            max_n_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

/// The claim a violation contradicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// Search and oracle disagree on pattern I, or on its greatest certificate.
    OracleTypeI,
    OracleTypeII,
    /// A separating weighting exists but none matches pattern I or II.
    PatternReduction,
    /// `a` separates but `-a` does not, or matches a different pattern.
    SignSymmetry,
    /// A certificate's partition view fails verification.
    PartitionRoundTrip,
    /// The zero subgraph has the wrong component structure.
    StructureTheorem,
    /// A bipartite graph is decomposable in exactly one pattern.
    BipartiteEquivalence,
    /// Converting pattern I to pattern II changed an edge sign or failed.
    ConversionSign,
    /// The analysis itself returned an error.
    Analysis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub claim: Claim,
    pub vertices: usize,
    pub edges: Vec<Edge>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub graphs: usize,
    /// Graphs without edges, which analysis rejects.
    pub skipped: usize,
    pub decomposable: usize,
    pub type_i_only: usize,
    pub type_ii_only: usize,
    pub both: usize,
    pub neither: usize,
    pub oracle_checked: usize,
}

impl Counts {
    fn add(&mut self, o: &GraphOutcome) {
        self.graphs += 1;
        if o.skipped {
            self.skipped += 1;
            return;
        }
        match (o.type_i, o.type_ii) {
            (true, true) => self.both += 1,
            (true, false) => self.type_i_only += 1,
            (false, true) => self.type_ii_only += 1,
            (false, false) => self.neither += 1,
        }
        if o.type_i || o.type_ii {
            self.decomposable += 1;
        }
        if o.oracle_checked {
            self.oracle_checked += 1;
        }
    }

    fn merge(&mut self, other: &Counts) {
        self.graphs += other.graphs;
        self.skipped += other.skipped;
        self.decomposable += other.decomposable;
        self.type_i_only += other.type_i_only;
        self.type_ii_only += other.type_ii_only;
        self.both += other.both;
        self.neither += other.neither;
        self.oracle_checked += other.oracle_checked;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeSummary {
    pub n: usize,
    #[serde(flatten)]
    pub counts: Counts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub max_n: usize,
    pub oracle: bool,
    pub per_size: Vec<SizeSummary>,
    pub totals: Counts,
    pub violations: Vec<Violation>,
}

/// What the sweep learned about one graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphOutcome {
    pub skipped: bool,
    pub type_i: bool,
    pub type_ii: bool,
    pub oracle_checked: bool,
    pub violations: Vec<Violation>,
}

struct Recorder<'a> {
    g: &'a Graph,
    violations: Vec<Violation>,
}

impl Recorder<'_> {
    fn fail(&mut self, claim: Claim, detail: impl Into<String>) {
        self.violations.push(Violation {
            claim,
            vertices: self.g.d(),
            edges: self.g.edges().to_vec(),
            detail: detail.into(),
        });
    }

    fn guard<T>(&mut self, claim: Claim, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(claim, e.to_string());
                None
            }
        }
    }

    fn partition_round_trip(&mut self, c: &Certificate, view: Option<PartitionView>) {
        let Some(view) = view.or_else(|| partition_view(self.g, c).ok()) else {
            self.fail(
                Claim::PartitionRoundTrip,
                format!("no partition view for {}", c.weights),
            );
            return;
        };
        let verified = match c.pattern {
            Pattern::TypeI => verify_partition_i(self.g, &view),
            Pattern::TypeII => verify_partition_ii(self.g, &view),
        };
        let agrees = partition_agrees(self.g, &view);
        match (verified, agrees) {
            (Ok(true), Ok(true)) => {}
            (v, a) => self.fail(
                Claim::PartitionRoundTrip,
                format!("{}: verified {v:?}, agrees {a:?}", c.weights),
            ),
        }
    }

    fn structure(&mut self, c: &Certificate) {
        if let Some(s) = self.guard(Claim::StructureTheorem, structure_check(self.g, c)) {
            if !s.passed {
                self.fail(
                    Claim::StructureTheorem,
                    format!(
                        "{} ({:?}): zero components {:?}",
                        c.weights, s.clause, s.components
                    ),
                );
            }
        }
    }

    fn conversion(&mut self, bip: &(Vec<usize>, Vec<usize>), c: &Certificate) {
        let converted = convert_type_i_to_ii(self.g, (&bip.0, &bip.1), c);
        let Some(out) = self.guard(Claim::ConversionSign, converted) else {
            return;
        };
        if out.positive != c.positive || out.negative != c.negative || out.zero != c.zero {
            self.fail(
                Claim::ConversionSign,
                format!("{} -> {} changed edge signs", c.weights, out.weights),
            );
        }
    }
}

/// Runs every check on one graph.
pub fn check_graph(g: &Graph, config: &SweepConfig) -> GraphOutcome {
    if g.edge_count() == 0 {
        return GraphOutcome {
            skipped: true,
            ..Default::default()
        };
    }
    let mut rec = Recorder {
        g,
        violations: Vec::new(),
    };
    let Some(report) = rec.guard(Claim::Analysis, decide(g)) else {
        return GraphOutcome {
            violations: rec.violations,
            ..Default::default()
        };
    };
    let bipartition = g.bipartition();

    for w in [&report.type_i, &report.type_ii].into_iter().flatten() {
        rec.partition_round_trip(&w.certificate, w.partition.clone());
        rec.structure(&w.certificate);
    }
    if let Some(bip) = &bipartition {
        if report.type_i.is_some() != report.type_ii.is_some() {
            rec.fail(
                Claim::BipartiteEquivalence,
                format!(
                    "type I {}, type II {}",
                    report.type_i.is_some(),
                    report.type_ii.is_some()
                ),
            );
        }
        if let Some(c) = report.type_i_certificate() {
            rec.conversion(bip, c);
        }
    }

    let mut oracle_checked = false;
    if config.oracle && g.d() <= config.max_oracle_d {
        if let Some(hits) = rec.guard(
            Claim::Analysis,
            brute_force_certificates(g, config.max_oracle_d),
        ) {
            oracle_checked = true;
            let greatest = |p: Pattern| {
                hits.iter()
                    .filter(|h| h.pattern == Some(p))
                    .map(|h| h.weights.normalized())
                    .max()
            };
            for (p, found, claim) in [
                (
                    Pattern::TypeI,
                    report.type_i_certificate(),
                    Claim::OracleTypeI,
                ),
                (
                    Pattern::TypeII,
                    report.type_ii_certificate(),
                    Claim::OracleTypeII,
                ),
            ] {
                let expected = greatest(p);
                let found = found.map(|c| c.weights.clone());
                if expected != found {
                    rec.fail(claim, format!("oracle {expected:?}, search {found:?}"));
                }
            }
            if !hits.is_empty() && hits.iter().all(|h| h.pattern.is_none()) {
                rec.fail(
                    Claim::PatternReduction,
                    format!("{} separating weightings, none patterned", hits.len()),
                );
            }
            let index: HashSet<_> = hits.iter().map(|h| (&h.weights, h.pattern)).collect();
            for h in &hits {
                let flipped = h.weights.negated();
                if !index.contains(&(&flipped, h.pattern)) {
                    rec.fail(Claim::SignSymmetry, format!("{} has no mirror", h.weights));
                }
            }
            // every patterned weighting, not only the reported ones
            for h in hits.iter().filter(|h| h.pattern.is_some()) {
                let Some(c) = rec.guard(Claim::Analysis, Certificate::new(g, h.weights.clone()))
                else {
                    continue;
                };
                rec.partition_round_trip(&c, None);
                rec.structure(&c);
                if let (Some(bip), Pattern::TypeI) = (&bipartition, c.pattern) {
                    rec.conversion(bip, &c);
                }
            }
        }
    }

    GraphOutcome {
        skipped: false,
        type_i: report.type_i.is_some(),
        type_ii: report.type_ii.is_some(),
        oracle_checked,
        violations: rec.violations,
    }
}

/// Sweeps every labeled connected graph on `1..=max_n` vertices. Results
/// are aggregated in enumeration order whatever the worker count.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary> {
    if config.max_n == 0 {
        return Err(Error::NoVertices);
    }
    if config.max_n > config.max_n_cap {
        return Err(Error::CapExceeded {
            what: "sweep vertex count",
            got: config.max_n,
            cap: config.max_n_cap,
        });
    }
    let body = || -> Result<SweepSummary> {
        let mut per_size = Vec::new();
        let mut totals = Counts::default();
        let mut violations = Vec::new();
        for n in 1..=config.max_n {
            let mut counts = Counts::default();
            let mut graphs = enumerate_connected_graphs(n, config.max_n_cap)?.peekable();
            while graphs.peek().is_some() {
                let chunk: Vec<Graph> = graphs.by_ref().take(CHUNK).collect();
                let outcomes: Vec<GraphOutcome> =
                    chunk.par_iter().map(|g| check_graph(g, config)).collect();
                for o in outcomes {
                    counts.add(&o);
                    violations.extend(o.violations);
                }
            }
            totals.merge(&counts);
            per_size.push(SizeSummary { n, counts });
        }
        Ok(SweepSummary {
            max_n: config.max_n,
            oracle: config.oracle,
            per_size,
            totals,
            violations,
        })
    };
    match config.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Io(std::io::Error::other(e)))?
            .install(body),
        None => body(),
    }
}
