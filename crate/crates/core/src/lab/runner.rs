use std::sync::Arc;

use rayon::prelude::*;

use crate::graph::UnitGraph;
use crate::ring::{realize, FiniteRing, RingSpec};

use super::context::RingContext;
use super::verifiers::verify;
use super::{LabError, LabOptions, Status, TheoremFilter, TheoremVerdict};

/// Verdicts for one catalog ring, or why it could not be realized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingReport {
    pub spec: String,
    pub outcome: Result<Vec<TheoremVerdict>, LabError>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
    pub skipped: usize,
    pub realization_errors: usize,
}

impl Summary {
    pub fn of(reports: &[RingReport]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            match &r.outcome {
                Err(_) => s.realization_errors += 1,
                Ok(vs) => {
                    for v in vs {
                        match v.status {
                            Status::Holds => s.holds += 1,
                            Status::Fails => s.fails += 1,
                            Status::NotApplicable => s.not_applicable += 1,
                            Status::Skipped => s.skipped += 1,
                        }
                    }
                }
            }
        }
        s
    }

    /// No verdict failed and every ring was realized.
    pub fn passed(&self) -> bool {
        self.fails == 0 && self.realization_errors == 0
    }
}

fn run_context(cx: &RingContext, filter: &TheoremFilter) -> Vec<TheoremVerdict> {
    filter.ids().iter().map(|&id| verify(cx, id)).collect()
}

/// All selected checks on one ring.
pub fn verify_ring(spec: &RingSpec, filter: &TheoremFilter, opts: &LabOptions) -> Result<Vec<TheoremVerdict>, LabError> {
    let ring = Arc::new(realize(spec, opts.order_cap)?);
    Ok(run_context(&RingContext::new(ring, *opts), filter))
}

/// Runs the checks with `graph` standing in for the unit graph of `ring`.
/// Used to confirm that a corrupted graph produces failing verdicts.
pub fn verify_with_graph(
    ring: Arc<FiniteRing>,
    graph: UnitGraph,
    filter: &TheoremFilter,
    opts: &LabOptions,
) -> Vec<TheoremVerdict> {
    run_context(&RingContext::with_graph(ring, graph, *opts), filter)
}

/// Runs every selected check on every spec using `jobs` worker threads.
/// Reports are in input order regardless of completion order.
pub fn run_catalog(specs: &[RingSpec], filter: &TheoremFilter, opts: &LabOptions, jobs: usize) -> Vec<RingReport> {
    let one = |spec: &RingSpec| RingReport {
        spec: spec.to_string(),
        outcome: verify_ring(spec, filter, opts),
    };
    match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(|| specs.par_iter().map(one).collect()),
        Err(_) => specs.iter().map(one).collect(),
    }
}
