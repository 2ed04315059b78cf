//! Exact graph invariants: clique, independence and chromatic numbers,
//! bipartiteness and complete multipartite recognition.

mod clique;
mod coloring;
mod partite;

use thiserror::Error;

use crate::graph::UnitGraph;

pub use clique::{clique_number_oracle, degeneracy_order, max_clique, ORACLE_MAX_VERTICES};
pub use coloring::{
    chromatic_number, color_count, dsatur_coloring, greedy_coloring, is_proper_coloring, Chromatic,
    DEFAULT_CHI_EXACT_CAP,
};
pub use partite::{
    complete_multipartite, is_bipartite, is_bipartition, is_complete_multipartition,
    is_odd_cycle, Bipartiteness, Multipartite,
};

pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("graph has {vertices} vertices; the exhaustive oracle accepts at most {limit}")]
    TooManyVertices { vertices: usize, limit: usize },
}

/// The search hit its node budget. `best` is the largest clique seen.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("node budget exceeded after {nodes} nodes")]
pub struct BudgetExceeded {
    pub nodes: u64,
    pub best: Vec<usize>,
}

/// Clique number with a witness clique (no budget).
pub fn clique_number(g: &UnitGraph) -> (usize, Vec<usize>) {
    let c = max_clique(g, None).expect("unbudgeted search completes");
    (c.len(), c)
}

/// Largest coclique, as a maximum clique of the complement.
pub fn max_coclique(g: &UnitGraph, budget: Option<u64>) -> Result<Vec<usize>, BudgetExceeded> {
    max_clique(&g.complement(), budget)
}

/// Independence number with a witness coclique (no budget).
pub fn independence_number(g: &UnitGraph) -> (usize, Vec<usize>) {
    let c = max_coclique(g, None).expect("unbudgeted search completes");
    (c.len(), c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    pub chi_exact_cap: usize,
    pub node_budget: Option<u64>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            chi_exact_cap: DEFAULT_CHI_EXACT_CAP,
            node_budget: Some(DEFAULT_NODE_BUDGET),
        }
    }
}

/// A clique-type invariant: exact, or a lower bound when the budget ran out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueValue {
    pub witness: Vec<usize>,
    pub exact: bool,
}

impl CliqueValue {
    fn from(result: Result<Vec<usize>, BudgetExceeded>) -> Self {
        match result {
            Ok(witness) => CliqueValue {
                witness,
                exact: true,
            },
            Err(e) => CliqueValue {
                witness: e.best,
                exact: false,
            },
        }
    }

    pub fn value(&self) -> usize {
        self.witness.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub omega: CliqueValue,
    pub alpha: CliqueValue,
    pub chi: Chromatic,
    pub bipartite: Bipartiteness,
    pub multipartite: Multipartite,
}

impl InvariantReport {
    /// False when some search stopped at its budget.
    pub fn is_exact(&self) -> bool {
        self.omega.exact && self.alpha.exact && self.chi.exact().is_some()
    }

    pub fn budget_exhausted(&self, opts: &SolverOptions, vertices: usize) -> bool {
        !self.omega.exact
            || !self.alpha.exact
            || (self.chi.exact().is_none() && vertices <= opts.chi_exact_cap)
    }
}

pub fn invariant_report(g: &UnitGraph, opts: &SolverOptions) -> InvariantReport {
    InvariantReport {
        omega: CliqueValue::from(max_clique(g, opts.node_budget)),
        alpha: CliqueValue::from(max_coclique(g, opts.node_budget)),
        chi: chromatic_number(g, opts.chi_exact_cap, opts.node_budget),
        bipartite: is_bipartite(g),
        multipartite: complete_multipartite(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_unit_graph;
    use crate::ring::{parse_ring_spec, realize};

    fn g(s: &str) -> UnitGraph {
        build_unit_graph(&realize(&parse_ring_spec(s).unwrap(), 4096).unwrap())
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&g("Z2")).0, 2);
        let (w, witness) = clique_number(&g("Z5"));
        assert_eq!(w, 3);
        assert!(g("Z5").is_clique(&witness));
        assert_eq!(clique_number(&g("GF(4)")).0, 4);
        assert_eq!(clique_number_oracle(&g("Z4")).unwrap(), 2);
        assert_eq!(clique_number_oracle(&g("Z15")).unwrap(), clique_number(&g("Z15")).0);
    }

    #[test]
    fn independence_examples() {
        let (a, witness) = independence_number(&g("Z4"));
        assert_eq!(a, 2);
        assert!(g("Z4").is_coclique(&witness));
        assert_eq!(independence_number(&UnitGraph::complete(5)).0, 1);
        let (a, witness) = independence_number(&g("Z2[x]/(x^2)"));
        assert_eq!(a, 2);
        // a coset of the maximal ideal {0, x}
        assert!(witness == vec![0, 2] || witness == vec![1, 3]);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&g("Z4"), 256, None).exact(), Some(2));
        assert_eq!(chromatic_number(&g("GF(4)"), 256, None).exact(), Some(4));
        assert_eq!(chromatic_number(&g("Z2"), 256, None).exact(), Some(2));
        assert_eq!(chromatic_number(&g("Z8"), 256, None).exact(), Some(2));
    }

    #[test]
    fn report_z5() {
        let r = invariant_report(&g("Z5"), &SolverOptions::default());
        assert_eq!(r.omega.value(), 3);
        assert_eq!(r.alpha.value(), 2);
        assert_eq!(r.chi.exact(), Some(3));
        assert!(!r.bipartite.is_bipartite());
        assert_eq!(r.multipartite.parts().map(<[_]>::len), Some(3));
        assert!(r.is_exact());
    }

    #[test]
    fn multipartite_graphs_have_matching_omega_and_alpha() {
        for s in ["Z4", "Z8", "Z2[x]/(x^2)", "GF(7)", "GF(8)", "Z4[x]/(x^2+2)", "Z3"] {
            let graph = g(s);
            let parts = complete_multipartite(&graph);
            let parts = parts.parts().unwrap();
            assert_eq!(clique_number(&graph).0, parts.len(), "{s}");
            assert_eq!(
                independence_number(&graph).0,
                parts.iter().map(Vec::len).max().unwrap(),
                "{s}"
            );
        }
    }
}
