use std::cell::OnceCell;
use std::sync::Arc;

use crate::graph::{build_unit_graph, UnitGraph};
use crate::invariants::{
    chromatic_number, complete_multipartite, is_bipartite, max_clique, Bipartiteness, Chromatic,
    CliqueValue, Multipartite,
};
use crate::ring::{Element, FiniteRing, RingSpec};
use crate::structure::{
    jacobson_radical, left_ideals, maximal_left_ideals, quotient_by_ideal, radical_powers, IdealSet,
    Quotient, StructureError,
};

use super::LabOptions;

/// A ring with its unit graph and lazily computed structure, shared by all
/// checks on that ring.
pub struct RingContext {
    pub name: String,
    pub spec: Option<RingSpec>,
    pub ring: Arc<FiniteRing>,
    pub graph: UnitGraph,
    pub opts: LabOptions,
    radical: OnceCell<IdealSet>,
    maximal: OnceCell<Result<Vec<IdealSet>, StructureError>>,
    ideals: OnceCell<Result<Vec<IdealSet>, StructureError>>,
    nilpotency: OnceCell<Result<usize, StructureError>>,
    quotient: OnceCell<(Quotient, UnitGraph)>,
    omega: OnceCell<CliqueValue>,
    quotient_omega: OnceCell<CliqueValue>,
    chi: OnceCell<Chromatic>,
    quotient_chi: OnceCell<Chromatic>,
    bipartite: OnceCell<Bipartiteness>,
    quotient_bipartite: OnceCell<Bipartiteness>,
    multipartite: OnceCell<Multipartite>,
}

impl RingContext {
    pub fn new(ring: Arc<FiniteRing>, opts: LabOptions) -> Self {
        let graph = build_unit_graph(&ring);
        RingContext::with_graph(ring, graph, opts)
    }

    /// Uses `graph` in place of the unit graph of `ring`. Checks that read
    /// adjacency see `graph`; arithmetic checks still use `ring`.
    pub fn with_graph(ring: Arc<FiniteRing>, graph: UnitGraph, opts: LabOptions) -> Self {
        RingContext {
            name: ring.name().to_string(),
            spec: ring.spec().cloned(),
            ring,
            graph,
            opts,
            radical: OnceCell::new(),
            maximal: OnceCell::new(),
            ideals: OnceCell::new(),
            nilpotency: OnceCell::new(),
            quotient: OnceCell::new(),
            omega: OnceCell::new(),
            quotient_omega: OnceCell::new(),
            chi: OnceCell::new(),
            quotient_chi: OnceCell::new(),
            bipartite: OnceCell::new(),
            quotient_bipartite: OnceCell::new(),
            multipartite: OnceCell::new(),
        }
    }

    pub fn radical(&self) -> &IdealSet {
        self.radical.get_or_init(|| jacobson_radical(&self.ring))
    }

    pub fn maximal_ideals(&self) -> Result<&[IdealSet], &StructureError> {
        self.maximal
            .get_or_init(|| maximal_left_ideals(&self.ring, self.opts.ideal_cap))
            .as_deref()
    }

    pub fn left_ideals(&self) -> Result<&[IdealSet], &StructureError> {
        self.ideals
            .get_or_init(|| left_ideals(&self.ring, self.opts.ideal_cap))
            .as_deref()
    }

    pub fn nilpotency_index(&self) -> Result<usize, &StructureError> {
        self.nilpotency
            .get_or_init(|| radical_powers(&self.ring, self.radical()).map(|p| p.len()))
            .as_ref()
            .copied()
    }

    /// Locality from the maximal left ideals when enumerated, otherwise from
    /// the equivalent test "the non-units are exactly J".
    pub fn is_local(&self) -> bool {
        match self.maximal_ideals() {
            Ok(m) => m.len() == 1,
            Err(_) => {
                let j = self.radical();
                self.ring.elements().all(|x| self.ring.is_unit(x) != j.contains(x))
            }
        }
    }

    /// `|R/m|` for a local ring.
    pub fn residue_order(&self) -> Option<usize> {
        self.is_local().then(|| self.ring.order() / self.radical().len())
    }

    pub fn is_field(&self) -> bool {
        self.ring.unit_count() + 1 == self.ring.order() && self.ring.is_commutative()
    }

    pub fn quotient(&self) -> &(Quotient, UnitGraph) {
        self.quotient.get_or_init(|| {
            let q = quotient_by_ideal(&self.ring, self.radical())
                .expect("the radical is a proper two-sided ideal");
            let g = build_unit_graph(&q.ring);
            (q, g)
        })
    }

    pub fn omega(&self) -> &CliqueValue {
        self.omega
            .get_or_init(|| clique_value(&self.graph, self.opts.solver.node_budget))
    }

    pub fn quotient_omega(&self) -> &CliqueValue {
        self.quotient_omega
            .get_or_init(|| clique_value(&self.quotient().1, self.opts.solver.node_budget))
    }

    pub fn chi(&self) -> &Chromatic {
        self.chi.get_or_init(|| {
            chromatic_number(&self.graph, self.opts.solver.chi_exact_cap, self.opts.solver.node_budget)
        })
    }

    pub fn quotient_chi(&self) -> &Chromatic {
        self.quotient_chi.get_or_init(|| {
            chromatic_number(
                &self.quotient().1,
                self.opts.solver.chi_exact_cap,
                self.opts.solver.node_budget,
            )
        })
    }

    pub fn bipartite(&self) -> &Bipartiteness {
        self.bipartite.get_or_init(|| is_bipartite(&self.graph))
    }

    pub fn quotient_bipartite(&self) -> &Bipartiteness {
        self.quotient_bipartite
            .get_or_init(|| is_bipartite(&self.quotient().1))
    }

    pub fn multipartite(&self) -> &Multipartite {
        self.multipartite
            .get_or_init(|| complete_multipartite(&self.graph))
    }

    /// First pair of `vs` that is not adjacent in the graph.
    pub fn non_adjacent_pair(&self, vs: &[Element]) -> Option<(Element, Element)> {
        first_non_adjacent(&self.graph, vs)
    }

    /// First pair of `vs` that is adjacent in the graph.
    pub fn adjacent_pair(&self, vs: &[Element]) -> Option<(Element, Element)> {
        first_pair(vs, |a, b| self.graph.adjacent(a, b))
    }
}

fn clique_value(g: &UnitGraph, budget: Option<u64>) -> CliqueValue {
    match max_clique(g, budget) {
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

pub(crate) fn first_non_adjacent(g: &UnitGraph, vs: &[Element]) -> Option<(Element, Element)> {
    first_pair(vs, |a, b| a == b || !g.adjacent(a, b))
}

fn first_pair(vs: &[Element], bad: impl Fn(Element, Element) -> bool) -> Option<(Element, Element)> {
    vs.iter()
        .enumerate()
        .flat_map(|(i, &a)| vs[i + 1..].iter().map(move |&b| (a, b)))
        .find(|&(a, b)| bad(a, b))
}
