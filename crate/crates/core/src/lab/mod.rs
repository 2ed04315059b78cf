//! Instance checks of unit-graph statements over a catalog of rings.
//!
//! Each check is identified by a short id (`L2.1a`, `T3.1-iff`, ...) and
//! produces a [`TheoremVerdict`] per ring: the compared quantities or
//! predicates, a status, and witnesses that can be re-validated without
//! trusting the code that found them.

mod catalog;
mod context;
mod runner;
mod semisimple;
mod verifiers;

use std::fmt::{self, Write};

use thiserror::Error;

use crate::graph::UnitGraph;
use crate::invariants::{is_complete_multipartition, is_odd_cycle, is_proper_coloring, SolverOptions};
use crate::ring::{Element, FiniteRing, RingError, DEFAULT_ORDER_CAP};
use crate::structure::DEFAULT_IDEAL_ENUM_CAP;

pub use catalog::{default_catalog, describe, CatalogEntry};
pub use context::RingContext;
pub use runner::{run_catalog, verify_ring, verify_with_graph, RingReport, Summary};
pub use semisimple::{
    construct_matrix_triangle, semisimple_form, verify_product_clique_witness, MatrixTriangle,
    SimpleComponent,
};

/// The checkable statements, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    RadicalOmega,
    RadicalChi,
    RadicalChiEqual,
    CliqueBound,
    CliqueWitness,
    OnePlusRadicalClique,
    IdealIndependence,
    LocalDichotomy,
    RadicalNilpotent,
    MultipartiteIff,
    MultipartiteParts,
    BipartiteRadical,
    BipartiteQuotient,
    BipartiteSemisimple,
    MatrixTriangle,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::RadicalOmega,
        TheoremId::RadicalChi,
        TheoremId::RadicalChiEqual,
        TheoremId::CliqueBound,
        TheoremId::CliqueWitness,
        TheoremId::OnePlusRadicalClique,
        TheoremId::IdealIndependence,
        TheoremId::LocalDichotomy,
        TheoremId::RadicalNilpotent,
        TheoremId::MultipartiteIff,
        TheoremId::MultipartiteParts,
        TheoremId::BipartiteRadical,
        TheoremId::BipartiteQuotient,
        TheoremId::BipartiteSemisimple,
        TheoremId::MatrixTriangle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::RadicalOmega => "L2.1a",
            TheoremId::RadicalChi => "L2.1b",
            TheoremId::RadicalChiEqual => "L2.1c",
            TheoremId::CliqueBound => "T2.5-bound",
            TheoremId::CliqueWitness => "T2.5-clique-witness",
            TheoremId::OnePlusRadicalClique => "oneplusJ-clique",
            TheoremId::IdealIndependence => "ideal-independence",
            TheoremId::LocalDichotomy => "local-dichotomy",
            TheoremId::RadicalNilpotent => "radical-nilpotent",
            TheoremId::MultipartiteIff => "T3.1-iff",
            TheoremId::MultipartiteParts => "T3.1-parts",
            TheoremId::BipartiteRadical => "T3.2a",
            TheoremId::BipartiteQuotient => "T3.2b",
            TheoremId::BipartiteSemisimple => "T3.2c",
            TheoremId::MatrixTriangle => "matrix-triangle",
        }
    }

    /// One-line statement of what is checked.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::RadicalOmega => "omega(G(R/J)) <= omega(G(R))",
            TheoremId::RadicalChi => "chi(G(R/J)) <= chi(G(R))",
            TheoremId::RadicalChiEqual => "2 not a unit implies chi(G(R/J)) = chi(G(R))",
            TheoremId::CliqueBound => "2 a unit implies omega(G(R)) >= |Max_l(R)| + 1",
            TheoremId::CliqueWitness => {
                "2 a unit: lifts of (0,1,..,1),..,(1,..,1,0),(1,..,1) form a clique"
            }
            TheoremId::OnePlusRadicalClique => "2 a unit implies 1 + J is a clique",
            TheoremId::IdealIndependence => "every proper left ideal is a coclique",
            TheoremId::LocalDichotomy => "R local implies x or 1 - x is a unit for every x",
            TheoremId::RadicalNilpotent => "J is nilpotent and each x in J has x^i = 0",
            TheoremId::MultipartiteIff => {
                "G(R) complete multipartite iff (R local and |R/m| = 2^n) or R a field"
            }
            TheoremId::MultipartiteParts => {
                "parts are the cosets of m, or {0} and the pairs {x,-x} in odd fields"
            }
            TheoremId::BipartiteRadical => "J != 0 and 2 a unit implies G(R) not bipartite",
            TheoremId::BipartiteQuotient => "2 not a unit: G(R) bipartite iff G(R/J) bipartite",
            TheoremId::BipartiteSemisimple => {
                "R semisimple: G(R) bipartite iff R = Z3 or R has a Z2 summand"
            }
            TheoremId::MatrixTriangle => "0, A, B form a triangle in G(M_n(F)) for n = 2, 3",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A set of theorem ids selected by comma-separated, case-insensitive prefixes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremFilter {
    selected: Vec<TheoremId>,
}

impl TheoremFilter {
    pub fn all() -> Self {
        TheoremFilter {
            selected: TheoremId::ALL.to_vec(),
        }
    }

    /// `"T3.1"` selects `T3.1-iff` and `T3.1-parts`; `"T3.2c,L2.1"` selects
    /// four ids. Each prefix must match at least one id.
    pub fn parse(text: &str) -> Result<Self, LabError> {
        let mut selected = Vec::new();
        for prefix in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let lower = prefix.to_ascii_lowercase();
            let matched: Vec<TheoremId> = TheoremId::ALL
                .into_iter()
                .filter(|id| id.as_str().to_ascii_lowercase().starts_with(&lower))
                .collect();
            if matched.is_empty() {
                return Err(LabError::UnknownTheorem(prefix.to_string()));
            }
            selected.extend(matched);
        }
        if selected.is_empty() {
            return Err(LabError::UnknownTheorem(text.to_string()));
        }
        selected.sort_unstable();
        selected.dedup();
        Ok(TheoremFilter { selected })
    }

    pub fn contains(&self, id: TheoremId) -> bool {
        self.selected.contains(&id)
    }

    pub fn ids(&self) -> &[TheoremId] {
        &self.selected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("no theorem id starts with {0:?}")]
    UnknownTheorem(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("matrix triangles are defined for n = 2 or 3, not {0}")]
    UnsupportedMatrixSize(usize),
    #[error("{0} is not a field")]
    NotAField(String),
    #[error("{0} is not a field of odd order")]
    NotOddField(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabOptions {
    pub order_cap: u64,
    pub ideal_cap: usize,
    pub solver: SolverOptions,
}

impl Default for LabOptions {
    fn default() -> Self {
        LabOptions {
            order_cap: DEFAULT_ORDER_CAP,
            ideal_cap: DEFAULT_IDEAL_ENUM_CAP,
            solver: SolverOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    /// The hypothesis is false for this ring.
    NotApplicable,
    /// The hypothesis may hold but a needed value was not computed (cap or budget).
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::NotApplicable => "n/a",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One compared pair of values, or a single checked property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    Le { lhs: (String, usize), rhs: (String, usize) },
    Ge { lhs: (String, usize), rhs: (String, usize) },
    Eq { lhs: (String, usize), rhs: (String, usize) },
    Iff { lhs: (String, bool), rhs: (String, bool) },
    Property { name: String, value: bool },
}

impl Claim {
    pub fn le(lhs: &str, l: usize, rhs: &str, r: usize) -> Claim {
        Claim::Le {
            lhs: (lhs.into(), l),
            rhs: (rhs.into(), r),
        }
    }

    pub fn ge(lhs: &str, l: usize, rhs: &str, r: usize) -> Claim {
        Claim::Ge {
            lhs: (lhs.into(), l),
            rhs: (rhs.into(), r),
        }
    }

    pub fn eq(lhs: &str, l: usize, rhs: &str, r: usize) -> Claim {
        Claim::Eq {
            lhs: (lhs.into(), l),
            rhs: (rhs.into(), r),
        }
    }

    pub fn iff(lhs: &str, l: bool, rhs: &str, r: bool) -> Claim {
        Claim::Iff {
            lhs: (lhs.into(), l),
            rhs: (rhs.into(), r),
        }
    }

    pub fn property(name: &str, value: bool) -> Claim {
        Claim::Property {
            name: name.into(),
            value,
        }
    }

    pub fn evaluate(&self) -> bool {
        match self {
            Claim::Le { lhs, rhs } => lhs.1 <= rhs.1,
            Claim::Ge { lhs, rhs } => lhs.1 >= rhs.1,
            Claim::Eq { lhs, rhs } => lhs.1 == rhs.1,
            Claim::Iff { lhs, rhs } => lhs.1 == rhs.1,
            Claim::Property { value, .. } => *value,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Le { lhs, rhs } => write!(f, "{}={} <= {}={}", lhs.0, lhs.1, rhs.0, rhs.1),
            Claim::Ge { lhs, rhs } => write!(f, "{}={} >= {}={}", lhs.0, lhs.1, rhs.0, rhs.1),
            Claim::Eq { lhs, rhs } => write!(f, "{}={} == {}={}", lhs.0, lhs.1, rhs.0, rhs.1),
            Claim::Iff { lhs, rhs } => write!(f, "{}={} <=> {}={}", lhs.0, lhs.1, rhs.0, rhs.1),
            Claim::Property { name, value } => write!(f, "{name}={value}"),
        }
    }
}

/// Which graph a witness refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Ring,
    /// The quotient `R/J(R)`.
    Quotient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Clique(Vec<Element>),
    Coclique(Vec<Element>),
    /// Two vertices that are not adjacent.
    NonAdjacent(Element, Element),
    /// Two vertices that are adjacent.
    Adjacent(Element, Element),
    Coloring(Vec<usize>),
    Bipartition([Vec<Element>; 2]),
    OddCycle(Vec<Element>),
    Parts(Vec<Vec<Element>>),
    /// `a`, `b` and `b`, `c` non-adjacent (or equal) while `a`, `c` adjacent.
    NotMultipartite([Element; 3]),
    /// `x` and `1 - x` are both non-units.
    DichotomyFailure(Element),
    /// `x^exponent != 0`.
    NotNilpotent { x: Element, exponent: u32 },
}

impl Witness {
    /// Re-validates the witness from scratch against `r` and its graph `g`.
    pub fn recheck(&self, r: &FiniteRing, g: &UnitGraph) -> bool {
        let n = g.vertex_count();
        let in_range = |vs: &[Element]| vs.iter().all(|&v| v < n);
        match self {
            Witness::Clique(vs) => in_range(vs) && g.is_clique(vs),
            Witness::Coclique(vs) => in_range(vs) && g.is_coclique(vs),
            Witness::NonAdjacent(a, b) => *a < n && *b < n && a != b && !g.adjacent(*a, *b),
            Witness::Adjacent(a, b) => *a < n && *b < n && g.adjacent(*a, *b),
            Witness::Coloring(c) => is_proper_coloring(g, c),
            Witness::Bipartition(parts) => crate::invariants::is_bipartition(g, parts),
            Witness::OddCycle(c) => in_range(c) && is_odd_cycle(g, c),
            Witness::Parts(parts) => is_complete_multipartition(g, parts),
            Witness::NotMultipartite([a, b, c]) => {
                let related = |x: Element, y: Element| x == y || !g.adjacent(x, y);
                in_range(&[*a, *b, *c]) && related(*a, *b) && related(*b, *c) && !related(*a, *c)
            }
            Witness::DichotomyFailure(x) => {
                *x < r.order() && !r.is_unit(*x) && !r.is_unit(r.sub(r.one(), *x))
            }
            Witness::NotNilpotent { x, exponent } => *x < r.order() && r.pow(*x, *exponent) != 0,
        }
    }
}

/// Sets longer than this are summarized in verdict lines.
const LIST_LIMIT: usize = 32;

fn write_set(out: &mut String, vs: &[Element]) {
    out.push('{');
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{v}").unwrap();
    }
    out.push('}');
}

fn write_partition(out: &mut String, parts: &[Vec<Element>]) {
    let total: usize = parts.iter().map(Vec::len).sum();
    if total <= LIST_LIMIT {
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                out.push('|');
            }
            write_set(out, p);
        }
    } else {
        let sizes: Vec<String> = parts.iter().map(|p| p.len().to_string()).collect();
        write!(out, "{} parts of sizes {}", parts.len(), sizes.join(",")).unwrap();
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        match self {
            Witness::Clique(vs) => {
                s.push_str("clique=");
                write_set(&mut s, vs);
            }
            Witness::Coclique(vs) => {
                s.push_str("coclique=");
                if vs.len() <= LIST_LIMIT {
                    write_set(&mut s, vs);
                } else {
                    write!(s, "size {}", vs.len()).unwrap();
                }
            }
            Witness::NonAdjacent(a, b) => write!(s, "non-adjacent={a},{b}").unwrap(),
            Witness::Adjacent(a, b) => write!(s, "adjacent={a},{b}").unwrap(),
            Witness::Coloring(c) => {
                write!(s, "coloring={} colors", crate::invariants::color_count(c)).unwrap()
            }
            Witness::Bipartition(parts) => {
                s.push_str("bipartition=");
                write_partition(&mut s, parts);
            }
            Witness::OddCycle(c) => {
                s.push_str("odd-cycle=");
                let cells: Vec<String> = c.iter().map(usize::to_string).collect();
                s.push_str(&cells.join("-"));
            }
            Witness::Parts(parts) => {
                s.push_str("parts=");
                write_partition(&mut s, parts);
            }
            Witness::NotMultipartite([a, b, c]) => {
                write!(s, "intransitive-triple=({a},{b},{c})").unwrap()
            }
            Witness::DichotomyFailure(x) => write!(s, "x={x} with x and 1-x non-units").unwrap(),
            Witness::NotNilpotent { x, exponent } => write!(s, "x={x} with x^{exponent}!=0").unwrap(),
        }
        f.write_str(&s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub target: Target,
    pub witness: Witness,
}

impl Evidence {
    pub fn ring(witness: Witness) -> Evidence {
        Evidence {
            target: Target::Ring,
            witness,
        }
    }

    pub fn quotient(witness: Witness) -> Evidence {
        Evidence {
            target: Target::Quotient,
            witness,
        }
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.target {
            Target::Ring => write!(f, "{}", self.witness),
            Target::Quotient => write!(f, "R/J:{}", self.witness),
        }
    }
}

/// Result of one check on one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub ring: String,
    pub status: Status,
    /// All claims hold exactly when the status is `Holds`.
    pub claims: Vec<Claim>,
    pub evidence: Vec<Evidence>,
    pub note: Option<String>,
}

impl TheoremVerdict {
    /// A decided verdict; the status follows from the claims.
    pub fn decided(theorem: TheoremId, ring: &str, claims: Vec<Claim>, evidence: Vec<Evidence>) -> Self {
        let status = if claims.iter().all(Claim::evaluate) {
            Status::Holds
        } else {
            Status::Fails
        };
        TheoremVerdict {
            theorem,
            ring: ring.to_string(),
            status,
            claims,
            evidence,
            note: None,
        }
    }

    pub fn not_applicable(theorem: TheoremId, ring: &str, reason: impl Into<String>) -> Self {
        TheoremVerdict::undecided(theorem, ring, Status::NotApplicable, reason.into())
    }

    pub fn skipped(theorem: TheoremId, ring: &str, reason: impl Into<String>) -> Self {
        TheoremVerdict::undecided(theorem, ring, Status::Skipped, reason.into())
    }

    fn undecided(theorem: TheoremId, ring: &str, status: Status, reason: String) -> Self {
        TheoremVerdict {
            theorem,
            ring: ring.to_string(),
            status,
            claims: Vec::new(),
            evidence: Vec::new(),
            note: Some(reason),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    /// Compact payload: claims, then witnesses, then the note, separated by `"; "`.
    pub fn payload(&self) -> String {
        let mut items: Vec<String> = self.claims.iter().map(Claim::to_string).collect();
        items.extend(self.evidence.iter().map(Evidence::to_string));
        items.extend(self.note.clone());
        items.join("; ")
    }

    /// `theorem_id TAB ring TAB status TAB payload`.
    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}\t{}", self.theorem, self.ring, self.status, self.payload())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_prefixes() {
        let f = TheoremFilter::parse("T3.1").unwrap();
        assert_eq!(f.ids(), &[TheoremId::MultipartiteIff, TheoremId::MultipartiteParts]);
        let f = TheoremFilter::parse("t3.2c, L2.1").unwrap();
        assert_eq!(f.ids().len(), 4);
        assert!(f.contains(TheoremId::BipartiteSemisimple));
        assert_eq!(TheoremFilter::parse("T2.5").unwrap().ids().len(), 2);
        assert!(TheoremFilter::parse("T9").is_err());
        assert!(TheoremFilter::parse(" ").is_err());
        assert_eq!(TheoremFilter::all().ids().len(), 15);
    }

    #[test]
    fn ids_are_distinct_and_ordered() {
        let names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
        assert!(TheoremId::ALL.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn status_follows_claims() {
        let v = TheoremVerdict::decided(
            TheoremId::RadicalOmega,
            "Z4",
            vec![Claim::le("a", 2, "b", 2), Claim::property("p", true)],
            vec![Evidence::ring(Witness::Clique(vec![0, 1]))],
        );
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.to_line(), "L2.1a\tZ4\tholds\ta=2 <= b=2; p=true; clique={0,1}");
        let v = TheoremVerdict::decided(TheoremId::RadicalOmega, "Z4", vec![Claim::ge("a", 1, "b", 2)], vec![]);
        assert_eq!(v.status, Status::Fails);
        let v = TheoremVerdict::not_applicable(TheoremId::CliqueBound, "Z4", "2 is not a unit");
        assert_eq!(v.to_line(), "T2.5-bound\tZ4\tn/a\t2 is not a unit");
    }

    #[test]
    fn witnesses_recheck() {
        let r = crate::ring::realize(&crate::ring::parse_ring_spec("Z6").unwrap(), 64).unwrap();
        let g = crate::graph::build_unit_graph(&r);
        assert!(Witness::DichotomyFailure(3).recheck(&r, &g));
        assert!(!Witness::DichotomyFailure(1).recheck(&r, &g));
        assert!(Witness::Clique(vec![0, 1]).recheck(&r, &g));
        assert!(!Witness::Clique(vec![0, 2]).recheck(&r, &g));
        assert!(Witness::NonAdjacent(0, 2).recheck(&r, &g));
        assert!(!Witness::NonAdjacent(0, 0).recheck(&r, &g));
        assert!(!Witness::Clique(vec![0, 9]).recheck(&r, &g));
        assert!(Witness::NotNilpotent { x: 2, exponent: 5 }.recheck(&r, &g));
    }
}
