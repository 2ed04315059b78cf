//! Left ideals, maximal left ideals, the Jacobson radical and quotients.

use std::collections::HashSet;
use std::sync::Arc;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::ring::{Element, FiniteRing, DEFAULT_TABLE_CAP};

pub const DEFAULT_IDEAL_ENUM_CAP: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("ring order {order} exceeds the ideal enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("set is not an additive subgroup")]
    NotSubgroup,
    #[error("set is not closed under {0} multiplication")]
    NotClosed(&'static str),
    #[error("cannot take the quotient by the whole ring")]
    ImproperIdeal,
    #[error("radical is not nilpotent (J^{index} = J^{next} != 0)", next = index + 1)]
    NotNilpotent { index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sidedness {
    Left,
    TwoSided,
}

/// An additive subgroup closed under left (and possibly right) multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealSet {
    pub elements: BitSet,
    pub sidedness: Sidedness,
}

impl IdealSet {
    /// Validates `elements` as a left ideal, recording whether it is also
    /// right-closed.
    pub fn from_elements<I>(r: &FiniteRing, elements: I) -> Result<IdealSet, StructureError>
    where
        I: IntoIterator<Item = Element>,
    {
        let set = BitSet::from_indices(r.order(), elements);
        if !set.contains(0) || set.iter().any(|x| set.iter().any(|y| !set.contains(r.sub(x, y)))) {
            return Err(StructureError::NotSubgroup);
        }
        if !left_closed(r, &set) {
            return Err(StructureError::NotClosed("left"));
        }
        Ok(IdealSet::classify(r, set))
    }

    fn classify(r: &FiniteRing, elements: BitSet) -> IdealSet {
        let sidedness = if right_closed(r, &elements) {
            Sidedness::TwoSided
        } else {
            Sidedness::Left
        };
        IdealSet {
            elements,
            sidedness,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.elements.count() == 1
    }

    pub fn contains(&self, x: Element) -> bool {
        self.elements.contains(x)
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.elements.to_vec()
    }

    pub fn is_two_sided(&self) -> bool {
        self.sidedness == Sidedness::TwoSided
    }
}

fn left_closed(r: &FiniteRing, set: &BitSet) -> bool {
    set.iter().all(|x| r.elements().all(|a| set.contains(r.mul(a, x))))
}

fn right_closed(r: &FiniteRing, set: &BitSet) -> bool {
    set.iter().all(|x| r.elements().all(|a| set.contains(r.mul(x, a))))
}

/// Extends the additive subgroup `set` to `set + <g>`.
fn adjoin(r: &FiniteRing, set: &mut BitSet, g: Element) {
    let base = set.to_vec();
    let mut t = g;
    while !set.contains(t) {
        for &s in &base {
            set.insert(r.add(s, t));
        }
        t = r.add(t, g);
    }
}

/// The additive subgroup generated by `gens`.
fn additive_span<I: IntoIterator<Item = Element>>(r: &FiniteRing, gens: I) -> BitSet {
    let mut set = BitSet::from_indices(r.order(), [0]);
    for g in gens {
        if !set.contains(g) {
            adjoin(r, &mut set, g);
        }
    }
    set
}

fn ideal_sum(r: &FiniteRing, a: &BitSet, b: &BitSet) -> BitSet {
    let mut s = a.clone();
    for g in b {
        if !s.contains(g) {
            adjoin(r, &mut s, g);
        }
    }
    s
}

/// `Rx = { a x : a in R }`.
pub fn principal_left_ideal(r: &FiniteRing, x: Element) -> IdealSet {
    let set = BitSet::from_indices(r.order(), r.elements().map(|a| r.mul(a, x)));
    IdealSet::classify(r, set)
}

/// Every left ideal of `r`, including `{0}` and `R`, in lexicographic order
/// of their element lists.
///
/// Principal left ideals are closed under pairwise sums until nothing new
/// appears; every left ideal of a finite ring is such a finite sum.
pub fn left_ideals(r: &FiniteRing, cap: usize) -> Result<Vec<IdealSet>, StructureError> {
    if r.order() > cap {
        return Err(StructureError::CapExceeded {
            order: r.order(),
            cap,
        });
    }
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut list: Vec<BitSet> = Vec::new();
    for x in r.elements() {
        let s = BitSet::from_indices(r.order(), r.elements().map(|a| r.mul(a, x)));
        if seen.insert(s.clone()) {
            list.push(s);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            if list[i].is_subset(&list[j]) || list[j].is_subset(&list[i]) {
                continue;
            }
            let s = ideal_sum(r, &list[i], &list[j]);
            if seen.insert(s.clone()) {
                list.push(s);
            }
        }
        i += 1;
    }
    list.sort();
    Ok(list.into_iter().map(|s| IdealSet::classify(r, s)).collect())
}

/// Maximal proper left ideals in lexicographic order of their element lists.
pub fn maximal_left_ideals(r: &FiniteRing, cap: usize) -> Result<Vec<IdealSet>, StructureError> {
    let all = left_ideals(r, cap)?;
    Ok(maximal_among(r, &all))
}

fn maximal_among(r: &FiniteRing, all: &[IdealSet]) -> Vec<IdealSet> {
    let proper: Vec<&IdealSet> = all.iter().filter(|i| i.len() < r.order()).collect();
    proper
        .iter()
        .filter(|i| {
            !proper
                .iter()
                .any(|j| j.len() > i.len() && i.elements.is_subset(&j.elements))
        })
        .map(|&i| i.clone())
        .collect()
}

/// `J(R)` by quasi-regularity: `x` is in the radical iff `1 - a x` is a unit
/// for every `a`.
pub fn jacobson_radical(r: &FiniteRing) -> IdealSet {
    let one = r.one();
    let set = BitSet::from_indices(
        r.order(),
        r.elements()
            .filter(|&x| r.elements().all(|a| r.is_unit(r.sub(one, r.mul(a, x))))),
    );
    IdealSet::classify(r, set)
}

/// `J(R)` as the intersection of the given maximal left ideals.
pub fn radical_by_intersection(r: &FiniteRing, maximal: &[IdealSet]) -> BitSet {
    let mut acc = BitSet::full(r.order());
    for m in maximal {
        acc.intersect_with(&m.elements);
    }
    acc
}

/// Powers `J, J^2, ...` up to and including the first zero power.
pub fn radical_powers(r: &FiniteRing, radical: &IdealSet) -> Result<Vec<BitSet>, StructureError> {
    let j = radical.elements.to_vec();
    let mut powers = vec![radical.elements.clone()];
    loop {
        let last = powers.last().unwrap();
        if last.count() == 1 {
            return Ok(powers);
        }
        let next = additive_span(
            r,
            last.iter()
                .flat_map(|p| j.iter().map(move |&q| (p, q)))
                .map(|(p, q)| r.mul(p, q)),
        );
        if &next == last {
            return Err(StructureError::NotNilpotent {
                index: powers.len(),
            });
        }
        powers.push(next);
    }
}

/// Smallest `i >= 1` with `J(R)^i = 0`.
pub fn radical_nilpotency_index(r: &FiniteRing) -> Result<usize, StructureError> {
    radical_powers(r, &jacobson_radical(r)).map(|p| p.len())
}

/// A quotient ring together with the canonical projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: Arc<FiniteRing>,
    projection: Vec<u32>,
    representatives: Vec<u32>,
}

impl Quotient {
    pub fn project(&self, x: Element) -> Element {
        self.projection[x] as usize
    }

    /// Least-index representative of a coset.
    pub fn representative(&self, coset: Element) -> Element {
        self.representatives[coset] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.projection.iter().enumerate().all(|(i, &p)| i == p as usize)
    }
}

/// `R / I` for a proper two-sided ideal. Cosets are numbered by their
/// least-index members in ascending order, so coset 0 is `I` itself.
pub fn quotient_by_ideal(r: &Arc<FiniteRing>, ideal: &IdealSet) -> Result<Quotient, StructureError> {
    quotient_with_cap(r, ideal, DEFAULT_TABLE_CAP)
}

pub fn quotient_with_cap(
    r: &Arc<FiniteRing>,
    ideal: &IdealSet,
    table_cap: usize,
) -> Result<Quotient, StructureError> {
    let members = ideal.to_vec();
    if members.len() == r.order() {
        return Err(StructureError::ImproperIdeal);
    }
    if !right_closed(r, &ideal.elements) {
        return Err(StructureError::NotClosed("right"));
    }
    if !left_closed(r, &ideal.elements) {
        return Err(StructureError::NotClosed("left"));
    }
    if members.len() == 1 {
        let identity: Vec<u32> = r.elements().map(|x| x as u32).collect();
        return Ok(Quotient {
            ring: Arc::clone(r),
            projection: identity.clone(),
            representatives: identity,
        });
    }
    let mut projection = vec![u32::MAX; r.order()];
    let mut representatives = Vec::new();
    for x in r.elements() {
        if projection[x] != u32::MAX {
            continue;
        }
        let coset = representatives.len() as u32;
        representatives.push(x as u32);
        for &i in &members {
            let y = r.add(x, i);
            if projection[y] != u32::MAX {
                return Err(StructureError::NotSubgroup);
            }
            projection[y] = coset;
        }
    }
    let name = format!("{}/I", r.name());
    let ring = FiniteRing::quotient_from_projection(
        r,
        name,
        representatives.clone(),
        projection.clone(),
        table_cap,
    );
    Ok(Quotient {
        ring: Arc::new(ring),
        projection,
        representatives,
    })
}

/// Structural summary of a ring. Fields that need left-ideal enumeration are
/// `None` when the ring exceeds the enumeration cap.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub order: usize,
    pub unit_count: usize,
    pub commutative: bool,
    pub radical: IdealSet,
    pub radical_nilpotency_index: Result<usize, StructureError>,
    pub maximal_left_ideals: Option<Vec<IdealSet>>,
    pub is_local: Option<bool>,
    pub is_division: bool,
    pub is_field: bool,
    pub residue_field_order: Option<usize>,
    pub two_is_unit: bool,
    /// Whether the quasi-regularity radical equals the intersection of the
    /// maximal left ideals; `None` when those were not enumerated.
    pub radical_cross_check: Option<bool>,
}

pub fn structure_report(r: &FiniteRing, ideal_cap: usize) -> StructureReport {
    let radical = jacobson_radical(r);
    let maximal = maximal_left_ideals(r, ideal_cap).ok();
    let is_local = maximal.as_ref().map(|m| m.len() == 1);
    let residue_field_order = match (&maximal, is_local) {
        (Some(m), Some(true)) => Some(r.order() / m[0].len()),
        _ => None,
    };
    let radical_cross_check = maximal
        .as_ref()
        .map(|m| radical_by_intersection(r, m) == radical.elements);
    let is_division = r.unit_count() == r.order() - 1;
    StructureReport {
        order: r.order(),
        unit_count: r.unit_count(),
        commutative: r.is_commutative(),
        radical_nilpotency_index: radical_powers(r, &radical).map(|p| p.len()),
        radical,
        maximal_left_ideals: maximal,
        is_local,
        is_division,
        is_field: is_division && r.is_commutative(),
        residue_field_order,
        two_is_unit: r.two_is_unit(),
        radical_cross_check,
    }
}
