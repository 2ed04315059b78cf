//! Finite rings realized over dense element indices.
//!
//! Every ring element is an index in `0..order`. The encoding is mixed-radix:
//!
//! * `Z_n`: the residue itself.
//! * `GF(p^k)` and `Z_n[x]/(f)`: coefficient digits, constant term least significant.
//! * `M_s(B)`: row-major entry digits base `|B|`, entry `(0,0)` most significant.
//! * products: factor digits, leftmost factor most significant.
//!
//! Index 0 is always the additive identity.

pub(crate) mod arith;
mod axioms;
mod spec;

use std::sync::Arc;

use num_integer::Integer;
use thiserror::Error;

use crate::bitset::BitSet;

pub use arith::{is_irreducible, is_prime, prime_factors, prime_power, smallest_irreducible};
pub use axioms::{check_axioms, AxiomCheck, AxiomViolation, EXHAUSTIVE_AXIOM_LIMIT};
pub use spec::{parse_ring_spec, RingSpec, SpecError, SpecErrorKind};

pub type Element = usize;

pub const DEFAULT_ORDER_CAP: u64 = 4096;
pub const DEFAULT_TABLE_CAP: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring order {order} exceeds the cap {cap}")]
    OrderExceedsCap { order: String, cap: u64 },
    #[error("invalid ring description: {0}")]
    InvalidSpec(#[from] SpecErrorKind),
    #[error("GF({p}^{k}) modulus is reducible")]
    ReducibleModulus { p: u64, k: u32 },
    #[error("element index {index} out of range for a ring of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealizeOptions {
    pub order_cap: u64,
    /// Full addition and multiplication tables are memoized up to this order.
    pub table_cap: usize,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            order_cap: DEFAULT_ORDER_CAP,
            table_cap: DEFAULT_TABLE_CAP,
        }
    }
}

#[derive(Clone)]
enum Kind {
    Cyclic {
        n: u64,
    },
    Poly {
        n: u64,
        modulus: Vec<u64>,
    },
    Matrix {
        base: Arc<FiniteRing>,
        size: usize,
    },
    Product {
        factors: Vec<Arc<FiniteRing>>,
        /// Place value of each factor digit.
        place: Vec<usize>,
    },
    Quotient {
        parent: Arc<FiniteRing>,
        reps: Vec<u32>,
        proj: Vec<u32>,
    },
}

#[derive(Clone)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

/// A realized finite ring. Immutable after construction.
#[derive(Clone)]
pub struct FiniteRing {
    name: String,
    spec: Option<RingSpec>,
    order: usize,
    one: Element,
    commutative: bool,
    kind: Kind,
    neg: Vec<u32>,
    tables: Option<Tables>,
    units: BitSet,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("units", &self.units.count())
            .finish()
    }
}

/// Realizes `spec` with the default table cap.
pub fn realize(spec: &RingSpec, order_cap: u64) -> Result<FiniteRing, RingError> {
    FiniteRing::realize(
        spec,
        RealizeOptions {
            order_cap,
            ..RealizeOptions::default()
        },
    )
}

impl FiniteRing {
    pub fn realize(spec: &RingSpec, opts: RealizeOptions) -> Result<FiniteRing, RingError> {
        spec.validate()?;
        let order = spec.order().ok_or_else(|| RingError::OrderExceedsCap {
            order: "overflow".into(),
            cap: opts.order_cap,
        })?;
        if order > opts.order_cap {
            return Err(RingError::OrderExceedsCap {
                order: order.to_string(),
                cap: opts.order_cap,
            });
        }
        let (kind, commutative) = match spec {
            RingSpec::Zn(n) => (Kind::Cyclic { n: *n }, true),
            RingSpec::GaloisField { p, k, modulus } => {
                let modulus = match modulus {
                    Some(m) => {
                        if !is_irreducible(m, *p) {
                            return Err(RingError::ReducibleModulus { p: *p, k: *k });
                        }
                        m.clone()
                    }
                    None => smallest_irreducible(*p, *k),
                };
                (Kind::Poly { n: *p, modulus }, true)
            }
            RingSpec::PolyQuotient { n, modulus } => (
                Kind::Poly {
                    n: *n,
                    modulus: modulus.clone(),
                },
                true,
            ),
            RingSpec::Matrix { base, size } => {
                let base = Arc::new(FiniteRing::realize(base, opts)?);
                let commutative = *size == 1 && base.commutative;
                (Kind::Matrix { base, size: *size }, commutative)
            }
            RingSpec::Product(fs) => {
                let factors = fs
                    .iter()
                    .map(|f| FiniteRing::realize(f, opts).map(Arc::new))
                    .collect::<Result<Vec<_>, _>>()?;
                let mut place = vec![1usize; factors.len()];
                for i in (0..factors.len().saturating_sub(1)).rev() {
                    place[i] = place[i + 1] * factors[i + 1].order;
                }
                let commutative = factors.iter().all(|f| f.commutative);
                (Kind::Product { factors, place }, commutative)
            }
        };
        Ok(FiniteRing::assemble(
            spec.to_string(),
            Some(spec.clone()),
            order as usize,
            kind,
            commutative,
            opts.table_cap,
        ))
    }

    fn assemble(
        name: String,
        spec: Option<RingSpec>,
        order: usize,
        kind: Kind,
        commutative: bool,
        table_cap: usize,
    ) -> FiniteRing {
        let mut ring = FiniteRing {
            name,
            spec,
            order,
            one: 0,
            commutative,
            kind,
            neg: Vec::new(),
            tables: None,
            units: BitSet::new(order),
        };
        ring.one = ring.raw_one();
        ring.neg = (0..order).map(|x| ring.raw_neg(x) as u32).collect();
        if order <= table_cap {
            let mut add = Vec::with_capacity(order * order);
            let mut mul = Vec::with_capacity(order * order);
            for x in 0..order {
                for y in 0..order {
                    add.push(ring.raw_add(x, y) as u32);
                    mul.push(ring.raw_mul(x, y) as u32);
                }
            }
            ring.tables = Some(Tables { add, mul });
        }
        ring.units = ring.compute_units();
        ring
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn spec(&self) -> Option<&RingSpec> {
        self.spec.as_ref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Element {
        0
    }

    pub fn one(&self) -> Element {
        self.one
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    /// Validates an externally supplied index.
    pub fn check(&self, index: usize) -> Result<Element, RingError> {
        if index < self.order {
            Ok(index)
        } else {
            Err(RingError::IndexOutOfRange {
                index,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn add(&self, x: Element, y: Element) -> Element {
        match &self.tables {
            Some(t) => t.add[x * self.order + y] as usize,
            None => {
                assert!(x < self.order && y < self.order, "element out of range");
                self.raw_add(x, y)
            }
        }
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        match &self.tables {
            Some(t) => t.mul[x * self.order + y] as usize,
            None => {
                assert!(x < self.order && y < self.order, "element out of range");
                self.raw_mul(x, y)
            }
        }
    }

    #[inline]
    pub fn neg(&self, x: Element) -> Element {
        self.neg[x] as usize
    }

    #[inline]
    pub fn sub(&self, x: Element, y: Element) -> Element {
        self.add(x, self.neg(y))
    }

    pub fn pow(&self, x: Element, e: u32) -> Element {
        (0..e).fold(self.one, |acc, _| self.mul(acc, x))
    }

    /// The element `k * 1`.
    pub fn from_int(&self, k: u64) -> Element {
        (0..k).fold(0, |acc, _| self.add(acc, self.one))
    }

    #[inline]
    pub fn is_unit(&self, x: Element) -> bool {
        self.units.contains(x)
    }

    pub fn units(&self) -> &BitSet {
        &self.units
    }

    pub fn unit_count(&self) -> usize {
        self.units.count()
    }

    /// Whether `1 + 1` is a unit.
    pub fn two_is_unit(&self) -> bool {
        self.is_unit(self.add(self.one, self.one))
    }

    /// Two-sided inverse search, independent of the unit set.
    pub fn has_inverse_by_search(&self, x: Element) -> bool {
        self.elements()
            .any(|y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
    }

    fn compute_units(&self) -> BitSet {
        let n = self.order;
        match &self.kind {
            Kind::Cyclic { n: m } => {
                BitSet::from_indices(n, (0..n).filter(|&x| (x as u64).gcd(m) == 1))
            }
            // Z_n[x]/(f) -> Z_p[x]/(f) has nilpotent kernel for each p | n
            Kind::Poly { n: m, modulus } => {
                let primes = prime_factors(*m);
                let d = modulus.len() - 1;
                BitSet::from_indices(
                    n,
                    (0..n).filter(|&x| {
                        let cs = arith::digits(x as u64, *m, d);
                        primes
                            .iter()
                            .all(|&(p, _)| arith::coprime_over_prime(&cs, modulus, p))
                    }),
                )
            }
            Kind::Product { factors, .. } => BitSet::from_indices(
                n,
                (0..n).filter(|&x| {
                    self.product_digits(x)
                        .iter()
                        .zip(factors)
                        .all(|(&d, f)| f.is_unit(d))
                }),
            ),
            Kind::Matrix { base, .. } if base.commutative => BitSet::from_indices(
                n,
                (0..n).filter(|&x| base.is_unit(self.determinant(x).expect("commutative base"))),
            ),
            _ => {
                let mut units = BitSet::new(n);
                for x in 0..n {
                    if units.contains(x) {
                        continue;
                    }
                    if let Some(y) = (0..n).find(|&y| self.mul(x, y) == self.one) {
                        // finite rings: a right inverse is two-sided
                        if self.mul(y, x) == self.one {
                            units.insert(x);
                            units.insert(y);
                        }
                    }
                }
                units
            }
        }
    }

    fn raw_one(&self) -> Element {
        match &self.kind {
            Kind::Cyclic { .. } | Kind::Poly { .. } => 1,
            Kind::Matrix { base, size } => {
                let s = *size;
                let entries: Vec<Element> = (0..s * s)
                    .map(|k| if k / s == k % s { base.one } else { 0 })
                    .collect();
                self.encode_matrix(&entries)
            }
            Kind::Product { factors, .. } => {
                let ds: Vec<Element> = factors.iter().map(|f| f.one).collect();
                self.encode_product(&ds)
            }
            Kind::Quotient { parent, proj, .. } => proj[parent.one] as usize,
        }
    }

    fn raw_neg(&self, x: Element) -> Element {
        match &self.kind {
            Kind::Cyclic { n } => ((*n - x as u64) % n) as usize,
            Kind::Poly { n, modulus } => {
                let d = modulus.len() - 1;
                let cs: Vec<u64> = arith::digits(x as u64, *n, d)
                    .into_iter()
                    .map(|c| (n - c) % n)
                    .collect();
                arith::from_digits(&cs, *n) as usize
            }
            Kind::Matrix { base, .. } => {
                let es: Vec<Element> = self.matrix_entries(x).iter().map(|&e| base.neg(e)).collect();
                self.encode_matrix(&es)
            }
            Kind::Product { factors, .. } => {
                let ds: Vec<Element> = self
                    .product_digits(x)
                    .iter()
                    .zip(factors)
                    .map(|(&d, f)| f.neg(d))
                    .collect();
                self.encode_product(&ds)
            }
            Kind::Quotient { parent, reps, proj } => {
                proj[parent.neg(reps[x] as usize)] as usize
            }
        }
    }

    fn raw_add(&self, x: Element, y: Element) -> Element {
        match &self.kind {
            Kind::Cyclic { n } => ((x as u64 + y as u64) % n) as usize,
            Kind::Poly { n, modulus } => {
                let d = modulus.len() - 1;
                let a = arith::digits(x as u64, *n, d);
                let b = arith::digits(y as u64, *n, d);
                let s: Vec<u64> = a.iter().zip(&b).map(|(p, q)| (p + q) % n).collect();
                arith::from_digits(&s, *n) as usize
            }
            Kind::Matrix { base, .. } => {
                let a = self.matrix_entries(x);
                let b = self.matrix_entries(y);
                let s: Vec<Element> = a.iter().zip(&b).map(|(&p, &q)| base.add(p, q)).collect();
                self.encode_matrix(&s)
            }
            Kind::Product { factors, .. } => {
                let a = self.product_digits(x);
                let b = self.product_digits(y);
                let s: Vec<Element> = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.add(a[i], b[i]))
                    .collect();
                self.encode_product(&s)
            }
            Kind::Quotient { parent, reps, proj } => {
                proj[parent.add(reps[x] as usize, reps[y] as usize)] as usize
            }
        }
    }

    fn raw_mul(&self, x: Element, y: Element) -> Element {
        match &self.kind {
            Kind::Cyclic { n } => ((x as u64 * y as u64) % n) as usize,
            Kind::Poly { n, modulus } => {
                let d = modulus.len() - 1;
                let a = arith::digits(x as u64, *n, d);
                let b = arith::digits(y as u64, *n, d);
                let mut r = arith::poly_rem(&arith::poly_mul(&a, &b, *n), modulus, *n);
                r.resize(d, 0);
                arith::from_digits(&r, *n) as usize
            }
            Kind::Matrix { base, size } => {
                let s = *size;
                let a = self.matrix_entries(x);
                let b = self.matrix_entries(y);
                let mut c = vec![0; s * s];
                for i in 0..s {
                    for j in 0..s {
                        let mut acc = 0;
                        for k in 0..s {
                            acc = base.add(acc, base.mul(a[i * s + k], b[k * s + j]));
                        }
                        c[i * s + j] = acc;
                    }
                }
                self.encode_matrix(&c)
            }
            Kind::Product { factors, .. } => {
                let a = self.product_digits(x);
                let b = self.product_digits(y);
                let s: Vec<Element> = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.mul(a[i], b[i]))
                    .collect();
                self.encode_product(&s)
            }
            Kind::Quotient { parent, reps, proj } => {
                proj[parent.mul(reps[x] as usize, reps[y] as usize)] as usize
            }
        }
    }

    // ---- structural views -------------------------------------------------

    /// Factor rings of a product, in spec order.
    pub fn factors(&self) -> Option<&[Arc<FiniteRing>]> {
        match &self.kind {
            Kind::Product { factors, .. } => Some(factors),
            _ => None,
        }
    }

    /// Base ring and size of a matrix ring.
    pub fn matrix_base(&self) -> Option<(&Arc<FiniteRing>, usize)> {
        match &self.kind {
            Kind::Matrix { base, size } => Some((base, *size)),
            _ => None,
        }
    }

    /// Factor components of a product element, leftmost factor first.
    ///
    /// Panics if the ring is not a product.
    pub fn product_digits(&self, x: Element) -> Vec<Element> {
        let Kind::Product { factors, place } = &self.kind else {
            panic!("{} is not a product ring", self.name);
        };
        factors
            .iter()
            .zip(place)
            .map(|(f, &pv)| (x / pv) % f.order)
            .collect()
    }

    pub fn encode_product(&self, components: &[Element]) -> Element {
        let Kind::Product { place, .. } = &self.kind else {
            panic!("{} is not a product ring", self.name);
        };
        components.iter().zip(place).map(|(&d, &pv)| d * pv).sum()
    }

    /// Row-major entries of a matrix element.
    ///
    /// Panics if the ring is not a matrix ring.
    pub fn matrix_entries(&self, x: Element) -> Vec<Element> {
        let Kind::Matrix { base, size } = &self.kind else {
            panic!("{} is not a matrix ring", self.name);
        };
        let mut es = arith::digits(x as u64, base.order as u64, size * size);
        es.reverse();
        es.into_iter().map(|e| e as usize).collect()
    }

    pub fn encode_matrix(&self, entries: &[Element]) -> Element {
        let Kind::Matrix { base, .. } = &self.kind else {
            panic!("{} is not a matrix ring", self.name);
        };
        entries.iter().fold(0, |acc, &e| acc * base.order + e)
    }

    /// Determinant of a matrix over a commutative base, by cofactor expansion.
    pub fn determinant(&self, x: Element) -> Option<Element> {
        let Kind::Matrix { base, size } = &self.kind else {
            return None;
        };
        if !base.commutative {
            return None;
        }
        let es = self.matrix_entries(x);
        let rows: Vec<usize> = (0..*size).collect();
        Some(det_minor(base, &es, *size, 0, &rows))
    }

    /// Polynomial coefficients (constant first) of an element of a
    /// polynomial-quotient or Galois-field ring.
    pub fn poly_coefficients(&self, x: Element) -> Option<Vec<u64>> {
        match &self.kind {
            Kind::Poly { n, modulus } => Some(arith::digits(x as u64, *n, modulus.len() - 1)),
            _ => None,
        }
    }

    /// The modulus polynomial of a polynomial-quotient or Galois-field ring.
    pub fn modulus(&self) -> Option<&[u64]> {
        match &self.kind {
            Kind::Poly { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    /// Human-readable label for an element.
    pub fn label(&self, x: Element) -> String {
        match &self.kind {
            Kind::Cyclic { .. } => x.to_string(),
            Kind::Poly { n, modulus } => {
                let mut s = String::new();
                let cs = arith::digits(x as u64, *n, modulus.len() - 1);
                spec::write_poly(&mut s, &cs).expect("write to String");
                s
            }
            Kind::Matrix { base, size } => {
                let es = self.matrix_entries(x);
                let rows: Vec<String> = es
                    .chunks(*size)
                    .map(|r| {
                        let cells: Vec<String> = r.iter().map(|&e| base.label(e)).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            Kind::Product { factors, .. } => {
                let parts: Vec<String> = self
                    .product_digits(x)
                    .iter()
                    .zip(factors)
                    .map(|(&d, f)| f.label(d))
                    .collect();
                format!("({})", parts.join(","))
            }
            Kind::Quotient { parent, reps, .. } => format!("[{}]", parent.label(reps[x] as usize)),
        }
    }

    /// Builds `self / I` from a coset projection. Called by the structure
    /// module after it has verified that `I` is a proper two-sided ideal.
    pub(crate) fn quotient_from_projection(
        parent: &Arc<FiniteRing>,
        name: String,
        reps: Vec<u32>,
        proj: Vec<u32>,
        table_cap: usize,
    ) -> FiniteRing {
        let order = reps.len();
        let commutative = parent.commutative
            || reps.iter().all(|&a| {
                reps.iter().all(|&b| {
                    proj[parent.mul(a as usize, b as usize)] == proj[parent.mul(b as usize, a as usize)]
                })
            });
        FiniteRing::assemble(
            name,
            None,
            order,
            Kind::Quotient {
                parent: Arc::clone(parent),
                reps,
                proj,
            },
            commutative,
            table_cap,
        )
    }
}

fn det_minor(base: &FiniteRing, es: &[Element], size: usize, row: usize, cols: &[usize]) -> Element {
    if cols.len() == 1 {
        return es[row * size + cols[0]];
    }
    let mut acc = 0;
    for (k, &c) in cols.iter().enumerate() {
        let entry = es[row * size + c];
        if entry == 0 {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
        let term = base.mul(entry, det_minor(base, es, size, row + 1, &rest));
        acc = if k % 2 == 0 {
            base.add(acc, term)
        } else {
            base.sub(acc, term)
        };
    }
    acc
}
