//! Syntactic semisimple decompositions and the explicit triangles and
//! cliques used to certify graph properties of such rings.

use std::fmt;
use std::sync::Arc;

use crate::graph::build_unit_graph;
use crate::ring::arith::factor_over_prime;
use crate::ring::{prime_factors, realize, Element, FiniteRing, RingSpec};

use super::{Claim, Evidence, LabError, TheoremId, TheoremVerdict, Witness};

/// One simple factor `M_size(GF(field_order))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimpleComponent {
    pub size: usize,
    pub field_order: u64,
}

impl SimpleComponent {
    pub fn is_z2(self) -> bool {
        self == SimpleComponent {
            size: 1,
            field_order: 2,
        }
    }

    pub fn is_z3(self) -> bool {
        self == SimpleComponent {
            size: 1,
            field_order: 3,
        }
    }
}

impl fmt::Display for SimpleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size == 1 {
            write!(f, "GF({})", self.field_order)
        } else {
            write!(f, "M{}(GF({}))", self.size, self.field_order)
        }
    }
}

/// Decomposes `spec` as a product of matrix rings over finite fields when
/// that follows from its syntax: squarefree `Z_n` splits by the Chinese
/// remainder theorem, `Z_n[x]/(f)` by factoring `f` modulo each prime of a
/// squarefree `n`, and `M_s` distributes over products. `None` means the
/// ring has a nonzero radical (or is not recognized).
pub fn semisimple_form(spec: &RingSpec) -> Option<Vec<SimpleComponent>> {
    let field = |q: u64| SimpleComponent {
        size: 1,
        field_order: q,
    };
    match spec {
        RingSpec::Zn(n) => {
            let fs = prime_factors(*n);
            fs.iter()
                .all(|&(_, e)| e == 1)
                .then(|| fs.iter().map(|&(p, _)| field(p)).collect())
        }
        RingSpec::GaloisField { p, k, .. } => Some(vec![field(p.pow(*k))]),
        RingSpec::PolyQuotient { n, modulus } => {
            let mut out = Vec::new();
            for (p, e) in prime_factors(*n) {
                if e != 1 {
                    return None;
                }
                for (g, mult) in factor_over_prime(modulus, p) {
                    if mult != 1 {
                        return None;
                    }
                    out.push(field(p.pow(g.len() as u32 - 1)));
                }
            }
            Some(out)
        }
        RingSpec::Matrix { base, size } => Some(
            semisimple_form(base)?
                .into_iter()
                .map(|c| SimpleComponent {
                    size: c.size * size,
                    field_order: c.field_order,
                })
                .collect(),
        ),
        RingSpec::Product(factors) => {
            let mut out = Vec::new();
            for f in factors {
                out.extend(semisimple_form(f)?);
            }
            Some(out)
        }
    }
}

/// Whether a semisimple ring with these components should have a bipartite
/// unit graph: it is `Z3` or it has a `Z2` factor.
pub(crate) fn predicts_bipartite(form: &[SimpleComponent]) -> bool {
    (form.len() == 1 && form[0].is_z3()) || form.iter().any(|c| c.is_z2())
}

/// Entries in `{-1, 0, 1}` of a pair `A`, `B` with `A`, `B`, `A + B` all
/// invertible over any field, for `n >= 2`. Sizes 2 and 3 are the base
/// cases; larger sizes use block diagonals of those.
fn triangle_pattern(n: usize) -> Option<(Vec<i8>, Vec<i8>)> {
    const A2: [i8; 4] = [-1, 1, 0, 1];
    const B2: [i8; 4] = [1, 0, 1, 1];
    const A3: [i8; 9] = [1, 0, 0, 0, -1, 1, 0, 0, 1];
    const B3: [i8; 9] = [-1, 1, 0, 0, 1, 0, 1, 1, 1];
    if n < 2 {
        return None;
    }
    let mut blocks = Vec::new();
    let mut rest = n;
    if rest % 2 == 1 {
        blocks.push(3);
        rest -= 3;
    }
    blocks.extend(std::iter::repeat_n(2, rest / 2));
    let mut a = vec![0i8; n * n];
    let mut b = vec![0i8; n * n];
    let mut offset = 0;
    for s in blocks {
        let (ba, bb): (&[i8], &[i8]) = if s == 2 { (&A2, &B2) } else { (&A3, &B3) };
        for i in 0..s {
            for j in 0..s {
                a[(offset + i) * n + offset + j] = ba[i * s + j];
                b[(offset + i) * n + offset + j] = bb[i * s + j];
            }
        }
        offset += s;
    }
    Some((a, b))
}

fn matrix_from_pattern(r: &FiniteRing, pattern: &[i8]) -> Element {
    let (base, _) = r.matrix_base().expect("matrix ring");
    let minus_one = base.neg(base.one());
    let entries: Vec<Element> = pattern
        .iter()
        .map(|&e| match e {
            0 => 0,
            1 => base.one(),
            _ => minus_one,
        })
        .collect();
    r.encode_matrix(&entries)
}

fn is_field(r: &FiniteRing) -> bool {
    r.unit_count() + 1 == r.order() && r.is_commutative()
}

/// A triangle `(a, b, c)` in the unit graph of a simple factor realized
/// directly (a field, or a matrix ring of size >= 2 over a field).
/// `second_z3` selects the alternative `Z3` triple `(1, 0, 1)`.
fn factor_triangle(r: &FiniteRing, second_z3: bool) -> Option<[Element; 3]> {
    if is_field(r) {
        let one = r.one();
        return match r.order() {
            2 => None,
            3 if second_z3 => Some([one, 0, one]),
            3 => Some([0, one, one]),
            _ => {
                let minus_one = r.neg(one);
                let y = r.elements().find(|&y| y != 0 && y != one && y != minus_one)?;
                Some([0, one, y])
            }
        };
    }
    let (base, size) = r.matrix_base()?;
    if !is_field(base) {
        return None;
    }
    if size == 1 {
        let t = factor_triangle(base, second_z3)?;
        return Some(t.map(|e| r.encode_matrix(&[e])));
    }
    let (a, b) = triangle_pattern(size)?;
    Some([0, matrix_from_pattern(r, &a), matrix_from_pattern(r, &b)])
}

/// The triangle built factor by factor as in the semisimple argument: each
/// factor contributes a triangle, with `Z3` factors using `(0, 1, 1)`. When
/// every factor is `Z3`, later copies use `(1, 0, 1)` so the three vertices
/// stay distinct. `None` if some factor is `Z2` or is not a directly
/// realized field or matrix ring over a field.
pub(crate) fn semisimple_triangle(r: &FiniteRing) -> Option<[Element; 3]> {
    let Some(factors) = r.factors() else {
        // Z3 alone has no triangle
        return factor_triangle(r, false).filter(|_| r.order() != 3);
    };
    let all_z3 = factors.iter().all(|f| f.order() == 3);
    let mut coords = Vec::with_capacity(factors.len());
    for (i, f) in factors.iter().enumerate() {
        coords.push(factor_triangle(f, all_z3 && i > 0)?);
    }
    let vertex = |k: usize| r.encode_product(&coords.iter().map(|t| t[k]).collect::<Vec<_>>());
    Some([vertex(0), vertex(1), vertex(2)])
}

/// The split of a product by a `Z2` coordinate: elements with that
/// coordinate 0 versus 1.
pub(crate) fn z2_coordinate_bipartition(r: &FiniteRing) -> Option<[Vec<Element>; 2]> {
    let factors = r.factors()?;
    let i = factors.iter().position(|f| f.order() == 2)?;
    let mut parts = [Vec::new(), Vec::new()];
    for x in r.elements() {
        parts[r.product_digits(x)[i]].push(x);
    }
    Some(parts)
}

/// The matrices `A`, `B` for `n = 2` or `3` over a field, with the result of
/// checking that `0`, `A`, `B` form a triangle in the unit graph.
#[derive(Debug, Clone)]
pub struct MatrixTriangle {
    pub ring: Arc<FiniteRing>,
    pub a: Element,
    pub b: Element,
    pub verdict: TheoremVerdict,
}

/// Builds `A = [[-1,1],[0,1]]`, `B = [[1,0],[1,1]]` (for `n = 2`) or
/// `A = [[1,0,0],[0,-1,1],[0,0,1]]`, `B = [[-1,1,0],[0,1,0],[1,1,1]]`
/// (for `n = 3`) in `M_n(base)` and checks that `A`, `B` and `A + B` are
/// units, both by determinant and by inverse search.
pub fn construct_matrix_triangle(base: &RingSpec, n: usize, order_cap: u64) -> Result<MatrixTriangle, LabError> {
    if n != 2 && n != 3 {
        return Err(LabError::UnsupportedMatrixSize(n));
    }
    let spec = RingSpec::matrix(base.clone(), n);
    let ring = Arc::new(realize(&spec, order_cap)?);
    let (b_ring, _) = ring.matrix_base().expect("matrix ring");
    if !is_field(b_ring) {
        return Err(LabError::NotAField(base.to_string()));
    }
    Ok(matrix_triangle_in(ring))
}

pub(crate) fn matrix_triangle_in(ring: Arc<FiniteRing>) -> MatrixTriangle {
    let (_, n) = ring.matrix_base().expect("matrix ring");
    let (pa, pb) = triangle_pattern(n).expect("size at least 2");
    let a = matrix_from_pattern(&ring, &pa);
    let b = matrix_from_pattern(&ring, &pb);
    let sum = ring.add(a, b);
    let mut claims = Vec::new();
    let mut agree = true;
    for (name, m) in [("unit(A)", a), ("unit(B)", b), ("unit(A+B)", sum)] {
        let by_det = ring.determinant(m).is_some_and(|d| ring.matrix_base().unwrap().0.is_unit(d));
        agree &= by_det == ring.has_inverse_by_search(m);
        claims.push(Claim::property(name, by_det));
    }
    claims.push(Claim::property("determinant agrees with inverse search", agree));
    let graph = build_unit_graph(&ring);
    let triangle = vec![0, a, b];
    let evidence = match super::context::first_non_adjacent(&graph, &triangle) {
        None => Witness::Clique(sorted(triangle)),
        Some((x, y)) => Witness::NonAdjacent(x, y),
    };
    claims.push(Claim::property("triangle(0,A,B)", matches!(evidence, Witness::Clique(_))));
    let verdict = TheoremVerdict::decided(
        TheoremId::MatrixTriangle,
        ring.name(),
        claims,
        vec![Evidence::ring(evidence)],
    )
    .with_note(format!("A={} B={}", ring.label(a), ring.label(b)));
    MatrixTriangle {
        ring,
        a,
        b,
        verdict,
    }
}

fn sorted(mut v: Vec<Element>) -> Vec<Element> {
    v.sort_unstable();
    v
}

/// Checks that `(0,1,...,1), (1,0,1,...,1), ..., (1,...,1,0), (1,...,1)`
/// is a clique in the unit graph of the product of the given odd-order
/// fields. A single factor gives the clique `{0, 1}`.
pub fn verify_product_clique_witness(factors: &[RingSpec], order_cap: u64) -> Result<TheoremVerdict, LabError> {
    let spec = RingSpec::product(factors.to_vec());
    let ring = realize(&spec, order_cap)?;
    let rings: Vec<&FiniteRing> = match ring.factors() {
        Some(fs) => fs.iter().map(Arc::as_ref).collect(),
        None => vec![&ring],
    };
    if let Some(bad) = rings.iter().find(|f| !is_field(f) || !f.two_is_unit()) {
        return Err(LabError::NotOddField(bad.name().to_string()));
    }
    let k = rings.len();
    let encode = |zero_at: Option<usize>| -> Element {
        let coords: Vec<Element> = rings
            .iter()
            .enumerate()
            .map(|(i, f)| if Some(i) == zero_at { 0 } else { f.one() })
            .collect();
        if ring.factors().is_some() {
            ring.encode_product(&coords)
        } else {
            coords[0]
        }
    };
    let mut clique: Vec<Element> = (0..k).map(Some).chain([None]).map(encode).collect();
    clique.sort_unstable();
    let all_units = clique
        .iter()
        .enumerate()
        .all(|(i, &a)| clique[i + 1..].iter().all(|&b| ring.is_unit(ring.add(a, b))));
    Ok(TheoremVerdict::decided(
        TheoremId::CliqueWitness,
        ring.name(),
        vec![
            Claim::property("pairwise sums are units", all_units),
            Claim::eq("size", clique.len(), "factors+1", k + 1),
        ],
        vec![Evidence::ring(Witness::Clique(clique))],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_ring_spec;

    fn form(s: &str) -> Option<Vec<String>> {
        semisimple_form(&parse_ring_spec(s).unwrap()).map(|f| f.iter().map(|c| c.to_string()).collect())
    }

    fn ring(s: &str) -> FiniteRing {
        realize(&parse_ring_spec(s).unwrap(), 4096).unwrap()
    }

    #[test]
    fn forms_from_syntax() {
        assert_eq!(form("Z15").unwrap(), ["GF(3)", "GF(5)"]);
        assert_eq!(form("Z4"), None);
        assert_eq!(form("GF(9)").unwrap(), ["GF(9)"]);
        assert_eq!(form("Z2[x]/(x^2+x)").unwrap(), ["GF(2)", "GF(2)"]);
        assert_eq!(form("Z2[x]/(x^2+x+1)").unwrap(), ["GF(4)"]);
        assert_eq!(form("Z2[x]/(x^2)"), None);
        assert_eq!(form("M2(Z6)").unwrap(), ["M2(GF(2))", "M2(GF(3))"]);
        assert_eq!(form("Z3 x M2(GF(2))").unwrap(), ["GF(3)", "M2(GF(2))"]);
        assert_eq!(form("M2(Z4)"), None);
    }

    #[test]
    fn z6_poly_quotient_is_not_semisimple() {
        // x^2 + 1 = (x + 1)^2 over Z2
        assert_eq!(form("Z6[x]/(x^2+1)"), None);
        assert_eq!(form("Z3[x]/(x^2+1)").unwrap(), ["GF(9)"]);
    }

    #[test]
    fn bipartite_prediction() {
        let p = |s: &str| predicts_bipartite(&semisimple_form(&parse_ring_spec(s).unwrap()).unwrap());
        assert!(p("Z3"));
        assert!(p("Z2"));
        assert!(p("Z2 x Z3"));
        assert!(p("M1(Z2) x GF(9)"));
        assert!(!p("Z3 x Z3"));
        assert!(!p("GF(4)"));
        assert!(!p("M2(GF(2))"));
        assert!(!p("Z3 x M2(GF(2))"));
    }

    #[test]
    fn triangles_in_semisimple_rings() {
        for s in ["Z5", "GF(4)", "GF(9)", "M2(GF(2))", "M3(GF(2))", "M2(GF(3))", "Z3 x Z3", "Z3 x Z3 x Z3", "Z3 x M2(GF(2))", "Z3 x GF(4)", "M1(GF(7))"] {
            let r = ring(s);
            let t = semisimple_triangle(&r).unwrap_or_else(|| panic!("{s}"));
            let g = build_unit_graph(&r);
            assert!(g.is_clique(&t), "{s}: {t:?}");
        }
        assert_eq!(semisimple_triangle(&ring("Z2 x Z3")), None);
        assert_eq!(semisimple_triangle(&ring("Z3")), None);
    }

    #[test]
    fn block_patterns_are_invertible() {
        for (base, n) in [("Z2", 4usize)] {
            let spec = RingSpec::matrix(parse_ring_spec(base).unwrap(), n);
            let r = realize(&spec, u64::MAX).unwrap();
            let (pa, pb) = triangle_pattern(n).unwrap();
            let (a, b) = (matrix_from_pattern(&r, &pa), matrix_from_pattern(&r, &pb));
            for m in [a, b, r.add(a, b)] {
                let det = r.determinant(m).unwrap();
                assert!(r.matrix_base().unwrap().0.is_unit(det), "{base} {n}");
            }
        }
    }

    #[test]
    fn z2_coordinate_split() {
        let r = ring("Z2 x Z3");
        let parts = z2_coordinate_bipartition(&r).unwrap();
        assert_eq!(parts, [vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(crate::invariants::is_bipartition(&build_unit_graph(&r), &parts));
    }

    #[test]
    fn matrix_triangles() {
        let t = construct_matrix_triangle(&parse_ring_spec("GF(2)").unwrap(), 2, 4096).unwrap();
        assert!(t.verdict.holds(), "{}", t.verdict.to_line());
        assert_eq!(t.ring.matrix_entries(t.a), vec![1, 1, 0, 1]);
        assert_eq!(t.ring.matrix_entries(t.b), vec![1, 0, 1, 1]);
        assert_eq!(t.ring.matrix_entries(t.ring.add(t.a, t.b)), vec![0, 1, 1, 0]);
        let t = construct_matrix_triangle(&parse_ring_spec("GF(3)").unwrap(), 2, 4096).unwrap();
        assert!(t.verdict.holds());
        assert_eq!(t.ring.matrix_entries(t.a), vec![2, 1, 0, 1]);
        let t = construct_matrix_triangle(&parse_ring_spec("GF(2)").unwrap(), 3, 4096).unwrap();
        assert!(t.verdict.holds());
        assert_eq!(t.ring.matrix_entries(t.b), vec![1, 1, 0, 0, 1, 0, 1, 1, 1]);
        assert_eq!(
            construct_matrix_triangle(&parse_ring_spec("GF(2)").unwrap(), 4, 1 << 20).unwrap_err(),
            LabError::UnsupportedMatrixSize(4)
        );
        assert!(matches!(
            construct_matrix_triangle(&parse_ring_spec("Z4").unwrap(), 2, 4096),
            Err(LabError::NotAField(_))
        ));
    }

    #[test]
    fn product_clique_witnesses() {
        let specs = |s: &[&str]| s.iter().map(|t| parse_ring_spec(t).unwrap()).collect::<Vec<_>>();
        let v = verify_product_clique_witness(&specs(&["Z3", "Z5"]), 4096).unwrap();
        assert!(v.holds());
        // (0,1) = 1, (1,0) = 5, (1,1) = 6 with the leftmost factor most significant
        assert_eq!(v.evidence[0].witness, Witness::Clique(vec![1, 5, 6]));
        let v = verify_product_clique_witness(&specs(&["Z3"]), 4096).unwrap();
        assert_eq!(v.evidence[0].witness, Witness::Clique(vec![0, 1]));
        let v = verify_product_clique_witness(&specs(&["Z3", "Z5", "Z7"]), 4096).unwrap();
        assert!(v.holds());
        assert!(matches!(&v.evidence[0].witness, Witness::Clique(c) if c.len() == 4));
        assert!(verify_product_clique_witness(&specs(&["Z3", "Z4"]), 4096).is_err());
        assert!(verify_product_clique_witness(&specs(&["Z3", "GF(4)"]), 4096).is_err());
    }
}
