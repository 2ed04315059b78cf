//! One function per check. Each reads what it needs from the shared
//! [`RingContext`] and reports claims with re-checkable witnesses.

use crate::invariants::{Bipartiteness, Multipartite};
use crate::ring::Element;

use super::context::RingContext;
use super::semisimple::{
    matrix_triangle_in, predicts_bipartite, semisimple_form, semisimple_triangle,
    z2_coordinate_bipartition,
};
use super::{Claim, Evidence, TheoremId, TheoremVerdict, Witness};

const BUDGET: &str = "clique search hit the node budget";

pub(crate) fn verify(cx: &RingContext, id: TheoremId) -> TheoremVerdict {
    match id {
        TheoremId::RadicalOmega => radical_omega(cx),
        TheoremId::RadicalChi => radical_chi(cx),
        TheoremId::RadicalChiEqual => radical_chi_equal(cx),
        TheoremId::CliqueBound => clique_bound(cx),
        TheoremId::CliqueWitness => clique_witness(cx),
        TheoremId::OnePlusRadicalClique => one_plus_radical(cx),
        TheoremId::IdealIndependence => ideal_independence(cx),
        TheoremId::LocalDichotomy => local_dichotomy(cx),
        TheoremId::RadicalNilpotent => radical_nilpotent(cx),
        TheoremId::MultipartiteIff => multipartite_iff(cx),
        TheoremId::MultipartiteParts => multipartite_parts(cx),
        TheoremId::BipartiteRadical => bipartite_radical(cx),
        TheoremId::BipartiteQuotient => bipartite_quotient(cx),
        TheoremId::BipartiteSemisimple => bipartite_semisimple(cx),
        TheoremId::MatrixTriangle => matrix_triangle(cx),
    }
}

/// A clique witness, or the first non-adjacent pair when the set is not one.
fn clique_evidence(cx: &RingContext, mut vs: Vec<Element>) -> (bool, Evidence) {
    vs.sort_unstable();
    match cx.non_adjacent_pair(&vs) {
        None => (true, Evidence::ring(Witness::Clique(vs))),
        Some((a, b)) => (false, Evidence::ring(Witness::NonAdjacent(a, b))),
    }
}

fn bipartite_evidence(b: &Bipartiteness, quotient: bool) -> Evidence {
    let w = match b {
        Bipartiteness::Bipartite { parts } => Witness::Bipartition(parts.clone()),
        Bipartiteness::OddCycle(c) => Witness::OddCycle(c.clone()),
    };
    if quotient {
        Evidence::quotient(w)
    } else {
        Evidence::ring(w)
    }
}

fn radical_omega(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::RadicalOmega;
    let (w, qw) = (cx.omega(), cx.quotient_omega());
    if !w.exact || !qw.exact {
        return TheoremVerdict::skipped(id, &cx.name, BUDGET);
    }
    // representatives of a clique of G(R/J) form a clique of G(R)
    let q = &cx.quotient().0;
    let lift: Vec<Element> = qw.witness.iter().map(|&c| q.representative(c)).collect();
    let (lifted, evidence) = clique_evidence(cx, lift);
    TheoremVerdict::decided(
        id,
        &cx.name,
        vec![
            Claim::le("omega(R/J)", qw.value(), "omega(R)", w.value()),
            Claim::property("lifted clique", lifted),
        ],
        vec![evidence],
    )
}

fn chi_skipped(cx: &RingContext, id: TheoremId) -> TheoremVerdict {
    let (c, q) = (cx.chi(), cx.quotient_chi());
    let note = format!(
        "chromatic number not exact: chi(R) in [{}, {}], chi(R/J) in [{}, {}]",
        c.lower(),
        c.upper(),
        q.lower(),
        q.upper()
    );
    TheoremVerdict::skipped(id, &cx.name, &note)
}

fn radical_chi(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::RadicalChi;
    let (Some(chi), Some(qchi)) = (cx.chi().exact(), cx.quotient_chi().exact()) else {
        return chi_skipped(cx, id);
    };
    // a coloring of G(R) induces one of G(R/J): each coset takes its least color
    let (q, qg) = cx.quotient();
    let mut induced = vec![usize::MAX; q.ring.order()];
    for (x, &c) in cx.chi().coloring().iter().enumerate() {
        let slot = &mut induced[q.project(x)];
        *slot = (*slot).min(c);
    }
    let proper = crate::invariants::is_proper_coloring(qg, &induced);
    TheoremVerdict::decided(
        id,
        &cx.name,
        vec![
            Claim::le("chi(R/J)", qchi, "chi(R)", chi),
            Claim::property("induced coloring proper", proper),
        ],
        vec![Evidence::quotient(Witness::Coloring(induced))],
    )
}

fn radical_chi_equal(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::RadicalChiEqual;
    if cx.ring.two_is_unit() {
        return TheoremVerdict::not_applicable(id, &cx.name, "2 is a unit");
    }
    let (Some(chi), Some(qchi)) = (cx.chi().exact(), cx.quotient_chi().exact()) else {
        return chi_skipped(cx, id);
    };
    // a coloring of G(R/J) pulls back to one of G(R)
    let q = &cx.quotient().0;
    let qcol = cx.quotient_chi().coloring();
    let pulled: Vec<usize> = cx.ring.elements().map(|x| qcol[q.project(x)]).collect();
    let proper = crate::invariants::is_proper_coloring(&cx.graph, &pulled);
    let evidence = if proper {
        Witness::Coloring(pulled)
    } else {
        let (a, b) = cx
            .graph
            .edges()
            .find(|&(a, b)| pulled[a] == pulled[b])
            .expect("an improper coloring has a monochromatic edge");
        Witness::Adjacent(a, b)
    };
    TheoremVerdict::decided(
        id,
        &cx.name,
        vec![
            Claim::eq("chi(R/J)", qchi, "chi(R)", chi),
            Claim::property("pulled-back coloring proper", proper),
        ],
        vec![Evidence::ring(evidence)],
    )
}

fn clique_bound(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::CliqueBound;
    if !cx.ring.two_is_unit() {
        return TheoremVerdict::not_applicable(id, &cx.name, "2 is not a unit");
    }
    let maximal = match cx.maximal_ideals() {
        Ok(m) => m.len(),
        Err(e) => return TheoremVerdict::skipped(id, &cx.name, e.to_string()),
    };
    let w = cx.omega();
    // an incumbent clique that already meets the bound settles it
    if !w.exact && w.value() < maximal + 1 {
        return TheoremVerdict::skipped(id, &cx.name, BUDGET);
    }
    let name = if w.exact { "omega(R)" } else { "clique" };
    TheoremVerdict::decided(
        id,
        &cx.name,
        vec![Claim::ge(name, w.value(), "|Max_l(R)|+1", maximal + 1)],
        vec![Evidence::ring(Witness::Clique(w.witness.clone()))],
    )
}

fn clique_witness(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::CliqueWitness;
    let r = &cx.ring;
    if !r.two_is_unit() {
        return TheoremVerdict::not_applicable(id, &cx.name, "2 is not a unit");
    }
    let maximal = match cx.maximal_ideals() {
        Ok(m) => m,
        Err(e) => return TheoremVerdict::skipped(id, &cx.name, e.to_string()),
    };
    // e_i lifts (1,..,1,0,1,..,1): e_i in m_i and 1 - e_i in every other m_j
    let mut clique = Vec::with_capacity(maximal.len() + 1);
    for (i, m) in maximal.iter().enumerate() {
        let found = m.elements.iter().find(|&e| {
            let c = r.sub(r.one(), e);
            maximal.iter().enumerate().all(|(j, mj)| j == i || mj.contains(c))
        });
        match found {
            Some(e) => clique.push(e),
            None if !r.is_commutative() => {
                return TheoremVerdict::not_applicable(
                    id,
                    &cx.name,
                    "R/J is not the product of the R/m_i: maximal left ideals are not comaximal in the required sense",
                )
            }
            None => {
                return TheoremVerdict::decided(
                    id,
                    &cx.name,
                    vec![Claim::property("lift of each (1,..,0,..,1) exists", false)],
                    vec![],
                )
                .with_note(format!("no lift for maximal ideal {i}"))
            }
        }
    }
    clique.push(r.one());
    let size = clique.len();
    let (ok, evidence) = clique_evidence(cx, clique);
    TheoremVerdict::decided(
        id,
        &cx.name,
        vec![
            Claim::property("clique", ok),
            Claim::eq("size", size, "|Max_l(R)|+1", maximal.len() + 1),
        ],
        vec![evidence],
    )
}

fn one_plus_radical(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::OnePlusRadicalClique;
    if !cx.ring.two_is_unit() {
        return TheoremVerdict::not_applicable(id, &cx.name, "2 is not a unit");
    }
    let coset: Vec<Element> = cx.radical().elements.iter().map(|j| cx.ring.add(cx.ring.one(), j)).collect();
    let (ok, evidence) = clique_evidence(cx, coset);
    TheoremVerdict::decided(id, &cx.name, vec![Claim::property("clique(1+J)", ok)], vec![evidence])
}

fn ideal_independence(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::IdealIndependence;
    let ideals = match cx.left_ideals() {
        Ok(i) => i,
        Err(e) => return TheoremVerdict::skipped(id, &cx.name, e.to_string()),
    };
    let proper: Vec<_> = ideals.iter().filter(|i| i.len() < cx.ring.order()).collect();
    let mut evidence = None;
    for (k, ideal) in proper.iter().enumerate() {
        if let Some((a, b)) = cx.adjacent_pair(&ideal.to_vec()) {
            evidence = Some((k, Witness::Adjacent(a, b)));
            break;
        }
    }
    let note = format!("{} proper left ideals", proper.len());
    match evidence {
        None => {
            let largest = proper.iter().max_by_key(|i| i.len()).expect("{0} is proper");
            TheoremVerdict::decided(
                id,
                &cx.name,
                vec![Claim::property("every proper left ideal is a coclique", true)],
                vec![Evidence::ring(Witness::Coclique(largest.to_vec()))],
            )
            .with_note(note)
        }
        Some((k, w)) => TheoremVerdict::decided(
            id,
            &cx.name,
            vec![Claim::property("every proper left ideal is a coclique", false)],
            vec![Evidence::ring(w)],
        )
        .with_note(format!("{note}; ideal {k} fails")),
    }
}

fn dichotomy_failure(cx: &RingContext) -> Option<Element> {
    let r = &cx.ring;
    r.elements().find(|&x| !r.is_unit(x) && !r.is_unit(r.sub(r.one(), x)))
}

fn local_dichotomy(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::LocalDichotomy;
    if !cx.is_local() {
        let reason = match dichotomy_failure(cx) {
            Some(x) => format!("not local (and x={x} has x, 1-x non-units)"),
            None => "not local".to_string(),
        };
        return TheoremVerdict::not_applicable(id, &cx.name, reason);
    }
    match dichotomy_failure(cx) {
        None => TheoremVerdict::decided(
            id,
            &cx.name,
            vec![Claim::property("x or 1-x a unit for all x", true)],
            vec![],
        )
        .with_note(format!("{} elements checked", cx.ring.order())),
        Some(x) => TheoremVerdict::decided(
            id,
            &cx.name,
            vec![Claim::property("x or 1-x a unit for all x", false)],
            vec![Evidence::ring(Witness::DichotomyFailure(x))],
        ),
    }
}

fn radical_nilpotent(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::RadicalNilpotent;
    let r = &cx.ring;
    let radical = cx.radical();
    match cx.nilpotency_index() {
        Ok(index) => {
            let e = index as u32;
            let bad = radical.elements.iter().find(|&x| r.pow(x, e) != 0);
            let evidence = bad
                .map(|x| Evidence::ring(Witness::NotNilpotent { x, exponent: e }))
                .into_iter()
                .collect();
            TheoremVerdict::decided(
                id,
                &cx.name,
                vec![
                    Claim::property("J^i=0", true),
                    Claim::property("x^i=0 for all x in J", bad.is_none()),
                ],
                evidence,
            )
            .with_note(format!("i={index}, |J|={}", radical.len()))
        }
        Err(_) => {
            let e = r.order() as u32;
            let x = radical.elements.iter().find(|&x| r.pow(x, e) != 0);
            TheoremVerdict::decided(
                id,
                &cx.name,
                vec![Claim::property("J^i=0", false)],
                x.map(|x| Evidence::ring(Witness::NotNilpotent { x, exponent: e }))
                    .into_iter()
                    .collect(),
            )
        }
    }
}

/// Right-hand side of the multipartite characterization, with a description.
fn multipartite_prediction(cx: &RingContext) -> (bool, String) {
    let residue = cx.residue_order();
    let local_two_power = residue.is_some_and(|q| q.is_power_of_two() && q >= 2);
    let field = cx.is_field();
    let note = match residue {
        Some(q) => format!("local, |R/m|={q}, field={field}"),
        None => format!("not local, field={field}"),
    };
    (local_two_power || field, note)
}

fn multipartite_iff(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::MultipartiteIff;
    let (rhs, note) = multipartite_prediction(cx);
    let (lhs, witness) = match cx.multipartite() {
        Multipartite::Complete { parts } => (true, Witness::Parts(parts.clone())),
        Multipartite::NotComplete { triple } => (false, Witness::NotMultipartite(*triple)),
    };
    TheoremVerdict::decided(
        id,
        &cx.name,
        vec![Claim::iff("complete_multipartite", lhs, "local_2^n_or_field", rhs)],
        vec![Evidence::ring(witness)],
    )
    .with_note(note)
}

fn multipartite_parts(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::MultipartiteParts;
    let Some(parts) = cx.multipartite().parts() else {
        return TheoremVerdict::not_applicable(id, &cx.name, "not complete multipartite");
    };
    let r = &cx.ring;
    let residue = cx.residue_order();
    let (expected, r_expected, which) = if let Some(q) = residue.filter(|q| q.is_power_of_two()) {
        // cosets of m = J, listed by least member
        let quotient = &cx.quotient().0;
        let mut cosets = vec![Vec::new(); q];
        for x in r.elements() {
            cosets[quotient.project(x)].push(x);
        }
        (cosets, q, "cosets of m")
    } else if cx.is_field() {
        let mut pairs: Vec<Vec<Element>> = vec![vec![0]];
        for x in r.elements().skip(1) {
            let nx = r.neg(x);
            if x < nx {
                pairs.push(vec![x, nx]);
            }
        }
        (pairs, r.order().div_ceil(2), "{0} and pairs {x,-x}")
    } else {
        return TheoremVerdict::not_applicable(id, &cx.name, "neither local with |R/m|=2^n nor a field");
    };
    let mut expected = expected;
    expected.sort_unstable();
    TheoremVerdict::decided(
        id,
        &cx.name,
        vec![
            Claim::property(&format!("parts = {which}"), parts == expected.as_slice()),
            Claim::eq("r", parts.len(), "predicted r", r_expected),
        ],
        vec![Evidence::ring(Witness::Parts(parts.to_vec()))],
    )
}

fn bipartite_radical(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::BipartiteRadical;
    if !cx.ring.two_is_unit() {
        return TheoremVerdict::not_applicable(id, &cx.name, "2 is not a unit");
    }
    let radical = cx.radical();
    let Some(x) = radical.elements.iter().find(|&x| x != 0) else {
        return TheoremVerdict::not_applicable(id, &cx.name, "J = 0");
    };
    let r = &cx.ring;
    let (triangle, evidence) = clique_evidence(cx, vec![0, r.one(), r.sub(r.one(), x)]);
    let bipartite = cx.bipartite();
    let mut ev = vec![evidence];
    if bipartite.is_bipartite() {
        ev.push(bipartite_evidence(bipartite, false));
    }
    TheoremVerdict::decided(
        id,
        &cx.name,
        vec![
            Claim::property("triangle(0,1,1-x)", triangle),
            Claim::property("not bipartite", !bipartite.is_bipartite()),
        ],
        ev,
    )
    .with_note(format!("x={x}"))
}

fn bipartite_quotient(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::BipartiteQuotient;
    if cx.ring.two_is_unit() {
        return TheoremVerdict::not_applicable(id, &cx.name, "2 is a unit");
    }
    let (b, qb) = (cx.bipartite(), cx.quotient_bipartite());
    TheoremVerdict::decided(
        id,
        &cx.name,
        vec![Claim::iff("bipartite(R)", b.is_bipartite(), "bipartite(R/J)", qb.is_bipartite())],
        vec![bipartite_evidence(b, false), bipartite_evidence(qb, true)],
    )
}

fn bipartite_semisimple(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::BipartiteSemisimple;
    let radical_zero = cx.radical().is_zero();
    let form = cx.spec.as_ref().and_then(semisimple_form);
    let Some(form) = form else {
        return if radical_zero {
            TheoremVerdict::skipped(id, &cx.name, "no syntactic semisimple form")
        } else {
            TheoremVerdict::not_applicable(id, &cx.name, "J != 0")
        };
    };
    let predicted = predicts_bipartite(&form);
    let bipartite = cx.bipartite();
    let evidence = match bipartite {
        Bipartiteness::Bipartite { parts } => {
            let split = z2_coordinate_bipartition(&cx.ring)
                .filter(|p| crate::invariants::is_bipartition(&cx.graph, p));
            Evidence::ring(Witness::Bipartition(split.unwrap_or_else(|| parts.clone())))
        }
        Bipartiteness::OddCycle(cycle) => {
            let triangle = semisimple_triangle(&cx.ring)
                .map(|t| t.to_vec())
                .filter(|t| cx.non_adjacent_pair(t).is_none());
            match triangle {
                Some(mut t) => {
                    t.sort_unstable();
                    Evidence::ring(Witness::Clique(t))
                }
                None => Evidence::ring(Witness::OddCycle(cycle.clone())),
            }
        }
    };
    let form_text: Vec<String> = form.iter().map(ToString::to_string).collect();
    TheoremVerdict::decided(
        id,
        &cx.name,
        vec![
            Claim::property("J=0", radical_zero),
            Claim::iff("bipartite", bipartite.is_bipartite(), "Z3_or_Z2_summand", predicted),
        ],
        vec![evidence],
    )
    .with_note(format!("form {}", form_text.join(" x ")))
}

fn matrix_triangle(cx: &RingContext) -> TheoremVerdict {
    let id = TheoremId::MatrixTriangle;
    let Some((base, n)) = cx.ring.matrix_base() else {
        return TheoremVerdict::not_applicable(id, &cx.name, "not a matrix ring");
    };
    if n != 2 && n != 3 {
        return TheoremVerdict::not_applicable(id, &cx.name, "matrix size is not 2 or 3");
    }
    if base.unit_count() + 1 != base.order() || !base.is_commutative() {
        return TheoremVerdict::not_applicable(id, &cx.name, "base is not a field");
    }
    let mut t = matrix_triangle_in(cx.ring.clone());
    // re-check the triangle against the context graph, which may differ
    let tri = vec![0, t.a, t.b];
    if let Some((a, b)) = cx.non_adjacent_pair(&tri) {
        t.verdict.claims.push(Claim::property("triangle in G(R)", false));
        t.verdict.evidence = vec![Evidence::ring(Witness::NonAdjacent(a, b))];
        t.verdict.status = super::Status::Fails;
    }
    t.verdict.ring = cx.name.clone();
    t.verdict
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::lab::{LabOptions, Status};
    use crate::ring::{parse_ring_spec, realize};

    fn cx(s: &str) -> RingContext {
        let r = realize(&parse_ring_spec(s).unwrap(), 4096).unwrap();
        RingContext::new(Arc::new(r), LabOptions::default())
    }

    fn check(s: &str, id: TheoremId) -> TheoremVerdict {
        let c = cx(s);
        let v = verify(&c, id);
        // every witness re-validates against the graph it names
        for e in &v.evidence {
            let ok = match e.target {
                crate::lab::Target::Ring => e.witness.recheck(&c.ring, &c.graph),
                crate::lab::Target::Quotient => {
                    let (q, g) = c.quotient();
                    e.witness.recheck(&q.ring, g)
                }
            };
            assert!(ok, "{}: {e}", v.to_line());
        }
        assert_eq!(
            v.status == Status::Holds,
            !v.claims.is_empty() && v.claims.iter().all(Claim::evaluate)
        );
        v
    }

    #[test]
    fn radical_monotonicity() {
        for s in ["Z4", "GF(5)", "Z8", "Z12", "M2(GF(2))", "Z2[x]/(x^2)"] {
            for id in [TheoremId::RadicalOmega, TheoremId::RadicalChi] {
                assert_eq!(check(s, id).status, Status::Holds, "{s} {id}");
            }
        }
        let v = check("Z8", TheoremId::RadicalChiEqual);
        assert_eq!(v.claims[0], Claim::eq("chi(R/J)", 2, "chi(R)", 2));
        assert_eq!(check("GF(5)", TheoremId::RadicalChiEqual).status, Status::NotApplicable);
        let v = check("Z4", TheoremId::RadicalOmega);
        assert_eq!(v.claims[0], Claim::le("omega(R/J)", 2, "omega(R)", 2));
    }

    #[test]
    fn clique_bound_and_witness() {
        let v = check("Z15", TheoremId::CliqueBound);
        assert_eq!(v.status, Status::Holds);
        let v = check("Z15", TheoremId::CliqueWitness);
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.evidence[0].witness, Witness::Clique(vec![1, 6, 10]));
        let v = check("GF(7)", TheoremId::CliqueBound);
        assert_eq!(v.claims[0], Claim::ge("omega(R)", 4, "|Max_l(R)|+1", 2));
        assert_eq!(check("Z4", TheoremId::CliqueBound).status, Status::NotApplicable);
        assert_eq!(check("M2(GF(3))", TheoremId::CliqueWitness).status, Status::NotApplicable);
        assert_eq!(check("M2(GF(3))", TheoremId::CliqueBound).status, Status::Holds);
    }

    #[test]
    fn one_plus_radical() {
        let v = check("Z9", TheoremId::OnePlusRadicalClique);
        assert_eq!(v.evidence[0].witness, Witness::Clique(vec![1, 4, 7]));
        let v = check("Z25", TheoremId::OnePlusRadicalClique);
        assert_eq!(v.evidence[0].witness, Witness::Clique(vec![1, 6, 11, 16, 21]));
        let v = check("GF(5)", TheoremId::OnePlusRadicalClique);
        assert_eq!(v.evidence[0].witness, Witness::Clique(vec![1]));
        assert_eq!(check("Z4", TheoremId::OnePlusRadicalClique).status, Status::NotApplicable);
    }

    #[test]
    fn ideals_and_dichotomy() {
        let v = check("Z6", TheoremId::IdealIndependence);
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.evidence[0].witness, Witness::Coclique(vec![0, 2, 4]));
        let v = check("M2(Z2)", TheoremId::IdealIndependence);
        assert_eq!(v.status, Status::Holds);
        assert_eq!(check("Z4", TheoremId::LocalDichotomy).status, Status::Holds);
        assert_eq!(check("GF(8)", TheoremId::LocalDichotomy).status, Status::Holds);
        let v = check("Z6", TheoremId::LocalDichotomy);
        assert_eq!(v.status, Status::NotApplicable);
        assert!(v.payload().contains("x=3"));
    }

    #[test]
    fn nilpotency() {
        assert!(check("Z8", TheoremId::RadicalNilpotent).payload().contains("i=3"));
        assert!(check("GF(9)", TheoremId::RadicalNilpotent).payload().contains("i=1"));
        assert!(check("Z2[x]/(x^2)", TheoremId::RadicalNilpotent).payload().contains("i=2"));
    }

    #[test]
    fn multipartite_characterization() {
        for s in ["Z4", "Z8", "Z9", "GF(5)", "GF(4)", "Z6", "M2(GF(2))", "Z2[x]/(x^2)", "Z4[x]/(x^2+2)"] {
            assert_eq!(check(s, TheoremId::MultipartiteIff).status, Status::Holds, "{s}");
        }
        let v = check("Z4", TheoremId::MultipartiteParts);
        assert_eq!(v.evidence[0].witness, Witness::Parts(vec![vec![0, 2], vec![1, 3]]));
        assert_eq!(v.status, Status::Holds);
        let v = check("GF(5)", TheoremId::MultipartiteParts);
        assert_eq!(v.evidence[0].witness, Witness::Parts(vec![vec![0], vec![1, 4], vec![2, 3]]));
        assert_eq!(v.claims[1], Claim::eq("r", 3, "predicted r", 3));
        let v = check("Z9", TheoremId::MultipartiteIff);
        assert_eq!(v.claims[0], Claim::iff("complete_multipartite", false, "local_2^n_or_field", false));
        assert_eq!(check("Z9", TheoremId::MultipartiteParts).status, Status::NotApplicable);
        assert_eq!(check("GF(8)", TheoremId::MultipartiteParts).claims[1], Claim::eq("r", 8, "predicted r", 8));
    }

    #[test]
    fn bipartite_characterization() {
        let v = check("Z9", TheoremId::BipartiteRadical);
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.evidence[0].witness, Witness::Clique(vec![0, 1, 7]));
        assert_eq!(check("Z4", TheoremId::BipartiteRadical).status, Status::NotApplicable);
        for s in ["Z4", "Z8", "Z12", "M2(Z4)", "Z2 x Z4"] {
            assert_eq!(check(s, TheoremId::BipartiteQuotient).status, Status::Holds, "{s}");
        }
        let v = check("Z2 x Z3", TheoremId::BipartiteSemisimple);
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.evidence[0].witness, Witness::Bipartition([vec![0, 1, 2], vec![3, 4, 5]]));
        let v = check("Z3 x M2(GF(2))", TheoremId::BipartiteSemisimple);
        assert_eq!(v.status, Status::Holds);
        assert!(matches!(&v.evidence[0].witness, Witness::Clique(t) if t.len() == 3));
        assert_eq!(check("Z3", TheoremId::BipartiteSemisimple).status, Status::Holds);
        assert_eq!(check("Z3 x Z3", TheoremId::BipartiteSemisimple).status, Status::Holds);
        assert_eq!(check("Z9", TheoremId::BipartiteSemisimple).status, Status::NotApplicable);
        assert_eq!(check("Z2[x]/(x^2+x)", TheoremId::BipartiteSemisimple).status, Status::Holds);
    }

    #[test]
    fn matrix_triangle_on_catalog_rings() {
        for s in ["M2(GF(2))", "M2(GF(3))", "M3(GF(2))"] {
            let v = check(s, TheoremId::MatrixTriangle);
            assert_eq!(v.status, Status::Holds, "{}", v.to_line());
        }
        assert_eq!(check("M2(Z4)", TheoremId::MatrixTriangle).status, Status::NotApplicable);
        assert_eq!(check("Z4", TheoremId::MatrixTriangle).status, Status::NotApplicable);
    }
}
