use crate::ring::{parse_ring_spec, RingSpec};

/// A catalog ring with a note on what it exercises.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub spec: RingSpec,
    pub note: &'static str,
}

const ENTRIES: &[(&str, &str)] = &[
    ("Z2", "field of order 2; smallest ring, G = K2"),
    ("Z3", "field with 2 a unit; the only bipartite semisimple ring without a Z2 summand"),
    ("Z4", "local, |R/m|=2; G = K2,2; J={0,2}"),
    ("Z5", "odd field; complete 3-partite with parts {x,-x}"),
    ("Z6", "not local; 2 not a unit; Z2 summand"),
    ("Z7", "odd field; omega = 4"),
    ("Z8", "local, |R/m|=2; G = K4,4; nilpotency index 3"),
    ("Z9", "local, |R/m|=3; J != 0 with 2 a unit, so triangle {0,1,7}"),
    ("Z10", "Z2 x Z5 by CRT; bipartite"),
    ("Z11", "odd field"),
    ("Z12", "two maximal ideals; 2 not a unit; J={0,6}"),
    ("Z13", "odd field"),
    ("Z14", "Z2 x Z7 by CRT; bipartite"),
    ("Z15", "exercises T2.5 (two maximal ideals, 2 a unit)"),
    ("Z16", "local, |R/m|=2; G = K8,8"),
    ("Z25", "local, |R/m|=5; 1+J is a 5-clique"),
    ("Z27", "local, |R/m|=3; nilpotency index 3"),
    ("Z32", "local, |R/m|=2; nilpotency index 5"),
    ("Z49", "local, |R/m|=7"),
    ("Z64", "local, |R/m|=2; nilpotency index 6"),
    ("GF(2)", "field of order 2 as a Galois field"),
    ("GF(3)", "field of order 3 as a Galois field"),
    ("GF(4)", "characteristic 2 field; G = K4"),
    ("GF(5)", "odd field; r = 3"),
    ("GF(7)", "odd field; r = 4"),
    ("GF(8)", "characteristic 2 field; G = K8"),
    ("GF(9)", "odd non-prime field; r = 5"),
    ("GF(11)", "odd field; r = 6"),
    ("GF(13)", "odd field; r = 7"),
    ("GF(16)", "characteristic 2 field; G = K16"),
    ("Z2[x]/(x^2)", "local, |R/m|=2; J={0,x}; G = K2,2"),
    ("Z3[x]/(x^2)", "local, |R/m|=3, 2 a unit, not a field"),
    ("Z2[x]/(x^3)", "local, |R/m|=2; nilpotency index 3"),
    ("Z4[x]/(x^2+2)", "local, |R/m|=2, not a chain of Z_n"),
    ("Z2[x]/(x^2+x)", "isomorphic to Z2 x Z2; semisimple via factoring"),
    ("Z2[x]/(x^2+x+1)", "GF(4) given by an explicit modulus"),
    ("M2(GF(2))", "noncommutative simple; 3 maximal left ideals; matrix triangle"),
    ("M2(GF(3))", "noncommutative simple with 2 a unit; 4 maximal left ideals"),
    ("M3(GF(2))", "order 512; 3x3 matrix triangle"),
    ("M2(Z4)", "noncommutative with J != 0; R/J = M2(GF(2))"),
    ("Z2 x Z2", "semisimple with Z2 summands; bipartite"),
    ("Z2 x Z3", "Z2 summand; bipartite by the first coordinate"),
    ("Z2 x Z4", "2 not a unit; bipartite iff R/J bipartite"),
    ("Z3 x Z3", "only Z3 summands; not bipartite"),
    ("Z3 x Z5", "product of odd fields; clique witness"),
    ("Z3 x Z5 x Z7", "three odd fields; 4-element clique witness"),
    ("Z3 x GF(4)", "Z3 with a field of order 4; proof triangle"),
    ("Z3 x M2(GF(2))", "Z3 with a matrix factor; proof triangle (0,a)-(1,b)-(1,c)"),
    ("Z2 x M2(GF(3))", "Z2 summand with a matrix factor; bipartite"),
    ("Z3 x Z2[x]/(x^2)", "not local, J != 0, 2 not a unit"),
];

/// The default ring catalog in its fixed order.
pub fn default_catalog() -> Vec<CatalogEntry> {
    ENTRIES
        .iter()
        .map(|&(text, note)| CatalogEntry {
            spec: parse_ring_spec(text).expect("catalog specs parse"),
            note,
        })
        .collect()
}

/// The catalog note for a spec, matched after parsing so spacing does not matter.
pub fn describe(spec: &RingSpec) -> Option<&'static str> {
    default_catalog()
        .into_iter()
        .find(|e| &e.spec == spec)
        .map(|e| e.note)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{realize, DEFAULT_ORDER_CAP};

    #[test]
    fn catalog_realizes_and_is_distinct() {
        let cat = default_catalog();
        assert!(cat.len() >= 35);
        for e in &cat {
            let r = realize(&e.spec, DEFAULT_ORDER_CAP).unwrap();
            assert!((2..=512).contains(&r.order()), "{}", e.spec);
        }
        let mut names: Vec<String> = cat.iter().map(|e| e.spec.to_string()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), cat.len());
    }

    #[test]
    fn describe_by_spec() {
        let z15 = parse_ring_spec("Z15").unwrap();
        assert_eq!(describe(&z15), Some("exercises T2.5 (two maximal ideals, 2 a unit)"));
        assert!(describe(&parse_ring_spec("Z3xM2(GF(2))").unwrap()).is_some());
        assert_eq!(describe(&parse_ring_spec("Z17").unwrap()), None);
    }
}
