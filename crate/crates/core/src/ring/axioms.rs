use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::{Element, FiniteRing};

/// Rings up to this order are checked over every triple.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 256;
pub const SAMPLED_TRIPLES: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomCheck {
    Exhaustive { triples: u64 },
    Sampled { triples: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("{law} fails at ({x}, {y}, {z})")]
    Law {
        law: &'static str,
        x: Element,
        y: Element,
        z: Element,
    },
    #[error("1 is not a unit or 0 is a unit")]
    Identity,
}

/// Checks the ring axioms and unit-set invariants over all triples when the
/// order is at most [`EXHAUSTIVE_AXIOM_LIMIT`], otherwise over a seeded sample.
pub fn check_axioms(r: &FiniteRing, seed: u64) -> Result<AxiomCheck, AxiomViolation> {
    let n = r.order();
    if !r.is_unit(r.one()) || r.is_unit(0) {
        return Err(AxiomViolation::Identity);
    }
    for x in r.elements() {
        if r.is_unit(x) != r.is_unit(r.neg(x)) {
            return Err(AxiomViolation::Law {
                law: "unit negation symmetry",
                x,
                y: 0,
                z: 0,
            });
        }
    }
    if n <= EXHAUSTIVE_AXIOM_LIMIT {
        for x in 0..n {
            for y in 0..n {
                check_pair(r, x, y)?;
                for z in 0..n {
                    check_triple(r, x, y, z)?;
                }
            }
        }
        Ok(AxiomCheck::Exhaustive {
            triples: (n as u64).pow(3),
        })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLED_TRIPLES {
            let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            check_pair(r, x, y)?;
            check_triple(r, x, y, z)?;
        }
        Ok(AxiomCheck::Sampled {
            triples: SAMPLED_TRIPLES as u64,
            seed,
        })
    }
}

fn check_pair(r: &FiniteRing, x: Element, y: Element) -> Result<(), AxiomViolation> {
    let fail = |law| Err(AxiomViolation::Law { law, x, y, z: 0 });
    if r.add(x, y) != r.add(y, x) {
        return fail("additive commutativity");
    }
    if y == 0 && (r.add(x, 0) != x || r.add(x, r.neg(x)) != 0) {
        return fail("additive identity/inverse");
    }
    if y == 0 && (r.mul(x, r.one()) != x || r.mul(r.one(), x) != x) {
        return fail("multiplicative identity");
    }
    if r.is_unit(x) && r.is_unit(y) && !r.is_unit(r.mul(x, y)) {
        return fail("unit closure");
    }
    Ok(())
}

fn check_triple(r: &FiniteRing, x: Element, y: Element, z: Element) -> Result<(), AxiomViolation> {
    let fail = |law| Err(AxiomViolation::Law { law, x, y, z });
    if r.add(r.add(x, y), z) != r.add(x, r.add(y, z)) {
        return fail("additive associativity");
    }
    if r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z)) {
        return fail("multiplicative associativity");
    }
    let yz = r.add(y, z);
    if r.mul(x, yz) != r.add(r.mul(x, y), r.mul(x, z)) {
        return fail("left distributivity");
    }
    if r.mul(yz, x) != r.add(r.mul(y, x), r.mul(z, x)) {
        return fail("right distributivity");
    }
    Ok(())
}
