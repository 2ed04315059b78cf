//! Ring descriptions and the text DSL that produces them.
//!
//! ```text
//! spec := atom { "x" atom }
//! atom := "Z" int | "GF(" int ")" | "M" int "(" spec ")" | "Z" int "[x]/(" poly ")"
//! poly := term { ("+"|"-") term }
//! term := [int] ["x" ["^" int]]
//! ```
//!
//! Whitespace is ignored everywhere. Products are flattened, so `A x B x C`
//! is a single three-factor product.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::arith::{is_prime, prime_power};

/// Abstract description of a finite ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// Integers modulo `n`.
    Zn(u64),
    /// The field with `p^k` elements. `modulus`, when given, is a monic
    /// irreducible polynomial of degree `k` (constant term first); otherwise
    /// the lexicographically smallest one is chosen at realization.
    GaloisField {
        p: u64,
        k: u32,
        modulus: Option<Vec<u64>>,
    },
    /// `Z_n[x]/(f)` for a monic `f` of degree at least one (constant term first).
    PolyQuotient { n: u64, modulus: Vec<u64> },
    /// `size x size` matrices over `base`.
    Matrix { base: Box<RingSpec>, size: usize },
    /// Direct product; always at least two factors and never directly nested.
    Product(Vec<RingSpec>),
}

impl RingSpec {
    pub fn gf(q: u64) -> Result<RingSpec, SpecErrorKind> {
        let (p, k) = prime_power(q).ok_or(SpecErrorKind::NotPrimePower(q))?;
        Ok(RingSpec::GaloisField {
            p,
            k,
            modulus: None,
        })
    }

    pub fn matrix(base: RingSpec, size: usize) -> RingSpec {
        RingSpec::Matrix {
            base: Box::new(base),
            size,
        }
    }

    /// Builds a product, flattening nested products. A single factor is
    /// returned unchanged.
    pub fn product(factors: Vec<RingSpec>) -> RingSpec {
        let mut flat = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                RingSpec::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            RingSpec::Product(flat)
        }
    }

    /// Number of elements, or `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        match self {
            RingSpec::Zn(n) => Some(*n),
            RingSpec::GaloisField { p, k, .. } => p.checked_pow(*k),
            RingSpec::PolyQuotient { n, modulus } => {
                n.checked_pow(u32::try_from(modulus.len().checked_sub(1)?).ok()?)
            }
            RingSpec::Matrix { base, size } => {
                let exp = u32::try_from(size.checked_mul(*size)?).ok()?;
                base.order()?.checked_pow(exp)
            }
            RingSpec::Product(fs) => fs
                .iter()
                .try_fold(1u64, |acc, f| acc.checked_mul(f.order()?)),
        }
    }

    /// Checks the structural invariants that the parser also enforces.
    pub fn validate(&self) -> Result<(), SpecErrorKind> {
        match self {
            RingSpec::Zn(n) if *n < 2 => Err(SpecErrorKind::ModulusTooSmall(*n)),
            RingSpec::Zn(_) => Ok(()),
            RingSpec::GaloisField { p, k, modulus } => {
                if !is_prime(*p) || *k == 0 {
                    return Err(SpecErrorKind::NotPrimePower(p.saturating_pow(*k)));
                }
                if let Some(m) = modulus {
                    if m.len() != *k as usize + 1 || m.last() != Some(&1) {
                        return Err(SpecErrorKind::NotMonic);
                    }
                }
                Ok(())
            }
            RingSpec::PolyQuotient { n, modulus } => {
                if *n < 2 {
                    return Err(SpecErrorKind::ModulusTooSmall(*n));
                }
                if modulus.len() < 2 {
                    return Err(SpecErrorKind::ConstantModulus);
                }
                if modulus.last() != Some(&1) || modulus.iter().any(|c| c >= n) {
                    return Err(SpecErrorKind::NotMonic);
                }
                Ok(())
            }
            RingSpec::Matrix { base, size } => {
                if *size == 0 {
                    return Err(SpecErrorKind::ZeroMatrixSize);
                }
                base.validate()
            }
            RingSpec::Product(fs) => {
                if fs.len() < 2 {
                    return Err(SpecErrorKind::ShortProduct);
                }
                fs.iter().try_for_each(RingSpec::validate)
            }
        }
    }
}

impl FromStr for RingSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        parse_ring_spec(s)
    }
}

/// Writes a polynomial (constant term first) in descending-degree DSL form.
pub(crate) fn write_poly(f: &mut impl fmt::Write, coeffs: &[u64]) -> fmt::Result {
    let mut first = true;
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !first {
            f.write_char('+')?;
        }
        first = false;
        match (deg, c) {
            (0, c) => write!(f, "{c}")?,
            (1, 1) => f.write_char('x')?,
            (1, c) => write!(f, "{c}x")?,
            (d, 1) => write!(f, "x^{d}")?,
            (d, c) => write!(f, "{c}x^{d}")?,
        }
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "Z{n}"),
            RingSpec::GaloisField { p, k, .. } => write!(f, "GF({})", p.pow(*k)),
            RingSpec::PolyQuotient { n, modulus } => {
                write!(f, "Z{n}[x]/(")?;
                write_poly(f, modulus)?;
                f.write_str(")")
            }
            RingSpec::Matrix { base, size } => write!(f, "M{size}({base})"),
            RingSpec::Product(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecErrorKind {
    #[error("expected {}, found {}", expected.join(" or "), found.map_or("end of input".to_string(), |c| format!("'{c}'")))]
    Syntax {
        expected: Vec<&'static str>,
        found: Option<char>,
    },
    #[error("integer literal too large")]
    IntegerOverflow,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus {0} is too small (need n >= 2)")]
    ModulusTooSmall(u64),
    #[error("matrix size must be at least 1")]
    ZeroMatrixSize,
    #[error("product needs at least two factors")]
    ShortProduct,
    #[error("quotient polynomial must have degree at least 1")]
    ConstantModulus,
    #[error("quotient polynomial must be monic")]
    NotMonic,
}

/// A parse failure with the character offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {kind}")]
pub struct SpecError {
    pub position: usize,
    pub kind: SpecErrorKind,
}

/// Parses the ring DSL into a validated [`RingSpec`].
pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecError> {
    let mut p = Parser {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        end: text.len(),
    };
    let spec = p.spec()?;
    if p.pos < p.chars.len() {
        return Err(p.unexpected(&["'x'", "end of input"]));
    }
    Ok(spec)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn unexpected(&self, expected: &[&'static str]) -> SpecError {
        SpecError {
            position: self.offset(),
            kind: SpecErrorKind::Syntax {
                expected: expected.to_vec(),
                found: self.peek(),
            },
        }
    }

    fn expect(&mut self, c: char, name: &'static str) -> Result<(), SpecError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&[name]))
        }
    }

    fn expect_str(&mut self, s: &str, name: &'static str) -> Result<(), SpecError> {
        for c in s.chars() {
            if self.peek() != Some(c) {
                return Err(self.unexpected(&[name]));
            }
            self.pos += 1;
        }
        Ok(())
    }

    fn int(&mut self) -> Result<u64, SpecError> {
        let start = self.offset();
        let mut value: Option<u64> = None;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            let v = value
                .unwrap_or(0)
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or(SpecError {
                    position: start,
                    kind: SpecErrorKind::IntegerOverflow,
                })?;
            value = Some(v);
            self.pos += 1;
        }
        value.ok_or_else(|| self.unexpected(&["integer"]))
    }

    fn spec(&mut self) -> Result<RingSpec, SpecError> {
        let mut factors = vec![self.atom()?];
        while self.peek() == Some('x') {
            self.pos += 1;
            factors.push(self.atom()?);
        }
        Ok(RingSpec::product(factors))
    }

    fn atom(&mut self) -> Result<RingSpec, SpecError> {
        let start = self.offset();
        let semantic = |kind| SpecError {
            position: start,
            kind,
        };
        match self.peek() {
            Some('Z') => {
                self.pos += 1;
                let n = self.int()?;
                if n < 2 {
                    return Err(semantic(SpecErrorKind::ModulusTooSmall(n)));
                }
                if self.peek() != Some('[') {
                    return Ok(RingSpec::Zn(n));
                }
                self.expect_str("[x]/(", "'[x]/('")?;
                let poly_start = self.offset();
                let coeffs = self.poly(n)?;
                self.expect(')', "')'")?;
                let modulus = monic_modulus(coeffs).map_err(|kind| SpecError {
                    position: poly_start,
                    kind,
                })?;
                Ok(RingSpec::PolyQuotient { n, modulus })
            }
            Some('G') => {
                self.expect_str("GF(", "'GF('")?;
                let q = self.int()?;
                self.expect(')', "')'")?;
                RingSpec::gf(q).map_err(semantic)
            }
            Some('M') => {
                self.pos += 1;
                let size = self.int()?;
                if size == 0 {
                    return Err(semantic(SpecErrorKind::ZeroMatrixSize));
                }
                self.expect('(', "'('")?;
                let base = self.spec()?;
                self.expect(')', "')'")?;
                let size = usize::try_from(size).map_err(|_| semantic(SpecErrorKind::IntegerOverflow))?;
                Ok(RingSpec::matrix(base, size))
            }
            _ => Err(self.unexpected(&["'Z'", "'GF('", "'M'"])),
        }
    }

    /// Parses a polynomial and returns its coefficients reduced mod `n`.
    fn poly(&mut self, n: u64) -> Result<Vec<u64>, SpecError> {
        let mut coeffs: Vec<u64> = Vec::new();
        let mut negative = false;
        loop {
            let (c, deg) = self.term()?;
            let deg = deg as usize;
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, 0);
            }
            let c = c % n;
            coeffs[deg] = if negative {
                (coeffs[deg] + n - c) % n
            } else {
                (coeffs[deg] + c) % n
            };
            match self.peek() {
                Some('+') => negative = false,
                Some('-') => negative = true,
                _ => return Ok(coeffs),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(u64, u32), SpecError> {
        let has_coeff = self.peek().is_some_and(|c| c.is_ascii_digit());
        let coeff = if has_coeff { self.int()? } else { 1 };
        if self.peek() != Some('x') {
            if has_coeff {
                return Ok((coeff, 0));
            }
            return Err(self.unexpected(&["integer", "'x'"]));
        }
        self.pos += 1;
        if self.peek() != Some('^') {
            return Ok((coeff, 1));
        }
        self.pos += 1;
        let start = self.offset();
        let deg = self.int()?;
        let deg = u32::try_from(deg).ok().filter(|&d| d < 64).ok_or(SpecError {
            position: start,
            kind: SpecErrorKind::IntegerOverflow,
        })?;
        Ok((coeff, deg))
    }
}

fn monic_modulus(mut coeffs: Vec<u64>) -> Result<Vec<u64>, SpecErrorKind> {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs.len() < 2 {
        return Err(SpecErrorKind::ConstantModulus);
    }
    if coeffs.last() != Some(&1) {
        return Err(SpecErrorKind::NotMonic);
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> RingSpec {
        parse_ring_spec(s).unwrap_or_else(|e| panic!("{s}: {e}"))
    }

    #[test]
    fn base_cases() {
        assert_eq!(parse("Z4"), RingSpec::Zn(4));
        assert_eq!(
            parse("GF(9)"),
            RingSpec::GaloisField {
                p: 3,
                k: 2,
                modulus: None
            }
        );
        assert_eq!(
            parse("Z4[x]/(x^2+2)"),
            RingSpec::PolyQuotient {
                n: 4,
                modulus: vec![2, 0, 1]
            }
        );
        assert_eq!(
            parse("Z4[x]/(x^2-2)"),
            RingSpec::PolyQuotient {
                n: 4,
                modulus: vec![2, 0, 1]
            }
        );
        assert_eq!(
            parse("Z2[x]/(x^2)"),
            RingSpec::PolyQuotient {
                n: 2,
                modulus: vec![0, 0, 1]
            }
        );
    }

    #[test]
    fn composition() {
        let gf2 = RingSpec::gf(2).unwrap();
        assert_eq!(
            parse("M2(GF(2)) x Z3"),
            RingSpec::Product(vec![RingSpec::matrix(gf2.clone(), 2), RingSpec::Zn(3)])
        );
        assert_eq!(
            parse("Z2 x Z3 x Z5"),
            RingSpec::Product(vec![RingSpec::Zn(2), RingSpec::Zn(3), RingSpec::Zn(5)])
        );
        assert_eq!(parse(" Z3xM2( GF (2))"), parse("Z3 x M2(GF(2))"));
        assert_eq!(
            parse("M2(Z2 x Z3)"),
            RingSpec::matrix(RingSpec::Product(vec![RingSpec::Zn(2), RingSpec::Zn(3)]), 2)
        );
    }

    #[test]
    fn semantic_errors() {
        let e = parse_ring_spec("GF(6)").unwrap_err();
        assert_eq!(e.kind, SpecErrorKind::NotPrimePower(6));
        assert!(e.to_string().contains("not a prime power"));
        assert_eq!(
            parse_ring_spec("Z1").unwrap_err().kind,
            SpecErrorKind::ModulusTooSmall(1)
        );
        assert_eq!(
            parse_ring_spec("M0(Z2)").unwrap_err().kind,
            SpecErrorKind::ZeroMatrixSize
        );
        assert_eq!(
            parse_ring_spec("Z4[x]/(2x^2+1)").unwrap_err().kind,
            SpecErrorKind::NotMonic
        );
        assert_eq!(
            parse_ring_spec("Z3[x]/(3x^2+2)").unwrap_err().kind,
            SpecErrorKind::ConstantModulus
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse_ring_spec("Z4 x Q").unwrap_err();
        assert_eq!(e.position, 5);
        assert!(matches!(e.kind, SpecErrorKind::Syntax { found: Some('Q'), .. }));
        let e = parse_ring_spec("GF(9").unwrap_err();
        assert_eq!(e.position, 4);
        assert!(matches!(e.kind, SpecErrorKind::Syntax { found: None, .. }));
        assert!(parse_ring_spec("").is_err());
        assert!(parse_ring_spec("Z4)").is_err());
        assert!(parse_ring_spec("Z99999999999999999999999").is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(parse("M3(GF(2))").order(), Some(512));
        assert_eq!(parse("Z3 x M2(GF(2))").order(), Some(48));
        assert_eq!(parse("Z4[x]/(x^2+2)").order(), Some(16));
        assert_eq!(parse("M9(Z99)").order(), None);
    }

    #[test]
    fn display_is_canonical_dsl() {
        for s in ["Z4", "GF(9)", "M2(GF(2))", "Z3 x M2(GF(2))", "Z4[x]/(x^2+2)", "Z5[x]/(x^3+4x+1)", "M2(Z2 x Z3)"] {
            assert_eq!(parse(s).to_string(), s);
        }
    }
}
