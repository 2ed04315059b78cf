//! Integer and polynomial helpers over `Z_n`.
//!
//! Polynomials are coefficient vectors with the constant term first.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, k)` with `q = p^k`, `p` prime and `k >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Distinct prime divisors in ascending order.
pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m` over `Z_n`.
pub fn poly_rem(a: &[u64], m: &[u64], n: u64) -> Vec<u64> {
    let deg = m.len() - 1;
    debug_assert_eq!(m[deg], 1);
    let mut r: Vec<u64> = a.iter().map(|c| c % n).collect();
    while r.len() > deg {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - deg;
            for (i, &mc) in m[..deg].iter().enumerate() {
                let slot = &mut r[shift + i];
                *slot = (*slot + n - lead * mc % n) % n;
            }
        }
    }
    r
}

/// Plain product over `Z_n` (no reduction by a modulus).
pub fn poly_mul(a: &[u64], b: &[u64], n: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % n;
        }
    }
    out
}

/// Decodes `index` into `len` base-`radix` digits, least significant first.
pub fn digits(mut index: u64, radix: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(index % radix);
        index /= radix;
    }
    out
}

/// Inverse of [`digits`].
pub fn from_digits(ds: &[u64], radix: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * radix + d)
}

/// Quotient and remainder of `a` by the monic polynomial `m` over `Z_n`.
pub fn poly_divmod(a: &[u64], m: &[u64], n: u64) -> (Vec<u64>, Vec<u64>) {
    let deg = m.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|c| c % n).collect();
    if r.len() <= deg {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - deg];
    while r.len() > deg {
        let lead = r.pop().unwrap();
        let shift = r.len() - deg;
        q[shift] = lead;
        if lead != 0 {
            for (i, &mc) in m[..deg].iter().enumerate() {
                let slot = &mut r[shift + i];
                *slot = (*slot + n - lead * mc % n) % n;
            }
        }
    }
    (q, r)
}

/// Factorization of a monic `f` over `F_p` into monic irreducibles with
/// multiplicities, in order of discovery (increasing degree).
pub fn factor_over_prime(f: &[u64], p: u64) -> Vec<(Vec<u64>, u32)> {
    let mut f: Vec<u64> = f.iter().map(|c| c % p).collect();
    let mut out = Vec::new();
    let mut d = 1;
    while f.len() > d {
        if 2 * d > f.len() - 1 {
            // what remains has no factor of degree <= half its degree
            out.push((f.clone(), 1));
            break;
        }
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            let mut mult = 0;
            loop {
                let (q, r) = poly_divmod(&f, &g, p);
                if r.iter().any(|&c| c != 0) {
                    break;
                }
                f = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((g, mult));
            }
        }
        d += 1;
    }
    out
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod_prime(a: u64, p: u64) -> u64 {
    let mut result = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Whether `gcd(a, b) = 1` over the prime field `F_p` (Euclid).
pub fn coprime_over_prime(a: &[u64], b: &[u64], p: u64) -> bool {
    let mut a: Vec<u64> = a.iter().map(|c| c % p).collect();
    let mut b: Vec<u64> = b.iter().map(|c| c % p).collect();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let lead_inv = inv_mod_prime(*b.last().unwrap(), p);
        let monic: Vec<u64> = b.iter().map(|c| c * lead_inv % p).collect();
        let mut r = poly_rem(&a, &monic, p);
        trim(&mut r);
        a = b;
        b = r;
    }
    a.len() == 1
}

/// Irreducibility of a monic `f` over the prime field `F_p`, by trial
/// division with every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible polynomial of degree `k` over `F_p` whose
/// coefficient tuple `(c_0, c_1, ..., c_{k-1})` is lexicographically smallest.
pub fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    (0..p.pow(k as u32))
        .map(|idx| {
            // c_0 is the most significant digit of the enumeration index
            let mut f = digits(idx, p, k);
            f.reverse();
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent check: f is reducible iff it equals a product of two
    /// monic polynomials of positive degree.
    fn reducible_by_products(f: &[u64], p: u64) -> bool {
        let deg = f.len() - 1;
        for d in 1..deg {
            for a in 0..p.pow(d as u32) {
                let mut g = digits(a, p, d);
                g.push(1);
                for b in 0..p.pow((deg - d) as u32) {
                    let mut h = digits(b, p, deg - d);
                    h.push(1);
                    if poly_mul(&g, &h, p) == f {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_factors(60), vec![(2, 2), (3, 1), (5, 1)]);
    }

    #[test]
    fn irreducibility_matches_product_enumeration() {
        for (p, k) in [(2u64, 2usize), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
            for low in 0..p.pow(k as u32) {
                let mut f = digits(low, p, k);
                f.push(1);
                assert_eq!(
                    is_irreducible(&f, p),
                    !reducible_by_products(&f, p),
                    "p={p} f={f:?}"
                );
            }
        }
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(smallest_irreducible(2, 1), vec![0, 1]);
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        // x^3 + x^2 + 1: (1, 0, 1) precedes (1, 1, 0)
        assert_eq!(smallest_irreducible(2, 3), vec![1, 0, 1, 1]);
        // x^4 + x^3 + 1 precedes x^4 + x + 1 in (c0, c1, c2, c3) order
        assert_eq!(smallest_irreducible(2, 4), vec![1, 0, 0, 1, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn remainder() {
        // x^3 mod (x^2 + 1) over Z5 is -x = 4x
        assert_eq!(poly_rem(&[0, 0, 0, 1], &[1, 0, 1], 5), vec![0, 4]);
        assert_eq!(from_digits(&digits(1234, 7, 4), 7), 1234);
    }
    #[test]
    fn factorization_multiplies_back() {
        let cases: [(&[u64], u64); 5] = [
            (&[0, 1, 1], 2),
            (&[0, 0, 1], 2),
            (&[1, 0, 1], 5),
            (&[1, 1, 1], 2),
            (&[2, 0, 0, 1, 0, 1], 3),
        ];
        for (f, p) in cases {
            let factors = factor_over_prime(f, p);
            let mut prod = vec![1];
            for (g, m) in &factors {
                assert!(is_irreducible(g, p), "{g:?}");
                for _ in 0..*m {
                    prod = poly_mul(&prod, g, p);
                }
            }
            assert_eq!(prod, f, "p={p}");
        }
        assert_eq!(factor_over_prime(&[0, 1, 1], 2), vec![(vec![0, 1], 1), (vec![1, 1], 1)]);
        assert_eq!(factor_over_prime(&[0, 0, 1], 2), vec![(vec![0, 1], 2)]);
        assert_eq!(factor_over_prime(&[1, 1, 1], 2), vec![(vec![1, 1, 1], 1)]);
    }
}
