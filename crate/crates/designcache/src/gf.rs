//! Finite fields GF(p^m) at desk scale.
//!
//! Elements are encoded as integers `0..q`: the element with digits
//! `(c_0, c_1, ..., c_{m-1})` in base `p` represents the polynomial
//! `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` reduced modulo a fixed irreducible
//! polynomial. Arithmetic is precomputed into full `q x q` tables, and the
//! field axioms (associativity, commutativity, distributivity, unique
//! inverses) are verified exhaustively on construction. At the orders used
//! here (q <= 25) that check is a few thousand operations.
//!
//! The extension fields use a fixed table of Conway polynomials so that the
//! element encoding, and therefore every construction derived from it, is
//! identical across runs.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("NotPrimePower: {0} is not a prime power >= 2")]
    NotPrimePower(u64),
    #[error("unsupported field order {0}: no irreducible polynomial on record for p={1}, m={2}")]
    UnsupportedOrder(u64, u64, u32),
    #[error("field axiom check failed for order {0}: {1}")]
    AxiomViolation(u64, String),
}

/// Conway polynomials, monic, listed as ascending coefficients of the
/// non-leading terms: `x^m + c[m-1] x^{m-1} + ... + c[1] x + c[0]`.
const IRREDUCIBLE_POLYS: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1]),    // x^2 + x + 1
    (2, 3, &[1, 1, 0]), // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0]), // x^4 + x + 1
    (3, 2, &[2, 2]),    // x^2 + 2x + 2
    (5, 2, &[2, 4]),    // x^2 + 4x + 2
];

/// Decompose `n` as `p^m` for prime `p`, if possible.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 0;
    for cand in 2..=n {
        if n % cand == 0 {
            p = cand;
            break;
        }
    }
    // smallest divisor of n is prime
    let mut rest = n;
    let mut m = 0;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest == 1 {
        Some((p, m))
    } else {
        None
    }
}

/// GF(q) with table-driven arithmetic. Elements are `u64` values in `0..q`.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    m: u32,
    q: u64,
    add: Vec<u64>,
    mul: Vec<u64>,
    neg: Vec<u64>,
    inv: Vec<u64>, // inv[0] unused
}

impl FiniteField {
    /// Build GF(n) for a prime power `n`.
    pub fn new(n: u64) -> Result<Self, FieldError> {
        let (p, m) = prime_power(n).ok_or(FieldError::NotPrimePower(n))?;
        let q = n;
        let reduction: Vec<u64> = if m == 1 {
            vec![]
        } else {
            IRREDUCIBLE_POLYS
                .iter()
                .find(|&&(tp, tm, _)| tp == p && tm == m)
                .map(|&(_, _, coeffs)| coeffs.to_vec())
                .ok_or(FieldError::UnsupportedOrder(q, p, m))?
        };

        let qi = q as usize;
        let mut add = vec![0u64; qi * qi];
        let mut mul = vec![0u64; qi * qi];
        for a in 0..q {
            for b in 0..q {
                add[(a * q + b) as usize] = add_digits(a, b, p, m);
                mul[(a * q + b) as usize] = mul_poly(a, b, p, m, &reduction);
            }
        }
        let mut neg = vec![0u64; qi];
        let mut inv = vec![0u64; qi];
        for a in 0..q {
            neg[a as usize] = (0..q)
                .find(|&b| add[(a * q + b) as usize] == 0)
                .ok_or_else(|| FieldError::AxiomViolation(q, format!("{a} has no negation")))?;
            if a != 0 {
                inv[a as usize] = (1..q)
                    .find(|&b| mul[(a * q + b) as usize] == 1)
                    .ok_or_else(|| FieldError::AxiomViolation(q, format!("{a} has no inverse")))?;
            }
        }

        let field = FiniteField {
            p,
            m,
            q,
            add,
            mul,
            neg,
            inv,
        };
        field.check_axioms()?;
        Ok(field)
    }

    fn check_axioms(&self) -> Result<(), FieldError> {
        let q = self.q;
        let fail = |msg: String| Err(FieldError::AxiomViolation(q, msg));
        for a in 0..q {
            if self.add(a, 0) != a {
                return fail(format!("{a} + 0 != {a}"));
            }
            if self.mul(a, 1) != a {
                return fail(format!("{a} * 1 != {a}"));
            }
            if a != 0 && self.mul(a, self.inv(a)) != 1 {
                return fail(format!("inverse of {a} wrong"));
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) {
                    return fail(format!("addition not commutative at ({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail(format!("multiplication not commutative at ({a},{b})"));
                }
                if a != 0 && b != 0 && self.mul(a, b) == 0 {
                    return fail(format!("zero divisor: {a} * {b} = 0"));
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail(format!("addition not associative at ({a},{b},{c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail(format!("multiplication not associative at ({a},{b},{c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Elements of the subfield of order `s`, ascending. `s` must be p^d with
    /// d dividing m; these are exactly the fixed points of x -> x^s.
    pub fn subfield_elements(&self, s: u64) -> Vec<u64> {
        self.elements()
            .filter(|&x| self.pow(x, s) == x)
            .collect()
    }
}

fn add_digits(a: u64, b: u64, p: u64, m: u32) -> u64 {
    let mut out = 0;
    let mut scale = 1;
    let (mut a, mut b) = (a, b);
    for _ in 0..m {
        out += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

fn mul_poly(a: u64, b: u64, p: u64, m: u32, reduction: &[u64]) -> u64 {
    if m == 1 {
        return (a * b) % p;
    }
    let to_digits = |mut x: u64| -> Vec<u64> {
        let mut d = vec![0; m as usize];
        for digit in d.iter_mut() {
            *digit = x % p;
            x /= p;
        }
        d
    };
    let da = to_digits(a);
    let db = to_digits(b);
    let deg = 2 * (m as usize - 1);
    let mut prod = vec![0u64; deg + 1];
    for (i, &ca) in da.iter().enumerate() {
        for (j, &cb) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ca * cb) % p;
        }
    }
    // reduce by x^m = -(reduction polynomial), one degree at a time
    for d in (m as usize..=deg).rev() {
        let coeff = prod[d];
        if coeff == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &rc) in reduction.iter().enumerate() {
            let idx = d - m as usize + i;
            prod[idx] = (prod[idx] + coeff * (p - rc) % p) % p;
        }
    }
    let mut out = 0;
    let mut scale = 1;
    for &c in prod.iter().take(m as usize) {
        out += c * scale;
        scale *= p;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }

    #[test]
    fn builds_all_supported_orders() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25] {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.order(), q);
        }
    }

    #[test]
    fn rejects_composites_and_missing_orders() {
        assert!(matches!(
            FiniteField::new(6),
            Err(FieldError::NotPrimePower(6))
        ));
        assert!(matches!(
            FiniteField::new(10),
            Err(FieldError::NotPrimePower(10))
        ));
        // 2^5 = 32 is a prime power but outside the polynomial table
        assert!(matches!(
            FiniteField::new(32),
            Err(FieldError::UnsupportedOrder(32, 2, 5))
        ));
    }

    #[test]
    fn gf4_multiplication_table() {
        // In GF(4) with x^2 = x + 1: elements 0, 1, x (=2), x+1 (=3).
        let f = FiniteField::new(4).unwrap();
        assert_eq!(f.mul(2, 2), 3); // x * x = x + 1
        assert_eq!(f.mul(2, 3), 1); // x * (x+1) = x^2 + x = 1
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(f.inv(2), 3);
    }

    #[test]
    fn gf9_characteristic_three() {
        let f = FiniteField::new(9).unwrap();
        assert_eq!(f.characteristic(), 3);
        for a in f.elements() {
            let triple = f.add(f.add(a, a), a);
            assert_eq!(triple, 0);
        }
    }

    #[test]
    fn subfield_of_gf16_is_gf4() {
        let f = FiniteField::new(16).unwrap();
        let sub = f.subfield_elements(4);
        assert_eq!(sub.len(), 4);
        assert!(sub.contains(&0) && sub.contains(&1));
        // closed under multiplication
        for &a in &sub {
            for &b in &sub {
                assert!(sub.contains(&f.mul(a, b)));
            }
        }
    }

    #[test]
    fn subfield_of_gf25_is_gf5() {
        let f = FiniteField::new(25).unwrap();
        let sub = f.subfield_elements(5);
        assert_eq!(sub.len(), 5);
        for &a in &sub {
            for &b in &sub {
                assert!(sub.contains(&f.add(a, b)));
                assert!(sub.contains(&f.mul(a, b)));
            }
        }
    }
}
