//! The finite-field tower `F_p ⊂ F_q ⊂ F_{q^m}`.
//!
//! Everything lives in the big field `F_{q^m}`, represented in a polynomial
//! basis over `F_p` modulo a fixed irreducible polynomial. The subfield `F_q`
//! is the set `{x : x^q = x}`; no separate representation exists for it.
//!
//! Elements are packed as base-`p` integers, coefficient of `x^0` in the least
//! significant digit. Multiplication goes through discrete-log tables relative
//! to the primitive element `gamma`, built eagerly at construction.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field `F_{q^m}` the constructor accepts by default.
pub const DEFAULT_MAX_FIELD_SIZE: u64 = 1 << 20;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^r`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut r = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((p, r))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomials over `F_p`, coefficients low-degree first. Only used to
/// build the tower; field arithmetic afterwards runs on the log tables.
mod poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        // p is prime, so a^(p-2) is the inverse.
        let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        acc as u32
    }

    /// Remainder of `a` modulo `f` (`f` nonzero, trimmed).
    pub fn rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let df = f.len() - 1;
        let lead_inv = inv_mod(f[df], p) as u64;
        while r.len() > df {
            let top = r.len() - 1;
            let c = (r[top] as u64 * lead_inv % p as u64) as u32;
            let shift = top - df;
            for (i, &fc) in f.iter().enumerate() {
                let sub = (c as u64 * fc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
        trim(&mut out);
        out
    }

    pub fn mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
        rem(&mul(a, b, p), f, p)
    }

    pub fn powmod(a: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
        let mut acc = rem(&[1], f, p);
        let mut base = rem(a, f, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &base, f, p);
            }
            base = mulmod(&base, &base, f, p);
            e >>= 1;
        }
        acc
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let len = a.len().max(b.len());
        let mut out: Vec<u32> = (0..len)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Rabin's test: `f` monic of degree `d` is irreducible over `F_p` iff
    /// `x^(p^d) = x mod f` and `gcd(x^(p^(d/l)) - x, f) = 1` for every prime `l | d`.
    pub fn is_irreducible(f: &[u32], p: u32, prime_divisors_of_degree: &[u64]) -> bool {
        let d = f.len() - 1;
        let x = rem(&[0, 1], f, p);
        // frob[k] = x^(p^k) mod f
        let mut frob = vec![x.clone()];
        for k in 1..=d {
            let next = powmod(&frob[k - 1], p as u64, f, p);
            frob.push(next);
        }
        if frob[d] != x {
            return false;
        }
        prime_divisors_of_degree.iter().all(|&l| {
            let g = gcd(&sub(&frob[d / l as usize], &x, p), f, p);
            g.len() == 1
        })
    }
}

/// An element of the big field of a particular tower.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    tag: u64,
    packed: u32,
}

impl FieldElement {
    /// Base-`p` packed polynomial-basis coordinates.
    pub fn packed(self) -> u32 {
        self.packed
    }

    pub fn is_zero(self) -> bool {
        self.packed == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({})", self.packed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceDomain {
    /// Absolute trace of `F_{q^m}` down to `F_p`.
    BigField,
    /// Absolute trace of `F_q` down to `F_p`; the argument must lie in `F_q`.
    Subfield,
}

#[derive(Clone)]
pub struct FieldTower {
    p: u32,
    r: u32,
    m: u32,
    q: u64,
    size: u64,
    degree: usize,
    n: u64,
    modulus: Vec<u32>,
    gamma: FieldElement,
    exp: Vec<u32>,
    log: Vec<u32>,
    tag: u64,
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTower")
            .field("p", &self.p)
            .field("r", &self.r)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("gamma", &self.coeffs(self.gamma))
            .finish()
    }
}

impl FieldTower {
    pub fn new(p: u64, r: u32, m: u32) -> Result<Self> {
        Self::with_limit(p, r, m, DEFAULT_MAX_FIELD_SIZE)
    }

    /// Tower for `F_q ⊂ F_{q^m}` where `q` is given as a prime power.
    pub fn for_code(q: u64, m: u32) -> Result<Self> {
        Self::for_code_with_limit(q, m, DEFAULT_MAX_FIELD_SIZE)
    }

    pub fn for_code_with_limit(q: u64, m: u32, limit: u64) -> Result<Self> {
        let (p, r) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::with_limit(p, r, m, limit)
    }

    pub fn with_limit(p: u64, r: u32, m: u32, limit: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::InvalidParameter("r must be at least 1".into()));
        }
        if m <= 1 {
            return Err(Error::InvalidParameter(format!("m must exceed 1, got {m}")));
        }
        let degree = r as usize * m as usize;
        let size = (p as u128).checked_pow(degree as u32).unwrap_or(u128::MAX);
        let limit = limit.min(1 << 31);
        if size > limit as u128 {
            return Err(Error::FieldTooLarge { size, limit });
        }
        let size = size as u64;
        let q = p.pow(r);
        let n = (size - 1) / (q - 1);
        let pp = p as u32;

        let degree_primes = prime_factors(degree as u64);
        let modulus = (0..size)
            .map(|idx| {
                let mut f = lex_coeffs(idx, pp, degree);
                f.push(1);
                f
            })
            .find(|f| f[0] != 0 && poly::is_irreducible(f, pp, &degree_primes))
            .expect("an irreducible polynomial of every degree exists");

        let order_primes = prime_factors(size - 1);
        let is_primitive = |c: &[u32]| {
            let mut c = c.to_vec();
            poly::trim(&mut c);
            !c.is_empty()
                && order_primes
                    .iter()
                    .all(|&l| poly::powmod(&c, (size - 1) / l, &modulus, pp) != vec![1])
        };
        let gamma_coeffs = (1..size)
            .map(|idx| lex_coeffs(idx, pp, degree))
            .find(|c| is_primitive(c))
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = Vec::with_capacity(size as usize - 1);
        let mut log = vec![u32::MAX; size as usize];
        let mut cur = vec![1u32];
        for i in 0..size - 1 {
            let packed = pack(&cur, pp);
            debug_assert_eq!(log[packed as usize], u32::MAX, "gamma is not primitive");
            exp.push(packed);
            log[packed as usize] = i as u32;
            cur = poly::mulmod(&cur, &gamma_coeffs, &modulus, pp);
        }

        let tag = p | (r as u64) << 32 | (m as u64) << 48;
        Ok(FieldTower {
            p: pp,
            r,
            m,
            q,
            size,
            degree,
            n,
            modulus,
            gamma: FieldElement { tag, packed: pack(&gamma_coeffs, pp) },
            exp,
            log,
            tag,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `q^m`, the number of elements of the big field.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Extension degree of the big field over `F_p`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `(q^m - 1) / (q - 1)`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Monic modulus, coefficients low-degree first (length `degree + 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn gamma(&self) -> FieldElement {
        self.gamma
    }

    /// Multiplicative order of the big field, `q^m - 1`.
    pub fn group_order(&self) -> u64 {
        self.size - 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { tag: self.tag, packed: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { tag: self.tag, packed: 1 }
    }

    /// The prime-field element `c · 1`.
    pub fn from_prime(&self, c: u64) -> FieldElement {
        FieldElement { tag: self.tag, packed: (c % self.p as u64) as u32 }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.degree {
            return Err(Error::InvalidParameter(format!(
                "expected {} coefficients, got {}",
                self.degree,
                coeffs.len()
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::InvalidParameter(format!("coefficient {c} is not reduced mod {}", self.p)));
        }
        Ok(FieldElement { tag: self.tag, packed: pack(coeffs, self.p) })
    }

    pub fn from_packed(&self, packed: u32) -> Result<FieldElement> {
        if packed as u64 >= self.size {
            return Err(Error::InvalidParameter(format!("packed value {packed} out of range")));
        }
        Ok(FieldElement { tag: self.tag, packed })
    }

    /// Polynomial-basis coordinates, low-degree first.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        let mut v = x.packed;
        (0..self.degree)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    /// Rejects elements from a tower with different parameters.
    pub fn check(&self, x: FieldElement) -> Result<FieldElement> {
        if x.tag != self.tag || x.packed as u64 >= self.size {
            return Err(Error::TowerMismatch);
        }
        Ok(x)
    }

    /// `gamma^e`, any exponent.
    pub fn gamma_pow(&self, e: u64) -> FieldElement {
        FieldElement { tag: self.tag, packed: self.exp[(e % self.group_order()) as usize] }
    }

    /// Discrete log relative to `gamma`; `None` for zero.
    pub fn log(&self, x: FieldElement) -> Option<u64> {
        debug_assert_eq!(x.tag, self.tag);
        (!x.is_zero()).then(|| self.log[x.packed as usize] as u64)
    }

    /// Generator `gamma^n` of the subfield's multiplicative group.
    pub fn subfield_generator(&self) -> FieldElement {
        self.gamma_pow(self.n)
    }

    /// The `q - 1` nonzero subfield elements, `g^0, g^1, …` for `g = gamma^n`.
    pub fn subfield_units(&self) -> Vec<FieldElement> {
        (0..self.q - 1).map(|j| self.gamma_pow(j * self.n)).collect()
    }

    /// All `q` subfield elements: zero followed by `subfield_units`.
    pub fn subfield_elements(&self) -> Vec<FieldElement> {
        std::iter::once(self.zero()).chain(self.subfield_units()).collect()
    }

    /// Nonzero big-field elements in discrete-log order.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.exp.iter().map(|&packed| FieldElement { tag: self.tag, packed })
    }

    /// All big-field elements: zero followed by `units`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        std::iter::once(self.zero()).chain(self.units())
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.tag == self.tag && b.tag == self.tag);
        let packed = if self.p == 2 {
            a.packed ^ b.packed
        } else {
            self.digitwise(a.packed, b.packed, |x, y| (x + y) % self.p)
        };
        FieldElement { tag: self.tag, packed }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let packed = self.digitwise(a.packed, 0, |x, _| (self.p - x) % self.p);
        FieldElement { tag: self.tag, packed }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a.tag == self.tag && b.tag == self.tag);
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let e = self.log[a.packed as usize] as u64 + self.log[b.packed as usize] as u64;
        self.gamma_pow(e)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let a = self.check(a)?;
        let e = self.log(a).ok_or(Error::ZeroInverse)?;
        Ok(self.gamma_pow(self.group_order() - e))
    }

    /// Square-and-multiply exponentiation; `0^0 = 1`.
    pub fn pow(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn in_subfield(&self, x: FieldElement) -> bool {
        self.pow(x, self.q) == x
    }

    /// Multiplication straight in the polynomial basis, bypassing the log tables.
    pub fn mul_polynomial_basis(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let prod = poly::mulmod(&self.coeffs(a), &self.coeffs(b), &self.modulus, self.p);
        FieldElement { tag: self.tag, packed: pack(&prod, self.p) }
    }

    /// Sum of the conjugates `x^(p^j)` for `j < count`, returned as a prime-field residue.
    fn absolute_trace(&self, x: FieldElement, count: usize) -> u32 {
        let mut acc = self.zero();
        let mut y = x;
        for _ in 0..count {
            acc = self.add(acc, y);
            y = self.pow(y, self.p as u64);
        }
        debug_assert!(acc.packed < self.p, "trace is not Frobenius-fixed");
        acc.packed
    }

    /// Absolute trace to `F_p`. For [`TraceDomain::Subfield`] the sum runs over
    /// the `r` conjugates of `x` in `F_q`.
    pub fn trace_abs(&self, x: FieldElement, from: TraceDomain) -> Result<u32> {
        let x = self.check(x)?;
        match from {
            TraceDomain::BigField => Ok(self.absolute_trace(x, self.degree)),
            TraceDomain::Subfield => {
                if !self.in_subfield(x) {
                    return Err(Error::NotInSubfield { q: self.q });
                }
                Ok(self.absolute_trace(x, self.r as usize))
            }
        }
    }

    /// Relative trace `x + x^q + … + x^(q^(m-1))` into `F_q`.
    pub fn trace_rel(&self, x: FieldElement) -> FieldElement {
        let mut acc = self.zero();
        let mut y = x;
        for _ in 0..self.m {
            acc = self.add(acc, y);
            y = self.pow(y, self.q);
        }
        acc
    }

    /// Norm `x^n` into `F_q`.
    pub fn norm(&self, x: FieldElement) -> FieldElement {
        self.pow(x, self.n)
    }

    fn digitwise(&self, a: u32, b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.degree {
            out += f(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }
}

/// Coefficient vector at position `idx` of the lexicographic order with the
/// constant coefficient most significant.
fn lex_coeffs(mut idx: u64, p: u32, len: usize) -> Vec<u32> {
    let mut c = vec![0u32; len];
    for slot in c.iter_mut().rev() {
        *slot = (idx % p as u64) as u32;
        idx /= p as u64;
    }
    c
}

fn pack(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}
