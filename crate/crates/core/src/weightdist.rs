//! Weight distributions in exact integer arithmetic: Stirling numbers, the
//! power-moment recursion for `H(m, q)`, the binary three-term recurrence,
//! the MacWilliams transform, Pless power moments and the closed forms for
//! `C_3 … C_10`.

mod corollary;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::gf::{gcd, prime_power};
use crate::report::IdentityReport;

pub use corollary::{corollary_poly, CorollaryPolynomial, CorollaryTerm, COROLLARY_POLYNOMIALS};

/// Default largest code length accepted by [`weights_recursive`].
pub const DEFAULT_MAX_N: u64 = 4096;

/// Counts `C_0 … C_n` of an `[n, k]` code over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    q: u64,
    n: usize,
    k: usize,
    counts: Vec<BigUint>,
}

/// Where two distributions first disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Divergence {
    Parameters { left: (u64, usize, usize), right: (u64, usize, usize) },
    Count { index: usize, left: BigUint, right: BigUint },
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Divergence::Parameters { left, right } => {
                write!(f, "parameters (q, n, k) differ: {left:?} vs {right:?}")
            }
            Divergence::Count { index, left, right } => {
                write!(f, "first difference at weight {index}: {left} vs {right}")
            }
        }
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl WeightDistribution {
    pub fn new(q: u64, n: usize, k: usize, counts: Vec<BigUint>) -> Result<Self> {
        if counts.len() != n + 1 {
            return Err(Error::InconsistentDistribution(format!(
                "expected {} counts for length {n}, got {}",
                n + 1,
                counts.len()
            )));
        }
        if k > n {
            return Err(Error::InconsistentDistribution(format!("dimension {k} exceeds length {n}")));
        }
        Ok(WeightDistribution { q, n, k, counts })
    }

    /// Builds from signed values, rejecting any negative entry.
    pub fn from_signed(q: u64, n: usize, k: usize, counts: Vec<BigInt>) -> Result<Self> {
        let counts = counts
            .into_iter()
            .enumerate()
            .map(|(index, c)| {
                c.to_biguint().ok_or_else(|| Error::NegativeCount { index, value: c.to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(q, n, k, counts)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> &BigUint {
        &self.counts[weight]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn expected_total(&self) -> BigUint {
        BigUint::from(self.q).pow(self.k as u32)
    }

    /// `Σ C_h = q^k`.
    pub fn check_total(&self) -> Result<()> {
        let total = self.total();
        let want = self.expected_total();
        if total != want {
            return Err(Error::InconsistentDistribution(format!(
                "counts sum to {total}, expected q^k = {want}"
            )));
        }
        Ok(())
    }

    /// `C_0 = 1` and `C_1 = C_2 = 0`, as for any code of minimum distance at least 3.
    pub fn has_hamming_prefix(&self) -> bool {
        self.counts[0].is_one() && self.counts.iter().skip(1).take(2).all(Zero::is_zero)
    }

    /// Smallest nonzero weight that occurs, if any.
    pub fn minimum_distance(&self) -> Option<usize> {
        (1..=self.n).find(|&h| !self.counts[h].is_zero())
    }

    pub fn first_difference(&self, other: &Self) -> Option<Divergence> {
        if (self.q, self.n, self.k) != (other.q, other.n, other.k) {
            return Some(Divergence::Parameters {
                left: (self.q, self.n, self.k),
                right: (other.q, other.n, other.k),
            });
        }
        self.counts.iter().zip(&other.counts).enumerate().find(|(_, (a, b))| a != b).map(
            |(index, (a, b))| Divergence::Count { index, left: a.clone(), right: b.clone() },
        )
    }

    /// `Σ_i i^h C_i`.
    pub fn power_moment(&self, h: u32) -> BigUint {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| BigUint::from(i).pow(h) * c)
            .sum()
    }
}

/// Stirling number of the second kind from the alternating sum
/// `S(h,t) = (1/t!) Σ_j (-1)^(t-j) C(t,j) j^h`, with the division checked exact.
/// Zero outside `0 <= t <= h`, except `S(0,0) = 1`.
pub fn stirling2(h: u32, t: u32) -> BigUint {
    if t > h {
        return BigUint::zero();
    }
    let binom = pascal_row(t as usize);
    let mut sum = BigInt::zero();
    for (j, c) in binom.iter().enumerate() {
        let term = BigInt::from(c * BigUint::from(j).pow(h));
        if (t as usize - j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let fact: BigInt = (1..=t).map(BigInt::from).product();
    let (quot, rem) = sum.div_rem(&fact);
    assert!(rem.is_zero(), "S({h},{t}): alternating sum not divisible by {t}!");
    quot.to_biguint().expect("Stirling numbers are nonnegative")
}

/// `S(h, t)` for `0 <= t <= h <= max_h`, filled by `S(h,t) = t S(h-1,t) + S(h-1,t-1)`.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new(max_h: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
        for h in 1..=max_h {
            let prev = &rows[h - 1];
            let row = (0..=h)
                .map(|t| {
                    let keep = prev.get(t).map(|s| s * BigUint::from(t)).unwrap_or_default();
                    let grow = if t > 0 { prev[t - 1].clone() } else { BigUint::zero() };
                    keep + grow
                })
                .collect();
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn max_h(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, h: usize, t: usize) -> BigUint {
        self.rows.get(h).and_then(|row| row.get(t)).cloned().unwrap_or_default()
    }
}

/// Row `N` of Pascal's triangle, built by repeated addition.
pub fn pascal_row(n: usize) -> Vec<BigUint> {
    pascal_rows(n, n).pop().expect("one row")
}

/// Rows `lo..=hi` of Pascal's triangle.
pub fn pascal_rows(lo: usize, hi: usize) -> Vec<Vec<BigUint>> {
    let mut out = Vec::with_capacity(hi + 1 - lo.min(hi));
    let mut row = vec![BigUint::one()];
    for n in 0..=hi {
        if n > 0 {
            let mut next = Vec::with_capacity(n + 1);
            next.push(BigUint::one());
            for k in 1..n {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(BigUint::one());
            row = next;
        }
        if n >= lo {
            out.push(row.clone());
        }
    }
    out
}

fn binom_from(rows: &[Vec<BigUint>], lo: usize, n: isize, k: isize) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    rows[n as usize - lo][k as usize].clone()
}

/// The binomials `C(n - i, t - i)`, `i = 0..=t`, for increasing `t`.
///
/// With `M = n - t` these are `C(M + K, K)` for `K = t - i`: one diagonal of
/// Pascal's triangle. Diagonal `M` is the prefix sum of diagonal `M - 1`, so
/// stepping `t` forward replaces the diagonal by its first differences.
struct PascalDiagonal {
    t: usize,
    diag: Vec<BigInt>,
}

impl PascalDiagonal {
    fn new(n: usize) -> Self {
        let mut diag = vec![BigInt::one(); n + 1];
        for _ in 0..n {
            for k in 1..=n {
                let prev = diag[k - 1].clone();
                diag[k] += prev;
            }
        }
        PascalDiagonal { t: 0, diag }
    }

    fn advance(&mut self) {
        for k in (1..self.diag.len()).rev() {
            let prev = self.diag[k - 1].clone();
            self.diag[k] -= prev;
        }
        self.t += 1;
    }

    /// `C(n - i, t - i)` at the current `t`.
    fn get(&self, i: usize) -> &BigInt {
        &self.diag[self.t - i]
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RecursionOptions {
    pub max_n: u64,
    /// Run even when `gcd(m, q-1) != 1`. The output is then outside the
    /// hypothesis the recursion is proved under.
    pub ignore_gcd: bool,
}

impl Default for RecursionOptions {
    fn default() -> Self {
        RecursionOptions { max_n: DEFAULT_MAX_N, ignore_gcd: false }
    }
}

/// `n = (q^m - 1)/(q - 1)` after validating `q` and `m`.
pub fn hamming_length(q: u64, m: u32) -> Result<u64> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if m <= 1 {
        return Err(Error::InvalidParameter(format!("m must exceed 1, got {m}")));
    }
    let qm = q
        .checked_pow(m)
        .ok_or_else(|| Error::InvalidParameter(format!("q^m overflows for q = {q}, m = {m}")))?;
    Ok((qm - 1) / (q - 1))
}

fn check_recursion_input(q: u64, m: u32, opts: &RecursionOptions) -> Result<usize> {
    let n = hamming_length(q, m)?;
    let g = gcd(m as u64, q - 1);
    if g != 1 && !opts.ignore_gcd {
        return Err(Error::GcdPrecondition { q, m, gcd: g });
    }
    if n > opts.max_n {
        return Err(Error::WorkBound {
            what: "code length for the recursion".into(),
            required: n as u128,
            bound: opts.max_n as u128,
        });
    }
    Ok(n as usize)
}

pub fn weights_recursive(q: u64, m: u32) -> Result<WeightDistribution> {
    weights_recursive_with(q, m, &RecursionOptions::default())
}

/// Weight distribution of `H(m, q)` from the power-moment recursion
///
/// `h! C_h = (-1)^h q^(m(h-1)) (q^m - 1)
///         + Σ_{i<h} (-1)^(h+i-1) C_i Σ_{t=i}^{h} t! S(h,t) q^(h-t) (q-1)^(t-i) C(n-i, n-t)`.
///
/// The double sum is regrouped by `t`: with
/// `E(t) = Σ_{i<=t} (-1)^i C_i (q-1)^(t-i) C(n-i, t-i)`, which is final once
/// `C_t` is known, the inner part is `(-1)^(h-1) Σ_t t! S(h,t) q^(h-t) E'(t)`
/// where `E'(h)` omits the unknown `i = h` term. That makes the whole run
/// `O(n^2)` big-integer operations instead of `O(n^3)`.
pub fn weights_recursive_with(q: u64, m: u32, opts: &RecursionOptions) -> Result<WeightDistribution> {
    let n = check_recursion_input(q, m, opts)?;
    let qb = BigInt::from(q);
    let q_minus_1 = BigInt::from(q - 1);
    let q_pow: Vec<BigInt> = powers(&qb, n);
    let qm1_pow: Vec<BigInt> = powers(&q_minus_1, n);
    let qm = Pow::pow(&qb, m);
    let qm_minus_1 = &qm - 1;

    let mut counts: Vec<BigInt> = vec![BigInt::one()];
    let mut e_done: Vec<BigInt> = vec![BigInt::one()]; // E(0) = C_0
    let mut surj: Vec<BigInt> = vec![BigInt::one()]; // t! S(h, t), row h
    let mut diag = PascalDiagonal::new(n);
    let mut lead = BigInt::one(); // q^(m(h-1))
    let mut fact = BigInt::one();

    for h in 1..=n {
        surj = next_surjection_row(&surj);
        diag.advance();
        fact *= h;
        if h > 1 {
            lead *= &qm;
        }

        let mut e_partial = BigInt::zero();
        for (i, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = c * &qm1_pow[h - i] * diag.get(i);
            if i % 2 == 0 {
                e_partial += term;
            } else {
                e_partial -= term;
            }
        }

        let mut inner = &surj[h] * &e_partial;
        for t in 1..h {
            if !e_done[t].is_zero() {
                inner += &surj[t] * &q_pow[h - t] * &e_done[t];
            }
        }

        let mut total: BigInt = &lead * &qm_minus_1;
        if h % 2 == 1 {
            total = -total;
        }
        if h % 2 == 1 {
            total += inner;
        } else {
            total -= inner;
        }

        let (c_h, rem) = total.div_rem(&fact);
        if !rem.is_zero() {
            return Err(Error::InexactDivision { context: format!("h! C_h not divisible by h! at q = {q}, m = {m}, h = {h}") });
        }
        if h % 2 == 0 {
            e_partial += &c_h;
        } else {
            e_partial -= &c_h;
        }
        e_done.push(e_partial);
        counts.push(c_h);
    }

    WeightDistribution::from_signed(q, n, n - m as usize, counts)
}

/// The recursion evaluated as the literal double sum, `O(n^3)`. A reference
/// path for cross-checking [`weights_recursive`] on small codes.
pub fn weights_recursive_reference(q: u64, m: u32) -> Result<WeightDistribution> {
    let n = check_recursion_input(q, m, &RecursionOptions::default())?;
    let stirling = StirlingTable::new(n);
    let binom = pascal_rows(0, n);
    let qb = BigInt::from(q);
    let qm = Pow::pow(&qb, m);
    let mut counts = vec![BigInt::one()];
    for h in 1..=n {
        let mut total: BigInt = Pow::pow(&qm, h - 1) * (&qm - 1);
        if h % 2 == 1 {
            total = -total;
        }
        for (i, c) in counts.iter().enumerate() {
            let mut inner = BigInt::zero();
            for t in i..=h {
                let fact: BigUint = (1..=t).map(BigUint::from).product();
                let b = binom_from(&binom, 0, (n - i) as isize, (t - i) as isize);
                let term = fact
                    * stirling.get(h, t)
                    * BigUint::from(q).pow((h - t) as u32)
                    * BigUint::from(q - 1).pow((t - i) as u32)
                    * b;
                inner += BigInt::from(term);
            }
            if (h + i - 1) % 2 == 0 {
                total += c * inner;
            } else {
                total -= c * inner;
            }
        }
        let fact: BigInt = (1..=h).map(BigInt::from).product();
        let (c_h, rem) = total.div_rem(&fact);
        if !rem.is_zero() {
            return Err(Error::InexactDivision { context: format!("h! C_h not divisible by h! at q = {q}, m = {m}, h = {h}") });
        }
        counts.push(c_h);
    }
    WeightDistribution::from_signed(q, n, n - m as usize, counts)
}

fn powers(base: &BigInt, max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max + 1);
    let mut cur = BigInt::one();
    for _ in 0..=max {
        out.push(cur.clone());
        cur *= base;
    }
    out
}

/// Surjection counts `t! S(h, t)` for row `h` from row `h - 1`:
/// `F(h, t) = t (F(h-1, t) + F(h-1, t-1))`.
fn next_surjection_row(prev: &[BigInt]) -> Vec<BigInt> {
    let h = prev.len();
    (0..=h)
        .map(|t| {
            if t == 0 {
                return BigInt::zero();
            }
            let keep = prev.get(t).cloned().unwrap_or_default();
            (keep + &prev[t - 1]) * t
        })
        .collect()
}

/// Binary Hamming code weights from
/// `C_0 = 1, C_1 = 0, (i+1) C_{i+1} + C_i + (n-i+1) C_{i-1} = C(n, i)`.
pub fn weights_binary_recurrence(m: u32) -> Result<WeightDistribution> {
    let n = hamming_length(2, m)? as usize;
    let binom = pascal_row(n);
    let mut c: Vec<BigInt> = vec![BigInt::one(), BigInt::zero()];
    for i in 1..n {
        let rhs = BigInt::from(binom[i].clone()) - &c[i] - &c[i - 1] * (n - i + 1);
        let (next, rem) = rhs.div_rem(&BigInt::from(i + 1));
        if !rem.is_zero() {
            return Err(Error::InexactDivision { context: format!("binary recurrence at m = {m}, i = {i}") });
        }
        c.push(next);
    }
    // the relation at i = n, with C_{n+1} = 0
    if &c[n] + &c[n - 1] != BigInt::one() {
        return Err(Error::InconsistentDistribution(format!(
            "binary recurrence for m = {m} fails its closing relation C_n + C_(n-1) = 1"
        )));
    }
    WeightDistribution::from_signed(2, n, n - m as usize, c)
}

/// Krawtchouk values `K_j(x)` for `j = 0..=n` via the three-term recurrence
/// `(j+1) K_{j+1} = ((q-1)(n-j) + j - q x) K_j - (q-1)(n-j+1) K_{j-1}`.
fn krawtchouk_column(q: u64, n: usize, x: usize) -> Vec<BigInt> {
    let q = BigInt::from(q);
    let q1 = &q - 1;
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigInt::one());
    if n == 0 {
        return out;
    }
    out.push(&q1 * n - &q * x);
    for j in 1..n {
        let a = &q1 * (n - j) + j - &q * x;
        let b = &q1 * (n - j + 1);
        let num: BigInt = a * &out[j] - b * &out[j - 1];
        let (val, rem) = num.div_rem(&BigInt::from(j + 1));
        debug_assert!(rem.is_zero());
        out.push(val);
    }
    out
}

/// Dual weight distribution via the MacWilliams identity,
/// `B⊥_j = q^(-k) Σ_i B_i K_j(i)`.
pub fn macwilliams_transform(dist: &WeightDistribution) -> Result<WeightDistribution> {
    dist.check_total()?;
    let (q, n, k) = (dist.q, dist.n, dist.k);
    let mut acc = vec![BigInt::zero(); n + 1];
    for (i, b) in dist.counts.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        let b = BigInt::from(b.clone());
        for (j, kj) in krawtchouk_column(q, n, i).into_iter().enumerate() {
            acc[j] += &b * kj;
        }
    }
    let size = Pow::pow(BigInt::from(q), k);
    let counts = acc
        .into_iter()
        .enumerate()
        .map(|(j, v)| {
            let (quot, rem) = v.div_rem(&size);
            if rem.is_zero() {
                Ok(quot)
            } else {
                Err(Error::InexactDivision { context: format!("MacWilliams numerator at weight {j} not divisible by q^k") })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    WeightDistribution::from_signed(q, n, n - k, counts)
}

/// Checks the Pless power moment identity of order `h` between a code's
/// distribution `b` (dimension `k`) and its dual's `b_dual`:
///
/// `Σ_i i^h B_i = Σ_{i<=min(n,h)} (-1)^i B⊥_i Σ_{t=i}^{h} t! S(h,t) q^(k-t) (q-1)^(t-i) C(n-i, n-t)`.
///
/// Both sides are multiplied by `q^max(0, h-k)` so every power of `q` is integral;
/// the report's `scale` parameter records that exponent.
pub fn pless_moment_check(b: &WeightDistribution, b_dual: &WeightDistribution, h: u32) -> Result<IdentityReport> {
    if b.q != b_dual.q || b.n != b_dual.n || b.k + b_dual.k != b.n {
        return Err(Error::ParameterMismatch(format!(
            "code (q={}, n={}, k={}) and dual (q={}, n={}, k={}) are not a dual pair",
            b.q, b.n, b.k, b_dual.q, b_dual.n, b_dual.k
        )));
    }
    let (q, n, k) = (b.q, b.n, b.k);
    let h_us = h as usize;
    let scale = h_us.saturating_sub(k);
    let q_big = BigInt::from(q);

    let lhs = BigInt::from(b.power_moment(h)) * Pow::pow(&q_big, scale);

    let top = n.min(h_us);
    let rows = pascal_rows(n - top, n);
    let surj: Vec<BigUint> = (0..=h_us)
        .map(|t| {
            let fact: BigUint = (1..=t).map(BigUint::from).product();
            fact * stirling2(h, t as u32)
        })
        .collect();
    let mut rhs = BigInt::zero();
    for i in 0..=top {
        if b_dual.counts[i].is_zero() {
            continue;
        }
        let mut inner = BigInt::zero();
        for t in i..=h_us {
            let binom = binom_from(&rows, n - top, (n - i) as isize, n as isize - t as isize);
            if binom.is_zero() {
                continue;
            }
            // q^(k - t) scaled by q^scale
            let q_exp = (k + scale - t) as u32;
            let term = BigInt::from(&surj[t] * binom) * Pow::pow(&q_big, q_exp) * Pow::pow(BigInt::from(q - 1), (t - i) as u32);
            inner += term;
        }
        let term = BigInt::from(b_dual.counts[i].clone()) * inner;
        if i % 2 == 0 {
            rhs += term;
        } else {
            rhs -= term;
        }
    }

    Ok(IdentityReport::compare("pless-power-moment", lhs, rhs)
        .with("q", q)
        .with("n", n as u64)
        .with("k", k as u64)
        .with("h", h)
        .with("scale", format!("q^{scale}")))
}

/// Checks `Σ_{a ≠ 0} w(c(a))^h = q^((m-1)h) (q^m - 1)` on an enumerated
/// distribution of the trace code (dimension `m`).
pub fn verify_dual_power_moment(dual: &WeightDistribution, h: u32) -> IdentityReport {
    let q = BigUint::from(dual.q);
    let m = dual.k as u32;
    let lhs: BigUint = dual
        .counts
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| BigUint::from(i).pow(h) * c)
        .sum();
    let rhs = Pow::pow(&q, (m.saturating_sub(1)) * h) * (Pow::pow(&q, m) - 1u32);
    IdentityReport::compare("dual-power-moment", lhs, rhs)
        .with("q", dual.q)
        .with("m", m)
        .with("h", h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    /// Krawtchouk polynomial straight from its definition.
    fn krawtchouk_direct(q: u64, n: usize, j: usize, x: usize) -> BigInt {
        let rows = pascal_rows(0, n);
        (0..=j)
            .map(|s| {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                BigInt::from(sign)
                    * Pow::pow(BigInt::from(q - 1), (j - s) as u32)
                    * BigInt::from(binom_from(&rows, 0, x as isize, s as isize))
                    * BigInt::from(binom_from(&rows, 0, (n - x) as isize, (j - s) as isize))
            })
            .sum()
    }

    #[test]
    fn krawtchouk_recurrence_matches_definition() {
        for (q, n) in [(2, 7), (3, 13), (4, 5), (5, 9)] {
            for x in 0..=n {
                let col = krawtchouk_column(q, n, x);
                for j in 0..=n {
                    assert_eq!(col[j], krawtchouk_direct(q, n, j, x), "q={q} n={n} j={j} x={x}");
                }
            }
        }
    }

    #[test]
    fn stirling_examples() {
        for h in 0..=20 {
            assert_eq!(stirling2(h, h), BigUint::one());
        }
        assert_eq!(stirling2(3, 2), BigUint::from(3u32));
        assert_eq!(stirling2(4, 2), BigUint::from(7u32));
        assert_eq!(stirling2(3, 0), BigUint::zero());
        assert_eq!(stirling2(2, 5), BigUint::zero());
    }

    #[test]
    fn stirling_closed_form_matches_recurrence() {
        let table = StirlingTable::new(30);
        for h in 0..=30u32 {
            for t in 0..=h {
                assert_eq!(stirling2(h, t), table.get(h as usize, t as usize), "S({h},{t})");
            }
        }
    }

    #[test]
    fn pascal_diagonal_tracks_binomials() {
        let n = 12;
        let rows = pascal_rows(0, n);
        let mut d = PascalDiagonal::new(n);
        for t in 0..=n {
            for i in 0..=t {
                let want = BigInt::from(binom_from(&rows, 0, (n - i) as isize, (t - i) as isize));
                assert_eq!(d.get(i), &want, "t={t} i={i}");
            }
            if t < n {
                d.advance();
            }
        }
    }

    #[test]
    fn recursion_small_codes() {
        assert_eq!(weights_recursive(2, 3).unwrap().counts(), dist(&[1, 0, 0, 7, 7, 0, 0, 1]));
        assert_eq!(weights_recursive(2, 2).unwrap().counts(), dist(&[1, 0, 0, 1]));
        let d = weights_recursive(3, 3).unwrap();
        assert_eq!(d.count(3), &BigUint::from(104u32));
        assert_eq!(d.count(4), &BigUint::from(468u32));
        assert_eq!(d.total(), BigUint::from(3u32).pow(10u32));
    }

    #[test]
    fn recursion_preconditions() {
        assert_eq!(weights_recursive(3, 2).unwrap_err(), Error::GcdPrecondition { q: 3, m: 2, gcd: 2 });
        assert_eq!(weights_recursive(6, 2).unwrap_err(), Error::NotPrimePower(6));
        assert!(matches!(weights_recursive(2, 1), Err(Error::InvalidParameter(_))));
        let opts = RecursionOptions { max_n: 10, ignore_gcd: false };
        assert!(matches!(weights_recursive_with(2, 4, &opts), Err(Error::WorkBound { .. })));
    }

    #[test]
    fn regrouped_recursion_matches_literal_double_sum() {
        for (q, m) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (4, 2), (8, 2), (5, 3)] {
            assert_eq!(weights_recursive(q, m).unwrap(), weights_recursive_reference(q, m).unwrap(), "q={q} m={m}");
        }
    }

    #[test]
    fn binary_recurrence() {
        assert_eq!(weights_binary_recurrence(3).unwrap().counts(), dist(&[1, 0, 0, 7, 7, 0, 0, 1]));
        let d = weights_binary_recurrence(4).unwrap();
        assert_eq!(d.total(), BigUint::from(1u32 << 11));
    }

    #[test]
    fn macwilliams_examples() {
        let simplex = WeightDistribution::new(2, 7, 3, dist(&[1, 0, 0, 0, 7, 0, 0, 0])).unwrap();
        let ham = macwilliams_transform(&simplex).unwrap();
        assert_eq!(ham.counts(), dist(&[1, 0, 0, 7, 7, 0, 0, 1]));
        assert_eq!(ham.k(), 4);
        assert_eq!(macwilliams_transform(&ham).unwrap(), simplex);

        // the full space F_3^4 has the zero code as its dual
        let full: Vec<BigUint> = pascal_row(4).iter().enumerate().map(|(i, c)| c * BigUint::from(2u32).pow(i as u32)).collect();
        let full = WeightDistribution::new(3, 4, 4, full).unwrap();
        assert_eq!(macwilliams_transform(&full).unwrap().counts(), dist(&[1, 0, 0, 0, 0]));

        let bad = WeightDistribution::new(2, 3, 1, dist(&[1, 0, 0, 2])).unwrap();
        assert!(matches!(macwilliams_transform(&bad), Err(Error::InconsistentDistribution(_))));
    }

    #[test]
    fn pless_examples() {
        let simplex = WeightDistribution::new(2, 7, 3, dist(&[1, 0, 0, 0, 7, 0, 0, 0])).unwrap();
        let ham = WeightDistribution::new(2, 7, 4, dist(&[1, 0, 0, 7, 7, 0, 0, 1])).unwrap();
        let r0 = pless_moment_check(&simplex, &ham, 0).unwrap();
        assert!(r0.pass);
        assert_eq!(r0.lhs, "8");
        let r1 = pless_moment_check(&simplex, &ham, 1).unwrap();
        assert!(r1.pass);
        assert_eq!(r1.lhs, "28");
        for h in 0..=8 {
            assert!(pless_moment_check(&simplex, &ham, h).unwrap().pass, "h={h}");
            assert!(pless_moment_check(&ham, &simplex, h).unwrap().pass, "h={h} reversed");
        }
        assert!(matches!(pless_moment_check(&simplex, &simplex, 1), Err(Error::ParameterMismatch(_))));
    }

    #[test]
    fn dual_moment_on_simplex() {
        let simplex = WeightDistribution::new(2, 7, 3, dist(&[1, 0, 0, 0, 7, 0, 0, 0])).unwrap();
        for h in 1..=6 {
            assert!(verify_dual_power_moment(&simplex, h).pass);
        }
    }

    #[test]
    fn distribution_validation() {
        assert!(WeightDistribution::new(2, 3, 1, dist(&[1, 0])).is_err());
        let neg = WeightDistribution::from_signed(2, 1, 1, vec![BigInt::one(), BigInt::from(-1)]);
        assert!(matches!(neg, Err(Error::NegativeCount { index: 1, .. })));
        let a = WeightDistribution::new(2, 3, 1, dist(&[1, 0, 0, 1])).unwrap();
        let b = WeightDistribution::new(2, 3, 1, dist(&[1, 0, 1, 0])).unwrap();
        assert_eq!(
            a.first_difference(&b),
            Some(Divergence::Count { index: 2, left: BigUint::zero(), right: BigUint::one() })
        );
        assert_eq!(a.minimum_distance(), Some(3));
    }
}
