//! `H(m, q)` and its dual, built three ways:
//!
//! * parity-check matrix whose columns are the normalized projective points of `F_q^m`;
//! * cyclic code of length `n` with defining zero `gamma^(q-1)` (when `gcd(m, q-1) = 1`);
//! * the trace code `c(a) = (Tr(a β^i))_{i<n}`, `β = gamma^(q-1)`, as the dual.
//!
//! The enumerations here are the brute-force oracles the recursion is checked against.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{gcd, FieldElement, FieldTower, DEFAULT_MAX_FIELD_SIZE};
use crate::weightdist::{macwilliams_transform, WeightDistribution};

/// Default cap on the number of codewords a single enumeration may visit.
pub const DEFAULT_ENUMERATION_GUARD: u128 = 1 << 20;

/// A word of length `n` over the subfield `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Codeword {
    symbols: Vec<FieldElement>,
}

impl Codeword {
    pub fn symbols(&self) -> &[FieldElement] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|s| !s.is_zero()).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimalMethod {
    /// Enumerate all `q^(n-m)` codewords from a null-space basis of the parity-check matrix.
    Direct,
    /// MacWilliams transform of the enumerated trace-code distribution.
    MacWilliams,
}

impl PrimalMethod {
    pub fn name(self) -> &'static str {
        match self {
            PrimalMethod::Direct => "direct",
            PrimalMethod::MacWilliams => "macwilliams",
        }
    }
}

#[derive(Clone, Debug)]
pub struct HammingCode {
    tower: FieldTower,
    n: usize,
    k: usize,
    cyclic: bool,
    /// Symbol codes for `F_q`: index 0 is zero, index `j + 1` is `g^j`, `g = gamma^n`.
    subfield: Vec<FieldElement>,
    symbol_of: HashMap<FieldElement, u32>,
}

impl HammingCode {
    pub fn new(q: u64, m: u32) -> Result<Self> {
        Self::with_field_limit(q, m, DEFAULT_MAX_FIELD_SIZE)
    }

    pub fn with_field_limit(q: u64, m: u32, limit: u64) -> Result<Self> {
        Ok(Self::from_tower(FieldTower::for_code_with_limit(q, m, limit)?))
    }

    pub fn from_tower(tower: FieldTower) -> Self {
        let n = tower.n() as usize;
        let k = n - tower.m() as usize;
        let cyclic = gcd(tower.m() as u64, tower.q() - 1) == 1;
        let subfield = tower.subfield_elements();
        let symbol_of = subfield.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
        HammingCode { tower, n, k, cyclic, subfield, symbol_of }
    }

    pub fn tower(&self) -> &FieldTower {
        &self.tower
    }

    pub fn q(&self) -> u64 {
        self.tower.q()
    }

    pub fn m(&self) -> u32 {
        self.tower.m()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    fn require_cyclic(&self) -> Result<()> {
        if self.cyclic {
            Ok(())
        } else {
            let (q, m) = (self.q(), self.m());
            Err(Error::GcdPrecondition { q, m, gcd: gcd(m as u64, q - 1) })
        }
    }

    /// Exponent `q - 1` of the defining zero `gamma^(q-1)`.
    pub fn defining_zero_exponent(&self) -> u64 {
        self.q() - 1
    }

    pub fn defining_zero(&self) -> Option<FieldElement> {
        self.cyclic.then(|| self.tower.gamma_pow(self.defining_zero_exponent()))
    }

    /// Symbol code of a subfield element (0 for zero, `j + 1` for `g^j`).
    pub fn symbol(&self, x: FieldElement) -> Option<u32> {
        self.symbol_of.get(&x).copied()
    }

    /// Subfield element for a symbol code.
    pub fn symbol_element(&self, code: u32) -> Option<FieldElement> {
        self.subfield.get(code as usize).copied()
    }

    pub fn symbols_of(&self, word: &Codeword) -> Vec<u32> {
        word.symbols.iter().map(|&s| self.symbol(s).expect("codeword symbols lie in F_q")).collect()
    }

    /// Parity-check matrix as `n` columns of length `m`: one column per
    /// projective point of `F_q^m`, scaled so the first nonzero entry is 1,
    /// sorted lexicographically by symbol code.
    pub fn parity_check(&self) -> Vec<Vec<FieldElement>> {
        let (q, m) = (self.q(), self.m() as usize);
        let mut cols = Vec::with_capacity(self.n);
        let mut digits = vec![0u32; m];
        // odometer over symbol codes, last entry fastest, yields lexicographic order
        loop {
            if digits.iter().find(|&&d| d != 0) == Some(&1) {
                cols.push(digits.iter().map(|&d| self.subfield[d as usize]).collect());
            }
            let mut pos = m;
            loop {
                if pos == 0 {
                    debug_assert_eq!(cols.len(), self.n);
                    return cols;
                }
                pos -= 1;
                digits[pos] += 1;
                if (digits[pos] as u64) < q {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }

    /// Row-major `m × n` form of [`parity_check`](Self::parity_check).
    pub fn parity_check_rows(&self) -> Vec<Vec<FieldElement>> {
        let cols = self.parity_check();
        (0..self.m() as usize).map(|r| cols.iter().map(|c| c[r]).collect()).collect()
    }

    /// Basis of the null space of the parity-check matrix: a `k × n` generator matrix.
    pub fn primal_generator_matrix(&self) -> Vec<Vec<FieldElement>> {
        null_space(&self.tower, &self.parity_check_rows(), self.n)
    }

    /// Exponents of the roots of the generator polynomial: the `q`-cyclotomic
    /// coset of `q - 1` modulo `q^m - 1`.
    pub fn cyclic_hamming_roots(&self) -> Result<Vec<u64>> {
        self.require_cyclic()?;
        let order = self.tower.group_order();
        let mut coset = Vec::new();
        let mut e = self.defining_zero_exponent() % order;
        while !coset.contains(&e) {
            coset.push(e);
            e = (e as u128 * self.q() as u128 % order as u128) as u64;
        }
        coset.sort_unstable();
        Ok(coset)
    }

    /// `g(x) = Π (x - gamma^e)` over the root exponents, coefficients low-degree
    /// first. All coefficients lie in `F_q`.
    pub fn generator_polynomial(&self) -> Result<Vec<FieldElement>> {
        let t = &self.tower;
        let mut g = vec![t.one()];
        for e in self.cyclic_hamming_roots()? {
            g = poly_mul(t, &g, &[t.neg(t.gamma_pow(e)), t.one()]);
        }
        if let Some(c) = g.iter().find(|&&c| !t.in_subfield(c)) {
            return Err(Error::InconsistentDistribution(format!("generator coefficient {c:?} is not in F_q")));
        }
        Ok(g)
    }

    /// `h(x) = (x^n - 1) / g(x)`; fails if `g` does not divide `x^n - 1`.
    pub fn check_polynomial(&self) -> Result<Vec<FieldElement>> {
        let t = &self.tower;
        let g = self.generator_polynomial()?;
        let mut xn1 = vec![t.zero(); self.n + 1];
        xn1[0] = t.neg(t.one());
        xn1[self.n] = t.one();
        let (quot, rem) = poly_divrem(t, &xn1, &g);
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InconsistentDistribution("generator polynomial does not divide x^n - 1".into()));
        }
        Ok(quot)
    }

    /// Dimension of the cyclic code, `n - deg g`.
    pub fn cyclic_dimension(&self) -> Result<usize> {
        Ok(self.n + 1 - self.generator_polynomial()?.len())
    }

    /// Generator matrix rows `x^j g(x)`, `j < n - deg g`.
    pub fn cyclic_generator_rows(&self) -> Result<Vec<Vec<FieldElement>>> {
        let g = self.generator_polynomial()?;
        Ok(shifted_rows(&self.tower, &g, self.n))
    }

    /// Generator rows of the dual of the cyclic code: shifts of the reciprocal of `h`.
    fn cyclic_dual_rows(&self) -> Result<Vec<Vec<FieldElement>>> {
        let mut h = self.check_polynomial()?;
        h.reverse();
        Ok(shifted_rows(&self.tower, &h, self.n))
    }

    /// `c(a) = (Tr(a), Tr(a β), …, Tr(a β^(n-1)))` with `β = gamma^(q-1)`.
    pub fn dual_codeword(&self, a: FieldElement) -> Result<Codeword> {
        self.require_cyclic()?;
        let t = &self.tower;
        let a = t.check(a)?;
        let beta = t.gamma_pow(self.defining_zero_exponent());
        let mut x = a;
        let symbols = (0..self.n)
            .map(|_| {
                let s = t.trace_rel(x);
                x = t.mul(x, beta);
                s
            })
            .collect();
        Ok(Codeword { symbols })
    }

    fn check_guard(&self, what: &str, words: u128, guard: u128) -> Result<()> {
        if words > guard {
            return Err(Error::WorkBound { what: what.to_owned(), required: words, bound: guard });
        }
        Ok(())
    }

    /// Weight distribution of the trace code over all `q^m` values of `a`.
    ///
    /// Weights come from a table of `Tr(gamma^e) != 0`; this is output-equivalent
    /// to `dual_codeword(a).weight()` and tested as such.
    pub fn enumerate_dual_distribution(&self, guard: u128) -> Result<WeightDistribution> {
        self.require_cyclic()?;
        self.check_guard("trace-code codewords", self.tower.size() as u128, guard)?;
        let t = &self.tower;
        let order = t.group_order();
        let nonzero_trace: Vec<bool> = t.units().map(|x| !t.trace_rel(x).is_zero()).collect();
        let step = self.defining_zero_exponent();
        let n = self.n;
        let hist = (0..order)
            .into_par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut hist, s| {
                    let w = (0..n as u64).filter(|&i| nonzero_trace[((s + i * step) % order) as usize]).count();
                    hist[w] += 1;
                    hist
                },
            )
            .reduce(|| vec![0u64; n + 1], add_hist);
        let mut counts = hist;
        counts[0] += 1; // a = 0
        WeightDistribution::new(self.q(), n, self.m() as usize, to_big(counts))
    }

    /// Whether the `q^m` trace codewords are pairwise distinct.
    pub fn dual_codewords_distinct(&self, guard: u128) -> Result<bool> {
        self.require_cyclic()?;
        self.check_guard("trace-code codewords", self.tower.size() as u128, guard)?;
        let mut seen = HashSet::with_capacity(self.tower.size() as usize);
        for a in self.tower.elements() {
            if !seen.insert(self.dual_codeword(a)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dual distribution from the row space of the parity-check matrix, without traces.
    pub fn parity_rowspace_distribution(&self, guard: u128) -> Result<WeightDistribution> {
        self.check_guard("parity-check row space", self.tower.size() as u128, guard)?;
        let counts = span_histogram(&self.tower, &self.parity_check_rows(), self.n);
        WeightDistribution::new(self.q(), self.n, self.m() as usize, to_big(counts))
    }

    /// Distribution of the dual of the cyclic code, from multiples of the reciprocal check polynomial.
    pub fn cyclic_dual_distribution(&self, guard: u128) -> Result<WeightDistribution> {
        let rows = self.cyclic_dual_rows()?;
        let words = (self.q() as u128).saturating_pow(rows.len() as u32);
        self.check_guard("cyclic dual codewords", words, guard)?;
        let counts = span_histogram(&self.tower, &rows, self.n);
        WeightDistribution::new(self.q(), self.n, rows.len(), to_big(counts))
    }

    /// Weight distribution of the cyclic code with defining zero `gamma^(q-1)`.
    pub fn cyclic_distribution(&self, guard: u128) -> Result<WeightDistribution> {
        macwilliams_transform(&self.cyclic_dual_distribution(guard)?)
    }

    /// Weight distribution of `H(m, q)` itself.
    pub fn enumerate_primal_distribution(&self, method: PrimalMethod, guard: u128) -> Result<WeightDistribution> {
        match method {
            PrimalMethod::Direct => {
                let words = (self.q() as u128).saturating_pow(self.k as u32);
                self.check_guard("primal codewords", words, guard)?;
                let basis = self.primal_generator_matrix();
                debug_assert_eq!(basis.len(), self.k);
                let counts = span_histogram(&self.tower, &basis, self.n);
                WeightDistribution::new(self.q(), self.n, self.k, to_big(counts))
            }
            PrimalMethod::MacWilliams => macwilliams_transform(&self.enumerate_dual_distribution(guard)?),
        }
    }

    /// Inner product over `F_q`.
    pub fn dot(&self, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
        let t = &self.tower;
        a.iter().zip(b).fold(t.zero(), |acc, (&x, &y)| t.add(acc, t.mul(x, y)))
    }

    /// Minimum distance from the parity-check columns: distinct normalized
    /// columns are pairwise independent, and `e_1, e_2, e_1 + e_2` are dependent.
    pub fn minimum_distance(&self) -> usize {
        let cols = self.parity_check();
        let distinct = cols.windows(2).all(|w| w[0] != w[1]);
        let t = &self.tower;
        let m = self.m() as usize;
        let unit = |i: usize| -> Vec<FieldElement> { (0..m).map(|r| if r == i { t.one() } else { t.zero() }).collect() };
        let (e1, e2) = (unit(m - 1), unit(m - 2));
        let sum: Vec<FieldElement> = e1.iter().zip(&e2).map(|(&a, &b)| t.add(a, b)).collect();
        let has = |v: &Vec<FieldElement>| cols.binary_search_by(|c| self.cmp_column(c, v)).is_ok();
        assert!(distinct && has(&e1) && has(&e2) && has(&sum), "parity-check columns are malformed");
        3
    }

    fn cmp_column(&self, a: &[FieldElement], b: &[FieldElement]) -> std::cmp::Ordering {
        let ka: Vec<u32> = a.iter().map(|&x| self.symbol_of[&x]).collect();
        let kb: Vec<u32> = b.iter().map(|&x| self.symbol_of[&x]).collect();
        ka.cmp(&kb)
    }
}

fn add_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn to_big(counts: Vec<u64>) -> Vec<BigUint> {
    counts.into_iter().map(BigUint::from).collect()
}

/// Weight histogram of all `F_q`-linear combinations of `rows`.
fn span_histogram(t: &FieldTower, rows: &[Vec<FieldElement>], n: usize) -> Vec<u64> {
    let q = t.q();
    let subfield = t.subfield_elements();
    let total = q.pow(rows.len() as u32);
    (0..total)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut hist, mut idx| {
                let mut word = vec![t.zero(); n];
                for row in rows {
                    let c = subfield[(idx % q) as usize];
                    idx /= q;
                    if c.is_zero() {
                        continue;
                    }
                    for (w, &r) in word.iter_mut().zip(row) {
                        *w = t.add(*w, t.mul(c, r));
                    }
                }
                hist[word.iter().filter(|x| !x.is_zero()).count()] += 1;
                hist
            },
        )
        .reduce(|| vec![0u64; n + 1], add_hist)
}

fn shifted_rows(t: &FieldTower, poly: &[FieldElement], n: usize) -> Vec<Vec<FieldElement>> {
    let deg = poly.len() - 1;
    (0..n - deg)
        .map(|j| {
            let mut row = vec![t.zero(); n];
            row[j..j + poly.len()].copy_from_slice(poly);
            row
        })
        .collect()
}

fn poly_mul(t: &FieldTower, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = vec![t.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = t.add(out[i + j], t.mul(x, y));
        }
    }
    out
}

/// Division by a monic polynomial.
fn poly_divrem(t: &FieldTower, a: &[FieldElement], b: &[FieldElement]) -> (Vec<FieldElement>, Vec<FieldElement>) {
    let db = b.len() - 1;
    debug_assert_eq!(b[db], t.one());
    let mut rem = a.to_vec();
    if a.len() <= db {
        return (vec![t.zero()], rem);
    }
    let mut quot = vec![t.zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db];
        quot[i] = c;
        if c.is_zero() {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            rem[i + j] = t.sub(rem[i + j], t.mul(c, bj));
        }
    }
    rem.truncate(db);
    (quot, rem)
}

/// Basis of `{x : rows · x = 0}` by reduction to row echelon form.
fn null_space(t: &FieldTower, rows: &[Vec<FieldElement>], n: usize) -> Vec<Vec<FieldElement>> {
    let mut a: Vec<Vec<FieldElement>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = t.inv(a[r][col]).expect("pivot is nonzero");
        for x in a[r].iter_mut() {
            *x = t.mul(*x, inv);
        }
        for i in 0..a.len() {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col];
                let pivot_row = a[r].clone();
                for (x, &y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = t.sub(*x, t.mul(f, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![t.zero(); n];
            v[free] = t.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = t.neg(a[row][free]);
            }
            v
        })
        .collect()
}
