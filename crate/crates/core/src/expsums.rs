//! Additive characters and exponential sums over the tower, evaluated exactly
//! in `Z[ζ_p]` by direct enumeration.
//!
//! `λ(x) = ζ_p^tr(x)` on `F_q` and `λ_m(x) = λ(Tr(x))` on `F_{q^m}`. Sums are
//! accumulated as a histogram over the exponent of `ζ_p` and converted to a
//! [`CyclotomicInt`] once at the end.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::cyclo::CyclotomicInt;
use crate::error::{Error, Result};
use crate::gf::{gcd, FieldElement, FieldTower, TraceDomain};
use crate::report::IdentityReport;

/// Default cap on the number of summands a single sum may enumerate.
pub const DEFAULT_WORK_BOUND: u128 = 10_000_000;

pub struct CharacterContext<'a> {
    tower: &'a FieldTower,
    units: Vec<FieldElement>,
    /// `tr(x)` for subfield elements indexed by packed value, `u32::MAX` elsewhere.
    subfield_trace: Vec<u32>,
    work_bound: u128,
}

impl<'a> CharacterContext<'a> {
    pub fn new(tower: &'a FieldTower) -> Self {
        Self::with_work_bound(tower, DEFAULT_WORK_BOUND)
    }

    pub fn with_work_bound(tower: &'a FieldTower, work_bound: u128) -> Self {
        let mut subfield_trace = vec![u32::MAX; tower.size() as usize];
        for x in tower.subfield_elements() {
            let t = tower.trace_abs(x, TraceDomain::Subfield).expect("subfield element");
            subfield_trace[x.packed() as usize] = t;
        }
        CharacterContext { tower, units: tower.subfield_units(), subfield_trace, work_bound }
    }

    pub fn tower(&self) -> &FieldTower {
        self.tower
    }

    pub fn work_bound(&self) -> u128 {
        self.work_bound
    }

    fn p(&self) -> u32 {
        self.tower.p()
    }

    fn q1(&self) -> u64 {
        self.tower.q() - 1
    }

    fn ensure_work(&self, what: &str, required: u128) -> Result<()> {
        if required > self.work_bound {
            return Err(Error::WorkBound { what: what.to_owned(), required, bound: self.work_bound });
        }
        Ok(())
    }

    fn subfield_arg(&self, x: FieldElement) -> Result<FieldElement> {
        let x = self.tower.check(x)?;
        if self.subfield_trace[x.packed() as usize] == u32::MAX {
            return Err(Error::NotInSubfield { q: self.tower.q() });
        }
        Ok(x)
    }

    /// Exponent `e` with `λ(x) = ζ_p^e`, for `x ∈ F_q`.
    pub fn lambda_exponent(&self, x: FieldElement) -> Result<u32> {
        let x = self.subfield_arg(x)?;
        Ok(self.subfield_trace[x.packed() as usize])
    }

    /// Exponent `e` with `λ_m(x) = ζ_p^e`, for `x ∈ F_{q^m}`.
    pub fn lambda_m_exponent(&self, x: FieldElement) -> Result<u32> {
        let x = self.tower.check(x)?;
        self.lambda_exponent(self.tower.trace_rel(x))
    }

    pub fn lambda(&self, x: FieldElement) -> Result<CyclotomicInt> {
        Ok(CyclotomicInt::root_power(self.p(), self.lambda_exponent(x)?))
    }

    pub fn lambda_m(&self, x: FieldElement) -> Result<CyclotomicInt> {
        Ok(CyclotomicInt::root_power(self.p(), self.lambda_m_exponent(x)?))
    }

    /// `Σ_{x ∈ F_q} λ(αx)`.
    pub fn char_sum_orthogonality(&self, alpha: FieldElement) -> Result<CyclotomicInt> {
        let alpha = self.subfield_arg(alpha)?;
        let mut counts = vec![0u64; self.p() as usize];
        for x in self.tower.subfield_elements() {
            let e = self.subfield_trace[self.tower.mul(alpha, x).packed() as usize];
            counts[e as usize] += 1;
        }
        Ok(CyclotomicInt::from_exponent_counts(self.p(), &counts))
    }

    /// Multiple Kloosterman sum
    /// `K_s(α) = Σ_{x_1..x_s ∈ F_q^*} λ(x_1 + … + x_s + α (x_1 ⋯ x_s)^(-1))`.
    pub fn kloosterman_multi(&self, s: u32, alpha: FieldElement) -> Result<CyclotomicInt> {
        if s == 0 {
            return Err(Error::InvalidParameter("Kloosterman sums need s >= 1".into()));
        }
        let alpha = self.subfield_arg(alpha)?;
        if alpha.is_zero() {
            return Err(Error::ZeroArgument);
        }
        self.ensure_work("Kloosterman summands", (self.q1() as u128).saturating_pow(s))?;
        let mut counts = vec![0u64; self.p() as usize];
        self.kloosterman_walk(s, alpha, self.tower.zero(), 0, &mut counts);
        Ok(CyclotomicInt::from_exponent_counts(self.p(), &counts))
    }

    fn kloosterman_walk(&self, left: u32, alpha: FieldElement, sum: FieldElement, log_prod: u64, counts: &mut [u64]) {
        let q1 = self.q1();
        if left == 0 {
            let inv_prod = self.units[((q1 - log_prod) % q1) as usize];
            let arg = self.tower.add(sum, self.tower.mul(alpha, inv_prod));
            counts[self.subfield_trace[arg.packed() as usize] as usize] += 1;
            return;
        }
        for (j, &x) in self.units.iter().enumerate() {
            let next = self.tower.add(sum, x);
            self.kloosterman_walk(left - 1, alpha, next, (log_prod + j as u64) % q1, counts);
        }
    }

    /// Checks `Σ_{α ∈ F_q^*} K_{s-1}(α) = (-1)^s` for `s > 1`.
    pub fn verify_kloosterman_total(&self, s: u32) -> Result<IdentityReport> {
        if s < 2 {
            return Err(Error::InvalidParameter("the Kloosterman total needs s > 1".into()));
        }
        self.ensure_work("Kloosterman total summands", (self.q1() as u128).saturating_pow(s))?;
        let mut total = CyclotomicInt::zero(self.p());
        for &alpha in &self.units {
            total = &total + &self.kloosterman_multi(s - 1, alpha)?;
        }
        let expected = CyclotomicInt::from_integer(self.p(), if s.is_multiple_of(2) { 1 } else { -1 });
        Ok(IdentityReport::compare("kloosterman-total", total, expected)
            .with("q", self.tower.q())
            .with("s", s))
    }

    /// Whether `α ↦ α^m` permutes `F_q^*`. Reports `pass = true` exactly when the
    /// image has `q - 1` elements, so it is `false` whenever `gcd(m, q-1) > 1`.
    pub fn verify_power_bijection(&self) -> IdentityReport {
        let m = self.tower.m() as u64;
        let image: HashSet<FieldElement> = self.units.iter().map(|&a| self.tower.pow(a, m)).collect();
        IdentityReport::compare("power-map-bijection", image.len() as u64, self.q1())
            .with("q", self.tower.q())
            .with("m", m)
            .with("gcd", gcd(m, self.q1()))
    }

    /// `Σ_{x ∈ F_{q^m}^*} λ_m(α x^(q-1))`.
    pub fn moisio_lhs(&self, alpha: FieldElement) -> Result<CyclotomicInt> {
        let alpha = self.tower.check(alpha)?;
        self.ensure_work("big-field character summands", self.tower.group_order() as u128)?;
        let mut counts = vec![0u64; self.p() as usize];
        let step = self.tower.q() - 1;
        for e in 0..self.tower.group_order() {
            let y = self.tower.mul(alpha, self.tower.gamma_pow(e * step));
            counts[self.lambda_m_exponent(y)? as usize] += 1;
        }
        Ok(CyclotomicInt::from_exponent_counts(self.p(), &counts))
    }

    /// `(-1)^(m-1) (q-1) K_{m-1}(N(α))`.
    pub fn moisio_rhs(&self, alpha: FieldElement) -> Result<CyclotomicInt> {
        let alpha = self.tower.check(alpha)?;
        if alpha.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let m = self.tower.m();
        let k = self.kloosterman_multi(m - 1, self.tower.norm(alpha))?;
        let sign: i64 = if (m - 1).is_multiple_of(2) { 1 } else { -1 };
        Ok(k.scale(&BigInt::from(sign * self.q1() as i64)))
    }

    /// Checks the character sum of `α x^(q-1)` over the big field against the
    /// Kloosterman sum at the norm of `α`.
    pub fn verify_moisio_identity(&self, alpha: FieldElement) -> Result<IdentityReport> {
        let alpha = self.tower.check(alpha)?;
        if alpha.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let lhs = self.moisio_lhs(alpha)?;
        let rhs = self.moisio_rhs(alpha)?;
        let log = self.tower.log(alpha).expect("nonzero");
        Ok(IdentityReport::compare("moisio-identity", lhs, rhs)
            .with("q", self.tower.q())
            .with("m", self.tower.m())
            .with("alpha_log", log))
    }

    /// Weight of the trace codeword `c(a)` obtained purely from character sums:
    ///
    /// `q(q-1)·w = q(q-1)·n - (q^m - 1) + (-1)^m (q-1) Σ_{α ∈ F_q^*} K_{m-1}(α N(a))`.
    ///
    /// The right side must be a rational integer divisible by `q(q-1)`.
    pub fn weight_via_character_sums(&self, a: FieldElement) -> Result<u64> {
        let t = self.tower;
        let a = t.check(a)?;
        if a.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let (q, m) = (t.q(), t.m());
        let g = gcd(m as u64, q - 1);
        if g != 1 {
            return Err(Error::GcdPrecondition { q, m, gcd: g });
        }
        let na = t.norm(a);
        let mut s = CyclotomicInt::zero(self.p());
        for &alpha in &self.units {
            s = &s + &self.kloosterman_multi(m - 1, t.mul(alpha, na))?;
        }
        let sign: i64 = if m % 2 == 0 { 1 } else { -1 };
        let constant = BigInt::from(q) * BigInt::from(q - 1) * BigInt::from(t.n()) - BigInt::from(t.size() - 1);
        let total = &CyclotomicInt::from_integer(self.p(), constant) + &s.scale(&BigInt::from(sign * (q - 1) as i64));
        let numerator = total.to_integer()?;
        let denom = BigInt::from(q * (q - 1));
        let (w, rem) = numerator.div_rem(&denom);
        if !rem.is_zero() {
            return Err(Error::InexactDivision {
                context: format!("weight numerator {numerator} not divisible by q(q-1) = {denom}"),
            });
        }
        u64::try_from(w).map_err(|e| Error::InexactDivision { context: format!("weight out of range: {e}") })
    }
}
