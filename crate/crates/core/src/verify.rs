//! Verification suites. Each suite checks one family of identities on a
//! single `(q, m)` and returns one [`IdentityReport`] per instance.
//!
//! A check that would exceed a work bound or size guard is reported as
//! skipped instead of failed.

use num_bigint::BigUint;
use num_traits::Pow;
use rayon::prelude::*;

use crate::codes::{HammingCode, PrimalMethod};
use crate::error::{Error, Result};
use crate::expsums::{CharacterContext, DEFAULT_WORK_BOUND};
use crate::gf::gcd;
use crate::report::IdentityReport;
use crate::weightdist::{
    corollary_poly, macwilliams_transform, pless_moment_check, stirling2, verify_dual_power_moment,
    weights_binary_recurrence, weights_recursive_with, RecursionOptions, StirlingTable, WeightDistribution,
};
use crate::DEFAULT_ENUMERATION_GUARD;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    /// Additive character orthogonality over `F_q`.
    Orthogonality,
    /// `Σ_α K_{s-1}(α) = (-1)^s`.
    Kloosterman,
    /// `α ↦ α^m` permutes `F_q^*` exactly when `gcd(m, q-1) = 1`.
    Bijection,
    /// The trace map `a ↦ c(a)` is injective.
    Injectivity,
    /// Big-field character sum of `α x^(q-1)` against a Kloosterman sum at the norm.
    Moisio,
    /// Dual codeword weights from character sums against direct counting.
    WeightFormula,
    /// Power moments of the dual weights.
    Moments,
    /// Pless power moments between the enumerated dual and the recursion.
    Pless,
    /// Closed forms for `C_3 … C_10`.
    Corollary,
    /// Every available method for the distribution agrees.
    Distribution,
    /// Totals, low weights, MacWilliams involution, Stirling tables, perfection.
    Invariants,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Orthogonality,
        Suite::Kloosterman,
        Suite::Bijection,
        Suite::Injectivity,
        Suite::Moisio,
        Suite::WeightFormula,
        Suite::Moments,
        Suite::Pless,
        Suite::Corollary,
        Suite::Distribution,
        Suite::Invariants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Kloosterman => "kloosterman",
            Suite::Bijection => "bijection",
            Suite::Injectivity => "injectivity",
            Suite::Moisio => "moisio",
            Suite::WeightFormula => "weight-formula",
            Suite::Moments => "moments",
            Suite::Pless => "pless",
            Suite::Corollary => "corollary",
            Suite::Distribution => "distribution",
            Suite::Invariants => "invariants",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name().eq_ignore_ascii_case(name))
    }

    /// Suites that only make sense when `gcd(m, q-1) = 1`.
    pub fn requires_gcd(self) -> bool {
        !matches!(self, Suite::Orthogonality | Suite::Kloosterman | Suite::Bijection | Suite::Moisio)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub work_bound: u128,
    pub enumeration_guard: u128,
    /// Highest moment order for the moment and Pless suites.
    pub hmax: u32,
    /// Values of `s` for the Kloosterman totals.
    pub kloosterman_s: Vec<u32>,
    pub recursion: RecursionOptions,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            work_bound: DEFAULT_WORK_BOUND,
            enumeration_guard: DEFAULT_ENUMERATION_GUARD,
            hmax: 6,
            kloosterman_s: vec![2, 3, 4],
            recursion: RecursionOptions::default(),
        }
    }
}

/// Turns a refusal into a skipped record; other errors propagate.
fn or_skip(identity: &str, r: Result<IdentityReport>) -> Result<IdentityReport> {
    match r {
        Err(e) if e.is_refusal() => Ok(IdentityReport::skipped(identity, e.to_string())),
        other => other,
    }
}

fn compare_distributions(identity: &str, left: &WeightDistribution, right: &WeightDistribution) -> IdentityReport {
    let report = IdentityReport::compare(identity, left, right);
    match left.first_difference(right) {
        Some(d) => report.with("first_difference", d.to_string()),
        None => report,
    }
}

struct Runner<'a> {
    code: &'a HammingCode,
    cfg: &'a VerifyConfig,
}

impl Runner<'_> {
    fn ctx(&self) -> CharacterContext<'_> {
        CharacterContext::with_work_bound(self.code.tower(), self.cfg.work_bound)
    }

    fn recursion(&self) -> Result<WeightDistribution> {
        weights_recursive_with(self.code.q(), self.code.m(), &self.cfg.recursion)
    }

    fn dual(&self) -> Result<WeightDistribution> {
        self.code.enumerate_dual_distribution(self.cfg.enumeration_guard)
    }

    fn run(&self, suite: Suite) -> Result<Vec<IdentityReport>> {
        let code = self.code;
        if suite.requires_gcd() && !code.is_cyclic() {
            let (q, m) = (code.q(), code.m());
            return Err(Error::GcdPrecondition { q, m, gcd: gcd(m as u64, q - 1) });
        }
        let name = suite.name();
        let tag = |r: IdentityReport| r.with("q", code.q()).with("m", code.m());
        let reports = match suite {
            Suite::Orthogonality => self.orthogonality()?,
            Suite::Kloosterman => {
                let ctx = self.ctx();
                self.cfg
                    .kloosterman_s
                    .iter()
                    .map(|&s| Ok(or_skip("kloosterman-total", ctx.verify_kloosterman_total(s))?.with("s", s)))
                    .collect::<Result<_>>()?
            }
            Suite::Bijection => {
                let r = self.ctx().verify_power_bijection();
                let bijective = r.pass;
                let expected = gcd(code.m() as u64, code.q() - 1) == 1;
                vec![IdentityReport::compare("power-map-bijection", bijective, expected)]
            }
            Suite::Injectivity => {
                let r = code.dual_codewords_distinct(self.cfg.enumeration_guard).map(|d| {
                    IdentityReport::compare("trace-map-injective", d, true)
                });
                vec![or_skip("trace-map-injective", r)?]
            }
            Suite::Moisio => {
                let ctx = self.ctx();
                let t = code.tower();
                t.units()
                    .map(|a| or_skip("moisio-identity", ctx.verify_moisio_identity(a)))
                    .collect::<Result<_>>()?
            }
            Suite::WeightFormula => {
                let ctx = self.ctx();
                let t = code.tower();
                t.units()
                    .map(|a| {
                        let r = ctx.weight_via_character_sums(a).and_then(|w| {
                            let direct = code.dual_codeword(a)?.weight() as u64;
                            Ok(IdentityReport::compare("weight-from-character-sums", w, direct))
                        });
                        Ok(or_skip("weight-from-character-sums", r)?.with("a_log", t.log(a).expect("unit")))
                    })
                    .collect::<Result<_>>()?
            }
            Suite::Moments => match self.dual() {
                Ok(dual) => (1..=self.cfg.hmax).map(|h| verify_dual_power_moment(&dual, h)).collect(),
                Err(e) if e.is_refusal() => vec![IdentityReport::skipped("dual-power-moment", e.to_string())],
                Err(e) => return Err(e),
            },
            Suite::Pless => match self.dual().and_then(|d| Ok((d, self.recursion()?))) {
                Ok((dual, primal)) => {
                    (0..=self.cfg.hmax).map(|h| pless_moment_check(&dual, &primal, h)).collect::<Result<_>>()?
                }
                Err(e) if e.is_refusal() => vec![IdentityReport::skipped("pless-power-moment", e.to_string())],
                Err(e) => return Err(e),
            },
            Suite::Corollary => self.corollary()?,
            Suite::Distribution => self.distribution()?,
            Suite::Invariants => self.invariants()?,
        };
        Ok(reports.into_iter().map(|r| tag(r).with("suite", name)).collect())
    }

    fn orthogonality(&self) -> Result<Vec<IdentityReport>> {
        let ctx = self.ctx();
        let t = self.code.tower();
        t.subfield_elements()
            .into_iter()
            .enumerate()
            .map(|(code, a)| {
                let sum = ctx.char_sum_orthogonality(a)?;
                let expected = if a.is_zero() { t.q() } else { 0 };
                let expected = crate::cyclo::CyclotomicInt::from_integer(t.p(), expected);
                Ok(IdentityReport::compare("character-orthogonality", sum, expected).with("alpha_symbol", code as u64))
            })
            .collect()
    }

    fn corollary(&self) -> Result<Vec<IdentityReport>> {
        let dist = match self.recursion() {
            Ok(d) => d,
            Err(e) if e.is_refusal() => return Ok(vec![IdentityReport::skipped("closed-form-count", e.to_string())]),
            Err(e) => return Err(e),
        };
        let top = dist.n().min(10) as u32;
        (3..=top)
            .map(|h| {
                let closed = corollary_poly(h, self.code.q(), self.code.m())?;
                let rec = num_bigint::BigInt::from(dist.count(h as usize).clone());
                Ok(IdentityReport::compare("closed-form-count", closed, rec).with("h", h))
            })
            .collect()
    }

    fn distribution(&self) -> Result<Vec<IdentityReport>> {
        let code = self.code;
        let guard = self.cfg.enumeration_guard;
        let base = match self.recursion() {
            Ok(d) => d,
            Err(e) if e.is_refusal() => {
                return Ok(vec![IdentityReport::skipped("distribution-agreement", e.to_string())]);
            }
            Err(e) => return Err(e),
        };
        let mut others: Vec<(&str, Result<WeightDistribution>)> = vec![
            ("macwilliams", code.enumerate_primal_distribution(PrimalMethod::MacWilliams, guard)),
            ("direct", code.enumerate_primal_distribution(PrimalMethod::Direct, guard)),
            ("cyclic", code.cyclic_distribution(guard)),
            ("parity-check-dual", code.parity_rowspace_distribution(guard).and_then(|d| macwilliams_transform(&d))),
        ];
        if code.q() == 2 {
            others.push(("binary", weights_binary_recurrence(code.m())));
        }
        others
            .into_iter()
            .map(|(method, d)| {
                let r = d.map(|d| compare_distributions("distribution-agreement", &d, &base));
                Ok(or_skip("distribution-agreement", r)?.with("method", method))
            })
            .collect()
    }

    fn invariants(&self) -> Result<Vec<IdentityReport>> {
        let code = self.code;
        let mut out = Vec::new();
        match self.recursion() {
            Ok(dist) => {
                out.push(IdentityReport::compare("count-total", dist.total(), dist.expected_total()));
                let low: Vec<String> = (0..3).map(|i| dist.count(i).to_string()).collect();
                out.push(IdentityReport::compare("low-weight-counts", low.join(", "), "1, 0, 0".to_string()));
                out.push(IdentityReport::compare(
                    "minimum-distance",
                    dist.minimum_distance().unwrap_or(0) as u64,
                    code.minimum_distance() as u64,
                ));
            }
            Err(e) if e.is_refusal() => out.push(IdentityReport::skipped("count-total", e.to_string())),
            Err(e) => return Err(e),
        }
        let r = self.dual().and_then(|dual| {
            let back = macwilliams_transform(&macwilliams_transform(&dual)?)?;
            Ok(compare_distributions("macwilliams-involution", &back, &dual))
        });
        out.push(or_skip("macwilliams-involution", r)?);

        // sphere packing: q^k (1 + n(q-1)) = q^n
        let q = BigUint::from(code.q());
        let lhs = Pow::pow(&q, code.k() as u32) * (BigUint::from(code.n()) * (code.q() - 1) + 1u32);
        out.push(IdentityReport::compare("perfect-code", lhs, Pow::pow(&q, code.n() as u32)));

        out.push(stirling_agreement(30));
        Ok(out)
    }
}

/// Closed-form Stirling numbers against the triangle recurrence for `t <= h <= max_h`.
pub fn stirling_agreement(max_h: u32) -> IdentityReport {
    let table = StirlingTable::new(max_h as usize);
    let mut checked = 0u64;
    let mut agree = 0u64;
    for h in 0..=max_h {
        for t in 0..=h {
            checked += 1;
            if stirling2(h, t) == table.get(h as usize, t as usize) {
                agree += 1;
            }
        }
    }
    IdentityReport::compare("stirling-agreement", agree, checked).with("max_h", max_h)
}

pub fn run_suite(code: &HammingCode, suite: Suite, cfg: &VerifyConfig) -> Result<Vec<IdentityReport>> {
    Runner { code, cfg }.run(suite)
}

/// Runs suites concurrently; reports come back ordered by suite, then by
/// parameters within a suite.
pub fn run_suites(code: &HammingCode, suites: &[Suite], cfg: &VerifyConfig) -> Result<Vec<IdentityReport>> {
    let mut suites = suites.to_vec();
    suites.sort_unstable();
    suites.dedup();
    let per_suite: Vec<Result<Vec<IdentityReport>>> =
        suites.par_iter().map(|&s| run_suite(code, s, cfg)).collect();
    let mut out = Vec::new();
    for r in per_suite {
        out.extend(r?);
    }
    Ok(out)
}

/// Suites applicable to the code: all of them when `gcd(m, q-1) = 1`,
/// otherwise the ones that do not depend on it.
pub fn applicable_suites(code: &HammingCode) -> Vec<Suite> {
    Suite::ALL.into_iter().filter(|s| code.is_cyclic() || !s.requires_gcd()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn of(reports: &[IdentityReport]) -> Self {
        let skipped = reports.iter().filter(|r| r.is_skipped()).count();
        let failed = reports.iter().filter(|r| r.failed()).count();
        Tally { passed: reports.len() - skipped - failed, failed, skipped }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0 && self.skipped == 0
    }
}
