//! Acceptance gate: ten criteria, one line of output each. Runs without the
//! libtest harness so the lines always show up in `cargo test` output.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hamweight::codes::{HammingCode, PrimalMethod, DEFAULT_ENUMERATION_GUARD as GUARD};
use hamweight::cyclo::CyclotomicInt;
use hamweight::expsums::CharacterContext;
use hamweight::gf::{gcd, FieldTower};
use hamweight::verify::stirling_agreement;
use hamweight::weightdist::{
    corollary_poly, macwilliams_transform, pless_moment_check, verify_dual_power_moment, weights_binary_recurrence,
    weights_recursive, WeightDistribution,
};
use num_bigint::{BigInt, BigUint};
use num_traits::Pow;

const PAIRS: [(u64, u32); 8] = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (4, 2), (5, 3), (8, 2)];
const MOISIO_PAIRS: [(u64, u32); 5] = [(2, 3), (2, 4), (3, 3), (4, 2), (5, 3)];
const KLOOSTERMAN_Q: [u64; 7] = [2, 3, 4, 5, 7, 8, 9];

fn code(q: u64, m: u32) -> HammingCode {
    HammingCode::new(q, m).unwrap()
}

fn counts(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

fn assert_same(what: &str, a: &WeightDistribution, b: &WeightDistribution) {
    if let Some(d) = a.first_difference(b) {
        panic!("{what}: {d}");
    }
}

fn within(limit: Duration, start: Instant) -> String {
    let took = start.elapsed();
    assert!(took < limit, "took {took:.2?}, limit {limit:?}");
    format!("{took:.2?}")
}

fn three_way_agreement() -> String {
    let start = Instant::now();
    for (q, m) in PAIRS {
        let c = code(q, m);
        let rec = weights_recursive(q, m).unwrap();
        let mw = macwilliams_transform(&c.enumerate_dual_distribution(GUARD).unwrap()).unwrap();
        assert_same(&format!("({q},{m}) recursion vs MacWilliams"), &rec, &mw);
        if matches!((q, m), (2, 2) | (2, 3)) {
            let direct = c.enumerate_primal_distribution(PrimalMethod::Direct, GUARD).unwrap();
            assert_same(&format!("({q},{m}) recursion vs direct"), &rec, &direct);
        }
    }
    format!("8 pairs in {}", within(Duration::from_secs(10), start))
}

fn binary_recurrence() -> String {
    let start = Instant::now();
    for m in 2..=10 {
        assert_same(&format!("m = {m}"), &weights_binary_recurrence(m).unwrap(), &weights_recursive(2, m).unwrap());
    }
    format!("m = 2..10 in {}", within(Duration::from_secs(60), start))
}

fn closed_forms() -> String {
    let mut checked = 0;
    for (q, m) in PAIRS {
        let rec = weights_recursive(q, m).unwrap();
        if rec.n() < 10 {
            continue;
        }
        for h in 3..=10u32 {
            let closed = corollary_poly(h, q, m).unwrap();
            let want = BigInt::from(rec.count(h as usize).clone());
            assert_eq!(closed, want, "C_{h} at ({q},{m})");
            checked += 1;
        }
    }
    format!("{checked} values")
}

fn ground_truth() -> String {
    let d = weights_recursive(2, 3).unwrap();
    assert_eq!(d.counts(), counts(&[1, 0, 0, 7, 7, 0, 0, 1]).as_slice());
    let dual = code(2, 3).enumerate_dual_distribution(GUARD).unwrap();
    assert_eq!(dual.counts(), counts(&[1, 0, 0, 0, 7, 0, 0, 0]).as_slice());
    assert_eq!(weights_recursive(2, 2).unwrap().counts(), counts(&[1, 0, 0, 1]).as_slice());
    "H(3,2), its dual, H(2,2)".into()
}

fn orthogonality_and_kloosterman() -> String {
    let mut sums = 0;
    for (q, m) in PAIRS {
        let t = FieldTower::for_code(q, m).unwrap();
        let ctx = CharacterContext::new(&t);
        for a in t.subfield_elements() {
            let want = CyclotomicInt::from_integer(t.p(), if a.is_zero() { q as i64 } else { 0 });
            assert_eq!(ctx.char_sum_orthogonality(a).unwrap(), want, "q = {q}");
            sums += 1;
        }
    }
    let mut totals = 0;
    for q in KLOOSTERMAN_Q {
        let t = FieldTower::for_code(q, 2).unwrap();
        let ctx = CharacterContext::new(&t);
        for s in 2..=4 {
            let r = ctx.verify_kloosterman_total(s).unwrap();
            assert!(r.pass, "q = {q}, s = {s}: {} != {}", r.lhs, r.rhs);
            totals += 1;
        }
    }
    format!("{sums} orthogonality sums, {totals} Kloosterman totals")
}

fn moisio() -> String {
    let mut n = 0;
    for (q, m) in MOISIO_PAIRS {
        let t = FieldTower::for_code(q, m).unwrap();
        let ctx = CharacterContext::new(&t);
        for a in t.units() {
            let r = ctx.verify_moisio_identity(a).unwrap();
            assert!(r.pass, "({q},{m}) alpha = {a:?}: {} != {}", r.lhs, r.rhs);
            n += 1;
        }
    }
    format!("{n} values of alpha")
}

fn weight_from_character_sums() -> String {
    let mut n = 0;
    for (q, m) in PAIRS {
        let c = code(q, m);
        let ctx = CharacterContext::new(c.tower());
        for a in c.tower().units() {
            let w = ctx.weight_via_character_sums(a).unwrap();
            assert_eq!(w as usize, c.dual_codeword(a).unwrap().weight(), "({q},{m}) a = {a:?}");
            n += 1;
        }
    }
    format!("{n} codewords")
}

fn dual_moments() -> String {
    for (q, m) in PAIRS {
        let dual = code(q, m).enumerate_dual_distribution(GUARD).unwrap();
        for h in 1..=6 {
            let r = verify_dual_power_moment(&dual, h);
            assert!(r.pass, "({q},{m}) h = {h}: {} != {}", r.lhs, r.rhs);
        }
    }
    "h = 1..6 on 8 towers".into()
}

fn pless() -> String {
    for (q, m) in PAIRS {
        let dual = code(q, m).enumerate_dual_distribution(GUARD).unwrap();
        let primal = weights_recursive(q, m).unwrap();
        for h in 0..=6 {
            let r = pless_moment_check(&dual, &primal, h).unwrap();
            assert!(r.pass, "({q},{m}) h = {h}: {} != {}", r.lhs, r.rhs);
        }
    }
    "h = 0..6 on 8 pairs".into()
}

fn invariants() -> String {
    let start = Instant::now();
    for (q, m) in PAIRS {
        let rec = weights_recursive(q, m).unwrap();
        let want = Pow::pow(&BigUint::from(q), rec.n() - m as usize);
        assert_eq!(rec.total(), want, "({q},{m}) total");
        assert!(rec.has_hamming_prefix(), "({q},{m}) C_1, C_2");
        let back = macwilliams_transform(&macwilliams_transform(&rec).unwrap()).unwrap();
        assert_same(&format!("({q},{m}) involution"), &back, &rec);
        assert!(code(q, m).dual_codewords_distinct(GUARD).unwrap(), "({q},{m}) injectivity");
    }
    let st = stirling_agreement(30);
    assert!(st.pass, "Stirling: {} of {} agree", st.lhs, st.rhs);

    // power map α ↦ α^m on F_q^*: bijective exactly when gcd(m, q-1) = 1
    let mut negative = 0;
    for q in KLOOSTERMAN_Q {
        for m in 2..=5 {
            let t = FieldTower::for_code(q, m).unwrap();
            let r = CharacterContext::new(&t).verify_power_bijection();
            let coprime = gcd(m as u64, q - 1) == 1;
            assert_eq!(r.pass, coprime, "q = {q}, m = {m}");
            negative += usize::from(!coprime);
        }
    }
    format!("{negative} negative controls, {}", within(Duration::from_secs(30), start))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> String); 10] = [
        ("three-way distribution agreement", three_way_agreement),
        ("binary recurrence agreement", binary_recurrence),
        ("closed forms for C_3..C_10", closed_forms),
        ("known distributions", ground_truth),
        ("character orthogonality and Kloosterman totals", orthogonality_and_kloosterman),
        ("character sum of alpha x^(q-1) vs Kloosterman at the norm", moisio),
        ("dual weights from character sums", weight_from_character_sums),
        ("dual power moments", dual_moments),
        ("Pless power moments", pless),
        ("invariant suite", invariants),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(check)) {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail})", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
