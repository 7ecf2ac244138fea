use std::collections::HashSet;

use hamweight::codes::HammingCode;
use hamweight::gf::FieldTower;
use hamweight::weightdist::{
    macwilliams_transform, pless_moment_check, stirling2, weights_recursive, StirlingTable, WeightDistribution,
};
use num_bigint::BigUint;
use num_traits::Pow;
use proptest::prelude::*;

const TOWERS: [(u64, u32, u32); 7] = [(2, 1, 4), (3, 1, 3), (2, 2, 2), (5, 1, 2), (3, 2, 2), (7, 1, 2), (2, 3, 2)];
const CODES: [(u64, u32); 10] = [(2, 2), (2, 3), (2, 4), (2, 6), (3, 3), (3, 5), (4, 2), (4, 5), (5, 3), (8, 2)];

fn tower(i: usize) -> FieldTower {
    let (p, r, m) = TOWERS[i];
    FieldTower::new(p, r, m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(i in 0..TOWERS.len(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let t = tower(i);
        let size = t.size() as u32;
        let [a, b, c] = [a, b, c].map(|v| t.from_packed(v % size).unwrap());
        prop_assert_eq!(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c)));
        prop_assert_eq!(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
        prop_assert_eq!(t.add(a, t.neg(a)), t.zero());
        prop_assert_eq!(t.mul(a, b), t.mul_polynomial_basis(a, b));
        if !a.is_zero() {
            prop_assert_eq!(t.mul(a, t.inv(a).unwrap()), t.one());
        }
    }

    #[test]
    fn trace_and_norm(i in 0..TOWERS.len(), a in any::<u32>(), b in any::<u32>(), k in any::<u32>()) {
        let t = tower(i);
        let size = t.size() as u32;
        let [a, b] = [a, b].map(|v| t.from_packed(v % size).unwrap());
        let sub = t.subfield_elements();
        let c = sub[k as usize % sub.len()];
        prop_assert!(t.in_subfield(t.trace_rel(a)));
        prop_assert_eq!(t.trace_rel(t.add(a, b)), t.add(t.trace_rel(a), t.trace_rel(b)));
        prop_assert_eq!(t.trace_rel(t.mul(c, a)), t.mul(c, t.trace_rel(a)));
        prop_assert_eq!(t.trace_rel(t.pow(a, t.q())), t.trace_rel(a));
        prop_assert_eq!(t.norm(t.mul(a, b)), t.mul(t.norm(a), t.norm(b)));
        prop_assert!(t.in_subfield(t.norm(a)));
    }

    #[test]
    fn trace_code_is_linear_and_cyclic(i in 0..CODES.len(), a in any::<u32>(), b in any::<u32>(), k in any::<u32>()) {
        let (q, m) = CODES[i];
        let code = HammingCode::new(q, m).unwrap();
        let t = code.tower();
        let size = t.size() as u32;
        let [a, b] = [a, b].map(|v| t.from_packed(v % size).unwrap());
        let sub = t.subfield_elements();
        let lam = sub[k as usize % sub.len()];
        let ca = code.dual_codeword(a).unwrap();
        let cb = code.dual_codeword(b).unwrap();
        let sum: Vec<_> = ca.symbols().iter().zip(cb.symbols()).map(|(&x, &y)| t.add(x, y)).collect();
        prop_assert_eq!(code.dual_codeword(t.add(a, b)).unwrap().symbols().to_vec(), sum);
        let scaled: Vec<_> = ca.symbols().iter().map(|&x| t.mul(lam, x)).collect();
        prop_assert_eq!(code.dual_codeword(t.mul(lam, a)).unwrap().symbols().to_vec(), scaled);
        // multiplying a by the defining zero shifts the codeword left by one
        let beta = code.defining_zero().unwrap();
        let mut shifted = ca.symbols().to_vec();
        shifted.rotate_left(1);
        prop_assert_eq!(code.dual_codeword(t.mul(a, beta)).unwrap().symbols().to_vec(), shifted);
        if !a.is_zero() {
            prop_assert_eq!(ca.weight() as u64, q.pow(m - 1));
        }
    }

    #[test]
    fn stirling_forms_agree(h in 0u32..45, t in 0u32..45) {
        let table = StirlingTable::new(45);
        prop_assert_eq!(stirling2(h, t), table.get(h as usize, t as usize));
    }

    #[test]
    fn random_linear_codes_satisfy_macwilliams_and_pless(
        p in prop::sample::select(vec![2u64, 3]),
        n in 1usize..7,
        raw in prop::collection::vec(any::<u8>(), 0..30),
    ) {
        let rows: Vec<Vec<u64>> = raw.chunks(n).filter(|c| c.len() == n).take(n).map(|c| c.iter().map(|&x| x as u64 % p).collect()).collect();
        let code = span(p, n, &rows);
        let dual: Vec<Vec<u64>> = all_vectors(p, n)
            .into_iter()
            .filter(|v| rows.iter().all(|r| r.iter().zip(v).map(|(a, b)| a * b).sum::<u64>() % p == 0))
            .collect();
        let c = distribution(p, n, &code);
        let d = distribution(p, n, &dual);
        prop_assert_eq!(c.k() + d.k(), n);
        prop_assert_eq!(macwilliams_transform(&c).unwrap(), d.clone());
        prop_assert_eq!(macwilliams_transform(&d).unwrap(), c.clone());
        for h in 0..=6 {
            let r = pless_moment_check(&c, &d, h).unwrap();
            prop_assert!(r.pass, "h = {}: {} != {}", h, r.lhs, r.rhs);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn recursion_invariants(i in 0..CODES.len()) {
        let (q, m) = CODES[i];
        let d = weights_recursive(q, m).unwrap();
        prop_assert_eq!(d.total(), Pow::pow(&BigUint::from(q), (d.n() - m as usize) as u32));
        prop_assert!(d.has_hamming_prefix());
        prop_assert_eq!(d.minimum_distance(), Some(3));
        let dual = macwilliams_transform(&d).unwrap();
        prop_assert_eq!(dual.k(), m as usize);
        // every nonzero dual word has weight q^(m-1)
        let w = q.pow(m - 1) as usize;
        let expect: Vec<BigUint> = (0..=d.n())
            .map(|i| BigUint::from(match i { 0 => 1, i if i == w => q.pow(m) - 1, _ => 0 }))
            .collect();
        prop_assert_eq!(dual.counts(), expect.as_slice());
    }
}

fn all_vectors(p: u64, n: usize) -> Vec<Vec<u64>> {
    (0..p.pow(n as u32))
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let d = idx % p;
                    idx /= p;
                    d
                })
                .collect()
        })
        .collect()
}

fn span(p: u64, n: usize, rows: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut words: HashSet<Vec<u64>> = HashSet::new();
    words.insert(vec![0; n]);
    for row in rows {
        let current: Vec<Vec<u64>> = words.iter().cloned().collect();
        for w in current {
            for c in 1..p {
                words.insert(w.iter().zip(row).map(|(a, b)| (a + c * b) % p).collect());
            }
        }
    }
    words.into_iter().collect()
}

fn distribution(p: u64, n: usize, words: &[Vec<u64>]) -> WeightDistribution {
    let mut counts = vec![BigUint::from(0u8); n + 1];
    for w in words {
        counts[w.iter().filter(|&&x| x != 0).count()] += 1u8;
    }
    let mut k = 0;
    while p.pow(k) < words.len() as u64 {
        k += 1;
    }
    assert_eq!(p.pow(k), words.len() as u64);
    WeightDistribution::new(p, n, k as usize, counts).unwrap()
}
