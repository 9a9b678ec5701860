//! Structural invariants of towers, defining sets and constacyclic codes,
//! checked against direct computations (polynomial products, Gram matrices,
//! brute-force encoding) rather than the library's own derivations.

use std::collections::BTreeSet;
use std::sync::Arc;

use constacyclic_core::codes::{ConstacyclicCode, DefiningSet};
use constacyclic_core::distance::{exhaustive_enumerator, LinearCode, Serial, DEFAULT_BUDGET};
use constacyclic_core::families::{Family, FamilyParams};
use constacyclic_core::galois::{prime_power, FieldSpec, Tower};
use constacyclic_core::poly::{factor_universe, reciprocal, xn_minus, Poly};
use constacyclic_core::qadic::IndexUniverse;
use proptest::prelude::*;

/// Small `(q, m)` pairs, every `r | q - 1` and every unit residue.
fn grid() -> Vec<(u64, u32, u64, u64)> {
    let mut out = Vec::new();
    for &(q, m_max) in &[(3u64, 5u32), (4, 3), (5, 3), (7, 2), (8, 2), (9, 2)] {
        for m in 2..=m_max {
            for r in (1..q).filter(|r| (q - 1) % r == 0) {
                for t in (0..r).filter(|&t| r == 1 || gcd(t, r) == 1) {
                    out.push((q, m, r, t));
                }
            }
        }
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn tower(q: u64, m: u32, r: u64) -> Arc<Tower> {
    let (p, s) = prime_power(q).unwrap();
    Arc::new(Tower::new(FieldSpec::new(p, s, m, r).unwrap(), None).unwrap())
}

/// The code whose defining set collects the cosets picked by `bits`.
fn code(t: &Arc<Tower>, residue: u64, bits: u64) -> ConstacyclicCode {
    let spec = *t.spec();
    let u = Arc::new(IndexUniverse::new(t.q(), spec.m, spec.r, residue).unwrap());
    let leaders: Vec<u64> = u
        .gamma_t
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> (i % 64) & 1 == 1)
        .map(|(_, &l)| l)
        .collect();
    let z = DefiningSet::from_leaders(u, &leaders).unwrap();
    ConstacyclicCode::from_defining_set(t.clone(), z).unwrap()
}

fn lambda_t(t: &Tower, u: &IndexUniverse) -> constacyclic_core::galois::Elem {
    t.beta_pow((u.n() * u.residue) as i64)
}

fn check_universe(t: &Tower, u: &IndexUniverse) {
    // Cosets partition Ω, and Ω is exactly the residue class.
    let mut seen = BTreeSet::new();
    for &l in &u.gamma_t {
        for x in u.coset(l).members {
            assert!(seen.insert(x), "coset overlap at {x}");
        }
    }
    let omega: BTreeSet<u64> = (0..u.big_n).filter(|i| i % u.r == u.residue).collect();
    assert_eq!(seen, omega);
    assert_eq!(u.omega.len() as u64, u.n());
    // The minimal polynomials multiply back to x^n - λ.
    let factors = factor_universe(t, u).unwrap();
    let prod = factors.values().fold(Poly::one(), |acc, f| acc.mul(f, t));
    assert_eq!(prod, xn_minus(u.n() as usize, lambda_t(t, u), t));
}

fn check_code(c: &ConstacyclicCode) {
    let t = c.tower();
    let u = c.defining_set().universe();
    let n = c.n();
    // g h = x^n - λ, deg g = |Z|.
    assert_eq!(c.generator().mul(c.check_poly(), t), xn_minus(n, lambda_t(t, u), t));
    assert_eq!(c.generator().degree(), Some(c.defining_set().len()));
    // Dual: dimensions add up, G G⊥ᵀ = 0, and taking the dual twice is the identity.
    let d = c.dual();
    assert_eq!(c.k() + d.k(), n);
    if c.k() > 0 && d.k() > 0 {
        assert!(c.generator_matrix().mul(&d.generator_matrix().transpose(), t).is_zero());
    }
    assert_eq!(d.dual(), *c);
    // Complement and reverse.
    let comp = c.complement();
    assert_eq!(comp.k(), d.k());
    assert_eq!(comp.generator(), c.check_poly());
    let rev = c.reverse();
    assert_eq!(rev.generator(), &reciprocal(c.generator(), t).unwrap().monic(t));
    assert_eq!(rev.k(), c.k());
    assert_eq!(comp.reverse(), d);
}

/// Exact weight distribution by encoding every message.
fn brute_counts(c: &ConstacyclicCode) -> Vec<u64> {
    let t = c.tower();
    let q = t.q() as usize;
    let k = c.k();
    let elems = t.base_elements();
    let mut counts = vec![0u64; c.n() + 1];
    let mut msg = vec![0usize; k];
    loop {
        let m: Vec<_> = msg.iter().map(|&i| elems[i]).collect();
        let w = c.encode(&m).unwrap().iter().filter(|e| !e.is_zero()).count();
        counts[w] += 1;
        let mut i = 0;
        while i < k {
            msg[i] += 1;
            if msg[i] < q {
                break;
            }
            msg[i] = 0;
            i += 1;
        }
        if i == k {
            return counts;
        }
    }
}

fn check_enumerator(c: &ConstacyclicCode) {
    let q = c.q();
    if c.k() == 0 || (q as f64).powi(c.k() as i32) > 1e4 {
        return;
    }
    let naive = brute_counts(c);
    assert_eq!(naive.iter().sum::<u64>(), q.pow(c.k() as u32));
    for (w, &a) in naive.iter().enumerate().skip(1) {
        assert_eq!(a % (q - 1), 0, "A_{w} = {a} not divisible by q - 1");
    }
    let lin = LinearCode::from_constacyclic(c).unwrap();
    let e = exhaustive_enumerator(&lin, DEFAULT_BUDGET, &Serial).unwrap();
    assert_eq!(e.enumerator.counts, naive);
}

fn min_distance(c: &ConstacyclicCode) -> Option<usize> {
    let lin = LinearCode::from_constacyclic(c).ok()?;
    exhaustive_enumerator(&lin, 1 << 26, &Serial).ok()?.enumerator.min_distance()
}

#[test]
fn small_grid_exhaustive() {
    for (q, m, r, t) in grid() {
        let tw = tower(q, m, r);
        let u = IndexUniverse::new(q, m, r, t).unwrap();
        check_universe(&tw, &u);
        let cosets = u.gamma_t.len().min(6);
        for bits in 0..1u64 << cosets {
            let c = code(&tw, t, bits);
            check_code(&c);
            check_enumerator(&c);
        }
    }
}

#[test]
fn dual_and_complement_share_parameters() {
    for (q, m, r, t) in grid() {
        let tw = tower(q, m, r);
        for bits in [0b1u64, 0b101, 0b1_0110, 0b1011] {
            let c = code(&tw, t, bits);
            let (d, comp) = (c.dual(), c.complement());
            if (q as f64).powi(d.k().min(c.k()) as i32) > 2e5 {
                continue;
            }
            assert_eq!((d.n(), d.k()), (comp.n(), comp.k()));
            assert_eq!(min_distance(&d), min_distance(&comp), "q={q} m={m} r={r} t={t}");
            assert_eq!(min_distance(&c.reverse()), min_distance(&c));
        }
    }
}

#[test]
fn ternary_reverse_identity() {
    for m in 2..=5 {
        let p = FamilyParams::new(Family::QWeight(0), 3, m).unwrap();
        let t = Arc::new(Tower::with_reference_preset(p.field_spec().unwrap()).unwrap());
        for l in 0..m {
            let c = FamilyParams::new(Family::QWeight(l), 3, m).unwrap().build(t.clone()).unwrap();
            let mirror = FamilyParams::new(Family::QWeight(m - 1 - l), 3, m).unwrap().build(t.clone()).unwrap();
            assert_eq!(c.reverse().generator(), mirror.generator(), "m={m} ℓ={l}");
            assert_eq!(c.k(), mirror.k());
        }
    }
}

/// Every admissible selector vector `(j_0, …, j_{(m-2)/2})`, `j_i ∈ {i, m-1-i}`.
fn selectors(m: u32) -> Vec<Vec<u32>> {
    let h = (m / 2) as usize;
    (0..1u32 << h)
        .map(|mask| (0..h as u32).map(|i| if mask >> i & 1 == 1 { m - 1 - i } else { i }).collect())
        .collect()
}

#[test]
fn s4_codes_are_self_dual() {
    for m in [4u32, 6] {
        let fs = FamilyParams::new(Family::S4(vec![]), 3, m);
        assert!(fs.is_err());
        for sel in selectors(m) {
            let p = FamilyParams::new(Family::S4(sel.clone()), 3, m).unwrap();
            let t = Arc::new(Tower::with_reference_preset(p.field_spec().unwrap()).unwrap());
            let c = p.build(t).unwrap();
            let sd = c.self_duality();
            assert!(sd.agree() && sd.is_self_dual(), "m={m} selectors {sel:?}: {sd:?}");
            assert_eq!(c.dual(), c);
        }
    }
}

#[test]
fn ternary_self_dual_distances_divisible_by_three() {
    let mut seen = 0;
    for m in [2u32, 4] {
        let p = FamilyParams::new(Family::Parity(0), 3, m).unwrap();
        let t = Arc::new(Tower::with_reference_preset(p.field_spec().unwrap()).unwrap());
        let u = Arc::new(p.universe().unwrap());
        // Every self-dual code in the universe: choose one coset from each {C, -C} pair.
        let negs: Vec<(u64, u64)> = u.gamma_t.iter().map(|&l| (l, u.leader(u.big_n - l))).collect();
        assert!(negs.iter().all(|(l, neg)| l != neg));
        let pairs: Vec<(u64, u64)> = negs.into_iter().filter(|(l, neg)| l < neg).collect();
        for mask in 0..(1u64 << pairs.len()).min(16) {
            let leaders: Vec<u64> = pairs.iter().enumerate().map(|(i, &(a, b))| if mask >> i & 1 == 1 { b } else { a }).collect();
            let c = ConstacyclicCode::from_defining_set(t.clone(), DefiningSet::from_leaders(u.clone(), &leaders).unwrap()).unwrap();
            assert!(c.self_duality().is_self_dual());
            if let Some(d) = min_distance(&c) {
                assert_eq!(d % 3, 0, "m={m} leaders {leaders:?} d={d}");
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

fn arb_instance() -> impl Strategy<Value = (u64, u32, u64, u64, u64)> {
    proptest::sample::select(grid()).prop_flat_map(|(q, m, r, t)| (Just(q), Just(m), Just(r), Just(t), any::<u64>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn random_codes_satisfy_invariants((q, m, r, t, bits) in arb_instance()) {
        let c = code(&tower(q, m, r), t, bits);
        check_code(&c);
        check_enumerator(&c);
    }

    #[test]
    fn intersection_and_sum_follow_defining_sets((q, m, r, t, a) in arb_instance(), b in any::<u64>()) {
        let tw = tower(q, m, r);
        let (ca, cb) = (code(&tw, t, a), code(&tw, t, b));
        let cap = ca.intersect(&cb).unwrap();
        let sum = ca.sum(&cb).unwrap();
        prop_assert_eq!(cap.defining_set(), &ca.defining_set().union(cb.defining_set()).unwrap());
        prop_assert_eq!(sum.defining_set(), &ca.defining_set().intersection(cb.defining_set()).unwrap());
        prop_assert!(cap.is_subcode_of(&ca).unwrap() && cap.is_subcode_of(&cb).unwrap());
        prop_assert!(ca.is_subcode_of(&sum).unwrap() && cb.is_subcode_of(&sum).unwrap());
        prop_assert_eq!(cap.k() + sum.k(), ca.k() + cb.k());
    }

    #[test]
    fn codewords_are_closed_under_the_twisted_shift((q, m, r, t, bits) in arb_instance(), seed in any::<u64>()) {
        let c = code(&tower(q, m, r), t, bits);
        let elems = c.tower().base_elements();
        let msg: Vec<_> = (0..c.k()).map(|i| elems[((seed >> (i % 60)) as usize + i) % elems.len()]).collect();
        let word = c.encode(&msg).unwrap();
        prop_assert!(c.contains(&word).unwrap());
        prop_assert!(c.contains(&c.shift(&word).unwrap()).unwrap());
    }
}
