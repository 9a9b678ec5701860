//! Every progression behind a closed-form bound is re-checked element by
//! element against the defining set, for all small `(q, m)` with `q ∈ {3, 5}`
//! and `q^m <= 3^8`. Where a code is small enough its exact distance is
//! compared with the bounds.

use std::sync::Arc;

use constacyclic_core::bch::BchWitness;
use constacyclic_core::codes::DefiningSet;
use constacyclic_core::distance::{exhaustive_cost, exhaustive_enumerator, LinearCode, Serial};
use constacyclic_core::families::*;
use constacyclic_core::galois::Tower;
use constacyclic_core::qadic::{weight_constancy_check, wt_q};

fn instances() -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for q in [3u64, 5] {
        for m in 2..=8u32 {
            if q.pow(m) > 3u64.pow(8) {
                continue;
            }
            let mut fams = vec![Family::Parity(0), Family::Parity(1), Family::S1, Family::S2];
            fams.extend((0..m).map(Family::QWeight));
            fams.extend((0..m).map(Family::Cprm));
            fams.extend((0..m).map(Family::S3));
            if q == 3 && m % 2 == 0 {
                let h = m / 2;
                for mask in 0..1u32 << h {
                    fams.push(Family::S4((0..h).map(|i| if mask >> i & 1 == 1 { m - 1 - i } else { i }).collect()));
                }
            }
            out.extend(fams.into_iter().filter_map(|f| FamilyParams::new(f, q, m).ok()));
        }
    }
    out
}

/// The progression `b + a i`, `i` over the witness range, taken mod `N`.
fn elements(w: &BchWitness, big_n: u64) -> Vec<u64> {
    (w.h..w.h + w.delta as i64 - 1)
        .map(|i| (w.b + w.a * i).rem_euclid(big_n as i64) as u64)
        .collect()
}

fn check_witness(tag: &str, side: &str, w: &BchWitness, z: &DefiningSet, want_inside: bool) {
    let u = z.universe();
    let els = elements(w, u.big_n);
    assert_eq!(els, w.progression(u.big_n), "{tag} {side}: progression listing");
    let g = gcd(w.a.rem_euclid(u.big_n as i64) as u64, u.big_n);
    assert_eq!(g, u.r, "{tag} {side}: gcd(a, N) = {g}, expected r = {}", u.r);
    for x in els {
        assert_eq!(x % u.r, u.residue, "{tag} {side}: {x} outside Ω");
        assert_eq!(z.contains(x), want_inside, "{tag} {side}: {x} on the wrong side of Z");
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn check_bound(tag: &str, side: &str, b: &Bound, z: &DefiningSet, want_inside: bool) {
    let w = b.witness.as_ref().unwrap_or_else(|| panic!("{tag} {side}: no verified witness for {}", b.rule));
    check_witness(tag, side, w, z, want_inside);
    assert!(b.certified >= b.claimed, "{tag} {side}: certified {} < claimed {}", b.certified, b.claimed);
    if !b.rule.starts_with("searched") {
        // The witness length is the claimed value, up to the ternary mod-3 rounding.
        assert!(w.delta <= b.certified && b.certified <= w.delta + 2, "{tag} {side}: {w:?} vs {}", b.certified);
    }
}

#[test]
fn closed_form_witnesses_lie_in_their_sets() {
    let mut checked = 0;
    for p in instances() {
        let tag = format!("{} q={} m={}", p.tag(), p.q, p.m);
        let u = Arc::new(p.universe().unwrap());
        let z = p.defining_set(u.clone()).unwrap();
        assert_eq!(p.closed_form_size(), z.len() as u64, "{tag}: |Z|");
        let r = closed_form_bounds(&p).unwrap();
        assert_eq!(r.dimension, p.n() - z.len() as u64, "{tag}: dimension");
        assert_eq!(r.dimension + r.dual_dimension, p.n());
        if let Some(b) = &r.distance {
            check_bound(&tag, "d", b, &z, true);
            checked += 1;
        } else {
            assert!(r.notes.iter().any(|n| n.starts_with("CaseNotCovered")), "{tag}: silent gap");
        }
        if let Some(b) = &r.dual_distance {
            check_bound(&tag, "d⊥", b, &z, false);
            checked += 1;
        }
    }
    assert!(checked > 150, "only {checked} bounds checked");
}

#[test]
fn exact_distances_respect_every_bound() {
    let mut towers: Vec<((u64, u32, u64), Arc<Tower>)> = Vec::new();
    let mut closed = 0;
    for p in instances() {
        let key = (p.q, p.m, p.r());
        let t = match towers.iter().find(|(k, _)| *k == key) {
            Some((_, t)) => t.clone(),
            None => {
                let t = Arc::new(Tower::with_reference_preset(p.field_spec().unwrap()).unwrap());
                towers.push((key, t.clone()));
                t
            }
        };
        let r = closed_form_bounds(&p).unwrap();
        let c = p.build(t).unwrap();
        for (side, code, bound) in [("d", c.clone(), &r.distance), ("d⊥", c.dual(), &r.dual_distance)] {
            let Some(b) = bound else { continue };
            if code.k() == 0 || exhaustive_cost(p.q, code.n(), code.k()) > 3_000_000 {
                continue;
            }
            let lin = LinearCode::from_constacyclic(&code).unwrap();
            let d = exhaustive_enumerator(&lin, u64::MAX, &Serial).unwrap().enumerator.min_distance().unwrap() as u64;
            assert!(d >= b.certified, "{} q={} m={} {side}: d = {d} < {}", p.tag(), p.q, p.m, b.certified);
            if let Some(cited) = r.cited_distance.filter(|_| side == "d") {
                assert_eq!(d, cited, "{} q={} m={}: cited distance", p.tag(), p.q, p.m);
            }
            closed += 1;
        }
    }
    assert!(closed > 25, "only {closed} exact distances");
}

#[test]
fn qadic_lemmas() {
    for q in [3u64, 5] {
        for m in 2..=8u32 {
            if q.pow(m) > 3u64.pow(8) {
                continue;
            }
            let u = constacyclic_core::qadic::IndexUniverse::new(q, m, q - 1, 1).unwrap();
            for &l in &u.gamma {
                let c = u.coset(l);
                assert!(weight_constancy_check(&c, q));
                assert!(c.members.iter().all(|&x| wt_q(x, q) == wt_q(l, q)));
            }
            // Parity classes split Ω by q-weight parity; their sizes match the closed form.
            for i in 0..2 {
                let z = parity_defining_set(q, m, i).unwrap();
                assert_eq!(z.len() as u64, parity_family_size(q, m, i));
                assert!(z.members().iter().all(|&x| x % 2 == 1));
            }
            for l in 0..m {
                assert_eq!(qweight_defining_set(q, m, l).unwrap().len() as u64, qweight_family_size(q, m, l));
            }
            if q == 3 {
                assert!(ternary_mirror_check(m).unwrap());
            }
            if m >= 5 && m % 2 == 1 {
                assert_eq!(subcode_weight_formula_check(q, m).unwrap(), None);
            }
        }
    }
}
