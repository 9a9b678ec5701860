//! Arithmetic-progression witnesses for the constacyclic BCH bound.
//!
//! A witness `(b, a, h, δ)` names the set `{(b + a i) mod N : h <= i <= h + δ - 2}`.
//! If it lies in the defining set `Z` (with `b ≡ t mod r` and
//! `gcd(a, N) = r`) then `d >= δ`; if it lies in `Ω \ Z` the same holds for
//! the dual code.

use alloc::{format, vec::Vec};

use crate::codes::DefiningSet;
use crate::error::{bad, Error, Result};
use crate::galois::gcd;
use crate::qadic::IndexUniverse;

/// Which set a progression must sit in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Inside `Z`: bounds the code itself.
    Primal,
    /// Inside `Ω \ Z`: bounds the dual.
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BchWitness {
    pub b: i64,
    pub a: i64,
    pub h: i64,
    pub delta: u64,
}

impl BchWitness {
    /// The progression indexed by `lo <= i <= hi`, so `δ = hi - lo + 2`.
    pub fn from_range(b: i64, a: i64, lo: i64, hi: i64) -> Self {
        BchWitness {
            b,
            a,
            h: lo,
            delta: (hi - lo + 2) as u64,
        }
    }

    /// The realised elements in index order, reduced into `[0, N)`.
    pub fn progression(&self, big_n: u64) -> Vec<u64> {
        let n = big_n as i128;
        (0..self.delta.saturating_sub(1) as i64)
            .map(|j| {
                let i = (self.h + j) as i128;
                ((self.b as i128 + self.a as i128 * i).rem_euclid(n)) as u64
            })
            .collect()
    }

    /// Checks the side conditions and that every element lies in `Z`
    /// (primal) or in `Ω \ Z` (dual).
    pub fn verify(&self, z: &DefiningSet, side: Side) -> Result<()> {
        let u = z.universe();
        self.verify_with(u, |x| z.contains(x) == (side == Side::Primal))
    }

    /// As [`BchWitness::verify`] against an arbitrary membership predicate
    /// on `Ω`.
    pub fn verify_with(&self, u: &IndexUniverse, member: impl Fn(u64) -> bool) -> Result<()> {
        let (big_n, r) = (u.big_n as i64, u.r as i64);
        if self.b.rem_euclid(r) as u64 != u.residue {
            return Err(bad(format!("b = {} is not {} mod {r}", self.b, u.residue)));
        }
        if gcd(self.a.rem_euclid(big_n) as u64, u.big_n) != u.r {
            return Err(bad(format!("gcd({}, {big_n}) != {r}", self.a)));
        }
        if self.delta < 2 || self.delta > u.n() {
            return Err(bad(format!("δ = {} outside [2, {}]", self.delta, u.n())));
        }
        if let Some(x) = self.progression(u.big_n).into_iter().find(|&x| !(u.in_omega(x) && member(x))) {
            return Err(bad(format!("progression element {x} is outside the target set")));
        }
        Ok(())
    }
}

/// Steps `a` with `gcd(a, N) = r`, one from each pair `{a, N - a}`
/// (both give the same progressions, reversed), ascending.
pub fn candidate_steps(u: &IndexUniverse) -> Vec<u64> {
    let n = u.n();
    (1..=n / 2)
        .filter(|&v| gcd(v, n) == 1)
        .map(|v| v * u.r)
        .collect()
}

/// The longest progression with step `a` inside the target set.
///
/// With `gcd(a, N) = r` the map `x ↦ x + a` permutes `Ω` in one cycle of
/// length `n`; the answer is the longest cyclic run of members along it,
/// earliest start `b` on ties.
pub fn best_for_step(u: &IndexUniverse, target: &[bool], a: u64) -> Option<BchWitness> {
    let n = u.n() as usize;
    let big_n = u.big_n;
    let walk = |j: usize| (u.residue + a * j as u64) % big_n;
    let at = |x: u64| target[((x - u.residue) / u.r) as usize];
    let start = match (0..n).find(|&j| !at(walk(j))) {
        None => {
            return Some(BchWitness {
                b: u.residue as i64,
                a: a as i64,
                h: 0,
                delta: n as u64,
            })
        }
        Some(j) => j,
    };
    let mut best: Option<(usize, u64)> = None;
    let mut run = 0usize;
    let mut run_start = 0u64;
    for step in 1..=n {
        let x = walk((start + step) % n);
        if at(x) {
            if run == 0 {
                run_start = x;
            }
            run += 1;
        } else if run > 0 {
            if best.map_or(true, |(len, b)| run > len || (run == len && run_start < b)) {
                best = Some((run, run_start));
            }
            run = 0;
        }
    }
    best.map(|(len, b)| BchWitness {
        b: b as i64,
        a: a as i64,
        h: 0,
        delta: (len as u64 + 1).min(n as u64),
    })
}

/// Whether `x` beats `y`: larger δ, then smaller `a`, then smaller `b`.
pub fn better(x: &BchWitness, y: &BchWitness) -> bool {
    (x.delta, core::cmp::Reverse(x.a), core::cmp::Reverse(x.b))
        > (y.delta, core::cmp::Reverse(y.a), core::cmp::Reverse(y.b))
}

/// Search parameters.
#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Restrict to these steps; every one must satisfy `gcd(a, N) = r`.
    pub steps: Option<Vec<u64>>,
    /// Stop as soon as a progression with this δ is found.
    pub delta_cap: Option<u64>,
}

/// The membership mask that a progression must stay inside.
pub fn target_mask(z: &DefiningSet, side: Side) -> Vec<bool> {
    match side {
        Side::Primal => z.mask().to_vec(),
        Side::Dual => z.mask().iter().map(|b| !b).collect(),
    }
}

/// Validates user-supplied steps or returns the default sweep.
pub fn resolve_steps(u: &IndexUniverse, opts: &SearchOptions) -> Result<Vec<u64>> {
    match &opts.steps {
        None => Ok(candidate_steps(u)),
        Some(steps) => {
            for &a in steps {
                if gcd(a % u.big_n, u.big_n) != u.r {
                    return Err(bad(format!("step {a} has gcd with {} different from {}", u.big_n, u.r)));
                }
            }
            Ok(steps.clone())
        }
    }
}

/// Best witness over a list of steps, with the deterministic tie-break.
pub fn search_steps(u: &IndexUniverse, target: &[bool], steps: &[u64], cap: Option<u64>) -> Option<BchWitness> {
    let mut best: Option<BchWitness> = None;
    for &a in steps {
        if let Some(mut w) = best_for_step(u, target, a) {
            if let Some(c) = cap {
                w.delta = w.delta.min(c);
            }
            if best.as_ref().map_or(true, |b| better(&w, b)) {
                best = Some(w);
            }
            if cap.is_some_and(|c| w.delta >= c) {
                break;
            }
        }
    }
    best
}

/// The largest-δ progression inside `Z` (primal) or `Ω \ Z` (dual).
pub fn bch_search(z: &DefiningSet, side: Side, opts: &SearchOptions) -> Result<BchWitness> {
    let u = z.universe();
    let steps = resolve_steps(u, opts)?;
    let target = target_mask(z, side);
    match search_steps(u, &target, &steps, opts.delta_cap) {
        Some(w) if w.delta >= 2 => Ok(w),
        _ => Err(Error::NoProgression),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qadic::wt;
    use alloc::sync::Arc;

    #[test]
    fn parity_witness() {
        let u = Arc::new(IndexUniverse::standard(3, 3, 2).unwrap());
        let z = DefiningSet::from_predicate(u.clone(), |h| wt(h, 3) % 2 == 1).unwrap();
        let w = BchWitness::from_range(9, 4, 0, 2);
        assert_eq!(w.progression(26), [9, 13, 17]);
        assert_eq!(w.delta, 4);
        w.verify(&z, Side::Primal).unwrap();
        assert!(w.verify(&z, Side::Dual).is_err());
        let found = bch_search(&z, Side::Primal, &SearchOptions::default()).unwrap();
        assert!(found.delta >= 4);
        found.verify(&z, Side::Primal).unwrap();
    }

    #[test]
    fn single_coset_is_short() {
        let u = Arc::new(IndexUniverse::standard(3, 4, 2).unwrap());
        let z = DefiningSet::from_leaders(u, &[1]).unwrap();
        let w = bch_search(&z, Side::Primal, &SearchOptions::default()).unwrap();
        assert!(w.delta <= 5);
        w.verify(&z, Side::Primal).unwrap();
        let d = bch_search(&z, Side::Dual, &SearchOptions::default()).unwrap();
        d.verify(&z, Side::Dual).unwrap();
    }

    #[test]
    fn errors() {
        let u = Arc::new(IndexUniverse::standard(3, 2, 2).unwrap());
        let empty = DefiningSet::empty(u.clone());
        assert_eq!(bch_search(&empty, Side::Primal, &SearchOptions::default()), Err(Error::NoProgression));
        let opts = SearchOptions {
            steps: Some(alloc::vec![4]),
            delta_cap: None,
        };
        assert!(matches!(bch_search(&empty, Side::Dual, &opts), Err(Error::BadParams(_))));
        let full = DefiningSet::full(u);
        let w = bch_search(&full, Side::Primal, &SearchOptions::default()).unwrap();
        assert_eq!(w.delta, 4);
    }

    #[test]
    fn tie_break_prefers_small_step() {
        let u = Arc::new(IndexUniverse::standard(5, 2, 4).unwrap());
        let z = DefiningSet::from_leaders(u, &[1]).unwrap();
        let w = bch_search(&z, Side::Primal, &SearchOptions::default()).unwrap();
        // {1, 5} is a run of length 2 for step 4.
        assert_eq!((w.a, w.b, w.delta), (4, 1, 3));
    }
}
