//! Thread-pool execution of the core engines.

use constacyclic_core::bch::{better, best_for_step, resolve_steps, target_mask, BchWitness, SearchOptions, Side};
use constacyclic_core::codes::DefiningSet;
use constacyclic_core::distance::Parallel;
use constacyclic_core::{Error, Result};
use rayon::prelude::*;

/// Runs work items on the global rayon pool, keeping input order.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rayon;

impl Parallel for Rayon {
    fn map<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        items.into_par_iter().map(f).collect()
    }
}

/// [`constacyclic_core::bch::bch_search`] over the steps in parallel. The
/// reduction uses the same tie-break, so the answer does not depend on
/// scheduling.
pub fn par_bch_search(z: &DefiningSet, side: Side, opts: &SearchOptions) -> Result<BchWitness> {
    let u = z.universe();
    let steps = resolve_steps(u, opts)?;
    let target = target_mask(z, side);
    let best = steps
        .par_iter()
        .filter_map(|&a| {
            best_for_step(u, &target, a).map(|mut w| {
                if let Some(c) = opts.delta_cap {
                    w.delta = w.delta.min(c);
                }
                w
            })
        })
        .reduce_with(|x, y| if better(&y, &x) { y } else { x });
    match best {
        Some(w) if w.delta >= 2 => Ok(w),
        _ => Err(Error::NoProgression),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use constacyclic_core::bch::bch_search;
    use constacyclic_core::families::{Family, FamilyParams};
    use std::sync::Arc;

    #[test]
    fn map_keeps_input_order() {
        let out = Rayon.map((0..1000u64).collect(), |x| x * x);
        assert!(out.iter().enumerate().all(|(i, &y)| y == (i * i) as u64));
    }

    #[test]
    fn parallel_search_matches_serial() {
        for (f, q, m) in [(Family::Parity(1), 3, 3), (Family::Parity(0), 3, 4), (Family::QWeight(1), 5, 3), (Family::S3(0), 3, 4)] {
            let p = FamilyParams::new(f, q, m).unwrap();
            let z = p.defining_set(Arc::new(p.universe().unwrap())).unwrap();
            for side in [Side::Primal, Side::Dual] {
                let opts = SearchOptions::default();
                assert_eq!(par_bch_search(&z, side, &opts).ok(), bch_search(&z, side, &opts).ok());
            }
        }
    }
}
