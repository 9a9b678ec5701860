//! Constacyclic codes identified by their defining sets.
//!
//! A code of residue `t` lives in `Ω^{(t)} = {t + r i}` and is the ideal of
//! `GF(q)[x]/(x^n - β^{nt})` generated by `∏_{i ∈ Z} (x - β^i)`. The usual
//! `λ`-constacyclic codes have `t = 1`; their duals and reverse codes have
//! `t = -1`, i.e. shift constant `λ^{-1}`.

use alloc::{collections::BTreeSet, sync::Arc, vec, vec::Vec};

use crate::error::{bad, Error, Result};
use crate::galois::{Elem, Tower};
use crate::linalg::Matrix;
use crate::poly::{minimal_polynomial, reciprocal, xn_minus, Poly};
use crate::qadic::IndexUniverse;

/// A union of q-cyclotomic cosets inside one universe `Ω^{(t)}`.
#[derive(Debug, Clone)]
pub struct DefiningSet {
    universe: Arc<IndexUniverse>,
    members: Vec<u64>,
    /// Membership indexed by position in `Ω`.
    mask: Vec<bool>,
}

impl PartialEq for DefiningSet {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe) && self.members == other.members
    }
}

impl Eq for DefiningSet {}

impl DefiningSet {
    /// Validates that every element lies in `Ω` and that the set is closed
    /// under multiplication by `q` modulo `N`.
    pub fn new(universe: Arc<IndexUniverse>, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = members.into_iter().collect();
        let mut mask = vec![false; universe.n() as usize];
        for &x in &set {
            let idx = universe.omega_index(x).ok_or_else(|| {
                bad(alloc::format!(
                    "{x} is not in the universe {} mod {} below {}",
                    universe.residue,
                    universe.r,
                    universe.big_n
                ))
            })?;
            mask[idx] = true;
        }
        for &x in &set {
            let y = x * universe.q % universe.big_n;
            if !set.contains(&y) {
                return Err(Error::NotCosetClosed(x));
            }
        }
        Ok(DefiningSet {
            universe,
            members: set.into_iter().collect(),
            mask,
        })
    }

    /// The union of the cosets of the given integers.
    pub fn from_leaders(universe: Arc<IndexUniverse>, leaders: &[u64]) -> Result<Self> {
        let mut all = Vec::new();
        for &l in leaders {
            if !universe.in_omega(l) {
                return Err(bad(alloc::format!("coset representative {l} is not in the universe")));
            }
            all.extend(universe.coset(l).members);
        }
        Self::new(universe, all)
    }

    /// The elements of `Ω` satisfying a predicate that is constant on cosets.
    pub fn from_predicate(universe: Arc<IndexUniverse>, pred: impl Fn(u64) -> bool) -> Result<Self> {
        let members: Vec<u64> = universe.omega.iter().copied().filter(|&i| pred(i)).collect();
        Self::new(universe, members)
    }

    pub fn empty(universe: Arc<IndexUniverse>) -> Self {
        let n = universe.n() as usize;
        DefiningSet {
            universe,
            members: Vec::new(),
            mask: vec![false; n],
        }
    }

    pub fn full(universe: Arc<IndexUniverse>) -> Self {
        let n = universe.n() as usize;
        DefiningSet {
            members: universe.omega.clone(),
            universe,
            mask: vec![true; n],
        }
    }

    pub fn universe(&self) -> &Arc<IndexUniverse> {
        &self.universe
    }

    /// Ascending members.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: u64) -> bool {
        self.universe
            .omega_index(i % self.universe.big_n)
            .is_some_and(|idx| self.mask[idx])
    }

    /// Membership by position in `Ω`.
    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// Ascending coset leaders of the included cosets.
    pub fn leaders(&self) -> Vec<u64> {
        self.members
            .iter()
            .copied()
            .filter(|&x| self.universe.leader(x) == x)
            .collect()
    }

    /// `Ω \ Z`.
    pub fn complement(&self) -> Self {
        let members = self
            .universe
            .omega
            .iter()
            .copied()
            .zip(&self.mask)
            .filter(|(_, &inside)| !inside)
            .map(|(x, _)| x)
            .collect();
        DefiningSet {
            universe: self.universe.clone(),
            members,
            mask: self.mask.iter().map(|b| !b).collect(),
        }
    }

    /// `-Z = {N - z}`, which lives in the universe of residue `-t`.
    pub fn negate(&self) -> Self {
        let universe = Arc::new(self.universe.negated());
        let big_n = universe.big_n;
        let mut members: Vec<u64> = self.members.iter().map(|&z| (big_n - z) % big_n).collect();
        members.sort_unstable();
        let mut mask = vec![false; universe.n() as usize];
        for &x in &members {
            mask[universe.omega_index(x).expect("negation maps Ω^(t) onto Ω^(-t)")] = true;
        }
        DefiningSet {
            universe,
            members,
            mask,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.universe.same_as(&other.universe) {
            Ok(())
        } else {
            Err(Error::ShiftMismatch)
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mask: Vec<bool> = self.mask.iter().zip(&other.mask).map(|(a, b)| *a || *b).collect();
        Ok(self.with_mask(mask))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mask: Vec<bool> = self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect();
        Ok(self.with_mask(mask))
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.mask.iter().zip(&other.mask).all(|(a, b)| !*a || *b))
    }

    fn with_mask(&self, mask: Vec<bool>) -> Self {
        let members = self
            .universe
            .omega
            .iter()
            .zip(&mask)
            .filter(|(_, &b)| b)
            .map(|(&x, _)| x)
            .collect();
        DefiningSet {
            universe: self.universe.clone(),
            members,
            mask,
        }
    }
}

/// Outcome of the two self-duality tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfDuality {
    /// `Z ∩ -Z = ∅` and `Z ∪ -Z = Ω`, with `-Z` in the same universe.
    pub defining_set: bool,
    /// `k = n/2` and `G Gᵀ = 0`.
    pub gram: bool,
}

impl SelfDuality {
    pub fn agree(&self) -> bool {
        self.defining_set == self.gram
    }

    pub fn is_self_dual(&self) -> bool {
        self.defining_set && self.gram
    }
}

/// A constacyclic code over `GF(q)` of length `n = N / r`.
#[derive(Debug, Clone)]
pub struct ConstacyclicCode {
    tower: Arc<Tower>,
    z: DefiningSet,
    g: Poly,
    h: Poly,
}

impl PartialEq for ConstacyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.tower.modulus() == other.tower.modulus()
            && self.tower.spec() == other.tower.spec()
            && self.z == other.z
    }
}

impl Eq for ConstacyclicCode {}

impl ConstacyclicCode {
    pub fn from_defining_set(tower: Arc<Tower>, z: DefiningSet) -> Result<Self> {
        let u = z.universe();
        let spec = tower.spec();
        if (u.q, u.m, u.r) != (tower.q(), spec.m, spec.r) {
            return Err(bad("defining set and tower disagree on (q, m, r)"));
        }
        let mut g = Poly::one();
        for leader in z.leaders() {
            g = g.mul(&minimal_polynomial(&u.coset(leader), &tower)?, &tower);
        }
        let modulus = xn_minus(u.n() as usize, tower.beta_pow((u.n() * u.residue) as i64), &tower);
        let (h, rem) = modulus.divmod(&g, &tower)?;
        debug_assert!(rem.is_zero());
        Ok(ConstacyclicCode { tower, z, g, h })
    }

    /// Recovers a code from its generator polynomial: the defining set is the
    /// set of roots `β^i` with `i ∈ Ω^{(t)}`.
    pub fn from_generator(tower: Arc<Tower>, residue: u64, g: &Poly) -> Result<Self> {
        let spec = *tower.spec();
        let universe = Arc::new(IndexUniverse::new(tower.q(), spec.m, spec.r, residue)?);
        if !g.is_monic() || !g.is_over_base(&tower) {
            return Err(bad("generator must be monic over GF(q)"));
        }
        let roots: Vec<u64> = universe
            .omega
            .iter()
            .copied()
            .filter(|&i| g.eval(tower.beta_pow(i as i64), &tower).is_zero())
            .collect();
        let z = DefiningSet::new(universe, roots)?;
        if Some(z.len()) != g.degree() {
            return Err(bad("generator does not divide x^n - λ"));
        }
        let code = Self::from_defining_set(tower, z)?;
        if &code.g != g {
            return Err(bad("generator does not divide x^n - λ"));
        }
        Ok(code)
    }

    pub fn tower(&self) -> &Arc<Tower> {
        &self.tower
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.z
    }

    pub fn n(&self) -> usize {
        self.z.universe().n() as usize
    }

    pub fn k(&self) -> usize {
        self.n() - self.z.len()
    }

    pub fn q(&self) -> u64 {
        self.tower.q()
    }

    pub fn r(&self) -> u64 {
        self.z.universe().r
    }

    pub fn residue(&self) -> u64 {
        self.z.universe().residue
    }

    /// The shift constant `β^{nt}`.
    pub fn shift_constant(&self) -> Elem {
        self.tower.beta_pow((self.n() as u64 * self.residue()) as i64)
    }

    pub fn generator(&self) -> &Poly {
        &self.g
    }

    pub fn check_poly(&self) -> &Poly {
        &self.h
    }

    fn derived(&self, z: DefiningSet) -> Self {
        Self::from_defining_set(self.tower.clone(), z).expect("derived defining sets are valid")
    }

    /// The dual code: defining set `-(Ω \ Z)`, generator `ĥ`.
    pub fn dual(&self) -> Self {
        self.derived(self.z.complement().negate())
    }

    /// The code generated by `h`: defining set `Ω \ Z`.
    pub fn complement(&self) -> Self {
        self.derived(self.z.complement())
    }

    /// The code generated by `ĝ`: defining set `-Z`.
    pub fn reverse(&self) -> Self {
        self.derived(self.z.negate())
    }

    /// `ĝ` computed from `g` directly, for cross-checks.
    pub fn reciprocal_generator(&self) -> Poly {
        reciprocal(&self.g, &self.tower).expect("g(0) != 0")
    }

    fn check_len(&self, got: usize, expected: usize) -> Result<()> {
        if got == expected {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected, got })
        }
    }

    /// `m(x) g(x)` as a length-`n` vector.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        self.check_len(message.len(), self.k())?;
        let c = Poly::new(message.to_vec()).mul(&self.g, &self.tower);
        let mut word = c.coeffs().to_vec();
        word.resize(self.n(), Elem::ZERO);
        Ok(word)
    }

    /// Whether `g` divides the word polynomial.
    pub fn contains(&self, word: &[Elem]) -> Result<bool> {
        self.check_len(word.len(), self.n())?;
        Ok(Poly::new(word.to_vec()).rem(&self.g, &self.tower)?.is_zero())
    }

    /// `(λ c_{n-1}, c_0, …, c_{n-2})`, i.e. `x c(x) mod (x^n - λ)`.
    pub fn shift(&self, word: &[Elem]) -> Result<Vec<Elem>> {
        self.check_len(word.len(), self.n())?;
        let n = self.n();
        let mut out = Vec::with_capacity(n);
        out.push(self.tower.mul(self.shift_constant(), word[n - 1]));
        out.extend_from_slice(&word[..n - 1]);
        Ok(out)
    }

    /// Rows `x^j g(x)` for `0 <= j < k`.
    pub fn generator_matrix(&self) -> Matrix {
        let n = self.n();
        let rows = (0..self.k())
            .map(|j| {
                let mut row = vec![Elem::ZERO; n];
                for (i, &c) in self.g.coeffs().iter().enumerate() {
                    row[i + j] = c;
                }
                row
            })
            .collect();
        Matrix::from_rows(rows, n)
    }

    /// Rows `x^j ĥ(x)`: a generator matrix of the dual.
    pub fn parity_check_matrix(&self) -> Matrix {
        self.dual().generator_matrix()
    }

    /// Generator rows as `GF(q)` labels.
    pub fn generator_labels(&self) -> Vec<Vec<u32>> {
        self.generator_matrix()
            .row_vecs()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|e| self.tower.label(e).expect("codes are defined over GF(q)"))
                    .collect()
            })
            .collect()
    }

    pub fn self_duality(&self) -> SelfDuality {
        let neg = self.z.negate();
        let defining_set = neg.universe().same_as(self.z.universe()) && {
            let nm = neg.mask();
            self.z.mask().iter().zip(nm).all(|(a, b)| a != b)
        };
        let gram = 2 * self.k() == self.n() && {
            let g = self.generator_matrix();
            g.mul(&g.transpose(), &self.tower).is_zero()
        };
        SelfDuality { defining_set, gram }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.tower.modulus() != other.tower.modulus() || !self.z.universe().same_as(other.z.universe()) {
            Err(Error::ShiftMismatch)
        } else {
            Ok(())
        }
    }

    /// `C_A ∩ C_B`, defining set `Z_A ∪ Z_B`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.derived(self.z.union(&other.z)?))
    }

    /// `C_A + C_B`, defining set `Z_A ∩ Z_B`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.derived(self.z.intersection(&other.z)?))
    }

    /// `self ⊆ other`, i.e. `Z_other ⊆ Z_self`.
    pub fn is_subcode_of(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        other.z.is_subset(&self.z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::FieldSpec;
    use crate::qadic::wt;

    fn tower(p: u32, m: u32, r: u64) -> Arc<Tower> {
        Arc::new(Tower::with_reference_preset(FieldSpec::new(p, 1, m, r).unwrap()).unwrap())
    }

    fn universe(t: &Tower) -> Arc<IndexUniverse> {
        let s = t.spec();
        Arc::new(IndexUniverse::standard(t.q(), s.m, s.r).unwrap())
    }

    fn parity(t: &Arc<Tower>, i: u32) -> ConstacyclicCode {
        let q = t.q();
        let z = DefiningSet::from_predicate(universe(t), |h| wt(h, q) % 2 == i).unwrap();
        ConstacyclicCode::from_defining_set(t.clone(), z).unwrap()
    }

    #[test]
    fn trivial_codes() {
        let t = tower(3, 2, 2);
        let u = universe(&t);
        let full = ConstacyclicCode::from_defining_set(t.clone(), DefiningSet::empty(u.clone())).unwrap();
        assert_eq!((full.k(), full.generator().clone()), (4, Poly::one()));
        let zero = ConstacyclicCode::from_defining_set(t.clone(), DefiningSet::full(u)).unwrap();
        assert_eq!(zero.k(), 0);
        assert_eq!(zero.generator(), &xn_minus(4, t.lambda(), &t));
        assert_eq!(full.dual(), zero);
    }

    #[test]
    fn validation() {
        let t = tower(3, 2, 2);
        let u = universe(&t);
        assert_eq!(DefiningSet::new(u.clone(), [1]), Err(Error::NotCosetClosed(1)));
        assert!(matches!(DefiningSet::new(u.clone(), [2]), Err(Error::BadParams(_))));
        let c = parity(&t, 1);
        assert_eq!(
            c.encode(&[Elem::ONE]),
            Err(Error::LengthMismatch { expected: 2, got: 1 })
        );
        let t5 = tower(5, 2, 4);
        let u5 = universe(&t5);
        let c5 = ConstacyclicCode::from_defining_set(t5.clone(), DefiningSet::empty(u5.clone())).unwrap();
        let other = ConstacyclicCode::from_defining_set(t5, DefiningSet::empty(Arc::new(u5.negated()))).unwrap();
        assert_eq!(c5.intersect(&other), Err(Error::ShiftMismatch));
    }

    #[test]
    fn small_self_dual() {
        let t = tower(3, 2, 2);
        let c = parity(&t, 1);
        assert_eq!((c.n(), c.k()), (4, 2));
        let sd = c.self_duality();
        assert!(sd.is_self_dual() && sd.agree());
        assert_eq!(c.dual(), c);
        let t3 = tower(3, 3, 2);
        let c = parity(&t3, 1);
        assert_eq!((c.n(), c.k(), c.dual().k()), (13, 6, 7));
        let sd = c.self_duality();
        assert!(!sd.defining_set && !sd.gram);
    }

    #[test]
    fn algebraic_identities() {
        let t = tower(5, 2, 4);
        let u = universe(&t);
        for &leader in &u.gamma_t {
            let z = DefiningSet::from_leaders(u.clone(), &[leader]).unwrap();
            let c = ConstacyclicCode::from_defining_set(t.clone(), z).unwrap();
            let prod = c.generator().mul(c.check_poly(), &t);
            assert_eq!(prod, xn_minus(c.n(), t.lambda(), &t));
            let d = c.dual();
            assert_eq!(d.generator(), &reciprocal(c.check_poly(), &t).unwrap());
            assert_eq!(c.reverse().generator(), &c.reciprocal_generator());
            assert_eq!(d.dual(), c);
            assert_eq!(c.complement().reverse(), d);
            assert_eq!(c.k() + d.k(), c.n());
            let g = c.generator_matrix();
            assert_eq!(g.rank(&t), c.k());
            assert!(g.mul(&c.parity_check_matrix().transpose(), &t).is_zero());
            let row = g.row(0).to_vec();
            assert!(c.contains(&c.shift(&row).unwrap()).unwrap());
            let mut wrapped = row.clone();
            for _ in 0..c.n() {
                wrapped = c.shift(&wrapped).unwrap();
                assert!(c.contains(&wrapped).unwrap());
            }
            let rebuilt = ConstacyclicCode::from_generator(t.clone(), 1, c.generator()).unwrap();
            assert_eq!(rebuilt, c);
        }
    }

    #[test]
    fn lattice_operations() {
        let t = tower(3, 3, 2);
        let c1 = parity(&t, 1);
        let c0 = parity(&t, 0);
        let full = ConstacyclicCode::from_defining_set(t.clone(), DefiningSet::empty(universe(&t))).unwrap();
        assert_eq!(c1.intersect(&full).unwrap(), c1);
        assert_eq!(c1.sum(&c1).unwrap(), c1);
        assert_eq!(c1.intersect(&c0).unwrap().k(), 0);
        assert_eq!(c1.sum(&c0).unwrap(), full);
        assert!(c1.is_subcode_of(&full).unwrap());
        assert!(!full.is_subcode_of(&c1).unwrap());
    }
}
