//! Finite fields `GF(p) ⊂ GF(q) ⊂ GF(q^m)` realised inside one tower
//! `GF(p^{sm})`.
//!
//! Every nonzero element is stored by its discrete logarithm with respect to a
//! primitive element `β` (the residue class of `x` modulo the defining
//! polynomial). Addition goes through a Zech-logarithm table, so all field
//! operations are table lookups plus modular integer arithmetic.

use alloc::{format, vec, vec::Vec};
use core::fmt;

use crate::error::{bad, Error, Result};

/// Largest tower order `p^{sm}` for which tables are built.
pub const MAX_TOWER_ORDER: u64 = 1 << 22;

pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^s`, returning `(p, s)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut s = 0;
    while rest % p == 0 {
        rest /= p;
        s += 1;
    }
    (rest == 1).then_some((p as u32, s))
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= x {
        if x % d == 0 {
            out.push(d);
            while x % d == 0 {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Parameters of a tower: `q = p^s`, working degree `m`, shift order `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u32,
    pub s: u32,
    pub m: u32,
    pub r: u64,
}

impl FieldSpec {
    pub fn new(p: u32, s: u32, m: u32, r: u64) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(bad(format!("p = {p} is not prime")));
        }
        if s == 0 {
            return Err(bad("s must be at least 1"));
        }
        if m < 2 {
            return Err(bad(format!("m = {m} must be at least 2")));
        }
        let q = (p as u64)
            .checked_pow(s)
            .ok_or_else(|| bad("q does not fit in 64 bits"))?;
        if q <= 2 {
            return Err(bad("q must exceed 2"));
        }
        if r == 0 || (q - 1) % r != 0 {
            return Err(bad(format!("r = {r} does not divide q - 1 = {}", q - 1)));
        }
        match q.checked_pow(m) {
            Some(order) if order <= MAX_TOWER_ORDER => {}
            _ => {
                return Err(bad(format!(
                    "tower order {q}^{m} exceeds the supported maximum {MAX_TOWER_ORDER}"
                )))
            }
        }
        Ok(FieldSpec { p, s, m, r })
    }

    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.s)
    }

    /// `N = q^m - 1`, the order of the multiplicative group of the tower.
    pub fn big_n(&self) -> u64 {
        self.q().pow(self.m) - 1
    }

    /// Code length `n = N / r`.
    pub fn n(&self) -> u64 {
        self.big_n() / self.r
    }

    /// Degree `sm` of the tower over the prime field.
    pub fn degree(&self) -> u32 {
        self.s * self.m
    }
}

/// A field element in log representation: zero, or `β^k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(u32::MAX);
    pub const ONE: Elem = Elem(0);

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// The exponent `k` with `self = β^k`, or `None` for zero.
    pub fn log(self) -> Option<u32> {
        (!self.is_zero()).then_some(self.0)
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.log() {
            None => f.write_str("0"),
            Some(k) => write!(f, "β^{k}"),
        }
    }
}

// Polynomials over GF(p) as ascending coefficient vectors; only used while
// searching for and validating a defining polynomial.
fn pmod_mul(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let d = f.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    // f is monic: reduce from the top.
    for top in (d..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for (j, &fj) in f.iter().enumerate().take(d) {
            let idx = top - d + j;
            prod[idx] = (prod[idx] + (p as u64 - c) * fj as u64) % p as u64;
        }
        prod[top] = 0;
    }
    prod.truncate(d);
    prod.into_iter().map(|c| c as u32).collect()
}

fn pmod_pow_x(e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let d = f.len() - 1;
    let mut result = vec![0u32; d];
    result[0] = 1;
    let mut base = vec![0u32; d];
    if d == 1 {
        base[0] = (p - f[0]) % p;
    } else {
        base[1] = 1;
    }
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = pmod_mul(&result, &base, f, p);
        }
        base = pmod_mul(&base, &base, f, p);
        e >>= 1;
    }
    result
}

/// Whether the monic polynomial `f` (ascending coefficients) over `GF(p)`
/// is primitive, i.e. `x` has order `p^{deg f} - 1` modulo `f`.
pub fn is_primitive_poly(f: &[u32], p: u32) -> bool {
    if f.len() < 2 || *f.last().unwrap() != 1 || f[0] == 0 || f.iter().any(|&c| c >= p) {
        return false;
    }
    let d = (f.len() - 1) as u32;
    let order = (p as u64).pow(d) - 1;
    let is_one = |v: &[u32]| v[0] == 1 && v[1..].iter().all(|&c| c == 0);
    if !is_one(&pmod_pow_x(order, f, p)) {
        return false;
    }
    prime_factors(order)
        .into_iter()
        .all(|l| !is_one(&pmod_pow_x(order / l, f, p)))
}

/// Lexicographically smallest monic primitive polynomial of degree `d` over
/// `GF(p)`, comparing coefficients from the constant term upward.
pub fn smallest_primitive_poly(p: u32, d: u32) -> Vec<u32> {
    let total = (p as u64).pow(d);
    for t in 0..total {
        // The constant coefficient is the most significant digit of `t`.
        let mut f = vec![0u32; d as usize + 1];
        let mut rest = t;
        for j in (0..d as usize).rev() {
            f[j] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        f[d as usize] = 1;
        if is_primitive_poly(&f, p) {
            return f;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

/// Exponent, logarithm and Zech tables of `GF(p^d)` for a primitive modulus.
#[derive(Clone)]
pub(crate) struct FieldTables {
    p: u32,
    d: u32,
    order: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
}

impl fmt::Debug for FieldTables {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTables")
            .field("p", &self.p)
            .field("d", &self.d)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl FieldTables {
    /// Builds the tables, or returns `None` when `x` is not primitive modulo `f`.
    fn new(p: u32, f: &[u32]) -> Option<Self> {
        let d = (f.len() - 1) as u32;
        let size = (p as u64).pow(d);
        let order = (size - 1) as u32;
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![u32::MAX; size as usize];
        let mut digits = vec![0u32; d as usize];
        digits[0] = 1;
        let pack = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        for k in 0..order {
            let packed = pack(&digits);
            if packed == 0 || log[packed as usize] != u32::MAX {
                return None;
            }
            exp[k as usize] = packed;
            log[packed as usize] = k;
            // multiply by x modulo f
            let top = digits[d as usize - 1];
            for j in (1..d as usize).rev() {
                digits[j] = digits[j - 1];
            }
            digits[0] = 0;
            if top != 0 {
                for (j, c) in digits.iter_mut().enumerate() {
                    *c = (*c + (p - top) * f[j]) % p;
                }
            }
        }
        if pack(&digits) != 1 {
            return None;
        }
        let zech = (0..order as usize)
            .map(|k| {
                let v = exp[k];
                let low = v % p;
                let w = v - low + (low + 1) % p;
                if w == 0 {
                    u32::MAX
                } else {
                    log[w as usize]
                }
            })
            .collect();
        Some(FieldTables {
            p,
            d,
            order,
            exp,
            log,
            zech,
        })
    }

    fn from_prime(&self, c: u32) -> Elem {
        let c = c % self.p;
        if c == 0 {
            Elem::ZERO
        } else {
            Elem(self.log[c as usize])
        }
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        Elem(((a.0 as u64 + b.0 as u64) % self.order as u64) as u32)
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let diff = (b.0 + self.order - a.0) % self.order;
        let z = self.zech[diff as usize];
        if z == u32::MAX {
            Elem::ZERO
        } else {
            Elem(((a.0 as u64 + z as u64) % self.order as u64) as u32)
        }
    }

    fn neg(&self, a: Elem) -> Elem {
        if a.is_zero() || self.p == 2 {
            a
        } else {
            Elem((a.0 + self.order / 2) % self.order)
        }
    }

    fn pow(&self, a: Elem, e: u64) -> Elem {
        match a.log() {
            None if e == 0 => Elem::ONE,
            None => Elem::ZERO,
            Some(k) => Elem(((k as u64 * (e % self.order as u64)) % self.order as u64) as u32),
        }
    }

    fn digits(&self, a: Elem) -> Vec<u32> {
        let mut v = if a.is_zero() { 0 } else { self.exp[a.0 as usize] };
        (0..self.d)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }
}

/// The tower `GF(p^{sm})` with its primitive element `β` and `λ = β^n`.
///
/// Immutable after construction; share it behind an `Arc` freely.
#[derive(Debug, Clone)]
pub struct Tower {
    spec: FieldSpec,
    modulus: Vec<u32>,
    tables: FieldTables,
    /// `N / (q - 1)`: the exponent step of the `GF(q)` subfield.
    sub_step: u32,
    /// Label of `β^{k·sub_step}` for `0 <= k < q - 1`.
    sub_labels: Vec<u32>,
    label_elems: Vec<Elem>,
}

/// A defining polynomial shipped as a preset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetModulus {
    /// Monic polynomial of degree `sm` over `GF(p)`.
    Prime(&'static [u32]),
    /// Monic polynomial of degree `m` over `GF(q)`, coefficients given as
    /// `GF(q)` labels.
    Subfield(&'static [u32]),
}

/// Defining polynomials used by the worked examples, keyed by `(p, s, m)`.
pub fn reference_preset(p: u32, s: u32, m: u32) -> Option<PresetModulus> {
    match (p, s, m) {
        // x^2 + 2x + 2
        (3, 1, 2) => Some(PresetModulus::Prime(&[2, 2, 1])),
        // x^4 + 2x^3 + 2
        (3, 1, 4) => Some(PresetModulus::Prime(&[2, 0, 0, 2, 1])),
        // x^3 + 3x + 3
        (5, 1, 3) => Some(PresetModulus::Prime(&[3, 3, 0, 1])),
        // x^4 + x^3 + ωx^2 + ωx + ω over GF(4), ω labelled 2
        (2, 2, 4) => Some(PresetModulus::Subfield(&[2, 2, 2, 1, 1])),
        _ => None,
    }
}

impl Tower {
    /// Builds the tower. Without a modulus the lexicographically smallest
    /// primitive polynomial of degree `sm` is used.
    pub fn new(spec: FieldSpec, modulus: Option<&[u32]>) -> Result<Self> {
        let p = spec.p;
        let d = spec.degree() as usize;
        let modulus = match modulus {
            Some(f) => {
                if f.len() != d + 1 {
                    return Err(bad(format!(
                        "modulus must have degree {d}, got {}",
                        f.len().saturating_sub(1)
                    )));
                }
                if f[d] != 1 {
                    return Err(bad("modulus must be monic"));
                }
                if let Some(&c) = f.iter().find(|&&c| c >= p) {
                    return Err(bad(format!("coefficient {c} is not in GF({p})")));
                }
                f.to_vec()
            }
            None => smallest_primitive_poly(p, d as u32),
        };
        let tables = FieldTables::new(p, &modulus).ok_or(Error::NotPrimitive)?;
        let q = spec.q();
        let sub_step = (tables.order as u64 / (q - 1)) as u32;
        let omega = Elem(sub_step);
        let mut label_elems = Vec::with_capacity(q as usize);
        for label in 0..q as u32 {
            let mut acc = Elem::ZERO;
            let mut rest = label;
            let mut basis = Elem::ONE;
            for _ in 0..spec.s {
                let c = tables.from_prime(rest % p);
                acc = tables.add(acc, tables.mul(c, basis));
                basis = tables.mul(basis, omega);
                rest /= p;
            }
            label_elems.push(acc);
        }
        let mut sub_labels = vec![u32::MAX; (q - 1) as usize];
        for (label, e) in label_elems.iter().enumerate().skip(1) {
            let k = e.0 / sub_step;
            debug_assert_eq!(e.0 % sub_step, 0);
            sub_labels[k as usize] = label as u32;
        }
        debug_assert!(sub_labels.iter().all(|&l| l != u32::MAX));
        Ok(Tower {
            spec,
            modulus,
            tables,
            sub_step,
            sub_labels,
            label_elems,
        })
    }

    /// Builds the tower from a monic degree-`m` polynomial over `GF(q)`
    /// whose coefficients are `GF(q)` labels.
    ///
    /// The absolute modulus is the norm `∏ f^{σ^j}` down to `GF(p)`; the
    /// result is rejected unless `f(β) = 0` with labels read in the tower.
    pub fn from_subfield_modulus(spec: FieldSpec, rel: &[u32]) -> Result<Self> {
        let q = spec.q();
        let m = spec.m as usize;
        if rel.len() != m + 1 || rel[m] != 1 || rel.iter().any(|&c| c as u64 >= q) {
            return Err(bad("subfield modulus must be monic of degree m with GF(q) labels"));
        }
        let p = spec.p;
        let small = FieldTables::new(p, &smallest_primitive_poly(p, spec.s))
            .expect("smallest primitive polynomial is primitive");
        // In the small field ω = x, so a label's digits are polynomial coefficients.
        let from_label = |label: u32| {
            let mut acc = Elem::ZERO;
            let mut rest = label;
            let mut basis = Elem::ONE;
            for _ in 0..spec.s {
                acc = small.add(acc, small.mul(small.from_prime(rest % p), basis));
                basis = small.mul(basis, Elem(1));
                rest /= p;
            }
            acc
        };
        let base: Vec<Elem> = rel.iter().map(|&c| from_label(c)).collect();
        let mut norm = vec![Elem::ONE];
        for j in 0..spec.s {
            let conj: Vec<Elem> = base
                .iter()
                .map(|&c| small.pow(c, (p as u64).pow(j)))
                .collect();
            let mut next = vec![Elem::ZERO; norm.len() + conj.len() - 1];
            for (i, &a) in norm.iter().enumerate() {
                for (k, &b) in conj.iter().enumerate() {
                    next[i + k] = small.add(next[i + k], small.mul(a, b));
                }
            }
            norm = next;
        }
        let mut abs = Vec::with_capacity(norm.len());
        for c in norm {
            let digits = small.digits(c);
            if digits[1..].iter().any(|&x| x != 0) {
                return Err(Error::CoefficientLeak { q: p as u64 });
            }
            abs.push(digits[0]);
        }
        let tower = Tower::new(spec, Some(&abs))?;
        let mut value = Elem::ZERO;
        for &c in rel.iter().rev() {
            value = tower.add(tower.mul(value, tower.beta()), tower.from_label(c)?);
        }
        if !value.is_zero() {
            return Err(bad("subfield modulus labels are inconsistent with ω = β^{N/(q-1)}"));
        }
        Ok(tower)
    }

    /// Builds the tower from the shipped preset when one exists for
    /// `(p, s, m)`, otherwise from the default modulus.
    pub fn with_reference_preset(spec: FieldSpec) -> Result<Self> {
        match reference_preset(spec.p, spec.s, spec.m) {
            Some(PresetModulus::Prime(f)) => Tower::new(spec, Some(f)),
            Some(PresetModulus::Subfield(f)) => Tower::from_subfield_modulus(spec, f),
            None => Tower::new(spec, None),
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// Defining polynomial over `GF(p)`, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn q(&self) -> u64 {
        self.spec.q()
    }

    /// Multiplicative group order `N = q^m - 1`.
    pub fn order(&self) -> u64 {
        self.tables.order as u64
    }

    pub fn n(&self) -> u64 {
        self.spec.n()
    }

    pub fn beta(&self) -> Elem {
        self.beta_pow(1)
    }

    /// `β^k` for any integer `k`.
    pub fn beta_pow(&self, k: i64) -> Elem {
        Elem(k.rem_euclid(self.order() as i64) as u32)
    }

    /// `λ = β^n`, of multiplicative order `r`.
    pub fn lambda(&self) -> Elem {
        self.beta_pow(self.n() as i64)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.tables.mul(a, b)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.tables.add(a, b)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.tables.neg(a)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        match a.log() {
            None => Err(Error::DivByZero),
            Some(k) => Ok(self.beta_pow(-(k as i64))),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        self.tables.pow(a, e)
    }

    /// The image of the integer `c` in the prime field.
    pub fn from_int(&self, c: i64) -> Elem {
        self.tables.from_prime(c.rem_euclid(self.spec.p as i64) as u32)
    }

    /// Coordinates of `a` over `GF(p)` in the basis `1, β, …, β^{sm-1}`.
    pub fn to_vector(&self, a: Elem) -> Vec<u32> {
        self.tables.digits(a)
    }

    /// Whether `a` lies in the subfield of order `sub_q`.
    pub fn in_subfield(&self, a: Elem, sub_q: u64) -> Result<bool> {
        let size = self.order() + 1;
        let valid = sub_q >= 2 && {
            let (mut pw, mut ok) = (sub_q, false);
            while pw <= size {
                if pw == size {
                    ok = true;
                    break;
                }
                pw = match pw.checked_mul(sub_q) {
                    Some(v) => v,
                    None => break,
                };
            }
            ok && prime_power(sub_q).map(|(p, _)| p) == Some(self.spec.p)
        };
        if !valid {
            return Err(bad(format!("{sub_q} is not a subfield order of the tower")));
        }
        Ok(match a.log() {
            None => true,
            Some(k) => k as u64 % (self.order() / (sub_q - 1)) == 0,
        })
    }

    /// Whether `a` lies in `GF(q)`.
    pub fn in_base(&self, a: Elem) -> bool {
        a.log().map_or(true, |k| k % self.sub_step == 0)
    }

    /// Label of an element of `GF(q)`: the integer whose base-`p` digits are
    /// its coordinates over `1, ω, …, ω^{s-1}` with `ω = β^{N/(q-1)}`.
    /// For prime `q` this is the residue itself.
    pub fn label(&self, a: Elem) -> Option<u32> {
        match a.log() {
            None => Some(0),
            Some(k) if k % self.sub_step == 0 => Some(self.sub_labels[(k / self.sub_step) as usize]),
            Some(_) => None,
        }
    }

    pub fn from_label(&self, label: u32) -> Result<Elem> {
        self.label_elems
            .get(label as usize)
            .copied()
            .ok_or(Error::OutOfRange {
                value: label as u64,
                range: format!("[0, {})", self.q()),
            })
    }

    /// Log of a `GF(q)` element relative to `ω`, i.e. `a = ω^k`.
    pub fn omega_log(&self, a: Elem) -> Option<u32> {
        a.log()
            .filter(|k| k % self.sub_step == 0)
            .map(|k| k / self.sub_step)
    }

    /// All elements of `GF(q)` in label order.
    pub fn base_elements(&self) -> &[Elem] {
        &self.label_elems
    }

    /// All tower elements: zero followed by `β^0, …, β^{N-1}`.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        core::iter::once(Elem::ZERO).chain((0..self.tables.order).map(Elem))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tern2() -> Tower {
        Tower::new(FieldSpec::new(3, 1, 2, 2).unwrap(), Some(&[2, 2, 1])).unwrap()
    }

    #[test]
    fn preset_towers() {
        let t = tern2();
        assert_eq!(t.order(), 8);
        assert_eq!(t.n(), 4);
        assert_eq!(t.lambda(), t.from_int(2));
        let t4 = Tower::new(FieldSpec::new(3, 1, 4, 2).unwrap(), Some(&[2, 0, 0, 2, 1])).unwrap();
        assert_eq!(t4.order(), 80);
        assert_eq!(t4.n(), 40);
        assert_eq!(t4.lambda(), t4.from_int(-1));
    }

    #[test]
    fn non_primitive_modulus_rejected() {
        let spec = FieldSpec::new(3, 1, 2, 2).unwrap();
        assert_eq!(Tower::new(spec, Some(&[1, 0, 1])).unwrap_err(), Error::NotPrimitive);
    }

    #[test]
    fn bad_params() {
        assert!(FieldSpec::new(4, 1, 2, 1).is_err());
        assert!(FieldSpec::new(2, 1, 3, 1).is_err());
        assert!(FieldSpec::new(5, 1, 2, 3).is_err());
        assert!(FieldSpec::new(3, 1, 1, 2).is_err());
        assert!(FieldSpec::new(3, 1, 2, 2).is_ok());
    }

    #[test]
    fn basic_ops() {
        let t = tern2();
        assert_eq!(t.mul(t.beta_pow(3), t.beta_pow(5)), Elem::ONE);
        let a = t.beta_pow(6);
        assert_eq!(t.add(a, Elem::ZERO), a);
        assert_eq!(t.pow(t.beta(), 4), t.from_int(2));
        assert_eq!(t.inv(Elem::ZERO), Err(Error::DivByZero));
    }

    #[test]
    fn subfield_membership() {
        let t = Tower::new(FieldSpec::new(5, 1, 3, 4).unwrap(), None).unwrap();
        assert!(t.in_subfield(Elem::ZERO, 5).unwrap());
        assert!(!t.in_subfield(t.beta(), 5).unwrap());
        // λ has order r | q - 1, so its exponent is a multiple of N/(q-1).
        let lam = t.lambda();
        assert_eq!(lam.log().unwrap() as u64 % (t.order() / 4), 0);
        assert!(t.in_subfield(lam, 5).unwrap());
        assert!(t.in_subfield(lam, 7).is_err());
    }

    #[test]
    fn default_modulus_is_smallest_primitive() {
        assert_eq!(smallest_primitive_poly(3, 2), [2, 1, 1]);
        assert!(is_primitive_poly(&[2, 2, 1], 3));
        assert!(!is_primitive_poly(&[1, 0, 1], 3));
    }

    #[test]
    fn labels_roundtrip_and_gf4_preset() {
        let spec = FieldSpec::new(2, 2, 4, 3).unwrap();
        let t = Tower::with_reference_preset(spec).unwrap();
        assert_eq!(t.modulus().len(), 9);
        for l in 0..4 {
            assert_eq!(t.label(t.from_label(l).unwrap()), Some(l));
        }
        // ω = β^{N/(q-1)} = λ and ω^2 + ω + 1 = 0
        let w = t.from_label(2).unwrap();
        assert_eq!(w, t.lambda());
        assert!(t.add(t.add(t.mul(w, w), w), Elem::ONE).is_zero());
    }
}
