//! Univariate polynomials with coefficients in the tower, minimal
//! polynomials and the factorisation of `x^n - λ` over `GF(q)`.

use alloc::{collections::BTreeMap, format, string::String, vec, vec::Vec};
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::galois::{Elem, Tower};
use crate::qadic::{CyclotomicCoset, IndexUniverse};

/// Coefficients constant term first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![Elem::ONE],
        }
    }

    /// `c x^deg`.
    pub fn monomial(c: Elem, deg: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::new(coeffs)
    }

    /// Builds a polynomial over `GF(q)` from coefficient labels.
    pub fn from_labels(labels: &[u32], t: &Tower) -> Result<Self> {
        let coeffs = labels
            .iter()
            .map(|&l| t.from_label(l))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    /// Labels of the coefficients, or `None` if one is outside `GF(q)`.
    pub fn to_labels(&self, t: &Tower) -> Option<Vec<u32>> {
        self.coeffs.iter().map(|&c| t.label(c)).collect()
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == Elem::ONE
    }

    pub fn is_over_base(&self, t: &Tower) -> bool {
        self.coeffs.iter().all(|&c| t.in_base(c))
    }

    pub fn add(&self, rhs: &Poly, t: &Tower) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| t.add(self.coeff(i), rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &Poly, t: &Tower) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| t.sub(self.coeff(i), rhs.coeff(i))).collect())
    }

    pub fn scale(&self, c: Elem, t: &Tower) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| t.mul(a, c)).collect())
    }

    pub fn mul(&self, rhs: &Poly, t: &Tower) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = t.add(out[i + j], t.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder; the remainder has degree below the divisor's.
    pub fn divmod(&self, divisor: &Poly, t: &Tower) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivByZero)?;
        let inv_lead = t.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let f = t.mul(c, inv_lead);
            quot[top - dd] = f;
            for (j, &dj) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + j;
                rem[idx] = t.sub(rem[idx], t.mul(f, dj));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly, t: &Tower) -> Result<Poly> {
        Ok(self.divmod(divisor, t)?.1)
    }

    /// Scales to a monic polynomial; the zero polynomial stays zero.
    pub fn monic(&self, t: &Tower) -> Poly {
        match t.inv(self.lead()) {
            Ok(inv) => self.scale(inv, t),
            Err(_) => Poly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Poly, t: &Tower) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b, t).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(t)
    }

    pub fn eval(&self, at: Elem, t: &Tower) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| t.add(t.mul(acc, at), c))
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly, t: &Tower) -> Result<Poly> {
        let mut base = self.rem(modulus, t)?;
        let mut acc = Poly::one().rem(modulus, t)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, t).rem(modulus, t)?;
            }
            base = base.mul(&base, t).rem(modulus, t)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Renders the polynomial with descending powers, e.g.
    /// `x^8 + 2x^7 + x^5 + 2x + 1`. Coefficients outside the prime field are
    /// written as powers of `w = β^{N/(q-1)}`.
    pub fn pretty(&self, t: &Tower) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let prime = t.spec().s == 1;
        let mut out = String::new();
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let coef = if prime {
                match t.label(c) {
                    Some(l) => format!("{l}"),
                    None => format!("{c:?}"),
                }
            } else {
                match t.omega_log(c) {
                    Some(0) => String::from("1"),
                    Some(1) => String::from("w"),
                    Some(k) => format!("w^{k}"),
                    None => format!("{c:?}"),
                }
            };
            let unit = c == Elem::ONE;
            match deg {
                0 => out.push_str(&coef),
                _ => {
                    if !unit {
                        out.push_str(&coef);
                    }
                    out.push('x');
                    if deg > 1 {
                        let _ = write!(out, "^{deg}");
                    }
                }
            }
        }
        out
    }
}

/// `x^n - c`.
pub fn xn_minus(n: usize, c: Elem, t: &Tower) -> Poly {
    let mut coeffs = vec![Elem::ZERO; n + 1];
    coeffs[0] = t.neg(c);
    coeffs[n] = Elem::ONE;
    Poly::new(coeffs)
}

/// `∏_{j ∈ coset} (x - β^j)`, checked to have all coefficients in `GF(q)`.
pub fn minimal_polynomial(coset: &CyclotomicCoset, t: &Tower) -> Result<Poly> {
    let mut acc = vec![Elem::ONE];
    for &j in &coset.members {
        let root = t.beta_pow(j as i64);
        let mut next = vec![Elem::ZERO; acc.len() + 1];
        for (i, &a) in acc.iter().enumerate() {
            next[i + 1] = t.add(next[i + 1], a);
            next[i] = t.sub(next[i], t.mul(a, root));
        }
        acc = next;
    }
    let f = Poly::new(acc);
    if !f.is_over_base(t) {
        return Err(Error::CoefficientLeak { q: t.q() });
    }
    Ok(f)
}

/// Minimal polynomials of `β^i` for every leader `i` of the universe; their
/// product is `x^n - β^{n·t}` where `t` is the universe residue.
pub fn factor_universe(t: &Tower, universe: &IndexUniverse) -> Result<BTreeMap<u64, Poly>> {
    universe
        .gamma_t
        .iter()
        .map(|&leader| Ok((leader, minimal_polynomial(&universe.coset(leader), t)?)))
        .collect()
}

/// Factorisation of `x^n - λ` into the minimal polynomials `M_{β^i}`,
/// keyed by the coset leaders `Γ^{(1)}`.
pub fn factor_xn_minus_lambda(t: &Tower) -> Result<BTreeMap<u64, Poly>> {
    let spec = t.spec();
    let universe = IndexUniverse::standard(t.q(), spec.m, spec.r)?;
    factor_universe(t, &universe)
}

/// `f̂(x) = f_0^{-1} x^{deg f} f(1/x)`.
pub fn reciprocal(f: &Poly, t: &Tower) -> Result<Poly> {
    let f0 = f.coeff(0);
    if f0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let inv = t.inv(f0)?;
    let rev: Vec<Elem> = f.coeffs().iter().rev().map(|&c| t.mul(c, inv)).collect();
    Ok(Poly::new(rev))
}

/// Rabin-style irreducibility test over `GF(q)`: `f` of degree `d` is
/// irreducible iff `gcd(f, x^{q^j} - x) = 1` for every `1 <= j <= d/2`.
pub fn is_irreducible_over_base(f: &Poly, t: &Tower) -> Result<bool> {
    let d = match f.degree() {
        None | Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(d) => d,
    };
    let x = Poly::monomial(Elem::ONE, 1);
    let mut power = x.clone();
    for _ in 1..=d / 2 {
        power = power.pow_mod(t.q(), f, t)?;
        if power.sub(&x, t).gcd(f, t).degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::FieldSpec;
    use crate::qadic::cyclotomic_coset;

    fn tower(p: u32, m: u32, r: u64, modulus: Option<&[u32]>) -> Tower {
        Tower::new(FieldSpec::new(p, 1, m, r).unwrap(), modulus).unwrap()
    }

    fn lp(labels: &[u32], t: &Tower) -> Poly {
        Poly::from_labels(labels, t).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let t = tower(3, 2, 2, Some(&[2, 2, 1]));
        // (x + 1)(x - 1) = x^2 + 2
        assert_eq!(lp(&[1, 1], &t).mul(&lp(&[2, 1], &t), &t), lp(&[2, 0, 1], &t));
        assert!(lp(&[2, 2, 1], &t).eval(t.beta(), &t).is_zero());
        assert_eq!(lp(&[1], &t).divmod(&Poly::zero(), &t), Err(Error::DivByZero));
    }

    #[test]
    fn reciprocal_examples() {
        let t = tower(3, 2, 2, None);
        assert_eq!(reciprocal(&lp(&[2, 2, 1], &t), &t).unwrap(), lp(&[2, 1, 1], &t));
        assert_eq!(reciprocal(&lp(&[1, 1], &t), &t).unwrap(), lp(&[1, 1], &t));
        assert_eq!(reciprocal(&lp(&[2], &t), &t).unwrap(), Poly::one());
        assert_eq!(reciprocal(&lp(&[0, 1], &t), &t), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn minimal_polynomial_examples() {
        let t = tower(3, 4, 2, Some(&[2, 0, 0, 2, 1]));
        let c = cyclotomic_coset(1, 3, 80);
        let f = minimal_polynomial(&c, &t).unwrap();
        assert_eq!(f.degree(), Some(4));
        assert!(f.is_monic() && f.is_over_base(&t));
        for &j in &c.members {
            assert!(f.eval(t.beta_pow(j as i64), &t).is_zero());
        }
        assert!(!f.eval(t.beta_pow(2), &t).is_zero());
        // β itself is a root of the defining polynomial x^4 + 2x^3 + 2.
        assert_eq!(f, lp(&[2, 0, 0, 2, 1], &t));
        assert_eq!(minimal_polynomial(&cyclotomic_coset(0, 3, 80), &t).unwrap(), lp(&[2, 1], &t));
        // β^40 = -1 lies in GF(3): x - (-1) = x + 1
        assert_eq!(minimal_polynomial(&cyclotomic_coset(40, 3, 80), &t).unwrap(), lp(&[1, 1], &t));
        assert!(is_irreducible_over_base(&f, &t).unwrap());
        assert!(!is_irreducible_over_base(&lp(&[2, 0, 1], &t), &t).unwrap());
    }

    #[test]
    fn factorization_reconstructs() {
        let t = tower(3, 2, 2, Some(&[2, 2, 1]));
        let f = factor_xn_minus_lambda(&t).unwrap();
        assert_eq!(f.keys().copied().collect::<Vec<_>>(), [1, 5]);
        assert!(f.values().all(|g| g.degree() == Some(2)));
        let prod = f.values().fold(Poly::one(), |acc, g| acc.mul(g, &t));
        assert_eq!(prod, xn_minus(4, t.lambda(), &t));

        let t = tower(3, 3, 2, None);
        let f = factor_xn_minus_lambda(&t).unwrap();
        let total: usize = f.values().map(|g| g.degree().unwrap()).sum();
        assert_eq!(total, 13);
        let prod = f.values().fold(Poly::one(), |acc, g| acc.mul(g, &t));
        assert_eq!(prod, xn_minus(13, t.from_int(2), &t));
    }

    #[test]
    fn pretty_printing() {
        let t = tower(3, 2, 2, None);
        assert_eq!(lp(&[1, 2, 0, 1, 0, 1, 0, 2, 1], &t).pretty(&t), "x^8 + 2x^7 + x^5 + x^3 + 2x + 1");
        assert_eq!(Poly::zero().pretty(&t), "0");
        assert_eq!(lp(&[0, 1], &t).pretty(&t), "x");
    }
}
