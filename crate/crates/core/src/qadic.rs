//! q-adic digit machinery and q-cyclotomic cosets modulo `N = q^m - 1`.

use alloc::{format, sync::Arc, vec, vec::Vec};

use crate::error::{bad, Error, Result};
use crate::galois::gcd;

fn out_of_range(value: u64, lo: u64, hi: u64) -> Error {
    Error::OutOfRange {
        value,
        range: format!("[{lo}, {hi}]"),
    }
}

/// Digits of `i = Σ i_j q^j`, least significant first.
pub fn digits(mut i: u64, q: u64, m: u32) -> Vec<u64> {
    (0..m)
        .map(|_| {
            let d = i % q;
            i /= q;
            d
        })
        .collect()
}

/// q-weight: the digit sum of `i`.
pub fn wt_q(mut i: u64, q: u64) -> u64 {
    let mut s = 0;
    while i > 0 {
        s += i % q;
        i /= q;
    }
    s
}

/// Hamming weight of the digit vector of `i`.
pub fn wt(mut i: u64, q: u64) -> u32 {
    let mut s = 0;
    while i > 0 {
        s += u32::from(i % q != 0);
        i /= q;
    }
    s
}

/// Largest `j` with `q^j | i`. Undefined (an error) for `i = 0`.
pub fn v_q(mut i: u64, q: u64) -> Result<u32> {
    if i == 0 {
        return Err(out_of_range(0, 1, u64::MAX));
    }
    let mut j = 0;
    while i % q == 0 {
        i /= q;
        j += 1;
    }
    Ok(j)
}

/// Digit statistics of one integer in `[0, q^m - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitProfile {
    pub i: u64,
    pub digits: Vec<u64>,
    pub wt_q: u64,
    pub wt: u32,
    /// `zs[ε]` counts digits equal to `ε`.
    pub zs: Vec<u32>,
    /// `None` for `i = 0`.
    pub v_q: Option<u32>,
}

pub fn digit_profile(i: u64, q: u64, m: u32) -> Result<DigitProfile> {
    let top = q.pow(m) - 1;
    if i > top {
        return Err(out_of_range(i, 0, top));
    }
    let digits = digits(i, q, m);
    let mut zs = vec![0u32; q as usize];
    for &d in &digits {
        zs[d as usize] += 1;
    }
    Ok(DigitProfile {
        i,
        wt_q: digits.iter().sum(),
        wt: m - zs[0],
        zs,
        v_q: v_q(i, q).ok(),
        digits,
    })
}

/// Checks `wt_q(i-1) = wt_q(i) - 1 + (q-1) v_q(i)` for `1 <= i <= q^m - 2`.
pub fn valuation_identity_check(i: u64, q: u64, m: u32) -> Result<bool> {
    let top = q.pow(m) - 2;
    if i == 0 || i > top {
        return Err(out_of_range(i, 1, top));
    }
    let lhs = wt_q(i - 1, q) as i64;
    let rhs = wt_q(i, q) as i64 - 1 + (q as i64 - 1) * v_q(i, q)? as i64;
    Ok(lhs == rhs)
}

/// The orbit of an integer under multiplication by `q` modulo `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub leader: u64,
    /// Orbit order `i, iq, iq^2, …` starting from the element the coset was
    /// built from.
    pub members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.members.contains(&x)
    }
}

pub fn cyclotomic_coset(i: u64, q: u64, big_n: u64) -> CyclotomicCoset {
    let start = i % big_n;
    let mut members = vec![start];
    let mut x = (start as u128 * q as u128 % big_n as u128) as u64;
    while x != start {
        members.push(x);
        x = (x as u128 * q as u128 % big_n as u128) as u64;
    }
    let leader = *members.iter().min().unwrap();
    CyclotomicCoset { leader, members }
}

/// Coset leaders and the index set `Ω = {t + r i : 0 <= i < n}` of one
/// residue class `t` modulo `r`.
///
/// `t = 1` is the universe of `λ`-constacyclic codes with `λ = β^n`; the dual
/// and reverse codes live in the class `t = -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexUniverse {
    pub q: u64,
    pub m: u32,
    pub r: u64,
    pub big_n: u64,
    /// Residue class of the universe modulo `r`.
    pub residue: u64,
    /// All coset leaders modulo `N`, ascending.
    pub gamma: Vec<u64>,
    /// Leaders congruent to `residue` modulo `r`, ascending.
    pub gamma_t: Vec<u64>,
    /// `Ω`, ascending.
    pub omega: Vec<u64>,
    leader_of: Arc<[u32]>,
}

impl IndexUniverse {
    pub fn new(q: u64, m: u32, r: u64, residue: u64) -> Result<Self> {
        if r == 0 || (q - 1) % r != 0 {
            return Err(bad(format!("r = {r} does not divide q - 1")));
        }
        let residue = residue % r;
        if gcd(residue, r) != 1 && r > 1 {
            return Err(bad(format!("residue {residue} is not a unit modulo {r}")));
        }
        let big_n = q.pow(m) - 1;
        let mut leader_of = vec![u32::MAX; big_n as usize];
        let mut gamma = Vec::new();
        for i in 0..big_n {
            if leader_of[i as usize] != u32::MAX {
                continue;
            }
            // i is the smallest unvisited element, hence the leader of its coset.
            gamma.push(i);
            let mut x = i;
            loop {
                leader_of[x as usize] = i as u32;
                x = x * q % big_n;
                if x == i {
                    break;
                }
            }
        }
        let gamma_t = gamma.iter().copied().filter(|g| g % r == residue).collect();
        let omega = (0..big_n / r).map(|i| residue + r * i).collect();
        Ok(IndexUniverse {
            q,
            m,
            r,
            big_n,
            residue,
            gamma,
            gamma_t,
            omega,
            leader_of: leader_of.into(),
        })
    }

    /// The universe `Ω^{(1)}` together with `Γ^{(1)}`.
    pub fn standard(q: u64, m: u32, r: u64) -> Result<Self> {
        Self::new(q, m, r, 1)
    }

    pub fn n(&self) -> u64 {
        self.big_n / self.r
    }

    pub fn leader(&self, i: u64) -> u64 {
        self.leader_of[(i % self.big_n) as usize] as u64
    }

    pub fn coset(&self, i: u64) -> CyclotomicCoset {
        cyclotomic_coset(self.leader(i), self.q, self.big_n)
    }

    pub fn in_omega(&self, i: u64) -> bool {
        i < self.big_n && i % self.r == self.residue
    }

    /// Position of `i` inside `Ω`, i.e. `(i - t) / r`.
    pub fn omega_index(&self, i: u64) -> Option<usize> {
        self.in_omega(i).then(|| ((i - self.residue) / self.r) as usize)
    }

    /// Whether two universes describe the same `(q, m, r, t)`.
    pub fn same_as(&self, other: &IndexUniverse) -> bool {
        (self.q, self.m, self.r, self.residue) == (other.q, other.m, other.r, other.residue)
    }

    /// The universe of residue `-t`, home of duals and reverse codes.
    pub fn negated(&self) -> Self {
        let residue = (self.r - self.residue % self.r) % self.r;
        IndexUniverse {
            residue,
            gamma_t: self
                .gamma
                .iter()
                .copied()
                .filter(|g| g % self.r == residue)
                .collect(),
            omega: (0..self.n()).map(|i| residue + self.r * i).collect(),
            ..self.clone()
        }
    }
}

pub fn index_universe(q: u64, r: u64, big_n: u64) -> Result<IndexUniverse> {
    let mut m = 0;
    let mut pw = 1u64;
    while pw - 1 < big_n {
        pw *= q;
        m += 1;
    }
    if pw - 1 != big_n {
        return Err(bad(format!("N = {big_n} is not q^m - 1 for q = {q}")));
    }
    IndexUniverse::standard(q, m, r)
}

/// Whether `wt_q` and `wt` are constant across the coset.
pub fn weight_constancy_check(coset: &CyclotomicCoset, q: u64) -> bool {
    let first = coset.members[0];
    coset
        .members
        .iter()
        .all(|&x| wt_q(x, q) == wt_q(first, q) && wt(x, q) == wt(first, q))
}

/// `gcd(q^h + 1, q^m - 1)`; equals 2 whenever `q` is odd and `m / gcd(h, m)`
/// is odd.
pub fn gcd_power_check(h: u32, m: u32, q: u64) -> u64 {
    gcd(q.pow(h) + 1, q.pow(m) - 1)
}
