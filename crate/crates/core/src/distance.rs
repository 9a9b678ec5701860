//! Minimum distance and weight distribution.
//!
//! Codes are handled here as plain linear codes over `GF(q)` with symbols
//! stored as labels (`u8`, so `q <= 256`). Three engines are provided:
//!
//! * exhaustive enumeration of the projective message space in a `p`-ary
//!   Gray order, one vector addition per codeword;
//! * a syndrome search that decides whether a codeword of a given weight
//!   exists, using a table of normalised parity-check columns for the last
//!   position;
//! * a seeded information-set search that only produces upper bounds.
//!
//! [`certify`] combines them with progression lower bounds. Work is split
//! into independent items and handed to a [`Parallel`] executor, so the std
//! crate can run the same plan on a thread pool.

use alloc::{format, string::String, vec, vec::Vec};
use core::ops::Range;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bch::{bch_search, SearchOptions, Side};
use crate::codes::ConstacyclicCode;
use crate::error::{bad, Error, Result};
use crate::families::Bound;
use crate::galois::{Elem, Tower};

/// Default operation budget for the expensive phase of [`certify`].
pub const DEFAULT_BUDGET: u64 = 200_000_000_000;

const STRIDE: usize = 32;

/// Addition and multiplication tables for `GF(q)` labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolField {
    p: u8,
    s: usize,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl SymbolField {
    pub fn from_tower(t: &Tower) -> Result<Self> {
        let q = t.q() as usize;
        let spec = t.spec();
        if q > 256 || spec.p >= 128 {
            return Err(bad(format!("distance engine supports q <= 256 with p < 128, got q = {q}")));
        }
        let elems: Vec<Elem> = (0..q as u32).map(|l| t.from_label(l)).collect::<Result<_>>()?;
        let label = |e: Elem| t.label(e).expect("closed under field operations") as u8;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = label(t.add(elems[a], elems[b]));
                mul[a * q + b] = label(t.mul(elems[a], elems[b]));
            }
        }
        let neg = (0..q).map(|a| label(t.neg(elems[a]))).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { label(t.inv(elems[a]).expect("nonzero")) })
            .collect();
        Ok(SymbolField {
            p: spec.p as u8,
            s: spec.s as usize,
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn p(&self) -> u8 {
        self.p
    }

    pub fn s(&self) -> usize {
        self.s
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Inverse of a nonzero label.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }

    /// Base-`p` digit `j` of a label: its coordinate on `ω^j`.
    #[inline]
    pub fn digit(&self, label: u8, j: usize) -> u8 {
        (label as u32 / (self.p as u32).pow(j as u32) % self.p as u32) as u8
    }

    /// Label of `ω^j` for `j < s`.
    pub fn omega_power(&self, j: usize) -> u8 {
        (self.p as u32).pow(j as u32) as u8
    }

    pub fn scale(&self, c: u8, v: &[u8]) -> Vec<u8> {
        v.iter().map(|&x| self.mul(c, x)).collect()
    }

    /// `a += c * b`.
    pub fn axpy(&self, a: &mut [u8], c: u8, b: &[u8]) {
        for (x, &y) in a.iter_mut().zip(b) {
            *x = self.add(*x, self.mul(c, y));
        }
    }
}

pub fn weight(word: &[u8]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}

/// A linear code given by a basis of labelled rows.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: SymbolField,
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl LinearCode {
    /// The rows must be linearly independent; this is checked.
    pub fn new(field: SymbolField, n: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch { expected: n, got: r.len() });
        }
        if rows.iter().flatten().any(|&x| x as usize >= field.q) {
            return Err(bad("row entry is not a GF(q) label"));
        }
        let code = LinearCode { field, n, rows };
        if code.rank() != code.rows.len() {
            return Err(bad("generator rows are linearly dependent"));
        }
        Ok(code)
    }

    /// The rows `x^j g(x)`.
    pub fn from_constacyclic(code: &ConstacyclicCode) -> Result<Self> {
        let field = SymbolField::from_tower(code.tower())?;
        let rows = code
            .generator_labels()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x as u8).collect())
            .collect();
        Ok(LinearCode {
            field,
            n: code.n(),
            rows,
        })
    }

    pub fn field(&self) -> &SymbolField {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn q(&self) -> usize {
        self.field.q
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    fn rank(&self) -> usize {
        let order: Vec<usize> = (0..self.n).collect();
        rref(&self.field, &mut self.rows.clone(), &order).len()
    }

    /// `Σ m_i row_i`.
    pub fn encode(&self, message: &[u8]) -> Result<Vec<u8>> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                got: message.len(),
            });
        }
        let mut out = vec![0u8; self.n];
        for (&c, row) in message.iter().zip(&self.rows) {
            self.field.axpy(&mut out, c, row);
        }
        Ok(out)
    }

    /// Rows of a parity-check matrix, from the reduced echelon form.
    pub fn parity_check(&self) -> Vec<Vec<u8>> {
        let f = &self.field;
        let mut g = self.rows.clone();
        let order: Vec<usize> = (0..self.n).collect();
        let pivots = rref(f, &mut g, &order);
        let mut is_pivot = vec![false; self.n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.n)
            .filter(|&c| !is_pivot[c])
            .map(|c| {
                let mut h = vec![0u8; self.n];
                h[c] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    h[pc] = f.neg(g[i][c]);
                }
                h
            })
            .collect()
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        word.len() == self.n
            && self.parity_check().iter().all(|h| {
                h.iter()
                    .zip(word)
                    .fold(0u8, |acc, (&a, &b)| self.field.add(acc, self.field.mul(a, b)))
                    == 0
            })
    }
}

/// Reduced row echelon form choosing pivot columns in `order`; returns the
/// pivot column of each remaining row. Zero rows are dropped.
pub fn rref(f: &SymbolField, rows: &mut Vec<Vec<u8>>, order: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for &c in order {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(p, r);
        let inv = f.inv(rows[r][c]);
        let pivot_row = f.scale(inv, &rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = f.neg(row[c]);
                f.axpy(row, factor, &pivot_row);
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Runs independent work items; results come back in input order.
pub trait Parallel {
    fn map<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send;
}

/// Runs everything on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Serial;

impl Parallel for Serial {
    fn map<T, R, F>(&self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        items.into_iter().map(f).collect()
    }
}

/// Number of codewords `c` with `wt(c) = w`, for every `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    /// `counts[w]`; always `counts[0] = 1`.
    pub counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.counts.iter().skip(1).position(|&c| c > 0).map(|w| w + 1)
    }

    /// Nonzero `(weight, count)` pairs in ascending weight.
    pub fn terms(&self) -> Vec<(usize, u64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
            .collect()
    }
}

/// Enumeration state in bit-plane form: plane `j` holds the `ω^j` digits.
struct Planes<'a> {
    f: &'a SymbolField,
    n: usize,
    stride: usize,
}

impl<'a> Planes<'a> {
    fn new(f: &'a SymbolField, n: usize) -> Self {
        Planes {
            f,
            n,
            stride: n.div_ceil(STRIDE) * STRIDE,
        }
    }

    fn len(&self) -> usize {
        self.stride * self.f.s
    }

    fn from_labels(&self, v: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; self.len()];
        for (i, &x) in v.iter().enumerate() {
            for j in 0..self.f.s {
                out[j * self.stride + i] = self.f.digit(x, j);
            }
        }
        out
    }

    fn to_labels(&self, w: &[u8]) -> Vec<u8> {
        let p = self.f.p as u32;
        (0..self.n)
            .map(|i| {
                (0..self.f.s)
                    .rev()
                    .fold(0u32, |acc, j| acc * p + w[j * self.stride + i] as u32) as u8
            })
            .collect()
    }

    #[inline]
    fn add_into(&self, acc: &mut [u8], v: &[u8]) {
        let p = self.f.p;
        for (a, b) in acc.chunks_exact_mut(STRIDE).zip(v.chunks_exact(STRIDE)) {
            let a: &mut [u8; STRIDE] = a.try_into().expect("stride chunk");
            let b: &[u8; STRIDE] = b.try_into().expect("stride chunk");
            for i in 0..STRIDE {
                let z = a[i].wrapping_add(b[i]);
                a[i] = if z >= p { z - p } else { z };
            }
        }
    }

    #[inline]
    fn weight(&self, w: &[u8]) -> usize {
        match self.f.s {
            1 => w
                .chunks_exact(STRIDE)
                .map(|c| {
                    let c: &[u8; STRIDE] = c.try_into().expect("stride chunk");
                    c.iter().fold(0u8, |acc, &x| acc.wrapping_add((x != 0) as u8)) as usize
                })
                .sum(),
            2 => {
                let (a, b) = w.split_at(self.stride);
                a.iter().zip(b).filter(|(&x, &y)| (x | y) != 0).count()
            }
            s => (0..self.n)
                .filter(|&i| (0..s).any(|j| w[j * self.stride + i] != 0))
                .count(),
        }
    }
}

/// One contiguous block of the projective message space: messages whose
/// first nonzero coordinate is `lead` with value 1, and whose top `fixed`
/// free digits spell `prefix`; the remaining `free` digits are enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumTask {
    pub lead: usize,
    pub fixed: u32,
    pub prefix: u64,
    pub free: u32,
}

impl EnumTask {
    pub fn words(&self, p: u64) -> u64 {
        p.pow(self.free)
    }
}

/// Counts and the first minimum-weight word found by one task.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaskOutcome {
    pub counts: Vec<u64>,
    pub best: Option<(usize, Vec<u8>)>,
}

/// Codewords visited by projective enumeration, `(q^k - 1)/(q - 1)`.
pub fn projective_size(q: u64, k: usize) -> u128 {
    if k == 0 {
        0
    } else {
        ((q as u128).saturating_pow(k as u32) - 1) / (q as u128 - 1)
    }
}

/// Splits the projective message space into blocks of at most
/// `p^chunk_digits` codewords.
pub fn plan_tasks(code: &LinearCode, chunk_digits: u32) -> Vec<EnumTask> {
    let p = code.field.p as u64;
    let s = code.field.s as u32;
    let k = code.k();
    let mut tasks = Vec::new();
    for lead in 0..k {
        let digits = s * (k - 1 - lead) as u32;
        let fixed = digits.saturating_sub(chunk_digits);
        let free = digits - fixed;
        for prefix in 0..p.pow(fixed) {
            tasks.push(EnumTask {
                lead,
                fixed,
                prefix,
                free,
            });
        }
    }
    tasks
}

/// Enumerates one block. Digit `d` of the free part multiplies
/// `row[lead + 1 + d / s]` by `ω^(d mod s)`; consecutive words differ in
/// one digit, incremented mod `p`, so each step is one vector addition.
pub fn run_task(code: &LinearCode, task: &EnumTask) -> TaskOutcome {
    let f = &code.field;
    let planes = Planes::new(f, code.n);
    let s = f.s;
    let p = f.p as u64;
    let basis_count = task.fixed as usize + task.free as usize;
    let basis: Vec<Vec<u8>> = (0..basis_count)
        .map(|d| {
            let row = &code.rows[task.lead + 1 + d / s];
            planes.from_labels(&f.scale(f.omega_power(d % s), row))
        })
        .collect();
    let mut acc = planes.from_labels(&code.rows[task.lead]);
    let mut prefix = task.prefix;
    for d in task.free as usize..basis_count {
        for _ in 0..prefix % p {
            planes.add_into(&mut acc, &basis[d]);
        }
        prefix /= p;
    }
    let mut counts = vec![0u64; code.n + 1];
    let mut best_w = usize::MAX;
    let mut best = None;
    let mut visit = |acc: &[u8]| {
        let w = planes.weight(acc);
        counts[w] += 1;
        if w < best_w {
            best_w = w;
            best = Some(acc.to_vec());
        }
    };
    visit(&acc);
    // Odometer over the free digits; the lowest digit that does not wrap
    // is the one the Gray step increments.
    let top = f.p;
    let mut odometer = vec![0u8; task.free as usize];
    'walk: loop {
        let mut d = 0usize;
        loop {
            if d == odometer.len() {
                break 'walk;
            }
            odometer[d] += 1;
            if odometer[d] < top {
                break;
            }
            odometer[d] = 0;
            d += 1;
        }
        planes.add_into(&mut acc, &basis[d]);
        visit(&acc);
    }
    TaskOutcome {
        counts,
        best: best.map(|w| (best_w, planes.to_labels(&w))),
    }
}

/// Full weight distribution together with one minimum-weight codeword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub enumerator: WeightEnumerator,
    pub min_word: Option<Vec<u8>>,
    pub cost: u64,
}

/// Operation count of [`exhaustive_enumerator`]: codewords visited times `n`.
pub fn exhaustive_cost(q: u64, n: usize, k: usize) -> u64 {
    let c = projective_size(q, k).saturating_mul(n.max(1) as u128);
    c.min(u64::MAX as u128) as u64
}

/// Exact weight distribution; refuses with `BudgetExceeded` if the cost
/// exceeds `budget`.
pub fn exhaustive_enumerator(code: &LinearCode, budget: u64, exec: &impl Parallel) -> Result<Enumeration> {
    let q = code.q() as u64;
    let cost = exhaustive_cost(q, code.n, code.k());
    if cost > budget {
        return Err(Error::BudgetExceeded { needed: cost, budget });
    }
    let tasks = plan_tasks(code, 16 / code.field.s as u32 + 4);
    let outcomes = exec.map(tasks, |t| run_task(code, &t));
    let mut counts = vec![0u64; code.n + 1];
    let mut best: Option<(usize, Vec<u8>)> = None;
    for o in outcomes {
        for (c, x) in counts.iter_mut().zip(&o.counts) {
            *c += x * (q - 1);
        }
        if let Some((w, word)) = o.best {
            if best.as_ref().map_or(true, |(bw, _)| w < *bw) {
                best = Some((w, word));
            }
        }
    }
    counts[0] += 1;
    Ok(Enumeration {
        enumerator: WeightEnumerator { counts },
        min_word: best.map(|(_, w)| w),
        cost,
    })
}

/// Entries sorted by a 64-bit hash, with a table of bucket starts keyed by
/// the top bits of the hash.
#[derive(Debug, Clone)]
struct HashIndex<E> {
    keys: Vec<u64>,
    vals: Vec<E>,
    starts: Vec<u32>,
    shift: u32,
}

impl<E: Ord + Copy> HashIndex<E> {
    fn new(mut items: Vec<(u64, E)>) -> Self {
        items.sort_unstable();
        let bits = (usize::BITS - items.len().leading_zeros()).clamp(1, 30);
        let shift = 64 - bits;
        let mut starts = vec![0u32; (1usize << bits) + 1];
        for &(h, _) in &items {
            starts[(h >> shift) as usize + 1] += 1;
        }
        for i in 1..starts.len() {
            starts[i] += starts[i - 1];
        }
        let (keys, vals) = items.into_iter().unzip();
        HashIndex { keys, vals, starts, shift }
    }

    #[inline]
    fn candidates(&self, h: u64) -> impl Iterator<Item = E> + '_ {
        let b = (h >> self.shift) as usize;
        let range = self.starts[b] as usize..self.starts[b + 1] as usize;
        self.keys[range.clone()]
            .iter()
            .zip(&self.vals[range])
            .filter(move |(&k, _)| k == h)
            .map(|(_, &v)| v)
    }
}

/// Largest pair table the syndrome search will build.
const PAIR_LIMIT: u128 = 1 << 22;

fn pair_entries(n: usize, q: u64) -> u128 {
    binom_u128(n as u64, 2).saturating_mul(((q - 1) as u128).pow(2))
}

fn uses_pairs(n: usize, r: usize, q: u64) -> bool {
    r > 0 && pair_entries(n, q) <= PAIR_LIMIT
}

/// Support positions walked before the table lookup in a weight-`w` layer.
fn walk_depth(n: usize, r: usize, q: u64, w: usize) -> usize {
    if w >= 3 && uses_pairs(n, r, q) {
        w - 2
    } else {
        w.saturating_sub(1)
    }
}

/// Parity-check columns prepared for the syndrome search.
///
/// A weight-`w` search walks supports of size `w - 2` (or `w - 1` when the
/// pair table would be too large) and looks the remaining syndrome up in a
/// hashed table of all `c h_j` or all `c1 h_i + c2 h_j`, `i < j`.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    field: SymbolField,
    n: usize,
    r: usize,
    /// `scaled[(j * q + c) * r ..]` is `c · h_j`.
    scaled: Vec<u8>,
    /// `(j, c)` for nonzero `c h_j`.
    singles: HashIndex<(u32, u8)>,
    /// `(i, j, c1, c2)` keyed by `c1 h_i + c2 h_j`; empty when too large.
    pairs: HashIndex<(u32, u32, u8, u8)>,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0100_0000_01b3;

fn hash_bytes(v: &[u8]) -> u64 {
    v.iter().fold(FNV_OFFSET, |h, &x| (h ^ x as u64).wrapping_mul(FNV_PRIME))
}

impl SyndromeTable {
    pub fn new(code: &LinearCode) -> Self {
        let f = code.field.clone();
        let h = code.parity_check();
        let (n, r, q) = (code.n, h.len(), f.q);
        let mut scaled = vec![0u8; n * q * r];
        for j in 0..n {
            for c in 0..q {
                let at = (j * q + c) * r;
                for (i, row) in h.iter().enumerate() {
                    scaled[at + i] = f.mul(c as u8, row[j]);
                }
            }
        }
        let use_pairs = uses_pairs(n, r, q as u64);
        let mut t = SyndromeTable {
            field: f,
            n,
            r,
            scaled,
            singles: HashIndex::new(Vec::new()),
            pairs: HashIndex::new(Vec::new()),
        };
        let mut singles = Vec::new();
        for j in 0..n {
            for c in 1..q as u8 {
                let v = t.col(j, c);
                if v.iter().any(|&x| x != 0) {
                    singles.push((hash_bytes(v), (j as u32, c)));
                }
            }
        }
        t.singles = HashIndex::new(singles);
        if use_pairs {
            let mut buf = vec![0u8; r];
            let mut pairs = Vec::with_capacity(pair_entries(n, q as u64) as usize);
            for i in 0..n {
                for j in i + 1..n {
                    for c1 in 1..q as u8 {
                        for c2 in 1..q as u8 {
                            let (a, b) = (t.col(i, c1), t.col(j, c2));
                            for k in 0..r {
                                buf[k] = t.field.add(a[k], b[k]);
                            }
                            pairs.push((hash_bytes(&buf), (i as u32, j as u32, c1, c2)));
                        }
                    }
                }
            }
            t.pairs = HashIndex::new(pairs);
        }
        t
    }

    #[inline]
    fn col(&self, j: usize, c: u8) -> &[u8] {
        let at = (j * self.field.q + c as usize) * self.r;
        &self.scaled[at..at + self.r]
    }

    /// Operation count to search weight `w` exactly.
    pub fn layer_cost(&self, w: usize) -> u64 {
        search_cost(self.n, self.r, self.field.q as u64, w)
    }

    /// A codeword of weight exactly `w` whose first support position lies
    /// in `firsts` and has entry 1, if one exists.
    pub fn search(&self, w: usize, firsts: Range<usize>) -> Option<Vec<u8>> {
        firsts.into_iter().find_map(|first| self.search_prefix(w, first, None))
    }

    /// As [`search`](Self::search) with the first support position fixed
    /// and, optionally, the second one too.
    pub fn search_prefix(&self, w: usize, first: usize, second: Option<usize>) -> Option<Vec<u8>> {
        if w == 0 || first + w > self.n {
            return None;
        }
        let depth = walk_depth(self.n, self.r, self.field.q as u64, w).max(1);
        let mut chosen: Vec<(usize, u8)> = Vec::with_capacity(w);
        let mut stack: Vec<Vec<u8>> = vec![vec![0u8; self.r]; w.max(1)];
        stack[0].copy_from_slice(self.col(first, 1));
        chosen.push((first, 1));
        match second {
            None => self.extend(w, depth, &mut chosen, &mut stack),
            Some(j) => {
                if depth < 2 || j <= first || j + (w - 1) > self.n {
                    return None;
                }
                (1..self.field.q as u8).find_map(|c| {
                    self.step(&mut stack, 1, j, c);
                    chosen.truncate(1);
                    chosen.push((j, c));
                    self.extend(w, depth, &mut chosen, &mut stack)
                })
            }
        }
    }

    #[inline]
    fn step(&self, stack: &mut [Vec<u8>], depth: usize, j: usize, c: u8) {
        let (lo, hi) = stack.split_at_mut(depth);
        let (prev, next) = (&lo[depth - 1], &mut hi[0]);
        let col = self.col(j, c);
        for i in 0..self.r {
            next[i] = self.field.add(prev[i], col[i]);
        }
    }

    fn extend(&self, w: usize, walk: usize, chosen: &mut Vec<(usize, u8)>, stack: &mut [Vec<u8>]) -> Option<Vec<u8>> {
        let depth = chosen.len();
        if depth == walk {
            let s = &stack[depth - 1];
            return match w - walk {
                0 => s.iter().all(|&x| x == 0).then(|| self.word(chosen, &[])),
                1 => self.finish(chosen, s),
                _ => self.finish_pair(chosen, s),
            };
        }
        let last = chosen[depth - 1].0;
        for j in last + 1..=self.n - (w - depth) {
            for c in 1..self.field.q as u8 {
                self.step(stack, depth, j, c);
                chosen.push((j, c));
                if let Some(word) = self.extend(w, walk, chosen, stack) {
                    return Some(word);
                }
                chosen.pop();
            }
        }
        None
    }

    /// Hash of `-s`, or `None` when `s` is zero.
    #[inline]
    fn negated_hash(&self, s: &[u8]) -> Option<u64> {
        let f = &self.field;
        s.iter()
            .any(|&x| x != 0)
            .then(|| s.iter().fold(FNV_OFFSET, |h, &x| (h ^ f.neg(x) as u64).wrapping_mul(FNV_PRIME)))
    }

    /// Looks up a column `j > last` and scalar `c` with `c h_j = -s`.
    fn finish(&self, chosen: &[(usize, u8)], s: &[u8]) -> Option<Vec<u8>> {
        let last = chosen[chosen.len() - 1].0;
        let f = &self.field;
        let h = self.negated_hash(s)?;
        self.singles
            .candidates(h)
            .find(|&(j, c)| j as usize > last && self.col(j as usize, c).iter().zip(s).all(|(&a, &x)| f.add(a, x) == 0))
            .map(|(j, c)| self.word(chosen, &[(j as usize, c)]))
    }

    /// Looks up `last < i < j` and scalars with `c1 h_i + c2 h_j = -s`.
    fn finish_pair(&self, chosen: &[(usize, u8)], s: &[u8]) -> Option<Vec<u8>> {
        let last = chosen[chosen.len() - 1].0;
        let f = &self.field;
        let h = self.negated_hash(s)?;
        self.pairs
            .candidates(h)
            .find(|&(i, j, c1, c2)| {
                i as usize > last && {
                    let (a, b) = (self.col(i as usize, c1), self.col(j as usize, c2));
                    (0..self.r).all(|t| f.add(f.add(a[t], b[t]), s[t]) == 0)
                }
            })
            .map(|(i, j, c1, c2)| self.word(chosen, &[(i as usize, c1), (j as usize, c2)]))
    }

    fn word(&self, chosen: &[(usize, u8)], tail: &[(usize, u8)]) -> Vec<u8> {
        let mut v = vec![0u8; self.n];
        for &(j, c) in chosen.iter().chain(tail) {
            v[j] = c;
        }
        v
    }
}

fn binom_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Operation count of one weight layer of the syndrome search: lookups
/// (nodes at the lookup depth) times the cost of one lookup.
pub fn search_cost(n: usize, r: usize, q: u64, w: usize) -> u64 {
    if w <= 1 {
        return n as u64;
    }
    let depth = walk_depth(n, r, q, w);
    let nodes = binom_u128(n as u64, depth as u64).saturating_mul((q as u128 - 1).saturating_pow(depth as u32 - 1));
    nodes.saturating_mul(r.max(1) as u128).min(u64::MAX as u128) as u64
}

/// Searches one weight layer, splitting on the first two support
/// positions. The reported word is the first in search order, whatever the
/// executor.
pub fn search_layer(table: &SyndromeTable, w: usize, exec: &impl Parallel) -> Option<Vec<u8>> {
    let n = table.n;
    let depth = walk_depth(n, table.r, table.field.q as u64, w);
    let items: Vec<(usize, Option<usize>)> = if depth >= 2 {
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, Some(j)))).collect()
    } else {
        (0..n).map(|i| (i, None)).collect()
    };
    exec.map(items, |(i, j)| table.search_prefix(w, i, j)).into_iter().flatten().next()
}

/// Outcome of [`low_weight_search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowWeight {
    /// The lightest nonzero codeword, of weight at most `w_max`.
    Found(Vec<u8>),
    /// No nonzero codeword has weight `<= w_max`.
    NotFound,
}

/// Tests every weight `1..=w_max` in turn.
pub fn low_weight_search(code: &LinearCode, w_max: usize, budget: u64, exec: &impl Parallel) -> Result<LowWeight> {
    if code.k() == 0 || w_max == 0 {
        return Ok(LowWeight::NotFound);
    }
    let table = SyndromeTable::new(code);
    let w_max = w_max.min(code.n);
    let cost: u64 = (1..=w_max).map(|w| table.layer_cost(w)).fold(0u64, |a, b| a.saturating_add(b));
    if cost > budget {
        return Err(Error::BudgetExceeded { needed: cost, budget });
    }
    for w in 1..=w_max {
        if let Some(word) = search_layer(&table, w, exec) {
            return Ok(LowWeight::Found(word));
        }
    }
    Ok(LowWeight::NotFound)
}

/// Lightest word met by `iterations` rounds of information-set search:
/// each round reduces the generator rows on a random column order and
/// tries every combination of at most two reduced rows.
pub fn information_set_search(code: &LinearCode, iterations: u64, seed: u64, exec: &impl Parallel) -> Option<Vec<u8>> {
    if code.k() == 0 || iterations == 0 {
        return None;
    }
    let items: Vec<u64> = (0..iterations).collect();
    let found = exec.map(items, |it| isd_round(code, seed, it));
    found.into_iter().flatten().fold(None, |best: Option<Vec<u8>>, w| match best {
        Some(b) if weight(&b) <= weight(&w) => Some(b),
        _ => Some(w),
    })
}

fn isd_round(code: &LinearCode, seed: u64, round: u64) -> Option<Vec<u8>> {
    let f = &code.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(round);
    let mut order: Vec<usize> = (0..code.n).collect();
    order.shuffle(&mut rng);
    let mut rows = code.rows.clone();
    rref(f, &mut rows, &order);
    let mut best: Option<Vec<u8>> = None;
    let mut consider = |v: Vec<u8>| {
        let w = weight(&v);
        if w > 0 && best.as_ref().map_or(true, |b| w < weight(b)) {
            best = Some(v);
        }
    };
    let mut tmp = vec![0u8; code.n];
    for i in 0..rows.len() {
        consider(rows[i].clone());
        for j in i + 1..rows.len() {
            for c in 1..f.q as u8 {
                tmp.copy_from_slice(&rows[i]);
                f.axpy(&mut tmp, c, &rows[j]);
                consider(tmp.clone());
            }
        }
    }
    best
}

/// A step of [`certify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    BchSearch,
    GeneratorRows,
    InformationSet,
    Exhaustive,
    LowWeight,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::BchSearch => "bch_search",
            Method::GeneratorRows => "generator_rows",
            Method::InformationSet => "information_set",
            Method::Exhaustive => "exhaustive",
            Method::LowWeight => "low_weight",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub method: Method,
    /// Operations charged to the budget (zero for the cheap steps).
    pub cost: u64,
    /// Running bounds after the step.
    pub lower: u64,
    pub upper: u64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub n: u64,
    pub k: u64,
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    /// A codeword of weight `upper`, as labels.
    pub witness: Vec<u32>,
    pub trace: Vec<TraceStep>,
    /// Present when the exhaustive engine ran.
    pub enumerator: Option<WeightEnumerator>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Cap on exhaustive and low-weight operations.
    pub budget: u64,
    pub isd_iterations: u64,
    pub seed: u64,
    /// Search progressions in the defining set.
    pub bch: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            budget: DEFAULT_BUDGET,
            isd_iterations: 64,
            seed: 0x5eed,
            bch: true,
        }
    }
}

struct Ledger {
    lower: u64,
    upper: u64,
    witness: Vec<u8>,
    trace: Vec<TraceStep>,
}

impl Ledger {
    fn raise(&mut self, v: u64) {
        self.lower = self.lower.max(v.min(self.upper));
    }

    fn offer(&mut self, word: &[u8]) {
        let w = weight(word) as u64;
        if w > 0 && w < self.upper {
            self.upper = w;
            self.witness = word.to_vec();
        }
    }

    fn log(&mut self, method: Method, cost: u64, detail: String) {
        self.trace.push(TraceStep {
            method,
            cost,
            lower: self.lower,
            upper: self.upper,
            detail,
        });
    }
}

/// Certifies the minimum distance of `code`.
///
/// `hints` are lower bounds already established for this code (their
/// `certified` values are used). The expensive phase picks the cheaper of
/// exhaustive enumeration and a layered syndrome search from the current
/// lower bound upwards, within `opts.budget`.
pub fn certify(code: &ConstacyclicCode, hints: &[Bound], opts: &CertifyOptions, exec: &impl Parallel) -> Result<DistanceResult> {
    let lin = LinearCode::from_constacyclic(code)?;
    let (n, k) = (lin.n, lin.k());
    if k == 0 {
        return Ok(DistanceResult {
            n: n as u64,
            k: 0,
            lower: 0,
            upper: 0,
            exact: true,
            witness: vec![0; n],
            trace: Vec::new(),
            enumerator: Some(WeightEnumerator {
                counts: {
                    let mut c = vec![0; n + 1];
                    c[0] = 1;
                    c
                },
            }),
        });
    }
    let mut led = Ledger {
        lower: 1,
        upper: n as u64 + 1,
        witness: Vec::new(),
        trace: Vec::new(),
    };
    for row in lin.rows() {
        led.offer(row);
    }
    led.log(Method::GeneratorRows, 0, String::from("lightest generator row"));
    for b in hints.iter().filter(|b| b.witness.is_some()) {
        led.raise(b.certified);
        led.log(Method::ClosedForm, 0, format!("{}: d >= {}", b.rule, b.certified));
    }
    if opts.bch {
        if let Ok(w) = bch_search(code.defining_set(), Side::Primal, &SearchOptions::default()) {
            led.raise(w.delta);
            led.log(
                Method::BchSearch,
                0,
                format!("progression b={} a={} h={}: d >= {}", w.b, w.a, w.h, w.delta),
            );
        }
    }
    if led.lower < led.upper {
        if let Some(word) = information_set_search(&lin, opts.isd_iterations, opts.seed, exec) {
            led.offer(&word);
        }
        led.log(Method::InformationSet, 0, format!("{} rounds", opts.isd_iterations));
    }
    let mut enumerator = None;
    let mut budget = opts.budget;
    if led.lower < led.upper {
        let q = lin.q() as u64;
        let ex = exhaustive_cost(q, n, k);
        let r = n - k;
        let lw = (led.lower as usize..led.upper as usize)
            .map(|w| search_cost(n, r, q, w))
            .fold(0u64, |a, b| a.saturating_add(b));
        if ex <= lw && ex <= budget {
            let e = exhaustive_enumerator(&lin, budget, exec)?;
            if let Some(word) = &e.min_word {
                led.offer(word);
            }
            led.raise(led.upper);
            led.log(Method::Exhaustive, e.cost, format!("{} projective codewords", projective_size(q, k)));
            enumerator = Some(e.enumerator);
        } else {
            let table = SyndromeTable::new(&lin);
            while led.lower < led.upper {
                let w = led.lower as usize;
                let cost = table.layer_cost(w);
                if cost > budget {
                    led.log(Method::LowWeight, 0, format!("weight {w} needs {cost} operations, {budget} left"));
                    break;
                }
                budget -= cost;
                match search_layer(&table, w, exec) {
                    Some(word) => {
                        led.offer(&word);
                        led.log(Method::LowWeight, cost, format!("codeword of weight {w} found"));
                    }
                    None => {
                        led.raise(w as u64 + 1);
                        led.log(Method::LowWeight, cost, format!("no codeword of weight {w}"));
                    }
                }
            }
        }
    }
    Ok(DistanceResult {
        n: n as u64,
        k: k as u64,
        lower: led.lower,
        upper: led.upper,
        exact: led.lower == led.upper,
        witness: led.witness.iter().map(|&x| x as u32).collect(),
        trace: led.trace,
        enumerator,
    })
}
