//! Exhaustive minimum-weight search over the vectors of a linear space that
//! fall outside a given subspace.
//!
//! The space is spanned by `inner ∪ extra` (independent over GF(q)), and the
//! search covers every vector whose `extra` coordinates are not all zero, i.e.
//! `span(inner ∪ extra) \ span(inner)`. Vectors are visited in odometer order
//! over an F_p basis with the `inner` digits least significant, so the excluded
//! subspace is exactly the first `q^|inner|` indices and no membership test is
//! needed per vector. Each odometer step adds one generator, plus one more per
//! carry.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::{scale, Vector};

pub const DEFAULT_ENUM_CAP: u64 = 1 << 28;

/// Environment variable overriding the enumeration cap.
pub const ENUM_CAP_ENV: &str = "SUBCODES_ENUM_CAP";

const INDEX_BITS: u32 = 48;
const INDEX_MASK: u64 = (1 << INDEX_BITS) - 1;
const CHECK_EVERY: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    /// Largest number of vectors a single search may visit.
    pub cap: u64,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { cap: DEFAULT_ENUM_CAP, jobs: 1 }
    }
}

impl EnumConfig {
    /// Default config with the cap taken from `SUBCODES_ENUM_CAP` when set.
    pub fn from_env() -> Self {
        let cap = std::env::var(ENUM_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_ENUM_CAP);
        EnumConfig { cap, jobs: 1 }
    }

    pub fn with_jobs(self, jobs: usize) -> Self {
        EnumConfig { jobs: jobs.max(1), ..self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    Hamming,
    /// Number of positions `i` with `(v_i, v_{n+i}) != (0, 0)`, `n = len / 2`.
    Symplectic,
}

/// A minimum-weight vector and its position in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWord {
    pub weight: usize,
    pub index: u64,
    pub word: Vector,
}

pub fn weight_of(kind: Weight, v: &[FieldElement]) -> usize {
    match kind {
        Weight::Hamming => v.iter().filter(|x| !x.is_zero()).count(),
        Weight::Symplectic => {
            let n = v.len() / 2;
            (0..n).filter(|&i| !v[i].is_zero() || !v[n + i].is_zero()).count()
        }
    }
}

/// Number of vectors in a space of dimension `dim` over GF(q), or a description
/// of it when it does not fit.
fn space_size(q: u32, dim: usize) -> std::result::Result<u64, String> {
    (q as u64)
        .checked_pow(dim as u32)
        .ok_or_else(|| format!("{q}^{dim}"))
}

/// Checks that `q^dim` vectors fit under the cap.
pub fn check_size(q: u32, dim: usize, cfg: &EnumConfig) -> Result<u64> {
    match space_size(q, dim) {
        Ok(size) if size <= cfg.cap && size <= INDEX_MASK => Ok(size),
        Ok(size) => Err(Error::EnumerationTooLarge { size: size.to_string(), cap: cfg.cap }),
        Err(desc) => Err(Error::EnumerationTooLarge { size: desc, cap: cfg.cap }),
    }
}

/// Minimum weight over `span(inner ∪ extra) \ span(inner)`; `None` when `extra`
/// is empty. Ties are broken by enumeration index, so the result does not
/// depend on `cfg.jobs`.
pub fn min_weight_outside(
    field: &Field,
    inner: &[Vector],
    extra: &[Vector],
    weight: Weight,
    cfg: &EnumConfig,
) -> Result<Option<MinWord>> {
    let total = check_size(field.q(), inner.len() + extra.len(), cfg)?;
    if extra.is_empty() {
        return Ok(None);
    }
    let len = extra[0].len();
    let m = field.m() as usize;
    let alpha = field.generator();
    let mut gens = Vec::with_capacity(m * (inner.len() + extra.len()));
    for g in inner.iter().chain(extra) {
        let mut c = FieldElement::ONE;
        for _ in 0..m {
            gens.push(scale(field, c, g));
            c = field.mul(c, alpha);
        }
    }
    let start = (field.q() as u64).pow(inner.len() as u32);
    let space = Space { field, gens, p: field.p() as u64, weight, len };

    let best = AtomicU64::new(u64::MAX);
    let chunks = chunk_ranges(start, total, cfg.jobs);
    let run = |&(lo, hi): &(u64, u64)| {
        if field.q() == 2 && len <= 128 {
            space.scan_packed(lo, hi, &best)
        } else {
            space.scan_generic(lo, hi, &best)
        }
    };
    if cfg.jobs <= 1 {
        chunks.iter().for_each(run);
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::PreconditionFailed(e.to_string()))?;
        pool.install(|| chunks.par_iter().for_each(run));
    }
    let packed = best.into_inner();
    let index = packed & INDEX_MASK;
    let word = space.word_at(index).0;
    Ok(Some(MinWord { weight: (packed >> INDEX_BITS) as usize, index, word }))
}

fn chunk_ranges(start: u64, end: u64, jobs: usize) -> Vec<(u64, u64)> {
    if jobs <= 1 {
        return vec![(start, end)];
    }
    let pieces = (jobs as u64 * 8).min(end - start).max(1);
    let step = (end - start).div_ceil(pieces);
    (0..pieces)
        .map(|i| (start + i * step, (start + (i + 1) * step).min(end)))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

#[inline]
fn pack(weight: usize, index: u64) -> u64 {
    ((weight as u64) << INDEX_BITS) | index
}

struct Space<'a> {
    field: &'a Field,
    /// F_p generators, least significant digit first.
    gens: Vec<Vector>,
    p: u64,
    weight: Weight,
    len: usize,
}

impl Space<'_> {
    fn word_at(&self, mut index: u64) -> (Vector, Vec<u64>) {
        let mut v = vec![FieldElement::ZERO; self.len];
        let mut digits = vec![0u64; self.gens.len()];
        for (g, d) in self.gens.iter().zip(digits.iter_mut()) {
            *d = index % self.p;
            index /= self.p;
            for _ in 0..*d {
                add_assign(self.field, &mut v, g);
            }
        }
        (v, digits)
    }

    /// Stops early once a vector of weight 1 is seen, or once another chunk has
    /// already found weight 1 at a smaller index.
    fn done(best: &AtomicU64, idx: u64) -> bool {
        let b = best.load(Ordering::Relaxed);
        b >> INDEX_BITS == 1 && (b & INDEX_MASK) < idx
    }

    fn scan_generic(&self, lo: u64, hi: u64, best: &AtomicU64) {
        let (mut v, mut digits) = self.word_at(lo);
        let mut local = u64::MAX;
        let mut idx = lo;
        loop {
            let w = weight_of(self.weight, &v);
            let key = pack(w, idx);
            if key < local {
                local = key;
                if w <= 1 {
                    break;
                }
            }
            idx += 1;
            if idx == hi || (idx.is_multiple_of(CHECK_EVERY) && Self::done(best, idx)) {
                break;
            }
            let mut j = 0;
            loop {
                add_assign(self.field, &mut v, &self.gens[j]);
                digits[j] += 1;
                if digits[j] < self.p {
                    break;
                }
                digits[j] = 0;
                j += 1;
            }
        }
        best.fetch_min(local, Ordering::Relaxed);
    }

    fn scan_packed(&self, lo: u64, hi: u64, best: &AtomicU64) {
        let to_bits = |v: &[FieldElement]| -> u128 {
            v.iter().enumerate().fold(0u128, |acc, (i, x)| acc | ((x.value() as u128 & 1) << i))
        };
        let gens: Vec<u128> = self.gens.iter().map(|g| to_bits(g)).collect();
        let n = self.len / 2;
        let half_mask: u128 = if n == 0 { 0 } else { (1u128 << n) - 1 };
        let weigh = |v: u128| -> usize {
            match self.weight {
                Weight::Hamming => v.count_ones() as usize,
                Weight::Symplectic => ((v | (v >> n)) & half_mask).count_ones() as usize,
            }
        };
        let mut v = to_bits(&self.word_at(lo).0);
        let mut local = u64::MAX;
        let mut idx = lo;
        loop {
            let w = weigh(v);
            let key = pack(w, idx);
            if key < local {
                local = key;
                if w <= 1 {
                    break;
                }
            }
            idx += 1;
            if idx == hi || (idx.is_multiple_of(CHECK_EVERY) && Self::done(best, idx)) {
                break;
            }
            // binary odometer: flip the generators of every bit that changes
            let mut changed = idx ^ (idx - 1);
            let mut j = 0;
            while changed != 0 {
                v ^= gens[j];
                changed >>= 1;
                j += 1;
            }
        }
        best.fetch_min(local, Ordering::Relaxed);
    }
}

#[inline]
fn add_assign(field: &Field, v: &mut [FieldElement], g: &[FieldElement]) {
    let q = field.q() as usize;
    let table = field.add_row();
    for (a, b) in v.iter_mut().zip(g) {
        *a = FieldElement::from_raw(table[a.index() * q + b.index()]);
    }
}
