//! The ternary code `C_F` and its exact invariants.
//!
//! A codeword is indexed by `(mu, nu) in F_3^m x F_3^n`; its coordinate at
//! `x in F_3^n \ {0}` is `mu.F(x) + nu.x`, coordinates ordered by ascending
//! rank `1 .. 3^n - 1`. Codewords are never materialized for the whole
//! code: weights come from the Walsh spectrum
//!
//! ```text
//! wt(c(mu, nu)) = 3^n - 3^{n-1} - (2/3) Re(W_F(mu, -nu)),   mu != 0,
//! ```
//!
//! and direct coordinate counting exists as a test oracle and for the
//! covering checks, which work on packed support bitmasks.

use crate::error::{Error, Result};
use crate::functions::FunctionTable;
use crate::gf3::{rank_dot, rank_neg};
use crate::pow3;
use crate::walsh::WalshSpectrum;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Packed support of one codeword: bit `i` set iff the coordinate at rank
/// `i + 1` is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodewordSupport {
    length: usize,
    words: Vec<u64>,
}

impl CodewordSupport {
    pub fn new(length: usize) -> CodewordSupport {
        CodewordSupport { length, words: vec![0; length.div_ceil(64)] }
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.length
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Hamming weight of the codeword.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Support inclusion: `self` covered by `other`.
    pub fn is_subset_of(&self, other: &CodewordSupport) -> bool {
        debug_assert_eq!(self.length, other.length);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }
}

/// Full value vector of `c(mu, nu)`, one entry per coordinate rank
/// `1 .. 3^n - 1`.
pub fn codeword_values(f: &FunctionTable, mu_rank: usize, nu_rank: usize) -> Vec<u8> {
    let (n, m) = (f.n(), f.m());
    let mu_dot: Vec<u8> = (0..pow3(m)).map(|y| rank_dot(mu_rank, y, m)).collect();
    (1..pow3(n))
        .map(|x| (mu_dot[f.value(x) as usize] + rank_dot(nu_rank, x, n)) % 3)
        .collect()
}

/// Support bitmask of `c(mu, nu)`.
pub fn codeword_support(f: &FunctionTable, mu_rank: usize, nu_rank: usize) -> CodewordSupport {
    let (n, m) = (f.n(), f.m());
    let length = pow3(n) - 1;
    let mu_dot: Vec<u8> = (0..pow3(m)).map(|y| rank_dot(mu_rank, y, m)).collect();
    let mut sup = CodewordSupport::new(length);
    for x in 1..pow3(n) {
        if (mu_dot[f.value(x) as usize] + rank_dot(nu_rank, x, n)) % 3 != 0 {
            sup.set(x - 1);
        }
    }
    sup
}

/// Weight of `c(mu, nu)` from the spectrum. Requires `F(0) = 0`; the
/// divisibility check fails loudly on a corrupt spectrum.
pub fn weight_via_walsh(spec: &WalshSpectrum, mu_rank: usize, nu_rank: usize) -> Result<usize> {
    let n = spec.n();
    let base = pow3(n) - pow3(n - 1);
    if mu_rank == 0 {
        return Ok(if nu_rank == 0 { 0 } else { base });
    }
    let two_re = spec.row(mu_rank).value(rank_neg(nu_rank, n)).two_re();
    if two_re % 3 != 0 {
        return Err(Error::WeightNotIntegral { mu_rank, nu_rank });
    }
    let wt = base as i64 - two_re / 3;
    if wt < 0 || wt as usize > pow3(n) - 1 {
        return Err(Error::WeightNotIntegral { mu_rank, nu_rank });
    }
    Ok(wt as usize)
}

/// Weight multiset of the whole code, `3^{n+m}` codewords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    freq: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    /// Builds a distribution from explicit `(weight, count)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u64)>) -> WeightDistribution {
        let mut freq = BTreeMap::new();
        for (w, c) in pairs {
            *freq.entry(w).or_insert(0) += c;
        }
        WeightDistribution { freq }
    }

    pub fn freq(&self) -> &BTreeMap<usize, u64> {
        &self.freq
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.freq.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.freq.values().sum()
    }

    /// Smallest nonzero weight.
    pub fn w_min(&self) -> Result<usize> {
        self.freq.keys().find(|&&w| w > 0).copied().ok_or(Error::EmptyDistribution)
    }

    /// Largest weight.
    pub fn w_max(&self) -> Result<usize> {
        self.freq.keys().next_back().copied().ok_or(Error::EmptyDistribution)
    }

    pub fn nonzero_weight_count(&self) -> usize {
        self.freq.keys().filter(|&&w| w > 0).count()
    }

    pub fn as_pairs(&self) -> Vec<(usize, u64)> {
        self.freq.iter().map(|(&w, &c)| (w, c)).collect()
    }
}

/// Exact weight distribution from cached spectra, `O(3^{n+m})`.
/// Requires `F(0) = 0` (checked via the row-sum identity).
pub fn weight_distribution(spec: &WalshSpectrum) -> Result<WeightDistribution> {
    if !spec.origin_is_zero() {
        return Err(Error::NonzeroOrigin);
    }
    let (n, m) = (spec.n(), spec.m());
    let base = pow3(n) - pow3(n - 1);
    let maps: Vec<Result<BTreeMap<usize, u64>>> = (1..pow3(m))
        .into_par_iter()
        .map(|mu_rank| {
            let mut local: BTreeMap<usize, u64> = BTreeMap::new();
            for value in spec.row(mu_rank).values() {
                let two_re = value.two_re();
                if two_re % 3 != 0 {
                    return Err(Error::WeightNotIntegral { mu_rank, nu_rank: 0 });
                }
                let wt = base as i64 - two_re / 3;
                if wt < 0 || wt as usize > pow3(n) - 1 {
                    return Err(Error::WeightNotIntegral { mu_rank, nu_rank: 0 });
                }
                *local.entry(wt as usize).or_insert(0) += 1;
            }
            Ok(local)
        })
        .collect();
    let mut freq: BTreeMap<usize, u64> = BTreeMap::new();
    freq.insert(0, 1);
    *freq.entry(base).or_insert(0) += (pow3(n) - 1) as u64;
    for map in maps {
        for (w, c) in map? {
            *freq.entry(w).or_insert(0) += c;
        }
    }
    Ok(WeightDistribution { freq })
}

/// Exact AB ratio data: `satisfies_ab` iff `3 w_min > 2 w_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AbStatus {
    pub w_min: usize,
    pub w_max: usize,
    pub satisfies_ab: bool,
}

pub fn ab_status(dist: &WeightDistribution) -> Result<AbStatus> {
    let w_min = dist.w_min()?;
    let w_max = dist.w_max()?;
    Ok(AbStatus { w_min, w_max, satisfies_ab: 3 * w_min > 2 * w_max })
}

/// Spectral form of the AB violation test: `max Re >= 0`, `min Re <= 0`
/// and `3 max Re - 2 min Re >= 3^n` over all `mu != 0` force the code
/// below the AB threshold. All comparisons run on `2 Re` integers.
pub fn ab_spectral_violation(spec: &WalshSpectrum) -> bool {
    let (n, m) = (spec.n(), spec.m());
    let mut max2 = i64::MIN;
    let mut min2 = i64::MAX;
    for mu_rank in 1..pow3(m) {
        for v in spec.row(mu_rank).values() {
            let t = v.two_re();
            max2 = max2.max(t);
            min2 = min2.min(t);
        }
    }
    max2 >= 0 && min2 <= 0 && 3 * max2 - 2 * min2 >= 2 * 3i64.pow(n as u32)
}

/// Minimum distance = smallest nonzero weight.
pub fn min_distance(dist: &WeightDistribution) -> Result<usize> {
    dist.w_min()
}

/// Verifies the code has full dimension `n + m`: no component may be
/// affine (the offending `mu` is reported), and the only zero codeword is
/// `c(0, 0)` — equivalently `(mu, nu) -> c(mu, nu)` is injective.
pub fn check_dimension(spec: &WalshSpectrum) -> Result<usize> {
    let (n, m) = (spec.n(), spec.m());
    for mu_rank in 1..pow3(m) {
        if spec.row(mu_rank).is_affine_shape() {
            return Err(Error::AffineComponent { mu_rank });
        }
    }
    let dist = weight_distribution(spec)?;
    if dist.count(0) != 1 {
        return Err(Error::VerificationFailed(format!(
            "{} zero codewords; the index map is not injective",
            dist.count(0)
        )));
    }
    debug_assert_eq!(dist.total(), pow3(n + m) as u64);
    Ok(n + m)
}
