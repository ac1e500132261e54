//! Minimality of `C_F`, decided by independent routes that must agree:
//!
//! - the covering-definition oracle ([`covering_oracle`]), which tests
//!   support inclusion between codeword lines directly;
//! - the Walsh characterization ([`walsh_direct_check`]): the code is
//!   minimal iff no real-part combination of three same-component values
//!   (with `theta in {1, -2}`) and no four-value cross-component
//!   combination reaches `3^n`;
//! - the pairwise weight identity ([`pairwise_weight_check`]), an
//!   equivalent criterion expressed purely through codeword weights;
//! - the sufficient norm bound ([`norm_bound_check`]): `|W| < 3^n / 5`
//!   everywhere forces minimality (never refutes it);
//! - the composite route ([`composite_check`]) for `F = (f, G)`, which
//!   decides minimality from the spectra of `f`, `G` and the mixtures
//!   `A_t = f + t.G` alone, and powers the AB-violating pipeline
//!   ([`build_and_verify_ab_violating`]).
//!
//! All comparisons are exact: a combination violates a condition iff its
//! `2 Re` value equals `2 * 3^n`. Witnesses are reported as rank tuples in
//! lexicographic enumeration order `(mu, nu, mu', nu', pattern)`, so they
//! are deterministic; condition enumerations parallelize over the leading
//! index and the reducer keeps the lexicographically smallest candidate.

mod covering;
mod walker;

pub use covering::{covering_oracle, CoveringMode, EXHAUSTIVE_CAP};
use walker::GroupWalker;

use crate::codes::{self, WeightDistribution};
use crate::error::{Error, Result};
use crate::functions::{
    classify_spectrum, compose, extend_with_dummy, field_mult_bent, indicator_quadratic,
    CompositeSpec, FunctionTable,
};
use crate::gf3::{rank_add, rank_neg, rank_sub, SubspaceSpec, TernaryVector};
use crate::pow3;
use crate::walsh::{fast_row, SpectrumRow, WalshSpectrum};
use rayon::prelude::*;
use std::sync::atomic::{AtomicUsize, Ordering};

/// Which route produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    CoveringOracle,
    WalshDirect,
    WalshComposite,
    NormBound,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::CoveringOracle => "covering_oracle",
            Method::WalshDirect => "walsh_direct",
            Method::WalshComposite => "walsh_composite",
            Method::NormBound => "norm_bound",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Minimal,
    NotMinimal,
    /// Only the bound route and sampled covering may return this.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Minimal => "minimal",
            Verdict::NotMinimal => "not_minimal",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// A failing tuple that re-verifies independently. All entries are ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `suppt(covered) ⊆ suppt(covering)` across distinct lines.
    Covering { covered: (usize, usize), covering: (usize, usize) },
    /// Same-component triple: `2Re(W(mu,n1) + W(mu,n2) + theta W(mu,n3))`
    /// equals `2 * 3^n`, with `n1 + n2 + n3 = 0` pairwise distinct.
    SumTriple { mu: usize, nus: [usize; 3], theta: i64 },
    /// Cross-component quadruple of the direct check.
    CrossQuad { mu1: usize, nu1: usize, mu2: usize, nu2: usize },
    /// Triple over a mixture row `A_t` of the composite check.
    CompositeTriple { mu_t: usize, nus: [usize; 3], theta: i64 },
    /// Four-row combination of the composite check; `condition` is 2 or 3,
    /// `lambdas` has exactly one `-2`.
    CompositeQuad {
        condition: u8,
        mu_t: usize,
        mu_t2: usize,
        nu1: usize,
        nu2: usize,
        lambdas: [i64; 4],
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub method: Method,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl MinimalityVerdict {
    pub fn is_minimal(&self) -> bool {
        self.verdict == Verdict::Minimal
    }
}

#[inline]
fn target(n: usize) -> i64 {
    2 * 3i64.pow(n as u32)
}

/// Scans one `2Re` row for a triple `nu + nu' + nu'' = 0` of pairwise
/// distinct points with `t[nu] + t[nu'] + theta t[nu''] = 2 * 3^n`,
/// `theta in {1, -2}`. Returns the first violation in `(nu, nu', theta)`
/// order.
fn triple_violation(a: &[i64], n: usize) -> Option<(usize, usize, usize, i64)> {
    let size = pow3(n);
    let goal = target(n);
    for nu in 0..size {
        let t1 = a[nu];
        // nu'' = -nu - nu' tracked incrementally as nu' walks 0..3^n.
        let mut w = GroupWalker::new(rank_neg(nu, n), n);
        for nu2 in 0..size {
            let nu3 = w.diff_rank();
            w.advance();
            if nu == nu2 || nu == nu3 || nu2 == nu3 {
                continue;
            }
            let t12 = t1 + a[nu2];
            let t3 = a[nu3];
            if t12 + t3 == goal {
                return Some((nu, nu2, nu3, 1));
            }
            if t12 - 2 * t3 == goal {
                return Some((nu, nu2, nu3, -2));
            }
        }
    }
    None
}

/// Scans a four-row combination `l1 a[nu] + l2 b[nu'] + l3 c[nu+nu'] +
/// l4 d[nu-nu']` over all `(nu, nu')` and the four single-`-2` lambda
/// patterns. Returns the first violation in `(nu, nu', pattern)` order.
fn quad_violation(
    a: &[i64],
    b: &[i64],
    c: &[i64],
    d: &[i64],
    n: usize,
) -> Option<(usize, usize, [i64; 4])> {
    let size = pow3(n);
    let goal = target(n);
    for nu in 0..size {
        let ta = a[nu];
        let mut w = GroupWalker::new(nu, n);
        for nu2 in 0..size {
            let (srank, drank) = (w.sum_rank(), w.diff_rank());
            w.advance();
            let terms = [ta, b[nu2], c[srank], d[drank]];
            let all: i64 = terms.iter().sum();
            // lambda_i = -2 contributes (1 - 3) * t_i.
            for (i, t) in terms.iter().enumerate() {
                if all - 3 * t == goal {
                    let mut lambdas = [1i64; 4];
                    lambdas[i] = -2;
                    return Some((nu, nu2, lambdas));
                }
            }
        }
    }
    None
}

fn two_re_rows(spec: &WalshSpectrum) -> Vec<Vec<i64>> {
    spec.rows().iter().map(|r| r.two_re_vec()).collect()
}

fn check_direct_preconditions(spec: &WalshSpectrum) -> Result<()> {
    if !spec.origin_is_zero() {
        return Err(Error::NonzeroOrigin);
    }
    for mu_rank in 1..pow3(spec.m()) {
        if spec.row(mu_rank).is_affine_shape() {
            return Err(Error::AffineComponent { mu_rank });
        }
    }
    Ok(())
}

/// The exact Walsh characterization of minimality. Requires `F(0) = 0` and
/// no affine component (both checked). Minimal iff:
///
/// 1. for every `mu != 0`, no pairwise-distinct triple summing to zero has
///    `2Re(W(mu,.) + W(mu,.) + theta W(mu,.)) = 2 * 3^n`, and
/// 2. for every `mu != +-mu'` (both nonzero), no `(nu, nu')` has
///    `2Re(W(mu,nu) + W(mu',nu') + W(mu+mu',nu+nu') - 2 W(mu-mu',nu-nu'))
///    = 2 * 3^n`.
///
/// With `m = 1` the second range is empty and only the first applies.
pub fn walsh_direct_check(spec: &WalshSpectrum) -> Result<MinimalityVerdict> {
    check_direct_preconditions(spec)?;
    let (n, m) = (spec.n(), spec.m());
    let rows = two_re_rows(spec);

    // Condition (1), parallel over mu; prune units above the best hit.
    let best_mu = AtomicUsize::new(usize::MAX);
    let mut hits: Vec<(usize, usize, usize, usize, i64)> = (1..pow3(m))
        .into_par_iter()
        .filter_map(|mu| {
            if mu > best_mu.load(Ordering::Relaxed) {
                return None;
            }
            triple_violation(&rows[mu], n).map(|(a, b, c, th)| {
                best_mu.fetch_min(mu, Ordering::Relaxed);
                (mu, a, b, c, th)
            })
        })
        .collect();
    hits.sort_by_key(|&(mu, a, b, _, th)| (mu, a, b, if th == 1 { 0 } else { 1 }));
    if let Some(&(mu, a, b, c, theta)) = hits.first() {
        return Ok(MinimalityVerdict {
            method: Method::WalshDirect,
            verdict: Verdict::NotMinimal,
            witness: Some(Witness::SumTriple { mu, nus: [a, b, c], theta }),
        });
    }

    // Condition (2): ordered pairs mu != +-mu'.
    let units: Vec<(usize, usize)> = (1..pow3(m))
        .flat_map(|mu| {
            (1..pow3(m))
                .filter(move |&mu2| mu2 != mu && mu2 != rank_neg(mu, m))
                .map(move |mu2| (mu, mu2))
        })
        .collect();
    let best_mu = AtomicUsize::new(usize::MAX);
    let mut hits: Vec<(usize, usize, usize, usize)> = units
        .into_par_iter()
        .filter_map(|(mu, mu2)| {
            if mu > best_mu.load(Ordering::Relaxed) {
                return None;
            }
            let c = &rows[rank_add(mu, mu2, m)];
            let dneg2: Vec<i64> =
                rows[rank_sub(mu, mu2, m)].iter().map(|&v| -2 * v).collect();
            let goal = target(n);
            let size = pow3(n);
            for nu in 0..size {
                let ta = rows[mu][nu];
                let mut w = GroupWalker::new(nu, n);
                for nu2 in 0..size {
                    let t = ta + rows[mu2][nu2] + c[w.sum_rank()] + dneg2[w.diff_rank()];
                    w.advance();
                    if t == goal {
                        best_mu.fetch_min(mu, Ordering::Relaxed);
                        return Some((mu, nu, mu2, nu2));
                    }
                }
            }
            None
        })
        .collect();
    hits.sort();
    if let Some(&(mu1, nu1, mu2, nu2)) = hits.first() {
        return Ok(MinimalityVerdict {
            method: Method::WalshDirect,
            verdict: Verdict::NotMinimal,
            witness: Some(Witness::CrossQuad { mu1, nu1, mu2, nu2 }),
        });
    }

    Ok(MinimalityVerdict { method: Method::WalshDirect, verdict: Verdict::Minimal, witness: None })
}

/// Sufficient bound: if `25 |W(mu, nu)|^2 < 3^{2n}` for every `mu != 0`,
/// the code is minimal. Never returns `NotMinimal`; without `F(0) = 0`
/// the hypothesis fails and the answer is `Inconclusive`.
pub fn norm_bound_check(spec: &WalshSpectrum) -> MinimalityVerdict {
    let (n, m) = (spec.n(), spec.m());
    let full = 3i64.pow(2 * n as u32);
    let bound_holds = spec.origin_is_zero()
        && (1..pow3(m)).all(|mu| spec.row(mu).values().iter().all(|v| 25 * v.norm() < full));
    MinimalityVerdict {
        method: Method::NormBound,
        verdict: if bound_holds { Verdict::Minimal } else { Verdict::Inconclusive },
        witness: None,
    }
}

/// The weight-identity criterion: the code is minimal iff
/// `wt(c1 + c2) + wt(c2 - c1) != 2 wt(c2) - wt(c1)` for all pairs of
/// codewords with `c1, c2, c1 + c2, c1 - c2` all nonzero. Runs on weights
/// derived from the spectrum; `O(3^{2(n+m)})`.
pub fn pairwise_weight_check(
    spec: &WalshSpectrum,
) -> Result<(bool, Option<((usize, usize), (usize, usize))>)> {
    check_direct_preconditions(spec)?;
    let (n, m) = (spec.n(), spec.m());
    let total = pow3(n + m);
    let half = pow3(n);
    let mut weights = vec![0i64; total];
    for mu in 0..pow3(m) {
        for nu in 0..half {
            weights[mu * half + nu] = codes::weight_via_walsh(spec, mu, nu)? as i64;
        }
    }
    // Combined rank mu*3^n + nu is the little-endian rank of (nu, mu), so
    // group operations apply to it directly.
    let nm = n + m;
    for c1 in 1..total {
        let w1 = weights[c1];
        let mut w = GroupWalker::new(c1, nm);
        for c2 in 0..total {
            let (cs, cd) = (w.sum_rank(), w.diff_rank());
            w.advance();
            if c2 == 0 || cs == 0 || cd == 0 {
                continue;
            }
            if weights[cs] + weights[cd] == 2 * weights[c2] - w1 {
                let split = |r: usize| (r / half, r % half);
                return Ok((false, Some((split(c1), split(c2)))));
            }
        }
    }
    Ok((true, None))
}

/// Spectra of a composite `F = (f, G)`: the scalar row of `f`, all rows of
/// `G`, the rows of every mixture `A_t = f + t.G` (`t != 0`), and the full
/// spectrum of the assembled `F`. Everything is computed once, here.
pub struct CompositeSpectra {
    n: usize,
    /// Output dimension of the assembled `F`.
    m: usize,
    f_row: SpectrumRow,
    g_spec: WalshSpectrum,
    a_rows: Vec<SpectrumRow>,
    full_spec: WalshSpectrum,
}

impl CompositeSpectra {
    pub fn compute(f: &FunctionTable, g: &FunctionTable) -> Result<CompositeSpectra> {
        if f.m() != 1 {
            return Err(Error::DimensionMismatch { expected: 1, got: f.m() });
        }
        if f.n() != g.n() {
            return Err(Error::DimensionMismatch { expected: f.n(), got: g.n() });
        }
        let n = f.n();
        let m = 1 + g.m();
        let unit = TernaryVector::from_rank(1, 1)?;
        let f_row = fast_row(f, &unit)?;
        let g_spec = WalshSpectrum::compute(g);
        let a_rows: Result<Vec<SpectrumRow>> = (1..pow3(g.m()))
            .into_par_iter()
            .map(|mu_t| {
                let mt = TernaryVector::from_rank(mu_t, g.m())?;
                let gc = g.component(&mt)?;
                let a = FunctionTable::scalar_combination(&[(1, f), (1, &gc)])?;
                fast_row(&a, &unit)
            })
            .collect();
        let full = compose(f, g)?;
        let full_spec = WalshSpectrum::compute(&full);
        Ok(CompositeSpectra { n, m, f_row, g_spec, a_rows: a_rows?, full_spec })
    }

    pub fn from_spec(cs: &CompositeSpec) -> Result<CompositeSpectra> {
        CompositeSpectra::compute(cs.f(), cs.g())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn f_row(&self) -> &SpectrumRow {
        &self.f_row
    }

    #[inline]
    pub fn g_spec(&self) -> &WalshSpectrum {
        &self.g_spec
    }

    /// Row of `A_t` for `t != 0` (rank in `F_3^{m-1}`).
    #[inline]
    pub fn a_row(&self, mu_t_rank: usize) -> &SpectrumRow {
        &self.a_rows[mu_t_rank - 1]
    }

    /// Spectrum of the assembled `F = (f, G)`.
    #[inline]
    pub fn full_spec(&self) -> &WalshSpectrum {
        &self.full_spec
    }
}

/// The premises the composite construction places on `f` and `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositePremises {
    /// No three-point combination of `W_f` reaches `3^n`.
    pub scalar_sum_ok: bool,
    /// `max Re(W_f) >= 0`, `min Re(W_f) <= 0` and
    /// `3 max Re(W_f) - 2 min Re(W_f) >= 3^n` (so `C_f` breaks the AB
    /// threshold).
    pub scalar_spread_ok: bool,
    /// The code of `G` alone is minimal.
    pub g_code_minimal: bool,
    /// No component of the assembled `F` is affine.
    pub components_nonaffine: bool,
}

impl CompositePremises {
    pub fn all_hold(&self) -> bool {
        self.scalar_sum_ok
            && self.scalar_spread_ok
            && self.g_code_minimal
            && self.components_nonaffine
    }
}

/// Evaluates every composite premise by exhaustive enumeration.
pub fn composite_premises(cs: &CompositeSpectra) -> CompositePremises {
    let n = cs.n;
    let f2 = cs.f_row.two_re_vec();
    let scalar_sum_ok = triple_violation(&f2, n).is_none();
    let (max2, min2) = f2.iter().fold((i64::MIN, i64::MAX), |(hi, lo), &v| (hi.max(v), lo.min(v)));
    let scalar_spread_ok = max2 >= 0 && min2 <= 0 && 3 * max2 - 2 * min2 >= target(n);
    let g_code_minimal =
        matches!(walsh_direct_check(&cs.g_spec), Ok(v) if v.verdict == Verdict::Minimal);
    let components_nonaffine = (1..pow3(cs.m)).all(|mu| !cs.full_spec.row(mu).is_affine_shape());
    CompositePremises { scalar_sum_ok, scalar_spread_ok, g_code_minimal, components_nonaffine }
}

/// Minimality of the composite code, decided from the spectra of `f`, `G`
/// and the mixtures alone. Requires the composite premises (checked; a
/// violation is an error). Minimal iff:
///
/// 1. no mixture row `A_t` has a violating triple;
/// 2. for every `t != 0`, no `(nu, nu')` and single-`-2` pattern has
///    `2Re(l1 W_f(nu) + l2 W_G(t,nu') + l3 W_{A_t}(nu+nu') +
///    l4 W_{A_{2t}}(nu-nu')) = 2 * 3^n`;
/// 3. the same with rows `A_t, G_{t'}, A_{t+t'}, A_{t-t'}` for
///    `t, t', t+t', t-t'` all nonzero (empty when `m = 2`).
pub fn composite_check(cs: &CompositeSpectra) -> Result<MinimalityVerdict> {
    let origin_ok = cs.f_row.row_sum() == crate::gf3::EisensteinInt::new(3i64.pow(cs.n as u32), 0)
        && cs.g_spec.origin_is_zero();
    if !origin_ok {
        return Err(Error::NonzeroOrigin);
    }
    let premises = composite_premises(cs);
    if !premises.all_hold() {
        return Err(Error::VerificationFailed(format!(
            "composite premises violated: {premises:?}"
        )));
    }
    let n = cs.n;
    let mt_size = pow3(cs.m - 1);
    let f2 = cs.f_row.two_re_vec();
    let g2: Vec<Vec<i64>> = (0..mt_size).map(|t| cs.g_spec.row(t).two_re_vec()).collect();
    let a2: Vec<Vec<i64>> = (1..mt_size).map(|t| cs.a_row(t).two_re_vec()).collect();
    let a2 = |t: usize| -> &[i64] { &a2[t - 1] };

    // Condition (1): triples over each mixture row.
    let best = AtomicUsize::new(usize::MAX);
    let mut hits: Vec<(usize, usize, usize, usize, i64)> = (1..mt_size)
        .into_par_iter()
        .filter_map(|t| {
            if t > best.load(Ordering::Relaxed) {
                return None;
            }
            triple_violation(a2(t), n).map(|(x, y, z, th)| {
                best.fetch_min(t, Ordering::Relaxed);
                (t, x, y, z, th)
            })
        })
        .collect();
    hits.sort_by_key(|&(t, x, y, _, th)| (t, x, y, if th == 1 { 0 } else { 1 }));
    if let Some(&(mu_t, x, y, z, theta)) = hits.first() {
        return Ok(MinimalityVerdict {
            method: Method::WalshComposite,
            verdict: Verdict::NotMinimal,
            witness: Some(Witness::CompositeTriple { mu_t, nus: [x, y, z], theta }),
        });
    }

    // Condition (2): rows (f, G_t, A_t, A_{2t}).
    let best = AtomicUsize::new(usize::MAX);
    let mut hits: Vec<(usize, usize, usize, [i64; 4])> = (1..mt_size)
        .into_par_iter()
        .filter_map(|t| {
            if t > best.load(Ordering::Relaxed) {
                return None;
            }
            let t2 = rank_add(t, t, cs.m - 1);
            quad_violation(&f2, &g2[t], a2(t), a2(t2), n).map(|(nu, nu2, lambdas)| {
                best.fetch_min(t, Ordering::Relaxed);
                (t, nu, nu2, lambdas)
            })
        })
        .collect();
    hits.sort_by_key(|&(t, nu, nu2, l)| (t, nu, nu2, l.iter().position(|&x| x == -2)));
    if let Some(&(mu_t, nu1, nu2, lambdas)) = hits.first() {
        return Ok(MinimalityVerdict {
            method: Method::WalshComposite,
            verdict: Verdict::NotMinimal,
            witness: Some(Witness::CompositeQuad {
                condition: 2,
                mu_t,
                mu_t2: 0,
                nu1,
                nu2,
                lambdas,
            }),
        });
    }

    // Condition (3): rows (A_t, G_{t'}, A_{t+t'}, A_{t-t'}); vacuous for m = 2.
    let mm = cs.m - 1;
    let pairs: Vec<(usize, usize)> = (1..mt_size)
        .flat_map(|t| (1..mt_size).map(move |t2| (t, t2)))
        .filter(|&(t, t2)| rank_add(t, t2, mm) != 0 && rank_sub(t, t2, mm) != 0)
        .collect();
    let best = AtomicUsize::new(usize::MAX);
    let mut hits: Vec<(usize, usize, usize, usize, [i64; 4])> = pairs
        .into_par_iter()
        .filter_map(|(t, t2)| {
            if t > best.load(Ordering::Relaxed) {
                return None;
            }
            let tp = rank_add(t, t2, cs.m - 1);
            let tm = rank_sub(t, t2, cs.m - 1);
            quad_violation(a2(t), &g2[t2], a2(tp), a2(tm), n).map(|(nu, nu2, lambdas)| {
                best.fetch_min(t, Ordering::Relaxed);
                (t, t2, nu, nu2, lambdas)
            })
        })
        .collect();
    hits.sort_by_key(|&(t, t2, nu, nu2, l)| (t, nu, t2, nu2, l.iter().position(|&x| x == -2)));
    if let Some(&(mu_t, mu_t2, nu1, nu2, lambdas)) = hits.first() {
        return Ok(MinimalityVerdict {
            method: Method::WalshComposite,
            verdict: Verdict::NotMinimal,
            witness: Some(Witness::CompositeQuad {
                condition: 3,
                mu_t,
                mu_t2,
                nu1,
                nu2,
                lambdas,
            }),
        });
    }

    Ok(MinimalityVerdict {
        method: Method::WalshComposite,
        verdict: Verdict::Minimal,
        witness: None,
    })
}

/// Verifies that the assembled spectrum decomposes into the block rows:
/// `W_F((0,t), .) = W_G(t, .)`, `W_F((1,t), .) = W_{A_t}(.)` (with
/// `A_0 = f`), and `W_F((-1,t), nu) = conj(W_{A_{2t}}(-nu))`. Returns the
/// first mismatching `(mu, nu)` rank pair, or `None` if all cases hold.
pub fn block_spectra_check(cs: &CompositeSpectra) -> Option<(usize, usize)> {
    let n = cs.n;
    let size = pow3(n);
    for mu in 1..pow3(cs.m) {
        let (mu1, mt) = (mu % 3, mu / 3);
        let full = cs.full_spec.row(mu);
        let mismatch = match (mu1, mt) {
            (0, t) => (0..size).find(|&nu| full.value(nu) != cs.g_spec.row(t).value(nu)),
            (1, 0) => (0..size).find(|&nu| full.value(nu) != cs.f_row.value(nu)),
            (1, t) => (0..size).find(|&nu| full.value(nu) != cs.a_row(t).value(nu)),
            (2, 0) => (0..size)
                .find(|&nu| full.value(nu) != cs.f_row.value(rank_neg(nu, n)).conj()),
            (2, t) => {
                let t2 = rank_add(t, t, cs.m - 1);
                (0..size)
                    .find(|&nu| full.value(nu) != cs.a_row(t2).value(rank_neg(nu, n)).conj())
            }
            _ => unreachable!(),
        };
        if let Some(nu) = mismatch {
            return Some((mu, nu));
        }
    }
    None
}

/// Everything the AB-violating pipeline constructs and proves.
#[derive(Debug)]
pub struct AbViolationOutcome {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub m: usize,
    pub length: usize,
    pub dimension: usize,
    pub min_distance: usize,
    pub expected_min_distance: usize,
    pub w_min: usize,
    pub w_max: usize,
    pub ab_satisfied: bool,
    pub ab_spectral_violation: bool,
    pub premises: CompositePremises,
    pub composite_verdict: MinimalityVerdict,
    pub direct_verdict: MinimalityVerdict,
    pub distribution: WeightDistribution,
    pub composite: CompositeSpec,
}

/// Builds the composite instance with the deterministic choices — `E` the
/// coordinate subspace of dimension `r`, `a = e_0`, `b = e_1`, `f` the
/// indicator-quadratic seed, `G` a dummy-extended field-multiplication
/// bent function — and verifies end to end that the resulting code is a
/// `[3^n - 1, n + m, 3^{n-1} + 3^{n-2} + 3^{r-1}]` minimal code violating
/// the AB condition.
pub fn build_and_verify_ab_violating(
    n: usize,
    r: usize,
    s: usize,
    m: usize,
) -> Result<AbViolationOutcome> {
    if n > crate::MAX_N {
        return Err(Error::Parameter(format!("n = {n} exceeds cap {}", crate::MAX_N)));
    }
    if m > crate::MAX_M {
        return Err(Error::Parameter(format!("m = {m} exceeds cap {}", crate::MAX_M)));
    }
    if n <= 6 {
        return Err(Error::Parameter(format!("n must exceed 6, got {n}")));
    }
    if m < 2 {
        return Err(Error::Parameter(format!("m must be at least 2, got {m}")));
    }
    if r < 2 {
        return Err(Error::Parameter(format!(
            "r must be at least 2 so a, b stay independent modulo the dual, got {r}"
        )));
    }
    if n - r <= 3 {
        return Err(Error::Parameter(format!("n - r must exceed 3, got n = {n}, r = {r}")));
    }
    if s > n - 6 {
        return Err(Error::Parameter(format!("s must satisfy s <= n - 6, got s = {s}, n = {n}")));
    }
    if (n - s) % 2 != 0 {
        return Err(Error::Parameter(format!(
            "n and s must have the same parity for the plateaued seed, got n = {n}, s = {s}"
        )));
    }
    let k = (n - s) / 2;
    if m - 1 > k {
        return Err(Error::Parameter(format!(
            "G needs m - 1 <= (n - s)/2 components, got m - 1 = {}, (n - s)/2 = {k}",
            m - 1
        )));
    }

    let subspace = SubspaceSpec::coordinate(n, r)?;
    let a = TernaryVector::standard_basis(n, 0);
    let b = TernaryVector::standard_basis(n, 1);
    let f = indicator_quadratic(&subspace, &a, &b)?;
    let g_seed = field_mult_bent(k, m - 1)?;
    let g = if s > 0 { extend_with_dummy(&g_seed, s)? } else { g_seed };

    let g_class = classify_spectrum(&WalshSpectrum::compute(&g));
    if g_class.uniform_s != Some(s) || !g_class.vectorial_regular {
        return Err(Error::VerificationFailed(format!(
            "seed G is not vectorial regular {s}-plateaued: {g_class}"
        )));
    }

    let composite = CompositeSpec::new(f, g, subspace, a, b, s)?;
    let spectra = CompositeSpectra::from_spec(&composite)?;

    if let Some((mu, nu)) = block_spectra_check(&spectra) {
        return Err(Error::VerificationFailed(format!(
            "block spectrum decomposition fails at (mu, nu) = ({mu}, {nu})"
        )));
    }
    let premises = composite_premises(&spectra);
    if !premises.all_hold() {
        return Err(Error::VerificationFailed(format!(
            "composite premises do not hold: {premises:?}"
        )));
    }

    let composite_verdict = composite_check(&spectra)?;
    let direct_verdict = walsh_direct_check(spectra.full_spec())?;
    if composite_verdict.verdict != direct_verdict.verdict {
        return Err(Error::VerificationFailed(format!(
            "composite and direct verdicts disagree: {composite_verdict:?} vs {direct_verdict:?}"
        )));
    }
    if composite_verdict.verdict != Verdict::Minimal {
        return Err(Error::VerificationFailed(
            "constructed code is not minimal".to_string(),
        ));
    }

    let dimension = codes::check_dimension(spectra.full_spec())?;
    let distribution = codes::weight_distribution(spectra.full_spec())?;
    let ab = codes::ab_status(&distribution)?;
    let spectral_violation = codes::ab_spectral_violation(spectra.full_spec());
    let min_distance = codes::min_distance(&distribution)?;
    let expected_min_distance = pow3(n - 1) + pow3(n - 2) + pow3(r - 1);
    if min_distance != expected_min_distance {
        return Err(Error::VerificationFailed(format!(
            "minimum distance {min_distance} differs from expected {expected_min_distance}"
        )));
    }
    if ab.satisfies_ab {
        return Err(Error::VerificationFailed(
            "constructed code satisfies the AB condition; expected a violation".to_string(),
        ));
    }
    if !spectral_violation {
        return Err(Error::VerificationFailed(
            "spectral AB-violation test did not fire".to_string(),
        ));
    }

    Ok(AbViolationOutcome {
        n,
        r,
        s,
        m,
        length: pow3(n) - 1,
        dimension,
        min_distance,
        expected_min_distance,
        w_min: ab.w_min,
        w_max: ab.w_max,
        ab_satisfied: ab.satisfies_ab,
        ab_spectral_violation: spectral_violation,
        premises,
        composite_verdict,
        direct_verdict,
        distribution,
        composite,
    })
}
