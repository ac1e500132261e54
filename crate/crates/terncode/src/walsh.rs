//! Exact Walsh spectra of `(n, m)`-functions.
//!
//! The Walsh transform of `F` at `(mu, nu)` is the character sum
//! `W_F(mu, nu) = sum_x w^{mu.F(x) - nu.x}`, an Eisenstein integer. Two
//! implementations are provided: a direct double loop (`naive_row`, the
//! oracle) and a radix-3 decimation (`fast_row` / [`WalshSpectrum::compute`],
//! the production path). They agree exactly on every input.
//!
//! Butterfly order is coordinate 0 first (little-endian), matching the rank
//! convention, so outputs are deterministic down to the evaluation order.

use crate::error::{Error, Result};
use crate::functions::FunctionTable;
use crate::gf3::{rank_dot, EisensteinInt, TernaryVector, Trit};
use crate::pow3;
use rayon::prelude::*;
use std::io::Write;

/// One row of a spectrum: `W(mu, nu)` for a fixed `mu`, indexed by `rank(nu)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumRow {
    n: usize,
    values: Vec<EisensteinInt>,
}

impl SpectrumRow {
    pub fn new(n: usize, values: Vec<EisensteinInt>) -> SpectrumRow {
        assert_eq!(values.len(), pow3(n));
        SpectrumRow { n, values }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn value(&self, nu_rank: usize) -> EisensteinInt {
        self.values[nu_rank]
    }

    #[inline]
    pub fn values(&self) -> &[EisensteinInt] {
        &self.values
    }

    /// `2 Re(W)` per point, the integers every exact comparison runs on.
    pub fn two_re_vec(&self) -> Vec<i64> {
        self.values.iter().map(|v| v.two_re()).collect()
    }

    /// `sum_nu |W(nu)|^2`; equals `3^{2n}` for any genuine function row.
    pub fn parseval_sum(&self) -> i64 {
        self.values.iter().map(|v| v.norm()).sum()
    }

    /// `sum_nu W(nu)`; equals `3^n w^{f(0)}` for the row of `f`.
    pub fn row_sum(&self) -> EisensteinInt {
        self.values.iter().fold(EisensteinInt::ZERO, |acc, &v| acc + v)
    }

    /// A single value of squared magnitude `3^{2n}` — the spectral shape of
    /// an affine function (Parseval forces all other values to zero).
    pub fn is_affine_shape(&self) -> bool {
        let full = 3i64.pow(2 * self.n as u32);
        self.values.iter().any(|v| v.norm() == full)
    }
}

/// The full exact array `W_F(mu, nu)`, rows indexed by `rank(mu)`.
#[derive(Debug, Clone)]
pub struct WalshSpectrum {
    n: usize,
    m: usize,
    rows: Vec<SpectrumRow>,
}

impl WalshSpectrum {
    /// Computes all `3^m` rows with the fast transform, one row per `mu`,
    /// in parallel. Memory per row stays `O(3^n)`.
    pub fn compute(f: &FunctionTable) -> WalshSpectrum {
        let (n, m) = (f.n(), f.m());
        let rows: Vec<SpectrumRow> = (0..pow3(m))
            .into_par_iter()
            .map(|mu_rank| fast_row_by_rank(f, mu_rank))
            .collect();
        WalshSpectrum { n, m, rows }
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
    pub fn row(&self, mu_rank: usize) -> &SpectrumRow {
        &self.rows[mu_rank]
    }

    #[inline]
    pub fn rows(&self) -> &[SpectrumRow] {
        &self.rows
    }

    /// `F(0) = 0` holds iff every row sums to exactly `3^n`.
    pub fn origin_is_zero(&self) -> bool {
        let expect = EisensteinInt::new(3i64.pow(self.n as u32), 0);
        self.rows.iter().all(|r| r.row_sum() == expect)
    }

    /// CSV export: `rank_mu,rank_nu,re_unit,om_unit`, rows ascending.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "rank_mu,rank_nu,re_unit,om_unit")?;
        for (mu_rank, row) in self.rows.iter().enumerate() {
            for (nu_rank, v) in row.values().iter().enumerate() {
                writeln!(out, "{mu_rank},{nu_rank},{},{}", v.re_unit, v.om_unit)?;
            }
        }
        Ok(())
    }
}

/// Direct evaluation of one row by the defining double loop. This is the
/// oracle the fast path is checked against; keep it boring.
pub fn naive_row(f: &FunctionTable, mu: &TernaryVector) -> Result<SpectrumRow> {
    if mu.n() != f.m() {
        return Err(Error::DimensionMismatch { expected: f.m(), got: mu.n() });
    }
    let n = f.n();
    let size = pow3(n);
    let mu_rank = mu.rank();
    let mut values = Vec::with_capacity(size);
    for nu_rank in 0..size {
        let mut acc = EisensteinInt::ZERO;
        for x in 0..size {
            let e_mu = rank_dot(mu_rank, f.value(x) as usize, f.m());
            let e_nu = rank_dot(nu_rank, x, n);
            let e = Trit::new((e_mu + 3 - e_nu) % 3);
            acc = acc + EisensteinInt::zeta_pow(e);
        }
        values.push(acc);
    }
    Ok(SpectrumRow::new(n, values))
}

/// One row via the radix-3 fast transform.
pub fn fast_row(f: &FunctionTable, mu: &TernaryVector) -> Result<SpectrumRow> {
    if mu.n() != f.m() {
        return Err(Error::DimensionMismatch { expected: f.m(), got: mu.n() });
    }
    Ok(fast_row_by_rank(f, mu.rank()))
}

fn fast_row_by_rank(f: &FunctionTable, mu_rank: usize) -> SpectrumRow {
    let n = f.n();
    // mu . y for every output rank y, so the inner loop is table lookups.
    let mu_dot: Vec<u8> = (0..pow3(f.m())).map(|y| rank_dot(mu_rank, y, f.m())).collect();
    let mut values: Vec<EisensteinInt> = (0..pow3(n))
        .map(|x| EisensteinInt::zeta_pow(Trit::new(mu_dot[f.value(x) as usize])))
        .collect();
    transform_in_place(&mut values, n);
    SpectrumRow::new(n, values)
}

/// In-place transform: `out[nu] = sum_x in[x] w^{-nu.x}`, one butterfly pass
/// per coordinate starting at coordinate 0.
pub fn transform_in_place(values: &mut [EisensteinInt], n: usize) {
    assert_eq!(values.len(), pow3(n));
    let mut stride = 1usize;
    for _ in 0..n {
        let block = stride * 3;
        let mut base = 0usize;
        while base < values.len() {
            for off in base..base + stride {
                let a = values[off];
                let b = values[off + stride];
                let c = values[off + 2 * stride];
                // digit 0: a + b + c
                // digit 1: a + w^2 b + w c   (kernel w^{-1*digit})
                // digit 2: a + w b + w^2 c
                values[off] = a + b + c;
                values[off + stride] = a + b.mul_omega2() + c.mul_omega();
                values[off + 2 * stride] = a + b.mul_omega() + c.mul_omega2();
            }
            base += block;
        }
        stride = block;
    }
}

/// Inverse transform at a single point: computes `sum_x W(x) w^{nu.x}`,
/// checks exact divisibility by `3^n` and that the quotient is a unit
/// `w^j`, and returns `j = f(nu)`.
pub fn inverse_point(row: &SpectrumRow, nu: &TernaryVector) -> Result<Trit> {
    if nu.n() != row.n() {
        return Err(Error::DimensionMismatch { expected: row.n(), got: nu.n() });
    }
    let n = row.n();
    let nu_rank = nu.rank();
    let mut acc = EisensteinInt::ZERO;
    for x in 0..pow3(n) {
        let e = Trit::new(rank_dot(nu_rank, x, n));
        acc = acc + row.value(x) * EisensteinInt::zeta_pow(e);
    }
    let unit = acc
        .div_exact(3i64.pow(n as u32))
        .ok_or(Error::NotASpectrum { nu_rank })?;
    for j in 0..3u8 {
        if unit == EisensteinInt::zeta_pow(Trit::new(j)) {
            return Ok(Trit::new(j));
        }
    }
    Err(Error::NotASpectrum { nu_rank })
}

/// The autocorrelation sum `sum_nu W(nu) conj(W(nu + tau))`. For any
/// genuine function row it equals `3^{2n}` at `tau = 0` and `0` elsewhere.
pub fn titsworth_sum(row: &SpectrumRow, tau: &TernaryVector) -> Result<EisensteinInt> {
    if tau.n() != row.n() {
        return Err(Error::DimensionMismatch { expected: row.n(), got: tau.n() });
    }
    let n = row.n();
    let tau_rank = tau.rank();
    let mut acc = EisensteinInt::ZERO;
    for nu in 0..pow3(n) {
        let shifted = crate::gf3::rank_add(nu, tau_rank, n);
        acc = acc + row.value(nu) * row.value(shifted).conj();
    }
    Ok(acc)
}
