//! Function tables `F: F_3^n -> F_3^m`, concrete constructions, and
//! spectral classification (bent / s-plateaued / regular).
//!
//! Tables are exhaustive: entry `x` holds the little-endian rank of
//! `F(x)` for input rank `x`. The text format `TFT/1` serializes a table
//! bit-exactly:
//!
//! ```text
//! tft 1 <n> <m>
//! <3^n lines, line i = m base-3 digits of F(i), most significant output
//!  coordinate first>
//! ```

use crate::error::{Error, Result};
use crate::gf3::{rank_dot, EisensteinInt, ExtField, SubspaceSpec, TernaryVector};
use crate::walsh::{SpectrumRow, WalshSpectrum};
use crate::{pow3, MAX_M, MAX_N};
use rayon::prelude::*;
use std::fmt;
use std::io::{BufRead, Write};

/// Exhaustive value table of an `(n, m)`-function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionTable {
    n: usize,
    m: usize,
    table: Vec<u16>,
}

impl FunctionTable {
    pub fn new(n: usize, m: usize, table: Vec<u16>) -> Result<FunctionTable> {
        if n == 0 || n > MAX_N {
            return Err(Error::CapExceeded { what: "n", value: n, cap: MAX_N });
        }
        if m == 0 || m > MAX_M {
            return Err(Error::CapExceeded { what: "m", value: m, cap: MAX_M });
        }
        if table.len() != pow3(n) {
            return Err(Error::DimensionMismatch { expected: pow3(n), got: table.len() });
        }
        let out = pow3(m) as u16;
        if let Some(bad) = table.iter().position(|&v| v >= out) {
            return Err(Error::RankOutOfRange { rank: table[bad] as usize, n: m });
        }
        Ok(FunctionTable { n, m, table })
    }

    pub fn from_fn(n: usize, m: usize, f: impl FnMut(usize) -> u16) -> Result<FunctionTable> {
        if n > MAX_N {
            return Err(Error::CapExceeded { what: "n", value: n, cap: MAX_N });
        }
        FunctionTable::new(n, m, (0..pow3(n)).map(f).collect())
    }

    pub fn constant_zero(n: usize, m: usize) -> FunctionTable {
        FunctionTable::new(n, m, vec![0; pow3(n)]).expect("valid dimensions")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Output rank at input rank `x`.
    #[inline]
    pub fn value(&self, x: usize) -> u16 {
        self.table[x]
    }

    pub fn output_vec(&self, x: usize) -> TernaryVector {
        TernaryVector::from_rank(self.table[x] as usize, self.m).expect("entry in range")
    }

    #[inline]
    pub fn vanishes_at_origin(&self) -> bool {
        self.table[0] == 0
    }

    /// The scalar component `mu.F` as an `(n, 1)` table.
    pub fn component(&self, mu: &TernaryVector) -> Result<FunctionTable> {
        if mu.n() != self.m {
            return Err(Error::DimensionMismatch { expected: self.m, got: mu.n() });
        }
        let mu_rank = mu.rank();
        let dot: Vec<u16> =
            (0..pow3(self.m)).map(|y| rank_dot(mu_rank, y, self.m) as u16).collect();
        FunctionTable::new(self.n, 1, self.table.iter().map(|&v| dot[v as usize]).collect())
    }

    /// Pointwise `sum coeff_i * f_i` of scalar tables over `F_3`.
    pub fn scalar_combination(parts: &[(u8, &FunctionTable)]) -> Result<FunctionTable> {
        let first = parts.first().expect("at least one part").1;
        let n = first.n;
        for (_, f) in parts {
            if f.m != 1 {
                return Err(Error::DimensionMismatch { expected: 1, got: f.m });
            }
            if f.n != n {
                return Err(Error::DimensionMismatch { expected: n, got: f.n });
            }
        }
        FunctionTable::from_fn(n, 1, |x| {
            let mut acc = 0u16;
            for &(c, f) in parts {
                acc += (c as u16 % 3) * f.table[x];
            }
            acc % 3
        })
    }

    /// Serializes as `TFT/1`; byte-exact, ends with a newline.
    pub fn write_tft<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "tft 1 {} {}", self.n, self.m)?;
        let mut line = String::with_capacity(self.m);
        for &v in &self.table {
            line.clear();
            for j in (0..self.m).rev() {
                let digit = (v as usize / pow3(j)) % 3;
                line.push(char::from(b'0' + digit as u8));
            }
            writeln!(out, "{line}")?;
        }
        Ok(())
    }

    /// Parses `TFT/1`; strict about line count and digit count.
    pub fn read_tft<R: BufRead>(input: R) -> Result<FunctionTable> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::TftParse("empty input".into()))?
            .map_err(|e| Error::TftParse(e.to_string()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 4 || parts[0] != "tft" || parts[1] != "1" {
            return Err(Error::TftParse(format!("bad header: {header:?}")));
        }
        let n: usize =
            parts[2].parse().map_err(|_| Error::TftParse(format!("bad n: {}", parts[2])))?;
        let m: usize =
            parts[3].parse().map_err(|_| Error::TftParse(format!("bad m: {}", parts[3])))?;
        if n == 0 || n > MAX_N || m == 0 || m > MAX_M {
            return Err(Error::TftParse(format!("dimensions out of range: n={n} m={m}")));
        }
        let size = pow3(n);
        let mut table = Vec::with_capacity(size);
        for i in 0..size {
            let line = lines
                .next()
                .ok_or_else(|| Error::TftParse(format!("expected {size} rows, got {i}")))?
                .map_err(|e| Error::TftParse(e.to_string()))?;
            let digits = line.trim_end_matches('\r');
            if digits.len() != m {
                return Err(Error::TftParse(format!(
                    "row {i}: expected {m} digits, got {:?}",
                    digits
                )));
            }
            let mut v = 0u16;
            for ch in digits.chars() {
                let d = match ch {
                    '0' => 0u16,
                    '1' => 1,
                    '2' => 2,
                    _ => return Err(Error::TftParse(format!("row {i}: bad digit {ch:?}"))),
                };
                v = v * 3 + d;
            }
            table.push(v);
        }
        if let Some(extra) = lines.next() {
            let extra = extra.map_err(|e| Error::TftParse(e.to_string()))?;
            if !extra.trim().is_empty() {
                return Err(Error::TftParse(format!("trailing content: {extra:?}")));
            }
        }
        FunctionTable::new(n, m, table)
    }
}

/// `f(x) = 1_E(x) + (a.x)(b.x) + 2`, the scalar seed of the AB-violating
/// construction. Requires `a, b` independent, `a, b, a+b, a-b` all outside
/// `E^perp`, and `n - dim(E) > 2`; reports which constraint fails.
pub fn indicator_quadratic(
    e: &SubspaceSpec,
    a: &TernaryVector,
    b: &TernaryVector,
) -> Result<FunctionTable> {
    let n = e.ambient_n();
    if a.n() != n {
        return Err(Error::DimensionMismatch { expected: n, got: a.n() });
    }
    if b.n() != n {
        return Err(Error::DimensionMismatch { expected: n, got: b.n() });
    }
    if n < e.dim() + 3 {
        return Err(Error::IndicatorConstraint { which: "n - dim(E) must exceed 2" });
    }
    if SubspaceSpec::new(n, vec![a.clone(), b.clone()]).is_err() {
        return Err(Error::DependentDirections);
    }
    let eperp = e.dual();
    let checks: [(&'static str, TernaryVector); 4] = [
        ("a lies in the dual of E", a.clone()),
        ("b lies in the dual of E", b.clone()),
        ("a+b lies in the dual of E", a.add(b)?),
        ("a-b lies in the dual of E", a.sub(b)?),
    ];
    for (which, v) in &checks {
        if eperp.contains(v) {
            return Err(Error::IndicatorConstraint { which });
        }
    }
    let indicator = e.indicator_table();
    let (a_rank, b_rank) = (a.rank(), b.rank());
    FunctionTable::from_fn(n, 1, |x| {
        let ind = indicator[x] as u16;
        let quad = (rank_dot(a_rank, x, n) * rank_dot(b_rank, x, n)) as u16;
        (ind + quad + 2) % 3
    })
}

/// `F(x, y) =` the first `m` trace coordinates of `x * y` in `GF(3^k)`:
/// output coordinate `i` is `tr(g^i * x * y)` with `g` the fixed field
/// generator. Every component is a regular bent function on `F_3^{2k}`
/// (the classifier verifies this; nothing downstream assumes it).
pub fn field_mult_bent(k: usize, m: usize) -> Result<FunctionTable> {
    let field = ExtField::new(k)?;
    if m == 0 || m > k {
        return Err(Error::TooManyComponents { m, k });
    }
    let n = 2 * k;
    if n > MAX_N {
        return Err(Error::CapExceeded { what: "n", value: n, cap: MAX_N });
    }
    let g = field.generator();
    let mut gpows = Vec::with_capacity(m);
    let mut cur = field.one();
    for _ in 0..m {
        gpows.push(cur.clone());
        cur = field.mul(&cur, &g);
    }
    let half = pow3(k);
    FunctionTable::from_fn(n, m, |rank| {
        let x = field.from_rank(rank % half).expect("in range");
        let y = field.from_rank(rank / half).expect("in range");
        let z = field.mul(&x, &y);
        let mut out = 0u16;
        for (i, gp) in gpows.iter().enumerate() {
            out += field.trace(&field.mul(gp, &z)).value() as u16 * pow3(i) as u16;
        }
        out
    })
}

/// `G'(x, z) = G(x)` on `F_3^{n+extra}`: appending inert coordinates turns
/// a vectorial regular `s`-plateaued function into an `(s+extra)`-plateaued
/// one with the same component structure.
pub fn extend_with_dummy(g: &FunctionTable, extra: usize) -> Result<FunctionTable> {
    if extra == 0 {
        return Err(Error::Parameter("dummy extension requires extra >= 1".into()));
    }
    let n2 = g.n() + extra;
    if n2 > MAX_N {
        return Err(Error::CapExceeded { what: "n", value: n2, cap: MAX_N });
    }
    let base = pow3(g.n());
    FunctionTable::from_fn(n2, g.m(), |rank| g.value(rank % base))
}

/// `F(x) = (f(x), G(x))`: coordinate 0 of the output is `f`, the remaining
/// coordinates are `G`. Component `(mu1, mu~)` of `F` is `mu1 f + mu~.G`.
pub fn compose(f: &FunctionTable, g: &FunctionTable) -> Result<FunctionTable> {
    if f.m() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, got: f.m() });
    }
    if f.n() != g.n() {
        return Err(Error::DimensionMismatch { expected: f.n(), got: g.n() });
    }
    let m = 1 + g.m();
    if m > MAX_M {
        return Err(Error::CapExceeded { what: "m", value: m, cap: MAX_M });
    }
    FunctionTable::from_fn(f.n(), m, |x| f.value(x) + 3 * g.value(x))
}

/// True iff `mu.F(x) - mu.F(0)` is linear, detected spectrally: the
/// component's spectrum is a single value of squared magnitude `3^{2n}`.
pub fn is_component_affine(f: &FunctionTable, mu: &TernaryVector) -> Result<bool> {
    let row = crate::walsh::fast_row(f, mu)?;
    Ok(row.is_affine_shape())
}

/// Per-component plateau/regularity classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentClass {
    /// All nonzero squared magnitudes equal `3^{n+s}`. `regular` means every
    /// nonzero value is exactly `3^{(n+s)/2} w^j`; with `n + s` odd that
    /// amplitude is not an integer, so `regular` is necessarily false.
    Plateaued { s: usize, regular: bool },
    NotPlateaued,
}

/// Classification of all components `mu.F`, `mu != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlateauClassification {
    n: usize,
    m: usize,
    /// Indexed by `rank(mu) - 1`.
    per_component: Vec<ComponentClass>,
    pub uniform_s: Option<usize>,
    pub vectorial_regular: bool,
}

impl PlateauClassification {
    pub fn component(&self, mu_rank: usize) -> ComponentClass {
        assert!(mu_rank >= 1, "classification covers mu != 0 only");
        self.per_component[mu_rank - 1]
    }

    pub fn components(&self) -> &[ComponentClass] {
        &self.per_component
    }

    pub fn all_plateaued(&self) -> bool {
        self.per_component.iter().all(|c| matches!(c, ComponentClass::Plateaued { .. }))
    }
}

impl fmt::Display for PlateauClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.uniform_s, self.vectorial_regular) {
            (Some(s), true) => write!(f, "vectorial regular {s}-plateaued")?,
            (Some(s), false) => write!(f, "vectorial {s}-plateaued (not all regular)")?,
            (None, _) => write!(f, "mixed component classes")?,
        }
        let mut counts = std::collections::BTreeMap::new();
        for c in &self.per_component {
            let key = match c {
                ComponentClass::Plateaued { s, regular: true } => format!("s={s} regular"),
                ComponentClass::Plateaued { s, regular: false } => format!("s={s} irregular"),
                ComponentClass::NotPlateaued => "not plateaued".to_string(),
            };
            *counts.entry(key).or_insert(0usize) += 1;
        }
        write!(f, " [")?;
        for (i, (k, v)) in counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}: {v}")?;
        }
        write!(f, "]")
    }
}

fn pow3_exponent(mut v: i64) -> Option<u32> {
    if v <= 0 {
        return None;
    }
    let mut e = 0u32;
    while v % 3 == 0 {
        v /= 3;
        e += 1;
    }
    (v == 1).then_some(e)
}

fn classify_row(row: &SpectrumRow, n: usize) -> ComponentClass {
    let mut nonzero_norm: Option<i64> = None;
    for v in row.values() {
        let norm = v.norm();
        if norm == 0 {
            continue;
        }
        match nonzero_norm {
            None => nonzero_norm = Some(norm),
            Some(seen) if seen == norm => {}
            Some(_) => return ComponentClass::NotPlateaued,
        }
    }
    let Some(norm) = nonzero_norm else {
        // An all-zero row cannot arise from a genuine function.
        return ComponentClass::NotPlateaued;
    };
    let Some(e) = pow3_exponent(norm) else {
        return ComponentClass::NotPlateaued;
    };
    if (e as usize) < n || (e as usize) > 2 * n {
        return ComponentClass::NotPlateaued;
    }
    let s = e as usize - n;
    let regular = if (n + s) % 2 == 0 {
        let c = 3i64.pow(((n + s) / 2) as u32);
        row.values().iter().all(|v| {
            v.is_zero()
                || *v == EisensteinInt::new(c, 0)
                || *v == EisensteinInt::new(0, c)
                || *v == EisensteinInt::new(-c, -c)
        })
    } else {
        false
    };
    ComponentClass::Plateaued { s, regular }
}

/// Classifies every component from a precomputed spectrum.
pub fn classify_spectrum(spec: &WalshSpectrum) -> PlateauClassification {
    let (n, m) = (spec.n(), spec.m());
    let per_component: Vec<ComponentClass> =
        (1..pow3(m)).into_par_iter().map(|mu| classify_row(spec.row(mu), n)).collect();
    let uniform_s = match per_component.first() {
        Some(ComponentClass::Plateaued { s, .. })
            if per_component
                .iter()
                .all(|c| matches!(c, ComponentClass::Plateaued { s: s2, .. } if s2 == s)) =>
        {
            Some(*s)
        }
        _ => None,
    };
    let vectorial_regular = uniform_s.is_some()
        && per_component
            .iter()
            .all(|c| matches!(c, ComponentClass::Plateaued { regular: true, .. }));
    PlateauClassification { n, m, per_component, uniform_s, vectorial_regular }
}

/// Convenience: compute the spectrum, then classify.
pub fn classify(f: &FunctionTable) -> PlateauClassification {
    classify_spectrum(&WalshSpectrum::compute(f))
}

/// A composite instance `F = (f, G)` together with the subspace data that
/// produced `f`. This is the input shape of the AB-violating pipeline.
#[derive(Debug, Clone)]
pub struct CompositeSpec {
    f: FunctionTable,
    g: FunctionTable,
    subspace: SubspaceSpec,
    a: TernaryVector,
    b: TernaryVector,
    /// dim(E); kept explicit because the distance formula uses it.
    pub r: usize,
    /// Plateau amount claimed for `G`; verified by the pipeline, not here.
    pub s: usize,
}

impl CompositeSpec {
    pub fn new(
        f: FunctionTable,
        g: FunctionTable,
        subspace: SubspaceSpec,
        a: TernaryVector,
        b: TernaryVector,
        s: usize,
    ) -> Result<CompositeSpec> {
        if f.m() != 1 {
            return Err(Error::DimensionMismatch { expected: 1, got: f.m() });
        }
        let n = f.n();
        if g.n() != n || subspace.ambient_n() != n || a.n() != n || b.n() != n {
            return Err(Error::DimensionMismatch { expected: n, got: g.n() });
        }
        if !f.vanishes_at_origin() || !g.vanishes_at_origin() {
            return Err(Error::NonzeroOrigin);
        }
        if SubspaceSpec::new(n, vec![a.clone(), b.clone()]).is_err() {
            return Err(Error::DependentDirections);
        }
        let eperp = subspace.dual();
        for (which, v) in [
            ("a lies in the dual of E", a.clone()),
            ("b lies in the dual of E", b.clone()),
            ("a+b lies in the dual of E", a.add(&b)?),
            ("a-b lies in the dual of E", a.sub(&b)?),
        ] {
            if eperp.contains(&v) {
                return Err(Error::IndicatorConstraint { which });
            }
        }
        let r = subspace.dim();
        Ok(CompositeSpec { f, g, subspace, a, b, r, s })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.f.n()
    }

    /// Output dimension of the assembled `F = (f, G)`.
    #[inline]
    pub fn m(&self) -> usize {
        1 + self.g.m()
    }

    #[inline]
    pub fn f(&self) -> &FunctionTable {
        &self.f
    }

    #[inline]
    pub fn g(&self) -> &FunctionTable {
        &self.g
    }

    #[inline]
    pub fn subspace(&self) -> &SubspaceSpec {
        &self.subspace
    }

    #[inline]
    pub fn a(&self) -> &TernaryVector {
        &self.a
    }

    #[inline]
    pub fn b(&self) -> &TernaryVector {
        &self.b
    }

    pub fn assemble(&self) -> FunctionTable {
        compose(&self.f, &self.g).expect("validated at construction")
    }

    /// `A_{mu~}(x) = f(x) + mu~.G(x)` as a scalar table.
    pub fn a_table(&self, mu_t: &TernaryVector) -> Result<FunctionTable> {
        let gc = self.g.component(mu_t)?;
        FunctionTable::scalar_combination(&[(1, &self.f), (1, &gc)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf3::Trit;
    use crate::walsh;

    #[test]
    fn tft_round_trip_is_bit_exact() {
        let f = field_mult_bent(2, 2).unwrap();
        let mut buf = Vec::new();
        f.write_tft(&mut buf).unwrap();
        let g = FunctionTable::read_tft(&buf[..]).unwrap();
        assert_eq!(f, g);
        let mut buf2 = Vec::new();
        g.write_tft(&mut buf2).unwrap();
        assert_eq!(buf, buf2);
    }

    #[test]
    fn tft_digit_order_is_most_significant_first() {
        // m = 2, value (f, g) with f = coordinate 0: output rank 7 = 1 + 2*3
        // must print as "21" (coordinate 1 first).
        let f = FunctionTable::new(1, 2, vec![7, 0, 0]).unwrap();
        let mut buf = Vec::new();
        f.write_tft(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "tft 1 1 2\n21\n00\n00\n");
    }

    #[test]
    fn tft_rejects_malformed_input() {
        assert!(FunctionTable::read_tft(&b"tft 2 1 1\n0\n0\n0\n"[..]).is_err());
        assert!(FunctionTable::read_tft(&b"tft 1 1 1\n0\n0\n"[..]).is_err());
        assert!(FunctionTable::read_tft(&b"tft 1 1 1\n0\n3\n0\n"[..]).is_err());
        assert!(FunctionTable::read_tft(&b"tft 1 1 1\n0\n00\n0\n"[..]).is_err());
    }

    #[test]
    fn compose_projects_back() {
        let f = FunctionTable::from_fn(2, 1, |x| (x % 3) as u16).unwrap();
        let g = FunctionTable::from_fn(2, 2, |x| (x % 9) as u16).unwrap();
        let comp = compose(&f, &g).unwrap();
        assert_eq!(comp.m(), 3);
        // Component (1, 0, 0) is f; component (0, mu~) is mu~.G.
        let e0 = TernaryVector::standard_basis(3, 0);
        assert_eq!(comp.component(&e0).unwrap(), f);
        for mu_t_rank in 0..9usize {
            let mu = TernaryVector::from_rank(3 * mu_t_rank, 3).unwrap();
            let mu_t = TernaryVector::from_rank(mu_t_rank, 2).unwrap();
            assert_eq!(comp.component(&mu).unwrap(), g.component(&mu_t).unwrap());
        }
        assert_eq!(comp.value(0), f.value(0) + 3 * g.value(0));
    }

    #[test]
    fn field_mult_bent_basics() {
        let f = field_mult_bent(2, 1).unwrap();
        assert_eq!((f.n(), f.m()), (4, 1));
        // F(0, y) = 0 for all y.
        for y in 0..9 {
            assert_eq!(f.value(9 * y), 0);
        }
        assert!(f.vanishes_at_origin());
        let cls = classify(&f);
        assert_eq!(cls.uniform_s, Some(0));
        assert!(cls.vectorial_regular);
        // All 3^4 Walsh values of the single component have norm 3^4.
        let mu = TernaryVector::from_rank(1, 1).unwrap();
        let row = walsh::fast_row(&f, &mu).unwrap();
        assert!(row.values().iter().all(|v| v.norm() == 81));
    }

    #[test]
    fn field_mult_bent_vectorial_regular() {
        let f = field_mult_bent(3, 3).unwrap();
        assert_eq!((f.n(), f.m()), (6, 3));
        let cls = classify(&f);
        assert_eq!(cls.uniform_s, Some(0));
        assert!(cls.vectorial_regular);
    }

    #[test]
    fn field_mult_bent_rejects_m_above_k() {
        assert!(matches!(field_mult_bent(2, 3), Err(Error::TooManyComponents { .. })));
    }

    #[test]
    fn dummy_extension_shifts_s_exactly() {
        let g = field_mult_bent(2, 1).unwrap();
        let g2 = extend_with_dummy(&g, 1).unwrap();
        assert_eq!(g2.n(), 5);
        let cls = classify(&g2);
        assert_eq!(cls.uniform_s, Some(1));
        assert!(cls.vectorial_regular);
        // W_{G'}(mu, (nu, c)) = 0 for c != 0 and 3^extra W_G(mu, nu) at c = 0.
        let mu = TernaryVector::from_rank(1, 1).unwrap();
        let base = walsh::fast_row(&g, &mu).unwrap();
        let ext = walsh::fast_row(&g2, &mu).unwrap();
        for nu in 0..pow3(4) {
            assert_eq!(ext.value(nu), base.value(nu).scale(3));
            assert!(ext.value(nu + pow3(4)).is_zero());
            assert!(ext.value(nu + 2 * pow3(4)).is_zero());
        }
    }

    #[test]
    fn indicator_quadratic_spot_values() {
        let n = 6;
        let e = SubspaceSpec::coordinate(n, 2).unwrap();
        let a = TernaryVector::standard_basis(n, 0);
        let b = TernaryVector::standard_basis(n, 1);
        let f = indicator_quadratic(&e, &a, &b).unwrap();
        assert_eq!(f.value(0), 0, "f(0) = 1 + 0 + 2 = 0");
        // x in E with a.x = 0: f(x) = 1 + 0 + 2 = 0.
        let x = TernaryVector::from_rank(3, n).unwrap(); // (0,1,0,...): in E, a.x = 0
        assert_eq!(f.value(x.rank()), 0);
        // x outside E with a.x = b.x = 0: f(x) = 0 + 0 + 2 = 2.
        let y = TernaryVector::standard_basis(n, 5);
        assert_eq!(f.value(y.rank()), 2);
    }

    #[test]
    fn indicator_quadratic_reports_which_constraint() {
        let n = 5;
        let e = SubspaceSpec::coordinate(n, 2).unwrap();
        // a = e_4 lies in E^perp = span{e_2, e_3, e_4}.
        let a = TernaryVector::standard_basis(n, 4);
        let b = TernaryVector::standard_basis(n, 1);
        match indicator_quadratic(&e, &a, &b) {
            Err(Error::IndicatorConstraint { which }) => {
                assert!(which.starts_with("a lies"), "got {which}")
            }
            other => panic!("expected constraint violation, got {other:?}"),
        }
        // a + b in E^perp: a = e_0 + e_4, b = -e_0 i.e. 2e_0 => a+b = e_4.
        let a2 = TernaryVector::standard_basis(n, 0)
            .add(&TernaryVector::standard_basis(n, 4))
            .unwrap();
        let b2 = TernaryVector::standard_basis(n, 0).scale(Trit::TWO);
        match indicator_quadratic(&e, &a2, &b2) {
            Err(Error::IndicatorConstraint { which }) => {
                assert!(which.starts_with("a+b"), "got {which}")
            }
            other => panic!("expected a+b violation, got {other:?}"),
        }
    }

    #[test]
    fn indicator_spectrum_formula_holds_for_random_subspaces() {
        // The 2Re multiset depends only on (n, r) as long as the dual
        // constraints hold; exercise non-coordinate subspaces and
        // non-basis directions.
        use std::collections::BTreeMap;
        let expected = |n: usize, r: usize| -> BTreeMap<i64, u64> {
            let hi = 3i64.pow((n - 1) as u32);
            let lo = 3i64.pow(r as u32);
            let cosets = pow3(n - r) as u64;
            let mut map = BTreeMap::new();
            map.insert(-hi + lo, 5);
            map.insert(2 * hi - lo, 2);
            map.insert(-hi, 2);
            *map.entry(lo).or_insert(0) += 5 * cosets - 5;
            *map.entry(-lo).or_insert(0) += 2 * cosets - 2;
            *map.entry(0).or_insert(0) += pow3(n) as u64 - 7 * cosets - 2;
            map
        };
        let cases: [(usize, Vec<usize>, usize, usize); 3] = [
            (5, vec![4, 36], 1, 9),
            (6, vec![13, 100], 1, 3),
            (6, vec![1, 3, 9], 1, 3),
        ];
        for (n, basis_ranks, a_rank, b_rank) in cases {
            let basis =
                basis_ranks.iter().map(|&r| TernaryVector::from_rank(r, n).unwrap()).collect();
            let e = SubspaceSpec::new(n, basis).unwrap();
            let a = TernaryVector::from_rank(a_rank, n).unwrap();
            let b = TernaryVector::from_rank(b_rank, n).unwrap();
            let f = indicator_quadratic(&e, &a, &b).unwrap();
            let mu = TernaryVector::from_rank(1, 1).unwrap();
            let row = walsh::fast_row(&f, &mu).unwrap();
            let mut observed: BTreeMap<i64, u64> = BTreeMap::new();
            for v in row.values() {
                *observed.entry(v.two_re()).or_insert(0) += 1;
            }
            assert_eq!(observed, expected(n, e.dim()), "n={n} dim={}", e.dim());
        }
    }

    #[test]
    fn indicator_seed_is_not_affine() {
        let n = 6;
        let e = SubspaceSpec::coordinate(n, 2).unwrap();
        let f = indicator_quadratic(
            &e,
            &TernaryVector::standard_basis(n, 0),
            &TernaryVector::standard_basis(n, 1),
        )
        .unwrap();
        let mu = TernaryVector::from_rank(1, 1).unwrap();
        assert!(!is_component_affine(&f, &mu).unwrap());
    }

    #[test]
    fn affine_component_detection() {
        // Linear map: every component affine.
        let lin = FunctionTable::from_fn(3, 2, |x| {
            let c1 = rank_dot(5, x, 3) as u16;
            let c2 = rank_dot(11, x, 3) as u16;
            c1 + 3 * c2
        })
        .unwrap();
        for mu_rank in 1..9 {
            let mu = TernaryVector::from_rank(mu_rank, 2).unwrap();
            assert!(is_component_affine(&lin, &mu).unwrap());
        }
        // Bent component: never affine.
        let bent = field_mult_bent(2, 1).unwrap();
        let mu = TernaryVector::from_rank(1, 1).unwrap();
        assert!(!is_component_affine(&bent, &mu).unwrap());
        // Affine classification: s = n, regular.
        let cls = classify(&lin);
        assert_eq!(cls.uniform_s, Some(3));
        assert!(cls.vectorial_regular);
    }

    #[test]
    fn random_function_usually_not_plateaued() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(3);
        let f = FunctionTable::from_fn(4, 1, |_| rng.gen_range(0..3)).unwrap();
        let cls = classify(&f);
        assert!(matches!(cls.component(1), ComponentClass::NotPlateaued));
    }

    #[test]
    fn composite_spec_validates_and_assembles() {
        let n = 6;
        let e = SubspaceSpec::coordinate(n, 2).unwrap();
        let a = TernaryVector::standard_basis(n, 0);
        let b = TernaryVector::standard_basis(n, 1);
        let f = indicator_quadratic(&e, &a, &b).unwrap();
        let g = field_mult_bent(3, 1).unwrap();
        let cs = CompositeSpec::new(f.clone(), g.clone(), e, a, b, 0).unwrap();
        assert_eq!(cs.m(), 2);
        let assembled = cs.assemble();
        assert_eq!(assembled.value(0), 0);
        let mu_t = TernaryVector::from_rank(2, 1).unwrap();
        let at = cs.a_table(&mu_t).unwrap();
        // A_2(x) = f(x) + 2 g(x) pointwise.
        for x in [0usize, 1, 100, 700] {
            assert_eq!(at.value(x), (f.value(x) + 2 * g.value(x)) % 3);
        }
    }
}
