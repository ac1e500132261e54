//! Self-contained verification suites.
//!
//! Each check recomputes an exact quantity two independent ways (or against
//! a frozen expected value) and reports observed vs expected. The CLI
//! `verify-paper` subcommand prints one line per check; the acceptance
//! test target runs the same functions.

use crate::codes;
use crate::functions::{
    classify_spectrum, extend_with_dummy, field_mult_bent, indicator_quadratic,
    CompositeSpec, FunctionTable,
};
use crate::gf3::{EisensteinInt, SubspaceSpec, TernaryVector};
use crate::minimality::{
    block_spectra_check, build_and_verify_ab_violating, covering_oracle, norm_bound_check,
    pairwise_weight_check, walsh_direct_check, CompositeSpectra, CoveringMode, Verdict,
};
use crate::pow3;
use crate::walsh::{fast_row, naive_row, titsworth_sum, WalshSpectrum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

fn random_scalar(n: usize, rng: &mut ChaCha8Rng) -> FunctionTable {
    FunctionTable::from_fn(n, 1, |_| rng.gen_range(0..3)).expect("valid dims")
}

fn random_vanishing(n: usize, m: usize, rng: &mut ChaCha8Rng) -> FunctionTable {
    let mut table: Vec<u16> = (0..pow3(n)).map(|_| rng.gen_range(0..pow3(m) as u16)).collect();
    table[0] = 0;
    FunctionTable::new(n, m, table).expect("valid dims")
}

fn random_nonaffine(n: usize, m: usize, rng: &mut ChaCha8Rng) -> (FunctionTable, WalshSpectrum) {
    loop {
        let f = random_vanishing(n, m, rng);
        let spec = WalshSpectrum::compute(&f);
        if (1..pow3(m)).all(|mu| !spec.row(mu).is_affine_shape()) {
            return (f, spec);
        }
    }
}

/// Walsh identities on a random corpus: Parseval, the autocorrelation sum
/// (both branches), and fast == naive row agreement.
pub fn walsh_identity_checks(ns: &[usize], per_n: usize, seed: u64) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &n in ns {
        let full = 3i64.pow(2 * n as u32);
        let mut parseval_ok = 0usize;
        let mut titsworth_ok = 0usize;
        let mut agree_ok = 0usize;
        for _ in 0..per_n {
            let f = random_scalar(n, &mut rng);
            let mu = TernaryVector::from_rank(1, 1).unwrap();
            let row = fast_row(&f, &mu).unwrap();
            if row.parseval_sum() == full {
                parseval_ok += 1;
            }
            let zero_tau = TernaryVector::zero(n);
            let mut tits = titsworth_sum(&row, &zero_tau).unwrap() == EisensteinInt::new(full, 0);
            for tau_rank in 1..pow3(n) {
                let tau = TernaryVector::from_rank(tau_rank, n).unwrap();
                if !titsworth_sum(&row, &tau).unwrap().is_zero() {
                    tits = false;
                    break;
                }
            }
            if tits {
                titsworth_ok += 1;
            }
            let mut agree = row == naive_row(&f, &mu).unwrap();
            if n <= 5 {
                let mu2 = TernaryVector::from_rank(2, 1).unwrap();
                agree &= fast_row(&f, &mu2).unwrap() == naive_row(&f, &mu2).unwrap();
            }
            if agree {
                agree_ok += 1;
            }
        }
        checks.push(Check::from(
            format!("identities/parseval_n{n}"),
            parseval_ok == per_n,
            format!("{parseval_ok}/{per_n} random functions with sum |W|^2 = 3^{}", 2 * n),
        ));
        checks.push(Check::from(
            format!("identities/titsworth_n{n}"),
            titsworth_ok == per_n,
            format!("{titsworth_ok}/{per_n} functions exact on all tau"),
        ));
        checks.push(Check::from(
            format!("identities/fast_eq_naive_n{n}"),
            agree_ok == per_n,
            format!("{agree_ok}/{per_n} spectra identical"),
        ));
    }
    checks
}

/// Expected `2 Re` multiset of the indicator-quadratic seed on `F_3^n`
/// with an `r`-dimensional coordinate subspace.
fn indicator_expected(n: usize, r: usize) -> BTreeMap<i64, u64> {
    let hi = 3i64.pow((n - 1) as u32);
    let lo = 3i64.pow(r as u32);
    let cosets = pow3(n - r) as u64;
    let mut map = BTreeMap::new();
    map.insert(-hi + lo, 5);
    map.insert(2 * hi - lo, 2);
    map.insert(-hi, 2);
    *map.entry(lo).or_insert(0) += 5 * cosets - 5;
    *map.entry(-lo).or_insert(0) += 2 * cosets - 2;
    *map.entry(0).or_insert(0) += (pow3(n) as u64) - 7 * cosets - 2;
    map
}

/// The seed function's spectrum, value by value and count by count.
pub fn indicator_spectrum_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for (n, r) in [(6usize, 2usize), (7, 3)] {
        let e = SubspaceSpec::coordinate(n, r).unwrap();
        let a = TernaryVector::standard_basis(n, 0);
        let b = TernaryVector::standard_basis(n, 1);
        let f = indicator_quadratic(&e, &a, &b).unwrap();
        let row = fast_row(&f, &TernaryVector::from_rank(1, 1).unwrap()).unwrap();
        let mut observed: BTreeMap<i64, u64> = BTreeMap::new();
        for v in row.values() {
            *observed.entry(v.two_re()).or_insert(0) += 1;
        }
        let expected = indicator_expected(n, r);
        checks.push(Check::from(
            format!("identities/indicator_spectrum_n{n}_r{r}"),
            observed == expected,
            format!("observed {observed:?}, expected {expected:?}"),
        ));
    }
    checks
}

/// Identity cross-checks: the nine-term three-function Walsh identity, the
/// block decomposition of composite spectra, and the plateaued-plus-
/// indicator norm bound.
pub fn cross_identity_checks(seed: u64) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Nine-term identity on 20 random triples at n = 4.
    let n = 4;
    let mut ok = 0usize;
    for _ in 0..20 {
        let p1 = random_scalar(n, &mut rng);
        let p2 = random_scalar(n, &mut rng);
        let p3 = random_scalar(n, &mut rng);
        let f = FunctionTable::from_fn(n, 1, |x| {
            let (a, b, c) = (p1.value(x), p2.value(x), p3.value(x));
            (a + (b + 3 - a) % 3 * ((c + 3 - a) % 3)) % 3
        })
        .unwrap();
        let combos: [&[(u8, &FunctionTable)]; 9] = [
            &[(1, &p1)],
            &[(1, &p2)],
            &[(2, &p1), (2, &p2)],
            &[(1, &p3)],
            &[(2, &p1), (2, &p3)],
            &[(1, &p1), (2, &p2), (1, &p3)],
            &[(1, &p1), (1, &p2), (2, &p3)],
            &[(2, &p1), (1, &p2), (1, &p3)],
            &[(2, &p2), (2, &p3)],
        ];
        let mu = TernaryVector::from_rank(1, 1).unwrap();
        let rows: Vec<_> = combos
            .iter()
            .map(|parts| {
                fast_row(&FunctionTable::scalar_combination(parts).unwrap(), &mu).unwrap()
            })
            .collect();
        let f_row = fast_row(&f, &mu).unwrap();
        let identity_holds = (0..pow3(n)).all(|nu| {
            let plain = rows[0].value(nu)
                + rows[1].value(nu)
                + rows[2].value(nu)
                + rows[3].value(nu)
                + rows[4].value(nu);
            let omega_part = (rows[5].value(nu) + rows[6].value(nu)).mul_omega();
            let omega2_part = (rows[7].value(nu) + rows[8].value(nu)).mul_omega2();
            plain + omega_part + omega2_part == f_row.value(nu).scale(3)
        });
        if identity_holds {
            ok += 1;
        }
    }
    checks.push(Check::from(
        "identities/three_function_walsh",
        ok == 20,
        format!("{ok}/20 random triples satisfy the nine-term identity"),
    ));

    // Block decomposition on 10 random composites at n = 5, m = 3.
    let mut ok = 0usize;
    for _ in 0..10 {
        let f = random_vanishing(5, 1, &mut rng);
        let g = random_vanishing(5, 2, &mut rng);
        let cs = CompositeSpectra::compute(&f, &g).unwrap();
        if block_spectra_check(&cs).is_none() {
            ok += 1;
        }
    }
    checks.push(Check::from(
        "identities/block_spectra",
        ok == 10,
        format!("{ok}/10 random composites decompose exactly"),
    ));

    // Norm bound |W_phi| <= 3^{(n+s)/2} + 2*3^r for phi = g + 1_E + 2.
    let mut ok = 0usize;
    let mut total = 0usize;
    let seeds: [(FunctionTable, usize); 4] = [
        (field_mult_bent(2, 1).unwrap(), 0),
        (field_mult_bent(3, 1).unwrap(), 0),
        (extend_with_dummy(&field_mult_bent(2, 1).unwrap(), 1).unwrap(), 1),
        (extend_with_dummy(&field_mult_bent(2, 1).unwrap(), 2).unwrap(), 2),
    ];
    for (g, s) in &seeds {
        let n = g.n();
        for _ in 0..3 {
            let r = rng.gen_range(1..=n - 2);
            let e = loop {
                let basis: Vec<TernaryVector> = (0..r)
                    .map(|_| {
                        TernaryVector::from_rank(rng.gen_range(1..pow3(n)), n).unwrap()
                    })
                    .collect();
                if let Ok(e) = SubspaceSpec::new(n, basis) {
                    break e;
                }
            };
            let indicator = e.indicator_table();
            let phi = FunctionTable::from_fn(n, 1, |x| {
                (g.value(x) + indicator[x] as u16 + 2) % 3
            })
            .unwrap();
            let row = fast_row(&phi, &TernaryVector::from_rank(1, 1).unwrap()).unwrap();
            let bound = 3i64.pow(((n + s) / 2) as u32) + 2 * 3i64.pow(r as u32);
            total += 1;
            if row.values().iter().all(|v| v.norm() <= bound * bound) {
                ok += 1;
            }
        }
    }
    checks.push(Check::from(
        "identities/plateaued_indicator_bound",
        ok == total,
        format!("{ok}/{total} instances within |W| <= 3^((n+s)/2) + 2*3^r"),
    ));

    checks
}

/// Weight-distribution tables of the bent construction at `n = 6`.
pub fn bent_table_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for m in [2usize, 3] {
        let f = field_mult_bent(3, m).unwrap();
        let spec = WalshSpectrum::compute(&f);
        let cls = classify_spectrum(&spec);
        let dist = codes::weight_distribution(&spec).unwrap();
        let units = (pow3(m) - 1) as u64;
        let expected: BTreeMap<usize, u64> =
            [(0, 1), (486, 728), (468, units * 261), (495, units * 468)].into_iter().collect();
        let dim = codes::check_dimension(&spec).unwrap();
        let ab = codes::ab_status(&dist).unwrap();
        let passed = cls.vectorial_regular
            && cls.uniform_s == Some(0)
            && dist.freq() == &expected
            && dim == 6 + m
            && ab.satisfies_ab;
        checks.push(Check::from(
            format!("tables/bent_n6_m{m}"),
            passed,
            format!(
                "distribution {:?} (expected {:?}), dimension {dim}, AB {}",
                dist.as_pairs(),
                expected.iter().collect::<Vec<_>>(),
                ab.satisfies_ab
            ),
        ));
    }
    checks
}

/// Weight-distribution table of the dummy-extended (s = 1) construction at
/// `n = 7`, plus an s = 2 instance at `n = 8` against the closed formulas.
pub fn plateaued_table_checks() -> Vec<Check> {
    let mut checks = Vec::new();

    let g = extend_with_dummy(&field_mult_bent(3, 2).unwrap(), 1).unwrap();
    let spec = WalshSpectrum::compute(&g);
    let cls = classify_spectrum(&spec);
    let dist = codes::weight_distribution(&spec).unwrap();
    let expected: BTreeMap<usize, u64> =
        [(0, 1), (1458, 13850), (1404, 2088), (1485, 3744)].into_iter().collect();
    let d = codes::min_distance(&dist).unwrap();
    let dim = codes::check_dimension(&spec).unwrap();
    let passed = cls.vectorial_regular
        && cls.uniform_s == Some(1)
        && dist.freq() == &expected
        && d == 1404
        && dim == 9;
    checks.push(Check::from(
        "tables/plateaued_n7_m2_s1",
        passed,
        format!("distribution {:?}, d = {d}, dimension {dim}", dist.as_pairs()),
    ));

    // s = 2 at n = 8 from the general three-weight formulas.
    let g = extend_with_dummy(&field_mult_bent(3, 2).unwrap(), 2).unwrap();
    let spec = WalshSpectrum::compute(&g);
    let cls = classify_spectrum(&spec);
    let dist = codes::weight_distribution(&spec).unwrap();
    let (n, m, s) = (8usize, 2usize, 2usize);
    let base = pow3(n) - pow3(n - 1);
    let amp = pow3((n + s) / 2);
    let units = (pow3(m) - 1) as u64;
    let mut expected: BTreeMap<usize, u64> = BTreeMap::new();
    expected.insert(0, 1);
    expected.insert(base, (pow3(n) - 1) as u64 + units * (pow3(n) - pow3(n - s)) as u64);
    expected.insert(
        base - amp + amp / 3,
        units * (pow3(n - s - 1) + pow3((n - s) / 2) - pow3((n - s) / 2 - 1)) as u64,
    );
    expected.insert(base + amp / 3, 2 * units * (pow3(n - s - 1) - pow3((n - s) / 2 - 1)) as u64);
    let passed = cls.vectorial_regular && cls.uniform_s == Some(2) && dist.freq() == &expected;
    checks.push(Check::from(
        "tables/plateaued_n8_m2_s2",
        passed,
        format!("distribution {:?} (expected {:?})", dist.as_pairs(), expected),
    ));

    checks
}

/// Differential minimality: the covering oracle, the Walsh characterization
/// and the weight-identity criterion must agree on every instance; the norm
/// bound may only ever certify instances the direct check also certifies.
pub fn differential_checks(max_n: usize, total: usize, seed: u64) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let combos: Vec<(usize, usize)> =
        [(3usize, 1usize), (3, 2), (4, 1), (4, 2)].into_iter().filter(|&(n, _)| n <= max_n).collect();
    let per = total.div_ceil(combos.len());
    let mut agreements = 0usize;
    let mut ran = 0usize;
    let mut minimal_count = 0usize;
    let mut bound_hits = 0usize;
    let mut bound_violations = 0usize;
    let mut first_disagreement = String::new();
    for &(n, m) in &combos {
        for _ in 0..per {
            let (f, spec) = random_nonaffine(n, m, &mut rng);
            let direct = walsh_direct_check(&spec).unwrap();
            let cover = covering_oracle(&f, CoveringMode::Exhaustive).unwrap();
            let (weights_minimal, _) = pairwise_weight_check(&spec).unwrap();
            ran += 1;
            let agree = direct.verdict == cover.verdict
                && weights_minimal == (direct.verdict == Verdict::Minimal);
            if agree {
                agreements += 1;
            } else if first_disagreement.is_empty() {
                first_disagreement = format!(
                    "n={n} m={m}: direct {:?}, covering {:?}, weights_minimal {weights_minimal}",
                    direct.verdict, cover.verdict
                );
            }
            if direct.verdict == Verdict::Minimal {
                minimal_count += 1;
            }
            if norm_bound_check(&spec).verdict == Verdict::Minimal {
                bound_hits += 1;
                if direct.verdict != Verdict::Minimal {
                    bound_violations += 1;
                }
            }
        }
    }
    checks.push(Check::from(
        "differential/oracle_agreement",
        agreements == ran && ran >= total.min(50),
        format!(
            "{agreements}/{ran} instances agree across covering, direct and weight-identity \
             routes ({minimal_count} minimal){}{}",
            if first_disagreement.is_empty() { "" } else { "; first disagreement: " },
            first_disagreement
        ),
    ));

    // Sufficiency of the norm bound, including instances that satisfy it.
    let bent = field_mult_bent(3, 2).unwrap();
    let bent_spec = WalshSpectrum::compute(&bent);
    let bent_bound = norm_bound_check(&bent_spec).verdict == Verdict::Minimal;
    let bent_direct = walsh_direct_check(&bent_spec).unwrap().verdict == Verdict::Minimal;
    checks.push(Check::from(
        "differential/norm_bound_sufficiency",
        bound_violations == 0 && bent_bound && bent_direct,
        format!(
            "{bound_hits} random instances satisfied the bound, 0 contradictions expected, \
             got {bound_violations}; bent n=6 m=2 bound => minimal: {}",
            bent_bound && bent_direct
        ),
    ));

    checks
}

/// The full AB-violating pipeline at `(n, r, s, m) = (7, 3, 1, 2)`, plus a
/// large sampled covering falsification pass.
pub fn ab_violation_checks(sample_pairs: usize, seed: u64) -> Vec<Check> {
    let mut checks = Vec::new();
    match build_and_verify_ab_violating(7, 3, 1, 2) {
        Ok(outcome) => {
            let params_ok = outcome.length == 2186
                && outcome.dimension == 9
                && outcome.min_distance == 981
                && outcome.w_max == 1701
                && !outcome.ab_satisfied
                && outcome.ab_spectral_violation;
            checks.push(Check::from(
                "theorem6/parameters",
                params_ok,
                format!(
                    "[{}, {}, {}] code, w_max = {}, AB satisfied = {}",
                    outcome.length, outcome.dimension, outcome.min_distance, outcome.w_max,
                    outcome.ab_satisfied
                ),
            ));
            checks.push(Check::from(
                "theorem6/minimality_agreement",
                outcome.composite_verdict.is_minimal() && outcome.direct_verdict.is_minimal(),
                format!(
                    "composite {:?}, direct {:?}",
                    outcome.composite_verdict.verdict, outcome.direct_verdict.verdict
                ),
            ));
            let f = outcome.composite.assemble();
            let sampled =
                covering_oracle(&f, CoveringMode::Sampled { pairs: sample_pairs, seed }).unwrap();
            checks.push(Check::from(
                "theorem6/sampled_covering",
                sampled.verdict != Verdict::NotMinimal,
                format!("{sample_pairs} sampled pairs, verdict {:?}", sampled.verdict),
            ));
            // The r = 2 variant has d = 3^6 + 3^5 + 3.
            match build_and_verify_ab_violating(7, 2, 1, 2) {
                Ok(o2) => checks.push(Check::from(
                    "theorem6/r2_distance",
                    o2.min_distance == 975,
                    format!("d = {}", o2.min_distance),
                )),
                Err(e) => checks.push(Check::from("theorem6/r2_distance", false, e.to_string())),
            }
        }
        Err(e) => {
            checks.push(Check::from("theorem6/parameters", false, e.to_string()));
        }
    }
    checks
}

/// Composite-route agreement on instances where the premises hold,
/// including an `m = 3` instance that exercises the third condition.
pub fn composite_agreement_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    // (n, r, seed-k, s, m): n = 5 plateaued s = 1, n = 6 bent s = 0 (m = 2
    // and m = 3).
    let instances: Vec<(usize, usize, usize, usize)> = vec![
        (5, 2, 1, 2),
        (6, 2, 0, 2),
        (6, 2, 0, 3),
    ];
    for (n, r, s, m) in instances {
        let e = SubspaceSpec::coordinate(n, r).unwrap();
        let a = TernaryVector::standard_basis(n, 0);
        let b = TernaryVector::standard_basis(n, 1);
        let f = indicator_quadratic(&e, &a, &b).unwrap();
        let k = (n - s) / 2;
        let seed = field_mult_bent(k, m - 1).unwrap();
        let g = if s > 0 { extend_with_dummy(&seed, s).unwrap() } else { seed };
        let cs = CompositeSpec::new(f, g, e, a, b, s).unwrap();
        let spectra = CompositeSpectra::from_spec(&cs).unwrap();
        let blocks_ok = block_spectra_check(&spectra).is_none();
        match crate::minimality::composite_check(&spectra) {
            Ok(comp) => {
                let direct = walsh_direct_check(spectra.full_spec()).unwrap();
                checks.push(Check::from(
                    format!("composite/agreement_n{n}_m{m}_s{s}"),
                    blocks_ok && comp.verdict == direct.verdict,
                    format!(
                        "composite {:?}, direct {:?}, blocks {}",
                        comp.verdict, direct.verdict, blocks_ok
                    ),
                ));
            }
            Err(err) => checks.push(Check::from(
                format!("composite/agreement_n{n}_m{m}_s{s}"),
                false,
                format!("premises failed: {err}"),
            )),
        }
    }
    checks
}

/// Named suites for the CLI.
pub fn run_suite(suite: &str, max_n: usize, seed: u64) -> Option<Vec<Check>> {
    match suite {
        "identities" => {
            let ns: Vec<usize> = (3..=max_n.clamp(3, 6)).collect();
            let mut checks = walsh_identity_checks(&ns, 100, seed);
            checks.extend(indicator_spectrum_checks());
            checks.extend(cross_identity_checks(seed ^ 0x9e37_79b9));
            Some(checks)
        }
        "tables" => {
            let mut checks = bent_table_checks();
            checks.extend(plateaued_table_checks());
            Some(checks)
        }
        "differential" => {
            let mut checks = differential_checks(max_n.max(3), 52, seed);
            checks.extend(composite_agreement_checks());
            Some(checks)
        }
        "theorem6" => Some(ab_violation_checks(1_000_000, seed)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indicator_expected_matches_frozen_multisets() {
        let e62 = indicator_expected(6, 2);
        let frozen: BTreeMap<i64, u64> =
            [(-234, 5), (477, 2), (-243, 2), (9, 400), (-9, 160), (0, 160)]
                .into_iter()
                .collect();
        assert_eq!(e62, frozen);
        let e73 = indicator_expected(7, 3);
        let frozen: BTreeMap<i64, u64> =
            [(-702, 5), (1431, 2), (-729, 2), (27, 400), (-27, 160), (0, 1618)]
                .into_iter()
                .collect();
        assert_eq!(e73, frozen);
    }

    #[test]
    fn unknown_suite_is_refused() {
        assert!(run_suite("nonsense", 4, 0).is_none());
    }
}
