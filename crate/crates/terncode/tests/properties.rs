//! Property-based invariants with proptest.

use proptest::prelude::*;
use terncode::codes::codeword_support;
use terncode::functions::FunctionTable;
use terncode::gf3::{rank_add, EisensteinInt, SubspaceSpec, TernaryVector};
use terncode::pow3;
use terncode::walsh::{fast_row, naive_row};

// Components stay small enough that norms of double products fit in
// checked i64 arithmetic (the overflow path has its own test).
fn eis() -> impl Strategy<Value = EisensteinInt> {
    (-20_000i64..20_000, -20_000i64..20_000).prop_map(|(a, b)| EisensteinInt::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]
    #[test]
    fn eisenstein_ring_axioms(x in eis(), y in eis(), z in eis()) {
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!(x * y, y * x);
        prop_assert_eq!(x + (-x), EisensteinInt::ZERO);
        // conj is a ring homomorphism and the norm is multiplicative.
        prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
        prop_assert_eq!((x + y).conj(), x.conj() + y.conj());
        prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
        prop_assert!(x.norm() >= 0);
        // twoRe is additive and conjugation-invariant.
        prop_assert_eq!((x + y).two_re(), x.two_re() + y.two_re());
        prop_assert_eq!(x.conj().two_re(), x.two_re());
    }

    #[test]
    fn rank_round_trip(n in 0usize..10, seed in any::<u64>()) {
        let rank = (seed as usize) % pow3(n);
        let v = TernaryVector::from_rank(rank, n).unwrap();
        prop_assert_eq!(v.rank(), rank);
        prop_assert_eq!(v.n(), n);
    }

    #[test]
    fn fast_transform_matches_naive(
        n in 1usize..4,
        m in 1usize..3,
        seed in any::<u64>(),
        mu_seed in any::<u64>(),
    ) {
        let out = pow3(m) as u64;
        let mut state = seed;
        let f = FunctionTable::from_fn(n, m, |_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % out) as u16
        }).unwrap();
        let mu = TernaryVector::from_rank((mu_seed as usize) % pow3(m), m).unwrap();
        prop_assert_eq!(naive_row(&f, &mu).unwrap(), fast_row(&f, &mu).unwrap());
    }

    #[test]
    fn tft_round_trip(n in 1usize..4, m in 1usize..4, seed in any::<u64>()) {
        let out = pow3(m) as u64;
        let mut state = seed | 1;
        let f = FunctionTable::from_fn(n, m, |_| {
            state = state.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
            ((state >> 33) % out) as u16
        }).unwrap();
        let mut buf = Vec::new();
        f.write_tft(&mut buf).unwrap();
        let g = FunctionTable::read_tft(&buf[..]).unwrap();
        prop_assert_eq!(&f, &g);
        let mut buf2 = Vec::new();
        g.write_tft(&mut buf2).unwrap();
        prop_assert_eq!(buf, buf2);
    }

    #[test]
    fn dual_subspace_involution(n in 2usize..7, ranks in proptest::collection::vec(1usize..700, 1..4)) {
        let basis: Vec<TernaryVector> = ranks
            .iter()
            .map(|&r| TernaryVector::from_rank(r % pow3(n), n))
            .collect::<Result<_, _>>()
            .unwrap();
        if let Ok(e) = SubspaceSpec::new(n, basis) {
            let dual = e.dual();
            prop_assert_eq!(dual.dim(), n - e.dim());
            prop_assert!(dual.dual().same_span(&e));
            for be in e.basis() {
                for bd in dual.basis() {
                    prop_assert!(be.dot(bd).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn covering_is_scale_invariant(seed in any::<u64>(), mu in 0usize..9, nu in 0usize..27) {
        // suppt(c) = suppt(2c), so covering verdicts ignore scaling.
        let mut state = seed;
        let f = FunctionTable::from_fn(3, 2, |_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(99991);
            ((state >> 40) % 9) as u16
        }).unwrap();
        let sup = codeword_support(&f, mu, nu);
        let doubled = codeword_support(&f, rank_add(mu, mu, 2), rank_add(nu, nu, 3));
        prop_assert_eq!(&sup, &doubled);
        prop_assert!(sup.is_subset_of(&doubled) && doubled.is_subset_of(&sup));
    }
}
