//! Randomized invariants (proptest).

use braidchar::combinatorics::Permutation;
use braidchar::koszul::TruncatedSeries;
use braidchar::oracle::{Basis, BasisMonomial, ChainFamily, FlatBasisElement, SignedIndex};
use braidchar::symfunc::{all_partitions, SymFunc};
use braidchar::Partition;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// `(n, σ, τ, degree, index-seed)` with `n ≤ 6`.
fn action_case() -> impl Strategy<Value = (Permutation, Permutation, usize, usize)> {
    (1usize..=6)
        .prop_flat_map(|n| (permutation(n), permutation(n), 0..n, any::<usize>()))
}

fn compose_act<M: BasisMonomial>(b: &Basis<M>, s: &Permutation, i: usize) -> SignedIndex {
    b.act(s, i).unwrap()
}

fn check_action_law<M: BasisMonomial>(
    sigma: &Permutation,
    tau: &Permutation,
    degree: usize,
    seed: usize,
) -> Result<(), TestCaseError> {
    let n = sigma.degree();
    let basis = Basis::<M>::get(n, degree).unwrap();
    let i = seed % basis.len();
    let st = sigma.compose(tau).unwrap();
    let direct = compose_act(&basis, &st, i);
    let inner = compose_act(&basis, tau, i);
    let outer = compose_act(&basis, sigma, inner.index);
    prop_assert_eq!(direct.index, outer.index);
    prop_assert_eq!(direct.sign, inner.sign * outer.sign);
    let id = compose_act(&basis, &Permutation::identity(n), i);
    prop_assert_eq!(id, SignedIndex { index: i, sign: 1 });
    Ok(())
}

fn small_symfunc(max_degree: usize) -> impl Strategy<Value = SymFunc> {
    (1..=max_degree).prop_flat_map(|d| {
        let parts = all_partitions(d);
        proptest::collection::vec(-3i64..=3, parts.len()).prop_map(move |cs| {
            SymFunc::from_power_sums(
                d,
                parts
                    .iter()
                    .cloned()
                    .zip(cs.into_iter().map(|c| BigRational::from_integer(c.into()))),
            )
            .unwrap()
        })
    })
}

fn symfunc_of_degree(d: usize) -> impl Strategy<Value = SymFunc> {
    let parts = all_partitions(d);
    proptest::collection::vec(-3i64..=3, parts.len()).prop_map(move |cs| {
        SymFunc::from_power_sums(
            d,
            parts
                .iter()
                .cloned()
                .zip(cs.into_iter().map(|c| BigRational::from_integer(c.into()))),
        )
        .unwrap()
    })
}

fn nonzero_symfunc(max_degree: usize) -> impl Strategy<Value = SymFunc> {
    small_symfunc(max_degree).prop_filter("nonzero", |f| !f.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pvb_action_is_a_group_action((s, t, d, seed) in action_case()) {
        check_action_law::<ChainFamily>(&s, &t, d, seed)?;
    }

    #[test]
    fn pfb_action_is_a_group_action((s, t, d, seed) in action_case()) {
        check_action_law::<FlatBasisElement>(&s, &t, d, seed)?;
    }

    #[test]
    fn involutions_square_to_identity((s, _t, d, seed) in action_case()) {
        let sq = s.compose(&s).unwrap();
        let n = s.degree();
        if sq == Permutation::identity(n) {
            let b = Basis::<FlatBasisElement>::get(n, d).unwrap();
            let i = seed % b.len();
            let once = b.act(&s, i).unwrap();
            let twice = b.act(&s, once.index).unwrap();
            prop_assert_eq!(twice.index, i);
            prop_assert_eq!(once.sign * twice.sign, 1);
        }
    }

    #[test]
    fn plethysm_is_multiplicative_in_f(
        f in nonzero_symfunc(2), g in nonzero_symfunc(2), h in nonzero_symfunc(2)
    ) {
        prop_assert_eq!(
            f.multiply(&g).plethysm(&h),
            f.plethysm(&h).multiply(&g.plethysm(&h))
        );
    }

    #[test]
    fn plethysm_is_additive_in_f(
        (f, g) in (1usize..=3).prop_flat_map(|d| (symfunc_of_degree(d), symfunc_of_degree(d))),
        h in nonzero_symfunc(3)
    ) {
        prop_assert_eq!(
            f.add(&g).unwrap().plethysm(&h),
            f.plethysm(&h).add(&g.plethysm(&h)).unwrap()
        );
    }

    #[test]
    fn plethysm_units(f in nonzero_symfunc(3)) {
        let p1 = SymFunc::power_sum(Partition::ones(1));
        prop_assert_eq!(f.plethysm(&p1), f.clone());
        prop_assert_eq!(p1.plethysm(&f), f);
    }

    #[test]
    fn schur_round_trip(f in small_symfunc(5)) {
        let back = SymFunc::from_schur(f.degree(), &f.to_schur()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn series_double_inversion(
        c0 in (1i64..=5).prop_union(-5i64..=-1),
        rest in proptest::collection::vec((-6i64..=6, 1i64..=4), 0..8),
        trunc in 0usize..10
    ) {
        let mut coeffs = vec![BigRational::from_integer(c0.into())];
        coeffs.extend(rest.into_iter().map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b))));
        let s = TruncatedSeries::new(coeffs, trunc);
        let inv = s.invert().unwrap();
        prop_assert_eq!(s.mul(&inv).first_residual(), None);
        prop_assert_eq!(inv.invert().unwrap(), s);
    }

    #[test]
    fn cycle_type_is_conjugation_invariant(
        (s, t) in (1usize..=9).prop_flat_map(|n| (permutation(n), permutation(n)))
    ) {
        let conj = t.compose(&s).unwrap().compose(&t.inverse()).unwrap();
        prop_assert_eq!(conj.cycle_type(), s.cycle_type());
        prop_assert_eq!(conj.sign(), s.sign());
    }

    #[test]
    fn permutation_string_round_trip(s in (1usize..=9).prop_flat_map(permutation)) {
        let n = s.degree();
        prop_assert_eq!(Permutation::parse(&s.to_string(), Some(n)).unwrap(), s.clone());
        prop_assert_eq!(Permutation::parse(&s.one_line(), None).unwrap(), s);
    }
}
