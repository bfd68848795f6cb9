use fatflat::hilbert::vdim_reference;
use fatflat::{
    adim_rank_oracle, adim_upper_mult1, s_formula, vdim_recursive, ExactInt, FatFlatScheme,
    OracleConfig,
};
use proptest::prelude::*;

fn small_scheme() -> impl Strategy<Value = (u32, Vec<u32>, i64)> {
    (2u32..=5, proptest::collection::vec(1u32..=3, 0..=4), 0i64..=12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn vdim_is_independent_of_peel_order((n, mults, t) in small_scheme(), seed in any::<u64>()) {
        let canonical = vdim_recursive(&FatFlatScheme::new(n, mults.clone()).unwrap(), t);
        let mut state = seed;
        let mut pick = |l: &[u32]| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % l.len()
        };
        prop_assert_eq!(vdim_reference(n, &mults, t, &mut pick), canonical);
    }

    #[test]
    fn scheme_order_does_not_matter((n, mut mults, t) in small_scheme()) {
        let a = vdim_recursive(&FatFlatScheme::new(n, mults.clone()).unwrap(), t);
        mults.reverse();
        let b = vdim_recursive(&FatFlatScheme::new(n, mults).unwrap(), t);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn simple_flats_match_closed_form(n in 2u32..=9, s in 0usize..=9, t in -6i64..=20) {
        let scheme = FatFlatScheme::uniform(n, 1, s).unwrap();
        prop_assert_eq!(vdim_recursive(&scheme, t), s_formula(n, s as u32, t));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_is_deterministic_and_monotone(
        n in 2u32..=4,
        s in 0usize..=4,
        t in 1i64..=4,
        seed in any::<u64>(),
    ) {
        let cfg = OracleConfig::with_seed(seed);
        let mults = vec![1; s];
        let base = adim_rank_oracle(n, &mults, t, &cfg).unwrap();
        prop_assert_eq!(&base, &adim_rank_oracle(n, &mults, t, &cfg).unwrap());

        let mut more = mults.clone();
        more.push(1);
        let extended = adim_rank_oracle(n, &more, t, &cfg).unwrap();
        prop_assert!(extended <= base);
        prop_assert!(base <= adim_upper_mult1(n, s as u32, t).unwrap());
    }
}

/// Castelnuovo bound against the rank oracle on the full desk-scale grid
/// for simple flats in P^2..P^4.
#[test]
fn oracle_never_exceeds_upper_bound() {
    let cfg = OracleConfig::with_seed(7);
    for n in 2u32..=4 {
        for s in 0u32..=6 {
            for t in 0i64..=5 {
                let got = adim_rank_oracle(n, &vec![1; s as usize], t, &cfg).unwrap();
                let bound = adim_upper_mult1(n, s, t).unwrap();
                assert!(got <= bound, "n={n} s={s} t={t}: oracle {got} > bound {bound}");
            }
        }
    }
}

#[test]
fn oracle_matches_fat_points_in_plane() {
    // Five double points: vdim 0, but the doubled conic through them remains.
    let cfg = OracleConfig::default();
    assert_eq!(adim_rank_oracle(2, &[2; 5], 4, &cfg).unwrap(), ExactInt::from(1));
    assert_eq!(adim_rank_oracle(2, &[3], 4, &cfg).unwrap(), ExactInt::from(9));
    // A double line in P^3 imposes 4 + 2 * 3 conditions on cubics.
    assert_eq!(adim_rank_oracle(3, &[2], 3, &cfg).unwrap(), ExactInt::from(10));
}
