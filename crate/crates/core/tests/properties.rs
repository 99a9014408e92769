mod common;

use common::suites::{frechet_oracle, guarded_instance, structural_failures};
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wrtcone::cones::frechet_normal_wrt;
use wrtcone::exactgeom::{fmt_rat, parse_rat, ratio, ConeH, RVec};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn structural_properties(seed in any::<u64>()) {
        let bad = structural_failures(seed);
        prop_assert!(bad.is_empty(), "{:?}", bad);
    }

    #[test]
    fn guarded_rules_have_no_counterexamples(seed in any::<u64>()) {
        let (_, bad) = guarded_instance(seed);
        prop_assert!(bad.is_empty(), "{:?}", bad);
    }

    #[test]
    fn frechet_is_polar_of_tangent_union(seed in any::<u64>(), dim in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let omega = random_set(&mut rng, dim, 4);
        let c = random_convex(&mut rng, dim);
        let x = random_point(&mut rng, &omega, &c);
        let got = frechet_normal_wrt(&omega, &c, &x).unwrap().unwrap();
        prop_assert!(got.same_set(&frechet_oracle(&omega, &c, &x).unwrap()));
    }

    #[test]
    fn rational_text_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = ratio(p, q);
        prop_assert_eq!(parse_rat(&fmt_rat(&r)).unwrap(), r);
    }

    #[test]
    fn polar_reverses_inclusion(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..4), extra in prop::collection::vec(-2i64..=2, 3)) {
        let a = ConeH::new(3, rows.iter().map(|r| RVec::from_ints(r)).collect(), Vec::new()).unwrap();
        let mut more = rows.clone();
        more.push(extra);
        let b = ConeH::new(3, more.iter().map(|r| RVec::from_ints(r)).collect(), Vec::new()).unwrap();
        prop_assert!(b.is_subset_of(&a));
        prop_assert!(a.polar().is_subset_of(&b.polar()));
    }
}
