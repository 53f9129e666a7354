use lozenge::matrix::{determinant, determinant_fraction_free, pfaffian, pfaffian_expansion, Matrix, SkewMatrix};
use lozenge::msf::{lemma9_check, minor_summation};
use lozenge::partition::Partition;
use lozenge::symfun::{schur_bidet, schur_nk, EvalPoint};
use lozenge::tiling::{
    count_via_path_determinants, enumerate_tilings, for_each_family, nth_family, start_end_points, validate_family,
    PuncturedHexagon,
};
use lozenge::{ExactInt, ExactRational};
use proptest::prelude::*;

fn rat(v: i64) -> ExactRational {
    ExactRational::from_integer(v.into())
}

fn skew_from(n: usize, vals: &[i64]) -> SkewMatrix<ExactRational> {
    let mut it = vals.iter().cycle();
    SkewMatrix::from_upper(n, |_, _| rat(*it.next().unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pfaffian_squares_to_determinant(half in 0usize..4, vals in prop::collection::vec(-4i64..=4, 1..30)) {
        let m = skew_from(2 * half, &vals);
        let pf = pfaffian(&m);
        prop_assert_eq!(pf.clone() * pf.clone(), determinant(m.matrix()).unwrap());
        prop_assert_eq!(pf, pfaffian_expansion(&m));
    }

    #[test]
    fn odd_pfaffian_vanishes(half in 0usize..3, vals in prop::collection::vec(-4i64..=4, 1..20)) {
        prop_assert_eq!(pfaffian(&skew_from(2 * half + 1, &vals)), rat(0));
    }

    #[test]
    fn determinant_is_multiplicative(x in prop::collection::vec(-5i64..=5, 16), y in prop::collection::vec(-5i64..=5, 16)) {
        let a = Matrix::from_fn(4, 4, |r, c| rat(x[r * 4 + c]));
        let b = Matrix::from_fn(4, 4, |r, c| rat(y[r * 4 + c]));
        let ab = a.matmul(&b).unwrap();
        prop_assert_eq!(determinant(&ab).unwrap(), determinant(&a).unwrap() * determinant(&b).unwrap());
    }

    #[test]
    fn elimination_routes_agree(n in 0usize..6, vals in prop::collection::vec(-6i64..=6, 36)) {
        let m = Matrix::from_fn(n, n, |r, c| ExactInt::from(vals[r * 6 + c]));
        let q = m.map(|v| ExactRational::from_integer(v.clone()));
        prop_assert_eq!(ExactRational::from_integer(determinant_fraction_free(&m).unwrap()), determinant(&q).unwrap());
    }

    #[test]
    fn schur_routes_agree(
        parts in prop::collection::vec(0usize..=4, 0..=4),
        nums in prop::collection::hash_set(-13i64..=13, 1..=5),
    ) {
        let x = EvalPoint::new(nums.into_iter().map(|v| ExactRational::new(v.into(), 7.into())).collect());
        let p = Partition::new(parts);
        prop_assert_eq!(schur_nk(&p, &x), schur_bidet(&p, &x).unwrap());
    }

    #[test]
    fn minor_summation_random(seed in any::<u64>()) {
        use lozenge::sampling::{random_matrix, random_skew, seeded_rng};
        use rand::Rng;
        let mut rng = seeded_rng(seed);
        let q = rng.random_range(0..=2usize);
        let n = q + 2 * rng.random_range(0..=1usize);
        let p = rng.random_range((n - q)..=6usize);
        let (l, r) = minor_summation(
            &random_matrix(&mut rng, n, p, 3),
            &random_matrix(&mut rng, n, q, 3),
            &random_skew(&mut rng, p, 3),
        ).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn bordered_factorisation_random(n in 1usize..=5, vals in prop::collection::vec(-3i64..=3, 40), d in -3i64..=3) {
        let a = skew_from(n, &vals);
        let bv: Vec<_> = vals[..n].iter().map(|&v| rat(v)).collect();
        let cv: Vec<_> = vals[20..20 + n].iter().map(|&v| rat(v)).collect();
        prop_assert!(lemma9_check(&a, &bv, &cv, rat(d)).unwrap());
    }

    #[test]
    fn unranking_round_trips(idx in 0u128..54) {
        let h = PuncturedHexagon::new(2, 2, 2).unwrap();
        let f = nth_family(&h, idx).unwrap();
        prop_assert!(validate_family(&h, &f).is_ok());
    }
}

#[test]
fn pfaffian_generic_over_floats() {
    let m = SkewMatrix::from_upper(4, |i, j| (i + 2 * j) as f64 * 0.5);
    let pf = pfaffian(&m);
    let det = determinant(m.matrix()).unwrap();
    assert!((pf * pf - det).abs() < 1e-9);
    let m32 = SkewMatrix::from_upper(2, |_, _| 3.0f32);
    assert_eq!(pfaffian(&m32), 3.0);
}

#[test]
fn families_use_each_end_point_once() {
    for (a, b, c) in [(1, 1, 1), (2, 2, 2), (1, 3, 3), (3, 1, 1), (2, 2, 1), (1, 1, 2)] {
        let h = PuncturedHexagon::new(a, b, c).unwrap();
        let (_, ends) = start_end_points(&h);
        let mut count = 0u64;
        for_each_family(&h, |f| {
            assert_eq!(f.paths.len(), a + 1);
            let mut hit: Vec<usize> = f.paths.iter().map(|p| ends.iter().position(|&e| e == p.end()).unwrap()).collect();
            // the ordinary paths skip exactly the end point of the exceptional path
            let exceptional = hit[a];
            assert!(!hit[..a].contains(&exceptional));
            hit.sort_unstable();
            assert_eq!(hit, (0..=a).collect::<Vec<_>>());
            count += 1;
        })
        .unwrap();
        assert_eq!(ExactInt::from(count), enumerate_tilings(&h).unwrap());
    }
}

#[test]
fn determinant_route_counts_match_enumeration_beyond_acceptance_range() {
    for (a, b, c) in [(4, 2, 2), (4, 4, 2), (2, 6, 2)] {
        let h = PuncturedHexagon::new(a, b, c).unwrap();
        assert_eq!(enumerate_tilings(&h).unwrap(), count_via_path_determinants(&h).unwrap(), "({a},{b},{c})");
    }
}
