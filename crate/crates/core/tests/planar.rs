use mixvol::bezout::families::random_body;
use mixvol::kernel::Rational;
use mixvol::mixed::mixed_volume_of;
use mixvol::planar::random::*;
use mixvol::planar::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hexagon_identity_and_bound(seed in any::<u64>()) {
        let h = random_hexagon_instance(&mut rng(seed), 6);
        let r = hexagon_check(&h).unwrap();
        prop_assert!(r.identity_holds);
        prop_assert!(r.report.holds(), "{:?}", r.report);
    }

    #[test]
    fn inscribed_triangles_satisfy_bound(seed in any::<u64>()) {
        let (k, l) = random_inscribed_triangles(&mut rng(seed), 6);
        let r = triangle_theorem_check(&k, &l).unwrap();
        prop_assert!(r.inscribed);
        prop_assert!(r.report.holds(), "{:?}", r.report);
    }

    #[test]
    fn nested_triangles_satisfy_bound(seed in any::<u64>()) {
        let (k, l) = random_nested_triangles(&mut rng(seed), 6);
        let r = triangle_theorem_check(&k, &l).unwrap();
        prop_assert!(r.inscribed);
        prop_assert!(r.holds());
    }

    #[test]
    fn decomposition_reconstructs(seed in any::<u64>()) {
        let mut g = rng(seed);
        let p = random_body(&mut g, 2, 5);
        let parts = decompose_polygon(&p).unwrap();
        prop_assert!(reconstructs(&p, &parts));
        let q = random_body(&mut g, 2, 5);
        let total: Rational = parts
            .iter()
            .map(|s| mixed_volume_of(&[&s.polytope, &q]).unwrap())
            .sum();
        prop_assert_eq!(total, mixed_volume_of(&[&p, &q]).unwrap());
    }

    #[test]
    fn symmetric_polygons_split_into_segments(seed in any::<u64>()) {
        let p = random_symmetric_polygon(&mut rng(seed), 5);
        let parts = decompose_polygon(&p).unwrap();
        prop_assert!(parts.iter().all(|s| s.kind == SummandKind::Segment));
    }

    #[test]
    fn plane_bezout_random(seed in any::<u64>()) {
        let mut g = rng(seed);
        let (k, l, d) = (random_body(&mut g, 2, 4), random_body(&mut g, 2, 4), random_body(&mut g, 2, 4));
        prop_assert!(plane_bezout_check(&k, &l, &d).unwrap().holds());
    }
}
