use mixvol::geometry::{intersect, Direction, Polytope};
use mixvol::kernel::{dot, Rational};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn body(dim: usize, max_points: usize) -> impl Strategy<Value = Polytope> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, dim), 1..=max_points).prop_map(|pts| {
        Polytope::convex_hull(pts.into_iter().map(|p| p.into_iter().map(Rational::from).collect()).collect()).unwrap()
    })
}

fn direction(dim: usize) -> impl Strategy<Value = Direction> {
    prop::collection::vec(-3i64..=3, dim)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
        .prop_map(|v| Direction::from_i64(&v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn vertices_are_in_hull_and_facets_valid(p in body(3, 9)) {
        for v in p.vertices() {
            prop_assert!(p.contains_point(v));
        }
        for f in p.facets() {
            for v in p.vertices() {
                prop_assert!(dot(&f.normal, v) <= f.offset);
            }
            prop_assert!(f.vertices.len() >= p.intrinsic_dim());
        }
    }

    #[test]
    fn volume_translation_and_dilation(p in body(3, 8), t in prop::collection::vec(-9i64..=9, 3), s in 1i64..5) {
        let t: Vec<Rational> = t.into_iter().map(Rational::from).collect();
        prop_assert_eq!(p.translate(&t).volume(), p.volume());
        let s = Rational::frac(s, 2);
        prop_assert_eq!(p.scale(&s).volume(), s.pow(3) * p.volume());
    }

    #[test]
    fn volume_monotone(p in body(3, 6), q in body(3, 3)) {
        let hull = Polytope::convex_hull(p.vertices().iter().chain(q.vertices()).cloned().collect()).unwrap();
        prop_assert!(p.volume() <= hull.volume());
        prop_assert!(hull.contains(&p));
    }

    #[test]
    fn support_and_faces(p in body(3, 8), u in direction(3)) {
        let h = p.support_value(&u).unwrap();
        let f = p.face_in_direction(&u).unwrap();
        for v in f.vertices() {
            prop_assert_eq!(dot(u.as_slice(), v), h.clone());
        }
        prop_assert!(p.contains(&f));
    }

    #[test]
    fn minkowski_support_is_additive(p in body(3, 6), q in body(3, 6), u in direction(3)) {
        let s = p.minkowski_sum(&q).unwrap();
        prop_assert_eq!(s.support_value(&u).unwrap(), p.support_value(&u).unwrap() + q.support_value(&u).unwrap());
    }

    #[test]
    fn intersection_is_contained(p in body(3, 7), q in body(3, 7)) {
        if let Some(i) = intersect(&p, &q).unwrap() {
            prop_assert!(p.contains(&i) && q.contains(&i));
            prop_assert!(i.volume() <= p.volume().min(q.volume()));
        }
    }
}

#[test]
fn monte_carlo_volume_within_five_percent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let pts: Vec<Vec<Rational>> = (0..8)
            .map(|_| (0..3).map(|_| Rational::from(rng.gen_range(0..=6))).collect())
            .collect();
        let p = Polytope::convex_hull(pts).unwrap();
        if !p.is_full_dimensional() {
            continue;
        }
        let lo: Vec<f64> = (0..3).map(|c| p.vertices().iter().map(|v| v[c].to_f64()).fold(f64::MAX, f64::min)).collect();
        let hi: Vec<f64> = (0..3).map(|c| p.vertices().iter().map(|v| v[c].to_f64()).fold(f64::MIN, f64::max)).collect();
        let box_vol: f64 = lo.iter().zip(&hi).map(|(a, b)| b - a).product();
        let rows: Vec<(Vec<f64>, f64)> = p
            .halfspaces()
            .into_iter()
            .map(|(a, b)| (a.iter().map(Rational::to_f64).collect(), b.to_f64()))
            .collect();
        let samples = 100_000;
        let hits = (0..samples)
            .filter(|_| {
                let x: Vec<f64> = lo.iter().zip(&hi).map(|(a, b)| rng.gen_range(*a..*b)).collect();
                rows.iter().all(|(a, b)| a.iter().zip(&x).map(|(s, t)| s * t).sum::<f64>() <= *b)
            })
            .count();
        let estimate = box_vol * hits as f64 / samples as f64;
        let exact = p.volume().to_f64();
        assert!((estimate - exact).abs() <= 0.05 * exact, "estimate {estimate} vs exact {exact}");
    }
}
