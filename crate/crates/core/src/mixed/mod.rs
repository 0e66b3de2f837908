//! Mixed volumes of polytopes and the sequences built from them.

mod essential;
mod facet_sum;
mod inclusion_exclusion;
mod query;
pub mod sequences;

pub use essential::is_essential;
pub use facet_sum::mixed_volume_facet_sum;
pub(crate) use facet_sum::{face_toward, sum_normals};
pub use inclusion_exclusion::{mixed_volume, mixed_volume_cached, VolumeCache};
pub use query::MixedVolumeQuery;
pub use sequences::{
    af_sequence, binomial_convolution, decomposition_chain_check, has_internal_zeros, is_log_concave,
    is_log_concave_pairwise, is_log_linear,
    AfSequence, ChainReport,
};

/// V(P₁,…,Pₙ) with one slot per body.
pub fn mixed_volume_of(bodies: &[&crate::geometry::Polytope]) -> crate::error::Result<crate::kernel::Rational> {
    Ok(mixed_volume(&MixedVolumeQuery::from_bodies(bodies.iter().copied())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{point_i64, Polytope};
    use crate::kernel::Rational;

    fn octahedron() -> Polytope {
        Polytope::from_i64(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]]).unwrap()
    }

    fn opposite_face_segment() -> Polytope {
        let t = Rational::frac(1, 3);
        Polytope::segment(vec![-&t, -&t, -&t], vec![t.clone(), t.clone(), t]).unwrap()
    }

    fn face() -> Polytope {
        Polytope::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()
    }

    #[test]
    fn octahedron_counterexample_values() {
        let (o, k1, k2) = (octahedron(), opposite_face_segment(), face());
        let both = |a: &Polytope, b: &Polytope, c: &Polytope| {
            let ie = mixed_volume_of(&[a, b, c]).unwrap();
            let fs = mixed_volume_facet_sum(a, &[b.clone(), c.clone()]).unwrap();
            assert_eq!(ie, fs);
            ie
        };
        assert_eq!(both(&k1, &k2, &o), Rational::frac(2, 3));
        assert_eq!(both(&k1, &o, &o), Rational::frac(2, 3));
        assert_eq!(both(&k2, &o, &o), Rational::one());
        assert_eq!(both(&o, &o, &o), Rational::frac(4, 3));
    }

    #[test]
    fn unit_square_and_segment() {
        let sq = Polytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let seg = Polytope::segment(point_i64(&[0, 0]), point_i64(&[1, 0])).unwrap();
        let seq = af_sequence(&sq, &seg).unwrap();
        assert_eq!(seq.terms, vec![Rational::one(), Rational::frac(1, 2), Rational::zero()]);
        let report = decomposition_chain_check(&sq, &seg).unwrap();
        assert_eq!(report.c, [Rational::one(), Rational::frac(1, 2), Rational::zero()]);
        assert!(report.identity_holds && report.equivalence_holds && report.log_concavity_propagates);
        assert!(!report.inequality_holds);
    }

    #[test]
    fn segments_in_the_plane() {
        let a = Polytope::segment(point_i64(&[0, 0]), point_i64(&[2, 1])).unwrap();
        let b = Polytope::segment(point_i64(&[0, 0]), point_i64(&[1, 3])).unwrap();
        // |det| / 2!·2! summed over the two orderings
        assert_eq!(mixed_volume_of(&[&a, &b]).unwrap(), Rational::frac(5, 2));
        assert_eq!(mixed_volume_of(&[&a, &a]).unwrap(), Rational::zero());
        assert!(is_essential(&[a.clone(), b]).unwrap());
        assert!(!is_essential(&[a.clone(), a]).unwrap());
    }

    #[test]
    fn query_validation() {
        let sq = Polytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        assert!(MixedVolumeQuery::new(vec![(sq.clone(), 1)]).is_err());
        assert!(MixedVolumeQuery::new(vec![(sq.clone(), 0), (sq.clone(), 2)]).is_err());
        assert!(MixedVolumeQuery::new(vec![]).is_err());
        let q = MixedVolumeQuery::new(vec![(sq.clone(), 1), (sq.clone(), 1)]).unwrap();
        assert_eq!(q.entries().len(), 1);
        assert_eq!(mixed_volume(&q), Rational::one());
        assert!(is_essential(&[sq.clone(), sq.clone(), sq]).is_err());
    }

    #[test]
    fn sequence_helpers() {
        let s = |v: &[i64]| v.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>();
        assert!(is_log_concave(&s(&[1, 2, 3, 2])).unwrap());
        assert!(!is_log_concave(&s(&[1, 1, 3])).unwrap());
        assert!(is_log_concave(&s(&[1, -1, 1])).is_err());
        // internal zero: locally log-concave but not pairwise
        let gap = s(&[1, 0, 0, 1]);
        assert!(is_log_concave(&gap).unwrap());
        assert!(!is_log_concave_pairwise(&gap).unwrap());
        assert_eq!(binomial_convolution(&s(&[1, 2, 3, 4]), 2).unwrap(), s(&[8, 12]));
        assert!(binomial_convolution(&s(&[1, 2]), 2).is_err());
    }
}
