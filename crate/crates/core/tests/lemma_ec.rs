use betaquad::algebra::rat::rat;
use betaquad::lemma_ec::{
    ec_add, ec_mul, lemma1_identities, lemma2_identities, point_count,
    single_coefficient_mutations, the_curve, torsion_points, ECPoint, EllipticCurve,
};
use proptest::prelude::*;

#[test]
fn every_mutation_breaks_every_identity() {
    let ids = [lemma1_identities().unwrap(), lemma2_identities().unwrap()].concat();
    for id in &ids {
        assert!(id.holds, "{}", id.name);
        for m in single_coefficient_mutations(&id.rhs) {
            assert!(!id.with_rhs(m).holds, "{}", id.name);
        }
    }
}

#[test]
fn torsion_order_divides_point_counts() {
    let e = the_curve();
    let n = torsion_points(&e).unwrap().len() as u64;
    for p in [3u64, 7, 11, 13, 17, 19, 23] {
        assert_eq!(point_count(&e, p).unwrap() % n, 0, "p = {p}");
    }
}

fn torsion() -> Vec<ECPoint> {
    torsion_points(&the_curve()).unwrap()
}

proptest! {
    #[test]
    fn group_law_closes_on_torsion(i in 0usize..4, j in 0usize..4) {
        let e = the_curve();
        let t = torsion();
        let s = ec_add(&e, &t[i], &t[j]).unwrap();
        prop_assert!(e.contains(&s));
        prop_assert!(t.contains(&s));
        prop_assert_eq!(s, ec_add(&e, &t[j], &t[i]).unwrap());
    }

    #[test]
    fn mul_matches_repeated_add(n in 0i64..=12, a in 0i64..5) {
        // y^2 = x^3 + 17 with (-2, 3) of infinite order; shifted base points
        let e = EllipticCurve::from_ints(0, 0, 17).unwrap();
        let base = ECPoint::affine(-2, 3);
        let p = ec_mul(&e, a + 1, &base).unwrap();
        let mut acc = ECPoint::Infinity;
        for _ in 0..n {
            acc = ec_add(&e, &acc, &p).unwrap();
        }
        prop_assert!(e.contains(&acc));
        prop_assert_eq!(ec_mul(&e, n, &p).unwrap(), acc);
    }
}

#[test]
fn off_curve_points_rejected() {
    let e = the_curve();
    assert!(ec_mul(&e, 2, &ECPoint::Affine(rat(1), rat(1))).is_err());
}
