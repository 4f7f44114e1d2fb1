use betaquad::algebra::rat::{rat, ratio};
use betaquad::algebra::{
    discriminant_upoly, rational_roots, resultant, resultant_upoly, MPoly, Monomial, Rat, UPoly,
    Var,
};
use betaquad::quartic::{factor_quartic, is_irreducible};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn upoly(max_deg: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(small_rat(), 1..=max_deg + 1).prop_map(UPoly::new)
}

fn mpoly() -> impl Strategy<Value = MPoly> {
    let vars = [Var::A, Var::B, Var::T];
    prop::collection::vec((small_rat(), 0u16..3, 0u16..3, 0u16..2), 0..6).prop_map(move |terms| {
        terms.into_iter().fold(MPoly::zero(), |acc, (c, i, j, k)| {
            let mut m = Monomial::one();
            for (v, e) in vars.iter().zip([i, j, k]) {
                m.0[v.index()] = e;
            }
            &acc + &MPoly::term(c, m)
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms(p in mpoly(), q in mpoly(), r in mpoly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &MPoly::one(), p.clone());
    }

    #[test]
    fn text_round_trip(p in mpoly()) {
        prop_assert_eq!(MPoly::parse(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn divrem_identity(a in upoly(6), b in upoly(3)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn resultant_is_multiplicative(f in upoly(3), g in upoly(3), h in upoly(2)) {
        prop_assume!(f.degree().unwrap_or(0) > 0 && g.degree().unwrap_or(0) > 0 && h.degree().unwrap_or(0) > 0);
        let lhs = resultant_upoly(&f, &(&g * &h)).unwrap();
        let rhs = resultant_upoly(&f, &g).unwrap() * resultant_upoly(&f, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multivariate_resultant_specializes(a in -5i64..=5) {
        // Res_X(X^2 - a, X - t) = t^2 - a
        let p = &MPoly::var(Var::X).pow(2) - &MPoly::int(a);
        let q = &MPoly::var(Var::X) - &MPoly::var(Var::T);
        let r = resultant(&p, &q, Var::X).unwrap();
        prop_assert_eq!(r, &MPoly::var(Var::T).pow(2) - &MPoly::int(a));
    }

    #[test]
    fn discriminant_is_vandermonde(roots in prop::collection::vec(small_rat(), 2..=4)) {
        let p = roots.iter().fold(UPoly::one(), |acc, r| &acc * &UPoly::linear_root(r));
        let mut v = Rat::from_integer(1.into());
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let d = &roots[i] - &roots[j];
                v *= &d * &d;
            }
        }
        prop_assert_eq!(discriminant_upoly(&p).unwrap(), v);
    }

    #[test]
    fn rational_roots_found(roots in prop::collection::vec(small_rat(), 1..=4), extra in 1i64..5) {
        // times an irreducible quadratic x^2 + extra
        let p = roots.iter().fold(UPoly::from_ints(&[extra, 0, 1]), |acc, r| &acc * &UPoly::linear_root(r));
        let mut want = roots.clone();
        want.sort();
        want.dedup();
        prop_assert_eq!(rational_roots(&p), want);
    }

    #[test]
    fn quartic_factorization_round_trip(p in upoly(4)) {
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        let f = factor_quartic(&p).unwrap();
        prop_assert_eq!(f.expand(), p);
        for (g, _) in &f.factors {
            prop_assert!(g.is_monic());
            if g.degree() == Some(2) {
                prop_assert!(rational_roots(g).is_empty());
            }
        }
    }

    #[test]
    fn products_of_quadratics_are_reducible(a in small_rat(), b in small_rat(), c in small_rat(), d in small_rat()) {
        let p = &UPoly::new(vec![b, a, rat(1)]) * &UPoly::new(vec![d, c, rat(1)]);
        prop_assert!(!is_irreducible(&p).unwrap());
    }
}
