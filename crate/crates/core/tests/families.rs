use betaquad::algebra::rat::{rat, ratio};
use betaquad::esystem::e_system;
use betaquad::families::{family1, family2, s_integer_examples};
use betaquad::quartic::factor_quartic;
use betaquad::verify::{family_irreducibility, family_windows};

#[test]
fn windows_and_identities_on_fine_grid() {
    let (holds, details) = family_windows().unwrap();
    assert!(holds, "{details}");
}

#[test]
fn irreducibility_matches_the_lemmas() {
    let (holds, details) = family_irreducibility().unwrap();
    assert!(holds, "{details}");
    let f = factor_quartic(&family2(&rat(2)).unwrap().coeffs.f()).unwrap();
    assert_eq!(f.to_string(), "(x^2 + 2*x + 3)^2");
}

#[test]
fn poles_reported() {
    assert!(family1(&rat(0)).is_err());
    assert!(family1(&rat(1)).is_err());
    assert!(family2(&rat(0)).is_err());
    assert!(family1(&ratio(1, 2)).is_ok());
}

#[test]
fn s_integer_members_are_real() {
    let recs = s_integer_examples(&[2, 3], 6).unwrap();
    for r in &recs {
        assert!(r.disc.clone().unwrap() > rat(0));
        assert!(e_system().vanishes_at(&r.coeffs, r.p.as_ref().unwrap(), r.q.as_ref().unwrap()));
    }
    // the integer-t irreducibility does not extend to rational t
    let split: Vec<_> = recs
        .iter()
        .filter(|r| !r.irreducible)
        .map(|r| r.t.to_string())
        .collect();
    assert_eq!(split, ["2/3", "4/3"]);
}
