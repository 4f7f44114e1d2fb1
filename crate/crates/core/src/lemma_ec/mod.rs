//! Symbolic checks behind the irreducibility of the two families, and the
//! elliptic curve that closes the quadratic case of the first one.

pub mod ec;
pub mod lemmas;

use serde::Serialize;

use crate::algebra::rat::{rat, rat_sqrt, serde_rat};
use crate::algebra::{mp, rational_roots, MPoly, Rat, Var};
use crate::error::Result;
pub use ec::{
    ec_add, ec_mul, ec_neg, point_count, point_order, torsion_points, torsion_report, ECPoint,
    EllipticCurve, TorsionReport,
};
pub use lemmas::{
    lemma1_identities, lemma2_identities, single_coefficient_mutations, LemmaIdentity,
};

/// `E: U^2 = X^3 + 6X^2 - 20X + 8`.
pub const E_CUBIC: &str = "X^3 + 6*X^2 - 20*X + 8";
/// Right side of `C: U^2 = ...`, the discriminant of the quartic factor.
pub const C_RHS: &str = "(-8)*(s1^2 - 2*s1 + 2)*(s1^4 - 4*s1^3 + 2*s1^2 + 4*s1 - 4)";
/// `phi(s1, U) = (-2(s1 - 1)^2, U)`.
pub const PHI_X: &str = "-2*(s1 - 1)^2";
const QUARTIC_FACTOR: &str =
    "s1^4 + 2*s1^2*t^2 - 4*s1^3 + 4*s1^2*t - 4*s1*t^2 + 6*s1^2 - 8*s1*t - 4*s1 + 8*t";

pub fn the_curve() -> EllipticCurve {
    EllipticCurve::from_ints(6, -20, 8).expect("nonsingular")
}

pub fn phi_map_check_with(cubic: &MPoly) -> bool {
    cubic.substitute(Var::X, &mp(PHI_X)) == mp(C_RHS)
}

/// The cubic of `E` pulled back along `phi` is the right side of `C`.
pub fn phi_map_check() -> bool {
    phi_map_check_with(&mp(E_CUBIC))
}

pub fn phi(s1: &Rat, u: &Rat) -> ECPoint {
    let m = s1 - rat(1);
    ECPoint::Affine(rat(-2) * &m * &m, u.clone())
}

#[derive(Clone, Debug, Serialize)]
pub struct CPoint {
    #[serde(with = "serde_rat")]
    pub s1: Rat,
    #[serde(with = "serde_rat")]
    pub u_squared: Rat,
    #[serde(with = "serde_rat::opt")]
    pub u: Option<Rat>,
    /// The `U` value listed in the text.
    pub printed_u: i64,
    pub images: Vec<ECPoint>,
    pub images_are_torsion: bool,
    /// Rational roots in `t` of the quartic factor at this `s1`.
    pub t_roots: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CPointsReport {
    pub points: Vec<CPoint>,
    pub holds: bool,
}

pub fn c_points_check() -> Result<CPointsReport> {
    let rhs = mp(C_RHS);
    let factor = mp(QUARTIC_FACTOR);
    let tors = torsion_points(&the_curve())?;
    let mut points = Vec::new();
    for s1 in [rat(0), rat(2)] {
        let u_squared = rhs.eval(&[(Var::S1, s1.clone())])?;
        let u = rat_sqrt(&u_squared);
        let images: Vec<ECPoint> = u
            .iter()
            .flat_map(|u| [phi(&s1, u), phi(&s1, &-u)])
            .collect();
        let images_are_torsion = !images.is_empty() && images.iter().all(|p| tors.contains(p));
        let in_t = factor.substitute_rat(Var::S1, &s1).to_upoly(Var::T)?;
        let t_roots = rational_roots(&in_t)
            .iter()
            .map(|r| r.to_string())
            .collect();
        points.push(CPoint {
            s1,
            u_squared,
            u,
            printed_u: 4,
            images,
            images_are_torsion,
            t_roots,
        });
    }
    let holds = points
        .iter()
        .all(|p| p.u_squared == rat(64) && p.images_are_torsion && p.t_roots == ["0"]);
    Ok(CPointsReport { points, holds })
}
