//! The e-system: the four polynomial conditions on `(a,b,c,d,p,q)` under
//! which `x^2 + p x + q` annihilates `beta(alpha)` for every root `alpha` of
//! `f = x^4 + a x^3 + b x^2 + c x + d`, plus the decision procedure built on
//! it and an independent resultant oracle.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::rat::{is_rat_square, rat, serde_rat, Rat};
use crate::algebra::{bareiss_det, mp, rational_roots, resultant, MPoly, UPoly, Var, XPoly};
use crate::error::{Error, Result};
use crate::quartic::is_irreducible;

/// The remainder coefficients as printed, constant term first.
pub const PRINTED_E: [&str; 4] = [
    "-3*d*p*a^2 + 5*d*p*a + 3*d*p*b - 6*d*p - d*q*a^2 + 2*d*q*a + d*q*b - 3*d*q \
     - 9*d*a^2 + 12*d*a + 9*d*b - 10*d + q",
    "3*d*p*a - 5*d*p + d*q*a - 2*d*q + 9*d*a - 12*d - 3*p*a^2*c + 5*p*a*c + 3*p*b*c \
     - 6*p*c + p - q*a^2*c + 2*q*a*c + q*b*c - 3*q*c + 2*q - 9*a^2*c + 12*a*c + 9*b*c - 10*c",
    "-3*d*p - d*q - 9*d - 3*p*a^2*b + 5*p*a*b + 3*p*a*c + 3*p*b^2 - 6*p*b - 5*p*c + 3*p \
     - q*a^2*b + 2*q*a*b + q*a*c + q*b^2 - 3*q*b - 2*q*c + 3*q - 9*a^2*b + 12*a*b + 9*a*c \
     + 9*b^2 - 10*b - 12*c + 1",
    "-3*p*a^3 + 5*p*a^2 + 6*p*a*b - 6*p*a - 5*p*b - 3*p*c + 6*p - q*a^3 + 2*q*a^2 \
     + 2*q*a*b - 3*q*a - 2*q*b - q*c + 4*q - 9*a^3 + 12*a^2 + 18*a*b - 10*a - 12*b - 9*c + 4",
];

/// `3X^4 - X^3 - X^2 - X`, the numerator of `beta` over `X^4 - 1`.
pub fn beta_numerator() -> XPoly {
    XPoly::from_ints(&[0, -1, -1, -1, 3])
}

/// `X^4 - 1`.
pub fn beta_denominator() -> XPoly {
    XPoly::from_ints(&[-1, 0, 0, 0, 1])
}

/// `x^4 + a x^3 + b x^2 + c x + d` with symbolic coefficients.
pub fn symbolic_quartic() -> XPoly {
    XPoly::new(vec![
        MPoly::var(Var::D),
        MPoly::var(Var::C),
        MPoly::var(Var::B),
        MPoly::var(Var::A),
        MPoly::one(),
    ])
}

/// `(N0^2 + p N0 D0 + q D0^2) / (X - 1)^2`, of degree 6 in `X`.
pub fn build_numerator_w() -> XPoly {
    let n0 = beta_numerator();
    let d0 = beta_denominator();
    let full = &(&(&n0 * &n0) + &(&(&n0 * &d0) * &MPoly::var(Var::P)))
        + &(&(&d0 * &d0) * &MPoly::var(Var::Q));
    let (w, rem) = full
        .divrem_monic(&XPoly::from_ints(&[1, -2, 1]))
        .expect("(X-1)^2 is monic");
    debug_assert!(rem.is_zero());
    w
}

pub fn printed_e_polynomials() -> [MPoly; 4] {
    PRINTED_E.map(mp)
}

/// The single `lambda` with `computed[i] = lambda * printed[i]` for all `i`,
/// if one exists.
pub fn common_scalar(computed: &[MPoly], printed: &[MPoly]) -> Option<Rat> {
    if computed.len() != printed.len() {
        return None;
    }
    let idx = printed.iter().position(|p| !p.is_zero())?;
    let (m, lead) = printed[idx].leading_term()?;
    let lambda = computed[idx].coeff_of(m) / lead;
    if lambda.is_zero() {
        return None;
    }
    computed
        .iter()
        .zip(printed)
        .all(|(c, p)| *c == p.scale(&lambda))
        .then_some(lambda)
}

/// One row of the specialized system: `p_coeff * p + q_coeff * q = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub p_coeff: Rat,
    pub q_coeff: Rat,
    pub rhs: Rat,
}

/// `M (p, q)^T = v` after substituting numeric `(a, b, c, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub rows: [Row; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique {
        p: Rat,
        q: Rat,
    },
    /// Consistent with a one-parameter family of solutions.
    RankOne,
    /// Every row is `0 = 0`.
    RankZero,
    Inconsistent,
}

impl LinearSolution {
    pub fn is_consistent(&self) -> bool {
        !matches!(self, LinearSolution::Inconsistent)
    }
}

impl LinearSystem {
    pub fn solve(&self) -> LinearSolution {
        let mut m: Vec<[Rat; 3]> = self
            .rows
            .iter()
            .map(|r| [r.p_coeff.clone(), r.q_coeff.clone(), r.rhs.clone()])
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..2 {
            let Some(pr) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(row, pr);
            let inv = m[row][col].recip();
            for x in m[row].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..m.len() {
                if i != row && !m[i][col].is_zero() {
                    let f = m[i][col].clone();
                    let pivot_row = m[row].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if m[row..].iter().any(|r| !r[2].is_zero()) {
            return LinearSolution::Inconsistent;
        }
        match pivots.len() {
            2 => LinearSolution::Unique {
                p: m[0][2].clone(),
                q: m[1][2].clone(),
            },
            1 => LinearSolution::RankOne,
            _ => LinearSolution::RankZero,
        }
    }
}

/// `e_i = p * p_part[i] + q * q_part[i] + const_part[i]`, each part a
/// polynomial in `(a, b, c, d)`.
#[derive(Clone, Debug)]
pub struct ESystem {
    e: [MPoly; 4],
    p_part: [MPoly; 4],
    q_part: [MPoly; 4],
    const_part: [MPoly; 4],
}

impl ESystem {
    fn from_polys(e: [MPoly; 4]) -> Self {
        let split = |poly: &MPoly, v: Var| {
            let mut c = poly.collect_coeffs(v);
            c.resize(2, MPoly::zero());
            (c[0].clone(), c[1].clone())
        };
        let mut p_part = std::array::from_fn(|_| MPoly::zero());
        let mut q_part = std::array::from_fn(|_| MPoly::zero());
        let mut const_part = std::array::from_fn(|_| MPoly::zero());
        for (i, poly) in e.iter().enumerate() {
            let (no_p, with_p) = split(poly, Var::P);
            let (rest, with_q) = split(&no_p, Var::Q);
            p_part[i] = with_p;
            q_part[i] = with_q;
            const_part[i] = rest;
        }
        ESystem {
            e,
            p_part,
            q_part,
            const_part,
        }
    }

    pub fn polys(&self) -> &[MPoly; 4] {
        &self.e
    }

    /// Rows affine in `d` after substituting `(a, b, c)`; entries are
    /// `[p_coeff, q_coeff, rhs]` as polynomials in `d`.
    pub fn rows_in_d(&self, a: &Rat, b: &Rat, c: &Rat) -> [[MPoly; 3]; 4] {
        let assign = [
            (Var::A, a.clone()),
            (Var::B, b.clone()),
            (Var::C, c.clone()),
        ];
        std::array::from_fn(|i| {
            [
                self.p_part[i].substitute_all(&assign),
                self.q_part[i].substitute_all(&assign),
                -self.const_part[i].substitute_all(&assign),
            ]
        })
    }

    pub fn specialize(&self, k: &QuarticCoeffs) -> LinearSystem {
        let assign = k.assignment();
        let ev = |p: &MPoly| p.eval(&assign).expect("e-system uses only a,b,c,d,p,q");
        LinearSystem {
            rows: std::array::from_fn(|i| Row {
                p_coeff: ev(&self.p_part[i]),
                q_coeff: ev(&self.q_part[i]),
                rhs: -ev(&self.const_part[i]),
            }),
        }
    }

    pub fn residuals(&self, k: &QuarticCoeffs, p: &Rat, q: &Rat) -> [Rat; 4] {
        let mut assign = k.assignment().to_vec();
        assign.push((Var::P, p.clone()));
        assign.push((Var::Q, q.clone()));
        std::array::from_fn(|i| self.e[i].eval(&assign).expect("fully assigned"))
    }

    pub fn vanishes_at(&self, k: &QuarticCoeffs, p: &Rat, q: &Rat) -> bool {
        self.residuals(k, p, q).iter().all(Zero::is_zero)
    }
}

/// Reduces `W_core` modulo the symbolic quartic; the remainder coefficients
/// are `e_1..e_4`.
pub fn build_e_polynomials() -> ESystem {
    let (_, rem) = build_numerator_w()
        .divrem_monic(&symbolic_quartic())
        .expect("symbolic quartic is monic");
    ESystem::from_polys(std::array::from_fn(|i| rem.coeff(i)))
}

/// Shared, lazily built e-system.
pub fn e_system() -> &'static ESystem {
    static CELL: OnceLock<ESystem> = OnceLock::new();
    CELL.get_or_init(build_e_polynomials)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticCoeffs {
    #[serde(with = "serde_rat")]
    pub a: Rat,
    #[serde(with = "serde_rat")]
    pub b: Rat,
    #[serde(with = "serde_rat")]
    pub c: Rat,
    #[serde(with = "serde_rat")]
    pub d: Rat,
}

impl QuarticCoeffs {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        QuarticCoeffs { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(rat(a), rat(b), rat(c), rat(d))
    }

    pub fn f(&self) -> UPoly {
        UPoly::new(vec![
            self.d.clone(),
            self.c.clone(),
            self.b.clone(),
            self.a.clone(),
            Rat::one(),
        ])
    }

    pub fn assignment(&self) -> [(Var, Rat); 4] {
        [
            (Var::A, self.a.clone()),
            (Var::B, self.b.clone()),
            (Var::C, self.c.clone()),
            (Var::D, self.d.clone()),
        ]
    }
}

impl fmt::Display for QuarticCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BetaKind {
    Quadratic,
    RationalBeta,
    NotQuadratic,
    Degenerate,
}

impl fmt::Display for BetaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BetaVerdict {
    pub kind: BetaKind,
    #[serde(with = "serde_rat::opt")]
    pub p: Option<Rat>,
    #[serde(with = "serde_rat::opt")]
    pub q: Option<Rat>,
    #[serde(with = "serde_rat::opt")]
    pub disc: Option<Rat>,
    pub real: Option<bool>,
    pub f_irreducible: bool,
    pub notes: String,
}

/// Fails with the common factor when `f` shares a root with `X^4 - 1`.
fn check_roots_of_unity(f: &UPoly) -> Result<()> {
    let g = f.gcd(&UPoly::from_ints(&[-1, 0, 0, 0, 1]));
    if g.degree().unwrap_or(0) > 0 {
        return Err(Error::SharesRootOfUnity(g.to_text("x")));
    }
    Ok(())
}

pub fn decide_beta(k: &QuarticCoeffs) -> Result<BetaVerdict> {
    let f = k.f();
    check_roots_of_unity(&f)?;
    let f_irreducible = is_irreducible(&f)?;
    let system = e_system().specialize(k);
    let verdict = match system.solve() {
        LinearSolution::Unique { p, q } => {
            let disc = &p * &p - Rat::from_integer(4.into()) * &q;
            let (kind, notes) = if is_rat_square(&disc) {
                (
                    BetaKind::Degenerate,
                    "unique (p,q) but p^2-4q is a rational square".to_string(),
                )
            } else {
                (BetaKind::Quadratic, String::new())
            };
            let real = Some(disc.is_positive());
            BetaVerdict {
                kind,
                p: Some(p),
                q: Some(q),
                disc: Some(disc),
                real,
                f_irreducible,
                notes,
            }
        }
        LinearSolution::RankOne => {
            // Rows read r*p + q = -r^2 for the rational value r of beta.
            let notes = system
                .rows
                .iter()
                .find(|r| !r.q_coeff.is_zero())
                .map(|r| format!("beta = {}", &r.p_coeff / &r.q_coeff))
                .unwrap_or_default();
            BetaVerdict {
                kind: BetaKind::RationalBeta,
                p: None,
                q: None,
                disc: None,
                real: None,
                f_irreducible,
                notes,
            }
        }
        LinearSolution::RankZero => BetaVerdict {
            kind: BetaKind::Degenerate,
            p: None,
            q: None,
            disc: None,
            real: None,
            f_irreducible,
            notes: "every quadratic satisfies the system".into(),
        },
        LinearSolution::Inconsistent => BetaVerdict {
            kind: BetaKind::NotQuadratic,
            p: None,
            q: None,
            disc: None,
            real: None,
            f_irreducible,
            notes: String::new(),
        },
    };
    if cfg!(debug_assertions) && f.gcd(&f.derivative()).degree() == Some(0) {
        debug_assert!(
            oracle_agrees(k, &verdict)?,
            "resultant oracle disagrees at {k}"
        );
    }
    Ok(verdict)
}

/// `Res_X(f, N0 - Y D0)` made monic: the product of `Y - beta(alpha_i)`.
pub fn min_poly_beta(k: &QuarticCoeffs) -> Result<UPoly> {
    let f = k.f();
    if f.gcd(&f.derivative()).degree() != Some(0) {
        return Err(Error::Precondition(format!(
            "f = {} is not squarefree",
            f.to_text("x")
        )));
    }
    check_roots_of_unity(&f)?;
    let fx = MPoly::from_upoly(&f, Var::X);
    let g = &beta_numerator().to_mpoly() - &(&MPoly::var(Var::Y) * &beta_denominator().to_mpoly());
    let r = resultant(&fx, &g, Var::X)?.to_upoly(Var::Y)?;
    Ok(r.monic())
}

/// `(p, q)` with `r = (Y^2 + p Y + q)^2`, if `r` has that shape.
pub fn square_of_quadratic(r: &UPoly) -> Option<(Rat, Rat)> {
    if r.degree() != Some(4) || !r.is_monic() {
        return None;
    }
    let two = Rat::from_integer(2.into());
    let p = r.coeff(3) / &two;
    let q = (r.coeff(2) - &p * &p) / &two;
    let g = UPoly::new(vec![q.clone(), p.clone(), Rat::one()]);
    (g.pow(2) == *r).then_some((p, q))
}

/// Whether the resultant oracle confirms `verdict`.
pub fn oracle_agrees(k: &QuarticCoeffs, verdict: &BetaVerdict) -> Result<bool> {
    let r = min_poly_beta(k)?;
    let sq = square_of_quadratic(&r);
    Ok(match verdict.kind {
        BetaKind::Quadratic => {
            sq.as_ref().map(|(p, q)| (Some(p), Some(q)))
                == Some((verdict.p.as_ref(), verdict.q.as_ref()))
        }
        BetaKind::Degenerate => match (&verdict.p, &verdict.q) {
            (Some(p), Some(q)) => sq == Some((p.clone(), q.clone())),
            _ => false,
        },
        BetaKind::RationalBeta => {
            let four = Rat::from_integer(4.into());
            sq.is_some_and(|(p, q)| &p * &p == four * q)
        }
        BetaKind::NotQuadratic => sq.is_none(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DCandidate {
    pub d: Rat,
    pub solution: LinearSolution,
}

/// Every rational `d` at which the augmented system for `(a, b, c)` drops
/// rank, each tagged with how the specialized system solves.
///
/// The candidates are the rational roots of the gcd of the four 3x3 minors
/// of `[M(d) | v(d)]`. An identically vanishing set of minors yields an
/// empty list.
pub fn recover_d(a: &Rat, b: &Rat, c: &Rat) -> Vec<DCandidate> {
    let rows = e_system().rows_in_d(a, b, c);
    let mut g = UPoly::zero();
    for skip in 0..4 {
        let minor: Vec<Vec<MPoly>> = (0..4)
            .filter(|&i| i != skip)
            .map(|i| rows[i].to_vec())
            .collect();
        let det = bareiss_det(minor)
            .to_upoly(Var::D)
            .expect("minors are polynomials in d");
        g = g.gcd(&det);
    }
    if g.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    rational_roots(&g)
        .into_iter()
        .map(|d| {
            let k = QuarticCoeffs::new(a.clone(), b.clone(), c.clone(), d.clone());
            DCandidate {
                solution: e_system().specialize(&k).solve(),
                d,
            }
        })
        .collect()
}

/// The candidates whose system is consistent.
pub fn consistent(cands: &[DCandidate]) -> impl Iterator<Item = &DCandidate> {
    cands.iter().filter(|c| c.solution.is_consistent())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::ratio;

    fn qc(a: Rat, b: Rat, c: Rat, d: Rat) -> QuarticCoeffs {
        QuarticCoeffs::new(a, b, c, d)
    }

    #[test]
    fn w_core_has_degree_six() {
        assert_eq!(build_numerator_w().degree(), Some(6));
    }

    #[test]
    fn q_coefficient_of_w_core() {
        let w = build_numerator_w().to_mpoly();
        let q_coeff = &w.collect_coeffs(Var::Q)[1];
        assert_eq!(*q_coeff, mp("(X^3 + X^2 + X + 1)^2"));
    }

    #[test]
    fn w_core_at_p_q_zero_is_a_square() {
        let w = build_numerator_w()
            .to_mpoly()
            .substitute_rat(Var::P, &rat(0))
            .substitute_rat(Var::Q, &rat(0));
        // N0 / (X - 1) = 3X^3 + 2X^2 + X
        assert_eq!(w, mp("(3*X^3 + 2*X^2 + X)^2"));
    }

    #[test]
    fn e_polynomials_match_printed_with_unit_scalar() {
        let sys = build_e_polynomials();
        let lambda = common_scalar(sys.polys(), &printed_e_polynomials());
        assert_eq!(lambda, Some(rat(1)));
    }

    #[test]
    fn scalar_detection_rejects_mismatch() {
        let printed = printed_e_polynomials();
        let mut scaled: Vec<MPoly> = printed.iter().map(|p| p.scale(&ratio(-3, 2))).collect();
        assert_eq!(common_scalar(&scaled, &printed), Some(ratio(-3, 2)));
        scaled[2] = &scaled[2] + &mp("a");
        assert_eq!(common_scalar(&scaled, &printed), None);
    }

    #[test]
    fn e_system_is_linear_in_p_and_q() {
        for e in e_system().polys() {
            assert!(e.degree_in(Var::P).unwrap_or(0) <= 1);
            assert!(e.degree_in(Var::Q).unwrap_or(0) <= 1);
            assert!(e.terms().all(|(m, _)| m.exp(Var::P) + m.exp(Var::Q) <= 1));
        }
    }

    #[test]
    fn motivating_example_vanishes() {
        let k = QuarticCoeffs::from_ints(2, 5, 4, 2);
        assert!(e_system().vanishes_at(&k, &rat(-4), &rat(2)));
        assert!(!e_system().vanishes_at(&k, &rat(-4), &rat(3)));
    }

    #[test]
    fn decide_motivating_example() {
        let v = decide_beta(&QuarticCoeffs::from_ints(2, 5, 4, 2)).unwrap();
        assert_eq!(v.kind, BetaKind::Quadratic);
        assert_eq!(v.p, Some(rat(-4)));
        assert_eq!(v.q, Some(rat(2)));
        assert_eq!(v.disc, Some(rat(8)));
        assert_eq!(v.real, Some(true));
        assert!(v.f_irreducible);
    }

    #[test]
    fn decide_rational_near_misses() {
        let v = decide_beta(&qc(rat(1), ratio(97, 24), ratio(3, 4), ratio(17, 8))).unwrap();
        assert_eq!(v.kind, BetaKind::Quadratic);
        assert_eq!((v.p, v.q), (Some(ratio(-6, 13)), Some(ratio(-51, 5))));
        assert_eq!(v.real, Some(true));

        // Printed with +3 and +36/5; the oracle confirms the negative signs.
        let k = qc(rat(2), ratio(14, 3), rat(2), rat(1));
        let v = decide_beta(&k).unwrap();
        assert_eq!(
            (v.p.clone(), v.q.clone()),
            (Some(rat(-3)), Some(ratio(-3, 4)))
        );
        assert!(oracle_agrees(&k, &v).unwrap());

        let k = qc(rat(2), ratio(13, 3), rat(4), rat(4));
        let v = decide_beta(&k).unwrap();
        assert_eq!(
            (v.p.clone(), v.q.clone()),
            (Some(ratio(-36, 5)), Some(rat(12)))
        );
        assert!(oracle_agrees(&k, &v).unwrap());
    }

    #[test]
    fn not_quadratic_example() {
        let v = decide_beta(&QuarticCoeffs::from_ints(0, 0, 0, 2)).unwrap();
        assert_eq!(v.kind, BetaKind::NotQuadratic);
        let r = min_poly_beta(&QuarticCoeffs::from_ints(0, 0, 0, 2)).unwrap();
        assert_eq!(r.degree(), Some(4));
        assert!(square_of_quadratic(&r).is_none());
    }

    #[test]
    fn root_of_unity_is_rejected() {
        let err = decide_beta(&QuarticCoeffs::from_ints(0, 0, 0, -1)).unwrap_err();
        assert!(matches!(err, Error::SharesRootOfUnity(_)));
        let err = decide_beta(&QuarticCoeffs::from_ints(2, 2, 2, -7)).unwrap_err();
        assert_eq!(err, Error::SharesRootOfUnity("x - 1".into()));
    }

    #[test]
    fn min_poly_of_motivating_example() {
        let r = min_poly_beta(&QuarticCoeffs::from_ints(2, 5, 4, 2)).unwrap();
        assert_eq!(r, UPoly::from_ints(&[2, -4, 1]).pow(2));
        let r = min_poly_beta(&QuarticCoeffs::from_ints(2, 10, 10, 17)).unwrap();
        assert_eq!(square_of_quadratic(&r), Some((ratio(-13, 2), ratio(85, 8))));
    }

    #[test]
    fn min_poly_requires_squarefree() {
        // (x^2 + 2x + 3)^2
        let err = min_poly_beta(&QuarticCoeffs::from_ints(4, 10, 12, 9)).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn linear_solver_cases() {
        let row = |p: i64, q: i64, r: i64| Row {
            p_coeff: rat(p),
            q_coeff: rat(q),
            rhs: rat(r),
        };
        let sys = LinearSystem {
            rows: [row(1, 0, 2), row(0, 1, 3), row(1, 1, 5), row(0, 0, 0)],
        };
        assert_eq!(
            sys.solve(),
            LinearSolution::Unique {
                p: rat(2),
                q: rat(3)
            }
        );
        let sys = LinearSystem {
            rows: [row(1, 1, 2), row(2, 2, 4), row(0, 0, 0), row(0, 0, 0)],
        };
        assert_eq!(sys.solve(), LinearSolution::RankOne);
        let sys = LinearSystem {
            rows: [row(1, 1, 2), row(2, 2, 5), row(0, 0, 0), row(0, 0, 0)],
        };
        assert_eq!(sys.solve(), LinearSolution::Inconsistent);
        let sys = LinearSystem {
            rows: [row(0, 0, 0), row(0, 0, 0), row(0, 0, 0), row(0, 0, 0)],
        };
        assert_eq!(sys.solve(), LinearSolution::RankZero);
    }

    #[test]
    fn recover_d_examples() {
        let c = recover_d(&rat(2), &rat(5), &rat(4));
        assert!(c.contains(&DCandidate {
            d: rat(2),
            solution: LinearSolution::Unique {
                p: rat(-4),
                q: rat(2)
            }
        }));
        let c = recover_d(&rat(6), &rat(17), &rat(24));
        assert!(consistent(&c).any(|x| x.d == rat(22)));
        let c = recover_d(&rat(2), &rat(2), &rat(2));
        assert!(consistent(&c).any(|x| x.d == rat(-7)));
        assert!(c
            .iter()
            .any(|x| x.d == rat(1) && !x.solution.is_consistent()));
    }

    #[test]
    fn recover_d_off_surface_is_empty() {
        assert!(consistent(&recover_d(&rat(1), &rat(1), &rat(2)))
            .next()
            .is_none());
    }

    #[test]
    fn verdict_json_uses_string_rationals() {
        let v = decide_beta(&qc(rat(1), ratio(97, 24), ratio(3, 4), ratio(17, 8))).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["kind"], "Quadratic");
        assert_eq!(json["p"], "-6/13");
        assert_eq!(json["q"], "-51/5");
        assert_eq!(json["real"], true);
    }
}
