//! The coefficient-matching systems behind the irreducibility of the two
//! families, re-derived and compared with the printed consequences.

use serde::Serialize;

use crate::algebra::{discriminant, mp, rat, resultant, MPoly, Var};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaIdentity {
    pub name: String,
    /// Re-derived.
    pub lhs: MPoly,
    /// Printed.
    pub rhs: MPoly,
    pub holds: bool,
}

#[derive(Serialize)]
struct IdentityJson<'a> {
    name: &'a str,
    lhs: String,
    rhs: String,
    holds: bool,
}

impl Serialize for LemmaIdentity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdentityJson {
            name: &self.name,
            lhs: self.lhs.to_text(),
            rhs: self.rhs.to_text(),
            holds: self.holds,
        }
        .serialize(s)
    }
}

impl LemmaIdentity {
    pub fn new(name: &str, lhs: MPoly, rhs: MPoly) -> Self {
        let holds = lhs == rhs;
        LemmaIdentity {
            name: name.to_string(),
            lhs,
            rhs,
            holds,
        }
    }

    /// The same comparison against a different printed side.
    pub fn with_rhs(&self, rhs: MPoly) -> Self {
        Self::new(&self.name, self.lhs.clone(), rhs)
    }
}

pub const F1_TEXT: &str = "X^4 + 2*X^3 + (2*t^2 + 2)*X^2 + (4*t^2 - 4*t + 2)*X + 6*t^2 - 4*t + 1";
pub const F2_TEXT: &str = "X^4 + 2*t*X^3 + (t^2 + 2*t + 2)*X^2 + (2*t^2 + 2*t)*X + 3*t^2 - 2*t + 1";

/// Coefficients in `X` of `f - ansatz`, constant term first.
fn matching(f: &MPoly, ansatz: &MPoly) -> Vec<MPoly> {
    let mut c = (f - ansatz).collect_coeffs(Var::X);
    c.resize(4, MPoly::zero());
    c
}

fn v(name: Var) -> MPoly {
    MPoly::var(name)
}

/// The linear-factor case: with `s2, s3` eliminated, the two equations in
/// `(s1, s4, t)` as printed (constant term first).
fn linear_case(f: &MPoly) -> (MPoly, MPoly, MPoly, MPoly) {
    let ansatz = mp("(X + s1)*(X^3 + s2*X^2 + s3*X + s4)");
    let eqs = matching(f, &ansatz);
    // X^3: lc - s1 - s2 = 0, X^2: lc - s1 s2 - s3 = 0.
    let s2 = &eqs[3] + &v(Var::S2);
    let s3 = eqs[2].substitute(Var::S2, &s2) + v(Var::S3);
    let sub = |e: &MPoly| e.substitute(Var::S2, &s2).substitute(Var::S3, &s3);
    (s2.clone(), s3.clone(), sub(&eqs[0]), sub(&eqs[1]))
}

/// The two-quadratics case: with `s3, s4` eliminated, the two equations in
/// `(s1, s2, t)` (constant term first).
fn quadratic_case(f: &MPoly) -> (MPoly, MPoly) {
    let ansatz = mp("(X^2 + s1*X + s2)*(X^2 + s3*X + s4)");
    let eqs = matching(f, &ansatz);
    let s3 = &eqs[3] + &v(Var::S3);
    let s4 = eqs[2].substitute(Var::S3, &s3) + v(Var::S4);
    let sub = |e: &MPoly| e.substitute(Var::S3, &s3).substitute(Var::S4, &s4);
    (sub(&eqs[0]), sub(&eqs[1]))
}

pub fn lemma1_identities() -> Result<Vec<LemmaIdentity>> {
    let f = mp(F1_TEXT);
    let mut out = Vec::new();

    let (s2, s3, e0, e1) = linear_case(&f);
    out.push(LemmaIdentity::new("f1 linear: s2", s2, mp("2 - s1")));
    out.push(LemmaIdentity::new(
        "f1 linear: s3",
        s3,
        mp("s1^2 + 2*t^2 - 2*s1 + 2"),
    ));
    out.push(LemmaIdentity::new(
        "f1 linear: first equation",
        e0.clone(),
        mp("-s1*s4 + 6*t^2 - 4*t + 1"),
    ));
    out.push(LemmaIdentity::new(
        "f1 linear: second equation",
        e1.clone(),
        mp("-s1^3 - 2*s1*t^2 + 2*s1^2 + 4*t^2 - 2*s1 - s4 - 4*t + 2"),
    ));
    let res = resultant(&e0, &e1, Var::S4)?;
    out.push(LemmaIdentity::new(
        "f1 linear: resultant is quadratic in t",
        MPoly::int(res.degree_in(Var::T).unwrap_or(0) as i64),
        MPoly::int(2),
    ));
    out.push(LemmaIdentity::new(
        "f1 linear: discriminant in t",
        discriminant(&res, Var::T)?,
        mp("(-8)*(s1 - 1)^2*(s1^4 - 2*s1^3 + 4*s1^2 - 2*s1 + 1)"),
    ));

    let (q0, q1) = quadratic_case(&f);
    out.push(LemmaIdentity::new(
        "f1 quadratic: first equation",
        q0.clone(),
        mp("-s1^2*s2 - 2*s2*t^2 + 2*s1*s2 + s2^2 + 6*t^2 - 2*s2 - 4*t + 1"),
    ));
    out.push(LemmaIdentity::new(
        "f1 quadratic: second equation",
        q1.clone(),
        mp("-s1^3 - 2*s1*t^2 + 2*s1^2 + 2*s1*s2 + 4*t^2 - 2*s1 - 2*s2 - 4*t + 2"),
    ));
    let factor_a = mp("s1^2 + 2*t^2 - 2*s1 - 4*t + 2");
    let factor_b =
        mp("s1^4 + 2*s1^2*t^2 - 4*s1^3 + 4*s1^2*t - 4*s1*t^2 + 6*s1^2 - 8*s1*t - 4*s1 + 8*t");
    out.push(LemmaIdentity::new(
        "f1 quadratic: resultant in s2",
        resultant(&q0, &q1, Var::S2)?,
        &(&mp("-1") * &factor_a) * &factor_b,
    ));
    out.push(LemmaIdentity::new(
        "f1 quadratic: discriminant of the quadratic factor",
        discriminant(&factor_a, Var::T)?,
        mp("-8*s1^2 + 16*s1"),
    ));
    out.push(LemmaIdentity::new(
        "f1 quadratic: discriminant of the quartic factor",
        discriminant(&factor_b, Var::T)?,
        mp("(-8)*(s1^2 - 2*s1 + 2)*(s1^4 - 4*s1^3 + 2*s1^2 + 4*s1 - 4)"),
    ));
    Ok(out)
}

pub fn lemma2_identities() -> Result<Vec<LemmaIdentity>> {
    let f = mp(F2_TEXT);
    let mut out = Vec::new();

    let (s2, s3, e0, e1) = linear_case(&f);
    out.push(LemmaIdentity::new("f2 linear: s2", s2, mp("2*t - s1")));
    out.push(LemmaIdentity::new(
        "f2 linear: s3",
        s3,
        mp("s1^2 - 2*s1*t + t^2 + 2*t + 2"),
    ));
    out.push(LemmaIdentity::new(
        "f2 linear: first equation",
        e0.clone(),
        mp("-s1*s4 + 3*t^2 - 2*t + 1"),
    ));
    out.push(LemmaIdentity::new(
        "f2 linear: second equation",
        e1.clone(),
        mp("-s1^3 + 2*s1^2*t - s1*t^2 - 2*s1*t + 2*t^2 - 2*s1 - s4 + 2*t"),
    ));
    let res = resultant(&e0, &e1, Var::S4)?;
    out.push(LemmaIdentity::new(
        "f2 linear: discriminant in t",
        discriminant(&res, Var::T)?,
        mp("(-8)*(s1^4 - 2*s1^3 + 4*s1^2 - 2*s1 + 1)"),
    ));

    let (q0, q1) = quadratic_case(&f);
    out.push(LemmaIdentity::new(
        "f2 quadratic: first equation",
        q0.clone(),
        mp("-s1^2*s2 + 2*s1*s2*t - s2*t^2 + s2^2 - 2*s2*t + 3*t^2 - 2*s2 - 2*t + 1"),
    ));
    out.push(LemmaIdentity::new(
        "f2 quadratic: second equation factored",
        q1,
        mp("(-1)*(-s1 + t)*(-s1^2 + s1*t + 2*s2 - 2*t - 2)"),
    ));
    let at_t = q0.substitute(Var::S1, &v(Var::T));
    out.push(LemmaIdentity::new(
        "f2 quadratic: s1 = t residual",
        at_t.clone(),
        mp("s2^2 - 2*s2*t + 3*t^2 - 2*s2 - 2*t + 1"),
    ));
    out.push(LemmaIdentity::new(
        "f2 quadratic: s1 = t discriminant in s2",
        discriminant(&at_t, Var::S2)?,
        mp("(-8)*t*(t - 2)"),
    ));
    let s2 = mp("(s1^2 - s1*t + 2*t + 2)/2");
    let quartic = q0.substitute(Var::S2, &s2);
    out.push(LemmaIdentity::new(
        "f2 quadratic: equation in s1 and t",
        quartic.clone(),
        mp(
            "(1/4)*(-s1^4 + 4*s1^3*t - 5*s1^2*t^2 + 2*s1*t^3 - 4*s1^2*t + 8*s1*t^2 - 4*t^3 \
            - 4*s1^2 + 8*s1*t + 4*t^2 - 16*t)",
        ),
    ));
    out.push(LemmaIdentity::new(
        "f2 quadratic: discriminant in s1",
        discriminant(&quartic, Var::S1)?,
        mp("(-1/32)*t*(t - 2)*(t^4 - 8*t^3 + 40*t^2 - 32*t + 16)^2"),
    ));
    Ok(out)
}

/// Every printed side with one coefficient bumped by one, plus one with an
/// extra constant term.
pub fn single_coefficient_mutations(printed: &MPoly) -> Vec<MPoly> {
    let mut out: Vec<MPoly> = printed
        .terms()
        .map(|(m, _)| printed + &MPoly::term(rat(1), *m))
        .collect();
    out.push(printed + &MPoly::one());
    out
}
