//! Closed-form solution families and their reducible branches.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::rat::{rat, serde_rat, Rat};
use crate::algebra::{mp, MPoly, UPoly, Var};
use crate::error::{Error, Result};
use crate::esystem::QuarticCoeffs;
use crate::quartic::is_irreducible;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyId {
    F1,
    F2,
    Circle,
    Cbranch,
}

impl FamilyId {
    pub fn name(self) -> &'static str {
        match self {
            FamilyId::F1 => "f1",
            FamilyId::F2 => "f2",
            FamilyId::Circle => "circle",
            FamilyId::Cbranch => "cbranch",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "f1" => Ok(FamilyId::F1),
            "f2" => Ok(FamilyId::F2),
            "circle" => Ok(FamilyId::Circle),
            "cbranch" => Ok(FamilyId::Cbranch),
            _ => Err(Error::InvalidArgument(format!("unknown family `{s}`"))),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRecord {
    pub family: FamilyId,
    /// The family parameter; `u` for the c-branch.
    #[serde(with = "serde_rat")]
    pub t: Rat,
    pub coeffs: QuarticCoeffs,
    #[serde(with = "serde_rat::opt")]
    pub p: Option<Rat>,
    #[serde(with = "serde_rat::opt")]
    pub q: Option<Rat>,
    #[serde(with = "serde_rat::opt")]
    pub disc: Option<Rat>,
    pub irreducible: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub notes: String,
}

pub const CSV_HEADER: &str = "family,t,a,b,c,d,p,q,disc,irreducible";

impl FamilyRecord {
    fn with_pq(family: FamilyId, t: &Rat, coeffs: QuarticCoeffs, p: Rat, q: Rat) -> Result<Self> {
        let disc = &p * &p - rat(4) * &q;
        let irreducible = is_irreducible(&coeffs.f())?;
        Ok(FamilyRecord {
            family,
            t: t.clone(),
            coeffs,
            p: Some(p),
            q: Some(q),
            disc: Some(disc),
            irreducible,
            notes: String::new(),
        })
    }

    pub fn csv_row(&self) -> String {
        let opt = |r: &Option<Rat>| r.as_ref().map_or("-".to_string(), Rat::to_string);
        let k = &self.coeffs;
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.family,
            self.t,
            k.a,
            k.b,
            k.c,
            k.d,
            opt(&self.p),
            opt(&self.q),
            opt(&self.disc),
            self.irreducible
        )
    }
}

fn poly(t: &Rat, coeffs: &[i64]) -> Rat {
    UPoly::from_ints(coeffs).eval(t)
}

/// `a = 2, b = 2t^2 + 2, c = 4t^2 - 4t + 2, d = 6t^2 - 4t + 1`.
pub fn family1(t: &Rat) -> Result<FamilyRecord> {
    if t.is_zero() {
        return Err(Error::Pole(
            "t = 0: f1(0) = (x + 1)^2(x^2 + 1) is reducible".into(),
        ));
    }
    if t.is_one() {
        return Err(Error::Pole(
            "t = 1: f1(1) = (x^2 + 1)(x^2 + 2x + 3) is reducible".into(),
        ));
    }
    let coeffs = QuarticCoeffs::new(
        rat(2),
        poly(t, &[2, 0, 2]),
        poly(t, &[2, -4, 4]),
        poly(t, &[1, -4, 6]),
    );
    let p = -poly(t, &[1, -6, 6]) / poly(t, &[0, -1, 1]);
    let q = poly(t, &[-1, 7, -18, 18]) / poly(t, &[0, 0, -2, 2]);
    FamilyRecord::with_pq(FamilyId::F1, t, coeffs, p, q)
}

/// `a = 2t, b = t^2 + 2t + 2, c = 2t^2 + 2t, d = 3t^2 - 2t + 1`.
pub fn family2(t: &Rat) -> Result<FamilyRecord> {
    if t.is_zero() {
        return Err(Error::Pole(
            "t = 0: f2(0) = (x^2 + 1)^2 is reducible".into(),
        ));
    }
    let coeffs = QuarticCoeffs::new(
        poly(t, &[0, 2]),
        poly(t, &[2, 2, 1]),
        poly(t, &[0, 2, 2]),
        poly(t, &[1, -2, 3]),
    );
    let p = -poly(t, &[8, -10, 6]) / poly(t, &[2, -2, 1]);
    let q = poly(t, &[-2, 7, -12, 9]) / poly(t, &[0, 2, -2, 1]);
    FamilyRecord::with_pq(FamilyId::F2, t, coeffs, p, q)
}

/// The rational points of `(c - 2b + 6)^2 + 2(2b - 9)^2 = 2` at `a = 2`.
pub fn circle_family(t: &Rat) -> Result<FamilyRecord> {
    let den = poly(t, &[1, 0, 2]);
    let coeffs = QuarticCoeffs::new(
        rat(2),
        poly(t, &[5, 0, 8]) / &den,
        poly(t, &[4, -4, 4]) / &den,
        poly(t, &[2, -4, 6]) / &den,
    );
    let den_pq = poly(t, &[1, 0, 4]);
    let p = poly(t, &[-4, 4, -20, 8]) / &den_pq;
    let q = -(poly(t, &[-1, 4]) * poly(t, &[2, -4, 6])) / &den_pq;
    FamilyRecord::with_pq(FamilyId::Circle, t, coeffs, p, q)
}

/// The circle point reached as `t -> infinity`: `x^4 + 2x^3 + 4x^2 + 2x + 3`,
/// which shares `x^2 + 1` with `x^4 - 1`.
pub fn circle_limit() -> FamilyRecord {
    let coeffs = QuarticCoeffs::from_ints(2, 4, 2, 3);
    FamilyRecord {
        family: FamilyId::Circle,
        t: Rat::zero(),
        irreducible: false,
        coeffs,
        p: None,
        q: None,
        disc: None,
        notes: "limit t -> infinity; (x^2 + 1)(x^2 + 2x + 3)".into(),
    }
}

/// The circle parameter at which the quartic splits: `t = (2 - s^2) / (4s)`.
pub fn remark2_t(s: &Rat) -> Result<Rat> {
    if s.is_zero() {
        return Err(Error::Pole("s = 0".into()));
    }
    Ok((rat(2) - s * s) / (rat(4) * s))
}

/// The two quadratic factors of the circle quartic at `t = (2 - s^2)/(4s)`,
/// checked against the circle family exactly.
pub fn remark2_split(s: &Rat) -> Result<(UPoly, UPoly)> {
    let t = remark2_t(s)?;
    let den = poly(s, &[2, 0, 1]);
    let g1 = UPoly::new(vec![poly(s, &[6, 4, 1]) / &den, rat(4) / &den, Rat::one()]);
    let g2 = UPoly::new(vec![
        poly(s, &[2, -4, 3]) / &den,
        poly(s, &[0, 0, 2]) / &den,
        Rat::one(),
    ]);
    let f = circle_family(&t)?.coeffs.f();
    if &g1 * &g2 != f {
        return Err(Error::Precondition(format!(
            "split at s = {s} does not reproduce the circle quartic"
        )));
    }
    Ok((g1, g2))
}

/// `D^k P(N / D)` for `P` of degree at most `k`.
fn homogenize(p: &[i64], n: &MPoly, d: &MPoly, k: usize) -> MPoly {
    p.iter().enumerate().fold(MPoly::zero(), |acc, (i, &c)| {
        &acc + &(&(&n.pow(i as u32) * &d.pow((k - i) as u32)) * &MPoly::int(c))
    })
}

/// The split as a polynomial identity in `s` (and `X`).
pub fn remark2_symbolic_check() -> bool {
    let (n, d) = (mp("2 - s^2"), mp("4*s"));
    let h = |c: &[i64]| homogenize(c, &n, &d, 2);
    let den = h(&[1, 0, 2]);
    let lhs = &(&(&den * &mp("X^4 + 2*X^3")) + &(&h(&[5, 0, 8]) * &mp("X^2")))
        + &(&(&h(&[4, -4, 4]) * &mp("X")) + &h(&[2, -4, 6]));
    let rhs =
        mp("((s^2 + 2)*X^2 + 4*X + s^2 + 4*s + 6)*((s^2 + 2)*X^2 + 2*s^2*X + 3*s^2 - 4*s + 2)");
    &lhs * &mp("(s^2 + 2)^2") == &den * &rhs
}

/// `b` on the c-branch as printed.
pub fn c_branch_b() -> MPoly {
    mp("(9*a^2 + 36*a - 16 - 8*u - u^2)/36")
}

/// `d` on the c-branch: the value that makes the printed factorization and
/// the printed curve equation hold.
pub fn c_branch_d() -> MPoly {
    mp("(9*a^2 - 12*a + 4 - u^2)/12")
}

/// `d` on the c-branch as printed; inconsistent with both identities.
pub fn c_branch_d_printed() -> MPoly {
    mp("(9*a^2 + 36*a - 16 + 8*u - u^2)/36")
}

fn c_branch_quartic(d: &MPoly) -> MPoly {
    let b = c_branch_b();
    let c = &(&b * &MPoly::int(2)) - &mp("a");
    &(&(&mp("X^4 + a*X^3") + &(&b * &mp("X^2"))) + &(&c * &mp("X"))) + d
}

/// `f - (1/36)(6x + u + 3a - 2)(6x^3 + ...)` with the given `d`.
pub fn c_branch_factor_residual(d: &MPoly) -> MPoly {
    let product = mp(
        "(6*X + u + 3*a - 2)*(6*X^3 + (3*a - u + 2)*X^2 + 2*(3*a - u - 1)*X + 3*(3*a - u - 2))/36",
    );
    &c_branch_quartic(d) - &product
}

/// `(9b - 12a - 3d + 5)^2 - 4(3a - 2)^2 + 48d` with the c-branch `b` and the
/// given `d`.
pub fn c_branch_curve_residual(d: &MPoly) -> MPoly {
    let lin = &(&(&c_branch_b() * &MPoly::int(9)) - &mp("12*a"))
        - &(&(d * &MPoly::int(3)) - &MPoly::int(5));
    &(&lin.pow(2) - &mp("4*(3*a - 2)^2")) + &(d * &MPoly::int(48))
}

pub const C_BRANCH_NOTE: &str =
    "d = (9a^2 - 12a + 4 - u^2)/12; printed d = (9a^2 + 36a - 16 + 8u - u^2)/36 \
     breaks the factorization and the curve equation";

/// A point of the reducible `c = 2b - a` branch.
pub fn c_branch(a: &Rat, u: &Rat) -> Result<FamilyRecord> {
    let assign = [(Var::A, a.clone()), (Var::U, u.clone())];
    let b = c_branch_b().eval(&assign)?;
    let d = c_branch_d().eval(&assign)?;
    let c = &b * rat(2) - a;
    let coeffs = QuarticCoeffs::new(a.clone(), b, c, d);
    let residual = c_branch_factor_residual(&c_branch_d()).substitute_all(&assign);
    debug_assert!(residual.is_zero());
    Ok(FamilyRecord {
        family: FamilyId::Cbranch,
        t: u.clone(),
        irreducible: is_irreducible(&coeffs.f())?,
        coeffs,
        p: None,
        q: None,
        disc: None,
        notes: C_BRANCH_NOTE.into(),
    })
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|k| k * k <= n)
            .all(|k| !n.is_multiple_of(k))
}

fn is_s_smooth(mut n: u64, primes: &[u64]) -> bool {
    for &p in primes {
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    n == 1
}

/// `n` family-2 members with `t` an `S`-integer in `(0, 2)`; all have real
/// quadratic `beta` and `S`-integral coefficients.
///
/// Denominators run through the `S`-smooth integers above 1 in increasing
/// order, numerators increasing. With `S` empty the only choice is `t = 1`.
pub fn s_integer_examples(primes: &[u64], n: usize) -> Result<Vec<FamilyRecord>> {
    if n == 0 {
        return Err(Error::InvalidArgument("count must be positive".into()));
    }
    if let Some(&bad) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::InvalidArgument(format!("{bad} is not prime")));
    }
    if primes.is_empty() {
        return Ok(vec![family2(&rat(1))?]);
    }
    let mut out = Vec::with_capacity(n);
    let mut den: u64 = 2;
    while out.len() < n {
        if is_s_smooth(den, primes) {
            for num in 1..2 * den {
                if num.gcd(&den) != 1 {
                    continue;
                }
                let t = Rat::new(BigInt::from(num), BigInt::from(den));
                out.push(family2(&t)?);
                if out.len() == n {
                    break;
                }
            }
        }
        den += 1;
    }
    Ok(out)
}

/// Whether every prime factor of the denominator lies in `primes`.
pub fn is_s_integral(r: &Rat, primes: &[u64]) -> bool {
    let mut d = r.denom().abs();
    for &p in primes {
        let p = BigInt::from(p);
        while (&d % &p).is_zero() {
            d /= &p;
        }
    }
    d.is_one()
}
