//! Curves `y^2 = x^3 + a2 x^2 + a4 x + a6` over Q: chord-tangent law,
//! Nagell-Lutz torsion and naive point counts.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::rat::{int_sqrt, is_integer, positive_divisors, rat};
use crate::algebra::{discriminant_upoly, rational_roots, Rat, UPoly};
use crate::error::{Error, Result};

/// Mazur: torsion orders never exceed 12.
pub const MAZUR_BOUND: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticCurve {
    pub a2: Rat,
    pub a4: Rat,
    pub a6: Rat,
    pub disc_cubic: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ECPoint {
    Infinity,
    Affine(Rat, Rat),
}

impl fmt::Display for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => write!(f, "O"),
            ECPoint::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

impl Serialize for ECPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl ECPoint {
    pub fn affine(x: i64, y: i64) -> Self {
        ECPoint::Affine(rat(x), rat(y))
    }
}

impl EllipticCurve {
    pub fn new(a2: Rat, a4: Rat, a6: Rat) -> Result<Self> {
        let cubic = UPoly::new(vec![a6.clone(), a4.clone(), a2.clone(), rat(1)]);
        let disc_cubic = discriminant_upoly(&cubic)?;
        if disc_cubic.is_zero() {
            return Err(Error::Precondition("right side is not squarefree".into()));
        }
        Ok(EllipticCurve {
            a2,
            a4,
            a6,
            disc_cubic,
        })
    }

    pub fn from_ints(a2: i64, a4: i64, a6: i64) -> Result<Self> {
        Self::new(rat(a2), rat(a4), rat(a6))
    }

    pub fn rhs(&self, x: &Rat) -> Rat {
        ((x + &self.a2) * x + &self.a4) * x + &self.a6
    }

    pub fn cubic(&self) -> UPoly {
        UPoly::new(vec![
            self.a6.clone(),
            self.a4.clone(),
            self.a2.clone(),
            rat(1),
        ])
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine(x, y) => y * y == self.rhs(x),
        }
    }

    fn require(&self, p: &ECPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(p.to_string()))
        }
    }

    fn integral_coeffs(&self) -> Result<[BigInt; 3]> {
        if ![&self.a2, &self.a4, &self.a6].iter().all(|c| is_integer(c)) {
            return Err(Error::NonIntegralModel);
        }
        Ok([
            self.a2.to_integer(),
            self.a4.to_integer(),
            self.a6.to_integer(),
        ])
    }
}

pub fn ec_neg(p: &ECPoint) -> ECPoint {
    match p {
        ECPoint::Infinity => ECPoint::Infinity,
        ECPoint::Affine(x, y) => ECPoint::Affine(x.clone(), -y),
    }
}

pub fn ec_add(e: &EllipticCurve, p: &ECPoint, q: &ECPoint) -> Result<ECPoint> {
    e.require(p)?;
    e.require(q)?;
    Ok(add_unchecked(e, p, q))
}

fn add_unchecked(e: &EllipticCurve, p: &ECPoint, q: &ECPoint) -> ECPoint {
    let (x1, y1, x2, y2) = match (p, q) {
        (ECPoint::Infinity, _) => return q.clone(),
        (_, ECPoint::Infinity) => return p.clone(),
        (ECPoint::Affine(x1, y1), ECPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
    };
    let slope = if x1 == x2 {
        if (y1 + y2).is_zero() {
            return ECPoint::Infinity;
        }
        // tangent: (3x^2 + 2 a2 x + a4) / 2y
        (rat(3) * x1 * x1 + rat(2) * &e.a2 * x1 + &e.a4) / (rat(2) * y1)
    } else {
        (y2 - y1) / (x2 - x1)
    };
    let x3 = &slope * &slope - &e.a2 - x1 - x2;
    let y3 = slope * (x1 - &x3) - y1;
    ECPoint::Affine(x3, y3)
}

pub fn ec_mul(e: &EllipticCurve, n: i64, p: &ECPoint) -> Result<ECPoint> {
    e.require(p)?;
    let mut base = if n < 0 { ec_neg(p) } else { p.clone() };
    let mut k = n.unsigned_abs();
    let mut acc = ECPoint::Infinity;
    while k > 0 {
        if k & 1 == 1 {
            acc = add_unchecked(e, &acc, &base);
        }
        base = add_unchecked(e, &base, &base);
        k >>= 1;
    }
    Ok(acc)
}

/// Smallest `n <= bound` with `nP = O`.
pub fn point_order(e: &EllipticCurve, p: &ECPoint, bound: u32) -> Result<Option<u32>> {
    e.require(p)?;
    let mut acc = p.clone();
    for n in 1..=bound {
        if acc == ECPoint::Infinity {
            return Ok(Some(n));
        }
        acc = add_unchecked(e, &acc, p);
    }
    Ok(None)
}

/// Rational torsion: `O` first, then affine points ordered by `(x, y)`.
pub fn torsion_points(e: &EllipticCurve) -> Result<Vec<ECPoint>> {
    e.integral_coeffs()?;
    let disc = e.disc_cubic.to_integer();
    let cubic = e.cubic();
    let mut candidates = Vec::new();
    for x in rational_roots(&cubic).into_iter().filter(is_integer) {
        candidates.push(ECPoint::Affine(x, Rat::zero()));
    }
    for d in positive_divisors(&disc) {
        let Some(y) = int_sqrt(&d) else { continue };
        if !disc.is_multiple_of(&(&y * &y)) {
            continue;
        }
        let y2 = Rat::from_integer(&y * &y);
        let shifted = &cubic - &UPoly::constant(y2);
        for x in rational_roots(&shifted).into_iter().filter(is_integer) {
            let y = Rat::from_integer(y.clone());
            candidates.push(ECPoint::Affine(x.clone(), y.clone()));
            candidates.push(ECPoint::Affine(x, -y));
        }
    }
    let mut out = vec![ECPoint::Infinity];
    for c in candidates {
        if point_order(e, &c, MAZUR_BOUND)?.is_some() {
            out.push(c);
        }
    }
    out[1..].sort();
    out.dedup();
    Ok(out)
}

fn legendre(a: i64, p: i64) -> i64 {
    let a = a.rem_euclid(p);
    if a == 0 {
        return 0;
    }
    let mut r = 1i64;
    let mut b = a;
    let mut k = (p - 1) / 2;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        k >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `#E(F_p)` by counting `x` values; `p` must be an odd prime of good
/// reduction.
pub fn point_count(e: &EllipticCurve, p: u64) -> Result<u64> {
    let [a2, a4, a6] = e.integral_coeffs()?;
    if p == 2 || !is_prime(p) || (e.disc_cubic.to_integer() % p).is_zero() {
        return Err(Error::InvalidArgument(format!(
            "{p} is not an odd prime of good reduction"
        )));
    }
    let m = BigInt::from(p);
    let red = |c: &BigInt| c.mod_floor(&m).to_i64().expect("reduced below p");
    let (a2, a4, a6, p) = (red(&a2), red(&a4), red(&a6), p as i64);
    let mut count = 1i64;
    for x in 0..p {
        let v = (((x + a2) % p * x + a4) % p * x + a6) % p;
        count += 1 + legendre(v, p);
    }
    Ok(count as u64)
}

/// The `n` smallest odd primes of good reduction.
pub fn good_primes(e: &EllipticCurve, n: usize) -> Vec<u64> {
    let disc = e.disc_cubic.to_integer();
    (3u64..)
        .filter(|&p| is_prime(p) && !(&disc % p).is_zero())
        .take(n)
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TorsionReport {
    pub points: Vec<ECPoint>,
    pub order: usize,
    /// `(p, #E(F_p))`.
    pub point_counts: Vec<(u64, u64)>,
    pub divides_counts: bool,
}

pub fn torsion_report(e: &EllipticCurve) -> Result<TorsionReport> {
    let points = torsion_points(e)?;
    let order = points.len();
    let point_counts = good_primes(e, 3)
        .into_par_iter()
        .map(|p| point_count(e, p).map(|n| (p, n)))
        .collect::<Result<Vec<_>>>()?;
    let divides_counts = point_counts.iter().all(|(_, n)| n % order as u64 == 0);
    Ok(TorsionReport {
        points,
        order,
        point_counts,
        divides_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::ratio;

    fn e() -> EllipticCurve {
        EllipticCurve::from_ints(6, -20, 8).unwrap()
    }

    #[test]
    fn doubling() {
        let e = e();
        let p = ECPoint::affine(-2, 8);
        assert_eq!(ec_mul(&e, 2, &p).unwrap(), ECPoint::affine(2, 0));
        assert_eq!(ec_mul(&e, 4, &p).unwrap(), ECPoint::Infinity);
        assert_eq!(ec_mul(&e, -1, &p).unwrap(), ECPoint::affine(-2, -8));
        let t = ECPoint::affine(2, 0);
        assert_eq!(ec_add(&e, &t, &t).unwrap(), ECPoint::Infinity);
        assert_eq!(ec_add(&e, &p, &ECPoint::Infinity).unwrap(), p);
    }

    #[test]
    fn off_curve_rejected() {
        let e = e();
        let bad = ECPoint::affine(0, 1);
        assert!(matches!(ec_add(&e, &bad, &bad), Err(Error::NotOnCurve(_))));
        assert!(ec_mul(&e, 3, &bad).is_err());
    }

    #[test]
    fn torsion_of_e() {
        let pts = torsion_points(&e()).unwrap();
        assert_eq!(
            pts,
            vec![
                ECPoint::Infinity,
                ECPoint::affine(-2, -8),
                ECPoint::affine(-2, 8),
                ECPoint::affine(2, 0)
            ]
        );
        let r = torsion_report(&e()).unwrap();
        assert_eq!(r.order, 4);
        assert_eq!(r.point_counts.len(), 3);
        assert!(r.divides_counts);
    }

    #[test]
    fn congruent_number_fixture() {
        let e = EllipticCurve::from_ints(0, -1, 0).unwrap();
        let pts = torsion_points(&e).unwrap();
        assert_eq!(
            pts,
            vec![
                ECPoint::Infinity,
                ECPoint::affine(-1, 0),
                ECPoint::affine(0, 0),
                ECPoint::affine(1, 0)
            ]
        );
        assert_eq!(point_count(&e, 3).unwrap(), 4);
    }

    #[test]
    fn singular_and_nonintegral() {
        assert!(EllipticCurve::from_ints(0, 0, 0).is_err());
        let e = EllipticCurve::new(ratio(1, 2), rat(0), rat(1)).unwrap();
        assert_eq!(torsion_points(&e), Err(Error::NonIntegralModel));
        assert!(point_count(&e, 5).is_err());
    }

    #[test]
    fn bad_prime_rejected() {
        let e = e();
        let bad = good_primes(&e, 3);
        assert!(bad.iter().all(|p| point_count(&e, *p).is_ok()));
        assert!(point_count(&e, 2).is_err());
        assert!(point_count(&e, 9).is_err());
    }
}
