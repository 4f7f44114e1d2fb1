//! Complete factorization over Q of polynomials of degree at most four.
//!
//! Rational roots are stripped first. A root-free quartic splits into two
//! rational quadratics exactly when its resolvent cubic has a suitable
//! rational root.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::rat::{rat_sqrt, Rat};
use crate::algebra::{rational_roots, UPoly};
use crate::error::{Error, Result};

/// `content * prod factor_i ^ mult_i`, factors monic and irreducible,
/// sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: Rat,
    pub factors: Vec<(UPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UPoly {
        self.factors
            .iter()
            .fold(UPoly::constant(self.content.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.content.is_one() {
            write!(f, "{}", self.content)?;
        }
        for (p, m) in &self.factors {
            write!(f, "({})", p.to_text("x"))?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

pub fn factor_quartic(p: &UPoly) -> Result<Factorization> {
    let deg = p.degree().unwrap_or(0);
    if !(1..=4).contains(&deg) {
        return Err(Error::DegreeOutOfRange(deg));
    }
    let content = p.leading().unwrap().clone();
    let mut rest = p.monic();
    let mut factors: Vec<(UPoly, u32)> = Vec::new();

    for r in rational_roots(&rest) {
        let lin = UPoly::linear_root(&r);
        let mut mult = 0;
        loop {
            let (q, rem) = rest.divrem(&lin)?;
            if !rem.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        factors.push((lin, mult));
    }

    match rest.degree() {
        Some(4) => match split_into_quadratics(&rest) {
            Some((g, h)) => {
                if g == h {
                    factors.push((g, 2));
                } else {
                    factors.push((g, 1));
                    factors.push((h, 1));
                }
            }
            None => factors.push((rest, 1)),
        },
        Some(2) | Some(3) => factors.push((rest, 1)),
        _ => {}
    }

    factors.sort_by(|(f, _), (g, _)| {
        f.degree()
            .cmp(&g.degree())
            .then_with(|| f.coeffs().cmp(g.coeffs()))
    });
    Ok(Factorization { content, factors })
}

pub fn is_irreducible(p: &UPoly) -> Result<bool> {
    Ok(factor_quartic(p)?.is_irreducible())
}

/// `g(x + h)`.
fn shift(g: &UPoly, h: &Rat) -> UPoly {
    let lin = UPoly::new(vec![h.clone(), Rat::one()]);
    g.coeffs().iter().rev().fold(UPoly::zero(), |acc, c| {
        &(&acc * &lin) + &UPoly::constant(c.clone())
    })
}

/// Splits a monic rational quartic without rational roots into two monic
/// rational quadratics, if possible.
///
/// With `x = y - a/4` the quartic is `y^4 + p y^2 + q y + r`, and a split
/// `(y^2 + s y + m)(y^2 - s y + n)` forces `S = s^2` to be a root of
/// `S^3 + 2p S^2 + (p^2 - 4r) S - q^2`.
fn split_into_quadratics(g: &UPoly) -> Option<(UPoly, UPoly)> {
    let h = g.coeff(3) / Rat::from_integer(4.into());
    let dep = shift(g, &-&h);
    let (p, q, r) = (dep.coeff(2), dep.coeff(1), dep.coeff(0));
    let two = Rat::from_integer(2.into());
    let four = Rat::from_integer(4.into());
    let resolvent = UPoly::new(vec![
        -(&q * &q),
        &p * &p - &four * &r,
        &two * &p,
        Rat::one(),
    ]);
    let quad = |s: &Rat, m: &Rat| UPoly::new(vec![m.clone(), s.clone(), Rat::one()]);
    for big_s in rational_roots(&resolvent) {
        let pair = if big_s.is_zero() {
            let disc = &p * &p - &four * &r;
            let Some(root) = rat_sqrt(&disc) else {
                continue;
            };
            let m = (&p - &root) / &two;
            let n = (&p + &root) / &two;
            (quad(&Rat::zero(), &m), quad(&Rat::zero(), &n))
        } else {
            let Some(s) = rat_sqrt(&big_s) else { continue };
            let m = (&big_s + &p - &q / &s) / &two;
            let n = (&big_s + &p + &q / &s) / &two;
            (quad(&s, &m), quad(&-&s, &n))
        };
        let (f1, f2) = (shift(&pair.0, &h), shift(&pair.1, &h));
        debug_assert_eq!(&f1 * &f2, *g);
        return Some(if f1.coeffs() <= f2.coeffs() {
            (f1, f2)
        } else {
            (f2, f1)
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, ratio};

    fn up(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn repeated_linear_and_quadratic() {
        // x^4 + 2x^3 + 2x^2 + 2x + 1 = (x+1)^2 (x^2+1)
        let f = factor_quartic(&up(&[1, 2, 2, 2, 1])).unwrap();
        assert_eq!(f.factors, vec![(up(&[1, 1]), 2), (up(&[1, 0, 1]), 1)]);
        assert_eq!(f.content, rat(1));
    }

    #[test]
    fn square_of_quadratic() {
        let f = factor_quartic(&up(&[1, 0, 2, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(up(&[1, 0, 1]), 2)]);
        let f = factor_quartic(&up(&[9, 12, 10, 4, 1])).unwrap();
        assert_eq!(f.factors, vec![(up(&[3, 2, 1]), 2)]);
    }

    #[test]
    fn known_irreducible_quartic() {
        assert!(is_irreducible(&up(&[2, 4, 5, 2, 1])).unwrap());
        assert!(is_irreducible(&up(&[17, 10, 10, 2, 1])).unwrap());
    }

    #[test]
    fn reducible_examples() {
        assert!(!is_irreducible(&up(&[-1, 0, 0, 0, 1])).unwrap());
        let f = factor_quartic(&up(&[3, 2, 4, 2, 1])).unwrap();
        assert_eq!(f.factors, vec![(up(&[1, 0, 1]), 1), (up(&[3, 2, 1]), 1)]);
        let f = factor_quartic(&up(&[-7, 2, 2, 2, 1])).unwrap();
        assert_eq!(f.factors, vec![(up(&[-1, 1]), 1), (up(&[7, 5, 3, 1]), 1)]);
    }

    #[test]
    fn non_monic_rational_split() {
        // 2 (x^2 + 1/2 x + 1/3)(x^2 - 3)
        let g = UPoly::new(vec![ratio(1, 3), ratio(1, 2), rat(1)]);
        let h = up(&[-3, 0, 1]);
        let p = (&g * &h).scale(&rat(2));
        let f = factor_quartic(&p).unwrap();
        assert_eq!(f.content, rat(2));
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn degree_bounds() {
        assert_eq!(
            factor_quartic(&up(&[1])).unwrap_err(),
            Error::DegreeOutOfRange(0)
        );
        assert_eq!(
            factor_quartic(&up(&[1, 0, 0, 0, 0, 1])).unwrap_err(),
            Error::DegreeOutOfRange(5)
        );
    }

    #[test]
    fn negative_divisor_pair_needed() {
        // (x^2 + x - 1)(x^2 - x - 1) = x^4 - 3x^2 + 1
        let f = factor_quartic(&up(&[1, 0, -3, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(up(&[-1, -1, 1]), 1), (up(&[-1, 1, 1]), 1)]);
    }
}
