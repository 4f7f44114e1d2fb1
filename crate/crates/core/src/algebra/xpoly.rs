//! Polynomials in a distinguished variable `X` whose coefficients are
//! multivariate polynomials in the remaining variables.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::mpoly::{MPoly, Var};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct XPoly {
    /// Ascending in `X`; the last entry is nonzero unless empty.
    coeffs: Vec<MPoly>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<MPoly>) -> Self {
        while coeffs.last().is_some_and(MPoly::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly::default()
    }

    /// Splits an `MPoly` along `X`.
    pub fn from_mpoly(p: &MPoly) -> Self {
        Self::new(p.collect_coeffs(Var::X))
    }

    pub fn to_mpoly(&self) -> MPoly {
        MPoly::from_coeffs(&self.coeffs, Var::X)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| MPoly::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> MPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Division by a divisor whose leading coefficient is the constant 1.
    /// Only ring operations are used, so no new denominators appear.
    pub fn divrem_monic(&self, divisor: &XPoly) -> Result<(XPoly, XPoly)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        if !divisor.coeffs[dd].is_one() {
            return Err(Error::NotMonic);
        }
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((XPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![MPoly::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let c = std::mem::take(&mut rem[i + dd]);
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate().take(dd) {
                    rem[i + j] = &rem[i + j] - &(&c * dc);
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((XPoly::new(quot), XPoly::new(rem)))
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_mpoly().to_text())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![MPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        XPoly::new(out)
    }
}

impl Mul<&MPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, k: &MPoly) -> XPoly {
        XPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }
}
