//! Sylvester resultants and discriminants.
//!
//! Sign convention: `Res(p, q)` is the determinant of the Sylvester matrix
//! with the `deg q` shifted copies of `p`'s coefficients (highest degree
//! first) in the top rows and the `deg p` copies of `q` below. With this
//! convention `Res_x(x - u, x - v) = u - v` and, for monic `p`,
//! `Res(p, q) = prod q(root_i)`.

use super::mpoly::{MPoly, Var};
use super::rat::Rat;
use super::upoly::UPoly;
use super::{bareiss_det, Ring};
use crate::error::{Error, Result};

fn sylvester<R: Ring>(p: &[R], q: &[R]) -> Vec<Vec<R>> {
    // p, q ascending; both nonempty.
    let n = p.len() - 1;
    let m = q.len() - 1;
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for (coeffs, count) in [(p, m), (q, n)] {
        for r in 0..count {
            let mut row = vec![R::zero(); size];
            for (k, c) in coeffs.iter().rev().enumerate() {
                row[r + k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

fn resultant_coeffs<R: Ring>(p: &[R], q: &[R]) -> Result<R> {
    if p.is_empty() || q.is_empty() {
        return Err(Error::Precondition(
            "resultant of the zero polynomial".into(),
        ));
    }
    if p.len() == 1 && q.len() == 1 {
        return Err(Error::ConstantInput("both inputs".into()));
    }
    Ok(bareiss_det(sylvester(p, q)))
}

/// `Res_v(p, q)` for polynomials whose other variables act as coefficients.
pub fn resultant(p: &MPoly, q: &MPoly, v: Var) -> Result<MPoly> {
    let pc = p.collect_coeffs(v);
    let qc = q.collect_coeffs(v);
    if pc.len() == 1 && qc.len() == 1 {
        return Err(Error::ConstantInput(v.name().into()));
    }
    resultant_coeffs(&pc, &qc)
}

/// `(-1)^(n(n-1)/2) * Res_v(p, dp/dv) / lc_v(p)`.
pub fn discriminant(p: &MPoly, v: Var) -> Result<MPoly> {
    let coeffs = p.collect_coeffs(v);
    let n = match coeffs.len() {
        0 | 1 => return Err(Error::ConstantInput(v.name().into())),
        len => len - 1,
    };
    let res = resultant(p, &p.derivative(v), v)?;
    let lc = coeffs.last().unwrap();
    let d = res.exact_div(lc)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

pub fn resultant_upoly(p: &UPoly, q: &UPoly) -> Result<Rat> {
    resultant_coeffs(p.coeffs(), q.coeffs())
}

pub fn discriminant_upoly(p: &UPoly) -> Result<Rat> {
    let n = match p.degree() {
        None | Some(0) => return Err(Error::ConstantInput("x".into())),
        Some(n) => n,
    };
    let res = resultant_upoly(p, &p.derivative())?;
    let d = res / p.leading().unwrap();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}
