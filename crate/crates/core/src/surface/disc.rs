//! Sign of the discriminant `p^2 - 4q` along the parametrization, against
//! the factor `-a P1(a, t)`.

use std::fmt::Write as _;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::param::param_eval;
use crate::algebra::rat::{serde_rat, sign};
use crate::algebra::{discriminant, mp, MPoly, Rat, Var};
use crate::error::{Error, Result};

pub const P1_TEXT: &str =
    "(9*a^3 - 116*a^2 + 524*a - 800)*t^2 - 24*(a - 5)*(a - 4)^2*t + 18*(a - 4)^3";
pub const P1_DISC_TEXT: &str = "-72*(a - 4)^3*(a - 2)^2*a";

pub fn p1() -> &'static MPoly {
    static CELL: OnceLock<MPoly> = OnceLock::new();
    CELL.get_or_init(|| mp(P1_TEXT))
}

/// `Disc_t(P1) = -72 (a - 4)^3 (a - 2)^2 a`.
pub fn p1_disc_check() -> bool {
    discriminant(p1(), Var::T).is_ok_and(|d| d == mp(P1_DISC_TEXT))
}

fn p1_at(a: &Rat, t: &Rat) -> Rat {
    p1().eval(&[(Var::A, a.clone()), (Var::T, t.clone())])
        .expect("P1 uses only a, t")
}

/// `sign(-a P1(a, t))`.
pub fn region_sign(a: &Rat, t: &Rat) -> i8 {
    -sign(a) * sign(&p1_at(a, t))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscReport {
    #[serde(with = "serde_rat")]
    pub a: Rat,
    #[serde(with = "serde_rat")]
    pub t: Rat,
    #[serde(with = "serde_rat")]
    pub disc: Rat,
    #[serde(with = "serde_rat")]
    pub p1: Rat,
    pub disc_sign: i8,
    /// `sign(-a P1(a, t))`, the printed criterion.
    pub printed_sign: i8,
    /// `disc_sign` is zero or equals `printed_sign`.
    pub agrees: bool,
    /// `sign(-a P1(a, 1/t))`; absent at `t = 0`.
    pub reciprocal_sign: Option<i8>,
    pub agrees_reciprocal: Option<bool>,
}

pub fn disc_sign_check(a: &Rat, t: &Rat) -> Result<DiscReport> {
    if a.is_zero() {
        return Err(Error::Precondition("a = 0".into()));
    }
    let e = param_eval(a, t)?;
    let disc = &e.p * &e.p - Rat::from_integer(4.into()) * &e.q;
    let disc_sign = sign(&disc);
    let printed_sign = region_sign(a, t);
    let reciprocal_sign = (!t.is_zero()).then(|| region_sign(a, &t.recip()));
    Ok(DiscReport {
        a: a.clone(),
        t: t.clone(),
        p1: p1_at(a, t),
        disc,
        disc_sign,
        printed_sign,
        agrees: disc_sign == 0 || disc_sign == printed_sign,
        reciprocal_sign,
        agrees_reciprocal: reciprocal_sign.map(|s| disc_sign == 0 || disc_sign == s),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionCell {
    pub i: usize,
    pub j: usize,
    pub a: Rat,
    pub t: Rat,
    pub sign: i8,
}

/// Lattice points `a_min + i step <= a_max`, `t_min + j step <= t_max`.
fn lattice(lo: &Rat, hi: &Rat, step: &Rat) -> Vec<Rat> {
    let mut out = Vec::new();
    let mut x = lo.clone();
    while x <= *hi {
        out.push(x.clone());
        x += step;
    }
    out
}

/// Exact sign of `-a P1(a, t)` on a lattice, ordered by `a` then `t`.
pub fn region_grid(
    a_range: (&Rat, &Rat),
    t_range: (&Rat, &Rat),
    step: &Rat,
) -> Result<Vec<RegionCell>> {
    if !step.is_positive() {
        return Err(Error::InvalidArgument("step must be positive".into()));
    }
    let a_vals = lattice(a_range.0, a_range.1, step);
    let t_vals = lattice(t_range.0, t_range.1, step);
    Ok(a_vals
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, a)| {
            t_vals.iter().enumerate().map(move |(j, t)| RegionCell {
                i,
                j,
                a: a.clone(),
                t: t.clone(),
                sign: region_sign(a, t),
            })
        })
        .collect())
}

pub fn region_csv(cells: &[RegionCell]) -> String {
    let mut out = String::from("a,t,sign\n");
    for c in cells {
        let _ = writeln!(out, "{},{},{}", c.a, c.t, c.sign);
    }
    out
}

const CELL_PX: usize = 4;
const SHADE: &str = "#3b6ea5";

/// One rectangle per positive lattice point; `a` runs right, `t` runs up.
pub fn region_svg(cells: &[RegionCell]) -> String {
    let nx = cells.iter().map(|c| c.i + 1).max().unwrap_or(0);
    let ny = cells.iter().map(|c| c.j + 1).max().unwrap_or(0);
    let (w, h) = (nx * CELL_PX, ny * CELL_PX);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" shape-rendering="crispEdges">"#
    );
    let _ = writeln!(
        out,
        r##"<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>"##
    );
    for c in cells.iter().filter(|c| c.sign > 0) {
        let x = c.i * CELL_PX;
        let y = (ny - 1 - c.j) * CELL_PX;
        let _ = writeln!(
            out,
            r#"<rect x="{x}" y="{y}" width="{CELL_PX}" height="{CELL_PX}" fill="{SHADE}"/>"#
        );
    }
    out.push_str("</svg>\n");
    out
}
