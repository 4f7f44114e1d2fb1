//! The rational parametrization of the solution variety over `Q(a)`:
//! `b, c, d, p, q` as quotients of polynomials in `a` whose coefficients are
//! polynomials in `t`, read from a checked-in table.

use std::sync::OnceLock;

use num_traits::Zero;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::rat::serde_rat;
use crate::algebra::{MPoly, Rat, UPoly, Var};
use crate::error::{Error, Result};

pub const TABLES: &str = include_str!("../../data/remark1_tables.txt");
pub const TABLES_SHA256: &str = "8ed9c4d5c49592f105f83b463fbc2d230a17348136822168f85ada0640987572";

pub const NAMES: [&str; 5] = ["b", "c", "d", "p", "q"];

#[derive(Clone, Debug)]
pub struct Tables {
    /// Per name, coefficients of `a^i` in the numerator and denominator.
    num: [Vec<UPoly>; 5],
    den: [Vec<UPoly>; 5],
}

fn parse_tables(text: &str) -> Result<Tables> {
    let mut num: [Vec<UPoly>; 5] = Default::default();
    let mut den: [Vec<UPoly>; 5] = Default::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::Parse {
            offset: lineno + 1,
            msg: msg.to_string(),
        };
        let mut parts = line.splitn(3, ' ');
        let (Some(key), Some(idx), Some(body)) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad("expected `<name> <index> <polynomial>`"));
        };
        let i: usize = idx.parse().map_err(|_| bad("bad index"))?;
        let (name, is_num) = key
            .strip_suffix('n')
            .map(|n| (n, true))
            .or_else(|| key.strip_suffix('d').map(|n| (n, false)))
            .ok_or_else(|| bad("bad table name"))?;
        let slot = NAMES
            .iter()
            .position(|&n| n == name)
            .ok_or_else(|| bad("bad table name"))?;
        let poly = MPoly::parse(body)?.to_upoly(Var::T)?;
        let table = if is_num {
            &mut num[slot]
        } else {
            &mut den[slot]
        };
        if table.len() <= i {
            table.resize(i + 1, UPoly::zero());
        }
        table[i] = poly;
    }
    Ok(Tables { num, den })
}

pub fn checksum(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn tables() -> Result<&'static Tables> {
    static CELL: OnceLock<Result<Tables>> = OnceLock::new();
    CELL.get_or_init(|| {
        if checksum(TABLES) != TABLES_SHA256 {
            return Err(Error::Checksum("remark1_tables.txt"));
        }
        parse_tables(TABLES)
    })
    .as_ref()
    .map_err(Clone::clone)
}

fn eval_in_a(coeffs: &[UPoly], a: &Rat, t: &Rat) -> Rat {
    coeffs
        .iter()
        .rev()
        .fold(Rat::zero(), |acc, k| acc * a + k.eval(t))
}

impl Tables {
    /// Numerator and denominator of `name` as polynomials in `a` and `t`.
    pub fn rational_function(&self, name: &str) -> Option<(MPoly, MPoly)> {
        let slot = NAMES.iter().position(|&n| n == name)?;
        let build = |coeffs: &[UPoly]| {
            coeffs
                .iter()
                .enumerate()
                .fold(MPoly::zero(), |acc, (i, k)| {
                    &acc + &(&MPoly::from_upoly(k, Var::T) * &MPoly::var(Var::A).pow(i as u32))
                })
        };
        Some((build(&self.num[slot]), build(&self.den[slot])))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamEval {
    #[serde(with = "serde_rat")]
    pub a: Rat,
    #[serde(with = "serde_rat")]
    pub t: Rat,
    #[serde(with = "serde_rat")]
    pub b: Rat,
    #[serde(with = "serde_rat")]
    pub c: Rat,
    #[serde(with = "serde_rat")]
    pub d: Rat,
    #[serde(with = "serde_rat")]
    pub p: Rat,
    #[serde(with = "serde_rat")]
    pub q: Rat,
}

impl ParamEval {
    pub fn coeffs(&self) -> crate::esystem::QuarticCoeffs {
        crate::esystem::QuarticCoeffs::new(
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        )
    }
}

pub fn param_eval(a: &Rat, t: &Rat) -> Result<ParamEval> {
    let tab = tables()?;
    let mut vals: Vec<Rat> = Vec::with_capacity(5);
    for (slot, name) in NAMES.iter().enumerate() {
        let den = eval_in_a(&tab.den[slot], a, t);
        if den.is_zero() {
            return Err(Error::Pole(format!(
                "denominator of {name} vanishes at (a, t) = ({a}, {t})"
            )));
        }
        vals.push(eval_in_a(&tab.num[slot], a, t) / den);
    }
    let [b, c, d, p, q]: [Rat; 5] = vals.try_into().expect("five values");
    Ok(ParamEval {
        a: a.clone(),
        t: t.clone(),
        b,
        c,
        d,
        p,
        q,
    })
}

/// The limit of the parametrization as `t -> infinity`: the ratio of the
/// top-degree-in-`t` parts.
pub fn param_at_infinity(a: &Rat) -> Result<[Rat; 5]> {
    let tab = tables()?;
    let top = |coeffs: &[UPoly]| coeffs.iter().filter_map(UPoly::degree).max().unwrap_or(0);
    let lead_in_a = |coeffs: &[UPoly], m: usize| {
        coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, k| acc * a + k.coeff(m))
    };
    let mut vals = Vec::with_capacity(5);
    for (slot, name) in NAMES.iter().enumerate() {
        let (num, den) = (&tab.num[slot], &tab.den[slot]);
        let (mn, md) = (top(num), top(den));
        let pole = || Error::Pole(format!("{name} has no finite limit at a = {a}"));
        let v = match mn.cmp(&md) {
            std::cmp::Ordering::Less => Rat::zero(),
            std::cmp::Ordering::Greater => return Err(pole()),
            std::cmp::Ordering::Equal => {
                let d = lead_in_a(den, md);
                if d.is_zero() {
                    return Err(pole());
                }
                lead_in_a(num, mn) / d
            }
        };
        vals.push(v);
    }
    Ok(vals.try_into().expect("five values"))
}
