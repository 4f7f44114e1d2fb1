//! Sparse multivariate polynomials over Q in a fixed global variable order.
//!
//! Every exponent vector spans the same variable list [`Var::ALL`], so two
//! polynomials are always directly comparable and terms sort in one
//! lexicographic order (`d > p > q > a > b > c > t > u > s > s1 > ... > Y`).
//! The canonical text form lists terms in descending lex order, e.g.
//! `233*a^4 - 352*a^3*b + 108*a^3*c + ... - 256`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::Rat;
use super::upoly::UPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    D,
    P,
    Q,
    A,
    B,
    C,
    T,
    U,
    S,
    S1,
    S2,
    S3,
    S4,
    X,
    Y,
}

pub const NVARS: usize = 15;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::D,
        Var::P,
        Var::Q,
        Var::A,
        Var::B,
        Var::C,
        Var::T,
        Var::U,
        Var::S,
        Var::S1,
        Var::S2,
        Var::S3,
        Var::S4,
        Var::X,
        Var::Y,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::D => "d",
            Var::P => "p",
            Var::Q => "q",
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::T => "t",
            Var::U => "u",
            Var::S => "s",
            Var::S1 => "s1",
            Var::S2 => "s2",
            Var::S3 => "s3",
            Var::S4 => "s4",
            Var::X => "X",
            Var::Y => "Y",
        }
    }

    pub fn from_name(name: &str) -> Result<Var> {
        Var::ALL
            .iter()
            .copied()
            .find(|v| v.name() == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

/// Exponent vector; `Ord` is lexicographic in the global variable order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = Self::one();
        m.0[v.index()] = e;
        m
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0.iter()) {
            *o += *e;
        }
        out
    }

    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *self;
        for (o, e) in out.0.iter_mut().zip(other.0.iter()) {
            *o = o.checked_sub(*e)?;
        }
        Some(out)
    }

    fn text(&self) -> String {
        Var::ALL
            .iter()
            .filter(|v| self.exp(**v) > 0)
            .map(|v| match self.exp(*v) {
                1 => v.name().to_string(),
                e => format!("{}^{}", v.name(), e),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Sparse polynomial: monomial -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rat::from_integer(n.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rat::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    /// Parses the canonical text form (and anything built from `+ - * ^`,
    /// parentheses, integers, `n/d` literals and variable names).
    pub fn parse(s: &str) -> Result<Self> {
        Parser::new(s).parse()
    }

    /// Univariate lift: `sum c_i * v^i`.
    pub fn from_upoly(p: &UPoly, v: Var) -> Self {
        let mut out = MPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(c.clone(), Monomial::var(v, i as u16));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of an exact monomial.
    pub fn coeff_of(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// The rational value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, c: Rat, m: Monomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .iter()
            .copied()
            .filter(|v| self.terms.keys().any(|m| m.exp(*v) > 0))
            .collect()
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = MPoly::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Coefficients with respect to `v`, ascending in its degree. Each
    /// coefficient is free of `v`.
    pub fn collect_coeffs(&self, v: Var) -> Vec<MPoly> {
        let deg = match self.degree_in(v) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![MPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = rest.0[v.index()];
            rest.0[v.index()] = 0;
            out[e as usize].add_term(c.clone(), rest);
        }
        out
    }

    /// Inverse of [`collect_coeffs`](Self::collect_coeffs).
    pub fn from_coeffs(coeffs: &[MPoly], v: Var) -> Self {
        let mut out = MPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let shift = Monomial::var(v, i as u16);
            for (m, k) in &c.terms {
                out.add_term(k.clone(), m.mul(&shift));
            }
        }
        out
    }

    /// Univariate view; fails if any other variable occurs.
    pub fn to_upoly(&self, v: Var) -> Result<UPoly> {
        let coeffs = self
            .collect_coeffs(v)
            .into_iter()
            .map(|c| {
                c.as_constant().ok_or_else(|| {
                    Error::InvalidArgument(format!("not univariate in {}", v.name()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(UPoly::new(coeffs))
    }

    /// Replaces `v` by `value` everywhere.
    pub fn substitute(&self, v: Var, value: &MPoly) -> MPoly {
        let coeffs = self.collect_coeffs(v);
        // Horner in `value`.
        coeffs
            .iter()
            .rev()
            .fold(MPoly::zero(), |acc, c| &(&acc * value) + c)
    }

    pub fn substitute_rat(&self, v: Var, value: &Rat) -> MPoly {
        let mut out = MPoly::zero();
        let mut powers: Vec<Rat> = vec![Rat::one()];
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = *m;
            rest.0[v.index()] = 0;
            out.add_term(c * &powers[e], rest);
        }
        out
    }

    pub fn substitute_all(&self, assignment: &[(Var, Rat)]) -> MPoly {
        assignment
            .iter()
            .fold(self.clone(), |p, (v, r)| p.substitute_rat(*v, r))
    }

    /// Evaluates at a full assignment. Every variable that occurs must be
    /// assigned.
    pub fn eval(&self, assignment: &[(Var, Rat)]) -> Result<Rat> {
        let rest = self.substitute_all(assignment);
        rest.as_constant().ok_or_else(|| {
            let missing = rest.variables();
            Error::UnknownVariable(
                missing
                    .iter()
                    .map(|v| v.name())
                    .collect::<Vec<_>>()
                    .join(","),
            )
        })
    }

    /// Partial derivative.
    pub fn derivative(&self, v: Var) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut rest = *m;
            rest.0[v.index()] = e - 1;
            out.add_term(c * Rat::from_integer(e.into()), rest);
        }
        out
    }

    /// Exact quotient `self / divisor`; errors if the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly> {
        let (lm, lc) = divisor.leading_term().ok_or(Error::ZeroDivisor)?;
        if divisor.len() == 1 {
            let inv = lc.recip();
            let mut out = MPoly::zero();
            for (m, c) in &self.terms {
                let q = m.checked_div(lm).ok_or(Error::InexactDivision)?;
                out.add_term(c * &inv, q);
            }
            return Ok(out);
        }
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lm).ok_or(Error::InexactDivision)?;
            let qc = c * &lc_inv;
            let step = MPoly::term(qc.clone(), qm);
            rem = &rem - &(&step * divisor);
            quot.add_term(qc, qm);
        }
        Ok(quot)
    }

    pub fn to_text(&self) -> String {
        super::format_terms(self.terms.iter().rev().map(|(m, c)| (c.clone(), m.text())))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl From<Rat> for MPoly {
    fn from(c: Rat) -> Self {
        MPoly::constant(c)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), *m);
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c.clone(), *m);
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &MPoly) -> MPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

/// Shorthand for `MPoly::parse(..).unwrap()` on trusted literals.
pub fn mp(s: &str) -> MPoly {
    MPoly::parse(s).unwrap_or_else(|e| panic!("bad polynomial literal `{s}`: {e}"))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<MPoly> {
        let p = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                // Division only by an integer literal.
                Some(b'/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let n = self.integer()?;
                    let r = super::rat::parse_rat(&n).map_err(|_| self.err("bad number"))?;
                    if r.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&r.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.integer()?;
            let e: u32 = n.parse().map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<String> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut text = n;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    text.push('/');
                    text.push_str(&self.integer()?);
                }
                let r = super::rat::parse_rat(&text).map_err(|_| self.err("bad number"))?;
                Ok(MPoly::constant(r))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(MPoly::var(Var::from_name(name)?))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}
