//! Integer points of `F(a, b, c) = 0` over a box in `(a, b)`.
//!
//! For fixed `(a, b)`, `F` is a monic quartic in `c` with integer
//! coefficients. Its real roots are isolated in floating point (critical
//! points first, then bisection on each monotone piece) and every nearby
//! integer is settled by exact `i128` evaluation. Whenever a critical value
//! or a bracketing sign cannot be trusted the pair is redone exactly with a
//! Sturm sequence.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::surface_poly;
use crate::algebra::rat::{is_integer, Rat};
use crate::algebra::{UPoly, Var};
use crate::error::{Error, Result};
use crate::esystem::{recover_d, DCandidate, LinearSolution};

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub threads: usize,
    /// Skip the floating-point path entirely.
    pub force_exact: bool,
    /// Keep only integral `d` candidates.
    pub integral: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            force_exact: false,
            integral: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub pairs: u64,
    pub exact_fallbacks: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceSolution {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    /// Consistent candidates first, then ascending `d`.
    pub d_candidates: Vec<DCandidate>,
    pub family2_match: bool,
}

pub const CSV_HEADER: &str = "a,b,c,d,p,q,family2_match";

impl SurfaceSolution {
    fn new(a: i64, b: i64, c: i64, integral: bool) -> Self {
        let [ra, rb, rc] = [a, b, c].map(Rat::from_integer_i64);
        let mut d_candidates = recover_d(&ra, &rb, &rc);
        if integral {
            d_candidates.retain(|k| is_integer(&k.d));
        }
        d_candidates.sort_by(|x, y| {
            (!x.solution.is_consistent(), &x.d).cmp(&(!y.solution.is_consistent(), &y.d))
        });
        let family2_match = a % 2 == 0 && {
            let t = a / 2;
            let d = Rat::from_integer_i64(3 * t * t - 2 * t + 1);
            b == t * t + 2 * t + 2
                && c == 2 * t * t + 2 * t
                && d_candidates.first().is_some_and(|k| k.d == d)
        };
        SurfaceSolution {
            a,
            b,
            c,
            d_candidates,
            family2_match,
        }
    }

    /// One CSV line per `d` candidate, or a single line with `-` fields.
    pub fn csv_rows(&self) -> Vec<String> {
        let head = format!("{},{},{}", self.a, self.b, self.c);
        if self.d_candidates.is_empty() {
            return vec![format!("{head},-,-,-,{}", self.family2_match)];
        }
        self.d_candidates
            .iter()
            .map(|k| {
                let (p, q) = match &k.solution {
                    LinearSolution::Unique { p, q } => (p.to_string(), q.to_string()),
                    _ => ("-".into(), "-".into()),
                };
                format!("{head},{},{p},{q},{}", k.d, self.family2_match)
            })
            .collect()
    }
}

trait FromI64 {
    fn from_integer_i64(n: i64) -> Self;
}

impl FromI64 for Rat {
    fn from_integer_i64(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }
}

pub fn to_csv(solutions: &[SurfaceSolution]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for s in solutions {
        for row in s.csv_rows() {
            out.push_str(&row);
            out.push('\n');
        }
    }
    out
}

/// `F` collected in `c`: for each power of `c`, terms `(coeff, deg_a, deg_b)`.
struct CoeffTable {
    terms: Vec<Vec<(i128, usize, usize)>>,
}

impl CoeffTable {
    fn new() -> Self {
        let terms = surface_poly()
            .collect_coeffs(Var::C)
            .iter()
            .map(|k| {
                k.terms()
                    .map(|(m, c)| {
                        assert!(is_integer(c));
                        let n = c.numer().to_i128().expect("small coefficient");
                        (n, m.exp(Var::A) as usize, m.exp(Var::B) as usize)
                    })
                    .collect()
            })
            .collect();
        CoeffTable { terms }
    }

    /// Per power of `c`, a polynomial in `b` (ascending) at fixed `a`.
    fn row(&self, a: i128) -> Vec<Vec<i128>> {
        self.terms
            .iter()
            .map(|ts| {
                let deg_b = ts.iter().map(|t| t.2).max().unwrap_or(0);
                let mut out = vec![0i128; deg_b + 1];
                for &(k, ea, eb) in ts {
                    out[eb] += k * a.pow(ea as u32);
                }
                out
            })
            .collect()
    }
}

fn horner(coeffs: &[i128], x: i128) -> i128 {
    coeffs.iter().rev().fold(0, |acc, &k| acc * x + k)
}

fn checked_horner(coeffs: &[i128], x: i128) -> Option<i128> {
    coeffs
        .iter()
        .rev()
        .try_fold(0i128, |acc, &k| acc.checked_mul(x)?.checked_add(k))
}

fn eval_with_bound(c: &[f64], x: f64) -> (f64, f64) {
    let mut v = 0.0;
    let mut mag = 0.0;
    for &k in c.iter().rev() {
        v = v * x + k;
        mag = mag * x.abs() + k.abs();
    }
    // Generous running-error bound for Horner plus coefficient rounding.
    (v, mag * 64.0 * f64::EPSILON * c.len() as f64)
}

struct Isolated {
    lo: f64,
    hi: f64,
    root: f64,
}

/// Real roots of `c` (ascending coefficients, nonzero leading), each with the
/// monotone interval containing it. `None` when a critical value is too
/// close to zero to trust its sign.
fn isolate(c: &[f64]) -> Option<Vec<Isolated>> {
    let n = c.len() - 1;
    let lead = c[n];
    if n == 1 {
        return Some(vec![Isolated {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
            root: -c[0] / c[1],
        }]);
    }
    let deriv: Vec<f64> = (1..=n).map(|i| c[i] * i as f64).collect();
    let bound = 1.0 + c[..n].iter().map(|k| (k / lead).abs()).fold(0.0, f64::max);

    let mut pts = vec![(
        -bound,
        if n.is_multiple_of(2) {
            lead.signum()
        } else {
            -lead.signum()
        },
    )];
    for crit in isolate(&deriv)? {
        let x = crit.root;
        if x <= -bound || x >= bound {
            continue;
        }
        let (v, e) = eval_with_bound(c, x);
        if v.abs() <= e {
            return None;
        }
        pts.push((x, v.signum()));
    }
    pts.push((bound, lead.signum()));

    let mut out = Vec::new();
    for w in pts.windows(2) {
        let ((lo, s_lo), (hi, s_hi)) = (w[0], w[1]);
        if s_lo == s_hi {
            continue;
        }
        let (mut a, mut b) = (lo, hi);
        let mut root = 0.5 * (a + b);
        for _ in 0..200 {
            root = 0.5 * (a + b);
            if root <= a || root >= b {
                break;
            }
            let (v, e) = eval_with_bound(c, root);
            if v.abs() <= e {
                break;
            }
            if v.signum() == s_lo {
                a = root;
            } else {
                b = root;
            }
        }
        out.push(Isolated { lo, hi, root });
    }
    Some(out)
}

/// Integer roots via the floating-point path; `None` asks for the exact one.
fn float_integer_roots(k: &[i128; 5]) -> Option<Vec<i128>> {
    let kf: Vec<f64> = k.iter().map(|&x| x as f64).collect();
    let mut out = Vec::new();
    for iso in isolate(&kf)? {
        if !iso.root.is_finite() || iso.root.abs() > 1e15 {
            return None;
        }
        let n = iso.root.floor() as i128;
        let (lo_i, hi_i) = (n - 1, n + 2);
        let margin = |x: f64| 1e-6 * (1.0 + x.abs());
        if (lo_i as f64) < iso.lo + margin(iso.lo) || (hi_i as f64) > iso.hi - margin(iso.hi) {
            return None;
        }
        let s_lo = checked_horner(k, lo_i)?.signum();
        let s_hi = checked_horner(k, hi_i)?.signum();
        if s_lo == s_hi {
            return None;
        }
        for x in lo_i..=hi_i {
            if checked_horner(k, x)? == 0 {
                out.push(x);
            }
        }
    }
    Some(out)
}

fn sturm_chain(p: &UPoly) -> Vec<UPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].degree().unwrap_or(0) == 0 {
            break;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn sign_variations(chain: &[UPoly], x: &Rat) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Integer roots by Sturm counting and integer bisection.
fn exact_integer_roots(k: &[i128; 5]) -> Vec<i128> {
    let g = UPoly::new(
        k.iter()
            .map(|&x| Rat::from_integer(BigInt::from(x)))
            .collect(),
    );
    let chain = sturm_chain(&g.squarefree_part());
    let bound = 1 + k[..4].iter().map(|x| x.unsigned_abs()).max().unwrap_or(0) as i128;
    let v = |x: i128| sign_variations(&chain, &Rat::from_integer(BigInt::from(x)));
    let mut out = Vec::new();
    // Roots in (lo, hi] number v(lo) - v(hi).
    let mut stack = vec![(-bound - 1, bound, v(-bound - 1), v(bound))];
    while let Some((lo, hi, vlo, vhi)) = stack.pop() {
        if vlo <= vhi {
            continue;
        }
        if hi - lo == 1 {
            if g.eval(&Rat::from_integer(BigInt::from(hi))).is_zero() {
                out.push(hi);
            }
            continue;
        }
        let mid = lo + (hi - lo) / 2;
        let vm = v(mid);
        stack.push((lo, mid, vlo, vm));
        stack.push((mid, hi, vm, vhi));
    }
    out.sort();
    out
}

/// All integer `c` with `F(a, b, c) = 0` for one monic quartic in `c`.
fn integer_roots(k: &[i128; 5], force_exact: bool, stats: &mut SearchStats) -> Vec<i128> {
    stats.pairs += 1;
    if !force_exact {
        if let Some(mut r) = float_integer_roots(k) {
            r.sort();
            r.dedup();
            return r;
        }
    }
    stats.exact_fallbacks += 1;
    exact_integer_roots(k)
}

type Point = (i64, i64, i64);

/// The integer points `(a, b, c)` in the box, sorted.
pub fn search_points(
    a_range: (i64, i64),
    b_range: (i64, i64),
    opts: &SearchOptions,
) -> Result<(Vec<Point>, SearchStats)> {
    let ((a_min, a_max), (b_min, b_max)) = (a_range, b_range);
    if a_min > a_max || b_min > b_max {
        return Err(Error::InvalidArgument(format!(
            "empty box a in [{a_min}, {a_max}], b in [{b_min}, {b_max}]"
        )));
    }
    let table = CoeffTable::new();
    let row = |a: i64| {
        let polys = table.row(a as i128);
        let mut stats = SearchStats::default();
        let mut pts = Vec::new();
        for b in b_min..=b_max {
            let k: [i128; 5] = std::array::from_fn(|j| horner(&polys[j], b as i128));
            debug_assert_eq!(k[4], 1);
            for c in integer_roots(&k, opts.force_exact, &mut stats) {
                pts.push((a, b, c as i64));
            }
        }
        (pts, stats)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let rows: Vec<_> = pool.install(|| (a_min..=a_max).into_par_iter().map(row).collect());
    let mut stats = SearchStats::default();
    let mut set = BTreeSet::new();
    for (pts, s) in rows {
        stats.pairs += s.pairs;
        stats.exact_fallbacks += s.exact_fallbacks;
        set.extend(pts);
    }
    Ok((set.into_iter().collect(), stats))
}

/// Integer points of the surface with their recovered `d` values, sorted by
/// `(a, b, c)`.
pub fn search_box(
    a_range: (i64, i64),
    b_range: (i64, i64),
    opts: &SearchOptions,
) -> Result<Vec<SurfaceSolution>> {
    let (pts, _) = search_points(a_range, b_range, opts)?;
    Ok(pts
        .into_par_iter()
        .map(|(a, b, c)| SurfaceSolution::new(a, b, c, opts.integral))
        .collect())
}
