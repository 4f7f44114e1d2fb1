use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::{sign, Rat};
use super::upoly::UPoly;

/// All distinct rational roots, ascending.
///
/// The primitive integer form `P` of degree `n` with leading coefficient `L`
/// becomes the monic integral `L^(n-1) P(y / L)`, whose rational roots are
/// integers. Those are isolated by bisection over integer intervals using a
/// Sturm chain, so no coefficient is ever factored. Every reported root is
/// confirmed by exact evaluation. Zero polynomial yields an empty set.
pub fn rational_roots(p: &UPoly) -> Vec<Rat> {
    if p.is_zero() {
        return Vec::new();
    }
    let (_, prim) = p.primitive_integer_form();
    let low = prim.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rat::zero());
    }
    let trimmed = &prim[low..];
    let n = trimmed.len() - 1;
    if n > 0 {
        let lead = trimmed[n].clone();
        let mut monic = Vec::with_capacity(n + 1);
        let mut pw = BigInt::one();
        for c in trimmed[..n].iter().rev() {
            monic.push(c * &pw);
            pw *= &lead;
        }
        monic.reverse();
        monic.push(BigInt::one());
        let q = UPoly::from_bigints(&monic);
        let orig = UPoly::from_bigints(trimmed);
        for y in integer_roots(&q) {
            let r = Rat::new(y, lead.clone());
            if orig.eval(&r).is_zero() {
                roots.push(r);
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// The signed remainder sequence `q, q', -rem(q, q'), ...`.
fn sturm_chain(q: &UPoly) -> Vec<UPoly> {
    let mut chain = vec![q.clone(), q.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].degree() == Some(0) {
            break;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]).expect("nonzero divisor");
        chain.push(r.scale(&-Rat::one()));
    }
    chain
}

/// Each chain member as a sign and a primitive integer polynomial.
fn integral_chain(chain: &[UPoly]) -> Vec<(i8, Vec<BigInt>)> {
    chain
        .iter()
        .map(|p| {
            let (c, prim) = p.primitive_integer_form();
            (sign(&c), prim)
        })
        .collect()
}

fn variations(chain: &[(i8, Vec<BigInt>)], x: &BigInt) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|(s, p)| {
            let v = p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c);
            s * match v.sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Plus => 1,
            }
        })
        .filter(|s| *s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Integer roots of a nonconstant polynomial, ascending.
pub fn integer_roots(q: &UPoly) -> Vec<BigInt> {
    if q.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let lead = q.leading().unwrap();
    // Cauchy: every root satisfies |y| < 1 + max |q_i / lead|.
    let bound: BigInt = q
        .coeffs()
        .iter()
        .map(|c| (c / lead).abs())
        .max()
        .unwrap_or_else(Rat::zero)
        .ceil()
        .to_integer()
        + 1;
    let chain = integral_chain(&sturm_chain(&q.squarefree_part()));
    let at = |x: &BigInt| variations(&chain, x);
    let mut out = Vec::new();
    // (lo, hi] with the variation counts at both ends
    let mut stack = vec![(-&bound, at(&-&bound), bound.clone(), at(&bound))];
    while let Some((lo, vlo, hi, vhi)) = stack.pop() {
        if vlo <= vhi {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if q.eval(&Rat::from_integer(hi.clone())).is_zero() {
                out.push(hi);
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi) >> 1;
        let vmid = at(&mid);
        stack.push((lo, vlo, mid.clone(), vmid));
        stack.push((mid, vmid, hi, vhi));
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, ratio};

    #[test]
    fn quartic_with_root_one() {
        assert_eq!(
            rational_roots(&UPoly::from_ints(&[-7, 2, 2, 2, 1])),
            vec![rat(1)]
        );
    }

    #[test]
    fn no_roots() {
        assert!(rational_roots(&UPoly::from_ints(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn non_integral_root() {
        assert_eq!(
            rational_roots(&UPoly::from_ints(&[-3, 2])),
            vec![ratio(3, 2)]
        );
    }

    #[test]
    fn zero_root_and_rational_coefficients() {
        // x^2 (x - 1/3)(x + 2)
        let p = &(&UPoly::from_ints(&[0, 0, 1]) * &UPoly::linear_root(&ratio(1, 3)))
            * &UPoly::from_ints(&[2, 1]);
        assert_eq!(rational_roots(&p), vec![rat(-2), rat(0), ratio(1, 3)]);
    }

    #[test]
    fn repeated_and_large_roots() {
        // (x - 10^12)^2 (3x + 7)(x^2 + 1)
        let big = Rat::from_integer(BigInt::from(10).pow(12));
        let l = UPoly::linear_root(&big);
        let p = &(&(&l * &l) * &UPoly::from_ints(&[7, 3])) * &UPoly::from_ints(&[1, 0, 1]);
        assert_eq!(rational_roots(&p), vec![ratio(-7, 3), big]);
    }

    #[test]
    fn integer_roots_of_monic() {
        let q = UPoly::from_ints(&[-60, 76, -7, -10, 1]);
        let r: Vec<i64> = integer_roots(&q)
            .iter()
            .map(|b| b.try_into().unwrap())
            .collect();
        assert_eq!(r, vec![-3, 1, 2, 10]);
        assert!(integer_roots(&UPoly::from_ints(&[-2, 0, 1])).is_empty());
    }
}
