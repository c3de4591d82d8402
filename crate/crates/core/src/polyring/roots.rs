//! Integer and rational roots, and polynomial interpolation.
//!
//! Integer roots are located by p-adic Newton lifting of the simple roots
//! modulo a prime for which the squarefree part stays squarefree. Every
//! integer root `a` satisfies `|a| <= B` for the Cauchy bound `B`, so lifting
//! until the modulus exceeds `2B` recovers it as a symmetric residue, and each
//! candidate is confirmed by exact evaluation.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::{primes_from, FpPoly};
use super::zpoly::{self, ZPoly};
use super::{Poly, Rational};

/// Below this bound, roots are found by scanning `[-B, B]` directly.
const SCAN_LIMIT: u64 = 256;

/// All integer roots of a nonzero polynomial, ascending.
pub fn integer_roots(p: &Poly) -> Vec<BigInt> {
    assert!(!p.is_zero(), "integer_roots of the zero polynomial");
    let z = zpoly::squarefree_part(&p.to_primitive_ints());
    integer_roots_squarefree(&z).into_iter().collect()
}

/// All rational roots of a nonzero polynomial, ascending.
pub fn rational_roots(p: &Poly) -> Vec<Rational> {
    assert!(!p.is_zero(), "rational_roots of the zero polynomial");
    let z = zpoly::squarefree_part(&p.to_primitive_ints());
    let d = z.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    // a^(d-1) f(y/a) is monic with integer roots y = a * root.
    let a = z[d].clone();
    let mut monic = Vec::with_capacity(d + 1);
    let mut pw = BigInt::one();
    for i in (0..=d).rev() {
        if i == d {
            monic.push(BigInt::one());
        } else {
            monic.push(&z[i] * &pw);
            pw *= &a;
        }
    }
    monic.reverse();
    let mut roots: Vec<Rational> = integer_roots_squarefree(&monic)
        .into_iter()
        .map(|y| Rational::new(y, a.clone()))
        .collect();
    roots.sort();
    roots
}

fn integer_roots_squarefree(z: &[BigInt]) -> BTreeSet<BigInt> {
    let mut out = BTreeSet::new();
    let mut f: ZPoly = z.to_vec();
    zpoly::trim(&mut f);
    if f.len() <= 1 {
        return out;
    }
    if f[0].is_zero() {
        out.insert(BigInt::zero());
        let k = f.iter().position(|c| !c.is_zero()).unwrap();
        f.drain(..k);
    }
    if f.len() <= 1 {
        return out;
    }
    let lc = f.last().unwrap().abs();
    let max_lower = f[..f.len() - 1].iter().map(|c| c.abs()).max().unwrap();
    // Cauchy bound, and |root| <= |f(0)| since roots divide the constant.
    let cauchy = max_lower.div_ceil(&lc) + 1u32;
    let bound = cauchy.min(f[0].abs());

    if let Some(b) = bound.to_u64().filter(|&b| b <= SCAN_LIMIT) {
        let b = b as i64;
        for a in -b..=b {
            let a = BigInt::from(a);
            if zpoly::eval(&f, &a).is_zero() {
                out.insert(a);
            }
        }
        return out;
    }

    let (prime, fp) = primes_from(101)
        .map(|q| (q, FpPoly::from_ints(q, &f)))
        .find(|(q, fp)| {
            (&lc % BigInt::from(*q)) != BigInt::zero() && fp.is_squarefree()
        })
        .expect("some prime keeps a squarefree integer polynomial squarefree");
    let target: BigInt = bound * 2u32 + 1u32;
    let df = zpoly::derivative(&f);
    for r in fp.roots() {
        let a = lift_root(&f, &df, BigInt::from(r), prime, &target);
        if zpoly::eval(&f, &a).is_zero() {
            out.insert(a);
        }
    }
    out
}

/// Newton-lift a simple root `r` of `f mod p` until the modulus exceeds
/// `target`; returns the symmetric representative.
fn lift_root(f: &[BigInt], df: &[BigInt], r: BigInt, p: u64, target: &BigInt) -> BigInt {
    let mut m = BigInt::from(p);
    let mut a = r;
    while &m <= target {
        let m2 = &m * &m;
        let fa = zpoly::eval(f, &a).mod_floor(&m2);
        let dfa = zpoly::eval(df, &a).mod_floor(&m2);
        let inv = mod_inverse(&dfa, &m2).expect("simple root has invertible derivative");
        a = (&a - fa * inv).mod_floor(&m2);
        m = m2;
    }
    let half = &m / 2u32;
    if a > half {
        a - m
    } else {
        a
    }
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Poly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        // acc <- acc * (x - xs[i]) + dd[i]
        let lin = Poly::from_coeffs(vec![-xs[i].clone(), Rational::one()]);
        acc = &(&acc * &lin) + &Poly::constant(dd[i].clone());
    }
    acc
}
