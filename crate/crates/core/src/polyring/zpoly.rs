//! Integer-coefficient polynomial helpers (ascending `Vec<BigInt>`).
//!
//! These back the rational [`Poly`](super::Poly) operations that suffer from
//! coefficient swell over `Q`: gcd by primitive remainder sequences, exact
//! division over `Z`, and Horner evaluation at integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, Rational};

pub type ZPoly = Vec<BigInt>;

pub fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Primitive integer form with positive leading coefficient, and the scale
/// `s` such that `p = s * z`.
pub fn from_poly(p: &Poly) -> (ZPoly, Rational) {
    if p.is_zero() {
        return (Vec::new(), Rational::zero());
    }
    let mut content = p.content();
    if p.lc().is_negative() {
        content = -content;
    }
    let z = p
        .coeffs()
        .iter()
        .map(|c| {
            let q = c / &content;
            debug_assert!(q.is_integer());
            q.to_integer()
        })
        .collect();
    (z, content)
}

pub fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divide out the content and normalize the leading coefficient positive.
pub fn primitive(p: &[BigInt]) -> ZPoly {
    let mut p = p.to_vec();
    trim(&mut p);
    if p.is_empty() {
        return p;
    }
    let mut g = content(&p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in p.iter_mut() {
            *c = &*c / &g;
        }
    }
    p
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` over `Z`.
pub fn prem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return r;
    }
    let lb = &b[db];
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                r[shift + j] -= &lr * bj;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Primitive gcd of two nonzero integer polynomials via the primitive PRS.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = prem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    a
}

pub fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn derivative(p: &[BigInt]) -> ZPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a / b` over `Z` if `b` divides `a` exactly, else `None`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() <= db {
        return None;
    }
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let (c, rem) = r[i + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(q)
}

/// Squarefree part `p / gcd(p, p')`, primitive.
pub fn squarefree_part(p: &[BigInt]) -> ZPoly {
    let p = primitive(p);
    if p.len() <= 2 {
        return p;
    }
    let g = gcd(&p, &derivative(&p));
    if g.len() == 1 {
        return p;
    }
    primitive(&div_exact(&p, &g).expect("gcd divides"))
}

/// `max |c_i|`
pub fn height(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}
