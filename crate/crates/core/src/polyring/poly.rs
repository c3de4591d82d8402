use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::zpoly;
use super::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals.
///
/// `coeffs[i]` is the coefficient of `x^i`. The vector never has a trailing
/// zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Poly::constant(Rational::from_integer(c.into()))
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Ascending integer coefficients, `[c0, c1, ...]`.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial, which sorts below every `Some(d)`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    /// Multiply by `x^k`.
    pub fn shl(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division: `self = q*b + r` with `deg r < deg b`.
    pub fn divrem(&self, b: &Poly) -> Result<(Poly, Poly)> {
        if b.is_zero() {
            return Err(Error::domain("polynomial division by zero"));
        }
        Ok(self.divrem_unchecked(b))
    }

    fn divrem_unchecked(&self, b: &Poly) -> (Poly, Poly) {
        let db = b.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return (Poly::zero(), self.clone());
        }
        let mut r = self.coeffs.clone();
        let inv = b.lc().recip();
        let mut q = vec![Rational::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let c = &r[i + db] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate().take(db) {
                if !bj.is_zero() {
                    r[i + j] -= &c * bj;
                }
            }
            r[i + db] = Rational::zero();
            q[i] = c;
        }
        r.truncate(db);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn rem(&self, b: &Poly) -> Result<Poly> {
        Ok(self.divrem(b)?.1)
    }

    /// Quotient when `b` is known to divide `self`; errors otherwise.
    pub fn exact_div(&self, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(b)?;
        if !r.is_zero() {
            return Err(Error::domain("inexact polynomial division"));
        }
        Ok(q)
    }

    pub fn divides(&self, a: &Poly) -> bool {
        !self.is_zero() && a.divrem_unchecked(self).1.is_zero()
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, b: &Poly) -> Poly {
        if self.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return self.monic();
        }
        if self.is_constant() || b.is_constant() {
            return Poly::one();
        }
        let (za, _) = zpoly::from_poly(self);
        let (zb, _) = zpoly::from_poly(b);
        let g = zpoly::gcd(&za, &zb);
        Poly::from_bigints(&g).monic()
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*b = g`, `g` monic.
    pub fn xgcd(&self, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem_unchecked(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Rational content: positive `c` with `self / c` a primitive integer
    /// polynomial. Zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in &self.coeffs {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        Rational::new(num, den)
    }

    /// `self / content`: integer coefficients, gcd 1, sign kept.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.content().recip())
    }

    /// Integer coefficients of the primitive part with positive leading
    /// coefficient.
    pub fn to_primitive_ints(&self) -> Vec<BigInt> {
        zpoly::from_poly(self).0
    }

    pub fn resultant(&self, b: &Poly) -> Rational {
        resultant(self, b)
    }

    /// Largest power `m` with `factor^m | self` (self nonzero, factor
    /// nonconstant).
    pub fn multiplicity(&self, factor: &Poly) -> u32 {
        if self.is_zero() || factor.is_constant() {
            return 0;
        }
        let mut m = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divrem_unchecked(factor);
            if !r.is_zero() {
                return m;
            }
            m += 1;
            cur = q;
        }
    }

    /// `p(x + a)` via Horner's rule.
    pub fn shift_by(&self, a: &Rational) -> Poly {
        if a.is_zero() || self.is_constant() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut acc: Vec<Rational> = Vec::with_capacity(n);
        for c in self.coeffs.iter().rev() {
            // acc <- acc * (x + a) + c
            acc.push(Rational::zero());
            for i in (1..acc.len()).rev() {
                let scaled = &acc[i] * a;
                acc[i] = &acc[i - 1] + scaled;
            }
            acc[0] = &acc[0] * a + c;
        }
        Poly::from_coeffs(acc)
    }

    /// `p(x + a)` for an integer shift.
    pub fn shift(&self, a: i64) -> Poly {
        self.shift_by(&Rational::from_integer(a.into()))
    }
}

/// Resultant by the Euclidean remainder sequence over `Q`.
pub fn resultant(a: &Poly, b: &Poly) -> Rational {
    if a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = Rational::one();
    loop {
        let da = a.deg0();
        let db = b.deg0();
        if db == 0 {
            return acc * pow_rat(&b.lc(), da);
        }
        if da == 0 {
            return acc * pow_rat(&a.lc(), db);
        }
        if da < db {
            if (da * db) % 2 == 1 {
                acc = -acc;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = a.divrem_unchecked(&b).1;
        if r.is_zero() {
            return Rational::zero();
        }
        let dr = r.deg0();
        if (da * db) % 2 == 1 {
            acc = -acc;
        }
        acc *= pow_rat(&b.lc(), da - dr);
        a = b;
        b = r;
    }
}

pub(crate) fn pow_rat(a: &Rational, e: usize) -> Rational {
    num_traits::pow::pow(a.clone(), e)
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, Rational::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Canonical text form: expanded, ascending powers, e.g. `23 - 20*x - x^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            if i == 0 || !unit {
                write!(f, "{abs}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
