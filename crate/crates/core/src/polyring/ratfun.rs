use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Element of `Q(x)` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("rational function with zero denominator"));
        }
        Ok(Self::reduce(num, den))
    }

    /// Builds `num/den`, which must already be coprime.
    fn from_coprime(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFun::zero();
        }
        if den.is_monic() {
            return RatFun { num, den };
        }
        let inv = den.lc().recip();
        RatFun {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFun::zero();
        }
        if den.is_constant() {
            let inv = den.lc().recip();
            return RatFun::from_poly(num.scale(&inv));
        }
        let g = num.gcd(&den);
        if g.is_one() {
            return Self::from_coprime(num, den);
        }
        let n = num.exact_div(&g).expect("gcd divides numerator");
        let d = den.exact_div(&g).expect("gcd divides denominator");
        Self::from_coprime(n, d)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    /// The numerator when this is a polynomial.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::domain("inverse of zero rational function"));
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    /// `f(x + a)`
    pub fn shift(&self, a: i64) -> RatFun {
        if a == 0 || self.is_zero() {
            return self.clone();
        }
        let num = self.num.shift(a);
        if self.den.is_one() {
            return RatFun::from_poly(num);
        }
        RatFun {
            num,
            den: self.den.shift(a),
        }
    }

    pub fn derivative(&self) -> RatFun {
        if self.den.is_one() {
            return RatFun::from_poly(self.num.derivative());
        }
        // (n/d)' = (n'd - nd')/d^2; cancellation only against d.
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(n, &self.den * &self.den)
    }

    /// Split into polynomial part and proper fraction: `self = q + r/den`.
    pub fn split_polynomial_part(&self) -> (Poly, RatFun) {
        if self.den.is_one() {
            return (self.num.clone(), RatFun::zero());
        }
        let (q, r) = self.num.divrem(&self.den).expect("nonzero denominator");
        (q, Self::from_coprime(r, self.den.clone()))
    }

    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::domain("pole of rational function"));
        }
        Ok(self.num.eval(at) / d)
    }
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> Self {
        RatFun::from_poly(p)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RatFun::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFun::from_coprime(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RatFun::from_coprime(&(&rhs.num * &self.den) + &self.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFun::from_coprime(num, &self.den * &rhs.den);
        }
        let d1 = self.den.exact_div(&g).unwrap();
        let d2 = rhs.den.exact_div(&g).unwrap();
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        RatFun::reduce(num, &(&d1 * &d2) * &g)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel so the product needs no gcd of the large pieces.
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RatFun::from_coprime(&n1 * &n2, &d1 * &d2)
    }
}

fn cancel(n: &Poly, d: &Poly) -> (Poly, Poly) {
    if d.is_one() || n.is_constant() {
        return (n.clone(), d.clone());
    }
    let g = n.gcd(d);
    if g.is_one() {
        (n.clone(), d.clone())
    } else {
        (n.exact_div(&g).unwrap(), d.exact_div(&g).unwrap())
    }
}

impl Mul<&Poly> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &Poly) -> RatFun {
        if self.den.is_one() {
            return RatFun::from_poly(&self.num * rhs);
        }
        let (n, d) = cancel(rhs, &self.den);
        RatFun::from_coprime(&self.num * &n, d)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFun) -> RatFun {
        self * &rhs.recip().expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn reduces_to_lowest_terms() {
        // (x^2 - 1) / (2x - 2) = (x + 1)/2
        let f = RatFun::new(p(&[-1, 0, 1]), p(&[-2, 2])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &p(&[1, 1]).scale(&Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = RatFun::new(p(&[1]), p(&[0, 1])).unwrap();
        let b = RatFun::new(p(&[1]), p(&[1, 1])).unwrap();
        // 1/x - 1/(x+1) = 1/(x(x+1))
        let d = &a - &b;
        assert_eq!(d.den(), &p(&[0, 1, 1]));
        assert_eq!(d.num(), &p(&[1]));
        assert_eq!(&(&d * &b.recip().unwrap()) * &a.recip().unwrap(), RatFun::one());
    }

    #[test]
    fn derivative_quotient_rule() {
        let f = RatFun::new(p(&[1]), p(&[0, 1])).unwrap();
        let df = f.derivative();
        assert_eq!(df, RatFun::new(p(&[-1]), p(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert!(RatFun::new(p(&[1]), Poly::zero()).is_err());
    }
}
