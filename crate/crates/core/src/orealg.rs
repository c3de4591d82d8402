//! Ore operators `sum c_i ∂^i` with rational-function coefficients.

use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::{Poly, RatFun, Rational};

/// The two supported commutation rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OreRing {
    /// `σ(f)(x) = f(x+1)`, `δ = 0`.
    Shift,
    /// `σ = id`, `δ = d/dx`.
    Differential,
}

impl OreRing {
    /// `σ^n(p)`; `n` may be negative.
    pub fn sigma_pow_poly(self, p: &Poly, n: i64) -> Poly {
        match self {
            OreRing::Shift => p.shift(n),
            OreRing::Differential => p.clone(),
        }
    }

    pub fn sigma_pow(self, f: &RatFun, n: i64) -> RatFun {
        match self {
            OreRing::Shift => f.shift(n),
            OreRing::Differential => f.clone(),
        }
    }

    pub fn delta(self, f: &RatFun) -> RatFun {
        match self {
            OreRing::Shift => RatFun::zero(),
            OreRing::Differential => f.derivative(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OreRing::Shift => "shift",
            OreRing::Differential => "diff",
        }
    }
}

impl std::str::FromStr for OreRing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shift" => Ok(OreRing::Shift),
            "diff" | "differential" => Ok(OreRing::Differential),
            other => Err(Error::usage(format!("unknown ring `{other}`"))),
        }
    }
}

impl fmt::Display for OreRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `coeffs[i]` is the coefficient of `∂^i`; never a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OreOperator {
    ring: OreRing,
    coeffs: Vec<RatFun>,
}

impl OreOperator {
    pub fn new(ring: OreRing, mut coeffs: Vec<RatFun>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        OreOperator { ring, coeffs }
    }

    pub fn from_polys(ring: OreRing, coeffs: Vec<Poly>) -> Self {
        Self::new(ring, coeffs.into_iter().map(RatFun::from_poly).collect())
    }

    pub fn zero(ring: OreRing) -> Self {
        OreOperator {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: OreRing) -> Self {
        Self::constant(ring, RatFun::one())
    }

    pub fn constant(ring: OreRing, c: RatFun) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c ∂^i`
    pub fn monomial(ring: OreRing, c: RatFun, i: usize) -> Self {
        let mut coeffs = vec![RatFun::zero(); i + 1];
        coeffs[i] = c;
        Self::new(ring, coeffs)
    }

    /// `∂`
    pub fn d(ring: OreRing) -> Self {
        Self::monomial(ring, RatFun::one(), 1)
    }

    pub fn ring(&self) -> OreRing {
        self.ring
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RatFun {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn order0(&self) -> usize {
        self.order().unwrap_or(0)
    }

    /// Leading coefficient; zero for the zero operator.
    pub fn lc(&self) -> RatFun {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_polynomial(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_polynomial())
    }

    /// Polynomial coefficients, or a usage error for a non-polynomial operator.
    pub fn poly_coeffs(&self) -> Result<Vec<Poly>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.as_poly()
                    .cloned()
                    .ok_or_else(|| Error::usage("operator has non-polynomial coefficients"))
            })
            .collect()
    }

    /// Maximal coefficient degree of a polynomial operator.
    pub fn deg_x(&self) -> Result<usize> {
        Ok(self
            .poly_coeffs()?
            .iter()
            .map(|c| c.deg0())
            .max()
            .unwrap_or(0))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::usage(format!(
                "ring mismatch: {} vs {}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&RatFun, &RatFun) -> RatFun) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = RatFun::zero();
        let coeffs = (0..n)
            .map(|i| {
                f(
                    self.coeffs.get(i).unwrap_or(&zero),
                    other.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        Self::new(self.ring, coeffs)
    }

    /// Panics on ring mismatch; see [`OreOperator::try_add`].
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("operators over the same ring")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_ring(other).expect("operators over the same ring");
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Self {
        OreOperator {
            ring: self.ring,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// `f · self`
    pub fn scale_left(&self, f: &RatFun) -> Self {
        if f.is_zero() {
            return Self::zero(self.ring);
        }
        OreOperator {
            ring: self.ring,
            coeffs: self.coeffs.iter().map(|c| f * c).collect(),
        }
    }

    pub fn scale_left_poly(&self, f: &Poly) -> Self {
        self.scale_left(&RatFun::from_poly(f.clone()))
    }

    /// `∂ · self`, by `∂c = σ(c)∂ + δ(c)`.
    pub fn d_times(&self) -> Self {
        let mut out = vec![RatFun::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] = &out[i + 1] + &self.ring.sigma_pow(c, 1);
            if self.ring == OreRing::Differential {
                out[i] = &out[i] + &c.derivative();
            }
        }
        Self::new(self.ring, out)
    }

    /// `∂^n · self`
    pub fn d_pow_times(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |acc, _| acc.d_times())
    }

    /// The noncommutative product `self · other`.
    pub fn op_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut acc = Self::zero(self.ring);
        let mut power = other.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = power.d_times();
            }
            if !a.is_zero() {
                acc = acc.zip_with(&power.scale_left(a), |u, v| u + v);
            }
        }
        Ok(acc)
    }

    /// `(q, r)` with `self = q·b + r` and `ord r < ord b`.
    pub fn right_divrem(&self, b: &Self) -> Result<(Self, Self)> {
        self.check_ring(b)?;
        let Some(db) = b.order() else {
            return Err(Error::domain("right division by the zero operator"));
        };
        let ring = self.ring;
        let mut r = self.clone();
        let mut q = vec![RatFun::zero(); r.coeffs.len().saturating_sub(db)];
        let lcb = b.lc();
        // powers[m] = ∂^m · b
        let mut powers = vec![b.clone()];
        while let Some(dr) = r.order().filter(|&dr| dr >= db) {
            let m = dr - db;
            while powers.len() <= m {
                let next = powers.last().unwrap().d_times();
                powers.push(next);
            }
            let c = &r.lc() / &ring.sigma_pow(&lcb, m as i64);
            r = r.sub(&powers[m].scale_left(&c));
            // The leading term cancels exactly; trim guards against drift.
            r.coeffs.truncate(dr);
            r = Self::new(ring, r.coeffs);
            q[m] = c;
        }
        Ok((Self::new(ring, q), r))
    }

    /// Right remainder of `self` modulo `b`.
    pub fn right_rem(&self, b: &Self) -> Result<Self> {
        Ok(self.right_divrem(b)?.1)
    }

    /// Whether `self` lies in the left ideal generated by `l`.
    pub fn is_left_multiple(&self, l: &Self) -> Result<bool> {
        Ok(self.right_rem(l)?.is_zero())
    }

    /// `(c, b)` with `b` polynomial and primitive, and `self = (1/c)·b`.
    pub fn clear_denominators(&self) -> (Poly, Self) {
        if self.is_zero() {
            return (Poly::one(), self.clone());
        }
        let den = self
            .coeffs
            .iter()
            .fold(Poly::one(), |acc, c| lcm(&acc, c.den()));
        let polys: Vec<Poly> = self
            .coeffs
            .iter()
            .map(|c| {
                let cofactor = den.exact_div(c.den()).expect("lcm is a multiple");
                c.num() * &cofactor
            })
            .collect();
        let content = rational_content(&polys);
        let inv = content.recip();
        let b = Self::from_polys(self.ring, polys.iter().map(|p| p.scale(&inv)).collect());
        (den.scale(&inv), b)
    }

    /// `(proper, poly)` with `self = proper + poly`, `poly` polynomial and
    /// every coefficient of `proper` a proper fraction.
    pub fn strip_polynomial_part(&self) -> (Self, Self) {
        let (polys, fracs): (Vec<Poly>, Vec<RatFun>) = self
            .coeffs
            .iter()
            .map(|c| c.split_polynomial_part())
            .unzip();
        (
            Self::new(self.ring, fracs),
            Self::from_polys(self.ring, polys),
        )
    }

    /// Applies `σ^n` to every coefficient.
    pub fn sigma_pow_coeffs(&self, n: i64) -> Self {
        OreOperator {
            ring: self.ring,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| self.ring.sigma_pow(c, n))
                .collect(),
        }
    }
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    if b.is_one() {
        return a.clone();
    }
    let g = a.gcd(b);
    (a * &b.exact_div(&g).expect("gcd divides")).monic()
}

/// Positive rational `c` such that all `polys / c` have integer coefficients
/// with overall gcd 1.
fn rational_content(polys: &[Poly]) -> Rational {
    use num_integer::Integer;
    use num_traits::{One, Zero};
    let mut num = num_bigint::BigInt::zero();
    let mut den = num_bigint::BigInt::one();
    for c in polys.iter().flat_map(|p| p.coeffs()) {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    if num.is_zero() {
        return Rational::one();
    }
    Rational::new(num, den)
}

impl fmt::Debug for OreOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OreOperator[{}]({self})", self.ring)
    }
}

/// Text form accepted by the operator parser, e.g. `(1 + x)*D^2 + (2)*D + (x)`.
impl fmt::Display for OreOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coef = if c.is_polynomial() {
                format!("({})", c.num())
            } else {
                format!("({})/({})", c.num(), c.den())
            };
            match i {
                0 => write!(f, "{coef}")?,
                1 => write!(f, "{coef}*D")?,
                _ => write!(f, "{coef}*D^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    fn op(ring: OreRing, cs: &[&[i64]]) -> OreOperator {
        OreOperator::from_polys(ring, cs.iter().map(|c| p(c)).collect())
    }

    #[test]
    fn commutation_rules() {
        let x = op(OreRing::Shift, &[&[0, 1]]);
        let d = OreOperator::d(OreRing::Shift);
        assert_eq!(d.op_mul(&x).unwrap(), op(OreRing::Shift, &[&[], &[1, 1]]));

        let x = op(OreRing::Differential, &[&[0, 1]]);
        let d = OreOperator::d(OreRing::Differential);
        assert_eq!(
            d.op_mul(&x).unwrap(),
            op(OreRing::Differential, &[&[1], &[0, 1]])
        );
    }

    #[test]
    fn ring_mismatch_is_usage_error() {
        let a = OreOperator::d(OreRing::Shift);
        let b = OreOperator::d(OreRing::Differential);
        assert!(matches!(a.op_mul(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn division_by_self_and_offset() {
        let l = op(OreRing::Shift, &[&[1, 2], &[0, 1], &[3, 0, 1]]);
        let (q, r) = l.right_divrem(&l).unwrap();
        assert_eq!(q, OreOperator::one(OreRing::Shift));
        assert!(r.is_zero());

        let m = l.d_times().add(&OreOperator::one(OreRing::Shift));
        let (q, r) = m.right_divrem(&l).unwrap();
        assert_eq!(q, OreOperator::d(OreRing::Shift));
        assert_eq!(r, OreOperator::one(OreRing::Shift));
        assert!(!m.is_left_multiple(&l).unwrap());
    }

    #[test]
    fn zero_divisor_is_domain_error() {
        let l = OreOperator::d(OreRing::Shift);
        assert!(matches!(
            l.right_divrem(&OreOperator::zero(OreRing::Shift)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn clear_denominators_takes_lcm() {
        // (1/(x(x+1)))∂ + 1/x
        let ring = OreRing::Differential;
        let a = OreOperator::new(
            ring,
            vec![
                RatFun::new(p(&[1]), p(&[0, 1])).unwrap(),
                RatFun::new(p(&[1]), p(&[0, 1, 1])).unwrap(),
            ],
        );
        let (c, b) = a.clear_denominators();
        assert_eq!(c, p(&[0, 1, 1]));
        assert_eq!(b, op(ring, &[&[1, 1], &[1]]));

        let poly = op(ring, &[&[2, 4], &[6]]);
        let (c, b) = poly.clear_denominators();
        assert_eq!(b, op(ring, &[&[1, 2], &[3]]));
        assert_eq!(c, p(&[1]).scale(&Rational::from_integer(2.into()).recip()));
    }

    #[test]
    fn deg_x_requires_polynomial() {
        let a = OreOperator::constant(
            OreRing::Shift,
            RatFun::new(p(&[1]), p(&[0, 1])).unwrap(),
        );
        assert!(matches!(a.deg_x(), Err(Error::Usage(_))));
        assert_eq!(op(OreRing::Shift, &[&[5]]).deg_x().unwrap(), 0);
    }

    #[test]
    fn strip_polynomial_part_splits() {
        let a = OreOperator::new(
            OreRing::Shift,
            vec![RatFun::new(p(&[1, 0, 1]), p(&[0, 1])).unwrap()],
        );
        let (proper, poly) = a.strip_polynomial_part();
        assert_eq!(poly, op(OreRing::Shift, &[&[0, 1]]));
        assert_eq!(proper.add(&poly), a);
        assert!(proper.coeff(0).num().deg0() < proper.coeff(0).den().deg0());
    }
}
