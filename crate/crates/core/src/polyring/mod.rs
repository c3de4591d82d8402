//! Exact univariate arithmetic over the rationals.

mod classes;
pub mod modp;
mod poly;
mod ratfun;
mod roots;
pub mod zpoly;

pub use classes::{shift_equivalent, shift_le, v_less};
pub use poly::{resultant, Poly};
pub use ratfun::RatFun;
pub(crate) use roots::mod_inverse;
pub use roots::{integer_roots, interpolate, rational_roots};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
