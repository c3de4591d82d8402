//! Shift-equivalence classes of irreducible polynomials.
//!
//! Irreducible `p` and `q` are equivalent when `p(x+n)/q` is a nonzero
//! constant for some integer `n`. Within a class, `p <= q` when such an `n`
//! is non-negative.

use num_bigint::BigInt;

use super::{Poly, Rational};
use crate::factorizer::FactorDecomp;

/// The unique `n` with `p(x+n)` associate to `q`, if any.
///
/// Both arguments are expected to be irreducible; this is not checked.
pub fn shift_equivalent(p: &Poly, q: &Poly) -> Option<i64> {
    let d = p.degree()?;
    if q.degree()? != d {
        return None;
    }
    if d == 0 {
        return Some(0);
    }
    // Compare subleading coefficients after making both monic:
    // p(x+n) = x^d + (a + d n) x^(d-1) + ...
    let pm = p.monic();
    let qm = q.monic();
    let diff = qm.coeff(d - 1) - pm.coeff(d - 1);
    let n = diff / Rational::from_integer(BigInt::from(d));
    if !n.is_integer() {
        return None;
    }
    let n: i64 = i64::try_from(n.to_integer()).ok()?;
    (pm.shift(n) == qm).then_some(n)
}

/// `max { v_q(u) : q in [p], p > q }`, zero when no such `q` exists.
///
/// Bases flagged as not known to be irreducible are skipped.
pub fn v_less(p: &Poly, u: &FactorDecomp) -> u32 {
    u.factors
        .iter()
        .filter(|f| f.irreducible)
        .filter_map(|f| {
            let n = shift_equivalent(p, &f.base)?;
            (n < 0).then_some(f.mult)
        })
        .max()
        .unwrap_or(0)
}

/// `p <= q` in the class order (both irreducible).
pub fn shift_le(p: &Poly, q: &Poly) -> bool {
    shift_equivalent(p, q).is_some_and(|n| n >= 0)
}
