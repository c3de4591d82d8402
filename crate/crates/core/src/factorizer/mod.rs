//! Irreducible factorization over the rationals at desk scale.
//!
//! Strategy: squarefree decomposition, splitting by caller hints, rational
//! root extraction, closed-form irreducibility for degree at most three, and
//! Zassenhaus for the remaining pieces up to degree 24. Anything beyond that
//! is returned as a block flagged `irreducible: false`, never as an error.

mod zassenhaus;

use std::fmt;

use num_traits::One;

use crate::polyring::{rational_roots, Poly, Rational};

pub use zassenhaus::{factor_mod_p, factor_squarefree as zassenhaus};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    /// Monic base polynomial.
    pub base: Poly,
    pub mult: u32,
    /// `false` when the base could not be certified irreducible.
    pub irreducible: bool,
}

/// `unit * prod(base^mult)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorDecomp {
    pub unit: Rational,
    pub factors: Vec<Factor>,
}

impl FactorDecomp {
    pub fn product(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, f| {
                &acc * &f.base.pow(f.mult)
            })
    }

    /// Every base certified irreducible.
    pub fn is_complete(&self) -> bool {
        self.factors.iter().all(|f| f.irreducible)
    }

    /// Multiplicity of a monic base, 0 if absent.
    pub fn mult_of(&self, base: &Poly) -> u32 {
        let base = base.monic();
        self.factors
            .iter()
            .find(|f| f.base == base)
            .map_or(0, |f| f.mult)
    }
}

impl fmt::Display for FactorDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for fac in &self.factors {
            write!(f, " * ({})", fac.base)?;
            if fac.mult > 1 {
                write!(f, "^{}", fac.mult)?;
            }
            if !fac.irreducible {
                write!(f, "[?]")?;
            }
        }
        Ok(())
    }
}

/// Yun's squarefree decomposition of the monic part of `p`.
///
/// Returns monic, pairwise coprime, squarefree parts with strictly increasing
/// multiplicities; `p = lc(p) * prod(part^mult)`.
pub fn squarefree_decomp(p: &Poly) -> Vec<(Poly, u32)> {
    assert!(!p.is_zero(), "squarefree decomposition of zero");
    let f = p.monic();
    if f.is_constant() {
        return Vec::new();
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).unwrap();
    let c = df.exact_div(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.exact_div(&a).unwrap();
        let c = d.exact_div(&a).unwrap();
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Factor `p` into monic irreducibles, using `hints` as trusted divisors.
pub fn factor(p: &Poly, hints: &[Poly]) -> FactorDecomp {
    assert!(!p.is_zero(), "factorization of zero");
    let unit = p.lc();
    let hints: Vec<Poly> = hints
        .iter()
        .filter(|h| !h.is_constant())
        .map(|h| h.monic())
        .collect();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomp(p) {
        for (base, irreducible) in split_squarefree(&part, &hints) {
            factors.push(Factor {
                base,
                mult,
                irreducible,
            });
        }
    }
    factors.sort_by(|a, b| {
        (a.base.degree(), a.base.coeffs()).cmp(&(b.base.degree(), b.base.coeffs()))
    });
    FactorDecomp { unit, factors }
}

fn split_squarefree(part: &Poly, hints: &[Poly]) -> Vec<(Poly, bool)> {
    let mut out = Vec::new();
    let mut rest = part.clone();
    for h in hints {
        if rest.is_constant() {
            break;
        }
        let g = rest.gcd(h);
        if g.is_constant() {
            continue;
        }
        rest = rest.exact_div(&g).unwrap();
        if &g == h && h.deg0() > 3 {
            out.push((g, true));
        } else {
            out.extend(builtin(&g));
        }
    }
    out.extend(builtin(&rest));
    out
}

fn builtin(f: &Poly) -> Vec<(Poly, bool)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let mut rest = f.monic();
    for r in rational_roots(&rest) {
        let lin = Poly::from_coeffs(vec![-r, Rational::one()]);
        rest = rest.exact_div(&lin).unwrap();
        out.push((lin, true));
    }
    match rest.degree() {
        None | Some(0) => {}
        Some(1..=3) => out.push((rest, true)),
        Some(_) => match zassenhaus(&rest) {
            Some(parts) => out.extend(parts.into_iter().map(|g| (g, true))),
            None => out.push((rest, false)),
        },
    }
    out
}
