//! Removal of leading-coefficient factors by left multiplication.
//!
//! A polynomial `p` dividing `lc(L)` is removable at order `n` when some
//! `P` of order `n` over `Q(x)` makes `PL` polynomial with
//! `σ^{-n}(lc(PL)) = lc(L)/p` up to factors coprime to `p`. Certificates here
//! always use the normal form `lc(P) = 1/σ^n(p)^k`, in which the relation
//! holds exactly up to a constant.
//!
//! For the shift ring the search is complete: the order is bounded by the
//! largest `m` with `gcd(σ^m(p), ℓ_0) ≠ 1`, and the denominator exponent by
//! `k + n v_<p(lc L)`. For the differential ring the caller supplies caps and
//! a failed search only means "not found".

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactla::QMatrix;
use crate::factorizer::{factor, FactorDecomp};
use crate::orealg::{OreOperator, OreRing};
use crate::polyring::{integer_roots, interpolate, resultant, v_less, Poly, RatFun, Rational};

/// Witness that `factor^power` is removable from `L` at `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalCertificate {
    /// Monic; irreducible for single-factor certificates, a product for
    /// combined ones.
    pub factor: Poly,
    pub power: u32,
    pub order: usize,
    /// Uniform denominator exponent of the ansatz that produced `removing`.
    pub exponent: u32,
    /// `P`, with `lc(P) = c/σ^order(factor^power)` for a constant `c`.
    pub removing: OreOperator,
    /// `P·L`, polynomial.
    pub removed: OreOperator,
}

impl RemovalCertificate {
    /// The certificate removing nothing: `P = 1`.
    pub fn trivial(l: &OreOperator) -> Self {
        RemovalCertificate {
            factor: Poly::one(),
            power: 1,
            order: 0,
            exponent: 1,
            removing: OreOperator::one(l.ring()),
            removed: l.clone(),
        }
    }

    /// `factor^power`
    pub fn block(&self) -> Poly {
        self.factor.pow(self.power)
    }

    pub fn is_trivial(&self) -> bool {
        self.factor.is_constant()
    }

    /// Re-checks every invariant against `l`; any failure is an internal
    /// error describing the breach.
    pub fn verify(&self, l: &OreOperator) -> Result<()> {
        let breach = |what: &str| Err(Error::internal(format!("certificate check failed: {what}")));
        let ring = l.ring();
        if self.removing.ring() != ring || self.removed.ring() != ring {
            return breach("ring differs from the operator's");
        }
        if self.removing.order() != Some(self.order) {
            return breach("order of P differs from the recorded order");
        }
        if self.removing.op_mul(l)? != self.removed {
            return breach("PL is not the product of P and L");
        }
        if !self.removed.is_polynomial() {
            return breach("PL has non-polynomial coefficients");
        }
        if !self.factor.is_monic() && !self.factor.is_constant() {
            return breach("factor is not monic");
        }
        let block = self.block();
        let lc_l = l.lc();
        let Some(lc_l) = lc_l.as_poly() else {
            return breach("L is not a polynomial operator");
        };
        if !block.divides(lc_l) {
            return breach("removed block does not divide lc(L)");
        }
        let n = self.order as i64;
        let shifted = ring.sigma_pow_poly(&block, n);
        let expected_lc = RatFun::new(Poly::one(), shifted)?;
        if !is_constant_multiple(&self.removing.lc(), &expected_lc) {
            return breach("lc(P) is not a constant over the shifted block");
        }
        let lc_pl = ring.sigma_pow(&self.removed.lc(), -n);
        let lhs = &lc_pl * &block;
        if !is_constant_multiple(&lhs, &RatFun::from_poly(lc_l.clone())) {
            return breach("shifted lc(PL) times the block is not lc(L) up to a constant");
        }
        Ok(())
    }
}

fn is_constant_multiple(a: &RatFun, b: &RatFun) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    (a / b).is_constant()
}

/// Outcome of the power search for one factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every power up to the requested maximum was removed.
    AllRemovable,
    /// Shift ring: the next power fails at the complete bounds, so it is not
    /// removable.
    ProvenMaximal,
    /// Shift ring: no non-negative shift of the factor meets the trailing
    /// coefficient. Non-removability then rests on a published claim that is
    /// not proved in the reference argument; see [`RemovabilityReport::note`].
    NoCandidateOrder,
    /// Differential ring: the next power was not found within the caps.
    CapsExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovabilityReport {
    pub factor: Poly,
    /// Multiplicity of `factor` in `lc(L)`.
    pub multiplicity: u32,
    pub max_power_removable: u32,
    /// Shift ring: the order bound; differential ring: the order at which the
    /// last certificate was found.
    pub order_bound: Option<usize>,
    /// `certificates[k-1]` removes `factor^k`.
    pub certificates: Vec<RemovalCertificate>,
    pub verdict: Verdict,
    pub note: Option<String>,
}

/// Search caps for the differential ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Caps {
    /// Largest order tried; defaults to `2·ord(L)`.
    pub n_cap: Option<usize>,
    /// Largest exponent tried; defaults to `k + deg_x(L)`.
    pub e_cap: Option<u32>,
}

fn require_shift(l: &OreOperator, what: &str) -> Result<()> {
    if l.ring() != OreRing::Shift {
        return Err(Error::usage(format!("{what} is only available for the shift ring")));
    }
    Ok(())
}

fn lc_poly(l: &OreOperator) -> Result<Poly> {
    if l.is_zero() {
        return Err(Error::usage("operator must be nonzero"));
    }
    l.lc()
        .as_poly()
        .cloned()
        .ok_or_else(|| Error::usage("operator must have polynomial coefficients"))
}

/// Largest `m >= 0` with `gcd(σ^m(p), ℓ_0) ≠ 1`, or `None` if there is none.
pub fn removal_order_bound(l: &OreOperator, p: &Poly) -> Result<Option<usize>> {
    require_shift(l, "removal order bound")?;
    if !l.is_polynomial() {
        return Err(Error::usage("operator must have polynomial coefficients"));
    }
    let l0 = l.coeff(0).num().clone();
    if l0.is_zero() {
        return Err(Error::usage("trailing coefficient must be nonzero"));
    }
    if p.is_constant() {
        return Err(Error::usage("factor must be non-constant"));
    }
    // R(m) = res_x(p(x+m), ℓ_0) has degree at most deg p · deg ℓ_0 in m.
    let npts = p.deg0() * l0.deg0() + 1;
    let xs: Vec<Rational> = (0..npts as i64).map(|m| Rational::from_integer(m.into())).collect();
    let ys: Vec<Rational> = (0..npts as i64)
        .map(|m| resultant(&p.shift(m), &l0))
        .collect();
    let r = interpolate(&xs, &ys);
    if r.is_zero() {
        return Err(Error::internal("resultant in the shift vanishes identically"));
    }
    Ok(integer_roots(&r)
        .into_iter()
        .filter(|m| !m.is_negative())
        .max()
        .map(|m| m.to_usize().expect("order bound fits in usize")))
}

/// `k + n · v_<p(lc L)`, factoring `lc L` with `p` as a hint.
pub fn exponent_bound(l: &OreOperator, p: &Poly, k: u32, n: usize) -> Result<u32> {
    require_shift(l, "exponent bound")?;
    let lc = lc_poly(l)?;
    Ok(exponent_bound_in(&factor(&lc, std::slice::from_ref(p)), p, k, n))
}

/// [`exponent_bound`] against an existing factorization of `lc L`.
pub fn exponent_bound_in(lc: &FactorDecomp, p: &Poly, k: u32, n: usize) -> u32 {
    k + n as u32 * v_less(&p.monic(), lc)
}

/// Attempts to remove `p^k` at order `n` with denominators `σ^n(p)^e`.
///
/// Works in either ring. Returns `Ok(None)` when the linear system is
/// inconsistent.
pub fn try_remove_at(
    l: &OreOperator,
    p: &Poly,
    k: u32,
    n: usize,
    e: u32,
) -> Result<Option<RemovalCertificate>> {
    let lc = lc_poly(l)?;
    if !l.is_polynomial() {
        return Err(Error::usage("operator must have polynomial coefficients"));
    }
    if p.is_constant() {
        return Err(Error::usage("factor must be non-constant"));
    }
    if k == 0 || e < k {
        return Err(Error::usage("need 1 <= k <= e"));
    }
    let pm = p.monic();
    if !pm.pow(k).divides(&lc) {
        return Err(Error::usage(format!("({pm})^{k} does not divide lc(L)")));
    }
    let ring = l.ring();
    let sp = ring.sigma_pow_poly(&pm, n as i64);
    let s = sp.pow(e);
    let ds = s.deg0();
    let top = sp.pow(e - k);

    // ∂^i L for i = 0..=n
    let mut dl = vec![l.clone()];
    for _ in 0..n {
        let next = dl.last().unwrap().d_times();
        dl.push(next);
    }
    let ncoef = l.order0() + n + 1;
    let nvars = n * ds;
    let mut m = QMatrix::zeros(ncoef * ds, nvars);
    let x = Poly::x();
    for (i, op) in dl.iter().take(n).enumerate() {
        for c in 0..=op.order0() {
            let f = op.coeff(c);
            let mut r = f.num().rem(&s)?;
            for j in 0..ds {
                for (t, v) in r.coeffs().iter().enumerate() {
                    m.set(c * ds + t, i * ds + j, v.clone());
                }
                r = (&x * &r).rem(&s)?;
            }
        }
    }
    let fixed = dl[n].scale_left_poly(&top);
    let mut rhs = vec![Rational::zero(); ncoef * ds];
    for c in 0..=fixed.order0() {
        let r = fixed.coeff(c).num().rem(&s)?;
        for (t, v) in r.coeffs().iter().enumerate() {
            rhs[c * ds + t] = -v;
        }
    }
    let Some(sol) = m.solve_affine(&rhs) else {
        return Ok(None);
    };

    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..n {
        let pi = Poly::from_coeffs(sol[i * ds..(i + 1) * ds].to_vec());
        coeffs.push(RatFun::new(pi, s.clone())?);
    }
    coeffs.push(RatFun::new(top, s.clone())?);
    let raw = OreOperator::new(ring, coeffs);
    let (removing, _) = raw.strip_polynomial_part();
    let removed = removing.op_mul(l)?;
    if !removed.is_polynomial() {
        return Err(Error::internal("ansatz solution does not clear denominators"));
    }
    let cert = RemovalCertificate {
        factor: pm,
        power: k,
        order: n,
        exponent: e,
        removing,
        removed,
    };
    debug_assert!(cert.verify(l).is_ok());
    Ok(Some(cert))
}

/// Finds the largest power of `p` (at most `k_max`) removable from `l`.
///
/// Shift ring: complete, using the order and exponent bounds; the certificate
/// for the largest power is then moved to the lowest order that works.
/// Differential ring: searches orders and exponents up to `caps`.
pub fn analyze_factor(
    l: &OreOperator,
    p: &Poly,
    k_max: u32,
    caps: &Caps,
) -> Result<RemovabilityReport> {
    let lc = lc_poly(l)?;
    let pm = p.monic();
    let lc_decomp = factor(&lc, std::slice::from_ref(&pm));
    analyze_factor_in(l, &pm, k_max, caps, &lc_decomp)
}

pub(crate) fn analyze_factor_in(
    l: &OreOperator,
    pm: &Poly,
    k_max: u32,
    caps: &Caps,
    lc_decomp: &FactorDecomp,
) -> Result<RemovabilityReport> {
    let lc = lc_poly(l)?;
    let multiplicity = lc.multiplicity(pm);
    let top = k_max.min(multiplicity);
    let mut report = RemovabilityReport {
        factor: pm.clone(),
        multiplicity,
        max_power_removable: 0,
        order_bound: None,
        certificates: Vec::new(),
        verdict: Verdict::AllRemovable,
        note: None,
    };
    match l.ring() {
        OreRing::Shift => {
            let Some(n) = removal_order_bound(l, pm)? else {
                if top > 0 {
                    report.verdict = Verdict::NoCandidateOrder;
                    report.note = Some(
                        "no shift of the factor meets the trailing coefficient; \
                         non-removability follows from a cited, unproved claim"
                            .into(),
                    );
                }
                return Ok(report);
            };
            report.order_bound = Some(n);
            for k in 1..=top {
                let e = exponent_bound_in(lc_decomp, pm, k, n);
                match try_remove_at(l, pm, k, n, e)? {
                    Some(c) => report.certificates.push(c),
                    None => {
                        report.verdict = Verdict::ProvenMaximal;
                        break;
                    }
                }
            }
            if let Some(last) = report.certificates.pop() {
                let lowered = lowest_order(l, pm, lc_decomp, last)?;
                report.certificates.push(lowered);
            }
        }
        OreRing::Differential => {
            let n_cap = caps.n_cap.unwrap_or(2 * l.order0());
            let deg_x = l.deg_x()? as u32;
            'powers: for k in 1..=top {
                let e_cap = caps.e_cap.unwrap_or(k + deg_x).max(k);
                for n in 0..=n_cap {
                    for e in k..=e_cap {
                        if let Some(c) = try_remove_at(l, pm, k, n, e)? {
                            report.order_bound = Some(n);
                            report.certificates.push(c);
                            continue 'powers;
                        }
                    }
                }
                report.verdict = Verdict::CapsExhausted;
                break;
            }
        }
    }
    report.max_power_removable = report.certificates.len() as u32;
    Ok(report)
}

/// Binary search below `found.order` for a lower order removing the same
/// power. Removability is upward closed in the order (`∂P` removes whatever
/// `P` removes), and lower orders give stronger curves.
fn lowest_order(
    l: &OreOperator,
    pm: &Poly,
    lc_decomp: &FactorDecomp,
    found: RemovalCertificate,
) -> Result<RemovalCertificate> {
    let k = found.power;
    let (mut lo, mut best) = (0, found);
    while lo < best.order {
        let mid = (lo + best.order) / 2;
        let e = exponent_bound_in(lc_decomp, pm, k, mid);
        match try_remove_at(l, pm, k, mid, e)? {
            Some(c) => best = c,
            None => lo = mid + 1,
        }
    }
    Ok(best)
}

/// Merges two certificates for coprime blocks into one removing their
/// product at order `max(n1, n2)`.
pub fn combine_removals(
    l: &OreOperator,
    c1: &RemovalCertificate,
    c2: &RemovalCertificate,
) -> Result<RemovalCertificate> {
    if c2.is_trivial() {
        return Ok(c1.clone());
    }
    if c1.is_trivial() {
        return Ok(c2.clone());
    }
    let ring = l.ring();
    let n = c1.order.max(c2.order);
    let a = ring.sigma_pow_poly(&c1.block(), n as i64);
    let b = ring.sigma_pow_poly(&c2.block(), n as i64);
    let (g, s, t) = a.xgcd(&b);
    if !g.is_one() {
        return Err(Error::usage(
            "shifted blocks are not coprime; the removals cannot be combined",
        ));
    }
    // s·a + t·b = 1, so t/a + s/b = 1/(ab).
    let lift = |c: &RemovalCertificate, u: &Poly| -> Result<OreOperator> {
        let unit = normalizing_unit(c, ring)?;
        Ok(c.removing
            .d_pow_times(n - c.order)
            .scale_left(&RatFun::constant(unit))
            .scale_left_poly(u))
    };
    let raw = lift(c1, &t)?.add(&lift(c2, &s)?);
    let (removing, _) = raw.strip_polynomial_part();
    let removed = removing.op_mul(l)?;
    let cert = RemovalCertificate {
        factor: (&c1.block() * &c2.block()).monic(),
        power: 1,
        order: n,
        exponent: c1.exponent.max(c2.exponent),
        removing,
        removed,
    };
    cert.verify(l)?;
    Ok(cert)
}

/// The constant `u` with `u · lc(P) = 1/σ^n(block)`.
fn normalizing_unit(c: &RemovalCertificate, ring: OreRing) -> Result<Rational> {
    let target = RatFun::new(
        Poly::one(),
        ring.sigma_pow_poly(&c.block(), c.order as i64),
    )?;
    let ratio = &target / &c.removing.lc();
    if !ratio.is_constant() {
        return Err(Error::usage("certificate is not in normal form"));
    }
    Ok(ratio.num().lc())
}

/// Definition-level check: `P·L` is polynomial and
/// `σ^{-n}(lc(PL)) · p / lc(L)` has numerator coprime to `p`.
pub fn is_removing_operator(l: &OreOperator, p_op: &OreOperator, p: &Poly) -> Result<bool> {
    let lc = lc_poly(l)?;
    let Some(n) = p_op.order() else {
        return Ok(false);
    };
    if !p.divides(&lc) {
        return Err(Error::usage("factor does not divide lc(L)"));
    }
    let pl = p_op.op_mul(l)?;
    if !pl.is_polynomial() {
        return Ok(false);
    }
    let ring = l.ring();
    let rho = &(&ring.sigma_pow(&pl.lc(), -(n as i64)) * p) / &RatFun::from_poly(lc);
    Ok(rho.num().gcd(p).is_one())
}

/// The polynomial form of a removing operator: `(c, P̄)` with `P = P̄/c`.
pub fn polynomial_form(cert: &RemovalCertificate) -> (Poly, OreOperator) {
    cert.removing.clear_denominators()
}

/// Whether the polynomial operator `pbar` of order `n` satisfies
/// `P̄L ∈ σ^n(p) lc(P̄) K[x][∂]`.
pub fn polynomial_form_removes(l: &OreOperator, pbar: &OreOperator, p: &Poly) -> Result<bool> {
    let Some(n) = pbar.order() else {
        return Ok(false);
    };
    let lc = pbar
        .lc()
        .as_poly()
        .cloned()
        .ok_or_else(|| Error::usage("expected a polynomial operator"))?;
    let modulus = &l.ring().sigma_pow_poly(p, n as i64) * &lc;
    let prod = pbar.op_mul(l)?;
    Ok(prod.poly_coeffs()?.iter().all(|c| modulus.divides(c)))
}

/// The removing operator `P̄ / (σ^n(p) lc(P̄))` built from a polynomial form.
pub fn removing_from_polynomial_form(
    l: &OreOperator,
    pbar: &OreOperator,
    p: &Poly,
) -> Result<RemovalCertificate> {
    let n = pbar
        .order()
        .ok_or_else(|| Error::usage("zero operator"))?;
    let lc = pbar
        .lc()
        .as_poly()
        .cloned()
        .ok_or_else(|| Error::usage("expected a polynomial operator"))?;
    let ring = l.ring();
    let den = &ring.sigma_pow_poly(p, n as i64) * &lc;
    let removing = pbar.scale_left(&RatFun::new(Poly::one(), den)?);
    let removed = removing.op_mul(l)?;
    let cert = RemovalCertificate {
        factor: p.monic(),
        power: 1,
        order: n,
        exponent: 1,
        removing,
        removed,
    };
    cert.verify(l)?;
    Ok(cert)
}
