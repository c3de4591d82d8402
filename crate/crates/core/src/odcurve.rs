//! Order-degree curves.
//!
//! Given removable blocks `p_i` at orders `n_i`, left multiples of `L` of
//! order `r` exist with coefficient degree at most
//!
//! ```text
//! deg_x(L) - ceil( sum_i (1 - n_i/(r - ord L + 1))^+ deg p_i )
//! ```
//!
//! [`curve_bound`] evaluates that formula, [`construct_multiple`] builds a
//! witness from removal certificates, and [`region`] finds the true minimal
//! degrees by brute force through [`find_left_multiple`].

use num_traits::Zero;

use crate::desing::{analyze_factor_in, Caps, RemovabilityReport, RemovalCertificate};
use crate::error::{Error, Result};
use crate::exactla::QMatrix;
use crate::factorizer::{factor, FactorDecomp};
use crate::orealg::OreOperator;
use crate::par::{self, Execution};
use crate::polyring::{Poly, RatFun};

/// One removable block: `deg` is the degree of `p_i^{k_i}`, `order` is `n_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CurveBlock {
    pub deg: usize,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub deg_x: usize,
    pub order: usize,
    pub blocks: Vec<CurveBlock>,
}

impl CurveSpec {
    pub fn new(deg_x: usize, order: usize, blocks: Vec<CurveBlock>) -> Self {
        CurveSpec {
            deg_x,
            order,
            blocks,
        }
    }
}

/// The degree guaranteed at order `r`, clamped at zero.
pub fn curve_bound(spec: &CurveSpec, r: usize) -> Result<usize> {
    if r < spec.order {
        return Err(Error::usage(format!(
            "order {r} is below the operator order {}",
            spec.order
        )));
    }
    let s1 = r - spec.order + 1;
    let num: usize = spec
        .blocks
        .iter()
        .filter(|b| b.order < s1)
        .map(|b| (s1 - b.order) * b.deg)
        .sum();
    Ok(spec.deg_x.saturating_sub(num.div_ceil(s1)))
}

/// Result of analyzing every leading-coefficient factor of an operator.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub spec: CurveSpec,
    pub decomposition: FactorDecomp,
    pub reports: Vec<RemovabilityReport>,
    /// One per spec block, in the same order.
    pub certificates: Vec<RemovalCertificate>,
    /// Removable blocks left out because their shifts were not coprime to a
    /// larger kept block.
    pub dropped: Vec<RemovalCertificate>,
}

/// Factors `lc(l)` (with `hints`), finds the largest removable power of
/// every factor and assembles the curve specification.
pub fn analyze(l: &OreOperator, hints: &[Poly], caps: &Caps) -> Result<Analysis> {
    let lc = l
        .lc()
        .as_poly()
        .cloned()
        .filter(|p| !p.is_zero())
        .ok_or_else(|| Error::usage("operator must be nonzero with polynomial coefficients"))?;
    let deg_x = l.deg_x()?;
    let decomposition = factor(&lc, hints);
    let mut reports = Vec::new();
    let mut found = Vec::new();
    for f in &decomposition.factors {
        let report = analyze_factor_in(l, &f.base, f.mult, caps, &decomposition)?;
        if let Some(c) = report.certificates.last() {
            found.push(c.clone());
        }
        reports.push(report);
    }
    found.sort_by(|a, b| {
        let da = a.block().deg0();
        let db = b.block().deg0();
        db.cmp(&da).then(a.order.cmp(&b.order))
    });
    let ring = l.ring();
    let mut kept: Vec<RemovalCertificate> = Vec::new();
    let mut dropped = Vec::new();
    for c in found {
        let shifted = ring.sigma_pow_poly(&c.block(), c.order as i64);
        let clash = kept.iter().any(|k| {
            !ring
                .sigma_pow_poly(&k.block(), k.order as i64)
                .gcd(&shifted)
                .is_one()
        });
        if clash {
            dropped.push(c);
        } else {
            kept.push(c);
        }
    }
    let blocks = kept
        .iter()
        .map(|c| CurveBlock {
            deg: c.block().deg0(),
            order: c.order,
        })
        .collect();
    Ok(Analysis {
        spec: CurveSpec::new(deg_x, l.order0(), blocks),
        decomposition,
        reports,
        certificates: kept,
        dropped,
    })
}

/// Cached right remainders `R_i = rem(∂^i, L)`.
#[derive(Clone, Debug)]
pub struct RemainderTable {
    l: OreOperator,
    rems: Vec<OreOperator>,
}

impl RemainderTable {
    pub fn new(l: &OreOperator) -> Result<Self> {
        if l.is_zero() {
            return Err(Error::domain("remainders modulo the zero operator"));
        }
        let one = OreOperator::one(l.ring());
        let r0 = one.right_rem(l)?;
        Ok(RemainderTable {
            l: l.clone(),
            rems: vec![r0],
        })
    }

    pub fn operator(&self) -> &OreOperator {
        &self.l
    }

    /// Makes `R_0..=R_r` available.
    pub fn extend_to(&mut self, r: usize) -> Result<()> {
        while self.rems.len() <= r {
            let next = self.rems.last().unwrap().d_times().right_rem(&self.l)?;
            self.rems.push(next);
        }
        Ok(())
    }

    pub fn get(&self, i: usize) -> Option<&OreOperator> {
        self.rems.get(i)
    }

    pub fn len(&self) -> usize {
        self.rems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rems.is_empty()
    }
}

/// A nonzero polynomial left multiple of `l` with order at most `r` and
/// coefficient degree at most `d`, if one exists.
pub fn find_left_multiple(l: &OreOperator, r: usize, d: usize) -> Result<Option<OreOperator>> {
    let mut table = RemainderTable::new(l)?;
    if r < l.order0() {
        return Ok(None);
    }
    table.extend_to(r)?;
    find_with_table(&table, r, d)
}

/// [`find_left_multiple`] against a precomputed table covering `r`.
pub fn find_with_table(table: &RemainderTable, r: usize, d: usize) -> Result<Option<OreOperator>> {
    let l = table.operator();
    let ord = l.order0();
    if r < ord {
        return Ok(None);
    }
    if table.len() <= r {
        return Err(Error::usage("remainder table does not reach the requested order"));
    }
    // Σ m_ij x^j R_i = 0 after clearing the common denominator of R_0..R_r.
    let den = table.rems[..=r]
        .iter()
        .flat_map(|op| op.coeffs().iter().map(|c| c.den().clone()))
        .fold(Poly::one(), |acc, dn| lcm(&acc, &dn));
    let nums: Vec<Vec<Poly>> = table.rems[..=r]
        .iter()
        .map(|op| {
            (0..ord)
                .map(|c| {
                    let f = op.coeff(c);
                    f.num() * &den.exact_div(f.den()).expect("lcm is a multiple")
                })
                .collect()
        })
        .collect();
    let maxdeg = nums
        .iter()
        .flatten()
        .map(|p| p.deg0())
        .max()
        .unwrap_or(0);
    let height = maxdeg + d + 1;
    let ncols = (r + 1) * (d + 1);
    let mut m = QMatrix::zeros(ord * height, ncols);
    for (i, row) in nums.iter().enumerate() {
        for (c, p) in row.iter().enumerate() {
            for (t, v) in p.coeffs().iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                for j in 0..=d {
                    m.set(c * height + t + j, i * (d + 1) + j, v.clone());
                }
            }
        }
    }
    let Some(v) = m.nullspace().into_iter().next() else {
        return Ok(None);
    };
    let coeffs = (0..=r)
        .map(|i| Poly::from_coeffs(v[i * (d + 1)..(i + 1) * (d + 1)].to_vec()))
        .collect();
    Ok(Some(OreOperator::from_polys(l.ring(), coeffs)))
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    if b.is_one() {
        return a.clone();
    }
    let g = a.gcd(b);
    (a * &b.exact_div(&g).expect("gcd divides")).monic()
}

/// Minimal feasible degree per order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionStaircase {
    pub r_min: usize,
    pub d_max: usize,
    /// `(r, d_min)`, `None` when nothing up to `d_max` exists.
    pub entries: Vec<(usize, Option<usize>)>,
}

impl RegionStaircase {
    pub fn d_min(&self, r: usize) -> Option<usize> {
        self.entries
            .iter()
            .find(|(rr, _)| *rr == r)
            .and_then(|(_, d)| *d)
    }
}

/// Brute-force staircase for `r` in `ord(l)..=r_max`, degrees up to `d_max`.
pub fn region(l: &OreOperator, r_max: usize, d_max: usize) -> Result<RegionStaircase> {
    region_with(l, r_max, d_max, Execution::default())
}

pub fn region_with(
    l: &OreOperator,
    r_max: usize,
    d_max: usize,
    exec: Execution,
) -> Result<RegionStaircase> {
    let r_min = l.order0();
    if r_max < r_min {
        return Err(Error::usage(format!(
            "r_max {r_max} is below the operator order {r_min}"
        )));
    }
    let mut table = RemainderTable::new(l)?;
    table.extend_to(r_max)?;
    let table = &table;
    let orders: Vec<usize> = (r_min..=r_max).collect();
    let results = par::map(exec, orders, |r| -> Result<(usize, Option<usize>)> {
        Ok((r, min_degree(table, r, d_max)?))
    });
    let entries = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(RegionStaircase {
        r_min,
        d_max,
        entries,
    })
}

fn min_degree(table: &RemainderTable, r: usize, d_max: usize) -> Result<Option<usize>> {
    let feasible = |d: usize| -> Result<bool> { Ok(find_with_table(table, r, d)?.is_some()) };
    if !feasible(d_max)? {
        return Ok(None);
    }
    let (mut lo, mut hi) = (0, d_max);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(Some(lo))
}

/// Builds a primitive polynomial left multiple of order at most `r` whose
/// degree meets [`curve_bound`] for the blocks of `certs`.
///
/// The certificates must remove pairwise coprime shifted blocks.
pub fn construct_multiple(
    l: &OreOperator,
    certs: &[RemovalCertificate],
    r: usize,
) -> Result<OreOperator> {
    let ord = l
        .order()
        .ok_or_else(|| Error::usage("operator must be nonzero"))?;
    if !l.is_polynomial() {
        return Err(Error::usage("operator must have polynomial coefficients"));
    }
    if r < ord {
        return Err(Error::usage(format!("order {r} is below the operator order {ord}")));
    }
    let ring = l.ring();
    let s = r - ord;
    let active: Vec<&RemovalCertificate> = certs
        .iter()
        .filter(|c| !c.is_trivial() && c.order <= s)
        .collect();
    if active.is_empty() {
        return Ok(l.d_pow_times(s));
    }

    struct Block<'a> {
        cert: &'a RemovalCertificate,
        p: Poly,
        lc_bar: Poly,
    }
    let blocks: Vec<Block> = active
        .iter()
        .map(|c| {
            let (_, pbar) = c.removing.clear_denominators();
            let lc_bar = pbar.lc().num().clone();
            Block {
                cert: c,
                p: c.block(),
                lc_bar,
            }
        })
        .collect();

    // q = Π_i Π_{j=0}^{s-n_i} σ^{j+n_i}(p_i) σ^j(l_i)
    let mut q = Poly::one();
    for b in &blocks {
        for j in 0..=(s - b.cert.order) {
            let j = j as i64;
            q = &q * &ring.sigma_pow_poly(&b.p, j + b.cert.order as i64);
            q = &q * &ring.sigma_pow_poly(&b.lc_bar, j);
        }
    }
    let deg_q = q.deg0();
    let sum_np: usize = blocks.iter().map(|b| b.cert.order * b.p.deg0()).sum();
    let threshold: usize = blocks
        .iter()
        .map(|b| (s - b.cert.order) * (b.p.deg0() + b.lc_bar.deg0()) + b.lc_bar.deg0())
        .sum::<usize>()
        + sum_np / (s + 1);

    // Columns: x^t · q · ∂^j · P_i, coefficients reduced mod q.
    let x = Poly::x();
    let q_rat = RatFun::from_poly(q.clone());
    let mut columns: Vec<Vec<Poly>> = Vec::new();
    for b in &blocks {
        for j in 0..=(s - b.cert.order) {
            let term = b.cert.removing.d_pow_times(j).scale_left(&q_rat);
            let polys = term
                .poly_coeffs()
                .map_err(|_| Error::internal("ansatz term is not polynomial"))?;
            let mut reduced: Vec<Poly> = polys
                .iter()
                .map(|c| c.rem(&q))
                .collect::<Result<_>>()?;
            for _ in 0..b.p.deg0() {
                columns.push(reduced.clone());
                reduced = reduced
                    .iter()
                    .map(|c| (&x * c).rem(&q))
                    .collect::<Result<_>>()?;
            }
        }
    }

    let high: Vec<usize> = ((threshold + 1)..deg_q).collect();
    let mut m = QMatrix::zeros((s + 1) * high.len(), columns.len());
    for (col, coeffs) in columns.iter().enumerate() {
        for (c, poly) in coeffs.iter().enumerate() {
            for (h, &t) in high.iter().enumerate() {
                let v = poly.coeff(t);
                if !v.is_zero() {
                    m.set(c * high.len() + h, col, v);
                }
            }
        }
    }
    for v in m.nullspace() {
        let mut q2 = vec![Poly::zero(); s + 1];
        for (coef, column) in v.iter().zip(&columns) {
            if coef.is_zero() {
                continue;
            }
            for (c, poly) in column.iter().enumerate() {
                q2[c] = &q2[c] + &poly.scale(coef);
            }
        }
        let q2 = OreOperator::from_polys(ring, q2);
        if q2.is_zero() {
            continue;
        }
        let prod = q2.op_mul(l)?;
        let coeffs = prod
            .poly_coeffs()?
            .iter()
            .map(|c| {
                c.exact_div(&q)
                    .map_err(|_| Error::internal("constructed multiple is not divisible by q"))
            })
            .collect::<Result<Vec<_>>>()?;
        let (_, primitive) = OreOperator::from_polys(ring, coeffs).clear_denominators();
        return Ok(primitive);
    }
    Err(Error::internal(
        "the degree-lowering system has no nonzero solution",
    ))
}
