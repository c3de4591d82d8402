//! Factorization over `Z` by modular factorization, Hensel lifting and
//! subset recombination (Zassenhaus).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polyring::modp::{primes_from, FpPoly};
use crate::polyring::zpoly::{self, ZPoly};
use crate::polyring::Poly;

pub const MAX_DEGREE: usize = 24;
const MAX_HEIGHT_BITS: u64 = 256;
const MAX_SUBSETS: usize = 200_000;
const PRIME_TRIALS: usize = 3;

/// Irreducible monic factors of a monic squarefree `f`, or `None` when the
/// input is outside the supported range or recombination exceeds its budget.
pub fn factor_squarefree(f: &Poly) -> Option<Vec<Poly>> {
    let n = f.degree()?;
    if n <= 1 {
        return Some(vec![f.monic()]);
    }
    if n > MAX_DEGREE {
        return None;
    }
    let z = f.to_primitive_ints();
    if zpoly::height(&z).bits() > MAX_HEIGHT_BITS {
        return None;
    }
    let lc = z[n].clone();

    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    for p in primes_from(3)
        .filter(|&p| !(&lc % BigInt::from(p)).is_zero())
        .filter(|&p| FpPoly::from_ints(p, &z).is_squarefree())
        .take(PRIME_TRIALS)
    {
        let fp = FpPoly::from_ints(p, &z).monic();
        let facs = factor_mod_p(&fp);
        if facs.len() == 1 {
            return Some(vec![f.monic()]);
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
    }
    let (p, modular) = best?;

    // Coefficients of lc * g for any factor g of f stay below lc * 2^n * ||f||.
    let bound: BigInt = zpoly::height(&z) * BigInt::from(n + 1) * (BigInt::one() << n) * lc.abs();
    let target = bound * 2u32 + 1u32;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= target {
        modulus *= &pb;
    }

    let lc_inv = crate::polyring::mod_inverse(&lc, &modulus)?;
    let f_monic: ZPoly = z.iter().map(|c| (c * &lc_inv).mod_floor(&modulus)).collect();
    let lifted = multifactor_lift(&f_monic, &modular, &pb, &modulus);

    let factors = recombine(z, lifted, &modulus)?;
    Some(
        factors
            .into_iter()
            .map(|g| Poly::from_bigints(&g).monic())
            .collect(),
    )
}

/// Distinct-degree then equal-degree factorization of a monic squarefree
/// polynomial over `F_p` (odd `p`).
pub fn factor_mod_p(f: &FpPoly) -> Vec<FpPoly> {
    let p = f.p;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f) {
        equal_degree(&g, d, &mut rng, &mut out);
    }
    out
}

fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p;
    let pe = BigUint::from(p);
    let x = FpPoly::x(p);
    let mut res = Vec::new();
    let mut f = f.clone();
    let mut h = x.clone();
    let mut i = 0;
    while f.deg0() >= 2 * (i + 1) {
        i += 1;
        h = h.pow_mod(&pe, &f);
        let g = h.sub(&x).gcd(&f);
        if g.deg0() > 0 {
            f = f.divrem(&g).0;
            h = h.rem(&f);
            res.push((g, i));
        }
    }
    if f.deg0() > 0 {
        let d = f.deg0();
        res.push((f, d));
    }
    res
}

fn equal_degree(g: &FpPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = g.deg0();
    if n == d {
        out.push(g.monic());
        return;
    }
    let p = g.p;
    let e: BigUint = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.deg0() == 0 {
            continue;
        }
        let mut h = a.gcd(g);
        if h.deg0() == 0 {
            let b = a.pow_mod(&e, g).sub(&FpPoly::one(p));
            h = b.gcd(g);
        }
        if h.deg0() > 0 && h.deg0() < n {
            let q = g.divrem(&h).0;
            equal_degree(&h, d, rng, out);
            equal_degree(&q, d, rng, out);
            return;
        }
    }
}

fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut r: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    zpoly::trim(&mut r);
    r
}

fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    reduce(&v, m)
}

fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect();
    reduce(&v, m)
}

fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    reduce(&zpoly::mul(a, b), m)
}

/// Division by a monic `b` modulo `m`.
fn divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut r = reduce(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] = (&r[i + j] - &c * bj).mod_floor(m);
        }
        q[i] = c;
    }
    r.truncate(db);
    zpoly::trim(&mut r);
    zpoly::trim(&mut q);
    (q, r)
}

/// Lift the monic factorization `f = g h (mod p)` with `s g + t h = 1` to
/// modulus `target` by quadratic Hensel steps.
fn lift_pair(
    f: &[BigInt],
    g: FpPoly,
    h: FpPoly,
    p: &BigInt,
    target: &BigInt,
) -> (ZPoly, ZPoly) {
    let (one, s, t) = g.xgcd(&h);
    debug_assert_eq!(one.deg0(), 0);
    let mut g = g.to_bigints();
    let mut h = h.to_bigints();
    let mut s = s.to_bigints();
    let mut t = t.to_bigints();
    let mut m = p.clone();
    while &m < target {
        let m2 = &m * &m;
        let e = sub(f, &mul(&g, &h, &m2), &m2);
        let (q, r) = divrem_monic(&mul(&s, &e, &m2), &h, &m2);
        let g_new = add(&add(&g, &mul(&t, &e, &m2), &m2), &mul(&q, &g, &m2), &m2);
        let h_new = add(&h, &r, &m2);
        let b = sub(
            &add(&mul(&s, &g_new, &m2), &mul(&t, &h_new, &m2), &m2),
            &[BigInt::one()],
            &m2,
        );
        let (c, d) = divrem_monic(&mul(&s, &b, &m2), &h_new, &m2);
        s = sub(&s, &d, &m2);
        t = sub(&sub(&t, &mul(&t, &b, &m2), &m2), &mul(&c, &g_new, &m2), &m2);
        g = g_new;
        h = h_new;
        m = m2;
    }
    (reduce(&g, target), reduce(&h, target))
}

fn multifactor_lift(f: &[BigInt], factors: &[FpPoly], p: &BigInt, target: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        return vec![reduce(f, target)];
    }
    let pu = p.to_u64().unwrap();
    let mid = factors.len() / 2;
    let prod = |fs: &[FpPoly]| fs.iter().fold(FpPoly::one(pu), |acc, x| acc.mul(x));
    let g0 = prod(&factors[..mid]);
    let h0 = prod(&factors[mid..]);
    let (g, h) = lift_pair(f, g0, h0, p, target);
    let mut out = multifactor_lift(&g, &factors[..mid], p, target);
    out.extend(multifactor_lift(&h, &factors[mid..], p, target));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2u32;
    a.iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect()
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, m: &BigInt) -> Option<Vec<ZPoly>> {
    let mut result = Vec::new();
    let mut size = 1;
    let mut tried = 0usize;
    'outer: while 2 * size <= lifted.len() {
        let n = lifted.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            tried += 1;
            if tried > MAX_SUBSETS {
                return None;
            }
            let lc = f.last().unwrap().clone();
            let mut g = vec![lc];
            for &i in &idx {
                g = mul(&g, &lifted[i], m);
            }
            let g = zpoly::primitive(&symmetric(&g, m));
            if let Some(q) = zpoly::div_exact(&f, &g) {
                result.push(g);
                f = q;
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
            // next combination in lexicographic order
            let mut i = size;
            loop {
                if i == 0 {
                    size += 1;
                    continue 'outer;
                }
                i -= 1;
                if idx[i] < n - size + i {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    result.push(zpoly::primitive(&f));
    Some(result)
}
