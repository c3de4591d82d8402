//! Proptest strategies and the planted-removability generator.

use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

use ore_desing::exactla::QMatrix;
use ore_desing::polyring::{int, rat};
use ore_desing::{OreOperator, OreRing, Poly, RatFun, Rational};

pub const CASES: u32 = 200;

pub fn config(seed: u64, cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        max_shrink_iters: 64,
        ..Config::default()
    }
}

/// Runs `f` on `cases` values of `s` with a fixed seed.
pub fn check_n<S>(
    seed: u64,
    cases: u32,
    s: S,
    f: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S: Strategy,
{
    TestRunner::new(config(seed, cases))
        .run(&s, f)
        .map_err(|e| e.to_string())
}

pub fn check<S: Strategy>(
    seed: u64,
    s: S,
    f: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    check_n(seed, CASES, s, f)
}

pub fn ring() -> impl Strategy<Value = OreRing> {
    prop_oneof![Just(OreRing::Shift), Just(OreRing::Differential)]
}

/// Integer coefficients in `-bound..=bound`, degree at most `max_deg`.
pub fn poly(max_deg: usize, bound: i64) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-bound..=bound, 0..=max_deg + 1).prop_map(|c| Poly::from_i64s(&c))
}

pub fn nonzero_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = Poly> {
    poly(max_deg, bound).prop_map(|p| if p.is_zero() { Poly::one() } else { p })
}

/// Polynomial with rational coefficients `a/b`.
pub fn rat_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 0..=max_deg + 1)
        .prop_map(|c| Poly::from_coeffs(c.into_iter().map(|(a, b)| rat(a, b)).collect()))
}

pub fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(2, 4), nonzero_poly(1, 3)).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

/// Operator with polynomial coefficients and order exactly in `0..=max_order`.
pub fn operator(
    ring: OreRing,
    max_order: usize,
    max_deg: usize,
) -> impl Strategy<Value = OreOperator> {
    prop::collection::vec(poly(max_deg, 4), 1..=max_order + 1).prop_map(move |mut c| {
        if c.last().unwrap().is_zero() {
            *c.last_mut().unwrap() = Poly::one();
        }
        OreOperator::from_polys(ring, c)
    })
}

/// Operator with rational-function coefficients.
pub fn rat_operator(ring: OreRing, max_order: usize) -> impl Strategy<Value = OreOperator> {
    prop::collection::vec(ratfun(), 1..=max_order + 1).prop_map(move |mut c| {
        if c.last().unwrap().is_zero() {
            *c.last_mut().unwrap() = RatFun::one();
        }
        OreOperator::new(ring, c)
    })
}

/// Operator `L` with linear factors `x - a_j` of `lc(L)` removable at order 1
/// by the known operators `(∂ + c_j)/σ(x - a_j)`.
#[derive(Clone, Debug)]
pub struct Planted {
    pub l: OreOperator,
    /// `(p_j, c_j)`
    pub factors: Vec<(Poly, Rational)>,
}

impl Planted {
    pub fn removing(&self, j: usize) -> OreOperator {
        let (p, c) = &self.factors[j];
        let ring = self.l.ring();
        let den = ring.sigma_pow_poly(p, 1);
        let inv = RatFun::new(Poly::one(), den).unwrap();
        OreOperator::new(ring, vec![RatFun::constant(c.clone()), RatFun::one()]).scale_left(&inv)
    }
}

fn linear(a: i64) -> Poly {
    Poly::from_i64s(&[-a, 1])
}

fn vanishing(points: &[i64], mult: u32) -> Poly {
    points
        .iter()
        .fold(Poly::one(), |acc, &a| &acc * &linear(a).pow(mult))
}

/// Polynomial of degree below `conds.len()` with prescribed values
/// (`deriv == false`) or first derivatives at the given points.
fn fit(conds: &[(i64, bool, Rational)]) -> Poly {
    let n = conds.len();
    let rows = conds
        .iter()
        .map(|(a, deriv, _)| {
            let a = int(*a);
            (0..n)
                .map(|k| {
                    if *deriv {
                        if k == 0 {
                            Rational::zero()
                        } else {
                            int(k as i64) * num_traits::pow(a.clone(), k - 1)
                        }
                    } else {
                        num_traits::pow(a.clone(), k)
                    }
                })
                .collect()
        })
        .collect();
    let m = QMatrix::from_rows_with_cols(n, rows);
    let rhs: Vec<Rational> = conds.iter().map(|c| c.2.clone()).collect();
    Poly::from_coeffs(m.solve_affine(&rhs).expect("interpolation conditions are independent"))
}

/// Builds the planted operator. `roots` must be distinct, and in the shift
/// ring `a - 1` must not collide with another root.
pub fn build_planted(
    ring: OreRing,
    roots: &[i64],
    cs: &[i64],
    w: &Poly,
    noise: &[Poly],
) -> Planted {
    let order = noise.len();
    let diff = ring == OreRing::Differential;
    let cs: Vec<Rational> = cs.iter().map(|&c| int(c)).collect();
    let w = if w.is_zero() { Poly::one() } else { w.clone() };
    let mut coeffs = vec![Poly::zero(); order + 1];
    coeffs[order] = &vanishing(roots, 1) * &w;
    for i in (1..=order).rev() {
        let hi = coeffs[i].clone();
        let mut conds = Vec::new();
        for (&a, c) in roots.iter().zip(&cs) {
            let v = if diff {
                -(hi.derivative().eval(&int(a)) + c * hi.eval(&int(a)))
            } else {
                -(c * hi.eval(&int(a - 1)))
            };
            conds.push((a, false, v));
        }
        let bottom = i == 1;
        if bottom {
            for (&a, c) in roots.iter().zip(&cs) {
                if diff {
                    let v = conds.iter().find(|t| t.0 == a && !t.1).unwrap().2.clone();
                    conds.push((a, true, -(c * &v)));
                } else {
                    conds.push((a - 1, false, Rational::zero()));
                }
            }
        }
        let base = fit(&conds);
        let van = if diff && bottom {
            vanishing(roots, 2)
        } else {
            let mut pts: Vec<i64> = conds.iter().map(|t| t.0).collect();
            pts.sort_unstable();
            pts.dedup();
            vanishing(&pts, 1)
        };
        coeffs[i - 1] = &base + &(&van * &noise[i - 1]);
    }
    let planted = Planted {
        l: OreOperator::from_polys(ring, coeffs),
        factors: roots.iter().zip(cs).map(|(&a, c)| (linear(a), c)).collect(),
    };
    for j in 0..planted.factors.len() {
        let pl = planted.removing(j).op_mul(&planted.l).unwrap();
        assert!(pl.is_polynomial(), "planted removal failed for {planted:?}");
    }
    planted
}

/// Planted operators of order 1..=2 with one or two removable linear factors.
pub fn planted(ring: OreRing) -> impl Strategy<Value = Planted> {
    let roots = prop_oneof![
        (-4i64..=4).prop_map(|a| vec![a]),
        (-4i64..=0, 3i64..=6).prop_map(|(a, b)| vec![a, b]),
    ];
    (
        roots,
        prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 2),
        nonzero_poly(1, 3),
        prop::collection::vec(poly(1, 3), 1..=2),
    )
        .prop_map(move |(roots, cs, w, noise)| {
            build_planted(ring, &roots, &cs[..roots.len()], &w, &noise)
        })
}

pub fn planted_any() -> impl Strategy<Value = Planted> {
    ring().prop_flat_map(planted)
}
