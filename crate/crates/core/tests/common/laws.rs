//! Algebraic laws checked over seeded random inputs.
//!
//! Each law runs its own fixed-seed runner and returns the failure message,
//! so property test files and the acceptance target share them.

use num_traits::Zero;
use proptest::prelude::*;

use ore_desing::desing::{
    is_removing_operator, polynomial_form, polynomial_form_removes, removing_from_polynomial_form,
};
use ore_desing::exactla::QMatrix;
use ore_desing::odcurve::{find_with_table, region, RemainderTable};
use ore_desing::polyring::{rat, resultant, shift_equivalent};
use ore_desing::text::{format_operator, parse_operator};
use ore_desing::{
    factor, squarefree_decomp, try_remove_at, OreOperator, OreRing, Poly, RatFun, Rational,
};

use super::gen::*;

pub type Law = (&'static str, fn() -> Result<(), String>);

fn ratfun_of(p: &Poly) -> RatFun {
    RatFun::from_poly(p.clone())
}

// polynomials

pub fn poly_divrem() -> Result<(), String> {
    check(101, (rat_poly(5), rat_poly(3)), |(a, b)| {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.deg0() < b.deg0());
        Ok(())
    })
}

pub fn poly_xgcd() -> Result<(), String> {
    check(102, (poly(4, 5), poly(4, 5)), |(a, b)| {
        let (g, s, t) = a.xgcd(&b);
        prop_assert_eq!(&(&s * &a) + &(&t * &b), g.clone());
        if !g.is_zero() {
            prop_assert!(g.divides(&a) && g.divides(&b));
            prop_assert!(g.is_monic());
        }
        Ok(())
    })
}

pub fn shift_automorphism() -> Result<(), String> {
    check(103, (rat_poly(4), rat_poly(3), -5i64..=5, -5i64..=5), |(f, g, m, n)| {
        prop_assert_eq!((&f * &g).shift(n), &f.shift(n) * &g.shift(n));
        prop_assert_eq!((&f + &g).shift(n), &f.shift(n) + &g.shift(n));
        prop_assert_eq!(f.shift(m).shift(n), f.shift(m + n));
        prop_assert_eq!(f.shift(n).shift(-n), f.clone());
        for ring in [OreRing::Shift, OreRing::Differential] {
            let rf = ratfun_of(&f);
            let rg = ratfun_of(&g);
            prop_assert_eq!(
                ring.sigma_pow(&(&rf * &rg), n),
                &ring.sigma_pow(&rf, n) * &ring.sigma_pow(&rg, n)
            );
            // δ is a σ-derivation
            prop_assert_eq!(
                ring.delta(&(&rf * &rg)),
                &(&ring.delta(&rf) * &rg) + &(&ring.sigma_pow(&rf, 1) * &ring.delta(&rg))
            );
        }
        Ok(())
    })
}

pub fn shift_equivalence_transitive() -> Result<(), String> {
    check(104, (nonzero_poly(3, 5), -6i64..=6, -6i64..=6), |(p, m, n)| {
        prop_assume!(!p.is_constant());
        let q = p.shift(m).scale(&rat(3, 2));
        let r = q.shift(n).scale(&rat(-1, 5));
        prop_assert_eq!(shift_equivalent(&p, &q), Some(m));
        prop_assert_eq!(shift_equivalent(&q, &r), Some(n));
        prop_assert_eq!(shift_equivalent(&p, &r), Some(m + n));
        prop_assert_eq!(shift_equivalent(&r, &p), Some(-m - n));
        Ok(())
    })
}

pub fn resultant_vanishing() -> Result<(), String> {
    check(105, (nonzero_poly(3, 4), nonzero_poly(3, 4)), |(a, b)| {
        prop_assume!(!a.is_constant() && !b.is_constant());
        let common = !a.gcd(&b).is_constant();
        prop_assert_eq!(resultant(&a, &b).is_zero(), common);
        let g = Poly::from_i64s(&[2, 1]);
        prop_assert!(resultant(&(&a * &g), &(&b * &g)).is_zero());
        Ok(())
    })
}

pub fn factor_reproduces() -> Result<(), String> {
    let factors = prop::collection::vec(nonzero_poly(2, 4), 1..=4);
    check(106, factors, |fs| {
        let p = fs.iter().fold(Poly::one(), |acc, f| &acc * f);
        let d = factor(&p, &[]);
        prop_assert_eq!(d.product(), p.clone());
        prop_assert!(d.is_complete());
        for f in &d.factors {
            prop_assert!(f.base.is_monic() && !f.base.is_constant());
        }
        Ok(())
    })
}

pub fn squarefree_parts() -> Result<(), String> {
    let factors = prop::collection::vec((nonzero_poly(2, 3), 1u32..=3), 1..=3);
    check(107, factors, |fs| {
        let p = fs.iter().fold(Poly::one(), |acc, (f, e)| &acc * &f.pow(*e));
        let parts = squarefree_decomp(&p);
        let rebuilt = parts
            .iter()
            .fold(Poly::constant(p.lc()), |acc, (f, e)| &acc * &f.pow(*e));
        prop_assert_eq!(rebuilt, p.clone());
        for (i, (a, ea)) in parts.iter().enumerate() {
            prop_assert!(a.gcd(&a.derivative()).is_one());
            for (b, eb) in &parts[i + 1..] {
                prop_assert!(ea < eb);
                prop_assert!(a.gcd(b).is_one());
            }
        }
        Ok(())
    })
}

// operators

fn op_triple() -> impl Strategy<Value = (OreOperator, OreOperator, OreOperator)> {
    ring().prop_flat_map(|r| (rat_operator(r, 2), rat_operator(r, 2), rat_operator(r, 2)))
}

pub fn operator_associativity() -> Result<(), String> {
    check(201, op_triple(), |(a, b, c)| {
        let left = a.op_mul(&b).unwrap().op_mul(&c).unwrap();
        let right = a.op_mul(&b.op_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        Ok(())
    })
}

pub fn operator_distributivity() -> Result<(), String> {
    check(202, op_triple(), |(a, b, c)| {
        prop_assert_eq!(
            a.op_mul(&b.add(&c)).unwrap(),
            a.op_mul(&b).unwrap().add(&a.op_mul(&c).unwrap())
        );
        prop_assert_eq!(
            a.add(&b).op_mul(&c).unwrap(),
            a.op_mul(&c).unwrap().add(&b.op_mul(&c).unwrap())
        );
        Ok(())
    })
}

pub fn commutation_rule() -> Result<(), String> {
    check(203, (ring(), ratfun()), |(r, f)| {
        let d = OreOperator::d(r);
        let lhs = d.op_mul(&OreOperator::constant(r, f.clone())).unwrap();
        let rhs = OreOperator::new(r, vec![r.delta(&f), r.sigma_pow(&f, 1)]);
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

pub fn lc_and_order_laws() -> Result<(), String> {
    let s = ring().prop_flat_map(|r| (operator(r, 3, 3), operator(r, 3, 3)));
    check(204, s, |(a, b)| {
        let ab = a.op_mul(&b).unwrap();
        let (oa, ob) = (a.order().unwrap(), b.order().unwrap());
        prop_assert_eq!(ab.order(), Some(oa + ob));
        let ring = a.ring();
        prop_assert_eq!(ab.lc(), &a.lc() * &ring.sigma_pow(&b.lc(), oa as i64));
        prop_assert!(ab.deg_x().unwrap() <= a.deg_x().unwrap() + b.deg_x().unwrap());
        Ok(())
    })
}

pub fn division_reconstruction() -> Result<(), String> {
    let s = ring().prop_flat_map(|r| (rat_operator(r, 4), rat_operator(r, 2)));
    check(205, s, |(a, b)| {
        let (q, r) = a.right_divrem(&b).unwrap();
        prop_assert_eq!(q.op_mul(&b).unwrap().add(&r), a);
        prop_assert!(r.order().is_none_or(|o| o < b.order0()));
        Ok(())
    })
}

pub fn remainder_linearity() -> Result<(), String> {
    let s = ring().prop_flat_map(|r| {
        (rat_operator(r, 4), rat_operator(r, 4), rat_operator(r, 2), ratfun())
    });
    check(206, s, |(a1, a2, b, f)| {
        let r1 = a1.right_rem(&b).unwrap();
        let r2 = a2.right_rem(&b).unwrap();
        prop_assert_eq!(a1.add(&a2).right_rem(&b).unwrap(), r1.add(&r2));
        prop_assert_eq!(a1.scale_left(&f).right_rem(&b).unwrap(), r1.scale_left(&f));
        prop_assert!(a1.op_mul(&b).unwrap().is_left_multiple(&b).unwrap());
        Ok(())
    })
}

pub fn parse_print_round_trip() -> Result<(), String> {
    let s = ring().prop_flat_map(|r| rat_operator(r, 3));
    check(207, s, |op| {
        let text = format_operator(&op);
        let back = parse_operator(&text, op.ring()).unwrap();
        prop_assert_eq!(&back, &op);
        prop_assert_eq!(format_operator(&back), text);
        Ok(())
    })
}

// linear algebra

fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => Just(Rational::zero()),
        7 => (-9i64..=9, 1i64..=5).prop_map(|(a, b)| rat(a, b)),
    ]
}

fn matrix() -> impl Strategy<Value = QMatrix> {
    (0usize..=5, 1usize..=6).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop::collection::vec(rational(), n), m)
            .prop_map(move |rows| QMatrix::from_rows_with_cols(n, rows))
    })
}

pub fn nullspace_exact() -> Result<(), String> {
    check(301, matrix(), |m| {
        let kernel = m.nullspace();
        prop_assert_eq!(kernel.len() + m.rank(), m.cols());
        for v in &kernel {
            prop_assert!(v.iter().any(|c| !c.is_zero()));
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
        if !kernel.is_empty() {
            let basis = QMatrix::from_rows_with_cols(m.cols(), kernel.clone());
            prop_assert_eq!(basis.rank(), kernel.len());
        }
        Ok(())
    })
}

pub fn solve_affine_correct() -> Result<(), String> {
    let s = matrix().prop_flat_map(|m| {
        let cols = m.cols();
        (Just(m), prop::collection::vec(rational(), cols), any::<bool>())
    });
    check(302, s, |(m, x0, consistent)| {
        let rhs = if consistent || m.rows() == 0 {
            m.mul_vec(&x0)
        } else {
            let mut b = m.mul_vec(&x0);
            b[0] += Rational::from_integer(1.into());
            b
        };
        match m.solve_affine(&rhs) {
            Some(x) => prop_assert_eq!(m.mul_vec(&x), rhs),
            None => {
                prop_assert!(!consistent);
                let aug_rows = (0..m.rows())
                    .map(|i| {
                        let mut r = m.row(i).to_vec();
                        r.push(rhs[i].clone());
                        r
                    })
                    .collect();
                let aug = QMatrix::from_rows_with_cols(m.cols() + 1, aug_rows);
                prop_assert!(aug.rank() > m.rank());
            }
        }
        Ok(())
    })
}

/// Pairwise coprime `u_i` make `(v_i) -> Σ v_i u/u_i` injective on
/// `deg v_i < deg u_i`.
pub fn bezout_trivial_kernel() -> Result<(), String> {
    let us = prop::collection::vec(nonzero_poly(3, 5), 2..=4);
    check(303, us, |us| {
        prop_assume!(us.iter().all(|u| !u.is_constant()));
        for i in 0..us.len() {
            for j in i + 1..us.len() {
                prop_assume!(us[i].gcd(&us[j]).is_one());
            }
        }
        let u = us.iter().fold(Poly::one(), |acc, p| &acc * p);
        let n = u.deg0();
        let mut columns = Vec::new();
        for ui in &us {
            let cof = u.exact_div(ui).unwrap();
            for t in 0..ui.deg0() {
                columns.push(cof.shl(t));
            }
        }
        prop_assert_eq!(columns.len(), n);
        let rows = (0..n)
            .map(|k| columns.iter().map(|c| c.coeff(k)).collect())
            .collect();
        let m = QMatrix::from_rows_with_cols(n, rows);
        prop_assert!(m.nullspace().is_empty());
        Ok(())
    })
}

// removability

/// Left-multiplying a removing operator by `U` with `lc(U)` coprime to
/// `σ^{n+ord U}(p)` keeps it removing.
pub fn left_multiple_closure() -> Result<(), String> {
    let s = planted_any().prop_flat_map(|pl| {
        let r = pl.l.ring();
        (Just(pl), operator(r, 2, 2))
    });
    check(401, s, |(pl, u)| {
        let ring = pl.l.ring();
        for (j, (p, _)) in pl.factors.iter().enumerate() {
            let shifted = ring.sigma_pow_poly(p, 1 + u.order0() as i64);
            prop_assume!(u.lc().num().gcd(&shifted).is_one());
            let up = u.op_mul(&pl.removing(j)).unwrap();
            prop_assert!(is_removing_operator(&pl.l, &pl.removing(j), p).unwrap());
            prop_assert!(is_removing_operator(&pl.l, &up, p).unwrap());
        }
        Ok(())
    })
}

/// Dropping a polynomial part that keeps the order keeps it removing.
pub fn polynomial_part_closure() -> Result<(), String> {
    let s = planted_any().prop_flat_map(|pl| {
        let r = pl.l.ring();
        (Just(pl), operator(r, 1, 3))
    });
    check(402, s, |(pl, p2)| {
        for (j, (p, _)) in pl.factors.iter().enumerate() {
            let p1 = pl.removing(j).sub(&p2);
            prop_assert_eq!(p1.order(), Some(1));
            prop_assert!(is_removing_operator(&pl.l, &p1, p).unwrap());
            let (proper, poly_part) = pl.removing(j).add(&p2).strip_polynomial_part();
            prop_assert!(poly_part.is_polynomial());
            prop_assert!(is_removing_operator(&pl.l, &proper, p).unwrap());
        }
        Ok(())
    })
}

/// A polynomial `P̄` satisfies `P̄L ∈ σ^n(p) lc(P̄) K[x][∂]` exactly when
/// `P̄ / (σ^n(p) lc(P̄))` is removing; certificates found by search have such
/// a form.
pub fn polynomial_form_equivalence() -> Result<(), String> {
    let s = planted_any().prop_flat_map(|pl| {
        let r = pl.l.ring();
        (Just(pl), operator(r, 1, 2), any::<bool>())
    });
    check(403, s, |(pl, noise, perturb)| {
        let ring = pl.l.ring();
        for (j, (p, _)) in pl.factors.iter().enumerate() {
            let (_, pbar) = pl.removing(j).clear_denominators();
            let candidate = if perturb { pbar.add(&noise) } else { pbar };
            prop_assume!(candidate.order() == Some(1));
            let lc = candidate.lc().num().clone();
            let den = &ring.sigma_pow_poly(p, 1) * &lc;
            let p0 = candidate.scale_left(&RatFun::new(Poly::one(), den).unwrap());
            let direct = is_removing_operator(&pl.l, &p0, p).unwrap();
            prop_assert_eq!(polynomial_form_removes(&pl.l, &candidate, p).unwrap(), direct);
            if direct {
                prop_assert!(removing_from_polynomial_form(&pl.l, &candidate, p).is_ok());
            }
            if !perturb {
                prop_assert!(direct);
            }

            let found = try_remove_at(&pl.l, p, 1, 1, 1).unwrap();
            let cert = found.expect("planted factor is removable at order 1");
            cert.verify(&pl.l).unwrap();
            let (_, form) = polynomial_form(&cert);
            prop_assert!(polynomial_form_removes(&pl.l, &form, &cert.block()).unwrap());
        }
        Ok(())
    })
}

// region

pub fn remainder_recurrence() -> Result<(), String> {
    let s = ring().prop_flat_map(|r| operator(r, 3, 2));
    check(501, s, |l| {
        prop_assume!(l.order0() > 0);
        let mut table = RemainderTable::new(&l).unwrap();
        table.extend_to(10).unwrap();
        let ring = l.ring();
        for i in 0..=10 {
            let direct = OreOperator::monomial(ring, RatFun::one(), i).right_rem(&l).unwrap();
            prop_assert_eq!(table.get(i).unwrap(), &direct);
        }
        Ok(())
    })
}

pub fn region_monotone() -> Result<(), String> {
    let s = ring().prop_flat_map(|r| (operator(r, 2, 2), 0usize..=4));
    check(502, s, |(l, probe)| {
        prop_assume!(l.order0() > 0);
        let ord = l.order0();
        let r_max = ord + 3;
        let d_max = 4;
        let st = region(&l, r_max, d_max).unwrap();
        let inf = usize::MAX;
        for r in ord..r_max {
            let a = st.d_min(r).unwrap_or(inf);
            let b = st.d_min(r + 1).unwrap_or(inf);
            prop_assert!(b <= a, "d_min({}) = {:?} > d_min({}) = {:?}", r + 1, b, r, a);
        }
        let mut table = RemainderTable::new(&l).unwrap();
        table.extend_to(r_max).unwrap();
        for r in ord..=r_max {
            let feasible = find_with_table(&table, r, probe).unwrap();
            let expected = st.d_min(r).is_some_and(|d| d <= probe);
            prop_assert_eq!(feasible.is_some(), expected);
            if let Some(m) = feasible {
                prop_assert!(m.is_left_multiple(&l).unwrap());
                prop_assert!(m.order0() <= r && m.deg_x().unwrap() <= probe);
            }
        }
        Ok(())
    })
}

pub const POLYRING: &[Law] = &[
    ("poly divrem identity", poly_divrem),
    ("poly xgcd identity", poly_xgcd),
    ("shift automorphism", shift_automorphism),
    ("shift equivalence transitivity", shift_equivalence_transitive),
    ("resultant vanishing", resultant_vanishing),
    ("factor product", factor_reproduces),
    ("squarefree coprimality", squarefree_parts),
];

pub const OREALG: &[Law] = &[
    ("operator associativity", operator_associativity),
    ("operator distributivity", operator_distributivity),
    ("commutation rule", commutation_rule),
    ("lc and order laws", lc_and_order_laws),
    ("division reconstruction", division_reconstruction),
    ("remainder linearity", remainder_linearity),
    ("parse/print round trip", parse_print_round_trip),
];

pub const EXACTLA: &[Law] = &[
    ("nullspace exactness", nullspace_exact),
    ("affine solve", solve_affine_correct),
    ("bezout trivial kernel", bezout_trivial_kernel),
];

pub const DESING: &[Law] = &[
    ("left multiple closure", left_multiple_closure),
    ("polynomial part closure", polynomial_part_closure),
    ("polynomial form equivalence", polynomial_form_equivalence),
];

pub const ODCURVE: &[Law] = &[
    ("remainder recurrence", remainder_recurrence),
    ("region monotonicity", region_monotone),
];
