//! Exact linear algebra over the rationals.
//!
//! Rows are scaled to integers and reduced by fraction-free Gauss–Jordan
//! elimination: every update `a_ij <- (p a_ij - a_ic a_kj) / p_prev` divides
//! exactly, so entries stay bounded by minors of the input. After elimination
//! all pivots equal the same integer `D`, which makes the kernel basis and
//! particular solutions read off directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::Rational;

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        Self::from_rows_with_cols(rows.first().map_or(0, Vec::len), rows)
    }

    /// Like [`QMatrix::from_rows`] but fixes the column count, which also
    /// covers the zero-row case.
    pub fn from_rows_with_cols(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            entries.extend(r);
        }
        QMatrix {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&a| Rational::from_integer(a.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        Echelon::reduce(self.integer_rows(None)).pivots.len()
    }

    /// Basis of the right kernel, each vector primitive over the integers.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let ech = Echelon::reduce(self.integer_rows(None));
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![BigInt::zero(); self.cols];
            v[f] = ech.d.clone();
            for &(row, col) in &ech.pivots {
                v[col] = -&ech.a[row][f];
            }
            basis.push(primitive(v, f));
        }
        basis
    }

    /// One solution of `self * x = rhs`, or `None` when inconsistent.
    pub fn solve_affine(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length");
        let ech = Echelon::reduce(self.integer_rows(Some(rhs)));
        let rhs_col = self.cols;
        if ech.pivots.iter().any(|&(_, c)| c == rhs_col) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for &(row, col) in &ech.pivots {
            x[col] = Rational::new(ech.a[row][rhs_col].clone(), ech.d.clone());
        }
        Some(x)
    }

    /// Integer rows (optionally augmented), each scaled by the lcm of its
    /// denominators and made primitive. All-zero rows are dropped.
    fn integer_rows(&self, rhs: Option<&[Rational]>) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .filter_map(|i| {
                let mut r: Vec<Rational> = self.row(i).to_vec();
                if let Some(b) = rhs {
                    r.push(b[i].clone());
                }
                let den = r.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                let ints: Vec<BigInt> = r
                    .iter()
                    .map(|c| c.numer() * (&den / c.denom()))
                    .collect();
                let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
                if g.is_zero() {
                    return None;
                }
                Some(ints.into_iter().map(|c| c / &g).collect())
            })
            .collect()
    }
}

pub fn nullspace(m: &QMatrix) -> Vec<Vec<Rational>> {
    m.nullspace()
}

pub fn solve_affine(m: &QMatrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    m.solve_affine(rhs)
}

pub fn rank(m: &QMatrix) -> usize {
    m.rank()
}

fn primitive(v: Vec<BigInt>, positive_at: usize) -> Vec<Rational> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let g = if v[positive_at].is_negative() { -g } else { g };
    v.into_iter()
        .map(|c| Rational::from_integer(c / &g))
        .collect()
}

/// Reduced row echelon form with common pivot value `d`.
struct Echelon {
    a: Vec<Vec<BigInt>>,
    /// `(row, col)` of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
    d: BigInt,
}

impl Echelon {
    fn reduce(mut a: Vec<Vec<BigInt>>) -> Self {
        let nrows = a.len();
        let ncols = a.first().map_or(0, Vec::len);
        let mut prev = BigInt::one();
        let mut pivots = Vec::new();
        let mut k = 0;
        for c in 0..ncols {
            if k == nrows {
                break;
            }
            let Some(pr) = (k..nrows)
                .filter(|&i| !a[i][c].is_zero())
                .min_by_key(|&i| a[i][c].bits())
            else {
                continue;
            };
            a.swap(k, pr);
            let pivot_row = std::mem::take(&mut a[k]);
            let p = pivot_row[c].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let f = row[c].clone();
                for (j, x) in row.iter_mut().enumerate() {
                    let t = if f.is_zero() || pivot_row[j].is_zero() {
                        &p * &*x
                    } else {
                        &p * &*x - &f * &pivot_row[j]
                    };
                    *x = if prev.is_one() {
                        t
                    } else {
                        debug_assert!((&t % &prev).is_zero(), "fraction-free step not exact");
                        t / &prev
                    };
                }
            }
            a[k] = pivot_row;
            pivots.push((k, c));
            prev = p;
            k += 1;
        }
        // Every pivot entry now equals the last pivot; make it positive.
        let mut d = prev;
        if d.is_negative() {
            for row in a.iter_mut() {
                for x in row.iter_mut() {
                    *x = -&*x;
                }
            }
            d = -d;
        }
        Echelon { a, pivots, d }
    }
}
