//! Lower-unitriangular systems `P u = psi` over a commutative ring.
//!
//! The solution can be reached two ways: forward substitution, or a closed
//! signed sum over strictly decreasing chains `n = v_0 > v_1 > ... > v_(s+1) = i`
//! of the products `b_(v_0)^(v_1) ... b_(v_s)^(v_(s+1))`. Both routes are
//! implemented independently here so that each can check the other.

use std::fmt::Display;
use std::io::Write;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{check_range, Error, Result};
use crate::poly::Polynomial;
use crate::recur::CoeffTable;

/// The commutative-ring operations the solvers need.
pub trait Ring:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Add<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}

/// `sum_s (-1)^(s+1) sum_{top = v_0 > ... > v_(s+1) = bottom} prod_u entry(v_u, v_(u+1))`.
///
/// Every chain is visited explicitly (there are `2^(top - bottom - 1)` of
/// them); prefixes are shared through the depth-first walk, and a zero prefix
/// prunes its subtree. Each factor carries its own minus sign, which yields
/// the `(-1)^(s+1)` weighting.
pub fn chain_sum<T: Ring>(entry: &impl Fn(usize, usize) -> T, top: usize, bottom: usize) -> T {
    assert!(top > bottom, "a chain needs top > bottom");
    fn walk<T: Ring>(entry: &impl Fn(usize, usize) -> T, v: usize, bottom: usize, prefix: T, total: &mut T) {
        if prefix.is_zero() {
            return;
        }
        let closing = prefix.clone() * -entry(v, bottom);
        *total = std::mem::replace(total, T::zero()) + closing;
        for w in (bottom + 1..v).rev() {
            walk(entry, w, bottom, prefix.clone() * -entry(v, w), total);
        }
    }
    let mut total = T::zero();
    walk(entry, top, bottom, T::one(), &mut total);
    total
}

/// Number of chains from `top` down to `bottom`.
pub fn chain_count(top: usize, bottom: usize) -> u128 {
    1u128 << (top - bottom - 1)
}

/// An `N x N` lower-triangular matrix with unit diagonal; rows and columns
/// are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitriMatrix<T> {
    // below[i - 1][j - 1] is entry (i, j) for j < i
    below: Vec<Vec<T>>,
}

impl<T: Ring> UnitriMatrix<T> {
    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| T::zero())
    }

    /// `f(i, j)` supplies the strictly-lower entry `(i, j)`, `j < i`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let below = (1..=dim).map(|i| (1..i).map(|j| f(i, j)).collect()).collect();
        UnitriMatrix { below }
    }

    pub fn dim(&self) -> usize {
        self.below.len()
    }

    /// Entry `(i, j)` for `j < i`.
    pub fn below(&self, i: usize, j: usize) -> &T {
        &self.below[i - 1][j - 1]
    }

    pub fn entry(&self, i: usize, j: usize) -> T {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => T::zero(),
            std::cmp::Ordering::Equal => T::one(),
            std::cmp::Ordering::Greater => self.below(i, j).clone(),
        }
    }

    /// Inverse by forward substitution: `c_n^k = -sum_{i=k}^{n-1} P(n,i) c_i^k`.
    pub fn inverse(&self) -> Self {
        let dim = self.dim();
        let mut below: Vec<Vec<T>> = (1..=dim).map(|i| Vec::with_capacity(i - 1)).collect();
        for n in 2..=dim {
            for k in 1..n {
                let mut acc = -self.below(n, k).clone();
                for i in k + 1..n {
                    acc = acc - self.below(n, i).clone() * below[i - 1][k - 1].clone();
                }
                below[n - 1].push(acc);
            }
        }
        UnitriMatrix { below }
    }

    /// First column of the inverse, `[1, c_2^1, ..., c_N^1]`, by forward
    /// substitution.
    pub fn inverse_first_column(&self) -> Vec<T> {
        let mut col: Vec<T> = Vec::with_capacity(self.dim());
        for n in 1..=self.dim() {
            if n == 1 {
                col.push(T::one());
                continue;
            }
            let mut acc = T::zero();
            for i in 1..n {
                acc = acc - self.below(n, i).clone() * col[i - 1].clone();
            }
            col.push(acc);
        }
        col
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Self::from_fn(self.dim(), |i, j| {
            (j..=i).fold(T::zero(), |acc, t| acc + self.entry(i, t) * rhs.entry(t, j))
        })
    }

    pub fn is_identity(&self) -> bool {
        self.below.iter().flatten().all(Zero::is_zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let n = self.dim();
        (1..=n).map(|i| (1..=n).map(|j| self.entry(i, j)).collect()).collect()
    }
}

impl<T: Ring + Display> UnitriMatrix<T> {
    /// CSV of `row,col,entry` for every entry on or below the diagonal.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["row", "col", "entry"])?;
        for i in 1..=self.dim() {
            for j in 1..=i {
                w.write_record([i.to_string(), j.to_string(), self.entry(i, j).to_string()])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

impl UnitriMatrix<Polynomial> {
    /// The matrix `P` with `P(i, j) = b_i^j` for `j < i <= dim`.
    pub fn from_coeff_table(table: &CoeffTable, dim: usize) -> Result<Self> {
        table.require(dim)?;
        Ok(Self::from_fn(dim, |i, j| table.b(i, j).clone()))
    }
}

pub fn invert_unitriangular<T: Ring>(p: &UnitriMatrix<T>) -> UnitriMatrix<T> {
    p.inverse()
}

/// Entry `(n, k)` of `P^-1` as a signed chain sum.
pub fn c_by_chains<T: Ring>(p: &UnitriMatrix<T>, n: usize, k: usize) -> Result<T> {
    check_range("n", n, 2, p.dim())?;
    check_range("k", k, 1, n - 1)?;
    Ok(chain_sum(&|a, b| p.below(a, b).clone(), n, k))
}

/// Data of the recurrence `u_1 = psi(1)`, `u_n = psi(n) - sum_{i<n} b_n^i u_i`.
///
/// Here `b_n^i` is an arbitrary double sequence, unrelated to the concrete
/// coefficient table unless built with [`GeneralInstance::poincare`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralInstance<T> {
    psi: Vec<T>,
    b: UnitriMatrix<T>,
}

impl<T: Ring> GeneralInstance<T> {
    pub fn from_fn(len: usize, mut psi: impl FnMut(usize) -> T, b: impl FnMut(usize, usize) -> T) -> Self {
        GeneralInstance {
            psi: (1..=len).map(&mut psi).collect(),
            b: UnitriMatrix::from_fn(len, b),
        }
    }

    pub fn len(&self) -> usize {
        self.psi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.psi.is_empty()
    }

    pub fn psi(&self, n: usize) -> &T {
        &self.psi[n - 1]
    }

    pub fn b(&self, n: usize, i: usize) -> &T {
        self.b.below(n, i)
    }

    pub fn matrix(&self) -> &UnitriMatrix<T> {
        &self.b
    }
}

impl GeneralInstance<BigInt> {
    /// Uniform integer entries in `[-bound, bound]`.
    pub fn random_integer<R: Rng>(rng: &mut R, len: usize, bound: i64) -> Self {
        let mut draw = || BigInt::from(rng.gen_range(-bound..=bound));
        let psi: Vec<BigInt> = (0..len).map(|_| draw()).collect();
        let b = UnitriMatrix::from_fn(len, |_, _| draw());
        GeneralInstance { psi, b }
    }
}

impl GeneralInstance<Polynomial> {
    /// `psi(n) = q^2 + ... + q^(n+1)` and `b_n^i` from the table; the solution
    /// is `u_n = q^(n+1) a_(n-1)`.
    pub fn poincare(table: &CoeffTable, len: usize) -> Result<Self> {
        table.require(len)?;
        Ok(Self::from_fn(len, Polynomial::psi, |n, i| table.b(n, i).clone()))
    }
}

/// `[u_1, ..., u_N]` by forward substitution.
pub fn solve_by_recurrence<T: Ring>(inst: &GeneralInstance<T>) -> Vec<T> {
    let mut u: Vec<T> = Vec::with_capacity(inst.len());
    for n in 1..=inst.len() {
        let mut acc = inst.psi(n).clone();
        for i in 1..n {
            acc = acc - inst.b(n, i).clone() * u[i - 1].clone();
        }
        u.push(acc);
    }
    u
}

/// `[u_1, ..., u_N]` from `u_n = psi(n) + sum_{i<n} psi(i) * chain_sum(n, i)`.
pub fn solve_by_chain_formula<T: Ring>(inst: &GeneralInstance<T>) -> Vec<T> {
    let entry = |a: usize, b: usize| inst.b(a, b).clone();
    (1..=inst.len())
        .map(|n| {
            (1..n).fold(inst.psi(n).clone(), |acc, i| {
                acc + inst.psi(i).clone() * chain_sum(&entry, n, i)
            })
        })
        .collect()
}

fn shortcut_factor() -> Polynomial {
    -Polynomial::one_minus_q_pow(2)
}

/// Whether `c_(n+2)^1 = -(1 - q^2) q^(n+1) a_(n-1)`, where `a[m] = a_m`.
pub fn check_shortcut(n: usize, p: &UnitriMatrix<Polynomial>, a: &[Polynomial]) -> Result<bool> {
    check_range("n", n, 1, usize::MAX)?;
    if p.dim() < n + 2 {
        return Err(Error::TableTooSmall {
            needed: n + 2,
            have: p.dim(),
        });
    }
    if a.len() < n {
        return Err(Error::ShapeMismatch {
            expected: n,
            found: a.len(),
        });
    }
    let c = &p.inverse_first_column()[n + 1];
    Ok(*c == (shortcut_factor() * &a[n - 1]).shift(n + 1))
}

/// Whether `sum_{k=1}^{n} b_n^k c_(k+2)^1 = -(1 - q^2) psi(n)`.
pub fn check_generic_relation(n: usize, p: &UnitriMatrix<Polynomial>) -> Result<bool> {
    check_range("n", n, 1, usize::MAX)?;
    if p.dim() < n + 2 {
        return Err(Error::TableTooSmall {
            needed: n + 2,
            have: p.dim(),
        });
    }
    let c = p.inverse_first_column();
    let lhs: Polynomial = (1..=n).map(|k| p.entry(n, k) * &c[k + 1]).sum();
    Ok(lhs == shortcut_factor() * Polynomial::psi(n))
}

fn dense_mul<T: Ring>(x: &[Vec<T>], y: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = x.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(T::zero(), |acc, t| acc + x[i][t].clone() * y[t][j].clone()))
                .collect()
        })
        .collect()
}

/// Checks that the first column of `P S P^-1` is `-(1 - q^2) psi`, where `S`
/// is the double shift. Dense products on the `N x N` truncation; only rows
/// `1..=N-2` are free of truncation effects and only those are compared.
pub fn check_double_shift(p: &UnitriMatrix<Polynomial>) -> bool {
    let n = p.dim();
    let shift: Vec<Vec<Polynomial>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    if j == i + 2 {
                        Polynomial::one()
                    } else {
                        Polynomial::zero()
                    }
                })
                .collect()
        })
        .collect();
    let prod = dense_mul(&dense_mul(&p.to_dense(), &shift), &p.inverse().to_dense());
    (1..=n.saturating_sub(2)).all(|i| prod[i - 1][0] == shortcut_factor() * Polynomial::psi(i))
}
