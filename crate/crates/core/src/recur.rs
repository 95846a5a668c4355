//! Recurrences for the last-generator polynomials `a_n^j`, the triangular
//! coefficient family `b_j^k`, and `a_n` itself.
//!
//! Indices follow the usual 1-based conventions: `b_j^k` is defined for
//! `1 <= k <= j`, and the "upper" view is `B_j^k = b_j^(j-k+1)`.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_range, Error, Result};
use crate::numbers::{binomial, catalan};
use crate::poly::Polynomial;

/// One step of the row recurrence: given `j`, `b_(j-1)^(k-1)`, `b_(j-1)^k`
/// and `b_(j-2)^(k-1)`, produce `b_j^k`.
pub type Step = fn(usize, &Polynomial, &Polynomial, &Polynomial) -> Polynomial;

/// `b_j^k = b_(j-1)^(k-1) + (1 - q^j) b_(j-1)^k - b_(j-2)^(k-1)`.
pub fn standard_step(j: usize, up_left: &Polynomial, left: &Polynomial, back: &Polynomial) -> Polynomial {
    let mut out = up_left + &(&Polynomial::one_minus_q_pow(j) * left);
    out -= back;
    out
}

/// [`standard_step`] with the sign of the `b_(j-2)^(k-1)` term flipped. Only
/// useful as a negative control: tables built with it are wrong from `b_3^2` on.
pub fn flipped_step(j: usize, up_left: &Polynomial, left: &Polynomial, back: &Polynomial) -> Polynomial {
    up_left + &(&Polynomial::one_minus_q_pow(j) * left) + back
}

/// Lower-unitriangular table of the polynomials `b_j^k`, `1 <= k <= j <= max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    rows: Vec<Vec<Polynomial>>,
}

/// Which indexing a table dump uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TableView {
    /// `b_j^k`
    #[default]
    Lower,
    /// `B_j^k = b_j^(j-k+1)`
    Upper,
}

impl CoeffTable {
    pub fn build(max: usize) -> Self {
        Self::build_with_step(max, standard_step)
    }

    /// Fills the table with the fixed diagonal `b_j^j = 1`, first column
    /// `b_j^1 = (1-q^2)...(1-q^j)`, and `step` for the interior cells.
    pub fn build_with_step(max: usize, step: Step) -> Self {
        let mut rows: Vec<Vec<Polynomial>> = Vec::with_capacity(max);
        let mut first_column = Polynomial::one();
        for j in 1..=max {
            if j >= 2 {
                first_column = &first_column * &Polynomial::one_minus_q_pow(j);
            }
            let mut row = Vec::with_capacity(j);
            if j >= 2 {
                row.push(first_column.clone());
            }
            for k in 2..j {
                let up_left = &rows[j - 2][k - 2];
                let left = &rows[j - 2][k - 1];
                let back = &rows[j - 3][k - 2];
                row.push(step(j, up_left, left, back));
            }
            row.push(Polynomial::one());
            rows.push(row);
        }
        CoeffTable { rows }
    }

    /// A table whose entries come from `f(j, k)` directly.
    pub fn from_entries(max: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let rows = (1..=max).map(|j| (1..=j).map(|k| f(j, k)).collect()).collect();
        CoeffTable { rows }
    }

    /// Largest row index `j` held.
    pub fn max(&self) -> usize {
        self.rows.len()
    }

    pub fn require(&self, needed: usize) -> Result<()> {
        if needed > self.max() {
            return Err(Error::TableTooSmall {
                needed,
                have: self.max(),
            });
        }
        Ok(())
    }

    pub fn get(&self, j: usize, k: usize) -> Option<&Polynomial> {
        if k == 0 || k > j {
            return None;
        }
        self.rows.get(j.checked_sub(1)?)?.get(k - 1)
    }

    /// `b_j^k`. Panics outside `1 <= k <= j <= max`.
    pub fn b(&self, j: usize, k: usize) -> &Polynomial {
        self.get(j, k)
            .unwrap_or_else(|| panic!("b_{j}^{k} is outside a table of size {}", self.max()))
    }

    /// `B_j^k = b_j^(j-k+1)`. Panics outside `1 <= k <= j <= max`.
    pub fn upper(&self, j: usize, k: usize) -> &Polynomial {
        assert!(k >= 1 && k <= j, "B_{j}^{k} is not defined");
        self.b(j, j - k + 1)
    }

    pub fn entry(&self, view: TableView, j: usize, k: usize) -> &Polynomial {
        match view {
            TableView::Lower => self.b(j, k),
            TableView::Upper => self.upper(j, k),
        }
    }

    /// CSV dump with columns `j,k,b_j^k` (or `B_j^k`).
    pub fn write_csv<W: Write>(&self, view: TableView, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let label = match view {
            TableView::Lower => "b_j^k",
            TableView::Upper => "B_j^k",
        };
        w.write_record(["j", "k", label])?;
        for j in 1..=self.max() {
            for k in 1..=j {
                w.write_record([j.to_string(), k.to_string(), self.entry(view, j, k).to_string()])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

// a_m^s with the conventions a_m^0 = 0 and a_m^s = 0 for s > m.
fn last_gen(prior: &[Polynomial], s: usize) -> Polynomial {
    match s {
        0 => Polynomial::zero(),
        s => prior.get(s - 1).cloned().unwrap_or_default(),
    }
}

/// `a_n^j = a_(n-1)^(j-1) + q^j (1 + sum_{s=j}^{n-1} a_(n-1)^s)`, where
/// `prior[s-1] = a_(n-1)^s`.
pub fn a_last_direct(n: usize, j: usize, prior: &[Polynomial]) -> Result<Polynomial> {
    check_range("j", j, 1, n)?;
    if prior.len() != n - 1 {
        return Err(Error::ShapeMismatch {
            expected: n - 1,
            found: prior.len(),
        });
    }
    let mut tail = Polynomial::one();
    for s in j..n {
        tail += &last_gen(prior, s);
    }
    Ok(last_gen(prior, j - 1) + tail.shift(j))
}

/// `a_n^j = sum_{k=1}^{j} q^(j-k+1) B_j^k a_(n-k)`, where `a[m] = a_m`.
pub fn a_last_via_table(n: usize, j: usize, table: &CoeffTable, a: &[Polynomial]) -> Result<Polynomial> {
    check_range("j", j, 1, n)?;
    table.require(j)?;
    if a.len() < n {
        return Err(Error::ShapeMismatch {
            expected: n,
            found: a.len(),
        });
    }
    Ok((1..=j).map(|k| (table.upper(j, k) * &a[n - k]).shift(j - k + 1)).sum())
}

/// Rows `[a_m^1, ..., a_m^m]` for `m = 1..=n`, built with [`a_last_direct`].
pub fn last_generator_triangle(n: usize) -> Vec<Vec<Polynomial>> {
    let mut rows: Vec<Vec<Polynomial>> = Vec::with_capacity(n);
    for m in 1..=n {
        let prior = rows.last().map(Vec::as_slice).unwrap_or(&[]);
        let row = (1..=m)
            .map(|j| a_last_direct(m, j, prior).expect("indices are in range by construction"))
            .collect();
        rows.push(row);
    }
    rows
}

/// `a_0, ..., a_n` from `a_m = 1 + sum_j a_m^j`.
pub fn poincare_sequence_by_partition(n: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one()];
    out.extend(
        last_generator_triangle(n)
            .into_iter()
            .map(|row| row.into_iter().sum::<Polynomial>() + Polynomial::one()),
    );
    out
}

pub fn poincare_by_partition(n: usize) -> Polynomial {
    poincare_sequence_by_partition(n)
        .pop()
        .expect("sequence is never empty")
}

/// Memo of `a_0, a_1, ...` computed from the main recurrence
///
/// `q^m a_(m-1) = (q + ... + q^m) - sum_{k=2}^{m} q^(m-k+1) B_m^k a_(m-k)`
///
/// at rank `m = n + 1`, which needs table rows up to `n + 1`.
#[derive(Debug, Clone)]
pub struct MainRecurrence<'a> {
    table: &'a CoeffTable,
    values: Vec<Polynomial>,
}

impl<'a> MainRecurrence<'a> {
    pub fn new(table: &'a CoeffTable) -> Self {
        MainRecurrence {
            table,
            values: vec![Polynomial::one()],
        }
    }

    pub fn get(&mut self, n: usize) -> Result<&Polynomial> {
        self.table.require(n + 1)?;
        while self.values.len() <= n {
            let target = self.values.len();
            let m = target + 1;
            let mut rhs = Polynomial::geometric(1, m);
            for k in 2..=m {
                rhs -= (self.table.upper(m, k) * &self.values[m - k]).shift(m - k + 1);
            }
            self.values.push(rhs.exact_div(&Polynomial::q_pow(m))?);
        }
        Ok(&self.values[n])
    }

    pub fn sequence(&mut self, n: usize) -> Result<Vec<Polynomial>> {
        self.get(n)?;
        Ok(self.values[..=n].to_vec())
    }
}

pub fn poincare_by_main_recurrence(n: usize, table: &CoeffTable) -> Result<Polynomial> {
    MainRecurrence::new(table).get(n).cloned()
}

/// `(-1)^(k-1) binom(j-k, k-1)`, the value of `B_j^k` at `q = 1`.
pub fn upper_value_at_one(j: usize, k: usize) -> BigInt {
    let b = binomial(j as i64 - k as i64, k as i64 - 1);
    if k.is_multiple_of(2) {
        -b
    } else {
        b
    }
}

/// Whether `B_j^k(1) = (-1)^(k-1) binom(j-k, k-1)`.
pub fn check_b_at_one(table: &CoeffTable, j: usize, k: usize) -> Result<bool> {
    check_range("k", k, 1, j)?;
    table.require(j)?;
    Ok(table.upper(j, k).eval_i64(1) == upper_value_at_one(j, k))
}

/// Whether `C_n = n - sum_{k=2}^{n} (-1)^(k-1) binom(n-k, k-1) C_(n-k+1)`.
pub fn check_catalan_recurrence(n: usize) -> bool {
    let rhs = (2..=n).fold(BigInt::from(n), |acc, k| {
        acc - upper_value_at_one(n, k) * catalan(n - k + 1)
    });
    n >= 1 && rhs == catalan(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fcenum::{oracle_poincare, oracle_poincare_split};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn table_examples() {
        let t = CoeffTable::build(6);
        assert_eq!(*t.b(3, 2), p(&[1, 0, -1, -1]));
        let expect = p(&[1, 0, -1]) * p(&[1, 0, 0, -1]) * p(&[1, 0, 0, 0, -1]);
        assert_eq!(*t.b(4, 1), expect);
        // one step by hand: b_3^1 + (1-q^4) b_3^2 - b_2^1
        assert_eq!(*t.b(4, 2), p(&[1, 0, -1, -2, -1, 1, 1, 1]));
        for j in 1..=6 {
            assert_eq!(*t.b(j, j), Polynomial::one());
            // b_j^(j-1) = 1 - q^2 - ... - q^j
            if j >= 2 {
                assert_eq!(*t.b(j, j - 1), Polynomial::one() - Polynomial::psi(j - 1));
            }
        }
        assert_eq!(t.upper(4, 1), t.b(4, 4));
        assert_eq!(t.upper(4, 3), t.b(4, 2));
        assert!(t.get(7, 1).is_none());
        assert!(t.get(3, 0).is_none());
        assert_eq!(t.require(7), Err(Error::TableTooSmall { needed: 7, have: 6 }));
        assert_eq!(CoeffTable::build(0).max(), 0);
    }

    #[test]
    fn upper_view_residual_vanishes() {
        let t = CoeffTable::build(15);
        for j in 3..=15 {
            for k in 2..j {
                let residual =
                    t.upper(j, k) - t.upper(j - 1, k) - &Polynomial::one_minus_q_pow(j) * t.upper(j - 1, k - 1)
                        + t.upper(j - 2, k - 1);
                assert!(residual.is_zero(), "j={j} k={k}");
            }
        }
    }

    #[test]
    fn value_at_zero_is_one() {
        let t = CoeffTable::build(15);
        for j in 1..=15 {
            for k in 1..=j {
                assert_eq!(t.upper(j, k).eval_i64(0), BigInt::one(), "B_{j}^{k}");
            }
        }
    }

    #[test]
    fn a_last_examples() {
        let a2 = poincare_sequence_by_partition(2);
        let tri2 = last_generator_triangle(2);
        let prior = &tri2[1];
        for n in 1..=5 {
            let seq = poincare_sequence_by_partition(n);
            let prior = last_generator_triangle(n - 1).pop().unwrap_or_default();
            assert_eq!(a_last_direct(n, 1, &prior).unwrap(), seq[n - 1].shift(1));
        }
        assert_eq!(a_last_direct(3, 3, prior).unwrap(), p(&[0, 1, 1, 1]));
        assert_eq!(a_last_direct(3, 2, prior).unwrap(), p(&[0, 1, 2, 1, 1]));
        assert!(matches!(a_last_direct(3, 0, prior), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(a_last_direct(3, 4, prior), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(
            a_last_direct(3, 1, &[]),
            Err(Error::ShapeMismatch { expected: 2, found: 0 })
        );

        let t = CoeffTable::build(4);
        assert_eq!(a_last_via_table(2, 2, &t, &a2).unwrap(), p(&[0, 1, 1]));
        assert_eq!(a_last_via_table(3, 2, &t, &a2).unwrap(), p(&[0, 1, 2, 1, 1]));
        assert_eq!(a_last_via_table(3, 1, &t, &a2).unwrap(), a2[2].shift(1));
        let small = CoeffTable::build(1);
        assert!(matches!(
            a_last_via_table(3, 2, &small, &a2),
            Err(Error::TableTooSmall { .. })
        ));
    }

    #[test]
    fn direct_and_table_routes_agree() {
        let t = CoeffTable::build(12);
        let a = poincare_sequence_by_partition(12);
        let tri = last_generator_triangle(12);
        for n in 1..=12 {
            for j in 1..=n {
                assert_eq!(
                    tri[n - 1][j - 1],
                    a_last_via_table(n, j, &t, &a).unwrap(),
                    "n={n} j={j}"
                );
            }
        }
    }

    #[test]
    fn partition_examples() {
        assert_eq!(poincare_by_partition(0), Polynomial::one());
        assert_eq!(poincare_by_partition(2), p(&[1, 2, 2]));
        assert_eq!(poincare_by_partition(3), p(&[1, 3, 5, 4, 1]));
    }

    #[test]
    fn main_recurrence_examples() {
        let t = CoeffTable::build(13);
        assert_eq!(poincare_by_main_recurrence(0, &t), Ok(Polynomial::one()));
        assert_eq!(poincare_by_main_recurrence(1, &t), Ok(p(&[1, 1])));
        assert_eq!(poincare_by_main_recurrence(3, &t), Ok(p(&[1, 3, 5, 4, 1])));
        assert_eq!(
            poincare_by_main_recurrence(13, &t),
            Err(Error::TableTooSmall { needed: 14, have: 13 })
        );
        let by_rec = MainRecurrence::new(&t).sequence(12).unwrap();
        assert_eq!(by_rec, poincare_sequence_by_partition(12));
    }

    #[test]
    fn recurrences_match_oracle() {
        let a = poincare_sequence_by_partition(9);
        for (n, an) in a.iter().enumerate() {
            assert_eq!(*an, oracle_poincare(n), "n = {n}");
        }
        let tri = last_generator_triangle(8);
        for n in 1..=8 {
            assert_eq!(tri[n - 1], oracle_poincare_split(n).1);
        }
    }

    #[test]
    fn specializations_at_one() {
        let t = CoeffTable::build(20);
        for j in 1..=20 {
            for k in 1..=j {
                assert!(check_b_at_one(&t, j, k).unwrap(), "B_{j}^{k}");
            }
        }
        assert_eq!(upper_value_at_one(7, 1), BigInt::one());
        assert_eq!(upper_value_at_one(4, 2), BigInt::from(-2));
        assert_eq!(upper_value_at_one(5, 5), BigInt::zero());
        assert!(check_b_at_one(&t, 3, 4).is_err());
        assert!(check_b_at_one(&CoeffTable::build(2), 3, 1).is_err());
    }

    #[test]
    fn catalan_recurrence() {
        for n in 1..=20 {
            assert!(check_catalan_recurrence(n), "n = {n}");
        }
        assert!(!check_catalan_recurrence(0));
    }

    #[test]
    fn faulty_step_changes_table() {
        let good = CoeffTable::build(5);
        let bad = CoeffTable::build_with_step(5, flipped_step);
        assert_eq!(good.b(3, 1), bad.b(3, 1));
        assert_ne!(good.b(3, 2), bad.b(3, 2));
    }

    #[test]
    fn csv_dump() {
        let t = CoeffTable::build(3);
        let mut lower = Vec::new();
        t.write_csv(TableView::Lower, &mut lower).unwrap();
        assert_eq!(
            String::from_utf8(lower).unwrap(),
            "j,k,b_j^k\n1,1,1\n2,1,1 - q^2\n2,2,1\n3,1,1 - q^2 - q^3 + q^5\n3,2,1 - q^2 - q^3\n3,3,1\n"
        );
        let mut upper = Vec::new();
        t.write_csv(TableView::Upper, &mut upper).unwrap();
        let text = String::from_utf8(upper).unwrap();
        assert!(text.starts_with("j,k,B_j^k\n1,1,1\n2,1,1\n2,2,1 - q^2\n"));
    }
}
