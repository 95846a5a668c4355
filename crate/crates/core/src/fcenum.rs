//! Brute-force oracles for the length polynomials of fully commutative
//! elements of `W(A_n)`.
//!
//! Two independent routes are provided:
//!
//! * [`NormalForms`] walks the normal forms
//!   `[i_1,j_1][i_2,j_2]...[i_p,j_p]` with strictly decreasing `i`'s and `j`'s
//!   and `j_t >= i_t`, where the block `[i,j]` is `s_i s_(i+1) ... s_j`.
//! * [`Avoiding321`] scans every permutation of `1..=m` and keeps the ones with
//!   no decreasing subsequence of length three; length is the inversion count.

use std::fmt;
use std::io::Write;

use crate::error::{check_range, Error, Result};
use crate::poly::Polynomial;

/// Largest `m` accepted by [`enumerate_321_avoiding`].
pub const PERMUTATION_CAP: usize = 11;

/// One fully commutative element, as its sequence of `(i, j)` blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NormalForm {
    blocks: Vec<(usize, usize)>,
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm { blocks: Vec::new() }
    }

    /// Validates the normal-form side conditions against rank `n`.
    pub fn new(n: usize, blocks: Vec<(usize, usize)>) -> Option<Self> {
        let mut bound = (n + 1, n + 1);
        for &(i, j) in &blocks {
            if i < 1 || i > j || i >= bound.0 || j >= bound.1 {
                return None;
            }
            bound = (i, j);
        }
        Some(NormalForm { blocks })
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Coxeter length: total number of generators across the blocks.
    pub fn length(&self) -> usize {
        self.blocks.iter().map(|&(i, j)| j - i + 1).sum()
    }

    /// Index of the rightmost generator (`j_p`), `None` for the identity.
    pub fn last_generator(&self) -> Option<usize> {
        self.blocks.last().map(|&(_, j)| j)
    }

    /// The generator word `s_(i_1) ... s_(j_1) s_(i_2) ...`.
    pub fn word(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(|&(i, j)| i..=j).collect()
    }

    /// The element as a permutation of `1..=n+1`, multiplying generators
    /// left to right (right multiplication by `s_i` swaps positions `i, i+1`).
    pub fn to_permutation(&self, n: usize) -> Permutation {
        let mut images: Vec<usize> = (1..=n + 1).collect();
        for s in self.word() {
            images.swap(s - 1, s);
        }
        Permutation { images }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("e");
        }
        for (i, j) in &self.blocks {
            write!(f, "[{i},{j}]")?;
        }
        Ok(())
    }
}

/// Depth-first stream over all normal forms of rank `n`.
///
/// Order: the identity first, then lexicographically descending on
/// `(j_1, i_1, j_2, i_2, ...)` with each prefix emitted before its extensions.
#[derive(Debug, Clone)]
pub struct NormalForms {
    n: usize,
    current: Vec<(usize, usize)>,
    started: bool,
    done: bool,
}

impl NormalForms {
    fn bound_below(&self, depth: usize) -> (usize, usize) {
        if depth == 0 {
            (self.n + 1, self.n + 1)
        } else {
            self.current[depth - 1]
        }
    }

    fn advance(&mut self) -> bool {
        // extend with the largest admissible block
        let (ip, jp) = self.bound_below(self.current.len());
        if ip >= 2 {
            let j = jp - 1;
            self.current.push((j.min(ip - 1), j));
            return true;
        }
        // otherwise step the deepest block that still has a successor
        while let Some((i, j)) = self.current.pop() {
            let (ip, _) = self.bound_below(self.current.len());
            if i > 1 {
                self.current.push((i - 1, j));
                return true;
            }
            if j > 1 {
                let j = j - 1;
                self.current.push((j.min(ip - 1), j));
                return true;
            }
        }
        false
    }
}

impl Iterator for NormalForms {
    type Item = NormalForm;

    fn next(&mut self) -> Option<NormalForm> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(NormalForm {
            blocks: self.current.clone(),
        })
    }
}

pub fn enumerate_normal_forms(n: usize) -> NormalForms {
    NormalForms {
        n,
        current: Vec::with_capacity(n),
        started: false,
        done: false,
    }
}

/// Length histogram of all normal forms, plus one histogram per last
/// generator (`by_last[j - 1]`), in a single pass.
fn length_histograms(n: usize) -> (Vec<u64>, Vec<Vec<u64>>) {
    let max_len = (n + 1) * (n + 1) / 4;
    let mut all = vec![0u64; max_len + 1];
    let mut by_last = vec![vec![0u64; max_len + 1]; n];
    for form in enumerate_normal_forms(n) {
        let len = form.length();
        if len >= all.len() {
            all.resize(len + 1, 0);
        }
        all[len] += 1;
        if let Some(j) = form.last_generator() {
            let h = &mut by_last[j - 1];
            if len >= h.len() {
                h.resize(len + 1, 0);
            }
            h[len] += 1;
        }
    }
    (all, by_last)
}

/// `a_n`: the sum of `q^length` over all normal forms of rank `n`.
pub fn oracle_poincare(n: usize) -> Polynomial {
    let mut counts = Vec::new();
    for form in enumerate_normal_forms(n) {
        let len = form.length();
        if len >= counts.len() {
            counts.resize(len + 1, 0u64);
        }
        counts[len] += 1;
    }
    Polynomial::from_counts(&counts)
}

/// `a_n^j`: the sum over normal forms whose rightmost generator is `s_j`.
pub fn oracle_poincare_by_last(n: usize, j: usize) -> Result<Polynomial> {
    check_range("j", j, 1, n)?;
    let mut counts = Vec::new();
    for form in enumerate_normal_forms(n) {
        if form.last_generator() == Some(j) {
            let len = form.length();
            if len >= counts.len() {
                counts.resize(len + 1, 0u64);
            }
            counts[len] += 1;
        }
    }
    Ok(Polynomial::from_counts(&counts))
}

/// `a_n` together with `[a_n^1, ..., a_n^n]`, from one enumeration pass.
pub fn oracle_poincare_split(n: usize) -> (Polynomial, Vec<Polynomial>) {
    let (all, by_last) = length_histograms(n);
    (
        Polynomial::from_counts(&all),
        by_last.iter().map(|h| Polynomial::from_counts(h)).collect(),
    )
}

/// Writes `n,form,length` rows for every normal form of rank `n`.
pub fn write_normal_forms_csv<W: Write>(n: usize, out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "form", "length"])?;
    for form in enumerate_normal_forms(n) {
        w.write_record([n.to_string(), form.to_string(), form.length().to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// A permutation of `1..=m` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x < 1 || x > images.len() || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inversions(&self) -> usize {
        let v = &self.images;
        (0..v.len())
            .map(|a| v[a + 1..].iter().filter(|&&y| y < v[a]).count())
            .sum()
    }

    /// True iff no `a < b < c` has `π(a) > π(b) > π(c)`.
    pub fn avoids_321(&self) -> bool {
        avoids_321(&self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.images {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

// Single left-to-right scan. A permutation avoids 321 iff the values that are
// not left-to-right maxima appear in increasing order, so it is enough to
// remember the largest such value seen so far.
fn avoids_321(v: &[usize]) -> bool {
    let mut max_seen = 0;
    let mut top_middle = 0;
    for &x in v {
        if x > max_seen {
            max_seen = x;
        } else if x < top_middle {
            return false;
        } else {
            top_middle = x;
        }
    }
    true
}

/// Every permutation of `1..=m` in lexicographic order, filtered to the
/// 321-avoiding ones.
#[derive(Debug, Clone)]
pub struct Avoiding321 {
    current: Vec<usize>,
    exhausted: bool,
}

fn next_lex_permutation(v: &mut [usize]) -> bool {
    let Some(pivot) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]).map(|i| i - 1) else {
        return false;
    };
    let succ = (pivot + 1..v.len()).rev().find(|&i| v[i] > v[pivot]).unwrap();
    v.swap(pivot, succ);
    v[pivot + 1..].reverse();
    true
}

impl Iterator for Avoiding321 {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        while !self.exhausted {
            let keep = avoids_321(&self.current);
            let out = keep.then(|| Permutation {
                images: self.current.clone(),
            });
            self.exhausted = !next_lex_permutation(&mut self.current);
            if out.is_some() {
                return out;
            }
        }
        None
    }
}

pub fn enumerate_321_avoiding(m: usize) -> Result<Avoiding321> {
    if m > PERMUTATION_CAP {
        return Err(Error::CapExceeded {
            m,
            cap: PERMUTATION_CAP,
        });
    }
    check_range("m", m, 1, PERMUTATION_CAP)?;
    Ok(Avoiding321 {
        current: (1..=m).collect(),
        exhausted: false,
    })
}

/// Sum of `q^inv(π)` over 321-avoiding `π` in `S_m`; equals `a_(m-1)`.
pub fn inversion_polynomial(m: usize) -> Result<Polynomial> {
    let mut counts = Vec::new();
    for perm in enumerate_321_avoiding(m)? {
        let inv = perm.inversions();
        if inv >= counts.len() {
            counts.resize(inv + 1, 0u64);
        }
        counts[inv] += 1;
    }
    Ok(Polynomial::from_counts(&counts))
}
