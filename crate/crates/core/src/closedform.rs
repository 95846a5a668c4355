//! Closed formulas: the products `Π(a,b)`, the gap sums `ΣΠ(a,b)[l_1,...,l_u]`,
//! the closed expression for `b_j^k`, and the two chain-sum formulas for `a_n`.

use num_traits::{One, Zero};

use crate::error::{check_range, Error, Result};
use crate::poly::Polynomial;
use crate::recur::CoeffTable;
use crate::trimatrix::chain_sum;

/// `Π(u,v) = (1 - q^u)(1 - q^(u+1))...(1 - q^v)`, equal to 1 when `u > v`.
pub fn pi_product(u: usize, v: usize) -> Polynomial {
    assert!(u >= 1, "Π(u, v) needs u >= 1");
    (u..=v).map(Polynomial::one_minus_q_pow).product()
}

/// Gap lengths `[l_1, ..., l_u]` cut out of `Π(a,b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapSpec {
    a: usize,
    b: usize,
    lengths: Vec<usize>,
}

impl GapSpec {
    pub fn new(a: usize, b: usize, lengths: Vec<usize>) -> Result<Self> {
        if a < 1 {
            return Err(Error::InvalidPlacement(format!("range start {a} must be at least 1")));
        }
        if let Some(l) = lengths.iter().find(|&&l| l < 2) {
            return Err(Error::InvalidPlacement(format!("gap length {l} is below 2")));
        }
        Ok(GapSpec { a, b, lengths })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    fn total(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// Whether at least one placement exists: `a + l_1 + ... + l_u - 1 <= b`.
    pub fn is_placeable(&self) -> bool {
        self.lengths.is_empty() || self.a + self.total() <= self.b + 1
    }

    /// Whether the gaps exactly fill `[a, b]`.
    pub fn is_saturated(&self) -> bool {
        self.a + self.total() == self.b + 1
    }

    /// Every admissible placement, in increasing lexicographic order.
    pub fn placements(&self) -> Vec<GapPlacement> {
        fn go(spec: &GapSpec, g: usize, from: usize, acc: &mut Vec<usize>, out: &mut Vec<GapPlacement>) {
            if g == spec.lengths.len() {
                out.push(GapPlacement { positions: acc.clone() });
                return;
            }
            let rest: usize = spec.lengths[g..].iter().sum();
            if from + rest > spec.b + 1 {
                return;
            }
            for i in from..=spec.b + 1 - rest {
                acc.push(i);
                go(spec, g + 1, i + spec.lengths[g], acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 0, self.a, &mut Vec::new(), &mut out);
        out
    }
}

/// Starting positions `[i_1, ..., i_u]` of the gaps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapPlacement {
    positions: Vec<usize>,
}

impl GapPlacement {
    pub fn new(positions: Vec<usize>) -> Self {
        GapPlacement { positions }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// Checks `a <= i_1`, `i_t + l_t <= i_(t+1)` and `i_u + l_u - 1 <= b`.
    pub fn validate(&self, spec: &GapSpec) -> Result<()> {
        if self.positions.len() != spec.lengths.len() {
            return Err(Error::InvalidPlacement(format!(
                "{} positions for {} gaps",
                self.positions.len(),
                spec.lengths.len()
            )));
        }
        let mut next_free = spec.a;
        for (&i, &l) in self.positions.iter().zip(&spec.lengths) {
            if i < next_free {
                return Err(Error::InvalidPlacement(format!("gap at {i} starts before {next_free}")));
            }
            next_free = i + l;
        }
        if !self.positions.is_empty() && next_free > spec.b + 1 {
            return Err(Error::InvalidPlacement(format!("last gap runs past {}", spec.b)));
        }
        Ok(())
    }
}

/// `Π(a,b)` with each run `(1 - q^i)...(1 - q^(i+l-1))` replaced by `-q^i`.
pub fn pi_with_gaps(spec: &GapSpec, placement: &GapPlacement) -> Result<Polynomial> {
    placement.validate(spec)?;
    let mut out = Polynomial::one();
    let mut x = spec.a;
    for (&i, &l) in placement.positions.iter().zip(&spec.lengths) {
        out = out * pi_product(x, i - 1) * Polynomial::monomial(-1, i);
        x = i + l;
    }
    Ok(out * pi_product(x, spec.b))
}

/// `ΣΠ(a,b)[l_1,...,l_u]`: the sum of [`pi_with_gaps`] over every placement,
/// zero when none exists.
///
/// Evaluated right to left over positions: `tail[x][g]` is the sum over ways
/// to fill `x..=b` with gaps `g..u`.
pub fn sigma_pi(spec: &GapSpec) -> Polynomial {
    let u = spec.lengths.len();
    if u == 0 {
        return pi_product(spec.a, spec.b);
    }
    if !spec.is_placeable() {
        return Polynomial::zero();
    }
    let (a, b) = (spec.a, spec.b);
    let width = b + 2 - a;
    // tail[x - a][g]
    let mut tail = vec![vec![Polynomial::zero(); u + 1]; width];
    tail[width - 1][u] = Polynomial::one();
    for x in (a..=b).rev() {
        for g in 0..=u {
            let mut acc = Polynomial::one_minus_q_pow(x) * &tail[x + 1 - a][g];
            if g < u && x + spec.lengths[g] <= b + 1 {
                acc -= tail[x + spec.lengths[g] - a][g + 1].shift(x);
            }
            tail[x - a][g] = acc;
        }
    }
    std::mem::take(&mut tail[0][0])
}

/// The single monomial a saturated spec evaluates to:
/// `(-1)^u q^(u a + (u-1) l_1 + ... + l_(u-1))`.
pub fn saturated_monomial(spec: &GapSpec) -> Polynomial {
    let u = spec.lengths.len();
    let exponent = u * spec.a
        + spec.lengths[..u.saturating_sub(1)]
            .iter()
            .enumerate()
            .map(|(t, l)| (u - 1 - t) * l)
            .sum::<usize>();
    let sign = if u.is_multiple_of(2) { 1 } else { -1 };
    Polynomial::monomial(sign, exponent)
}

/// Every saturated spec with `b <= max_b` and `1 <= u <= max_u` gaps.
pub fn saturated_specs(max_b: usize, max_u: usize) -> Vec<GapSpec> {
    let mut out = Vec::new();
    for b in 1..=max_b {
        for a in 1..=b {
            for u in 1..=max_u {
                for d in compositions(b - a + 1, u) {
                    if d.iter().all(|&l| l >= 2) {
                        out.push(GapSpec::new(a, b, d).expect("lengths are at least 2"));
                    }
                }
            }
        }
    }
    out
}

/// Compositions of `total` into exactly `parts` positive parts.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, parts: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for d in 1..=left.saturating_sub(parts - 1) {
            acc.push(d);
            go(left - d, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// The building block `b(j,k,t)`, `1 <= t <= k <= j-1`:
/// `Π(k+2, j)` for `t = k`, otherwise the sum of `ΣΠ(t+2, j)[d_1+1, ..., d_u+1]`
/// over compositions `d` of `k - t` into `u <= min(j-k-1, k-t)` parts.
pub fn b_small(j: usize, k: usize, t: usize) -> Result<Polynomial> {
    check_range("k", k, 1, j.saturating_sub(1))?;
    check_range("t", t, 1, k)?;
    if t == k {
        return Ok(pi_product(k + 2, j));
    }
    let mut out = Polynomial::zero();
    for u in 1..=(j - k - 1).min(k - t) {
        for d in compositions(k - t, u) {
            let spec = GapSpec::new(t + 2, j, d.iter().map(|x| x + 1).collect())?;
            out += sigma_pi(&spec);
        }
    }
    Ok(out)
}

/// Closed form of `b_j^k`: `sum_{t=1}^{k} (1 - psi(t)) b(j,k,t)`, and 1 on the
/// diagonal.
pub fn b_closed(j: usize, k: usize) -> Result<Polynomial> {
    check_range("k", k, 1, j)?;
    if k == j {
        return Ok(Polynomial::one());
    }
    let mut out = Polynomial::zero();
    for t in 1..=k {
        out += (Polynomial::one() - Polynomial::psi(t)) * b_small(j, k, t)?;
    }
    Ok(out)
}

/// A coefficient table filled entirely from [`b_closed`], with no recurrence.
pub fn closed_coeff_table(max: usize) -> CoeffTable {
    CoeffTable::from_entries(max, |j, k| {
        b_closed(j, k).expect("indices are in range by construction")
    })
}

/// `a_n` from
/// `q^(n+2) a_n = psi(n+1) + sum_{i=1}^{n} psi(i) * chain_sum(n+1, i)`,
/// with chains over the table entries. Needs rows up to `n + 1`.
pub fn poincare_chain_formula(n: usize, table: &CoeffTable) -> Result<Polynomial> {
    table.require(n + 1)?;
    let entry = |a: usize, b: usize| table.b(a, b).clone();
    let mut total = Polynomial::psi(n + 1);
    for i in 1..=n {
        total += Polynomial::psi(i) * chain_sum(&entry, n + 1, i);
    }
    total.exact_div(&Polynomial::q_pow(n + 2))
}

/// `a_n = -chain_sum(n+3, 1) / (q^(n+2) (1 - q^2))`. Needs rows up to `n + 3`.
pub fn poincare_shortcut_formula(n: usize, table: &CoeffTable) -> Result<Polynomial> {
    table.require(n + 3)?;
    let entry = |a: usize, b: usize| table.b(a, b).clone();
    let chains = chain_sum(&entry, n + 3, 1);
    let divisor = Polynomial::one_minus_q_pow(2).shift(n + 2);
    (-chains).exact_div(&divisor)
}
